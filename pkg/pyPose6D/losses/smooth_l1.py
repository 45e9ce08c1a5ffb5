#!python
from __future__ import division,print_function
from pyPose6D.core import ops


def smooth_l1(x,beta=1.0):
    r'''Elementwise smooth L1 (Huber) penalty

    **Mathematical Definition**

    .. math::

        s(x) = \begin{cases} \frac{x^2}{2\beta} & |x| < \beta \\ |x| - \frac{\beta}{2} & \text{otherwise} \end{cases}

    **Description**

        Written as :math:`q^2/(2\beta) + (|x| - q)` with
        :math:`q = \min(|x|, \beta)`, which equals the piecewise form and
        reuses the differentiable ``abs``/``minimum`` operations.
    '''
    a = ops.abs(ops.as_tensor(x))
    q = ops.minimum(a,beta)
    return (q*q)/(2.0*beta) + (a-q)
