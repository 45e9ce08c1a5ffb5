#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import EmptyInput,InvalidArgument


def auc(errors,max_threshold=0.1):
    r'''Area under the accuracy-threshold curve

    **Mathematical Definition**

    .. math::

        AUC = \frac{1}{\tau}\int_0^{\tau} \frac{|\{i : e_i < s\}|}{n}\,ds
            = \frac{1}{n}\sum_i \max\left(0, 1 - \frac{e_i}{\tau}\right)

    **Description**

        The accuracy curve is a sum of step functions, one per sample, and
        each step contributes the fraction of :math:`[0,\tau]` lying above
        its error. The closed form therefore equals the integral exactly,
        without a bin count. Non-finite errors (missing estimates) contribute
        zero.

    Arguments
    ---------
    errors: array-like
        Pose errors in meters.

    max_threshold: float
        Upper integration limit :math:`\tau` in meters (0.1 by default).

    Raises
    ------
    *EmptyInput* if `errors` is empty.
    '''
    errors = np.asarray(errors,dtype=np.float64).ravel()
    if errors.size == 0:
        raise EmptyInput('AUC of an empty error list')
    if not max_threshold > 0:
        raise InvalidArgument('AUC threshold must be positive, got {}'.format(max_threshold))
    errors = np.where(np.isfinite(errors),errors,np.inf)
    return float(np.mean(np.clip(1.0-errors/max_threshold,0.0,1.0)))
