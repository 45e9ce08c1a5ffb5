#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core import ops
from pyPose6D.core.Tensor import Tensor
from pyPose6D.core.Errors import ShapeMismatch


def class_nll(logits,matched_classes,null_weight=0.4):
    r'''Weighted negative log-likelihood of the matched classes

    **Mathematical Definition**

    .. math::

        \mathcal{L}_{cls} = \frac{\sum_i w_i \left(-\log \mathrm{softmax}(z_i)_{c_i}\right)}{\sum_i w_i}
        \qquad w_i = \begin{cases} w_\varnothing & c_i = \varnothing \\ 1 & \text{otherwise} \end{cases}

    **Description**

        Every prediction contributes: matched predictions are pulled towards
        their target class, unmatched ones towards ∅ (the last logit). The
        log-softmax is computed with max subtraction.

    Arguments
    ---------
    logits: Tensor, (N, C+1)

    matched_classes: list, length N
        Target class per prediction; ``None`` (or ``C``) means ∅.

    null_weight: float
        Weight of ∅ entries (0.4 by default).

    Returns
    -------
    loss: Tensor, scalar
    '''
    logits = ops.as_tensor(logits)
    if logits.ndim == 1:
        logits = ops.reshape(logits,(1,-1))
    n,c1 = logits.shape
    null = c1-1
    classes = np.array([null if c is None else int(c) for c in matched_classes],dtype=int)
    if classes.shape[0] != n:
        raise ShapeMismatch('{} matched classes for {} predictions'.format(classes.shape[0],n))
    w = np.where(classes == null,null_weight,1.0)
    if w.sum() == 0:
        return Tensor(0.0,dtype=logits.dtype)
    logp = ops.log_softmax(logits,axis=-1)
    picked = logp[np.arange(n),classes]
    return -ops.sum(picked*w.astype(logits.dtype))/float(w.sum())
