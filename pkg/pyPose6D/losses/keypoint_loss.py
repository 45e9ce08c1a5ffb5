#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core import ops
from pyPose6D.core.Tensor import Tensor
from pyPose6D.core.Representation import Representation
from pyPose6D.core.Errors import ShapeMismatch
from pyPose6D.geometry.KeypointSet import KeypointSet2D
from pyPose6D.losses.cross_ratio_loss import cross_ratio_loss


def _unpack(kps):
    if isinstance(kps,KeypointSet2D):
        return kps.points,kps.representation
    return kps,None


def keypoint_terms(pred,gt,representation=None,strict=True):
    r'''Unweighted parts of the keypoint loss

    Returns
    -------
    l1: Tensor
        Sum of absolute coordinate errors divided by the number of points
        (averaged over leading dimensions of stacked sets).

    cross_ratio: Tensor
        :func:`cross_ratio_loss` of the prediction (0 unless IBB32).
    '''
    pred,pred_rep = _unpack(pred)
    gt,gt_rep = _unpack(gt)
    if pred_rep is not None and gt_rep is not None and pred_rep is not gt_rep:
        raise ShapeMismatch('Keypoint representations differ: {} vs {}'.format(pred_rep.name,gt_rep.name))
    representation = representation or pred_rep or gt_rep or Representation.IBB32

    pred = ops.as_tensor(pred)
    gt_values = gt.data if isinstance(gt,Tensor) else np.asarray(gt,dtype=np.float64)
    if pred.shape != gt_values.shape:
        raise ShapeMismatch('Keypoint shapes differ: {} vs {}'.format(pred.shape,gt_values.shape))
    if pred.shape[-1] != 2 or pred.shape[-2] != representation.count:
        raise ShapeMismatch('{} keypoints must have shape (...,{},2), got {}'.format(
            representation.name,representation.count,pred.shape))

    n_points = int(np.prod(pred.shape[:-1]))
    l1 = ops.l1(pred-gt)/float(n_points)
    cr = cross_ratio_loss(pred,representation=representation,strict=strict)
    return l1,cr


def keypoint_loss(pred,gt,w,representation=None,strict=True):
    r'''Keypoint regression loss

    **Mathematical Definition**

    .. math::

        \mathcal{L}_{kp} = \gamma \frac{1}{K}\|\hat{K} - K\|_1 + \delta \mathcal{L}_{cr}(\hat{K})

    **Description**

        The L1 term is divided by the number of points (not coordinates), so
        8- and 32-point layouts give comparable values. The cross-ratio term
        only exists for IBB32 predictions.

    Arguments
    ---------
    pred: KeypointSet2D or Tensor (...,K,2)

    gt: KeypointSet2D or array (...,K,2)

    w: LossWeights

    Raises
    ------
    *ShapeMismatch* if the layouts or shapes differ.
    '''
    l1,cr = keypoint_terms(pred,gt,representation,strict)
    return w.gamma*l1 + w.delta*cr
