#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core import ops
from pyPose6D.losses.rot_loss import rot_loss


def pose_loss(gt,pred_R,pred_t,model,symmetric=False):
    r'''Rotation plus translation loss of one pose

    **Mathematical Definition**

    .. math::

        \mathcal{L}_{pose} = \mathcal{L}_{R}(R, \hat{R}) + \|t - \hat{t}\|_1

    Arguments
    ---------
    gt: Pose
        Groundtruth pose.

    pred_R: Tensor or np.ndarray, (3,3)

    pred_t: Tensor or np.ndarray, (3,)
        Predicted translation in meters.

    model: np.ndarray, (n,3)

    symmetric: bool
        Selects the symmetric form of :func:`rot_loss`.
    '''
    pred_t = ops.as_tensor(pred_t)
    t_gt = np.asarray(gt.t,dtype=np.float64).astype(pred_t.dtype)
    return rot_loss(gt.R,pred_R,model,symmetric) + ops.l1(pred_t-t_gt)
