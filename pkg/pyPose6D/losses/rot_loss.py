#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core import ops
from pyPose6D.core.Errors import EmptyInput


def _swap_last(t):
    axes = list(range(t.ndim))
    axes[-1],axes[-2] = axes[-2],axes[-1]
    return ops.transpose(t,tuple(axes))


def rot_loss(R_gt,R_pred,model,symmetric=False):
    r'''Model-point rotation loss

    **Mathematical Definition**

    Non-symmetric objects:

    .. math::

        \mathcal{L}_{R} = \frac{1}{n}\sum_{x \in \mathcal{M}} \| R x - \hat{R} x \|_1

    Symmetric objects:

    .. math::

        \mathcal{L}_{R} = \frac{1}{n}\sum_{x_1 \in \mathcal{M}} \min_{x_2 \in \mathcal{M}} \| R x_1 - \hat{R} x_2 \|_1

    **Description**

        The symmetric form does not penalize rotations that map the model onto
        itself. The minimum is an exhaustive pairwise search, so memory grows
        with the square of the point count.

    Arguments
    ---------
    R_gt: np.ndarray, (...,3,3)
        Groundtruth rotation(s); treated as constant.

    R_pred: Tensor or np.ndarray, (...,3,3)
        Predicted rotation(s). Gradients flow into this argument only.

    model: np.ndarray, (n,3)
        Model points in the object frame.

    symmetric: bool

    Returns
    -------
    loss: Tensor, scalar
        Averaged over points and over any leading batch dimension.

    Raises
    ------
    *EmptyInput* if the model has no points.
    '''
    model = np.asarray(model,dtype=np.float64).reshape(-1,3)
    if model.shape[0] == 0:
        raise EmptyInput('rot_loss needs at least one model point')
    R_gt = np.asarray(getattr(R_gt,'data',R_gt),dtype=np.float64)
    R_pred = ops.as_tensor(R_pred)

    gt_points = np.matmul(model,np.swapaxes(R_gt,-1,-2))
    pred_points = ops.matmul(ops.as_tensor(model),_swap_last(R_pred))
    gt_points = gt_points.astype(pred_points.dtype)

    if not symmetric:
        return ops.mean(ops.l1(pred_points-gt_points,axis=-1))

    n = model.shape[0]
    lead = pred_points.shape[:-2]
    pred_rows = ops.reshape(pred_points,lead+(1,n,3))
    gt_cols = np.expand_dims(gt_points,-2)
    distances = ops.l1(pred_rows-gt_cols,axis=-1)
    return ops.mean(ops.min(distances,axis=-1))
