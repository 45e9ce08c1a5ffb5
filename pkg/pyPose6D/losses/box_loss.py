#!python
from __future__ import division,print_function
from pyPose6D.core import ops
from pyPose6D.losses.giou import giou


def box_loss(pred_box,gt_box,l1_weight=5.0,giou_weight=2.0):
    r'''Box regression loss

    **Mathematical Definition**

    .. math::

        \mathcal{L}_{box} = \lambda_{L1}\|\hat{b} - b\|_1 + \lambda_{giou}\left(1 - GIoU(\hat{b}, b)\right)

    For stacked boxes ``(M,4)`` the loss is averaged over the M pairs.
    '''
    pred_box = ops.as_tensor(pred_box)
    gt_box = ops.as_tensor(gt_box)
    l1 = ops.l1(pred_box-gt_box,axis=-1)
    per_pair = l1_weight*l1 + giou_weight*(1.0-giou(pred_box,gt_box))
    if per_pair.ndim == 0:
        return per_pair
    return ops.mean(per_pair)
