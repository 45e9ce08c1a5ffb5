#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import InvalidArgument
from pyPose6D.matching.box_ops import box_giou


def matching_cost(pred,target,l1_weight=5.0,giou_weight=2.0):
    r'''Pairwise matching cost between a prediction and a non-∅ target

    **Mathematical Definition**

    .. math::

        \mathcal{L}_{match} = -\hat{p}(c) + \lambda_{L1} \|\hat{b} - b\|_1
                              + \lambda_{giou} (1 - GIoU(\hat{b}, b))

    **Variable Definitions**

        - :math:`\hat{p}(c)`
            Softmax probability (not log-probability) the prediction gives
            to the target class :math:`c`

        - :math:`\hat{b}, b`
            Predicted and groundtruth boxes (cxcywh, normalized)

        - :math:`\lambda_{L1}, \lambda_{giou}`
            Box weights, 5 and 2 by default (the box-loss weights)

    **Description**

        Only class and box enter the cost. Keypoints and translation of the
        prediction are ignored here; they are supervised after matching.

    Raises
    ------
    *InvalidArgument* if the target is ∅.
    '''
    if target.is_null:
        raise InvalidArgument('matching_cost is undefined for the ∅ target')
    p = pred.probabilities()[target.class_id]
    l1 = np.sum(np.abs(pred.box-target.box))
    giou = box_giou(pred.box,target.box)
    return float(-p + l1_weight*l1 + giou_weight*(1.0-giou))
