#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.matching.matching_cost import matching_cost
from pyPose6D.matching.hungarian import hungarian
from pyPose6D.matching.Assignment import Assignment


def cost_matrix(preds,targets,l1_weight=5.0,giou_weight=2.0):
    '''(n_pred, n_target) matrix of :func:`matching_cost` values'''
    costs = np.empty((len(preds),len(targets)))
    for i,p in enumerate(preds):
        for j,t in enumerate(targets):
            costs[i,j] = matching_cost(p,t,l1_weight,giou_weight)
    return costs


def match_sets(preds,targets,l1_weight=5.0,giou_weight=2.0):
    r'''Optimal bipartite matching of a predicted set to its targets

    **Description**

        ∅ targets are dropped, a cost matrix is built over the remaining
        targets with :func:`matching_cost` and solved with
        :func:`hungarian`. Target indices in the returned assignment refer
        to positions in `targets`; unmatched predictions are ∅.

    Arguments
    ---------
    preds: list of PredictionTuple
        The N predictions of one image.

    targets: list of TargetTuple
        Groundtruth for the same image, possibly containing ∅ padding.

    Returns
    -------
    assignment: Assignment

    Raises
    ------
    *InvalidArgument* if there are more non-∅ targets than predictions.
    '''
    real = [i for i,t in enumerate(targets) if not t.is_null]
    if not real:
        return Assignment([],[],len(preds),0.0)
    costs = cost_matrix(preds,[targets[i] for i in real],l1_weight,giou_weight)
    solved = hungarian(costs)
    return Assignment(np.asarray(real)[solved.target_indices],solved.pred_indices,len(preds),solved.total_cost)
