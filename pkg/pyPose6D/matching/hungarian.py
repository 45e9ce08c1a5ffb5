#!python
from __future__ import division,print_function
import numpy as np
from scipy.optimize import linear_sum_assignment

from pyPose6D.core.Errors import InvalidArgument
from pyPose6D.matching.Assignment import Assignment


def hungarian(costs):
    r'''Minimum-cost injection of targets into predictions

    **Description**

        Solves the rectangular linear assignment problem for an
        ``n_pred x n_target`` cost matrix: every target gets a distinct
        prediction and the summed cost is minimal. Rectangular matrices are
        solved directly (no square padding) with the Kuhn-Munkres style
        solver of :func:`scipy.optimize.linear_sum_assignment`.

        Among equally cheap injections the lexicographically smallest one is
        returned: targets are visited in order and each keeps the lowest
        free prediction index that still completes to the optimal total.

    Arguments
    ---------
    costs: np.ndarray, (n_pred, n_target)
        Finite costs.

    Returns
    -------
    assignment: Assignment
        ``target_indices`` are ``0..n_target-1`` in order.

    Raises
    ------
    *InvalidArgument* if n_pred < n_target or any cost is not finite.

    Example
    -------
    .. code-block:: python

        import numpy as np
        import pyPose6D

        a = pyPose6D.hungarian(np.array([[1.,2.],[2.,4.]]))
        a.pairs()        # [(0,1),(1,0)]
        a.total_cost     # 4.0

    '''
    costs = np.asarray(costs,dtype=np.float64)
    if costs.ndim != 2:
        raise InvalidArgument('Cost matrix must be 2D, got shape {}'.format(costs.shape))
    n_pred,n_target = costs.shape
    if n_pred < n_target:
        raise InvalidArgument('Need at least as many predictions as targets ({} < {})'.format(n_pred,n_target))
    if not np.all(np.isfinite(costs)):
        raise InvalidArgument('Cost matrix has non-finite entries')
    if n_target == 0:
        return Assignment([],[],n_pred,0.0)

    _,pred_idx = linear_sum_assignment(costs.T)
    pred_idx = _lowest_index(costs,pred_idx)
    target_idx = np.arange(n_target)
    total = float(np.sum(costs[pred_idx,target_idx]))
    return Assignment(target_idx,pred_idx,n_pred,total)


def _solve(costs):
    '''Optimal prediction per target and the summed cost'''
    if costs.shape[1] == 0:
        return [],0.0
    target_idx,pred_idx = linear_sum_assignment(costs.T)
    return pred_idx.tolist(),float(np.sum(costs[pred_idx,target_idx]))


def _lowest_index(costs,pred_idx):
    '''Lexicographically smallest optimal injection, starting from one optimum'''
    n_pred,n_target = costs.shape
    chosen = list(pred_idx)
    total = float(np.sum(costs[chosen,np.arange(n_target)]))
    tol = 1e-9*max(1.0,abs(total))
    used = set()
    fixed = 0.0
    for j in range(n_target):
        for p in range(n_pred):
            if p in used:
                continue
            if p == chosen[j]:
                break
            free = [q for q in range(n_pred) if q not in used and q != p]
            rest,sub = _solve(costs[np.ix_(free,np.arange(j+1,n_target))])
            if fixed + costs[p,j] + sub <= total + tol:
                chosen[j] = p
                chosen[j+1:] = [free[k] for k in rest]
                break
        used.add(chosen[j])
        fixed += costs[chosen[j],j]
    return np.asarray(chosen,dtype=int)
