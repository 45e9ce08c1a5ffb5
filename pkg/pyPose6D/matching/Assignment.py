#!python
from __future__ import division,print_function
import numpy as np


class Assignment(object):
    r'''Matching between groundtruth targets and predictions

    **Description**

        ``target_indices[k]`` is matched to ``pred_indices[k]``. Target
        indices are positions in the list handed to
        :func:`pyPose6D.match_sets` (∅ targets never appear); every
        prediction that is not matched is implicitly assigned ∅.

    '''
    def __init__(self,target_indices,pred_indices,n_pred,total_cost=0.0):
        self.target_indices = np.asarray(target_indices,dtype=int).ravel()
        self.pred_indices = np.asarray(pred_indices,dtype=int).ravel()
        assert len(self.target_indices) == len(self.pred_indices),'Assignment index arrays differ in length'
        assert len(set(self.pred_indices.tolist())) == len(self.pred_indices),'Assignment is not injective'
        self.n_pred = int(n_pred)
        self.total_cost = float(total_cost)

    def __repr__(self):
        return '<Assignment matched:{} n_pred:{} cost:{:.6g}>'.format(len(self),self.n_pred,self.total_cost)

    def __len__(self):
        return len(self.target_indices)

    def pairs(self):
        '''List of (target index, prediction index)'''
        return list(zip(self.target_indices.tolist(),self.pred_indices.tolist()))

    def target_to_pred(self):
        return dict(self.pairs())

    @property
    def unmatched(self):
        '''Prediction indices assigned ∅, ascending'''
        matched = set(self.pred_indices.tolist())
        return [i for i in range(self.n_pred) if i not in matched]
