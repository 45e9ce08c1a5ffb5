#!python
from __future__ import division,print_function
from collections import OrderedDict


class LossBreakdown(object):
    r'''Components of one evaluation of the set-prediction loss

    **Description**

        ``class_loss``, ``box_loss`` and ``keypoint_loss`` enter the total with
        unit weight (their internal weights are already applied), while
        ``pose_loss`` is stored unscaled and enters with ``pose_weight``.
        ``keypoint_l1`` and ``cross_ratio`` are the two unweighted parts of
        the keypoint term. All fields are scalar tensors; ``total`` is the
        one to differentiate.
    '''
    fields = ('class_loss','box_loss','keypoint_loss','pose_loss','keypoint_l1','cross_ratio','total')

    def __init__(self,class_loss,box_loss,keypoint_loss,pose_loss,pose_weight,keypoint_l1=None,cross_ratio=None):
        self.class_loss = class_loss
        self.box_loss = box_loss
        self.keypoint_loss = keypoint_loss
        self.pose_loss = pose_loss
        self.pose_weight = float(pose_weight)
        self.keypoint_l1 = keypoint_l1
        self.cross_ratio = cross_ratio
        self.total = class_loss + box_loss + keypoint_loss + self.pose_weight*pose_loss

    def __repr__(self):
        return '<LossBreakdown {}>'.format(' '.join('{}:{:.5g}'.format(k,v) for k,v in self.as_dict().items()))

    def weighted_sum(self):
        '''Total recomputed in 64-bit from the stored components'''
        d = self.as_dict()
        return d['class_loss'] + d['box_loss'] + d['keypoint_loss'] + self.pose_weight*d['pose_loss']

    def as_dict(self):
        out = OrderedDict()
        for name in self.fields:
            value = getattr(self,name)
            out[name] = float('nan') if value is None else float(getattr(value,'data',value))
        return out
