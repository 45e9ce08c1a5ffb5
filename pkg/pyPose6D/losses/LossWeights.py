#!python
from __future__ import division,print_function

from pyPose6D.core.Errors import InvalidArgument


class LossWeights(object):
    r'''Weights of the set-prediction loss terms

    **Variable Definitions**

        - `gamma`
            Keypoint L1 weight (default 10)

        - `delta`
            Cross-ratio weight (default 1); only IBB32 keypoints have a
            cross-ratio term

        - `class_null_weight`
            Weight of ∅ targets in the class loss (default 0.4)

        - `box_l1`, `box_giou`
            Box L1 and GIoU weights (defaults 5 and 2); the matching cost
            uses the same values

        - `pose_weight`
            Scale applied to the whole pose term, rotation and translation
            together (default 0.02)
    '''
    def __init__(self,gamma=10.0,delta=1.0,class_null_weight=0.4,box_l1=5.0,box_giou=2.0,pose_weight=0.02):
        self.gamma = float(gamma)
        self.delta = float(delta)
        self.class_null_weight = float(class_null_weight)
        self.box_l1 = float(box_l1)
        self.box_giou = float(box_giou)
        self.pose_weight = float(pose_weight)
        for k,v in self.to_dict().items():
            if v < 0:
                raise InvalidArgument('Loss weight {} must be >= 0, got {}'.format(k,v))

    def __repr__(self):
        return '<LossWeights {}>'.format(' '.join('{}:{}'.format(k,v) for k,v in self.to_dict().items()))

    def to_dict(self):
        return {'gamma':self.gamma,'delta':self.delta,'class_null_weight':self.class_null_weight,
                'box_l1':self.box_l1,'box_giou':self.box_giou,'pose_weight':self.pose_weight}

    @classmethod
    def from_dict(cls,d):
        return cls(**d)

    def replace(self,**kw):
        d = self.to_dict()
        d.update(kw)
        return LossWeights(**d)
