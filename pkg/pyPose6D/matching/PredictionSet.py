#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Representation import Representation
from pyPose6D.core.ops import as_tensor
from pyPose6D.core.Errors import ShapeMismatch
from pyPose6D.geometry.rotation import rot6d_to_matrix
from pyPose6D.matching.PredictionTuple import PredictionTuple


class PredictionSet(object):
    r'''The N predictions of one image, as differentiable tensors

    **Description**

        Prediction heads emit one row per object query. Keeping the rows
        together as tensors lets the loss gather matched rows with a single
        indexing operation; :meth:`tuples` detaches the values into
        :class:`PredictionTuple` objects for matching.

    Arguments
    ---------
    logits: Tensor, (N, C+1)

    boxes: Tensor, (N, 4)
        cxcywh in (0,1)

    translation: Tensor, (N, 3)
        (u_norm, v_norm, tz) per query

    keypoints: Tensor, (N, 2K)
        Interleaved normalized (u,v) per keypoint

    rot6d: Tensor, (N, 6), *optional*
        Rotation codes (present when the model carries a rotation estimator)

    representation: Representation
        Layout of the predicted keypoints
    '''
    def __init__(self,logits,boxes,translation,keypoints,rot6d=None,representation=Representation.IBB32):
        self.logits = as_tensor(logits)
        self.boxes = as_tensor(boxes)
        self.translation = as_tensor(translation)
        self.keypoints = as_tensor(keypoints)
        self.rot6d = None if rot6d is None else as_tensor(rot6d)
        self.representation = representation

        n = self.logits.shape[0]
        for name in ('boxes','translation','keypoints'):
            if getattr(self,name).shape[0] != n:
                raise ShapeMismatch('PredictionSet field {} has {} rows, logits have {}'.format(
                    name,getattr(self,name).shape[0],n))
        if self.keypoints.shape[1] != 2*representation.count:
            raise ShapeMismatch('{} keypoints need {} values per query, got {}'.format(
                representation.name,2*representation.count,self.keypoints.shape[1]))

    def __repr__(self):
        return '<PredictionSet N:{} classes:{} {}>'.format(len(self),self.num_classes,self.representation.name)

    def __len__(self):
        return self.logits.shape[0]

    @property
    def num_classes(self):
        return self.logits.shape[1]-1

    def tuples(self):
        '''Detached list of PredictionTuple, one per query'''
        out = []
        for i in range(len(self)):
            out.append(PredictionTuple(self.logits.data[i],
                                       self.boxes.data[i],
                                       self.translation.data[i],
                                       self.keypoints.data[i].reshape(-1,2)))
        return out

    def rotations(self):
        '''Detached (N,3,3) rotations from the rotation codes, or None'''
        if self.rot6d is None:
            return None
        return np.stack([rot6d_to_matrix(r) for r in self.rot6d.data])
