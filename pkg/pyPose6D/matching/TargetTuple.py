#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import InvalidArgument


class TargetTuple(object):
    r'''One groundtruth element of a set-prediction target

    **Description**

        A target describes one object in an image: its class, its 2D box
        (center-x, center-y, width, height, normalized by image size), its
        :class:`pyPose6D.geometry.TranslationCode`, its keypoints (a
        :class:`pyPose6D.KeypointSet2D` normalized by image size), its pose
        and a reference to the subsampled model cloud used by the pose loss.

        The "no object" target (written ∅) carries no geometry. It is built
        with :meth:`TargetTuple.null` and has ``class_id = None``; losses map
        it onto the reserved class index ``C`` (the last logit).

    '''
    def __init__(self,class_id,box,translation,keypoints,pose=None,model_points=None):
        self.class_id = int(class_id)
        self.box = np.array(box,dtype=np.float64).reshape(4)
        if self.box[2] <= 0 or self.box[3] <= 0:
            raise InvalidArgument('Target box width and height must be positive, got {}'.format(self.box))
        self.translation = translation
        self.keypoints = keypoints
        self.pose = pose
        self.model_points = model_points

    @classmethod
    def null(cls):
        '''The ∅ target'''
        t = cls.__new__(cls)
        t.class_id = None
        t.box = None
        t.translation = None
        t.keypoints = None
        t.pose = None
        t.model_points = None
        return t

    @property
    def is_null(self):
        return self.class_id is None

    def __repr__(self):
        if self.is_null:
            return '<TargetTuple ∅>'
        return '<TargetTuple class:{} box:{}>'.format(self.class_id,np.array2string(self.box,precision=3))
