#!python
from __future__ import division,print_function

from pyPose6D.core.Errors import InvalidArgument


class EvalRecord(object):
    r'''One pose estimate, optionally paired with its groundtruth

    **Variable Definitions**

        - `scene_id`, `im_id`, `obj_id`
            BOP identifiers of the image and object class

        - `pose`
            Estimated :class:`pyPose6D.Pose`, or None when a groundtruth
            instance received no estimate (scored as an infinite error)

        - `score`
            Confidence in [0,1]

        - `pose_gt`
            Groundtruth pose; required by :func:`pyPose6D.evaluate`

        - `model`
            Model cloud (n,3) in meters; when None the model is looked up
            per class at evaluation time

        - `diameter`
            Object diameter in meters (> 0), or None for a per-class lookup

        - `time`
            Estimation time in seconds; -1 when unknown
    '''
    def __init__(self,scene_id,im_id,obj_id,pose,score=1.0,pose_gt=None,model=None,diameter=None,time=-1.0):
        self.scene_id = int(scene_id)
        self.im_id = int(im_id)
        self.obj_id = int(obj_id)
        self.pose = pose
        self.score = float(score)
        self.pose_gt = pose_gt
        self.model = model
        self.diameter = None if diameter is None else float(diameter)
        self.time = float(time)
        if not (0.0 <= self.score <= 1.0):
            raise InvalidArgument('Record score must be in [0,1], got {}'.format(self.score))
        if self.diameter is not None and not self.diameter > 0:
            raise InvalidArgument('Object diameter must be positive, got {}'.format(self.diameter))

    def __repr__(self):
        return '<EvalRecord scene:{} im:{} obj:{} score:{:.3f}{}>'.format(
            self.scene_id,self.im_id,self.obj_id,self.score,'' if self.pose is not None else ' missing')

    @property
    def key(self):
        return (self.scene_id,self.im_id,self.obj_id)
