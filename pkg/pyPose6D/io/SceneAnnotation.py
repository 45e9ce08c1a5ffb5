#!python
from __future__ import division,print_function


class SceneAnnotation(object):
    r'''Groundtruth of one image

    **Variable Definitions**

        - `scene_id`, `im_id`
            BOP scene and image identifiers

        - `cam`
            :class:`pyPose6D.CameraIntrinsics` of the image

        - `objects`
            list of ``(obj_id, Pose)`` with translations in meters
    '''
    def __init__(self,scene_id,im_id,cam,objects=None):
        self.scene_id = int(scene_id)
        self.im_id = int(im_id)
        self.cam = cam
        self.objects = list(objects or [])

    def __repr__(self):
        return '<SceneAnnotation scene:{} im:{} objects:{}>'.format(self.scene_id,self.im_id,len(self.objects))

    def __len__(self):
        return len(self.objects)

    def obj_ids(self):
        return [o for o,_ in self.objects]
