#!python
from __future__ import division,print_function
import os
import json
from collections import OrderedDict

from pyPose6D.io.atomic_write import atomic_write
from pyPose6D.util.UnitConverter import default_converter


def write_bop_scene(directory,annotations):
    r'''Write annotations as a BOP scene folder

    Inverse of :func:`load_bop_scene`: ``scene_gt.json`` receives rotations
    as 9 row-major values and translations in millimeters, and
    ``scene_camera.json`` receives ``cam_K`` together with the image size
    and ``depth_scale`` 1. Both files are replaced atomically.

    Arguments
    ---------
    directory: str
        Scene folder; created when missing.

    annotations: iterable of SceneAnnotation
    '''
    if not os.path.isdir(directory):
        os.makedirs(directory)
    uc = default_converter()
    scene_gt = OrderedDict()
    scene_cam = OrderedDict()
    for ann in sorted(annotations,key=lambda a: a.im_id):
        key = str(ann.im_id)
        scene_gt[key] = [OrderedDict([('cam_R_m2c',pose.R.ravel().tolist()),
                                      ('cam_t_m2c',uc.toMillimeters(pose.t).tolist()),
                                      ('obj_id',int(obj_id))])
                         for obj_id,pose in ann.objects]
        scene_cam[key] = OrderedDict([('cam_K',ann.cam.K.ravel().tolist()),
                                      ('depth_scale',1.0),
                                      ('width',ann.cam.width),
                                      ('height',ann.cam.height)])
    for name,content in (('scene_gt.json',scene_gt),('scene_camera.json',scene_cam)):
        with atomic_write(os.path.join(directory,name)) as f:
            json.dump(content,f,indent=2)
