#!python
from __future__ import division,print_function
import os
import json
import warnings

import numpy as np

from pyPose6D.core.Errors import ParseError,ValidationError,InvalidArgument
from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.rotation import project_to_rotation
from pyPose6D.io.SceneAnnotation import SceneAnnotation
from pyPose6D.util.UnitConverter import default_converter

#: largest |R^T R - I| entry (and |det R - 1|) accepted on ingestion
ROTATION_TOLERANCE = 1e-4

#: deviations above this are reported when a rotation is projected onto SO(3)
PROJECTION_WARNING = 1e-6


def read_json(path):
    '''Load a JSON document, reporting syntax errors with file and line'''
    try:
        with open(path,'r') as f:
            return json.load(f)
    except ValueError as e:
        raise ParseError(getattr(e,'msg',str(e)),path=path,line=getattr(e,'lineno',None))


def scene_id_from_path(directory):
    name = os.path.basename(os.path.normpath(directory))
    return int(name) if name.isdigit() else 0


def _dataset_camera(directory):
    '''Image size from a dataset-level camera.json next to the split folder'''
    for up in ('..',os.path.join('..','..')):
        path = os.path.normpath(os.path.join(directory,up,'camera.json'))
        if os.path.isfile(path):
            info = read_json(path)
            return int(info.get('width',640)),int(info.get('height',480))
    return 640,480


def validated_rotation(values,path,im_id):
    r'''Check a 9-element row-major rotation block and project it onto SO(3)

    Raises
    ------
    *ValidationError* naming the image when the block is not a rotation
    within 1e-4.
    '''
    R = np.asarray(values,dtype=np.float64)
    if R.size != 9:
        raise ValidationError('{}: image {} has a rotation with {} entries'.format(path,im_id,R.size))
    R = R.reshape(3,3)
    ortho = np.max(np.abs(R.T.dot(R)-np.eye(3)))
    det = np.linalg.det(R)
    if not (ortho <= ROTATION_TOLERANCE and abs(det-1.0) <= ROTATION_TOLERANCE):
        raise ValidationError('{}: image {} has an invalid rotation (|RtR-I|={:.3g}, det={:.6f})'.format(
            path,im_id,ortho,det))
    projected = project_to_rotation(R)
    if np.max(np.abs(projected-R)) > PROJECTION_WARNING:
        warnings.warn('{}: rotation of image {} projected onto SO(3) (max change {:.3g})'.format(
            path,im_id,np.max(np.abs(projected-R))))
    return projected


def load_bop_scene(directory):
    r'''Iterate over the annotated images of one BOP scene folder

    **Description**

        Reads ``scene_gt.json`` (per image: ``obj_id``, 9-element row-major
        ``cam_R_m2c``, ``cam_t_m2c`` in millimeters) and
        ``scene_camera.json`` (per image: 9-element ``cam_K``). The image size
        comes from optional ``width``/``height`` entries of the camera record,
        else from a dataset-level ``camera.json``, else 640x480.

        Translations are converted to meters. Rotations are validated and
        projected back onto SO(3). Images are yielded in ascending id order.

    Arguments
    ---------
    directory: str
        Scene folder, e.g. ``ycbv/test/000048``. A numeric folder name is
        used as the scene id (0 otherwise).

    Yields
    ------
    annotation: SceneAnnotation

    Raises
    ------
    *ParseError* for missing files, JSON syntax errors and missing keys.

    *ValidationError* for invalid rotations or cameras, naming the image id.
    '''
    gt_path = os.path.join(directory,'scene_gt.json')
    cam_path = os.path.join(directory,'scene_camera.json')
    for path in (gt_path,cam_path):
        if not os.path.isfile(path):
            raise ParseError('file not found',path=path)
    scene_gt = read_json(gt_path)
    scene_cam = read_json(cam_path)
    scene_id = scene_id_from_path(directory)
    fallback_size = None
    uc = default_converter()

    for key in sorted(scene_gt,key=int):
        im_id = int(key)
        if key not in scene_cam:
            raise ParseError('no camera for image {}'.format(im_id),path=cam_path)
        cam_info = scene_cam[key]
        try:
            if 'width' in cam_info and 'height' in cam_info:
                size = int(cam_info['width']),int(cam_info['height'])
            else:
                if fallback_size is None:
                    fallback_size = _dataset_camera(directory)
                size = fallback_size
            cam = CameraIntrinsics.from_K(cam_info['cam_K'],*size)
        except KeyError as e:
            raise ParseError('image {} camera lacks {}'.format(im_id,e),path=cam_path)
        except InvalidArgument as e:
            raise ValidationError('{}: image {} has an invalid camera: {}'.format(cam_path,im_id,e))

        objects = []
        for entry in scene_gt[key]:
            try:
                obj_id = int(entry['obj_id'])
                R = validated_rotation(entry['cam_R_m2c'],gt_path,im_id)
                t = np.asarray(entry['cam_t_m2c'],dtype=np.float64).reshape(3)
            except KeyError as e:
                raise ParseError('image {} annotation lacks {}'.format(im_id,e),path=gt_path)
            except ValueError as e:
                if isinstance(e,ValidationError):
                    raise
                raise ParseError('image {}: {}'.format(im_id,e),path=gt_path)
            objects.append((obj_id,Pose(R,uc.toMeters(t))))
        yield SceneAnnotation(scene_id,im_id,cam,objects)
