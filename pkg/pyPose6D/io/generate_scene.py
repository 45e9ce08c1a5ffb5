#!python
from __future__ import division,print_function
import warnings

import numpy as np

from pyPose6D.core.Representation import Representation
from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Errors import InvalidArgument
from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.geometry.Cuboid import Cuboid
from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.rotation import random_rotation
from pyPose6D.geometry.project import project
from pyPose6D.geometry.generate_ibb import keypoints_for
from pyPose6D.geometry.translation import TranslationCode,decode_translation,encode_translation
from pyPose6D.matching.TargetTuple import TargetTuple
from pyPose6D.matching.box_ops import points_box
from pyPose6D.io.SyntheticSample import SyntheticSample
from pyPose6D.io.render_silhouettes import render_silhouettes,class_color

#: depth range of object centers in meters
DEPTH_RANGE = (0.5,2.0)

#: placement attempts per object before it is dropped
MAX_TRIES = 100

#: points per cuboid edge of the model cloud used by the losses
MODEL_GRID = 6


def toy_camera(width=64,height=64):
    '''Low-resolution camera with the field of view of the default one (square pixels)'''
    base = CameraIntrinsics.default()
    scale = width/float(base.width)
    return CameraIntrinsics(base.fx*scale,base.fy*scale,width/2.0,height/2.0,width,height)


def class_cuboid(class_id):
    '''Fixed per-class cuboid centred at the origin (half-extents 3 to 8 cm)'''
    c = int(class_id)
    half = [0.04+0.01*(c % 4),0.03+0.01*((c//4) % 3),0.05+0.01*((c//2) % 4)]
    return Cuboid([0.0,0.0,0.0],half)


def class_model(class_id):
    '''Model cloud of a synthetic class: a regular grid over the cuboid faces'''
    return class_cuboid(class_id).surface_grid(per_edge=MODEL_GRID)


def make_target(class_id,pose,cam,representation=Representation.IBB32):
    r'''Set-prediction target of a synthetic object

    The box is the tight hull of the eight projected corners and the
    keypoints are normalized by the image size.
    '''
    cuboid = class_cuboid(class_id)
    corners = project(cuboid.corners(),pose,cam)/np.array([cam.width,cam.height],dtype=np.float64)
    kps = project(keypoints_for(representation,cuboid),pose,cam).normalized(cam)
    return TargetTuple(class_id,points_box(corners),encode_translation(pose.t,cam),kps,
                       pose=pose,model_points=class_model(class_id))


def _inside(uv,cam):
    return np.all(uv[:,0] >= 0) and np.all(uv[:,0] <= cam.width) and \
           np.all(uv[:,1] >= 0) and np.all(uv[:,1] <= cam.height)


def generate_scene(seed,num_classes,max_objects,cam=None,num_queries=None,
                   representation=Representation.IBB32):
    r'''Generate one synthetic image with its targets

    **Description**

        Draws 0 to `max_objects` objects from the ``'scene'`` stream of
        `seed`. Each object gets a uniformly random class, a uniform random
        rotation, a depth in [0.5, 2] m and an image-center position chosen
        uniformly inside the frame. A placement is kept only when all eight
        projected corners lie inside the image; after 100 failed attempts
        the object is dropped with a warning.

        The raster holds the filled silhouettes of all objects in their
        class colors, painted far to near.

    Arguments
    ---------
    seed: int

    num_classes: int
        Number of object classes C (class ids 0..C-1).

    max_objects: int
        Upper bound on the object count; at most `num_queries` when given.

    cam: CameraIntrinsics, *optional*
        Defaults to :meth:`CameraIntrinsics.default`.

    representation: Representation
        Keypoint layout of the targets.

    Returns
    -------
    sample: SyntheticSample

    Raises
    ------
    *InvalidArgument* for a non-positive class count, a negative object
    count or more objects than queries.
    '''
    if cam is None:
        cam = CameraIntrinsics.default()
    if num_classes < 1:
        raise InvalidArgument('Need at least one class, got {}'.format(num_classes))
    if max_objects < 0:
        raise InvalidArgument('max_objects must be >= 0, got {}'.format(max_objects))
    if num_queries is not None and max_objects > num_queries:
        raise InvalidArgument('max_objects ({}) exceeds the number of queries ({})'.format(max_objects,num_queries))

    rng = RandomStreams(seed).stream('scene')
    count = int(rng.integers(0,max_objects+1))
    targets = []
    silhouettes = []
    for _ in range(count):
        class_id = int(rng.integers(0,num_classes))
        corners = class_cuboid(class_id).corners()
        for _ in range(MAX_TRIES):
            R = random_rotation(rng)
            z = rng.uniform(*DEPTH_RANGE)
            code = TranslationCode(rng.uniform(0.0,1.0),rng.uniform(0.0,1.0),z)
            pose = Pose(R,decode_translation(code,cam))
            uv = project(corners,pose,cam)
            if _inside(uv,cam):
                targets.append(make_target(class_id,pose,cam,representation))
                silhouettes.append((uv,pose.t[2],class_color(class_id)))
                break
    if len(targets) < count:
        warnings.warn('Placed {} of {} objects in scene {}'.format(len(targets),count,seed))
    raster = render_silhouettes(cam,silhouettes)
    return SyntheticSample(raster,targets,cam,seed)
