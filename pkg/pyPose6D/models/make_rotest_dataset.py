#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Representation import Representation
from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Errors import InvalidArgument
from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.rotation import random_rotation
from pyPose6D.geometry.project import project
from pyPose6D.geometry.generate_ibb import keypoints_for
from pyPose6D.geometry.translation import TranslationCode,decode_translation
from pyPose6D.io.generate_scene import class_cuboid

#: object-center depth range of the rotation training pairs (meters)
DEPTH_RANGE = (1.0,2.0)

#: range of the normalized image position of the object center
CENTER_RANGE = (0.25,0.75)


def make_rotest_dataset(n,seed,representation=Representation.IBB32,noise_px=1.0,cuboid=None,cam=None):
    r'''Keypoint to rotation training pairs

    **Description**

        Every pair places `cuboid` with a uniformly random rotation at a
        random depth in [1, 2] m, with its center projecting into the middle
        half of the image. The keypoints of `representation` are projected,
        perturbed with isotropic Gaussian pixel noise of standard deviation
        `noise_px` and normalized by the image size. All draws come from the
        ``'rotest'`` stream of `seed`.

    Arguments
    ---------
    n: int
        Number of pairs.

    seed: int

    representation: Representation

    noise_px: float
        Noise standard deviation in pixels (0 for exact keypoints).

    cuboid: Cuboid, *optional*
        Defaults to the cuboid of synthetic class 0.

    cam: CameraIntrinsics, *optional*
        Defaults to :meth:`CameraIntrinsics.default`.

    Returns
    -------
    keypoints: np.ndarray, (n, 2K)
        Normalized ``(u0,v0,u1,v1,...)`` rows

    rotations: np.ndarray, (n, 3, 3)

    translations: np.ndarray, (n, 3)
    '''
    if n < 0 or noise_px < 0:
        raise InvalidArgument('Need n >= 0 and noise_px >= 0, got {} and {}'.format(n,noise_px))
    if isinstance(representation,str):
        representation = Representation.from_string(representation)
    cuboid = cuboid or class_cuboid(0)
    cam = cam or CameraIntrinsics.default()
    model_kps = keypoints_for(representation,cuboid)
    rng = RandomStreams(seed).stream('rotest')
    size = np.array([cam.width,cam.height],dtype=np.float64)

    keypoints = np.empty((n,2*representation.count))
    rotations = np.empty((n,3,3))
    translations = np.empty((n,3))
    for i in range(n):
        R = random_rotation(rng)
        code = TranslationCode(rng.uniform(*CENTER_RANGE),rng.uniform(*CENTER_RANGE),rng.uniform(*DEPTH_RANGE))
        pose = Pose(R,decode_translation(code,cam))
        uv = project(model_kps,pose,cam).points
        uv = uv + rng.normal(0.0,noise_px,uv.shape) if noise_px > 0 else uv
        keypoints[i] = (uv/size).ravel()
        rotations[i] = R
        translations[i] = pose.t
    return keypoints,rotations,translations
