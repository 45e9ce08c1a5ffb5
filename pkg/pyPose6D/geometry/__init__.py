#!python
r'''
Geometry shared by every other part of pyPose6D: rotations and their 6D
parameterization, rigid poses, pinhole projection, the keypoint layouts built
from an object's bounding cuboid, the cross-ratio used to supervise the
interpolated bounding box, farthest point sampling and translation codes.

All geometry is computed in 64-bit floating point. Points are rows of
:class:`numpy.ndarray` objects; lengths are in meters and image coordinates
in pixels unless a docstring states that they are normalized by the image
size.
'''
from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.Cuboid import Cuboid
from pyPose6D.geometry.KeypointSet import KeypointSet3D,KeypointSet2D,ibb_index_table,cuboid_edges
from pyPose6D.geometry.rotation import (rot6d_to_matrix,matrix_to_rot6d,gram_schmidt,geodesic_distance,
                                        project_to_rotation,random_rotation,rotation_about,check_rotation)
from pyPose6D.geometry.project import project
from pyPose6D.geometry.fps_sample import fps_sample
from pyPose6D.geometry.generate_ibb import generate_ibb,keypoints_for
from pyPose6D.geometry.cross_ratio import cross_ratio_sq,keypoint_cross_ratios,IBB_CROSS_RATIO_SQ
from pyPose6D.geometry.translation import TranslationCode,decode_translation,encode_translation,decode_components
from pyPose6D.geometry.model_diameter import model_diameter
