#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import BehindCamera
from pyPose6D.geometry.KeypointSet import KeypointSet3D,KeypointSet2D

#: minimum camera-frame depth (meters) accepted by the projection
MIN_DEPTH = 1e-6


def project(points,pose,cam):
    r'''Perspective projection of model points into the image

    **Mathematical Definition**

    .. math::

        [X,Y,Z]^T = R x + t \qquad u = f_x X/Z + c_x \qquad v = f_y Y/Z + c_y

    Arguments
    ---------
    points: KeypointSet3D or np.ndarray (n,3)
        Model-frame points in meters.

    pose: pyPose6D.Pose

    cam: pyPose6D.CameraIntrinsics

    Returns
    -------
    projected: KeypointSet2D or np.ndarray (n,2)
        Pixel coordinates, in the input order. Keypoint sets keep their
        representation tag and index table.

    Raises
    ------
    *BehindCamera* if any camera-frame depth is <= 1e-6 m.
    '''
    if isinstance(points,KeypointSet3D):
        pts = points.points
    else:
        pts = np.asarray(points,dtype=np.float64).reshape(-1,3)

    X = pose.transform(pts)
    bad = X[:,2] <= MIN_DEPTH
    if np.any(bad):
        raise BehindCamera('{} of {} points at depth <= {} m'.format(int(bad.sum()),len(X),MIN_DEPTH))
    uv = np.empty((X.shape[0],2))
    uv[:,0] = cam.fx*X[:,0]/X[:,2] + cam.cx
    uv[:,1] = cam.fy*X[:,1]/X[:,2] + cam.cy

    if isinstance(points,KeypointSet3D):
        return KeypointSet2D(uv,points.representation,points.index_table)
    return uv
