#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Representation import Representation
from pyPose6D.core.Errors import InvalidArgument
from pyPose6D.geometry.KeypointSet import KeypointSet3D,ibb_index_table
from pyPose6D.geometry.fps_sample import fps_sample


def generate_ibb(cuboid,representation=Representation.IBB32):
    r'''Interpolated bounding box keypoints of a cuboid

    **Description**

        The 32-point layout holds the 8 cuboid corners followed by two
        interior points on each of the 12 edges, placed at one third and two
        thirds of the way from the lower-index corner. Every edge then forms
        a collinear 4-tuple (corner, 1/3-point, 2/3-point, corner) whose
        cross-ratio is 4/3, a value that survives perspective projection.

        Corners follow :meth:`pyPose6D.Cuboid.corners`; edge points follow the
        edge enumeration of :func:`pyPose6D.geometry.ibb_index_table`.

    Arguments
    ---------
    cuboid: pyPose6D.Cuboid

    representation: Representation
        ``IBB32`` (default) or ``BB8``. With ``BB8`` only the corners are
        returned and the index table is empty.

    Returns
    -------
    keypoints: KeypointSet3D

    Example
    -------
    .. code-block:: python

        import pyPose6D

        kps = pyPose6D.generate_ibb(pyPose6D.Cuboid.unit())
        kps.points.shape     # (32,3)
        kps.index_table[0]   # [0,8,9,1]

    '''
    corners = cuboid.corners()
    if representation is Representation.BB8:
        return KeypointSet3D(corners,Representation.BB8)
    if representation is not Representation.IBB32:
        raise InvalidArgument('generate_ibb builds BB8 or IBB32 sets, not {}'.format(representation))

    table = ibb_index_table()
    points = [corners]
    for i,_,_,j in table:
        step = (corners[j]-corners[i])/3.0
        points.append(np.stack([corners[i]+step,corners[i]+2.0*step]))
    return KeypointSet3D(np.concatenate(points),Representation.IBB32,table)


def keypoints_for(representation,cuboid,cloud=None):
    r'''3D keypoints of any supported layout

    ``FPS8`` runs farthest point sampling over `cloud` (by default the
    cuboid's surface grid), seeded with the point farthest from the cloud
    centroid (lowest index on ties).
    '''
    if isinstance(representation,str):
        representation = Representation.from_string(representation)
    if representation is Representation.FPS8:
        if cloud is None:
            cloud = cuboid.surface_grid(per_edge=9)
        cloud = np.asarray(cloud,dtype=np.float64).reshape(-1,3)
        seed = int(np.argmax(np.linalg.norm(cloud-cloud.mean(axis=0),axis=1)))
        return KeypointSet3D(fps_sample(cloud,8,seed),Representation.FPS8)
    return generate_ibb(cuboid,representation)
