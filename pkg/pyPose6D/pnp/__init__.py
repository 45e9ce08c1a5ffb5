r'''
Perspective-n-Point solvers recovering a :class:`pyPose6D.Pose` from 2D-3D
correspondences: closed-form EPnP and a seeded RANSAC wrapper around it.
'''
from pyPose6D.pnp.Correspondences import Correspondences
from pyPose6D.pnp.RansacConfig import RansacConfig
from pyPose6D.pnp.epnp import epnp,reprojection_errors,align_rigid
from pyPose6D.pnp.ransac_pnp import ransac_pnp
