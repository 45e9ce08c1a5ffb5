#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.geometry.rotation import check_rotation


class Pose(object):
    r'''Rigid transform of an object into the camera frame

    **Mathematical Definition**

    .. math::

        x_{cam} = R x_{model} + t

    **Variable Definitions**

        - :math:`R`
            3x3 rotation matrix (orthonormal, determinant +1)

        - :math:`t`
            translation in meters

    Example
    -------
    .. code-block:: python

        import numpy as np
        import pyPose6D

        pose = pyPose6D.Pose(np.eye(3),[0,0,1.0])
        pose.transform([[0.1,0,0]])   # [[0.1,0,1.0]]

    '''
    def __init__(self,rotation,translation,validate=True):
        self.rotation = np.array(rotation,dtype=np.float64).reshape(3,3)
        self.translation = np.array(translation,dtype=np.float64).reshape(3)
        if validate:
            check_rotation(self.rotation,tol=1e-6)

    def __repr__(self):
        return '<Pose t:{}>'.format(np.array2string(self.translation,precision=4))

    @classmethod
    def identity(cls,depth=0.0):
        return cls(np.eye(3),[0.0,0.0,depth])

    @property
    def R(self):
        return self.rotation

    @property
    def t(self):
        return self.translation

    def transform(self,points):
        '''Map model-frame points (n,3) into the camera frame'''
        points = np.asarray(points,dtype=np.float64).reshape(-1,3)
        return points.dot(self.rotation.T) + self.translation

    def inverse(self):
        return Pose(self.rotation.T,-self.rotation.T.dot(self.translation),validate=False)

    def matrix(self):
        '''4x4 homogeneous matrix'''
        M = np.eye(4)
        M[:3,:3] = self.rotation
        M[:3,3] = self.translation
        return M

    def to_dict(self):
        return {'R':self.rotation.ravel().tolist(),'t':self.translation.tolist()}
