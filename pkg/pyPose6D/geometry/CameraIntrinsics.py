#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import InvalidArgument


class CameraIntrinsics(object):
    r'''Pinhole camera intrinsics

    **Mathematical Definition**

    .. math::

        K = \begin{bmatrix} f_x & 0 & c_x \\ 0 & f_y & c_y \\ 0 & 0 & 1 \end{bmatrix}

    **Variable Definitions**

        - :math:`f_x, f_y`
            Focal lengths in pixels

        - :math:`c_x, c_y`
            Principal point in pixels

        - `width`, `height`
            Image size in pixels

    **Description**

        Lens distortion is not modelled. Keypoint and box coordinates are
        normalized by `width` and `height`, so the image size is part of the
        camera description.

    Example
    -------
    .. code-block:: python

        import pyPose6D

        cam = pyPose6D.CameraIntrinsics(fx=500,fy=500,cx=320,cy=240,width=640,height=480)
        cam.K

    '''
    def __init__(self,fx,fy,cx,cy,width,height):
        if fx <= 0 or fy <= 0:
            raise InvalidArgument('Focal lengths must be positive, got fx={} fy={}'.format(fx,fy))
        if width <= 0 or height <= 0:
            raise InvalidArgument('Image size must be positive, got {}x{}'.format(width,height))
        self.fx = float(fx)
        self.fy = float(fy)
        self.cx = float(cx)
        self.cy = float(cy)
        self.width = int(width)
        self.height = int(height)

    def __repr__(self):
        return '<CameraIntrinsics fx:{} fy:{} cx:{} cy:{} size:{}x{}>'.format(
            self.fx,self.fy,self.cx,self.cy,self.width,self.height)

    def __eq__(self,other):
        return isinstance(other,CameraIntrinsics) and self.to_dict() == other.to_dict()

    def __ne__(self,other):
        return not self == other

    @property
    def K(self):
        return np.array([[self.fx,0.0,self.cx],
                         [0.0,self.fy,self.cy],
                         [0.0,0.0,1.0]])

    @classmethod
    def from_K(cls,K,width,height):
        K = np.asarray(K,dtype=np.float64).reshape(3,3)
        return cls(fx=K[0,0],fy=K[1,1],cx=K[0,2],cy=K[1,2],width=width,height=height)

    @classmethod
    def default(cls):
        '''640x480 camera with the YCB-V focal length and a centred principal point'''
        return cls(fx=1066.778,fy=1067.487,cx=320.0,cy=240.0,width=640,height=480)

    def with_principal_point(self,cx,cy):
        return CameraIntrinsics(self.fx,self.fy,cx,cy,self.width,self.height)

    def to_dict(self):
        return {'fx':self.fx,'fy':self.fy,'cx':self.cx,'cy':self.cy,
                'width':self.width,'height':self.height}

    @classmethod
    def from_dict(cls,d):
        return cls(**{k:d[k] for k in ('fx','fy','cx','cy','width','height')})
