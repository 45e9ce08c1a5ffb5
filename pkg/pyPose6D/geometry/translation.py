#!python
r'''
Translation codes: the projected object center normalized by the image size,
plus the center depth. Prediction heads regress this code instead of metric
translations, and :func:`decode_translation` lifts it back into meters.
'''
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import InvalidArgument


class TranslationCode(object):
    r'''Image-space code of an object translation

    **Variable Definitions**

        - `u_norm`, `v_norm`
            Projected object center divided by image width / height

        - `tz`
            Depth of the object center in meters (must be > 0 to decode)
    '''
    def __init__(self,u_norm,v_norm,tz):
        self.u_norm = float(u_norm)
        self.v_norm = float(v_norm)
        self.tz = float(tz)

    def __repr__(self):
        return '<TranslationCode u:{:.4f} v:{:.4f} tz:{:.4f}>'.format(self.u_norm,self.v_norm,self.tz)

    def as_array(self):
        return np.array([self.u_norm,self.v_norm,self.tz])

    @classmethod
    def from_array(cls,values):
        u,v,tz = np.asarray(values,dtype=np.float64).reshape(3)
        return cls(u,v,tz)


def decode_components(u_norm,v_norm,tz,cam):
    '''Back-project code components; works on floats, arrays and Tensors alike'''
    x = (u_norm*cam.width - cam.cx)*tz/cam.fx
    y = (v_norm*cam.height - cam.cy)*tz/cam.fy
    return x,y,tz


def decode_translation(code,cam):
    r'''Metric translation of a TranslationCode

    **Mathematical Definition**

    .. math::

        t = \left(\frac{(u - c_x) t_z}{f_x}, \frac{(v - c_y) t_z}{f_y}, t_z\right)
        \qquad u = u_{norm} W \quad v = v_{norm} H

    Raises
    ------
    *InvalidArgument* if tz <= 0.
    '''
    if code.tz <= 0:
        raise InvalidArgument('Translation code depth must be positive, got {}'.format(code.tz))
    x,y,z = decode_components(code.u_norm,code.v_norm,code.tz,cam)
    return np.array([x,y,z])


def encode_translation(t,cam):
    '''Exact inverse of :func:`decode_translation`'''
    t = np.asarray(t,dtype=np.float64).reshape(3)
    if t[2] <= 0:
        raise InvalidArgument('Translation depth must be positive, got {}'.format(t[2]))
    u = cam.fx*t[0]/t[2] + cam.cx
    v = cam.fy*t[1]/t[2] + cam.cy
    return TranslationCode(u/cam.width,v/cam.height,t[2])
