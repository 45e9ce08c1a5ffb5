#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import DegenerateInput

#: squared cross-ratio of a (corner, 1/3, 2/3, corner) tuple: (4/3)^2
IBB_CROSS_RATIO_SQ = 16.0/9.0


def cross_ratio_sq(a,b,c,d):
    r'''Squared cross-ratio of four (nominally collinear) points

    **Mathematical Definition**

    .. math::

        CR^2 = \frac{\|c-a\|^2 \, \|d-b\|^2}{\|c-b\|^2 \, \|d-a\|^2}

    All norms are computed as inner products, so no square roots are taken.
    For points at 0, 1/3, 2/3 and 1 along a segment the value is 16/9.

    Arguments
    ---------
    a,b,c,d: array-like, (...,dim)
        Points in 2D or 3D. Leading dimensions are broadcast, so arrays of
        4-tuples can be evaluated in one call.

    Returns
    -------
    value: float or np.ndarray

    Raises
    ------
    *DegenerateInput* if any squared denominator length is <= 1e-18.
    '''
    a,b,c,d = [np.asarray(p,dtype=np.float64) for p in (a,b,c,d)]
    ca = c-a
    db = d-b
    cb = c-b
    da = d-a
    den_cb = np.sum(cb*cb,axis=-1)
    den_da = np.sum(da*da,axis=-1)
    if np.any(den_cb <= 1e-18) or np.any(den_da <= 1e-18):
        raise DegenerateInput('Cross-ratio undefined: coincident points in 4-tuple')
    value = np.sum(ca*ca,axis=-1)*np.sum(db*db,axis=-1)/(den_cb*den_da)
    if np.ndim(value) == 0:
        return float(value)
    return value


def keypoint_cross_ratios(keypoints):
    '''Squared cross-ratio of every collinear 4-tuple of a keypoint set'''
    t = keypoints.tuples()
    if len(t) == 0:
        return np.zeros(0)
    return np.atleast_1d(cross_ratio_sq(t[:,0],t[:,1],t[:,2],t[:,3]))
