#!python
r'''
Rotation helpers: the continuous 6D parameterization, polar projection onto
SO(3), uniform sampling and the geodesic distance.

Rotations are plain 3x3 :class:`numpy.ndarray` objects. The 6D
parameterization stores the first two columns of a rotation matrix,
``(R[:,0], R[:,1])``, and is turned back into a rotation with Gram-Schmidt
orthonormalization.
'''
from __future__ import division,print_function
import numpy as np
from scipy.spatial.transform import Rotation as _ScipyRotation

from pyPose6D.core.Errors import DegenerateInput,InvalidArgument
from pyPose6D.core import ops


def check_rotation(R,tol=1e-9):
    '''Raise InvalidArgument unless R is orthonormal with determinant +1 (within tol)'''
    R = np.asarray(R,dtype=np.float64)
    if R.shape != (3,3):
        raise InvalidArgument('Rotation must be 3x3, got {}'.format(R.shape))
    if np.max(np.abs(R.T.dot(R)-np.eye(3))) > tol:
        raise InvalidArgument('Rotation is not orthonormal within {}'.format(tol))
    if abs(np.linalg.det(R)-1.0) > tol:
        raise InvalidArgument('Rotation determinant is not +1 within {}'.format(tol))
    return R


def rot6d_to_matrix(r):
    r'''Map a 6D rotation code to a rotation matrix

    **Mathematical Definition**

    .. math::

        b_1 = \frac{a_1}{\|a_1\|} \qquad
        b_2 = \frac{a_2 - (b_1 \cdot a_2) b_1}{\|a_2 - (b_1 \cdot a_2) b_1\|} \qquad
        b_3 = b_1 \times b_2

    and :math:`R = [b_1\ b_2\ b_3]` (columns).

    Arguments
    ---------
    r: array-like, length 6
        ``(a1, a2)``, the two un-normalized column vectors.

    Returns
    -------
    R: np.ndarray, (3,3)

    Raises
    ------
    *DegenerateInput* if either vector has norm below 1e-12 or the two are
    parallel within 1e-6 rad.
    '''
    r = np.asarray(r,dtype=np.float64).reshape(6)
    a1,a2 = r[:3],r[3:]
    n1 = np.linalg.norm(a1)
    n2 = np.linalg.norm(a2)
    if n1 < 1e-12 or n2 < 1e-12:
        raise DegenerateInput('rot6d column norm below 1e-12: {}'.format(r))
    b1 = a1/n1
    if np.linalg.norm(np.cross(b1,a2))/n2 < 1e-6:
        raise DegenerateInput('rot6d columns are parallel: {}'.format(r))
    u = a2 - b1.dot(a2)*b1
    b2 = u/np.linalg.norm(u)
    b3 = np.cross(b1,b2)
    return np.stack([b1,b2,b3],axis=1)


def matrix_to_rot6d(R):
    '''First two columns of R, column 0 then column 1'''
    R = np.asarray(R,dtype=np.float64).reshape(3,3)
    return np.concatenate([R[:,0],R[:,1]])


def gram_schmidt(t):
    r'''Differentiable counterpart of :func:`rot6d_to_matrix`

    Arguments
    ---------
    t: Tensor, (...,6)

    Returns
    -------
    R: Tensor, (...,3,3)
        Rotation matrices whose columns are the orthonormalized vectors.
    '''
    t = ops.as_tensor(t)
    a1 = t[...,0:3]
    a2 = t[...,3:6]
    b1 = a1/ops.sqrt(ops.sum(a1*a1,axis=-1,keepdims=True))
    u = a2 - ops.sum(b1*a2,axis=-1,keepdims=True)*b1
    b2 = u/ops.sqrt(ops.sum(u*u,axis=-1,keepdims=True))
    b3 = ops.cross(b1,b2)
    return ops.stack([b1,b2,b3],axis=-1)


def geodesic_distance(Ra,Rb):
    '''Angle (radians, in [0,pi]) of the relative rotation Ra^T Rb'''
    Ra = np.asarray(Ra,dtype=np.float64)
    Rb = np.asarray(Rb,dtype=np.float64)
    cos = (np.trace(Ra.T.dot(Rb))-1.0)/2.0
    return float(np.arccos(np.clip(cos,-1.0,1.0)))


def project_to_rotation(M):
    '''Closest rotation to M in the Frobenius sense (polar decomposition via SVD)'''
    U,_,Vt = np.linalg.svd(np.asarray(M,dtype=np.float64).reshape(3,3))
    D = np.diag([1.0,1.0,np.sign(np.linalg.det(U.dot(Vt))) or 1.0])
    return U.dot(D).dot(Vt)


def random_rotation(rng):
    '''Uniformly distributed rotation (unit quaternion sampling) from `rng`'''
    return _ScipyRotation.random(None,rng).as_matrix()


def rotation_about(axis,angle):
    '''Rotation by `angle` radians about `axis` ('x','y','z' or a 3-vector)'''
    if isinstance(axis,str):
        axis = {'x':(1,0,0),'y':(0,1,0),'z':(0,0,1)}[axis]
    axis = np.asarray(axis,dtype=np.float64)
    axis = axis/np.linalg.norm(axis)
    return _ScipyRotation.from_rotvec(axis*angle).as_matrix()
