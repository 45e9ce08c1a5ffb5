#!python
from __future__ import division,print_function
import itertools
import numpy as np

from pyPose6D.core.Errors import InvalidArgument


class Cuboid(object):
    r'''Axis-aligned bounding cuboid of an object model

    **Description**

        The cuboid is given by its center and half-extents in the model
        frame, in meters. Corners are enumerated in lexicographic sign order
        over (x,y,z) with the negative sign first, i.e. corner ``i`` has sign
        bits ``(i>>2)&1, (i>>1)&1, i&1`` for x, y and z. Every keypoint layout
        built from a cuboid follows this corner order.

    Example
    -------
    .. code-block:: python

        import pyPose6D

        box = pyPose6D.Cuboid(center=[0,0,0],half_extents=[0.5,0.5,0.5])
        box.corners()[0]   # [-0.5,-0.5,-0.5]
        box.diameter       # sqrt(3)

    '''
    def __init__(self,center,half_extents):
        self.center = np.array(center,dtype=np.float64).reshape(3)
        self.half_extents = np.array(half_extents,dtype=np.float64).reshape(3)
        if np.any(self.half_extents <= 0):
            raise InvalidArgument('Cuboid half-extents must be positive, got {}'.format(self.half_extents))

    def __repr__(self):
        return '<Cuboid center:{} half_extents:{}>'.format(
            np.array2string(self.center,precision=4),
            np.array2string(self.half_extents,precision=4))

    @classmethod
    def unit(cls):
        '''Unit cube centred at the origin'''
        return cls([0.0,0.0,0.0],[0.5,0.5,0.5])

    @classmethod
    def from_points(cls,points):
        '''Tight axis-aligned cuboid around a point cloud'''
        points = np.asarray(points,dtype=np.float64).reshape(-1,3)
        lo = points.min(axis=0)
        hi = points.max(axis=0)
        return cls((lo+hi)/2.0,(hi-lo)/2.0)

    @property
    def diameter(self):
        '''Length of the space diagonal'''
        return float(2.0*np.linalg.norm(self.half_extents))

    @property
    def extents(self):
        return 2.0*self.half_extents

    def corners(self):
        signs = np.array(list(itertools.product((-1.0,1.0),repeat=3)))
        return self.center + signs*self.half_extents

    def surface_grid(self,per_edge=10):
        r'''Regular grid of points covering the six faces

        Each face carries ``per_edge x per_edge`` points including its
        border, so edge and corner points appear on several faces; duplicates
        are removed. The result is deterministic and needs no random stream.
        '''
        if per_edge < 2:
            raise InvalidArgument('surface_grid needs at least 2 points per edge')
        s = np.linspace(-1.0,1.0,per_edge)
        a,b = np.meshgrid(s,s,indexing='ij')
        a = a.ravel()
        b = b.ravel()
        faces = []
        for axis in range(3):
            others = [i for i in range(3) if i != axis]
            for side in (-1.0,1.0):
                face = np.empty((a.size,3))
                face[:,axis] = side
                face[:,others[0]] = a
                face[:,others[1]] = b
                faces.append(face)
        unit = np.unique(np.round(np.concatenate(faces),12),axis=0)
        return self.center + unit*self.half_extents
