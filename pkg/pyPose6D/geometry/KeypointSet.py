#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Representation import Representation
from pyPose6D.core.Errors import ShapeMismatch,InvalidArgument


def ibb_index_table():
    r'''Collinear 4-tuples of the 32-point interpolated bounding box

    Edges are the corner pairs ``(i,j)``, ``i<j``, that differ in exactly one
    sign bit, enumerated in lexicographic order. Edge ``e`` owns the interior
    points ``8+2e`` (one third of the way from corner ``i``) and ``9+2e`` (two
    thirds of the way). Row ``e`` of the table is ``(i, 8+2e, 9+2e, j)``.
    '''
    rows = []
    e = 0
    for i in range(8):
        for j in range(i+1,8):
            if bin(i ^ j).count('1') == 1:
                rows.append((i,8+2*e,9+2*e,j))
                e += 1
    return np.array(rows,dtype=int)


def cuboid_edges():
    '''Corner index pairs of the 12 cuboid edges, in table order'''
    table = ibb_index_table()
    return table[:,[0,3]]


class KeypointSet(object):
    '''Baseclass for ordered keypoint sets

    .. note::

        This class should not be used/instatiated directly. Use
        :class:`KeypointSet3D` or :class:`KeypointSet2D`.
    '''
    dim = None

    def __init__(self,points,representation,index_table=None):
        if isinstance(representation,str):
            representation = Representation.from_string(representation)
        points = np.array(points,dtype=np.float64)
        if points.ndim == 1:
            points = points.reshape(-1,self.dim)
        if points.ndim != 2 or points.shape[1] != self.dim:
            raise ShapeMismatch('{} needs (n,{}) points, got {}'.format(
                type(self).__name__,self.dim,points.shape))
        if points.shape[0] != representation.count:
            raise ShapeMismatch('{} keypoints need {} points, got {}'.format(
                representation.name,representation.count,points.shape[0]))

        if representation.collinear:
            if index_table is None:
                index_table = ibb_index_table()
            index_table = np.asarray(index_table,dtype=int).reshape(-1,4)
            if len(set(map(tuple,index_table))) != len(index_table):
                raise InvalidArgument('IBB index table lists a 4-tuple twice')
        else:
            index_table = np.zeros((0,4),dtype=int)

        self.points = points
        self.representation = representation
        self.index_table = index_table

    def __repr__(self):
        return '<{} {} n:{}>'.format(type(self).__name__,self.representation.name,len(self))

    def __len__(self):
        return self.points.shape[0]

    def __getitem__(self,index):
        return self.points[index]

    def tuples(self):
        '''Array (T,4,dim) of the collinear 4-tuples (empty for BB8/FPS8)'''
        return self.points[self.index_table]

    def _like(self,points):
        return type(self)(points,self.representation,self.index_table)


class KeypointSet3D(KeypointSet):
    '''Ordered 3D keypoints (meters, model frame)'''
    dim = 3


class KeypointSet2D(KeypointSet):
    '''Ordered 2D keypoints (pixels, or normalized image units)'''
    dim = 2

    def normalized(self,cam):
        '''Divide u by image width and v by image height'''
        return self._like(self.points/np.array([cam.width,cam.height],dtype=np.float64))

    def denormalized(self,cam):
        return self._like(self.points*np.array([cam.width,cam.height],dtype=np.float64))

    def as_vector(self):
        '''Flattened (u0,v0,u1,v1,...) vector, the RotEst input layout'''
        return self.points.ravel()

    @classmethod
    def from_vector(cls,vector,representation):
        return cls(np.asarray(vector,dtype=np.float64).reshape(-1,2),representation)
