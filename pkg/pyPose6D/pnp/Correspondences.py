#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import ShapeMismatch,InsufficientPoints
from pyPose6D.geometry.KeypointSet import KeypointSet


class Correspondences(object):
    r'''Paired 3D model points and 2D image points

    **Variable Definitions**

        - `object_points`
            (n,3) model-frame coordinates in meters

        - `image_points`
            (n,2) pixel coordinates

    Keypoint sets are accepted for either argument.

    Raises
    ------
    *ShapeMismatch* if the two sides differ in length or dimension.

    *InsufficientPoints* if fewer than 4 pairs are given.
    '''
    min_points = 4

    def __init__(self,object_points,image_points):
        if isinstance(object_points,KeypointSet):
            object_points = object_points.points
        if isinstance(image_points,KeypointSet):
            image_points = image_points.points
        self.object_points = np.array(object_points,dtype=np.float64)
        self.image_points = np.array(image_points,dtype=np.float64)
        if self.object_points.ndim != 2 or self.object_points.shape[1] != 3:
            raise ShapeMismatch('Object points must have shape (n,3), got {}'.format(self.object_points.shape))
        if self.image_points.ndim != 2 or self.image_points.shape[1] != 2:
            raise ShapeMismatch('Image points must have shape (n,2), got {}'.format(self.image_points.shape))
        if len(self.object_points) != len(self.image_points):
            raise ShapeMismatch('{} object points but {} image points'.format(
                len(self.object_points),len(self.image_points)))
        if len(self) < self.min_points:
            raise InsufficientPoints('PnP needs at least {} correspondences, got {}'.format(
                self.min_points,len(self)))

    def __repr__(self):
        return '<Correspondences n:{}>'.format(len(self))

    def __len__(self):
        return self.object_points.shape[0]

    def subset(self,selection):
        '''Correspondences restricted to an index array or boolean mask'''
        return Correspondences(self.object_points[selection],self.image_points[selection])
