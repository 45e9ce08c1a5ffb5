#!python
from __future__ import division,print_function
import numpy as np
from scipy.spatial import ConvexHull,QhullError
from scipy.spatial.distance import pdist

from pyPose6D.core.Errors import EmptyInput


def model_diameter(points):
    r'''Largest distance between any two model points

    **Description**

        The farthest pair always lies on the convex hull, so distances are
        only computed between hull vertices. Flat or tiny clouds, for which
        the hull is undefined, fall back to all pairs.

    Arguments
    ---------
    points: np.ndarray, (n,3)
        Model cloud in meters.

    Returns
    -------
    diameter: float

    Raises
    ------
    *EmptyInput* for an empty cloud.
    '''
    points = np.asarray(points,dtype=np.float64).reshape(-1,3)
    if points.shape[0] == 0:
        raise EmptyInput('Cannot compute the diameter of an empty cloud')
    if points.shape[0] == 1:
        return 0.0
    try:
        points = points[ConvexHull(points).vertices]
    except (QhullError,ValueError):
        pass
    return float(pdist(points).max())
