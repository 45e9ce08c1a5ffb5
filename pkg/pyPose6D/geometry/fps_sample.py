#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import InvalidArgument,EmptyInput


def fps_sample(points,k,seed_index=0,return_indices=False):
    r'''Greedy farthest point sampling

    **Description**

        Starting from ``points[seed_index]``, repeatedly add the point whose
        distance to the already selected subset is largest. Ties go to the
        lowest index (``numpy.argmax`` semantics), so the result is fully
        determined by the inputs, and the selection for ``k' < k`` is a
        prefix of the selection for ``k``.

    Arguments
    ---------
    points: np.ndarray, (n,3)
        Point cloud (any dimension works; rows are points).

    k: int
        Number of points to select, ``1 <= k <= n``.

    seed_index: int
        Index of the first selected point.

    return_indices: bool
        Also return the selected row indices.

    Returns
    -------
    subset: np.ndarray, (k,3)
        Selected points in selection order.

    Raises
    ------
    *InvalidArgument* if k is out of range or seed_index is invalid.

    Example
    -------
    .. code-block:: python

        import numpy as np
        import pyPose6D

        line = np.array([[0,0,0],[1,0,0],[2,0,0],[10,0,0]],dtype=float)
        pyPose6D.fps_sample(line,2,seed_index=0)   # rows 0 and 3

    '''
    points = np.asarray(points,dtype=np.float64)
    if points.ndim == 1:
        points = points.reshape(-1,1)
    n = points.shape[0]
    if n == 0:
        raise EmptyInput('fps_sample needs a non-empty point cloud')
    if not (1 <= k <= n):
        raise InvalidArgument('fps_sample needs 1 <= k <= {}, got k={}'.format(n,k))
    if not (0 <= seed_index < n):
        raise InvalidArgument('seed_index {} out of range for {} points'.format(seed_index,n))

    selected = [int(seed_index)]
    dist = np.linalg.norm(points-points[seed_index],axis=1)
    dist[seed_index] = -1.0
    for _ in range(k-1):
        i = int(np.argmax(dist))
        selected.append(i)
        dist = np.minimum(dist,np.linalg.norm(points-points[i],axis=1))
        dist[selected] = -1.0

    subset = points[selected]
    if return_indices:
        return subset,np.array(selected,dtype=int)
    return subset
