#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.metrics.add_error import model_array

#: groundtruth rows compared per block of the pairwise search
CHUNK = 256


def adds_error(gt,pred,model,chunk=CHUNK):
    r'''Average closest-point distance (ADD-S) for symmetric objects

    **Mathematical Definition**

    .. math::

        e_{ADD\text{-}S} = \frac{1}{n}\sum_{x_1 \in \mathcal{M}} \min_{x_2 \in \mathcal{M}}
            \|(R x_1 + t) - (\hat{R} x_2 + \hat{t})\|_2

    **Description**

        Brute-force nearest neighbours in blocks of `chunk` rows. Each
        distance is computed exactly like in :func:`add_error`, so
        ``adds_error <= add_error`` holds bit for bit.
    '''
    model = model_array(model)
    gt_points = gt.transform(model)
    pred_points = pred.transform(model)
    closest = np.empty(model.shape[0])
    for start in range(0,model.shape[0],chunk):
        block = gt_points[start:start+chunk]
        d = np.linalg.norm(block[:,None,:]-pred_points[None,:,:],axis=2)
        closest[start:start+chunk] = d.min(axis=1)
    return float(closest.mean())
