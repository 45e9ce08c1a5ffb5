#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import EmptyInput


def model_array(model):
    '''Model cloud as an (n,3) float array; raises EmptyInput when empty'''
    model = np.asarray(getattr(model,'points',model),dtype=np.float64).reshape(-1,3)
    if model.shape[0] == 0:
        raise EmptyInput('Pose error needs at least one model point')
    return model


def add_error(gt,pred,model):
    r'''Average distance of corresponding model points (ADD)

    **Mathematical Definition**

    .. math::

        e_{ADD} = \frac{1}{n}\sum_{x \in \mathcal{M}} \|(R x + t) - (\hat{R} x + \hat{t})\|_2

    Arguments
    ---------
    gt, pred: Pose

    model: np.ndarray (n,3) or KeypointSet3D
        Model points in meters.

    Returns
    -------
    error: float
        Meters.
    '''
    model = model_array(model)
    return float(np.linalg.norm(gt.transform(model)-pred.transform(model),axis=1).mean())
