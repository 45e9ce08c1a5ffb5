#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import EmptyInput,ShapeMismatch


def recall_at(errors,thresholds):
    '''Fraction of errors strictly below their threshold

    `thresholds` is a scalar (e.g. 0.1 m) or one value per error (e.g. a
    tenth of each object's diameter).
    '''
    errors = np.asarray(errors,dtype=np.float64).ravel()
    if errors.size == 0:
        raise EmptyInput('Recall of an empty error list')
    thresholds = np.asarray(thresholds,dtype=np.float64)
    if thresholds.ndim > 0 and thresholds.size != errors.size:
        raise ShapeMismatch('{} thresholds for {} errors'.format(thresholds.size,errors.size))
    return float(np.mean(errors < thresholds.ravel() if thresholds.ndim else errors < thresholds))
