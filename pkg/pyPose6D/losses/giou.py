#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core import ops
from pyPose6D.core.Errors import InvalidArgument


def _corners(box):
    cx,cy,w,h = box[...,0],box[...,1],box[...,2],box[...,3]
    return cx-0.5*w,cy-0.5*h,cx+0.5*w,cy+0.5*h


def giou(a,b):
    r'''Generalized IoU between boxes, differentiable in both arguments

    **Mathematical Definition**

    .. math::

        GIoU(A,B) = \frac{|A \cap B|}{|A \cup B|} - \frac{|E| - |A \cup B|}{|E|}

    where :math:`E` is the smallest axis-aligned box enclosing A and B.
    Values lie in (-1, 1].

    Arguments
    ---------
    a,b: Tensor or array, (...,4)
        Boxes as (center-x, center-y, width, height).

    Returns
    -------
    giou: Tensor, shape (...)

    Raises
    ------
    *InvalidArgument* if any width or height is <= 0.
    '''
    a = ops.as_tensor(a)
    b = ops.as_tensor(b)
    if np.any(a.data[...,2:] <= 0) or np.any(b.data[...,2:] <= 0):
        raise InvalidArgument('GIoU needs positive box extents')
    ax0,ay0,ax1,ay1 = _corners(a)
    bx0,by0,bx1,by1 = _corners(b)
    iw = ops.relu(ops.minimum(ax1,bx1)-ops.maximum(ax0,bx0))
    ih = ops.relu(ops.minimum(ay1,by1)-ops.maximum(ay0,by0))
    inter = iw*ih
    union = a[...,2]*a[...,3] + b[...,2]*b[...,3] - inter
    ew = ops.maximum(ax1,bx1)-ops.minimum(ax0,bx0)
    eh = ops.maximum(ay1,by1)-ops.minimum(ay0,by0)
    enclosure = ew*eh
    return inter/union - (enclosure-union)/enclosure
