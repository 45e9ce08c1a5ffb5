#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import InvalidArgument


def box_cxcywh_to_xyxy(box):
    box = np.asarray(box,dtype=np.float64)
    cx,cy,w,h = box[...,0],box[...,1],box[...,2],box[...,3]
    return np.stack([cx-w/2.0,cy-h/2.0,cx+w/2.0,cy+h/2.0],axis=-1)


def box_xyxy_to_cxcywh(box):
    box = np.asarray(box,dtype=np.float64)
    x0,y0,x1,y1 = box[...,0],box[...,1],box[...,2],box[...,3]
    return np.stack([(x0+x1)/2.0,(y0+y1)/2.0,x1-x0,y1-y0],axis=-1)


def box_giou(a,b):
    r'''Generalized IoU of two cxcywh boxes (plain numpy)

    **Mathematical Definition**

    .. math::

        GIoU = IoU - \frac{|E| - |A \cup B|}{|E|}

    with :math:`E` the smallest axis-aligned box enclosing both.

    Raises
    ------
    *InvalidArgument* for non-positive widths or heights.
    '''
    a = np.asarray(a,dtype=np.float64)
    b = np.asarray(b,dtype=np.float64)
    if np.any(a[...,2:] <= 0) or np.any(b[...,2:] <= 0):
        raise InvalidArgument('GIoU needs positive box extents')
    ax0,ay0,ax1,ay1 = np.moveaxis(box_cxcywh_to_xyxy(a),-1,0)
    bx0,by0,bx1,by1 = np.moveaxis(box_cxcywh_to_xyxy(b),-1,0)
    iw = np.maximum(np.minimum(ax1,bx1)-np.maximum(ax0,bx0),0.0)
    ih = np.maximum(np.minimum(ay1,by1)-np.maximum(ay0,by0),0.0)
    inter = iw*ih
    union = a[...,2]*a[...,3] + b[...,2]*b[...,3] - inter
    enclosure = (np.maximum(ax1,bx1)-np.minimum(ax0,bx0))*(np.maximum(ay1,by1)-np.minimum(ay0,by0))
    return inter/union - (enclosure-union)/enclosure


def points_box(points,clamp=True):
    '''Tight cxcywh box around (n,2) normalized points, clamped to [0,1]'''
    points = np.asarray(points,dtype=np.float64).reshape(-1,2)
    lo = points.min(axis=0)
    hi = points.max(axis=0)
    if clamp:
        lo = np.clip(lo,0.0,1.0)
        hi = np.clip(hi,0.0,1.0)
    return box_xyxy_to_cxcywh(np.concatenate([lo,hi]))
