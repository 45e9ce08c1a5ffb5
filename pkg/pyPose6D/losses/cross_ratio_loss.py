#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core import ops
from pyPose6D.core.Tensor import Tensor
from pyPose6D.core.Representation import Representation
from pyPose6D.core.Errors import DegenerateInput
from pyPose6D.geometry.KeypointSet import KeypointSet2D,ibb_index_table
from pyPose6D.geometry.cross_ratio import IBB_CROSS_RATIO_SQ
from pyPose6D.losses.smooth_l1 import smooth_l1

#: smallest squared segment length accepted in a cross-ratio denominator
MIN_DENOMINATOR = 1e-12


def _sqnorm(v):
    return ops.sum(v*v,axis=-1)


def cross_ratio_terms(points,index_table,strict=True):
    r'''Squared cross-ratio of each collinear 4-tuple, as a tensor

    Arguments
    ---------
    points: Tensor, (...,K,2)

    index_table: np.ndarray, (T,4)

    strict: bool
        Raise on degenerate tuples. With ``strict=False`` the denominators
        are floored at 1e-12 instead, which keeps training alive when early
        predictions collapse.

    Returns
    -------
    cr2: Tensor, (...,T)
    '''
    points = ops.as_tensor(points)
    a = points[...,index_table[:,0],:]
    b = points[...,index_table[:,1],:]
    c = points[...,index_table[:,2],:]
    d = points[...,index_table[:,3],:]
    den_cb = _sqnorm(c-b)
    den_da = _sqnorm(d-a)
    if strict:
        if np.any(den_cb.data <= MIN_DENOMINATOR) or np.any(den_da.data <= MIN_DENOMINATOR):
            raise DegenerateInput('Degenerate collinear 4-tuple in cross-ratio loss')
    else:
        den_cb = ops.maximum(den_cb,MIN_DENOMINATOR)
        den_da = ops.maximum(den_da,MIN_DENOMINATOR)
    return _sqnorm(c-a)*_sqnorm(d-b)/(den_cb*den_da)


def cross_ratio_loss(kps,representation=None,index_table=None,strict=True):
    r'''Self-supervised cross-ratio consistency of IBB keypoints

    **Mathematical Definition**

    .. math::

        \mathcal{L}_{cr} = \frac{1}{T} \sum_{(a,b,c,d)} \mathrm{smooth}_{\ell_1}
            \left(\frac{16}{9} - \frac{\|c-a\|^2\|d-b\|^2}{\|c-b\|^2\|d-a\|^2}\right)

    **Description**

        Each edge of the interpolated bounding box holds four collinear
        keypoints whose cross-ratio is 4/3 in 3D and therefore in every
        perspective image. The loss penalizes deviation of the predicted
        squared cross-ratio from 16/9 and is invariant to translation and
        uniform scaling of the keypoints. Sets without collinear tuples
        (BB8, FPS8) give 0.

    Arguments
    ---------
    kps: KeypointSet2D or Tensor, (...,K,2)

    representation: Representation, *optional*
        Needed when `kps` is a tensor; defaults to IBB32.

    Returns
    -------
    loss: Tensor, scalar

    Raises
    ------
    *DegenerateInput* if a denominator is <= 1e-12 and `strict` is set.
    '''
    if isinstance(kps,KeypointSet2D):
        representation = kps.representation
        index_table = kps.index_table
        kps = kps.points
    if representation is None:
        representation = Representation.IBB32
    if not representation.collinear:
        return Tensor(0.0)
    if index_table is None:
        index_table = ibb_index_table()
    cr2 = cross_ratio_terms(kps,index_table,strict=strict)
    return ops.mean(smooth_l1(IBB_CROSS_RATIO_SQ-cr2))
