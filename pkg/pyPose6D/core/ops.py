#!python
r'''
Differentiable operations on :class:`pyPose6D.core.Tensor`.

Each operation computes its value with numpy and, when recording, registers
a vector-Jacobian product closure on the active tape. Broadcasting follows
numpy rules; gradients are summed back onto the operand shapes by the tape.
Reductions accumulate in 64-bit floating point regardless of operand dtype.
'''
from __future__ import division,print_function
import numpy as np
from scipy import special

from pyPose6D.core.Tensor import Tensor,active_tape
from pyPose6D.core.Errors import ShapeMismatch,InvalidArgument


def as_tensor(x):
    '''Wrap non-tensors as constant tensors of the active dtype'''
    if isinstance(x,Tensor):
        return x
    return Tensor(x)


def _result(op,value,inputs,vjp):
    out = Tensor(value,dtype=np.asarray(value).dtype)
    tape = active_tape()
    if tape is not None and any(t.requires_grad for t in inputs):
        out.requires_grad = True
        tape.record(op,inputs,out,vjp)
    return out


def _normalize_axes(axis,ndim):
    if axis is None:
        return tuple(range(ndim))
    if isinstance(axis,int):
        axis = (axis,)
    return tuple(sorted(a % ndim for a in axis))


##############
# elementwise
##############
def add(a,b):
    a,b = as_tensor(a),as_tensor(b)
    return _result('add',a.data+b.data,(a,b),lambda g: (g,g))


def sub(a,b):
    a,b = as_tensor(a),as_tensor(b)
    return _result('sub',a.data-b.data,(a,b),lambda g: (g,-g))


def mul(a,b):
    a,b = as_tensor(a),as_tensor(b)
    return _result('mul',a.data*b.data,(a,b),lambda g: (g*b.data,g*a.data))


def div(a,b):
    a,b = as_tensor(a),as_tensor(b)
    return _result('div',a.data/b.data,(a,b),
                   lambda g: (g/b.data,-g*a.data/(b.data*b.data)))


def neg(a):
    a = as_tensor(a)
    return _result('neg',-a.data,(a,),lambda g: (-g,))


def power(a,exponent):
    '''Elementwise power by a constant exponent'''
    a = as_tensor(a)
    p = float(exponent)
    value = a.data**p
    return _result('power',value,(a,),lambda g: (g*p*a.data**(p-1.0),))


def square(a):
    a = as_tensor(a)
    return _result('square',a.data*a.data,(a,),lambda g: (2.0*g*a.data,))


def sqrt(a):
    a = as_tensor(a)
    value = np.sqrt(a.data)
    return _result('sqrt',value,(a,),lambda g: (0.5*g/value,))


def exp(a):
    a = as_tensor(a)
    value = np.exp(a.data)
    return _result('exp',value,(a,),lambda g: (g*value,))


def log(a):
    a = as_tensor(a)
    return _result('log',np.log(a.data),(a,),lambda g: (g/a.data,))


def abs(a):
    a = as_tensor(a)
    return _result('abs',np.abs(a.data),(a,),lambda g: (g*np.sign(a.data),))


def relu(a):
    '''max(x,0); the gradient at exactly zero is taken as zero'''
    a = as_tensor(a)
    mask = a.data > 0
    return _result('relu',np.where(mask,a.data,0).astype(a.data.dtype),(a,),lambda g: (g*mask,))


def sigmoid(a):
    '''Logistic map onto (0,1)'''
    a = as_tensor(a)
    value = special.expit(a.data)
    return _result('sigmoid',value,(a,),lambda g: (g*value*(1.0-value),))


def maximum(a,b):
    a,b = as_tensor(a),as_tensor(b)
    mask = a.data >= b.data
    return _result('maximum',np.where(mask,a.data,b.data),(a,b),
                   lambda g: (g*mask,g*~mask))


def minimum(a,b):
    a,b = as_tensor(a),as_tensor(b)
    mask = a.data <= b.data
    return _result('minimum',np.where(mask,a.data,b.data),(a,b),
                   lambda g: (g*mask,g*~mask))


def cross(a,b):
    '''Cross product over the last axis (extent 3)'''
    a,b = as_tensor(a),as_tensor(b)
    if a.shape[-1] != 3 or b.shape[-1] != 3:
        raise ShapeMismatch('cross needs a last axis of 3, got {} and {}'.format(a.shape,b.shape))
    return _result('cross',np.cross(a.data,b.data),(a,b),
                   lambda g: (np.cross(b.data,g),np.cross(g,a.data)))


##############
# linear algebra
##############
def matmul(a,b):
    r'''Matrix product with numpy batching rules

    Both operands need at least two dimensions. Leading (batch) dimensions
    broadcast.
    '''
    a,b = as_tensor(a),as_tensor(b)
    if a.ndim < 2 or b.ndim < 2:
        raise ShapeMismatch('matmul needs operands with ndim >= 2, got {} and {}'.format(a.shape,b.shape))
    if a.shape[-1] != b.shape[-2]:
        raise ShapeMismatch('matmul inner dimensions differ: {} @ {}'.format(a.shape,b.shape))

    def vjp(g):
        return (np.matmul(g,np.swapaxes(b.data,-1,-2)),
                np.matmul(np.swapaxes(a.data,-1,-2),g))
    return _result('matmul',np.matmul(a.data,b.data),(a,b),vjp)


##############
# normalization and probability
##############
def softmax(a,axis=-1):
    a = as_tensor(a)
    value = special.softmax(a.data,axis=axis)

    def vjp(g):
        return (value*(g-np.sum(g*value,axis=axis,keepdims=True)),)
    return _result('softmax',value,(a,),vjp)


def log_softmax(a,axis=-1):
    a = as_tensor(a)
    value = special.log_softmax(a.data,axis=axis)

    def vjp(g):
        return (g-np.exp(value)*np.sum(g,axis=axis,keepdims=True),)
    return _result('log_softmax',value,(a,),vjp)


def layer_norm(x,gamma,beta,eps=1e-5):
    r'''Normalize over the last axis, then scale and shift

    **Mathematical Definition**

    .. math::

        y = \gamma \frac{x - \mu}{\sqrt{\sigma^2 + \epsilon}} + \beta

    with mean and (biased) variance taken over the last axis.
    '''
    x,gamma,beta = as_tensor(x),as_tensor(gamma),as_tensor(beta)
    n = x.shape[-1]
    mu = np.mean(x.data,axis=-1,keepdims=True,dtype=np.float64)
    var = np.mean((x.data-mu)**2,axis=-1,keepdims=True,dtype=np.float64)
    inv = 1.0/np.sqrt(var+eps)
    xhat = ((x.data-mu)*inv).astype(x.data.dtype)
    value = xhat*gamma.data + beta.data

    def vjp(g):
        dxhat = g*gamma.data
        dx = inv*(dxhat - np.mean(dxhat,axis=-1,keepdims=True,dtype=np.float64)
                  - xhat*np.mean(dxhat*xhat,axis=-1,keepdims=True,dtype=np.float64))
        return (dx.astype(x.data.dtype),g*xhat,g)
    assert n > 0,'layer_norm over an empty axis'
    return _result('layer_norm',value,(x,gamma,beta),vjp)


def dropout(a,p,train,rng):
    r'''Inverted dropout

    In training mode each element is zeroed with probability `p` and the
    survivors are scaled by 1/(1-p). In evaluation mode the input tensor is
    returned unchanged.

    Arguments
    ---------
    rng: numpy.random.Generator
        The named dropout stream; masks never touch other streams.
    '''
    if not (0.0 <= p < 1.0):
        raise InvalidArgument('dropout probability must be in [0,1), got {}'.format(p))
    a = as_tensor(a)
    if not train or p == 0.0:
        return a
    mask = ((rng.random(a.shape) >= p)/(1.0-p)).astype(a.data.dtype)
    return _result('dropout',a.data*mask,(a,),lambda g: (g*mask,))


##############
# shape manipulation
##############
def reshape(a,shape):
    a = as_tensor(a)
    try:
        value = a.data.reshape(shape)
    except ValueError as e:
        raise ShapeMismatch(str(e))
    return _result('reshape',value,(a,),lambda g: (g.reshape(a.shape),))


def transpose(a,axes=None):
    a = as_tensor(a)
    if axes is None:
        axes = tuple(reversed(range(a.ndim)))
    inverse = tuple(np.argsort(axes))
    return _result('transpose',np.transpose(a.data,axes),(a,),
                   lambda g: (np.transpose(g,inverse),))


def _is_basic_index(index):
    if not isinstance(index,tuple):
        index = (index,)
    for i in index:
        if not (i is None or i is Ellipsis or isinstance(i,(slice,int,np.integer))):
            return False
    return True


def getitem(a,index):
    '''Indexing and slicing (basic and fancy)'''
    a = as_tensor(a)
    value = a.data[index]
    basic = _is_basic_index(index)

    def vjp(g):
        if basic:
            full = np.zeros_like(a.data)
            full[index] += g
            return (full,)
        # scatter-add through flat positions so repeated indices accumulate
        flat = np.arange(a.data.size).reshape(a.shape)[index]
        full = np.bincount(np.ravel(flat),weights=np.ravel(g),minlength=a.data.size)
        return (full.reshape(a.shape).astype(a.data.dtype),)
    return _result('getitem',np.array(value,copy=True),(a,),vjp)


def concat(tensors,axis=0):
    tensors = [as_tensor(t) for t in tensors]
    try:
        value = np.concatenate([t.data for t in tensors],axis=axis)
    except ValueError as e:
        raise ShapeMismatch(str(e))
    sizes = np.cumsum([t.shape[axis] for t in tensors])[:-1]

    def vjp(g):
        return tuple(np.split(g,sizes,axis=axis))
    return _result('concat',value,tuple(tensors),vjp)


def stack(tensors,axis=0):
    tensors = [as_tensor(t) for t in tensors]
    try:
        value = np.stack([t.data for t in tensors],axis=axis)
    except ValueError as e:
        raise ShapeMismatch(str(e))

    def vjp(g):
        return tuple(np.take(g,i,axis=axis) for i in range(len(tensors)))
    return _result('stack',value,tuple(tensors),vjp)


##############
# reductions
##############
def sum(a,axis=None,keepdims=False):
    a = as_tensor(a)
    value = np.sum(a.data,axis=axis,keepdims=keepdims,dtype=np.float64).astype(a.data.dtype)
    axes = _normalize_axes(axis,a.ndim)

    def vjp(g):
        if not keepdims:
            g = np.expand_dims(g,axes) if axes else g
        return (np.broadcast_to(g,a.shape),)
    return _result('sum',value,(a,),vjp)


def mean(a,axis=None,keepdims=False):
    a = as_tensor(a)
    axes = _normalize_axes(axis,a.ndim)
    count = int(np.prod([a.shape[i] for i in axes])) if axes else 1
    if count == 0:
        raise ShapeMismatch('mean over an empty axis of shape {}'.format(a.shape))
    value = np.mean(a.data,axis=axis,keepdims=keepdims,dtype=np.float64).astype(a.data.dtype)

    def vjp(g):
        if not keepdims:
            g = np.expand_dims(g,axes) if axes else g
        return (np.broadcast_to(g/count,a.shape),)
    return _result('mean',value,(a,),vjp)


def min(a,axis=None):
    '''Minimum along an axis; the gradient goes to the first minimal entry'''
    a = as_tensor(a)
    if axis is None:
        flat = reshape(a,(-1,))
        return min(flat,axis=0)
    axis = axis % a.ndim
    idx = np.expand_dims(np.argmin(a.data,axis=axis),axis)
    value = np.take_along_axis(a.data,idx,axis=axis).squeeze(axis)

    def vjp(g):
        full = np.zeros_like(a.data)
        np.put_along_axis(full,idx,np.expand_dims(g,axis),axis=axis)
        return (full,)
    return _result('min',value,(a,),vjp)


def l1(a,axis=None):
    '''Sum of absolute values'''
    a = as_tensor(a)
    axes = _normalize_axes(axis,a.ndim)
    value = np.sum(np.abs(a.data),axis=axis,dtype=np.float64).astype(a.data.dtype)

    def vjp(g):
        g = np.expand_dims(g,axes) if (axes and axis is not None) else g
        return (g*np.sign(a.data),)
    return _result('l1',value,(a,),vjp)


def l2sq(a,axis=None):
    '''Sum of squares'''
    a = as_tensor(a)
    axes = _normalize_axes(axis,a.ndim)
    value = np.sum(a.data*a.data,axis=axis,dtype=np.float64).astype(a.data.dtype)

    def vjp(g):
        g = np.expand_dims(g,axes) if (axes and axis is not None) else g
        return (2.0*g*a.data,)
    return _result('l2sq',value,(a,),vjp)
