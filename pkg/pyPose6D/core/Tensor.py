#!python
from __future__ import division,print_function
import threading
from contextlib import contextmanager

import numpy as np

from pyPose6D.core.Errors import NotScalar

_state = threading.local()


def active_dtype():
    '''Floating point type given to newly created tensors on this thread'''
    return getattr(_state,'dtype',np.float32)


def active_tape():
    '''Innermost :class:`Tape` entered on this thread, or None'''
    tapes = getattr(_state,'tapes',None)
    if not tapes:
        return None
    return tapes[-1]


@contextmanager
def precision(dtype):
    '''Temporarily change the dtype of newly created tensors

    Parameters default to 32-bit floats. Gradient checks and other numerical
    tests run inside ``with precision(np.float64):`` so that finite
    differences are meaningful.
    '''
    previous = active_dtype()
    _state.dtype = np.dtype(dtype).type
    try:
        yield
    finally:
        _state.dtype = previous


class Tensor(object):
    r'''N-dimensional array taking part in reverse-mode differentiation

    **Description**

        A Tensor wraps a :class:`numpy.ndarray` (``data``) plus an optional
        gradient slot (``grad``). Operations between tensors compute their
        value eagerly with numpy. When a :class:`Tape` is active on the
        current thread and at least one operand requires a gradient, the
        operation is appended to the tape together with a closure that maps
        the output gradient onto gradients of the inputs.

        Without an active tape nothing is recorded, which makes inference
        forward passes pure and safe to run from several threads.

    Example
    -------
    .. code-block:: python

        import numpy as np
        from pyPose6D.core import Tensor, Tape, backward

        x = Tensor(3.0,requires_grad=True)
        with Tape():
            y = x*x
        backward(y)
        x.grad   # 6.0

    '''
    __array_priority__ = 100

    def __init__(self,data,requires_grad=False,name=None,dtype=None):
        if isinstance(data,Tensor):
            data = data.data
        if dtype is None:
            dtype = active_dtype()
        self.data = np.asarray(data,dtype=dtype)
        self.grad = None
        self.requires_grad = bool(requires_grad)
        self.name = name
        self.node = None
        self.tape = None

    def __repr__(self):
        return '<Tensor{} shape:{} dtype:{} requires_grad:{}>'.format(
            '' if self.name is None else ' '+self.name,
            self.shape,self.data.dtype,self.requires_grad)

    @property
    def shape(self):
        return self.data.shape

    @property
    def ndim(self):
        return self.data.ndim

    @property
    def size(self):
        return self.data.size

    @property
    def dtype(self):
        return self.data.dtype

    @property
    def T(self):
        return ops.transpose(self)

    def numpy(self):
        return self.data

    def item(self):
        return self.data.item()

    def detach(self):
        '''Constant copy of this tensor with no link to the tape'''
        return Tensor(self.data.copy(),dtype=self.data.dtype)

    def zero_grad(self):
        self.grad = None

    def backward(self):
        backward(self)

    # arithmetic
    def __add__(self,other):
        return ops.add(self,other)

    def __radd__(self,other):
        return ops.add(other,self)

    def __sub__(self,other):
        return ops.sub(self,other)

    def __rsub__(self,other):
        return ops.sub(other,self)

    def __mul__(self,other):
        return ops.mul(self,other)

    def __rmul__(self,other):
        return ops.mul(other,self)

    def __truediv__(self,other):
        return ops.div(self,other)

    def __rtruediv__(self,other):
        return ops.div(other,self)

    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __neg__(self):
        return ops.neg(self)

    def __pow__(self,exponent):
        return ops.power(self,exponent)

    def __matmul__(self,other):
        return ops.matmul(self,other)

    def __rmatmul__(self,other):
        return ops.matmul(other,self)

    def __getitem__(self,index):
        return ops.getitem(self,index)

    # reductions and shape helpers
    def sum(self,axis=None,keepdims=False):
        return ops.sum(self,axis=axis,keepdims=keepdims)

    def mean(self,axis=None,keepdims=False):
        return ops.mean(self,axis=axis,keepdims=keepdims)

    def min(self,axis=None):
        return ops.min(self,axis=axis)

    def reshape(self,*shape):
        if len(shape) == 1 and isinstance(shape[0],(tuple,list)):
            shape = shape[0]
        return ops.reshape(self,shape)

    def transpose(self,*axes):
        if len(axes) == 1 and isinstance(axes[0],(tuple,list)):
            axes = axes[0]
        return ops.transpose(self,axes if axes else None)

    def relu(self):
        return ops.relu(self)

    def exp(self):
        return ops.exp(self)

    def log(self):
        return ops.log(self)

    def sqrt(self):
        return ops.sqrt(self)

    def abs(self):
        return ops.abs(self)


class _Record(object):
    __slots__ = ('op','inputs','output','vjp')

    def __init__(self,op,inputs,output,vjp):
        self.op = op
        self.inputs = inputs
        self.output = output
        self.vjp = vjp


class Tape(object):
    r'''Ordered record of differentiable operations

    **Description**

        Entering a Tape (``with Tape() as tape:``) makes it the active tape of
        the current thread. Operations are appended in execution order, which
        is a topological order of the computation graph, so the reverse pass
        simply walks the records backwards. The graph is rebuilt on every
        forward pass. Tapes must not be shared between threads.

    '''
    def __init__(self):
        self.records = []

    def __repr__(self):
        return '<Tape records:{}>'.format(len(self.records))

    def __len__(self):
        return len(self.records)

    def __enter__(self):
        if not hasattr(_state,'tapes'):
            _state.tapes = []
        _state.tapes.append(self)
        return self

    def __exit__(self,*exc):
        _state.tapes.pop()
        return False

    def record(self,op,inputs,output,vjp):
        output.node = len(self.records)
        output.tape = self
        self.records.append(_Record(op,inputs,output,vjp))

    def backward(self,loss):
        r'''Accumulate d(loss)/d(leaf) into the ``grad`` slot of every leaf

        Arguments
        ---------
        loss: Tensor
            Single-element tensor produced on this tape.

        Returns
        -------
        leaves: list of Tensor
            The leaf tensors that received a gradient, in first-seen order.

        Raises
        ------
        *NotScalar* if loss has more than one element.

        *ValueError* if loss was not recorded on this tape.
        '''
        if loss.data.size != 1:
            raise NotScalar('backward needs a single-element loss, got shape {}'.format(loss.shape))
        if loss.tape is not self:
            raise ValueError('Loss tensor was not recorded on this tape')

        grads = {loss.node:np.ones_like(loss.data)}
        leaves = []
        seen = set()
        for rec in reversed(self.records[:loss.node+1]):
            g = grads.pop(rec.output.node,None)
            if g is None:
                continue
            in_grads = rec.vjp(g)
            for t,gi in zip(rec.inputs,in_grads):
                if gi is None or not t.requires_grad:
                    continue
                gi = _unbroadcast(np.asarray(gi),t.shape).astype(t.data.dtype,copy=False)
                if t.tape is self:
                    if t.node in grads:
                        grads[t.node] = grads[t.node] + gi
                    else:
                        grads[t.node] = gi
                else:
                    t.grad = gi.copy() if t.grad is None else t.grad + gi
                    if id(t) not in seen:
                        seen.add(id(t))
                        leaves.append(t)
        return leaves


def _unbroadcast(grad,shape):
    '''Sum a broadcast gradient back down to `shape`'''
    if grad.shape == tuple(shape):
        return grad
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis,extent in enumerate(shape):
        if extent == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis,keepdims=True)
    return grad.reshape(shape)


def backward(loss):
    '''Run the reverse pass for `loss` on the tape that produced it

    Raises
    ------
    *NotScalar* if loss is not a single-element tensor.

    *ValueError* if loss was computed without an active tape or from
    inputs that do not require gradients.
    '''
    if loss.data.size != 1:
        raise NotScalar('backward needs a single-element loss, got shape {}'.format(loss.shape))
    if loss.tape is None:
        raise ValueError('Loss is not on a tape: run the forward pass inside "with Tape():"')
    return loss.tape.backward(loss)


from pyPose6D.core import ops
