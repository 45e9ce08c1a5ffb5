#!python
from __future__ import division,print_function
from collections import OrderedDict
import warnings

import numpy as np

from pyPose6D.core.Errors import ShapeMismatch,InvalidArgument


class OptimizerState(object):
    r'''AdamW moments, step counter and hyperparameters

    **Description**

        Holds the per-parameter first and second moment accumulators of the
        Adam update together with the decoupled weight decay, gradient clip
        norm and a step-decay learning rate schedule: after
        ``lr_drop_step`` steps the learning rate is divided by ``lr_drop``.
        Accumulators are created lazily on the first step so that their
        shapes always match the parameters they follow.

    Example
    -------
    .. code-block:: python

        import pyPose6D

        state = pyPose6D.OptimizerState(lr=2e-4,clip_norm=0.1)
        params = model.parameters()
        ...
        pyPose6D.clip_and_step(state,params,{k:p.grad for k,p in params.items()})

    '''
    def __init__(self,lr=2e-4,weight_decay=1e-4,clip_norm=0.1,beta1=0.9,beta2=0.999,
                 eps=1e-8,lr_drop_step=None,lr_drop=10.0):
        if lr <= 0:
            raise InvalidArgument('Learning rate must be positive, got {}'.format(lr))
        if weight_decay < 0 or clip_norm is not None and clip_norm <= 0:
            raise InvalidArgument('weight_decay must be >= 0 and clip_norm > 0')
        if not (0 <= beta1 < 1 and 0 <= beta2 < 1):
            raise InvalidArgument('Adam betas must lie in [0,1)')
        self.lr = float(lr)
        self.weight_decay = float(weight_decay)
        self.clip_norm = None if clip_norm is None else float(clip_norm)
        self.beta1 = float(beta1)
        self.beta2 = float(beta2)
        self.eps = float(eps)
        self.lr_drop_step = None if lr_drop_step is None else int(lr_drop_step)
        self.lr_drop = float(lr_drop)
        self.step = 0
        self.m = OrderedDict()
        self.v = OrderedDict()

    def __repr__(self):
        return '<OptimizerState step:{} lr:{} wd:{} clip:{}>'.format(
            self.step,self.current_lr(),self.weight_decay,self.clip_norm)

    def current_lr(self):
        '''Learning rate used by the next step'''
        if self.lr_drop_step is not None and self.step >= self.lr_drop_step:
            return self.lr/self.lr_drop
        return self.lr

    def hyperparameters(self):
        return {'lr':self.lr,'weight_decay':self.weight_decay,'clip_norm':self.clip_norm,
                'beta1':self.beta1,'beta2':self.beta2,'eps':self.eps,
                'lr_drop_step':self.lr_drop_step,'lr_drop':self.lr_drop}


def global_norm(grads):
    '''L2 norm over all gradient blocks jointly (64-bit, fixed order)'''
    total = 0.0
    for g in grads.values():
        g64 = np.asarray(g,dtype=np.float64)
        total += float(np.dot(g64.ravel(),g64.ravel()))
    return np.sqrt(total)


def clip_gradients(grads,max_norm):
    r'''Scale all gradient blocks by min(1, max_norm/||g||)

    Returns
    -------
    clipped: OrderedDict
        Scaled gradients, same keys and order as `grads`.

    norm: float
        The global norm before clipping.
    '''
    norm = global_norm(grads)
    if max_norm is None or norm == 0.0 or norm <= max_norm:
        scale = 1.0
    else:
        scale = max_norm/norm
    clipped = OrderedDict()
    for k,g in grads.items():
        g = np.asarray(g)
        clipped[k] = g if scale == 1.0 else (g*scale).astype(g.dtype)
    return clipped,norm


def clip_and_step(state,params,grads):
    r'''Clip gradients by global norm, then apply one AdamW update in place

    **Mathematical Definition**

    With clipped gradient :math:`g` and learning rate :math:`\eta`

    .. math::

        m \leftarrow \beta_1 m + (1-\beta_1) g \qquad
        v \leftarrow \beta_2 v + (1-\beta_2) g^2

    .. math::

        \theta \leftarrow \theta - \eta \lambda \theta
                 - \eta \frac{\hat{m}}{\sqrt{\hat{v}} + \epsilon}

    where :math:`\hat{m}, \hat{v}` are the bias-corrected moments and
    :math:`\lambda` is the decoupled weight decay.

    Arguments
    ---------
    state: OptimizerState
        Moments and hyperparameters; updated in place.

    params: dict of name -> Tensor
        Parameters to update. Their ``data`` arrays are modified in place.

    grads: dict of name -> np.ndarray
        Gradients with the same keys as `params`. A missing or None entry is
        treated as a zero gradient.

    Returns
    -------
    params: dict
        The same mapping that was passed in.

    Raises
    ------
    *ShapeMismatch* if any gradient has a different shape from its parameter.
    '''
    full = OrderedDict()
    for name,p in params.items():
        g = grads.get(name)
        if g is None:
            g = np.zeros_like(p.data)
        g = np.asarray(g)
        if g.shape != p.data.shape:
            raise ShapeMismatch('Gradient for {} has shape {}, parameter has {}'.format(name,g.shape,p.data.shape))
        full[name] = g

    clipped,norm = clip_gradients(full,state.clip_norm)
    if not np.isfinite(norm):
        warnings.warn('Non-finite gradient norm at step {}; skipping update'.format(state.step))
        return params

    lr = state.current_lr()
    state.step += 1
    t = state.step
    bc1 = 1.0 - state.beta1**t
    bc2 = 1.0 - state.beta2**t
    for name,p in params.items():
        g = clipped[name].astype(np.float64)
        if name not in state.m:
            state.m[name] = np.zeros(p.data.shape,dtype=np.float64)
            state.v[name] = np.zeros(p.data.shape,dtype=np.float64)
        m = state.m[name] = state.beta1*state.m[name] + (1.0-state.beta1)*g
        v = state.v[name] = state.beta2*state.v[name] + (1.0-state.beta2)*g*g
        theta = p.data.astype(np.float64)
        theta = theta - lr*state.weight_decay*theta
        theta = theta - lr*(m/bc1)/(np.sqrt(v/bc2)+state.eps)
        p.data[...] = theta.astype(p.data.dtype)
    return params
