#!python
r'''
Basic layers: affine maps, multilayer perceptrons and layer normalization.

Weights are drawn from the ``'init'`` stream handed to the constructor,
uniformly in :math:`\pm\sqrt{1/fan_{in}}` (biases too).
'''
from __future__ import division,print_function
import numpy as np

from pyPose6D.core import ops
from pyPose6D.core.Errors import InvalidArgument,ShapeMismatch
from pyPose6D.models.Module import Module


class Linear(Module):
    '''y = x W + b over the last axis'''
    def __init__(self,fan_in,fan_out,rng):
        super(Linear,self).__init__()
        if fan_in < 1 or fan_out < 1:
            raise InvalidArgument('Linear needs positive sizes, got {}->{}'.format(fan_in,fan_out))
        self.fan_in = int(fan_in)
        self.fan_out = int(fan_out)
        bound = np.sqrt(1.0/fan_in)
        self.parameter('weight',rng.uniform(-bound,bound,(fan_in,fan_out)))
        self.parameter('bias',rng.uniform(-bound,bound,(fan_out,)))

    def __repr__(self):
        return '<Linear {}->{}>'.format(self.fan_in,self.fan_out)

    def forward(self,x):
        x = ops.as_tensor(x)
        if x.shape[-1] != self.fan_in:
            raise ShapeMismatch('Linear expects {} input features, got shape {}'.format(self.fan_in,x.shape))
        if x.ndim == 1:
            return ops.reshape(ops.matmul(ops.reshape(x,(1,-1)),self.weight),(self.fan_out,)) + self.bias
        return ops.matmul(x,self.weight) + self.bias


class MLP(Module):
    r'''Stack of Linear layers with ReLU (and optional dropout) in between

    Arguments
    ---------
    sizes: list of int
        ``[in, hidden..., out]``; ``len(sizes)-1`` Linear layers.

    rng: numpy.random.Generator
        Initialization stream.

    dropout: float
        Probability used after every hidden activation while training.

    dropout_rng: numpy.random.Generator, *optional*
        The ``'dropout'`` stream; required when `dropout` > 0.
    '''
    def __init__(self,sizes,rng,dropout=0.0,dropout_rng=None):
        super(MLP,self).__init__()
        if len(sizes) < 2:
            raise InvalidArgument('MLP needs at least an input and an output size')
        if dropout > 0 and dropout_rng is None:
            raise InvalidArgument('MLP with dropout needs a dropout stream')
        self.sizes = [int(s) for s in sizes]
        self.dropout = float(dropout)
        self.dropout_rng = dropout_rng
        self.layers = [Linear(a,b,rng) for a,b in zip(self.sizes[:-1],self.sizes[1:])]

    def __repr__(self):
        return '<MLP {} dropout:{}>'.format('-'.join(str(s) for s in self.sizes),self.dropout)

    def forward(self,x):
        for i,layer in enumerate(self.layers):
            x = layer(x)
            if i < len(self.layers)-1:
                x = ops.relu(x)
                x = ops.dropout(x,self.dropout,self.training,self.dropout_rng)
        return x


class LayerNorm(Module):
    def __init__(self,dim,eps=1e-5):
        super(LayerNorm,self).__init__()
        self.eps = eps
        self.parameter('gamma',np.ones(dim))
        self.parameter('beta',np.zeros(dim))

    def __repr__(self):
        return '<LayerNorm {}>'.format(self.gamma.shape[0])

    def forward(self,x):
        return ops.layer_norm(x,self.gamma,self.beta,self.eps)
