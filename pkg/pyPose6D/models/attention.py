#!python
r'''
Multi-head attention and the post-norm encoder/decoder layers of the toy
set-prediction transformer.

All inputs carry a leading batch axis: tokens are ``(B, L, d)``. Positional
encodings are added to queries and keys (never to values) at every layer.
'''
from __future__ import division,print_function
import numpy as np

from pyPose6D.core import ops
from pyPose6D.core.Errors import InvalidArgument,ShapeMismatch
from pyPose6D.models.Module import Module
from pyPose6D.models.layers import Linear,MLP,LayerNorm


class MultiHeadAttention(Module):
    r'''Scaled dot-product attention over `heads` subspaces

    **Mathematical Definition**

    .. math::

        \mathrm{head}_h = \mathrm{softmax}\left(\frac{Q_h K_h^T}{\sqrt{d/H}}\right) V_h

    **Description**

        After each forward pass ``attention`` holds the weights averaged
        over heads as a ``(B, L_q, L_k)`` array whose rows sum to 1.
    '''
    def __init__(self,dim,heads,rng):
        super(MultiHeadAttention,self).__init__()
        if dim % heads != 0:
            raise InvalidArgument('Embedding size {} is not divisible by {} heads'.format(dim,heads))
        self.dim = int(dim)
        self.heads = int(heads)
        self.query = Linear(dim,dim,rng)
        self.key = Linear(dim,dim,rng)
        self.value = Linear(dim,dim,rng)
        self.output = Linear(dim,dim,rng)
        self.attention = None

    def __repr__(self):
        return '<MultiHeadAttention d:{} heads:{}>'.format(self.dim,self.heads)

    def _split(self,x):
        B,L,_ = x.shape
        return ops.transpose(ops.reshape(x,(B,L,self.heads,self.dim//self.heads)),(0,2,1,3))

    def forward(self,query,key,value):
        query,key,value = ops.as_tensor(query),ops.as_tensor(key),ops.as_tensor(value)
        for t in (query,key,value):
            if t.ndim != 3 or t.shape[-1] != self.dim:
                raise ShapeMismatch('Attention inputs must be (B,L,{}), got {}'.format(self.dim,t.shape))
        if key.shape[:2] != value.shape[:2] or query.shape[0] != key.shape[0]:
            raise ShapeMismatch('Attention batch/length mismatch: q {} k {} v {}'.format(query.shape,key.shape,value.shape))
        B,Lq,_ = query.shape
        q = self._split(self.query(query))
        k = self._split(self.key(key))
        v = self._split(self.value(value))
        scores = ops.matmul(q,ops.transpose(k,(0,1,3,2)))/np.sqrt(self.dim/self.heads)
        weights = ops.softmax(scores,axis=-1)
        averaged = weights.data.astype(np.float64).mean(axis=1)
        self.attention = averaged/averaged.sum(axis=-1,keepdims=True)
        mixed = ops.reshape(ops.transpose(ops.matmul(weights,v),(0,2,1,3)),(B,Lq,self.dim))
        return self.output(mixed)


class EncoderLayer(Module):
    '''Self-attention and feedforward blocks, each followed by residual add and LayerNorm'''
    def __init__(self,dim,heads,feedforward,rng,dropout=0.0,dropout_rng=None):
        super(EncoderLayer,self).__init__()
        self.self_attention = MultiHeadAttention(dim,heads,rng)
        self.norm1 = LayerNorm(dim)
        self.ffn = MLP([dim,feedforward,dim],rng,dropout,dropout_rng)
        self.norm2 = LayerNorm(dim)
        self.dropout = float(dropout)
        self.dropout_rng = dropout_rng

    def _drop(self,x):
        return ops.dropout(x,self.dropout,self.training,self.dropout_rng)

    def forward(self,x,pos):
        qk = x + pos
        x = self.norm1(x + self._drop(self.self_attention(qk,qk,x)))
        return self.norm2(x + self._drop(self.ffn(x)))


class DecoderLayer(Module):
    '''Query self-attention, cross-attention to the encoder memory, feedforward'''
    def __init__(self,dim,heads,feedforward,rng,dropout=0.0,dropout_rng=None):
        super(DecoderLayer,self).__init__()
        self.self_attention = MultiHeadAttention(dim,heads,rng)
        self.norm1 = LayerNorm(dim)
        self.cross_attention = MultiHeadAttention(dim,heads,rng)
        self.norm2 = LayerNorm(dim)
        self.ffn = MLP([dim,feedforward,dim],rng,dropout,dropout_rng)
        self.norm3 = LayerNorm(dim)
        self.dropout = float(dropout)
        self.dropout_rng = dropout_rng

    def _drop(self,x):
        return ops.dropout(x,self.dropout,self.training,self.dropout_rng)

    def forward(self,tgt,memory,pos,query_pos):
        qk = tgt + query_pos
        tgt = self.norm1(tgt + self._drop(self.self_attention(qk,qk,tgt)))
        tgt = self.norm2(tgt + self._drop(self.cross_attention(tgt+query_pos,memory+pos,memory)))
        return self.norm3(tgt + self._drop(self.ffn(tgt)))


def sinusoidal_positions(h,w,d,temperature=10000.0):
    r'''Fixed 2D sine/cosine encodings of an ``h x w`` token grid

    **Description**

        The first ``d/2`` channels encode the row index and the last ``d/2``
        the column index. Within each half, channel ``j`` uses frequency
        ``temperature**(-2*(j//2)/(d/2))``; even channels hold the sine and
        odd channels the cosine. Positions are the raw integer indices, so
        cell (0,0) has every sine channel 0 and every cosine channel 1.

    Returns
    -------
    positions: np.ndarray, (h*w, d)
        Row ``y*w + x`` belongs to cell (y, x).

    Raises
    ------
    *InvalidArgument* if `d` is odd or the grid is empty.
    '''
    if d % 2 != 0 or d < 2:
        raise InvalidArgument('Positional encoding size must be even, got {}'.format(d))
    if h < 1 or w < 1:
        raise InvalidArgument('Empty token grid {}x{}'.format(h,w))
    half = d//2
    j = np.arange(half)
    freq = temperature**(-2.0*(j//2)/half)

    def encode(index):
        angles = index[:,None]*freq[None,:]
        return np.where(j % 2 == 0,np.sin(angles),np.cos(angles))

    ys,xs = np.meshgrid(np.arange(h,dtype=np.float64),np.arange(w,dtype=np.float64),indexing='ij')
    return np.concatenate([encode(ys.ravel()),encode(xs.ravel())],axis=1)
