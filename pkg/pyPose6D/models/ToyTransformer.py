#!python
from __future__ import division,print_function
from collections import OrderedDict

import numpy as np

from pyPose6D.core import ops
from pyPose6D.core.Tensor import Tensor
from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Errors import ShapeMismatch
from pyPose6D.matching.PredictionSet import PredictionSet
from pyPose6D.models.Module import Module
from pyPose6D.models.layers import Linear,MLP
from pyPose6D.models.attention import EncoderLayer,DecoderLayer,sinusoidal_positions
from pyPose6D.models.ToyTransformerConfig import ToyTransformerConfig


def patchify(rasters,raster_size,patch):
    r'''Cut (B,H,W,3) rasters into flattened patches

    Rasters larger than `raster_size` by an integer factor are first
    reduced by block averaging.

    Returns
    -------
    patches: np.ndarray, (B, tokens, patch*patch*3)
    '''
    rasters = np.asarray(rasters)
    if rasters.ndim == 3:
        rasters = rasters[None]
    if rasters.ndim != 4 or rasters.shape[-1] != 3:
        raise ShapeMismatch('Expected (B,H,W,3) rasters, got {}'.format(rasters.shape))
    B,H,W,_ = rasters.shape
    h,w = raster_size
    if H % h or W % w:
        raise ShapeMismatch('Raster {}x{} cannot be reduced to {}x{}'.format(H,W,h,w))
    if (H,W) != (h,w):
        rasters = rasters.reshape(B,h,H//h,w,W//w,3).mean(axis=(2,4))
    gh,gw = h//patch,w//patch
    patches = rasters.reshape(B,gh,patch,gw,patch,3).transpose(0,1,3,2,4,5)
    return patches.reshape(B,gh*gw,patch*patch*3)


class ToyTransformer(Module):
    r'''Encoder-decoder set predictor over silhouette rasters

    **Description**

        The raster is cut into patches, each patch is embedded linearly and
        the tokens run through post-norm encoder layers with fixed sine
        positions added to queries and keys. A decoder turns N learned
        object queries into N embeddings by alternating self-attention and
        cross-attention to the encoded tokens. Prediction heads are
        three-layer MLPs shared across queries:

        - class: C+1 logits, the last one is ∅
        - box: cxcywh through a logistic map
        - translation: (u,v) through a logistic map, depth through exp
        - keypoints: 2K normalized coordinates through a logistic map
        - rotation (optional): 6D code

        The head-averaged attention weights of the last forward pass are
        available from :meth:`attention_maps`.

    Example
    -------
    .. code-block:: python

        import pyPose6D

        cfg = pyPose6D.ToyTransformerConfig(num_classes=5)
        model = pyPose6D.ToyTransformer(cfg,pyPose6D.RandomStreams(0)).eval()
        predictions = model(rasters)      # one PredictionSet per raster

    '''
    def __init__(self,config,streams=None):
        super(ToyTransformer,self).__init__()
        if not isinstance(config,ToyTransformerConfig):
            config = ToyTransformerConfig.from_dict(config)
        self.config = c = config
        streams = streams or RandomStreams(0)
        init = streams.stream('init')
        drop = streams.stream('dropout')

        self.embed = Linear(c.patch*c.patch*3,c.dim,init)
        self.encoder = [EncoderLayer(c.dim,c.heads,c.feedforward,init,c.dropout,drop) for _ in range(c.encoder_layers)]
        self.decoder = [DecoderLayer(c.dim,c.heads,c.feedforward,init,c.dropout,drop) for _ in range(c.decoder_layers)]
        bound = np.sqrt(1.0/c.dim)
        self.parameter('queries',init.uniform(-bound,bound,(c.queries,c.dim)))
        hidden = [c.dim,c.head_hidden,c.head_hidden]
        self.class_head = MLP(hidden+[c.num_classes+1],init)
        self.box_head = MLP(hidden+[4],init)
        self.translation_head = MLP(hidden+[3],init)
        self.keypoint_head = MLP(hidden+[2*c.representation.count],init)
        if c.rotation_head:
            self.rotation_head = MLP(hidden+[6],init)
        else:
            self.rotation_head = None
        self.positions = sinusoidal_positions(c.grid[0],c.grid[1],c.dim)

    def __repr__(self):
        return '<ToyTransformer {} parameters:{}>'.format(self.config,self.num_parameters())

    def encode(self,rasters):
        '''Encoded tokens (B, tokens, d)'''
        c = self.config
        x = self.embed(patchify(rasters,c.raster,c.patch))
        for layer in self.encoder:
            x = layer(x,self.positions)
        return x

    def decode(self,memory):
        '''Query embeddings (B, N, d)'''
        B = memory.shape[0]
        tgt = Tensor(np.zeros((B,self.config.queries,self.config.dim)))
        for layer in self.decoder:
            tgt = layer(tgt,memory,self.positions,self.queries)
        return tgt

    def heads(self,embeddings):
        r'''Per-image prediction sets from query embeddings

        Returns
        -------
        predictions: list of PredictionSet, one per batch entry
        '''
        logits = self.class_head(embeddings)
        boxes = ops.sigmoid(self.box_head(embeddings))
        t = self.translation_head(embeddings)
        translation = ops.concat([ops.sigmoid(t[...,0:2]),ops.exp(t[...,2:3])],axis=-1)
        keypoints = ops.sigmoid(self.keypoint_head(embeddings))
        rot6d = None if self.rotation_head is None else self.rotation_head(embeddings)
        out = []
        for b in range(embeddings.shape[0]):
            out.append(PredictionSet(logits[b],boxes[b],translation[b],keypoints[b],
                                     None if rot6d is None else rot6d[b],self.config.representation))
        return out

    def forward(self,rasters):
        return self.heads(self.decode(self.encode(rasters)))

    def attention_maps(self):
        r'''Head-averaged attention weights of the last forward pass

        Returns
        -------
        maps: OrderedDict
            ``'encoder.<i>.self'`` -> (B, tokens, tokens) and
            ``'decoder.<i>.self'`` -> (B, N, N),
            ``'decoder.<i>.cross'`` -> (B, N, tokens)
        '''
        maps = OrderedDict()
        for i,layer in enumerate(self.encoder):
            maps['encoder.{}.self'.format(i)] = layer.self_attention.attention
        for i,layer in enumerate(self.decoder):
            maps['decoder.{}.self'.format(i)] = layer.self_attention.attention
            maps['decoder.{}.cross'.format(i)] = layer.cross_attention.attention
        return maps
