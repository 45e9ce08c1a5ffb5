#!python
from __future__ import division,print_function
from collections import OrderedDict

from pyPose6D.core.Representation import Representation
from pyPose6D.core.Errors import InvalidArgument


class ToyTransformerConfig(object):
    r'''Shape of the toy set-prediction transformer

    **Variable Definitions**

        - `raster`
            Input size (height, width); rasters are 3-channel

        - `patch`
            Patch edge in pixels (default 4)

        - `dim`
            Embedding size d (default 64)

        - `encoder_layers`, `decoder_layers`
            Number of layers (default 2 each)

        - `heads`
            Attention heads (default 4)

        - `queries`
            Set cardinality N (default 20)

        - `num_classes`
            Number of object classes C; the class head emits C+1 logits

        - `head_hidden`
            Hidden size of the three-layer prediction heads (default 256)

        - `feedforward`
            Hidden size of the feedforward block in every layer

        - `representation`
            Keypoint layout emitted by the keypoint head

        - `rotation_head`
            Emit 6D rotation codes (enables the pose loss)

        - `dropout`
            Dropout probability inside encoder and decoder layers
    '''
    def __init__(self,num_classes,raster=(32,32),patch=4,dim=64,encoder_layers=2,decoder_layers=2,heads=4,
                 queries=20,head_hidden=256,feedforward=128,representation=Representation.IBB32,
                 rotation_head=True,dropout=0.0):
        if isinstance(representation,str):
            representation = Representation.from_string(representation)
        self.num_classes = int(num_classes)
        self.raster = tuple(int(r) for r in raster)
        self.patch = int(patch)
        self.dim = int(dim)
        self.encoder_layers = int(encoder_layers)
        self.decoder_layers = int(decoder_layers)
        self.heads = int(heads)
        self.queries = int(queries)
        self.head_hidden = int(head_hidden)
        self.feedforward = int(feedforward)
        self.representation = representation
        self.rotation_head = bool(rotation_head)
        self.dropout = float(dropout)

        if self.num_classes < 1:
            raise InvalidArgument('Need at least one class, got {}'.format(self.num_classes))
        for name in ('patch','dim','heads','queries','head_hidden','feedforward'):
            if getattr(self,name) < 1:
                raise InvalidArgument('{} must be positive, got {}'.format(name,getattr(self,name)))
        if self.encoder_layers < 0 or self.decoder_layers < 1:
            raise InvalidArgument('Need >= 0 encoder layers and >= 1 decoder layer')
        if len(self.raster) != 2 or any(r % self.patch for r in self.raster):
            raise InvalidArgument('Raster {} is not divisible by patch size {}'.format(self.raster,self.patch))
        if self.dim % self.heads != 0:
            raise InvalidArgument('Embedding size {} is not divisible by {} heads'.format(self.dim,self.heads))
        if self.dim % 2 != 0:
            raise InvalidArgument('Embedding size must be even, got {}'.format(self.dim))
        if not (0.0 <= self.dropout < 1.0):
            raise InvalidArgument('Dropout must be in [0,1), got {}'.format(self.dropout))

    def __repr__(self):
        return '<ToyTransformerConfig C:{} N:{} d:{} layers:{}+{} heads:{} patch:{}>'.format(
            self.num_classes,self.queries,self.dim,self.encoder_layers,self.decoder_layers,self.heads,self.patch)

    @property
    def grid(self):
        '''Token grid (rows, columns)'''
        return self.raster[0]//self.patch,self.raster[1]//self.patch

    @property
    def tokens(self):
        return self.grid[0]*self.grid[1]

    def to_dict(self):
        return OrderedDict([('num_classes',self.num_classes),('raster',list(self.raster)),('patch',self.patch),
                            ('dim',self.dim),('encoder_layers',self.encoder_layers),
                            ('decoder_layers',self.decoder_layers),('heads',self.heads),
                            ('queries',self.queries),('head_hidden',self.head_hidden),
                            ('feedforward',self.feedforward),('representation',self.representation.name),
                            ('rotation_head',self.rotation_head),('dropout',self.dropout)])

    @classmethod
    def from_dict(cls,d):
        return cls(**d)
