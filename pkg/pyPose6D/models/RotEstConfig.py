#!python
from __future__ import division,print_function
from collections import OrderedDict

from pyPose6D.core.Representation import Representation
from pyPose6D.core.Errors import InvalidArgument


class RotEstConfig(object):
    r'''Shape of the keypoint-to-rotation regressor

    **Variable Definitions**

        - `representation`
            Keypoint layout of the input; the input size is twice its
            keypoint count (64 for IBB32)

        - `hidden`
            Width of the hidden layers (default 1024; 128 keeps toy runs fast)

        - `layers`
            Number of fully connected layers (default 6)

        - `dropout`
            Probability applied after every hidden activation while
            training (default 0.5)

        - `loss`
            ``'points'`` for the model-point rotation loss on the unit
            cuboid cloud or ``'rot6d'`` for a direct L1 on the 6D code
    '''
    output_dim = 6
    losses = ('points','rot6d')

    def __init__(self,representation=Representation.IBB32,hidden=1024,layers=6,dropout=0.5,loss='points'):
        if isinstance(representation,str):
            representation = Representation.from_string(representation)
        self.representation = representation
        self.hidden = int(hidden)
        self.layers = int(layers)
        self.dropout = float(dropout)
        self.loss = str(loss)
        if self.hidden < 1:
            raise InvalidArgument('RotEst hidden size must be positive, got {}'.format(self.hidden))
        if self.layers < 2:
            raise InvalidArgument('RotEst needs at least 2 layers, got {}'.format(self.layers))
        if not (0.0 <= self.dropout < 1.0):
            raise InvalidArgument('Dropout must be in [0,1), got {}'.format(self.dropout))
        if self.loss not in self.losses:
            raise InvalidArgument('RotEst loss must be one of {}, got {}'.format(self.losses,self.loss))

    def __repr__(self):
        return '<RotEstConfig {} in:{} hidden:{} layers:{} dropout:{}>'.format(
            self.representation.name,self.input_dim,self.hidden,self.layers,self.dropout)

    @property
    def input_dim(self):
        return 2*self.representation.count

    def sizes(self):
        return [self.input_dim] + [self.hidden]*(self.layers-1) + [self.output_dim]

    def to_dict(self):
        return OrderedDict([('representation',self.representation.name),('hidden',self.hidden),
                            ('layers',self.layers),('dropout',self.dropout),('loss',self.loss)])

    @classmethod
    def from_dict(cls,d):
        return cls(**d)
