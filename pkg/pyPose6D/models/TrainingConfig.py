#!python
from __future__ import division,print_function
from collections import OrderedDict

from pyPose6D.core.AdamW import OptimizerState
from pyPose6D.core.Errors import InvalidArgument

#: fraction of the steps after which the learning rate drops tenfold
LR_DROP_FRACTION = 271.0/335.0


class TrainingConfig(object):
    r'''Optimization settings shared by the training loops

    **Variable Definitions**

        - `epochs`, `batch_size`

        - `lr`
            Initial AdamW learning rate (default 2e-4)

        - `weight_decay`
            Decoupled weight decay (default 1e-4)

        - `clip_norm`
            Maximal global gradient norm (default 0.1)

        - `lr_drop_fraction`
            The learning rate is divided by 10 once this fraction of all
            steps is done (default 271/335); ``None`` disables the drop

        - `seed`
            Run seed; initialization, dropout and shuffling use their own
            streams derived from it
    '''
    def __init__(self,epochs=10,batch_size=8,lr=2e-4,weight_decay=1e-4,clip_norm=0.1,
                 lr_drop_fraction=LR_DROP_FRACTION,seed=0,verbose=False):
        self.epochs = int(epochs)
        self.batch_size = int(batch_size)
        self.lr = float(lr)
        self.weight_decay = float(weight_decay)
        self.clip_norm = None if clip_norm is None else float(clip_norm)
        self.lr_drop_fraction = None if lr_drop_fraction is None else float(lr_drop_fraction)
        self.seed = int(seed)
        self.verbose = bool(verbose)
        if self.epochs < 0 or self.batch_size < 1:
            raise InvalidArgument('Need epochs >= 0 and batch_size >= 1, got {} and {}'.format(self.epochs,self.batch_size))
        if self.lr_drop_fraction is not None and not (0.0 < self.lr_drop_fraction <= 1.0):
            raise InvalidArgument('lr_drop_fraction must be in (0,1], got {}'.format(self.lr_drop_fraction))

    def __repr__(self):
        return '<TrainingConfig epochs:{} batch:{} lr:{} seed:{}>'.format(self.epochs,self.batch_size,self.lr,self.seed)

    def steps_per_epoch(self,samples):
        return -(-int(samples)//self.batch_size)

    def optimizer(self,samples):
        '''Fresh OptimizerState with the drop step resolved for `samples` per epoch'''
        drop = None
        if self.lr_drop_fraction is not None:
            drop = int(self.lr_drop_fraction*self.epochs*self.steps_per_epoch(samples))
        return OptimizerState(lr=self.lr,weight_decay=self.weight_decay,clip_norm=self.clip_norm,lr_drop_step=drop)

    def to_dict(self):
        return OrderedDict([('epochs',self.epochs),('batch_size',self.batch_size),('lr',self.lr),
                            ('weight_decay',self.weight_decay),('clip_norm',self.clip_norm),
                            ('lr_drop_fraction',self.lr_drop_fraction),('seed',self.seed)])

    @classmethod
    def from_dict(cls,d):
        return cls(**d)
