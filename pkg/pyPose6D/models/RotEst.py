#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core import ops
from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Errors import ShapeMismatch
from pyPose6D.geometry.rotation import rot6d_to_matrix
from pyPose6D.models.Module import Module
from pyPose6D.models.layers import MLP
from pyPose6D.models.RotEstConfig import RotEstConfig


class RotEst(Module):
    r'''Regress a 6D rotation code from 2D keypoints

    **Description**

        A stack of fully connected layers with ReLU activations maps the
        flattened, image-normalized keypoints ``(u0,v0,u1,v1,...)`` of one
        object to the first two columns of its rotation matrix. Dropout
        follows every hidden activation while training; in evaluation mode
        the forward pass is deterministic.

    Example
    -------
    .. code-block:: python

        import pyPose6D

        model = pyPose6D.RotEst(pyPose6D.RotEstConfig(hidden=128),pyPose6D.RandomStreams(0))
        model.eval()
        R = model.rotations(kps.normalized(cam).as_vector())   # (1,3,3)

    '''
    def __init__(self,config=None,streams=None):
        super(RotEst,self).__init__()
        self.config = config or RotEstConfig()
        streams = streams or RandomStreams(0)
        self.mlp = MLP(self.config.sizes(),streams.stream('init'),self.config.dropout,streams.stream('dropout'))

    def __repr__(self):
        return '<RotEst {} parameters:{}>'.format(self.config,self.num_parameters())

    def forward(self,keypoints):
        r'''Rotation codes of a batch

        Arguments
        ---------
        keypoints: Tensor or np.ndarray, (B, 2K) or (2K,)

        Returns
        -------
        rot6d: Tensor, (B, 6)
        '''
        x = ops.as_tensor(keypoints)
        if x.ndim == 1:
            x = ops.reshape(x,(1,-1))
        if x.ndim != 2 or x.shape[1] != self.config.input_dim:
            raise ShapeMismatch('RotEst expects (B,{}) inputs, got {}'.format(self.config.input_dim,x.shape))
        return self.mlp(x)

    def rotations(self,keypoints):
        '''Detached (B,3,3) rotation matrices'''
        return np.stack([rot6d_to_matrix(r) for r in self.forward(keypoints).data])
