#!python
'''
This module provides the base machinery shared by the rest of pyPose6D: the
reverse-mode :class:`Tensor`/:class:`Tape` pair and its operations, the AdamW
optimizer, named random streams, per-class tables, the keypoint
:class:`Representation` enumeration and the library's exception types.
'''
from pyPose6D.core.Errors import *
from pyPose6D.core.Tensor import Tensor,Tape,backward,precision,active_dtype,active_tape
from pyPose6D.core import ops
from pyPose6D.core.AdamW import OptimizerState,clip_and_step,clip_gradients,global_norm
from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Representation import Representation
from pyPose6D.core.ObjectTable import ObjectTable
