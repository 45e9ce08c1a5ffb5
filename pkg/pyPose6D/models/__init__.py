#!python
r'''
Trainable models built on :mod:`pyPose6D.core`: the keypoint-to-rotation
regressor (RotEst), and a small encoder-decoder transformer that predicts a
fixed-size set of objects (class, box, translation code, keypoints and
optionally a rotation code) from a silhouette raster. Also holds the
training loops and the checkpoint format.
'''
from pyPose6D.models.Module import Module
from pyPose6D.models.layers import Linear,MLP,LayerNorm
from pyPose6D.models.attention import MultiHeadAttention,EncoderLayer,DecoderLayer,sinusoidal_positions
from pyPose6D.models.RotEstConfig import RotEstConfig
from pyPose6D.models.ToyTransformerConfig import ToyTransformerConfig
from pyPose6D.models.TrainingConfig import TrainingConfig
from pyPose6D.models.RotEst import RotEst
from pyPose6D.models.ToyTransformer import ToyTransformer,patchify
from pyPose6D.models.Checkpoint import Checkpoint
from pyPose6D.models.make_rotest_dataset import make_rotest_dataset
from pyPose6D.models.train_rotest import train_rotest,rotest_loss,median_geodesic_error
from pyPose6D.models.train_toy import train_toy,batch_loss,set_accuracy
