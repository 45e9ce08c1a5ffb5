#!python
r'''
pyPose6D estimates the 6D pose (rotation and translation) of objects in an
image by set prediction. A model emits a fixed-size set of N predictions,
each carrying a class distribution over :math:`C` classes plus the no-object
class :math:`\varnothing`, a 2D box, a translation code and a set of 2D
keypoints. Predictions are matched one-to-one to the groundtruth by

.. math::

    \hat{\sigma} = \underset{\sigma}{\arg\min} \sum_{i} \mathcal{L}_{match}(y_i, \hat{y}_{\sigma(i)})

and the matched pairs are supervised with class, box, keypoint and pose
losses. The rotation of each object is recovered either from the keypoints
by EPnP or by a learned keypoint-to-rotation regressor.

The :py:mod:`pyPose6D.core` module holds the reverse-mode differentiation
engine, the optimizer, named random streams and shared data structures.

The :py:mod:`pyPose6D.geometry` module provides poses, cameras, cuboids,
the keypoint representations (box corners, farthest-point samples and
interpolated bounding boxes) and projective helpers.

The :py:mod:`pyPose6D.matching` module builds matching costs and solves the
optimal assignment between predicted and groundtruth sets.

The :py:mod:`pyPose6D.losses` module provides every differentiable loss,
from the class likelihood to the full set-prediction loss.

The :py:mod:`pyPose6D.models` module provides the small transformer, the
rotation regressor, their configs, training loops and checkpoints.

The :py:mod:`pyPose6D.pnp` module recovers poses from 2D-3D
correspondences.

The :py:mod:`pyPose6D.metrics` module scores pose estimates with ADD,
ADD-S, their AUC and recall.

The :py:mod:`pyPose6D.io` module reads and writes BOP-style datasets,
meshes and result files and generates synthetic scenes.

The :py:mod:`pyPose6D.experiments` module holds the gradient check suite
and the representation ablation.

The :py:mod:`pyPose6D.util` module provides unit conversion and run
configuration helpers.
'''
from pyPose6D.core.Errors import *
from pyPose6D.core.Tensor import Tensor,Tape,backward,precision
from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Representation import Representation
from pyPose6D.core.ObjectTable import ObjectTable
from pyPose6D.core.AdamW import OptimizerState

from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.Cuboid import Cuboid
from pyPose6D.geometry.KeypointSet import KeypointSet3D,KeypointSet2D
from pyPose6D.geometry.rotation import rot6d_to_matrix,gram_schmidt,geodesic_distance,random_rotation
from pyPose6D.geometry.project import project
from pyPose6D.geometry.fps_sample import fps_sample
from pyPose6D.geometry.generate_ibb import generate_ibb,keypoints_for
from pyPose6D.geometry.cross_ratio import cross_ratio_sq
from pyPose6D.geometry.translation import TranslationCode,decode_translation,encode_translation

from pyPose6D.matching.TargetTuple import TargetTuple
from pyPose6D.matching.PredictionTuple import PredictionTuple
from pyPose6D.matching.PredictionSet import PredictionSet
from pyPose6D.matching.hungarian import hungarian
from pyPose6D.matching.match_sets import match_sets

from pyPose6D.losses.LossWeights import LossWeights
from pyPose6D.losses.hungarian_loss import hungarian_loss

from pyPose6D.models.RotEst import RotEst
from pyPose6D.models.RotEstConfig import RotEstConfig
from pyPose6D.models.ToyTransformer import ToyTransformer
from pyPose6D.models.ToyTransformerConfig import ToyTransformerConfig
from pyPose6D.models.TrainingConfig import TrainingConfig
from pyPose6D.models.Checkpoint import Checkpoint
from pyPose6D.models.train_rotest import train_rotest
from pyPose6D.models.train_toy import train_toy

from pyPose6D.pnp.Correspondences import Correspondences
from pyPose6D.pnp.RansacConfig import RansacConfig
from pyPose6D.pnp.epnp import epnp
from pyPose6D.pnp.ransac_pnp import ransac_pnp

from pyPose6D.metrics.EvalRecord import EvalRecord
from pyPose6D.metrics.MetricReport import MetricReport
from pyPose6D.metrics.evaluate import evaluate

from pyPose6D.io.SyntheticDataset import SyntheticDataset

from pyPose6D.experiments.AblationConfig import AblationConfig
from pyPose6D.experiments.ablate import ablate
from pyPose6D.experiments.gradcheck import run_gradcheck

from pyPose6D import core
from pyPose6D import geometry
from pyPose6D import matching
from pyPose6D import losses
from pyPose6D import models
from pyPose6D import pnp
from pyPose6D import metrics
from pyPose6D import io
from pyPose6D import experiments
from pyPose6D import util

from pyPose6D.version import *

def test(slow=False):
    r"""
    Run all tests using pytest.

    Set `slow` to include the acceptance-length training runs (same as
    exporting ``PYPOSE6D_SLOW_TESTS=1``).
    """
    import os
    import pytest
    if slow:
        os.environ['PYPOSE6D_SLOW_TESTS'] = '1'
    path = os.path.split(__file__)[0]
    return pytest.main(['-x',path])
