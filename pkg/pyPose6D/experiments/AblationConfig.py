#!python
from __future__ import division,print_function
from collections import OrderedDict

from pyPose6D.core.Representation import Representation
from pyPose6D.core.Errors import InvalidArgument
from pyPose6D.models.RotEstConfig import RotEstConfig
from pyPose6D.models.TrainingConfig import TrainingConfig


class AblationConfig(object):
    r'''Settings of the keypoint representation by pose recovery grid

    **Variable Definitions**

        - `seeds`
            Every seed repeats the whole grid with fresh data and fresh
            RotEst weights

        - `representations`
            Keypoint layouts to compare (BB8 stands in for hand-picked
            keypoints)

        - `train_samples`, `test_samples`
            Rotation-estimator training pairs and evaluation poses per
            representation and seed

        - `noise_px`
            Standard deviation of the Gaussian noise on every keypoint

        - `outlier_fraction`, `outlier_px`
            Share of keypoints displaced by an additional Gaussian shift of
            standard deviation `outlier_px`; applied to training and
            evaluation keypoints alike

        - `head_noise_px`, `head_depth_noise`
            Errors of the simulated translation head: pixel noise on the
            projected center and relative noise on the depth

        - `rotest`, `training`
            Estimator shape and optimizer settings (the representation of
            `rotest` is replaced for every row of the grid)
    '''
    def __init__(self,seeds=(0,1,2,3,4),representations=('BB8','FPS8','IBB32'),train_samples=5000,
                 test_samples=500,noise_px=1.0,outlier_fraction=0.1,outlier_px=15.0,head_noise_px=1.0,
                 head_depth_noise=0.01,rotest=None,training=None,symmetric=False):
        self.seeds = tuple(int(s) for s in seeds)
        self.representations = tuple(Representation.from_string(r) if isinstance(r,str) else r
                                     for r in representations)
        self.train_samples = int(train_samples)
        self.test_samples = int(test_samples)
        self.noise_px = float(noise_px)
        self.outlier_fraction = float(outlier_fraction)
        self.outlier_px = float(outlier_px)
        self.head_noise_px = float(head_noise_px)
        self.head_depth_noise = float(head_depth_noise)
        self.rotest = rotest or RotEstConfig(hidden=256,layers=4,dropout=0.0)
        self.training = training or TrainingConfig(epochs=10,batch_size=32,lr=1e-3)
        self.symmetric = bool(symmetric)

        if not self.seeds or not self.representations:
            raise InvalidArgument('Ablation needs at least one seed and one representation')
        if self.train_samples < 1 or self.test_samples < 1:
            raise InvalidArgument('Ablation needs positive sample counts, got {} and {}'.format(
                self.train_samples,self.test_samples))
        if not (0.0 <= self.outlier_fraction <= 1.0):
            raise InvalidArgument('outlier_fraction must be in [0,1], got {}'.format(self.outlier_fraction))
        if min(self.noise_px,self.outlier_px,self.head_noise_px,self.head_depth_noise) < 0:
            raise InvalidArgument('Noise levels must be non-negative')

    def __repr__(self):
        return '<AblationConfig seeds:{} {} noise:{}px outliers:{}>'.format(
            len(self.seeds),'/'.join(r.name for r in self.representations),self.noise_px,self.outlier_fraction)

    def rotest_for(self,representation):
        d = self.rotest.to_dict()
        d['representation'] = representation.name
        return RotEstConfig.from_dict(d)

    def training_for(self,seed):
        d = self.training.to_dict()
        d['seed'] = int(seed)
        return TrainingConfig.from_dict(d)

    def to_dict(self):
        return OrderedDict([('seeds',list(self.seeds)),
                            ('representations',[r.name for r in self.representations]),
                            ('train_samples',self.train_samples),
                            ('test_samples',self.test_samples),
                            ('noise_px',self.noise_px),
                            ('outlier_fraction',self.outlier_fraction),
                            ('outlier_px',self.outlier_px),
                            ('head_noise_px',self.head_noise_px),
                            ('head_depth_noise',self.head_depth_noise),
                            ('rotest',self.rotest.to_dict()),
                            ('training',self.training.to_dict()),
                            ('symmetric',self.symmetric)])

    @classmethod
    def from_dict(cls,d):
        d = dict(d)
        if 'rotest' in d and isinstance(d['rotest'],dict):
            d['rotest'] = RotEstConfig.from_dict(d['rotest'])
        if 'training' in d and isinstance(d['training'],dict):
            d['training'] = TrainingConfig.from_dict(d['training'])
        return cls(**d)
