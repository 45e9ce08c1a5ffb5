#!python
import unittest
import numpy as np
import pandas as pd
np.set_printoptions(precision=4)

from pyPose6D.core.Representation import Representation
from pyPose6D.core.Errors import InvalidArgument
from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.models.RotEstConfig import RotEstConfig
from pyPose6D.models.TrainingConfig import TrainingConfig
from pyPose6D.experiments.AblationConfig import AblationConfig
from pyPose6D.geometry.Cuboid import Cuboid
from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.rotation import rotation_about
from pyPose6D.metrics.add_error import add_error
from pyPose6D.metrics.auc import auc
from pyPose6D.metrics.recall_at import recall_at
from pyPose6D.experiments.ablate import run_ablation,ablation_table,corrupt,summarize,METHODS,COLUMNS


def tiny_config(**kw):
    settings = dict(seeds=(0,),representations=('BB8','IBB32'),train_samples=64,test_samples=10,
                    rotest=RotEstConfig(hidden=16,layers=2,dropout=0.0),
                    training=TrainingConfig(epochs=1,batch_size=32,lr=1e-3))
    settings.update(kw)
    return AblationConfig(**settings)


class AblationConfig_TestCase(unittest.TestCase):
    def test_defaults(self):
        '''Does the default grid compare the three layouts over five seeds?'''
        config = AblationConfig()
        self.assertEqual(config.seeds,(0,1,2,3,4))
        self.assertEqual(config.representations,(Representation.BB8,Representation.FPS8,Representation.IBB32))

    def test_derived(self):
        '''Are per-cell estimator and optimizer settings derived from the grid?'''
        config = tiny_config()
        self.assertIs(config.rotest_for(Representation.IBB32).representation,Representation.IBB32)
        self.assertEqual(config.rotest_for(Representation.IBB32).hidden,16)
        self.assertEqual(config.training_for(3).seed,3)
        back = AblationConfig.from_dict(config.to_dict())
        self.assertEqual(back.to_dict(),config.to_dict())

    def test_errors(self):
        '''Are empty grids and bad noise levels refused?'''
        with self.assertRaises(InvalidArgument):
            tiny_config(seeds=())
        with self.assertRaises(InvalidArgument):
            tiny_config(test_samples=0)
        with self.assertRaises(InvalidArgument):
            tiny_config(outlier_fraction=1.5)
        with self.assertRaises(InvalidArgument):
            tiny_config(noise_px=-1.0)


class ablate_TestCase(unittest.TestCase):
    def test_corrupt(self):
        '''Are outliers applied with the requested probability?'''
        cam = CameraIntrinsics.default()
        rows = np.full((20,16),0.5)
        same = corrupt(rows,np.random.default_rng(0),0.0,15.0,cam)
        np.testing.assert_array_equal(same,rows)
        moved = corrupt(rows,np.random.default_rng(0),1.0,15.0,cam)
        self.assertTrue(np.all(np.any(moved.reshape(20,8,2) != 0.5,axis=-1)))
        self.assertEqual(rows[0,0],0.5)

    def test_summarize(self):
        '''Do the ADD(-S) columns follow the symmetric flag?'''
        cloud = Cuboid.unit().surface_grid(3)*0.05
        gt = [Pose.identity(1.0),Pose.identity(1.2),Pose.identity(0.9)]
        flipped = Pose(rotation_about('z',np.pi/2),[0.0,0.0,1.2])
        estimates = [gt[0],flipped,None]
        add = [0.0,add_error(gt[1],flipped,cloud),np.inf]
        plain = summarize(gt,estimates,cloud,0.1)
        self.assertAlmostEqual(plain['auc_add_s'],auc(add,0.1))
        self.assertAlmostEqual(plain['ar_add_s'],recall_at(add,0.1*0.1))
        self.assertEqual(plain['failures'],1)
        sym = summarize(gt,estimates,cloud,0.1,symmetric=True)
        self.assertAlmostEqual(sym['auc_add_s'],2.0/3.0)
        self.assertAlmostEqual(sym['ar_add_s'],2.0/3.0)
        self.assertLess(plain['auc_add_s'],sym['auc_add_s'])

    def test_run(self):
        '''Does a small grid produce one reproducible row per cell?'''
        runs = run_ablation(tiny_config())
        self.assertEqual(list(runs.columns),COLUMNS)
        self.assertEqual(len(runs),2*len(METHODS))
        self.assertEqual(list(runs['method'][:3]),list(METHODS))
        self.assertEqual(set(runs['representation']),{'BB8','IBB32'})
        self.assertTrue(np.all((runs['auc_add_s'] >= 0) & (runs['auc_add_s'] <= 1)))
        self.assertTrue(np.all((runs['ar_add_s'] >= 0) & (runs['ar_add_s'] <= 1)))
        pd.testing.assert_frame_equal(runs,run_ablation(tiny_config()))

        table = ablation_table(runs)
        self.assertEqual(len(table),2*len(METHODS))
        self.assertIn('auc_add_s_std',table.columns)
        np.testing.assert_allclose(table['auc_add_s_std'],0.0)


if __name__ == '__main__':
    for case in (AblationConfig_TestCase,ablate_TestCase):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
