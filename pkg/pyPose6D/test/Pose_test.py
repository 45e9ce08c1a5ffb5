#!python
import unittest
import numpy as np
np.set_printoptions(precision=4)

from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.rotation import rotation_about
from pyPose6D.core.Errors import InvalidArgument


class Pose_TestCase(unittest.TestCase):
    def test_transform(self):
        '''Are points rotated and then translated?'''
        pose = Pose(rotation_about('z',np.pi/2),[0,0,1.0])
        np.testing.assert_allclose(pose.transform([[1.0,0,0]]),[[0,1.0,1.0]],atol=1e-12)

    def test_inverse(self):
        '''Does the inverse undo the pose?'''
        pose = Pose(rotation_about([1,2,3],0.7),[0.1,-0.2,1.5])
        pts = np.random.default_rng(0).normal(size=(10,3))
        np.testing.assert_allclose(pose.inverse().transform(pose.transform(pts)),pts,atol=1e-12)
        np.testing.assert_allclose(pose.matrix().dot(pose.inverse().matrix()),np.eye(4),atol=1e-12)

    def test_identity(self):
        '''Does the identity pose only shift by its depth?'''
        pose = Pose.identity(2.0)
        np.testing.assert_array_equal(pose.R,np.eye(3))
        np.testing.assert_array_equal(pose.t,[0,0,2.0])

    def test_validate(self):
        '''Are invalid rotations refused unless validation is off?'''
        with self.assertRaises(InvalidArgument):
            Pose(np.diag([1.0,1.0,-1.0]),[0,0,1])
        Pose(np.diag([1.0,1.0,-1.0]),[0,0,1],validate=False)

    def test_to_dict(self):
        '''Is the rotation flattened row-major?'''
        d = Pose(rotation_about('x',0.2),[1,2,3]).to_dict()
        self.assertEqual(len(d['R']),9)
        self.assertEqual(d['t'],[1.0,2.0,3.0])


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(Pose_TestCase)
    unittest.TextTestRunner(verbosity=2).run(suite)
