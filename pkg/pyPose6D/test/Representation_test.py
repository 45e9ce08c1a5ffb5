#!python
import unittest

from pyPose6D.core.Representation import Representation
from pyPose6D.core.Errors import InvalidArgument


class Representation_TestCase(unittest.TestCase):
    def test_counts(self):
        '''Does each layout report its keypoint count?'''
        self.assertEqual(Representation.BB8.count,8)
        self.assertEqual(Representation.FPS8.count,8)
        self.assertEqual(Representation.IBB32.count,32)

    def test_collinear(self):
        '''Is IBB32 the only layout with collinear 4-tuples?'''
        self.assertTrue(Representation.IBB32.collinear)
        self.assertFalse(Representation.BB8.collinear)
        self.assertFalse(Representation.FPS8.collinear)

    def test_from_string(self):
        '''Can we look layouts up by name regardless of case?'''
        self.assertIs(Representation.from_string('ibb32'),Representation.IBB32)
        self.assertIs(Representation.from_string('Fps8'),Representation.FPS8)
        with self.assertRaises(InvalidArgument):
            Representation.from_string('ibb16')


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(Representation_TestCase)
    unittest.TextTestRunner(verbosity=2).run(suite)
