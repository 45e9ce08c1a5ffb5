#!python
import unittest
import os
import shutil
import tempfile
import numpy as np
np.set_printoptions(precision=4)

from pyPose6D.io.results import write_results,read_results,format_number,COLUMNS
from pyPose6D.metrics.EvalRecord import EvalRecord
from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.rotation import rotation_about
from pyPose6D.core.Errors import ParseError

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)),'data')


class results_TestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_format_number(self):
        '''Are numbers written with 9 significant digits and no negative zero?'''
        self.assertEqual(format_number(1.0),'1')
        self.assertEqual(format_number(-0.0),'0')
        self.assertEqual(format_number(1.0/3.0),'0.333333333')
        self.assertEqual(format_number(1234.5678901),'1234.56789')

    def test_write(self):
        '''Does an identity estimate serialize as the BOP row?'''
        path = os.path.join(self.tmp,'est.csv')
        write_results([EvalRecord(48,1,2,Pose(np.eye(3),[0.001,0.0,0.5]),score=0.5)],path)
        with open(path,'r') as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[0],','.join(COLUMNS))
        self.assertEqual(lines[1],'48,1,2,0.5,1 0 0 0 1 0 0 0 1,1 0 500,-1')

    def test_read_fixture(self):
        '''Can we read a result file in millimeters?'''
        records = read_results(os.path.join(DATA,'results.csv'))
        self.assertEqual(len(records),3)
        self.assertEqual([r.obj_id for r in records],[1,6,13])
        np.testing.assert_allclose(records[0].pose.t,[0.1,-0.05,1.0],atol=1e-12)
        np.testing.assert_allclose(records[2].pose.R,[[0,-1,0],[1,0,0],[0,0,1]])
        self.assertEqual(records[1].score,0.5)
        self.assertEqual(records[2].time,-1.0)
        self.assertIsNone(records[0].pose_gt)

    def test_round_trip(self):
        '''Do written estimates read back to within the printed precision?'''
        R = rotation_about([1.0,2.0,-0.5],0.7)
        records = [EvalRecord(0,i,i % 3+1,Pose(R,[0.01*i,-0.02,0.9]),score=1.0/(i+1),time=0.02)
                   for i in range(5)]
        path = os.path.join(self.tmp,'est.csv')
        write_results(records,path)
        back = read_results(path)
        self.assertEqual([(r.scene_id,r.im_id,r.obj_id) for r in back],
                         [(r.scene_id,r.im_id,r.obj_id) for r in records])
        for a,b in zip(records,back):
            np.testing.assert_allclose(b.pose.R,a.pose.R,atol=1e-8)
            np.testing.assert_allclose(b.pose.t,a.pose.t,atol=1e-9)
            self.assertAlmostEqual(b.score,a.score,places=8)

    def test_errors(self):
        '''Are malformed files reported with the offending line?'''
        with self.assertRaises(ParseError) as cm:
            read_results(os.path.join(DATA,'results_bad.csv'))
        self.assertEqual(cm.exception.line,3)
        self.assertIn('R',cm.exception.reason)

        path = os.path.join(self.tmp,'header.csv')
        with open(path,'w') as f:
            f.write('scene,im,obj\n1,2,3\n')
        with self.assertRaises(ParseError) as cm:
            read_results(path)
        self.assertEqual(cm.exception.line,1)

        path = os.path.join(self.tmp,'empty.csv')
        open(path,'w').close()
        with self.assertRaises(ParseError):
            read_results(path)

        path = os.path.join(self.tmp,'scaled.csv')
        with open(path,'w') as f:
            f.write(','.join(COLUMNS)+'\n')
            f.write('0,0,1,1,2 0 0 0 2 0 0 0 2,0 0 1000,-1\n')
        with self.assertRaises(ParseError) as cm:
            read_results(path)
        self.assertEqual(cm.exception.line,2)


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(results_TestCase)
    unittest.TextTestRunner(verbosity=2).run(suite)
