#!python
import unittest
import os
import json
import shutil
import tempfile
import numpy as np
np.set_printoptions(precision=4)

from pyPose6D.core.Representation import Representation
from pyPose6D.core.Errors import InvalidArgument,ParseError
from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.io.generate_scene import generate_scene,toy_camera,class_cuboid,class_model
from pyPose6D.io.render_silhouettes import render_silhouettes,class_color
from pyPose6D.io.SyntheticDataset import SyntheticDataset


class generate_scene_TestCase(unittest.TestCase):
    def setUp(self):
        self.cam = toy_camera(32,32)

    def test_deterministic(self):
        '''Does the same seed give the same scene?'''
        a = generate_scene(11,3,4,self.cam)
        b = generate_scene(11,3,4,self.cam)
        np.testing.assert_array_equal(a.raster,b.raster)
        self.assertEqual([t.class_id for t in a.targets],[t.class_id for t in b.targets])
        for ta,tb in zip(a.targets,b.targets):
            np.testing.assert_array_equal(ta.pose.matrix(),tb.pose.matrix())

    def test_targets(self):
        '''Are targets consistent with the generator settings?'''
        for seed in range(5):
            sample = generate_scene(seed,3,2,self.cam,num_queries=4,representation='BB8')
            self.assertEqual(sample.raster.shape,(32,32,3))
            self.assertLessEqual(len(sample),2)
            for t in sample.targets:
                self.assertIn(t.class_id,(0,1,2))
                self.assertEqual(len(t.keypoints),8)
                self.assertTrue(np.all(t.box[2:] > 0))
                self.assertTrue(0.5 <= t.pose.t[2] <= 2.0)
                self.assertEqual(len(t.model_points),len(class_model(t.class_id)))
            padded = sample.padded_targets(4)
            self.assertEqual(len(padded),4)
            self.assertTrue(all(t.is_null for t in padded[len(sample):]))
            ann = sample.to_annotation(0,seed)
            self.assertEqual(ann.obj_ids(),[t.class_id+1 for t in sample.targets])

    def test_empty(self):
        '''Does max_objects=0 give an empty black image?'''
        sample = generate_scene(0,2,0,self.cam)
        self.assertEqual(len(sample),0)
        self.assertEqual(np.count_nonzero(sample.raster),0)

    def test_errors(self):
        '''Are bad generator settings refused?'''
        with self.assertRaises(InvalidArgument):
            generate_scene(0,0,2,self.cam)
        with self.assertRaises(InvalidArgument):
            generate_scene(0,2,-1,self.cam)
        with self.assertRaises(InvalidArgument):
            generate_scene(0,2,5,self.cam,num_queries=4)

    def test_class_shapes(self):
        '''Do class cuboids stay within 3 to 8 cm half-extents?'''
        for c in range(12):
            half = class_cuboid(c).half_extents
            self.assertTrue(np.all(half >= 0.03-1e-12) and np.all(half <= 0.08+1e-12))


class render_silhouettes_TestCase(unittest.TestCase):
    def setUp(self):
        self.cam = CameraIntrinsics(10.0,10.0,5.0,5.0,10,10)

    @staticmethod
    def square(lo,hi):
        return np.array([[lo,lo],[hi,lo],[hi,hi],[lo,hi]],dtype=np.float64)

    def test_occlusion(self):
        '''Do nearer objects cover farther ones?'''
        red = np.array([1.0,0.0,0.0],dtype=np.float32)
        green = np.array([0.0,1.0,0.0],dtype=np.float32)
        raster = render_silhouettes(self.cam,[(self.square(4,8),1.0,green),(self.square(2,6),2.0,red)])
        self.assertEqual(raster.shape,(10,10,3))
        np.testing.assert_array_equal(raster[3,3],red)
        np.testing.assert_array_equal(raster[5,5],green)
        np.testing.assert_array_equal(raster[7,7],green)
        np.testing.assert_array_equal(raster[0,0],0.0)
        np.testing.assert_array_equal(raster[2,6],0.0)
        self.assertEqual(int(np.all(raster == red,axis=-1).sum()),16-4)

    def test_degenerate(self):
        '''Are collinear and off-image outlines skipped?'''
        line = np.array([[1.0,1.0],[2.0,2.0],[3.0,3.0],[4.0,4.0]])
        raster = render_silhouettes(self.cam,[(line,1.0,class_color(0)),
                                              (self.square(20,30),1.0,class_color(1))])
        self.assertEqual(np.count_nonzero(raster),0)

    def test_colors(self):
        '''Do class colors cycle through a fixed palette?'''
        np.testing.assert_array_equal(class_color(0),class_color(20))
        self.assertFalse(np.array_equal(class_color(0),class_color(1)))
        self.assertTrue(np.all((class_color(3) >= 0) & (class_color(3) <= 1)))


class SyntheticDataset_TestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.data = SyntheticDataset.generate(4,6,3,2,toy_camera(32,32),num_queries=3,
                                              representation=Representation.BB8)

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_generate(self):
        '''Is every sample regenerable from its own seed?'''
        self.assertEqual(len(self.data),6)
        seeds = [s.seed for s in self.data]
        self.assertEqual(len(set(seeds)),6)
        self.assertEqual(seeds[3],SyntheticDataset.sample_seed(4,3))
        alone = generate_scene(seeds[3],3,2,toy_camera(32,32),representation='BB8')
        np.testing.assert_array_equal(alone.raster,self.data[3].raster)
        with self.assertRaises(InvalidArgument):
            SyntheticDataset.generate(0,-1,2,2)

    def test_split(self):
        '''Does split keep order and settings?'''
        head,tail = self.data.split(0.5)
        self.assertEqual((len(head),len(tail)),(3,3))
        self.assertIs(tail[0],self.data[3])
        self.assertEqual(head.representation,Representation.BB8)

    def test_save_load(self):
        '''Does a saved dataset load back with the same samples?'''
        root = os.path.join(self.tmp,'a')
        self.data.save(root)
        for path in ('manifest.json','camera.json','models/obj_000003.ply','models/models_info.json',
                     'train/000000/scene_gt.json','train/000000/rgb/000005.npy'):
            self.assertTrue(os.path.isfile(os.path.join(root,path)),path)

        back = SyntheticDataset.load(root)
        self.assertEqual(len(back),len(self.data))
        self.assertEqual(back.representation,Representation.BB8)
        self.assertEqual(back.cam,self.data.cam)
        for a,b in zip(self.data,back):
            self.assertEqual(a.seed,b.seed)
            np.testing.assert_array_equal(a.raster,b.raster)
            self.assertEqual([t.class_id for t in a.targets],[t.class_id for t in b.targets])
            for ta,tb in zip(a.targets,b.targets):
                np.testing.assert_allclose(tb.pose.t,ta.pose.t,atol=1e-12)
                np.testing.assert_allclose(tb.keypoints.points,ta.keypoints.points,atol=1e-9)
                np.testing.assert_allclose(tb.box,ta.box,atol=1e-9)

    def test_byte_identical(self):
        '''Does saving twice produce identical files?'''
        for name in ('a','b'):
            self.data.save(os.path.join(self.tmp,name))
        for path in ('manifest.json','train/000000/scene_gt.json','train/000000/scene_camera.json',
                     'models/obj_000001.ply'):
            with open(os.path.join(self.tmp,'a',path),'rb') as f:
                a = f.read()
            with open(os.path.join(self.tmp,'b',path),'rb') as f:
                b = f.read()
            self.assertEqual(a,b,path)

    def test_load_errors(self):
        '''Are missing or foreign manifests refused?'''
        with self.assertRaises(ParseError):
            SyntheticDataset.load(self.tmp)
        root = os.path.join(self.tmp,'a')
        self.data.save(root)
        path = os.path.join(root,'manifest.json')
        with open(path,'r') as f:
            manifest = json.load(f)
        manifest['format_version'] = 2
        with open(path,'w') as f:
            json.dump(manifest,f)
        with self.assertRaises(ParseError):
            SyntheticDataset.load(root)


if __name__ == '__main__':
    for case in (generate_scene_TestCase,render_silhouettes_TestCase,SyntheticDataset_TestCase):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
