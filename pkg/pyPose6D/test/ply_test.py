#!python
import unittest
import os
import json
import shutil
import tempfile
import numpy as np
np.set_printoptions(precision=4)
from plyfile import PlyData,PlyElement

from pyPose6D.io.load_ply import load_ply
from pyPose6D.io.write_ply import write_ply
from pyPose6D.io.load_models import load_models
from pyPose6D.core.Errors import ParseError,UnsupportedFormat

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)),'data')
CUBE = np.array([[x,y,z] for x in (-50.0,50.0) for y in (-50.0,50.0) for z in (-50.0,50.0)])


class load_ply_TestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_ascii_fixture(self):
        '''Can we read an ASCII mesh and ignore faces and colors?'''
        cloud = load_ply(os.path.join(DATA,'cube.ply'))
        np.testing.assert_array_equal(cloud,CUBE)
        meters = load_ply(os.path.join(DATA,'cube.ply'),to_meters=True)
        np.testing.assert_allclose(meters,CUBE/1000.0,atol=1e-12)

    def test_write_read(self):
        '''Does a written cloud read back unchanged in both encodings?'''
        cloud = np.random.default_rng(3).normal(size=(50,3))
        for binary in (True,False):
            path = os.path.join(self.tmp,'cloud_{}.ply'.format(binary))
            write_ply(path,cloud,binary=binary)
            back = load_ply(path)
            if binary:
                np.testing.assert_array_equal(back,cloud)
            else:
                np.testing.assert_allclose(back,cloud,rtol=1e-12)

    def test_missing_axis(self):
        '''Is a vertex element without z refused?'''
        with self.assertRaises(ParseError) as cm:
            load_ply(os.path.join(DATA,'no_z.ply'))
        self.assertIn('z',cm.exception.reason)

    def test_malformed(self):
        '''Are garbage and missing files reported as parse errors?'''
        path = os.path.join(self.tmp,'garbage.ply')
        with open(path,'w') as f:
            f.write('this is not a mesh\n')
        with self.assertRaises(ParseError):
            load_ply(path)
        with self.assertRaises(ParseError) as cm:
            load_ply(os.path.join(self.tmp,'missing.ply'))
        self.assertTrue(cm.exception.path.endswith('missing.ply'))

    def test_big_endian(self):
        '''Are big-endian files refused?'''
        vertices = np.zeros(3,dtype=[('x','>f4'),('y','>f4'),('z','>f4')])
        path = os.path.join(self.tmp,'big.ply')
        PlyData([PlyElement.describe(vertices,'vertex')],text=False,byte_order='>').write(path)
        with self.assertRaises(UnsupportedFormat):
            load_ply(path)


class load_models_TestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        write_ply(os.path.join(self.tmp,'obj_000001.ply'),CUBE)
        write_ply(os.path.join(self.tmp,'obj_000002.ply'),2.0*CUBE,binary=False)
        with open(os.path.join(self.tmp,'models_info.json'),'w') as f:
            json.dump({'1':{'diameter':200.0}},f)
        with open(os.path.join(self.tmp,'notes.txt'),'w') as f:
            f.write('not a model\n')

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_load(self):
        '''Are clouds converted to meters and diameters filled in?'''
        clouds,diameters = load_models(self.tmp)
        self.assertEqual(clouds.classes,[1,2])
        np.testing.assert_allclose(clouds[1],CUBE/1000.0,atol=1e-12)
        self.assertAlmostEqual(diameters[1],0.2)
        self.assertAlmostEqual(diameters[2],0.2*np.sqrt(3.0))

    def test_max_points(self):
        '''Does subsampling keep every k-th vertex?'''
        clouds,_ = load_models(self.tmp,max_points=3)
        self.assertEqual(len(clouds[1]),3)
        np.testing.assert_allclose(clouds[1],CUBE[::3]/1000.0,atol=1e-12)

    def test_errors(self):
        '''Are missing and empty folders refused?'''
        with self.assertRaises(ParseError):
            load_models(os.path.join(self.tmp,'nope'))
        empty = os.path.join(self.tmp,'empty')
        os.makedirs(empty)
        with self.assertRaises(ParseError):
            load_models(empty)


if __name__ == '__main__':
    for case in (load_ply_TestCase,load_models_TestCase):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
