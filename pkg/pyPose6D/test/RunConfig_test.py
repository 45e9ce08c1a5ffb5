#!python
import unittest
import os
import shutil
import tempfile
from collections import OrderedDict
import numpy as np

from pyPose6D.util.RunConfig import RunConfig,output_directory,OUTPUT_ROOT_VARIABLE
from pyPose6D.util.UnitConverter import UnitConverter,default_converter
from pyPose6D.core.Errors import ParseError


class RunConfig_TestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.defaults = OrderedDict([('seed',0),('epochs',10),('lr',2e-4),('verbose',False),('out',None)])

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def write(self,text):
        path = os.path.join(self.tmp,'run.cfg')
        with open(path,'w') as f:
            f.write(text)
        return path

    def test_layers(self):
        '''Do flags override the file and the file override defaults?'''
        path = self.write('# comment\n\nepochs = 50\nlr=1e-3\nverbose = yes\n')
        cfg = RunConfig(self.defaults).load(path)
        self.assertEqual(cfg['epochs'],50)
        self.assertEqual(cfg['lr'],1e-3)
        self.assertIs(cfg['verbose'],True)
        cfg.update({'seed':3,'epochs':None,'out':'runs/x'})
        self.assertEqual(cfg['seed'],3)
        self.assertEqual(cfg['epochs'],50)
        self.assertEqual(cfg['out'],'runs/x')
        self.assertEqual(RunConfig(self.defaults)['epochs'],10)

    def test_write(self):
        '''Does config.txt echo values and versions?'''
        cfg = RunConfig(self.defaults).update({'seed':7})
        path = cfg.write(os.path.join(self.tmp,'out'))
        self.assertEqual(os.path.basename(path),'config.txt')
        with open(path) as f:
            text = f.read()
        self.assertIn('seed=7\n',text)
        self.assertIn('# pyPose6D ',text)
        self.assertIn('# numpy ',text)

    def test_errors(self):
        '''Are malformed lines and values refused?'''
        with self.assertRaises(ParseError) as cm:
            RunConfig(self.defaults).load(self.write('epochs=5\nthis line is wrong\n'))
        self.assertEqual(cm.exception.line,2)
        with self.assertRaises(ParseError):
            RunConfig(self.defaults).load(self.write('=5\n'))
        with self.assertRaises(ParseError):
            RunConfig(self.defaults).load(self.write('epochs=many\n'))
        with self.assertRaises(ParseError) as cm:
            RunConfig(self.defaults).load(self.write('verbose=maybe\n'))
        self.assertIn('boolean',str(cm.exception))

    def test_output_directory(self):
        '''Does the output root fall back to the environment and ./runs?'''
        saved = os.environ.pop(OUTPUT_ROOT_VARIABLE,None)
        try:
            self.assertEqual(output_directory('given','eval'),'given')
            self.assertEqual(output_directory(None,'eval'),os.path.join('runs','eval'))
            os.environ[OUTPUT_ROOT_VARIABLE] = self.tmp
            self.assertEqual(output_directory(None,'eval'),os.path.join(self.tmp,'eval'))
        finally:
            os.environ.pop(OUTPUT_ROOT_VARIABLE,None)
            if saved is not None:
                os.environ[OUTPUT_ROOT_VARIABLE] = saved


class UnitConverter_TestCase(unittest.TestCase):
    def test_convert(self):
        '''Are millimeters and meters converted both ways?'''
        uc = default_converter()
        self.assertIs(uc,default_converter())
        self.assertAlmostEqual(uc.toMeters(1000.0),1.0)
        np.testing.assert_allclose(uc.toMillimeters([0.0,0.25,-1.0]),[0.0,250.0,-1000.0])
        self.assertAlmostEqual(uc.toMeters(2.0,unit='centimeter'),0.02)

    def test_dataset_unit(self):
        '''Can datasets use other length units?'''
        uc = UnitConverter('centimeter')
        self.assertAlmostEqual(uc.toDataset(1.0),100.0)
        with self.assertRaises(ValueError):
            UnitConverter('second')


if __name__ == '__main__':
    for case in (RunConfig_TestCase,UnitConverter_TestCase):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
