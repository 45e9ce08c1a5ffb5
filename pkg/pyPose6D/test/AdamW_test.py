#!python
from __future__ import division,print_function
import unittest
import warnings
from collections import OrderedDict
import numpy as np

from pyPose6D.core.Tensor import Tensor,precision
from pyPose6D.core.AdamW import OptimizerState,clip_and_step,clip_gradients,global_norm
from pyPose6D.core.Errors import ShapeMismatch,InvalidArgument


class AdamW_TestCase(unittest.TestCase):
    def make_params(self,value):
        with precision(np.float64):
            return OrderedDict([('w',Tensor(np.array(value,dtype=np.float64),requires_grad=True))])

    def test_first_step(self):
        '''Does the first Adam step move each parameter by about lr?'''
        params = self.make_params([1.0,-2.0])
        state = OptimizerState(lr=1e-2,weight_decay=0.0,clip_norm=None)
        clip_and_step(state,params,{'w':np.array([0.5,-3.0])})
        np.testing.assert_allclose(params['w'].data,[1.0-1e-2,-2.0+1e-2],rtol=1e-6)
        self.assertEqual(state.step,1)

    def test_weight_decay(self):
        '''Is weight decay applied even without a gradient?'''
        params = self.make_params([2.0])
        state = OptimizerState(lr=0.1,weight_decay=0.5,clip_norm=None)
        clip_and_step(state,params,{})
        np.testing.assert_allclose(params['w'].data,[2.0-0.1*0.5*2.0])

    def test_clip(self):
        '''Are gradients scaled jointly by their global norm?'''
        grads = OrderedDict([('a',np.array([3.0,0.0])),('b',np.array([0.0,4.0]))])
        self.assertAlmostEqual(global_norm(grads),5.0)
        clipped,norm = clip_gradients(grads,1.0)
        self.assertAlmostEqual(norm,5.0)
        np.testing.assert_allclose(clipped['a'],[0.6,0.0])
        np.testing.assert_allclose(clipped['b'],[0.0,0.8])
        unchanged,_ = clip_gradients(grads,10.0)
        np.testing.assert_array_equal(unchanged['a'],grads['a'])

    def test_lr_drop(self):
        '''Does the learning rate drop tenfold after the configured step?'''
        params = self.make_params([0.0])
        state = OptimizerState(lr=1e-3,lr_drop_step=2)
        self.assertEqual(state.current_lr(),1e-3)
        for _ in range(2):
            clip_and_step(state,params,{'w':np.array([1.0])})
        self.assertAlmostEqual(state.current_lr(),1e-4)

    def test_errors(self):
        '''Are bad gradients and hyperparameters rejected?'''
        params = self.make_params([0.0,0.0])
        with self.assertRaises(ShapeMismatch):
            clip_and_step(OptimizerState(),params,{'w':np.zeros(3)})
        with self.assertRaises(InvalidArgument):
            OptimizerState(lr=0.0)
        with self.assertRaises(InvalidArgument):
            OptimizerState(beta1=1.0)

    def test_non_finite(self):
        '''Is a non-finite gradient skipped with a warning?'''
        params = self.make_params([1.0])
        state = OptimizerState()
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            clip_and_step(state,params,{'w':np.array([np.nan])})
        self.assertEqual(len(caught),1)
        self.assertEqual(state.step,0)
        np.testing.assert_array_equal(params['w'].data,[1.0])


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(AdamW_TestCase)
    unittest.TextTestRunner(verbosity=2).run(suite)
