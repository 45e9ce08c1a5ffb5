#!python
from __future__ import division,print_function
import unittest
import numpy as np

from pyPose6D.core import ops
from pyPose6D.core.Tensor import Tensor,Tape,backward,precision,active_dtype
from pyPose6D.core.Errors import NotScalar,ShapeMismatch,InvalidArgument


class Tensor_TestCase(unittest.TestCase):
    def test_chain_rule(self):
        '''Can we differentiate a small polynomial?'''
        with precision(np.float64):
            x = Tensor(3.0,requires_grad=True)
            with Tape():
                y = x*x + 2*x
            backward(y)
        self.assertAlmostEqual(float(x.grad),8.0)

    def test_precision(self):
        '''Does the precision context switch the dtype of new tensors?'''
        self.assertEqual(Tensor(1.0).dtype,np.float32)
        with precision(np.float64):
            self.assertEqual(Tensor(1.0).dtype,np.float64)
            self.assertEqual(active_dtype(),np.float64)
        self.assertEqual(Tensor(1.0).dtype,np.float32)

    def test_no_tape(self):
        '''Are operations outside a tape left unrecorded?'''
        x = Tensor(2.0,requires_grad=True)
        y = x*x
        self.assertFalse(y.requires_grad)
        with self.assertRaises(ValueError):
            backward(y)

    def test_not_scalar(self):
        '''Does backward refuse a loss with more than one element?'''
        x = Tensor(np.ones(3),requires_grad=True)
        with Tape():
            y = x*2.0
        with self.assertRaises(NotScalar):
            backward(y)

    def test_broadcast(self):
        '''Are broadcast gradients summed back onto the operand shape?'''
        with precision(np.float64):
            a = Tensor(np.ones((3,4)),requires_grad=True)
            b = Tensor(np.arange(4.0),requires_grad=True)
            with Tape():
                loss = ops.sum(a+b)
            backward(loss)
        np.testing.assert_array_almost_equal(b.grad,np.full(4,3.0))
        np.testing.assert_array_almost_equal(a.grad,np.ones((3,4)))

    def test_repeated_index(self):
        '''Do repeated fancy indices accumulate their gradients?'''
        with precision(np.float64):
            a = Tensor(np.arange(4.0),requires_grad=True)
            with Tape():
                loss = ops.sum(a[np.array([1,1,3])])
            backward(loss)
        np.testing.assert_array_almost_equal(a.grad,[0.0,2.0,0.0,1.0])

    def test_accumulate(self):
        '''Do two backward passes add into the same gradient slot?'''
        with precision(np.float64):
            x = Tensor(np.array([1.0,2.0]),requires_grad=True)
            for _ in range(2):
                with Tape():
                    loss = ops.sum(x*x)
                backward(loss)
        np.testing.assert_array_almost_equal(x.grad,[4.0,8.0])
        x.zero_grad()
        self.assertIsNone(x.grad)

    def test_constants(self):
        '''Do constant inputs stay without gradients?'''
        x = Tensor(np.ones(2),requires_grad=True)
        c = Tensor(np.ones(2))
        with Tape() as tape:
            loss = ops.sum(x*c)
        self.assertGreater(len(tape),0)
        backward(loss)
        self.assertIsNone(c.grad)
        self.assertIsNotNone(x.grad)

    def test_softmax(self):
        '''Do softmax rows sum to one and agree with log_softmax?'''
        with precision(np.float64):
            z = Tensor(np.random.default_rng(0).normal(size=(4,6)))
            p = ops.softmax(z,axis=-1)
            lp = ops.log_softmax(z,axis=-1)
        np.testing.assert_array_almost_equal(p.data.sum(axis=-1),np.ones(4))
        np.testing.assert_array_almost_equal(np.exp(lp.data),p.data)

    def test_layer_norm(self):
        '''Does layer_norm give zero mean and unit variance rows?'''
        with precision(np.float64):
            x = Tensor(np.random.default_rng(1).normal(3.0,2.0,size=(5,16)))
            y = ops.layer_norm(x,np.ones(16),np.zeros(16),eps=0.0)
        np.testing.assert_array_almost_equal(y.data.mean(axis=-1),np.zeros(5))
        np.testing.assert_array_almost_equal(y.data.var(axis=-1),np.ones(5))

    def test_dropout(self):
        '''Is dropout the identity in evaluation mode and seeded in training mode?'''
        x = Tensor(np.ones((8,8)))
        self.assertIs(ops.dropout(x,0.5,False,None),x)
        a = ops.dropout(x,0.5,True,np.random.default_rng(3))
        b = ops.dropout(x,0.5,True,np.random.default_rng(3))
        np.testing.assert_array_equal(a.data,b.data)
        self.assertTrue(np.all((a.data == 0.0) | (a.data == 2.0)))
        with self.assertRaises(InvalidArgument):
            ops.dropout(x,1.0,True,np.random.default_rng(0))

    def test_shape_errors(self):
        '''Are incompatible shapes reported as ShapeMismatch?'''
        with self.assertRaises(ShapeMismatch):
            ops.matmul(Tensor(np.ones((2,3))),Tensor(np.ones((2,3))))
        with self.assertRaises(ShapeMismatch):
            ops.reshape(Tensor(np.ones(5)),(2,3))
        with self.assertRaises(ShapeMismatch):
            ops.cross(Tensor(np.ones(2)),Tensor(np.ones(2)))

    def test_min(self):
        '''Does min send its gradient to the first minimal entry?'''
        with precision(np.float64):
            a = Tensor(np.array([[3.0,1.0,1.0],[0.0,5.0,2.0]]),requires_grad=True)
            with Tape():
                loss = ops.sum(ops.min(a,axis=1))
            backward(loss)
        np.testing.assert_array_equal(a.grad,[[0,1,0],[1,0,0]])


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(Tensor_TestCase)
    unittest.TextTestRunner(verbosity=2).run(suite)
