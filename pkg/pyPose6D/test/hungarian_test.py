#!python
import os
import unittest
import itertools
import numpy as np
np.set_printoptions(precision=4)

from pyPose6D.matching.hungarian import hungarian
from pyPose6D.matching.match_sets import match_sets,cost_matrix
from pyPose6D.matching.matching_cost import matching_cost
from pyPose6D.matching.box_ops import box_giou,box_cxcywh_to_xyxy,box_xyxy_to_cxcywh,points_box
from pyPose6D.matching.PredictionTuple import PredictionTuple
from pyPose6D.matching.TargetTuple import TargetTuple
from pyPose6D.core.Errors import InvalidArgument


def brute_force(costs):
    n_pred,n_target = costs.shape
    best = np.inf
    for perm in itertools.permutations(range(n_pred),n_target):
        best = min(best,sum(costs[p,j] for j,p in enumerate(perm)))
    return best


def lowest_optimum(costs):
    '''First optimal injection in lexicographic order of prediction indices'''
    n_pred,n_target = costs.shape
    best,first = np.inf,None
    for perm in itertools.permutations(range(n_pred),n_target):
        total = sum(costs[p,j] for j,p in enumerate(perm))
        if total < best:
            best,first = total,list(perm)
    return first


class hungarian_TestCase(unittest.TestCase):
    def test_small(self):
        '''Does the solver find the cheaper crossing assignment?'''
        a = hungarian(np.array([[1.,2.],[2.,4.]]))
        self.assertEqual(a.pairs(),[(0,1),(1,0)])
        self.assertAlmostEqual(a.total_cost,4.0)
        self.assertEqual(a.unmatched,[])

    def test_optimal(self):
        '''Is the summed cost equal to the brute force optimum?'''
        rng = np.random.default_rng(0)
        for n_pred in range(1,6):
            for n_target in range(0,n_pred+1):
                costs = rng.uniform(-1,3,size=(n_pred,n_target))
                a = hungarian(costs)
                self.assertEqual(len(a),n_target)
                self.assertEqual(len(set(a.pred_indices.tolist())),n_target)
                self.assertEqual(a.target_indices.tolist(),list(range(n_target)))
                if n_target:
                    self.assertAlmostEqual(a.total_cost,brute_force(costs))
                self.assertEqual(len(a.unmatched),n_pred-n_target)

    def test_ties(self):
        '''Are equally cheap assignments resolved towards the lowest prediction index?'''
        a = hungarian(np.array([[1.,1.],[0.,0.]]))
        self.assertEqual(a.pairs(),[(0,0),(1,1)])
        self.assertAlmostEqual(a.total_cost,1.0)
        a = hungarian(np.zeros((4,2)))
        self.assertEqual(a.pred_indices.tolist(),[0,1])
        rng = np.random.default_rng(1)
        for _ in range(300):
            n_pred = rng.integers(1,6)
            n_target = rng.integers(1,n_pred+1)
            costs = rng.integers(0,2,size=(n_pred,n_target)).astype(float)
            a = hungarian(costs)
            self.assertEqual(a.pred_indices.tolist(),lowest_optimum(costs),costs)

    def test_permutation(self):
        '''Does permuting the predictions permute the assignment?'''
        rng = np.random.default_rng(2)
        for _ in range(50):
            costs = rng.uniform(0,1,size=(6,4))
            perm = rng.permutation(6)
            a = hungarian(costs)
            b = hungarian(costs[perm])
            self.assertAlmostEqual(a.total_cost,b.total_cost)
            np.testing.assert_array_equal(perm[b.pred_indices],a.pred_indices)

    def test_offset(self):
        '''Does adding a constant leave the assignment unchanged?'''
        costs = np.random.default_rng(3).uniform(0,1,size=(5,3))
        a = hungarian(costs)
        b = hungarian(costs+7.5)
        np.testing.assert_array_equal(a.pred_indices,b.pred_indices)
        self.assertAlmostEqual(b.total_cost,a.total_cost+3*7.5)

    @unittest.skipUnless(os.environ.get('PYPOSE6D_SLOW_TESTS') == '1','set PYPOSE6D_SLOW_TESTS=1')
    def test_optimal_many(self):
        '''Is the optimum exact on 500 matrices with up to seven targets?'''
        rng = np.random.default_rng(4)
        for _ in range(500):
            n_target = int(rng.integers(1,8))
            n_pred = int(rng.integers(n_target,8))
            costs = rng.integers(-20,50,size=(n_pred,n_target)).astype(float)
            a = hungarian(costs)
            self.assertEqual(a.total_cost,brute_force(costs))
            self.assertEqual(a.pred_indices.tolist(),lowest_optimum(costs))
        costs = rng.uniform(-1,3,size=(20,3))
        self.assertAlmostEqual(hungarian(costs).total_cost,brute_force(costs),places=12)

    def test_errors(self):
        '''Are short or non-finite matrices refused?'''
        with self.assertRaises(InvalidArgument):
            hungarian(np.zeros((2,3)))
        with self.assertRaises(InvalidArgument):
            hungarian(np.array([[np.inf],[0.0]]))
        with self.assertRaises(InvalidArgument):
            hungarian(np.zeros(3))


class match_sets_TestCase(unittest.TestCase):
    def setUp(self):
        logits = np.full(4,-5.0)
        self.preds = []
        for k,box in enumerate([[0.2,0.2,0.1,0.1],[0.7,0.6,0.2,0.3],[0.5,0.5,0.05,0.05]]):
            lg = logits.copy()
            lg[k] = 5.0
            self.preds.append(PredictionTuple(lg,box))

    def test_null_targets(self):
        '''Are ∅ targets skipped and indices kept relative to the input list?'''
        targets = [TargetTuple.null(),TargetTuple(1,[0.69,0.61,0.2,0.3],None,None),
                   TargetTuple.null(),TargetTuple(0,[0.21,0.2,0.1,0.12],None,None)]
        a = match_sets(self.preds,targets)
        self.assertEqual(sorted(a.pairs()),[(1,1),(3,0)])
        self.assertEqual(a.unmatched,[2])
        costs = cost_matrix(self.preds,[targets[1],targets[3]])
        self.assertAlmostEqual(a.total_cost,costs[1,0]+costs[0,1])

    def test_only_null(self):
        '''Does an image without objects match nothing?'''
        a = match_sets(self.preds,[TargetTuple.null()])
        self.assertEqual(len(a),0)
        self.assertEqual(a.unmatched,[0,1,2])

    def test_cost(self):
        '''Does a perfect box leave only the class term?'''
        target = TargetTuple(0,self.preds[0].box,None,None)
        p = self.preds[0].probabilities()[0]
        self.assertAlmostEqual(matching_cost(self.preds[0],target),-p)
        with self.assertRaises(InvalidArgument):
            matching_cost(self.preds[0],TargetTuple.null())

    def test_giou(self):
        '''Does GIoU span 1 for identical boxes down to negative for far ones?'''
        self.assertAlmostEqual(box_giou([0.5,0.5,0.2,0.2],[0.5,0.5,0.2,0.2]),1.0)
        # two unit squares one unit apart: enclosure 3, union 2
        self.assertAlmostEqual(box_giou([0.5,0.5,1,1],[2.5,0.5,1,1]),-1.0/3.0)
        with self.assertRaises(InvalidArgument):
            box_giou([0.5,0.5,0.0,0.2],[0.5,0.5,0.2,0.2])

    def test_box_conversion(self):
        '''Do the box formats convert both ways?'''
        box = np.array([0.4,0.5,0.2,0.4])
        np.testing.assert_allclose(box_cxcywh_to_xyxy(box),[0.3,0.3,0.5,0.7])
        np.testing.assert_allclose(box_xyxy_to_cxcywh(box_cxcywh_to_xyxy(box)),box)
        np.testing.assert_allclose(points_box([[0.1,0.2],[0.5,0.4],[1.2,0.3]]),[0.55,0.3,0.9,0.2])


if __name__ == '__main__':
    for case in (hungarian_TestCase,match_sets_TestCase):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
