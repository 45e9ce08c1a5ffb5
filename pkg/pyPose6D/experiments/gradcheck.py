#!python
r'''
Finite-difference verification of every differentiable operation and loss.

Each case draws random inputs from its own substream, evaluates the
analytic vector-Jacobian product of a random projection of the output and
compares it to central differences, all in 64-bit precision.
'''
from __future__ import division,print_function
from collections import OrderedDict

import numpy as np
import pandas as pd

from pyPose6D.core import ops
from pyPose6D.core.Tensor import Tensor,Tape,backward,precision
from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Errors import InvalidArgument
from pyPose6D.core.Representation import Representation
from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.rotation import gram_schmidt,random_rotation
from pyPose6D.geometry.generate_ibb import generate_ibb
from pyPose6D.geometry.project import project
from pyPose6D.geometry.Cuboid import Cuboid
from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.losses.LossWeights import LossWeights
from pyPose6D.losses.class_nll import class_nll
from pyPose6D.losses.giou import giou
from pyPose6D.losses.box_loss import box_loss
from pyPose6D.losses.smooth_l1 import smooth_l1
from pyPose6D.losses.cross_ratio_loss import cross_ratio_loss
from pyPose6D.losses.keypoint_loss import keypoint_loss
from pyPose6D.losses.rot_loss import rot_loss
from pyPose6D.losses.pose_loss import pose_loss
from pyPose6D.losses.hungarian_loss import hungarian_loss
from pyPose6D.matching.PredictionSet import PredictionSet
from pyPose6D.matching.match_sets import match_sets
from pyPose6D.io.generate_scene import generate_scene,toy_camera

#: relative tolerance of the 64-bit checks
TOLERANCE = 1e-4

#: absolute differences below this count as agreement
ABSOLUTE_FLOOR = 1e-8

#: central difference step
EPSILON = 1e-6


def check_gradient(fn,inputs,rng,eps=EPSILON):
    r'''Largest relative disagreement between analytic and numerical gradients

    **Mathematical Definition**

    For the scalar :math:`s(x) = \sum w \odot f(x)` with a random
    projection :math:`w`,

    .. math::

        e = \max_i \frac{|g_i - \hat{g}_i|}{\max(|g_i|,|\hat{g}_i|)}
        \qquad \hat{g}_i = \frac{s(x + \epsilon e_i) - s(x - \epsilon e_i)}{2\epsilon}

    where entries with :math:`|g_i - \hat{g}_i| < 10^{-8}` count as 0.

    Arguments
    ---------
    fn: callable
        Maps tensors to a tensor; must be deterministic.

    inputs: list of np.ndarray

    rng: numpy.random.Generator
        Source of the projection weights.

    Returns
    -------
    error: float
    '''
    with precision(np.float64):
        leaves = [Tensor(x,requires_grad=True) for x in inputs]
        with Tape():
            out = fn(*leaves)
            weights = rng.normal(size=out.shape)
            loss = ops.sum(out*weights)
        backward(loss)
        analytic = [np.zeros(l.shape) if l.grad is None else np.asarray(l.grad,dtype=np.float64) for l in leaves]

        def scalar(arrays):
            return float(np.sum(fn(*[Tensor(a) for a in arrays]).data*weights))

        worst = 0.0
        arrays = [np.array(x,dtype=np.float64) for x in inputs]
        for k,x in enumerate(arrays):
            flat = x.reshape(-1)
            for i in range(flat.size):
                keep = flat[i]
                flat[i] = keep+eps
                up = scalar(arrays)
                flat[i] = keep-eps
                down = scalar(arrays)
                flat[i] = keep
                numeric = (up-down)/(2.0*eps)
                a = analytic[k].reshape(-1)[i]
                diff = abs(a-numeric)
                if diff < ABSOLUTE_FLOOR:
                    continue
                worst = max(worst,diff/max(abs(a),abs(numeric)))
    return worst


def _away_from_zero(rng,shape,margin=0.1):
    x = rng.normal(size=shape)
    return np.where(np.abs(x) < margin,np.where(x < 0,-margin,margin),x)


def _boxes(rng,n):
    return np.column_stack([rng.uniform(0.3,0.7,(n,2)),rng.uniform(0.1,0.4,(n,2))])


def _ibb_image(rng):
    cam = CameraIntrinsics.default()
    pose = Pose(random_rotation(rng),[rng.uniform(-0.1,0.1),rng.uniform(-0.1,0.1),rng.uniform(1.0,2.0)])
    cuboid = Cuboid([0,0,0],rng.uniform(0.05,0.1,3))
    return project(generate_ibb(cuboid),pose,cam).normalized(cam).points


def _inputs(make,fn):
    '''Case whose function does not depend on the drawn constants'''
    return lambda rng: (make(rng),fn)


def _op_cases():
    cases = OrderedDict()
    cases['add'] = _inputs(lambda r: [r.normal(size=(3,4)),r.normal(size=(4,))],lambda a,b: a+b)
    cases['sub'] = _inputs(lambda r: [r.normal(size=(3,4)),r.normal(size=(3,1))],lambda a,b: a-b)
    cases['mul'] = _inputs(lambda r: [r.normal(size=(2,3)),r.normal(size=(2,3))],lambda a,b: a*b)
    cases['div'] = _inputs(lambda r: [r.normal(size=(2,3)),_away_from_zero(r,(2,3),0.5)],lambda a,b: a/b)
    cases['neg'] = _inputs(lambda r: [r.normal(size=(5,))],ops.neg)
    cases['power'] = _inputs(lambda r: [r.uniform(0.5,2.0,(5,))],lambda a: ops.power(a,2.5))
    cases['square'] = _inputs(lambda r: [r.normal(size=(5,))],ops.square)
    cases['sqrt'] = _inputs(lambda r: [r.uniform(0.5,2.0,(5,))],ops.sqrt)
    cases['exp'] = _inputs(lambda r: [r.normal(size=(5,))],ops.exp)
    cases['log'] = _inputs(lambda r: [r.uniform(0.5,2.0,(5,))],ops.log)
    cases['abs'] = _inputs(lambda r: [_away_from_zero(r,(6,))],ops.abs)
    cases['relu'] = _inputs(lambda r: [_away_from_zero(r,(6,))],ops.relu)
    cases['sigmoid'] = _inputs(lambda r: [r.normal(size=(6,))],ops.sigmoid)
    cases['maximum'] = _inputs(lambda r: [r.normal(size=(6,)),r.normal(size=(6,))],ops.maximum)
    cases['minimum'] = _inputs(lambda r: [r.normal(size=(6,)),r.normal(size=(6,))],ops.minimum)
    cases['cross'] = _inputs(lambda r: [r.normal(size=(4,3)),r.normal(size=(4,3))],ops.cross)
    cases['matmul'] = _inputs(lambda r: [r.normal(size=(2,3,4)),r.normal(size=(4,2))],ops.matmul)
    cases['softmax'] = _inputs(lambda r: [r.normal(size=(3,5))],lambda a: ops.softmax(a,axis=-1))
    cases['log_softmax'] = _inputs(lambda r: [r.normal(size=(3,5))],lambda a: ops.log_softmax(a,axis=-1))
    cases['layer_norm'] = _inputs(lambda r: [r.normal(size=(3,6)),r.normal(size=(6,)),r.normal(size=(6,))],
                                  ops.layer_norm)
    cases['dropout'] = _inputs(lambda r: [r.normal(size=(4,5))],
                               lambda a: ops.dropout(a,0.3,True,np.random.default_rng(7)))
    cases['reshape'] = _inputs(lambda r: [r.normal(size=(2,6))],lambda a: ops.reshape(a,(3,4)))
    cases['transpose'] = _inputs(lambda r: [r.normal(size=(2,3,4))],lambda a: ops.transpose(a,(2,0,1)))
    cases['getitem'] = _inputs(lambda r: [r.normal(size=(4,5))],lambda a: a[np.array([0,2,2]),1:4])
    cases['concat'] = _inputs(lambda r: [r.normal(size=(2,3)),r.normal(size=(4,3))],
                              lambda a,b: ops.concat([a,b],axis=0))
    cases['stack'] = _inputs(lambda r: [r.normal(size=(2,3)),r.normal(size=(2,3))],
                             lambda a,b: ops.stack([a,b],axis=1))
    cases['sum'] = _inputs(lambda r: [r.normal(size=(3,4))],lambda a: ops.sum(a,axis=1))
    cases['mean'] = _inputs(lambda r: [r.normal(size=(3,4))],lambda a: ops.mean(a,axis=0,keepdims=True))
    cases['min'] = _inputs(lambda r: [r.normal(size=(3,4))],lambda a: ops.min(a,axis=1))
    cases['l1'] = _inputs(lambda r: [_away_from_zero(r,(3,4))],lambda a: ops.l1(a,axis=-1))
    cases['l2sq'] = _inputs(lambda r: [r.normal(size=(3,4))],ops.l2sq)
    cases['gram_schmidt'] = _inputs(lambda r: [r.normal(size=(2,6))],gram_schmidt)
    return cases


def _keypoint_case(rng):
    gt = _ibb_image(rng)
    pred = gt + rng.normal(size=gt.shape)*0.002
    return [pred],lambda p: keypoint_loss(p,gt,LossWeights(),Representation.IBB32)


def _rotation_case(symmetric):
    model = Cuboid([0,0,0],[0.05,0.04,0.03]).surface_grid(per_edge=3)

    def case(rng):
        R = random_rotation(rng)
        return [rng.normal(size=(6,))],lambda t: rot_loss(R,gram_schmidt(t),model,symmetric=symmetric)
    return case


def _pose_case(rng):
    model = Cuboid([0,0,0],[0.05,0.04,0.03]).surface_grid(per_edge=3)
    gt = Pose(random_rotation(rng),[0.0,0.0,1.0])
    inputs = [rng.normal(size=(6,)),gt.t+_away_from_zero(rng,(3,))*0.05]
    return inputs,lambda t6,t: pose_loss(gt,gram_schmidt(t6),t,model)


def _hungarian_case(rng):
    '''Fixed scene and matching; only the prediction tensors vary'''
    cam = toy_camera()
    seed = int(rng.integers(0,2**31-1))
    sample = generate_scene(seed,3,2,cam,num_queries=3,representation=Representation.BB8)
    raw = [rng.normal(size=(3,4)),rng.normal(size=(3,4)),rng.normal(size=(3,3))*0.5,
           rng.normal(size=(3,16)),rng.normal(size=(3,6))]

    def build(logits,boxes,translation,keypoints,rot6d):
        t = ops.concat([ops.sigmoid(translation[:,0:2]),ops.exp(translation[:,2:3])],axis=1)
        return PredictionSet(logits,ops.sigmoid(boxes),t,ops.sigmoid(keypoints),rot6d,Representation.BB8)

    with precision(np.float64):
        assignment = match_sets(build(*[Tensor(x) for x in raw]).tuples(),sample.targets)

    def fn(*tensors):
        return hungarian_loss(build(*tensors),sample.targets,assignment,LossWeights(),cam=cam).total
    return raw,fn


def _loss_cases():
    cases = OrderedDict()
    cases['class_nll'] = _inputs(lambda r: [r.normal(size=(4,4))],lambda a: class_nll(a,[0,None,2,None]))
    cases['giou'] = _inputs(lambda r: [_boxes(r,3),_boxes(r,3)],giou)
    cases['box_loss'] = _inputs(lambda r: [_boxes(r,3),_boxes(r,3)],box_loss)
    cases['smooth_l1'] = _inputs(lambda r: [r.normal(size=(6,))*2.0],smooth_l1)
    cases['cross_ratio_loss'] = _inputs(lambda r: [_ibb_image(r)+r.normal(size=(32,2))*0.002],
                                        lambda k: cross_ratio_loss(k,Representation.IBB32))
    cases['keypoint_loss'] = _keypoint_case
    cases['rot_loss'] = _rotation_case(False)
    cases['rot_loss_symmetric'] = _rotation_case(True)
    cases['pose_loss'] = _pose_case
    cases['hungarian_loss'] = _hungarian_case
    return cases


def run_gradcheck(seed=0,trials=100,tolerance=TOLERANCE,verbose=False):
    r'''Run the whole finite-difference suite

    Arguments
    ---------
    seed: int
        Trial ``i`` of case ``name`` draws everything from the substream
        ``(name, i)`` of `seed`.

    trials: int
        Random inputs per case.

    tolerance: float
        Largest accepted relative error.

    verbose: bool
        Print one line per case.

    Returns
    -------
    table: pandas.DataFrame
        One row per case: ``name``, ``kind`` (op or loss), ``trials``,
        ``max_rel_error`` and ``passed``.

    Raises
    ------
    *InvalidArgument* if `trials` < 1.
    '''
    if trials < 1:
        raise InvalidArgument('gradcheck needs at least one trial, got {}'.format(trials))
    streams = RandomStreams(seed)
    rows = []
    for kind,cases in (('op',_op_cases()),('loss',_loss_cases())):
        for name,case in cases.items():
            worst = 0.0
            for i in range(trials):
                rng = streams.substream(name,i)
                inputs,fn = case(rng)
                worst = max(worst,check_gradient(fn,inputs,rng))
            rows.append(OrderedDict([('name',name),('kind',kind),('trials',trials),
                                     ('max_rel_error',worst),('passed',bool(worst < tolerance))]))
            if verbose:
                print('==> {:<20s} {:.3e}'.format(name,worst))
    return pd.DataFrame(rows,columns=['name','kind','trials','max_rel_error','passed'])
