#!python
r'''
Keypoint representation by pose recovery ablation on synthetic keypoints.

For every seed and representation a rotation estimator is trained on noisy
keypoints of the class-0 cuboid, then the same evaluation poses are
recovered three ways:

    - ``EPnP``: rotation and translation from :func:`pyPose6D.epnp`
    - ``EPnP-R + head-t``: EPnP rotation, translation from the simulated head
    - ``RotEst-R + head-t``: learned rotation, translation from the head

The translation head is simulated by perturbing the groundtruth translation
code, so all three methods see identical keypoints and identical head
errors.
'''
from __future__ import division,print_function
from collections import OrderedDict

import numpy as np
import pandas as pd

from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Errors import NumericalFailure,DegenerateInput
from pyPose6D.geometry.CameraIntrinsics import CameraIntrinsics
from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.rotation import random_rotation,geodesic_distance
from pyPose6D.geometry.project import project
from pyPose6D.geometry.generate_ibb import keypoints_for
from pyPose6D.geometry.model_diameter import model_diameter
from pyPose6D.geometry.translation import TranslationCode,decode_translation,encode_translation
from pyPose6D.pnp.Correspondences import Correspondences
from pyPose6D.pnp.epnp import epnp
from pyPose6D.metrics.add_error import add_error
from pyPose6D.metrics.adds_error import adds_error
from pyPose6D.metrics.auc import auc
from pyPose6D.metrics.recall_at import recall_at
from pyPose6D.models.make_rotest_dataset import make_rotest_dataset,CENTER_RANGE,DEPTH_RANGE
from pyPose6D.models.train_rotest import train_rotest
from pyPose6D.io.generate_scene import class_cuboid,class_model
from pyPose6D.experiments.AblationConfig import AblationConfig

METHODS = ('EPnP','EPnP-R + head-t','RotEst-R + head-t')

# auc_add_s and ar_add_s hold ADD(-S): ADD-S for a symmetric class, ADD otherwise
COLUMNS = ['seed','representation','method','auc_add_s','ar_add_s','median_rotation_deg',
           'median_translation_m','failures']


def evaluation_poses(n,rng,cam):
    '''`n` poses drawn like the rotation-estimator training pairs'''
    poses = []
    for _ in range(n):
        code = TranslationCode(rng.uniform(*CENTER_RANGE),rng.uniform(*CENTER_RANGE),rng.uniform(*DEPTH_RANGE))
        poses.append(Pose(random_rotation(rng),decode_translation(code,cam)))
    return poses


def corrupt(keypoints,rng,fraction,outlier_px,cam):
    r'''Displace a random share of the keypoints

    Arguments
    ---------
    keypoints: np.ndarray, (n, 2K)
        Normalized rows as produced by :func:`make_rotest_dataset`.

    Returns
    -------
    corrupted: np.ndarray, (n, 2K)
        A copy; each keypoint is hit independently with probability
        `fraction` by a Gaussian shift of `outlier_px` pixels.
    '''
    kps = np.array(keypoints,dtype=np.float64).reshape(len(keypoints),-1,2)
    hit = rng.random(kps.shape[:2]) < fraction
    shift = rng.normal(0.0,outlier_px,kps.shape)/np.array([cam.width,cam.height],dtype=np.float64)
    kps[hit] += shift[hit]
    return kps.reshape(len(keypoints),-1)


def observe(poses,representation,cuboid,cam,rng,noise_px):
    '''Normalized noisy keypoint rows of `poses`'''
    model_kps = keypoints_for(representation,cuboid)
    size = np.array([cam.width,cam.height],dtype=np.float64)
    rows = np.empty((len(poses),2*representation.count))
    for i,pose in enumerate(poses):
        uv = project(model_kps,pose,cam).points
        rows[i] = ((uv + rng.normal(0.0,noise_px,uv.shape))/size).ravel()
    return rows


def head_translations(poses,rng,cam,noise_px,depth_noise):
    '''Translations decoded from perturbed groundtruth translation codes'''
    out = []
    for pose in poses:
        code = encode_translation(pose.t,cam)
        noisy = TranslationCode(code.u_norm + rng.normal(0.0,noise_px)/cam.width,
                                code.v_norm + rng.normal(0.0,noise_px)/cam.height,
                                code.tz*max(1.0 + rng.normal(0.0,depth_noise),1e-3))
        out.append(decode_translation(noisy,cam))
    return out


def _epnp_poses(rows,representation,cuboid,cam):
    model_kps = keypoints_for(representation,cuboid)
    size = np.array([cam.width,cam.height],dtype=np.float64)
    out = []
    for row in rows:
        try:
            out.append(epnp(Correspondences(model_kps,row.reshape(-1,2)*size),cam))
        except (NumericalFailure,DegenerateInput):
            out.append(None)
    return out


def summarize(gt,estimates,cloud,diameter,symmetric=False):
    r'''Metric columns of one grid cell

    **Description**

        ``auc_add_s`` and ``ar_add_s`` are ADD(-S) scores, named like the
        column of :func:`pyPose6D.evaluate`: the pose error is ADD-S when
        `symmetric` is set and plain ADD otherwise. Failed estimates count
        as infinite error.
    '''
    error = adds_error if symmetric else add_error
    pose_errors,rotation_errors,translation_errors = [],[],[]
    for g,e in zip(gt,estimates):
        if e is None:
            pose_errors.append(np.inf)
            rotation_errors.append(np.inf)
            translation_errors.append(np.inf)
            continue
        pose_errors.append(error(g,e,cloud))
        rotation_errors.append(geodesic_distance(g.R,e.R))
        translation_errors.append(float(np.linalg.norm(g.t-e.t)))
    return OrderedDict([('auc_add_s',auc(pose_errors,0.1)),
                        ('ar_add_s',recall_at(pose_errors,0.1*diameter)),
                        ('median_rotation_deg',float(np.degrees(np.median(rotation_errors)))),
                        ('median_translation_m',float(np.median(translation_errors))),
                        ('failures',int(sum(e is None for e in estimates)))])


def run_ablation(config=None,cam=None,verbose=False):
    r'''Every (seed, representation, method) cell of the ablation grid

    **Description**

        Data of seed ``s`` comes from ``RandomStreams(s)``: evaluation
        poses from the ``'ablate/poses'`` stream (shared by every
        representation), keypoint noise and outliers from per-representation
        substreams and head errors from ``'ablate/head'``. The rotation
        estimator is trained with :func:`pyPose6D.train_rotest` on
        `config.train_samples` pairs corrupted the same way.

    Returns
    -------
    runs: pandas.DataFrame
        One row per cell; see :data:`COLUMNS`.
    '''
    config = config or AblationConfig()
    cam = cam or CameraIntrinsics.default()
    cuboid = class_cuboid(0)
    cloud = class_model(0)
    diameter = model_diameter(cloud)

    rows = []
    for seed in config.seeds:
        streams = RandomStreams(seed)
        poses = evaluation_poses(config.test_samples,streams.stream('ablate/poses'),cam)
        head_t = head_translations(poses,streams.stream('ablate/head'),cam,
                                   config.head_noise_px,config.head_depth_noise)
        for k,rep in enumerate(config.representations):
            rng = streams.substream('ablate/keypoints',k)
            test = corrupt(observe(poses,rep,cuboid,cam,rng,config.noise_px),rng,
                           config.outlier_fraction,config.outlier_px,cam)

            train_seed = int(streams.substream('ablate/train',k).integers(0,2**31-1))
            keypoints,rotations,_ = make_rotest_dataset(config.train_samples,train_seed,rep,
                                                        config.noise_px,cuboid,cam)
            keypoints = corrupt(keypoints,streams.substream('ablate/train/outliers',k),
                                config.outlier_fraction,config.outlier_px,cam)
            model,_,_ = train_rotest((keypoints,rotations),config.rotest_for(rep),config.training_for(seed))
            learned = model.rotations(test)

            pnp = _epnp_poses(test,rep,cuboid,cam)
            estimates = OrderedDict()
            estimates['EPnP'] = pnp
            estimates['EPnP-R + head-t'] = [None if p is None else Pose(p.R,t,validate=False)
                                            for p,t in zip(pnp,head_t)]
            estimates['RotEst-R + head-t'] = [Pose(R,t,validate=False) for R,t in zip(learned,head_t)]

            for method in METHODS:
                row = OrderedDict([('seed',seed),('representation',rep.name),('method',method)])
                row.update(summarize(poses,estimates[method],cloud,diameter,config.symmetric))
                rows.append(row)
                if verbose:
                    print('==> seed {} {:<6s} {:<18s} AUC {:.3f}'.format(seed,rep.name,method,row['auc_add_s']))
    return pd.DataFrame(rows,columns=COLUMNS)


def ablation_table(runs):
    '''Mean and standard deviation over seeds, one row per (representation, method)'''
    grouped = runs.groupby(['representation','method'],sort=False)
    table = grouped[['auc_add_s','ar_add_s','median_rotation_deg','median_translation_m']].mean()
    table['auc_add_s_std'] = grouped['auc_add_s'].std(ddof=0)
    table['failures'] = grouped['failures'].sum()
    return table.reset_index()


def ablate(config=None,cam=None,verbose=False):
    r'''Keypoint representation by pose recovery comparison

    Example
    -------
    .. code-block:: python

        import pyPose6D

        config = pyPose6D.AblationConfig(seeds=[0,1],train_samples=2000)
        table = pyPose6D.ablate(config)
        table.pivot(index='representation',columns='method',values='auc_add_s')

    Returns
    -------
    table: pandas.DataFrame
        :func:`ablation_table` of :func:`run_ablation`.
    '''
    return ablation_table(run_ablation(config,cam,verbose))
