#!python
from __future__ import division,print_function
import warnings
from collections import OrderedDict

import numpy as np
import pandas as pd

from pyPose6D.core import ops
from pyPose6D.core.Tensor import Tape,backward
from pyPose6D.core.AdamW import clip_and_step
from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.core.Errors import ShapeMismatch
from pyPose6D.geometry.Cuboid import Cuboid
from pyPose6D.geometry.rotation import gram_schmidt,geodesic_distance
from pyPose6D.losses.rot_loss import rot_loss
from pyPose6D.models.RotEst import RotEst
from pyPose6D.models.RotEstConfig import RotEstConfig
from pyPose6D.models.TrainingConfig import TrainingConfig
from pyPose6D.models.Checkpoint import Checkpoint

#: model cloud of the point-based rotation loss
UNIT_CLOUD = Cuboid.unit().surface_grid(per_edge=4)


def median_geodesic_error(model,keypoints,rotations):
    '''Median angle in degrees between predicted and reference rotations (eval mode)'''
    training = model.training
    model.eval()
    predicted = model.rotations(keypoints)
    model.train(training)
    errors = [geodesic_distance(a,b) for a,b in zip(predicted,rotations)]
    return float(np.degrees(np.median(errors)))


def rotest_loss(model,keypoints,rotations):
    '''Training loss of one batch, as configured in ``model.config.loss``'''
    codes = model(keypoints)
    if model.config.loss == 'points':
        return rot_loss(rotations,gram_schmidt(codes),UNIT_CLOUD)
    target = np.concatenate([rotations[:,:,0],rotations[:,:,1]],axis=1)
    return ops.l1(codes-target)/float(len(rotations))


def train_rotest(dataset,config=None,training=None,validation=None,resume=None,log_path=None):
    r'''Supervised training of the keypoint-to-rotation regressor

    **Description**

        Every epoch shuffles the training pairs with the ``'shuffle'``
        stream, then runs forward, loss, backward and one clipped AdamW step
        per batch. The log holds one row per epoch with the mean training
        loss, the learning rate and the median geodesic error (degrees) on
        `validation`, or on the training pairs when no validation split is
        given. Runs are deterministic per seed on a single thread.

    Arguments
    ---------
    dataset: tuple (keypoints, rotations)
        As returned (first two items) by :func:`make_rotest_dataset`.

    config: RotEstConfig

    training: TrainingConfig

    validation: tuple (keypoints, rotations), *optional*

    resume: Checkpoint, *optional*
        Continue from a previous run: parameters, optimizer moments, step
        counter and stream positions are restored and training continues
        with the epoch after the stored one.

    log_path: str, *optional*
        Write the per-epoch log as CSV after every epoch.

    Returns
    -------
    model: RotEst

    checkpoint: Checkpoint

    log: pandas.DataFrame
    '''
    keypoints,rotations = np.asarray(dataset[0]),np.asarray(dataset[1])
    if len(keypoints) != len(rotations):
        raise ShapeMismatch('{} keypoint rows but {} rotations'.format(len(keypoints),len(rotations)))
    training = training or TrainingConfig()
    if resume is not None:
        config = RotEstConfig.from_dict(resume.config)
    config = config or RotEstConfig()

    streams = RandomStreams(training.seed)
    model = RotEst(config,streams)
    state = training.optimizer(len(keypoints))
    first_epoch = 0
    if resume is not None:
        resume.restore(model,streams)
        if resume.optimizer is not None:
            state = resume.optimizer
        first_epoch = resume.epoch+1
    shuffle = streams.stream('shuffle')
    params = model.parameters()
    rows = []
    model.train()
    for epoch in range(first_epoch,training.epochs):
        order = shuffle.permutation(len(keypoints))
        losses = []
        for start in range(0,len(order),training.batch_size):
            batch = order[start:start+training.batch_size]
            with Tape():
                loss = rotest_loss(model,keypoints[batch],rotations[batch])
            backward(loss)
            losses.append(float(loss.data))
            clip_and_step(state,params,model.gradients())
            model.zero_grad()
        mean_loss = float(np.mean(losses)) if losses else float('nan')
        if not np.isfinite(mean_loss) and losses:
            warnings.warn('Non-finite RotEst training loss at epoch {}'.format(epoch))
        check = validation if validation is not None else (keypoints,rotations)
        median = median_geodesic_error(model,check[0],check[1]) if len(check[0]) else float('nan')
        rows.append(OrderedDict([('epoch',epoch),('step',state.step),('lr',state.current_lr()),
                                 ('loss',mean_loss),('median_geodesic_deg',median)]))
        if training.verbose:
            print('==> epoch {} loss {:.6f} median error {:.3f} deg'.format(epoch,mean_loss,median))
        if log_path is not None:
            pd.DataFrame(rows).to_csv(log_path,index=False,float_format='%.9g')

    last = training.epochs-1 if training.epochs > first_epoch else first_epoch-1
    checkpoint = Checkpoint.from_model('rotest',model,training,state,streams,epoch=last)
    return model.eval(),checkpoint,pd.DataFrame(rows,columns=['epoch','step','lr','loss','median_geodesic_deg'])
