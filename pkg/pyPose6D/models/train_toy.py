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
from pyPose6D.core.Errors import InvalidArgument
from pyPose6D.losses.LossWeights import LossWeights
from pyPose6D.losses.hungarian_loss import hungarian_loss
from pyPose6D.matching.match_sets import match_sets
from pyPose6D.models.ToyTransformer import ToyTransformer
from pyPose6D.models.ToyTransformerConfig import ToyTransformerConfig
from pyPose6D.models.TrainingConfig import TrainingConfig
from pyPose6D.models.Checkpoint import Checkpoint

LOSS_COLUMNS = ['class_loss','box_loss','keypoint_loss','pose_loss','keypoint_l1','cross_ratio','total']
LOG_COLUMNS = ['epoch','step','lr'] + LOSS_COLUMNS + ['matched_class_accuracy','matched_keypoint_l1']


def batch_loss(model,samples,weights,symmetric_classes=()):
    r'''Mean set-prediction loss over a batch of SyntheticSamples

    Returns
    -------
    total: Tensor, scalar

    breakdowns: list of LossBreakdown, one per sample
    '''
    predictions = model(np.stack([s.raster for s in samples]))
    breakdowns = []
    for prediction,sample in zip(predictions,samples):
        assignment = match_sets(prediction.tuples(),sample.targets,weights.box_l1,weights.box_giou)
        breakdowns.append(hungarian_loss(prediction,sample.targets,assignment,weights,cam=sample.cam,
                                         symmetric_classes=symmetric_classes))
    total = ops.sum(ops.stack([b.total for b in breakdowns]))/float(len(breakdowns))
    return total,breakdowns


def set_accuracy(model,samples,weights=None,batch_size=16):
    r'''Matched-class accuracy and matched keypoint L1 of a dataset

    **Description**

        Predictions are matched to the targets of each image with
        :func:`pyPose6D.match_sets`. The accuracy is the fraction of matched
        pairs whose most probable class is the target class; the keypoint
        error is the mean absolute difference per normalized coordinate over
        matched pairs. Images without objects contribute nothing.

    Returns
    -------
    accuracy: float
        NaN when there is no object in `samples`.

    keypoint_l1: float
    '''
    weights = weights or LossWeights()
    training = model.training
    model.eval()
    hits = 0
    pairs = 0
    kp_error = 0.0
    kp_count = 0
    for start in range(0,len(samples),batch_size):
        chunk = [samples[i] for i in range(start,min(start+batch_size,len(samples)))]
        predictions = model(np.stack([s.raster for s in chunk]))
        for prediction,sample in zip(predictions,chunk):
            tuples = prediction.tuples()
            assignment = match_sets(tuples,sample.targets,weights.box_l1,weights.box_giou)
            for ti,pi in assignment.pairs():
                target = sample.targets[ti]
                hits += int(tuples[pi].best_class() == target.class_id)
                pairs += 1
                diff = np.abs(tuples[pi].keypoints-target.keypoints.points)
                kp_error += float(diff.sum())
                kp_count += diff.size
    model.train(training)
    accuracy = hits/float(pairs) if pairs else float('nan')
    kp_l1 = kp_error/kp_count if kp_count else float('nan')
    return accuracy,kp_l1


def train_toy(dataset,config=None,training=None,weights=None,validation=None,resume=None,
              symmetric_classes=(),log_path=None):
    r'''End-to-end training of the toy set-prediction transformer

    **Description**

        Every batch runs the forward pass, matches each image's predictions
        to its targets, evaluates the set-prediction loss under that
        matching, back-propagates the batch mean and takes one clipped
        AdamW step. Scenes without objects contribute only the ∅ class
        term. The log holds one row per epoch with the mean loss components
        and the matched-class accuracy and keypoint L1 on `validation` (or
        on the training data).

    Arguments
    ---------
    dataset: SyntheticDataset or list of SyntheticSample

    config: ToyTransformerConfig, *optional*
        Defaults to the toy shape with ``dataset.num_classes`` classes.

    training: TrainingConfig

    weights: LossWeights

    validation: SyntheticDataset, *optional*

    resume: Checkpoint, *optional*
        See :func:`train_rotest`.

    symmetric_classes: iterable of int
        Class ids trained with the symmetric rotation loss.

    log_path: str, *optional*

    Returns
    -------
    model: ToyTransformer

    checkpoint: Checkpoint

    log: pandas.DataFrame
    '''
    samples = list(dataset)
    training = training or TrainingConfig()
    weights = weights or LossWeights()
    if resume is not None:
        config = ToyTransformerConfig.from_dict(resume.config)
    if config is None:
        config = ToyTransformerConfig(num_classes=dataset.num_classes,representation=dataset.representation)
    for s in samples:
        if len(s) > config.queries:
            raise InvalidArgument('Sample {} has {} objects but the model has {} queries'.format(
                s.seed,len(s),config.queries))

    streams = RandomStreams(training.seed)
    model = ToyTransformer(config,streams)
    state = training.optimizer(len(samples))
    first_epoch = 0
    if resume is not None:
        resume.restore(model,streams)
        if resume.optimizer is not None:
            state = resume.optimizer
        first_epoch = resume.epoch+1
    shuffle = streams.stream('shuffle')
    params = model.parameters()
    check = list(validation) if validation is not None else samples
    rows = []
    model.train()
    for epoch in range(first_epoch,training.epochs):
        order = shuffle.permutation(len(samples))
        sums = OrderedDict((k,0.0) for k in LOSS_COLUMNS)
        count = 0
        for start in range(0,len(order),training.batch_size):
            batch = [samples[i] for i in order[start:start+training.batch_size]]
            with Tape():
                total,breakdowns = batch_loss(model,batch,weights,symmetric_classes)
            backward(total)
            clip_and_step(state,params,model.gradients())
            model.zero_grad()
            for b in breakdowns:
                for k,v in b.as_dict().items():
                    sums[k] += v
                count += 1
        means = OrderedDict((k,v/count if count else float('nan')) for k,v in sums.items())
        if count and not np.isfinite(means['total']):
            warnings.warn('Non-finite set-prediction loss at epoch {}'.format(epoch))
        accuracy,kp_l1 = set_accuracy(model,check,weights,training.batch_size)
        row = OrderedDict([('epoch',epoch),('step',state.step),('lr',state.current_lr())])
        row.update(means)
        row['matched_class_accuracy'] = accuracy
        row['matched_keypoint_l1'] = kp_l1
        rows.append(row)
        if training.verbose:
            print('==> epoch {} loss {:.6f} class accuracy {:.3f} keypoint L1 {:.4f}'.format(
                epoch,means['total'],accuracy,kp_l1))
        if log_path is not None:
            pd.DataFrame(rows,columns=LOG_COLUMNS).to_csv(log_path,index=False,float_format='%.9g')

    last = training.epochs-1 if training.epochs > first_epoch else first_epoch-1
    checkpoint = Checkpoint.from_model('toy',model,training,state,streams,epoch=last)
    return model.eval(),checkpoint,pd.DataFrame(rows,columns=LOG_COLUMNS)
