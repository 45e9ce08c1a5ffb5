#!python
from __future__ import division,print_function
from collections import defaultdict

import numpy as np

from pyPose6D.matching.hungarian import hungarian
from pyPose6D.metrics.EvalRecord import EvalRecord


def match_estimates(estimates,annotations):
    r'''Pair result-file estimates with groundtruth instances

    **Description**

        Within each (scene, image, object) group the estimates are assigned
        to groundtruth instances of that object by minimum total translation
        distance with :func:`pyPose6D.hungarian`. Groundtruth instances left
        without an estimate produce a record with ``pose=None``. Surplus
        estimates are dropped.

    Arguments
    ---------
    estimates: list of EvalRecord
        As returned by :func:`pyPose6D.read_results`.

    annotations: iterable of SceneAnnotation

    Returns
    -------
    records: list of EvalRecord
        One per groundtruth instance, in annotation order.
    '''
    by_key = defaultdict(list)
    for e in estimates:
        by_key[e.key].append(e)

    out = []
    for ann in annotations:
        gt_by_obj = defaultdict(list)
        for obj_id,pose in ann.objects:
            gt_by_obj[obj_id].append(pose)
        for obj_id,gts in gt_by_obj.items():
            ests = by_key.get((ann.scene_id,ann.im_id,obj_id),[])
            chosen = [None]*len(gts)
            if ests:
                costs = np.array([[np.linalg.norm(e.pose.t-g.t) for g in gts] for e in ests])
                if len(ests) >= len(gts):
                    a = hungarian(costs)
                    for g,e in a.pairs():
                        chosen[g] = ests[e]
                else:
                    a = hungarian(costs.T)
                    for e,g in a.pairs():
                        chosen[g] = ests[e]
            for g,pose_gt in enumerate(gts):
                e = chosen[g]
                out.append(EvalRecord(ann.scene_id,ann.im_id,obj_id,
                                      None if e is None else e.pose,
                                      score=0.0 if e is None else e.score,
                                      pose_gt=pose_gt,
                                      time=-1.0 if e is None else e.time))
    return out
