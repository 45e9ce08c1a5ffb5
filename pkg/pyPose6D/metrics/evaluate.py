#!python
from __future__ import division,print_function
from collections import OrderedDict

import numpy as np
import pandas as pd

from pyPose6D.core.Errors import UnknownClass,EmptyInput
from pyPose6D.geometry.model_diameter import model_diameter
from pyPose6D.metrics.add_error import add_error
from pyPose6D.metrics.adds_error import adds_error
from pyPose6D.metrics.auc import auc
from pyPose6D.metrics.recall_at import recall_at
from pyPose6D.metrics.MetricReport import MetricReport


def _lookup(table,obj_id,what):
    if table is None:
        raise UnknownClass('No {} available for object {}'.format(what,obj_id))
    try:
        value = table[obj_id]
    except KeyError:
        raise UnknownClass('No {} available for object {}'.format(what,obj_id))
    if value is None:
        raise UnknownClass('No {} available for object {}'.format(what,obj_id))
    return value


def evaluate(records,symmetric_classes=(),models=None,diameters=None,names=None,max_threshold=0.1):
    r'''Score pose estimates against groundtruth

    **Description**

        For every record the ADD and ADD-S errors are computed; ADD(-S) uses
        ADD-S for objects in `symmetric_classes` and ADD otherwise. Records
        without an estimate score an infinite error. Errors are aggregated
        per class into AUC and recall values, then averaged over classes
        with equal weight.

        Model clouds and diameters are taken from the record when present,
        otherwise from the per-class `models` and `diameters` mappings
        (dicts or :class:`pyPose6D.ObjectTable`). A missing diameter is
        computed from the model cloud.

    Arguments
    ---------
    records: list of EvalRecord
        Each with a groundtruth pose.

    symmetric_classes: iterable of int

    models: mapping obj_id -> (n,3) array, *optional*

    diameters: mapping obj_id -> float, *optional*

    names: mapping obj_id -> str, *optional*
        Display names for the report.

    Returns
    -------
    report: MetricReport

    Raises
    ------
    *UnknownClass* if a record's class has no model.

    *EmptyInput* if `records` is empty.
    '''
    if not records:
        raise EmptyInput('Nothing to evaluate')
    symmetric_classes = set(int(c) for c in symmetric_classes)

    rows = []
    diameter_cache = {}
    for r in records:
        if r.pose_gt is None:
            raise UnknownClass('Record {} has no groundtruth pose'.format(r))
        model = r.model if r.model is not None else _lookup(models,r.obj_id,'model')
        diameter = r.diameter
        if diameter is None:
            if diameters is not None and diameters.get(r.obj_id) is not None:
                diameter = float(diameters.get(r.obj_id))
            else:
                if r.obj_id not in diameter_cache:
                    diameter_cache[r.obj_id] = model_diameter(model)
                diameter = diameter_cache[r.obj_id]
        if r.pose is None:
            add = adds = np.inf
        else:
            add = add_error(r.pose_gt,r.pose,model)
            adds = adds_error(r.pose_gt,r.pose,model)
        add_s = adds if r.obj_id in symmetric_classes else add
        rows.append(OrderedDict([('scene_id',r.scene_id),('im_id',r.im_id),('obj_id',r.obj_id),
                                 ('add',add),('adds',adds),('add_s',add_s),('diameter',diameter)]))
    frame = pd.DataFrame(rows)

    per_class = OrderedDict()
    for obj_id,group in frame.groupby('obj_id',sort=True):
        per_class[obj_id] = OrderedDict([
            ('auc_add',auc(group['add'].values,max_threshold)),
            ('auc_adds',auc(group['adds'].values,max_threshold)),
            ('auc_add_s',auc(group['add_s'].values,max_threshold)),
            ('ar_add_s_0.1m',recall_at(group['add_s'].values,max_threshold)),
            ('ar_add_s_0.1d',recall_at(group['add_s'].values,0.1*group['diameter'].values)),
            ('count',len(group)),
        ])
    table = pd.DataFrame.from_dict(per_class,orient='index')
    table.index.name = 'obj_id'
    return MetricReport(table,records=frame,names=names)
