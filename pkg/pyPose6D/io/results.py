#!python
r'''
Result files in the BOP exchange format.

One estimate per row under the header ``scene_id,im_id,obj_id,score,R,t,time``.
``R`` holds nine space-separated row-major values, ``t`` three space-separated
values in millimeters, and ``time`` the estimation time in seconds (-1 when
unknown). Numbers are written with 9 significant digits.
'''
from __future__ import division,print_function
import numpy as np
import pandas as pd

from pyPose6D.core.Errors import ParseError
from pyPose6D.geometry.Pose import Pose
from pyPose6D.metrics.EvalRecord import EvalRecord
from pyPose6D.io.atomic_write import atomic_write
from pyPose6D.util.UnitConverter import default_converter

COLUMNS = ['scene_id','im_id','obj_id','score','R','t','time']


def format_number(x):
    '''9 significant digits, no negative zero'''
    return '{:.9g}'.format(float(x)+0.0)


def _format_vector(values):
    return ' '.join(format_number(v) for v in np.ravel(values))


def write_results(records,path):
    '''Write estimates (EvalRecord with a pose) to `path`, replacing it atomically'''
    uc = default_converter()
    rows = []
    for r in records:
        rows.append([str(r.scene_id),str(r.im_id),str(r.obj_id),format_number(r.score),
                     _format_vector(r.pose.R),_format_vector(uc.toMillimeters(r.pose.t)),
                     format_number(r.time)])
    frame = pd.DataFrame(rows,columns=COLUMNS)
    with atomic_write(path) as f:
        frame.to_csv(f,index=False)


def _parse_vector(text,n,path,line,name):
    try:
        values = np.array([float(v) for v in str(text).split()])
    except ValueError:
        raise ParseError('column {} is not numeric: {!r}'.format(name,text),path=path,line=line)
    if values.size != n:
        raise ParseError('column {} needs {} values, got {}'.format(name,n,values.size),path=path,line=line)
    return values


def read_results(path):
    r'''Read a result file written by :func:`write_results`

    Returns
    -------
    records: list of EvalRecord
        Estimates without groundtruth; translations in meters.

    Raises
    ------
    *ParseError* naming the line of the first malformed row.
    '''
    try:
        frame = pd.read_csv(path,dtype=str,keep_default_na=False)
    except pd.errors.EmptyDataError:
        raise ParseError('empty results file',path=path,line=1)
    except pd.errors.ParserError as e:
        raise ParseError('malformed CSV: {}'.format(e),path=path)
    if list(frame.columns) != COLUMNS:
        raise ParseError('expected header {}, got {}'.format(','.join(COLUMNS),','.join(frame.columns)),
                         path=path,line=1)

    uc = default_converter()
    records = []
    for i,row in enumerate(frame.itertuples(index=False)):
        line = i+2
        R = _parse_vector(row.R,9,path,line,'R').reshape(3,3)
        t = _parse_vector(row.t,3,path,line,'t')
        try:
            pose = Pose(R,uc.toMeters(t))
            records.append(EvalRecord(int(row.scene_id),int(row.im_id),int(row.obj_id),pose,
                                      score=float(row.score),time=float(row.time)))
        except ValueError as e:
            raise ParseError(str(e),path=path,line=line)
    return records
