#!python
from __future__ import division,print_function
import os

from pyPose6D.core.Errors import ParseError

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),'data')
YCBV_SYMMETRIC = os.path.join(DATA_DIR,'ycbv_symmetric.txt')
YCBV_CLASSES = os.path.join(DATA_DIR,'ycbv_classes.txt')


def _records(path):
    with open(path,'r') as f:
        for lineno,line in enumerate(f,start=1):
            line = line.split('#',1)[0].strip()
            if line:
                yield lineno,line


def load_symmetric(path=None):
    r'''Object ids scored with the symmetric losses and metrics

    Plain text, one id per line, ``#`` starts a comment. Defaults to the
    YCB-V list shipped with the package.

    Returns
    -------
    ids: frozenset of int
    '''
    path = path or YCBV_SYMMETRIC
    ids = set()
    for lineno,line in _records(path):
        try:
            ids.add(int(line))
        except ValueError:
            raise ParseError('expected an integer object id, got {!r}'.format(line),path=path,line=lineno)
    return frozenset(ids)


def load_class_names(path=None):
    '''Mapping object id -> name from "id name" lines (YCB-V by default)'''
    path = path or YCBV_CLASSES
    names = {}
    for lineno,line in _records(path):
        parts = line.split(None,1)
        if len(parts) != 2 or not parts[0].isdigit():
            raise ParseError('expected "id name", got {!r}'.format(line),path=path,line=lineno)
        names[int(parts[0])] = parts[1].strip()
    return names
