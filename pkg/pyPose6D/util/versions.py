#!python
from __future__ import division,print_function
from collections import OrderedDict
import importlib

from pyPose6D.version import version

#: packages whose versions are echoed into every run directory
TRACKED = ('numpy','scipy','pandas','matplotlib','pint','plyfile')


def dependency_versions():
    '''Versions of pyPose6D and its dependencies, "missing" when not importable'''
    out = OrderedDict([('pyPose6D',version)])
    for name in TRACKED:
        try:
            out[name] = getattr(importlib.import_module(name),'__version__','unknown')
        except ImportError:
            out[name] = 'missing'
    return out
