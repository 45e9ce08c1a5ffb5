#!python
from __future__ import division,print_function
import os
from collections import OrderedDict

from pyPose6D.core.Errors import ParseError,InvalidArgument
from pyPose6D.util.versions import dependency_versions

CONFIG_FILENAME = 'config.txt'
OUTPUT_ROOT_VARIABLE = 'PYPOSE6D_OUTPUT_ROOT'

_TRUE = ('1','true','yes','on')
_FALSE = ('0','false','no','off')


def _coerce(text,default,key):
    if isinstance(default,bool):
        low = text.strip().lower()
        if low in _TRUE:
            return True
        if low in _FALSE:
            return False
        raise InvalidArgument('Option {} expects a boolean, got {!r}'.format(key,text))
    if isinstance(default,int):
        return int(text)
    if isinstance(default,float):
        return float(text)
    return text


class RunConfig(object):
    r'''Resolved parameters of one command-line run

    **Description**

        Values are resolved in three layers: command defaults, then an
        optional flat ``key=value`` file, then explicit command-line flags.
        Later layers win. Values read from a file are converted to the type
        of the corresponding default. Every output directory receives a
        ``config.txt`` echoing the resolved values together with the package
        and dependency versions, which makes each run self-describing.

        File syntax: one ``key=value`` per line, blank lines and lines
        starting with ``#`` are skipped, whitespace around keys and values is
        stripped.

    Example
    -------
    .. code-block:: python

        from pyPose6D.util import RunConfig

        cfg = RunConfig({'seed':0,'epochs':10,'lr':2e-4})
        cfg.load('train.cfg')            # e.g. "epochs = 50"
        cfg.update({'seed':3,'lr':None}) # None means "flag not given"
        cfg['epochs']                    # 50
        cfg.write('runs/exp1')

    '''
    def __init__(self,defaults=None):
        self.defaults = OrderedDict(defaults or {})
        self.values = OrderedDict(self.defaults)

    def __repr__(self):
        return '<RunConfig {}>'.format(' '.join('{}={}'.format(k,v) for k,v in self.values.items()))

    def __getitem__(self,key):
        return self.values[key]

    def __setitem__(self,key,value):
        self.values[key] = value

    def __contains__(self,key):
        return key in self.values

    def get(self,key,default=None):
        return self.values.get(key,default)

    def as_dict(self):
        return OrderedDict(self.values)

    @staticmethod
    def parse(path):
        '''Read a flat key=value file into an ordered dict of strings'''
        out = OrderedDict()
        with open(path,'r') as f:
            for lineno,line in enumerate(f,start=1):
                line = line.strip()
                if not line or line.startswith('#'):
                    continue
                if '=' not in line:
                    raise ParseError('expected key=value',path=path,line=lineno)
                key,value = line.split('=',1)
                key = key.strip()
                if not key:
                    raise ParseError('empty key',path=path,line=lineno)
                out[key] = value.strip()
        return out

    def load(self,path):
        '''Merge a config file on top of the current values'''
        for key,text in self.parse(path).items():
            try:
                self.values[key] = _coerce(text,self.defaults.get(key),key)
            except ValueError as e:
                raise ParseError('bad value for {}: {}'.format(key,e),path=path)
        return self

    def update(self,flags):
        '''Merge explicitly given flags; None values are ignored'''
        for key,value in flags.items():
            if value is not None:
                self.values[key] = value
        return self

    def dumps(self):
        lines = ['# resolved configuration']
        for name,ver in dependency_versions().items():
            lines.append('# {} {}'.format(name,ver))
        for key in sorted(self.values):
            lines.append('{}={}'.format(key,self.values[key]))
        return '\n'.join(lines)+'\n'

    def write(self,directory):
        '''Write ``config.txt`` into `directory` (created if needed)'''
        if not os.path.isdir(directory):
            os.makedirs(directory)
        path = os.path.join(directory,CONFIG_FILENAME)
        with open(path,'w') as f:
            f.write(self.dumps())
        return path


def output_directory(out,command):
    r'''Directory of a run

    `out` when given, otherwise ``$PYPOSE6D_OUTPUT_ROOT/<command>`` and finally
    ``./runs/<command>``.
    '''
    if out:
        return out
    root = os.environ.get(OUTPUT_ROOT_VARIABLE) or 'runs'
    return os.path.join(root,command)
