#!python
from __future__ import division,print_function
import os
import tempfile
from contextlib import contextmanager


@contextmanager
def atomic_write(path,mode='w'):
    r'''Open a temporary sibling of `path` and move it into place on success

    Readers never observe a partially written file; on error the temporary
    file is removed and `path` is left untouched.
    '''
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(directory):
        os.makedirs(directory)
    fd,tmp = tempfile.mkstemp(prefix='.'+os.path.basename(path)+'.',dir=directory)
    try:
        with os.fdopen(fd,mode) as f:
            yield f
        os.replace(tmp,path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
