#!python
'''
Print which of the packages pyPose6D needs are importable, and in which version.

    $ python check_dependencies.py
'''
import os
import re
import importlib

with open(os.path.join(os.path.dirname(os.path.abspath(__file__)),'requirements.txt')) as f:
    reqs = [line.strip() for line in f if line.strip() and not line.startswith('#')]

#: import names of packages whose distribution name differs
pkg_names = {'sphinx_rtd_theme':'sphinx_rtd_theme','sphinx-autobuild':'sphinx_autobuild'}

#: optional packages checked in addition to requirements.txt
optional = [('opencv-python-headless','cv2','(optional, cross-checks EPnP in the tests)')]


def as_tuple(version):
    return tuple(int(p) for p in re.findall(r'\d+',str(version))[:3])


def check(pkg,module_name,minimum,note):
    try:
        m = importlib.import_module(module_name)
    except ImportError as e:
        if pkg != 'numpy' and 'numpy' in str(e):
            status,installed = '?','Needs NumPy'
        else:
            status,installed = 'X','Not installed'
    else:
        installed = getattr(m,'__version__','unknown')
        status = '✓'
        if minimum and installed != 'unknown' and as_tuple(minimum) > as_tuple(installed):
            status = 'X'
    print('[{}] {:<24} {:<20} {}'.format(status,pkg,installed,note))


for req in reqs:
    parts = req.replace('>=',' >= ').split()
    pkg = parts[0]
    minimum = parts[2] if len(parts) > 2 else None
    note = '(only for building docs)' if 'sphinx' in pkg else ''
    check(pkg,pkg_names.get(pkg,pkg),minimum,note)

for pkg,module_name,note in optional:
    check(pkg,module_name,None,note)
