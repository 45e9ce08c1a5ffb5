#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# pyPose6D documentation build configuration file.

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.napoleon',
              'sphinx.ext.todo',
              'sphinx.ext.mathjax',
              'sphinx.ext.inheritance_diagram',
              'sphinx.ext.viewcode']

napoleon_google_docstring = True
napoleon_numpy_docstring = True
napoleon_include_init_with_doc = True
napoleon_include_special_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = True

autodoc_member_order = 'bysource'
autodoc_mock_imports = ['cv2']

source_suffix = '.rst'
master_doc = 'index'

project = 'pyPose6D'
copyright = '2026, the pyPose6D developers'
author = 'the pyPose6D developers'

## Hack in versiontools
import sys; sys.path.insert(0,'../')
from versiontools import get_python_version
del sys.path[0] # readthedocs must import the installed package, not ../
release = get_python_version('../pyPose6D/version.py')
version = release.split('-')[0]

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = True

# -- HTML -----------------------------------------------------------------
html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'pyPose6Ddoc'

# -- LaTeX / man ----------------------------------------------------------
latex_elements = {
    'classoptions': ',openany',
    'babel': r'\usepackage[english]{babel}',
}
latex_documents = [
    (master_doc, 'pyPose6D.tex', 'pyPose6D Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'pypose6d', 'pyPose6D Documentation', [author], 1)
]
