# -*- coding: utf-8 -*-
#
# spherecodes documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

# noqa
# flake8: noqa
# pylint: skip-file
# nopep8

import sys
import os
import subprocess
from unittest.mock import MagicMock


class Mock(MagicMock):

    @classmethod
    def __getattr__(cls, name):
        return Mock()

# The test runner is not needed to document the library.
MOCK_MODULES = ['avocado']
sys.modules.update((mod_name, Mock()) for mod_name in MOCK_MODULES)

import_path = []
import_path.insert(0, ("..", ".."))
for p in import_path:
    path = os.path.abspath(os.path.join(*p))
    sys.path.insert(0, path)

# -- General configuration ----------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.intersphinx',
              'sphinx.ext.todo',
              'sphinx.ext.coverage',
              'sphinxcontrib.napoleon']

source_suffix = '.rst'
master_doc = 'index'

project = u'spherecodes'
copyright = u'2016, spherecodes developers'
version = '0.1.0'
release = '0.1.0'

exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if not on_rtd:  # only import and set the theme if we're building docs locally
    try:
        import sphinx_rtd_theme
        html_theme = 'sphinx_rtd_theme'
        html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
    except ImportError:
        html_theme = 'default'


class DocBuildError(Exception):
    pass

# Auto generate API documentation
src_dir = os.path.abspath(os.path.join("..", "..", "spherecodes"))
api_dir = os.path.abspath(os.path.join(".", "api"))
_status = subprocess.call(["sphinx-apidoc", "-f", "-e", "-o", api_dir,
                           src_dir, os.path.join(src_dir, "tests")])
if _status:
    raise DocBuildError("API rst auto generation failed: %s" % _status)

htmlhelp_basename = 'spherecodesdoc'

latex_documents = [
    ('index', 'spherecodes.tex', u'spherecodes Documentation',
     u'spherecodes developers', 'manual'),
]

man_pages = [
    ('index', 'spherecodes', u'spherecodes Documentation',
     [u'spherecodes developers'], 1)
]

texinfo_documents = [
    ('index', 'spherecodes', u'spherecodes Documentation',
     u'spherecodes developers', 'spherecodes',
     'Spherical codes via the Yaglom map.', 'Miscellaneous'),
]

# Napoleon settings
napoleon_google_docstring = False
napoleon_numpy_docstring = True
todo_include_todos = True
autodoc_member_order = 'groupwise'
