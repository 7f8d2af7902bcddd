# Sphinx configuration of the pyRACE documentation
#
# Build with ./generate.sh; the pages document the public names exported by ``pyRACE`` and ``pyRACE.outputs``.
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import pyRACE  # noqa: E402

project = 'pyRACE'
copyright = '2026, pyRACE developers'
author = 'pyRACE developers'
version = '.'.join(pyRACE.__version__.split('.')[:2])
release = pyRACE.__version__

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.intersphinx',
              'sphinx.ext.viewcode',
              'sphinx_autodoc_typehints',
              'sphinx_rtd_theme']

master_doc = 'index'
exclude_patterns = ['_build']

# API pages list the enumerations, functions and classes in the order of the source modules
autodoc_member_order = 'bysource'
autodoc_default_options = {'undoc-members': False, 'show-inheritance': True}
autoclass_content = 'both'
# docstrings use the ``:param x:`` / ``:raise E:`` fields, the signatures carry the types
typehints_fully_qualified = False
always_document_param_types = False

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'pandas': ('https://pandas.pydata.org/docs', None),
    'click': ('https://click.palletsprojects.com/en/stable', None),
}

html_theme = 'sphinx_rtd_theme'
html_theme_options = {'navigation_depth': 2, 'collapse_navigation': False}
html_show_sourcelink = False
