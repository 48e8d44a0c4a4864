# Path Setup
import os
import sys
import sphinx_rtd_theme
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

# Project information
project = "Nodegames"
copyright = "2026, Matt Buckley"
author = "Matt Buckley"

version = '0.1'
release = '0.1.0'


# General Configuration
extensions = ['sphinx.ext.autosummary',
              'sphinx.ext.viewcode',
              'sphinx.ext.autodoc',
              'sphinx.ext.intersphinx',
              'sphinx.ext.mathjax',
              'sphinx_rtd_theme',
              'numpydoc']
templates_path = ['_templates']
source_suffix = ['.rst', '.md']
master_doc = 'index'
exclude_patterns = ['**/tests/**']
pygments_style = 'sphinx'
autodoc_member_order = 'bysource'
autosummary_generate = False
intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'pandas': ('https://pandas.pydata.org/docs', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}


# Options for HTML output
html_theme = 'sphinx_rtd_theme'
html_static_path = []
numpydoc_show_class_members = False
numpydoc_class_members_toctree = False


# Options for the other builders
htmlhelp_basename = 'nodegamesdoc'
latex_documents = [
    (master_doc, 'nodegames.tex', 'Nodegames Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'nodegames', 'Nodegames Documentation', [author], 1),
]
