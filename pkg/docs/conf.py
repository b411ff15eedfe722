# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# http://www.sphinx-doc.org/en/stable/config

# -- Path setup --------------------------------------------------------------

# Incase the project was not installed
import os
import sys
sys.path.insert(0, os.path.abspath('..'))

import mgeo

# -- Project information -----------------------------------------------------

project = 'mgeo'
copyright = ("2026, mgeo developers. Project structure based on the "
             "Computational Molecular Science Python Cookiecutter version 1.0")
author = 'mgeo developers'

# The short X.Y version
version = '.'.join(mgeo.__version__.split('.')[:2])
# The full version, including alpha/beta/rc tags
release = mgeo.__version__


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autosummary',
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinxarg.ext',
]

autosummary_generate = True
autosummary_imported_members = True
add_module_names = False
napoleon_google_docstring = False
napoleon_use_param = False
napoleon_use_ivar = True
todo_include_todos = True

# Compiled kernels are optional at documentation time
autodoc_mock_imports = ['numba']

source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'default'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

# Output file base name for HTML help builder.
htmlhelp_basename = 'mgeodoc'


# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'mgeo.tex', 'mgeo Documentation',
     'mgeo', 'manual'),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'mgeo', 'mgeo Documentation',
     [author], 1)
]


# -- Extension configuration -------------------------------------------------

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}
