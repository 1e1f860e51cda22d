# Configuration file for the Sphinx documentation builder.
#
# http://www.sphinx-doc.org/en/master/config

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

from pathlib import Path

# -- Project information -----------------------------------------------------

project = 'quantum-schubert'
author = 'quantum-schubert developers'

version = ''
release = (Path(__file__).parent.parent/"quantum_schubert"/"VERSION").open('r').read().strip()


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.autosummary',
    'sphinx.ext.mathjax',
]

autodoc_member_order = 'bysource'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = None


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'quantum-schubertdoc'

man_pages = [
    (master_doc, 'qsc', 'quantum-schubert Documentation', [author], 1)
]
