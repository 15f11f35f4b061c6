# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import datetime
import os
import sys
from typing import List

sys.path.insert(0, os.path.abspath("../.."))

import iex  # isort:skip

# -- Project information -----------------------------------------------------

repository = "pyiex"
project = "pyiex: inclusion-exclusion over relevant faces"
year_now = datetime.datetime.now().year
copyright = f"2026-{year_now}, pyiex developers"
author = "pyiex developers"

# The full version, including alpha/beta/rc tags
release = iex.__version__
version = release


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.githubpages",
    "myst_parser",
]

templates_path = ["_templates"]
exclude_patterns: List[str] = []

# Configuration of sphinx.ext.coverage
coverage_show_missing_items = True
coverage_ignore_modules = ["test.family_tests", "test.common"]

# -- Options for HTML output -------------------------------------------------

html_theme = "alabaster"
html_static_path: List[str] = []
