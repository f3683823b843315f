#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Sphinx configuration of the Adelic-Series documentation."""

from __future__ import print_function

import os

# -- General configuration ------------------------------------------------

html_baseurl = os.environ.get("READTHEDOCS_CANONICAL_URL", "")

if os.environ.get("READTHEDOCS", "") == "True":
    if "html_context" not in globals():
        html_context = {}
    html_context["READTHEDOCS"] = True

extensions = [
    "myst_parser",
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx_click",
]

templates_path = ["_templates"]

source_suffix = [".rst", ".md"]

# Allow using ::: in Markdown files
myst_enable_extensions = ["colon_fence"]

master_doc = "index"

project = "adelic-series"
copyright = "2026, Adelic-Series contributors"
author = "Adelic-Series contributors"

# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join("..", "adelic_series", "version.py"), "rt") as fp:
    exec(fp.read(), g)
    version = g["__version__"]

release = version

language = "en"

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

pygments_style = "sphinx"

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = "alabaster"

html_theme_options = {
    "description": """<p>Adelic-Series evaluates regularized power series
                      that converge on the real line and in every field of
                      p-adic numbers.</p>""",
    "github_button": False,
    "show_powered_by": False,
    "nosidebar": True,
}

htmlhelp_basename = "adelicseriesdoc"

# -- Options for manual page output ---------------------------------------

man_pages = [(master_doc, "adelic-series", "Adelic-Series Documentation", [author], 1)]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "marshmallow": ("https://marshmallow.readthedocs.io/en/stable/", None),
    "mpmath": ("https://mpmath.org/doc/current/", None),
}
