# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Adelic-Series."""

from __future__ import absolute_import, print_function

from .version import __version__

__all__ = ("__version__",)
