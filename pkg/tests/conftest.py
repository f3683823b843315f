# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Pytest configuration for Adelic-Series."""

from __future__ import absolute_import, print_function

from fractions import Fraction

import pytest
from click.testing import CliRunner
from hypothesis import strategies as st

from adelic_series.series import NamedFunction


@pytest.fixture
def runner():
    """Click command runner."""
    return CliRunner()


@pytest.fixture(params=list(NamedFunction), ids=lambda f: f.name)
def named_function(request):
    """Each of the regularized exponential, trigonometric and hyperbolic series."""
    return request.param


@pytest.fixture
def small_primes():
    """Primes used across the p-adic tests."""
    return [2, 3, 5, 7, 11]


def rationals(max_height=10**4, nonzero=False):
    """Hypothesis strategy of rationals with bounded numerator and denominator."""
    strategy = st.builds(
        Fraction,
        st.integers(-max_height, max_height),
        st.integers(1, max_height),
    )
    if nonzero:
        strategy = strategy.filter(lambda r: r != 0)
    return strategy

