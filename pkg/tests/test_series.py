# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Adelic-Series series engine tests."""

from contextlib import nullcontext as does_not_raise
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mock import patch

from adelic_series.errors import (
    ClassicalDivergenceError,
    InvalidSeriesParamsError,
    SeriesTermLimitError,
)
from adelic_series.numeric import factorial, render_decimal
from adelic_series.padic import reduce_modulo, vp
from adelic_series.series import (
    NamedFunction,
    SeriesParams,
    classical_domain_check,
    coeff_I,
    derivative_eval_real,
    eval_padic,
    eval_real,
    partial_sum,
    term,
    term_valuation,
)

from conftest import rationals

EXP = NamedFunction.exp_q


@pytest.mark.parametrize(
    "epsilon, mu, nu, q, expectation",
    [
        (1, 1, 0, 0, does_not_raise()),
        (-1, 2, 1, Fraction(1, 2), does_not_raise()),
        (0, 1, 0, 0, pytest.raises(InvalidSeriesParamsError)),
        (1, 0, 0, 0, pytest.raises(InvalidSeriesParamsError)),
        (1, 1, -1, 0, pytest.raises(InvalidSeriesParamsError)),
        (1, 1, 0, -1, pytest.raises(InvalidSeriesParamsError)),
    ],
)
def test_series_params_validation(epsilon, mu, nu, q, expectation):
    """Test that only valid selectors are accepted."""
    with expectation:
        SeriesParams(epsilon, mu, nu, q)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("exp_q", NamedFunction.exp_q),
        ("sin", NamedFunction.sin_q),
        ("cosh", NamedFunction.cosh_q),
    ],
)
def test_named_function_lookup(name, expected):
    """Test lookup by regularized and classical names."""
    assert NamedFunction.from_name(name) is expected


def test_named_function_lookup_unknown():
    """Test that unknown names are refused."""
    with pytest.raises(InvalidSeriesParamsError):
        NamedFunction.from_name("tan")


@pytest.mark.parametrize(
    "k, q, expected",
    [
        (0, 0, Fraction(1)),
        (0, 1, Fraction(1, 2)),
        (1, 1, Fraction(1, 2)),
        (2, 1, Fraction(4, 5)),
        (3, Fraction(1, 2), Fraction(432, 433)),
    ],
)
def test_coeff_I(k, q, expected):
    """Test the regularization coefficients."""
    assert coeff_I(k, q) == expected


def test_term():
    """Test single terms of the named functions."""
    assert term(EXP.params(1), 0, 5) == Fraction(1, 2)
    assert term(NamedFunction.cos_q.params(0), 1, 2) == -2
    assert term(NamedFunction.sinh_q.params(1), 0, 3) == Fraction(3, 2)


@pytest.mark.parametrize(
    "function, x, digits, expected",
    [
        (EXP, 1, 20, "2.71828182845904523536"),
        (NamedFunction.cos_q, 1, 15, "0.540302305868140"),
        (NamedFunction.sinh_q, -2, 12, "-3.626860407847"),
        (EXP, Fraction(-7, 2), 10, "0.0301973834"),
    ],
)
def test_eval_real_classical_values(function, x, digits, expected):
    """Test that q = 0 gives back the classical functions."""
    value = eval_real(function.params(0), x, digits)
    assert value.error_bound <= Fraction(1, 10**digits)
    assert render_decimal(value, digits) == expected


def test_eval_real_special_value(named_function):
    """Test the exact values at zero."""
    value = eval_real(named_function.params(1), 0, 10)
    assert value.is_exact
    assert value.value == (Fraction(1, 2) if named_function.value[2] == 0 else 0)


def test_eval_real_regularized_exp_close_to_classical():
    """Test that a small q moves exp by less than 3q."""
    q = Fraction(1, 10**6)
    gap = eval_real(EXP.params(q), 1, 30) - eval_real(EXP.params(0), 1, 30)
    assert gap.magnitude_bound() <= 3 * q
    assert gap.value < 0


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from(list(NamedFunction)),
    st.sampled_from([Fraction(0), Fraction(1), Fraction(1, 2)]),
    rationals(4),
)
def test_eval_real_encloses_long_partial_sums(function, q, x):
    """Test that the certified value encloses a much longer partial sum."""
    params = function.params(q)
    value = eval_real(params, x, 12)
    assert value.error_bound <= Fraction(1, 10**12)
    reference = partial_sum(params, x, 80)
    assert abs(reference - value.value) <= value.error_bound + Fraction(1, 10**30)


def test_derivative_of_sin_is_cos():
    """Test that termwise differentiation of sin gives cos."""
    x = Fraction(3, 4)
    derivative = derivative_eval_real(NamedFunction.sin_q.params(0), 1, x, 25)
    cosine = eval_real(NamedFunction.cos_q.params(0), x, 25)
    difference = derivative - cosine
    assert difference.magnitude_bound() <= Fraction(1, 10**24)


def test_second_derivative_of_regularized_exp():
    """Test the second termwise derivative against an exact long partial sum."""
    params = EXP.params(1)
    value = derivative_eval_real(params, 2, 1, 20)
    reference = sum(
        (coeff_I(k, 1) / factorial(k - 2) for k in range(2, 60)), Fraction(0)
    )
    assert abs(value.value - reference) <= value.error_bound + Fraction(1, 10**40)
    with pytest.raises(ValueError):
        derivative_eval_real(params, -1, 1, 10)


@pytest.mark.parametrize(
    "function, q, x",
    [
        (EXP, 1, Fraction(1, 2)),
        (EXP, Fraction(1, 2), Fraction(-3, 2)),
        (NamedFunction.sin_q, 1, Fraction(2, 3)),
        (NamedFunction.cosh_q, 0, Fraction(5, 4)),
    ],
)
def test_derivative_matches_central_difference(function, q, x):
    """Test the first derivative against a central difference quotient."""
    params = function.params(q)
    h = Fraction(1, 10**8)
    derivative = derivative_eval_real(params, 1, x, 20)
    ahead = eval_real(params, x + h, 20).value
    behind = eval_real(params, x - h, 20).value
    assert abs(derivative.value - (ahead - behind) / (2 * h)) <= Fraction(1, 10**6)


@pytest.mark.parametrize("x", [1, Fraction(1, 3), Fraction(5, 2)])
@pytest.mark.parametrize("q", [0, 1, Fraction(1, 2)])
@pytest.mark.parametrize(
    "function",
    [
        NamedFunction.cos_q,
        NamedFunction.cosh_q,
        NamedFunction.sin_q,
        NamedFunction.sinh_q,
    ],
)
def test_partial_sum_parity(function, q, x):
    """Test exact evenness of cos/cosh and oddness of sin/sinh partial sums."""
    params = function.params(q)
    sign = (-1) ** params.nu
    assert partial_sum(params, -x, 10) == sign * partial_sum(params, x, 10)


@pytest.mark.parametrize(
    "x, p, expected",
    [
        (1, 5, False),
        (5, 5, True),
        (Fraction(10, 3), 5, True),
        (Fraction(1, 5), 5, False),
        (2, 2, False),
        (4, 2, True),
        (3, 2, False),
    ],
)
def test_classical_domain_check(x, p, expected):
    """Test the domain ``|x|_p < 1`` and ``|x|_2 < 1/2`` of the classical series."""
    assert classical_domain_check("exp", x, p) is expected
    assert classical_domain_check(NamedFunction.sin_q, x, p) is expected


def test_classical_domain_check_unknown_function():
    """Test that unknown function names are refused."""
    with pytest.raises(InvalidSeriesParamsError):
        classical_domain_check("log", 5, 5)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_term_valuation_is_exact(named_function, p):
    """Test the valuation formula against the valuation of the exact term."""
    params = named_function.params(Fraction(1, p))
    for x in (Fraction(1), Fraction(p, 3), Fraction(2, p)):
        for n in range(8):
            value = term(params, n, x)
            assert term_valuation(params, n, x, p) == vp(value, p)


def test_eval_padic_regularized_exp_at_one():
    """Test the residue of exp_q(1) in Q_5 at q = 1/5."""
    report = eval_padic(EXP.params(Fraction(1, 5)), 1, 5, 20)
    assert report.result.prime == 5
    assert report.result.valuation >= 1
    assert report.result.absolute_precision == 20
    assert report.tail_bound_exponent >= 20


def test_eval_padic_at_zero():
    """Test that the value at zero is the constant term."""
    report = eval_padic(EXP.params(Fraction(1, 5)), 0, 5, 10)
    assert report.result == reduce_modulo(Fraction(5, 6), 5, 10)
    sine = eval_padic(NamedFunction.sin_q.params(1), 0, 3, 10)
    assert sine.result.is_zero


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("q", [Fraction(1), Fraction(1, 2)])
def test_eval_padic_tail_is_certified(named_function, q, p):
    """Test that adding more terms does not change the certified residue."""
    target = 12
    params = named_function.params(q)
    for x in (Fraction(1), Fraction(1, p), Fraction(p**2)):
        report = eval_padic(params, x, p, target)
        longer = partial_sum(params, x, report.terms_used + 15)
        assert reduce_modulo(longer, p, target) == report.result


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(list(NamedFunction)),
    st.sampled_from([Fraction(1), Fraction(1, 2)]),
    st.sampled_from([2, 3, 5]),
    st.sampled_from(["one", "inverse", "prime"]),
    st.integers(3, 12),
)
def test_eval_padic_is_independent_of_overshoot(function, q, p, where, target):
    """Test that a residue computed too precisely truncates to the same class."""
    x = {"one": Fraction(1), "inverse": Fraction(1, p), "prime": Fraction(p)}[where]
    params = function.params(q)
    finer = eval_padic(params, x, p, target + 5).result
    assert finer.truncate(target) == eval_padic(params, x, p, target).result


@pytest.mark.parametrize("p, x", [(5, 5), (3, Fraction(9, 2)), (2, 4)])
def test_eval_padic_classical_inside_domain(p, x):
    """Test the classical exponential inside its p-adic disc."""
    report = eval_padic(EXP.params(0), x, p, 10)
    longer = partial_sum(EXP.params(0), x, report.terms_used + 30)
    assert reduce_modulo(longer, p, 10) == report.result


@pytest.mark.parametrize("p, x", [(5, 1), (2, 2), (3, Fraction(1, 3))])
def test_eval_padic_classical_outside_domain(p, x):
    """Test that the classical series is refused outside its disc."""
    with pytest.raises(ClassicalDivergenceError):
        eval_padic(EXP.params(0), x, p, 10)


def test_term_limit_is_enforced():
    """Test that evaluation stops at the configured number of terms."""
    with patch("adelic_series.series.MAX_SERIES_TERMS", 3):
        with pytest.raises(SeriesTermLimitError):
            eval_real(EXP.params(0), 10, 20)
        with pytest.raises(SeriesTermLimitError):
            eval_padic(EXP.params(1), 1, 5, 20)
