# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Adelic-Series adele, idele and character tests."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adelic_series.adelic import (
    Adele,
    Exponent,
    Idele,
    MultiplicativeCharacter,
    UnitAngle,
    additive_character,
    additive_character_adele,
    adele_add,
    adele_mul,
    is_adele,
    multiplicative_character,
    principal_adele,
    principal_idele,
    product_norm,
    theorem2_adele,
    theorem2_term_valuation,
)
from adelic_series.errors import (
    InsufficientPrecisionError,
    SupportExceedsBudgetError,
    ZeroArgumentError,
)
from adelic_series.numeric import DecimalApproximation
from adelic_series.padic import primes_up_to, to_padic, vp
from adelic_series.series import term_valuation

from conftest import rationals

smooth_rationals = st.builds(
    lambda num, a, b, c: Fraction(num, 2**a * 3**b * 5**c),
    st.integers(-500, 500),
    st.integers(0, 3),
    st.integers(0, 2),
    st.integers(0, 2),
)


@settings(max_examples=200)
@given(rationals(nonzero=True))
def test_product_formula(r):
    """Test ``|r|_inf * prod_p |r|_p = 1``."""
    assert product_norm(r) == 1


def test_product_formula_needs_nonzero():
    """Test that zero has no product formula."""
    with pytest.raises(ZeroArgumentError):
        product_norm(0)


@settings(max_examples=200)
@given(rationals(), rationals())
def test_additive_character_is_trivial_on_principal_pairs(a, b):
    """Test that the additive character is 1 on pairs of rationals."""
    assert additive_character(a, b).is_trivial


def test_unit_angle():
    """Test reduction of angles and their complex values."""
    assert UnitAngle(Fraction(5, 4)).angle == Fraction(1, 4)
    assert UnitAngle(Fraction(-1, 4)).angle == Fraction(3, 4)
    assert UnitAngle(3).is_trivial
    assert abs(UnitAngle(Fraction(1, 4)).value() - 1j) < 1e-12


@settings(max_examples=50, deadline=None)
@given(smooth_rationals, smooth_rationals)
def test_additive_character_of_principal_adeles(a, b):
    """Test the additive character on materialized principal adeles."""
    angle = additive_character_adele(
        principal_adele(a, 13, 12), principal_adele(b, 13, 12)
    )
    assert angle.is_trivial


def test_additive_character_of_adeles_needs_certificates():
    """Test that unmaterialized denominators and inexact reals are refused."""
    with pytest.raises(SupportExceedsBudgetError):
        additive_character_adele(
            principal_adele(Fraction(1, 17), 13, 5), principal_adele(1, 13, 5)
        )
    inexact = Adele(
        DecimalApproximation(1, Fraction(1, 10**5)),
        principal_adele(1, 13, 5).components,
        frozenset(),
        "units",
        13,
    )
    with pytest.raises(InsufficientPrecisionError):
        additive_character_adele(inexact, principal_adele(1, 13, 5))


def test_principal_adele():
    """Test the components of a principal adele."""
    adele = principal_adele(Fraction(3, 20), 7, 6)
    assert sorted(adele.components) == [2, 3, 5, 7]
    assert adele.exceptional == {2, 5}
    assert adele.component(3).valuation == 1
    assert adele.component(2).valuation == -2
    assert is_adele(adele)


def test_principal_idele():
    """Test that principal ideles keep relative precision at every prime."""
    idele = principal_idele(Fraction(-50, 3), 7, 4)
    assert idele.exceptional == {2, 3, 5}
    assert idele.component(5).valuation == 2
    assert idele.component(5).absolute_precision == 6
    assert idele.component(7).norm().to_fraction() == 1
    with pytest.raises(ZeroArgumentError):
        principal_idele(0, 7, 4)


def test_idele_rejects_zero_components():
    """Test that an idele has no zero component."""
    with pytest.raises(ZeroArgumentError):
        Idele(DecimalApproximation.exact(0))
    with pytest.raises(ZeroArgumentError):
        Idele(DecimalApproximation.exact(1), {5: to_padic(25, 5, 2)})


@pytest.mark.parametrize("r", [Fraction(12), Fraction(-7, 30), Fraction(9, 26)])
@pytest.mark.parametrize("c", [1, 2, -3])
def test_multiplicative_character_exact_product_formula(r, c):
    """Test that ``|r|**c prod_p |r|_p**c = 1`` exactly for integer exponents."""
    budget = 13
    chi = MultiplicativeCharacter(
        Exponent(Fraction(c)),
        {p: Exponent(Fraction(c)) for p in primes_up_to(budget)},
    )
    value = multiplicative_character(principal_idele(r, budget, 4), chi)
    assert value.exact == 1


def test_multiplicative_character_exact_single_place():
    """Test a character supported at one prime."""
    chi = MultiplicativeCharacter(c_p={3: Exponent(Fraction(1))})
    value = multiplicative_character(principal_idele(Fraction(9, 2), 7, 4), chi)
    assert value.exact == Fraction(1, 9)


@pytest.mark.parametrize(
    "exponent",
    [
        Exponent(Fraction(1, 2)),
        Exponent(Fraction(0), Fraction(1)),
        Exponent(Fraction(2, 3), Fraction(-1, 5)),
    ],
)
def test_multiplicative_character_complex_exponents(exponent):
    """Test the product formula for non-integer exponents to 30 digits."""
    chi = MultiplicativeCharacter(
        exponent, {p: exponent for p in primes_up_to(7)}
    )
    value = multiplicative_character(principal_idele(Fraction(-14, 15), 7, 4), chi, 30)
    assert value.exact is None
    assert abs(value.real.value - 1) < Fraction(1, 10**25)
    assert abs(value.imag.value) < Fraction(1, 10**25)


def test_multiplicative_character_keeps_real_error_bound():
    """Test that an inexact real component widens the character value."""
    delta = Fraction(1, 10**5)
    lam = Idele(DecimalApproximation(Fraction(2), delta))
    value = multiplicative_character(lam, MultiplicativeCharacter(Exponent(1)))
    assert value.exact is None
    assert value.real.contains(2 + delta)
    assert value.real.contains(2 - delta)
    inverse = multiplicative_character(lam, MultiplicativeCharacter(Exponent(-1)))
    assert inverse.real.contains(1 / (2 + delta))
    assert inverse.real.contains(1 / (2 - delta))


def test_multiplicative_character_square_root_of_inexact_real():
    """Test that a fractional exponent encloses the whole real interval."""
    delta = Fraction(1, 1000)
    lam = Idele(DecimalApproximation(Fraction(4), delta))
    chi = MultiplicativeCharacter(Exponent(Fraction(1, 2)))
    value = multiplicative_character(lam, chi, 20)
    assert value.exact is None
    assert value.real.lower > 0
    assert value.real.lower**2 <= 4 - delta
    assert value.real.upper**2 >= 4 + delta
    assert value.imag.contains(0)


def test_multiplicative_character_trivial_exponents():
    """Test that all-zero exponents give exactly 1 whatever the idele."""
    lam = Idele(
        DecimalApproximation(Fraction(2), Fraction(1, 10**5)),
        {3: to_padic(Fraction(1, 9), 3, 4)},
        frozenset({3}),
        "units elsewhere",
        5,
    )
    chi = MultiplicativeCharacter(Exponent(0), {3: Exponent(0), 5: Exponent(0)})
    value = multiplicative_character(lam, chi)
    assert value.exact == 1
    assert value.real.is_exact


def test_multiplicative_character_needs_certified_units():
    """Test that exponents at unmaterialized exceptional primes are refused."""
    chi = MultiplicativeCharacter(c_p={17: Exponent(Fraction(1))})
    with pytest.raises(SupportExceedsBudgetError):
        multiplicative_character(principal_idele(17, 13, 4), chi)


@pytest.mark.parametrize(
    "r",
    [
        Fraction(0),
        Fraction(1),
        Fraction(-1),
        Fraction(2),
        Fraction(1, 2),
        Fraction(3, 7),
    ],
)
def test_theorem2_adele_is_an_adele(r):
    """Test that series values at rational points form an adele."""
    adele = theorem2_adele(1, 1, 0, r, 13, 8)
    check = is_adele(adele)
    assert check, check.report
    assert adele.exceptional == frozenset(p for p in (2, 7) if r.denominator % p == 0)
    for p, component in adele.components.items():
        if p not in adele.exceptional:
            assert component.in_integers()
            assert component.valuation >= 1


def test_theorem2_adele_parameters():
    """Test the real slot and the refused exponents."""
    adele = theorem2_adele(1, 1, 0, 1, 5, 6, real_q=1, digits=20)
    assert adele.real_component.error_bound <= Fraction(1, 10**20)
    with pytest.raises(ValueError):
        theorem2_adele(1, 1, 0, 1, 5, 6, s=0)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize(
    "r", [Fraction(0), Fraction(1), Fraction(3, 7), Fraction(10), Fraction(1, 2)]
)
def test_theorem2_term_valuation(named_function, p, r):
    """Test the term valuation formula against the series engine."""
    _, mu, nu = named_function.value
    params = named_function.params(Fraction(1, p))
    for n in range(6):
        assert theorem2_term_valuation(mu, nu, n, r, p) == term_valuation(
            params, n, r, p
        )


def test_is_adele_reports_defects():
    """Test that missing certificates and hidden poles are reported."""
    pole = to_padic(Fraction(1, 5), 5, 4)
    zero = DecimalApproximation.exact(0)
    uncertified = Adele(zero, {5: pole}, frozenset({5}), None, 5)
    hidden = Adele(zero, {5: pole}, frozenset(), "units", 5)
    assert not is_adele(uncertified)
    check = is_adele(hidden)
    assert not check
    assert any("p=5" in line for line in check.report)


def test_adele_arithmetic():
    """Test componentwise sums and products of principal adeles."""
    a, b = Fraction(3, 4), Fraction(-5, 9)
    x, y = principal_adele(a, 7, 8), principal_adele(b, 7, 8)
    total, product = adele_add(x, y), adele_mul(x, y)
    assert total.real_component.value == a + b
    assert product.real_component.value == a * b
    assert total.exceptional == {2, 3}
    assert is_adele(total) and is_adele(product)
    for p in primes_up_to(7):
        c = total.component(p)
        assert vp(c.lift() - (a + b), p) >= c.absolute_precision
        c = product.component(p)
        assert vp(c.lift() - a * b, p) >= c.absolute_precision
    one = DecimalApproximation.exact(1)
    bare = Adele(one, dict(x.components), frozenset(), None, 7)
    assert adele_add(x, bare).tail_certificate is None
