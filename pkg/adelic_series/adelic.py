# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Adeles, ideles, their norms and characters.

An adele cannot be stored as an infinite sequence. It is materialized at
every prime up to ``prime_budget`` and carries a tail certificate: a
statement of why every other component lies in Z_p. ``exceptional`` lists
the primes where integrality is not claimed.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, NamedTuple, Optional

import mpmath

from adelic_series.config import DEFAULT_DIGITS
from adelic_series.errors import (
    InsufficientPrecisionError,
    SupportExceedsBudgetError,
    ZeroArgumentError,
)
from adelic_series.numeric import (
    DecimalApproximation,
    RationalLike,
    format_rational,
)
from adelic_series.padic import (
    PadicNumber,
    frac_part,
    legendre_valuation,
    padic_add,
    padic_mul,
    prime_support,
    primes_up_to,
    reduce_modulo,
    vp,
)
from adelic_series.series import SeriesParams, eval_padic, eval_real


@dataclass(frozen=True)
class Adele:
    """Finitely materialized adele with a certificate for the other primes."""

    real_component: DecimalApproximation
    components: Dict[int, PadicNumber] = field(default_factory=dict)
    exceptional: FrozenSet[int] = frozenset()
    tail_certificate: Optional[str] = None
    prime_budget: int = 1

    def component(self, p: int) -> PadicNumber:
        """Materialized component at ``p``."""
        return self.components[p]


@dataclass(frozen=True)
class Idele(Adele):
    """Adele with nonzero components, units at every unlisted prime."""

    def __post_init__(self):
        """Reject zero components."""
        if not self.real_component.excludes_zero():
            raise ZeroArgumentError("Idele needs a nonzero real component.")
        for p, component in self.components.items():
            if component.is_zero:
                raise ZeroArgumentError(
                    "Idele component at {} is zero ({}).".format(p, component)
                )


class Exponent(NamedTuple):
    """Complex exponent ``real + i*imag`` with rational parts."""

    real: Fraction
    imag: Fraction = Fraction(0)

    @property
    def is_integer(self) -> bool:
        """Whether the exponent is a rational integer."""
        return self.imag == 0 and Fraction(self.real).denominator == 1

    @property
    def is_zero(self) -> bool:
        """Whether both parts vanish."""
        return self.real == 0 and self.imag == 0

    def to_mpc(self):
        """Exponent as an ``mpmath`` complex at the working precision."""
        return mpmath.mpc(_to_mpf(self.real), _to_mpf(self.imag))


@dataclass(frozen=True)
class MultiplicativeCharacter:
    """Exponents ``c_inf`` and finitely many ``c_p``; unlisted ``c_p`` are 0."""

    c_infinity: Exponent = Exponent(Fraction(0))
    c_p: Dict[int, Exponent] = field(default_factory=dict)


@dataclass(frozen=True)
class UnitAngle:
    """Character value ``exp(2 pi i angle)`` with ``0 <= angle < 1``."""

    angle: Fraction

    def __post_init__(self):
        """Reduce the angle modulo 1."""
        object.__setattr__(self, "angle", Fraction(self.angle) % 1)

    @property
    def is_trivial(self) -> bool:
        """Whether the character value is 1."""
        return self.angle == 0

    def value(self, digits: int = DEFAULT_DIGITS) -> complex:
        """Complex value of ``exp(2 pi i angle)``."""
        with mpmath.workdps(digits):
            angle = mpmath.mpf(self.angle.numerator) / self.angle.denominator
            z = mpmath.expjpi(2 * angle)
            return complex(z)


@dataclass(frozen=True)
class CharacterValue:
    """Value of a multiplicative character; ``exact`` is set when rational."""

    real: DecimalApproximation
    imag: DecimalApproximation
    exact: Optional[Fraction] = None


@dataclass(frozen=True)
class AdeleCheck:
    """Outcome of :func:`is_adele` with one line per finding."""

    ok: bool
    report: List[str]

    def __bool__(self) -> bool:
        """Truth value of the check."""
        return self.ok


def product_norm(r: RationalLike) -> Fraction:
    """Return ``|r|_inf * prod_p |r|_p`` over the primes dividing ``r``."""
    r = Fraction(r)
    if r == 0:
        raise ZeroArgumentError("Product formula needs r != 0.")
    result = abs(r)
    for p in prime_support(r):
        result *= Fraction(p) ** (-vp(r, p))
    return result


def additive_character(a: RationalLike, b: RationalLike) -> UnitAngle:
    """Additive character of principal adeles: ``-ab + sum_p {ab}_p`` mod 1."""
    x = Fraction(a) * Fraction(b)
    angle = -x
    if x != 0:
        for p in prime_support(x.denominator):
            angle += frac_part(x, p)
    return UnitAngle(angle)


def _integral_beyond_budget(a: Adele) -> bool:
    return a.tail_certificate is not None and all(
        p in a.components for p in a.exceptional
    )


def additive_character_adele(a: Adele, b: Adele) -> UnitAngle:
    """Additive character ``chi_b(a)`` of adeles with exact real components.

    Primes that are not materialized in both adeles must be certified
    integral in both, where they contribute nothing.
    """
    if not (a.real_component.is_exact and b.real_component.is_exact):
        raise InsufficientPrecisionError(
            "Additive character needs exact real components."
        )
    for adele in (a, b):
        if not _integral_beyond_budget(adele):
            raise SupportExceedsBudgetError(
                "Adele is not certified integral outside its materialized primes."
            )
    angle = -a.real_component.value * b.real_component.value
    for p in sorted(set(a.components) & set(b.components)):
        angle += padic_mul(a.components[p], b.components[p]).fractional_part()
    for p in set(a.components) ^ set(b.components):
        lonely = a.components.get(p) or b.components[p]
        if not lonely.in_integers():
            raise SupportExceedsBudgetError(
                "Component at {} is only materialized on one side.".format(p)
            )
    return UnitAngle(angle)


def multiplicative_character(
    lam: Idele, chi: MultiplicativeCharacter, digits: int = DEFAULT_DIGITS
) -> CharacterValue:
    """Evaluate ``|lam_inf|**c_inf * prod_p |lam_p|_p**c_p``.

    Places with exponent 0 contribute nothing. The result is exact when the
    remaining bases are exact and every remaining exponent is a rational
    integer. Integer exponents of an inexact real component go through
    interval arithmetic; other exponents are computed with ``mpmath`` at
    ``digits`` significant digits, with the spread of the real component
    bounded by ``|c| y**(Re c - 1)`` over its interval.
    """
    factors = []
    if not chi.c_infinity.is_zero:
        factors.append((abs(lam.real_component), chi.c_infinity))
    for p, exponent in sorted(chi.c_p.items()):
        if exponent.is_zero:
            continue
        if p in lam.components:
            norm = lam.components[p].norm().to_fraction()
            factors.append((DecimalApproximation.exact(norm), exponent))
        elif p in lam.exceptional or lam.tail_certificate is None:
            raise SupportExceedsBudgetError(
                "Character has exponent at {} where the idele is not a "
                "certified unit.".format(p)
            )

    if all(e.is_integer for _, e in factors):
        value = DecimalApproximation.exact(1)
        for base, exponent in factors:
            power = base ** abs(int(exponent.real))
            value = value * power if exponent.real >= 0 else value / power
        return CharacterValue(
            value,
            DecimalApproximation.exact(0),
            value.value if value.is_exact else None,
        )

    error = Fraction(1, 10**digits)
    with mpmath.workdps(digits + 10):
        value = mpmath.mpc(1)
        for base, exponent in factors:
            value *= mpmath.power(_to_mpf(base.value), exponent.to_mpc())
        for index, (base, exponent) in enumerate(factors):
            if base.is_exact:
                continue
            c = exponent.to_mpc()
            rest = mpmath.mpf(1)
            for other, other_exponent in factors[:index] + factors[index + 1 :]:
                rest *= mpmath.power(
                    _to_mpf(other.value), _to_mpf(other_exponent.real)
                )
            slope = max(
                mpmath.power(_to_mpf(end), c.real - 1)
                for end in (base.lower, base.upper)
            )
            spread = abs(c) * slope * rest * _to_mpf(base.error_bound)
            # slack for the decimal conversion
            error += 2 * _mpf_to_fraction(spread)
        real, imag = _mpf_to_fraction(value.real), _mpf_to_fraction(value.imag)
    return CharacterValue(
        DecimalApproximation(real, error).rounded(digits),
        DecimalApproximation(imag, error).rounded(digits),
    )


def _to_mpf(x: RationalLike):
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def _mpf_to_fraction(x) -> Fraction:
    return Fraction(mpmath.nstr(x, mpmath.mp.dps))


def principal_adele(r: RationalLike, prime_budget: int, precision: int) -> Adele:
    """Constant adele ``(r, r, r, ...)`` known modulo ``p**precision`` at each prime."""
    r = Fraction(r)
    components = {
        p: reduce_modulo(r, p, precision) for p in primes_up_to(prime_budget)
    }
    return Adele(
        DecimalApproximation.exact(r),
        components,
        frozenset(prime_support(r.denominator)),
        "principal: |r|_p <= 1 for every p not dividing {}".format(r.denominator),
        prime_budget,
    )


def principal_idele(r: RationalLike, prime_budget: int, precision: int) -> Idele:
    """Constant idele of a nonzero rational."""
    r = Fraction(r)
    if r == 0:
        raise ZeroArgumentError("Principal idele needs r != 0.")
    components = {
        p: reduce_modulo(r, p, precision + max(0, vp(r, p)))
        for p in primes_up_to(prime_budget)
    }
    return Idele(
        DecimalApproximation.exact(r),
        components,
        frozenset(prime_support(r)),
        "principal: |r|_p = 1 for every p not dividing {}".format(
            format_rational(r)
        ),
        prime_budget,
    )


def theorem2_term_valuation(
    mu: int, nu: int, n: int, r: RationalLike, p: int, s: int = 1
):
    """Valuation ``(k-1) vp(k!) + s + k vp(r)`` of the n-th term at ``q = p**-s``."""
    k = mu * n + nu
    if Fraction(r) == 0:
        return s if k == 0 else math.inf
    return (k - 1) * legendre_valuation(k, p) + s + k * vp(r, p)


def theorem2_adele(
    epsilon: int,
    mu: int,
    nu: int,
    r: RationalLike,
    prime_budget: int,
    precision: int,
    s: int = 1,
    real_q: RationalLike = 0,
    digits: int = DEFAULT_DIGITS,
) -> Adele:
    """Adele of series values at a rational point.

    The real slot holds the series with ``real_q`` (the classical series by
    default) and the slot at ``p`` the regularized series with
    ``q = p**-s``, evaluated modulo ``p**precision``. At every ``p`` not
    dividing the denominator of ``r`` all terms have valuation at least
    ``s``, so only those divisors can be exceptional.
    """
    r = Fraction(r)
    if s < 1:
        raise ValueError("s must be a positive integer")
    real = eval_real(SeriesParams(epsilon, mu, nu, real_q), r, digits)
    components = {}
    for p in primes_up_to(prime_budget):
        params = SeriesParams(epsilon, mu, nu, Fraction(1, p**s))
        components[p] = eval_padic(params, r, p, precision).result
    exceptional = frozenset(prime_support(r.denominator))
    certificate = (
        "exceptional primes divide the denominator {}: "
        "vp(term) = (k-1)*vp(k!) + {} + k*vp(r) >= {} elsewhere".format(
            r.denominator, s, s
        )
    )
    logging.info(
        "Built adele of (%d, %d, %d) at r=%s over %d primes.",
        epsilon,
        mu,
        nu,
        format_rational(r),
        len(components),
    )
    return Adele(real, components, exceptional, certificate, prime_budget)


def is_adele(a: Adele) -> AdeleCheck:
    """Check integrality of the non-exceptional components and the certificate."""
    report = []
    ok = True
    if not a.tail_certificate:
        ok = False
        report.append("missing tail certificate: cofinite integrality unproven")
    for p, component in sorted(a.components.items()):
        if p in a.exceptional:
            report.append("p={}: exceptional, |a_p|_p = {}".format(p, component.norm()))
        elif not component.in_integers():
            ok = False
            report.append(
                "p={}: |a_p|_p = {} > 1 but not listed as exceptional".format(
                    p, component.norm()
                )
            )
    if ok:
        report.append(
            "all {} materialized non-exceptional components lie in Z_p".format(
                len(a.components) - len(a.exceptional & set(a.components))
            )
        )
    return AdeleCheck(ok, report)


def _combine(a: Adele, b: Adele, operation, real, label: str) -> Adele:
    primes = sorted(set(a.components) & set(b.components))
    certificate = None
    if a.tail_certificate and b.tail_certificate:
        certificate = "{} of cofinitely integral adeles ({}; {})".format(
            label, a.tail_certificate, b.tail_certificate
        )
    return Adele(
        real,
        {p: operation(a.components[p], b.components[p]) for p in primes},
        a.exceptional | b.exceptional,
        certificate,
        min(a.prime_budget, b.prime_budget),
    )


def adele_add(a: Adele, b: Adele) -> Adele:
    """Componentwise sum."""
    return _combine(a, b, padic_add, a.real_component + b.real_component, "sum")


def adele_mul(a: Adele, b: Adele) -> Adele:
    """Componentwise product."""
    return _combine(a, b, padic_mul, a.real_component * b.real_component, "product")
