# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""The regularized series family and its evaluation over R and Q_p.

A member of the family is selected by ``(epsilon, mu, nu, q)``; its n-th
term is ``epsilon**n * I_k * x**k / k!`` with ``k = mu*n + nu`` and
``I_k = (k!)**k / (q + (k!)**k)``. With ``q = 0`` every ``I_k`` is 1 and the
classical exponential, trigonometric and hyperbolic series come back.
"""

import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from adelic_series.config import MAX_SERIES_TERMS
from adelic_series.errors import (
    ClassicalDivergenceError,
    InvalidSeriesParamsError,
    SeriesTermLimitError,
)
from adelic_series.numeric import (
    DecimalApproximation,
    RationalLike,
    factorial,
)
from adelic_series.padic import (
    PadicNumber,
    legendre_valuation,
    reduce_modulo,
    vp,
)


@dataclass(frozen=True)
class SeriesParams:
    """Selector ``(epsilon, mu, nu, q)`` of a member of the family."""

    epsilon: int
    mu: int
    nu: int
    q: Fraction = Fraction(0)

    def __post_init__(self):
        """Validate the parameters and normalise ``q`` to a fraction."""
        object.__setattr__(self, "q", Fraction(self.q))
        if self.epsilon not in (1, -1):
            raise InvalidSeriesParamsError(
                "epsilon must be +1 or -1, got {}.".format(self.epsilon)
            )
        if self.mu < 1:
            raise InvalidSeriesParamsError("mu must be >= 1, got {}.".format(self.mu))
        if self.nu < 0:
            raise InvalidSeriesParamsError("nu must be >= 0, got {}.".format(self.nu))
        if self.q < 0:
            raise InvalidSeriesParamsError("q must be >= 0, got {}.".format(self.q))

    @property
    def is_classical(self) -> bool:
        """Whether ``q = 0``, the unregularized series."""
        return self.q == 0

    def degree(self, n: int) -> int:
        """Exponent ``mu*n + nu`` of the n-th term."""
        return self.mu * n + self.nu

    def with_q(self, q: RationalLike) -> "SeriesParams":
        """Same function, other regularization parameter."""
        return SeriesParams(self.epsilon, self.mu, self.nu, Fraction(q))


class NamedFunction(enum.Enum):
    """The regularized exponential, trigonometric and hyperbolic functions."""

    exp_q = (1, 1, 0)
    cos_q = (-1, 2, 0)
    sin_q = (-1, 2, 1)
    cosh_q = (1, 2, 0)
    sinh_q = (1, 2, 1)

    def params(self, q: RationalLike = 0) -> SeriesParams:
        """Series parameters of this function for a given ``q``."""
        epsilon, mu, nu = self.value
        return SeriesParams(epsilon, mu, nu, Fraction(q))

    @classmethod
    def from_name(cls, name: str) -> "NamedFunction":
        """Look up ``exp_q``, ``sin_q``... or the classical ``exp``, ``sin``..."""
        key = name if name.endswith("_q") else name + "_q"
        try:
            return cls[key]
        except KeyError:
            raise InvalidSeriesParamsError(
                "Unknown function '{}', use one of {}.".format(
                    name, ", ".join(cls.__members__)
                )
            )


@dataclass(frozen=True)
class PadicEvalReport:
    """Residue of a series in Q_p with the certificate of its omitted tail."""

    result: PadicNumber
    terms_used: int
    tail_bound_exponent: int


def coeff_I(k: int, q: RationalLike) -> Fraction:
    """Regularization coefficient ``(k!)**k / (q + (k!)**k)``."""
    power = factorial(k) ** k
    return Fraction(power) / (Fraction(q) + power)


def term(params: SeriesParams, n: int, x: RationalLike) -> Fraction:
    """Exact n-th term ``epsilon**n * I_k * x**k / k!``."""
    k = params.degree(n)
    return (
        params.epsilon**n
        * coeff_I(k, params.q)
        * Fraction(x) ** k
        / factorial(k)
    )


def _derivative_terms(
    params: SeriesParams, x: Fraction, order: int
) -> Iterator[Tuple[int, int, Fraction]]:
    """Yield ``(n, k - order, term)`` of the ``order``-th termwise derivative."""
    n = 0
    while params.degree(n) < order:
        n += 1
    while True:
        k = params.degree(n)
        j = k - order
        yield n, j, params.epsilon**n * coeff_I(k, params.q) * x**j / factorial(j)
        n += 1


def partial_sum(params: SeriesParams, x: RationalLike, terms: int) -> Fraction:
    """Exact sum of the first ``terms`` terms."""
    x = Fraction(x)
    return sum((term(params, n, x) for n in range(terms)), Fraction(0))


def _certified_sum(
    params: SeriesParams, x: Fraction, digits: int, order: int
) -> Tuple[DecimalApproximation, int]:
    """Sum terms until the tail is certified below ``10**-digits``.

    Stop after the first term whose successor is bounded (using ``I <= 1``)
    by ``10**(-digits - 2)`` while the ratio of classical successive terms
    is at most 1/2; the tail is then at most twice the successor bound.
    """
    ax = abs(x)
    target = Fraction(1, 10 ** (digits + 2))
    total = Fraction(0)
    for count, (n, j, value) in enumerate(_derivative_terms(params, x, order), 1):
        if count > MAX_SERIES_TERMS:
            raise SeriesTermLimitError(
                "No certified tail for {} at x={} after {} terms.".format(
                    params, x, MAX_SERIES_TERMS
                )
            )
        total += value
        ratio = ax**params.mu / math.prod(range(j + 1, j + params.mu + 1))
        successor = ax ** (j + params.mu) / factorial(j + params.mu)
        if successor <= target and ratio <= Fraction(1, 2):
            logging.debug(
                "Certified real sum of %s (order %d) with %d terms.",
                params,
                order,
                count,
            )
            return DecimalApproximation(total, 2 * successor), count
    raise AssertionError("unreachable")


def eval_real(
    params: SeriesParams, x: RationalLike, digits: int
) -> DecimalApproximation:
    """Value of the series at ``x`` with error bound at most ``10**-digits``."""
    approximation, _ = _certified_sum(params, Fraction(x), digits, 0)
    return approximation


def derivative_eval_real(
    params: SeriesParams, order: int, x: RationalLike, digits: int
) -> DecimalApproximation:
    """Value of the ``order``-th termwise derivative at ``x``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    approximation, _ = _certified_sum(params, Fraction(x), digits, order)
    return approximation


def classical_domain_check(name, x: RationalLike, p: int) -> bool:
    """Whether the classical series converges at ``x`` in Q_p.

    :param name: A :class:`NamedFunction` or a function name; the classical
        exp, cos, sin, cosh and sinh share the domain ``|x|_p < 1``
        (``|x|_2 < 1/2`` for ``p = 2``).
    """
    if not isinstance(name, NamedFunction):
        NamedFunction.from_name(name)
    return _in_classical_domain(x, p)


def _in_classical_domain(x: RationalLike, p: int) -> bool:
    return vp(x, p) >= (2 if p == 2 else 1)


def term_valuation(params: SeriesParams, n: int, x: RationalLike, p: int):
    """Exact p-adic valuation of the n-th term.

    ``(k - 1) vp(k!) + k vp(x) - vp(q + (k!)**k)`` for ``k = mu*n + nu``.
    """
    x = Fraction(x)
    k = params.degree(n)
    if x == 0:
        return math.inf if k > 0 else -vp(params.q + 1, p)
    vk = legendre_valuation(k, p)
    return (k - 1) * vk + k * vp(x, p) - vp(params.q + factorial(k) ** k, p)


def _tail_bound(params: SeriesParams, k: int, vx: int, vq, p: int) -> Optional[int]:
    """Valuation bound valid for every term of degree ``>= k``, if certifiable.

    For ``q > 0``: once ``k vp(k!) > vp(q)`` the denominator valuation is
    exactly ``vp(q)``, and since ``vp(k!)`` never decreases, every term of
    degree ``k' >= k`` has valuation at least
    ``k' (vp(k!) + vp(x)) - vp(k!) - vp(q)``, increasing in ``k'`` as soon as
    ``vp(k!) + vp(x) > 0``.

    For ``q = 0`` inside the classical domain, ``vp(k!) <= (k - 1)/(p - 1)``
    gives ``k vp(x) - (k - 1)/(p - 1)``, increasing in ``k``.
    """
    if params.is_classical:
        if k < 1:
            return None
        return math.ceil(k * vx - Fraction(k - 1, p - 1))
    vk = legendre_valuation(k, p)
    if k * vk <= vq or vk + vx <= 0:
        return None
    return k * (vk + vx) - vk - vq


def eval_padic(
    params: SeriesParams, x: RationalLike, p: int, target: int
) -> PadicEvalReport:
    """Residue of the series at ``x`` modulo ``p**target``.

    Terms are summed as exact rationals up to the first degree from which on
    every term is certified to have valuation ``>= target``; the sum is
    reduced into Q_p once.
    """
    x = Fraction(x)
    if params.is_classical and not _in_classical_domain(x, p):
        raise ClassicalDivergenceError(
            "Classical series diverges at x={} in Q_{}: need |x|_{} < {}.".format(
                x, p, p, "1/2" if p == 2 else "1"
            )
        )
    if x == 0:
        head = term(params, 0, x)
        return PadicEvalReport(reduce_modulo(head, p, target), 1, target)

    vx = vp(x, p)
    vq = vp(params.q, p)
    total = Fraction(0)
    for n in range(MAX_SERIES_TERMS + 1):
        k = params.degree(n)
        bound = _tail_bound(params, k, vx, vq, p)
        if bound is not None and bound >= target:
            logging.debug(
                "Tail of %s at x=%s in Q_%d certified from degree %d "
                "(valuation >= %d).",
                params,
                x,
                p,
                k,
                bound,
            )
            return PadicEvalReport(reduce_modulo(total, p, target), n, bound)
        total += term(params, n, x)
    raise SeriesTermLimitError(
        "No certified p-adic tail for {} at x={} in Q_{} after {} terms.".format(
            params, x, p, MAX_SERIES_TERMS
        )
    )
