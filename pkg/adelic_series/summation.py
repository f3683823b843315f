# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Rational sums obtained from the factorial structure of the series.

The general term of the summation identity is ``t_{n+1} - t_n`` with

    t_n = (k!)**(k - 1) * x**(mu n) / (q + (k!)**k),  k = mu n + nu

so partial sums collapse to ``t_{N+1} - t_0`` and the series sums to
``-t_0`` wherever ``t_n -> 0``, that is in R and in every Q_p.
"""

from fractions import Fraction

from adelic_series.errors import ZeroArgumentError
from adelic_series.numeric import RationalLike, factorial, rising_factorial
from adelic_series.padic import vp
from adelic_series.series import SeriesParams


def _check_argument(x: Fraction, q: Fraction) -> None:
    if x == 0:
        raise ZeroArgumentError("The summation identity needs x != 0.")
    if q <= 0:
        raise ValueError("The summation identity needs q > 0.")


def special_value(params: SeriesParams) -> Fraction:
    """Value of the series at ``x = 0``: ``1/(q+1)`` for ``nu = 0``, else 0."""
    if params.nu >= 1:
        return Fraction(0)
    return 1 / (params.q + 1)


def telescope_term(
    mu: int, nu: int, q: RationalLike, x: RationalLike, n: int
) -> Fraction:
    """Exact boundary term ``t_n``."""
    q, x = Fraction(q), Fraction(x)
    _check_argument(x, q)
    k = mu * n + nu
    kfact = factorial(k)
    return Fraction(kfact) ** (k - 1) * x ** (mu * n) / (q + kfact**k)


def bracket_term(
    mu: int, nu: int, q: RationalLike, x: RationalLike, n: int
) -> Fraction:
    """General term of the summation identity, written out term by term.

    ``((k)!)**(k-1) x**(mu n) [ (K!)**mu (k+1)_mu**(k-1) x**mu / (q + (K!)**K)
    - 1/(q + (k!)**k) ]`` with ``k = mu n + nu`` and ``K = k + mu``.
    """
    q, x = Fraction(q), Fraction(x)
    _check_argument(x, q)
    k = mu * n + nu
    big = k + mu
    kfact, bigfact = factorial(k), factorial(big)
    lead = Fraction(kfact) ** (k - 1) * x ** (mu * n)
    forward = (
        Fraction(bigfact) ** mu
        * Fraction(rising_factorial(k + 1, mu)) ** (k - 1)
        * x**mu
        / (q + bigfact**big)
    )
    backward = 1 / (q + kfact**k)
    return lead * (forward - backward)


def lhs_partial_sum(
    mu: int, nu: int, q: RationalLike, x: RationalLike, N: int
) -> Fraction:
    """Exact ``sum_{n=0}^{N}`` of :func:`bracket_term`."""
    return sum((bracket_term(mu, nu, q, x, n) for n in range(N + 1)), Fraction(0))


def theorem3_rhs(nu: int, q: RationalLike) -> Fraction:
    """Right-hand side ``-(nu!)**(nu-1) / (q + (nu!)**nu)`` of the identity."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("The summation identity needs q > 0.")
    nufact = factorial(nu)
    return -(Fraction(nufact) ** (nu - 1)) / (q + nufact**nu)


def eq45_term(n: int) -> Fraction:
    """General term of the rational series summing to 1/2.

    ``(-1)**n [((n+1)!)**n (1 + (n+2)(n!)**n) + (n!)**(n-1)]
    / ([1 + (n!)**n][1 + ((n+1)!)**(n+1)])``.
    """
    nfact, next_fact = factorial(n), factorial(n + 1)
    numerator = Fraction(next_fact**n * (1 + (n + 2) * nfact**n)) + Fraction(
        nfact
    ) ** (n - 1)
    denominator = (1 + nfact**n) * (1 + next_fact ** (n + 1))
    return (-1) ** n * numerator / denominator


def eq45_partial(N: int) -> Fraction:
    """Exact partial sum ``S_N`` of the series summing to 1/2."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return sum((eq45_term(n) for n in range(N + 1)), Fraction(0))


def eq45_padic_index(p: int, target: int) -> int:
    """Smallest ``N`` with ``|S_N - 1/2|_p <= p**-target``.

    ``S_N - 1/2 = -t_{N+1}`` at ``(mu, nu, q, x) = (1, 0, 1, -1)``, so the
    residual valuation is computed exactly.
    """
    N = 0
    while vp(telescope_term(1, 0, 1, -1, N + 1), p) < target:
        N += 1
    return N
