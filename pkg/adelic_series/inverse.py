# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Truncated formal power series over Q and the ln_q expansion."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from adelic_series.errors import (
    NonzeroConstantTermError,
    ZeroLinearCoefficientError,
)
from adelic_series.numeric import RationalLike, factorial
from adelic_series.series import coeff_I


@dataclass(frozen=True)
class FormalPowerSeries:
    """Coefficients ``c_0..c_K`` of a series known through order ``K``."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        """Normalise coefficients to a non-empty tuple of fractions."""
        if not self.coefficients:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @classmethod
    def from_coefficients(
        cls, coefficients: Sequence[RationalLike], order: int
    ) -> "FormalPowerSeries":
        """Pad or cut ``coefficients`` to exactly ``order + 1`` entries."""
        padded = list(coefficients[: order + 1])
        padded += [0] * (order + 1 - len(padded))
        return cls(tuple(padded))

    @classmethod
    def identity(cls, order: int) -> "FormalPowerSeries":
        """The series ``y`` through ``order``."""
        return cls.from_coefficients([0, 1], order)

    @property
    def truncation_order(self) -> int:
        """Order ``K`` through which the coefficients are known."""
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        """Coefficient of ``y**n``."""
        return self.coefficients[n]

    def truncate(self, order: int) -> "FormalPowerSeries":
        """Forget coefficients beyond ``order``."""
        return FormalPowerSeries(self.coefficients[: order + 1])

    def __add__(self, other: "FormalPowerSeries") -> "FormalPowerSeries":
        """Sum through the smaller truncation order."""
        order = min(self.truncation_order, other.truncation_order)
        return FormalPowerSeries(
            tuple(self[i] + other[i] for i in range(order + 1))
        )

    def __mul__(self, other: "FormalPowerSeries") -> "FormalPowerSeries":
        """Cauchy product through the smaller truncation order."""
        order = min(self.truncation_order, other.truncation_order)
        product = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            if self[i] == 0:
                continue
            for j in range(order + 1 - i):
                product[i + j] += self[i] * other[j]
        return FormalPowerSeries(tuple(product))

    def evaluate(self, x: RationalLike) -> Fraction:
        """Sum of the truncated polynomial at ``x`` (Horner)."""
        x = Fraction(x)
        total = Fraction(0)
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    def __str__(self) -> str:
        """Render as ``c0 + c1*y + ... + O(y^(K+1))``."""
        parts = [
            "{}*y^{}".format(c, i) if i else str(c)
            for i, c in enumerate(self.coefficients)
            if c
        ]
        return "{} + O(y^{})".format(
            " + ".join(parts) or "0", self.truncation_order + 1
        )


def compose(f: FormalPowerSeries, g: FormalPowerSeries) -> FormalPowerSeries:
    """Return ``f(g(y))`` through ``min(K_f, K_g)``; ``g`` must vanish at 0."""
    if g[0] != 0:
        raise NonzeroConstantTermError(
            "Inner series has constant term {}.".format(g[0])
        )
    order = min(f.truncation_order, g.truncation_order)
    g = g.truncate(order)
    result = FormalPowerSeries.from_coefficients([f[order]], order)
    for i in range(order - 1, -1, -1):
        result = result * g + FormalPowerSeries.from_coefficients([f[i]], order)
    return result


def revert(f: FormalPowerSeries) -> FormalPowerSeries:
    """Compositional inverse ``g`` with ``f(g(y)) = y`` through ``K``.

    Coefficients are fixed order by order: with ``g`` known below ``n``,
    the ``y**n`` coefficient of ``f(g)`` equals ``f_1 g_n`` plus a quantity
    that does not involve ``g_n``.
    """
    if f[0] != 0:
        raise NonzeroConstantTermError(
            "Series with constant term {} cannot be reverted.".format(f[0])
        )
    order = f.truncation_order
    if order < 1 or f[1] == 0:
        raise ZeroLinearCoefficientError("Series has no linear term to invert.")
    g: List[Fraction] = [Fraction(0)] * (order + 1)
    g[1] = 1 / f[1]
    for n in range(2, order + 1):
        partial = compose(f.truncate(n), FormalPowerSeries(tuple(g[: n + 1])))
        g[n] = -partial[n] / f[1]
    logging.debug("Reverted series through order %d.", order)
    return FormalPowerSeries(tuple(g))


def regularized_exp_tail(q: RationalLike, order: int) -> FormalPowerSeries:
    """``exp_q(y) - I_0`` as a formal series: ``sum_{n>=1} I_n y**n / n!``."""
    q = Fraction(q)
    return FormalPowerSeries(
        (Fraction(0),)
        + tuple(coeff_I(n, q) / factorial(n) for n in range(1, order + 1))
    )


def lnq_coeffs(q: RationalLike, order: int) -> List[Fraction]:
    """Coefficients ``a_1..a_K`` of ``ln_q x = sum (-1)**(n+1) a_n (x - I_0)**n / n``.

    With ``g`` the reversion of :func:`regularized_exp_tail`,
    ``a_n = (-1)**(n+1) * n * g_n``.
    """
    q = Fraction(q)
    if q <= 0:
        raise ValueError("ln_q needs q > 0")
    if order < 1:
        raise ValueError("order must be positive")
    g = revert(regularized_exp_tail(q, order))
    return [(-1) ** (n + 1) * n * g[n] for n in range(1, order + 1)]


def lnq_eval(q: RationalLike, x: RationalLike, order: int) -> Fraction:
    """Sum the ln_q expansion around ``I_0`` through ``order``."""
    q = Fraction(q)
    shift = Fraction(x) - coeff_I(0, q)
    return sum(
        (
            (-1) ** (n + 1) * a * shift**n / n
            for n, a in enumerate(lnq_coeffs(q, order), 1)
        ),
        Fraction(0),
    )
