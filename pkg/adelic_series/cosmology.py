# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Regularized FLRW cosmologies on the real line.

The scale factor is ``R_q(t) = f_q(H t) / H`` with ``f_q`` the regularized
``exp``, ``cosh`` or ``sinh`` for curvature ``k = 0, +1, -1`` and
``H = sqrt(Lambda/3)``. Density and pressure are the ones that turn both
Friedmann equations

    R''/R = -kappa (rho + 3 p) / 6,    (R'/R)**2 + k/R**2 = kappa rho / 3

into identities. As ``q -> 0`` the de Sitter universe comes back.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from adelic_series.config import PLANCK_LENGTH_CM, WORKING_DIGITS_MARGIN
from adelic_series.errors import DegenerateScaleFactorError
from adelic_series.numeric import (
    DecimalApproximation,
    RationalLike,
    exp_upper_bound,
    sqrt_approximation,
)
from adelic_series.series import NamedFunction, derivative_eval_real

SCALE_FUNCTIONS = {
    0: NamedFunction.exp_q,
    1: NamedFunction.cosh_q,
    -1: NamedFunction.sinh_q,
}
"""Series giving the scale factor for each spatial curvature."""


@dataclass(frozen=True)
class CosmoParams:
    """Curvature, cosmological constant, coupling and regularization."""

    k: int
    Lambda: Fraction
    kappa: Fraction
    q: Fraction = Fraction(0)

    def __post_init__(self):
        """Validate and normalise to fractions."""
        for name in ("Lambda", "kappa", "q"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.k not in SCALE_FUNCTIONS:
            raise ValueError("curvature k must be -1, 0 or 1, got {}".format(self.k))
        if self.Lambda <= 0 or self.kappa <= 0:
            raise ValueError("Lambda and kappa must be positive")
        if self.q < 0:
            raise ValueError("q must be non-negative")

    @property
    def function(self) -> NamedFunction:
        """Series of the scale factor."""
        return SCALE_FUNCTIONS[self.k]

    def hubble(self, digits: int) -> DecimalApproximation:
        """``H = sqrt(Lambda/3)`` to ``digits`` decimals (exact for squares)."""
        return sqrt_approximation(self.Lambda / 3, digits)


@dataclass(frozen=True)
class CosmoState:
    """Scale factor, density, pressure and Friedmann residuals at time ``t``."""

    t: Fraction
    R: DecimalApproximation
    rho: DecimalApproximation
    pressure: DecimalApproximation
    residuals: Tuple[DecimalApproximation, DecimalApproximation]


@dataclass(frozen=True)
class DeSitterGap:
    """Distance ``|R_q(t) - R_0(t)|`` for one ``q``."""

    q: Fraction
    gap: DecimalApproximation


def planck_scale_q(length_cm: RationalLike) -> Fraction:
    """Regularization parameter ``q = l_Pl / l`` of a characteristic length."""
    return PLANCK_LENGTH_CM / Fraction(length_cm)


def _series_jet(
    params: CosmoParams, hubble: DecimalApproximation, t: Fraction, digits: int
) -> List[DecimalApproximation]:
    """``f(Ht), f'(Ht), f''(Ht)`` including the uncertainty of ``H``.

    Every derivative of a series of the family is bounded by ``exp(|x|)``,
    so moving the argument by ``delta`` moves each value by at most
    ``delta * exp(|x| + delta)``.
    """
    series = params.function.params(params.q)
    x = hubble.value * t
    delta = abs(t) * hubble.error_bound
    spread = delta * exp_upper_bound(abs(x) + delta)
    jet = []
    for order in range(3):
        value = derivative_eval_real(series, order, x, digits)
        jet.append((value + DecimalApproximation(0, spread)).rounded(digits + 5))
    return jet


def cosmo_state(params: CosmoParams, t: RationalLike, digits: int) -> CosmoState:
    """Evaluate every quantity of the model at time ``t``.

    :param params: Model parameters.
    :param t: Time, a rational.
    :param digits: Requested decimal digits; intermediate quantities carry
        ``WORKING_DIGITS_MARGIN`` more.
    """
    t = Fraction(t)
    if params.k == -1 and t == 0:
        raise DegenerateScaleFactorError("sinh_q(0) = 0 gives R(0) = 0.")
    working = digits + WORKING_DIGITS_MARGIN
    places = working + 5
    hubble = params.hubble(working)
    f, f1, f2 = _series_jet(params, hubble, t, working)
    if not f.excludes_zero():
        raise DegenerateScaleFactorError(
            "Scale factor at t={} cannot be told apart from zero.".format(t)
        )

    R = (f / hubble).rounded(places)
    R_dot = f1
    R_ddot = (hubble * f2).rounded(places)
    kappa, k = params.kappa, params.k
    if k == 0:
        log_rate = (hubble * f1 / f).rounded(places)
        log_acceleration = (hubble * hubble * (f2 / f - (f1 / f) ** 2)).rounded(places)
        rho = (3 / kappa) * log_rate**2
        pressure = -rho - (2 / kappa) * log_acceleration
    else:
        expansion = (R_dot / R).rounded(places)
        curvature = (k / (R * R)).rounded(places)
        rho = (3 / kappa) * (expansion**2 + curvature)
        pressure = -(2 * R_ddot / R + expansion**2 + curvature) / kappa
    rho, pressure = rho.rounded(places), pressure.rounded(places)

    acceleration_residual = R_ddot / R + kappa * (rho + 3 * pressure) / 6
    constraint_residual = (R_dot / R) ** 2 + k / (R * R) - kappa * rho / 3
    logging.debug("Evaluated cosmology k=%d q=%s at t=%s.", k, params.q, t)
    return CosmoState(
        t,
        R,
        rho,
        pressure,
        (acceleration_residual.rounded(places), constraint_residual.rounded(places)),
    )


def scale_factor(
    params: CosmoParams, t: RationalLike, digits: int
) -> DecimalApproximation:
    """``R_q(t) = f_q(Ht) / H``."""
    return cosmo_state(params, t, digits).R


def energy_density(
    params: CosmoParams, t: RationalLike, digits: int
) -> DecimalApproximation:
    """Energy density ``rho_q(t)``."""
    return cosmo_state(params, t, digits).rho


def pressure(params: CosmoParams, t: RationalLike, digits: int) -> DecimalApproximation:
    """Pressure ``p_q(t)``."""
    return cosmo_state(params, t, digits).pressure


def friedmann_residual(
    params: CosmoParams, t: RationalLike, digits: int
) -> Tuple[DecimalApproximation, DecimalApproximation]:
    """Residuals of the acceleration and constraint equations."""
    return cosmo_state(params, t, digits).residuals


def desitter_gap(
    qs: Sequence[RationalLike],
    t: RationalLike,
    digits: int,
    Lambda: RationalLike = 3,
    kappa: RationalLike = 1,
) -> List[DeSitterGap]:
    """Distances of flat regularized scale factors from the de Sitter one.

    :param qs: Strictly decreasing non-negative regularization parameters.
    """
    qs = [Fraction(q) for q in qs]
    if any(q < 0 for q in qs) or any(a <= b for a, b in zip(qs, qs[1:])):
        raise ValueError("qs must be non-negative and strictly decreasing")
    reference = scale_factor(CosmoParams(0, Lambda, kappa, 0), t, digits)
    return [
        DeSitterGap(
            q,
            abs(scale_factor(CosmoParams(0, Lambda, kappa, q), t, digits) - reference),
        )
        for q in qs
    ]


def is_strictly_decreasing(gaps: Sequence[DeSitterGap]) -> bool:
    """Whether every gap is certified larger than the next one."""
    return all(a.gap.lower > b.gap.upper for a, b in zip(gaps, gaps[1:]))
