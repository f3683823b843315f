# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Seeded verification suites.

Every suite is a generator of :class:`CheckResult` registered under a name
from :data:`adelic_series.config.VERIFICATION_SUITES`. Failures are
reported, never raised: a check that hits a domain error fails with the
error message as its details.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional

from adelic_series.adelic import (
    additive_character,
    is_adele,
    product_norm,
    theorem2_adele,
)
from adelic_series.config import (
    DEFAULT_PRIME_BUDGET,
    DEFAULT_VERIFICATION_SEED,
    VERIFICATION_SUITES,
)
from adelic_series.cosmology import (
    CosmoParams,
    cosmo_state,
    desitter_gap,
    is_strictly_decreasing,
)
from adelic_series.errors import AdelicSeriesError
from adelic_series.inverse import (
    FormalPowerSeries,
    compose,
    lnq_coeffs,
    regularized_exp_tail,
    revert,
)
from adelic_series.numeric import format_rational
from adelic_series.padic import (
    factorial_valuation_floor,
    factorize,
    legendre_valuation,
    norm_factorial,
    primes_up_to,
    vp,
)
from adelic_series.series import (
    NamedFunction,
    eval_padic,
    eval_real,
    partial_sum,
)
from adelic_series.summation import (
    eq45_padic_index,
    eq45_partial,
    lhs_partial_sum,
    special_value,
    telescope_term,
)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check: exact residual or certificate, plus details."""

    name: str
    passed: bool
    residual: Optional[str] = None
    details: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Checks of one run, ordered by name, with the seed that produced them."""

    suite: str
    seed: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        """Checks that did not pass."""
        return [check for check in self.checks if not check.passed]


@dataclass(frozen=True)
class SuiteOptions:
    """Knobs shared by the suites."""

    seed: int = DEFAULT_VERIFICATION_SEED
    terms: int = 60
    digits: int = 50
    prime_budget: int = DEFAULT_PRIME_BUDGET


Suite = Callable[[random.Random, SuiteOptions], Iterable[CheckResult]]

SUITES: Dict[str, Suite] = {}


def suite(name: str) -> Callable[[Suite], Suite]:
    """Register a suite under ``name``."""

    def register(function: Suite) -> Suite:
        if name not in VERIFICATION_SUITES:
            raise ValueError("Unknown suite name {}.".format(name))
        SUITES[name] = function
        return function

    return register


def _random_rational(rng: random.Random, height: int, nonzero: bool = True) -> Fraction:
    while True:
        r = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if r or not nonzero:
            return r


@suite("legendre")
def legendre_suite(rng: random.Random, options: SuiteOptions) -> Iterator[CheckResult]:
    """``|n!|_p`` against the factorization of ``1*2*...*n`` for ``n <= 300``."""
    for p in primes_up_to(29):
        oracle, mismatches = 0, []
        for n in range(301):
            if n > 1:
                oracle += factorize(n).get(p, 0)
            exact = legendre_valuation(n, p)
            if (
                norm_factorial(n, p).exponent != oracle
                or exact != oracle
                or factorial_valuation_floor(n, p) > exact
            ):
                mismatches.append(n)
        yield CheckResult(
            "legendre.p={:02d}".format(p),
            not mismatches,
            str(len(mismatches)),
            (
                "n in 0..300"
                if not mismatches
                else "mismatch at n={}".format(mismatches[:5])
            ),
        )


@suite("product-formula")
def product_formula_suite(
    rng: random.Random, options: SuiteOptions
) -> Iterator[CheckResult]:
    """Product of all norms of 1000 random rationals of height ``<= 10**6``."""
    for i in range(1000):
        r = _random_rational(rng, 10**6)
        value = product_norm(r)
        yield CheckResult(
            "product-formula.{:04d}".format(i),
            value == 1,
            format_rational(value - 1),
            "r={}".format(format_rational(r)),
        )


@suite("telescoping")
def telescoping_suite(
    rng: random.Random, options: SuiteOptions
) -> Iterator[CheckResult]:
    """Partial sums of the bracket series against ``t_{N+1} - t_0``."""
    for i in range(200):
        mu, nu = rng.randint(1, 3), rng.randint(0, 3)
        q = rng.choice([Fraction(1), Fraction(1, 2), Fraction(3)])
        x = _random_rational(rng, 5)
        N = rng.randint(0, 12)
        residual = lhs_partial_sum(mu, nu, q, x, N) - (
            telescope_term(mu, nu, q, x, N + 1) - telescope_term(mu, nu, q, x, 0)
        )
        yield CheckResult(
            "telescoping.{:03d}".format(i),
            residual == 0,
            format_rational(residual),
            "mu={} nu={} q={} x={} N={}".format(
                mu, nu, format_rational(q), format_rational(x), N
            ),
        )


@suite("eq45")
def eq45_suite(rng: random.Random, options: SuiteOptions) -> Iterator[CheckResult]:
    """The rational series summing to 1/2, in R and in Q_2, Q_3, Q_5, Q_7."""
    residual = eq45_partial(options.terms) - Fraction(1, 2)
    bound = abs(telescope_term(1, 0, 1, -1, options.terms + 1))
    yield CheckResult(
        "eq45.real",
        residual != 0
        and abs(residual) <= bound
        and abs(residual) < Fraction(1, 10**options.digits),
        format_rational(residual),
        "|S_{} - 1/2| ~ {:.6e} < 10^-{}".format(
            options.terms, float(abs(residual)), options.digits
        ),
    )
    for p in (2, 3, 5, 7):
        N = eq45_padic_index(p, 25)
        valuation = vp(eq45_partial(N) - Fraction(1, 2), p)
        yield CheckResult(
            "eq45.p={}".format(p),
            valuation >= 25,
            str(valuation),
            "|S_{} - 1/2|_{} <= {}^-25".format(N, p, p),
        )


@suite("lnq")
def lnq_suite(rng: random.Random, options: SuiteOptions) -> Iterator[CheckResult]:
    """Leading ln_q coefficients and ``exp_q(ln_q)`` as the identity series."""
    for q in (Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(2)):
        a = lnq_coeffs(q, 8)
        expected = (q + 1, 4 * (q + 1) ** 3 / (q + 4))
        residual = (a[0] - expected[0], a[1] - expected[1])
        yield CheckResult(
            "lnq.coefficients.q={}".format(format_rational(q)),
            residual == (0, 0),
            "{}, {}".format(*(format_rational(r) for r in residual)),
            "a_1={} a_2={}".format(format_rational(a[0]), format_rational(a[1])),
        )
        tail = regularized_exp_tail(q, 8)
        composed = compose(tail, revert(tail))
        yield CheckResult(
            "lnq.reversion.q={}".format(format_rational(q)),
            composed == FormalPowerSeries.identity(8),
            None,
            str(composed),
        )


@suite("characters")
def characters_suite(
    rng: random.Random, options: SuiteOptions
) -> Iterator[CheckResult]:
    """Additive characters of principal adeles are trivial."""
    for i in range(200):
        a, b = _random_rational(rng, 10**4, False), _random_rational(rng, 10**4, False)
        angle = additive_character(a, b).angle
        yield CheckResult(
            "characters.{:03d}".format(i),
            angle == 0,
            format_rational(angle),
            "a={} b={}".format(format_rational(a), format_rational(b)),
        )


@suite("adele-cert")
def adele_cert_suite(
    rng: random.Random, options: SuiteOptions
) -> Iterator[CheckResult]:
    """Series values at rationals with ``q = 1/p`` form adeles."""
    for r in (0, 1, -1, 2, Fraction(1, 2), Fraction(3, 7)):
        r = Fraction(r)
        for function in NamedFunction:
            epsilon, mu, nu = function.value
            adele = theorem2_adele(epsilon, mu, nu, r, options.prime_budget, 10)
            outside = [
                p
                for p, component in sorted(adele.components.items())
                if p not in adele.exceptional and component.valuation < 1
            ]
            check = is_adele(adele)
            yield CheckResult(
                "adele-cert.{}.r={}".format(function.name, format_rational(r)),
                check.ok and not outside,
                adele.tail_certificate,
                "; ".join(check.report)
                + ("" if not outside else "; |.|_p > 1/p at {}".format(outside)),
            )


@suite("friedmann")
def friedmann_suite(rng: random.Random, options: SuiteOptions) -> Iterator[CheckResult]:
    """Both Friedmann residuals below ``10**-30`` at 40 digits."""
    limit = Fraction(1, 10**30)
    for k in (-1, 0, 1):
        for q in (Fraction(1), Fraction(1, 10)):
            times = (1, 2) if k == -1 else (Fraction(1, 10), 1, 2)
            for t in times:
                residuals = cosmo_state(CosmoParams(k, 3, 1, q), t, 40).residuals
                worst = max(r.magnitude_bound() for r in residuals)
                yield CheckResult(
                    "friedmann.k={}.q={}.t={}".format(
                        k, format_rational(q), format_rational(t)
                    ),
                    worst <= limit,
                    format_rational(worst),
                    "Lambda=3 kappa=1, worst bound {:.3e}".format(float(worst)),
                )


@suite("theorem1")
def theorem1_suite(rng: random.Random, options: SuiteOptions) -> Iterator[CheckResult]:
    """Regularized series converge in Q_p at points outside the classical domain."""
    for function in NamedFunction:
        for q in (Fraction(1), Fraction(1, 2)):
            for p in (2, 3, 5, 7, 11):
                points = (Fraction(1), Fraction(1, p), Fraction(p**3), -Fraction(p**3))
                for x in points:
                    report = eval_padic(function.params(q), x, p, 30)
                    yield CheckResult(
                        "theorem1.{}.q={}.p={:02d}.x={}".format(
                            function.name, format_rational(q), p, format_rational(x)
                        ),
                        report.tail_bound_exponent >= 30,
                        "tail valuation >= {}".format(report.tail_bound_exponent),
                        "{} terms".format(report.terms_used),
                    )


@suite("parity")
def parity_suite(rng: random.Random, options: SuiteOptions) -> Iterator[CheckResult]:
    """Exact special values at 0 and parity of the trigonometric partial sums."""
    for function in NamedFunction:
        epsilon, mu, nu = function.value
        for q in (Fraction(0), Fraction(1), Fraction(1, 2)):
            params = function.params(q)
            value = eval_real(params, 0, options.digits).value
            yield CheckResult(
                "parity.special.{}.q={}".format(function.name, format_rational(q)),
                value == special_value(params),
                format_rational(value - special_value(params)),
            )
            if mu != 2:
                continue
            for x in (Fraction(1), Fraction(1, 3), Fraction(5, 2)):
                residual = partial_sum(params, -x, 10) - (-1) ** nu * partial_sum(
                    params, x, 10
                )
                yield CheckResult(
                    "parity.symmetry.{}.q={}.x={}".format(
                        function.name, format_rational(q), format_rational(x)
                    ),
                    residual == 0,
                    format_rational(residual),
                    "odd" if nu else "even",
                )


@suite("desitter")
def desitter_suite(rng: random.Random, options: SuiteOptions) -> Iterator[CheckResult]:
    """Flat regularized cosmology tends to de Sitter as ``q -> 0``."""
    qs = [Fraction(1, 10**3), Fraction(1, 10**6), Fraction(1, 10**9)]
    gaps = desitter_gap(qs, 1, 30)
    yield CheckResult(
        "desitter.decreasing",
        is_strictly_decreasing(gaps),
        ", ".join(format_rational(g.gap.magnitude_bound()) for g in gaps),
        ", ".join("{:.3e}".format(float(g.gap.value)) for g in gaps),
    )
    classical = eval_real(NamedFunction.exp_q.params(0), 1, 30)
    for q in qs:
        exp_gap = abs(eval_real(NamedFunction.exp_q.params(q), 1, 30) - classical)
        state = cosmo_state(CosmoParams(0, 3, 1, q), 1, 30)
        rho_gap = abs(state.rho - 3).magnitude_bound()
        pressure_gap = abs(state.pressure + 3).magnitude_bound()
        yield CheckResult(
            "desitter.q={}".format(format_rational(q)),
            exp_gap.magnitude_bound() <= 3 * q
            and rho_gap <= 10 * q
            and pressure_gap <= 10 * q,
            format_rational(exp_gap.magnitude_bound()),
            "exp gap {:.3e}, rho gap {:.3e}, pressure gap {:.3e}".format(
                float(exp_gap.value), float(rho_gap), float(pressure_gap)
            ),
        )


def _guarded(name: str, checks: Iterable[CheckResult]) -> Iterator[CheckResult]:
    try:
        yield from checks
    except AdelicSeriesError as error:
        logging.warning("Suite %s aborted: %s", name, error)
        yield CheckResult("{}.error".format(name), False, None, str(error))


def run_suites(
    names: Iterable[str], options: SuiteOptions = SuiteOptions()
) -> VerificationReport:
    """Run the named suites (``all`` for every suite) with a fresh seeded RNG each."""
    names = list(names)
    if "all" in names:
        names = list(VERIFICATION_SUITES)
    checks: List[CheckResult] = []
    for name in names:
        if name not in SUITES:
            raise ValueError(
                "Unknown suite '{}', use one of {} or all.".format(
                    name, ", ".join(VERIFICATION_SUITES)
                )
            )
        logging.info("Running suite %s with seed %d.", name, options.seed)
        generated = SUITES[name](random.Random(options.seed), options)
        results = list(_guarded(name, generated))
        failed = sum(not result.passed for result in results)
        logging.info("Suite %s: %d checks, %d failed.", name, len(results), failed)
        checks.extend(results)
    label = "all" if len(names) == len(VERIFICATION_SUITES) else ",".join(names)
    return VerificationReport(
        label, options.seed, sorted(checks, key=lambda check: check.name)
    )
