# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Adelic-Series command line interface."""

import json
import logging
from contextlib import contextmanager
from fractions import Fraction
from typing import Optional

import click

from adelic_series.adelic import is_adele, theorem2_adele
from adelic_series.config import (
    ADELIC_SERIES_LOG_FORMAT,
    ADELIC_SERIES_LOG_LEVEL,
    DEFAULT_DIGITS,
    DEFAULT_PADIC_PRECISION,
    DEFAULT_PRIME_BUDGET,
    DEFAULT_VERIFICATION_SEED,
    VERIFICATION_SUITES,
)
from adelic_series.cosmology import CosmoParams, cosmo_state
from adelic_series.errors import AdelicSeriesError, NotAPrimeError
from adelic_series.inverse import lnq_coeffs
from adelic_series.numeric import format_rational, parse_rational, render_decimal
from adelic_series.padic import Prime, format_padic
from adelic_series.schemas import (
    CosmoStateSchema,
    PadicEvalReportSchema,
    VerificationReportSchema,
    dump_adele,
    dump_approximation,
)
from adelic_series.series import (
    NamedFunction,
    SeriesParams,
    derivative_eval_real,
    eval_padic,
)
from adelic_series.summation import (
    lhs_partial_sum,
    telescope_term,
    theorem3_rhs,
)
from adelic_series.verification import SuiteOptions, run_suites


class RationalType(click.ParamType):
    """Rational given as ``num/den``, an integer or a decimal literal."""

    name = "rational"

    def convert(self, value, param, ctx):
        """Parse the value into a fraction."""
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except ValueError as error:
            self.fail(str(error), param, ctx)


class PrimeType(click.ParamType):
    """A prime number."""

    name = "prime"

    def convert(self, value, param, ctx):
        """Parse and check primality."""
        try:
            return Prime(int(value))
        except (NotAPrimeError, ValueError) as error:
            self.fail(str(error), param, ctx)


RATIONAL = RationalType()
PRIME = PrimeType()


def _echo_json(data) -> None:
    click.echo(json.dumps(data, indent=2, separators=(",", ": "), sort_keys=True))


@contextmanager
def _domain_errors(flag: str):
    """Report library errors caused by user input as bad ``flag`` values."""
    try:
        yield
    except (AdelicSeriesError, ValueError) as error:
        raise click.BadParameter(str(error), param_hint=flag)


def _series_options(function):
    """Options selecting a member of the series family."""
    options = [
        click.option(
            "--fn",
            "fn",
            type=click.Choice([f.name for f in NamedFunction]),
            help="Named function; overrides --eps/--mu/--nu.",
        ),
        click.option(
            "--eps", type=click.IntRange(-1, 1), help="Raw epsilon, +1 or -1."
        ),
        click.option("--mu", type=click.IntRange(min=1), help="Raw mu >= 1."),
        click.option("--nu", type=click.IntRange(min=0), help="Raw nu >= 0."),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def _series_params(fn: Optional[str], eps, mu, nu, q: Fraction) -> SeriesParams:
    if not fn and (eps is None or mu is None or nu is None):
        raise click.UsageError("Give either --fn or all of --eps, --mu and --nu.")
    with _domain_errors("--fn/--eps/--mu/--nu/--q"):
        if fn:
            return NamedFunction.from_name(fn).params(q)
        return SeriesParams(eps, mu, nu, q)


@click.group()
def cli():
    """Regularized power series over the reals and the p-adic numbers."""
    logging.basicConfig(level=ADELIC_SERIES_LOG_LEVEL, format=ADELIC_SERIES_LOG_FORMAT)


@cli.command("eval")
@_series_options
@click.option("--q", type=RATIONAL, default="0", show_default=True)
@click.option("--x", type=RATIONAL, required=True)
@click.option(
    "--digits", type=click.IntRange(min=1), default=DEFAULT_DIGITS, show_default=True
)
@click.option(
    "--order", type=click.IntRange(min=0), default=0, help="Termwise derivative."
)
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document.")
def eval_command(fn, eps, mu, nu, q, x, digits, order, as_json):
    """Evaluate a series at a rational point of the real line."""
    params = _series_params(fn, eps, mu, nu, q)
    with _domain_errors("--x"):
        value = derivative_eval_real(params, order, x, digits)
    decimal = render_decimal(value, digits)
    if as_json:
        _echo_json(
            {
                "params": [params.epsilon, params.mu, params.nu, format_rational(q)],
                "x": format_rational(x),
                "order": order,
                "value": dump_approximation(value, decimal),
            }
        )
    else:
        click.echo(decimal)


@cli.command("eval-padic")
@_series_options
@click.option("--q", type=RATIONAL, default="0", show_default=True)
@click.option("--x", type=RATIONAL, required=True)
@click.option("--p", "prime", type=PRIME, required=True)
@click.option(
    "--prec",
    type=click.IntRange(min=1),
    default=DEFAULT_PADIC_PRECISION,
    show_default=True,
)
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document.")
def eval_padic_command(fn, eps, mu, nu, q, x, prime, prec, as_json):
    """Evaluate a series at a rational point of Q_p modulo p^prec."""
    params = _series_params(fn, eps, mu, nu, q)
    with _domain_errors("--x"):
        report = eval_padic(params, x, prime, prec)
    if as_json:
        _echo_json(PadicEvalReportSchema().dump(report))
    else:
        click.echo(format_padic(report.result))


@cli.command("adele")
@_series_options
@click.option("--r", type=RATIONAL, required=True, help="Rational point.")
@click.option(
    "--primes-up-to",
    "prime_budget",
    type=click.IntRange(min=2),
    default=DEFAULT_PRIME_BUDGET,
    show_default=True,
)
@click.option(
    "--prec",
    type=click.IntRange(min=1),
    default=DEFAULT_PADIC_PRECISION,
    show_default=True,
)
@click.option(
    "--digits", type=click.IntRange(min=1), default=DEFAULT_DIGITS, show_default=True
)
@click.option(
    "--s", type=click.IntRange(min=1), default=1, show_default=True, help="q = p^-s."
)
@click.option("--real-q", type=RATIONAL, default="0", show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document.")
def adele_command(fn, eps, mu, nu, r, prime_budget, prec, digits, s, real_q, as_json):
    """Build the adele of series values at a rational point."""
    params = _series_params(fn, eps, mu, nu, real_q)
    with _domain_errors("--r"):
        adele = theorem2_adele(
            params.epsilon,
            params.mu,
            params.nu,
            r,
            prime_budget,
            prec,
            s=s,
            real_q=real_q,
            digits=digits,
        )
    check = is_adele(adele)
    if as_json:
        data = dump_adele(adele, check.ok)
        data["real_component"]["decimal"] = render_decimal(adele.real_component, digits)
        _echo_json(data)
        return
    click.echo("inf: {}".format(render_decimal(adele.real_component, digits)))
    for p, component in sorted(adele.components.items()):
        click.echo("{}: {}".format(p, format_padic(component)))
    click.echo(
        "exceptional: {}".format(
            ", ".join(str(p) for p in sorted(adele.exceptional)) or "none"
        )
    )
    click.echo("certificate: {}".format(adele.tail_certificate))
    for line in check.report:
        click.echo("check: {}".format(line))
    click.echo("is_adele: {}".format("true" if check.ok else "false"))


@cli.command("cosmo")
@click.option(
    "--k", type=click.Choice(["-1", "0", "1"]), default="0", show_default=True
)
@click.option("--lambda", "Lambda", type=RATIONAL, default="3", show_default=True)
@click.option("--kappa", type=RATIONAL, default="1", show_default=True)
@click.option("--q", type=RATIONAL, default="0", show_default=True)
@click.option(
    "--t", "times", type=RATIONAL, multiple=True, default=["1"], show_default=True
)
@click.option(
    "--digits", type=click.IntRange(min=1), default=DEFAULT_DIGITS, show_default=True
)
@click.option(
    "--json", "as_json", is_flag=True, help="Print one JSON document per line."
)
def cosmo_command(k, Lambda, kappa, q, times, digits, as_json):
    """Tabulate R, rho, p and the Friedmann residuals of a regularized model."""
    with _domain_errors("--k/--lambda/--kappa/--q"):
        params = CosmoParams(int(k), Lambda, kappa, q)
    if not as_json:
        click.echo("t\tR\trho\tp\tresidual_acc\tresidual_con")
    for t in times:
        with _domain_errors("--t"):
            state = cosmo_state(params, t, digits)
        if as_json:
            click.echo(json.dumps(CosmoStateSchema().dump(state), sort_keys=True))
            continue
        click.echo(
            "\t".join(
                [format_rational(state.t)]
                + [
                    render_decimal(v, digits)
                    for v in (state.R, state.rho, state.pressure)
                ]
                + ["{:.3e}".format(float(r.magnitude_bound())) for r in state.residuals]
            )
        )


@cli.command("lnq")
@click.option("--q", type=RATIONAL, required=True)
@click.option("--order", type=click.IntRange(min=1), default=8, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document.")
def lnq_command(q, order, as_json):
    """Print the coefficients a_n of the ln_q expansion."""
    with _domain_errors("--q"):
        coefficients = lnq_coeffs(q, order)
    if as_json:
        _echo_json(
            {
                "q": format_rational(q),
                "coefficients": [format_rational(a) for a in coefficients],
            }
        )
        return
    for n, a in enumerate(coefficients, 1):
        click.echo("a_{} = {}".format(n, format_rational(a)))


@cli.command("sum")
@click.option("--mu", type=click.IntRange(min=1), required=True)
@click.option("--nu", type=click.IntRange(min=0), required=True)
@click.option("--q", type=RATIONAL, required=True)
@click.option("--x", type=RATIONAL, required=True)
@click.option("--n", "N", type=click.IntRange(min=0), default=10, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document.")
@click.pass_context
def sum_command(ctx, mu, nu, q, x, N, as_json):
    """Check the telescoping summation identity for one configuration."""
    with _domain_errors("--q/--x"):
        lhs = lhs_partial_sum(mu, nu, q, x, N)
        telescoped = telescope_term(mu, nu, q, x, N + 1) - telescope_term(
            mu, nu, q, x, 0
        )
        limit = theorem3_rhs(nu, q)
    exact = lhs == telescoped
    if as_json:
        _echo_json(
            {
                "partial_sum": format_rational(lhs),
                "telescoped": format_rational(telescoped),
                "limit": format_rational(limit),
                "exact": exact,
            }
        )
    else:
        click.echo("partial sum: {}".format(format_rational(lhs)))
        click.echo("t_{} - t_0: {}".format(N + 1, format_rational(telescoped)))
        click.echo("limit: {}".format(format_rational(limit)))
        click.echo("exact: {}".format("true" if exact else "false"))
    if not exact:
        ctx.exit(1)


@cli.command("verify")
@click.argument("suite", type=click.Choice(list(VERIFICATION_SUITES) + ["all"]))
@click.option("--seed", type=int, default=DEFAULT_VERIFICATION_SEED, show_default=True)
@click.option("--terms", type=click.IntRange(min=1), default=60, show_default=True)
@click.option("--digits", type=click.IntRange(min=1), default=50, show_default=True)
@click.option(
    "--primes-up-to",
    "prime_budget",
    type=click.IntRange(min=2),
    default=DEFAULT_PRIME_BUDGET,
    show_default=True,
)
@click.option("--json", "as_json", is_flag=True, help="Print a JSON document.")
@click.pass_context
def verify_command(ctx, suite, seed, terms, digits, prime_budget, as_json):
    """Run a verification suite, or all of them."""
    report = run_suites([suite], SuiteOptions(seed, terms, digits, prime_budget))
    if as_json:
        _echo_json(VerificationReportSchema().dump(report))
    else:
        click.echo("suite: {} seed: {}".format(report.suite, report.seed))
        for check in report.checks:
            click.echo(
                "{} {} {} {}".format(
                    "PASS" if check.passed else "FAIL",
                    check.name,
                    check.residual if check.residual is not None else "-",
                    check.details,
                ).rstrip()
            )
        click.echo(
            "{} checks, {} failed".format(len(report.checks), len(report.failures))
        )
    if not report.passed:
        ctx.exit(1)
