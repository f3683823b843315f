# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Marshmallow schemas of the JSON documents printed by the CLI.

Rationals are serialized as ``num/den`` strings and p-adic numbers in their
textual format, so every printed value loads back to an equal object.
"""

from marshmallow import Schema, ValidationError, fields, post_load

from adelic_series.numeric import (
    DecimalApproximation,
    format_rational,
    parse_rational,
)
from adelic_series.padic import format_padic, parse_padic


class RationalField(fields.Field):
    """Rational number as ``num/den``."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return format_rational(value)

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return parse_rational(str(value))
        except ValueError as error:
            raise ValidationError(str(error))


class PadicNumberField(fields.Field):
    """p-adic residue class in the ``padic(p=..., ...)`` format."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return format_padic(value)

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return parse_padic(value)
        except ValueError as error:
            raise ValidationError(str(error))


class DecimalApproximationSchema(Schema):
    """Centre and error bound of a real approximation."""

    value = RationalField(required=True)
    error_bound = RationalField(required=True)
    decimal = fields.String(dump_only=True)

    @post_load
    def make_approximation(self, data, **kwargs):
        """Build the approximation."""
        return DecimalApproximation(data["value"], data["error_bound"])


class PadicEvalReportSchema(Schema):
    """p-adic evaluation with its tail certificate."""

    result = PadicNumberField(required=True)
    terms_used = fields.Integer(required=True)
    tail_bound_exponent = fields.Integer(required=True)


class AdeleSchema(Schema):
    """Materialized adele."""

    real_component = fields.Nested(DecimalApproximationSchema, required=True)
    components = fields.Dict(
        keys=fields.String(), values=PadicNumberField(), required=True
    )
    exceptional = fields.List(fields.Integer(), required=True)
    tail_certificate = fields.String(allow_none=True)
    prime_budget = fields.Integer(required=True)
    is_adele = fields.Boolean(dump_only=True)


class CosmoStateSchema(Schema):
    """One row of the cosmology table."""

    t = RationalField(required=True)
    R = fields.Nested(DecimalApproximationSchema, required=True)
    rho = fields.Nested(DecimalApproximationSchema, required=True)
    pressure = fields.Nested(DecimalApproximationSchema, required=True)
    residuals = fields.List(fields.Nested(DecimalApproximationSchema), required=True)


class CheckResultSchema(Schema):
    """One verification check."""

    name = fields.String(required=True)
    passed = fields.Boolean(required=True)
    residual = fields.String(allow_none=True)
    details = fields.String()


class VerificationReportSchema(Schema):
    """Report of a verification run."""

    suite = fields.String(required=True)
    seed = fields.Integer(required=True)
    passed = fields.Boolean(dump_only=True)
    checks = fields.List(fields.Nested(CheckResultSchema), required=True)


def dump_approximation(
    approximation: DecimalApproximation, decimal: str = None
) -> dict:
    """Serialize an approximation, optionally with its rendered decimal."""
    data = DecimalApproximationSchema().dump(approximation)
    if decimal is not None:
        data["decimal"] = decimal
    return data


def dump_adele(adele, is_adele: bool = None) -> dict:
    """Serialize an adele; component keys are the primes as strings."""
    data = AdeleSchema().dump(
        {
            "real_component": adele.real_component,
            "components": {str(p): c for p, c in sorted(adele.components.items())},
            "exceptional": sorted(adele.exceptional),
            "tail_certificate": adele.tail_certificate,
            "prime_budget": adele.prime_budget,
        }
    )
    if is_adele is not None:
        data["is_adele"] = is_adele
    return data
