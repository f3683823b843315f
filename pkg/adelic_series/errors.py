# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Adelic-Series errors."""


class AdelicSeriesError(Exception):
    """Base class of all Adelic-Series errors."""


class InsufficientPrecisionError(AdelicSeriesError):
    """Error bound or p-adic precision too loose for the requested output."""


class NotAPrimeError(AdelicSeriesError):
    """Given integer is not a prime in the supported range."""


class PrimeMismatchError(AdelicSeriesError):
    """Operands of a p-adic operation live in different fields."""


class InvalidSeriesParamsError(AdelicSeriesError):
    """Parameters do not select a member of the series family."""


class ClassicalDivergenceError(AdelicSeriesError):
    """Classical series evaluated outside its p-adic convergence domain."""


class NonzeroConstantTermError(AdelicSeriesError):
    """Inner series of a composition or reversion has a constant term."""


class ZeroLinearCoefficientError(AdelicSeriesError):
    """Series without a linear term cannot be reverted."""


class ZeroArgumentError(AdelicSeriesError):
    """Operation is undefined at zero."""


class SupportExceedsBudgetError(AdelicSeriesError):
    """Character needs an idele component that was never materialized."""


class DegenerateScaleFactorError(AdelicSeriesError):
    """Scale factor vanishes (or cannot be told apart from zero)."""


class SeriesTermLimitError(AdelicSeriesError):
    """Series evaluation exceeded the configured number of terms."""
