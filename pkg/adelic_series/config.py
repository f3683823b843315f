# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Adelic-Series configuration."""

import os
from fractions import Fraction

ADELIC_SERIES_LOG_LEVEL = os.getenv("ADELIC_SERIES_LOG_LEVEL", "INFO")
"""Log level used by the command line interface."""

ADELIC_SERIES_LOG_FORMAT = os.getenv(
    "ADELIC_SERIES_LOG_FORMAT",
    "%(asctime)s | %(levelname)s | %(module)s.%(funcName)s:%(lineno)d | %(message)s",
)
"""Log format used by the command line interface. Logs go to stderr."""

DEFAULT_VERIFICATION_SEED = int(os.getenv("ADELIC_SERIES_SEED", 2000))
"""Seed of the pseudo-random generator used by the verification suites."""

MAX_PRIME = 10**6
"""Largest prime accepted by ``Prime``; primality is decided by trial division."""

DEFAULT_DIGITS = int(os.getenv("ADELIC_SERIES_DEFAULT_DIGITS", 20))
"""Decimal digits of real evaluations when none are requested."""

DEFAULT_PADIC_PRECISION = int(os.getenv("ADELIC_SERIES_DEFAULT_PADIC_PRECISION", 20))
"""Absolute p-adic precision (power of p) of evaluations when none is requested."""

DEFAULT_PRIME_BUDGET = int(os.getenv("ADELIC_SERIES_DEFAULT_PRIME_BUDGET", 50))
"""Largest prime whose adele component is materialized by default."""

WORKING_DIGITS_MARGIN = 10
"""Guard digits added to intermediate real computations.

Derived quantities (quotients, squares, Friedmann residuals) lose a few
digits with respect to the series values they are built from.
"""

MAX_SERIES_TERMS = int(os.getenv("ADELIC_SERIES_MAX_SERIES_TERMS", 5000))
"""Number of series terms after which an evaluation gives up."""

VERIFICATION_SUITES = [
    "adele-cert",
    "characters",
    "desitter",
    "eq45",
    "friedmann",
    "legendre",
    "lnq",
    "parity",
    "product-formula",
    "telescoping",
    "theorem1",
]
"""Names of the verification suites, in report order."""

PLANCK_LENGTH_CM = Fraction(1, 10**33)
"""Order of magnitude of the Planck length in centimetres.

Only used to express the regularization parameter as ``q = l_Pl / l`` for a
characteristic length ``l`` of a given physical scale.
"""
