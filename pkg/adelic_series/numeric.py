# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Exact integer and rational primitives shared by every other module."""

import math
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from adelic_series.errors import InsufficientPrecisionError

RationalLike = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(
    r"^[+-]?\d+(/\d+)?$|^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$"
)


class FactorialCache(object):
    """Monotonically growing table of factorials.

    Readers of already computed values never block; growth happens under a
    lock so that concurrent evaluations observe the same table.
    """

    def __init__(self) -> None:
        """Initialise the table with ``0! = 1``."""
        self._values: List[int] = [1]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        """Return how many factorials are cached."""
        return len(self._values)

    def get(self, n: int) -> int:
        """Return ``n!``, extending the table up to ``n`` if needed."""
        if n < 0:
            raise ValueError("factorial() not defined for negative values")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = self._values
            while len(values) <= n:
                values.append(values[-1] * len(values))
            return values[n]


_factorials = FactorialCache()


def factorial(n: int) -> int:
    """Return ``n!`` from the process-wide cache."""
    return _factorials.get(n)


def rising_factorial(a: int, mu: int) -> int:
    """Return ``a (a + 1) ... (a + mu - 1)``."""
    if a < 1 or mu < 1:
        raise ValueError("rising_factorial() needs a >= 1 and mu >= 1")
    return math.prod(range(a, a + mu))


def parse_rational(text: str) -> Fraction:
    """Parse ``num/den``, an integer or a decimal literal into a fraction."""
    text = text.strip()
    if not _RATIONAL_PATTERN.match(text):
        raise ValueError("'{}' is not a rational number".format(text))
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError("'{}' has a zero denominator".format(text))


def format_rational(x: RationalLike) -> str:
    """Render a rational as ``num/den`` (or ``num`` for integers)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "{}/{}".format(x.numerator, x.denominator)


@dataclass(frozen=True)
class DecimalApproximation:
    """Real number known to lie in ``[value - error_bound, value + error_bound]``."""

    value: Fraction
    error_bound: Fraction = Fraction(0)

    def __post_init__(self):
        """Normalise both fields to fractions."""
        object.__setattr__(self, "value", Fraction(self.value))
        object.__setattr__(self, "error_bound", Fraction(self.error_bound))
        if self.error_bound < 0:
            raise ValueError("error_bound must be non-negative")

    @classmethod
    def exact(cls, value: RationalLike) -> "DecimalApproximation":
        """Wrap an exact rational."""
        return cls(Fraction(value), Fraction(0))

    @property
    def is_exact(self) -> bool:
        """Whether the represented real is known exactly."""
        return self.error_bound == 0

    @property
    def lower(self) -> Fraction:
        """Lower end of the enclosing interval."""
        return self.value - self.error_bound

    @property
    def upper(self) -> Fraction:
        """Upper end of the enclosing interval."""
        return self.value + self.error_bound

    def magnitude_bound(self) -> Fraction:
        """Upper bound of the absolute value."""
        return abs(self.value) + self.error_bound

    def contains(self, x: RationalLike) -> bool:
        """Whether ``x`` lies in the enclosing interval."""
        return self.lower <= x <= self.upper

    def excludes_zero(self) -> bool:
        """Whether the enclosing interval is bounded away from zero."""
        return abs(self.value) > self.error_bound

    def rounded(self, places: int) -> "DecimalApproximation":
        """Round the centre to ``places`` decimals, widening the bound."""
        scale = 10**places
        centre = Fraction(round(self.value * scale), scale)
        return DecimalApproximation(
            centre, self.error_bound + abs(centre - self.value)
        )

    def _coerce(self, other) -> "DecimalApproximation":
        if isinstance(other, DecimalApproximation):
            return other
        return DecimalApproximation.exact(other)

    def __neg__(self) -> "DecimalApproximation":
        """Negate."""
        return DecimalApproximation(-self.value, self.error_bound)

    def __abs__(self) -> "DecimalApproximation":
        """Absolute value; the bound is unchanged."""
        return DecimalApproximation(abs(self.value), self.error_bound)

    def __add__(self, other) -> "DecimalApproximation":
        """Add, summing the error bounds."""
        other = self._coerce(other)
        return DecimalApproximation(
            self.value + other.value, self.error_bound + other.error_bound
        )

    __radd__ = __add__

    def __sub__(self, other) -> "DecimalApproximation":
        """Subtract, summing the error bounds."""
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "DecimalApproximation":
        """Subtract from a rational."""
        return self._coerce(other) - self

    def __mul__(self, other) -> "DecimalApproximation":
        """Multiply with first-order plus cross-term error propagation."""
        other = self._coerce(other)
        error = (
            abs(self.value) * other.error_bound
            + abs(other.value) * self.error_bound
            + self.error_bound * other.error_bound
        )
        return DecimalApproximation(self.value * other.value, error)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "DecimalApproximation":
        """Divide; the divisor interval must exclude zero."""
        other = self._coerce(other)
        if not other.excludes_zero():
            raise InsufficientPrecisionError(
                "Divisor {} +/- {} is not bounded away from zero.".format(
                    float(other.value), float(other.error_bound)
                )
            )
        b0 = abs(other.value)
        error = (self.error_bound * b0 + abs(self.value) * other.error_bound) / (
            (b0 - other.error_bound) * b0
        )
        return DecimalApproximation(self.value / other.value, error)

    def __rtruediv__(self, other) -> "DecimalApproximation":
        """Divide a rational by this approximation."""
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> "DecimalApproximation":
        """Raise to a non-negative integer power by repeated multiplication."""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = DecimalApproximation.exact(1)
        for _ in range(exponent):
            result = result * self
        return result


def render_decimal(x: DecimalApproximation, digits: int) -> str:
    """Render ``x`` with ``digits`` decimals, rounding half to even.

    :param x: Approximation whose error bound is at most half a unit in the
        last requested place.
    :param digits: Number of decimals, at least 1.

    :return: Decimal string such as ``"0.500"``.
    """
    if digits < 1:
        raise ValueError("digits must be positive")
    if x.error_bound > Fraction(1, 2 * 10**digits):
        raise InsufficientPrecisionError(
            "Error bound {} exceeds half a unit in the last of {} places.".format(
                format_rational(x.error_bound), digits
            )
        )
    scaled = round(x.value * 10**digits)
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled)).rjust(digits + 1, "0")
    return "{}{}.{}".format(sign, text[:-digits], text[-digits:])


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def sqrt_approximation(x: RationalLike, digits: int) -> DecimalApproximation:
    """Square root of a non-negative rational, exact when ``x`` is a square."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("square root of a negative number")
    if _is_square(x.numerator) and _is_square(x.denominator):
        return DecimalApproximation.exact(
            Fraction(math.isqrt(x.numerator), math.isqrt(x.denominator))
        )
    scale = 10**digits
    root = math.isqrt(math.floor(x * scale * scale))
    # root / scale <= sqrt(x) < (root + 1) / scale
    return DecimalApproximation(
        Fraction(2 * root + 1, 2 * scale), Fraction(1, 2 * scale)
    )


def exp_upper_bound(y: RationalLike) -> int:
    """Integer upper bound of ``exp(|y|)``."""
    return 3 ** math.ceil(abs(Fraction(y)))
