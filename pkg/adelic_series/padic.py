# -*- coding: utf-8 -*-
#
# This file is part of Adelic-Series.
# Copyright (C) 2026 Adelic-Series contributors.
#
# Adelic-Series is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""p-adic valuations, norms and finite-precision arithmetic in Q_p.

A :class:`PadicNumber` is an exact residue class: it stands for every
element of Q_p congruent to ``p**valuation * sum(d_i p**i)`` modulo
``p**(valuation + precision)``. Nothing is ever rounded; operations only
narrow the absolute precision the way the ultrametric inequality allows.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Dict, List, Tuple, Union

from adelic_series.config import MAX_PRIME
from adelic_series.errors import (
    InsufficientPrecisionError,
    NotAPrimeError,
    PrimeMismatchError,
)
from adelic_series.numeric import RationalLike

Valuation = Union[int, float]
"""An integer valuation, or ``math.inf`` for zero."""

_PADIC_PATTERN = re.compile(
    r"^padic\(p=(?P<p>\d+), (?:(?P<zero>zero)|val=(?P<val>-?\d+), "
    r"digits=\[(?P<digits>[\d,]*)\]), prec=(?P<prec>-?\d+)\)$"
)


def is_prime(n: int) -> bool:
    """Decide primality of ``n`` by trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class Prime(int):
    """A prime number not larger than ``MAX_PRIME``."""

    def __new__(cls, value: int) -> "Prime":
        """Validate ``value`` and build the prime."""
        if isinstance(value, Prime):
            return value
        if isinstance(value, bool) or int(value) != value:
            raise NotAPrimeError("{!r} is not an integer.".format(value))
        value = int(value)
        if value > MAX_PRIME:
            raise NotAPrimeError(
                "{} exceeds the supported prime bound {}.".format(value, MAX_PRIME)
            )
        if not is_prime(value):
            raise NotAPrimeError("{} is not a prime.".format(value))
        return super(Prime, cls).__new__(cls, value)


@lru_cache(maxsize=4096)
def _checked_prime(p: int) -> int:
    if isinstance(p, bool) or int(p) != p or not is_prime(int(p)):
        raise NotAPrimeError("{!r} is not a prime.".format(p))
    return int(p)


def primes_up_to(bound: int) -> List[Prime]:
    """Return all primes ``p <= bound`` in increasing order."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for d in range(2, math.isqrt(bound) + 1):
        if sieve[d]:
            sieve[d * d :: d] = bytearray(len(range(d * d, bound + 1, d)))
    return [Prime(n) for n, flag in enumerate(sieve) if flag]


def factorize(n: int) -> Dict[int, int]:
    """Factor ``|n|`` by trial division into ``{prime: exponent}``."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    factors: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_support(x: RationalLike) -> List[int]:
    """Primes dividing the numerator or the denominator of a nonzero rational."""
    x = Fraction(x)
    primes = set(factorize(x.numerator)) | set(factorize(x.denominator))
    return sorted(primes)


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(x: RationalLike, p: int) -> Valuation:
    """Return the p-adic valuation of ``x``; ``math.inf`` for zero."""
    p = _checked_prime(p)
    x = Fraction(x)
    if x == 0:
        return math.inf
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-``p`` digits of ``n``."""
    if n < 0:
        raise ValueError("digit_sum() needs n >= 0")
    total = 0
    while n:
        n, digit = divmod(n, p)
        total += digit
    return total


def legendre_valuation(n: int, p: int) -> int:
    """Exponent of ``p`` in ``n!`` as ``sum(n // p**i)``."""
    p = _checked_prime(p)
    total, power = 0, p
    while power <= n:
        total += n // power
        power *= p
    return total


def factorial_valuation_floor(k: int, p: int) -> Fraction:
    """Lower bound of ``vp(k!)`` that grows linearly in ``k``.

    A number below ``p**m`` has at most ``m`` base-``p`` digits, each at most
    ``p - 1``, hence ``vp(k!) >= (k - (p - 1)(floor(log_p k) + 1)) / (p - 1)``.

    Only checked against :func:`legendre_valuation`; p-adic evaluation
    certifies its tails with the exact valuation instead.
    """
    if k < 1:
        return Fraction(0)
    ndigits = 0
    n = k
    while n:
        n //= p
        ndigits += 1
    return Fraction(k - (p - 1) * ndigits, p - 1)


@total_ordering
@dataclass(frozen=True)
class PadicNorm:
    """Exact p-adic norm ``p**(-exponent)``; ``exponent`` is ``math.inf`` for zero."""

    prime: int
    exponent: Valuation

    def __lt__(self, other: "PadicNorm") -> bool:
        """A larger exponent means a smaller norm."""
        if self.prime != other.prime:
            raise PrimeMismatchError(
                "Cannot compare norms of Q_{} and Q_{}.".format(self.prime, other.prime)
            )
        return self.exponent > other.exponent

    @property
    def is_zero(self) -> bool:
        """Whether this is the norm of zero."""
        return self.exponent == math.inf

    def to_fraction(self) -> Fraction:
        """Return the norm as an exact rational."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.prime) ** (-self.exponent)

    def __str__(self) -> str:
        """Render as ``|.|_p = p^-e``."""
        if self.is_zero:
            return "0"
        return "{}^{}".format(self.prime, -self.exponent)


def norm(x: RationalLike, p: int) -> PadicNorm:
    """Return ``|x|_p``."""
    return PadicNorm(p, vp(x, p))


def norm_factorial(n: int, p: int) -> PadicNorm:
    """Return ``|n!|_p = p**(-(n - digit_sum(n, p)) / (p - 1))``."""
    if n < 0:
        raise ValueError("norm_factorial() needs n >= 0")
    exponent, remainder = divmod(n - digit_sum(n, p), p - 1)
    assert remainder == 0
    return PadicNorm(p, exponent)


def _digits(unit: int, p: int, count: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(count):
        unit, digit = divmod(unit, p)
        digits.append(digit)
    return tuple(digits)


@dataclass(frozen=True)
class PadicNumber:
    """Residue class of Q_p.

    For nonzero values ``valuation`` is finite, ``digits`` holds ``precision``
    base-``p`` digits (little-endian, ``digits[0] != 0``). The zero marker has
    ``valuation == math.inf``, no digits, and ``precision`` is the absolute
    exponent ``A`` such that the value is known to be ``0 mod p**A``.
    """

    prime: int
    valuation: Valuation
    digits: Tuple[int, ...]
    precision: int

    @classmethod
    def zero(cls, prime: int, precision: int) -> "PadicNumber":
        """Zero certified modulo ``prime**precision``."""
        return cls(prime, math.inf, (), precision)

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero marker."""
        return self.valuation == math.inf

    @property
    def absolute_precision(self) -> int:
        """Exponent ``A`` such that the value is known modulo ``p**A``."""
        if self.is_zero:
            return self.precision
        return self.valuation + self.precision

    @property
    def unit(self) -> int:
        """Integer ``sum(d_i p**i)`` of the unit part."""
        return sum(d * self.prime**i for i, d in enumerate(self.digits))

    def norm(self) -> PadicNorm:
        """Norm of the residue class (zero marker has norm zero)."""
        return PadicNorm(self.prime, self.valuation)

    def lift(self) -> Fraction:
        """Canonical rational representative ``p**v * unit``."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.prime) ** self.valuation * self.unit

    def in_integers(self) -> bool:
        """Whether the class lies in Z_p, i.e. ``|x|_p <= 1``."""
        return self.valuation >= 0

    def truncate(self, absolute_precision: int) -> "PadicNumber":
        """Forget everything beyond ``p**absolute_precision``."""
        if absolute_precision > self.absolute_precision:
            raise InsufficientPrecisionError(
                "Cannot raise precision from {} to {}.".format(
                    self.absolute_precision, absolute_precision
                )
            )
        return reduce_modulo(self.lift(), self.prime, absolute_precision)

    def fractional_part(self) -> Fraction:
        """Return ``{x}_p``, the sum of the digits at negative powers of ``p``."""
        if self.is_zero or self.valuation >= 0:
            return Fraction(0)
        if self.absolute_precision < 0:
            raise InsufficientPrecisionError(
                "Fractional part needs precision down to p^0, have p^{}.".format(
                    self.absolute_precision
                )
            )
        head = self.digits[: -self.valuation]
        return Fraction(
            sum(d * self.prime**i for i, d in enumerate(head)),
            self.prime ** (-self.valuation),
        )

    def __add__(self, other: "PadicNumber") -> "PadicNumber":
        """See :func:`padic_add`."""
        return padic_add(self, other)

    def __neg__(self) -> "PadicNumber":
        """Additive inverse at the same precision."""
        if self.is_zero:
            return self
        return reduce_modulo(-self.lift(), self.prime, self.absolute_precision)

    def __sub__(self, other: "PadicNumber") -> "PadicNumber":
        """Difference through :func:`padic_add`."""
        return padic_add(self, -other)

    def __mul__(self, other: "PadicNumber") -> "PadicNumber":
        """See :func:`padic_mul`."""
        return padic_mul(self, other)

    def __str__(self) -> str:
        """Render in the bit-exact textual format."""
        return format_padic(self)


def reduce_modulo(x: RationalLike, p: int, absolute_precision: int) -> PadicNumber:
    """Residue class of ``x`` modulo ``p**absolute_precision``."""
    x = Fraction(x)
    v = vp(x, p)
    if v >= absolute_precision:
        return PadicNumber.zero(p, absolute_precision)
    return to_padic(x, p, absolute_precision - v)


def to_padic(x: RationalLike, p: int, precision: int) -> PadicNumber:
    """Embed ``x`` into Q_p with ``precision`` significant digits.

    :param x: Rational to embed.
    :param p: Prime.
    :param precision: Number of digits of the unit part, at least 1.

    :return: Residue class of ``x``; zero maps to the zero marker certified
        modulo ``p**precision``.
    """
    p = _checked_prime(p)
    if precision < 1:
        raise ValueError("precision must be at least 1")
    x = Fraction(x)
    if x == 0:
        return PadicNumber.zero(p, precision)
    v = vp(x, p)
    unit = x / Fraction(p) ** v
    modulus = p**precision
    residue = unit.numerator * pow(unit.denominator, -1, modulus) % modulus
    return PadicNumber(p, v, _digits(residue, p, precision), precision)


def _check_same_prime(a: PadicNumber, b: PadicNumber) -> None:
    if a.prime != b.prime:
        raise PrimeMismatchError(
            "Operands live in Q_{} and Q_{}.".format(a.prime, b.prime)
        )


def padic_add(a: PadicNumber, b: PadicNumber) -> PadicNumber:
    """Sum known modulo the smaller of both absolute precisions."""
    _check_same_prime(a, b)
    absolute_precision = min(a.absolute_precision, b.absolute_precision)
    return reduce_modulo(a.lift() + b.lift(), a.prime, absolute_precision)


def padic_mul(a: PadicNumber, b: PadicNumber) -> PadicNumber:
    """Product; valuations add and unit parts multiply modulo the shorter precision."""
    _check_same_prime(a, b)
    p = a.prime
    if a.is_zero and b.is_zero:
        return PadicNumber.zero(p, a.precision + b.precision)
    if a.is_zero or b.is_zero:
        zero, other = (a, b) if a.is_zero else (b, a)
        return PadicNumber.zero(p, zero.precision + other.valuation)
    precision = min(a.precision, b.precision)
    modulus = p**precision
    return PadicNumber(
        p,
        a.valuation + b.valuation,
        _digits(a.unit * b.unit % modulus, p, precision),
        precision,
    )


def frac_part(x: RationalLike, p: int) -> Fraction:
    """Return ``{x}_p``, the rational in [0, 1) with ``x - {x}_p`` in Z_p."""
    p = _checked_prime(p)
    x = Fraction(x)
    v = vp(x, p)
    if v >= 0:
        return Fraction(0)
    modulus = p ** (-v)
    scaled = x * modulus
    residue = scaled.numerator * pow(scaled.denominator, -1, modulus) % modulus
    return Fraction(residue, modulus)


def format_padic(x: PadicNumber) -> str:
    """Render ``padic(p=<p>, val=<v>, digits=[...], prec=<N>)``."""
    if x.is_zero:
        return "padic(p={}, zero, prec={})".format(x.prime, x.precision)
    return "padic(p={}, val={}, digits=[{}], prec={})".format(
        x.prime, x.valuation, ",".join(str(d) for d in x.digits), x.precision
    )


def parse_padic(text: str) -> PadicNumber:
    """Inverse of :func:`format_padic`."""
    match = _PADIC_PATTERN.match(text.strip())
    if not match:
        raise ValueError("'{}' is not a p-adic number.".format(text))
    p = int(match.group("p"))
    precision = int(match.group("prec"))
    if match.group("zero"):
        return PadicNumber.zero(p, precision)
    digits = tuple(int(d) for d in match.group("digits").split(",") if d)
    if len(digits) != precision or not digits or digits[0] == 0:
        raise ValueError("'{}' has malformed digits.".format(text))
    if any(d >= p for d in digits):
        raise ValueError("'{}' has digits out of range.".format(text))
    return PadicNumber(p, int(match.group("val")), digits, precision)
