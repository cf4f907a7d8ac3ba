"""Exact integer helpers.

Rationals are plain :class:`fractions.Fraction` values, which are always
stored in lowest terms with a positive denominator. No floats are used
anywhere in the package.
"""

from __future__ import annotations

import math
import os
from collections.abc import Iterable
from fractions import Fraction

from .errors import DomainError

DEFAULT_MAX_INT = 10**6
MAX_INT_ENV = "TCK_MAX_INT"


def max_int() -> int:
    """The active integer cap; ``TCK_MAX_INT`` overrides the default."""
    raw = os.environ.get(MAX_INT_ENV)
    if raw is None:
        return DEFAULT_MAX_INT
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"{MAX_INT_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise DomainError(f"{MAX_INT_ENV} must be positive, got {cap}")
    return cap


def check_int(value: int, name: str = "value") -> int:
    """Reject non-integers and anything whose magnitude exceeds the cap."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    cap = max_int()
    if abs(value) > cap:
        raise DomainError(f"{name}={value} exceeds the integer cap {cap}")
    return value


def check_positive(value: int, name: str = "value") -> int:
    check_int(value, name)
    if value < 1:
        raise DomainError(f"{name} must be >= 1, got {value}")
    return value


def gcd_all(values: Iterable[int]) -> int:
    vals = [check_int(v) for v in values]
    if not vals:
        raise DomainError("gcd_all needs at least one value")
    if any(v < 0 for v in vals):
        raise DomainError("gcd_all takes nonnegative integers")
    if all(v == 0 for v in vals):
        raise DomainError("gcd of all zeros is undefined")
    return math.gcd(*vals)


def euler_phi(n: int) -> int:
    """Euler's totient by trial-division factorisation."""
    check_positive(n, "n")
    result = n
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            while rest % d == 0:
                rest //= d
            result -= result // d
        d += 1
    if rest > 1:
        result -= result // rest
    return result


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for b >= 1."""
    check_int(a, "a")
    check_int(b, "b")
    if b < 1:
        raise DomainError(f"ceil_div needs b >= 1, got {b}")
    return -((-a) // b)


def as_fraction(value: int | Fraction) -> Fraction:
    if isinstance(value, float):
        raise DomainError("floats are not accepted; pass an int or Fraction")
    return Fraction(value)


def fraction_pair(value: Fraction) -> list[int]:
    """JSON-friendly ``[numerator, denominator]``."""
    value = Fraction(value)
    return [value.numerator, value.denominator]
