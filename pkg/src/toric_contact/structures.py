"""Weight quadruples, admissibility, Chern data and the Y^{p,q} bridge."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .numeric import as_fraction, check_int, check_positive

_PAIRS = ((0, 2), (0, 3), (1, 2), (1, 3))


class ManifoldType(enum.Enum):
    TRIVIAL = "S2xS3"
    NONTRIVIAL = "Xinf"

    @property
    def label(self) -> str:
        return "Trivial" if self is ManifoldType.TRIVIAL else "Nontrivial"

    @classmethod
    def parse(cls, text: str) -> "ManifoldType":
        key = text.strip().lower()
        if key in ("t", "trivial", "s2xs3", "even"):
            return cls.TRIVIAL
        if key in ("n", "nontrivial", "xinf", "x_inf", "odd"):
            return cls.NONTRIVIAL
        raise DomainError(f"unknown bundle {text!r}; use trivial or nontrivial")


@dataclass(frozen=True)
class Quadruple:
    """Weights (p1, p2, p3, p4) of the circle action, stored as given."""

    p1: int
    p2: int
    p3: int
    p4: int

    def __post_init__(self) -> None:
        for name, value in zip(("p1", "p2", "p3", "p4"), self.as_tuple()):
            check_positive(value, name)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p1, self.p2, self.p3, self.p4)

    @classmethod
    def parse(cls, text: str) -> "Quadruple":
        parts = text.split(",")
        if len(parts) != 4:
            raise DomainError(f"expected four comma-separated weights, got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError:
            raise DomainError(f"weights must be integers, got {text!r}") from None

    def swap_first(self) -> "Quadruple":
        return Quadruple(self.p2, self.p1, self.p3, self.p4)

    def swap_second(self) -> "Quadruple":
        return Quadruple(self.p1, self.p2, self.p4, self.p3)

    def swap_pairs(self) -> "Quadruple":
        return Quadruple(self.p3, self.p4, self.p1, self.p2)

    def canonical(self) -> "Quadruple":
        """Representative under the within-pair and pair-exchange symmetries.

        Each pair is sorted ascending, then the pair with the smaller
        minimum goes first (ties broken lexicographically).
        """
        a = tuple(sorted((self.p1, self.p2)))
        b = tuple(sorted((self.p3, self.p4)))
        first, second = sorted((a, b))
        return Quadruple(*first, *second)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.as_tuple())


@dataclass(frozen=True)
class SasakiConeVector:
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "a3", "a4"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a1, self.a2, self.a3, self.a4)


@dataclass(frozen=True)
class YpqParams:
    p: int
    q: int

    def __post_init__(self) -> None:
        check_positive(self.p, "p")
        check_int(self.q, "q")
        if not 0 <= self.q < self.p:
            raise DomainError(f"Y^{{p,q}} needs 0 <= q < p, got p={self.p}, q={self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise DomainError(f"Y^{{p,q}} needs gcd(p,q)=1, got p={self.p}, q={self.q}")


def is_admissible(q: Quadruple) -> bool:
    w = q.as_tuple()
    return all(math.gcd(w[i], w[j]) == 1 for i, j in _PAIRS)


def _require_admissible(q: Quadruple) -> None:
    if not is_admissible(q):
        raise DomainError(f"quadruple ({q}) is not admissible")


def first_chern_coefficient(q: Quadruple) -> int:
    """Coefficient of the positive generator in c1 of the contact bundle."""
    _require_admissible(q)
    return q.p1 + q.p2 - q.p3 - q.p4


def manifold_type(q: Quadruple) -> ManifoldType:
    # parity of the raw sum, never of a reduced form
    if first_chern_coefficient(q) % 2 == 0:
        return ManifoldType.TRIVIAL
    return ManifoldType.NONTRIVIAL


def sasaki_cone_contains(q: Quadruple, a: SasakiConeVector) -> bool:
    _require_admissible(q)
    w = q.as_tuple()
    c = a.as_tuple()
    return all(w[i] * c[j] + w[j] * c[i] > 0 for i, j in _PAIRS)


def ypq_to_quadruple(y: YpqParams) -> Quadruple:
    return Quadruple(y.p - y.q, y.p + y.q, y.p, y.p)


def quadruple_to_ypq(q: Quadruple) -> YpqParams | None:
    """Recognise the exact (p-q, p+q, p, p) shape up to the pair symmetries."""
    c = q.canonical()
    for x1, x2, y1, y2 in (c.as_tuple(), c.swap_pairs().as_tuple()):
        if y1 != y2 or (x1 + x2) != 2 * y1:
            continue
        p, qq = y1, (x2 - x1) // 2
        if 0 <= qq < p and math.gcd(p, qq) == 1:
            return YpqParams(p, qq)
    return None
