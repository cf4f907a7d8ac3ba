"""Morse-Bott contact homology generators for the (p1, p2, l, l) structures.

Conventions: gradings are mu_RS + Morse index - dim/2 with no global shift,
the degree bound is strict, and the dense stratum is capped by the fibre
class L unless the caller passes another cycle.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, DomainError
from .hirzebruch import (
    DivisorClass,
    SubfamilyParams,
    fibre_class,
    orbifold_chern_evaluation,
    quotient_orbifold,
)
from .numeric import as_fraction, check_int, check_positive
from .structures import Quadruple, is_admissible


class Stratum(enum.Enum):
    BRANCH1 = "branch1"
    BRANCH2 = "branch2"
    DENSE = "dense"

    @property
    def dim(self) -> int:
        return 4 if self is Stratum.DENSE else 2

    @classmethod
    def branch(cls, i: int) -> "Stratum":
        return cls.BRANCH1 if i == 1 else cls.BRANCH2


class CriticalType(enum.Enum):
    MAX = "max"
    MIN = "min"
    SADDLE1 = "saddle1"
    SADDLE2 = "saddle2"


_SHIFTS = {
    2: {CriticalType.MAX: 1, CriticalType.MIN: -1},
    4: {
        CriticalType.MAX: 2,
        CriticalType.SADDLE1: 0,
        CriticalType.SADDLE2: 0,
        CriticalType.MIN: -2,
    },
}


@dataclass(frozen=True)
class Generator:
    grading: int
    stratum: Stratum
    multiplicity: int
    critical_type: CriticalType
    rs_index: int
    action: Fraction

    def sort_key(self) -> tuple[int, str, int, str]:
        return (self.grading, self.stratum.value, self.multiplicity, self.critical_type.value)


@dataclass(frozen=True)
class Spectrum:
    p1: int
    p2: int
    k2: int
    degree_bound: int
    generators: tuple[Generator, ...]

    @property
    def counts_by_degree(self) -> dict[int, int]:
        counts = Counter(g.grading for g in self.generators)
        return {d: counts[d] for d in sorted(counts)}

    def __len__(self) -> int:
        return len(self.generators)


def rs_index_branch(p1: int, p2: int, k1: int, i: int, m: int) -> int:
    """mu_RS of the m-fold orbit over the i-th branch sphere."""
    if i not in (1, 2):
        raise DomainError(f"branch index i must be 1 or 2, got {i}")
    for name, v in (("p1", p1), ("p2", p2), ("k1", k1), ("m", m)):
        check_positive(v, name)
    p_i, p_other = (p1, p2) if i == 1 else (p2, p1)
    return 2 * k1 * m + 2 * ((m * p_other) // p_i) - 1


def rs_index_dense(k2: int, m: int, chern_eval: int | Fraction) -> Fraction:
    check_positive(m, "m")
    check_int(k2, "k2")
    return 2 * k2 * m * as_fraction(chern_eval)


def grade_generator(rs_index: int, stratum_dim: int, critical_type: CriticalType) -> int:
    if stratum_dim not in _SHIFTS:
        raise DomainError(f"stratum dimension must be 2 or 4, got {stratum_dim}")
    shifts = _SHIFTS[stratum_dim]
    if critical_type not in shifts:
        raise DomainError(f"{critical_type.value} is not a critical point type on a sphere")
    return rs_index + shifts[critical_type]


def action_of_branch_orbit(k2: int, i: int, m: int, p_i: int) -> Fraction:
    check_positive(m, "m")
    check_positive(p_i, "p_i")
    if m % p_i == 0:
        raise DomainError(f"p_{i}={p_i} divides m={m}; that orbit lies in the dense stratum")
    return Fraction(k2 * m, p_i)


def novikov_shift(grading: int, chern_on_a: int) -> int:
    return grading - 2 * chern_on_a


def _assert_good_orbits(rs_values: list[int]) -> None:
    # bad orbits would show up as a parity flip between multiplicities
    if len({v % 2 for v in rs_values}) > 1:
        raise ConsistencyError(f"branch indices change parity: {rs_values}")


def _subfamily_quadruple(p1: int, p2: int, k2: int) -> Quadruple:
    q = Quadruple(p1, p2, k2, k2)
    if not is_admissible(q):
        raise DomainError(f"quadruple ({q}) is not admissible")
    return q


def branch_generators(p1: int, p2: int, k2: int) -> list[Generator]:
    """Max and min over each branch orbit space, m = 1 .. p_i - 1."""
    lo, hi = sorted((p1, p2))
    k1 = math.gcd(lo, hi)
    out = []
    for i, p_i in ((1, lo), (2, hi)):
        indices = [rs_index_branch(lo, hi, k1, i, m) for m in range(1, p_i)]
        _assert_good_orbits(indices)
        for m, rs in enumerate(indices, start=1):
            action = action_of_branch_orbit(k2, i, m, p_i)
            for ct in (CriticalType.MAX, CriticalType.MIN):
                out.append(
                    Generator(grade_generator(rs, 2, ct), Stratum.branch(i), m, ct, rs, action)
                )
    return out


def dense_chern_evaluation(p1: int, p2: int, k2: int, capping: DivisorClass | None = None) -> Fraction:
    """<c1^orb, Sigma> on the quotient surface; Sigma defaults to the fibre L."""
    surface = quotient_orbifold(SubfamilyParams.from_quadruple(_subfamily_quadruple(p1, p2, k2)))
    cycle = fibre_class(surface.n) if capping is None else capping
    return orbifold_chern_evaluation(surface, cycle)


def dense_generators(
    p1: int, p2: int, k2: int, degree_bound: int, capping: DivisorClass | None = None
) -> list[Generator]:
    """Dense-stratum generators for m = 1, 2, ... until the minimum passes the bound."""
    chern = dense_chern_evaluation(p1, p2, k2, capping)
    if chern <= 0:
        raise DomainError("the capping class must pair positively with c1^orb to truncate by degree")
    out = []
    m = 1
    while True:
        rs = rs_index_dense(k2, m, chern)
        if rs.denominator != 1:
            raise DomainError(f"dense index {rs} is not an integer for this capping class")
        rs = int(rs)
        if grade_generator(rs, 4, CriticalType.MIN) >= degree_bound:
            return out
        for ct in CriticalType:
            out.append(Generator(grade_generator(rs, 4, ct), Stratum.DENSE, m, ct, rs, Fraction(k2 * m)))
        m += 1


def enumerate_spectrum(
    p1: int, p2: int, k2: int, degree_bound: int, capping: DivisorClass | None = None
) -> Spectrum:
    _subfamily_quadruple(p1, p2, k2)
    check_int(degree_bound, "degree_bound")
    if degree_bound < 0:
        raise DomainError(f"degree bound must be >= 0, got {degree_bound}")
    found = branch_generators(p1, p2, k2) + dense_generators(p1, p2, k2, degree_bound, capping)
    kept = sorted((g for g in found if g.grading < degree_bound), key=Generator.sort_key)
    return Spectrum(p1, p2, k2, degree_bound, tuple(kept))


def invariant_degree_bound(p1: int, p2: int) -> int:
    return 2 * (p1 + p2 + 1)


@dataclass(frozen=True)
class OrbitFamily:
    """One Morse-Bott family of Reeb orbits, before its critical points are split out."""

    stratum: Stratum
    multiplicity: int
    action: Fraction


def low_action_families(p1: int, p2: int, k2: int = 1) -> list[OrbitFamily]:
    """Branch families shorter than the principal orbit, plus the first dense family.

    The principal (dense) orbit has action k2; branch families over the
    i-th sphere have action k2*m/p_i and are kept while that stays below k2.
    """
    _subfamily_quadruple(p1, p2, k2)
    lo, hi = sorted((p1, p2))
    out = []
    for i, p_i in ((1, lo), (2, hi)):
        m = 1
        while m % p_i != 0:
            action = action_of_branch_orbit(k2, i, m, p_i)
            if action >= k2:
                break
            out.append(OrbitFamily(Stratum.branch(i), m, action))
            m += 1
    out.append(OrbitFamily(Stratum.DENSE, 1, Fraction(k2)))
    return out


def count_low_degree(p1: int, p2: int, k2: int = 1) -> int:
    """The contact invariant p1 + p2 - 1, checked against an orbit-family count."""
    expected = p1 + p2 - 1
    found = len(low_action_families(p1, p2, k2))
    if found != expected:
        raise ConsistencyError(
            f"orbit-family count {found} differs from p1+p2-1={expected} for ({p1},{p2},{k2},{k2})"
        )
    return expected


@dataclass(frozen=True)
class RegularGradings:
    max: int
    saddle: int
    min: int
    x: int
    y: int
    m: int


def regular_case_gradings(k: int, c: int, N: int) -> RegularGradings:
    """Gradings of the N-fold dense orbit for the regular structure (k, k, k-c, k-c).

    m is the least positive integer with k*m = -1 mod c, which makes
    x = (k*m + 1)/c integral; y = x - m.
    """
    check_positive(k, "k")
    check_positive(c, "c")
    check_positive(N, "N")
    if c >= k:
        raise DomainError(f"need c < k so that k - c >= 1, got k={k}, c={c}")
    if math.gcd(k, c) != 1:
        raise DomainError(f"k*m = -1 mod c has no solution when gcd(k,c) > 1 (k={k}, c={c})")
    m = next(m for m in range(1, c + 1) if (k * m + 1) % c == 0)
    x = (k * m + 1) // c
    y = x - m
    base = N * (2 * x + 2 * y)
    return RegularGradings(max=base + 2, saddle=base, min=base - 2, x=x, y=y, m=m)
