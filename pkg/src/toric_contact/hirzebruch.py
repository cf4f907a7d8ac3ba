"""Quotient orbifold Hirzebruch surfaces of the (j, 2k-j(+1), l, l) subfamilies.

Divisors on S_n are written in a basis {X, L} where L is the fibre and X is
one of

* ``E``   the section with E.E = n,
* ``E0``  = E - (n/2) L, square zero,
* ``Em1`` = E - ((n+1)/2) L, square -1.

Coefficients may be half-integers, so ``E0`` is usable on odd surfaces too.
Cohomology classes alpha_X are handled through the same type by Poincare
duality, which is linear, so the basis conversions are the same.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, DomainError, UnsupportedShapeError
from .numeric import as_fraction, ceil_div, check_int, check_positive
from .structures import ManifoldType, Quadruple, is_admissible


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, n: int) -> "Parity":
        return cls.EVEN if n % 2 == 0 else cls.ODD

    @classmethod
    def parse(cls, text: str) -> "Parity":
        key = text.strip().lower()
        if key in ("e", "even"):
            return cls.EVEN
        if key in ("o", "odd"):
            return cls.ODD
        raise DomainError(f"unknown parity {text!r}; use even or odd")


class Basis(enum.Enum):
    E = "E"
    E0 = "E0"
    EM1 = "Em1"


@dataclass(frozen=True)
class SubfamilyParams:
    k: int
    l: int
    j: int
    bundle: ManifoldType = ManifoldType.TRIVIAL

    def __post_init__(self) -> None:
        check_positive(self.k, "k")
        check_positive(self.l, "l")
        check_int(self.j, "j")
        if not 1 <= self.j <= self.k:
            raise DomainError(f"need 1 <= j <= k, got j={self.j}, k={self.k}")

    @property
    def partner(self) -> int:
        """The second weight 2k-j (trivial) or 2k-j+1 (nontrivial)."""
        extra = 0 if self.bundle is ManifoldType.TRIVIAL else 1
        return 2 * self.k - self.j + extra

    @property
    def quadruple(self) -> Quadruple:
        return Quadruple(self.j, self.partner, self.l, self.l)

    @property
    def admissible(self) -> bool:
        return math.gcd(self.j, self.l) == 1 and math.gcd(self.partner, self.l) == 1

    @property
    def half_sum(self) -> Fraction:
        """(p1 + p2)/2, which is k or k + 1/2."""
        return Fraction(self.j + self.partner, 2)

    @classmethod
    def from_quadruple(cls, q: Quadruple) -> "SubfamilyParams":
        """Read (p1, p2, l, l) in either pair order, smaller of p1, p2 as j."""
        if q.p3 == q.p4:
            a, b, l = q.p1, q.p2, q.p3
        elif q.p1 == q.p2:
            a, b, l = q.p3, q.p4, q.p1
        else:
            raise UnsupportedShapeError(
                f"quadruple ({q}) has no pair of equal weights; only (p1,p2,l,l) is supported"
            )
        j, other = min(a, b), max(a, b)
        if (j + other) % 2 == 0:
            return cls((j + other) // 2, l, j, ManifoldType.TRIVIAL)
        return cls((j + other - 1) // 2, l, j, ManifoldType.NONTRIVIAL)


@dataclass(frozen=True)
class LevelData:
    g: int
    n: int
    m: int
    parity: Parity

    @property
    def key(self) -> tuple[int, Parity]:
        return (self.g, self.parity)


def _require_admissible(params: SubfamilyParams) -> None:
    if not params.admissible:
        raise DomainError(f"subfamily quadruple ({params.quadruple}) is not admissible")


def _twist(params: SubfamilyParams) -> int:
    # n*g equals this number: 2(k-j) or 2(k-j)+1
    base = 2 * (params.k - params.j)
    return base if params.bundle is ManifoldType.TRIVIAL else base + 1


def level_of(params: SubfamilyParams) -> LevelData:
    _require_admissible(params)
    twist = _twist(params)
    g = math.gcd(params.l, twist)
    n = twist // g
    return LevelData(g=g, n=n, m=params.l // g, parity=Parity.of(n))


def admissible_set(k: int, l: int, bundle: ManifoldType = ManifoldType.TRIVIAL) -> list[int]:
    check_positive(k, "k")
    check_positive(l, "l")
    return [j for j in range(1, k + 1) if SubfamilyParams(k, l, j, bundle).admissible]


def _level_order(key: tuple[int, Parity]) -> tuple[int, int]:
    i, parity = key
    return (-i, 0 if parity is Parity.EVEN else 1)


def level_decomposition(
    k: int, l: int, bundle: ManifoldType = ManifoldType.TRIVIAL
) -> dict[tuple[int, Parity], list[int]]:
    """Admissible j grouped by (g-level, parity of n); empty levels are left out.

    Keys run from the top level down, even before odd.
    """
    groups: dict[tuple[int, Parity], list[int]] = {}
    for j in admissible_set(k, l, bundle):
        groups.setdefault(level_of(SubfamilyParams(k, l, j, bundle)).key, []).append(j)
    return {key: groups[key] for key in sorted(groups, key=_level_order)}


def top_level_ceiling(k: int, l: int, bundle: ManifoldType, parity: Parity) -> int:
    """The ceiling formulas for the top level i = l exactly as usually quoted.

    These count every j in [1, k] whose twist has gcd l with the right
    parity, without asking for admissibility. See
    :func:`top_level_cardinality` for the count of admissible j.
    """
    if bundle is ManifoldType.TRIVIAL:
        if parity is Parity.EVEN:
            return ceil_div(k, l)
        return ceil_div(2 * k - l, 2 * l)
    if parity is Parity.EVEN:
        return 0
    return ceil_div(2 * k - l + 1, 2 * l)


def top_level_cardinality(k: int, l: int, bundle: ManifoldType, parity: Parity) -> int:
    """Closed form for the number of admissible j at level i = l.

    The j with g_j = l form one residue class r mod l, and every member has
    gcd(j, l) = gcd(r, l), so either all of them are admissible or none is.
    The ceiling counts the class; the gcd test decides which case applies.
    An odd level needs l even on the trivial bundle and l odd otherwise.
    """
    check_positive(k, "k")
    check_positive(l, "l")
    if k < l:
        raise DomainError(f"top_level_cardinality needs k >= l, got k={k}, l={l}")
    if bundle is ManifoldType.TRIVIAL:
        if parity is Parity.EVEN:
            residue = k
        elif l % 2 == 0:
            residue = k - l // 2
        else:
            return 0
    else:
        if parity is Parity.EVEN or l % 2 == 0:
            return 0
        residue = k - (l - 1) // 2
    if math.gcd(residue, l) != 1:
        return 0
    return top_level_ceiling(k, l, bundle, parity)


def brute_level_count(k: int, l: int, bundle: ManifoldType, i: int, parity: Parity) -> int:
    return len(level_decomposition(k, l, bundle).get((i, parity), []))


@dataclass(frozen=True)
class DivisorClass:
    """a*X + b*L on the surface S_n, with X named by ``basis``."""

    coeff_e: Fraction
    coeff_l: Fraction
    basis: Basis
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff_e", as_fraction(self.coeff_e))
        object.__setattr__(self, "coeff_l", as_fraction(self.coeff_l))
        check_int(self.n, "n")
        if self.n < 0:
            raise DomainError(f"surface index must be >= 0, got {self.n}")

    def _shift(self, basis: Basis) -> Fraction:
        # X = E - shift * L
        if basis is Basis.E:
            return Fraction(0)
        if basis is Basis.E0:
            return Fraction(self.n, 2)
        return Fraction(self.n + 1, 2)

    def to_basis(self, basis: Basis) -> "DivisorClass":
        a = self.coeff_e
        b = self.coeff_l - a * self._shift(self.basis) + a * self._shift(basis)
        return DivisorClass(a, b, basis, self.n)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.coeff_e, -self.coeff_l, self.basis, self.n)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _same_surface(self, other)
        o = other.to_basis(self.basis)
        return DivisorClass(self.coeff_e + o.coeff_e, self.coeff_l + o.coeff_l, self.basis, self.n)

    def scaled(self, factor: int | Fraction) -> "DivisorClass":
        f = as_fraction(factor)
        return DivisorClass(f * self.coeff_e, f * self.coeff_l, self.basis, self.n)

    def coefficients(self) -> tuple[Fraction, Fraction, Basis]:
        return (self.coeff_e, self.coeff_l, self.basis)

    def describe(self, prefix: str = "") -> str:
        names = {Basis.E: "E", Basis.E0: "E_0", Basis.EM1: "E_{-1}"}
        return f"{self.coeff_e}*{prefix}{names[self.basis]} + {self.coeff_l}*{prefix}L"


def basis_element(basis: Basis, n: int) -> DivisorClass:
    return DivisorClass(1, 0, basis, n)


def fibre_class(n: int) -> DivisorClass:
    return DivisorClass(0, 1, Basis.E, n)


def _same_surface(a: DivisorClass, b: DivisorClass) -> None:
    if a.n != b.n:
        raise DomainError(f"classes live on different surfaces S_{a.n} and S_{b.n}")


def intersection_number(a: DivisorClass, b: DivisorClass) -> Fraction:
    """Bilinear extension of E.E = n, E.L = 1, L.L = 0."""
    _same_surface(a, b)
    x = a.to_basis(Basis.E)
    y = b.to_basis(Basis.E)
    return x.coeff_e * y.coeff_e * a.n + x.coeff_e * y.coeff_l + x.coeff_l * y.coeff_e


def is_log_del_pezzo(n: int, m: int) -> bool:
    return 2 * m > n


def canonical_divisor(n: int, m: int) -> DivisorClass:
    """Orbifold canonical class of (S_n, Delta_m) in the {E, L} basis."""
    check_int(n, "n")
    check_positive(m, "m")
    return DivisorClass(Fraction(-2, m), Fraction(n - 2 * m, m), Basis.E, n)


def symplectic_class(params: SubfamilyParams) -> DivisorClass:
    """[omega_{k,l,i}] in the basis the level's parity calls for.

    The result is given on S_{n_j}; its coefficients depend only on
    (k, i, parity, bundle).
    """
    level = level_of(params)
    i, k = level.g, params.k
    if params.bundle is ManifoldType.NONTRIVIAL:
        return DivisorClass(i, k + Fraction(i + 1, 2), Basis.EM1, level.n)
    if level.parity is Parity.EVEN:
        return DivisorClass(i, k, Basis.E0, level.n)
    return DivisorClass(i, k + Fraction(i, 2), Basis.EM1, level.n)


def pullback_defect(params: SubfamilyParams) -> Fraction:
    """a*kappa - b*i for the symplectic class written as a*alpha_E0 + b*alpha_L.

    kappa is (p1 + p2)/2. Zero means the class pulls back to zero upstairs.
    """
    level = level_of(params)
    cls = symplectic_class(params).to_basis(Basis.E0)
    return cls.coeff_e * params.half_sum - cls.coeff_l * level.g


@dataclass(frozen=True)
class OrbifoldSurface:
    params: SubfamilyParams
    level: LevelData
    branch_coefficient: Fraction
    canonical_class: DivisorClass
    log_del_pezzo: bool
    symplectic_class: DivisorClass

    @property
    def n(self) -> int:
        return self.level.n

    @property
    def m(self) -> int:
        return self.level.m

    def label(self) -> str:
        if self.m == 1:
            return f"(S_{self.n}, empty)"
        return f"(S_{self.n}, Delta_{self.m})"


def quotient_orbifold(params: SubfamilyParams) -> OrbifoldSurface:
    level = level_of(params)
    ldp = is_log_del_pezzo(level.n, level.m)
    # positivity straight from (k, l, j); must agree with 2m > n
    if params.bundle is ManifoldType.TRIVIAL:
        positive = params.l > params.k - params.j
    else:
        positive = 2 * params.l > 2 * (params.k - params.j) + 1
    if positive != ldp:
        raise ConsistencyError(f"positivity tests disagree for {params}")
    return OrbifoldSurface(
        params=params,
        level=level,
        branch_coefficient=1 - Fraction(1, level.m),
        canonical_class=canonical_divisor(level.n, level.m),
        log_del_pezzo=ldp,
        symplectic_class=symplectic_class(params),
    )


def orbifold_chern_evaluation(surface: OrbifoldSurface, cycle: DivisorClass) -> Fraction:
    """<c1^orb, cycle>, i.e. the pairing of -K^orb with the cycle."""
    if cycle.n != surface.n:
        raise DomainError(f"cycle lives on S_{cycle.n}, surface is S_{surface.n}")
    return intersection_number(-surface.canonical_class, cycle)


def iter_subfamily(k_max: int, bundle: ManifoldType) -> Iterator[SubfamilyParams]:
    """Every admissible (k, l, j) with 1 <= l <= k <= k_max."""
    for k in range(1, k_max + 1):
        for l in range(1, k + 1):
            for j in admissible_set(k, l, bundle):
                yield SubfamilyParams(k, l, j, bundle)
