"""Rule chain deciding contact (in)equivalence inside the (p1, p2, l, l) family."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .hirzebruch import LevelData, Parity, SubfamilyParams, level_decomposition, level_of
from .structures import ManifoldType, Quadruple


class Outcome(enum.Enum):
    EQUIVALENT = "Equivalent"
    INEQUIVALENT = "Inequivalent"
    UNDETERMINED = "Undetermined"


class Rule(enum.Enum):
    """Which step of the chain decided; the first matching step wins."""

    R1 = "R1:manifold-type"
    R2 = "R2:chern-class"
    R3 = "R3:weight-sum"
    R4 = "R4:same-level-same-parity"
    R5 = "R5:same-level-opposite-parity"
    R6 = "R6:no-rule"


class Policy(enum.Enum):
    # opposite parities at one gcd level: trust the exceptional-sphere argument
    STRICT_PARITY = "strict-parity"
    # or the broader gcd statement, which calls them equivalent
    GCD_LEVEL = "gcd-level"


@dataclass(frozen=True)
class EquivalenceVerdict:
    outcome: Outcome
    rule: Rule
    note: str = ""


def _describe(params: SubfamilyParams, level: LevelData) -> str:
    return f"(k,l)=({params.k},{params.l}) level g={level.g} {level.parity.value}"


def _chern(params: SubfamilyParams) -> int:
    return params.j + params.partner - 2 * params.l


def decide_equivalence(
    a: Quadruple, b: Quadruple, policy: Policy = Policy.STRICT_PARITY
) -> EquivalenceVerdict:
    pa, pb = SubfamilyParams.from_quadruple(a), SubfamilyParams.from_quadruple(b)
    # level_of also rejects inadmissible input
    la, lb = level_of(pa), level_of(pb)

    # both are admissible now, so type and |c1| come straight from the params
    if pa.bundle is not pb.bundle:
        return EquivalenceVerdict(Outcome.INEQUIVALENT, Rule.R1, "different S3-bundles over S2")
    ca, cb = _chern(pa), _chern(pb)
    if abs(ca) != abs(cb):
        return EquivalenceVerdict(Outcome.INEQUIVALENT, Rule.R2, f"|c1| {abs(ca)} vs {abs(cb)}")
    if pa.half_sum != pb.half_sum:
        sa, sb = 2 * pa.half_sum, 2 * pb.half_sum
        return EquivalenceVerdict(
            Outcome.INEQUIVALENT, Rule.R3, f"p1+p2 {sa} vs {sb}; low-degree counts {sa - 1} vs {sb - 1}"
        )
    same_kl = (pa.k, pa.l, pa.bundle) == (pb.k, pb.l, pb.bundle)
    if same_kl and la.key == lb.key:
        return EquivalenceVerdict(Outcome.EQUIVALENT, Rule.R4, _describe(pa, la))
    if same_kl and la.g == lb.g:
        tension = (
            f"same gcd level {la.g} but quotient surfaces of opposite parity; "
            "exactly one contains an exceptional sphere"
        )
        if policy is Policy.STRICT_PARITY:
            return EquivalenceVerdict(Outcome.INEQUIVALENT, Rule.R5, tension)
        return EquivalenceVerdict(Outcome.EQUIVALENT, Rule.R5, "tension: " + tension)
    return EquivalenceVerdict(Outcome.UNDETERMINED, Rule.R6, f"{_describe(pa, la)} vs {_describe(pb, lb)}")


def tori_conjugacy_lower_bound(
    k: int, l: int, i: int, parity: Parity, bundle: ManifoldType = ManifoldType.TRIVIAL
) -> int:
    """Size of the level set g^{-1}(i)_parity; an empty level gives 0."""
    return len(level_decomposition(k, l, bundle).get((i, parity), []))


def bouquet_size(
    k: int, l: int, i: int, parity: Parity, bundle: ManifoldType = ManifoldType.TRIVIAL
) -> int:
    """Number of Sasaki cones in the bouquet for this level (same count as above)."""
    return tori_conjugacy_lower_bound(k, l, i, parity, bundle)


def exceptional_sphere_test(level: LevelData) -> bool:
    """True when the quotient is an odd Hirzebruch surface, which carries a (-1)-sphere."""
    return level.n % 2 == 1
