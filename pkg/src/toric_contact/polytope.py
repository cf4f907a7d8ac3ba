"""Labeled Hirzebruch trapezoids and their Karshon-graph skeletons."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import DomainError
from .hirzebruch import SubfamilyParams, level_of
from .numeric import as_fraction, check_int, check_positive, fraction_pair

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class LabeledTrapezoid:
    vertices: tuple[Point, Point, Point, Point]
    label: int
    slope: int
    i: int
    k: Fraction

    @property
    def n(self) -> int:
        return -self.slope

    def area(self) -> Fraction:
        # shoelace; vertices are counterclockwise
        pts = self.vertices
        twice = sum(
            pts[t][0] * pts[(t + 1) % 4][1] - pts[(t + 1) % 4][0] * pts[t][1] for t in range(4)
        )
        return twice / 2

    def to_dict(self) -> dict:
        return {
            "vertices": [[fraction_pair(x), fraction_pair(y)] for x, y in self.vertices],
            "m": self.label,
            "slope": self.slope,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def build_trapezoid(k: int | Fraction, i: int, n: int, m: int) -> LabeledTrapezoid:
    """Corners (0,0), (i,0), (i, k - n*i/2), (0, k + n*i/2), label m on the vertical sides.

    k is normally a positive integer; the half-integer k + 1/2 of the
    nontrivial bundle is accepted as well.
    """
    k = as_fraction(k)
    check_positive(i, "i")
    check_positive(m, "m")
    check_int(n, "n")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    half_twist = Fraction(n * i, 2)
    if k - half_twist <= 0:
        raise DomainError(f"degenerate trapezoid: k - n*i/2 = {k - half_twist} <= 0")
    zero = Fraction(0)
    verts = (
        (zero, zero),
        (Fraction(i), zero),
        (Fraction(i), k - half_twist),
        (zero, k + half_twist),
    )
    return LabeledTrapezoid(verts, m, -n, i, k)


def trapezoid_for(params: SubfamilyParams) -> LabeledTrapezoid:
    """Trapezoid of the quotient of a subfamily structure.

    The height is (p1 + p2)/2, which is k on S2 x S3 and k + 1/2 on the
    other bundle, matching the symplectic class in the {E0, L} basis.
    """
    level = level_of(params)
    return build_trapezoid(params.half_sum, level.g, level.n, level.m)


def strip_labels(t: LabeledTrapezoid) -> LabeledTrapezoid:
    return replace(t, label=1)


@dataclass(frozen=True)
class KarshonGraph:
    """Reduced graph for the circle whose moment map is the horizontal coordinate.

    ``fixed_vertices`` are the corners' moment-map values tagged with the
    sphere (E at the left side, F at the right) they lie on; ``edges`` are
    the two invariant spheres with their ramification labels.
    """

    fixed_vertices: tuple[tuple[Fraction, str], ...]
    edges: tuple[tuple[str, Fraction, int], ...]
    total_area: Fraction

    def labels(self) -> tuple[int, ...]:
        return tuple(e[2] for e in self.edges)


def karshon_graph_of(t: LabeledTrapezoid) -> KarshonGraph:
    side = {Fraction(0): "E", Fraction(t.i): "F"}
    verts = tuple(sorted((x, side[x]) for x, _ in t.vertices))
    edges = (("E", Fraction(0), t.label), ("F", Fraction(t.i), t.label))
    return KarshonGraph(verts, edges, t.area())


def trapezoid_svg(t: LabeledTrapezoid, scale: int = 20) -> str:
    """A small standalone SVG drawing; coordinates stay exact since denominators divide 2."""
    pad = 2 * scale
    top = max(y for _, y in t.vertices)
    width = t.i * scale + 2 * pad
    height = int(top * scale) + 2 * pad

    def px(p: Point) -> str:
        x = p[0] * scale + pad
        y = (top - p[1]) * scale + pad
        return f"{_fmt(x)},{_fmt(y)}"

    pts = " ".join(px(p) for p in t.vertices)
    left_mid = (Fraction(0), t.vertices[3][1] / 2)
    right_mid = (Fraction(t.i), t.vertices[2][1] / 2)
    lx, ly = px(left_mid).split(",")
    rx, ry = px(right_mid).split(",")
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">'
        f'<polygon points="{pts}" fill="none" stroke="black"/>'
        f'<text x="{lx}" y="{ly}" text-anchor="end">{t.label}</text>'
        f'<text x="{rx}" y="{ry}">{t.label}</text>'
        "</svg>"
    )


def _fmt(x: Fraction) -> str:
    # exact decimal for nonnegative values with denominator 1 or 2
    if x.denominator == 1:
        return str(x.numerator)
    if x.denominator == 2 and x > 0:
        return f"{x.numerator // 2}.5"
    raise DomainError(f"unexpected coordinate {x}")
