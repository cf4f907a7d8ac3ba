"""Command line entry point, ``tck``.

Exit codes: 0 success, 2 invalid parameters, 3 internal consistency failure.
Gradings are reported without the global n-2 shift.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction
from typing import Any

from .equivalence import Policy, bouquet_size, decide_equivalence, exceptional_sphere_test
from .errors import ConsistencyError, DomainError
from .hirzebruch import (
    Basis,
    DivisorClass,
    OrbifoldSurface,
    Parity,
    SubfamilyParams,
    admissible_set,
    level_decomposition,
    quotient_orbifold,
)
from .homology import (
    count_low_degree,
    enumerate_spectrum,
    invariant_degree_bound,
    regular_case_gradings,
)
from .numeric import check_positive, euler_phi, fraction_pair
from .polytope import build_trapezoid, karshon_graph_of, trapezoid_for, trapezoid_svg
from .structures import (
    ManifoldType,
    Quadruple,
    YpqParams,
    first_chern_coefficient,
    is_admissible,
    manifold_type,
    quadruple_to_ypq,
    ypq_to_quadruple,
)

SCHEMA_VERSION = 1

Report = tuple[dict[str, Any], list[str]]


def _frac(x: Fraction) -> list[int]:
    return fraction_pair(x)


def _class_json(c: DivisorClass) -> dict[str, Any]:
    return {"basis": c.basis.value, "coeffE": _frac(c.coeff_e), "coeffL": _frac(c.coeff_l), "n": c.n}


def _set_text(values: Sequence[int]) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def _level_name(i: int, parity: Parity) -> str:
    return f"g^{{-1}}({i})_{parity.value}"


def _surface_json(s: OrbifoldSurface) -> dict[str, Any]:
    return {
        "j": s.params.j,
        "quadruple": list(s.params.quadruple.as_tuple()),
        "g": s.level.g,
        "n": s.n,
        "m": s.m,
        "parity": s.level.parity.value,
        "branchCoefficient": _frac(s.branch_coefficient),
        "canonicalClass": _class_json(s.canonical_class),
        "canonicalClassE0": _class_json(s.canonical_class.to_basis(Basis.E0)),
        "logDelPezzo": s.log_del_pezzo,
        "exceptionalSphere": exceptional_sphere_test(s.level),
        "symplecticClass": _class_json(s.symplectic_class),
    }


def _surface_text(s: OrbifoldSurface) -> str:
    ldp = "log del Pezzo" if s.log_del_pezzo else "not log del Pezzo"
    return (
        f"j={s.params.j}: {s.label()}, g={s.level.g}, {ldp}, "
        f"[omega] = {s.symplectic_class.describe('alpha_')}"
    )


def _params_from(args: argparse.Namespace) -> SubfamilyParams:
    if args.q is not None:
        return SubfamilyParams.from_quadruple(Quadruple.parse(args.q))
    if None in (args.k, args.l, args.j):
        raise DomainError("give either --q p1,p2,l,l or all of --k, --l, --j")
    return SubfamilyParams(args.k, args.l, args.j, ManifoldType.parse(args.bundle))


def cmd_admissible(args: argparse.Namespace) -> Report:
    q = Quadruple.parse(args.q)
    ok = is_admissible(q)
    return {"quadruple": list(q.as_tuple()), "admissible": ok}, [f"({q}) admissible: {ok}"]


def cmd_invariants(args: argparse.Namespace) -> Report:
    q = Quadruple.parse(args.q)
    c1 = first_chern_coefficient(q)
    kind = manifold_type(q)
    y = quadruple_to_ypq(q)
    payload = {
        "quadruple": list(q.as_tuple()),
        "canonical": list(q.canonical().as_tuple()),
        "c1": c1,
        "manifoldType": kind.label,
        "ypq": None if y is None else [y.p, y.q],
    }
    lines = [
        f"quadruple ({q}), canonical ({q.canonical()})",
        f"c1 = {c1} gamma",
        f"manifold: {kind.label} ({kind.value})",
    ]
    if y is not None:
        lines.append(f"Y^{{{y.p},{y.q}}}")
    return payload, lines


def cmd_orbifold(args: argparse.Namespace) -> Report:
    s = quotient_orbifold(_params_from(args))
    payload = {"k": s.params.k, "l": s.params.l, "bundle": s.params.bundle.label, **_surface_json(s)}
    return payload, [_surface_text(s)]


def cmd_enumerate(args: argparse.Namespace) -> Report:
    bundle = ManifoldType.parse(args.bundle)
    js = admissible_set(args.k, args.l, bundle)
    levels = level_decomposition(args.k, args.l, bundle)
    lines = [f"J_A({args.k},{args.l}) = {_set_text(js)}  (#{len(js)})"]
    level_json = []
    for (i, parity), members in levels.items():
        surfaces = [quotient_orbifold(SubfamilyParams(args.k, args.l, j, bundle)) for j in members]
        level_json.append(
            {
                "i": i,
                "parity": parity.value,
                "js": members,
                "surfaces": [_surface_json(s) for s in surfaces],
            }
        )
        lines.append(f"{_level_name(i, parity)} = {_set_text(members)}, m_{i} = {surfaces[0].m}")
        lines.extend("  " + _surface_text(s) for s in surfaces)
    payload = {"k": args.k, "l": args.l, "bundle": bundle.label, "admissible": js, "levels": level_json}
    return payload, lines


def _spectrum_report(p1: int, p2: int, k2: int, bound: int) -> Report:
    spec = enumerate_spectrum(p1, p2, k2, bound)
    gens = [
        {
            "grading": g.grading,
            "stratum": g.stratum.value,
            "multiplicity": g.multiplicity,
            "type": g.critical_type.value,
            "rsIndex": g.rs_index,
            "action": _frac(g.action),
        }
        for g in spec.generators
    ]
    counts = {str(d): c for d, c in spec.counts_by_degree.items()}
    lines = [f"spectrum of ({p1},{p2},{k2},{k2}) below degree {bound}: {len(spec)} generators"]
    lines += [f"  degree {d}: {c}" for d, c in spec.counts_by_degree.items()]
    return {"degreeBound": bound, "generators": gens, "countsByDegree": counts}, lines


def cmd_spectrum(args: argparse.Namespace) -> Report:
    q = Quadruple.parse(args.q)
    params = SubfamilyParams.from_quadruple(q)
    p1, p2 = params.j, params.partner
    bound = invariant_degree_bound(p1, p2) if args.bound is None else args.bound
    payload, lines = _spectrum_report(p1, p2, params.l, bound)
    inv = count_low_degree(p1, p2, params.l)
    payload["invariant"] = inv
    lines.append(f"invariant p1+p2-1 = {inv}")
    return payload, lines


def cmd_equiv(args: argparse.Namespace) -> Report:
    a, b = Quadruple.parse(args.a), Quadruple.parse(args.b)
    v = decide_equivalence(a, b, Policy(args.policy))
    payload = {
        "a": list(a.as_tuple()),
        "b": list(b.as_tuple()),
        "policy": args.policy,
        "outcome": v.outcome.value,
        "rule": v.rule.value,
        "note": v.note,
    }
    return payload, [f"{v.outcome.value}({v.rule.value})", f"note: {v.note}"]


def cmd_ypq(args: argparse.Namespace) -> Report:
    y = YpqParams(args.p, args.q)
    quad = ypq_to_quadruple(y)
    s = quotient_orbifold(SubfamilyParams.from_quadruple(quad))
    bouquet = bouquet_size(y.p, y.p, s.level.g, s.level.parity)
    payload: dict[str, Any] = {
        "p": y.p,
        "q": y.q,
        "quadruple": list(quad.as_tuple()),
        "surface": _surface_json(s),
        "bouquet": bouquet,
        "eulerPhi": euler_phi(y.p),
    }
    lines = [
        f"Y^{{{y.p},{y.q}}} = D_({quad})",
        _surface_text(s),
        f"{_level_name(s.level.g, s.level.parity)} has {bouquet} members, phi({y.p}) = {euler_phi(y.p)}",
    ]
    if args.spectrum:
        spec_payload, spec_lines = _spectrum_report(quad.p1, quad.p2, y.p, invariant_degree_bound(quad.p1, quad.p2))
        inv = count_low_degree(quad.p1, quad.p2, y.p)
        payload["spectrum"] = spec_payload
        payload["invariant"] = inv
        lines += spec_lines + [f"invariant 2p-1 = {inv}"]
    return payload, lines


def cmd_regular(args: argparse.Namespace) -> Report:
    r = regular_case_gradings(args.k, args.c, args.N)
    payload = {"k": args.k, "c": args.c, "N": args.N, "m": r.m, "x": r.x, "y": r.y,
               "max": r.max, "saddle": r.saddle, "min": r.min}
    return payload, [f"m={r.m}, x={r.x}, y={r.y}: gradings max {r.max}, saddle {r.saddle}, min {r.min}"]


def cmd_polytope(args: argparse.Namespace) -> Report:
    if args.q is not None or args.j is not None:
        t = trapezoid_for(_params_from(args))
    else:
        if None in (args.k, args.i, args.n):
            raise DomainError("give --q, or --k --l --j, or --k --i --n [--m]")
        t = build_trapezoid(args.k, args.i, args.n, args.m)
    g = karshon_graph_of(t)
    payload = {
        **t.to_dict(),
        "area": _frac(t.area()),
        "karshon": {
            "fixedVertices": [[_frac(x), side] for x, side in g.fixed_vertices],
            "edges": [[name, _frac(x), lab] for name, x, lab in g.edges],
        },
    }
    verts = ", ".join(f"({x},{y})" for x, y in t.vertices)
    lines = [f"vertices {verts}", f"label m = {t.label}, slope {t.slope}, area {t.area()}"]
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(trapezoid_svg(t))
        lines.append(f"svg written to {args.svg}")
    return payload, lines


def cmd_phi_table(args: argparse.Namespace) -> Report:
    check_positive(args.max, "--max")
    rows = [[n, euler_phi(n)] for n in range(args.min, args.max + 1)]
    values = ",".join(str(v) for _, v in rows)
    return {"min": args.min, "max": args.max, "phi": rows}, [f"phi({args.min}..{args.max}) = {values}"]


COMMANDS: dict[str, Callable[[argparse.Namespace], Report]] = {
    "admissible": cmd_admissible,
    "invariants": cmd_invariants,
    "orbifold": cmd_orbifold,
    "enumerate": cmd_enumerate,
    "spectrum": cmd_spectrum,
    "equiv": cmd_equiv,
    "ypq": cmd_ypq,
    "regular": cmd_regular,
    "polytope": cmd_polytope,
    "phi-table": cmd_phi_table,
}


def _subfamily_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", help="quadruple p1,p2,l,l")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--bundle", default="trivial", help="trivial or nontrivial")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tck", description="Toric contact structure invariants.")
    parser.add_argument("--format", dest="format_top", choices=("text", "json"), default="text")
    # --format is also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=None)
    sub = parser.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name: str) -> argparse.ArgumentParser:
        return _add(name, parents=[common])

    sub.add_parser = add_parser  # type: ignore[method-assign]

    for name in ("admissible", "invariants"):
        sub.add_parser(name).add_argument("--q", required=True, help="quadruple p1,p2,p3,p4")

    _subfamily_args(sub.add_parser("orbifold"))

    p = sub.add_parser("enumerate")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--bundle", default="trivial")

    p = sub.add_parser("spectrum")
    p.add_argument("--q", required=True, help="quadruple p1,p2,l,l")
    p.add_argument("--bound", type=int, help="strict degree bound, default 2(p1+p2+1)")

    p = sub.add_parser("equiv")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--policy", choices=[x.value for x in Policy], default=Policy.STRICT_PARITY.value)

    p = sub.add_parser("ypq")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--spectrum", action="store_true")

    p = sub.add_parser("regular")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--N", type=int, default=1)

    p = sub.add_parser("polytope")
    _subfamily_args(p)
    p.add_argument("--i", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--svg", help="also write an SVG drawing to this path")

    p = sub.add_parser("phi-table")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--min", type=int, default=2)
    return parser


def render(payload: dict[str, Any], lines: list[str], command: str, fmt: str) -> str:
    if fmt == "json":
        doc = {"schemaVersion": SCHEMA_VERSION, "command": command, **payload}
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, lines = COMMANDS[args.command](args)
    except ConsistencyError as exc:
        print(f"tck: internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"tck: invalid parameters: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(payload, lines, args.command, args.format or args.format_top))
    return 0


if __name__ == "__main__":
    sys.exit(main())
