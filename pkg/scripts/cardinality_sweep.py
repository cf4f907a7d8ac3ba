"""Compare the bare ceiling count for the top level with brute force.

The ceiling is right whenever its residue class is admissible; this lists
the cases where it is not and the closed form has to return zero.

    python3 scripts/cardinality_sweep.py --k-max 60 --show 10
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from toric_contact.hirzebruch import (
    Parity,
    top_level_ceiling,
    level_decomposition,
    top_level_cardinality,
)
from toric_contact.structures import ManifoldType


@dataclass(frozen=True)
class SweepConfig:
    k_max: int = 60
    show: int = 10


def top_level_brute(k: int, l: int, bundle: ManifoldType, parity: Parity) -> int:
    return len(level_decomposition(k, l, bundle).get((l, parity), []))


def run(cfg: SweepConfig) -> None:
    total = ceiling_off = closed_off = 0
    examples = []
    for k in range(1, cfg.k_max + 1):
        for l in range(1, k + 1):
            for bundle in ManifoldType:
                for parity in Parity:
                    total += 1
                    brute = top_level_brute(k, l, bundle, parity)
                    if top_level_cardinality(k, l, bundle, parity) != brute:
                        closed_off += 1
                    raw = top_level_ceiling(k, l, bundle, parity)
                    if raw != brute:
                        ceiling_off += 1
                        examples.append((k, l, bundle.label, parity.value, raw, brute))
    print(f"cases: {total}")
    print(f"bare ceiling disagrees with brute force: {ceiling_off}")
    print(f"closed form disagrees with brute force: {closed_off}")
    for k, l, bundle, parity, raw, brute in examples[: cfg.show]:
        print(f"  k={k} l={l} {bundle} {parity}: ceiling {raw}, actual {brute}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-max", type=int, default=SweepConfig.k_max)
    ap.add_argument("--show", type=int, default=SweepConfig.show)
    args = ap.parse_args()
    run(SweepConfig(k_max=args.k_max, show=args.show))


if __name__ == "__main__":
    main()
