"""Print the worked level-set tables, the phi counts and the bouquet sizes.

    python3 scripts/reproduce_tables.py --max-p 12
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from toric_contact import cli
from toric_contact.equivalence import bouquet_size
from toric_contact.hirzebruch import Parity, admissible_set
from toric_contact.numeric import euler_phi
from toric_contact.structures import ManifoldType


@dataclass(frozen=True)
class TablesConfig:
    examples: tuple[tuple[int, int, str], ...] = ((9, 8, "trivial"), (9, 9, "nontrivial"), (12, 8, "trivial"))
    max_p: int = 12


def run(cfg: TablesConfig) -> None:
    for k, l, bundle in cfg.examples:
        print(f"--- (k, l) = ({k}, {l}), {bundle}")
        cli.main(["enumerate", "--k", str(k), "--l", str(l), "--bundle", bundle])
    print("--- #J_A(p,p) against phi(p)")
    for p in range(2, cfg.max_p + 1):
        count = len(admissible_set(p, p, ManifoldType.TRIVIAL))
        print(f"p={p:3d}  #J_A={count:3d}  phi={euler_phi(p):3d}")
    print("--- bouquet sizes")
    for k, l in ((12, 8), (14, 10)):
        print(f"g^{{-1}}(2)_odd at ({k},{l}): {bouquet_size(k, l, 2, Parity.ODD)}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-p", type=int, default=TablesConfig.max_p)
    args = ap.parse_args()
    run(TablesConfig(max_p=args.max_p))


if __name__ == "__main__":
    main()
