"""Generator counts below 2(p1+p2+1) set against the low-action family count.

    python3 scripts/spectrum_counts.py --max-sum 12 --max-l 6
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from toric_contact.homology import count_low_degree, enumerate_spectrum, invariant_degree_bound
from toric_contact.structures import Quadruple, is_admissible


@dataclass(frozen=True)
class CountsConfig:
    max_sum: int = 12
    max_l: int = 6


def run(cfg: CountsConfig) -> None:
    print(f"{'quadruple':>16} {'bound':>6} {'generators':>10} {'families':>8}")
    agree = rows = 0
    for s in range(2, cfg.max_sum + 1):
        for p1 in range(1, s // 2 + 1):
            p2 = s - p1
            for l in range(1, cfg.max_l + 1):
                if not is_admissible(Quadruple(p1, p2, l, l)):
                    continue
                bound = invariant_degree_bound(p1, p2)
                gens = len(enumerate_spectrum(p1, p2, l, bound))
                fams = count_low_degree(p1, p2, l)
                rows += 1
                agree += gens == fams
                quad = f"({p1},{p2},{l},{l})"
                print(f"{quad:>16} {bound:>6} {gens:>10} {fams:>8}")
    print(f"generator count equals p1+p2-1 in {agree} of {rows} rows")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-sum", type=int, default=CountsConfig.max_sum)
    ap.add_argument("--max-l", type=int, default=CountsConfig.max_l)
    args = ap.parse_args()
    run(CountsConfig(max_sum=args.max_sum, max_l=args.max_l))


if __name__ == "__main__":
    main()
