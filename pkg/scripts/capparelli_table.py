"""Tabulate the Capparelli counts next to the kr1 series coefficients.

    python scripts/capparelli_table.py --n-max 40
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from qtrinomial.catalog import evaluate
from qtrinomial.partitions import count_capparelli_gap_side, count_capparelli_product_side, kr1_sum_coefficient


@dataclass
class Config:
    n_max: int = 40


def run(cfg: Config) -> list[dict]:
    lhs, rhs = evaluate("kr1", {"order": cfg.n_max})
    return [
        {
            "n": n,
            "gap": count_capparelli_gap_side(n),
            "product": count_capparelli_product_side(n),
            "lattice_sum": kr1_sum_coefficient(n),
            "kr1_lhs": lhs.coeff(n),
            "kr1_rhs": rhs.coeff(n),
        }
        for n in range(cfg.n_max + 1)
    ]


def main() -> None:
    p = argparse.ArgumentParser(description="Capparelli counts vs series coefficients")
    p.add_argument("--n-max", type=int, default=Config.n_max)
    rows = run(Config(p.parse_args().n_max))
    w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
    w.writeheader()
    w.writerows(rows)
    agree = all(len({r[k] for k in r if k != "n"}) == 1 for r in rows)
    print(f"# all columns agree: {agree}", file=sys.stderr)


if __name__ == "__main__":
    main()
