"""Time both sides of the seed identity over a rectangular (L, M) grid.

    python scripts/seed_grid_timing.py --L-max 24 --M-max 12 --out seed_timing.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from qtrinomial.identities import seed_lhs, seed_rhs


@dataclass
class Config:
    L_max: int = 24
    M_max: int = 12
    out: str | None = None


def run(cfg: Config) -> dict:
    rows, failures = [], []
    start = time.perf_counter()
    for L in range(cfg.L_max + 1):
        t0 = time.perf_counter()
        for M in range(cfg.M_max + 1):
            if seed_lhs(L, M) != seed_rhs(L, M):
                failures.append((L, M))
        rows.append({"L": L, "seconds": round(time.perf_counter() - t0, 4)})
    return {
        "config": asdict(cfg),
        "instances": (cfg.L_max + 1) * (cfg.M_max + 1),
        "failures": failures,
        "per_L": rows,
        "total_seconds": round(time.perf_counter() - start, 3),
    }


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--L-max", type=int, default=Config.L_max)
    p.add_argument("--M-max", type=int, default=Config.M_max)
    p.add_argument("--out", default=None)
    a = p.parse_args()
    result = run(Config(a.L_max, a.M_max, a.out))
    for row in result["per_L"]:
        print(f"L={row['L']:3d}  {row['seconds']:8.3f} s")
    print(f"{result['instances']} instances, {len(result['failures'])} failures, {result['total_seconds']} s")
    if a.out:
        with open(a.out, "w") as fh:
            json.dump(result, fh, indent=2)


if __name__ == "__main__":
    main()
