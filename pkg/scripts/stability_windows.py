"""Measure how far finite trinomials agree with their infinite limits.

For each (L, a) the script finds the largest n such that the round trinomial
matches 1/(q;q)_inf through q^n, and the same for T0 against its
parity-split limit.  The measured windows are printed next to the windows the
library's limit checks rely on, so a check that is too generous shows up as a
negative slack.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from qtrinomial.poly import series_inverse
from qtrinomial.qfuncs import poch_infinite, qpow
from qtrinomial.trinomials import (
    round_trinomial,
    round_trinomial_L_limit_order,
    t_zero,
    t_zero_L_limit_order,
    t_zero_L_limit_series,
)


@dataclass
class Config:
    L_max: int = 14
    order: int = 40


def agreement(poly, series) -> int:
    """Largest whole n with equal coefficients on every exponent in [0, n], half-integers included."""
    t = -1
    while t + 1 <= 2 * series.order and poly.coeff_x2(t + 1) == series.poly.coeff_x2(t + 1):
        t += 1
    return (t - 1) // 2 if t % 2 else t // 2


def run(cfg: Config) -> list[tuple]:
    inv_euler = series_inverse(poch_infinite(qpow(1), 1, cfg.order))
    limits = {s: t_zero_L_limit_series(s, 1, cfg.order) for s in (0, 1)}
    rows = []
    for L in range(1, cfg.L_max + 1):
        for a in range(0, L):
            r = agreement(round_trinomial(L, a, a), inv_euler)
            t = agreement(t_zero(L, a), limits[(L - a) % 2])
            rows.append((L, a, r, round_trinomial_L_limit_order(L, a), t, t_zero_L_limit_order(L, a)))
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description="empirical limit windows")
    p.add_argument("--L-max", type=int, default=Config.L_max)
    p.add_argument("--order", type=int, default=Config.order)
    a = p.parse_args()
    rows = run(Config(a.L_max, a.order))
    print(f"{'L':>3} {'a':>3} {'round':>6} {'used':>5} {'T0':>5} {'used':>5}")
    worst = 0
    for L, x, r, ru, t, tu in rows:
        print(f"{L:3d} {x:3d} {r:6d} {ru:5d} {t:5d} {tu:5d}")
        worst = min(worst, min(r, a.order) - min(ru, a.order), min(t, a.order) - min(tu, a.order))
    print("all windows safe" if worst >= 0 else f"window overshoot by {-worst}")


if __name__ == "__main__":
    main()
