"""Acceptance criteria, one test per criterion.

Run standalone (``python tests/test_acceptance.py``) to get one PASS/FAIL line
per criterion; under pytest the same lines are printed in the terminal summary.
"""

from __future__ import annotations

import sys
import time
from itertools import product
from math import comb

import pytest

from qtrinomial import identities as I
from qtrinomial.bailey import iterate_T, seed_pair, transform_S_step
from qtrinomial.catalog import verify_instance
from qtrinomial.partitions import count_capparelli_gap_side, count_capparelli_product_side
from qtrinomial.poly import eval_at_one
from qtrinomial.qfuncs import qbinom
from qtrinomial.recurrence import (
    check_boundaries,
    check_F_recurrence,
    check_G_recurrence,
    check_sum_recurrence,
    reconstruct_S,
)
from qtrinomial.trinomials import (
    check_round_trinomial_L_limit,
    check_S_limits,
    check_T0_L_limit,
    check_T_L_stabilization,
    check_T_M_stabilization,
    refined_S,
    refined_T,
)

RESULTS: dict[int, tuple[bool, str, float]] = {}


def _all_pass(identity, grid):
    failures = [b for b in grid if verify_instance(identity, b).status != "pass"]
    return not failures, failures[:3]


def _grid(**ranges):
    names = list(ranges)
    for combo in product(*(ranges[n] for n in names)):
        yield dict(zip(names, combo))


# --- criteria ---------------------------------------------------------------

def criterion_1():
    ok, bad = _all_pass("seed", _grid(L=range(25), M=range(13)))
    return ok, f"seed identity exact on 0<=L<=24, 0<=M<=12 {bad or ''}"


def criterion_2():
    return check_boundaries(20, 10), "boundary rows L<=20 and columns M<=10 on both sides"


def criterion_3():
    g = all(check_G_recurrence(L, M, k) for L in range(11) for M in range(6) for k in range(6))
    f = all(
        check_F_recurrence(L, M, k, j) for L in range(9) for M in range(5) for k in range(5) for j in range(-4, 5)
    )
    s = all(check_sum_recurrence(side, L, M) for side in ("lhs", "rhs") for L in range(13) for M in range(7))
    return g and f and s, f"G={g} F={f} summed={s}"


def criterion_4():
    S = reconstruct_S(9, 3)
    ok = all(S[k] == I.seed_lhs(*k) and S[k] == I.seed_rhs(*k) for k in S)
    return ok and len(S) == 40, f"reconstructed {len(S)} values on L<=9, M<=3"


def criterion_5():
    direct, bad = _all_pass("t_hierarchy", _grid(nu=(1, 2, 3), L=range(9), M=range(9)))
    seed = seed_pair(6)
    dual = all(
        iterate_T(seed, nu).F(L, M) == I.t_hierarchy_lhs(nu, L, M)
        for nu in (1, 2)
        for L in range(5)
        for M in range(5)
    )
    return direct and dual, f"direct={direct} {bad or ''} transform-derived={dual}"


def criterion_6():
    a, bad_a = _all_pass("nu0_s", _grid(L=range(11), M=range(11)))
    b, bad_b = _all_pass("s_hierarchy", _grid(nu=(1, 2), L=range(7), M=range(7)))
    return a and b, f"nu0_s={a} s_hierarchy={b} {bad_a + bad_b or ''}"


def criterion_7():
    parts = {
        "thm39_cap2": _all_pass("thm39_cap2", _grid(L=range(17))),
        "t_limit_L_of_seed": _all_pass("t_limit_L_of_seed", _grid(M=range(11), sigma=(0, 1))),
        "limit_andrews_k": _all_pass("limit_andrews_k", _grid(L=range(13))),
        "s_hierarchy_lim_M": _all_pass("s_hierarchy_lim_M", _grid(nu=(1, 2), L=range(7))),
        "s_hierarchy_lim_L": _all_pass("s_hierarchy_lim_L", _grid(nu=(1, 2), M=range(7))),
        "t_hierarchy_limit_M": _all_pass("t_hierarchy_limit_M", _grid(nu=(1, 2), L=range(11))),
    }
    ok = all(v[0] for v in parts.values())
    return ok, " ".join(f"{k}={v[0]}" for k, v in parts.items())


def criterion_8():
    parts = {
        "end_of_t_hierarchy": _all_pass("end_of_t_hierarchy", _grid(nu=(1, 2, 3), order=(100,))),
        "kr1": _all_pass("kr1", _grid(order=(200,))),
        "t_hierarchy_limit_L": _all_pass("t_hierarchy_limit_L", _grid(nu=(1, 2), M=range(7), order=(150,))),
        "fin_analog_67": _all_pass("fin_analog_67", _grid(M=range(9), order=(150,))),
        "limit_andrews_dk": _all_pass("limit_andrews_dk", _grid(M=range(11), order=(150,))),
        "end_of_s_hierarchy": _all_pass("end_of_s_hierarchy", _grid(nu=(1, 2), order=(100,))),
    }
    ok = all(v[0] for v in parts.values())
    return ok, " ".join(f"{k}={v[0]}" for k, v in parts.items())


def criterion_9():
    intro = [{"j": j, "L": L} for L in range(13) for j in range(L + 1)]
    parts = {
        "intro_identity": _all_pass("intro_identity", intro),
        "warmup_kronecker": _all_pass("warmup_kronecker", _grid(L=range(11))),
        "warmup_first_iteration": _all_pass("warmup_first_iteration", _grid(L=range(13))),
        "warmup_second_iteration": _all_pass("warmup_second_iteration", _grid(L=range(13))),
        "pentagonal": _all_pass("pentagonal", _grid(order=(500,))),
        "rogers_ramanujan_1": _all_pass("rogers_ramanujan_1", _grid(order=(200,))),
        "andrews_gordon": _all_pass("andrews_gordon", _grid(nu=(1, 2, 3), order=(100,))),
        "finite_jtp": _all_pass("finite_jtp", _grid(M=range(16), s=range(-3, 4), sign=(1, -1))),
        "fin_jtp_156": _all_pass("fin_jtp_156", _grid(M=range(16))),
    }
    ok = all(v[0] for v in parts.values())
    return ok, " ".join(f"{k}={v[0]}" for k, v in parts.items())


def criterion_10():
    plus, _ = _all_pass("outlook_seed_plus", _grid(L=range(17), M=range(9)))
    minus, _ = _all_pass("outlook_seed_minus", _grid(L=range(17), M=range(9)))
    return plus and minus, f"T_(+1) variant={plus} T_(-1) variant={minus}"


def criterion_11():
    lhs = I.kr1_lhs(40).coefficients()
    rhs = I.kr1_rhs(40).coefficients()
    ok = all(
        count_capparelli_gap_side(n) == count_capparelli_product_side(n) == lhs[n] == rhs[n] for n in range(41)
    )
    return ok, "gap side = distinct-parts side = both kr1 sides, n<=40"


def criterion_12():
    binom = True
    for m, n in product(range(13), repeat=2):
        p = qbinom(m + n, m)
        c = [p.coeff(e) for e in range(m * n + 1)]
        binom &= c == c[::-1] and p.degree() == m * n and eval_at_one(p) == comb(m + n, m) and min(c) >= 0
    support = True
    for L, M, a, b in product(range(7), range(7), range(-8, 9), range(-8, 9)):
        if abs(a) > L or abs(b) > M:
            support &= not refined_T(L, M, a, b)
        if a > L + M:
            support &= not refined_S(L, M, a, b)
    limits = {
        "T_M": all(check_T_M_stabilization(L, a, b, 1, L + 4) for L in range(7) for a in range(-L, L + 1) for b in range(-3, 4)),
        "T_L": all(
            check_T_L_stabilization(M, a, b, 1, s, abs(a) + 2 * M + 2 + ((abs(a) + 2 * M + 2 - a - s) % 2))
            for M in range(4) for a in range(-2, 3) for b in range(-M, M + 1) for s in (0, 1)
        ),
        "T0_L": all(check_T0_L_limit(L, a) for L in range(13) for a in range(-L, L + 1)),
        "S_M": all(
            check_S_limits(L, L + abs(a) + abs(b) + 2, a, b, 1, "M_limit")
            for L in range(6) for a in range(-2, 3) for b in range(-2, 3)
        ),
        "S_L": all(
            check_S_limits(abs(a) + 2 * M + 2, M, a, b, 1, "L_limit")
            for M in range(4) for a in range(0, 3) for b in range(-M, M + 1) if abs(a - b) <= M
        ),
        "RoundTri_L": all(check_round_trinomial_L_limit(L, a) for L in range(1, 17) for a in range(-L + 1, L)),
    }
    ok = binom and support and all(limits.values())
    return ok, f"binomial={binom} support={support} " + " ".join(f"{k}={v}" for k, v in limits.items())


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 13)}


def run_criterion(i: int) -> bool:
    t0 = time.perf_counter()
    ok, detail = CRITERIA[i]()
    RESULTS[i] = (bool(ok), detail, time.perf_counter() - t0)
    return bool(ok)


def format_result(i: int) -> str:
    ok, detail, secs = RESULTS[i]
    return f"criterion {i:2d}: {'PASS' if ok else 'FAIL'}  ({secs:.1f}s)  {detail}".rstrip()


@pytest.mark.parametrize("i", sorted(CRITERIA))
def test_criterion(i):
    assert run_criterion(i), format_result(i)


if __name__ == "__main__":
    failed = 0
    for i in sorted(CRITERIA):
        failed += not run_criterion(i)
        print(format_result(i), flush=True)
    sys.exit(1 if failed else 0)
