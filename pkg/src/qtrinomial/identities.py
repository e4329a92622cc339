"""Left- and right-hand sides of every identity the catalog verifies.

Each ``*_lhs`` / ``*_rhs`` pair is computed along independent routes: the two
sides never share an intermediate value beyond the Gaussian-binomial cache.
Polynomial sides return :class:`LaurentPoly`; series sides take a truncation
``order`` (whole powers of q) and return :class:`TruncatedSeries`.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator

from .poly import (
    ONE,
    ZERO,
    LaurentPoly,
    TruncatedSeries,
    monomial_x2,
    poly_sum,
    series_inverse,
    shift_x2,
    truncate,
)
from .qfuncs import (
    MonomialArg,
    divide_by_pochhammers,
    finite_jtp_lhs,
    finite_jtp_rhs,
    jtp_theta,
    poch_finite,
    poch_finite_multi,
    poch_infinite,
    poch_infinite_multi,
    poch_ratio,
    qbinom,
    qpow,
)
from .trinomials import (
    refined_S,
    refined_T,
    refined_T_pm,
    round_trinomial,
    support_sum,
    t_zero,
)

q1, q2, q3, q6 = qpow(1), qpow(2), qpow(3), qpow(6)


def _q(x2: int) -> LaurentPoly:
    return monomial_x2(x2, 1)


def symmetric_sum(term, bound: int, guard: int = 3) -> LaurentPoly:
    """``sum_{j in Z} term(j)``, using ``|j| <= bound`` plus a vanishing guard on both sides."""
    right = support_sum(term, 0, bound, guard)
    left = support_sum(lambda j: term(-j), 1, bound, guard)
    return right + left


def n_vectors(nu: int, max_first: int, max_sum: int | None = None, max_sq: int | None = None) -> Iterator[tuple]:
    """Yield ``(n, N)`` for all ``n_1..n_nu >= 0`` with ``N_k = n_k + ... + n_nu``.

    Restricted to ``N_1 <= max_first``, ``sum N_k <= max_sum`` and
    ``sum N_k^2 <= max_sq`` (``None`` means unbounded).  Enumerates the
    nonincreasing sequence ``N_1 >= ... >= N_nu`` with pruning at every level.
    """
    big = 10**18
    ms = big if max_sum is None else max_sum
    mq = big if max_sq is None else max_sq

    def rec(prefix, cap, s, sq):
        if len(prefix) == nu:
            N = tuple(prefix)
            n = tuple(N[k] - (N[k + 1] if k + 1 < nu else 0) for k in range(nu))
            yield n, N
            return
        for v in range(cap + 1):
            if s + v > ms or sq + v * v > mq:
                break
            prefix.append(v)
            yield from rec(prefix, v, s + v, sq + v * v)
            prefix.pop()

    if max_first < 0:
        return
    yield from rec([], max_first, 0, 0)


# --- warm-up chain ------------------------------------------------------

def intro_lhs(j: int, L: int) -> LaurentPoly:
    """``sum_r q^(r^2) (q)_2L / ((q)_(L-r) (q)_2r) [2r, r-j]``."""
    return poly_sum(
        shift_x2(poch_ratio([(q1, 1, 2 * L)], [(q1, 1, L - r), (q1, 1, 2 * r)]) * qbinom(2 * r, r - j), 2 * r * r)
        for r in range(L + 1)
    )


def intro_rhs(j: int, L: int) -> LaurentPoly:
    return shift_x2(qbinom(2 * L, L - j), 2 * j * j)


def kronecker_lhs(L: int) -> LaurentPoly:
    return poly_sum(
        monomial_x2(j * (j - 1), (-1) ** (j % 2)) * qbinom(2 * L, L + j) for j in range(-L, L + 1)
    )


def kronecker_rhs(L: int) -> LaurentPoly:
    return ONE if L == 0 else ZERO


def _half_factorial_ratio(L: int) -> LaurentPoly:
    # (q)_2L / (q)_L as the product (1-q^(L+1))...(1-q^2L)
    return poch_finite(qpow(L + 1), 1, L)


def first_iteration_lhs(L: int) -> LaurentPoly:
    return _half_factorial_ratio(L)


def first_iteration_rhs(L: int) -> LaurentPoly:
    return poly_sum(
        monomial_x2(2 * j * j + j * (j - 1), (-1) ** (j % 2)) * qbinom(2 * L, L + j) for j in range(-L, L + 1)
    )


def second_iteration_lhs(L: int) -> LaurentPoly:
    inner = poly_sum(shift_x2(qbinom(L, r), 2 * r * r) for r in range(L + 1))
    return _half_factorial_ratio(L) * inner


def second_iteration_rhs(L: int) -> LaurentPoly:
    return poly_sum(
        monomial_x2(4 * j * j + j * (j - 1), (-1) ** (j % 2)) * qbinom(2 * L, L + j) for j in range(-L, L + 1)
    )


def pentagonal_lhs(order: int) -> TruncatedSeries:
    return poch_infinite(q1, 1, order)


def pentagonal_rhs(order: int) -> TruncatedSeries:
    # theta sum at (q, z) -> (q^(3/2), -q^(1/2))
    return jtp_theta(MonomialArg(-1, Fraction(1, 2)), Fraction(3, 2), order)


def rogers_ramanujan_lhs(order: int) -> TruncatedSeries:
    total = truncate(ZERO, order)
    r = 0
    while r * r <= order:
        total = total + divide_by_pochhammers(_q(2 * r * r), [(q1, 1, r)], order)
        r += 1
    return total


def rogers_ramanujan_rhs(order: int) -> TruncatedSeries:
    return series_inverse(poch_infinite_multi([q1, qpow(4)], 5, order))


def andrews_gordon_lhs(nu: int, order: int) -> TruncatedSeries:
    total = truncate(ZERO, order)
    for n, N in n_vectors(nu, order, max_sq=order):
        e = sum(x * x for x in N)
        total = total + divide_by_pochhammers(_q(2 * e), [(q1, 1, k) for k in n], order)
    return total


def andrews_gordon_rhs(nu: int, order: int) -> TruncatedSeries:
    mod = 2 * nu + 3
    excluded = {0, nu + 1, mod - nu - 1}
    factors = [(qpow(k), 1, 1) for k in range(1, order + 1) if k % mod not in excluded]
    return divide_by_pochhammers(ONE, factors, order)


def finite_jtp_sides(M: int, s: int, sign: int) -> tuple[LaurentPoly, LaurentPoly]:
    z = MonomialArg(sign, s)
    return finite_jtp_lhs(M, z), finite_jtp_rhs(M, z)


def fin_jtp_156_lhs(M: int) -> LaurentPoly:
    return poly_sum(shift_x2(qbinom(2 * M, M + j, 6), 2 * (3 * j * j + 2 * j)) for j in range(-M, M + 1))


def fin_jtp_156_rhs(M: int) -> LaurentPoly:
    return poch_finite_multi([MonomialArg(-1, 1), MonomialArg(-1, 5)], 6, M)


# --- seed and its limits ------------------------------------------------

def seed_lhs(L: int, M: int) -> LaurentPoly:
    """``sum_{m = L mod 2} q^(m^2) [3M, m]_(q^2) [2M + (L-m)/2, 2M]_(q^6)``."""
    return poly_sum(
        shift_x2(qbinom(3 * M, m, 2) * qbinom(2 * M + (L - m) // 2, 2 * M, 6), 2 * m * m)
        for m in range(L % 2, L + 1, 2)
    )


def seed_rhs(L: int, M: int) -> LaurentPoly:
    """``sum_j q^(3j^2+2j) T(L, M; j, j; q^6)``."""
    return symmetric_sum(
        lambda j: shift_x2(refined_T(L, M, j, j, 6), 2 * (3 * j * j + 2 * j)),
        min(L, M),
    )


def seed_pm_lhs(L: int, M: int, variant: int) -> LaurentPoly:
    """Outlook seeds: ``q^(m^2 - m)`` for ``T_{+1}``, ``q^(m^2 + m)`` for ``T_{-1}``."""
    return poly_sum(
        shift_x2(qbinom(3 * M, m, 2) * qbinom(2 * M + (L - m) // 2, 2 * M, 6), 2 * (m * m - variant * m))
        for m in range(L % 2, L + 1, 2)
    )


def seed_pm_rhs(L: int, M: int, variant: int) -> LaurentPoly:
    return symmetric_sum(
        lambda j: shift_x2(refined_T_pm(L, M, j, j, 6, variant), 2 * (3 * j * j + j)),
        min(L, M),
    )


def thm39_lhs(L: int) -> LaurentPoly:
    """``sum_{m = L mod 2} q^(m^2) (q^6;q^6)_L / ((q^2;q^2)_m (q^6;q^6)_((L-m)/2))``, exact division."""
    return poly_sum(
        shift_x2(poch_ratio([(q6, 6, L)], [(q2, 2, m), (q6, 6, (L - m) // 2)]), 2 * m * m)
        for m in range(L % 2, L + 1, 2)
    )


def thm39_rhs(L: int) -> LaurentPoly:
    return poly_sum(shift_x2(t_zero(L, j, 6), 2 * (3 * j * j + 2 * j)) for j in range(-L, L + 1))


def t_limit_L_seed_lhs(M: int, sigma: int) -> LaurentPoly:
    minus_q = MonomialArg(-1, 1)
    return poch_finite(minus_q, 2, 3 * M) + (-1) ** sigma * poch_finite(q1, 2, 3 * M)


def t_limit_L_seed_rhs(M: int, sigma: int) -> LaurentPoly:
    plain = poly_sum(shift_x2(qbinom(2 * M, M + j, 6), 2 * (3 * j * j + 2 * j)) for j in range(-M, M + 1))
    signed = poly_sum(
        shift_x2(qbinom(2 * M, M + j, 6), 2 * (3 * j * j + 2 * j)) * (-1) ** (j % 2) for j in range(-M, M + 1)
    )
    return poch_finite(MonomialArg(-1, 3), 6, M) * plain + (-1) ** sigma * poch_finite(q3, 6, M) * signed


# --- first hierarchy ----------------------------------------------------

def _t_hierarchy_core(nu: int, L: int, N: tuple, n: tuple) -> LaurentPoly:
    # m-sum and the inner product shared by the T-hierarchy LHS and its M -> inf limit
    SN = sum(N)
    n_last = n[-1]
    prod = ONE
    partial = 0
    for j in range(nu - 1):
        partial += N[j]
        prod = prod * qbinom(L - partial + n[j], n[j], 6)
        if not prod:
            return ZERO
    inner = poly_sum(
        shift_x2(qbinom(3 * n_last, m, 2) * qbinom(2 * n_last + (L - m - SN) // 2, 2 * n_last, 6), 2 * m * m)
        for m in range((L - SN) % 2, min(3 * n_last, L - SN) + 1, 2)
    )
    return shift_x2(prod * inner, 6 * sum(x * x for x in N))


def t_hierarchy_lhs(nu: int, L: int, M: int) -> LaurentPoly:
    return poly_sum(
        qbinom(L + M - N[0], L, 6) * _t_hierarchy_core(nu, L, N, n)
        for n, N in n_vectors(nu, min(L, M), max_sum=L)
    )


def t_hierarchy_rhs(nu: int, L: int, M: int) -> LaurentPoly:
    return symmetric_sum(
        lambda j: shift_x2(refined_T(L, M, (nu + 1) * j, j, 6), 2 * (3 * (nu + 1) * j * j + 2 * j)),
        min(L // (nu + 1), M),
    )


def t_hierarchy_limit_M_lhs(nu: int, L: int) -> LaurentPoly:
    return poly_sum(_t_hierarchy_core(nu, L, N, n) for n, N in n_vectors(nu, L, max_sum=L))


def t_hierarchy_limit_M_rhs(nu: int, L: int) -> LaurentPoly:
    return symmetric_sum(
        lambda j: shift_x2(t_zero(L, (nu + 1) * j, 6), 2 * (3 * (nu + 1) * j * j + 2 * j)),
        L // (nu + 1),
    )


def t_hierarchy_limit_L_lhs(nu: int, M: int, order: int) -> TruncatedSeries:
    total = truncate(ZERO, order)
    for n, N in n_vectors(nu, M, max_sq=order // 3):
        num = shift_x2(poch_finite(MonomialArg(-1, 1), 2, 3 * n[-1]), 6 * sum(x * x for x in N))
        denoms = [(q6, 6, M - N[0])] + [(q6, 6, k) for k in n[:-1]] + [(q6, 6, 2 * n[-1])]
        total = total + divide_by_pochhammers(num, denoms, order)
    return total


def t_hierarchy_limit_L_rhs(nu: int, M: int, order: int) -> TruncatedSeries:
    theta = poly_sum(
        shift_x2(qbinom(2 * M, M + j, 6), 2 * (3 * (nu + 1) * j * j + 2 * j)) for j in range(-M, M + 1)
    )
    return divide_by_pochhammers(poch_finite(MonomialArg(-1, 3), 6, M) * theta, [(q6, 6, 2 * M)], order)


def fin_analog_67_lhs(M: int, order: int) -> TruncatedSeries:
    total = truncate(ZERO, order)
    for k in range(M + 1):
        if 3 * k * k > order:
            break
        num = shift_x2(poch_finite(MonomialArg(-1, 1), 2, 3 * k), 6 * k * k)
        total = total + divide_by_pochhammers(num, [(q6, 6, M - k), (q6, 6, 2 * k)], order)
    return total


def fin_analog_67_rhs(M: int, order: int) -> TruncatedSeries:
    theta = poly_sum(shift_x2(qbinom(2 * M, M + j, 6), 2 * (6 * j * j + 2 * j)) for j in range(-M, M + 1))
    return divide_by_pochhammers(poch_finite(MonomialArg(-1, 3), 6, M) * theta, [(q6, 6, 2 * M)], order)


def end_of_t_hierarchy_lhs(nu: int, order: int) -> TruncatedSeries:
    total = truncate(ZERO, order)
    for n, N in n_vectors(nu, order, max_sq=order // 3):
        num = shift_x2(poch_finite(MonomialArg(-1, 1), 2, 3 * n[-1]), 6 * sum(x * x for x in N))
        denoms = [(q6, 6, k) for k in n[:-1]] + [(q6, 6, 2 * n[-1])]
        total = total + divide_by_pochhammers(num, denoms, order)
    return total


def end_of_t_hierarchy_rhs(nu: int, order: int) -> TruncatedSeries:
    p = 6 * (nu + 1)
    theta_prod = poch_infinite_multi([qpow(p), MonomialArg(-1, 3 * nu + 1), MonomialArg(-1, 3 * nu + 5)], p, order)
    num = poch_infinite(MonomialArg(-1, 3), 3, order) * theta_prod
    return divide_by_pochhammers(num.poly, [(qpow(12), 12, order // 12 + 1)], order)


# --- second hierarchy ---------------------------------------------------

def _s_core(nu: int, i: int, N: tuple, n: tuple) -> LaurentPoly:
    # everything in the S-hierarchy summand that depends on (i, n, m), without the i-prefactors
    SN = sum(N)
    n_last = n[-1]
    prod = ONE
    partial = 0
    for j in range(nu - 1):
        partial += N[j]
        prod = prod * qbinom(i - partial + n[j], n[j], 3)
        if not prod:
            return ZERO
    inner = poly_sum(
        shift_x2(qbinom(3 * n_last, m, 1) * qbinom(2 * n_last + (i - m - SN) // 2, 2 * n_last, 3), m * m)
        for m in range((i - SN) % 2, min(3 * n_last, i - SN) + 1, 2)
    )
    # doubled exponent of q^((m^2 + 3(i^2 + sum N^2))/2) is m^2 + 3 i^2 + 3 sum N^2
    return shift_x2(prod * inner, 3 * i * i + 3 * sum(x * x for x in N))


def nu0_s_lhs(L: int, M: int) -> LaurentPoly:
    parts = []
    for i in range(min(L, M) + 1):
        head = qbinom(L + M - i, L, 3)
        k = L - i
        inner = poly_sum(
            shift_x2(qbinom(3 * k, m, 1) * qbinom(2 * k + (i - m) // 2, 2 * k, 3), m * m + 3 * i * i)
            for m in range(i % 2, i + 1, 2)
        )
        parts.append(head * inner)
    return poly_sum(parts)


def nu0_s_rhs(L: int, M: int) -> LaurentPoly:
    return symmetric_sum(lambda j: shift_x2(refined_S(L, M, 2 * j, j, 3), 2 * (3 * j * j + j)), max(L, M))


def s_hierarchy_lhs(nu: int, L: int, M: int) -> LaurentPoly:
    parts = []
    for i in range(min(L, M) + 1):
        head = qbinom(L + M - i, L, 3)
        for n, N in n_vectors(nu, L, max_sum=i):
            t = _s_core(nu, i, N, n)
            if t:
                parts.append(head * qbinom(L - N[0], i, 3) * t)
    return poly_sum(parts)


def _c2(nu: int) -> int:
    return comb(nu + 2, 2)


def s_hierarchy_rhs(nu: int, L: int, M: int) -> LaurentPoly:
    c = _c2(nu)
    return symmetric_sum(
        lambda j: shift_x2(refined_S(L, M, (nu + 2) * j, (nu + 1) * j, 3), 2 * (3 * c * j * j + j)),
        max(L, M),
    )


def s_hierarchy_lim_M_lhs(nu: int, L: int) -> LaurentPoly:
    parts = []
    for i in range(L + 1):
        for n, N in n_vectors(nu, L, max_sum=i):
            t = _s_core(nu, i, N, n)
            if t:
                parts.append(qbinom(L - N[0], i, 3) * t)
    return poly_sum(parts)


def s_hierarchy_lim_M_rhs(nu: int, L: int) -> LaurentPoly:
    c, k = _c2(nu), nu + 2
    return symmetric_sum(
        lambda j: shift_x2(round_trinomial(L, k * j, k * j, 3), 2 * (3 * c * j * j + j)),
        L // k,
    )


def s_hierarchy_lim_L_lhs(nu: int, M: int) -> LaurentPoly:
    parts = []
    for i in range(M + 1):
        head = qbinom(M, i, 3)
        for n, N in n_vectors(nu, i, max_sum=i):
            t = _s_core(nu, i, N, n)
            if t:
                parts.append(head * t)
    return poly_sum(parts)


def s_hierarchy_lim_L_rhs(nu: int, M: int) -> LaurentPoly:
    c = _c2(nu)
    return symmetric_sum(
        lambda j: shift_x2(qbinom(2 * M, M + (nu + 1) * j, 3), 2 * (3 * c * j * j + j)),
        M,
    )


def end_of_s_hierarchy_lhs(nu: int, order: int) -> TruncatedSeries:
    total = truncate(ZERO, order)
    i = 0
    while 3 * i * i <= 2 * order:
        for n, N in n_vectors(nu, i, max_sum=i):
            t = _s_core(nu, i, N, n)
            if t:
                total = total + divide_by_pochhammers(t, [(q3, 3, i)], order)
        i += 1
    return total


def end_of_s_hierarchy_rhs(nu: int, order: int) -> TruncatedSeries:
    c = _c2(nu)
    p = 6 * c
    num = poch_infinite_multi([qpow(p), MonomialArg(-1, 3 * c + 1), MonomialArg(-1, 3 * c - 1)], p, order)
    return divide_by_pochhammers(num.poly, [(q3, 3, order // 3 + 1)], order)


def _Q(m: int, n: int) -> int:
    return 2 * m * m + 6 * m * n + 6 * n * n


def limit_andrews_k_lhs(L: int) -> LaurentPoly:
    parts = []
    for n in range(L // 2 + 1):
        for m in range(L - 2 * n + 1):
            k = L - 2 * n - m
            t = qbinom(3 * k, m, 1) * qbinom(2 * k + n, n, 3)
            if t:
                parts.append(shift_x2(t, 2 * _Q(m, n)))
    return poly_sum(parts)


def limit_andrews_k_rhs(L: int) -> LaurentPoly:
    return symmetric_sum(
        lambda j: shift_x2(round_trinomial(L, 2 * j, 2 * j, 3), 2 * (3 * j * j + j)),
        L // 2,
    )


def limit_andrews_dk_lhs(M: int, order: int) -> TruncatedSeries:
    total = truncate(ZERO, order)
    for n in range(M // 2 + 1):
        for m in range(M - 2 * n + 1):
            e = _Q(m, n)
            if e > order:
                break
            num = poch_ratio([(q3, 3, M)], [(q3, 3, n), (q3, 3, M - 2 * n - m)])
            total = total + divide_by_pochhammers(shift_x2(num, 2 * e), [(q1, 1, m)], order)
    return total


def limit_andrews_dk_rhs(M: int, order: int) -> TruncatedSeries:
    return truncate(
        poly_sum(shift_x2(qbinom(2 * M, M + j, 3), 2 * (3 * j * j + j)) for j in range(-M, M + 1)),
        order,
    )


def kr1_lhs(order: int) -> TruncatedSeries:
    total = truncate(ZERO, order)
    n = 0
    while _Q(0, n) <= order:
        m = 0
        while _Q(m, n) <= order:
            total = total + divide_by_pochhammers(_q(2 * _Q(m, n)), [(q1, 1, m), (q3, 3, n)], order)
            m += 1
        n += 1
    return total


def kr1_rhs(order: int) -> TruncatedSeries:
    return poch_infinite_multi([MonomialArg(-1, 2), MonomialArg(-1, 4)], 6, order) * poch_infinite(
        MonomialArg(-1, 3), 3, order
    )
