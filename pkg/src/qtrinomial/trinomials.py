"""Andrews-Baxter q-trinomials, ``T0`` and Warnaar's refined trinomials.

All functions return polynomials in ``q`` with the trinomial evaluated in the
variable ``q^base``.  Refined trinomials may carry half-integer exponents
(from ``q^(n^2/2)``) when ``base`` is odd.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .poly import (
    ZERO,
    LaurentPoly,
    TruncatedSeries,
    exact_div,
    poly_sum,
    series_inverse,
    shift_x2,
    substitute_power,
    truncate,
)
from .qfuncs import MonomialArg, poch_finite, poch_infinite, poch_ratio, qbinom, qpow


class NegativeExponentResult(ArithmeticError):
    pass


@dataclass(frozen=True)
class TrinomialParams:
    L: int
    M: int
    a: int
    b: int
    base: int = 1

    def __post_init__(self):
        if self.L < 0 or self.M < 0:
            raise ValueError("L and M must be nonnegative")
        if self.base < 1:
            raise ValueError("base must be a positive integer")


def support_sum(term: Callable[[int], LaurentPoly], start: int, bound: int, guard: int = 3) -> LaurentPoly:
    """Sum ``term(n)`` for ``n = start, start+1, ...``.

    ``bound`` is the analytic last index with a possibly nonzero term.  The
    loop keeps going past it until ``guard`` consecutive terms vanish, so an
    off-by-one in the bound cannot silently drop a term.
    """
    parts = []
    zeros = 0
    n = start
    while n <= bound or zeros < guard:
        t = term(n)
        if t:
            parts.append(t)
            zeros = 0
        elif n > bound:
            zeros += 1
        n += 1
    return poly_sum(parts)


def _in_base(p: LaurentPoly, base: int) -> LaurentPoly:
    return p if base == 1 else substitute_power(p, base)


@lru_cache(maxsize=None)
def round_trinomial(L: int, b: int, a: int, base: int = 1) -> LaurentPoly:
    """``(L, b; a; q)_2 = sum_n q^(n(n+b)) (q)_L / ((q)_n (q)_(n+a) (q)_(L-2n-a))`` in ``q^base``.

    The Pochhammer quotient is the product ``[L, n] [L-n, n+a]`` of Gaussian
    binomials, which vanishes exactly where a denominator index is negative.
    """
    if L < 0:
        raise ValueError("L must be nonnegative")
    p = support_sum(
        lambda n: shift_x2(qbinom(L, n) * qbinom(L - n, n + a), 2 * n * (n + b)),
        0,
        L,
    )
    return _in_base(p, base)


def round_trinomial_by_division(L: int, b: int, a: int, base: int = 1) -> LaurentPoly:
    """Same as :func:`round_trinomial`, summing exact Pochhammer quotients."""
    q = qpow(1)
    terms = []
    for n in range(L + 1):
        t = poch_ratio([(q, 1, L)], [(q, 1, n), (q, 1, n + a), (q, 1, L - 2 * n - a)])
        if t:
            terms.append(shift_x2(t, 2 * n * (n + b)))
    return _in_base(poly_sum(terms), base)


@lru_cache(maxsize=None)
def t_zero(L: int, a: int, base: int = 1) -> LaurentPoly:
    """``T0(L; a; q) = q^((L^2-a^2)/2) (L, a; a; 1/q)_2`` in ``q^base``."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    if abs(a) > L:
        return ZERO
    mirrored = substitute_power(round_trinomial(L, a, a), -1)
    p = shift_x2(mirrored, L * L - a * a)
    if p and p.valuation_x2() < 0:
        raise NegativeExponentResult(f"T0({L},{a}) has a negative exponent")
    return _in_base(p, base)


def _refined_t_family(L, M, a, b, base, exp_x2):
    # shared body of T, T_{+1}, T_{-1}; exp_x2(n) is the doubled q-exponent (base 1)
    if L < 0 or M < 0:
        raise ValueError("L and M must be nonnegative")
    start = (L - a) % 2

    def term(n):
        if (n - start) % 2:
            return ZERO
        k1 = (L - a - n) // 2
        k2 = (L + a - n) // 2
        t = qbinom(M, n) * qbinom(M + b + k1, M + b)
        if not t:
            return ZERO
        t = t * qbinom(M - b + k2, M - b)
        return shift_x2(t, exp_x2(n))

    return _in_base(support_sum(term, start, M), base)


@lru_cache(maxsize=None)
def refined_T(L: int, M: int, a: int, b: int, base: int = 1) -> LaurentPoly:
    """Warnaar's refined trinomial ``T(L, M; a, b; q^base)``."""
    return _refined_t_family(L, M, a, b, base, lambda n: n * n)


@lru_cache(maxsize=None)
def refined_T_pm(L: int, M: int, a: int, b: int, base: int, variant: int) -> LaurentPoly:
    """``T_{+1}`` (``q^C(n,2)``) or ``T_{-1}`` (``q^C(n+1,2)``) in place of ``q^(n^2/2)``."""
    if variant == 1:
        return _refined_t_family(L, M, a, b, base, lambda n: n * (n - 1))
    if variant == -1:
        return _refined_t_family(L, M, a, b, base, lambda n: n * (n + 1))
    raise ValueError("variant must be +1 or -1")


@lru_cache(maxsize=None)
def refined_S(L: int, M: int, a: int, b: int, base: int = 1) -> LaurentPoly:
    """Warnaar's refined trinomial ``S(L, M; a, b; q^base)``."""
    if L < 0 or M < 0:
        raise ValueError("L and M must be nonnegative")

    def term(n):
        t = qbinom(M - a + b, n) * qbinom(M + a - b, n + a)
        if not t:
            return ZERO
        t = t * qbinom(M + L - a - 2 * n, M)
        return shift_x2(t, 2 * n * (n + a))

    bound = max(0, min(M - a + b, M - b))
    return _in_base(support_sum(term, 0, bound), base)


# --- limit and stabilization checks -------------------------------------

def _agree(lhs: LaurentPoly, rhs: LaurentPoly, order: int) -> bool:
    return truncate(lhs, order) == truncate(rhs, order)


def t_m_limit_order(L: int, b: int, M: int, base: int = 1) -> int:
    """Order through which ``T(L, M; a, b)`` already equals its ``M -> inf`` limit."""
    return base * (M - max(L, abs(b)))


def check_T_M_stabilization(L: int, a: int, b: int, base: int, M_big: int) -> bool:
    """``T(L, M) (q^base; q^base)_L`` agrees with ``T0(L, a)`` through the stable window.

    Checked at ``M_big`` and ``M_big + 1`` (the stabilization witness).
    """
    if M_big < L:
        raise ValueError("M_big must be at least L")
    target = t_zero(L, a, base)
    clear = poch_finite(qpow(base), base, L)
    for M in (M_big, M_big + 1):
        order = t_m_limit_order(L, b, M, base)
        if order < 0 or not _agree(refined_T(L, M, a, b, base) * clear, target, order):
            return False
    return True


def t_l_limit_rhs(M: int, b: int, base: int, sigma: int) -> LaurentPoly:
    """``((-q^(1/2); q)_M + (-1)^sigma (q^(1/2); q)_M) [2M, M-b]`` in ``q^base``."""
    half = MonomialArg(1, Fraction(base, 2))
    pair = poch_finite(-half, base, M) + (-1) ** sigma * poch_finite(half, base, M)
    return pair * qbinom(2 * M, M - b, base)


def t_l_limit_order(L: int, M: int, a: int, base: int = 1) -> int:
    return base * ((L - abs(a) - M) // 2)


def check_T_L_stabilization(M: int, a: int, b: int, base: int, sigma: int, L_big: int) -> bool:
    """``2 T(L, M) (q^base; q^base)_2M`` agrees with the ``L -> inf`` limit numerator.

    ``L_big`` must have ``L_big - a = sigma (mod 2)``; checked at ``L_big`` and
    ``L_big + 2``.
    """
    if (L_big - a - sigma) % 2:
        raise ValueError("L_big - a must have parity sigma")
    if L_big < abs(a) + 2 * M + 2:
        raise ValueError("L_big too small for the stabilized regime")
    target = t_l_limit_rhs(M, b, base, sigma)
    clear = 2 * poch_finite(qpow(base), base, 2 * M)
    for L in (L_big, L_big + 2):
        order = t_l_limit_order(L, M, a, base)
        if not _agree(refined_T(L, M, a, b, base) * clear, target, order):
            return False
    return True


def s_m_limit_order(L: int, a: int, b: int, M: int, base: int = 1) -> int:
    return base * (M - L - abs(a) - abs(b))


def s_l_limit_order(L: int, M: int, a: int, b: int, base: int = 1) -> int:
    n_max = max(0, min(M - a + b, M - b))
    return base * (L - a - 2 * n_max)


def check_S_limits(L: int, M: int, a: int, b: int, base: int, which: str) -> bool:
    """Truncated ``M -> inf`` (``which='M_limit'``) or ``L -> inf`` (``'L_limit'``) limit of S.

    ``M_limit``: ``S(L, M) (q;q)_L`` agrees with ``(L, a; a)_2``; ``M`` here is
    the large parameter.  ``L_limit``: ``S(L, M) (q;q)_M`` agrees with
    ``[2M, M-b]``; ``L`` is the large parameter.  Both use two consecutive
    values of the large parameter.  The ``L -> inf`` limit needs
    ``|a - b| <= M``; outside that range S vanishes identically.
    """
    if which == "M_limit":
        target = round_trinomial(L, a, a, base)
        clear = poch_finite(qpow(base), base, L)
        for Mx in (M, M + 1):
            order = s_m_limit_order(L, a, b, Mx, base)
            if order < 0 or not _agree(refined_S(L, Mx, a, b, base) * clear, target, order):
                return False
        return True
    if which == "L_limit":
        if abs(a - b) > M:
            raise ValueError("the L -> inf limit of S needs |a - b| <= M")
        target = qbinom(2 * M, M - b, base)
        clear = poch_finite(qpow(base), base, M)
        for Lx in (L, L + 1):
            order = s_l_limit_order(Lx, M, a, b, base)
            if order < 0 or not _agree(refined_S(Lx, M, a, b, base) * clear, target, order):
                return False
        return True
    raise ValueError("which must be 'M_limit' or 'L_limit'")


def _inverse_euler(order: int) -> TruncatedSeries:
    return series_inverse(poch_infinite(qpow(1), 1, order))


def round_trinomial_L_limit_order(L: int, a: int, base: int = 1) -> int:
    """Order through which ``(L, a; a)_2`` already agrees with ``1/(q;q)_inf``."""
    return base * min(L - 1, L - abs(a))


def check_round_trinomial_L_limit(L: int, a: int, base: int = 1, order: int | None = None) -> bool:
    """``(L, a; a)_2`` against ``1/(q^base; q^base)_inf``, at ``L`` and ``L + 1``.

    ``order`` defaults to the stable window of each ``L``; an explicit order is
    used for both values.
    """
    for Lx in (L, L + 1):
        o = round_trinomial_L_limit_order(Lx, a, base) if order is None else order
        if o < 0:
            return False
        target = _in_base(_inverse_euler(o // base).poly, base)
        if not _agree(round_trinomial(Lx, a, a, base), target, o):
            return False
    return True


def t_zero_L_limit_series(sigma: int, base: int, order: int) -> TruncatedSeries:
    """``((-q^(1/2); q)_inf + (-1)^sigma (q^(1/2); q)_inf) / (2 (q; q)_inf)`` in ``q^base``."""
    half = MonomialArg(1, Fraction(base, 2))
    num = poch_infinite(-half, base, order) + (-1) ** sigma * poch_infinite(half, base, order)
    doubled = num * _in_base(_inverse_euler(order // base).poly, base)
    return TruncatedSeries(exact_div(doubled.poly, LaurentPoly({0: 2})), doubled.order_x2)


def t_zero_L_limit_order(L: int, a: int, base: int = 1) -> int:
    return base * ((L - abs(a)) // 2)


def check_T0_L_limit(L: int, a: int, base: int = 1) -> bool:
    """``T0(L, a)`` against its ``L -> inf`` limit along ``L - a = sigma (mod 2)``, at ``L`` and ``L + 2``."""
    if L < abs(a):
        raise ValueError("need L >= |a|")
    sigma = (L - a) % 2
    for Lx in (L, L + 2):
        o = t_zero_L_limit_order(Lx, a, base)
        if not _agree(t_zero(Lx, a, base), t_zero_L_limit_series(sigma, base, o).poly, o):
            return False
    return True
