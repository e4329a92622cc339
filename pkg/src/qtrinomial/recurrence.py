"""Recurrences for the seed identity's summands and sums, and a reconstruction check.

``G(L, M, k)`` and ``F(L, M, k, j)`` are the summands whose sums over ``k``
(and ``k, j``) give the left and right sides of the seed identity.  Every
recurrence below is checked as an exact polynomial identity: the residual must
be the zero polynomial, not merely small.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .identities import seed_lhs, seed_rhs, symmetric_sum
from .poly import ONE, ZERO, LaurentPoly, NonExactDivision, exact_div, monomial, poly_sum, shift_x2
from .qfuncs import qbinom
from .trinomials import support_sum


def _qm(e: int) -> LaurentPoly:
    return monomial(e)


def _one_minus(e: int) -> LaurentPoly:
    return ONE - monomial(e)


ONE_Q2_Q4 = ONE + monomial(2) + monomial(4)
ONE_Q6 = ONE + monomial(6)


@lru_cache(maxsize=None)
def G(L: int, M: int, k: int) -> LaurentPoly:
    """``q^((L-2k)^2) [3M, L-2k]_(q^2) [2M+k, k]_(q^6)``; zero outside the support."""
    if k < 0 or M < 0:
        return ZERO
    r = L - 2 * k
    t = qbinom(3 * M, r, 2)
    if not t:
        return ZERO
    return shift_x2(t * qbinom(2 * M + k, k, 6), 2 * r * r)


@lru_cache(maxsize=None)
def F(L: int, M: int, k: int, j: int) -> LaurentPoly:
    """``q^(3j^2+2j+3(L-j-2k)^2) [M, L-j-2k] [M+j+k, k] [M+k, k+j]``, all in ``q^6``."""
    if k < 0 or M < 0:
        return ZERO
    r = L - j - 2 * k
    t = qbinom(M, r, 6)
    if not t:
        return ZERO
    t = t * qbinom(M + k, k + j, 6)
    if not t:
        return ZERO
    t = t * qbinom(M + j + k, k, 6)
    return shift_x2(t, 2 * (3 * j * j + 2 * j + 3 * r * r))


def g_coefficients(L: int, M: int) -> list[tuple[LaurentPoly, tuple[int, int, int]]]:
    """``(coefficient, (dL, dM, dk))`` terms of the six-term G recurrence."""
    return [
        (_qm(9 + 18 * M) * _one_minus(12 + 6 * L + 6 * M), (0, 0, 0)),
        (_qm(4 + 12 * M) * ONE_Q2_Q4 * _one_minus(18 + 6 * L + 12 * M), (1, 0, 0)),
        (_qm(1 + 6 * M) * _one_minus(24 + 6 * L + 18 * M) * ONE_Q2_Q4, (2, 0, 0)),
        (-_one_minus(12 + 24 * M), (3, 1, 0)),
        (_one_minus(30 + 6 * L + 24 * M), (3, 0, 0)),
        (_qm(6 + 12 * M) * ONE_Q6 * _one_minus(6 + 12 * M), (1, 1, -1)),
    ]


def f_coefficients(L: int, M: int) -> list[tuple[LaurentPoly, tuple[int, int, int, int]]]:
    """``(coefficient, (dL, dM, dk, dj))`` terms of the ten-term F recurrence."""
    return [
        (_qm(9 + 18 * M) * _one_minus(12 + 6 * L + 6 * M), (0, 0, -1, -1)),
        (_qm(4 + 12 * M) * _one_minus(18 + 6 * L + 12 * M), (1, 0, -1, 0)),
        (_qm(6 + 12 * M) * _one_minus(18 + 6 * L + 12 * M), (1, 0, -1, -1)),
        (-_one_minus(12 + 24 * M), (3, 1, 0, -1)),
        (_qm(3 + 6 * M) * _one_minus(24 + 6 * L + 18 * M), (2, 0, 0, -1)),
        (_qm(5 + 6 * M) * _one_minus(24 + 6 * L + 18 * M), (2, 0, 0, -2)),
        (_qm(1 + 6 * M) * _one_minus(24 + 6 * L + 18 * M), (2, 0, -1, 0)),
        (_one_minus(30 + 6 * L + 24 * M), (3, 0, 0, -1)),
        (ONE_Q6 * _qm(6 + 12 * M) * _one_minus(6 + 12 * M), (1, 1, -1, -1)),
        (_qm(8 + 12 * M) * _one_minus(18 + 6 * L + 12 * M), (1, 0, 0, -2)),
    ]


def sum_coefficients(L: int, M: int) -> list[tuple[LaurentPoly, tuple[int, int]]]:
    """``(coefficient, (dL, dM))`` terms of the six-term recurrence for the summed sides."""
    return [
        (_qm(9 + 18 * M) * _one_minus(12 + 6 * L + 6 * M), (0, 0)),
        (_qm(4 + 12 * M) * ONE_Q2_Q4 * _one_minus(18 + 6 * L + 12 * M), (1, 0)),
        (_qm(1 + 6 * M) * _one_minus(24 + 6 * L + 18 * M) * ONE_Q2_Q4, (2, 0)),
        (_one_minus(30 + 6 * L + 24 * M), (3, 0)),
        (_qm(6 + 12 * M) * ONE_Q6 * _one_minus(6 + 12 * M), (1, 1)),
        (-_one_minus(12 + 24 * M), (3, 1)),
    ]


def g_residual(L: int, M: int, k: int, coefficients=g_coefficients) -> LaurentPoly:
    return poly_sum(c * G(L + dL, M + dM, k + dk) for c, (dL, dM, dk) in coefficients(L, M))


def f_residual(L: int, M: int, k: int, j: int, coefficients=f_coefficients) -> LaurentPoly:
    return poly_sum(
        c * F(L + dL, M + dM, k + dk, j + dj) for c, (dL, dM, dk, dj) in coefficients(L, M)
    )


def check_G_recurrence(L: int, M: int, k: int, coefficients=g_coefficients) -> bool:
    return not g_residual(L, M, k, coefficients)


def check_F_recurrence(L: int, M: int, k: int, j: int, coefficients=f_coefficients) -> bool:
    return not f_residual(L, M, k, j, coefficients)


def S_hat_from_G(L: int, M: int) -> LaurentPoly:
    """``sum_k G(L, M, k)``: the seed's left side through its summand."""
    return support_sum(lambda k: G(L, M, k), 0, L // 2)


def S_hat_from_F(L: int, M: int) -> LaurentPoly:
    """``sum_{k, j} F(L, M, k, j)`` with ``j`` over all integers."""
    return symmetric_sum(lambda j: support_sum(lambda k: F(L, M, k, j), 0, L + abs(j)), L + M)


SIDES: dict[str, Callable[[int, int], LaurentPoly]] = {"lhs": seed_lhs, "rhs": seed_rhs}


def sum_residual(side: str | Callable[[int, int], LaurentPoly], L: int, M: int) -> LaurentPoly:
    S = SIDES[side] if isinstance(side, str) else side
    return poly_sum(c * S(L + dL, M + dM) for c, (dL, dM) in sum_coefficients(L, M))


def check_sum_recurrence(side: str, L: int, M: int) -> bool:
    return not sum_residual(side, L, M)


def boundary_values(L: int, M: int) -> LaurentPoly | None:
    """The closed form of ``S_hat(L, M)`` on the boundary rows/column, else ``None``."""
    if M == 0:
        return ONE if L % 2 == 0 else ZERO
    if L == 0:
        return ONE
    if L == 1:
        return shift_x2(qbinom(3 * M, 1, 2), 2)
    if L == 2:
        return qbinom(2 * M + 1, 1, 6) + shift_x2(qbinom(3 * M, 2, 2), 8)
    return None


def check_boundaries(L_max: int = 20, M_max: int = 10) -> bool:
    """Both seed sides against the closed boundary forms, independently."""
    for side in (seed_lhs, seed_rhs):
        for L in range(L_max + 1):
            if side(L, 0) != boundary_values(L, 0):
                return False
        for M in range(M_max + 1):
            for L in (0, 1, 2):
                if side(L, M) != boundary_values(L, M):
                    return False
    return True


def reconstruct_S(L_max: int, M_max: int) -> dict[tuple[int, int], LaurentPoly]:
    """Rebuild ``S_hat`` on ``L <= L_max, M <= M_max`` from the recurrence and boundaries alone.

    The recurrence is solved for ``S_hat(L+3, M+1)``, whose coefficient
    ``1 - q^(12+24M)`` is divided out exactly; a remainder raises
    :class:`NonExactDivision`.  Layers are filled in increasing ``M`` and,
    within a layer, increasing ``L`` so ``S_hat(L+1, M+1)`` is already known.
    """
    if L_max < 3:
        raise ValueError("L_max must be at least 3")
    S: dict[tuple[int, int], LaurentPoly] = {}
    for L in range(L_max + 1):
        S[(L, 0)] = boundary_values(L, 0)
    for M1 in range(1, M_max + 1):
        for L in (0, 1, 2):
            S[(L, M1)] = boundary_values(L, M1)
        M = M1 - 1
        # every term the recurrence needs sits at L' <= L + 3, already filled
        for L3 in range(3, L_max + 1):
            L = L3 - 3
            known = poly_sum(
                c * S[(L + dL, M + dM)] for c, (dL, dM) in sum_coefficients(L, M) if (dL, dM) != (3, 1)
            )
            S[(L3, M1)] = exact_div(known, _one_minus(12 + 24 * M))
    return S
