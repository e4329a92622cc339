"""Bailey-chain style transforms on refined-trinomial expansions.

A :class:`TrinomialPair` packages a family ``F[L, M]`` together with weights
``alpha[j]`` such that ``F[L, M] = sum_j alpha[j] T(L, M; m j, n j)``.  The
T-to-T step produces a new pair of the same shape (so it can be iterated);
the T-to-S step is terminal and lands on refined ``S`` trinomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .identities import seed_lhs, symmetric_sum
from .poly import LaurentPoly, monomial_x2, poly_sum, shift_x2, substitute_power, to_x2
from .qfuncs import qbinom
from .trinomials import refined_S, refined_T


class WindowTooSmall(KeyError):
    pass


@dataclass(frozen=True)
class TrinomialPair:
    F: Callable[[int, int], LaurentPoly]
    alpha: Callable[[int], LaurentPoly]
    m: int
    n: int
    base: int = 1
    window: tuple[int, int] | None = None
    validate: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n == 0:
            raise ValueError("multipliers must be nonnegative and not both zero")
        if self.validate and self.window is not None and not self.check(*self.window):
            raise ValueError("F does not match its trinomial expansion on the window")

    def entry(self, L: int, M: int) -> LaurentPoly:
        if L < 0 or M < 0:
            # empty range of the summation the entry represents
            return LaurentPoly()
        if self.window is not None and (L > self.window[0] or M > self.window[1]):
            raise WindowTooSmall((L, M))
        return self.F(L, M)

    def expansion(self, L: int, M: int) -> LaurentPoly:
        """``sum_j alpha[j] T(L, M; m j, n j)``."""
        bounds = [x for x in (L // self.m if self.m else None, M // self.n if self.n else None) if x is not None]
        return symmetric_sum(
            lambda j: self.alpha(j) * refined_T(L, M, self.m * j, self.n * j, self.base),
            min(bounds),
        )

    def check(self, L_max: int, M_max: int) -> bool:
        return all(
            self.F(L, M) == self.expansion(L, M) for L in range(L_max + 1) for M in range(M_max + 1)
        )


def _q_half_base(pair: TrinomialPair, k: int) -> LaurentPoly:
    # q^(base * k^2 / 2)
    return monomial_x2(pair.base * k * k, 1)


def transform_T_step(pair: TrinomialPair, L: int, M: int) -> LaurentPoly:
    """``sum_i q^(base i^2/2) [L+M-i, L]_(q^base) F[L-i, i]``."""
    return poly_sum(
        shift_x2(qbinom(L + M - i, L, pair.base) * pair.entry(L - i, i), pair.base * i * i)
        for i in range(min(L, M) + 1)
    )


def transform_S_step(pair: TrinomialPair, L: int, M: int) -> LaurentPoly:
    """``sum_i q^(base i^2/2) [L+M-i, L]_(q^base) F[i, L-i]``."""
    return poly_sum(
        shift_x2(qbinom(L + M - i, L, pair.base) * pair.entry(i, L - i), pair.base * i * i)
        for i in range(min(L, M) + 1)
    )


def s_expansion(pair: TrinomialPair, L: int, M: int) -> LaurentPoly:
    """``sum_j q^(base (m j)^2 / 2) alpha[j] S(L, M; (m+n) j, m j)``: the image of a T-to-S step."""
    return symmetric_sum(
        lambda j: _q_half_base(pair, pair.m * j)
        * pair.alpha(j)
        * refined_S(L, M, (pair.m + pair.n) * j, pair.m * j, pair.base),
        max(L, M),
    )


def bailey_T(pair: TrinomialPair) -> TrinomialPair:
    """The pair produced by one T-to-T step; entries are computed lazily and cached."""
    cache: dict[tuple[int, int], LaurentPoly] = {}

    def F(L, M):
        key = (L, M)
        if key not in cache:
            cache[key] = transform_T_step(pair, L, M)
        return cache[key]

    def alpha(j):
        return _q_half_base(pair, pair.n * j) * pair.alpha(j)

    return TrinomialPair(F, alpha, pair.m + pair.n, pair.n, pair.base, pair.window, validate=False)


def seed_pair(base: int = 6, window: tuple[int, int] | None = None) -> TrinomialPair:
    """The seed identity as a pair with ``(m, n) = (1, 1)``.

    ``base = 6`` is the identity as stated; ``base = 3`` is the same identity
    after ``q^2 -> q``, which is the form the T-to-S step is applied to.
    """
    scale = Fraction(base, 6)
    cache: dict[tuple[int, int], LaurentPoly] = {}

    def F(L, M):
        key = (L, M)
        if key not in cache:
            p = seed_lhs(L, M)
            cache[key] = p if scale == 1 else substitute_power(p, scale)
        return cache[key]

    def alpha(j):
        return monomial_x2(to_x2(scale * (3 * j * j + 2 * j)), 1)

    return TrinomialPair(F, alpha, 1, 1, base, window, validate=window is not None)


def iterate_T(pair: TrinomialPair, times: int) -> TrinomialPair:
    for _ in range(times):
        pair = bailey_T(pair)
    return pair


# --- the underlying single-trinomial transforms -------------------------

def t_to_t_sides(L: int, M: int, a: int, b: int, base: int = 1) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the T-to-T transform for one trinomial (valid for ``a b >= 0``)."""
    lhs = poly_sum(
        shift_x2(qbinom(L + M - i, L, base) * refined_T(L - i, i, a, b, base), base * i * i)
        for i in range(min(L, M) + 1)
    )
    return lhs, shift_x2(refined_T(L, M, a + b, b, base), base * b * b)


def t_to_s_sides(L: int, M: int, a: int, b: int, base: int = 1) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the T-to-S transform for one trinomial.

    Valid for ``a b >= 0`` with the extra requirement that ``|a| <= M``
    whenever ``|b| <= M`` and ``|a + b| <= L``.  On the grid
    ``L, M <= 5, |a|, |b| <= 4`` admissible points always satisfy the identity,
    and among same-sign shifts they are exactly the points that do.
    """
    lhs = poly_sum(
        shift_x2(qbinom(L + M - i, L, base) * refined_T(i, L - i, b, a, base), base * i * i)
        for i in range(min(L, M) + 1)
    )
    return lhs, shift_x2(refined_S(L, M, a + b, b, base), base * b * b)


def t_to_s_admissible(L: int, M: int, a: int, b: int) -> bool:
    if a * b < 0:
        return False
    if abs(b) <= M and abs(a + b) <= L:
        return abs(a) <= M
    return True
