"""q-Pochhammer symbols, Gaussian binomials and theta-function machinery.

Every "base" argument is the power of ``q`` playing the role of the variable,
so ``qbinom(4, 2, 6)`` is ``[4 choose 2]`` in ``q^6``.  Bases may be
half-integers (``Fraction(1, 2)``) where the formula calls for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import (
    ONE,
    ZERO,
    Exponent,
    LaurentPoly,
    TruncatedSeries,
    exact_div,
    from_x2,
    monomial_x2,
    poly_sum,
    substitute_power,
    to_x2,
    truncate,
)


class NegativeIndexNonPolynomial(ValueError):
    pass


class DivergentProduct(ValueError):
    pass


class DivergentTheta(ValueError):
    pass


class OddCoefficient(ArithmeticError):
    pass


@dataclass(frozen=True)
class MonomialArg:
    """The formal monomial ``sign * q^exponent``."""

    sign: int
    exponent: Exponent = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        to_x2(self.exponent)

    @property
    def exponent_x2(self) -> int:
        return to_x2(self.exponent)

    @property
    def poly(self) -> LaurentPoly:
        return monomial_x2(self.exponent_x2, self.sign)

    def __neg__(self) -> "MonomialArg":
        return MonomialArg(-self.sign, self.exponent)

    def inverse(self) -> "MonomialArg":
        return MonomialArg(self.sign, -Fraction(self.exponent))

    def times_q(self, e: Exponent) -> "MonomialArg":
        """``self * q^e``."""
        return MonomialArg(self.sign, from_x2(self.exponent_x2 + to_x2(e)))

    def power(self, j: int) -> LaurentPoly:
        """``self^j`` for any integer ``j``."""
        return monomial_x2(self.exponent_x2 * j, self.sign ** (j % 2))


def qpow(e: Exponent) -> MonomialArg:
    """Shorthand for the monomial ``q^e``."""
    return MonomialArg(1, e)


def _base_x2(base: Exponent) -> int:
    b = to_x2(base)
    if b <= 0:
        raise ValueError("base must be positive")
    return b


def _one_minus(sign: int, t: int) -> LaurentPoly:
    # 1 - sign*q^(t/2)
    if t == 0:
        return LaurentPoly({0: 1 - sign})
    return LaurentPoly({0: 1, t: -sign})


def poch_finite(a: MonomialArg, base: Exponent, n: int) -> LaurentPoly:
    """``(a; q^base)_n = prod_{i<n} (1 - a q^(base*i))`` for ``n >= 0``."""
    if n < 0:
        raise NegativeIndexNonPolynomial(
            f"(a;q)_{n} with negative index is not a polynomial; use qbinom's vanishing rule"
        )
    b = _base_x2(base)
    e0 = a.exponent_x2
    result = ONE
    for i in range(n):
        result = result * _one_minus(a.sign, e0 + b * i)
    return result


def poch_finite_multi(args, base: Exponent, n: int) -> LaurentPoly:
    """``(a_1, ..., a_k; q^base)_n``."""
    result = ONE
    for a in args:
        result = result * poch_finite(a, base, n)
    return result


def poch_infinite(a: MonomialArg, base: Exponent, order: Exponent) -> TruncatedSeries:
    """``(a; q^base)_inf`` known through ``q^order``."""
    b = _base_x2(base)
    e0 = a.exponent_x2
    if e0 < 0:
        raise DivergentProduct("a factor with negative exponent makes the product a non-series")
    order_x2 = to_x2(order)
    coeffs = {0: 1}
    e = e0
    while e <= order_x2:
        # multiply by (1 - sign q^e), reading only the old coefficients
        new = dict(coeffs)
        for t, v in coeffs.items():
            k = t + e
            if k <= order_x2:
                new[k] = new.get(k, 0) - a.sign * v
        coeffs = {t: v for t, v in new.items() if v}
        e += b
    return TruncatedSeries(LaurentPoly(coeffs), order_x2)


def poch_infinite_multi(args, base: Exponent, order: Exponent) -> TruncatedSeries:
    result = truncate(ONE, order)
    for a in args:
        result = result * poch_infinite(a, base, order)
    return result


@lru_cache(maxsize=None)
def _qbinom_unit(top: int, bottom: int) -> LaurentPoly:
    # [top choose bottom]_q via prod (1-q^(top-bottom+i)) / (1-q^i), dense
    k = min(bottom, top - bottom)
    coeffs = [1]
    for i in range(1, k + 1):
        up = top - k + i
        # multiply by 1 - q^up
        coeffs = coeffs + [0] * up
        for d in range(len(coeffs) - 1, up - 1, -1):
            coeffs[d] -= coeffs[d - up]
        # divide by 1 - q^i (exact)
        for d in range(i, len(coeffs)):
            coeffs[d] += coeffs[d - i]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
    return LaurentPoly({2 * d: c for d, c in enumerate(coeffs) if c})


@lru_cache(maxsize=None)
def qbinom(top: int, bottom: int, base: Exponent = 1) -> LaurentPoly:
    """Gaussian binomial ``[top choose bottom]`` in ``q^base``; zero unless ``0 <= bottom <= top``."""
    if bottom < 0 or top - bottom < 0:
        return ZERO
    p = _qbinom_unit(top, bottom)
    if base == 1:
        return p
    return substitute_power(p, Fraction(base))


def qbinom_by_division(top: int, bottom: int, base: Exponent = 1) -> LaurentPoly:
    """Same value as :func:`qbinom`, computed as a Pochhammer quotient with exact division.

    Kept as an independent route for cross-checks.
    """
    if bottom < 0 or top - bottom < 0:
        return ZERO
    q = qpow(base)
    num = poch_finite(q, base, top)
    den = poch_finite(q, base, bottom) * poch_finite(q, base, top - bottom)
    return exact_div(num, den)


def poch_ratio(numer, denom) -> LaurentPoly:
    """Exact quotient of Pochhammer products.

    ``numer`` and ``denom`` are lists of ``(a, base, n)`` triples.  Any
    denominator with ``n < 0`` makes the result zero, matching the rule that
    ``1/(q;q)_n`` vanishes for negative ``n``.  Division is exact and any
    remainder raises :class:`~qtrinomial.poly.NonExactDivision`.
    """
    if any(n < 0 for _, _, n in denom):
        return ZERO
    result = ONE
    for a, base, n in numer:
        result = result * poch_finite(a, base, n)
    for a, base, n in denom:
        b_x2 = _base_x2(base)
        for i in range(n):
            factor = _one_minus(a.sign, a.exponent_x2 + b_x2 * i)
            result = exact_div(result, factor)
    return result


def qexp_sum(L: int, z: MonomialArg, base: Exponent = 1) -> LaurentPoly:
    """``sum_n q^(base*C(n,2)) z^n [L choose n]_(q^base)``; equals ``(-z; q^base)_L``."""
    b = _base_x2(base)
    return poly_sum(
        monomial_x2(b * (n * (n - 1) // 2), 1) * z.power(n) * qbinom(L, n, base)
        for n in range(L + 1)
    )


def qexp_sum_parity(L: int, z: MonomialArg, base: Exponent, sigma: int) -> LaurentPoly:
    """Parity-restricted :func:`qexp_sum` over ``n = sigma (mod 2)``."""
    if sigma not in (0, 1):
        raise ValueError("sigma must be 0 or 1")
    b = _base_x2(base)
    return poly_sum(
        monomial_x2(b * (n * (n - 1) // 2), 1) * z.power(n) * qbinom(L, n, base)
        for n in range(sigma, L + 1, 2)
    )


def qexp_parity_product(L: int, z: MonomialArg, base: Exponent, sigma: int) -> LaurentPoly:
    """``((-z;q)_L + (-1)^sigma (z;q)_L) / 2`` with the halving checked exact."""
    total = poch_finite(-z, base, L) + (-1) ** sigma * poch_finite(z, base, L)
    out = {}
    for t, v in total.terms_x2.items():
        h, r = divmod(v, 2)
        if r:
            raise OddCoefficient(f"odd coefficient {v} at doubled exponent {t}")
        out[t] = h
    return LaurentPoly(out)


def finite_jtp_lhs(M: int, z: MonomialArg, base: Exponent = 1) -> LaurentPoly:
    """``sum_{|j|<=M} q^(base*j^2) z^j [2M choose M+j]_(q^(2 base))``."""
    b = _base_x2(base)
    two_base = from_x2(2 * b)
    return poly_sum(
        monomial_x2(b * j * j, 1) * z.power(j) * qbinom(2 * M, M + j, two_base)
        for j in range(-M, M + 1)
    )


def finite_jtp_rhs(M: int, z: MonomialArg, base: Exponent = 1) -> LaurentPoly:
    """``(-z q^base, -q^base / z; q^(2 base))_M``."""
    two_base = from_x2(2 * _base_x2(base))
    return poch_finite_multi([(-z).times_q(base), (-z.inverse()).times_q(base)], two_base, M)


def jtp_theta(z: MonomialArg, base: Exponent, order: Exponent) -> TruncatedSeries:
    """``sum_j z^j q^(base*j^2)`` known through ``q^order``."""
    b = _base_x2(base)
    order_x2 = to_x2(order)
    ez = z.exponent_x2
    terms: dict[int, int] = {}
    for direction in (1, -1):
        j = 0 if direction == 1 else -1
        while True:
            t = b * j * j + ez * j
            # past the vertex the exponent grows monotonically in |j|
            if t > order_x2 and (2 * b * j + ez) * direction > 0:
                break
            if t <= order_x2:
                c = z.sign ** (j % 2)
                terms[t] = terms.get(t, 0) + c
            j += direction
    if terms and min(terms) < 0:
        raise DivergentTheta("theta series has terms of negative exponent")
    return TruncatedSeries(LaurentPoly(terms), order_x2)


def jtp_product(z: MonomialArg, base: Exponent, order: Exponent) -> TruncatedSeries:
    """``(q^(2 base), -z q^base, -q^base / z; q^(2 base))_inf`` through ``q^order``."""
    b = _base_x2(base)
    two_base = from_x2(2 * b)
    args = [qpow(two_base), (-z).times_q(base), (-z.inverse()).times_q(base)]
    if any(a.exponent_x2 < 0 for a in args):
        raise DivergentTheta("product side has a factor with negative exponent")
    return poch_infinite_multi(args, two_base, order)


def divide_by_pochhammers(p: LaurentPoly, denoms, order: Exponent) -> TruncatedSeries:
    """``p / prod (a; q^base)_n`` as a series through ``q^order``.

    ``denoms`` holds ``(a, base, n)`` triples; any ``n < 0`` gives zero.
    ``p`` must have nonnegative exponents.
    """
    order_x2 = to_x2(order)
    if any(n < 0 for _, _, n in denoms) or not p:
        return TruncatedSeries(ZERO, order_x2)
    terms = p.terms_x2
    if min(terms) < 0:
        raise ValueError("numerator must have nonnegative exponents")
    dense = [0] * (order_x2 + 1)
    for t, v in terms.items():
        if t <= order_x2:
            dense[t] = v
    for a, base, n in denoms:
        b = _base_x2(base)
        if a.exponent_x2 <= 0 and n > 0:
            raise DivergentProduct("1/(a;q)_n needs a positive exponent in a")
        for i in range(n):
            e = a.exponent_x2 + b * i
            if e > order_x2:
                break
            # divide by (1 - sign q^e), ascending
            sg = a.sign
            for k in range(e, order_x2 + 1):
                if dense[k - e]:
                    dense[k] += sg * dense[k - e]
    return TruncatedSeries(LaurentPoly({t: v for t, v in enumerate(dense) if v}), order_x2)


def pochhammer_inverse_series(a: MonomialArg, base: Exponent, n: int, order: Exponent) -> TruncatedSeries:
    """``1 / (a; q^base)_n`` as a series; zero for ``n < 0``."""
    return divide_by_pochhammers(ONE, [(a, base, n)], order)
