"""Exact Laurent polynomials and truncated power series in ``q``.

Exponents live on the half-integer grid and are stored doubled, so ``q^(3/2)``
is kept under the key ``3``.  Coefficients are Python ints.  Every value is
immutable; all operations return new objects.

Public functions take exponents in natural units (``int`` or a ``Fraction``
with denominator 2).  Anything suffixed ``_x2`` works in doubled units.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

Exponent = Union[int, Fraction]

# below this many coefficient products the plain dict convolution wins
_KRONECKER_THRESHOLD = 600


class NonUnitSeries(ArithmeticError):
    """Raised when inverting a series whose leading term is not q^0 with coefficient +-1."""


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


def to_x2(e: Exponent) -> int:
    """Convert a natural exponent to doubled units, rejecting non-half-integers."""
    if isinstance(e, int):
        return 2 * e
    d = Fraction(e) * 2
    if d.denominator != 1:
        raise ValueError(f"exponent {e} is not a multiple of 1/2")
    return int(d)


def from_x2(t: int) -> Exponent:
    return t // 2 if t % 2 == 0 else Fraction(t, 2)


def _fmt_exp(t: int) -> str:
    return str(t // 2) if t % 2 == 0 else f"{t}/2"


class LaurentPoly:
    """Sparse Laurent polynomial ``sum c_e q^e`` with half-integer ``e``.

    The constructor takes a mapping from doubled exponent to coefficient and
    drops zeros.  Use :func:`monomial`, :func:`from_coeffs` or arithmetic on
    :data:`ONE` / :data:`Q` to build values.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms_x2: Mapping[int, int] | None = None):
        if terms_x2:
            self._terms = {int(k): int(v) for k, v in terms_x2.items() if v}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # --- inspection -----------------------------------------------------

    @property
    def terms_x2(self) -> dict:
        """Copy of the doubled-exponent term map."""
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """Terms in ascending exponent order, exponents in natural units."""
        return [(from_x2(k), self._terms[k]) for k in sorted(self._terms)]

    def coeff(self, e: Exponent) -> int:
        return self._terms.get(to_x2(e), 0)

    def coeff_x2(self, t: int) -> int:
        return self._terms.get(t, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree_x2(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    def valuation_x2(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self._terms)

    def degree(self) -> Exponent:
        return from_x2(self.degree_x2())

    def valuation(self) -> Exponent:
        return from_x2(self.valuation_x2())

    def is_integer_exponents(self) -> bool:
        return all(k % 2 == 0 for k in self._terms)

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    # --- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw({k: v * other for k, v in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(_mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({render(self)})"

    def __str__(self):
        return render(self)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x}) if x else ZERO
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({2: 1})


def monomial(e: Exponent, c: int = 1) -> LaurentPoly:
    """``c * q^e``."""
    return LaurentPoly({to_x2(e): c})


def monomial_x2(t: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly._raw({t: c}) if c else ZERO


def from_coeffs(coeffs: Iterable[int], start: Exponent = 0, step: Exponent = 1) -> LaurentPoly:
    """Build ``sum coeffs[i] q^(start + i*step)``."""
    s, d = to_x2(start), to_x2(step)
    return LaurentPoly({s + i * d: c for i, c in enumerate(coeffs) if c})


def from_terms(terms: Mapping[Exponent, int]) -> LaurentPoly:
    """Build from a natural-unit exponent map."""
    out: dict[int, int] = {}
    for e, c in terms.items():
        t = to_x2(e)
        out[t] = out.get(t, 0) + c
    return LaurentPoly(out)


# --- multiplication -----------------------------------------------------

def _mul_terms(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) * len(b) < _KRONECKER_THRESHOLD or min(len(a), len(b)) < 4:
        return _mul_naive(a, b)
    return _mul_kronecker(a, b)


def _mul_naive(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict[int, int] = {}
    get = out.get
    bi = list(b.items())
    for ka, va in a.items():
        for kb, vb in bi:
            k = ka + kb
            out[k] = get(k, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def _grid(a: dict) -> tuple[int, int, int]:
    lo = min(a)
    g = 0
    for k in a:
        g = gcd(g, k - lo)
    return lo, max(a), g


def _pack(vals: list[int], nbytes: int) -> int:
    return int.from_bytes(b"".join(v.to_bytes(nbytes, "little") for v in vals), "little")


def _signed_pack(dense: list[int], nbytes: int) -> int:
    pos = [v if v > 0 else 0 for v in dense]
    neg = [-v if v < 0 else 0 for v in dense]
    return _pack(pos, nbytes) - _pack(neg, nbytes)


def _mul_kronecker(a: dict, b: dict) -> dict:
    """Multiply by packing both operands into big integers.

    Coefficients are laid out in fixed-width slots wide enough that no slot of
    the product overflows, so one big-int multiplication does the convolution.
    """
    lo_a, hi_a, ga = _grid(a)
    lo_b, hi_b, gb = _grid(b)
    step = gcd(ga, gb) or 1
    na = (hi_a - lo_a) // step + 1
    nb = (hi_b - lo_b) // step + 1
    da = [0] * na
    for k, v in a.items():
        da[(k - lo_a) // step] = v
    db = [0] * nb
    for k, v in b.items():
        db[(k - lo_b) // step] = v
    bound = max(abs(v) for v in a.values()) * max(abs(v) for v in b.values()) * min(len(a), len(b))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    prod = _signed_pack(da, nbytes) * _signed_pack(db, nbytes)
    n = na + nb - 1
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * n, "little")
    raw = (prod + offset).to_bytes(nbytes * n, "little")
    base = lo_a + lo_b
    out = {}
    for i in range(n):
        c = int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
        if c:
            out[base + i * step] = c
    return out


# --- structural operations ----------------------------------------------

def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Sum many polynomials with a single accumulator."""
    out: dict[int, int] = {}
    get = out.get
    for p in polys:
        for k, v in p._terms.items():
            out[k] = get(k, 0) + v
    return LaurentPoly._raw({k: v for k, v in out.items() if v})


def poly_prod(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    result = ONE
    for p in polys:
        result = result * p
        if not result:
            return ZERO
    return result


def substitute_power(p: LaurentPoly, k: Union[int, Fraction]) -> LaurentPoly:
    """Apply ``q -> q^k``.

    ``k`` is a nonzero integer, or a rational whose image still lands on the
    half-integer grid (``k = 1/2`` turns bases ``q^2, q^6`` into ``q, q^3``).
    """
    if k == 0:
        raise ValueError("k must be nonzero")
    if isinstance(k, int):
        return LaurentPoly._raw({t * k: v for t, v in p._terms.items()})
    k = Fraction(k)
    out = {}
    for t, v in p._terms.items():
        s = t * k
        if s.denominator != 1:
            raise ValueError(f"q -> q^{k} moves exponent {from_x2(t)} off the half-integer grid")
        out[int(s)] = v
    return LaurentPoly._raw(out)


def shift(p: LaurentPoly, e: Exponent) -> LaurentPoly:
    """Multiply by ``q^e``."""
    return shift_x2(p, to_x2(e))


def shift_x2(p: LaurentPoly, t: int) -> LaurentPoly:
    if t == 0:
        return p
    return LaurentPoly._raw({k + t: v for k, v in p._terms.items()})


def eval_at_one(p: LaurentPoly) -> int:
    return p.eval_at_one()


def equal_poly(a: LaurentPoly, b: LaurentPoly) -> bool:
    return a == b


def first_mismatch(a: LaurentPoly, b: LaurentPoly):
    """Lowest doubled exponent where ``a`` and ``b`` differ, with both coefficients.

    Returns ``None`` when the polynomials are equal.
    """
    keys = set(a._terms) | set(b._terms)
    for t in sorted(keys):
        ca, cb = a._terms.get(t, 0), b._terms.get(t, 0)
        if ca != cb:
            return t, ca, cb
    return None


def render(p: LaurentPoly) -> str:
    """Text form ``c*q^(e) + ...`` in ascending exponent order."""
    if not p._terms:
        return "0"
    return " + ".join(f"{p._terms[t]}*q^({_fmt_exp(t)})" for t in sorted(p._terms))


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Quotient ``a / b``, raising :class:`NonExactDivision` on any remainder.

    Long division from the lowest exponent upward on the common exponent
    grid of both operands; cost ``O(len(quotient) * len(b))``, cheap for the
    sparse divisors (``1 - q^d`` and short products of them) used here.
    """
    if not b._terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a._terms:
        return ZERO
    va, ha, ga = _grid(a._terms)
    vb, hb, gb = _grid(b._terms)
    step = gcd(ga, gb) or 1
    if ha - hb < va - vb:
        raise NonExactDivision("divisor spans more exponents than the dividend")
    dense = [0] * ((ha - va) // step + 1)
    for k, v in a._terms.items():
        dense[(k - va) // step] = v
    lead = b._terms[vb]
    rest = [((k - vb) // step, c) for k, c in b._terms.items() if k != vb]
    nq = ((ha - hb) - (va - vb)) // step + 1
    quot = {}
    for i in range(nq):
        c = dense[i]
        if not c:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise NonExactDivision(f"coefficient {c} not divisible by leading coefficient {lead}")
        quot[va - vb + i * step] = qc
        for j, bc in rest:
            dense[i + j] -= qc * bc
    if any(dense[nq:]):
        raise NonExactDivision("nonzero remainder")
    return LaurentPoly._raw(quot)


# --- truncated series ---------------------------------------------------

class TruncatedSeries:
    """A power series known exactly through ``q^order`` (inclusive)."""

    __slots__ = ("poly", "order_x2")

    def __init__(self, poly: LaurentPoly, order_x2: int):
        self.order_x2 = order_x2
        if poly._terms and max(poly._terms) > order_x2:
            poly = LaurentPoly._raw({t: v for t, v in poly._terms.items() if t <= order_x2})
        self.poly = poly

    @property
    def order(self) -> Exponent:
        return from_x2(self.order_x2)

    def coeff(self, e: Exponent) -> int:
        t = to_x2(e)
        if t > self.order_x2:
            raise ValueError(f"coefficient of q^{e} lies beyond the truncation order")
        return self.poly.coeff_x2(t)

    def coefficients(self) -> list[int]:
        """Integer-exponent coefficients ``0..order``."""
        return [self.poly.coeff_x2(2 * n) for n in range(self.order_x2 // 2 + 1)]

    def _other(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return TruncatedSeries(_coerce(other), self.order_x2)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries(self.poly + other.poly, min(self.order_x2, other.order_x2))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.order_x2)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        order = min(self.order_x2, other.order_x2)
        return TruncatedSeries(mul_truncated(self.poly, other.poly, order), order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return equal_series(self, other)

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries({render(self.poly)} + O(q^({_fmt_exp(self.order_x2 + 1)})))"


def mul_truncated(a: LaurentPoly, b: LaurentPoly, order_x2: int) -> LaurentPoly:
    """Product of two polynomials with nonnegative exponents, cut above ``order_x2``."""
    if not a or not b:
        return ZERO
    va, vb = min(a._terms), min(b._terms)
    a = _cut(a, order_x2 - vb)
    b = _cut(b, order_x2 - va)
    return _cut(a * b, order_x2)


def _cut(p: LaurentPoly, order_x2: int) -> LaurentPoly:
    if not p._terms or max(p._terms) <= order_x2:
        return p
    return LaurentPoly._raw({t: v for t, v in p._terms.items() if t <= order_x2})


def truncate(p: LaurentPoly, order: Exponent) -> TruncatedSeries:
    return TruncatedSeries(p, to_x2(order))


def series_inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term +-1."""
    terms = s.poly._terms
    if not terms or min(terms) != 0 or terms[0] not in (1, -1):
        raise NonUnitSeries("series must have valuation 0 and constant term +-1")
    c0 = terms[0]
    step = _grid(terms)[2] or 2
    order = s.order_x2
    rest = sorted((t, v) for t, v in terms.items() if t != 0)
    n = order // step
    inv = [0] * (n + 1)
    inv[0] = c0
    idx = [(t // step, v) for t, v in rest]
    for k in range(1, n + 1):
        acc = 0
        for i, v in idx:
            if i > k:
                break
            acc += v * inv[k - i]
        inv[k] = -acc * c0
    return TruncatedSeries(LaurentPoly({i * step: c for i, c in enumerate(inv) if c}), order)


def divide_series(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * series_inverse(b)


def equal_series(a: TruncatedSeries, b: TruncatedSeries, order: Exponent | None = None) -> bool:
    """Exact agreement of coefficients through ``order`` (default: the smaller order)."""
    limit = min(a.order_x2, b.order_x2)
    if order is not None:
        t = to_x2(order)
        if t > limit:
            raise ValueError("comparison order exceeds the known precision of an operand")
        limit = t
    return _cut(a.poly, limit) == _cut(b.poly, limit)
