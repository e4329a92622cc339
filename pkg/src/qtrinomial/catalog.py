"""Named identities with parameter schemas, evaluation and per-instance verification."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Union

from . import identities as I
from .bailey import t_to_s_admissible, t_to_s_sides, t_to_t_sides
from .poly import LaurentPoly, TruncatedSeries, _cut, first_mismatch

Side = Union[LaurentPoly, TruncatedSeries]


class UnknownIdentity(KeyError):
    pass


class SchemaViolation(ValueError):
    pass


@dataclass(frozen=True)
class ParamSpec:
    name: str
    lo: int | None = 0
    hi: int | None = None
    choices: tuple[int, ...] | None = None

    def check(self, value) -> None:
        if isinstance(value, bool) or not isinstance(value, int):
            raise SchemaViolation(f"{self.name} must be an integer, got {value!r}")
        if self.choices is not None and value not in self.choices:
            raise SchemaViolation(f"{self.name} must be one of {self.choices}, got {value}")
        if self.lo is not None and value < self.lo:
            raise SchemaViolation(f"{self.name} must be >= {self.lo}, got {value}")
        if self.hi is not None and value > self.hi:
            raise SchemaViolation(f"{self.name} must be <= {self.hi}, got {value}")

    @property
    def minimal(self) -> int:
        if self.choices is not None:
            return min(self.choices, key=abs)
        return self.lo if self.lo is not None else 0

    def describe(self) -> str:
        if self.choices is not None:
            return f"{self.name} in {{{', '.join(map(str, self.choices))}}}"
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return f"{self.name} in [{lo}, {hi}]"


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    kind: str  # "polynomial" or "series"
    params: tuple[ParamSpec, ...]
    lhs: Callable[..., Side]
    rhs: Callable[..., Side]
    anchor: str
    constraint: Callable[..., bool] | None = field(default=None, compare=False)
    constraint_text: str = ""

    def __post_init__(self):
        if self.kind not in ("polynomial", "series"):
            raise ValueError(f"bad kind {self.kind!r}")
        names = [p.name for p in self.params]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate parameter names in {self.id}")
        if self.kind == "series" and "order" not in names:
            raise ValueError(f"series identity {self.id} needs an order parameter")

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)

    def validate(self, binding: Mapping[str, int]) -> dict[str, int]:
        missing = [n for n in self.param_names if n not in binding]
        extra = [n for n in binding if n not in self.param_names]
        if missing or extra:
            raise SchemaViolation(f"{self.id}: missing {missing}, unexpected {extra}")
        for p in self.params:
            p.check(binding[p.name])
        b = {n: binding[n] for n in self.param_names}
        if self.constraint is not None and not self.constraint(**b):
            raise SchemaViolation(f"{self.id}: binding {b} violates {self.constraint_text}")
        return b

    def minimal_binding(self) -> dict[str, int]:
        return {p.name: p.minimal for p in self.params}

    def schema_text(self) -> str:
        parts = [p.describe() for p in self.params]
        if self.constraint_text:
            parts.append(self.constraint_text)
        return "; ".join(parts)


def _P(name, lo=0, hi=None, choices=None):
    if choices is not None:
        lo = hi = None
    return ParamSpec(name, lo, hi, choices)


L_, M_, ORDER = _P("L"), _P("M"), _P("order")
NU = _P("nu", 1)


def _first(f):
    return lambda **b: f(**b)[0]


def _second(f):
    return lambda **b: f(**b)[1]


_ENTRIES: list[IdentityDescriptor] = [
    IdentityDescriptor(
        "intro_identity", "polynomial", (_P("j", None), L_),
        lambda j, L: I.intro_lhs(j, L), lambda j, L: I.intro_rhs(j, L),
        "sum_r q^(r^2) (q)_2L/((q)_(L-r)(q)_2r) [2r, r-j] = q^(j^2) [2L, L-j]",
    ),
    IdentityDescriptor(
        "warmup_kronecker", "polynomial", (L_,),
        lambda L: I.kronecker_lhs(L), lambda L: I.kronecker_rhs(L),
        "sum_j (-1)^j q^C(j,2) [2L, L+j] = delta_(L,0)",
    ),
    IdentityDescriptor(
        "warmup_first_iteration", "polynomial", (L_,),
        lambda L: I.first_iteration_lhs(L), lambda L: I.first_iteration_rhs(L),
        "(q)_2L/(q)_L as a signed sum of [2L, L+j] with weight q^(j^2 + C(j,2))",
    ),
    IdentityDescriptor(
        "warmup_second_iteration", "polynomial", (L_,),
        lambda L: I.second_iteration_lhs(L), lambda L: I.second_iteration_rhs(L),
        "finite first Rogers-Ramanujan identity, (q)_2L/(q)_L sum_r q^(r^2)[L, r]",
    ),
    IdentityDescriptor(
        "pentagonal", "series", (ORDER,),
        lambda order: I.pentagonal_lhs(order), lambda order: I.pentagonal_rhs(order),
        "Euler's pentagonal number theorem",
    ),
    IdentityDescriptor(
        "rogers_ramanujan_1", "series", (ORDER,),
        lambda order: I.rogers_ramanujan_lhs(order), lambda order: I.rogers_ramanujan_rhs(order),
        "first Rogers-Ramanujan identity",
    ),
    IdentityDescriptor(
        "andrews_gordon", "series", (NU, ORDER),
        lambda nu, order: I.andrews_gordon_lhs(nu, order),
        lambda nu, order: I.andrews_gordon_rhs(nu, order),
        "Andrews-Gordon identities, modulus 2nu+3, all parts allowed except 0 and +-(nu+1)",
    ),
    IdentityDescriptor(
        "finite_jtp", "polynomial", (M_, _P("s", None), _P("sign", choices=(1, -1))),
        _first(I.finite_jtp_sides), _second(I.finite_jtp_sides),
        "finite Jacobi triple product at z = sign*q^s",
    ),
    IdentityDescriptor(
        "fin_jtp_156", "polynomial", (M_,),
        lambda M: I.fin_jtp_156_lhs(M), lambda M: I.fin_jtp_156_rhs(M),
        "sum_j q^(3j^2+2j) [2M, M+j]_(q^6) = (-q, -q^5; q^6)_M",
    ),
    IdentityDescriptor(
        "seed", "polynomial", (L_, M_),
        lambda L, M: I.seed_lhs(L, M), lambda L, M: I.seed_rhs(L, M),
        "seed identity: binomial double sum = sum_j q^(3j^2+2j) T(L, M; j, j; q^6)",
    ),
    IdentityDescriptor(
        "thm39_cap2", "polynomial", (L_,),
        lambda L: I.thm39_lhs(L), lambda L: I.thm39_rhs(L),
        "M -> inf limit of the seed after clearing (q^6;q^6)_L, against T0 trinomials",
    ),
    IdentityDescriptor(
        "t_limit_L_of_seed", "polynomial", (M_, _P("sigma", choices=(0, 1))),
        lambda M, sigma: I.t_limit_L_seed_lhs(M, sigma),
        lambda M, sigma: I.t_limit_L_seed_rhs(M, sigma),
        "L -> inf limit of the seed along L = sigma (mod 2)",
    ),
    IdentityDescriptor(
        "t_hierarchy", "polynomial", (NU, L_, M_),
        lambda nu, L, M: I.t_hierarchy_lhs(nu, L, M), lambda nu, L, M: I.t_hierarchy_rhs(nu, L, M),
        "nu-fold T-to-T iterate of the seed, refined T trinomials in q^6",
    ),
    IdentityDescriptor(
        "t_hierarchy_limit_L", "series", (NU, M_, ORDER),
        lambda nu, M, order: I.t_hierarchy_limit_L_lhs(nu, M, order),
        lambda nu, M, order: I.t_hierarchy_limit_L_rhs(nu, M, order),
        "L -> inf limit of the T hierarchy; the left side is rational and compared as a series",
    ),
    IdentityDescriptor(
        "fin_analog_67", "series", (M_, ORDER),
        lambda M, order: I.fin_analog_67_lhs(M, order), lambda M, order: I.fin_analog_67_rhs(M, order),
        "finite analog of a Capparelli-type sum, L -> inf of the seed",
    ),
    IdentityDescriptor(
        "t_hierarchy_limit_M", "polynomial", (NU, L_),
        lambda nu, L: I.t_hierarchy_limit_M_lhs(nu, L), lambda nu, L: I.t_hierarchy_limit_M_rhs(nu, L),
        "M -> inf limit of the T hierarchy against T0 trinomials",
    ),
    IdentityDescriptor(
        "end_of_t_hierarchy", "series", (NU, ORDER),
        lambda nu, order: I.end_of_t_hierarchy_lhs(nu, order),
        lambda nu, order: I.end_of_t_hierarchy_rhs(nu, order),
        "double limit of the T hierarchy: (-q^3;q^3)/(q^12;q^12) times a theta product mod 6(nu+1)",
    ),
    IdentityDescriptor(
        "nu0_s", "polynomial", (L_, M_),
        lambda L, M: I.nu0_s_lhs(L, M), lambda L, M: I.nu0_s_rhs(L, M),
        "T-to-S step in q^3 applied to the seed with q^2 -> q",
    ),
    IdentityDescriptor(
        "s_hierarchy", "polynomial", (NU, L_, M_),
        lambda nu, L, M: I.s_hierarchy_lhs(nu, L, M), lambda nu, L, M: I.s_hierarchy_rhs(nu, L, M),
        "T-to-S step applied to the nu-th member of the T hierarchy",
    ),
    IdentityDescriptor(
        "limit_andrews_k", "polynomial", (L_,),
        lambda L: I.limit_andrews_k_lhs(L), lambda L: I.limit_andrews_k_rhs(L),
        "M -> inf limit of the S seed, Q(m,n) = 2m^2+6mn+6n^2, against round trinomials",
    ),
    IdentityDescriptor(
        "limit_andrews_dk", "series", (M_, ORDER),
        lambda M, order: I.limit_andrews_dk_lhs(M, order),
        lambda M, order: I.limit_andrews_dk_rhs(M, order),
        "L -> inf limit of the S seed, compared as a series",
    ),
    IdentityDescriptor(
        "kr1", "series", (ORDER,),
        lambda order: I.kr1_lhs(order), lambda order: I.kr1_rhs(order),
        "sum q^Q(m,n)/((q)_m (q^3;q^3)_n) = (-q^2, -q^4; q^6)_inf (-q^3; q^3)_inf",
    ),
    IdentityDescriptor(
        "s_hierarchy_lim_M", "polynomial", (NU, L_),
        lambda nu, L: I.s_hierarchy_lim_M_lhs(nu, L), lambda nu, L: I.s_hierarchy_lim_M_rhs(nu, L),
        "M -> inf limit of the S hierarchy against round trinomials",
    ),
    IdentityDescriptor(
        "s_hierarchy_lim_L", "polynomial", (NU, M_),
        lambda nu, M: I.s_hierarchy_lim_L_lhs(nu, M), lambda nu, M: I.s_hierarchy_lim_L_rhs(nu, M),
        "L -> inf limit of the S hierarchy against Gaussian binomials",
    ),
    IdentityDescriptor(
        "end_of_s_hierarchy", "series", (NU, ORDER),
        lambda nu, order: I.end_of_s_hierarchy_lhs(nu, order),
        lambda nu, order: I.end_of_s_hierarchy_rhs(nu, order),
        "double limit of the S hierarchy: theta product over (q^3;q^3)_inf",
    ),
    IdentityDescriptor(
        "outlook_seed_plus", "polynomial", (L_, M_),
        lambda L, M: I.seed_pm_lhs(L, M, 1), lambda L, M: I.seed_pm_rhs(L, M, 1),
        "seed variant with T_{+1} trinomials",
    ),
    IdentityDescriptor(
        "outlook_seed_minus", "polynomial", (L_, M_),
        lambda L, M: I.seed_pm_lhs(L, M, -1), lambda L, M: I.seed_pm_rhs(L, M, -1),
        "seed variant with T_{-1} trinomials",
    ),
    IdentityDescriptor(
        "t_to_t_transform", "polynomial", (L_, M_, _P("a", None), _P("b", None), _P("base", 1)),
        _first(t_to_t_sides), _second(t_to_t_sides),
        "T-to-T transform for a single refined trinomial",
        constraint=lambda L, M, a, b, base: a * b >= 0,
        constraint_text="a*b >= 0",
    ),
    IdentityDescriptor(
        "t_to_s_transform", "polynomial", (L_, M_, _P("a", None), _P("b", None), _P("base", 1)),
        _first(t_to_s_sides), _second(t_to_s_sides),
        "T-to-S transform for a single refined trinomial",
        constraint=lambda L, M, a, b, base: t_to_s_admissible(L, M, a, b),
        constraint_text="a*b >= 0 and (|a| <= M whenever |b| <= M and |a+b| <= L)",
    ),
]

CATALOG: dict[str, IdentityDescriptor] = {d.id: d for d in _ENTRIES}


def catalog_table() -> list[IdentityDescriptor]:
    return list(_ENTRIES)


def get(identity: str) -> IdentityDescriptor:
    try:
        return CATALOG[identity]
    except KeyError:
        raise UnknownIdentity(identity) from None


def evaluate(identity: str | IdentityDescriptor, binding: Mapping[str, int]) -> tuple[Side, Side]:
    d = identity if isinstance(identity, IdentityDescriptor) else get(identity)
    b = d.validate(binding)
    return d.lhs(**b), d.rhs(**b)


@dataclass(frozen=True)
class Mismatch:
    exponent_times_2: int
    lhs_coeff: int
    rhs_coeff: int

    def as_dict(self) -> dict:
        return {"exponent_times_2": self.exponent_times_2, "lhs_coeff": self.lhs_coeff, "rhs_coeff": self.rhs_coeff}


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    params: dict
    status: str
    mismatch: Mismatch | None
    ms: float
    kind: str = "polynomial"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "status": self.status,
            "mismatch": None if self.mismatch is None else self.mismatch.as_dict(),
            "ms": round(self.ms, 3),
        }


def compare_sides(lhs: Side, rhs: Side) -> Mismatch | None:
    """Lowest disagreement; series are compared through the smaller of the two orders."""
    if isinstance(lhs, TruncatedSeries) or isinstance(rhs, TruncatedSeries):
        if not (isinstance(lhs, TruncatedSeries) and isinstance(rhs, TruncatedSeries)):
            raise TypeError("cannot compare a series side with a polynomial side")
        order_x2 = min(lhs.order_x2, rhs.order_x2)
        lhs, rhs = _cut(lhs.poly, order_x2), _cut(rhs.poly, order_x2)
    m = first_mismatch(lhs, rhs)
    return None if m is None else Mismatch(*m)


def verify_instance(identity: str | IdentityDescriptor, binding: Mapping[str, int]) -> VerificationReport:
    d = identity if isinstance(identity, IdentityDescriptor) else get(identity)
    b = d.validate(binding)
    t0 = time.perf_counter()
    mismatch = compare_sides(d.lhs(**b), d.rhs(**b))
    ms = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(d.id, b, "pass" if mismatch is None else "fail", mismatch, ms, d.kind)


def bindings(d: IdentityDescriptor, ranges: Mapping[str, tuple[int, int]]) -> Iterator[dict[str, int]]:
    """Cartesian product of inclusive ranges in schema order; skips bindings that fail the constraint.

    Parameters without a range default to their minimal value (for series
    kinds ``order`` must be supplied by the caller).
    """
    from itertools import product

    unknown = [n for n in ranges if n not in d.param_names]
    if unknown:
        raise SchemaViolation(f"{d.id} has no parameter(s) {unknown}")
    axes = []
    for p in d.params:
        lo, hi = ranges.get(p.name, (p.minimal, p.minimal))
        if lo > hi:
            raise SchemaViolation(f"empty range for {p.name}: {lo}..{hi}")
        values = list(range(lo, hi + 1))
        if p.choices is not None:
            values = [v for v in values if v in p.choices]
            if not values:
                raise SchemaViolation(f"range {lo}..{hi} has no admissible value for {p.name}")
        for v in (values[0], values[-1]):
            p.check(v)
        axes.append(values)
    for combo in product(*axes):
        b = dict(zip(d.param_names, combo))
        if d.constraint is None or d.constraint(**b):
            yield b
