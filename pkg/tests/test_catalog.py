import dataclasses

import pytest

from qtrinomial import identities as I
from qtrinomial.catalog import (
    CATALOG,
    IdentityDescriptor,
    ParamSpec,
    SchemaViolation,
    UnknownIdentity,
    bindings,
    catalog_table,
    compare_sides,
    evaluate,
    verify_instance,
)
from qtrinomial.partitions import partition_count
from qtrinomial.poly import (
    ONE,
    LaurentPoly,
    TruncatedSeries,
    eval_at_one,
    from_coeffs,
    monomial,
    series_inverse,
    shift,
    truncate,
)
from qtrinomial.qfuncs import qbinom

NAMED_IDS = [
    "warmup_first_iteration", "warmup_second_iteration", "pentagonal", "rogers_ramanujan_1",
    "andrews_gordon", "finite_jtp", "fin_jtp_156", "seed", "thm39_cap2", "t_limit_L_of_seed",
    "t_hierarchy", "t_hierarchy_limit_L", "fin_analog_67", "t_hierarchy_limit_M", "end_of_t_hierarchy",
    "nu0_s", "s_hierarchy", "limit_andrews_k", "limit_andrews_dk", "kr1", "s_hierarchy_lim_M",
    "s_hierarchy_lim_L", "end_of_s_hierarchy", "outlook_seed_plus", "outlook_seed_minus",
]


def test_catalog_has_every_named_identity():
    ids = [d.id for d in catalog_table()]
    assert len(ids) >= 24 and len(set(ids)) == len(ids)
    for name in NAMED_IDS:
        assert name in CATALOG


def test_minimal_parameters_give_trivial_values():
    for d in catalog_table():
        if d.kind != "polynomial":
            continue
        lhs, rhs = evaluate(d.id, d.minimal_binding())
        assert lhs == rhs
        if d.id == "t_limit_L_of_seed":
            # at M = 0, sigma = 0 both sides are 1 + 1
            assert lhs == 2
        else:
            assert lhs in (ONE, LaurentPoly())


def test_series_entries_at_small_order():
    for d in catalog_table():
        if d.kind == "series":
            b = d.minimal_binding()
            b["order"] = 30
            lhs, rhs = evaluate(d.id, b)
            assert isinstance(lhs, TruncatedSeries) and isinstance(rhs, TruncatedSeries)
            assert verify_instance(d.id, b).passed


def test_polynomial_entries_never_return_series():
    for d in catalog_table():
        if d.kind == "polynomial":
            for side in evaluate(d.id, d.minimal_binding()):
                assert isinstance(side, LaurentPoly)


def test_seed_examples():
    assert evaluate("seed", {"L": 0, "M": 0}) == (ONE, ONE)
    expected = monomial(1) + monomial(3) + monomial(5)
    assert evaluate("seed", {"L": 1, "M": 1}) == (expected, expected)
    M = 1
    boundary = qbinom(2 * M + 1, 1, 6) + shift(qbinom(3 * M, 2, 2), 4)
    assert evaluate("seed", {"L": 2, "M": 1}) == (boundary, boundary)
    assert verify_instance("seed", {"L": 5, "M": 3}).status == "pass"


def test_perturbed_rhs_fails_at_exponent_zero():
    d = CATALOG["seed"]
    broken = dataclasses.replace(d, rhs=lambda L, M: I.seed_rhs(L, M) + 1)
    r = verify_instance(broken, {"L": 5, "M": 3})
    assert r.status == "fail"
    assert r.mismatch.exponent_times_2 == 0
    assert r.mismatch.rhs_coeff == r.mismatch.lhs_coeff + 1
    # odd L: the seed has no constant term
    assert r.as_dict()["mismatch"] == {"exponent_times_2": 0, "lhs_coeff": 0, "rhs_coeff": 1}


def test_kr1_passes_at_order_60():
    r = verify_instance("kr1", {"order": 60})
    assert r.passed and r.mismatch is None


def test_pentagonal_at_order_12():
    lhs, rhs = evaluate("pentagonal", {"order": 12})
    expected = from_coeffs([1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1])
    assert lhs.poly == expected and rhs.poly == expected


def test_pentagonal_inverse_counts_partitions():
    lhs, _ = evaluate("pentagonal", {"order": 50})
    assert series_inverse(lhs).coefficients() == [partition_count(n) for n in range(51)]


def test_schema_errors():
    with pytest.raises(UnknownIdentity):
        evaluate("no_such_identity", {})
    with pytest.raises(SchemaViolation):
        evaluate("seed", {"L": 1})
    with pytest.raises(SchemaViolation):
        evaluate("seed", {"L": 1, "M": 1, "x": 0})
    with pytest.raises(SchemaViolation):
        evaluate("seed", {"L": -1, "M": 1})
    with pytest.raises(SchemaViolation):
        evaluate("seed", {"L": 1.0, "M": 1})
    with pytest.raises(SchemaViolation):
        evaluate("t_hierarchy", {"nu": 0, "L": 1, "M": 1})
    with pytest.raises(SchemaViolation):
        evaluate("t_limit_L_of_seed", {"M": 1, "sigma": 2})
    with pytest.raises(SchemaViolation):
        evaluate("t_to_t_transform", {"L": 2, "M": 2, "a": 1, "b": -1, "base": 1})


def test_descriptor_construction_validation():
    with pytest.raises(ValueError):
        IdentityDescriptor("x", "series", (ParamSpec("L"),), lambda L: ONE, lambda L: ONE, "")
    with pytest.raises(ValueError):
        IdentityDescriptor("x", "matrix", (), lambda: ONE, lambda: ONE, "")
    with pytest.raises(ValueError):
        IdentityDescriptor("x", "polynomial", (ParamSpec("L"), ParamSpec("L")), lambda L: ONE, lambda L: ONE, "")


def test_bindings_respect_choices_and_constraints():
    d = CATALOG["t_limit_L_of_seed"]
    assert list(bindings(d, {"M": (0, 1), "sigma": (-5, 5)})) == [
        {"M": 0, "sigma": 0}, {"M": 0, "sigma": 1}, {"M": 1, "sigma": 0}, {"M": 1, "sigma": 1},
    ]
    t2t = CATALOG["t_to_t_transform"]
    got = list(bindings(t2t, {"a": (-1, 1), "b": (-1, 1)}))
    assert all(b["a"] * b["b"] >= 0 for b in got) and len(got) == 7
    with pytest.raises(SchemaViolation):
        list(bindings(d, {"N": (0, 1)}))


def test_compare_sides_rejects_mixed_kinds():
    with pytest.raises(TypeError):
        compare_sides(ONE, TruncatedSeries(ONE, 4))


def test_series_compare_uses_smaller_order():
    a, b = from_coeffs([1, 1, 1]), from_coeffs([1, 1, 1, 5])
    m = compare_sides(truncate(a, 4), truncate(b, 3))
    assert (m.exponent_times_2, m.lhs_coeff, m.rhs_coeff) == (6, 0, 5)
    assert compare_sides(truncate(a, 4), truncate(b, 2)) is None


def test_eval_at_one_smoke_for_polynomial_entries():
    for d in catalog_table():
        if d.kind != "polynomial":
            continue
        b = d.minimal_binding()
        for name in ("L", "M"):
            if name in b:
                b[name] = 3
        try:
            lhs, rhs = evaluate(d.id, b)
        except SchemaViolation:
            continue
        assert eval_at_one(lhs) == eval_at_one(rhs)


def test_integer_exponents_on_catalog_sides():
    for ident, b in [
        ("seed", {"L": 5, "M": 3}),
        ("nu0_s", {"L": 4, "M": 3}),
        ("s_hierarchy", {"nu": 1, "L": 3, "M": 3}),
        ("t_hierarchy", {"nu": 2, "L": 4, "M": 3}),
    ]:
        for side in evaluate(ident, b):
            assert side.is_integer_exponents()
            assert not side or side.valuation_x2() >= 0


def test_kr1_coefficients_are_nonnegative():
    lhs, _ = evaluate("kr1", {"order": 120})
    assert min(lhs.coefficients()) >= 0
