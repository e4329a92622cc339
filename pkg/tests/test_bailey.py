from itertools import product

import pytest

from qtrinomial import identities as I
from qtrinomial.bailey import (
    TrinomialPair,
    WindowTooSmall,
    bailey_T,
    iterate_T,
    s_expansion,
    seed_pair,
    t_to_s_admissible,
    t_to_s_sides,
    t_to_t_sides,
    transform_S_step,
    transform_T_step,
)
from qtrinomial.poly import ONE, ZERO, monomial

GRID = list(product(range(5), range(5)))


def test_seed_pair_is_a_valid_pair():
    assert seed_pair(6).check(5, 5)
    assert seed_pair(3).check(4, 4)


def test_T_step_at_origin():
    assert transform_T_step(seed_pair(), 0, 0) == ONE
    assert transform_S_step(seed_pair(), 0, 0) == ONE


def test_alpha_zero_is_preserved():
    p = seed_pair()
    for nu in range(4):
        assert iterate_T(p, nu).alpha(0) == p.alpha(0) == ONE


def test_new_multipliers():
    p = bailey_T(seed_pair())
    assert (p.m, p.n) == (2, 1)
    assert (bailey_T(p).m, bailey_T(p).n) == (3, 1)


def test_one_T_step_gives_the_first_hierarchy_level():
    p = bailey_T(seed_pair())
    for L, M in GRID:
        assert p.F(L, M) == I.t_hierarchy_lhs(1, L, M)


@pytest.mark.parametrize("nu", [1, 2])
def test_iterated_pair_keeps_its_trinomial_expansion(nu):
    # the derived pair matches both the direct multi-sum and the trinomial side
    p = iterate_T(seed_pair(), nu)
    for L, M in GRID:
        lhs = p.F(L, M)
        assert lhs == I.t_hierarchy_lhs(nu, L, M)
        assert lhs == p.expansion(L, M) == I.t_hierarchy_rhs(nu, L, M)


def test_S_step_on_the_base_three_seed():
    p = seed_pair(3)
    for L, M in GRID:
        lhs = transform_S_step(p, L, M)
        assert lhs == I.nu0_s_lhs(L, M) == s_expansion(p, L, M)


@pytest.mark.parametrize("nu", [1, 2])
def test_S_step_after_T_steps_gives_the_S_hierarchy(nu):
    p = iterate_T(seed_pair(3), nu)
    for L, M in GRID:
        lhs = transform_S_step(p, L, M)
        assert lhs == I.s_hierarchy_lhs(nu, L, M)
        assert s_expansion(p, L, M) == I.s_hierarchy_rhs(nu, L, M) == lhs


def test_window_too_small():
    p = seed_pair(6, window=(2, 2))
    assert p.entry(2, 2) == I.seed_lhs(2, 2)
    assert p.entry(-1, 0) == ZERO
    with pytest.raises(WindowTooSmall):
        p.entry(3, 0)
    with pytest.raises(WindowTooSmall):
        transform_T_step(p, 3, 1)


def test_pair_validation():
    with pytest.raises(ValueError):
        TrinomialPair(lambda L, M: ONE, lambda j: ONE, 0, 0)
    with pytest.raises(ValueError):
        TrinomialPair(lambda L, M: ONE, lambda j: ONE, 1, 1, 1, window=(2, 2))
    # the same bogus family passes when validation is switched off
    TrinomialPair(lambda L, M: ONE, lambda j: ONE, 1, 1, 1, window=(2, 2), validate=False)


def test_T_to_T_holds_for_same_sign_shifts():
    for L, M, a, b in product(range(6), range(6), range(-4, 5), range(-4, 5)):
        if a * b >= 0:
            lhs, rhs = t_to_t_sides(L, M, a, b)
            assert lhs == rhs


def test_T_to_T_fails_somewhere_for_opposite_signs():
    bad = [
        (L, M, a, b)
        for L, M, a, b in product(range(5), range(5), (-2, -1), (1, 2))
        if t_to_t_sides(L, M, a, b)[0] != t_to_t_sides(L, M, a, b)[1]
    ]
    assert bad


def test_T_to_S_admissible_points_satisfy_the_identity():
    for L, M, a, b in product(range(6), range(6), range(-4, 5), range(-4, 5)):
        lhs, rhs = t_to_s_sides(L, M, a, b)
        if t_to_s_admissible(L, M, a, b):
            assert lhs == rhs, (L, M, a, b)
        elif a * b >= 0:
            # for same-sign shifts the extra condition is sharp
            assert lhs != rhs, (L, M, a, b)


def test_T_to_S_extra_condition_is_needed():
    lhs, rhs = t_to_s_sides(1, 0, 1, 0)
    assert not t_to_s_admissible(1, 0, 1, 0) and lhs != rhs


def test_T_to_T_with_base_six():
    for L, M in product(range(4), range(4)):
        lhs, rhs = t_to_t_sides(L, M, 1, 1, 6)
        assert lhs == rhs
        assert not rhs or rhs.valuation_x2() >= 6


def test_seed_alpha_values():
    p = seed_pair()
    assert p.alpha(1) == monomial(5) and p.alpha(-1) == monomial(1)
