from itertools import product

import pytest

from qtrinomial.identities import seed_lhs, seed_rhs
from qtrinomial.poly import ONE, ZERO, monomial, poly_sum
from qtrinomial.recurrence import (
    G,
    F,
    S_hat_from_F,
    S_hat_from_G,
    boundary_values,
    check_boundaries,
    check_F_recurrence,
    check_G_recurrence,
    check_sum_recurrence,
    f_coefficients,
    g_coefficients,
    g_residual,
    reconstruct_S,
    sum_residual,
)


def _flip(coefficients, index):
    def mutated(L, M):
        cs = coefficients(L, M)
        c, shift = cs[index]
        cs[index] = (-c, shift)
        return cs

    return mutated


def test_G_examples():
    assert G(0, 0, 0) == ONE
    assert G(1, 0, 0) == ZERO
    assert G(2, 1, 1) == ONE + monomial(6) + monomial(12)
    assert G(3, 0, -1) == ZERO


def test_F_examples():
    assert F(0, 0, 0, 0) == ONE
    assert F(1, 1, 0, 1) == monomial(5)
    # [M + k, k + j] vanishes
    assert F(1, 0, 0, 1) == ZERO


def test_G_recurrence_origin_and_grid():
    assert check_G_recurrence(0, 0, 0)
    for L, M, k in product(range(11), range(6), range(6)):
        assert check_G_recurrence(L, M, k)


def test_F_recurrence_origin_and_grid():
    assert check_F_recurrence(0, 0, 0, 0)
    for L, M, k, j in product(range(9), range(5), range(5), range(-4, 5)):
        assert check_F_recurrence(L, M, k, j)


@pytest.mark.parametrize("index", range(6))
def test_mutated_G_coefficient_is_caught(index):
    bad = _flip(g_coefficients, index)
    assert not all(check_G_recurrence(L, M, k, bad) for L, M, k in product(range(6), range(3), range(3)))


@pytest.mark.parametrize("index", range(10))
def test_mutated_F_coefficient_is_caught(index):
    bad = _flip(f_coefficients, index)
    assert not all(
        check_F_recurrence(L, M, k, j, bad)
        for L, M, k, j in product(range(6), range(3), range(3), range(-2, 3))
    )


def test_summands_sum_to_both_sides():
    for L, M in product(range(8), range(4)):
        assert S_hat_from_G(L, M) == seed_lhs(L, M)
        assert S_hat_from_F(L, M) == seed_rhs(L, M)


def test_sum_recurrence_both_sides():
    assert check_sum_recurrence("lhs", 0, 0)
    for L, M in product(range(13), range(7)):
        assert not sum_residual("lhs", L, M)
        assert not sum_residual("rhs", L, M)


def test_G_residuals_telescope_into_the_sum_residual():
    # the k-1 shift in the G recurrence reindexes away once k runs over everything
    for L, M in product(range(8), range(4)):
        total = poly_sum(g_residual(L, M, k) for k in range(-1, L + 4))
        assert total == ZERO == sum_residual(S_hat_from_G, L, M)


def test_sum_recurrence_rejects_a_wrong_family():
    assert any(sum_residual(lambda L, M: seed_lhs(L, M) + 1, L, M) for L, M in product(range(4), range(3)))


def test_boundary_examples():
    assert boundary_values(3, 0) == ZERO == seed_lhs(3, 0)
    assert boundary_values(0, 7) == ONE == seed_rhs(0, 7)
    assert boundary_values(1, 1) == monomial(1) + monomial(3) + monomial(5)
    assert boundary_values(5, 5) is None


def test_boundaries_hold_on_both_sides():
    assert check_boundaries(20, 10)


def test_reconstruction_matches_both_sides():
    S = reconstruct_S(9, 3)
    assert len(S) == 10 * 4
    for (L, M), v in S.items():
        assert v == seed_lhs(L, M) == seed_rhs(L, M)


def test_reconstruction_keeps_boundaries_and_is_deterministic():
    S = reconstruct_S(9, 3)
    for (L, M), v in S.items():
        if M == 0 or L <= 2:
            assert v == boundary_values(L, M)
    assert reconstruct_S(9, 3) == S
    # a bigger window agrees on the overlap
    T = reconstruct_S(11, 4)
    assert all(T[key] == v for key, v in S.items())


def test_reconstruction_needs_three_rows():
    with pytest.raises(ValueError):
        reconstruct_S(2, 3)
