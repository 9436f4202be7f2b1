"""Ideal arithmetic against brute-force membership on a bounding box."""
from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monogens.core import (
    MonomialIdeal,
    contains,
    divides,
    equigenerated_degree,
    gcd_factor,
    ideal,
    ideal_sum,
    intersect,
    is_artinian,
    is_principal,
    maximal_ideal_power,
    minimalize,
    monomial,
    mu,
    order,
    power,
    powers,
    product,
    pure_power_ideal,
    unit_ideal,
    zero_ideal,
)
from monogens.errors import DegenerateIdealError, InputError, ResourceCeilingError

from .conftest import box, ideal_pairs, ideals, in_naive


def naive_minimal(rows):
    rows = set(rows)
    return sorted(u for u in rows if not any(v != u and all(a <= b for a, b in zip(v, u)) for v in rows))


@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=12))
def test_minimalize_matches_quadratic_filter(rows):
    assert list(minimalize(rows).gens) == naive_minimal(rows)


@given(st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)), min_size=1, max_size=15))
def test_two_variable_sweep_matches_general_path(rows):
    assert list(minimalize(rows).gens) == naive_minimal(rows)


@given(ideal_pairs())
def test_product_membership(pair):
    I, J = pair
    P = product(I, J)
    bound = max(max(g) for g in I.gens) + max(max(g) for g in J.gens) + 1
    prods = [tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens]
    for u in box(I.arity, bound):
        assert (u in P) == in_naive(prods, u)
    assert list(P.gens) == naive_minimal(prods)


@given(ideal_pairs())
def test_intersection_and_sum_membership(pair):
    I, J = pair
    meet, join = intersect(I, J), ideal_sum(I, J)
    bound = max(max(g) for g in I.gens + J.gens) + 1
    for u in box(I.arity, bound):
        assert (u in meet) == (u in I and u in J)
        assert (u in join) == (u in I or u in J)


@given(ideals(max_exp=3, max_gens=3), st.integers(0, 3))
def test_power_is_repeated_product(I, k):
    expected = unit_ideal(I.arity)
    for _ in range(k):
        expected = product(expected, I)
    assert power(I, k) == expected
    assert powers(I, k)[k] == expected


def test_operators_match_functions():
    I, J = ideal((2, 0), (0, 1)), ideal((1, 0), (0, 2))
    assert I * J == product(I, J)
    assert I & J == intersect(I, J)
    assert I + J == ideal_sum(I, J)
    assert I ** 3 == power(I, 3)
    assert (1, 1) in I and contains(I, (2, 0))


def test_corollary_yes_passage_products():
    assert product(ideal((3, 0), (1, 2)), ideal((2, 1), (0, 3))) == ideal((1, 5), (3, 3), (5, 1))
    assert product(ideal((2, 0), (0, 1)), ideal((1, 0), (0, 2))) == ideal((3, 0), (1, 1), (0, 3))
    assert intersect(ideal((2, 0), (0, 1)), ideal((1, 0), (0, 2))) == ideal((2, 0), (1, 1), (0, 2))


def test_zero_and_unit_ideals():
    Z, U = zero_ideal(2), unit_ideal(2)
    I = ideal((1, 0), (0, 1))
    assert product(Z, I).is_zero
    assert product(U, I) == I
    assert power(I, 0) == U
    assert intersect(Z, I).is_zero
    assert ideal_sum(Z, I) == I
    assert not is_artinian(U)


def test_invariants():
    I = ideal((6, 0), (5, 2), (4, 3), (2, 4), (0, 6))
    assert mu(I) == 5 and order(I) == 6
    assert equigenerated_degree(I) is None
    assert equigenerated_degree(maximal_ideal_power(3, 3)) == 3
    assert mu(maximal_ideal_power(3, 3)) == 10
    assert is_principal(ideal((2, 3)))
    assert is_artinian(pure_power_ideal((2, 3, 1)))
    assert not is_artinian(ideal((1, 1, 0), (0, 0, 1)))


def test_gcd_factor():
    w, J = gcd_factor(ideal((3, 1), (1, 4)))
    assert w == (1, 1)
    assert J == ideal((2, 0), (0, 3))


def test_validation():
    with pytest.raises(InputError):
        monomial(1, -1)
    with pytest.raises(InputError):
        divides((1,), (1, 2))
    with pytest.raises(DegenerateIdealError):
        minimalize([])
    with pytest.raises(InputError):
        minimalize([(1, 2), (1,)])
    with pytest.raises(InputError):
        MonomialIdeal(2, ((0, 1), (1, 1)))  # not an antichain


def test_powers_ceiling():
    with pytest.raises(ResourceCeilingError):
        powers(maximal_ideal_power(3, 2), 4, max_generators=20)
