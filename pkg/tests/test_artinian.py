"""Socles, types and irreducible decompositions against an unpruned box scan."""
from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monogens import artinian
from monogens.core import ideal, maximal_ideal_power, mu, product, pure_power_exponents
from monogens.errors import HypothesisError, ResourceCeilingError
from monogens.harness import corpus
from monogens.harness.parsing import parse_ideal


def socle_by_box(I):
    bounds = pure_power_exponents(I)
    out = []
    for u in itertools.product(*(range(b) for b in bounds)):
        if u in I:
            continue
        if all(tuple(e + (k == i) for k, e in enumerate(u)) in I for i in range(I.arity)):
            out.append(u)
    return sorted(out)


@st.composite
def artinian_ideals(draw, max_arity=3, max_exp=4):
    n = draw(st.integers(2, max_arity))
    params = corpus.RandomIdealParams(mode="artinian", arity=n, max_gens=5, max_exp=max_exp)
    return corpus.random_ideal(params, draw(st.integers(0, 2 ** 40)), 0)


@given(artinian_ideals())
def test_socle_matches_box_scan(I):
    assert artinian.socle(I) == socle_by_box(I)


@given(artinian_ideals())
def test_decomposition_rebuilds_and_is_irredundant(I):
    comps = artinian.irreducible_decomposition(I)
    assert artinian.intersect_components(comps) == I
    assert len(comps) == artinian.cm_type(I)
    for k in range(len(comps)):
        rest = comps[:k] + comps[k + 1:]
        if rest:
            assert artinian.intersect_components(rest) != I


@given(artinian_ideals(max_arity=2, max_exp=8))
def test_two_variable_duality(I):
    assert artinian.cm_type(I) == mu(I) - 1


def test_worked_socles():
    I = ideal((2, 0), (1, 1), (0, 3))
    assert artinian.socle(I) == [(0, 2), (1, 0)]
    assert [c.exponents for c in artinian.irreducible_decomposition(I)] == [(1, 3), (2, 1)]
    m2 = maximal_ideal_power(3, 2)
    assert artinian.socle(m2) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert artinian.cm_type(maximal_ideal_power(2, 2)) == 2


def test_type_theorem():
    x = maximal_ideal_power(2, 1)
    with pytest.raises(HypothesisError) as info:
        artinian.check_type_theorem(x, x)
    assert info.value.type == 2
    assert artinian.check_type_theorem(x, maximal_ideal_power(2, 2)).details["type"] == 3
    assert artinian.check_type_theorem(*[maximal_ideal_power(3, 1)] * 2).details["type"] == 3


def test_baby_and_rough():
    x = maximal_ideal_power(2, 1)
    assert artinian.check_baby(x, x).details["mu_product"] == 3
    assert artinian.check_baby(maximal_ideal_power(2, 2), x).details["mu_product"] == 4
    f = artinian.check_rough(*[maximal_ideal_power(3, 1)] * 2)
    assert f.holds and f.details["mu_product"] == 6 == f.details["bound"]
    assert all(w is not None for w in f.details["witnesses"].values())


def test_rough_on_cold_pair():
    I = parse_ideal("x^5, y^5, z^5, x*y*z^3, x*y^2*z^2, x^2*y^3, x^2*z^3, x^3*y^2, x^3*y*z, x^3*z^2")
    J = parse_ideal("x^5, y^5, z^5, x^2*y^2*z, x^2*y*z^2, x*z^4, x*y^3*z, y*z^4, y^2*z^3, y^3*z^2,"
                    " y^4*z, x*y^4, x^4*z, x^4*y")
    f = artinian.check_rough(I, J)
    assert f.holds and mu(product(I, J)) >= 6


@given(artinian_ideals(), st.data())
def test_projection_commutes_with_products(I, data):
    n = I.arity
    params = corpus.RandomIdealParams(mode="artinian", arity=n, max_gens=4, max_exp=4)
    J = corpus.random_ideal(params, data.draw(st.integers(0, 2 ** 40)), 1)
    for keep in itertools.combinations(range(n), 2):
        assert artinian.project(product(I, J), keep) == product(artinian.project(I, keep),
                                                                artinian.project(J, keep))


def test_guards():
    with pytest.raises(HypothesisError):
        artinian.socle(ideal((1, 1)))
    with pytest.raises(ResourceCeilingError):
        artinian.socle(maximal_ideal_power(3, 30), box_ceiling=1000)
