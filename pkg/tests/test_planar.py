"""Staircase combinatorics in two variables."""
from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from monogens import planar
from monogens.core import ideal, maximal_ideal_power, mu, power, product, pure_power_ideal
from monogens.errors import HypothesisError, InputError
from monogens.harness import corpus
from monogens.harness.parsing import parse_ideal

DIAGONAL_1 = parse_ideal("x^7, x^6*y^2, x^5*y^3, x^3*y^4, y^7")
DIAGONAL_2 = parse_ideal("x^7, x^6*y^4, x^4*y^5, x^3*y^6, y^8")


@st.composite
def staircases(draw, min_m=1, max_m=6, B=10, height_two=False):
    m = draw(st.integers(min_m, max_m))
    a = sorted(draw(st.lists(st.integers(0, B), min_size=m, max_size=m, unique=True)), reverse=True)
    b = sorted(draw(st.lists(st.integers(0, B), min_size=m, max_size=m, unique=True)))
    if height_two:
        a = [v - a[-1] for v in a]
        b = [v - b[0] for v in b]
    return planar.Staircase(tuple(a), tuple(b)).to_ideal()


def test_staircase_round_trip():
    st_ = planar.staircase(DIAGONAL_1)
    assert st_.a == (7, 6, 5, 3, 0) and st_.b == (0, 2, 3, 4, 7)
    assert st_.to_ideal() == DIAGONAL_1
    with pytest.raises(InputError):
        planar.Staircase((1, 2), (0, 1))
    with pytest.raises(InputError):
        planar.staircase(maximal_ideal_power(3, 1))


def test_normalize_factors_out_the_gcd():
    shift, J = planar.normalize(ideal((4, 1), (2, 3), (1, 6)))
    assert shift == (1, 1)
    assert J == ideal((3, 0), (1, 2), (0, 5))
    assert planar.is_height_two(J)


@given(staircases())
def test_marked_positions_biject_with_square_generators(I):
    marked = [p.monomial for p in planar.triangle(I) if p.marked]
    assert len(marked) == len(set(marked))
    assert set(marked) == set(power(I, 2).gens)


def test_example_diagonal_one():
    marked = {p.monomial for p in planar.marked_positions(DIAGONAL_1)}
    assert marked == {(14, 0), (13, 2), (12, 3), (10, 4), (7, 7), (9, 6), (5, 10), (6, 8), (3, 11), (0, 14)}
    d7 = {p.monomial: p.marked for p in planar.diagonal(DIAGONAL_1, 7)}
    assert d7 == {(8, 7): False, (6, 9): False}
    # (10, 4) is u_1 u_4, which lies on D_5
    (p,) = [p for p in planar.triangle(DIAGONAL_1) if p.monomial == (10, 4)]
    assert (p.i, p.j) == (1, 4)


def test_example_diagonal_two():
    cells = planar.triangle(DIAGONAL_2)
    assert sum(p.marked for p in cells) == 9 == mu(power(DIAGONAL_2, 2))
    assert not any(p.marked for p in cells if p.i == 2)
    # u_2 u_5 and u_4^2 are the same monomial; the row-4 copy carries the mark
    twins = [p for p in cells if p.monomial == (6, 12)]
    assert [(p.i, p.j, p.marked) for p in twins] == [(2, 5, False), (4, 4, True)]


@given(staircases(min_m=2))
def test_safe_area_soundness(I):
    u = planar.ordered_generators(I)
    m = len(u)
    prod = {(i, j): (u[i - 1][0] + u[j - 1][0], u[i - 1][1] + u[j - 1][1])
            for i, j in planar.triangle_indices(m)}
    for (i, j), w in prod.items():
        for k, l in planar.safe_area_indices(m, i, j):
            v = prod[(k, l)]
            assert not (v[0] <= w[0] and v[1] <= w[1])
            assert not (w[0] <= v[0] and w[1] <= v[1])


@given(staircases(min_m=3))
def test_corner_products_are_generators_of_the_square(I):
    m = mu(I)
    marked = {(p.i, p.j) for p in planar.triangle(I) if p.marked}
    assert set(planar.corner_positions(m)) <= marked
    assert mu(power(I, 2)) >= 4


def test_safe_area_relation_is_not_symmetric():
    # u_1^2 lies in the safe area of u_1 u_2, but not the other way round
    assert (1, 1) in planar.safe_area_indices(5, 1, 2)
    assert (1, 2) not in planar.safe_area_indices(5, 1, 1)


@given(staircases(min_m=2, max_m=5), st.data())
def test_nonempty_common_safe_area_blocks_generation(I, data):
    idx = planar.triangle_indices(mu(I))
    S = data.draw(st.lists(st.sampled_from(idx), min_size=1, max_size=len(idx), unique=True))
    if planar.common_safe_area_indices(mu(I), S):
        assert planar.generated_by_positions(I, S) != power(I, 2)


def test_unblocked_sets_with_forced_corners():
    counts = [len(planar.unblocked_position_sets(m, m, planar.corner_positions(m))) for m in (4, 5, 6, 7)]
    assert counts == [0, 0, 3, 74]
    exception = frozenset({(1, 1), (1, 2), (2, 2), (6, 6), (1, 7), (6, 7), (7, 7)})
    assert exception in planar.unblocked_position_sets(7, 7, planar.corner_positions(7))


def test_convexity_naming():
    assert planar.is_concave([0, 1, 3, 6]) and not planar.is_convex([0, 1, 3, 6])
    assert planar.is_convex([0, 3, 5, 6])
    assert planar.is_concave([1, 2]) and planar.is_convex([1, 2])


@given(st.integers(2, 7), st.integers(0, 2 ** 32))
def test_shared_shape_predicts_the_square(max_gens, seed):
    I = corpus.random_shaped_staircase(seed, 0, max_gens, 4)
    pred = planar.predicted_square_generators(I)
    assert pred is not None
    assert {p.monomial for p in pred} == set(power(I, 2).gens)
    assert mu(power(I, 2)) == 2 * mu(I) - 1


def test_example_diagonal_one_has_no_shared_shape():
    assert planar.predicted_square_generators(DIAGONAL_1) is None


def test_lexsegment_shape_matches_definition():
    for I in corpus.enumerate_staircases(4, 5):
        st_ = planar.staircase(I)
        top = st_.a[0] + st_.b[-1] + 2
        assert planar.is_lexsegment(I) == planar.lexsegment_by_definition(I, top), I


def test_lexsegment_examples():
    assert planar.is_lexsegment(ideal((3, 0), (2, 1), (1, 3)))
    assert not planar.is_lexsegment(parse_ideal("x^6, x^5*y^2, x^4*y^3, x^2*y^4, y^6"))
    assert planar.lexsegment_generate(3, 1) == ideal((3, 0), (2, 1))
    assert planar.lexsegment_generate(4, 4) == maximal_ideal_power(2, 4)
    I = planar.lexsegment_generate(5, 3)
    assert mu(power(I, 2)) == 7
    with pytest.raises(InputError):
        planar.lexsegment_generate(2, 3)


def test_contracted():
    assert not planar.is_contracted(ideal((2, 0), (0, 2)))
    for d in range(1, 5):
        assert planar.is_contracted(maximal_ideal_power(2, d))


def test_classify_product_equality_examples():
    x = ideal((1, 0), (0, 1))
    r = planar.classify_product_equality(x, x)
    assert r.count_equal and r.shape == (1, 1, 1)
    sq = power(pure_power_ideal((2, 2)), 2)
    r = planar.classify_product_equality(sq, pure_power_ideal((2, 2)))
    assert (r.mu_product, r.shape) == (4, (2, 2, 1))
    r = planar.classify_product_equality(ideal((3, 0), (2, 1), (0, 3)), pure_power_ideal((3, 3)))
    assert not r.count_equal and r.shape is None and r.mu_product >= 5
    with pytest.raises(HypothesisError):
        planar.classify_product_equality(ideal((2, 0), (0, 3)), x)


def test_binomial_power_shape():
    for a in range(1, 4):
        for r in range(1, 4):
            assert planar.binomial_power_shape(power(pure_power_ideal((a, a)), r)) == (a, r)
    assert planar.binomial_power_shape(ideal((2, 0), (1, 1), (0, 2))) == (1, 2)
    assert planar.binomial_power_shape(ideal((3, 0), (1, 2), (0, 3))) is None


def test_reduction_check():
    assert planar.reduction_check(maximal_ideal_power(2, 3))
    assert not planar.reduction_check(ideal((4, 0), (3, 1), (1, 3), (0, 4)))


def test_sum_power_hypotheses():
    I1, I2 = ideal((2, 0), (0, 2)), ideal((1, 1))
    with pytest.raises(HypothesisError):
        planar.sum_power_distributes([I1, I2], 2)
    assert not planar.sum_power_distributes([I1, I2], 2, check_hypotheses=False)
    J1, J2 = ideal((2, 0), (1, 1), (0, 2)), ideal((2, 0), (0, 2))
    assert planar.sum_power_distributes([J1, J2], 3)


@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 2 ** 32))
def test_back_product_matches_direct_product(step, r, seed):
    from monogens.harness.rng import SplitMix64
    rng = SplitMix64(seed)
    ideals = [corpus.random_progression_ideal(rng, step, 4, 6) for _ in range(r)]
    bp = planar.back_product(ideals, step)
    P = ideals[0]
    for J in ideals[1:]:
        P = product(P, J)
    assert bp.ideal == P
    assert mu(P) == sum(mu(J) for J in ideals) - (r - 1)
    assert bp.strictly_decreasing


def test_progression_single_ideal_powers():
    I = ideal((3, 0), (2, 1), (1, 4), (0, 6))  # step 1, s = 0, t = 3
    for k in range(1, 4):
        assert mu(power(I, k)) == k * 3 + 1


def test_square_counts_match_core():
    for m in range(1, 6):
        B = m + 2
        a = np.array([c[::-1] for c in combinations(range(B + 1), m)])
        b = np.array(list(combinations(range(B + 1), m)))
        counts = planar.square_counts(a, b)
        for p in range(0, len(a), 3):
            for q in range(0, len(b), 2):
                I = planar.Staircase(tuple(map(int, a[p])), tuple(map(int, b[q]))).to_ideal()
                assert counts[p, q] == mu(power(I, 2))
