"""Parsing, the generator, corpora, suites, search and report rendering."""
from __future__ import annotations

import json
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monogens import planar
from monogens.core import mu
from monogens.errors import InputError, ParseError
from monogens.harness import corpus, report
from monogens.harness.parsing import RedundantGeneratorWarning, format_ideal, ideal_from_rows, parse_ideal
from monogens.harness.rng import SplitMix64
from monogens.harness.search import SearchConfig, counterexample_search
from monogens.harness.suites import RunConfig, get_suite, replay, run_suite

from .conftest import ideals


# -- parsing -------------------------------------------------------------------

def test_parse_examples():
    I = parse_ideal("x^6, x^5*y^2, x^4*y^3, x^2*y^4, y^6")
    assert mu(I) == 5
    J = parse_ideal("x1^2*x2, x3^4", arity=3)
    assert J.rows() == [[0, 0, 4], [2, 1, 0]]
    assert parse_ideal(" x ^ 2 ,y*x ").rows() == [[1, 1], [2, 0]]
    assert parse_ideal("1").is_unit
    assert parse_ideal("0", arity=2).is_zero


def test_parse_redundancy_warning():
    with pytest.warns(RedundantGeneratorWarning):
        I = parse_ideal("x^2, x^2*y")
    assert I.rows() == [[2, 0]]


@pytest.mark.parametrize("text, pos", [("x^-1", 2), ("x^2, w", 5), ("x^2 y", 4), ("x^", 2), ("", 0)])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    assert info.value.position == pos


def test_parse_arity_errors():
    with pytest.raises(InputError):
        parse_ideal("z", arity=2)
    with pytest.raises(InputError):
        parse_ideal("0")


@given(ideals(max_exp=5))
def test_format_parse_round_trip(I):
    assert parse_ideal(format_ideal(I), arity=I.arity) == I
    assert ideal_from_rows(I.rows(), I.arity) == I


def test_wide_arity_names():
    I = parse_ideal("x5^2, x1", arity=5)
    assert format_ideal(I) == "x1, x5^2"


# -- generator and corpora ---------------------------------------------------------

def test_splitmix_reference_values():
    # first outputs for seed 0 as published with the algorithm
    g = SplitMix64(0)
    assert [g.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


@given(st.integers(0, 2 ** 64 - 1), st.integers(0, 10 ** 6), st.integers(1, 50))
def test_below_range_and_determinism(seed, index, n):
    a = SplitMix64.for_item(seed, index)
    b = SplitMix64.for_item(seed, index)
    xs = [a.below(n) for _ in range(5)]
    assert xs == [b.below(n) for _ in range(5)]
    assert all(0 <= x < n for x in xs)


def test_enumerate_staircases_counts():
    assert [(planar.staircase(I).a, planar.staircase(I).b)
            for I in corpus.enumerate_staircases(2, 1, m_min=2)] == [((1, 0), (0, 1))]
    assert list(corpus.enumerate_staircases(1, 0)) == [parse_ideal("1", arity=2)]
    items = list(corpus.enumerate_staircases(3, 3))
    assert len(items) == sum(comb(4, m) ** 2 for m in (1, 2, 3)) == corpus.staircase_count(3, 3)
    assert len(set(items)) == len(items)
    with pytest.raises(InputError):
        list(corpus.enumerate_staircases(4, 2))


def test_equigenerated_family_size():
    assert sum(1 for _ in corpus.equigenerated_planar_family(8)) == 255


def test_random_ideal_modes():
    eq = corpus.RandomIdealParams(mode="equigenerated", arity=2, min_gens=5, max_gens=5,
                                  min_degree=4, max_degree=4, height_full=True)
    I = corpus.random_ideal(eq, 7, 3)
    assert (4, 0) in I.gens and (0, 4) in I.gens and mu(I) == 5
    assert corpus.random_ideal(eq, 7, 3) == I
    sc = corpus.RandomIdealParams(mode="staircase", min_gens=5, max_gens=5, max_exp=10)
    J = corpus.random_ideal(sc, 1, 1)
    assert planar.staircase(J).to_ideal() == J and mu(J) == 5
    with pytest.raises(InputError):
        corpus.RandomIdealParams(mode="cubic")


@given(st.integers(0, 2 ** 40))
def test_structured_families(seed):
    assert planar.is_contracted(corpus.random_contracted(seed, 0, 6, 5))
    assert planar.predicted_square_generators(corpus.random_shaped_staircase(seed, 0, 6, 4)) is not None
    assert planar.is_lexsegment(corpus.random_lexsegment(seed, 0, 6, 8))
    fam = corpus.random_sum_family(seed, 0, 6, 3)
    assert planar.sum_power_distributes(fam, 1)


# -- suites ------------------------------------------------------------------------

def test_unknown_suite():
    with pytest.raises(InputError):
        get_suite("nope")
    assert get_suite("crash").name == "lexsegment"


def test_fixture_suite_keeps_every_verdict():
    r = run_suite("paper-fixtures")
    assert r.counts["fail"] == 0 and len(r.verdicts) == r.counts["total"] == 17


def test_type_boundary_is_hypothesis_not_met():
    r = run_suite("type", RunConfig(suite="type", samples=0))
    (v,) = [v for v in r.verdicts if v.case == "boundary:n2-mu2"]
    assert v.status == "hypothesis" and "type 2" in v.detail


def test_worker_count_does_not_change_verdicts():
    base = dict(suite="museum", samples=150, all_verdicts=True)
    one = run_suite("museum", RunConfig(**base))
    two = run_suite("museum", RunConfig(workers=2, **base))
    assert [v.to_dict() for v in one.verdicts] == [v.to_dict() for v in two.verdicts]
    assert one.counts == two.counts


def test_report_renderers():
    r = run_suite("paper-fixtures")
    data = json.loads(report.render_report(r, "json"))
    assert list(data) == ["suite", "config", "verdicts", "counts", "partial", "duration_ms"]
    assert data["config"]["seed"] == RunConfig().seed
    assert report.render_report(r, "csv").splitlines()[0] == "check,case,status,witness,detail"
    assert "paper-fixtures" in report.render_report(r, "table")


def test_report_dir_writes_figures(tmp_path):
    r = run_suite("paper-fixtures")
    paths = report.write_report_dir(r, tmp_path, "json")
    assert (tmp_path / "paper-fixtures.json").exists()
    assert any(p.suffix == ".png" for p in paths)


def test_replay_of_a_passing_case():
    r = run_suite("paper-fixtures")
    v = r.verdicts[0]
    again = replay(v)
    assert again.status == "pass" and again.detail == v.detail


# -- search --------------------------------------------------------------------------

def test_search_finds_a_failure_shaped_ideal():
    r = counterexample_search(SearchConfig("mu2_lt_2mu_minus_1", "nonequigenerated-staircases", 5, 6))
    (I,) = r.witness
    assert mu(I) == 5 and mu(I * I) == 8 and not r.violation


def test_search_exhausts_equigenerated_pairs():
    r = counterexample_search(SearchConfig("intersection_exceeds_product", "equigenerated-pairs", 7, 6))
    assert r.exhausted and r.witness is None and r.scanned == 63 * 64 // 2


def test_search_config_validation():
    with pytest.raises(InputError):
        SearchConfig("mu2_le_mu", "equigenerated-pairs")
    with pytest.raises(InputError):
        SearchConfig("nope")
    with pytest.raises(InputError):
        counterexample_search(SearchConfig("mu2_le_mu", max_gens=7, max_exp=12, max_cases=1000))
