"""Acceptance criteria, one test per line item.

Tolerances: every value is an exact integer (zero tolerance).  Time
budgets: fixtures under 10 s; exhaustive small-ideal sweep under 600 s on
one worker, with 8 workers at least 80% of linear speedup.
"""
from __future__ import annotations

import json
import os
import time

import pytest

from monogens import fiber
from monogens.core import mu, power, pure_power_ideal
from monogens.harness import report
from monogens.harness.corpus import staircase_count
from monogens.harness.parsing import parse_ideal
from monogens.harness.suites import (
    FAIL,
    PASS,
    SUITES,
    RunConfig,
    Suite,
    Verdict,
    register,
    replay,
    run_suite,
)

FIXTURE_BUDGET_S = 10.0
SMALL_BUDGET_S = 600.0
SPEEDUP_WORKERS = 8
SPEEDUP_EFFICIENCY = 0.8  # "linear within 20%"
NEW_RANDOM_PAIRS = 10_000
MIN_RANDOM = 1_000


def _assert_clean(r):
    assert r.counts[FAIL] == 0, [v.to_dict() for v in r.verdicts if v.status == FAIL][:3]
    assert r.counts["ceiling"] == 0 and not r.partial


# 1 ------------------------------------------------------------------------------

def test_criterion_1_paper_fixtures_exact_and_fast():
    start = time.perf_counter()
    r = run_suite("paper-fixtures")
    elapsed = time.perf_counter() - start
    _assert_clean(r)
    names = {v.case.split(":", 1)[1] for v in r.verdicts if v.status == PASS}
    assert names >= {
        "failure-square", "failure-series", "cube-3", "conca-1", "conca-2", "conca-3",
        "diagonal-1-marked", "diagonal-2-marked", "yes-pair-1", "yes-pair-2", "cold-b",
    }
    assert elapsed < FIXTURE_BUDGET_S


# 2 ------------------------------------------------------------------------------

@pytest.fixture(scope="module")
def small_single():
    cfg = RunConfig(suite="small", max_gens=7, max_exp=12, workers=1)
    start = time.perf_counter()
    r = run_suite("small", cfg)
    return r, time.perf_counter() - start


@pytest.mark.slow
def test_criterion_2_exhaustive_small_ideals(small_single):
    r, elapsed = small_single
    _assert_clean(r)
    exhaustive = staircase_count(7, 12)
    # the single-generator staircases are principal and fall outside the statement
    assert r.counts["hypothesis"] == 13 ** 2
    assert r.counts[PASS] == exhaustive - 13 ** 2 + 1000
    assert elapsed < SMALL_BUDGET_S


@pytest.mark.slow
def test_criterion_2_parallel_speedup(small_single):
    _, single = small_single
    cfg = RunConfig(suite="small", max_gens=7, max_exp=12, workers=SPEEDUP_WORKERS)
    start = time.perf_counter()
    r = run_suite("small", cfg)
    parallel = time.perf_counter() - start
    _assert_clean(r)
    speedup = single / parallel
    assert speedup >= SPEEDUP_WORKERS * SPEEDUP_EFFICIENCY, (
        f"speedup {speedup:.2f} with {SPEEDUP_WORKERS} workers on {os.cpu_count()} CPU(s)")


# 3 ------------------------------------------------------------------------------

@pytest.mark.slow
def test_criterion_3_product_equality_classifier():
    r = run_suite("new", RunConfig(suite="new", samples=NEW_RANDOM_PAIRS))
    _assert_clean(r)
    assert r.counts["hypothesis"] == 0
    assert r.counts[PASS] == NEW_RANDOM_PAIRS + 255 ** 2


# 4 ------------------------------------------------------------------------------

INEQUALITY_SUITES = ["shalom", "kill", "museum", "huneke", "freiman", "h2", "baby", "rough", "yes",
                     "brexit", "lexsegment", "truered", "cold", "convex", "bar", "type",
                     "induction", "true", "compare"]


@pytest.mark.parametrize("name", INEQUALITY_SUITES)
def test_criterion_4_inequality_suites(name):
    r = run_suite(name, RunConfig(suite=name, samples=MIN_RANDOM))
    _assert_clean(r)
    assert r.counts["total"] >= MIN_RANDOM
    assert r.counts[PASS] > 0


# 5 ------------------------------------------------------------------------------

def test_criterion_5_h_vector_oracle():
    _assert_clean(run_suite("hvector", RunConfig(suite="hvector", samples=MIN_RANDOM)))
    _assert_clean(run_suite("difference", RunConfig(suite="difference", samples=MIN_RANDOM, arity=4)))
    failure = parse_ideal("x^6, x^5*y^2, x^4*y^3, x^2*y^4, y^6")
    assert fiber.h_vector(failure, 8).h == (1, 3, -1)
    for a in (1, 2, 3):
        for r in (1, 2, 3, 4):
            hv = fiber.h_vector(power(pure_power_ideal((a, a)), r), 8)
            assert hv.h == (1, r - 1) and hv.stabilized


# 6 ------------------------------------------------------------------------------

def test_criterion_6_artinian_duality_and_type():
    _assert_clean(run_suite("decomposition", RunConfig(suite="decomposition", samples=MIN_RANDOM)))
    r = run_suite("type", RunConfig(suite="type", samples=MIN_RANDOM))
    _assert_clean(r)
    (boundary,) = [v for v in r.verdicts if v.case == "boundary:n2-mu2"]
    assert boundary.status == "hypothesis" and "computed type 2" in boundary.detail


# 7 ------------------------------------------------------------------------------

def _strip_duration(text: str) -> dict:
    data = json.loads(text)
    data.pop("duration_ms")
    return data


@pytest.mark.parametrize("name", ["paper-fixtures", "museum", "bar", "brexit"])
def test_criterion_7_reports_are_deterministic(name):
    cfg = RunConfig(suite=name, samples=300, all_verdicts=True)
    first = report.render_report(run_suite(name, cfg), "json")
    second = report.render_report(run_suite(name, cfg), "json")
    assert _strip_duration(first) == _strip_duration(second)
    assert first.split('"duration_ms"')[0] == second.split('"duration_ms"')[0]


def _broken_check(ideals, kw, config):
    # deliberately wrong: claims mu(I^2) = 2 mu(I) - 1 for every staircase
    (I,) = ideals
    return mu(power(I, 2)) == 2 * mu(I) - 1, {"mu": mu(I), "mu2": mu(power(I, 2))}


@pytest.fixture
def broken_suite():
    from monogens.harness import corpus

    def cases(config):
        params = corpus.RandomIdealParams(mode="staircase", min_gens=3, max_gens=6, max_exp=9)
        for i in range(config.samples):
            yield f"random:{i}", (corpus.random_ideal(params, config.seed, i),), None

    register(Suite("broken-for-tests", "injected failure", _broken_check, cases))
    yield "broken-for-tests"
    SUITES.pop("broken-for-tests")


@pytest.mark.parametrize("workers", [1, 2])
def test_criterion_7_injected_failures_replay(broken_suite, workers):
    r = run_suite(broken_suite, RunConfig(suite=broken_suite, samples=200, workers=workers))
    failures = [v for v in r.verdicts if v.status == FAIL]
    assert failures and r.exit_code == 1
    doc = json.loads(report.render_report(r, "json"))
    for item in doc["verdicts"]:
        again = replay(Verdict.from_dict(item))
        assert again.status == FAIL and again.detail == item["detail"]
