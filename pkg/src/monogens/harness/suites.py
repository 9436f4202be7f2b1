"""Theorem suites: corpora, per-case checks and the orchestrating runner.

A suite yields cases (ideals plus a few JSON-friendly arguments) from an
exhaustive family and a seeded random family.  Each case is checked by a
pure function that answers pass or fail, or raises HypothesisError when the
statement does not apply.  Cases are grouped into work units which may run
in a process pool; results are merged and sorted by case sequence number, so
the report does not depend on the worker count.
"""
from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields, replace
from itertools import combinations
from math import comb
from typing import Callable

import numpy as np

from .. import artinian, fiber, planar
from ..core import (
    MonomialIdeal,
    equigenerated_degree,
    intersect,
    is_artinian,
    is_principal,
    maximal_ideal_power,
    mu,
    power,
    powers,
    product,
    product_of,
    pure_power_ideal,
)
from ..errors import HypothesisError, InputError, ResourceCeilingError
from . import corpus
from .parsing import format_ideal, ideal_from_rows
from .rng import SplitMix64

PASS, FAIL, HYPOTHESIS, CEILING = "pass", "fail", "hypothesis", "ceiling"
DEFAULT_SEED = 20240917


@dataclass(frozen=True)
class RunConfig:
    """Bounds for one suite run.  ``None`` fields take the suite's defaults."""

    suite: str = "paper-fixtures"
    max_gens: int | None = None
    max_exp: int | None = None
    arity: int | None = None
    k_max: int | None = None
    tail_window: int = 3
    samples: int | None = None
    seed: int = DEFAULT_SEED
    workers: int = 1
    format: str = "table"
    exhaustive: bool = True
    max_generators: int = fiber.DEFAULT_MAX_GENERATORS
    box_ceiling: int = artinian.DEFAULT_BOX_CEILING
    all_verdicts: bool = False

    def __post_init__(self):
        for name in ("max_gens", "max_exp", "arity", "k_max", "samples"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise InputError(f"{name} must be nonnegative")
        if self.workers < 1 or self.tail_window < 1:
            raise InputError("workers and tail_window must be positive")
        if self.max_generators < 1 or self.box_ceiling < 1:
            raise InputError("resource ceilings must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise InputError("seed must be a 64-bit unsigned integer")

    def resolved(self, defaults: dict) -> "RunConfig":
        base = {"max_gens": 6, "max_exp": 10, "arity": 3, "k_max": 4, "samples": 1000}
        base.update(defaults)
        updates = {k: v for k, v in base.items() if getattr(self, k) is None}
        return replace(self, **updates)

    def echo(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "format"}


@dataclass(frozen=True)
class Case:
    seq: int
    case_id: str
    ideals: tuple
    args: tuple = ()  # sorted (key, value) pairs

    @property
    def kwargs(self) -> dict:
        return dict(self.args)


@dataclass(frozen=True)
class Verdict:
    check: str
    case: str
    status: str
    witness: tuple = ()  # ((arity, rows), ...)
    args: tuple = ()
    detail: str = ""
    seq: int = 0

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "case": self.case,
            "status": self.status,
            "witness": [{"arity": n, "rows": [list(r) for r in rows],
                         "text": format_ideal(MonomialIdeal._trusted(n, tuple(map(tuple, rows))))}
                        for n, rows in self.witness],
            "args": {k: v for k, v in self.args},
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data: dict, seq: int = 0) -> "Verdict":
        """Rebuild a verdict from its machine form, re-parsing the witness text."""
        from .parsing import parse_ideal
        witness = []
        for w in data["witness"]:
            I = parse_ideal(w["text"], arity=w["arity"])
            if I.rows() != w["rows"]:
                raise InputError(f"witness text {w['text']!r} disagrees with its rows")
            witness.append((I.arity, I.gens))
        return cls(data["check"], data["case"], data["status"], tuple(witness),
                   tuple(sorted(data["args"].items())), data["detail"], seq)

    def ideals(self) -> tuple:
        return tuple(ideal_from_rows(rows, arity=n) for n, rows in self.witness)


@dataclass
class UnitResult:
    counts: Counter = field(default_factory=Counter)
    verdicts: list = field(default_factory=list)


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    check: Callable  # (ideals, kwargs, config) -> (holds, detail)
    cases: Callable  # (config) -> iterable of (case_id, ideals, args)
    defaults: dict = field(default_factory=dict)
    keep_passes: bool = False
    units: Callable | None = None      # custom (config) -> list of units
    run_unit: Callable | None = None   # custom (unit, config) -> UnitResult


SUITES: dict[str, Suite] = {}


def register(suite: Suite) -> Suite:
    SUITES[suite.name] = suite
    return suite


def get_suite(name: str) -> Suite:
    try:
        return SUITES[ALIASES.get(name, name)]
    except KeyError:
        raise InputError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}") from None


# -- evaluating cases -----------------------------------------------------------

def _witness(ideals) -> tuple:
    return tuple((I.arity, tuple(I.gens)) for I in ideals)


def _fmt_detail(detail) -> str:
    if isinstance(detail, str):
        return detail
    return "; ".join(f"{k}={v}" for k, v in detail.items())


def evaluate(suite: Suite, case: Case, config: RunConfig) -> Verdict:
    try:
        holds, detail = suite.check(case.ideals, case.kwargs, config)
        status = PASS if holds else FAIL
    except HypothesisError as exc:
        status, detail = HYPOTHESIS, str(exc)
    except ResourceCeilingError as exc:
        status, detail = CEILING, str(exc)
    return Verdict(suite.name, case.case_id, status, _witness(case.ideals), case.args,
                   _fmt_detail(detail), case.seq)


def _run_case_unit(unit, config: RunConfig) -> UnitResult:
    suite_name, cases = unit
    suite = SUITES[suite_name]
    out = UnitResult()
    for case in cases:
        v = evaluate(suite, case, config)
        out.counts[v.status] += 1
        if v.status != PASS or suite.keep_passes or config.all_verdicts:
            out.verdicts.append(v)
    return out


def _dispatch(job):
    suite_name, unit, config = job
    suite = SUITES[suite_name]
    if suite.run_unit is not None and not (isinstance(unit, tuple) and unit and unit[0] == "cases"):
        return suite.run_unit(unit, config)
    return _run_case_unit(unit[1:], config)


def build_cases(suite: Suite, config: RunConfig) -> list[Case]:
    out = []
    for seq, (case_id, ideals, args) in enumerate(suite.cases(config)):
        out.append(Case(seq, case_id, tuple(ideals), tuple(sorted(args.items())) if args else ()))
    return out


def make_units(suite: Suite, config: RunConfig, chunk: int = 64) -> list:
    if suite.units is not None:
        return suite.units(config)
    cases = build_cases(suite, config)
    return [("cases", suite.name, cases[i:i + chunk]) for i in range(0, len(cases), chunk)]


@dataclass
class Report:
    suite: str
    config: dict
    verdicts: list
    counts: dict
    duration_ms: int
    partial: bool = False

    @property
    def failed(self) -> bool:
        return self.counts.get(FAIL, 0) > 0

    @property
    def exit_code(self) -> int:
        if self.failed:
            return 1
        if self.partial:
            return 3
        return 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "counts": self.counts,
            "partial": self.partial,
            "duration_ms": self.duration_ms,
        }


def run_suite(name: str, config: RunConfig | None = None) -> Report:
    suite = get_suite(name)
    config = (config or RunConfig(suite=suite.name)).resolved(suite.defaults)
    config = replace(config, suite=suite.name)
    start = time.perf_counter()
    jobs = [(suite.name, unit, config) for unit in make_units(suite, config)]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_dispatch, jobs))
    else:
        results = [_dispatch(job) for job in jobs]
    counts = Counter()
    verdicts = []
    for r in results:
        counts.update(r.counts)
        verdicts.extend(r.verdicts)
    verdicts.sort(key=lambda v: (v.seq, v.case))
    ordered = {k: counts.get(k, 0) for k in (PASS, FAIL, HYPOTHESIS, CEILING)}
    ordered["total"] = sum(counts.values())
    duration = int(round((time.perf_counter() - start) * 1000))
    return Report(suite.name, config.echo(), verdicts, ordered, duration, counts.get(CEILING, 0) > 0)


def replay(verdict: Verdict, config: RunConfig | None = None) -> Verdict:
    """Re-check a verdict's witness in isolation."""
    suite = get_suite(verdict.check)
    config = (config or RunConfig(suite=suite.name)).resolved(suite.defaults)
    case = Case(verdict.seq, verdict.case, verdict.ideals(), verdict.args)
    return evaluate(suite, case, config)


# -- shared corpus helpers -------------------------------------------------------

def _pairs(items):
    for i, I in enumerate(items):
        for J in items[i:]:
            yield I, J


def _random_equigenerated(config: RunConfig, index: int, stream: int = 0, height_full: bool = False,
                          arities=None) -> MonomialIdeal:
    rng = SplitMix64.for_item(config.seed, index, 1000 + stream)
    arities = arities or list(range(2, max(2, config.arity) + 1))
    n = arities[rng.below(len(arities))]
    params = corpus.RandomIdealParams(
        mode="equigenerated", arity=n, min_gens=1, max_gens=config.max_gens + (n if height_full else 0),
        max_exp=config.max_exp, min_degree=1, max_degree=max(1, min(config.max_exp, 6 if n == 2 else 4)),
        height_full=height_full)
    return corpus.random_ideal(params, config.seed ^ (stream * 0x9E37), index)


def _staircase_params(config: RunConfig, height_full=True, min_gens=2):
    return corpus.RandomIdealParams(mode="staircase", arity=2, min_gens=min_gens,
                                    max_gens=max(min_gens, config.max_gens), max_exp=config.max_exp,
                                    height_full=height_full)


def _artinian_params(config: RunConfig, n: int):
    return corpus.RandomIdealParams(mode="artinian", arity=n, min_gens=1, max_gens=config.max_gens,
                                    max_exp=config.max_exp)


def _height_two_staircases(m_max, B):
    for I in corpus.enumerate_staircases(m_max, B):
        if planar.is_height_two(I) and not is_principal(I):
            yield I


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise HypothesisError(message)


def _proper(*ideals):
    for I in ideals:
        _require(not I.is_zero and not I.is_unit, "zero and unit ideals are excluded")


# -- suite: shalom -------------------------------------------------------------

def _check_shalom(ideals, kw, config):
    I, J = ideals
    _proper(I, J)
    _require(equigenerated_degree(I) is not None and equigenerated_degree(J) is not None,
             "both ideals must be equigenerated")
    m = mu(product(I, J))
    bound = mu(I) + mu(J) - 1
    holds = m >= bound
    if not is_principal(I) and not is_principal(J):
        holds = holds and m > max(mu(I), mu(J))
    return holds, {"mu_IJ": m, "bound": bound}


def _cases_shalom(config):
    if config.exhaustive:
        fam = list(corpus.equigenerated_planar_family(4))
        for k, (I, J) in enumerate(_pairs(fam)):
            yield f"exhaustive:{k}", (I, J), None
    for i in range(config.samples):
        rng = SplitMix64.for_item(config.seed, i, 7)
        n = 2 + rng.below(max(1, config.arity - 1))
        I = _random_equigenerated(config, 2 * i, 0, arities=[n])
        J = _random_equigenerated(config, 2 * i + 1, 0, arities=[n])
        yield f"random:{i}", (I, J), None


register(Suite("shalom", "mu(IJ) >= mu(I) + mu(J) - 1 for equigenerated I, J",
               _check_shalom, _cases_shalom))


# -- suite: kill -----------------------------------------------------------------

def _check_kill(ideals, kw, config):
    (I,) = ideals
    _proper(I)
    _require(equigenerated_degree(I) is not None, "ideal must be equigenerated")
    vals = [mu(P) for P in powers(I, config.k_max, config.max_generators)]
    m = vals[1]
    holds = all(vals[k] >= k * (m - 1) + 1 for k in range(1, config.k_max + 1))
    contracted = I.arity == 2 and planar.is_contracted(I)
    if contracted:
        holds = holds and all(vals[k] == k * (m - 1) + 1 for k in range(1, config.k_max + 1))
    return holds, {"mu": vals, "contracted": contracted}


def _cases_kill(config):
    if config.exhaustive:
        for k, I in enumerate(corpus.equigenerated_planar_family(6)):
            yield f"exhaustive:{k}", (I,), None
    for i in range(config.samples):
        yield f"random:{i}", (_random_equigenerated(config, i),), None


register(Suite("kill", "mu(I^k) >= k(mu(I) - 1) + 1 for equigenerated I; equality when contracted",
               _check_kill, _cases_kill, defaults={"k_max": 4, "max_gens": 8, "max_exp": 6}))


# -- suite: museum ----------------------------------------------------------------

def _check_museum(ideals, kw, config):
    I, J = ideals
    _proper(I, J)
    _require(I.arity == 2 and is_artinian(I) and is_artinian(J), "needs height-two ideals in two variables")
    m = mu(intersect(I, J))
    return m <= mu(I) + mu(J) - 1, {"mu_intersection": m, "bound": mu(I) + mu(J) - 1}


def _cases_planar_pairs(config, exhaustive_bounds=(3, 3)):
    if config.exhaustive:
        fam = list(_height_two_staircases(*exhaustive_bounds))
        for k, (I, J) in enumerate(_pairs(fam)):
            yield f"exhaustive:{k}", (I, J), None
    params = _staircase_params(config)
    for i in range(config.samples):
        I = corpus.random_ideal(params, config.seed, 2 * i)
        J = corpus.random_ideal(params, config.seed, 2 * i + 1)
        yield f"random:{i}", (I, J), None


register(Suite("museum", "mu(I cap J) <= mu(I) + mu(J) - 1 for height-two ideals in two variables",
               _check_museum, _cases_planar_pairs))


# -- suite: huneke -----------------------------------------------------------------

def _check_huneke(ideals, kw, config):
    I, J = ideals
    _proper(I, J)
    _require(I.arity == 2 and planar.is_height_two(I) and planar.is_height_two(J), "needs height two")
    _require(planar.is_contracted(I) and planar.is_contracted(J), "both ideals must be contracted")
    P = product(I, J)
    holds = mu(P) == mu(I) + mu(J) - 1 and planar.is_contracted(P)
    return holds, {"mu_IJ": mu(P), "expected": mu(I) + mu(J) - 1, "product_contracted": planar.is_contracted(P)}


def _cases_huneke(config):
    if config.exhaustive:
        fam = [I for I in _height_two_staircases(4, 4) if planar.is_contracted(I)]
        for k, (I, J) in enumerate(_pairs(fam)):
            yield f"exhaustive:{k}", (I, J), None
    for i in range(config.samples):
        I = corpus.random_contracted(config.seed, 2 * i, config.max_gens, config.max_exp)
        J = corpus.random_contracted(config.seed, 2 * i + 1, config.max_gens, config.max_exp)
        yield f"random:{i}", (I, J), None


register(Suite("huneke", "contracted height-two ideals: mu(IJ) = mu(I) + mu(J) - 1 and IJ contracted",
               _check_huneke, _cases_huneke))


# -- suites: freiman, h2, difference -------------------------------------------------

def _check_freiman(ideals, kw, config):
    (I,) = ideals
    _proper(I)
    _require(equigenerated_degree(I) is not None, "ideal must be equigenerated")
    fc = fiber.freiman_lower_bound(I)
    S = I.gens
    two_s = fiber.doubling(S)
    dim = fiber.freiman_dimension(S)
    holds = (fc.holds and len(two_s) == fc.mu_square and dim + 1 == fc.spread
             and len(two_s) >= fiber.freiman_bound(len(S), dim))
    return holds, {"spread": fc.spread, "mu": fc.mu, "mu2": fc.mu_square, "bound": fc.bound,
                   "doubling": len(two_s), "freiman_dim": dim}


def _cases_equigenerated(config):
    if config.exhaustive:
        for k, I in enumerate(corpus.equigenerated_planar_family(6)):
            yield f"exhaustive:{k}", (I,), None
        for d in range(1, 4):
            for n in range(3, max(3, config.arity) + 1):
                yield f"exhaustive:max-{n}-{d}", (maximal_ideal_power(n, d),), None
    for i in range(config.samples):
        yield f"random:{i}", (_random_equigenerated(config, i, 3),), None


register(Suite("freiman", "mu(I^2) >= l mu(I) - C(l, 2) for equigenerated monomial I",
               _check_freiman, _cases_equigenerated, defaults={"arity": 4, "max_gens": 12, "max_exp": 5}))


def _check_h2(ideals, kw, config):
    (I,) = ideals
    _proper(I)
    _require(equigenerated_degree(I) is not None, "ideal must be equigenerated")
    f = fiber.check_h2_nonneg(I)
    fc = fiber.freiman_lower_bound(I)
    # h_2 is exactly the slack in the Freiman-type bound
    holds = f.holds and f.details["h2"] == fc.mu_square - fc.bound
    return holds, f.details


register(Suite("h2", "h_2 >= 0 for equigenerated monomial ideals",
               _check_h2, _cases_equigenerated, defaults={"arity": 4, "max_gens": 12, "max_exp": 5}))


def _check_difference(ideals, kw, config):
    (I,) = ideals
    _proper(I)
    f = fiber.check_difference(I)
    return f.holds, f.details


def _cases_difference(config):
    params = _staircase_params(config, height_full=False, min_gens=1)
    for i in range(config.samples):
        if i % 2 == 0:
            yield f"random:{i}", (corpus.random_ideal(params, config.seed, i),), None
        else:
            yield f"random:{i}", (_random_equigenerated(config, i, 5, arities=[3, max(3, config.arity)]),), None


register(Suite("difference", "mu(I^2) = l mu(I) - C(l, 2) + h_2",
               _check_difference, _cases_difference, defaults={"arity": 4, "max_exp": 5}))


# -- suites: compare, hvector ----------------------------------------------------------

def _check_compare(ideals, kw, config):
    (I,) = ideals
    _proper(I)
    f = fiber.check_compare(I, config.k_max)
    return f.holds, f.details


def _cases_planar_singles(config, exhaustive_bounds=(4, 4), height_full=False):
    if config.exhaustive:
        k = 0
        for I in corpus.enumerate_staircases(exhaustive_bounds[0], exhaustive_bounds[1], m_min=2):
            if height_full and not planar.is_height_two(I):
                continue
            yield f"exhaustive:{k}", (I,), None
            k += 1
    params = _staircase_params(config, height_full=height_full)
    for i in range(config.samples):
        yield f"random:{i}", (corpus.random_ideal(params, config.seed, i),), None


register(Suite("compare", "spread-2 h-vector criteria for mu(I^k) >= k(mu(I) - 1) + 1",
               _check_compare, _cases_planar_singles, defaults={"k_max": 6, "max_exp": 8}))


def _check_hvector(ideals, kw, config):
    (I,) = ideals
    _proper(I)
    spread = fiber.analytic_spread(I)
    _require(spread == 2, "reconstruction check runs on spread-2 ideals")
    k_max = max(config.k_max, spread + config.tail_window)
    hv = fiber.h_vector(I, k_max, config.tail_window, max_generators=config.max_generators)
    series = fiber.mu_series(I, k_max, config.max_generators)
    rebuilt = fiber.hilbert_values(hv.spread, hv.coefficients, k_max)
    holds = tuple(rebuilt) == series.values and hv.coefficients[0] == 1
    shape = planar.binomial_power_shape(I) if planar.is_height_two(I) and equigenerated_degree(I) else None
    if shape is not None:
        holds = holds and hv.stabilized and hv.h == (1, shape[1] - 1)
    return holds, {"h": list(hv.h), "stabilized": hv.stabilized}


def _cases_hvector(config):
    for a in range(1, 4):
        for r in range(1, 5):
            yield f"exhaustive:shape-{a}-{r}", (power(pure_power_ideal((a, a)), r),), None
    yield from _cases_planar_singles(config, (3, 4))


register(Suite("hvector", "h-vector reconstructs mu(I^k); (x^a, y^a)^r has h = (1, r - 1)",
               _check_hvector, _cases_hvector, defaults={"k_max": 6, "max_exp": 8}))


# -- suites on equigenerated height-two pairs: new, yes ------------------------------------

def _check_new(ideals, kw, config):
    I, J = ideals
    r = planar.classify_product_equality(I, J)
    return r.agree, {"mu_IJ": r.mu_product, "bound": r.bound, "equal": r.count_equal, "shape": r.shape}


def _cases_equigenerated_pairs(config, d_max):
    if config.exhaustive:
        fam = list(corpus.equigenerated_planar_family(d_max))
        k = 0
        for I in fam:
            for J in fam:
                yield f"exhaustive:{k}", (I, J), None
                k += 1
    for i in range(config.samples):
        I = corpus.random_equigenerated_planar(config.seed, 2 * i, config.max_exp)
        J = corpus.random_equigenerated_planar(config.seed, 2 * i + 1, config.max_exp)
        if i % 4 == 0:
            # bias a quarter of the pairs toward the equality family
            rng = SplitMix64.for_item(config.seed, i, 11)
            a = rng.randint(1, 3)
            base = pure_power_ideal((a, a))
            I = power(base, rng.randint(1, 3))
            J = power(base, rng.randint(1, 3)) if rng.chance(2, 3) else J
        yield f"random:{i}", (I, J), None


register(Suite("new", "mu(IJ) = mu(I) + mu(J) - 1 iff I, J are powers of one (x^a, y^a)",
               _check_new, lambda c: _cases_equigenerated_pairs(c, 8),
               defaults={"samples": 10000, "max_exp": 10}))


def _check_yes(ideals, kw, config):
    I, J = ideals
    for K in (I, J):
        planar._require_equigenerated_height_two(K)
    a, b = mu(intersect(I, J)), mu(product(I, J))
    return a < b, {"mu_intersection": a, "mu_product": b}


register(Suite("yes", "mu(I cap J) < mu(IJ) for equigenerated height-two ideals in two variables",
               _check_yes, lambda c: _cases_equigenerated_pairs(c, 5)))


# -- suites on single equigenerated height-two ideals: truered, true ------------------

def _cases_equigenerated_singles(config, d_max=8):
    if config.exhaustive:
        for k, I in enumerate(corpus.equigenerated_planar_family(d_max)):
            yield f"exhaustive:{k}", (I,), None
    for i in range(config.samples):
        yield f"random:{i}", (corpus.random_equigenerated_planar(config.seed, i, config.max_exp),), None


def _check_truered(ideals, kw, config):
    (I,) = ideals
    red = planar.reduction_check(I)
    tight = mu(power(I, 2)) == 2 * mu(I) - 1
    return red == tight, {"reduction_number_one": red, "mu2_tight": tight}


register(Suite("truered", "I^2 = (x^d, y^d) I iff mu(I^2) = 2 mu(I) - 1",
               _check_truered, _cases_equigenerated_singles))


def _check_true(ideals, kw, config):
    (I,) = ideals
    planar._require_equigenerated_height_two(I)
    vals = [mu(P) for P in powers(I, config.k_max, config.max_generators)]
    m = vals[1]
    hits = [vals[k] == k * (m - 1) + 1 for k in range(2, config.k_max + 1)]
    lower = all(vals[k] >= k * (m - 1) + 1 for k in range(1, config.k_max + 1))
    shape = planar.binomial_power_shape(I) is not None
    holds = lower and (any(hits) == all(hits) == shape)
    return holds, {"mu": vals, "shape": shape}


register(Suite("true", "mu(I^k) = k(m - 1) + 1 for some k >= 2 iff for all k iff I = (x^a, y^a)^r",
               _check_true, _cases_equigenerated_singles, defaults={"k_max": 4}))


# -- suite: induction ------------------------------------------------------------------

def _check_induction(ideals, kw, config):
    for K in ideals:
        planar._require_equigenerated_height_two(K)
    m = mu(product_of(ideals))
    bound = sum(mu(K) for K in ideals) - (len(ideals) - 1)
    shapes = [planar.binomial_power_shape(K) for K in ideals]
    common = all(s is not None for s in shapes) and len({s[0] for s in shapes}) == 1
    equal_expected = len(ideals) == 1 or common
    return m >= bound and (m == bound) == equal_expected, {"mu": m, "bound": bound, "common_shape": common}


def _cases_induction(config):
    for i in range(config.samples):
        rng = SplitMix64.for_item(config.seed, i, 13)
        r = rng.randint(2, 4)
        if rng.chance(1, 3):
            a = rng.randint(1, 3)
            ideals = [power(pure_power_ideal((a, a)), rng.randint(1, 3)) for _ in range(r)]
        else:
            ideals = [corpus.random_equigenerated_planar(config.seed, i * 8 + j, 6, stream=13) for j in range(r)]
        yield f"random:{i}", tuple(ideals), None


register(Suite("induction", "mu(I_1...I_r) >= sum mu(I_j) - (r - 1), equality iff common (x^a, y^a) powers",
               _check_induction, _cases_induction))


# -- suite: cold ----------------------------------------------------------------------

def _check_cold(ideals, kw, config):
    for k in range(1, config.k_max + 1):
        if not planar.sum_power_distributes(list(ideals), k):
            return False, {"k": k}
    return True, {"k_max": config.k_max}


def _cases_cold(config):
    for i in range(config.samples):
        fam = corpus.random_sum_family(config.seed, i, min(config.max_exp, 7), 3)
        yield f"random:{i}", tuple(fam), None


register(Suite("cold", "(I_1 + ... + I_r)^k = I_1^k + ... + I_r^k when the sum is (x, y)^d",
               _check_cold, _cases_cold, defaults={"k_max": 3}))


# -- suite: convex ---------------------------------------------------------------------

def _check_convex(ideals, kw, config):
    (I,) = ideals
    pred = planar.predicted_square_generators(I)
    _require(pred is not None, "sequences are neither both convex nor both concave")
    sq = power(I, 2)
    m = mu(I)
    predicted = {p.monomial for p in pred}
    actual = set(sq.gens)
    cells = planar.triangle(I)
    per_diag = all(len({p.monomial for p in cells if p.i + p.j == k} & actual) == 1 for k in range(2, 2 * m + 1))
    holds = predicted == actual and per_diag and mu(sq) == 2 * m - 1
    return holds, {"mu2": mu(sq), "per_diagonal": per_diag}


def _cases_convex(config):
    if config.exhaustive:
        k = 0
        for I in _height_two_staircases(5, 7):
            if planar.predicted_square_generators(I) is not None:
                yield f"exhaustive:{k}", (I,), None
                k += 1
    for i in range(config.samples):
        yield f"random:{i}", (corpus.random_shaped_staircase(config.seed, i, config.max_gens, 4),), None


register(Suite("convex", "both sequences convex or both concave: one generator of I^2 per diagonal",
               _check_convex, _cases_convex, defaults={"max_gens": 8}))


# -- suite: lexsegment ------------------------------------------------------------------

def _check_lexsegment(ideals, kw, config):
    (I,) = ideals
    _require(I.arity == 2 and planar.is_lexsegment(I), "not a lexsegment ideal")
    st = planar.staircase(I)
    by_definition = planar.lexsegment_by_definition(I, st.a[0] + st.b[-1] + 2)
    m = mu(I)
    mu2 = mu(power(I, 2))
    # contractedness is a height-two statement, so test it after removing x^{d-s}
    _, J = planar.normalize(I)
    contracted = planar.is_contracted(J)
    holds = by_definition and mu2 == 2 * m - 1 and contracted
    return holds, {"mu2": mu2, "definition": by_definition, "contracted": contracted}


def _cases_lexsegment(config):
    if config.exhaustive:
        k = 0
        for d in range(1, 6):
            for s in range(0, d + 1):
                for tail in combinations(range(1, 8), s):
                    yield f"exhaustive:{k}", (corpus.lexsegment_from(d, tail),), None
                    k += 1
    for i in range(config.samples):
        yield f"random:{i}", (corpus.random_lexsegment(config.seed, i, 8, config.max_exp),), None


register(Suite("lexsegment", "lexsegment ideals in two variables: mu(I^2) = 2 mu(I) - 1",
               _check_lexsegment, _cases_lexsegment))


# -- suite: brexit -----------------------------------------------------------------------

def _check_brexit(ideals, kw, config):
    step = kw["step"]
    bp = planar.back_product(list(ideals), step)
    direct = product_of(list(ideals))
    r = len(ideals)
    expected = sum(mu(K) for K in ideals) - (r - 1)
    holds = bp.ideal == direct and mu(direct) == expected and bp.strictly_decreasing
    if r == 1:
        (I,) = ideals
        s, table = planar.progression_shape(I, step)
        t = max(table)
        holds = holds and all(mu(power(I, k)) == k * (t - s) + 1 for k in range(1, config.k_max + 1))
    return holds, {"mu": mu(direct), "expected": expected, "c": list(bp.c)}


def _cases_brexit(config):
    for i in range(config.samples):
        rng = SplitMix64.for_item(config.seed, i, 17)
        step = rng.randint(1, 3)
        r = rng.randint(1, 3)
        ideals = tuple(corpus.random_progression_ideal(rng, step, 5, config.max_exp) for _ in range(r))
        yield f"random:{i}", ideals, {"step": step}


register(Suite("brexit", "products of x^{ia} y^{b_i} ideals: mu = sum mu(I_j) - (r - 1)",
               _check_brexit, _cases_brexit, defaults={"k_max": 3}))


# -- suite: bar -------------------------------------------------------------------------

def _check_bar(ideals, kw, config):
    (I,) = ideals
    _proper(I)
    _require(I.arity == 2 and not is_principal(I), "needs a non-principal ideal in two variables")
    m = mu(I)
    u = planar.ordered_generators(I)
    prod_at = {(i, j): (u[i - 1][0] + u[j - 1][0], u[i - 1][1] + u[j - 1][1])
               for i, j in planar.triangle_indices(m)}
    from ..core import _divides
    for (i, j) in prod_at:
        for (k, l) in planar.safe_area_indices(m, i, j):
            if _divides(prod_at[(k, l)], prod_at[(i, j)]) or _divides(prod_at[(i, j)], prod_at[(k, l)]):
                return False, {"unsafe": [(i, j), (k, l)]}
    S = [tuple(p) for p in kw["S"]]
    bar = planar.common_safe_area_indices(m, S)
    sq = power(I, 2)
    holds = True
    if bar:
        holds = planar.generated_by_positions(I, S) != sq
    if m >= 3:
        corners = {prod_at[(1, 1)], prod_at[(1, 2)], prod_at[(m - 1, m)], prod_at[(m, m)]}
        holds = holds and corners <= set(sq.gens) and mu(sq) >= 4
    return holds, {"S_bar": len(bar), "mu2": mu(sq)}


def _cases_bar(config):
    params = _staircase_params(config, height_full=False)
    for i in range(config.samples):
        I = corpus.random_ideal(params, config.seed, i)
        rng = SplitMix64.for_item(config.seed, i, 19)
        idx = planar.triangle_indices(mu(I))
        S = sorted(rng.sample(idx, rng.randint(1, len(idx))))
        yield f"random:{i}", (I,), {"S": [list(p) for p in S]}


register(Suite("bar", "safe areas are sound and a nonempty common safe area blocks generation of I^2",
               _check_bar, _cases_bar, defaults={"max_gens": 7}))


# -- suite: small (exhaustive, vectorized) -----------------------------------------------------

def _check_small(ideals, kw, config):
    (I,) = ideals
    _proper(I)
    _require(I.arity == 2 and not is_principal(I), "needs a non-principal ideal in two variables")
    _require(mu(I) <= 7, "statement covers mu(I) <= 7")
    m, m2 = mu(I), mu(power(I, 2))
    return m2 > m, {"mu": m, "mu2": m2}


def _small_units(config):
    B = config.max_exp
    units = []
    for m in range(1, config.max_gens + 1):
        n_a = comb(B + 1, m)
        n_b = n_a
        step = max(1, 400_000 // max(1, n_b * m * m))
        for start in range(0, n_a, step):
            units.append(("grid", m, B, start, min(n_a, start + step)))
    n = config.samples
    for start in range(0, n, 200):
        units.append(("random", start, min(n, start + 200)))
    return units


def _combo_rows(m, B, start, stop, decreasing):
    from itertools import islice
    combos = islice(combinations(range(B + 1), m), start, stop)
    rows = np.array([c[::-1] if decreasing else c for c in combos], dtype=np.int64).reshape(-1, m)
    return rows


def _run_small_unit(unit, config):
    out = UnitResult()
    kind = unit[0]
    if kind == "grid":
        _, m, B, start, stop = unit
        seq_base = 0
        for mm in range(1, m):
            seq_base += comb(B + 1, mm) ** 2
        n_b = comb(B + 1, m)
        if m == 1:
            out.counts[HYPOTHESIS] += (stop - start) * n_b
            return out
        a_rows = _combo_rows(m, B, start, stop, True)
        b_rows = _combo_rows(m, B, 0, n_b, False)
        counts = planar.square_counts(a_rows, b_rows)
        bad = np.argwhere(counts <= m)
        out.counts[PASS] += counts.size - len(bad)
        out.counts[FAIL] += len(bad)
        for ai, bi in bad[:20]:
            I = planar.Staircase(tuple(int(v) for v in a_rows[ai]), tuple(int(v) for v in b_rows[bi])).to_ideal()
            pos = (start + int(ai)) * n_b + int(bi)
            out.verdicts.append(Verdict("small", f"exhaustive:m{m}:{pos}", FAIL, _witness((I,)), (),
                                        f"mu={m}; mu2={int(counts[ai, bi])}", seq_base + pos))
        return out
    _, lo, hi = unit
    base = corpus.staircase_count(config.max_gens, config.max_exp)
    params = corpus.RandomIdealParams(mode="staircase", min_gens=2, max_gens=7, max_exp=3 * config.max_exp)
    for i in range(lo, hi):
        I = corpus.random_ideal(params, config.seed, i)
        case = Case(base + i, f"random:{i}", (I,))
        v = evaluate(SUITES["small"], case, config)
        out.counts[v.status] += 1
        if v.status != PASS or config.all_verdicts:
            out.verdicts.append(v)
    return out


register(Suite("small", "mu(I^2) > mu(I) for non-principal ideals in two variables with mu(I) <= 7",
               _check_small, lambda c: iter(()), defaults={"max_gens": 7, "max_exp": 12, "samples": 1000},
               units=_small_units, run_unit=_run_small_unit))


# -- artinian suites: baby, rough, type, decomposition ------------------------------------------

def _check_baby(ideals, kw, config):
    f = artinian.check_baby(*ideals)
    return f.holds, f.details


def _cases_artinian_pairs(config, arities):
    if config.exhaustive and 2 in arities:
        fam = list(_height_two_staircases(3, 3))
        for k, (I, J) in enumerate(_pairs(fam)):
            yield f"exhaustive:{k}", (I, J), None
    for i in range(config.samples):
        n = arities[i % len(arities)]
        params = _artinian_params(config, n)
        I = corpus.random_ideal(params, config.seed, 2 * i)
        J = corpus.random_ideal(params, config.seed, 2 * i + 1)
        yield f"random:{i}", (I, J), None


register(Suite("baby", "mu(IJ) >= 3, and >= 4 when max mu >= 3 (height two, two variables)",
               _check_baby, lambda c: _cases_artinian_pairs(c, [2]), defaults={"max_exp": 8}))


def _check_rough(ideals, kw, config):
    f = artinian.check_rough(*ideals)
    return f.holds, {k: v for k, v in f.details.items() if k != "witnesses"}


def _arity_range(config):
    return list(range(2, max(2, config.arity) + 1))


register(Suite("rough", "mu(IJ) >= n + C(n, 2) for artinian monomial I, J",
               _check_rough, lambda c: _cases_artinian_pairs(c, _arity_range(c)),
               defaults={"arity": 4, "max_exp": 4, "max_gens": 5}))


def _check_type(ideals, kw, config):
    f = artinian.check_type_theorem(*ideals, box_ceiling=config.box_ceiling)
    return f.holds, f.details


def _cases_type(config):
    x = maximal_ideal_power(2, 1)
    yield "boundary:n2-mu2", (x, x), None
    yield from _cases_artinian_pairs(config, _arity_range(config))


register(Suite("type", "type(S/IJ) >= 3 for artinian I, J (n >= 3, or n = 2 with max mu >= 3)",
               _check_type, _cases_type, defaults={"arity": 4, "max_exp": 4, "max_gens": 5}))


def _check_decomposition(ideals, kw, config):
    (I,) = ideals
    _require(not I.is_zero and is_artinian(I), "ideal must be artinian")
    comps = artinian.irreducible_decomposition(I, config.box_ceiling)
    t = len(comps)
    rebuilt = artinian.intersect_components(comps) == I
    irredundant = t == 1 or all(
        artinian.intersect_components(comps[:k] + comps[k + 1:]) != I for k in range(t))
    holds = rebuilt and irredundant
    if I.arity == 2:
        holds = holds and t == mu(I) - 1
    return holds, {"type": t, "mu": mu(I), "rebuilt": rebuilt, "irredundant": irredundant}


def _cases_decomposition(config):
    if config.exhaustive:
        for k, I in enumerate(_height_two_staircases(4, 5)):
            yield f"exhaustive:{k}", (I,), None
    for i in range(config.samples):
        n = _arity_range(config)[i % len(_arity_range(config))]
        yield f"random:{i}", (corpus.random_ideal(_artinian_params(config, n), config.seed, i),), None


register(Suite("decomposition", "irreducible decompositions rebuild I; type = mu - 1 in two variables",
               _check_decomposition, _cases_decomposition, defaults={"arity": 3, "max_exp": 6}))


ALIASES = {"crash": "lexsegment", "hpositive": "h2", "fixtures": "paper-fixtures"}

from . import fixtures  # noqa: E402,F401  (registers paper-fixtures)
