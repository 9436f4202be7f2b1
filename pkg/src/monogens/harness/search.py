"""Bounded counterexample search.

A search scans one space of ideals (or pairs of ideals) in canonical order
and stops at the first instance satisfying a predicate from a fixed
catalog.  When nothing is found the result certifies that the whole bounded
space was examined.  Staircase spaces are scanned in blocks with the
vectorized square counter, so every block is examined in full and the
earliest hit across blocks is reported; the answer is therefore the same
whatever the worker count.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import Callable

import numpy as np

from .. import planar
from ..core import equigenerated_degree, intersect, mu, product
from ..errors import InputError
from . import corpus

DEFAULT_MAX_CASES = 50_000_000


@dataclass(frozen=True)
class Predicate:
    name: str
    description: str
    arity: int  # 1 for single ideals, 2 for pairs
    test: Callable  # python fallback: (ideals) -> bool
    vector: Callable | None = None  # (counts, m) -> bool array for staircase spaces
    min_gens: int = 2
    # a witness satisfying this is a counterexample to a published statement
    violates: Callable | None = None


PREDICATES = {
    p.name: p for p in [
        Predicate("mu2_le_mu", "mu(I^2) <= mu(I), I non-principal", 1,
                  lambda ids: mu(product(ids[0], ids[0])) <= mu(ids[0]),
                  lambda counts, m: counts <= m,
                  violates=lambda ids: mu(ids[0]) <= 7),
        Predicate("mu2_lt_2mu_minus_1", "mu(I^2) < 2 mu(I) - 1", 1,
                  lambda ids: mu(product(ids[0], ids[0])) < 2 * mu(ids[0]) - 1,
                  lambda counts, m: counts < 2 * m - 1,
                  violates=lambda ids: equigenerated_degree(ids[0]) is not None),
        Predicate("mu2_eq_9_large_mu", "mu(I^2) = 9 with mu(I) >= 6", 1,
                  lambda ids: mu(ids[0]) >= 6 and mu(product(ids[0], ids[0])) == 9,
                  lambda counts, m: counts == 9, min_gens=6),
        Predicate("intersection_exceeds_product", "mu(I cap J) > mu(IJ)", 2,
                  lambda ids: mu(intersect(*ids)) > mu(product(*ids)),
                  violates=lambda ids: all(equigenerated_degree(I) is not None and planar.is_height_two(I)
                                           for I in ids)),
    ]
}

SPACES = ("staircases", "staircases-height2", "nonequigenerated-staircases",
          "equigenerated-pairs", "staircase-pairs")


@dataclass(frozen=True)
class SearchConfig:
    predicate: str
    space: str = "staircases"
    max_gens: int = 7
    max_exp: int = 12
    workers: int = 1
    max_cases: int = DEFAULT_MAX_CASES

    def __post_init__(self):
        if self.predicate not in PREDICATES:
            raise InputError(f"unknown predicate {self.predicate!r}; known: {', '.join(PREDICATES)}")
        if self.space not in SPACES:
            raise InputError(f"unknown space {self.space!r}; known: {', '.join(SPACES)}")
        if self.max_gens < 1 or self.max_exp < 1 or self.workers < 1:
            raise InputError("search bounds must be positive")
        if self.max_exp < self.max_gens - 1:
            raise InputError(f"no staircase with {self.max_gens} generators fits under B = {self.max_exp}")
        pred = PREDICATES[self.predicate]
        pair_space = self.space.endswith("pairs")
        if (pred.arity == 2) != pair_space:
            raise InputError(f"predicate {self.predicate} needs a {'pair' if pred.arity == 2 else 'single'} space")


@dataclass
class SearchResult:
    predicate: str
    space: str
    bounds: dict
    witness: tuple | None
    index: int | None
    scanned: int
    exhausted: bool
    violation: bool
    duration_ms: int

    def to_dict(self) -> dict:
        return {
            "predicate": self.predicate,
            "space": self.space,
            "bounds": self.bounds,
            "witness": None if self.witness is None else [
                {"arity": I.arity, "rows": I.rows(), "text": str(I)} for I in self.witness],
            "index": self.index,
            "scanned": self.scanned,
            "exhausted": self.exhausted,
            "violation": self.violation,
            "duration_ms": self.duration_ms,
        }

    @property
    def exit_code(self) -> int:
        return 1 if self.violation else 0


# -- staircase spaces ---------------------------------------------------------

def _rows(m, B, start, stop, decreasing):
    combos = islice(combinations(range(B + 1), m), start, stop)
    return np.array([c[::-1] if decreasing else c for c in combos], dtype=np.int64).reshape(-1, m)


def _staircase_block(job):
    """First hit inside rows [start, stop) of the a-side for m generators, as a flat index."""
    pred_name, space, m, B, start, stop = job
    pred = PREDICATES[pred_name]
    n_b = comb(B + 1, m)
    a = _rows(m, B, start, stop, True)
    b = _rows(m, B, 0, n_b, False)
    mask = np.ones((len(a), n_b), dtype=bool)
    if space == "staircases-height2":
        mask &= (a[:, -1] == 0)[:, None] & (b[:, 0] == 0)[None, :]
    if space == "nonequigenerated-staircases":
        deg = a[:, None, :] + b[None, :, :]
        mask &= ~(deg == deg[:, :, :1]).all(axis=2)
    if not mask.any():
        return None, int(mask.sum())
    hit = mask & pred.vector(planar.square_counts(a, b), m)
    scanned = int(mask.sum())
    if not hit.any():
        return None, scanned
    flat = int(np.flatnonzero(hit.ravel())[0])
    return start * n_b + flat, scanned


def _staircase_search(cfg: SearchConfig):
    pred = PREDICATES[cfg.predicate]
    B = cfg.max_exp
    total = corpus.staircase_count(cfg.max_gens, B, max(1, pred.min_gens))
    if total > cfg.max_cases:
        raise InputError(f"space holds {total} staircases, above the ceiling {cfg.max_cases}")
    jobs, offsets = [], []
    offset = 0
    for m in range(max(2, pred.min_gens), cfg.max_gens + 1):
        n_a = comb(B + 1, m)
        step = max(1, 400_000 // max(1, n_a * m * m))
        for start in range(0, n_a, step):
            jobs.append((cfg.predicate, cfg.space, m, B, start, min(n_a, start + step)))
            offsets.append((offset, m))
        offset += n_a * n_a
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_staircase_block, jobs))
    else:
        # serial scans may stop at the first block with a hit: blocks are in canonical order
        results = []
        for job in jobs:
            results.append(_staircase_block(job))
            if results[-1][0] is not None:
                break
    # count only through the block holding the witness, so totals match across worker counts
    scanned = 0
    for (hit, seen), (off, m) in zip(results, offsets):
        scanned += seen
        if hit is not None:
            n_b = comb(B + 1, m)
            a = _rows(m, B, hit // n_b, hit // n_b + 1, True)[0]
            b = _rows(m, B, hit % n_b, hit % n_b + 1, False)[0]
            I = planar.Staircase(tuple(map(int, a)), tuple(map(int, b))).to_ideal()
            return (I,), off + hit, scanned
    return None, None, scanned


# -- pair spaces --------------------------------------------------------------

def _pair_space(cfg: SearchConfig):
    if cfg.space == "equigenerated-pairs":
        fam = list(corpus.equigenerated_planar_family(cfg.max_exp))
    else:
        fam = [I for I in corpus.enumerate_staircases(cfg.max_gens, cfg.max_exp)
               if planar.is_height_two(I) and mu(I) >= 2]
    n = len(fam) * (len(fam) + 1) // 2
    if n > cfg.max_cases:
        raise InputError(f"space holds {n} pairs, above the ceiling {cfg.max_cases}")
    for i, I in enumerate(fam):
        for J in fam[i:]:
            yield I, J


def _pair_search(cfg: SearchConfig):
    pred = PREDICATES[cfg.predicate]
    scanned = 0
    for idx, pair in enumerate(_pair_space(cfg)):
        scanned += 1
        if pred.test(pair):
            return pair, idx, scanned
    return None, None, scanned


def counterexample_search(cfg: SearchConfig) -> SearchResult:
    start = time.perf_counter()
    if cfg.space.endswith("pairs"):
        witness, index, scanned = _pair_search(cfg)
    else:
        witness, index, scanned = _staircase_search(cfg)
    pred = PREDICATES[cfg.predicate]
    violation = witness is not None and pred.violates is not None and pred.violates(witness)
    return SearchResult(cfg.predicate, cfg.space, {"max_gens": cfg.max_gens, "max_exp": cfg.max_exp},
                        witness, index, scanned, witness is None, bool(violation),
                        int(round((time.perf_counter() - start) * 1000)))
