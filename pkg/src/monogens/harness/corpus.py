"""Deterministic corpora: exhaustive enumerations and seeded random ideals."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from ..core import MonomialIdeal, compositions, minimalize
from ..errors import InputError
from ..planar import Staircase
from .rng import SplitMix64


def staircase_sequences(m: int, B: int):
    """All (a, b) with B >= a_1 > ... > a_m >= 0 and 0 <= b_1 < ... < b_m <= B."""
    a_seqs = [tuple(reversed(c)) for c in combinations(range(B + 1), m)]
    b_seqs = list(combinations(range(B + 1), m))
    for a in a_seqs:
        for b in b_seqs:
            yield a, b


def enumerate_staircases(m_max: int, B: int, m_min: int = 1):
    """Every two-variable ideal with at most m_max generators and exponents <= B.

    Order: by m, then a-sequence, then b-sequence.  The count is
    sum_m C(B + 1, m)^2.
    """
    if m_max < 1 or m_min < 1:
        raise InputError("m_max must be at least 1")
    if B < m_max - 1:
        raise InputError(f"no staircase with {m_max} generators fits under B = {B}")
    for m in range(m_min, m_max + 1):
        for a, b in staircase_sequences(m, B):
            yield Staircase(a, b).to_ideal()


def staircase_count(m_max: int, B: int, m_min: int = 1) -> int:
    return sum(comb(B + 1, m) ** 2 for m in range(m_min, m_max + 1))


def equigenerated_planar(d: int, interior: tuple = ()) -> MonomialIdeal:
    """(x^d, y^d) plus x^a y^{d-a} for a in ``interior``."""
    return minimalize([(d, 0), (0, d)] + [(a, d - a) for a in interior])


def equigenerated_planar_family(d_max: int, d_min: int = 1):
    """Every equigenerated height-two ideal in two variables of degree d_min..d_max."""
    for d in range(d_min, d_max + 1):
        inner = range(1, d)
        for size in range(d):
            for subset in combinations(inner, size):
                yield equigenerated_planar(d, subset)


@dataclass(frozen=True)
class RandomIdealParams:
    """Shape of a random ideal.

    mode: ``staircase`` (two variables, m in [min_gens, max_gens], exponents
    <= max_exp), ``equigenerated`` (degree in [min_degree, max_degree], m
    generators drawn from the monomials of that degree, all pure powers
    included when ``height_full``), or ``artinian`` (pure powers of every
    variable plus up to max_gens extra monomials with exponents <= max_exp).
    """

    mode: str = "staircase"
    arity: int = 2
    min_gens: int = 2
    max_gens: int = 6
    max_exp: int = 10
    min_degree: int = 1
    max_degree: int = 6
    height_full: bool = False

    def __post_init__(self):
        if self.mode not in ("staircase", "equigenerated", "artinian"):
            raise InputError(f"unknown random mode {self.mode!r}")
        if self.arity < 1 or self.min_gens < 1 or self.max_gens < self.min_gens:
            raise InputError("generator bounds must satisfy 1 <= min_gens <= max_gens")
        if self.max_exp < 1 or self.min_degree < 1 or self.max_degree < self.min_degree:
            raise InputError("exponent and degree bounds must be positive")
        if self.mode == "staircase":
            if self.arity != 2:
                raise InputError("staircase mode is two-variable")
            if self.max_exp + 1 < self.min_gens:
                raise InputError("max_exp too small for min_gens generators")


def random_ideal(params: RandomIdealParams, seed: int, index: int) -> MonomialIdeal:
    """A deterministic function of (params, seed, index)."""
    rng = SplitMix64.for_item(seed, index)
    if params.mode == "staircase":
        top = min(params.max_gens, params.max_exp + 1)
        m = rng.randint(params.min_gens, top)
        values = list(range(params.max_exp + 1))
        a = sorted(rng.sample(values, m), reverse=True)
        b = sorted(rng.sample(values, m))
        if params.height_full:
            a = [v - a[-1] for v in a]
            b = [v - b[0] for v in b]
        return Staircase(tuple(a), tuple(b)).to_ideal()
    if params.mode == "equigenerated":
        n = params.arity
        d = rng.randint(params.min_degree, params.max_degree)
        pool = sorted(compositions(d, n))
        forced = []
        if params.height_full:
            forced = [tuple(d if k == i else 0 for k in range(n)) for i in range(n)]
            pool = [u for u in pool if u not in forced]
        lo = max(params.min_gens, len(forced), 1)
        hi = max(lo, min(params.max_gens, len(forced) + len(pool)))
        total = min(rng.randint(lo, hi), len(forced) + len(pool))
        extra = rng.sample(pool, total - len(forced))
        return minimalize(forced + extra, arity=n)
    # artinian
    n = params.arity
    pure = [tuple(rng.randint(1, params.max_exp) if k == i else 0 for k in range(n)) for i in range(n)]
    count = rng.randint(0, params.max_gens)
    extra = [tuple(rng.randint(0, params.max_exp - 1) for _ in range(n)) for _ in range(count)]
    extra = [u for u in extra if any(u)]
    return minimalize(pure + extra, arity=n)


def random_ideals(params: RandomIdealParams, seed: int, count: int, start: int = 0):
    for index in range(start, start + count):
        yield index, random_ideal(params, seed, index)


# -- structured random families ----------------------------------------------

def random_equigenerated_planar(seed: int, index: int, max_degree: int, stream: int = 0) -> MonomialIdeal:
    """Random height-two ideal in two variables generated in one degree."""
    rng = SplitMix64.for_item(seed, index, stream)
    d = rng.randint(1, max_degree)
    interior = [a for a in range(1, d) if rng.chance(1, 2)]
    return equigenerated_planar(d, tuple(interior))


def random_contracted(seed: int, index: int, max_gens: int, max_exp: int, stream: int = 0) -> MonomialIdeal:
    """Random height-two ideal in two variables with mu(I) = o(I) + 1.

    Height two forces a_i + b_i >= m - 1, with equality at i exactly when
    a_i..a_m = m-i..0 and b_1..b_i = 0..i-1; the remaining exponents are
    free above those runs.
    """
    rng = SplitMix64.for_item(seed, index, stream)
    m = rng.randint(2, max(2, max_gens))
    pivot = rng.randint(1, m)
    a = [0] * m
    b = [0] * m
    for j in range(pivot, m + 1):
        a[j - 1] = m - j
    for j in range(1, pivot + 1):
        b[j - 1] = j - 1
    head = sorted(rng.sample(range(a[pivot - 1] + 1, a[pivot - 1] + max_exp + 1), pivot - 1), reverse=True)
    a[:pivot - 1] = head
    tail = sorted(rng.sample(range(b[pivot - 1] + 1, b[pivot - 1] + max_exp + 1), m - pivot))
    b[pivot:] = tail
    return Staircase(tuple(a), tuple(b)).to_ideal()


def _gaps_to_staircase(a_gaps, b_gaps) -> MonomialIdeal:
    a = [sum(a_gaps)]
    for g in a_gaps:
        a.append(a[-1] - g)
    b = [0]
    for g in b_gaps:
        b.append(b[-1] + g)
    return Staircase(tuple(a), tuple(b)).to_ideal()


def random_shaped_staircase(seed: int, index: int, max_gens: int, max_gap: int, stream: int = 0) -> MonomialIdeal:
    """Height-two staircase whose a and b sequences are both convex or both concave."""
    rng = SplitMix64.for_item(seed, index, stream)
    m = rng.randint(2, max(2, max_gens))
    a_gaps = sorted(rng.randint(1, max_gap) for _ in range(m - 1))
    b_gaps = sorted(rng.randint(1, max_gap) for _ in range(m - 1))
    if rng.chance(1, 2):
        # concave: a-gaps shrink, b-gaps grow
        return _gaps_to_staircase(a_gaps[::-1], b_gaps)
    return _gaps_to_staircase(a_gaps, b_gaps[::-1])


def lexsegment_from(d: int, b_tail) -> MonomialIdeal:
    """(x^d, x^{d-1} y^{b_1}, ..., x^{d-s} y^{b_s})."""
    return Staircase(tuple(d - i for i in range(len(b_tail) + 1)), (0,) + tuple(b_tail)).to_ideal()


def random_lexsegment(seed: int, index: int, max_degree: int, max_exp: int, stream: int = 0) -> MonomialIdeal:
    rng = SplitMix64.for_item(seed, index, stream)
    d = rng.randint(1, max_degree)
    s = rng.randint(0, d)
    tail = sorted(rng.sample(range(1, max(max_exp, s) + 1), s))
    return lexsegment_from(d, tail)


def random_progression_ideal(rng: SplitMix64, step: int, max_len: int, max_exp: int) -> MonomialIdeal:
    """G(I) = {x^{i*step} y^{b_i}}, i = s..t, b strictly decreasing."""
    s = rng.randint(0, 3)
    t = s + rng.randint(0, max_len - 1)
    bs = sorted(rng.sample(range(max_exp + t - s + 1), t - s + 1), reverse=True)
    return Staircase(tuple(i * step for i in range(t, s - 1, -1)), tuple(reversed(bs))).to_ideal()


def random_sum_family(seed: int, index: int, max_degree: int, max_parts: int, stream: int = 0) -> list:
    """Ideals I_1..I_r generated in degree d, each with x^d and y^d, summing to (x, y)^d."""
    rng = SplitMix64.for_item(seed, index, stream)
    d = rng.randint(1, max_degree)
    r = rng.randint(2, max(2, max_parts))
    interiors = [[] for _ in range(r)]
    for a in range(1, d):
        owners = [j for j in range(r) if rng.chance(1, 3)] or [rng.below(r)]
        for j in owners:
            interiors[j].append(a)
    return [equigenerated_planar(d, tuple(part)) for part in interiors]
