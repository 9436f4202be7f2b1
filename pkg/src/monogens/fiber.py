"""Hilbert function of the fiber ring: mu(I^k), analytic spread, h-vectors.

The Hilbert series sum_k mu(I^k) t^k equals Q(t) / (1 - t)^l with l the
analytic spread.  Everything here is exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .core import MonomialIdeal, equigenerated_degree, is_principal, mu, powers
from .errors import DegenerateIdealError, HypothesisError, InputError

DEFAULT_MAX_GENERATORS = 200_000


@dataclass(frozen=True)
class MuSeries:
    ideal: MonomialIdeal
    values: tuple  # mu(I^0), ..., mu(I^k_max)

    @property
    def k_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> int:
        return self.values[k]


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise DegenerateIdealError("the zero ideal is not allowed here")
    if I.is_unit:
        raise DegenerateIdealError("the unit ideal is not allowed here")


def mu_series(I: MonomialIdeal, k_max: int,
              max_generators: int | None = DEFAULT_MAX_GENERATORS) -> MuSeries:
    _require_proper(I)
    if k_max < 1:
        raise InputError("k_max must be at least 1")
    return MuSeries(I, tuple(mu(P) for P in powers(I, k_max, max_generators)))


# -- exact rank ---------------------------------------------------------------

def matrix_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    M = [list(map(int, r)) for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(M)) if M[r][col] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        p = M[rank][col]
        for r in range(rank + 1, len(M)):
            f = M[r][col]
            M[r] = [(p * M[r][c] - f * M[rank][c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == len(M):
            break
    return rank


def exponent_matrix(I: MonomialIdeal) -> list[list[int]]:
    return I.rows()


def analytic_spread_equigenerated(I: MonomialIdeal) -> int:
    """Rank of the exponent matrix of G(I) (equigenerated ideals only)."""
    _require_proper(I)
    if equigenerated_degree(I) is None:
        raise HypothesisError("exact analytic spread needs an equigenerated ideal; use analytic_spread_estimate")
    return matrix_rank(I.gens)


def analytic_spread_planar(I: MonomialIdeal) -> int:
    """In two variables the spread is 1 for principal ideals and 2 otherwise."""
    _require_proper(I)
    if I.arity != 2:
        raise InputError("expected an ideal in two variables")
    return 1 if is_principal(I) else 2


def analytic_spread(I: MonomialIdeal) -> int | None:
    """Exact spread when available (equigenerated or two variables), else None."""
    if I.arity == 2:
        return analytic_spread_planar(I)
    if equigenerated_degree(I) is not None:
        return analytic_spread_equigenerated(I)
    return None


@dataclass(frozen=True)
class SpreadEstimate:
    spread: int
    confident: bool
    differences: tuple = field(repr=False, default=())


def estimate_from_values(values: Sequence[int]) -> SpreadEstimate:
    """Degree + 1 of the polynomial through ``values`` via finite differences."""
    if len(values) < 4:
        raise InputError("the window must contain at least 4 values")
    rows = [list(values)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([q - p for p, q in zip(prev, prev[1:])])
    for level, row in enumerate(rows):
        if len(row) >= 2 and len(set(row)) == 1:
            return SpreadEstimate(level + 1, row[0] != 0, tuple(map(tuple, rows)))
    return SpreadEstimate(len(rows), False, tuple(map(tuple, rows)))


def analytic_spread_estimate(I: MonomialIdeal, k_lo: int, k_hi: int,
                             max_generators: int | None = DEFAULT_MAX_GENERATORS) -> SpreadEstimate:
    """Estimate l(I) from mu(I^k) for k in [k_lo, k_hi].

    ``confident`` is set when the top difference is constant and nonzero
    over the whole window; the estimate is heuristic either way.
    """
    if k_lo < 0 or k_hi <= k_lo or k_hi - k_lo + 1 < 4:
        raise InputError("the window [k_lo, k_hi] must contain at least 4 exponents")
    series = mu_series(I, k_hi, max_generators)
    return estimate_from_values(series.values[k_lo:k_hi + 1])


# -- sumsets ------------------------------------------------------------------

def doubling(S: Iterable[Sequence[int]]) -> set:
    """2S = {a + b : a, b in S}."""
    pts = [tuple(s) for s in S]
    if not pts:
        raise InputError("doubling needs a nonempty set")
    return {tuple(p + q for p, q in zip(u, v)) for i, u in enumerate(pts) for v in pts[i:]}


def freiman_dimension(S: Iterable[Sequence[int]]) -> int:
    """Dimension of the affine hull of S."""
    pts = [tuple(s) for s in S]
    if not pts:
        raise InputError("freiman_dimension needs a nonempty set")
    base = pts[0]
    return matrix_rank([[p - q for p, q in zip(u, base)] for u in pts[1:]])


def freiman_bound(size: int, dim: int) -> int:
    """(d + 1)|S| - C(d + 1, 2)."""
    return (dim + 1) * size - comb(dim + 1, 2)


@dataclass(frozen=True)
class FreimanCheck:
    spread: int
    mu: int
    mu_square: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.mu_square >= self.bound


def freiman_lower_bound(I: MonomialIdeal) -> FreimanCheck:
    """l * mu(I) - C(l, 2) against mu(I^2) for equigenerated I."""
    spread = analytic_spread_equigenerated(I)
    series = mu_series(I, 2)
    return FreimanCheck(spread, series[1], series[2], spread * series[1] - comb(spread, 2))


# -- h-vectors ----------------------------------------------------------------

def h_coefficients(values: Sequence[int], spread: int) -> list[int]:
    """h_i = sum_j (-1)^j C(l, j) mu(I^{i-j}) for every i covered by ``values``."""
    return [
        sum((-1) ** j * comb(spread, j) * values[i - j] for j in range(min(i, spread) + 1))
        for i in range(len(values))
    ]


def hilbert_values(spread: int, h: Sequence[int], k_max: int) -> list[int]:
    """Coefficients of Q(t) / (1 - t)^l up to t^k_max."""
    if spread == 0:
        return [h[k] if k < len(h) else 0 for k in range(k_max + 1)]
    return [
        sum(h[i] * comb(k - i + spread - 1, spread - 1) for i in range(min(k, len(h) - 1) + 1))
        for k in range(k_max + 1)
    ]


@dataclass(frozen=True)
class HVector:
    spread: int
    coefficients: tuple  # h_0, ..., h_k_max as computed
    stabilized: bool
    tail_window: int

    @property
    def h(self) -> tuple:
        """Coefficients with trailing zeros dropped (h_0 and h_1 always kept)."""
        c = list(self.coefficients)
        while len(c) > 2 and c[-1] == 0:
            c.pop()
        return tuple(c)


def h_vector(I: MonomialIdeal, k_max: int, tail_window: int = 3, spread: int | None = None,
             max_generators: int | None = DEFAULT_MAX_GENERATORS) -> HVector:
    """h-vector of the fiber ring from mu(I^0..k_max).

    The spread is exact for equigenerated ideals and in two variables; other
    ideals fall back on the finite-difference estimate, and an unconfident
    estimate is refused.
    """
    if tail_window < 1:
        raise InputError("tail_window must be positive")
    if spread is None:
        spread = analytic_spread(I)
    if spread is None:
        est = analytic_spread_estimate(I, max(1, k_max - 6), k_max, max_generators)
        if not est.confident:
            raise HypothesisError(
                f"analytic spread estimate over k <= {k_max} is not confident; differences {est.differences}")
        spread = est.spread
    if k_max < spread + tail_window:
        raise InputError(f"k_max must be at least spread + tail_window = {spread + tail_window}")
    series = mu_series(I, k_max, max_generators)
    h = h_coefficients(series.values, spread)
    stabilized = all(v == 0 for v in h[-tail_window:])
    return HVector(spread, tuple(h), stabilized, tail_window)


# -- checks of the h-vector statements ----------------------------------------

@dataclass(frozen=True)
class Finding:
    """Outcome of a checker: ``holds`` plus the numbers behind it."""

    name: str
    holds: bool
    details: dict


def check_compare(I: MonomialIdeal, k_max: int = 8) -> Finding:
    """For spread 2 on the window 1..k_max:
    (a) mu(I^2) >= 2 mu(I) - 1  iff  h_2 >= 0;
    (b) all h_i >= 0  implies  mu(I^k) >= k(mu(I) - 1) + 1;
    (c) h_i = 0 for all i >= 2  iff  mu(I^k) = k(mu(I) - 1) + 1.
    """
    spread = analytic_spread(I)
    if spread != 2:
        raise HypothesisError(f"analytic spread is {spread}, not 2")
    values = mu_series(I, k_max).values
    h = h_coefficients(values, 2)
    m = values[1]
    line = [k * (m - 1) + 1 for k in range(k_max + 1)]
    a = (values[2] >= 2 * m - 1) == (h[2] >= 0)
    b = (not all(v >= 0 for v in h)) or all(values[k] >= line[k] for k in range(1, k_max + 1))
    c = all(v == 0 for v in h[2:]) == all(values[k] == line[k] for k in range(1, k_max + 1))
    return Finding("compare", a and b and c,
                   {"a": a, "b": b, "c": c, "h": h, "mu": list(values)})


def check_difference(I: MonomialIdeal, spread: int | None = None) -> Finding:
    """mu(I) = h_1 + l and mu(I^2) = l mu(I) - C(l, 2) + h_2."""
    if spread is None:
        spread = analytic_spread(I)
    if spread is None:
        raise HypothesisError("no exact analytic spread for this ideal")
    values = mu_series(I, 2).values
    h = h_coefficients(values, spread)
    first = values[1] == h[1] + spread
    second = values[2] == spread * values[1] - comb(spread, 2) + h[2]
    return Finding("difference", first and second,
                   {"spread": spread, "h": h, "mu": list(values)})


def check_h2_nonneg(I: MonomialIdeal) -> Finding:
    """h_2 >= 0 for equigenerated monomial ideals."""
    spread = analytic_spread_equigenerated(I)
    values = mu_series(I, 2).values
    h2 = h_coefficients(values, spread)[2]
    return Finding("h2", h2 >= 0, {"spread": spread, "h2": h2, "mu": list(values)})
