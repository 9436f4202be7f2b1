"""Monomial ideals in two variables.

Generators u_i = x^{a_i} y^{b_i} are indexed from 1 with a strictly
decreasing and b strictly increasing.  Positions (i, j) with i <= j index the
triangle of products u_i u_j, which contains G(I^2).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .core import (
    MonomialIdeal,
    equigenerated_degree,
    maximal_ideal_power,
    minimalize,
    mu,
    order,
    power,
    product,
    pure_power_ideal,
    sum_of,
)
from .errors import DegenerateIdealError, HypothesisError, InputError


@dataclass(frozen=True)
class Staircase:
    a: tuple
    b: tuple

    def __post_init__(self):
        a, b = tuple(self.a), tuple(self.b)
        if len(a) != len(b) or not a:
            raise InputError("staircase sequences must be nonempty and of equal length")
        if a[-1] < 0 or b[0] < 0:
            raise InputError("staircase exponents must be nonnegative")
        if any(p <= q for p, q in zip(a, a[1:])):
            raise InputError(f"a-sequence {a} is not strictly decreasing")
        if any(p >= q for p, q in zip(b, b[1:])):
            raise InputError(f"b-sequence {b} is not strictly increasing")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def m(self) -> int:
        return len(self.a)

    def generators(self) -> list[tuple]:
        return list(zip(self.a, self.b))

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal._trusted(2, tuple(sorted(zip(self.a, self.b))))


def _require_planar(I: MonomialIdeal) -> None:
    if I.arity != 2:
        raise InputError(f"expected an ideal in two variables, got arity {I.arity}")
    if I.is_zero:
        raise DegenerateIdealError("the zero ideal has no staircase")


def staircase(I: MonomialIdeal) -> Staircase:
    _require_planar(I)
    gens = sorted(I.gens, reverse=True)
    return Staircase(tuple(g[0] for g in gens), tuple(g[1] for g in gens))


def ordered_generators(I: MonomialIdeal) -> list[tuple]:
    """u_1, ..., u_m with decreasing x-exponent."""
    _require_planar(I)
    return sorted(I.gens, reverse=True)


def is_height_two(I: MonomialIdeal) -> bool:
    """Both pure powers x^a and y^b are among the generators."""
    st = staircase(I)
    return st.a[-1] == 0 and st.b[0] == 0


def normalize(I: MonomialIdeal) -> tuple[tuple, MonomialIdeal]:
    """Factor I = x^{a_m} y^{b_1} J and return (shift, J); J has height 2."""
    st = staircase(I)
    shift = (st.a[-1], st.b[0])
    J = Staircase(tuple(x - shift[0] for x in st.a), tuple(y - shift[1] for y in st.b)).to_ideal()
    return shift, J


# -- the triangle T(I) ------------------------------------------------------

@dataclass(frozen=True)
class TrianglePosition:
    i: int
    j: int
    monomial: tuple
    marked: bool = False


def triangle_indices(m: int) -> list[tuple[int, int]]:
    """Positions (i, j), 1 <= i <= j <= m, in row-major order."""
    return [(i, j) for i in range(1, m + 1) for j in range(i, m + 1)]


def triangle(I: MonomialIdeal) -> list[TrianglePosition]:
    """All products u_i u_j (i <= j) in row-major order, marking G(I^2).

    When one minimal generator of I^2 occurs at several positions only the
    last one in row-major order is marked, so the marked positions are in
    bijection with G(I^2).
    """
    u = ordered_generators(I)
    square = set(power(I, 2).gens)
    cells = []
    for i, j in triangle_indices(len(u)):
        w = (u[i - 1][0] + u[j - 1][0], u[i - 1][1] + u[j - 1][1])
        cells.append((i, j, w))
    last_seen = {}
    for idx, (_, _, w) in enumerate(cells):
        if w in square:
            last_seen[w] = idx
    marked = set(last_seen.values())
    return [TrianglePosition(i, j, w, idx in marked) for idx, (i, j, w) in enumerate(cells)]


def marked_positions(I: MonomialIdeal) -> list[TrianglePosition]:
    return [p for p in triangle(I) if p.marked]


def diagonal(I: MonomialIdeal, k: int) -> list[TrianglePosition]:
    """D_k: positions with i + j = k."""
    m = mu(I)
    if not 2 <= k <= 2 * m:
        raise InputError(f"diagonal index {k} outside 2..{2 * m}")
    return [p for p in triangle(I) if p.i + p.j == k]


def safe_area_indices(m: int, i: int, j: int) -> frozenset:
    """Index set of the safe area S_ij inside the triangle of size m."""
    if not 1 <= i <= j <= m:
        raise InputError(f"position ({i}, {j}) outside the triangle of size {m}")
    return frozenset(
        (k, l) for k, l in triangle_indices(m)
        if (k < i and l <= j) or (k == i and l < j) or (k > i and l >= j)
    )


def safe_area(I: MonomialIdeal, i: int, j: int) -> list[TrianglePosition]:
    idx = safe_area_indices(mu(I), i, j)
    return [p for p in triangle(I) if (p.i, p.j) in idx]


def common_safe_area_indices(m: int, S: Iterable[tuple[int, int]]) -> frozenset:
    S = list(S)
    if not S:
        raise InputError("the common safe area needs a nonempty set of positions")
    return reduce(frozenset.intersection, (safe_area_indices(m, i, j) for i, j in S))


def common_safe_area(I: MonomialIdeal, S: Iterable) -> list[TrianglePosition]:
    """Intersection of the safe areas of the positions in S.

    A nonempty result certifies that the products at S do not generate I^2.
    ``S`` may hold TrianglePositions or plain (i, j) pairs.
    """
    pairs = [(s.i, s.j) if isinstance(s, TrianglePosition) else tuple(s) for s in S]
    idx = common_safe_area_indices(mu(I), pairs)
    return [p for p in triangle(I) if (p.i, p.j) in idx]


def corner_positions(m: int) -> list[tuple[int, int]]:
    """Positions of u_1^2, u_1u_2, u_{m-1}u_m, u_m^2, which lie in G(I^2) when m >= 3."""
    return list(dict.fromkeys([(1, 1), (1, 2), (m - 1, m), (m, m)]))


def unblocked_position_sets(m: int, size: int, forced: Iterable[tuple[int, int]] = ()) -> list[frozenset]:
    """Every set S of ``size`` positions containing ``forced`` whose common safe area is empty.

    These are the only candidates for G(I^2) that the safe-area argument
    alone cannot rule out.  Bitmask search over the triangle of size m.
    """
    idx = triangle_indices(m)
    bit = {p: 1 << n for n, p in enumerate(idx)}
    masks = {p: sum(bit[q] for q in safe_area_indices(m, *p)) for p in idx}
    forced = list(dict.fromkeys(tuple(p) for p in forced))
    if len(forced) > size:
        return []
    acc0 = (1 << len(idx)) - 1
    for p in forced:
        acc0 &= masks[p]
    rest = [p for p in idx if p not in forced]
    out = []

    def walk(start, chosen, acc):
        if len(chosen) == size - len(forced):
            if acc == 0:
                out.append(frozenset(forced + chosen))
            return
        for n in range(start, len(rest)):
            chosen.append(rest[n])
            walk(n + 1, chosen, acc & masks[rest[n]])
            chosen.pop()

    walk(0, [], acc0)
    return out


def generated_by_positions(I: MonomialIdeal, S: Iterable[tuple[int, int]]) -> MonomialIdeal:
    u = ordered_generators(I)
    return minimalize(
        [(u[i - 1][0] + u[j - 1][0], u[i - 1][1] + u[j - 1][1]) for i, j in S])


# -- convexity and the square of a convex/concave staircase ------------------

def is_concave(seq: Sequence[int]) -> bool:
    """2 c_i <= c_{i-1} + c_{i+1} for every interior index."""
    return all(2 * seq[i] <= seq[i - 1] + seq[i + 1] for i in range(1, len(seq) - 1))


def is_convex(seq: Sequence[int]) -> bool:
    """2 c_i >= c_{i-1} + c_{i+1} for every interior index."""
    return all(2 * seq[i] >= seq[i - 1] + seq[i + 1] for i in range(1, len(seq) - 1))


def predicted_square_generators(I: MonomialIdeal) -> list[TrianglePosition] | None:
    """Positions predicted to carry G(I^2) when both sequences share a shape.

    Both concave: u_i^2 and u_i u_{i+1}.  Both convex: u_1 u_j and u_j u_m.
    Returns None when neither shape is shared.
    """
    st = staircase(I)
    m = st.m
    if is_concave(st.a) and is_concave(st.b):
        idx = [(i, i) for i in range(1, m + 1)] + [(i, i + 1) for i in range(1, m)]
    elif is_convex(st.a) and is_convex(st.b):
        idx = [(1, j) for j in range(1, m + 1)] + [(j, m) for j in range(2, m + 1)]
    else:
        return None
    idx = set(idx)
    return [p for p in triangle(I) if (p.i, p.j) in idx]


# -- lexsegment and contracted ideals ----------------------------------------

def is_lexsegment(I: MonomialIdeal) -> bool:
    """(x^d, x^{d-1} y^{b_1}, ..., x^{d-s} y^{b_s}) with 0 < b_1 < ... < b_s."""
    st = staircase(I)
    if st.b[0] != 0:
        return False
    d = st.a[0]
    return all(a == d - i for i, a in enumerate(st.a))


def lexsegment_generate(d: int, a: int) -> MonomialIdeal:
    """I_{d,a} = (x^d, x^{d-1} y, ..., x^{d-a} y^a)."""
    if not 1 <= a <= d:
        raise InputError(f"lexsegment parameters need 1 <= a <= d, got d={d}, a={a}")
    return minimalize([(d - i, i) for i in range(a + 1)])


def lexsegment_by_definition(I: MonomialIdeal, max_degree: int) -> bool:
    """Closure under lex-larger monomials of equal degree, up to max_degree.

    Brute force over every monomial of I of degree <= max_degree; used as an
    independent check of :func:`is_lexsegment`.
    """
    _require_planar(I)
    for deg in range(max_degree + 1):
        inside = [I.__contains__((p, deg - p)) for p in range(deg + 1)]
        # x-exponent p larger means lex larger; membership must be upward closed
        seen = False
        for flag in inside:
            if flag:
                seen = True
            elif seen:
                return False
    return True


def is_contracted(I: MonomialIdeal) -> bool:
    """mu(I) = o(I) + 1."""
    _require_planar(I)
    return mu(I) == order(I) + 1


# -- equigenerated height-two classification --------------------------------

@dataclass(frozen=True)
class ProductEquality:
    mu_product: int
    bound: int
    count_equal: bool
    shape: tuple | None  # (a, r, s) when I = (x^a, y^a)^r and J = (x^a, y^a)^s

    @property
    def agree(self) -> bool:
        return self.count_equal == (self.shape is not None)


def _require_equigenerated_height_two(I: MonomialIdeal) -> int:
    _require_planar(I)
    d = equigenerated_degree(I)
    if d is None:
        raise HypothesisError(f"({I}) is not equigenerated")
    if not is_height_two(I):
        raise HypothesisError(f"({I}) does not contain pure powers of both variables")
    if d == 0:
        raise HypothesisError("the unit ideal is excluded")
    return d


def binomial_power_shape(I: MonomialIdeal) -> tuple | None:
    """(a, r) with I = (x^a, y^a)^r, found via the gcd of the gaps and checked."""
    xs = sorted(g[0] for g in I.gens)
    a = reduce(gcd, (q - p for p, q in zip(xs, xs[1:])), 0)
    if a == 0 or xs[-1] % a:
        return None
    r = xs[-1] // a
    if power(pure_power_ideal((a, a)), r) == I:
        return a, r
    return None


def classify_product_equality(I: MonomialIdeal, J: MonomialIdeal) -> ProductEquality:
    """Compare mu(IJ) with mu(I) + mu(J) - 1 and, independently, test the shape.

    Equality should hold exactly for I = (x^a, y^a)^r, J = (x^a, y^a)^s.
    """
    _require_equigenerated_height_two(I)
    _require_equigenerated_height_two(J)
    m = mu(product(I, J))
    bound = mu(I) + mu(J) - 1
    si, sj = binomial_power_shape(I), binomial_power_shape(J)
    shape = None
    if si is not None and sj is not None and si[0] == sj[0]:
        shape = (si[0], si[1], sj[1])
    return ProductEquality(m, bound, m == bound, shape)


def reduction_check(I: MonomialIdeal) -> bool:
    """I^2 == (x^d, y^d) I for I generated in degree d with both pure powers."""
    d = _require_equigenerated_height_two(I)
    return power(I, 2) == product(pure_power_ideal((d, d)), I)


def sum_power_distributes(ideals: Sequence[MonomialIdeal], k: int,
                          check_hypotheses: bool = True) -> bool:
    """(I_1 + ... + I_r)^k == I_1^k + ... + I_r^k.

    With ``check_hypotheses`` the inputs must all be generated in one degree
    d, each contain x^d and y^d, and sum to (x, y)^d; otherwise a
    HypothesisError is raised and no verdict is given.
    """
    if not ideals:
        raise InputError("need at least one ideal")
    if k < 1:
        raise InputError("k must be at least 1")
    if check_hypotheses:
        degs = {_require_equigenerated_height_two(I) for I in ideals}
        if len(degs) != 1:
            raise HypothesisError(f"ideals are generated in different degrees {sorted(degs)}")
        d = degs.pop()
        if sum_of(ideals) != maximal_ideal_power(2, d):
            raise HypothesisError(f"the ideals do not sum to (x, y)^{d}")
    lhs = power(sum_of(ideals), k)
    rhs = sum_of([power(I, k) for I in ideals])
    return lhs == rhs


# -- products of ideals with x-exponents in an arithmetic progression --------

@dataclass(frozen=True)
class BackProduct:
    ideal: MonomialIdeal
    step: int
    first: int  # s = s_1 + ... + s_r
    c: tuple    # c_s, ..., c_t

    @property
    def strictly_decreasing(self) -> bool:
        return all(p > q for p, q in zip(self.c, self.c[1:]))


def progression_shape(I: MonomialIdeal, step: int) -> tuple[int, dict]:
    """Return (s, {i: b_i}) when G(I) = {x^{i*step} y^{b_i}}, i = s..t."""
    _require_planar(I)
    if step < 1:
        raise InputError("step must be positive")
    table = {}
    for a, b in I.gens:
        if a % step:
            raise HypothesisError(f"x-exponent {a} of ({I}) is not a multiple of {step}")
        table[a // step] = b
    lo, hi = min(table), max(table)
    if set(table) != set(range(lo, hi + 1)):
        raise HypothesisError(f"x-exponents of ({I}) are not consecutive multiples of {step}")
    return lo, table


def back_product(ideals: Sequence[MonomialIdeal], step: int) -> BackProduct:
    """Product of ideals G(I_j) = {x^{i*step} y^{b_ij}} via min-plus convolution.

    c_i is the least b_{i_1,1} + ... + b_{i_r,r} over i_1 + ... + i_r = i.
    """
    if not ideals:
        raise InputError("need at least one ideal")
    shapes = [progression_shape(I, step) for I in ideals]
    acc = dict(shapes[0][1])
    for _, table in shapes[1:]:
        nxt: dict[int, int] = {}
        for i, bi in acc.items():
            for j, bj in table.items():
                v = bi + bj
                if i + j not in nxt or v < nxt[i + j]:
                    nxt[i + j] = v
        acc = nxt
    first = min(acc)
    c = tuple(acc[i] for i in range(first, max(acc) + 1))
    gens = [(i * step, acc[i]) for i in acc]
    return BackProduct(minimalize(gens), step, first, c)


# -- batched mu(I^2) over many staircases ------------------------------------

def square_counts(a_rows: np.ndarray, b_rows: np.ndarray) -> np.ndarray:
    """mu(I^2) for every staircase (a_rows[p], b_rows[q]).

    ``a_rows`` is (Na, m) with strictly decreasing rows, ``b_rows`` is (Nb, m)
    with strictly increasing rows; the result is an (Na, Nb) integer array.
    A triangle entry is redundant when some other entry divides it, ties
    between equal monomials being broken by position.  Dominance bits for the
    x- and y-exponents are computed separately and combined per pair, so the
    cost is linear in Na * Nb.
    """
    a_rows = np.asarray(a_rows, dtype=np.int64)
    b_rows = np.asarray(b_rows, dtype=np.int64)
    m = a_rows.shape[1]
    if b_rows.shape[1] != m:
        raise InputError("a and b rows must have the same length")
    idx = [(i, j) for i in range(m) for j in range(i, m)]
    p = len(idx)
    if p > 63:
        raise InputError("square_counts supports at most 10 generators")
    left = np.array([i for i, _ in idx])
    right = np.array([j for _, j in idx])
    weights = np.left_shift(np.uint64(1), np.arange(p, dtype=np.uint64))

    def masks(rows):
        sums = rows[:, left] + rows[:, right]                 # (N, p)
        lt = sums[:, :, None] < sums[:, None, :]              # [n, q, t]: entry q below t
        eq = sums[:, :, None] == sums[:, None, :]
        lt_bits = (lt * weights[None, :, None]).sum(axis=1, dtype=np.uint64)
        eq_bits = (eq * weights[None, :, None]).sum(axis=1, dtype=np.uint64)
        return lt_bits | eq_bits, eq_bits                     # (N, p) each

    le_a, eq_a = masks(a_rows)
    le_b, eq_b = masks(b_rows)
    # entries q > t that equal t must not make t redundant; neither may t itself
    later = np.array([~np.uint64((1 << (t + 1)) - 1) for t in range(p)], dtype=np.uint64)
    selfbit = weights
    out = np.empty((a_rows.shape[0], b_rows.shape[0]), dtype=np.int64)
    chunk = max(1, 2_000_000 // max(1, b_rows.shape[0] * p))
    for start in range(0, a_rows.shape[0], chunk):
        la = le_a[start:start + chunk, None, :]
        ea = eq_a[start:start + chunk, None, :]
        dom = la & le_b[None, :, :]
        dup_after = ea & eq_b[None, :, :] & later
        dom &= ~(dup_after | selfbit)
        out[start:start + chunk] = p - np.count_nonzero(dom, axis=2)
    return out
