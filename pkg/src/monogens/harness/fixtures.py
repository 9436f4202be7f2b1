"""Worked examples with exact published values, run as the ``paper-fixtures`` suite.

Each fixture names its ideals (kept as the verdict witness) and a check
returning ``(holds, detail)``.  Every fixture verdict is retained in the
report, passes included, so the report doubles as a table of values.
"""
from __future__ import annotations

from typing import Callable

from .. import artinian, fiber, planar
from ..core import (
    MonomialIdeal,
    intersect,
    maximal_ideal_power,
    mu,
    power,
    product,
    sum_of,
)
from .parsing import parse_ideal

FAILURE = "x^6, x^5*y^2, x^4*y^3, x^2*y^4, y^6"
DIAGONAL_1 = "x^7, x^6*y^2, x^5*y^3, x^3*y^4, y^7"
DIAGONAL_2 = "x^7, x^6*y^4, x^4*y^5, x^3*y^6, y^8"
COLD_B_I = "x^5, y^5, z^5, x*y*z^3, x*y^2*z^2, x^2*y^3, x^2*z^3, x^3*y^2, x^3*y*z, x^3*z^2"
COLD_B_J = ("x^5, y^5, z^5, x^2*y^2*z, x^2*y*z^2, x*z^4, x*y^3*z, y*z^4, y^2*z^3, y^3*z^2, y^4*z,"
            " x*y^4, x^4*z, x^4*y")

DIAGONAL_1_MARKED = {(14, 0), (13, 2), (12, 3), (10, 4), (7, 7), (9, 6), (5, 10), (6, 8), (3, 11), (0, 14)}
DIAGONAL_2_MARKED = {(14, 0), (13, 4), (11, 5), (10, 6), (7, 8), (4, 13), (6, 12), (3, 14), (0, 16)}


def conca(a: int) -> MonomialIdeal:
    """(x^4, x^3y, xy^3, y^4) + x^2y^2 (z, t)^a in four variables."""
    rows = [(4, 0, 0, 0), (3, 1, 0, 0), (1, 3, 0, 0), (0, 4, 0, 0)]
    rows += [(2, 2, c, a - c) for c in range(a + 1)]
    return MonomialIdeal(4, tuple(sorted(rows)))


def _p(text: str, arity: int | None = None) -> MonomialIdeal:
    return parse_ideal(text, arity)


def _failure_square(I):
    return mu(I) == 5 and mu(power(I, 2)) == 8, {"mu": mu(I), "mu2": mu(power(I, 2)), "2mu-1": 2 * mu(I) - 1}


def _failure_series(I):
    vals = fiber.mu_series(I, 6).values
    return list(vals[1:]) == [3 * k + 2 for k in range(1, 7)], {"mu": list(vals)}


def _failure_hvector(I):
    hv = fiber.h_vector(I, 8, 3)
    return hv.h == (1, 3, -1) and hv.stabilized, {"h": list(hv.h)}


def _failure_spread(I):
    est = fiber.analytic_spread_estimate(I, 2, 8)
    return est.spread == 2 and est.confident, {"spread": est.spread, "confident": est.confident}


def _cube(I):
    fc = fiber.freiman_lower_bound(I)
    hv = fiber.h_vector(I, 6, 3)
    ok = mu(I) == 10 and fc.mu_square == 28 and fc.bound == 27
    return ok, {"mu": mu(I), "mu2": fc.mu_square, "bound": fc.bound, "h": list(hv.h)}


def _conca(I):
    a = max(g[2] + g[3] for g in I.gens)
    sq = power(I, 2)
    planar_power = MonomialIdeal(4, tuple(sorted((c, 8 - c, 0, 0) for c in range(9))))
    ok = mu(I) == 5 + a and mu(sq) == 9 and sq == planar_power
    return ok, {"a": a, "mu": mu(I), "mu2": mu(sq)}


def _marked(expected):
    def check(I):
        got = {p.monomial for p in planar.triangle(I) if p.marked}
        return got == expected and len(got) == mu(power(I, 2)), {"marked": len(got)}
    return check


def _diagonal_2_row(I):
    cells = planar.triangle(I)
    row2 = [p for p in cells if p.i == 2]
    return not any(p.marked for p in row2), {"row2": [p.monomial for p in row2]}


def _diagonal_1_d7(I):
    d7 = planar.diagonal(I, 7)
    degs = {p.monomial: p.marked for p in d7}
    ok = degs == {(8, 7): False, (6, 9): False}
    return ok, {"D7": sorted(degs)}


def _pair(expected_meet: str, expected_prod: str):
    def check(I, J):
        meet, prod = intersect(I, J), product(I, J)
        ok = meet == _p(expected_meet) and prod == _p(expected_prod)
        return ok, {"mu_meet": mu(meet), "mu_product": mu(prod)}
    return check


def _cold_a(I1, I2):
    s = sum_of([I1, I2])
    ok = s == maximal_ideal_power(2, 2) and sum_of([power(I1, 2), power(I2, 2)]) != maximal_ideal_power(2, 4)
    return ok, {"sum": str(s)}


def _cold_b(I, J):
    s = sum_of([I, J])
    sq = sum_of([power(I, 2), power(J, 2)])
    ok = s == maximal_ideal_power(3, 5) and (3, 3, 4) not in sq
    return ok, {"sum_is_m5": s == maximal_ideal_power(3, 5), "x3y3z4_in": (3, 3, 4) in sq}


def _type_boundary(I, J):
    t = artinian.cm_type(product(I, J))
    return t == 2, {"type": t}


FIXTURES: list[tuple[str, Callable[[], tuple], Callable]] = [
    ("failure-square", lambda: (_p(FAILURE),), _failure_square),
    ("failure-series", lambda: (_p(FAILURE),), _failure_series),
    ("failure-hvector", lambda: (_p(FAILURE),), _failure_hvector),
    ("failure-spread", lambda: (_p(FAILURE),), _failure_spread),
    ("cube-3", lambda: (maximal_ideal_power(3, 3),), _cube),
    ("conca-1", lambda: (conca(1),), _conca),
    ("conca-2", lambda: (conca(2),), _conca),
    ("conca-3", lambda: (conca(3),), _conca),
    ("diagonal-1-marked", lambda: (_p(DIAGONAL_1),), _marked(DIAGONAL_1_MARKED)),
    ("diagonal-1-d7", lambda: (_p(DIAGONAL_1),), _diagonal_1_d7),
    ("diagonal-2-marked", lambda: (_p(DIAGONAL_2),), _marked(DIAGONAL_2_MARKED)),
    ("diagonal-2-row", lambda: (_p(DIAGONAL_2),), _diagonal_2_row),
    ("yes-pair-1", lambda: (_p("x^2, y"), _p("x, y^2")), _pair("x^2, x*y, y^2", "x^3, x*y, y^3")),
    ("yes-pair-2", lambda: (_p("x^3, x*y^2"), _p("x^2*y, y^3")),
     _pair("x^3*y, x^2*y^2, x*y^3", "x*y^5, x^3*y^3, x^5*y")),
    ("cold-a", lambda: (_p("x^2, y^2"), _p("x*y", 2)), _cold_a),
    ("cold-b", lambda: (_p(COLD_B_I), _p(COLD_B_J)), _cold_b),
    ("type-boundary", lambda: (_p("x, y"), _p("x, y")), _type_boundary),
]

_BY_NAME = {name: check for name, _, check in FIXTURES}


def _check(ideals, kw, config):
    return _BY_NAME[kw["name"]](*ideals)


def _cases(config):
    for name, build, _ in FIXTURES:
        yield f"fixture:{name}", build(), {"name": name}


def _register():
    from .suites import Suite, register
    register(Suite("paper-fixtures", "published worked examples reproduced exactly",
                   _check, _cases, keep_passes=True))


_register()
