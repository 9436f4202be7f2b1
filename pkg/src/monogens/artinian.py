"""Artinian monomial ideals: socle, Cohen-Macaulay type, irreducible components.

For an artinian monomial ideal I the socle monomials of S/I are the u not in
I with x_i u in I for every i.  Each one gives an irreducible component
(x_1^{u_1 + 1}, ..., x_n^{u_n + 1}) and I is their irredundant intersection,
so the type of S/I is the size of the socle.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, prod

from .core import (
    MonomialIdeal,
    _divides,
    intersection_of,
    is_artinian,
    minimalize,
    mu,
    product,
    pure_power_exponents,
    pure_power_ideal,
)
from .errors import HypothesisError, InputError, ResourceCeilingError
from .fiber import Finding

DEFAULT_BOX_CEILING = 10_000_000


@dataclass(frozen=True)
class IrreducibleComponent:
    exponents: tuple

    def __post_init__(self):
        if not self.exponents or any(e < 1 for e in self.exponents):
            raise InputError(f"irreducible component exponents must be >= 1, got {self.exponents}")

    def to_ideal(self) -> MonomialIdeal:
        return pure_power_ideal(self.exponents)


def _require_artinian(I: MonomialIdeal) -> list[int]:
    if I.is_zero or not is_artinian(I):
        raise HypothesisError(f"({I}) is not artinian")
    return pure_power_exponents(I)


def standard_monomials(I: MonomialIdeal, box_ceiling: int = DEFAULT_BOX_CEILING):
    """Monomials outside I, enumerated inside the pure-power box.

    Each coordinate loop stops at the first exponent that lands in I, since
    every larger exponent stays in I.
    """
    bounds = _require_artinian(I)
    volume = prod(bounds)
    if volume > box_ceiling:
        raise ResourceCeilingError(f"box volume {volume} exceeds the ceiling {box_ceiling}")
    n = I.arity
    gens = I.gens

    def inside(u):
        for g in gens:
            if _divides(g, u):
                return True
        return False

    def walk(prefix):
        pos = len(prefix)
        if pos == n:
            yield tuple(prefix)
            return
        for e in range(bounds[pos]):
            probe = prefix + [e] + [0] * (n - pos - 1)
            if inside(probe):
                break
            yield from walk(prefix + [e])

    yield from walk([])


def socle(I: MonomialIdeal, box_ceiling: int = DEFAULT_BOX_CEILING) -> list[tuple]:
    """Socle monomials of S/I in ascending lexicographic order."""
    out = []
    n = I.arity
    for u in standard_monomials(I, box_ceiling):
        if all(I.__contains__(u[:i] + (u[i] + 1,) + u[i + 1:]) for i in range(n)):
            out.append(u)
    return out


def cm_type(I: MonomialIdeal, box_ceiling: int = DEFAULT_BOX_CEILING) -> int:
    return len(socle(I, box_ceiling))


def irreducible_decomposition(I: MonomialIdeal, box_ceiling: int = DEFAULT_BOX_CEILING
                              ) -> list[IrreducibleComponent]:
    return [IrreducibleComponent(tuple(e + 1 for e in u)) for u in socle(I, box_ceiling)]


def intersect_components(components: list[IrreducibleComponent]) -> MonomialIdeal:
    if not components:
        raise InputError("need at least one component")
    return intersection_of([c.to_ideal() for c in components])


# -- checkers -----------------------------------------------------------------

def _require_pair(I: MonomialIdeal, J: MonomialIdeal) -> int:
    if I.arity != J.arity:
        raise InputError(f"arity mismatch: {I.arity} vs {J.arity}")
    _require_artinian(I)
    _require_artinian(J)
    if I.is_unit or J.is_unit:
        raise HypothesisError("the unit ideal is excluded")
    return I.arity


def check_baby(I: MonomialIdeal, J: MonomialIdeal) -> Finding:
    """mu(IJ) >= 3, and >= 4 when max(mu(I), mu(J)) >= 3 (two variables)."""
    if _require_pair(I, J) != 2:
        raise HypothesisError("this bound is for two variables")
    m = mu(product(I, J))
    need = 4 if max(mu(I), mu(J)) >= 3 else 3
    return Finding("baby", m >= need, {"mu_product": m, "bound": need})


def project(I: MonomialIdeal, keep: tuple) -> MonomialIdeal:
    """Image under x_k -> 0 for k not in ``keep``, as an ideal in len(keep) variables."""
    rows = [tuple(g[k] for k in keep) for g in I.gens
            if all(e == 0 for k, e in enumerate(g) if k not in keep)]
    return minimalize(rows, arity=len(keep), allow_zero=True)


def check_rough(I: MonomialIdeal, J: MonomialIdeal) -> Finding:
    """mu(IJ) >= n + C(n, 2), with one mixed generator u_ij per pair of variables.

    For each pair (i, j) the projection of IJ equals the product of the
    projections, and a generator of the projected product that is not a pure
    power is a minimal generator of IJ.
    """
    n = _require_pair(I, J)
    P = product(I, J)
    gens = set(P.gens)
    witnesses = {}
    commutes = True
    for i, j in combinations(range(n), 2):
        pp = project(P, (i, j))
        if pp != product(project(I, (i, j)), project(J, (i, j))):
            commutes = False
        mixed = [g for g in pp.gens if g[0] and g[1]]
        lifted = None
        for g in mixed:
            full = [0] * n
            full[i], full[j] = g
            if tuple(full) in gens:
                lifted = tuple(full)
                break
        witnesses[(i + 1, j + 1)] = lifted
    bound = n + comb(n, 2)
    m = mu(P)
    holds = m >= bound and commutes and all(w is not None for w in witnesses.values())
    return Finding("rough", holds, {"mu_product": m, "bound": bound, "projections_commute": commutes,
                                    "witnesses": {f"{a},{b}": w for (a, b), w in witnesses.items()}})


def check_type_theorem(I: MonomialIdeal, J: MonomialIdeal,
                       box_ceiling: int = DEFAULT_BOX_CEILING) -> Finding:
    """type(S/IJ) >= 3 when n >= 3, or n = 2 and max(mu(I), mu(J)) >= 3.

    The n = 2, max mu = 2 case raises HypothesisError carrying the computed
    type in its ``type`` attribute.
    """
    n = _require_pair(I, J)
    if n < 2:
        raise HypothesisError("needs at least two variables")
    t = cm_type(product(I, J), box_ceiling)
    if n == 2 and max(mu(I), mu(J)) < 3:
        err = HypothesisError(f"n = 2 and max mu = {max(mu(I), mu(J))} < 3; computed type {t}")
        err.type = t
        raise err
    return Finding("type", t >= 3, {"type": t, "n": n})
