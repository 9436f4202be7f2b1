from __future__ import annotations

import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from monogens.core import minimalize

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def monomials(arity: int, max_exp: int):
    return st.tuples(*[st.integers(0, max_exp)] * arity)


@st.composite
def ideals(draw, arity=None, max_exp=4, max_gens=5, proper=True):
    n = draw(st.integers(1, 3)) if arity is None else arity
    rows = draw(st.lists(monomials(n, max_exp), min_size=1, max_size=max_gens))
    if proper:
        rows = [r for r in rows if any(r)] or [tuple([1] + [0] * (n - 1))]
    return minimalize(rows, arity=n)


@st.composite
def ideal_pairs(draw, max_exp=3, max_gens=4):
    n = draw(st.integers(1, 3))
    return draw(ideals(n, max_exp, max_gens)), draw(ideals(n, max_exp, max_gens))


def box(arity: int, bound: int):
    return itertools.product(range(bound + 1), repeat=arity)


def in_naive(gens, u) -> bool:
    return any(all(g[i] <= u[i] for i in range(len(u))) for g in gens)
