"""Exact monomials and monomial ideals.

A monomial is a tuple of nonnegative integers (its exponent vector).  A
:class:`MonomialIdeal` stores its unique minimal generating set G(I) as a
divisibility antichain kept in ascending lexicographic order, so two ideals
are equal exactly when their generator tuples are equal.

All objects are immutable and all functions are pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import DegenerateIdealError, InputError, ResourceCeilingError

Monomial = tuple  # tuple[int, ...]; kept as a plain tuple for speed

_SHORT_NAMES = ("x", "y", "z", "t")


def monomial(*exponents: int) -> Monomial:
    """Validated constructor: ``monomial(2, 1)`` is x^2*y."""
    if not exponents:
        raise InputError("a monomial needs at least one exponent")
    for e in exponents:
        if not isinstance(e, int) or isinstance(e, bool):
            raise InputError(f"exponent {e!r} is not an integer")
        if e < 0:
            raise InputError(f"negative exponent {e}")
    return tuple(exponents)


def degree(u: Monomial) -> int:
    return sum(u)


def divides(u: Monomial, v: Monomial) -> bool:
    if len(u) != len(v):
        raise InputError(f"arity mismatch: {len(u)} vs {len(v)}")
    return all(p <= q for p, q in zip(u, v))


def _divides(u: Monomial, v: Monomial) -> bool:
    # unchecked variant for inner loops
    for p, q in zip(u, v):
        if p > q:
            return False
    return True


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(p + q for p, q in zip(u, v))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(p if p > q else q for p, q in zip(u, v))


def format_monomial(u: Monomial) -> str:
    names = _SHORT_NAMES if len(u) <= len(_SHORT_NAMES) else [f"x{i + 1}" for i in range(len(u))]
    factors = []
    for name, e in zip(names, u):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Build instances with :func:`minimalize` or :func:`ideal`; the direct
    constructor validates that ``gens`` already is a sorted antichain.
    """

    arity: int
    gens: tuple

    def __post_init__(self):
        if not isinstance(self.arity, int) or self.arity < 1:
            raise InputError(f"arity must be a positive integer, got {self.arity!r}")
        gens = tuple(tuple(g) for g in self.gens)
        for g in gens:
            if len(g) != self.arity:
                raise InputError(f"generator {g} does not have arity {self.arity}")
            if any((not isinstance(e, int)) or e < 0 for e in g):
                raise InputError(f"generator {g} has a negative or non-integer exponent")
        if list(gens) != sorted(set(gens)):
            raise InputError("generators must be distinct and in ascending lexicographic order")
        for g, h in combinations_with_replacement(gens, 2):
            if g != h and (_divides(g, h) or _divides(h, g)):
                raise InputError(f"generators {g} and {h} are comparable under divisibility")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def _trusted(cls, arity: int, gens: tuple) -> "MonomialIdeal":
        obj = object.__new__(cls)
        object.__setattr__(obj, "arity", arity)
        object.__setattr__(obj, "gens", gens)
        return obj

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, u) -> bool:
        return contains(self, tuple(u))

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def rows(self) -> list[list[int]]:
        """Sorted exponent rows, the machine serialization of the ideal."""
        return [list(g) for g in self.gens]

    def __str__(self) -> str:
        if not self.gens:
            return "0"
        # descending lex order reads like x^d, ..., y^e
        return ", ".join(format_monomial(g) for g in reversed(self.gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.arity}, {self.gens!r})"


def _minimal(gens: Iterable[Monomial], arity: int) -> tuple:
    pts = set(gens)
    if arity == 2:
        out = []
        min_b = None
        for a, b in sorted(pts):
            if min_b is None or b < min_b:
                out.append((a, b))
                min_b = b
        return tuple(out)
    kept: list[Monomial] = []
    for u in sorted(pts, key=lambda v: (sum(v), v)):
        for g in kept:
            if _divides(g, u):
                break
        else:
            kept.append(u)
    kept.sort()
    return tuple(kept)


def minimalize(monomials: Iterable[Sequence[int]], arity: int | None = None,
               allow_zero: bool = False) -> MonomialIdeal:
    """Return the ideal generated by ``monomials`` with G(I) extracted.

    An empty input is rejected unless ``allow_zero`` is set, in which case the
    zero ideal of the given ``arity`` is returned.
    """
    mons = [tuple(u) for u in monomials]
    if not mons:
        if allow_zero and arity is not None:
            return MonomialIdeal._trusted(arity, ())
        raise DegenerateIdealError("empty generator list (pass allow_zero=True and an arity for the zero ideal)")
    n = len(mons[0]) if arity is None else arity
    for u in mons:
        if len(u) != n:
            raise InputError(f"monomial {u} does not have arity {n}")
        for e in u:
            if not isinstance(e, int) or e < 0:
                raise InputError(f"monomial {u} has a negative or non-integer exponent")
    if n < 1:
        raise InputError("arity must be positive")
    return MonomialIdeal._trusted(n, _minimal(mons, n))


def ideal(*rows: Sequence[int]) -> MonomialIdeal:
    """Shorthand: ``ideal((2, 0), (0, 2))`` is (x^2, y^2)."""
    return minimalize(rows)


def zero_ideal(arity: int) -> MonomialIdeal:
    return MonomialIdeal._trusted(arity, ())


def unit_ideal(arity: int) -> MonomialIdeal:
    return MonomialIdeal._trusted(arity, ((0,) * arity,))


def pure_power_ideal(exponents: Sequence[int]) -> MonomialIdeal:
    """(x_1^{e_1}, ..., x_n^{e_n})."""
    n = len(exponents)
    rows = []
    for i, e in enumerate(exponents):
        row = [0] * n
        row[i] = e
        rows.append(tuple(row))
    return minimalize(rows)


def compositions(total: int, parts: int):
    """All exponent vectors of length ``parts`` summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def maximal_ideal_power(arity: int, d: int) -> MonomialIdeal:
    """(x_1, ..., x_n)^d."""
    if d < 0:
        raise InputError("degree must be nonnegative")
    return MonomialIdeal._trusted(arity, tuple(sorted(compositions(d, arity))))


def _check_arity(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.arity != b.arity:
        raise InputError(f"arity mismatch: {a.arity} vs {b.arity}")


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    if len(u) != I.arity:
        raise InputError(f"monomial {u} does not have arity {I.arity}")
    return any(_divides(g, u) for g in I.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Exact G(IJ).  A zero factor gives the zero ideal."""
    _check_arity(I, J)
    if I.is_zero or J.is_zero:
        return zero_ideal(I.arity)
    sums = [tuple(p + q for p, q in zip(g, h)) for g in I.gens for h in J.gens]
    return MonomialIdeal._trusted(I.arity, _minimal(sums, I.arity))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise InputError("power exponent must be nonnegative")
    return powers(I, k)[k]


def powers(I: MonomialIdeal, k_max: int, max_generators: int | None = None) -> list[MonomialIdeal]:
    """[I^0, I^1, ..., I^k_max] by iterated multiplication.

    ``max_generators`` bounds the size of every intermediate G(I^k); exceeding
    it raises :class:`~monogens.errors.ResourceCeilingError`.
    """
    if k_max < 0:
        raise InputError("power exponent must be nonnegative")
    out = [unit_ideal(I.arity)]
    if k_max == 0:
        return out
    current = I
    out.append(current)
    for k in range(2, k_max + 1):
        current = product(current, I)
        if max_generators is not None and len(current.gens) > max_generators:
            raise ResourceCeilingError(
                f"mu(I^{k}) = {len(current.gens)} exceeds the ceiling of {max_generators} generators")
        out.append(current)
    return out


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_arity(I, J)
    if I.is_zero or J.is_zero:
        return zero_ideal(I.arity)
    lcms = [mono_lcm(g, h) for g in I.gens for h in J.gens]
    return MonomialIdeal._trusted(I.arity, _minimal(lcms, I.arity))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_arity(I, J)
    if I.is_zero:
        return J
    if J.is_zero:
        return I
    return MonomialIdeal._trusted(I.arity, _minimal(I.gens + J.gens, I.arity))


def sum_of(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    return reduce(ideal_sum, ideals)


def product_of(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    return reduce(product, ideals)


def intersection_of(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    return reduce(intersect, ideals)


def mu(I: MonomialIdeal) -> int:
    """Number of minimal generators."""
    return len(I.gens)


def order(I: MonomialIdeal) -> int:
    """Least total degree of a generator."""
    if I.is_zero:
        raise DegenerateIdealError("the zero ideal has no order")
    return min(sum(g) for g in I.gens)


def equigenerated_degree(I: MonomialIdeal) -> int | None:
    """The common generator degree, or None when degrees differ."""
    if I.is_zero:
        raise DegenerateIdealError("the zero ideal is not equigenerated")
    degs = {sum(g) for g in I.gens}
    return degs.pop() if len(degs) == 1 else None


def is_equigenerated(I: MonomialIdeal) -> bool:
    return equigenerated_degree(I) is not None


def is_principal(I: MonomialIdeal) -> bool:
    return len(I.gens) == 1


def pure_power_exponents(I: MonomialIdeal) -> list[int | None]:
    """For each variable, the exponent of the pure power of it in G(I), if any."""
    found: list[int | None] = [None] * I.arity
    for g in I.gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) == 1:
            found[support[0]] = g[support[0]]
    return found


def is_artinian(I: MonomialIdeal) -> bool:
    """Height n in n variables: a pure power of every variable lies in I."""
    return all(p is not None for p in pure_power_exponents(I))


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I.arity == J.arity and I.gens == J.gens


def gcd_factor(I: MonomialIdeal) -> tuple[Monomial, MonomialIdeal]:
    """Split I = w * J with w the gcd of the generators.

    In two variables J has height 2 and mu(I^k) = mu(J^k) for every k.
    """
    if I.is_zero:
        raise DegenerateIdealError("cannot factor the zero ideal")
    w = tuple(min(col) for col in zip(*I.gens))
    rest = tuple(tuple(e - c for e, c in zip(g, w)) for g in I.gens)
    return w, MonomialIdeal._trusted(I.arity, rest)
