"""Monomial representation, ambient context and the two monomial orders.

A squarefree monomial with support {i_1 < i_2 < ... < i_d} is represented by
the tuple ``(i_1, ..., i_d)`` of its variable indices; the empty tuple is the
monomial 1.  Exponent vectors do not exist anywhere in this package: with a
positive spread every monomial of interest is squarefree, and working on the
index sequences directly is what keeps every algorithm here fast.

All values are immutable and all functions are pure, so everything can be
shared freely across threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Monomial = tuple[int, ...]


class TSpreadError(ValueError):
    """Base class for the domain errors raised by this package."""


class NotTSpreadError(TSpreadError):
    """An operation received a monomial that is not t-spread."""


class EmptyVeroneseError(TSpreadError):
    """No t-spread monomial of the requested degree exists."""


class BorelIncomparableError(TSpreadError):
    """Requested segment endpoints are not comparable in the Borel order.

    A caller asking for the segment between ``v`` and ``u`` may interpret
    this as "the segment is empty"; the dedicated type lets it tell that
    situation apart from malformed input.
    """


class NotStronglyStableError(TSpreadError):
    """A resolution invariant was requested for a non strongly stable ideal."""


class InvalidFtVectorError(TSpreadError):
    """A sequence fails the growth conditions for quotient count vectors."""


class InfeasibleCornersError(TSpreadError):
    """No strongly stable ideal realizes the requested corners and values."""


@dataclass(frozen=True)
class Context:
    """Ambient parameters: ``n`` variables and spread ``t``, both at least 1.

    A spread of 0 would make repeated indices legal and change the data
    model, so it is rejected outright.
    """

    n: int
    t: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise TSpreadError(f"need at least one variable, got n={self.n}")
        if self.t < 1:
            raise TSpreadError(f"spread must be positive, got t={self.t}")

    def max_degree(self) -> int:
        """Largest degree d with 1 + (d-1)t <= n, i.e. with any t-spread monomial."""
        return (self.n - 1) // self.t + 1


def validate_monomial(u: Sequence[int], ctx: Context) -> Monomial:
    """Canonicalize ``u`` to an index tuple, strictly increasing inside [1, n]."""
    m = tuple(int(i) for i in u)
    for a, b in zip(m, m[1:]):
        if b <= a:
            raise TSpreadError(f"support must be strictly increasing, got {m}")
    if m and (m[0] < 1 or m[-1] > ctx.n):
        raise TSpreadError(f"indices of {m} fall outside [1, {ctx.n}]")
    return m


def is_t_spread(u: Sequence[int], ctx: Context) -> bool:
    """Whether consecutive support indices all differ by at least ``ctx.t``.

    Monomials of degree 0 and 1 are t-spread for every t.
    """
    m = validate_monomial(u, ctx)
    return all(b - a >= ctx.t for a, b in zip(m, m[1:]))


def require_t_spread(u: Sequence[int], ctx: Context) -> Monomial:
    m = validate_monomial(u, ctx)
    if not is_t_spread(m, ctx):
        raise NotTSpreadError("expected a t-spread monomial")
    return m


def sieve_t_spread(monomials: Iterable[Sequence[int]], ctx: Context) -> list[Monomial]:
    """The t-spread members of ``monomials``, in their original order."""
    return [m for m in map(tuple, monomials) if is_t_spread(m, ctx)]


def cmp_slex(u: Monomial, v: Monomial) -> int:
    """Three-way squarefree-lex comparison: +1 when u > v, -1 when u < v.

    The order is only defined between equal degrees; a mismatch is a caller
    bug, not a value.  Note that descending slex order coincides with
    ascending lexicographic order of the index tuples, so ``sorted(ms)``
    lists monomials from the slex-greatest down.
    """
    if len(u) != len(v):
        raise TSpreadError("slex comparison requires equal degrees")
    if u == v:
        return 0
    return 1 if tuple(u) < tuple(v) else -1


def slex_max(monomials: Iterable[Monomial]) -> Monomial:
    """Greatest element under the squarefree-lex order (smallest index tuple)."""
    return min(map(tuple, monomials))


def slex_min(monomials: Iterable[Monomial]) -> Monomial:
    """Least element under the squarefree-lex order (largest index tuple)."""
    return max(map(tuple, monomials))


def borel_geq(v: Monomial, u: Monomial) -> bool:
    """Whether ``v >= u`` in the Borel order: each index of v at most u's.

    Larger in this order means "closer to the front variables"; it refines
    nothing beyond the componentwise comparison and implies ``v >= u`` in
    the squarefree-lex order.
    """
    if len(u) != len(v):
        raise TSpreadError("Borel comparison requires equal degrees")
    return all(j <= i for j, i in zip(v, u))


def max_mon(d: int, ctx: Context) -> Monomial:
    """Slex-greatest t-spread monomial of degree d: indices 1, 1+t, ..., 1+(d-1)t."""
    if d < 0:
        raise TSpreadError("degree must be nonnegative")
    if d and 1 + (d - 1) * ctx.t > ctx.n:
        raise EmptyVeroneseError(
            f"no t-spread monomial of degree {d} for n={ctx.n}, t={ctx.t}"
        )
    return tuple(1 + q * ctx.t for q in range(d))


def min_mon(d: int, ctx: Context) -> Monomial:
    """Slex-least t-spread monomial of degree d: indices n-(d-1)t, ..., n-t, n."""
    if d < 0:
        raise TSpreadError("degree must be nonnegative")
    if d and 1 + (d - 1) * ctx.t > ctx.n:
        raise EmptyVeroneseError(
            f"no t-spread monomial of degree {d} for n={ctx.n}, t={ctx.t}"
        )
    return tuple(ctx.n - (d - 1 - q) * ctx.t for q in range(d))


def minimalize(gens: Iterable[Sequence[int]]) -> list[Monomial]:
    """Drop every monomial whose support contains another member's support.

    Divisibility between squarefree monomials is support inclusion, so the
    result is the minimal generating set of the ideal the input generates.
    """
    items = sorted({tuple(g) for g in gens}, key=lambda g: (len(g), g))
    kept: list[Monomial] = []
    kept_supports: list[frozenset[int]] = []
    for g in items:
        support = frozenset(g)
        if not any(s <= support for s in kept_supports):
            kept.append(g)
            kept_supports.append(support)
    return kept


def exchange_moves(u: Monomial, ctx: Context) -> Iterator[Monomial]:
    """All t-spread results of swapping one support index for a smaller one.

    These single moves define strongly stable sets: a set is t-strongly
    stable exactly when it is closed under all of them.
    """
    support = set(u)
    for j in u:
        rest = support - {j}
        for i in range(1, j):
            if i in rest:
                continue
            w = tuple(sorted(rest | {i}))
            if all(b - a >= ctx.t for a, b in zip(w, w[1:])):
                yield w


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held by its unique minimal generating set.

    Generators are canonicalized on construction: validated against the
    context, minimalized (no generator divides another) and sorted by degree
    then descending slex.  The unit monomial is rejected, so every ideal
    here is proper.
    """

    ctx: Context
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self) -> None:
        canon = []
        for g in self.gens:
            m = validate_monomial(g, self.ctx)
            if not m:
                raise TSpreadError("the unit monomial cannot generate a proper ideal")
            canon.append(m)
        object.__setattr__(self, "gens", tuple(minimalize(canon)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def degrees(self) -> list[int]:
        """Generator degrees, ascending, without repetition."""
        return sorted({len(g) for g in self.gens})

    def gens_of_degree(self, d: int) -> list[Monomial]:
        return [g for g in self.gens if len(g) == d]

    def contains(self, u: Sequence[int]) -> bool:
        """Monomial membership: some generator's support lies inside u's."""
        support = set(u)
        return any(len(g) <= len(support) and support.issuperset(g) for g in self.gens)


def is_t_spread_ideal(ideal: MonomialIdeal) -> bool:
    return all(is_t_spread(g, ideal.ctx) for g in ideal.gens)


def require_t_spread_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    if not is_t_spread_ideal(ideal):
        raise NotTSpreadError("expected a t-spread ideal")
    return ideal
