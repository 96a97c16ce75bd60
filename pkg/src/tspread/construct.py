"""Constructive algorithms on t-spread monomials.

Shadows, lex successors, lex and Borel segments, strongly stable closures,
Veronese sets and the ideal-level constructions built from them.  Every
routine manipulates index sequences only; at no point is the full monomial
basis of the ambient ring enumerated.

All set-valued results come back strictly descending in the squarefree-lex
order, which for index tuples is plain ascending sort order.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .core import (
    BorelIncomparableError,
    Context,
    Monomial,
    MonomialIdeal,
    TSpreadError,
    borel_geq,
    cmp_slex,
    exchange_moves,
    is_t_spread,
    max_mon,
    require_t_spread,
    require_t_spread_ideal,
    slex_max,
    slex_min,
    validate_monomial,
)
from .count import count_t_lex_mon


def t_shadow(u: Sequence[int], ctx: Context) -> list[Monomial]:
    """Degree d+1 t-spread multiples of ``u`` by a single variable.

    The admissible new indices form the union of intervals
    [1, i_1-t], [i_1+t, i_2-t], ..., [i_d+t, n]; anything outside either
    breaks the spread with a neighbour or repeats a variable.
    """
    m = require_t_spread(u, ctx)
    n, t = ctx.n, ctx.t
    cuts = [1]
    for i in m:
        cuts += [i - t, i + t]
    cuts.append(n)
    out: list[Monomial] = []
    for r in range(0, len(cuts), 2):
        for h in range(max(cuts[r], 1), cuts[r + 1] + 1):
            out.append(tuple(sorted(m + (h,))))
    return sorted(out)


def t_shadow_set(monomials: Iterable[Sequence[int]], ctx: Context) -> list[Monomial]:
    """Deduplicated union of the shadows of the given monomials."""
    out: set[Monomial] = set()
    for u in monomials:
        out.update(t_shadow(u, ctx))
    return sorted(out)


def t_next_lex(u: Sequence[int], ctx: Context) -> Monomial | None:
    """The greatest t-spread monomial strictly below ``u``, or None at the end.

    Looks for the last position whose index can grow while leaving room for
    a t-spread tail, bumps it, and packs the tail as tightly as possible.
    """
    m = require_t_spread(u, ctx)
    d = len(m)
    n, t = ctx.n, ctx.t
    for q in range(d, 0, -1):
        if m[q - 1] + 1 <= n - (d - q) * t:
            start = m[q - 1] + 1
            return m[: q - 1] + tuple(start + j * t for j in range(d - q + 1))
    return None


def iter_veronese(d: int, ctx: Context) -> Iterator[Monomial]:
    """All t-spread monomials of degree d, lazily, descending in slex."""
    if d < 0:
        raise TSpreadError("degree must be nonnegative")
    if d and 1 + (d - 1) * ctx.t > ctx.n:
        return
    w: Monomial | None = max_mon(d, ctx)
    while w is not None:
        yield w
        if not w:
            return
        w = t_next_lex(w, ctx)


def t_veronese(d: int, ctx: Context) -> list[Monomial]:
    """The full degree-d slice of t-spread monomials, descending in slex."""
    return list(iter_veronese(d, ctx))


def t_veronese_ideal(d: int, ctx: Context) -> MonomialIdeal:
    return MonomialIdeal(ctx, tuple(t_veronese(d, ctx)))


def t_lex_seg(v: Sequence[int], u: Sequence[int], ctx: Context) -> list[Monomial]:
    """All monomials between ``v`` and ``u`` inclusive in the slex order.

    Built by iterating the successor from ``v`` until ``u`` appears.
    """
    top = require_t_spread(v, ctx)
    bottom = require_t_spread(u, ctx)
    if cmp_slex(top, bottom) < 0:
        raise TSpreadError("segment start lies below its end in the slex order")
    out = [top]
    w: Monomial | None = top
    while w != bottom:
        w = t_next_lex(w, ctx)
        if w is None:  # unreachable: the chain visits every monomial
            raise AssertionError("slex successor chain ended before the target")
        out.append(w)
    return out


def t_lex_mon(u: Sequence[int], ctx: Context) -> list[Monomial]:
    """The smallest lex set containing ``u``: everything slex-above it."""
    m = require_t_spread(u, ctx)
    return t_lex_seg(max_mon(len(m), ctx), m, ctx)


def is_t_lex_seg(monomials: Iterable[Sequence[int]], ctx: Context) -> bool:
    """Whether the set is exactly the slex interval between its extremes."""
    ms = [validate_monomial(m, ctx) for m in monomials]
    if not ms:
        return True
    if len({len(m) for m in ms}) != 1 or not all(is_t_spread(m, ctx) for m in ms):
        return False
    return set(ms) == set(t_lex_seg(slex_max(ms), slex_min(ms), ctx))


def _next_in_borel_segment(w: Monomial, u: Monomial, t: int) -> Monomial:
    # Last position still strictly above the target can be bumped; the tail
    # is then repacked t apart, which stays below u componentwise.
    d = len(w)
    q = d
    while w[q - 1] + 1 > u[q - 1]:
        q -= 1
    start = w[q - 1] + 1
    return w[: q - 1] + tuple(start + j * t for j in range(d - q + 1))


def t_ss_seg(v: Sequence[int], u: Sequence[int], ctx: Context) -> list[Monomial]:
    """The strongly stable segment from ``v`` down to ``u``.

    Contains every monomial Borel-above ``u`` that is slex-below ``v``,
    produced in strictly descending slex order.  ``v`` must itself lie
    Borel-above ``u``.
    """
    top = require_t_spread(v, ctx)
    bottom = require_t_spread(u, ctx)
    if len(top) != len(bottom):
        raise TSpreadError("segment endpoints must have equal degrees")
    if not borel_geq(top, bottom):
        raise BorelIncomparableError(
            "segment start must dominate its end in the Borel order"
        )
    out = [top]
    w = top
    while w != bottom:
        w = _next_in_borel_segment(w, bottom, ctx.t)
        out.append(w)
    return out


def t_ss_mon(u: Sequence[int], ctx: Context) -> list[Monomial]:
    """The smallest strongly stable set containing ``u``.

    Equals the set of all monomials Borel-above ``u``; the slex-greatest
    monomial of the degree is always its first element.
    """
    m = require_t_spread(u, ctx)
    return t_ss_seg(max_mon(len(m), ctx), m, ctx)


def t_ss_set(monomials: Iterable[Sequence[int]], ctx: Context) -> list[Monomial]:
    """Smallest strongly stable set containing all the given monomials."""
    out: set[Monomial] = set()
    for u in monomials:
        out.update(t_ss_mon(u, ctx))
    return sorted(out)


def is_t_ss_seg(monomials: Iterable[Sequence[int]], ctx: Context) -> bool:
    """Whether the set is the strongly stable segment between its extremes."""
    ms = [validate_monomial(m, ctx) for m in monomials]
    if not ms:
        return True
    if len({len(m) for m in ms}) != 1 or not all(is_t_spread(m, ctx) for m in ms):
        return False
    try:
        seg = t_ss_seg(slex_max(ms), slex_min(ms), ctx)
    except BorelIncomparableError:
        return False
    return set(ms) == set(seg)


def is_t_ss_set(monomials: Iterable[Sequence[int]], ctx: Context) -> bool:
    """Whether the set is closed under all single exchange moves."""
    ms = [validate_monomial(m, ctx) for m in monomials]
    if not ms:
        return True
    if len({len(m) for m in ms}) != 1 or not all(is_t_spread(m, ctx) for m in ms):
        return False
    pool = set(ms)
    return all(w in pool for u in pool for w in exchange_moves(u, ctx))


def is_t_ss_ideal(ideal: MonomialIdeal) -> bool:
    """Whether the ideal is t-strongly stable.

    Checking the minimal generators suffices: each exchange move of each
    generator must land back in the ideal (not necessarily among the
    generators).
    """
    if not all(is_t_spread(g, ideal.ctx) for g in ideal.gens):
        return False
    return all(
        ideal.contains(w) for g in ideal.gens for w in exchange_moves(g, ideal.ctx)
    )


def t_ss_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """Smallest t-strongly stable ideal containing the given one.

    Closes the generators degree by degree and minimalizes across degrees;
    nothing outside the generator degrees is ever touched.
    """
    require_t_spread_ideal(ideal)
    closed: list[Monomial] = []
    for d in ideal.degrees():
        closed += t_ss_set(ideal.gens_of_degree(d), ideal.ctx)
    return MonomialIdeal(ideal.ctx, tuple(closed))


def t_spread_component(ideal: MonomialIdeal, upto: int | None = None) -> Iterator[tuple[int, list[Monomial]]]:
    """Degree-by-degree t-spread slices of the ideal, accumulated by shadows.

    Yields ``(j, sorted slice)`` for j = 1, ..., ``upto`` (ambient maximal
    degree when omitted).  The degree-j slice is the shadow of the previous
    one joined with the degree-j generators; peeling the largest index not in
    a witness generator shows every t-spread member of the ideal arises this
    way.
    """
    ctx = ideal.ctx
    last = ctx.max_degree() if upto is None else upto
    current: list[Monomial] = []
    for j in range(1, last + 1):
        grown = set(t_shadow_set(current, ctx))
        grown.update(ideal.gens_of_degree(j))
        current = sorted(grown)
        yield j, current


def is_t_lex_ideal(ideal: MonomialIdeal) -> bool:
    """Whether every degree slice of the ideal is an initial slex segment.

    A nonempty slice is initial exactly when its size matches the size of
    the lex set of its slex-least member, so no segment is ever built.
    """
    require_t_spread_ideal(ideal)
    for _, slice_j in t_spread_component(ideal):
        if slice_j and len(slice_j) != count_t_lex_mon(slex_min(slice_j), ideal.ctx):
            return False
    return True
