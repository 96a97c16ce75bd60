"""Closed-form counting of segment cardinalities.

The size of a lex set or of a strongly stable closure is obtained by summing
binomial coefficients selected from nested decompositions of the ambient
degree-slice size; no monomial is ever constructed.  All arithmetic is exact
Python integers, so counts stay correct far beyond 64-bit range.

The two ``iter_*_count_terms`` generators expose the individual binomial
contributions; their term counts are meaningful (they are predicted by
``count_terms_ss``) and the tests rely on them.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .core import Context, TSpreadError, require_t_spread

BinomialTerm = tuple[int, int]


def binomial(top: int, bottom: int) -> int:
    """C(top, bottom) with the convention that it vanishes when top < bottom."""
    if bottom < 0 or top < bottom:
        return 0
    return comb(top, bottom)


def card_veronese(d: int, ctx: Context) -> int:
    """Number of t-spread monomials of degree d: C(n - (d-1)(t-1), d).

    Zero exactly when no such monomial exists, i.e. when 1 + (d-1)t > n.
    """
    if d < 0:
        raise TSpreadError("degree must be nonnegative")
    return binomial(ctx.n - (d - 1) * (ctx.t - 1), d)


def binomial_decomposition(n: int, q: int) -> list[BinomialTerm]:
    """The n-q+1 terms C(n-1, q-1), C(n-2, q-1), ..., C(q-1, q-1).

    Their sum is C(n, q); peeling off the first entry repeatedly is what
    drives both counting routines below.
    """
    if q < 1 or n < q:
        raise TSpreadError(f"need n >= q >= 1, got n={n}, q={q}")
    return [(n - 1 - s, q - 1) for s in range(n - q + 1)]


def iter_lex_count_terms(u: Sequence[int], ctx: Context) -> Iterator[int]:
    """Binomial contributions to the lex-set size of ``u``, one per term.

    Level k of the nested decomposition contributes one binomial for every
    admissible value of the k-th support index strictly above u's; the final
    term 1 accounts for u itself.  The total number of terms is
    max(u) - (d-1)t.
    """
    m = require_t_spread(u, ctx)
    d = len(m)
    if d == 0:
        raise TSpreadError("counting requires degree at least 1")
    n, t = ctx.n, ctx.t
    for s in range(1, m[0]):
        yield comb(n - (d - 1) * (t - 1) - s, d - 1)
    for k in range(2, d + 1):
        for s in range(1, m[k - 1] - m[k - 2] - t + 1):
            yield comb(n - (d - k + 1) * (t - 1) - m[k - 2] - s, d - k)
    yield comb(n - m[d - 1], 0)


def count_t_lex_mon(u: Sequence[int], ctx: Context) -> int:
    """Size of the smallest lex set containing ``u``, without construction."""
    return sum(iter_lex_count_terms(u, ctx))


def iter_ss_count_terms(u: Sequence[int], ctx: Context) -> Iterator[int]:
    """Binomial contributions to the strongly stable closure size of ``u``.

    A multi-index (s_1, ..., s_{d-1}) sweeps, odometer style, over every
    admissible combination of the first d-1 support indices; each position
    contributes one innermost binomial C(x, 1) = x.  Only max(u) matters,
    not the ambient n.
    """
    m = require_t_spread(u, ctx)
    d = len(m)
    if d == 0:
        raise TSpreadError("counting requires degree at least 1")
    t = ctx.t
    if d == 1:
        yield m[0]
        return
    nbar = m[-1]
    s = [1] * (d - 1)
    while True:
        yield nbar - (d - 1) * (t - 1) - sum(s)
        p = d - 2
        s[p] += 1
        while p > 0 and s[p] > m[p] - sum(s[:p]) - p * (t - 1):
            s[p] = 1
            p -= 1
            s[p] += 1
        if s[0] > m[0]:
            return


def count_t_ss_mon(u: Sequence[int], ctx: Context) -> int:
    """Size of the smallest strongly stable set containing ``u``."""
    return sum(iter_ss_count_terms(u, ctx))


@lru_cache(maxsize=None)
def _cq(args: tuple[int, ...]) -> int:
    if len(args) == 1:
        return args[0]
    *head, last = args
    return sum(_cq(tuple(a - r for a in head)) for r in range(last))


def cq_operator(args: Sequence[int]) -> int:
    """Nested sum operator on a nonincreasing tuple of positive integers.

    C_1(a) = a and C_q(a_1, ..., a_q) = sum over r < a_q of
    C_{q-1}(a_1 - r, ..., a_{q-1} - r).  It counts the innermost binomial
    terms of the strongly stable cardinality formula.
    """
    a = tuple(int(x) for x in args)
    if not a:
        raise TSpreadError("expected at least one argument")
    if any(x < 1 for x in a):
        raise TSpreadError(f"arguments must be positive, got {a}")
    if any(x < y for x, y in zip(a, a[1:])):
        raise TSpreadError(f"arguments must be nonincreasing, got {a}")
    return _cq(a)


def count_terms_ss(u: Sequence[int], ctx: Context) -> int:
    """Predicted number of innermost additions in the strongly stable count.

    Evaluates the nested sum operator on (i_{d-1} - (d-2)t, ..., i_2 - t, i_1);
    only the support of ``u`` is consulted.
    """
    m = require_t_spread(u, ctx)
    d = len(m)
    if d < 2:
        raise TSpreadError("term counting requires degree at least 2")
    args = tuple(m[k] - k * ctx.t for k in range(d - 2, -1, -1))
    return cq_operator(args)
