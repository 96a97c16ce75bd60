import pytest

from tspread.core import Context, TSpreadError, max_mon
from tspread.oracle import (
    enumerate_veronese,
    oracle_borel_set,
    oracle_lex_set,
    oracle_next_lex,
    oracle_shadow,
    oracle_ss_closure,
)


def test_enumeration_sizes():
    assert len(enumerate_veronese(3, Context(11, 3))) == 35
    assert enumerate_veronese(2, Context(5, 3)) == [(1, 4), (1, 5), (2, 5)]
    assert enumerate_veronese(4, Context(7, 3)) == []


def test_enumeration_is_descending_slex():
    vero = enumerate_veronese(3, Context(9, 2))
    assert all(a < b for a, b in zip(vero, vero[1:]))


def test_lex_set_counts():
    assert len(oracle_lex_set((2, 6, 10), Context(11, 3))) == 21


def test_borel_set_counts():
    assert len(oracle_borel_set((2, 5, 8, 11), Context(13, 2))) == 42
    ctx = Context(9, 2)
    assert oracle_borel_set(max_mon(3, ctx), ctx) == {max_mon(3, ctx)}


def test_closure_singleton_equals_borel_filter():
    for n, t, u in [(9, 2, (2, 5, 8)), (8, 1, (3, 5, 7)), (10, 3, (2, 6, 10))]:
        ctx = Context(n, t)
        assert oracle_ss_closure([u], ctx) == oracle_borel_set(u, ctx)


def test_closure_of_max_is_fixed():
    ctx = Context(9, 2)
    assert oracle_ss_closure([max_mon(3, ctx)], ctx) == {max_mon(3, ctx)}


def test_closure_of_pair_is_union_of_filters():
    ctx = Context(8, 2)
    got = oracle_ss_closure([(2, 4, 8), (2, 5, 7)], ctx)
    expected = oracle_borel_set((2, 4, 8), ctx) | oracle_borel_set((2, 5, 7), ctx)
    assert got == expected


def test_shadow_by_definition():
    assert oracle_shadow([(2, 5, 9, 14)], Context(16, 2)) == {
        (2, 5, 7, 9, 14),
        (2, 5, 9, 11, 14),
        (2, 5, 9, 12, 14),
        (2, 5, 9, 14, 16),
    }


def test_next_lex_by_enumeration():
    ctx = Context(13, 3)
    assert oracle_next_lex((2, 6, 10, 13), ctx) == (2, 7, 10, 13)
    assert oracle_next_lex((4, 7, 10, 13), ctx) is None


def test_size_guard():
    with pytest.raises(TSpreadError, match="n <= 20"):
        enumerate_veronese(3, Context(21, 1))
