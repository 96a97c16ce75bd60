import pytest

from conftest import KK_CTX, KK_FT, KK_LEX_GENS, kk_ideal
from tspread.construct import is_t_lex_ideal
from tspread.core import (
    Context,
    InvalidFtVectorError,
    MonomialIdeal,
    NotTSpreadError,
    TSpreadError,
)
from tspread.count import card_veronese
from tspread.kk import (
    ft_vector,
    is_ft_vector,
    solve_binomial_expansion,
    t_lex_ideal_from_f,
    t_lex_ideal_of,
    t_macaulay_expansion,
)


class TestFtVector:
    def test_known_ideal(self):
        assert ft_vector(kk_ideal()) == KK_FT

    def test_zero_ideal_gives_slice_sizes(self):
        assert ft_vector(MonomialIdeal(KK_CTX)) == [1, 8, 21, 20, 5]

    def test_lex_companion_agrees(self):
        assert ft_vector(MonomialIdeal(KK_CTX, KK_LEX_GENS)) == KK_FT

    def test_rejects_non_spread(self):
        with pytest.raises(NotTSpreadError):
            ft_vector(MonomialIdeal(KK_CTX, ((1, 2, 3),)))


class TestMacaulayExpansion:
    def test_known_shifted_values(self):
        ctx = Context(12, 1)
        assert t_macaulay_expansion(12, 1, ctx, shift=True) == [(12, 2)]
        shifted = [
            solve_binomial_expansion(t_macaulay_expansion(a, d, ctx, shift=True))
            for a, d in [(12, 1), (50, 2), (20, 3), (15, 4)]
        ]
        assert shifted == [66, 130, 15, 6]

    def test_known_shifted_value_spread_two(self):
        ctx = Context(12, 2)
        assert t_macaulay_expansion(20, 3, ctx, shift=True) == [(5, 4)]
        assert solve_binomial_expansion(t_macaulay_expansion(20, 3, ctx, shift=True)) == 5

    def test_unshifted_greedy_form(self):
        ctx = Context(12, 1)
        assert t_macaulay_expansion(50, 2, ctx) == [(10, 2), (5, 1)]
        assert t_macaulay_expansion(20, 3, ctx) == [(6, 3)]

    def test_unshifted_evaluates_back(self):
        ctx = Context(12, 2)
        for d in (1, 2, 3):
            for a in range(card_veronese(d, ctx) + 1):
                terms = t_macaulay_expansion(a, d, ctx)
                assert solve_binomial_expansion(terms) == a

    def test_zero_has_empty_expansion(self):
        assert t_macaulay_expansion(0, 3, Context(12, 1)) == []

    def test_out_of_range_is_error(self):
        with pytest.raises(TSpreadError):
            t_macaulay_expansion(67, 2, Context(12, 1))
        with pytest.raises(TSpreadError):
            t_macaulay_expansion(-1, 2, Context(12, 1))


class TestSolveExpansion:
    def test_known_value(self):
        assert solve_binomial_expansion([(12, 2)]) == 66

    def test_empty(self):
        assert solve_binomial_expansion([]) == 0

    def test_direct_evaluation(self):
        assert solve_binomial_expansion([(6, 4), (5, 2)]) == 25

    def test_below_diagonal_terms_vanish(self):
        assert solve_binomial_expansion([(3, 5)]) == 0


class TestIsFtVector:
    def test_known_true_at_spread_one(self):
        assert is_ft_vector([1, 12, 50, 20, 15], Context(12, 1))

    def test_known_false_at_spread_two(self):
        assert not is_ft_vector([1, 12, 50, 20, 15], Context(12, 2))

    def test_short_vector_trivially_admissible(self):
        assert is_ft_vector([1, 12], Context(12, 1))
        assert is_ft_vector([1, 0], Context(12, 1))

    def test_leading_entry_must_be_one(self):
        assert not is_ft_vector([2, 5], Context(12, 1))
        assert not is_ft_vector([], Context(12, 1))

    def test_entries_bounded_by_slice_sizes(self):
        assert not is_ft_vector([1, 13], Context(12, 1))
        assert not is_ft_vector([1, -1], Context(12, 1))

    def test_zero_forces_zero_tail(self):
        assert is_ft_vector([1, 5, 0, 0], Context(12, 1))
        assert not is_ft_vector([1, 5, 0, 1], Context(12, 1))


class TestLexIdealFromCounts:
    def test_eleven_generator_companion(self):
        ideal = t_lex_ideal_from_f(KK_FT, KK_CTX)
        assert ideal.gens == KK_LEX_GENS

    def test_132_generator_ideal(self):
        ideal = t_lex_ideal_from_f([1, 12, 50, 20, 15], Context(12, 1))
        assert len(ideal.gens) == 132
        by_degree = {d: len(ideal.gens_of_degree(d)) for d in ideal.degrees()}
        assert by_degree == {2: 16, 3: 110, 5: 6}
        # spot-check the extreme generators
        assert ideal.gens[0] == (1, 2)
        assert ideal.gens[-2:] == ((7, 9, 10, 11, 12), (8, 9, 10, 11, 12))
        assert is_t_lex_ideal(ideal)

    def test_slice_size_vector_gives_zero_ideal(self):
        ctx = Context(8, 2)
        full = [1] + [card_veronese(d, ctx) for d in range(1, ctx.max_degree() + 1)]
        assert t_lex_ideal_from_f(full, ctx).is_zero

    def test_invalid_vector_is_error(self):
        with pytest.raises(InvalidFtVectorError, match="expected a valid ft-vector"):
            t_lex_ideal_from_f([1, 12, 50, 20, 15], Context(12, 2))


class TestLexIdealOf:
    def test_known_companion(self):
        companion = t_lex_ideal_of(kk_ideal())
        assert companion.gens == KK_LEX_GENS
        assert ft_vector(companion) == KK_FT
        assert not is_t_lex_ideal(kk_ideal())
        assert is_t_lex_ideal(companion)

    def test_idempotent_on_lex_ideals(self):
        companion = t_lex_ideal_of(kk_ideal())
        assert t_lex_ideal_of(companion).gens == companion.gens

    def test_zero_ideal(self):
        assert t_lex_ideal_of(MonomialIdeal(KK_CTX)).is_zero

    def test_inadmissible_counts_propagate(self):
        # a lone middle variable spreads more slowly than any lex segment
        with pytest.raises(InvalidFtVectorError):
            t_lex_ideal_of(MonomialIdeal(Context(6, 2), ((5,),)))
