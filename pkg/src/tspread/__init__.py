"""Combinatorics of t-spread monomials: construction, counting, invariants.

A t-spread monomial is a squarefree monomial whose consecutive support
indices differ by at least t.  This package builds and counts lex segments
and strongly stable sets of such monomials working purely on index
sequences, computes graded Betti tables and extremal corners of strongly
stable ideals, and carries the quotient-count (Kruskal-Katona style)
toolkit: admissibility tests, Macaulay expansions and lex ideal
construction.  Brute-force oracles for cross-checking live in
:mod:`tspread.oracle`; the command line front end in :mod:`tspread.cli`.
"""

from .betti import (
    BettiTable,
    CornerConfig,
    degree_sequence,
    extremal_corners,
    graded_betti,
    realize_extremal_betti,
)
from .construct import (
    is_t_lex_ideal,
    is_t_lex_seg,
    is_t_ss_ideal,
    is_t_ss_seg,
    is_t_ss_set,
    iter_veronese,
    t_lex_mon,
    t_lex_seg,
    t_next_lex,
    t_shadow,
    t_shadow_set,
    t_spread_component,
    t_ss_ideal,
    t_ss_mon,
    t_ss_seg,
    t_ss_set,
    t_veronese,
    t_veronese_ideal,
)
from .core import (
    BorelIncomparableError,
    Context,
    EmptyVeroneseError,
    InfeasibleCornersError,
    InvalidFtVectorError,
    Monomial,
    MonomialIdeal,
    NotStronglyStableError,
    NotTSpreadError,
    TSpreadError,
    borel_geq,
    cmp_slex,
    exchange_moves,
    is_t_spread,
    is_t_spread_ideal,
    max_mon,
    min_mon,
    minimalize,
    sieve_t_spread,
    slex_max,
    slex_min,
    validate_monomial,
)
from .count import (
    BinomialTerm,
    binomial,
    binomial_decomposition,
    card_veronese,
    count_t_lex_mon,
    count_t_ss_mon,
    count_terms_ss,
    cq_operator,
    iter_lex_count_terms,
    iter_ss_count_terms,
)
from .kk import (
    ft_vector,
    is_ft_vector,
    solve_binomial_expansion,
    t_lex_ideal_from_f,
    t_lex_ideal_of,
    t_macaulay_expansion,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "BinomialTerm",
    "BorelIncomparableError",
    "Context",
    "CornerConfig",
    "EmptyVeroneseError",
    "InfeasibleCornersError",
    "InvalidFtVectorError",
    "Monomial",
    "MonomialIdeal",
    "NotStronglyStableError",
    "NotTSpreadError",
    "TSpreadError",
    "binomial",
    "binomial_decomposition",
    "borel_geq",
    "card_veronese",
    "cmp_slex",
    "count_t_lex_mon",
    "count_t_ss_mon",
    "count_terms_ss",
    "cq_operator",
    "degree_sequence",
    "exchange_moves",
    "extremal_corners",
    "ft_vector",
    "graded_betti",
    "is_ft_vector",
    "is_t_lex_ideal",
    "is_t_lex_seg",
    "is_t_spread",
    "is_t_spread_ideal",
    "is_t_ss_ideal",
    "is_t_ss_seg",
    "is_t_ss_set",
    "iter_lex_count_terms",
    "iter_ss_count_terms",
    "iter_veronese",
    "max_mon",
    "min_mon",
    "minimalize",
    "realize_extremal_betti",
    "sieve_t_spread",
    "slex_max",
    "slex_min",
    "solve_binomial_expansion",
    "t_lex_ideal_from_f",
    "t_lex_ideal_of",
    "t_lex_mon",
    "t_lex_seg",
    "t_macaulay_expansion",
    "t_next_lex",
    "t_shadow",
    "t_shadow_set",
    "t_spread_component",
    "t_ss_ideal",
    "t_ss_mon",
    "t_ss_seg",
    "t_ss_set",
    "t_veronese",
    "t_veronese_ideal",
    "validate_monomial",
]
