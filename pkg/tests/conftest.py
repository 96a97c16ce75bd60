"""Shared fixture data: worked examples used across the test modules."""

from tspread.core import Context, MonomialIdeal

# Basic monomials realizing corners {(6,2),(5,4),(4,5),(3,7)} with values
# (2,1,3,2) over 25 variables at spread 3, and the minimal generators of the
# strongly stable ideal they span.
REALIZE_CTX = Context(25, 3)
REALIZE_BASICS = (
    (1, 10),
    (2, 10),
    (3, 6, 9, 15),
    (3, 6, 10, 13, 17),
    (3, 6, 10, 14, 17),
    (3, 6, 11, 14, 17),
    (3, 7, 10, 13, 16, 19, 22),
    (4, 7, 10, 13, 16, 19, 22),
)
REALIZE_GENERATORS = (
    (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10),
    (2, 5), (2, 6), (2, 7), (2, 8), (2, 9), (2, 10),
    (3, 6, 9, 12), (3, 6, 9, 13), (3, 6, 9, 14), (3, 6, 9, 15),
    (3, 6, 10, 13, 16), (3, 6, 10, 13, 17), (3, 6, 10, 14, 17), (3, 6, 11, 14, 17),
    (3, 7, 10, 13, 16, 19, 22), (4, 7, 10, 13, 16, 19, 22),
)
REALIZE_CORNERS = ((6, 2), (5, 4), (4, 5), (3, 7))
REALIZE_VALUES = (2, 1, 3, 2)
REALIZE_TOTALS = [23, 77, 117, 100, 51, 15, 2]

# Ten-generator 2-spread ideal over 8 variables with quotient counts
# {1, 8, 21, 10, 0} and its lex companion with eleven generators.
KK_CTX = Context(8, 2)
KK_IDEAL_GENS = (
    (1, 3, 5), (1, 3, 6), (1, 3, 7), (1, 3, 8), (1, 4, 6),
    (1, 4, 7), (1, 4, 8), (2, 4, 6), (2, 4, 7), (2, 4, 8),
)
KK_LEX_GENS = (
    (1, 3, 5), (1, 3, 6), (1, 3, 7), (1, 3, 8), (1, 4, 6), (1, 4, 7),
    (1, 4, 8), (1, 5, 7), (1, 5, 8), (1, 6, 8), (2, 4, 6, 8),
)
KK_FT = [1, 8, 21, 10, 0]


def realize_ideal() -> MonomialIdeal:
    return MonomialIdeal(REALIZE_CTX, REALIZE_GENERATORS)


def kk_ideal() -> MonomialIdeal:
    return MonomialIdeal(KK_CTX, KK_IDEAL_GENS)
