"""q-characters and decomposition numbers for quantum affine sl2.

Drinfeld data are passed as ``{exponent: multiplicity}`` dicts, characters
come back as lists of ``({exponent: power}, coefficient)`` pairs in canonical
order, and t-polynomials as coefficient lists indexed by the power of t.
"""

from ._qchar import (
    DomainError,
    InvariantError,
    OverflowError,
    ParseError,
    QcharError,
    character_dimension,
    decompose,
    decompose_bruteforce,
    decomposition_row,
    gauss_binom_t,
    ic_stalk_poly,
    in_general_position,
    kr_character,
    multiplicity_closed,
    multiplicity_oracle,
    parse_drinfeld,
    rank_tuple,
    rigid_decomposition,
    row_json,
    simple_character,
    standard_character,
    standard_character_geometric,
    standard_ordering,
    stratum,
    t_system_holds,
)

__all__ = [
    "DomainError",
    "InvariantError",
    "OverflowError",
    "ParseError",
    "QcharError",
    "character_dimension",
    "decompose",
    "decompose_bruteforce",
    "decomposition_row",
    "gauss_binom_t",
    "ic_stalk_poly",
    "in_general_position",
    "kr_character",
    "multiplicity_closed",
    "multiplicity_oracle",
    "parse_drinfeld",
    "rank_tuple",
    "rigid_decomposition",
    "row_json",
    "simple_character",
    "standard_character",
    "standard_character_geometric",
    "standard_ordering",
    "stratum",
    "t_system_holds",
]
