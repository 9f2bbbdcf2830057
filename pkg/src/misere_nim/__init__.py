"""Misère equivalence classes of Nim positions."""

from .equivalence import (
    Comparator,
    comparator,
    downlinked,
    impartial_equiv,
    linked,
    partizan_eq,
    partizan_ge,
)
from .games import (
    GameRef,
    GameStore,
    NotImpartialError,
    Outcome,
    default_store,
    format_game,
    game_sum,
    is_impartial,
    make_game,
    misere_outcome,
    nim_heap,
    normal_grundy,
    outcome_ge,
    zero,
)
from .nim import (
    NimPosition,
    enumerate_positions,
    from_nim_position,
    misere_best_moves,
    nim_closed_outcome,
    options,
    quasi_lex_cmp,
    reduced_form,
    xor1,
)
from .notation import ParseError, format_position, parse_game, parse_position

__all__ = [
    "Comparator",
    "GameRef",
    "GameStore",
    "NimPosition",
    "NotImpartialError",
    "Outcome",
    "ParseError",
    "comparator",
    "default_store",
    "downlinked",
    "enumerate_positions",
    "format_game",
    "format_position",
    "from_nim_position",
    "game_sum",
    "impartial_equiv",
    "is_impartial",
    "linked",
    "make_game",
    "misere_best_moves",
    "misere_outcome",
    "nim_closed_outcome",
    "nim_heap",
    "normal_grundy",
    "options",
    "outcome_ge",
    "parse_game",
    "parse_position",
    "partizan_eq",
    "partizan_ge",
    "quasi_lex_cmp",
    "reduced_form",
    "xor1",
    "zero",
]
