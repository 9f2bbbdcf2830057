import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from misere_nim.games import GameStore
from misere_nim.nim import from_nim_position, nim_position
from misere_nim.notation import ParseError, format_position, parse_game, parse_position


@pytest.mark.parametrize(
    "text, expected",
    [
        ("4+1+0+1", (1, 1, 4)),
        ("0+0+0", ()),
        ("3 + 5", (3, 5)),
        ("", ()),
        ("0", ()),
        ("  7 ", (7,)),
        ("12+3", (3, 12)),
    ],
)
def test_parse_position(text, expected):
    assert parse_position(text) == expected


@pytest.mark.parametrize(
    "text, offset",
    [("3+", 2), ("-1", 0), ("3+-2", 2), ("a", 0), ("3 4", 2), ("1++2", 2), ("+1", 0)],
)
def test_parse_position_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_position(text)
    assert info.value.offset == offset


def test_parse_error_offset_is_in_bytes():
    with pytest.raises(ParseError) as info:
        parse_position("1+é")
    assert info.value.offset == 2
    with pytest.raises(ParseError) as info:
        parse_position("é")
    assert info.value.offset == 0


def test_format_position():
    assert format_position((1, 1, 4)) == "1+1+4"
    assert format_position(()) == "0"


@settings(max_examples=1000)
@given(st.lists(st.integers(0, 50), max_size=8))
def test_round_trip(heaps):
    p = nim_position(heaps)
    assert parse_position(format_position(p)) == p


def test_parse_game():
    store = GameStore()
    z = store.zero()
    assert parse_game("0", store) == z
    assert parse_game("*3", store) == store.nim_heap(3)
    assert parse_game("3", store) == store.nim_heap(3)
    assert parse_game("{0|}", store) == store.make_game([z], [])
    assert parse_game("{ | 0 }", store) == store.make_game([], [z])
    assert parse_game("{0,*1|0}", store) == store.make_game([z, store.nim_heap(1)], [z])
    assert parse_game("2 + 3 + 0", store) == from_nim_position((2, 3), store)
    assert parse_game("{*2+*1|*3}", store) == store.make_game(
        [from_nim_position((1, 2), store)], [store.nim_heap(3)]
    )
    assert parse_game("{0|} + {|0}", store) == store.sum(
        store.make_game([z], []), store.make_game([], [z])
    )


@pytest.mark.parametrize("text", ["", "{0|", "{0}", "*", "{0|}}", "{,|}", "2 +"])
def test_parse_game_errors(text):
    with pytest.raises(ParseError):
        parse_game(text, GameStore())


def test_format_game_round_trips():
    store = GameStore()
    from misere_nim import oracle

    for g in oracle.enumerate_partizan(2, store).games:
        assert parse_game(store.format_game(g), store) == g
