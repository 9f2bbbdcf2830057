"""Text notation for Nim positions and general games.

Positions are sums of numerals (``"4+1+0+1"``).  Games additionally allow
``*n`` and brace notation ``{a,b|c}``, e.g. ``"{0|} + *2"``.
"""

from __future__ import annotations

from .games import GameRef, GameStore, default_store
from .nim import NimPosition, nim_position


class ParseError(ValueError):
    """Malformed expression; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, text: str, index: int) -> None:
        self.offset = len(text[:index].encode("utf-8"))
        super().__init__(f"{message} at byte {self.offset}")


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.i = 0

    def skip_ws(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.i)

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.i += 1

    def natural(self) -> int:
        self.skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i] in "0123456789":
            self.i += 1
        if start == self.i:
            ch = self.peek()
            if ch == "-":
                raise self.error("negative heap sizes are not allowed")
            raise self.error(f"expected a natural number, found {ch!r}" if ch else
                             "expected a natural number, found end of input")
        return int(self.text[start:self.i])


def parse_position(text: str) -> NimPosition:
    """Parse ``"a+b+..."`` into a sorted heap tuple; zeros are dropped."""
    sc = _Scanner(text)
    if sc.at_end():
        return ()
    heaps = [sc.natural()]
    while not sc.at_end():
        sc.expect("+")
        heaps.append(sc.natural())
    return nim_position(heaps)


def format_position(p: NimPosition) -> str:
    return "+".join(map(str, p)) if p else "0"


def parse_game(text: str, store: GameStore | None = None) -> GameRef:
    """Parse a game expression into an interned ref.

    Grammar::

        sum      := atom ('+' atom)*
        atom     := natural | '*' natural | '{' gamelist '|' gamelist '}'
        gamelist := empty | sum (',' sum)*
    """
    store = store or default_store()
    sc = _Scanner(text)

    def sum_() -> GameRef:
        g = atom()
        while sc.peek() == "+":
            sc.i += 1
            g = store.sum(g, atom())
        return g

    def gamelist(stop: str) -> list[GameRef]:
        if sc.peek() == stop:
            return []
        games = [sum_()]
        while sc.peek() == ",":
            sc.i += 1
            games.append(sum_())
        return games

    def atom() -> GameRef:
        ch = sc.peek()
        if ch == "*":
            sc.i += 1
            return store.nim_heap(sc.natural())
        if ch == "{":
            sc.i += 1
            left = gamelist("|")
            sc.expect("|")
            right = gamelist("}")
            sc.expect("}")
            return store.make_game(left, right)
        return store.nim_heap(sc.natural())

    if sc.at_end():
        raise sc.error("empty game expression")
    g = sum_()
    if not sc.at_end():
        raise sc.error(f"unexpected {sc.peek()!r}")
    return g
