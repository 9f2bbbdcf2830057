"""Hash-consed short games, disjunctive sums and misère outcomes.

Every game lives in a :class:`GameStore` as an interned node whose Left and
Right option sets are sorted tuples of integer refs.  Structurally identical
nodes always get the same ref, so game identity is integer equality and every
derived quantity (outcome, sum, impartiality) can be memoized per ref.

The store is not thread-safe; share it across threads only behind a lock.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NewType

GameRef = NewType("GameRef", int)


class NotImpartialError(ValueError):
    """Raised when an impartial-only operation receives a partizan game."""


class Outcome(enum.Enum):
    """Misère outcome class of a game."""

    L = "L"
    R = "R"
    P = "P"
    N = "N"

    def __ge__(self, other: Outcome) -> bool:
        return outcome_ge(self, other)

    def __le__(self, other: Outcome) -> bool:
        return outcome_ge(other, self)

    def __str__(self) -> str:
        return self.value


# (a, b) pairs with a >= b; everything else is incomparable or strictly below.
_OUTCOME_GE = frozenset(
    [(x, x) for x in Outcome]
    + [
        (Outcome.L, Outcome.P),
        (Outcome.L, Outcome.N),
        (Outcome.L, Outcome.R),
        (Outcome.P, Outcome.R),
        (Outcome.N, Outcome.R),
    ]
)


def outcome_ge(a: Outcome, b: Outcome) -> bool:
    """True iff ``a >= b`` in the outcome order (L top, R bottom, P || N)."""
    return (a, b) in _OUTCOME_GE


@dataclass(frozen=True)
class GameNode:
    left: tuple[GameRef, ...]
    right: tuple[GameRef, ...]
    impartial: bool
    birthday: int


class GameStore:
    """Interning table for short games plus per-ref memo tables."""

    def __init__(self) -> None:
        self._nodes: list[GameNode] = []
        self._index: dict[tuple[tuple[int, ...], tuple[int, ...]], GameRef] = {}
        self._outcomes: dict[GameRef, Outcome] = {}
        self._sums: dict[tuple[GameRef, GameRef], GameRef] = {}
        self._grundy: dict[GameRef, int] = {}
        self._heaps: list[GameRef] = []
        self._labels: dict[GameRef, str] = {}
        self._zero = self.make_game((), ())

    def __len__(self) -> int:
        return len(self._nodes)

    # -- construction -----------------------------------------------------

    def _intern(self, left: tuple[GameRef, ...], right: tuple[GameRef, ...]) -> GameRef:
        key = (left, right)
        ref = self._index.get(key)
        if ref is not None:
            return ref
        nodes = self._nodes
        impartial = left == right and all(nodes[x].impartial for x in left)
        birthday = 1 + max((nodes[x].birthday for x in left + right), default=-1)
        ref = GameRef(len(nodes))
        nodes.append(GameNode(left, right, impartial, birthday))
        self._index[key] = ref
        return ref

    def make_game(self, left: Iterable[GameRef], right: Iterable[GameRef]) -> GameRef:
        """Intern the game ``{left | right}`` and return its canonical ref."""
        left_t = tuple(sorted(set(left)))
        right_t = tuple(sorted(set(right)))
        n = len(self._nodes)
        for x in left_t + right_t:
            if not 0 <= x < n:
                raise ValueError(f"unknown game ref {x!r}")
        return self._intern(left_t, right_t)

    def make_impartial(self, options: Iterable[GameRef]) -> GameRef:
        opts = list(options)
        return self.make_game(opts, opts)

    def zero(self) -> GameRef:
        return self._zero

    def nim_heap(self, n: int) -> GameRef:
        """The Nim heap of size ``n``: options are every smaller heap."""
        if n < 0:
            raise ValueError(f"heap size must be non-negative, got {n}")
        heaps = self._heaps
        if not heaps:
            heaps.append(self._zero)
        while len(heaps) <= n:
            opts = tuple(sorted(heaps))
            heaps.append(self._intern(opts, opts))
        return heaps[n]

    def node(self, g: GameRef) -> GameNode:
        return self._nodes[g]

    def left(self, g: GameRef) -> tuple[GameRef, ...]:
        return self._nodes[g].left

    def right(self, g: GameRef) -> tuple[GameRef, ...]:
        return self._nodes[g].right

    def options(self, g: GameRef) -> tuple[GameRef, ...]:
        """Options of an impartial game."""
        node = self._nodes[g]
        if not node.impartial:
            raise NotImpartialError(f"game {g} is not impartial")
        return node.left

    def is_impartial(self, g: GameRef) -> bool:
        return self._nodes[g].impartial

    def is_zero(self, g: GameRef) -> bool:
        return g == self._zero

    def birthday(self, g: GameRef) -> int:
        return self._nodes[g].birthday

    # -- sums -------------------------------------------------------------

    def sum(self, g: GameRef, h: GameRef) -> GameRef:
        """Disjunctive sum ``g + h``; a move is a move in exactly one summand."""
        sums = self._sums
        zero = self._zero
        nodes = self._nodes

        def key(a: GameRef, b: GameRef) -> tuple[GameRef, GameRef]:
            return (a, b) if a <= b else (b, a)

        def trivial(a: GameRef, b: GameRef) -> GameRef | None:
            if a == zero:
                return b
            if b == zero:
                return a
            return sums.get(key(a, b))

        done = trivial(g, h)
        if done is not None:
            return done

        # Explicit post-order worklist: a pair is built once all child pairs are.
        stack = [(g, h)]
        while stack:
            a, b = stack[-1]
            k = key(a, b)
            if k in sums:
                stack.pop()
                continue
            na, nb = nodes[a], nodes[b]
            children = (
                [(x, b) for x in na.left]
                + [(a, y) for y in nb.left]
                + [(x, b) for x in na.right]
                + [(a, y) for y in nb.right]
            )
            missing = [c for c in children if trivial(*c) is None]
            if missing:
                stack.extend(missing)
                continue
            left = [trivial(x, b) for x in na.left] + [trivial(a, y) for y in nb.left]
            right = [trivial(x, b) for x in na.right] + [trivial(a, y) for y in nb.right]
            sums[k] = self.make_game(left, right)  # type: ignore[arg-type]
            stack.pop()
        return sums[key(g, h)]

    def sum_all(self, games: Iterable[GameRef]) -> GameRef:
        total = self._zero
        for x in games:
            total = self.sum(total, x)
        return total

    # -- evaluation -------------------------------------------------------

    def misere_outcome(self, g: GameRef) -> Outcome:
        """Misère outcome: a player with no move available wins."""
        memo = self._outcomes
        if g in memo:
            return memo[g]
        nodes = self._nodes
        stack = [g]
        while stack:
            x = stack[-1]
            if x in memo:
                stack.pop()
                continue
            node = nodes[x]
            missing = [y for y in node.left + node.right if y not in memo]
            if missing:
                stack.extend(missing)
                continue
            # Left moving first wins iff Left cannot move, or can reach a game
            # Right (now to move) loses; symmetrically for Right.
            left_first = not node.left or any(
                memo[y] in (Outcome.L, Outcome.P) for y in node.left
            )
            right_first = not node.right or any(
                memo[y] in (Outcome.R, Outcome.P) for y in node.right
            )
            if left_first and right_first:
                memo[x] = Outcome.N
            elif left_first:
                memo[x] = Outcome.L
            elif right_first:
                memo[x] = Outcome.R
            else:
                memo[x] = Outcome.P
            stack.pop()
        return memo[g]

    def normal_grundy(self, g: GameRef) -> int:
        """Normal-play Grundy value (mex of option values)."""
        if not self.is_impartial(g):
            raise NotImpartialError(f"game {g} is not impartial")
        memo = self._grundy
        nodes = self._nodes
        stack = [g]
        while stack:
            x = stack[-1]
            if x in memo:
                stack.pop()
                continue
            missing = [y for y in nodes[x].left if y not in memo]
            if missing:
                stack.extend(missing)
                continue
            seen = {memo[y] for y in nodes[x].left}
            mex = 0
            while mex in seen:
                mex += 1
            memo[x] = mex
            stack.pop()
        return memo[g]

    # -- display ----------------------------------------------------------

    def heap_size(self, g: GameRef) -> int | None:
        """Size ``n`` if ``g`` is the Nim heap ``*n``, else None."""
        node = self._nodes[g]
        if not node.impartial:
            return None
        n = node.birthday
        return n if self.nim_heap(n) == g else None

    def label(self, g: GameRef, text: str) -> None:
        """Register a display name for ``g``; the first name registered wins."""
        self._labels.setdefault(g, text)

    def format_game(self, g: GameRef) -> str:
        """Render ``g`` in brace notation, using ``*n`` for Nim heaps and registered labels."""
        if g == self._zero:
            return "0"
        n = self.heap_size(g)
        if n is not None:
            return f"*{n}"
        if g in self._labels:
            return self._labels[g]
        node = self._nodes[g]
        left = ",".join(self.format_game(x) for x in node.left)
        right = ",".join(self.format_game(x) for x in node.right)
        return "{" + left + "|" + right + "}"


_default_store = GameStore()


def default_store() -> GameStore:
    return _default_store


def make_game(left: Iterable[GameRef], right: Iterable[GameRef]) -> GameRef:
    return _default_store.make_game(left, right)


def zero() -> GameRef:
    return _default_store.zero()


def nim_heap(n: int) -> GameRef:
    return _default_store.nim_heap(n)


def game_sum(g: GameRef, h: GameRef) -> GameRef:
    return _default_store.sum(g, h)


def misere_outcome(g: GameRef) -> Outcome:
    return _default_store.misere_outcome(g)


def is_impartial(g: GameRef) -> bool:
    return _default_store.is_impartial(g)


def normal_grundy(g: GameRef) -> int:
    return _default_store.normal_grundy(g)


def format_game(g: GameRef) -> str:
    return _default_store.format_game(g)
