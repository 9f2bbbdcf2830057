"""Brute-force context search and exhaustive classification checks.

Contexts are finite truncations of "all impartial games" / "all games": every
game up to a birthday bound, optionally extended with Nim positions.  A
context search can refute an equivalence but never prove one.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .equivalence import Comparator, comparator
from .games import GameRef, GameStore, NotImpartialError, Outcome, default_store
from .nim import (
    NimPosition,
    enumerate_positions,
    from_nim_position,
    options,
    quasi_lex_cmp,
    reduced_form,
    xor1,
)

log = logging.getLogger(__name__)

MAX_IMPARTIAL_BIRTHDAY = 4
MAX_PARTIZAN_BIRTHDAY = 2
DEFAULT_MAX_PAIRS = 500_000


class Context(str, enum.Enum):
    IMPARTIAL = "impartial"
    PARTIZAN = "partizan"


class BudgetExceededError(RuntimeError):
    pass


class ContextKindError(ValueError):
    pass


@dataclass(frozen=True)
class ContextSet:
    kind: Context
    max_birthday: int
    games: tuple[GameRef, ...]

    def __len__(self) -> int:
        return len(self.games)

    def __iter__(self) -> Iterator[GameRef]:
        return iter(self.games)


@dataclass(frozen=True)
class ClassReport:
    context: Context
    bounds: tuple[int, int]
    classes: tuple[tuple[NimPosition, ...], ...]

    @property
    def representatives(self) -> tuple[NimPosition, ...]:
        return tuple(c[0] for c in self.classes)

    def class_of(self, p: NimPosition) -> tuple[NimPosition, ...]:
        for c in self.classes:
            if p in c:
                return c
        raise KeyError(p)


def _by_birthday(store: GameStore, max_birthday: int, make) -> list[GameRef]:
    # Day b adds every option choice over days < b that is not already present.
    games = [store.zero()]
    for _ in range(max_birthday):
        seen = set(games)
        for g in make(tuple(games)):
            if g not in seen:
                seen.add(g)
                games.append(g)
    return games


def _subsets(games: Sequence[GameRef]) -> Iterator[tuple[GameRef, ...]]:
    for mask in range(1 << len(games)):
        yield tuple(g for i, g in enumerate(games) if mask >> i & 1)


def enumerate_impartial(
    max_birthday: int,
    store: GameStore | None = None,
    limit: int = MAX_IMPARTIAL_BIRTHDAY,
) -> ContextSet:
    """Every impartial game born by day ``max_birthday``, in generation order."""
    if max_birthday > limit:
        raise BudgetExceededError(f"impartial birthday {max_birthday} exceeds limit {limit}")
    store = store or default_store()
    games = _by_birthday(
        store, max_birthday, lambda prev: (store.make_impartial(s) for s in _subsets(prev))
    )
    return ContextSet(Context.IMPARTIAL, max_birthday, tuple(games))


def enumerate_partizan(
    max_birthday: int,
    store: GameStore | None = None,
    limit: int = MAX_PARTIZAN_BIRTHDAY,
) -> ContextSet:
    """Every short game born by day ``max_birthday``, in generation order."""
    if max_birthday > limit:
        raise BudgetExceededError(f"partizan birthday {max_birthday} exceeds limit {limit}")
    store = store or default_store()

    def make(prev):
        subsets = list(_subsets(prev))
        return (store.make_game(lo, ro) for lo, ro in product(subsets, repeat=2))

    games = _by_birthday(store, max_birthday, make)
    return ContextSet(Context.PARTIZAN, max_birthday, tuple(games))


def context_set(
    kind: Context | str,
    max_birthday: int = 3,
    positions: Iterable[NimPosition] = (),
    store: GameStore | None = None,
) -> ContextSet:
    """Standard context universe: small games, then Nim positions.

    The impartial universe is every impartial game born by ``max_birthday``
    followed by the given Nim positions.  The partizan universe adds every
    game born by day 2 and the pairwise sums of the day-1 games.
    """
    kind = Context(kind)
    store = store or default_store()
    games = list(enumerate_impartial(max_birthday, store).games)
    if kind is Context.PARTIZAN:
        day2 = enumerate_partizan(min(max_birthday, MAX_PARTIZAN_BIRTHDAY), store).games
        day1 = enumerate_partizan(min(max_birthday, 1), store).games
        games.extend(day2)
        games.extend(store.sum(a, b) for a, b in combinations(day1, 2))
    games.extend(from_nim_position(p, store) for p in positions)
    return ContextSet(kind, max_birthday, tuple(dict.fromkeys(games)))


def refute_equiv(
    g: GameRef,
    h: GameRef,
    contexts: ContextSet,
    kind: Context | str | None = None,
    store: GameStore | None = None,
) -> GameRef | None:
    """First context ``x`` with ``o(g + x) != o(h + x)``, or None."""
    store = store or default_store()
    kind = Context(kind) if kind is not None else contexts.kind
    if kind is not contexts.kind:
        raise ContextKindError(f"{kind.value} relation probed with {contexts.kind.value} contexts")
    if kind is Context.IMPARTIAL and not (store.is_impartial(g) and store.is_impartial(h)):
        raise NotImpartialError("impartial refutation needs impartial games")
    if g == h:
        return None
    outcome = store.misere_outcome
    for x in contexts:
        if outcome(store.sum(g, x)) is not outcome(store.sum(h, x)):
            return x
    return None


def confirm_linked(
    g: GameRef, h: GameRef, contexts: ContextSet, store: GameStore | None = None
) -> GameRef | None:
    """Some impartial ``t`` making both ``g + t`` and ``h + t`` P-positions, or None."""
    store = store or default_store()
    if contexts.kind is not Context.IMPARTIAL:
        raise ContextKindError("linkage witnesses must come from impartial contexts")
    if not (store.is_impartial(g) and store.is_impartial(h)):
        raise NotImpartialError("linkage is defined for impartial games")
    outcome = store.misere_outcome
    for t in contexts:
        if outcome(store.sum(g, t)) is Outcome.P and outcome(store.sum(h, t)) is Outcome.P:
            return t
    return None


# -- exhaustive checks over Nim positions ----------------------------------


@dataclass
class CrossCheck:
    """Recursive verdicts for every pair in range, checked against a context search."""

    witnesses: dict[tuple[NimPosition, NimPosition], GameRef]
    gaps: list[tuple[NimPosition, NimPosition]]
    contradictions: list[tuple[NimPosition, NimPosition, GameRef]]
    pairs: int


def _check_budget(n_positions: int, max_pairs: int) -> None:
    pairs = n_positions * (n_positions - 1) // 2
    if pairs > max_pairs:
        raise BudgetExceededError(f"{pairs} pairs exceed the budget of {max_pairs}")


def _relation(context: Context, comp: Comparator):
    return comp.impartial_equiv if context is Context.IMPARTIAL else comp.partizan_eq


def classify(
    max_heaps: int,
    max_size: int,
    context: Context | str,
    store: GameStore | None = None,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> ClassReport:
    """Partition the Nim positions in range by the recursive equivalence test."""
    context = Context(context)
    store = store or default_store()
    positions = enumerate_positions(max_heaps, max_size)
    _check_budget(len(positions), max_pairs)
    same = _relation(context, comparator(store))
    classes: list[list[NimPosition]] = []
    reps: list[GameRef] = []
    for p in positions:
        g = from_nim_position(p, store)
        for members, rep in zip(classes, reps):
            if same(rep, g):
                members.append(p)
                break
        else:
            classes.append([p])
            reps.append(g)
    return ClassReport(context, (max_heaps, max_size), tuple(tuple(c) for c in classes))


def reduced_fiber_violations(
    max_heaps: int, max_size: int, store: GameStore | None = None, max_pairs: int = DEFAULT_MAX_PAIRS
) -> Iterator[str]:
    store = store or default_store()
    comp = comparator(store)
    positions = enumerate_positions(max_heaps, max_size)
    _check_budget(len(positions), max_pairs)
    games = [from_nim_position(p, store) for p in positions]
    reduced = [reduced_form(p) for p in positions]
    for p, g, r in zip(positions, games, reduced):
        if not comp.impartial_equiv(g, from_nim_position(r, store)):
            yield f"{p} is not equivalent to its reduced form {r}"
    for i, j in combinations(range(len(positions)), 2):
        equiv = comp.impartial_equiv(games[i], games[j])
        if equiv != (reduced[i] == reduced[j]):
            yield (
                f"{positions[i]} vs {positions[j]}: equivalent={equiv} "
                f"but reduced forms {reduced[i]} and {reduced[j]}"
            )


def verify_reduced_fibers(max_heaps: int, max_size: int, store: GameStore | None = None) -> bool:
    """Impartial equivalence coincides with equality of reduced forms in range."""
    return next(reduced_fiber_violations(max_heaps, max_size, store), None) is None


def partizan_singleton_violations(
    max_heaps: int, max_size: int, store: GameStore | None = None, max_pairs: int = DEFAULT_MAX_PAIRS
) -> Iterator[str]:
    store = store or default_store()
    comp = comparator(store)
    positions = enumerate_positions(max_heaps, max_size)
    _check_budget(len(positions), max_pairs)
    games = [from_nim_position(p, store) for p in positions]
    for i, j in combinations(range(len(positions)), 2):
        if comp.partizan_eq(games[i], games[j]):
            yield f"{positions[i]} = {positions[j]} in the partizan context"


def verify_partizan_singletons(max_heaps: int, max_size: int, store: GameStore | None = None) -> bool:
    """Distinct Nim positions in range are never partizan-equal."""
    return next(partizan_singleton_violations(max_heaps, max_size, store), None) is None


def adding_one_violations(max_n: int, store: GameStore | None = None) -> Iterator[str]:
    store = store or default_store()
    comp = comparator(store)
    one = store.nim_heap(1)
    for n in range(max_n + 1):
        if not comp.impartial_equiv(store.sum(store.nim_heap(n), one), store.nim_heap(xor1(n))):
            yield f"{n}+1 is not equivalent to {xor1(n)}"


def verify_adding_one(max_n: int, store: GameStore | None = None) -> bool:
    """``n + 1`` is impartially equivalent to the heap ``n ^ 1`` for all ``n <= max_n``."""
    return next(adding_one_violations(max_n, store), None) is None


def order_lemma_violations(max_heaps: int, max_size: int) -> Iterator[str]:
    """Check the shortlex facts about options and reduced forms in range."""
    for p in enumerate_positions(max_heaps, max_size):
        opts = options(p)
        for q in opts:
            if quasi_lex_cmp(q, p) >= 0:
                yield f"option {q} does not precede {p}"
        red = reduced_form(p)
        if quasi_lex_cmp(red, p) > 0:
            yield f"reduced form {red} follows {p}"
        if not p:
            continue
        least = min(opts, key=lambda q: (len(q), q))
        if least != p[:-1]:
            yield f"least option of {p} is {least}, expected {p[:-1]}"
        for q in opts:
            if quasi_lex_cmp(reduced_form(q), p) >= 0:
                yield f"reduced option {reduced_form(q)} of {p} does not precede it"
        if red == p:
            least_red = min((reduced_form(q) for q in opts), key=lambda q: (len(q), q))
            if least_red != p[:-1]:
                yield f"least reduced option of {p} is {least_red}, expected {p[:-1]}"


def verify_order_lemmas(max_heaps: int, max_size: int) -> bool:
    return next(order_lemma_violations(max_heaps, max_size), None) is None


def cross_check(
    max_heaps: int,
    max_size: int,
    contexts: ContextSet,
    store: GameStore | None = None,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> CrossCheck:
    """Search ``contexts`` for a distinguishing game for every pair in range.

    Pairs the recursive test calls equivalent must have no witness; a witness
    there is a contradiction.  Inequivalent pairs with no witness are gaps in
    the finite context set, logged but not treated as errors.
    """
    store = store or default_store()
    same = _relation(contexts.kind, comparator(store))
    positions = enumerate_positions(max_heaps, max_size)
    _check_budget(len(positions), max_pairs)
    games = [from_nim_position(p, store) for p in positions]
    result = CrossCheck({}, [], [], 0)
    for i, j in combinations(range(len(positions)), 2):
        p, q = positions[i], positions[j]
        result.pairs += 1
        x = refute_equiv(games[i], games[j], contexts, store=store)
        if same(games[i], games[j]):
            if x is not None:
                result.contradictions.append((p, q, x))
        elif x is None:
            log.info("no witness separates %s and %s", p, q)
            result.gaps.append((p, q))
        else:
            result.witnesses[(p, q)] = x
    return result
