"""Nim positions as sorted heap tuples.

A position is a nondecreasing tuple of positive heap sizes; ``()`` is the
empty position.  Ordering is shortlex: shorter tuples first, equal lengths
compared lexicographically.
"""

from __future__ import annotations

from functools import reduce
from itertools import combinations_with_replacement
from operator import xor
from typing import Iterable

from .games import GameRef, GameStore, Outcome, default_store

NimPosition = tuple[int, ...]


def nim_position(heaps: Iterable[int]) -> NimPosition:
    """Normalize heap sizes: drop zeros and sort."""
    out = []
    for h in heaps:
        if h < 0:
            raise ValueError(f"negative heap size {h}")
        if h:
            out.append(int(h))
    return tuple(sorted(out))


def shortlex_key(p: NimPosition) -> tuple[int, NimPosition]:
    return (len(p), p)


def quasi_lex_cmp(a: NimPosition, b: NimPosition) -> int:
    """Return -1, 0 or 1 as ``a`` precedes, equals or follows ``b``."""
    ka, kb = shortlex_key(a), shortlex_key(b)
    return (ka > kb) - (ka < kb)


def precedes(a: NimPosition, b: NimPosition) -> bool:
    return shortlex_key(a) < shortlex_key(b)


def options(p: NimPosition) -> set[NimPosition]:
    """All positions one move away from ``p``."""
    out = set()
    for i, h in enumerate(p):
        if i and p[i - 1] == h:
            continue
        rest = p[:i] + p[i + 1:]
        for k in range(h):
            out.add(nim_position(rest + (k,)))
    return out


def xor1(n: int) -> int:
    """``n`` with its lowest bit flipped."""
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    return n ^ 1


def reduced_form(p: NimPosition) -> NimPosition:
    """Canonical representative of the impartial class of ``p``.

    Pairs of odd heaps are lowered by one each, smallest pair first, until at
    most one odd heap remains.  A remaining odd heap that is not the largest
    hands one stone to a largest heap.  Empty heaps are then dropped.
    """
    heaps = sorted(p)
    odd = [i for i, h in enumerate(heaps) if h % 2]
    while len(odd) >= 2:
        i, j = odd[0], odd[1]
        heaps[i] -= 1
        heaps[j] -= 1
        odd = odd[2:]
    if odd:
        i = odd[0]
        top = max(heaps)
        if heaps[i] != top:
            last_max = max(k for k, h in enumerate(heaps) if h == top)
            heaps[i] -= 1
            heaps[last_max] += 1
    return nim_position(heaps)


def is_reduced(p: NimPosition) -> bool:
    odd = [h for h in p if h % 2]
    if not odd:
        return True
    return len(odd) == 1 and p[-1] == odd[0] and (len(p) == 1 or p[-2] < p[-1])


def nim_closed_outcome(p: NimPosition) -> Outcome:
    """Misère outcome from the Nim rule (always P or N)."""
    if any(h >= 2 for h in p):
        return Outcome.N if reduce(xor, p, 0) else Outcome.P
    return Outcome.N if len(p) % 2 == 0 else Outcome.P


def misere_best_moves(p: NimPosition) -> set[NimPosition]:
    """Options of ``p`` that leave the opponent in a P-position."""
    return {q for q in options(p) if nim_closed_outcome(q) is Outcome.P}


def from_nim_position(p: Iterable[int], store: GameStore | None = None) -> GameRef:
    """The game tree of a Nim position, as an interned ref."""
    store = store or default_store()
    p = nim_position(p)
    g = store.sum_all(store.nim_heap(h) for h in p)
    if len(p) > 1:
        store.label(g, "+".join(f"*{h}" for h in p))
    return g


def enumerate_positions(max_heaps: int, max_size: int) -> list[NimPosition]:
    """Positions with at most ``max_heaps`` heaps of size at most ``max_size``, in shortlex order."""
    sizes = range(1, max_size + 1)
    out: list[NimPosition] = []
    for n in range(max_heaps + 1):
        out.extend(combinations_with_replacement(sizes, n))
        if max_size < 1:
            break
    return out
