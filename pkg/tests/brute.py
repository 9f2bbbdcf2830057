"""Store-free reference implementations used as test oracles.

Games here are plain nested tuples ``(left_options, right_options)`` with no
interning, dedup or memo shared with the package under test.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from operator import xor

ZERO = ((), ())


def heap(n):
    opts = tuple(heap(k) for k in range(n))
    return (opts, opts)


def add(g, h):
    gl, gr = g
    hl, hr = h
    left = tuple(add(x, h) for x in gl) + tuple(add(g, y) for y in hl)
    right = tuple(add(x, h) for x in gr) + tuple(add(g, y) for y in hr)
    return (left, right)


@lru_cache(maxsize=None)
def left_first_wins(g) -> bool:
    left, _ = g
    return not left or any(not right_first_wins(x) for x in left)


@lru_cache(maxsize=None)
def right_first_wins(g) -> bool:
    _, right = g
    return not right or any(not left_first_wins(x) for x in right)


def outcome(g) -> str:
    lf, rf = left_first_wins(g), right_first_wins(g)
    return {(True, True): "N", (True, False): "L", (False, True): "R", (False, False): "P"}[(lf, rf)]


@lru_cache(maxsize=None)
def nim_mover_wins(heaps: tuple[int, ...]) -> bool:
    """Misère Nim by exhaustive search over heap tuples."""
    if not any(heaps):
        return True
    for i, h in enumerate(heaps):
        for k in range(h):
            child = tuple(sorted(heaps[:i] + (k,) + heaps[i + 1:]))
            if not nim_mover_wins(child):
                return True
    return False


def nim_outcome(heaps) -> str:
    return "N" if nim_mover_wins(tuple(sorted(heaps))) else "P"


def grundy_xor(heaps) -> int:
    return reduce(xor, heaps, 0)


def reduce_by_hand(heaps) -> tuple[int, ...]:
    """Reduced form, following the three rewriting steps literally on a list."""
    hs = sorted(heaps)
    while True:
        odds = sorted((h, i) for i, h in enumerate(hs) if h % 2 == 1)
        if len(odds) < 2:
            break
        (_, i), (_, j) = odds[0], odds[1]
        hs[i] -= 1
        hs[j] -= 1
    odds = [i for i, h in enumerate(hs) if h % 2 == 1]
    if odds:
        i = odds[0]
        biggest = max(hs)
        if hs[i] < biggest:
            hs[i] -= 1
            hs[hs.index(biggest)] += 1
    return tuple(sorted(h for h in hs if h > 0))
