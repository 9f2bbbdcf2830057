"""Exit criteria, one test per criterion, each with its time limit.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import json
import random
import time
from itertools import combinations, product
from pathlib import Path

import pytest

from misere_nim import oracle
from misere_nim.equivalence import Comparator
from misere_nim.games import GameStore
from misere_nim.nim import (
    enumerate_positions,
    from_nim_position,
    is_reduced,
    nim_closed_outcome,
    nim_position,
    options,
    quasi_lex_cmp,
    reduced_form,
)
from misere_nim.notation import format_position, parse_game, parse_position

DATA = Path(__file__).parent / "data"


def shortlex(p):
    return (len(p), p)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.criterion(1, "misère Nim rule agrees with tree search, <=4 heaps of size <=6")
def test_rule_matches_tree_search():
    store = GameStore()
    with Timer() as t:
        positions = enumerate_positions(4, 6)
        mismatches = [
            p for p in positions
            if store.misere_outcome(from_nim_position(p, store)) is not nim_closed_outcome(p)
        ]
    assert len(positions) == 210
    assert mismatches == []
    assert t.elapsed < 60


@pytest.mark.criterion(2, "n+1 is impartially equivalent to n^1 for n = 0..15")
def test_adding_one():
    with Timer() as t:
        ok = oracle.verify_adding_one(15, GameStore())
    assert ok
    assert t.elapsed < 60


@pytest.mark.criterion(3, "impartial classes are reduced-form fibers, (3, 5)")
def test_reduced_fibers():
    with Timer() as t:
        violations = list(oracle.reduced_fiber_violations(3, 5, GameStore()))
    assert violations == []
    assert t.elapsed < 600


@pytest.mark.criterion(4, "partizan classes are singletons, (3, 4)")
def test_partizan_singletons():
    with Timer() as t:
        violations = list(oracle.partizan_singleton_violations(3, 4, GameStore()))
    assert violations == []
    assert t.elapsed < 600


@pytest.mark.criterion(5, "anchors: 1+1 vs 0 in both contexts; sums of 2-heaps distinct")
def test_anchors():
    store = GameStore()
    comp = Comparator(store)
    pos = lambda *h: from_nim_position(h, store)
    assert comp.impartial_equiv(pos(1, 1), pos()) is True
    assert comp.partizan_eq(pos(1, 1), pos()) is False
    twos = [pos(*([2] * k)) for k in range(5)]
    for g, h in combinations(twos, 2):
        assert comp.impartial_equiv(g, h) is False


@pytest.mark.criterion(6, "order lemmas hold for <=4 heaps of size <=6")
def test_order_lemmas():
    violations = []
    for p in enumerate_positions(4, 6):
        opts = options(p)
        violations += [(p, q) for q in opts if quasi_lex_cmp(q, p) != -1]
        if quasi_lex_cmp(reduced_form(p), p) == 1:
            violations.append((p, "reduced form follows"))
        if not p:
            continue
        if min(opts, key=shortlex) != p[:-1]:
            violations.append((p, "least option"))
        if is_reduced(p) and min((reduced_form(q) for q in opts), key=shortlex) != p[:-1]:
            violations.append((p, "least reduced option"))
    assert violations == []


@pytest.mark.criterion(7, "context search never contradicts the recursive test, (3, 5)")
def test_oracle_consistency():
    store = GameStore()
    contexts = oracle.context_set("impartial", 3, enumerate_positions(3, 5), store)
    result = oracle.cross_check(3, 5, contexts, store)
    assert result.contradictions == []
    frozen = json.loads((DATA / "impartial_witnesses_3_5.json").read_text())
    found = {
        f"{format_position(p)} | {format_position(q)}": x for (p, q), x in result.witnesses.items()
    }
    assert set(found) == set(frozen["witnesses"])
    for key, text in frozen["witnesses"].items():
        assert found[key] == parse_game(text, store)
    gaps = [f"{format_position(p)} | {format_position(q)}" for p, q in result.gaps]
    assert gaps == frozen["gaps"]


@pytest.mark.criterion(8, "generic and impartial-specialized equality agree on (3, 4)")
def test_specialization_coherence():
    store = GameStore()
    comp = Comparator(store)
    games = [from_nim_position(p, store) for p in enumerate_positions(3, 4)]
    disagreements = [
        (g, h) for g, h in product(games, repeat=2)
        if comp.partizan_eq_generic(g, h) != comp.partizan_eq_impartial(g, h)
    ]
    assert disagreements == []


@pytest.mark.criterion(9, "parser round trip and literal positions")
def test_parser():
    assert parse_position("4+1+0+1") == (1, 1, 4)
    assert parse_position("0+0+0") == ()
    rng = random.Random(20261016)
    for _ in range(1000):
        p = nim_position(rng.randint(0, 40) for _ in range(rng.randint(0, 8)))
        assert parse_position(format_position(p)) == p
