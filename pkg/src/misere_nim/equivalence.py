"""Recursive misère comparison tests.

Impartial equivalence (same outcome in every sum with an impartial game) and
the partizan order (outcome comparison in every sum with any game) are both
decided without quantifying over contexts: each test recurses only into
options and options of options, so it terminates on short games and needs no
provisional verdicts.  All verdicts are cached per :class:`GameStore`.
"""

from __future__ import annotations

import enum
import weakref
from dataclasses import dataclass, field

from .games import GameRef, GameStore, NotImpartialError, Outcome, default_store


class Relation(enum.Enum):
    EQUIV_IMPARTIAL = "equiv_impartial"
    EQ_IMPARTIAL = "eq_impartial"
    GE_PARTIZAN = "ge_partizan"
    LINKED = "linked"
    DOWNLINKED = "downlinked"


_SYMMETRIC = {Relation.EQUIV_IMPARTIAL, Relation.EQ_IMPARTIAL, Relation.LINKED}

EquivKey = tuple[Relation, GameRef, GameRef]


def equiv_key(relation: Relation, g: GameRef, h: GameRef) -> EquivKey:
    if relation in _SYMMETRIC and h < g:
        g, h = h, g
    return (relation, g, h)


@dataclass
class EquivCache:
    """Insert-only verdict table."""

    verdicts: dict[EquivKey, bool] = field(default_factory=dict)

    def get(self, key: EquivKey) -> bool | None:
        return self.verdicts.get(key)

    def put(self, key: EquivKey, verdict: bool) -> bool:
        old = self.verdicts.setdefault(key, verdict)
        if old != verdict:
            raise RuntimeError(f"verdict for {key} changed from {old} to {verdict}")
        return verdict

    def __len__(self) -> int:
        return len(self.verdicts)


class Comparator:
    """Decision procedures over the games of one store."""

    def __init__(self, store: GameStore | None = None, check: bool = False) -> None:
        self.store = store or default_store()
        self.cache = EquivCache()
        # When set, impartial partizan_eq runs the generic and specialized tests and asserts agreement.
        self.check = check

    def _require_impartial(self, *games: GameRef) -> None:
        for g in games:
            if not self.store.is_impartial(g):
                raise NotImpartialError(f"game {g} is not impartial")

    # -- impartial context ----------------------------------------------

    def impartial_equiv(self, g: GameRef, h: GameRef) -> bool:
        """``g`` and ``h`` have equal misère outcomes beside every impartial game."""
        self._require_impartial(g, h)
        return self._equiv(g, h)

    def _equiv(self, g: GameRef, h: GameRef) -> bool:
        if g == h:
            return True
        key = equiv_key(Relation.EQUIV_IMPARTIAL, g, h)
        verdict = self.cache.get(key)
        if verdict is not None:
            return verdict
        store = self.store
        if store.is_zero(g) and store.misere_outcome(h) is not Outcome.N:
            verdict = False
        elif store.is_zero(h) and store.misere_outcome(g) is not Outcome.N:
            verdict = False
        else:
            verdict = self._covers(g, h, self._equiv) and self._covers(h, g, self._equiv)
        return self.cache.put(key, verdict)

    def _covers(self, g: GameRef, h: GameRef, eq) -> bool:
        # Every option h' of h is answered: by some h'' ~ g, or some g' ~ h'.
        opts = self.store.options
        g_opts = opts(g)
        for hp in opts(h):
            if not (any(eq(hpp, g) for hpp in opts(hp)) or any(eq(gp, hp) for gp in g_opts)):
                return False
        return True

    def linked(self, g: GameRef, h: GameRef) -> bool:
        """No option of either game is impartially equivalent to the other game."""
        self._require_impartial(g, h)
        key = equiv_key(Relation.LINKED, g, h)
        verdict = self.cache.get(key)
        if verdict is not None:
            return verdict
        opts = self.store.options
        verdict = not any(self._equiv(gp, h) for gp in opts(g)) and not any(
            self._equiv(hp, g) for hp in opts(h)
        )
        return self.cache.put(key, verdict)

    # -- partizan context -----------------------------------------------

    def partizan_ge(self, g: GameRef, h: GameRef) -> bool:
        """``g >= h``: Left does at least as well with ``g`` as with ``h`` in every sum."""
        if g == h:
            return True
        key = (Relation.GE_PARTIZAN, g, h)
        verdict = self.cache.get(key)
        if verdict is not None:
            return verdict
        store = self.store
        gn, hn = store.node(g), store.node(h)
        ge = self.partizan_ge
        if not hn.left and gn.left:
            verdict = False
        elif not gn.right and hn.right:
            verdict = False
        else:
            verdict = all(
                any(ge(g, hlr) for hlr in store.right(hl)) or any(ge(gl, hl) for gl in gn.left)
                for hl in hn.left
            ) and all(
                any(ge(grl, h) for grl in store.left(gr)) or any(ge(gr, hr) for hr in hn.right)
                for gr in gn.right
            )
        return self.cache.put(key, verdict)

    def downlinked(self, g: GameRef, h: GameRef) -> bool:
        """No Left option of ``g`` is ``>= h`` and ``g`` is ``>=`` no Right option of ``h``."""
        key = (Relation.DOWNLINKED, g, h)
        verdict = self.cache.get(key)
        if verdict is not None:
            return verdict
        store = self.store
        verdict = not any(self.partizan_ge(gl, h) for gl in store.left(g)) and not any(
            self.partizan_ge(g, hr) for hr in store.right(h)
        )
        return self.cache.put(key, verdict)

    def partizan_eq_generic(self, g: GameRef, h: GameRef) -> bool:
        return self.partizan_ge(g, h) and self.partizan_ge(h, g)

    def partizan_eq_impartial(self, g: GameRef, h: GameRef) -> bool:
        """Partizan equality for impartial games via the three-condition test."""
        self._require_impartial(g, h)
        return self._eq_imp(g, h)

    def _eq_imp(self, g: GameRef, h: GameRef) -> bool:
        if g == h:
            return True
        key = equiv_key(Relation.EQ_IMPARTIAL, g, h)
        verdict = self.cache.get(key)
        if verdict is not None:
            return verdict
        store = self.store
        if store.is_zero(g) or store.is_zero(h):
            verdict = False  # g != h, so exactly one of them is 0
        else:
            verdict = self._covers(g, h, self._eq_imp) and self._covers(h, g, self._eq_imp)
        return self.cache.put(key, verdict)

    def partizan_eq(self, g: GameRef, h: GameRef) -> bool:
        """``g = h``: equal misère outcomes in every sum with any game."""
        store = self.store
        if store.is_impartial(g) and store.is_impartial(h):
            verdict = self._eq_imp(g, h)
            if self.check:
                generic = self.partizan_eq_generic(g, h)
                if generic != verdict:
                    raise AssertionError(
                        f"specialized and generic equality disagree on ({g}, {h})"
                    )
            return verdict
        return self.partizan_eq_generic(g, h)


_comparators: weakref.WeakKeyDictionary[GameStore, Comparator] = weakref.WeakKeyDictionary()


def comparator(store: GameStore | None = None) -> Comparator:
    """The shared comparator (and cache) for ``store``."""
    store = store or default_store()
    comp = _comparators.get(store)
    if comp is None:
        comp = _comparators[store] = Comparator(store)
    return comp


def impartial_equiv(g: GameRef, h: GameRef) -> bool:
    return comparator().impartial_equiv(g, h)


def linked(g: GameRef, h: GameRef) -> bool:
    return comparator().linked(g, h)


def partizan_ge(g: GameRef, h: GameRef) -> bool:
    return comparator().partizan_ge(g, h)


def downlinked(g: GameRef, h: GameRef) -> bool:
    return comparator().downlinked(g, h)


def partizan_eq(g: GameRef, h: GameRef) -> bool:
    return comparator().partizan_eq(g, h)
