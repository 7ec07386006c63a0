"""Topological classification of regular omega-languages in Cantor space.

Density, nowhere density and meagerness are decided on the automaton graph.
Meagerness additionally has a second, measure-theoretic decision procedure
(zero uniform measure); the two are implemented independently and are
required to agree, which the test suite checks aggressively.
"""

from __future__ import annotations

from .automata import DMA, avoid_infix_dma, closure, contains, interior, pref_dfa
from .measure import bsccs, mu


def is_meager(a: DMA) -> bool:
    """First Baire category, decided on the graph.

    A full-support random run settles in some bottom SCC and almost surely
    visits all of it; the language is non-meager exactly when one of those
    limit sets is accepting (a player extending prefixes can then steer
    every run into it, making the language comeager in some ball).
    """
    return not any(a.accepts_set(b) for b in bsccs(a))


def is_meager_via_measure(a: DMA, weights=None) -> bool:
    """Independent decision: meager iff the Bernoulli measure vanishes.

    Any full-support Bernoulli measure gives the same verdict; ``weights``
    defaults to uniform.
    """
    return mu(a, weights) == 0


def contains_disjunctive(a: DMA) -> bool:
    """Does the language contain a word with every finite word as infix?

    The disjunctive words form a comeager set, and a non-meager regular
    language is comeager in some ball, so it must contain one; a meager
    language cannot contain any (the avoided-infix family covers it).
    """
    return not is_meager(a)


def is_dense(a: DMA) -> bool:
    """Dense iff every finite word is the prefix of some member."""
    d = pref_dfa(a)
    return len(d.finals) == d.n_states


def is_nowhere_dense(a: DMA) -> bool:
    """The closure contains no non-empty open set."""
    return interior(closure(a)).is_empty()


def avoided_infix(a: DMA, max_len: int = 8) -> str | None:
    """Shortlex-least word that no member of the language contains as infix.

    Such a word exists whenever the language is nowhere dense, and more
    generally may exist for meager languages; the precondition here is
    meagerness.  Candidates are verified by automaton containment before
    being returned.  Returns None when the search space up to ``max_len``
    is exhausted (existence carries no length bound).
    """
    if not is_meager(a):
        raise ValueError("avoided_infix requires a meager language")
    for w in a.alphabet.iter_words(1, max_len):
        if contains(avoid_infix_dma(a.alphabet, w), a):
            return w
    return None


__all__ = [
    "avoided_infix",
    "contains_disjunctive",
    "is_dense",
    "is_meager",
    "is_meager_via_measure",
    "is_nowhere_dense",
]
