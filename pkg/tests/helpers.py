"""Shared generators and independent oracles for the test suite.

Oracles here deliberately re-derive results through different algorithms
than the library (brute-force unrolling, explicit subset enumeration,
symbol-by-symbol simulation) so that agreement is meaningful evidence.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from omegabaire import DMA, Alphabet, OpenSet, UPWord, up_normalize

AB = Alphabet("ab")
ABC = Alphabet("abc")


# ---------------------------------------------------------------------------
# named example automata over {a, b}


def dma_inf_a() -> DMA:
    """Words with infinitely many a (state 0 after a, 1 after b)."""
    return DMA.from_parts(AB, 2, 0, [[0, 1], [0, 1]], [{0}, {0, 1}])


def dma_singleton(word_symbol: str = "a") -> DMA:
    """The one-word language {s^omega}."""
    si = AB.index(word_symbol)
    rows = [[1, 1], [1, 1]]
    rows[0] = [1, 1]
    rows[0][si] = 0
    return DMA.from_parts(AB, 2, 0, rows, [{0}])


def dma_ball_a() -> DMA:
    """a . X^omega as a Muller automaton."""
    return DMA.from_parts(AB, 3, 0, [[1, 2], [1, 1], [2, 2]], [{1}])


def dma_one_b() -> DMA:
    """a* b a^omega: exactly one b overall."""
    return DMA.from_parts(AB, 3, 0, [[0, 1], [1, 2], [2, 2]], [{1}])


def dma_a_ball_or_bw() -> DMA:
    """a . X^omega united with {b^omega}."""
    rows = [[1, 2], [1, 1], [3, 2], [3, 3]]
    return DMA.from_parts(AB, 4, 0, rows, [{1}, {2}])


# ---------------------------------------------------------------------------
# random instances


def random_dma(rng: random.Random, max_states: int = 6,
               alphabets=(AB, ABC)) -> DMA:
    alphabet = rng.choice(alphabets)
    n = rng.randint(1, max_states)
    rows = [[rng.randrange(n) for _ in alphabet] for _ in range(n)]
    subsets = [
        frozenset(c)
        for r in range(1, n + 1)
        for c in combinations(range(n), r)
    ]
    keep = rng.uniform(0.15, 0.6)
    family = [s for s in subsets if rng.random() < keep]
    return DMA.from_parts(alphabet, n, 0, rows, family)


def random_open(rng: random.Random, alphabet: Alphabet = AB,
                max_states: int = 5) -> OpenSet:
    n = rng.randint(1, max_states)
    rows = [[rng.randrange(n) for _ in alphabet] for _ in range(n)]
    finals = [q for q in range(n) if rng.random() < 0.35]
    return OpenSet.from_parts(alphabet, n, 0, rows, finals)


def random_up(rng: random.Random, alphabet: Alphabet = AB,
              max_prefix: int = 3, max_period: int = 3) -> UPWord:
    syms = alphabet.symbols
    u = "".join(rng.choice(syms) for _ in range(rng.randint(0, max_prefix)))
    v = "".join(rng.choice(syms) for _ in range(rng.randint(1, max_period)))
    return up_normalize(alphabet, u, v)


def random_weights(rng: random.Random, alphabet: Alphabet) -> dict[str, Fraction]:
    """Random rational Bernoulli weights, strictly positive, summing to 1."""
    parts = [rng.randint(1, 9) for _ in alphabet]
    total = sum(parts)
    return {s: Fraction(p, total) for s, p in zip(alphabet.symbols, parts)}


# ---------------------------------------------------------------------------
# oracles


def up_equal_oracle(x: UPWord, y: UPWord, slack: int = 4) -> bool:
    """Do two UP words denote the same sequence?  Brute unrolling comparison."""
    horizon = len(x.prefix) + len(y.prefix) + slack * len(x.period) * len(y.period)
    return all(x.symbol_at(i) == y.symbol_at(i) for i in range(horizon))


def up_normalize_oracle(alphabet: Alphabet, u: str, v: str) -> tuple[str, str]:
    """Minimal (|v|, |u|) representation found by exhaustive comparison."""
    horizon = 2 * (len(u) + len(v)) + 8

    def symbol_at(i: int) -> str:
        if i < len(u):
            return u[i]
        return v[(i - len(u)) % len(v)]

    for plen in range(1, len(v) + 1):
        for ulen in range(0, len(u) + len(v) + 1):
            cu = "".join(symbol_at(i) for i in range(ulen))
            cv = "".join(symbol_at(ulen + i) for i in range(plen))

            def cand(i: int) -> str:
                if i < ulen:
                    return cu[i]
                return cv[(i - ulen) % plen]

            if all(cand(i) == symbol_at(i) for i in range(horizon)):
                return cu, cv
    raise AssertionError("unreachable: (u, v) represents itself")


def lasso_oracle(a: DMA, x: UPWord) -> bool:
    """UP membership by plain symbol-by-symbol simulation.

    Runs the automaton for |u| + |v|*(n+1) symbols, finds two period
    boundaries with equal state, and collects the states strictly inside
    that lap range as the infinitely-visited set.
    """
    u, v = x.prefix, x.period
    horizon = len(u) + len(v) * (a.n_states + 1)
    states = [a.initial]
    for i in range(horizon):
        states.append(a.step(states[-1], x.symbol_at(i)))
    boundaries = [states[len(u) + j * len(v)] for j in range(a.n_states + 1)]
    first = {}
    for j, q in enumerate(boundaries):
        if q in first:
            lo = len(u) + first[q] * len(v)
            hi = len(u) + j * len(v)
            seen = frozenset(states[lo + 1: hi + 1])
            return a.accepts_set(seen)
        first[q] = j
    raise AssertionError("pigeonhole: some boundary state must repeat")


def _subset_has_covering_cycle(rows, subset: frozenset[int]) -> bool:
    """Can a run stay inside `subset` forever while visiting all of it?"""
    internal = {
        q: {t for t in rows[q] if t in subset}
        for q in subset
    }
    if any(not succ for succ in internal.values()):
        return False
    for src in subset:
        seen = {src}
        frontier = [src]
        while frontier:
            q = frontier.pop()
            for t in internal[q]:
                if t not in seen:
                    seen.add(t)
                    frontier.append(t)
        if seen != subset:
            return False
    return True


def emptiness_oracle(a: DMA) -> bool:
    """True iff the language is empty, by explicit subset enumeration."""
    reach = {a.initial}
    frontier = [a.initial]
    while frontier:
        q = frontier.pop()
        for t in a.transitions[q]:
            if t not in reach:
                reach.add(t)
                frontier.append(t)
    reachable = sorted(reach)
    for r in range(1, len(reachable) + 1):
        for c in combinations(reachable, r):
            s = frozenset(c)
            if _subset_has_covering_cycle(a.transitions, s) and a.accepts_set(s):
                return False
    return True


def rerooted(a: DMA, state: int) -> DMA:
    """The same automaton started from `state` (explicit family required)."""
    return DMA.from_parts(a.alphabet, a.n_states, state, a.transitions,
                          a.acceptance)


def accepting_witness_states(a: DMA, state: int) -> bool:
    """Is the language non-empty when started from `state`?"""
    from omegabaire import is_empty

    return not is_empty(rerooted(a, state))


def dma_survival_dp(a: DMA, doomed: frozenset[int], weights, n: int) -> Fraction:
    """P(run avoids `doomed` for the first n steps) by forward DP."""
    wvec = [weights[s] for s in a.alphabet.symbols]
    if a.initial in doomed:
        return Fraction(0)
    dist = {a.initial: Fraction(1)}
    for _ in range(n):
        nxt: dict[int, Fraction] = {}
        for q, p in dist.items():
            for si, t in enumerate(a.transitions[q]):
                if t not in doomed:
                    nxt[t] = nxt.get(t, Fraction(0)) + p * wvec[si]
        dist = nxt
    return sum(dist.values(), Fraction(0))
