"""Exact Bernoulli measures of automaton languages.

Under a Bernoulli measure with full-support rational symbol weights, a
random run of a deterministic automaton enters some bottom strongly
connected component and then almost surely visits all of its states
infinitely often.  The probability of acceptance from each state therefore
satisfies a linear system: 0 or 1 on bottom components, and the one-step
average elsewhere.  The system is solved exactly over ``Fraction``, one
condensation block at a time in reverse topological order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .automata import DMA, Dfa, OpenSet, strongly_connected_components
from .conditions import evaluate
from .words import Alphabet


def format_rational(x: Fraction) -> str:
    """Serialize as ``p/q``, or plain ``p`` for integers."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rational {text!r}") from exc


def format_decimal(x: Fraction, digits: int) -> str:
    """Fixed-point rendering to ``digits`` places, rounding half away from 0."""
    if digits < 0:
        raise ValueError("digit count must be >= 0")
    sign = "-" if x < 0 else ""
    y = abs(x)
    scaled = (2 * y.numerator * 10**digits + y.denominator) // (2 * y.denominator)
    s = str(scaled)
    if digits == 0:
        return sign + s
    s = s.rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def uniform_weights(alphabet: Alphabet) -> dict[str, Fraction]:
    k = len(alphabet)
    return {s: Fraction(1, k) for s in alphabet.symbols}


def check_weights(alphabet: Alphabet, weights: dict[str, Fraction] | None
                  ) -> tuple[Fraction, ...]:
    """Weights as an exact vector in symbol order; must be positive, sum 1."""
    if weights is None:
        weights = uniform_weights(alphabet)
    if set(weights) != set(alphabet.symbols):
        raise ValueError("weights must cover exactly the alphabet symbols")
    vec = tuple(Fraction(weights[s]) for s in alphabet.symbols)
    if any(w <= 0 for w in vec):
        raise ValueError("Bernoulli weights must be positive")
    if sum(vec) != 1:
        raise ValueError("Bernoulli weights must sum to 1")
    return vec


def solve_linear_system(matrix: list[list[Fraction]], rhs: list[Fraction]
                        ) -> list[Fraction]:
    """Gaussian elimination with partial pivoting, exact over rationals."""
    m = len(rhs)
    A = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(m):
        pivot = max(range(col, m), key=lambda r: abs(A[r][col]))
        if A[pivot][col] == 0:
            raise ValueError("singular linear system")
        A[col], A[pivot] = A[pivot], A[col]
        inv = A[col][col]
        A[col] = [v / inv for v in A[col]]
        for r in range(m):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [v - f * w for v, w in zip(A[r], A[col])]
    return [A[i][m] for i in range(m)]


def _markov_values(n_states: int, rows: Sequence[Sequence[int]],
                   wvec: tuple[Fraction, ...],
                   bottom_value: Callable[[frozenset[int]], Fraction]
                   ) -> list[Fraction]:
    """Unique fixpoint of p = one-step average, anchored on bottom SCCs."""
    comps = strongly_connected_components(n_states, rows)
    comp_of = [0] * n_states
    for ci, comp in enumerate(comps):
        for q in comp:
            comp_of[q] = ci
    succs: list[set[int]] = [set() for _ in comps]
    for q in range(n_states):
        for t in rows[q]:
            if comp_of[t] != comp_of[q]:
                succs[comp_of[q]].add(comp_of[t])
    p: list[Fraction | None] = [None] * n_states
    resolved = [False] * len(comps)
    pending = list(range(len(comps)))
    while pending:
        remaining = []
        progressed = False
        for ci in pending:
            if not all(resolved[cj] for cj in succs[ci]):
                remaining.append(ci)
                continue
            comp = comps[ci]
            if not succs[ci]:
                val = bottom_value(frozenset(comp))
                for q in comp:
                    p[q] = val
            else:
                _solve_block(comp, rows, wvec, p)
            resolved[ci] = True
            progressed = True
        assert progressed, "condensation is acyclic"
        pending = remaining
    return p  # type: ignore[return-value]


def _solve_block(comp: list[int], rows, wvec, p: list) -> None:
    idx = {q: i for i, q in enumerate(comp)}
    m = len(comp)
    A = [[Fraction(0)] * m for _ in range(m)]
    b = [Fraction(0) for _ in range(m)]
    for i, q in enumerate(comp):
        A[i][i] += 1
        for si, t in enumerate(rows[q]):
            if t in idx:
                A[i][idx[t]] -= wvec[si]
            else:
                b[i] += wvec[si] * p[t]
    x = solve_linear_system(A, b)
    for i, q in enumerate(comp):
        p[q] = x[i]


def bsccs(a: DMA) -> list[frozenset[int]]:
    """Bottom strongly connected components of the (reachable) state graph.

    Every state is reachable by construction; a random full-support run ends
    up inside one of these and almost surely visits all of it forever.
    """
    comps = strongly_connected_components(a.n_states, a.transitions)
    out = []
    for comp in comps:
        cset = frozenset(comp)
        if all(t in cset for q in comp for t in a.transitions[q]):
            out.append(cset)
    return out


def acceptance_probabilities(a: DMA, weights: dict[str, Fraction] | None = None
                             ) -> tuple[Fraction, ...]:
    """Probability, per state, that a random continuation is accepted."""
    wvec = check_weights(a.alphabet, weights)

    def bottom(C: frozenset[int]) -> Fraction:
        return Fraction(1) if evaluate(a.cond, C) else Fraction(0)

    return tuple(_markov_values(a.n_states, a.transitions, wvec, bottom))


def mu(a: DMA, weights: dict[str, Fraction] | None = None) -> Fraction:
    """Exact Bernoulli measure of the language of ``a``."""
    return acceptance_probabilities(a, weights)[a.initial]


def measure_open(e: OpenSet, weights: dict[str, Fraction] | None = None) -> Fraction:
    """Measure of an open set: probability of ever entering a final state."""
    wvec = check_weights(e.alphabet, weights)

    def bottom(C: frozenset[int]) -> Fraction:
        return Fraction(1) if C & e.finals else Fraction(0)

    return _markov_values(e.n_states, e.transitions, wvec, bottom)[e.initial]


class PrefixFreeViolation(ValueError):
    """The DFA accepts a word and a strict extension of it."""

    def __init__(self, shorter: str, longer: str):
        super().__init__(
            f"language is not prefix-free: accepts both {shorter!r} and {longer!r}"
        )
        self.shorter = shorter
        self.longer = longer


def sigma_prefix_free(d: Dfa, weights: dict[str, Fraction] | None = None
                      ) -> Fraction:
    """Total ball measure of a prefix-free finite-word language.

    For prefix-free W the balls ``w . X^omega`` are pairwise disjoint, so
    their total measure is the probability that a random omega-word has a
    prefix in W: an absorption probability into the final states.  Raises
    :class:`PrefixFreeViolation` (with a witness pair) otherwise.
    """
    wvec = check_weights(d.alphabet, weights)
    reach = _reach_words(d)
    for f, word in reach.items():
        if f not in d.finals:
            continue
        ext = _word_to_final(d, f)
        if ext is not None:
            raise PrefixFreeViolation(word, word + ext)
    k = len(d.alphabet)
    rows = tuple(
        (q,) * k if q in d.finals else d.transitions[q] for q in range(d.n_states)
    )

    def bottom(C: frozenset[int]) -> Fraction:
        return Fraction(1) if C & d.finals else Fraction(0)

    return _markov_values(d.n_states, rows, wvec, bottom)[d.initial]


def _reach_words(d: Dfa) -> dict[int, str]:
    """Shortlex-least access word for every reachable state."""
    out = {d.initial: ""}
    frontier = [d.initial]
    while frontier:
        nxt = []
        for q in frontier:
            for si, sym in enumerate(d.alphabet.symbols):
                t = d.transitions[q][si]
                if t not in out:
                    out[t] = out[q] + sym
                    nxt.append(t)
        frontier = nxt
    return out


def _word_to_final(d: Dfa, src: int) -> str | None:
    """Shortlex-least non-empty word from ``src`` into a final state."""
    seen = {}
    frontier = []
    for si, sym in enumerate(d.alphabet.symbols):
        t = d.transitions[src][si]
        if t not in seen:
            seen[t] = sym
            if t in d.finals:
                return sym
            frontier.append(t)
    while frontier:
        nxt = []
        for q in frontier:
            for si, sym in enumerate(d.alphabet.symbols):
                t = d.transitions[q][si]
                if t not in seen:
                    seen[t] = seen[q] + sym
                    if t in d.finals:
                        return seen[t]
                    nxt.append(t)
        frontier = nxt
    return None
