"""Deterministic Muller automata over omega-words and their algebra.

The main type is :class:`DMA`: a complete deterministic automaton whose run
on an omega-word is accepting iff the set of states visited infinitely often
satisfies the acceptance condition.  User-facing automata carry an explicit
family of state sets; automata derived by boolean combinations, closure and
interior carry a structured condition instead (see ``conditions``), which
keeps products of products tractable.  The explicit family of a derived
automaton can still be materialized on demand.

:class:`OpenSet` represents an open subset ``W . X^omega`` of the Cantor
space of omega-words as a DFA with absorbing final states.

State ids are always normalized to breadth-first shortlex order from the
initial state (which therefore is state 0), and unreachable states are
pruned on construction; serialization of equal automata is thus identical.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .conditions import (
    FALSE,
    TRUE,
    Atom,
    Bool,
    Cond,
    assign,
    atoms_of,
    c_and,
    c_not,
    c_or,
    c_xor,
    evaluate,
    family_atom,
    hits_atom,
    remap,
)
from .words import Alphabet, UPWord, up_normalize

# Practical bound on the label range of a single condition atom within one
# strongly connected component during emptiness search, and on the component
# size during family materialization.  Inputs beyond it are rejected with a
# clear error instead of running for hours.
_SEARCH_LABEL_LIMIT = 16
_MATERIALIZE_SCC_LIMIT = 18


class FamilyTooLargeError(ValueError):
    """Raised when an explicit acceptance family would be astronomically big."""


# ---------------------------------------------------------------------------
# graphs


def strongly_connected_components(n_states: int, rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative; components sorted by least state."""
    index = [-1] * n_states
    low = [0] * n_states
    on_stack = [False] * n_states
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n_states):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            q, ei = work[-1]
            if ei == 0:
                index[q] = low[q] = counter
                counter += 1
                stack.append(q)
                on_stack[q] = True
            advanced = False
            row = rows[q]
            while ei < len(row):
                t = row[ei]
                ei += 1
                if index[t] == -1:
                    work[-1] = (q, ei)
                    work.append((t, 0))
                    advanced = True
                    break
                if on_stack[t]:
                    low[q] = min(low[q], index[t])
            if advanced:
                continue
            work.pop()
            if low[q] == index[q]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == q:
                        break
                comps.append(sorted(comp))
            if work:
                pq, _ = work[-1]
                low[pq] = min(low[pq], low[q])
    comps.sort(key=lambda c: c[0])
    return comps


def _induced_sccs(rows: Sequence[Sequence[int]], region: frozenset[int]) -> list[frozenset[int]]:
    """Nontrivial SCCs of the subgraph induced on ``region``."""
    order = sorted(region)
    pos = {q: i for i, q in enumerate(order)}
    sub = [[pos[t] for t in rows[q] if t in region] for q in order]
    out = []
    for comp in strongly_connected_components(len(order), sub):
        states = frozenset(order[i] for i in comp)
        if len(states) > 1:
            out.append(states)
        else:
            (q,) = states
            if any(t == q for t in rows[q] if t in region):
                out.append(states)
    out.sort(key=min)
    return out


# ---------------------------------------------------------------------------
# word DFAs and open sets


class Dfa:
    """Complete deterministic automaton on finite words."""

    __slots__ = ("alphabet", "n_states", "initial", "transitions", "finals")

    def __init__(self, alphabet: Alphabet, n_states: int, initial: int,
                 transitions: tuple[tuple[int, ...], ...], finals: frozenset[int]):
        self.alphabet = alphabet
        self.n_states = n_states
        self.initial = initial
        self.transitions = transitions
        self.finals = finals

    def step(self, state: int, symbol: str) -> int:
        return self.transitions[state][self.alphabet.index(symbol)]

    def run(self, word: str, state: int | None = None) -> int:
        q = self.initial if state is None else state
        for s in word:
            q = self.step(q, s)
        return q

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.finals


def _check_rows(alphabet: Alphabet, n_states: int, rows) -> tuple[tuple[int, ...], ...]:
    k = len(alphabet)
    if len(rows) != n_states:
        raise ValueError(f"expected {n_states} transition rows, got {len(rows)}")
    out = []
    for q, row in enumerate(rows):
        row = tuple(row)
        if len(row) != k:
            raise ValueError(f"state {q} must have one transition per symbol")
        for si, t in enumerate(row):
            if not (0 <= t < n_states):
                raise ValueError(
                    f"transition {q} --{alphabet.symbols[si]}--> {t} leaves the state set"
                )
        out.append(row)
    return tuple(out)


def _rows_from_mapping(alphabet: Alphabet, n_states: int, trans) -> list[list[int]]:
    """Accept either row form or a {(state, symbol): state} mapping."""
    if isinstance(trans, dict):
        rows = [[None] * len(alphabet) for _ in range(n_states)]
        for (q, sym), t in trans.items():
            rows[q][alphabet.index(sym)] = t
        for q, row in enumerate(rows):
            for si, t in enumerate(row):
                if t is None:
                    raise ValueError(
                        f"missing transition from state {q} on {alphabet.symbols[si]!r}"
                    )
        return rows
    return [list(r) for r in trans]


def _bfs_order(n_states: int, rows, initial: int) -> list[int]:
    """Reachable states in breadth-first shortlex order."""
    seen = {initial: 0}
    order = [initial]
    i = 0
    while i < len(order):
        for t in rows[order[i]]:
            if t not in seen:
                seen[t] = len(order)
                order.append(t)
        i += 1
    return order


class OpenSet(Dfa):
    """Open set ``W . X^omega`` as a DFA with absorbing final states.

    Construction canonicalizes: outgoing transitions of final states are
    redirected to self-loops, then unreachable states are pruned and the
    rest renumbered breadth-first.
    """

    @classmethod
    def from_parts(cls, alphabet: Alphabet, n_states: int, initial: int,
                   transitions, finals: Iterable[int]) -> "OpenSet":
        rows = _rows_from_mapping(alphabet, n_states, transitions)
        rows = _check_rows(alphabet, n_states, rows)
        fin = frozenset(finals)
        for q in fin:
            if not (0 <= q < n_states):
                raise ValueError(f"final state {q} out of range")
        k = len(alphabet)
        rows = tuple((q,) * k if q in fin else rows[q] for q in range(n_states))
        order = _bfs_order(n_states, rows, initial)
        renum = {old: new for new, old in enumerate(order)}
        new_rows = tuple(tuple(renum[rows[old][si]] for si in range(k)) for old in order)
        new_fin = frozenset(renum[q] for q in fin if q in renum)
        return cls(alphabet, len(order), 0, new_rows, new_fin)

    def reaches_final(self, word: str) -> bool:
        """True iff some prefix of ``word`` lands in a final state."""
        return self.run(word) in self.finals

    def is_empty(self) -> bool:
        return not self.finals


def empty_open(alphabet: Alphabet) -> OpenSet:
    return OpenSet.from_parts(alphabet, 1, 0, [[0] * len(alphabet)], [])


def full_open(alphabet: Alphabet) -> OpenSet:
    return OpenSet.from_parts(alphabet, 1, 0, [[0] * len(alphabet)], [0])


def ball_open(alphabet: Alphabet, word: str) -> OpenSet:
    """The basic open ball ``word . X^omega``."""
    alphabet.check_word(word)
    L = len(word)
    k = len(alphabet)
    final, dead = L, L + 1
    rows = []
    for i in range(L):
        rows.append([i + 1 if alphabet.symbols[si] == word[i] else dead for si in range(k)])
    rows.append([final] * k)
    rows.append([dead] * k)
    return OpenSet.from_parts(alphabet, L + 2, 0, rows, [final])


def open_union(e1: OpenSet, e2: OpenSet) -> OpenSet:
    """Union of two open sets (product DFA, then absorbing canonical form)."""
    if e1.alphabet != e2.alphabet:
        raise ValueError("alphabet mismatch")
    k = len(e1.alphabet)
    pairs = {(e1.initial, e2.initial): 0}
    order = [(e1.initial, e2.initial)]
    rows = []
    i = 0
    while i < len(order):
        q1, q2 = order[i]
        row = []
        for si in range(k):
            t = (e1.transitions[q1][si], e2.transitions[q2][si])
            if t not in pairs:
                pairs[t] = len(order)
                order.append(t)
            row.append(pairs[t])
        rows.append(row)
        i += 1
    finals = [j for j, (q1, q2) in enumerate(order) if q1 in e1.finals or q2 in e2.finals]
    return OpenSet.from_parts(e1.alphabet, len(order), 0, rows, finals)


# ---------------------------------------------------------------------------
# deterministic Muller automata


class DMA:
    """Deterministic automaton accepting by the set of states seen infinitely often."""

    __slots__ = ("alphabet", "n_states", "initial", "transitions", "cond", "_family")

    def __init__(self, alphabet: Alphabet, n_states: int, initial: int,
                 transitions: tuple[tuple[int, ...], ...], cond: Cond,
                 family: tuple[frozenset[int], ...] | None = None):
        self.alphabet = alphabet
        self.n_states = n_states
        self.initial = initial
        self.transitions = _check_rows(alphabet, n_states, transitions)
        self.cond = cond
        self._family = family

    @classmethod
    def from_parts(cls, alphabet: Alphabet, n_states: int, initial: int,
                   transitions, acceptance: Iterable[Iterable[int]]) -> "DMA":
        """Build from an explicit acceptance family.

        Unreachable states are pruned and ids renumbered breadth-first in
        symbol order; family members mentioning pruned states are dropped,
        the empty set is dropped, duplicates are merged.
        """
        if n_states < 1:
            raise ValueError("automaton needs at least one state")
        if not (0 <= initial < n_states):
            raise ValueError(f"initial state {initial} out of range")
        rows = _rows_from_mapping(alphabet, n_states, transitions)
        rows = _check_rows(alphabet, n_states, rows)
        members = []
        for t in acceptance:
            member = frozenset(t)
            for q in member:
                if not (0 <= q < n_states):
                    raise ValueError(f"acceptance set state {q} out of range")
            members.append(member)
        k = len(alphabet)
        order = _bfs_order(n_states, rows, initial)
        renum = {old: new for new, old in enumerate(order)}
        new_rows = tuple(tuple(renum[rows[old][si]] for si in range(k)) for old in order)
        fam = {
            frozenset(renum[q] for q in member)
            for member in members
            if member and all(q in renum for q in member)
        }
        family = tuple(sorted(fam, key=lambda s: (len(s), sorted(s))))
        return cls(alphabet, len(order), 0, new_rows, family_atom(len(order), family), family)

    # -- evaluation

    def step(self, state: int, symbol: str) -> int:
        return self.transitions[state][self.alphabet.index(symbol)]

    def run_word(self, state: int, word: str) -> int:
        for s in word:
            state = self.transitions[state][self.alphabet.index(s)]
        return state

    def accepts_set(self, states: Iterable[int]) -> bool:
        """Would a run visiting exactly ``states`` infinitely often accept?"""
        return evaluate(self.cond, frozenset(states))

    @property
    def acceptance(self) -> tuple[frozenset[int], ...]:
        """Explicit acceptance family.

        For derived automata this enumerates every set realizable as the
        infinitely-visited set of some run and keeps the accepted ones; the
        result denotes the same language.  Raises
        :class:`FamilyTooLargeError` past a practical size bound.
        """
        if self._family is None:
            fam = tuple(
                s for s in _realizable_sets(self) if evaluate(self.cond, s)
            )
            self._family = fam
        return self._family

    def __repr__(self) -> str:
        return (
            f"DMA(alphabet={''.join(self.alphabet.symbols)!r}, "
            f"states={self.n_states})"
        )


def _realizable_sets(a: DMA) -> list[frozenset[int]]:
    """All candidate infinitely-visited sets: cycle-closed subsets of SCCs."""
    rows = a.transitions
    out: list[frozenset[int]] = []
    for comp in strongly_connected_components(a.n_states, rows):
        if len(comp) > _MATERIALIZE_SCC_LIMIT:
            raise FamilyTooLargeError(
                f"cannot materialize acceptance family: a strongly connected "
                f"component has {len(comp)} states (limit {_MATERIALIZE_SCC_LIMIT})"
            )
        if len(comp) == 1:
            q = comp[0]
            if any(t == q for t in rows[q]):
                out.append(frozenset(comp))
            continue
        for size in range(1, len(comp) + 1):
            for sub in combinations(comp, size):
                s = frozenset(sub)
                if _is_cycle_closed(rows, s):
                    out.append(s)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def _is_cycle_closed(rows, states: frozenset[int]) -> bool:
    """Can some run visit exactly ``states`` forever (strongly connected,
    each state with a successor inside)?"""
    if not states:
        return False
    if len(states) == 1:
        (q,) = states
        return any(t == q for t in rows[q])
    start = min(states)
    # forward cover within states
    seen = {start}
    stack = [start]
    while stack:
        q = stack.pop()
        for t in rows[q]:
            if t in states and t not in seen:
                seen.add(t)
                stack.append(t)
    if seen != states:
        return False
    # backward cover within states
    preds: dict[int, set[int]] = {q: set() for q in states}
    for q in states:
        for t in rows[q]:
            if t in states:
                preds[t].add(q)
    seen = {start}
    stack = [start]
    while stack:
        q = stack.pop()
        for t in preds[q]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return seen == states


# ---------------------------------------------------------------------------
# boolean algebra


def _normalize_derived(alphabet: Alphabet, n_states: int, initial: int,
                       rows, cond: Cond) -> DMA:
    order = _bfs_order(n_states, rows, initial)
    renum = {old: new for new, old in enumerate(order)}
    k = len(alphabet)
    new_rows = tuple(tuple(renum[rows[old][si]] for si in range(k)) for old in order)
    new_cond = remap(cond, order, {})
    return DMA(alphabet, len(order), 0, new_rows, new_cond)


def boolean_combine(a: DMA, b: DMA | None, mode: str) -> DMA:
    """Boolean algebra on languages: union, intersection, complement, symdiff.

    Binary modes run on the reachable product automaton with the acceptance
    condition obtained from both factors' conditions by projection of the
    infinitely-visited set; complement negates the condition in place.
    """
    if mode == "complement":
        if b is not None:
            raise ValueError("complement takes a single automaton")
        return DMA(a.alphabet, a.n_states, a.initial, a.transitions,
                   c_not(a.cond), None)
    if b is None:
        raise ValueError(f"mode {mode!r} needs two automata")
    if a.alphabet != b.alphabet:
        raise ValueError("alphabet mismatch")
    k = len(a.alphabet)
    pairs = {(a.initial, b.initial): 0}
    order = [(a.initial, b.initial)]
    rows = []
    i = 0
    while i < len(order):
        qa, qb = order[i]
        row = []
        for si in range(k):
            t = (a.transitions[qa][si], b.transitions[qb][si])
            if t not in pairs:
                pairs[t] = len(order)
                order.append(t)
            row.append(pairs[t])
        rows.append(tuple(row))
        i += 1
    cache: dict = {}
    cond_a = remap(a.cond, [p[0] for p in order], cache)
    cond_b = remap(b.cond, [p[1] for p in order], cache)
    if mode == "union":
        cond = c_or([cond_a, cond_b])
    elif mode == "intersection":
        cond = c_and([cond_a, cond_b])
    elif mode == "symdiff":
        cond = c_xor(cond_a, cond_b)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return DMA(a.alphabet, len(order), 0, tuple(rows), cond)


def union(a: DMA, b: DMA) -> DMA:
    return boolean_combine(a, b, "union")


def intersection(a: DMA, b: DMA) -> DMA:
    return boolean_combine(a, b, "intersection")


def complement(a: DMA) -> DMA:
    return boolean_combine(a, None, "complement")


def symdiff(a: DMA, b: DMA) -> DMA:
    return boolean_combine(a, b, "symdiff")


def empty_dma(alphabet: Alphabet) -> DMA:
    k = len(alphabet)
    return DMA(alphabet, 1, 0, ((0,) * k,), FALSE, ())


def full_dma(alphabet: Alphabet) -> DMA:
    k = len(alphabet)
    fam = (frozenset({0}),)
    return DMA(alphabet, 1, 0, ((0,) * k,), family_atom(1, fam), fam)


def open_to_dma(e: OpenSet) -> DMA:
    """The open set as a Muller automaton: accept iff a final state recurs.

    Because finals are absorbing, the run hits a final state iff it stays
    there forever, so the Buechi-style condition is exact.
    """
    return DMA(e.alphabet, e.n_states, e.initial, e.transitions,
               hits_atom(e.n_states, e.finals), None)


# ---------------------------------------------------------------------------
# emptiness and membership


def _search_scc(rows, cond: Cond, C: frozenset[int]) -> frozenset[int] | None:
    """A cycle-closed ``D`` inside the SCC ``C`` satisfying ``cond``, if any.

    Atoms whose labels are constant on ``C`` are folded to constants; the
    rest are resolved by enumerating their exact projections, narrowing the
    candidate region as each projection is fixed.  Sound because the final
    candidate is evaluated exactly; complete because the true projection
    tuple of any accepting set is among those enumerated, and the SCC of the
    narrowed region containing it projects to exactly the same tuple.
    """
    if evaluate(cond, C):
        return C
    atoms = atoms_of(cond)
    assignment: dict[Atom, bool] = {}
    symbolic: list[Atom] = []
    for at in atoms:
        labels = {at.labels[q] for q in C}
        if len(labels) == 1:
            assignment[at] = frozenset(labels) in at.family
        else:
            symbolic.append(at)
    folded = assign(cond, assignment)
    if isinstance(folded, Bool):
        # TRUE is impossible: it would hold under the actual atom values on
        # C as well, and C already failed exact evaluation above.
        assert not folded.value
        return None
    if not symbolic:
        return None
    symbolic.sort(key=lambda at: (len({at.labels[q] for q in C}), atoms.index(at)))
    chosen: dict[Atom, frozenset[int]] = {}

    def rec(region: frozenset[int], i: int, amap: dict[Atom, bool]):
        if i == len(symbolic):
            for D in _induced_sccs(rows, region):
                if all(
                    frozenset(at.labels[q] for q in D) == chosen[at] for at in symbolic
                ) and evaluate(cond, D):
                    return D
            return None
        at = symbolic[i]
        labels_here = sorted({at.labels[q] for q in region})
        if len(labels_here) > _SEARCH_LABEL_LIMIT:
            raise FamilyTooLargeError(
                f"emptiness search over {len(labels_here)} projection labels "
                f"exceeds the practical bound {_SEARCH_LABEL_LIMIT}"
            )
        for size in range(len(labels_here), 0, -1):
            for sub in combinations(labels_here, size):
                tset = frozenset(sub)
                amap2 = dict(amap)
                amap2[at] = tset in at.family
                after = assign(cond, amap2)
                if isinstance(after, Bool) and not after.value:
                    continue
                region2 = frozenset(q for q in region if at.labels[q] in tset)
                if not region2:
                    continue
                chosen[at] = tset
                found = rec(region2, i + 1, amap2)
                if found is not None:
                    return found
        return None

    return rec(C, 0, assignment)


def _find_accepting_set(a: DMA) -> frozenset[int] | None:
    cond = a.cond
    if isinstance(cond, Bool) and not cond.value:
        return None
    rows = a.transitions
    # explicit-family fast path: check each member directly
    if (
        a._family is not None
        and isinstance(cond, Atom)
        and cond.labels == tuple(range(a.n_states))
    ):
        for T in a._family:
            if _is_cycle_closed(rows, T):
                return T
        return None
    for comp in strongly_connected_components(a.n_states, rows):
        C = frozenset(comp)
        if len(C) == 1:
            (q,) = C
            if not any(t == q for t in rows[q]):
                continue
        D = _search_scc(rows, cond, C)
        if D is not None:
            return D
    return None


def _bfs_word(a: DMA, src: int, targets: frozenset[int],
              allowed: frozenset[int] | None = None) -> tuple[str, int]:
    """Shortlex-least word from ``src`` into ``targets`` (possibly empty)."""
    if src in targets:
        return "", src
    seen = {src: ("", src)}
    frontier = [src]
    while frontier:
        nxt = []
        for q in frontier:
            w, _ = seen[q]
            for si, sym in enumerate(a.alphabet.symbols):
                t = a.transitions[q][si]
                if allowed is not None and t not in allowed:
                    continue
                if t in seen:
                    continue
                seen[t] = (w + sym, t)
                if t in targets:
                    return w + sym, t
                nxt.append(t)
        frontier = nxt
    raise ValueError("targets unreachable")


def _lasso_witness(a: DMA, D: frozenset[int]) -> UPWord:
    """Ultimately periodic word whose run visits exactly ``D`` forever."""
    u, entry = _bfs_word(a, a.initial, D)
    v = ""
    cur = entry
    for t in sorted(D):
        if t != cur:
            w, cur = _bfs_word(a, cur, frozenset({t}), allowed=D)
            v += w
    if cur != entry:
        w, cur = _bfs_word(a, cur, frozenset({entry}), allowed=D)
        v += w
    if not v:
        for si, sym in enumerate(a.alphabet.symbols):
            if a.transitions[entry][si] == entry:
                v = sym
                break
    witness = up_normalize(a.alphabet, u, v)
    assert up_membership(a, witness), "constructed witness must be accepted"
    return witness


def accepting_witness(a: DMA) -> UPWord | None:
    """An ultimately periodic member of the language, or None if empty."""
    D = _find_accepting_set(a)
    if D is None:
        return None
    return _lasso_witness(a, D)


def is_empty(a: DMA) -> bool:
    return _find_accepting_set(a) is None


def up_membership(a: DMA, x: UPWord) -> bool:
    """Exact membership of the ultimately periodic word ``x``.

    Runs the prefix, then iterates the period's state map until a state
    repeats and collects the states traversed along the periodic lasso.
    """
    if a.alphabet != x.alphabet:
        raise ValueError("alphabet mismatch")
    q = a.run_word(a.initial, x.prefix)
    seen: dict[int, int] = {}
    seq = [q]
    while seq[-1] not in seen:
        seen[seq[-1]] = len(seq) - 1
        seq.append(a.run_word(seq[-1], x.period))
    j = seen[seq[-1]]
    laps = len(seq) - 1 - j
    states: set[int] = set()
    cur = seq[j]
    for _ in range(laps):
        for sym in x.period:
            cur = a.step(cur, sym)
            states.add(cur)
    return a.accepts_set(frozenset(states))


def containment_counterexample(a: DMA, b: DMA) -> UPWord | None:
    """An ultimately periodic word in L(b) but not L(a); None iff L(b) <= L(a)."""
    return accepting_witness(intersection(b, complement(a)))


def contains(a: DMA, b: DMA) -> bool:
    """True iff L(b) is a subset of L(a)."""
    return containment_counterexample(a, b) is None


def equivalent(a: DMA, b: DMA) -> bool:
    return contains(a, b) and contains(b, a)


# ---------------------------------------------------------------------------
# topology: closure, interior, density


def _positive_states(a: DMA, cond: Cond) -> set[int]:
    """States of SCCs containing a cycle-closed set satisfying ``cond``."""
    rows = a.transitions
    out: set[int] = set()
    for comp in strongly_connected_components(a.n_states, rows):
        C = frozenset(comp)
        if len(C) == 1:
            (q,) = C
            if not any(t == q for t in rows[q]):
                continue
        if _search_scc(rows, cond, C) is not None:
            out |= C
    return out


def _states_reaching(a: DMA, targets: set[int]) -> set[int]:
    preds: list[set[int]] = [set() for _ in range(a.n_states)]
    for q in range(a.n_states):
        for t in a.transitions[q]:
            preds[t].add(q)
    seen = set(targets)
    stack = list(targets)
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def _live_states(a: DMA) -> set[int]:
    """States with a non-empty forward language."""
    return _states_reaching(a, _positive_states(a, a.cond))


def closure(a: DMA) -> DMA:
    """Topological closure: runs that stay forever among live states.

    Transitions leaving the live part are redirected into a rejecting sink,
    and a run is accepted iff it never meets the sink.
    """
    live = _live_states(a)
    if a.initial not in live:
        return empty_dma(a.alphabet)
    k = len(a.alphabet)
    order = sorted(live)
    renum = {q: i for i, q in enumerate(order)}
    sink = len(order)
    need_sink = False
    rows = []
    for q in order:
        row = []
        for si in range(k):
            t = a.transitions[q][si]
            if t in live:
                row.append(renum[t])
            else:
                row.append(sink)
                need_sink = True
        rows.append(tuple(row))
    if need_sink:
        rows.append((sink,) * k)
        cond = c_not(hits_atom(sink + 1, {sink}))
        return _normalize_derived(a.alphabet, sink + 1, renum[a.initial], rows, cond)
    return _normalize_derived(a.alphabet, len(order), renum[a.initial], rows, TRUE)


def interior(a: DMA) -> OpenSet:
    """Topological interior, as an open set.

    A state is marked final iff every omega-word read from it is accepted,
    i.e. the complement's language from that state is empty.
    """
    doomed = _states_reaching(a, _positive_states(a, c_not(a.cond)))
    full = [q for q in range(a.n_states) if q not in doomed]
    return OpenSet.from_parts(a.alphabet, a.n_states, a.initial, a.transitions, full)


def pref_dfa(a: DMA) -> Dfa:
    """DFA for the prefix language of L(a): live states plus a dead sink."""
    live = _live_states(a)
    k = len(a.alphabet)
    if a.initial not in live:
        return Dfa(a.alphabet, 1, 0, ((0,) * k,), frozenset())
    order = sorted(live)
    renum = {q: i for i, q in enumerate(order)}
    sink = len(order)
    need_sink = False
    rows = []
    for q in order:
        row = []
        for si in range(k):
            t = a.transitions[q][si]
            if t in live:
                row.append(renum[t])
            else:
                row.append(sink)
                need_sink = True
        rows.append(tuple(row))
    finals = frozenset(range(len(order)))
    if need_sink:
        rows.append((sink,) * k)
    order2 = _bfs_order(len(rows), rows, renum[a.initial])
    renum2 = {old: new for new, old in enumerate(order2)}
    rows2 = tuple(tuple(renum2[rows[old][si]] for si in range(k)) for old in order2)
    finals2 = frozenset(renum2[q] for q in finals if q in renum2)
    return Dfa(a.alphabet, len(order2), 0, rows2, finals2)


def avoid_infix_dma(alphabet: Alphabet, word: str) -> DMA:
    """Omega-words in which ``word`` never occurs as an infix.

    A prefix-matching automaton tracks the longest suffix of the input that
    is a prefix of ``word``; completing a full match falls into an absorbing
    "seen" state, and acceptance is never meeting that state.
    """
    alphabet.check_word(word)
    if not word:
        raise ValueError("avoided infix must be non-empty")
    L = len(word)
    k = len(alphabet)
    # longest proper border of each prefix
    border = [0] * L
    for i in range(1, L):
        b = border[i - 1]
        while b and word[i] != word[b]:
            b = border[b - 1]
        border[i] = b + 1 if word[i] == word[b] else 0
    hit = L
    rows = []
    for m in range(L):
        row = []
        for si in range(k):
            c = alphabet.symbols[si]
            b = m
            while b and word[b] != c:
                b = border[b - 1]
            nxt = b + 1 if word[b] == c else 0
            row.append(hit if nxt == L else nxt)
        rows.append(tuple(row))
    rows.append((hit,) * k)
    cond = c_not(hits_atom(L + 1, {hit}))
    return _normalize_derived(alphabet, L + 1, 0, rows, cond)
