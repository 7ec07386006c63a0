import random

import pytest

from omegabaire import (
    DMA,
    OpenSet,
    UPWord,
    accepting_witness,
    avoid_infix_dma,
    ball_open,
    closure,
    complement,
    containment_counterexample,
    contains,
    empty_dma,
    empty_open,
    equivalent,
    full_dma,
    full_open,
    interior,
    intersection,
    is_empty,
    open_to_dma,
    open_union,
    parse_up,
    pref_dfa,
    symdiff,
    union,
    up_membership,
)

from helpers import (
    AB,
    dma_a_ball_or_bw,
    dma_ball_a,
    dma_inf_a,
    dma_one_b,
    dma_singleton,
    emptiness_oracle,
    lasso_oracle,
    random_dma,
    random_open,
    random_up,
)


# ---------------------------------------------------------------------------
# construction and normal form


def test_from_parts_prunes_and_renumbers():
    # state 2 unreachable; family members touching it vanish
    a = DMA.from_parts(AB, 3, 0, [[0, 1], [0, 1], [2, 2]], [{0}, {2}, {0, 2}])
    assert a.n_states == 2
    assert a.initial == 0
    assert a.acceptance == (frozenset({0}),)


def test_from_parts_rejects_bad_input():
    with pytest.raises(ValueError):
        DMA.from_parts(AB, 2, 5, [[0, 1], [0, 1]], [{0}])
    with pytest.raises(ValueError):
        DMA.from_parts(AB, 2, 0, [[0, 1], [0, 9]], [{0}])
    with pytest.raises(ValueError):
        DMA.from_parts(AB, 2, 0, [[0, 1], [0, 1]], [{7}])


def test_accepts_set_uses_family():
    a = dma_inf_a()
    assert a.accepts_set({0}) and a.accepts_set({0, 1})
    assert not a.accepts_set({1}) and not a.accepts_set(set())


# ---------------------------------------------------------------------------
# boolean algebra


def test_complement_involution_and_excluded_middle():
    rng = random.Random(11)
    for _ in range(25):
        a = random_dma(rng, 5)
        assert equivalent(complement(complement(a)), a)
        assert equivalent(union(a, complement(a)), full_dma(a.alphabet))
        assert is_empty(intersection(a, complement(a)))


def test_symdiff_hand_case():
    a, b = dma_inf_a(), dma_ball_a()
    d = symdiff(a, b)
    assert up_membership(d, parse_up(AB, "b(a)^w"))
    assert not up_membership(d, parse_up(AB, "(a)^w"))


def test_de_morgan_on_random_pairs():
    rng = random.Random(12)
    for _ in range(15):
        a = random_dma(rng, 4, alphabets=(AB,))
        b = random_dma(rng, 4, alphabets=(AB,))
        assert equivalent(complement(union(a, b)),
                          intersection(complement(a), complement(b)))


def test_boolean_alphabet_mismatch():
    from helpers import ABC
    with pytest.raises(ValueError):
        union(dma_inf_a(), full_dma(ABC))


# ---------------------------------------------------------------------------
# emptiness and witnesses


def test_empty_family_is_empty():
    a = DMA.from_parts(AB, 1, 0, [[0, 0]], [])
    assert is_empty(a)
    assert accepting_witness(a) is None


def test_full_space_witness():
    a = DMA.from_parts(AB, 1, 0, [[0, 0]], [{0}])
    w = accepting_witness(a)
    assert w == UPWord(AB, "", "a")


def test_inf_a_witness_period_contains_a():
    w = accepting_witness(dma_inf_a())
    assert w is not None and "a" in w.period
    assert up_membership(dma_inf_a(), w)


def test_emptiness_matches_subset_oracle():
    rng = random.Random(13)
    for _ in range(150):
        a = random_dma(rng)
        empty = is_empty(a)
        assert empty == emptiness_oracle(a)
        w = accepting_witness(a)
        assert (w is None) == empty
        if w is not None:
            assert up_membership(a, w)


# ---------------------------------------------------------------------------
# UP membership


def test_up_membership_full_space():
    rng = random.Random(14)
    f = full_dma(AB)
    for _ in range(10):
        assert up_membership(f, random_up(rng))


def test_up_membership_hand_cases():
    a = dma_inf_a()
    assert not up_membership(a, parse_up(AB, "a(b)^w"))
    assert up_membership(a, parse_up(AB, "(ab)^w"))


def test_up_membership_matches_lasso_oracle():
    rng = random.Random(15)
    for _ in range(200):
        a = random_dma(rng)
        x = random_up(rng, a.alphabet)
        assert up_membership(a, x) == lasso_oracle(a, x)


def test_up_membership_alphabet_mismatch():
    from helpers import ABC
    with pytest.raises(ValueError):
        up_membership(dma_inf_a(), parse_up(ABC, "(c)^w"))


# ---------------------------------------------------------------------------
# closure and interior


def test_closure_idempotent_on_closed():
    c = closure(dma_singleton("a"))
    assert equivalent(c, dma_singleton("a"))
    assert equivalent(closure(c), c)


def test_closure_one_b_adds_a_power():
    c = closure(dma_one_b())
    assert up_membership(c, parse_up(AB, "(a)^w"))
    assert up_membership(c, parse_up(AB, "b(a)^w"))
    assert not up_membership(c, parse_up(AB, "(b)^w"))


def test_closure_contains_language_and_is_closed():
    rng = random.Random(16)
    for _ in range(40):
        a = random_dma(rng, 5)
        c = closure(a)
        assert contains(c, a)
        assert equivalent(closure(c), c)


def test_interior_hand_cases():
    assert interior(full_dma(AB)).reaches_final("")
    assert interior(dma_singleton("a")).is_empty()
    it = interior(dma_a_ball_or_bw())
    d = open_to_dma(it)
    assert up_membership(d, parse_up(AB, "a(b)^w"))
    assert up_membership(d, parse_up(AB, "a(a)^w"))
    assert not up_membership(d, parse_up(AB, "(b)^w"))


def test_interior_is_contained_open_subset():
    rng = random.Random(17)
    for _ in range(40):
        a = random_dma(rng, 5)
        it = open_to_dma(interior(a))
        assert contains(a, it)
        assert equivalent(open_to_dma(interior(it)), it)


def test_closure_interior_duality():
    rng = random.Random(18)
    for _ in range(25):
        a = random_dma(rng, 4)
        lhs = open_to_dma(interior(a))
        rhs = complement(closure(complement(a)))
        assert equivalent(lhs, rhs)


# ---------------------------------------------------------------------------
# containment


def test_contains_reflexive_and_full():
    rng = random.Random(19)
    for _ in range(20):
        a = random_dma(rng, 4)
        assert contains(a, a)
        assert contains(full_dma(a.alphabet), a)


def test_containment_counterexample_shape():
    x = containment_counterexample(dma_ball_a(), dma_inf_a())
    assert x is not None and x.symbol_at(0) == "b"
    assert up_membership(dma_inf_a(), x)
    assert not up_membership(dma_ball_a(), x)


def test_containment_counterexample_always_separates():
    rng = random.Random(20)
    for _ in range(60):
        a = random_dma(rng, 4, alphabets=(AB,))
        b = random_dma(rng, 4, alphabets=(AB,))
        x = containment_counterexample(a, b)
        if x is None:
            assert contains(a, b)
        else:
            assert up_membership(b, x) and not up_membership(a, x)


# ---------------------------------------------------------------------------
# open sets


def test_open_to_dma_trivial():
    assert is_empty(open_to_dma(empty_open(AB)))
    assert equivalent(open_to_dma(full_open(AB)), full_dma(AB))


def test_open_to_dma_ball_probes():
    d = open_to_dma(ball_open(AB, "a"))
    assert up_membership(d, parse_up(AB, "(a)^w"))
    assert not up_membership(d, parse_up(AB, "(b)^w"))


def test_open_union_matches_dma_union():
    rng = random.Random(21)
    for _ in range(30):
        e1 = random_open(rng)
        e2 = random_open(rng)
        u = open_union(e1, e2)
        assert equivalent(open_to_dma(u),
                          union(open_to_dma(e1), open_to_dma(e2)))


def test_open_final_states_absorb():
    e = OpenSet.from_parts(AB, 2, 0, [[1, 0], [0, 1]], [1])
    for q in e.finals:
        assert all(t == q for t in e.transitions[q])


# ---------------------------------------------------------------------------
# prefix language


def _accepted_words(d, up_to):
    return [w for w in d.alphabet.iter_words(0, up_to) if d.accepts(w)]


def test_pref_dfa_full_and_singleton():
    assert _accepted_words(pref_dfa(full_dma(AB)), 2) == ["", "a", "b", "aa", "ab", "ba", "bb"]
    assert _accepted_words(pref_dfa(dma_singleton("a")), 3) == ["", "a", "aa", "aaa"]


def test_pref_dfa_one_b():
    got = set(_accepted_words(pref_dfa(dma_one_b()), 3))
    expected = {w for w in AB.iter_words(0, 3) if w.count("b") <= 1}
    assert got == expected


def test_pref_dfa_random_agrees_with_nonempty_suffix():
    rng = random.Random(22)
    for _ in range(30):
        a = random_dma(rng, 4, alphabets=(AB,))
        d = pref_dfa(a)
        for w in AB.iter_words(0, 3):
            expected = not is_empty(_suffix_language(a, w))
            assert d.accepts(w) == expected


def _suffix_language(a, w):
    q = a.run_word(a.initial, w)
    return DMA.from_parts(a.alphabet, a.n_states, q, a.transitions, a.acceptance)


# ---------------------------------------------------------------------------
# infix avoidance automaton


def test_avoid_infix_dma_membership():
    d = avoid_infix_dma(AB, "ab")
    assert up_membership(d, parse_up(AB, "(a)^w"))
    assert up_membership(d, parse_up(AB, "(b)^w"))
    assert up_membership(d, parse_up(AB, "b(a)^w"))
    assert not up_membership(d, parse_up(AB, "(ab)^w"))
    assert not up_membership(d, parse_up(AB, "ab(b)^w"))


def test_avoid_infix_dma_overlapping_pattern():
    d = avoid_infix_dma(AB, "aba")
    assert not up_membership(d, parse_up(AB, "ab(ab)^w"))
    assert up_membership(d, parse_up(AB, "ab(b)^w"))
