import random

import pytest

from omegabaire import (
    ABPWitness,
    complement,
    complement_witness,
    contains,
    empty_dma,
    empty_open,
    equivalent,
    finite_up_abp,
    full_dma,
    full_open,
    is_empty,
    is_meager,
    mu,
    open_to_dma,
    parse_up,
    symdiff,
    synthesize_abp_witness,
    union,
    union_witness,
    up_membership,
    verify_abp_witness,
)

from helpers import AB, ABC, dma_ball_a, dma_inf_a, dma_singleton, random_dma


def dma_fin_a():
    return complement(dma_inf_a())


# ---------------------------------------------------------------------------
# synthesis


def test_synth_inf_a():
    w = synthesize_abp_witness(dma_inf_a())
    assert equivalent(open_to_dma(w.e), full_dma(AB))
    assert equivalent(w.fprime, dma_fin_a())
    assert is_meager(w.fprime)


def test_synth_clopen_ball():
    w = synthesize_abp_witness(dma_ball_a())
    assert equivalent(open_to_dma(w.e), dma_ball_a())
    assert is_empty(w.fprime)


def test_synth_singleton():
    w = synthesize_abp_witness(dma_singleton("a"))
    assert w.e.is_empty()
    assert equivalent(w.fprime, dma_singleton("a"))


def test_synth_meager_inputs_covered_by_fprime():
    rng = random.Random(51)
    seen = 0
    for _ in range(60):
        f = random_dma(rng, 5)
        if not is_meager(f):
            continue
        w = synthesize_abp_witness(f)
        assert w.e.is_empty()
        assert contains(w.fprime, f)
        seen += 1
    assert seen >= 8


def test_synth_always_verifies():
    rng = random.Random(52)
    for _ in range(50):
        f = random_dma(rng, 5)
        w = synthesize_abp_witness(f)
        assert verify_abp_witness(f, w)
        assert mu(w.fprime) == 0


# ---------------------------------------------------------------------------
# verification


def test_verify_rejects_bad_witness():
    f = full_dma(AB)
    bad = ABPWitness(empty_open(AB), empty_dma(AB))
    check = verify_abp_witness(f, bad)
    assert not check
    assert check.failed == "containment"
    assert check.counterexample is not None
    assert up_membership(f, check.counterexample)


def test_verify_accepts_empty_on_empty():
    check = verify_abp_witness(empty_dma(AB), ABPWitness(empty_open(AB), empty_dma(AB)))
    assert check and check.failed is None


def test_verify_rejects_nonmeager_fprime():
    f = full_dma(AB)
    check = verify_abp_witness(f, ABPWitness(full_open(AB), full_dma(AB)))
    assert not check and check.failed == "meager"


def test_verify_alphabet_mismatch():
    with pytest.raises(ValueError):
        verify_abp_witness(full_dma(ABC), ABPWitness(empty_open(AB), empty_dma(AB)))


# ---------------------------------------------------------------------------
# composition


def test_union_witness_trivial():
    f = empty_dma(AB)
    w = synthesize_abp_witness(f)
    u = union_witness(f, w, f, w)
    assert u.e.is_empty() and is_empty(u.fprime)


def test_union_witness_clopen_cover():
    f1, w1 = dma_ball_a(), synthesize_abp_witness(dma_ball_a())
    b_ball = complement(dma_ball_a())  # over {a,b} this is b.X^omega
    w2 = synthesize_abp_witness(b_ball)
    u = union_witness(f1, w1, b_ball, w2)
    assert equivalent(open_to_dma(u.e), full_dma(AB))
    assert is_empty(u.fprime)


def test_union_witness_two_singletons():
    f1, f2 = dma_singleton("a"), dma_singleton("b")
    w1, w2 = synthesize_abp_witness(f1), synthesize_abp_witness(f2)
    u = union_witness(f1, w1, f2, w2)
    assert u.e.is_empty()
    assert equivalent(u.fprime, union(f1, f2))
    assert is_meager(u.fprime)


def test_union_witness_random_pairs():
    rng = random.Random(53)
    for _ in range(25):
        f1 = random_dma(rng, 4, alphabets=(AB,))
        f2 = random_dma(rng, 4, alphabets=(AB,))
        w1, w2 = synthesize_abp_witness(f1), synthesize_abp_witness(f2)
        u = union_witness(f1, w1, f2, w2)
        assert verify_abp_witness(union(f1, f2), u)


def test_union_witness_rejects_unverified_inputs():
    f = full_dma(AB)
    good = synthesize_abp_witness(f)
    bad = ABPWitness(empty_open(AB), empty_dma(AB))
    with pytest.raises(ValueError):
        union_witness(f, good, f, bad)


def test_complement_witness_full():
    f = full_dma(AB)
    w = synthesize_abp_witness(f)
    c = complement_witness(f, w)
    assert c.e.is_empty() and is_empty(c.fprime)


def test_complement_witness_clopen():
    f = dma_ball_a()
    w = synthesize_abp_witness(f)
    c = complement_witness(f, w)
    assert equivalent(open_to_dma(c.e), complement(f))
    assert is_empty(c.fprime)


def test_complement_witness_inf_a():
    f = dma_inf_a()
    w = synthesize_abp_witness(f)
    c = complement_witness(f, w)
    assert c.e.is_empty()
    assert equivalent(c.fprime, dma_fin_a())
    assert verify_abp_witness(complement(f), c)


def test_complement_witness_random():
    rng = random.Random(54)
    for _ in range(25):
        f = random_dma(rng, 4, alphabets=(AB,))
        w = synthesize_abp_witness(f)
        c = complement_witness(f, w)
        assert verify_abp_witness(complement(f), c)


# ---------------------------------------------------------------------------
# finite UP sets


def test_finite_up_single_a_power():
    w = finite_up_abp([parse_up(AB, "(a)^w")])
    assert w.e.is_empty()
    assert equivalent(w.fprime, dma_singleton("a"))


def test_finite_up_ab_cycle():
    x = parse_up(AB, "(ab)^w")
    w = finite_up_abp([x])
    assert up_membership(w.fprime, x)
    assert is_meager(w.fprime)
    # "aa" never occurs in any member
    assert not up_membership(w.fprime, parse_up(AB, "aa(b)^w"))


def test_finite_up_two_words():
    xs = [parse_up(AB, "(a)^w"), parse_up(AB, "(b)^w")]
    w = finite_up_abp(xs)
    for x in xs:
        assert up_membership(w.fprime, x)
    assert is_meager(w.fprime)


def test_finite_up_random_sets():
    from helpers import random_up
    rng = random.Random(55)
    for _ in range(25):
        xs = [random_up(rng) for _ in range(rng.randint(1, 4))]
        w = finite_up_abp(xs)
        assert w.e.is_empty()
        assert is_meager(w.fprime)
        for x in xs:
            assert up_membership(w.fprime, x)


def test_finite_up_rejects_bad_input():
    with pytest.raises(ValueError):
        finite_up_abp([])
    with pytest.raises(ValueError):
        finite_up_abp([parse_up(AB, "(a)^w"), parse_up(ABC, "(c)^w")])


# ---------------------------------------------------------------------------
# the modulo-open-sets identity itself


def test_witness_symdiff_is_meager():
    rng = random.Random(56)
    for _ in range(30):
        f = random_dma(rng, 5)
        w = synthesize_abp_witness(f)
        delta = symdiff(f, open_to_dma(w.e))
        assert is_meager(delta)
        assert contains(w.fprime, delta)
