"""Constructive open-modulo-meager witnesses for regular omega-languages.

A witness for a language F is a pair (E, F') with E a regular open set and
F' a regular meager language such that F and E differ only inside F'
(F symmetric-difference E is contained in F').  Every regular language has
one; the synthesis here marks the states from which acceptance has uniform
probability exactly 1 and takes E as the words that ever reach such a
state, so that the symmetric difference is a null set and hence meager.

Constructions never trust themselves: synthesis and the union/complement
composition steps all re-verify their output before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import (
    DMA,
    OpenSet,
    avoid_infix_dma,
    complement,
    containment_counterexample,
    empty_open,
    interior,
    intersection,
    open_to_dma,
    open_union,
    symdiff,
    union,
    up_membership,
)
from .category import is_meager, is_nowhere_dense
from .measure import acceptance_probabilities, mu
from .words import UPWord, up_non_infix_witness


@dataclass(frozen=True)
class ABPWitness:
    """Open set ``e`` and meager ``fprime`` with  F delta e  inside fprime."""

    e: OpenSet
    fprime: DMA


@dataclass(frozen=True)
class WitnessCheck:
    """Verification outcome; truthy iff the witness is valid.

    ``failed`` is None, "meager" (fprime is not meager) or "containment"
    (some word lies in the symmetric difference but not in fprime, in which
    case ``counterexample`` holds one such ultimately periodic word).
    """

    ok: bool
    failed: str | None = None
    counterexample: UPWord | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_abp_witness(f: DMA, w: ABPWitness) -> WitnessCheck:
    """Check both witness clauses against ``f``; see :class:`WitnessCheck`."""
    if f.alphabet != w.e.alphabet or f.alphabet != w.fprime.alphabet:
        raise ValueError("alphabet mismatch")
    if not is_meager(w.fprime):
        return WitnessCheck(False, "meager")
    delta = symdiff(f, open_to_dma(w.e))
    cx = containment_counterexample(w.fprime, delta)
    if cx is not None:
        return WitnessCheck(False, "containment", cx)
    return WitnessCheck(True)


def synthesize_abp_witness(f: DMA) -> ABPWitness:
    """Witness for an arbitrary DMA; total, and self-verifying.

    E is generated by the states whose acceptance probability is exactly 1;
    from such a state rejection is a null event, and conversely almost every
    accepted run eventually enters an accepting bottom SCC, where the
    probability is 1.  The symmetric difference is therefore null, meager by
    the measure-category coincidence for regular languages, and is returned
    as fprime unchanged (the tightest verifiable choice).

    For a meager input no state has probability 1, so E is empty and
    fprime equals f itself.
    """
    probs = acceptance_probabilities(f)
    finals = [q for q in range(f.n_states) if probs[q] == 1]
    e = OpenSet.from_parts(f.alphabet, f.n_states, f.initial, f.transitions, finals)
    fprime = symdiff(f, open_to_dma(e))
    witness = ABPWitness(e, fprime)
    assert mu(fprime) == 0, "synthesized symmetric difference must be null"
    check = verify_abp_witness(f, witness)
    assert check, f"synthesized witness failed verification: {check.failed}"
    return witness


def union_witness(f1: DMA, w1: ABPWitness, f2: DMA, w2: ABPWitness) -> ABPWitness:
    """Witness for union(f1, f2) from witnesses of the parts.

    Uses (F1 u F2) delta (E1 u E2)  being a subset of
    (F1 delta E1) u (F2 delta E2): the union of the open parts stays open,
    the union of the meager parts stays meager.
    """
    if not verify_abp_witness(f1, w1):
        raise ValueError("first witness does not verify against its language")
    if not verify_abp_witness(f2, w2):
        raise ValueError("second witness does not verify against its language")
    e = open_union(w1.e, w2.e)
    fprime = union(w1.fprime, w2.fprime)
    result = ABPWitness(e, fprime)
    check = verify_abp_witness(union(f1, f2), result)
    assert check, f"union witness failed verification: {check.failed}"
    return result


def complement_witness(f: DMA, w: ABPWitness) -> ABPWitness:
    """Witness for complement(f) from a witness of ``f``.

    The complement of E is closed, not open, so it cannot serve directly;
    instead take its interior and push the leftover boundary (a closed set
    with empty interior, hence nowhere dense) into the meager part:

        (not F) delta int(not E)  is a subset of  (F delta E) u boundary.
    """
    if not verify_abp_witness(f, w):
        raise ValueError("witness does not verify against its language")
    e_dma = open_to_dma(w.e)
    not_e = complement(e_dma)
    ec = interior(not_e)
    boundary = intersection(not_e, complement(open_to_dma(ec)))
    assert is_nowhere_dense(boundary), "boundary of a closed set must be nowhere dense"
    fprime = union(w.fprime, boundary)
    result = ABPWitness(ec, fprime)
    check = verify_abp_witness(complement(f), result)
    assert check, f"complement witness failed verification: {check.failed}"
    return result


def finite_up_abp(xs: list[UPWord]) -> ABPWitness:
    """Witness for a finite set of ultimately periodic words, with E empty.

    Each word misses some finite block as an infix; the union of the
    corresponding avoid-the-block languages is a closed nowhere-dense
    superset, so the finite set itself is meager with the trivial open part.
    """
    if not xs:
        raise ValueError("need at least one UP word")
    alphabet = xs[0].alphabet
    for x in xs:
        if x.alphabet != alphabet:
            raise ValueError("UP words must share one alphabet")
    fprime: DMA | None = None
    for x in xs:
        block = avoid_infix_dma(alphabet, up_non_infix_witness(x))
        fprime = block if fprime is None else union(fprime, block)
    assert fprime is not None
    for x in xs:
        assert up_membership(fprime, x), f"{x} must lie in the covering language"
    assert is_meager(fprime), "finite UP covering must be meager"
    return ABPWitness(empty_open(alphabet), fprime)
