"""Exact topology, measure, and Baire-category analysis of regular
omega-languages given by deterministic Muller automata.

Everything is computed exactly: probabilities are `fractions.Fraction`,
root brackets are rational intervals, and every synthesized witness is
re-verified by an independent check before it is returned.
"""

from .automata import (
    DMA,
    Dfa,
    FamilyTooLargeError,
    OpenSet,
    accepting_witness,
    avoid_infix_dma,
    ball_open,
    boolean_combine,
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
    pref_dfa,
    symdiff,
    union,
    up_membership,
)
from .baire import (
    ABPWitness,
    WitnessCheck,
    complement_witness,
    finite_up_abp,
    synthesize_abp_witness,
    union_witness,
    verify_abp_witness,
)
from .category import (
    avoided_infix,
    contains_disjunctive,
    is_dense,
    is_meager,
    is_meager_via_measure,
    is_nowhere_dense,
)
from .measure import (
    PrefixFreeViolation,
    acceptance_probabilities,
    bsccs,
    format_decimal,
    format_rational,
    measure_open,
    mu,
    parse_rational,
    sigma_prefix_free,
    uniform_weights,
)
from .oaf import (
    OafDocument,
    OafError,
    from_dma,
    from_open,
    parse_oaf,
    serialize_oaf,
)
from .onecounter import (
    CounterLanguageSpec,
    Interval,
    IrrationalityCertificate,
    RefutationReport,
    counter_run,
    default_counter_spec,
    f1_member_up,
    f1_refute_open,
    f2_member_up,
    f2_nowhere_dense_witness,
    irrationality_certificate,
    min_positive_root,
    survival_probability,
    survival_sequence,
)
from .words import Alphabet, UPWord, parse_up, up_infixes, up_non_infix_witness, up_normalize

__version__ = "1.0.0"

__all__ = [
    "ABPWitness",
    "Alphabet",
    "CounterLanguageSpec",
    "DMA",
    "Dfa",
    "FamilyTooLargeError",
    "Interval",
    "IrrationalityCertificate",
    "OafDocument",
    "OafError",
    "OpenSet",
    "PrefixFreeViolation",
    "RefutationReport",
    "UPWord",
    "WitnessCheck",
    "acceptance_probabilities",
    "accepting_witness",
    "avoid_infix_dma",
    "avoided_infix",
    "ball_open",
    "boolean_combine",
    "bsccs",
    "closure",
    "complement",
    "complement_witness",
    "containment_counterexample",
    "contains",
    "contains_disjunctive",
    "counter_run",
    "default_counter_spec",
    "empty_dma",
    "empty_open",
    "equivalent",
    "f1_member_up",
    "f1_refute_open",
    "f2_member_up",
    "f2_nowhere_dense_witness",
    "finite_up_abp",
    "format_decimal",
    "format_rational",
    "from_dma",
    "from_open",
    "full_dma",
    "full_open",
    "interior",
    "intersection",
    "irrationality_certificate",
    "is_dense",
    "is_empty",
    "is_meager",
    "is_meager_via_measure",
    "is_nowhere_dense",
    "measure_open",
    "min_positive_root",
    "mu",
    "open_to_dma",
    "open_union",
    "parse_oaf",
    "parse_rational",
    "parse_up",
    "pref_dfa",
    "serialize_oaf",
    "sigma_prefix_free",
    "survival_probability",
    "survival_sequence",
    "symdiff",
    "synthesize_abp_witness",
    "union",
    "union_witness",
    "up_infixes",
    "up_membership",
    "up_non_infix_witness",
    "up_normalize",
    "uniform_weights",
    "verify_abp_witness",
]
