"""Exact invariants of twisted algebras over the 2-fold N-adic solenoid.

The carrier of a choice sequence lives in nadic, the sequences
themselves in sequences, multipliers and symmetrizers in multiplier,
the ordered K0 picture in ktheory, classification in classify, and the
brute-force cross checks in oracle.
"""

from .nadic import NadicInteger, PrimeSeq, QnRational, multiplicative_order, prime_factors
from .sequences import Angle, AngleSequence, MixedAngleSequence, coarsen, refine
from .multiplier import (
    SequenceKind,
    Symmetrizer,
    action_phase,
    bicharacter,
    classify_type,
    is_simple,
    psi_phase,
    symmetrizer,
    theta_phase,
)
from .ktheory import (
    ExtensionElement,
    GeneratorCochain,
    KPairElement,
    WeakEquivalence,
    cohomologous,
    coboundary,
    j_seq,
    k_member,
    k_project,
    mu_cochain,
    trace,
    weakly_equivalent,
    xi_cocycle,
    zeta_cocycle,
)
from .classify import (
    AngleMatrix,
    BundleData,
    IsoVerdict,
    aut_generators,
    block_shift,
    bundle_data,
    conjugacy_report,
    isomorphic,
    prime_case_isomorphic,
    replay_witness,
    rescale,
)
from .oracle import (
    DEFAULT_SEED,
    FuzzReport,
    brute_symmetrizer,
    coboundary_solve,
    cocycle_fuzz,
    colimit_compare,
    colimit_report,
)

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "AngleMatrix",
    "AngleSequence",
    "BundleData",
    "DEFAULT_SEED",
    "ExtensionElement",
    "FuzzReport",
    "GeneratorCochain",
    "IsoVerdict",
    "KPairElement",
    "MixedAngleSequence",
    "NadicInteger",
    "PrimeSeq",
    "QnRational",
    "SequenceKind",
    "Symmetrizer",
    "WeakEquivalence",
    "action_phase",
    "aut_generators",
    "bicharacter",
    "block_shift",
    "brute_symmetrizer",
    "bundle_data",
    "classify_type",
    "coarsen",
    "coboundary",
    "coboundary_solve",
    "cocycle_fuzz",
    "cohomologous",
    "colimit_compare",
    "colimit_report",
    "conjugacy_report",
    "isomorphic",
    "is_simple",
    "j_seq",
    "k_member",
    "k_project",
    "mu_cochain",
    "multiplicative_order",
    "prime_case_isomorphic",
    "prime_factors",
    "psi_phase",
    "refine",
    "replay_witness",
    "rescale",
    "symmetrizer",
    "theta_phase",
    "trace",
    "weakly_equivalent",
    "xi_cocycle",
    "zeta_cocycle",
]
