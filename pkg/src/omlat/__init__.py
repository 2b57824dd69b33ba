"""Finite orthomodular lattices, left residuated l-groupoids, and the
two-way Sasaki correspondence between them.

The toolkit is exhaustive by design: structures are dense tables over carriers
of at most a dozen elements, every axiom check is a full scan returning a
per-axiom report with concrete witnesses, and small structures can be
enumerated up to isomorphism for corpus-wide verification.
"""

from .errors import (
    CycleDetectedError,
    DuplicateNameError,
    HypothesisViolatedError,
    NotALatticeError,
    NotBoundedError,
    NotOrthomodularError,
    OmlatError,
    ParseError,
    SizeLimitExceededError,
    TableNotTotalError,
    UnknownAxiomIdError,
    UnknownElementError,
)
from .order import (
    DEFAULT_PERMUTATION_BUDGET,
    BoundedLattice,
    CanonicalCertificate,
    ElementId,
    FinitePoset,
    canonical_certificate,
    lattice_from_covers,
    lattice_from_poset,
    poset_from_covers,
    relabel_lattice,
    transitive_reduction,
    verify_lattice,
)
from .ortho import (
    OrthoCandidate,
    UnaryTable,
    check_orthomodularity,
    complementation_witness,
    distributivity_witness,
    is_boolean,
    verify_ortholattice,
)
from .reports import AxiomResult, VerificationReport, Witness, format_witness
from .residuated import (
    ALL_AXIOMS,
    CORE_AXIOMS,
    RECOVERY_AXIOMS,
    ROUND_TRIP_AXIOMS,
    ROUND_TRIP_AXIOMS_STRICT,
    AxiomProfile,
    BinOpTable,
    LrGroupoid,
    derived_negation,
    verify_lrg,
    verify_lrg_core,
    verify_lrg_extras,
)
from .correspondence import induced_oml, round_trip_check, sasaki_groupoid
from .search import (
    GROUPOID_AXIOM_IDS,
    MAX_ENUMERATION_SIZE,
    ORTHO_AXIOM_IDS,
    EnumerationConfig,
    enumerate_bounded_lattices,
    enumerate_omls,
    enumerate_orthocomplements,
    find_counterexample,
)
from .formats import export_dot, parse_structure, serialize_structure

__version__ = "0.1.0"

__all__ = [
    "ALL_AXIOMS",
    "AxiomProfile",
    "AxiomResult",
    "BinOpTable",
    "BoundedLattice",
    "CORE_AXIOMS",
    "CanonicalCertificate",
    "CycleDetectedError",
    "DEFAULT_PERMUTATION_BUDGET",
    "DuplicateNameError",
    "ElementId",
    "EnumerationConfig",
    "FinitePoset",
    "GROUPOID_AXIOM_IDS",
    "HypothesisViolatedError",
    "LrGroupoid",
    "MAX_ENUMERATION_SIZE",
    "NotALatticeError",
    "NotBoundedError",
    "NotOrthomodularError",
    "OmlatError",
    "ORTHO_AXIOM_IDS",
    "OrthoCandidate",
    "ParseError",
    "RECOVERY_AXIOMS",
    "ROUND_TRIP_AXIOMS",
    "ROUND_TRIP_AXIOMS_STRICT",
    "SizeLimitExceededError",
    "TableNotTotalError",
    "UnaryTable",
    "UnknownAxiomIdError",
    "UnknownElementError",
    "VerificationReport",
    "Witness",
    "canonical_certificate",
    "check_orthomodularity",
    "complementation_witness",
    "derived_negation",
    "distributivity_witness",
    "enumerate_bounded_lattices",
    "enumerate_omls",
    "enumerate_orthocomplements",
    "export_dot",
    "find_counterexample",
    "format_witness",
    "induced_oml",
    "is_boolean",
    "lattice_from_covers",
    "lattice_from_poset",
    "parse_structure",
    "poset_from_covers",
    "relabel_lattice",
    "round_trip_check",
    "sasaki_groupoid",
    "serialize_structure",
    "transitive_reduction",
    "verify_lattice",
    "verify_lrg",
    "verify_lrg_core",
    "verify_lrg_extras",
    "verify_ortholattice",
]
