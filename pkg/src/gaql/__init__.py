"""Exact symbolic toolkit for additive group actions on affine space.

Core objects: sparse rational polynomials, derivations and their local
nilpotency certificates, exponentiated flows, Jacobian derivations built
from polynomial maps, and Groebner-based geometric probes (fiber emptiness,
singular loci, subalgebra membership).
"""

from .action import (
    GaAction,
    UncertifiedDerivationError,
    act,
    deg_function,
    exponentiate,
    is_invariant,
)
from .derivation import (
    DegreeExplosionError,
    Derivation,
    FixedLocus,
    NilpotencyCertificate,
    apply,
    certify_locally_nilpotent,
    fixed_locus,
    kernel_check,
)
from .exprs import PolyParseError, format_polynomial, parse_polynomial
from .geometry import (
    FiberReport,
    GridSpec,
    SingularityReport,
    complement_scan,
    fiber_probe,
    singular_locus,
)
from .groebner import (
    GREVLEX,
    LEX,
    GroebnerBasis,
    MonomialOrder,
    block_order,
    buchberger_criterion_holds,
    dimension,
    eliminate,
    groebner_basis,
    ideal_membership,
    is_unit_ideal,
    radical_membership,
    reduce,
    subalgebra_membership,
)
from .poly import (
    NEG_INF,
    PolyMap,
    Polynomial,
    Ring,
    RingMismatchError,
    det,
    embed,
    jacobian_det,
)
from .quotient import (
    CandidateCheck,
    LocalSlice,
    check_map_invariant,
    find_local_slice,
    jacobian_derivation,
    slice_coefficient_as_P,
    verify_invariant_generators,
    verify_localization_identity,
)

__all__ = [
    "CandidateCheck",
    "DegreeExplosionError",
    "Derivation",
    "FiberReport",
    "FixedLocus",
    "GREVLEX",
    "GaAction",
    "GridSpec",
    "GroebnerBasis",
    "LEX",
    "LocalSlice",
    "MonomialOrder",
    "NEG_INF",
    "NilpotencyCertificate",
    "PolyMap",
    "PolyParseError",
    "Polynomial",
    "Ring",
    "RingMismatchError",
    "SingularityReport",
    "UncertifiedDerivationError",
    "act",
    "apply",
    "block_order",
    "buchberger_criterion_holds",
    "certify_locally_nilpotent",
    "check_map_invariant",
    "complement_scan",
    "deg_function",
    "det",
    "dimension",
    "eliminate",
    "embed",
    "exponentiate",
    "fiber_probe",
    "find_local_slice",
    "fixed_locus",
    "format_polynomial",
    "groebner_basis",
    "ideal_membership",
    "is_invariant",
    "is_unit_ideal",
    "jacobian_derivation",
    "jacobian_det",
    "kernel_check",
    "parse_polynomial",
    "radical_membership",
    "reduce",
    "singular_locus",
    "slice_coefficient_as_P",
    "subalgebra_membership",
    "verify_invariant_generators",
    "verify_localization_identity",
]
