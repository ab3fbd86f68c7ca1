"""Exact arithmetic for period-2p quaternary sequences over Z4.

The package constructs the generalized cyclotomic classes modulo 2p,
generates the quaternary sequence they define, computes its linear
complexity by three independent routes (register synthesis over Z4,
brute-force search, closed form), and mechanically verifies the
supporting algebra inside Galois rings of characteristic 4.
"""

from .cyclotomy import (
    ClassLabel,
    GeneralizedCyclotomy,
    build_classes,
    find_common_primitive_root,
)
from .galois import (
    GaloisRing,
    GaloisRingElement,
    construct_ring,
    find_gamma,
    lift_irreducible,
    multiplicative_order,
    ord2_mod_p,
    powers_of,
)
from .lfsr import (
    LfsrResult,
    ResidueClass,
    brute_force_minimal,
    classify_prime,
    minimal_connection,
    reeds_sloane,
    theorem_lc,
    verify_connection,
)
from .ringpoly import NEG_INF, NonUnitDivisorError, Residue4, RingPolynomial, Z4
from .sequence import (
    QuaternarySequence,
    class_sum_polynomials,
    generate_sequence,
    generating_polynomial,
)
from .verify import (
    CheckResult,
    CheckStatus,
    LemmaReport,
    NormalizedGamma,
    full_report,
    normalize_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "ClassLabel",
    "GeneralizedCyclotomy",
    "build_classes",
    "find_common_primitive_root",
    "GaloisRing",
    "GaloisRingElement",
    "construct_ring",
    "find_gamma",
    "lift_irreducible",
    "multiplicative_order",
    "ord2_mod_p",
    "powers_of",
    "LfsrResult",
    "ResidueClass",
    "brute_force_minimal",
    "classify_prime",
    "minimal_connection",
    "reeds_sloane",
    "theorem_lc",
    "verify_connection",
    "NEG_INF",
    "NonUnitDivisorError",
    "Residue4",
    "RingPolynomial",
    "Z4",
    "QuaternarySequence",
    "class_sum_polynomials",
    "generate_sequence",
    "generating_polynomial",
    "CheckResult",
    "CheckStatus",
    "LemmaReport",
    "NormalizedGamma",
    "full_report",
    "normalize_gamma",
    "__version__",
]
