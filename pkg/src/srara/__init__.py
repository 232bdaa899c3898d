"""Arithmetical-rank witnesses for Stanley-Reisner ideals, with Groebner checks.

The constructions live in :mod:`srara.witness`; :mod:`srara.groebner` verifies
any claimed radical equality independently.
"""

from .groebner import (
    GroebnerBasis,
    TermOrder,
    VerificationReport,
    buchberger,
    certify_ara,
    ideal_member,
    normal_form,
    radical_member,
    verify_up_to_radical,
)
from .monomial import Monomial, MonomialIdeal, Variable, divides, ideal_contains, minimalize
from .polyring import FieldSpec, PolyMatrix, Polynomial
from .simplicial import (
    MinimalPrime,
    SimplicialComplex,
    complex_from_ideal,
    cone,
    minimal_primes,
    stanley_reisner_ideal,
)
from .witness import (
    ConeLiftTrace,
    SVPartition,
    WitnessSet,
    cone_lift,
    example4_witness,
    family_ideal,
    family_matrix_B,
    family_witness,
    schmitt_vogel,
    validate_sv,
)

__version__ = "0.1.0"

__all__ = [
    "ConeLiftTrace",
    "FieldSpec",
    "GroebnerBasis",
    "MinimalPrime",
    "Monomial",
    "MonomialIdeal",
    "PolyMatrix",
    "Polynomial",
    "SVPartition",
    "SimplicialComplex",
    "TermOrder",
    "Variable",
    "VerificationReport",
    "WitnessSet",
    "buchberger",
    "certify_ara",
    "complex_from_ideal",
    "cone",
    "cone_lift",
    "divides",
    "example4_witness",
    "family_ideal",
    "family_matrix_B",
    "family_witness",
    "ideal_contains",
    "ideal_member",
    "minimal_primes",
    "minimalize",
    "normal_form",
    "radical_member",
    "schmitt_vogel",
    "stanley_reisner_ideal",
    "validate_sv",
    "verify_up_to_radical",
]
