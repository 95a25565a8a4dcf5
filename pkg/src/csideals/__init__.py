"""Ideal classes of Z[theta_n] and Cappell-Shaneson matrices."""
from .order import TracedOrder, OrderElement, discriminant, f_eval, f_poly, nonmaximality_witness
from .ideals import IdealBasis, FractionalIdeal, colon, ideal_mul, principal, two_generated, unit_ideal
from .units import Embeddings, UnitSet, SearchLimitExceeded, embeddings, unit_group
from .matrices import (
    CSTriple,
    InvalidTripleError,
    delta_conjugation_check,
    double_dual_check,
    eigen_check,
    is_cs_matrix,
    is_valid_triple,
    star_dual,
    triple_to_ideal,
    triple_to_matrix,
)
from .classes import (
    ClassDecision,
    UndecidedError,
    class_listing,
    enumerate_class_reps,
    is_equivalent,
    is_invertible,
    is_principal,
    kummer_invertible,
    list_equivalent_triples,
    monoid_table,
    prime_power_invertible,
    scan_classes,
)
from .gompf import (
    Chain,
    Move,
    NotFound,
    SearchConfig,
    conjecture_check,
    earle_check,
    find_chain,
    verify_chain,
)

__version__ = "0.1.0"
