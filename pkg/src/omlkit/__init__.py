"""Finite computational algebra for orthomodular lattices and their coupled
near-semiring triples: axiom checkers with witnesses, the two constructions
between the worlds, canonical enumeration of small members, and a
line-oriented file format with a CLI."""

from .core import (
    Algebra,
    AlgebraError,
    AxiomResult,
    BadSize,
    BinaryOp,
    BoundedLattice,
    Carrier,
    CarrierMismatch,
    CheckReport,
    DuplicateName,
    InconsistentOrder,
    InvalidStructure,
    InvalidTask,
    NotALattice,
    NotAPartialOrder,
    OrderRelation,
    OutOfRange,
    PrerequisiteFailed,
    SignatureMismatch,
    SizeMismatch,
    UnaryOp,
    UnsupportedTask,
    are_isomorphic,
    build_structure,
    covering_pairs,
    is_antitone_involution,
    is_bounded_lattice,
    is_involutive_isomorphism,
    is_lattice,
    lattice_from_order,
    order_from_join,
    order_from_meet,
    validate_partial_order,
)
from .ortholattice import (
    OrthoLattice,
    check_commutation_properties,
    check_foulis_holland,
    check_orthomodular,
    check_ortholattice,
    commutes,
    sasaki_product,
    sasaki_product_table,
    sasaki_sum,
    sasaki_sum_table,
)
from .near_semiring import (
    Classification,
    NearSemiring,
    check_join_ordered,
    check_lattice_ordered_semiring,
    check_meet_ordered,
    check_right_near_semiring,
    check_semiring,
    classify,
)
from .coupled import (
    CoupledTriple,
    NotCoupled,
    NotOrthomodular,
    check_coupled_right_orthosemiring,
    check_coupled_semiring,
    involution_image,
    sasaki_triple,
    underlying_ortholattice,
    verify_lattice_roundtrip,
    verify_triple_roundtrip,
)
from .mv_basic import (
    NotMV,
    OplusAlgebra,
    check_basic_algebra,
    check_mv_algebra,
    derive_lattice,
    derive_product,
    lukasiewicz_chain,
    mv_associativity_flags,
    mv_coupled_semiring,
)
from .enumeration import (
    EnumerationTask,
    SearchTask,
    Truncated,
    canonical_form,
    canonicalize,
    class_counts,
    enumerate_structures,
    search_independence,
)
from . import corpus

__all__ = [name for name in dir() if not name.startswith("_")]
