//! Exact linear algebra over prime fields and the commutator of a nilpotent
//! Jordan matrix.

pub mod commutator;
pub mod dense;
pub mod field;

pub use commutator::{
    diagonal_coefficients, dominance_maximum, exhaustive_max_type, jordan_matrix, jordan_type, pivots,
    random_commutator, random_u_element, restriction_type, verify_restriction, witness_matrix, witness_pivots,
    CommutatorShape, MaxTypeReport, Pivot, PivotKind, RestrictionReport, Slot, DEFAULT_SCAN_BUDGET,
};
pub use dense::MatrixGFp;
pub use field::{PrimeField, DEFAULT_SAMPLING_PRIME};
