//! Dense exact linear algebra over GF(p): PLUQ decompositions under
//! configurable pivoting strategies, the rank profile matrix, and the
//! echelon, LEU and Bruhat forms derived from them.
//!
//! All public matrix and permutation indices are 1-based.

pub mod decomp;
pub mod elim;
pub mod error;
pub mod field;
pub mod io;
pub mod matgen;
pub mod matrix;
pub mod oracle;
pub mod perm;
pub mod pivoting;
pub mod subperm;

pub use decomp::{
    bruhat, column_echelon, generic_profile_check, leading_echelon, leu, row_echelon,
    BruhatFactors, EchelonForm, EchelonKind, GenericityReport, LeuFactors,
};
pub use elim::{
    check_table_row, pluq_crout_lex, pluq_iterative, pluq_left_looking_product,
    pluq_right_looking_product, pluq_tile_recursive, strategy_table, PluqFactors, Strategy,
    StrategyTableRow,
};
pub use error::{Error, Result};
pub use field::{PrimeField, ReductionCounter, MAX_MODULUS};
pub use io::{parse_matrix, parse_permutation, write_matrix, write_permutation};
pub use matgen::{
    random_matrix, random_rank_matrix, random_rpm_matrix, random_rsubperm, SplitMix64,
};
pub use matrix::DenseMatrix;
pub use perm::{Permutation, Side};
pub use pivoting::{PermStrategy, PivotChoice, SearchOrder};
pub use subperm::SubPermutationMatrix;

/// The classical arithmetic operation count of a rank-r PLUQ decomposition
/// of an m x n matrix: `2mnr + 2r^3/3 - r^2(m + n)`.
pub fn arithmetic_cost(m: usize, n: usize, r: usize) -> f64 {
    let (m, n, r) = (m as f64, n as f64, r as f64);
    2.0 * m * n * r + 2.0 * r * r * r / 3.0 - r * r * (m + n)
}
