//! Exact integral linear algebra and (co)homology groups.

mod groups;
mod matrix;
mod smith;
mod sparse;

pub use groups::{
    boundary_invariant_factors, cohomology, homology, uct_terms, AbelianGroupDescriptor, Ring,
    UctTerms,
};
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithDecomposition};
pub use sparse::{invariant_factors, normalize_diagonal, SparseIntMatrix};
