//! Differential characters of the Dirac monopole on triangulated spheres.
//!
//! Meshes of S² (and of a shell around the origin) are built by subdividing
//! an octahedron or icosahedron. Integral homology comes from Smith normal
//! forms of boundary matrices, cohomology from the universal coefficient
//! theorem. The monopole character is evaluated on 1-cycles by integrating
//! its curvature over integral caps, mod 1.
//!
//! Geometry is generic over [`Real`] (`f32`, `f64`); exact integer algebra
//! is generic over [`IntScalar`] and defaults to [`Int`] (`BigInt`).

pub mod characters;
pub mod cli;
pub mod error;
pub mod fields;
pub mod geometry;
pub mod homology;
pub mod scalar;
pub mod simplicial;
pub mod verifier;

pub use characters::{
    cech_check, cech_rep, character, holonomy, string_defect, CechRep, CechReport, CharacterSummary,
    DifferentialCharacter, EXACT_TOL, QUADRATURE_TOL,
};
pub use error::{Error, Result};
pub use fields::{
    curvature_form, flux, integrate_2form, line_integral, string_potential, CircleValue, FormField,
    MonopoleConfig, Pole, QuadratureSpec, TriangleMode,
};
pub use geometry::Point3;
pub use homology::{
    cohomology, homology, smith_normal_form, AbelianGroupDescriptor, IntMatrix, Ring, SmithDecomposition,
    SparseIntMatrix,
};
pub use scalar::{IntScalar, Real};
pub use simplicial::{
    cap, latitude_loop, shell_mesh, sphere_mesh, CapSolver, IntChain, MeshLabel, MeshScheme,
    SimplicialComplex,
};

/// Arbitrary-precision integer used for exact homology.
pub type Int = num_bigint::BigInt;
pub type Point3f = Point3<f64>;
pub type Complex = SimplicialComplex<f64>;
pub type Complex32 = SimplicialComplex<f32>;
pub type Monopole = MonopoleConfig<f64>;
pub type Form = FormField<f64>;
pub type Circle = CircleValue<f64>;
pub type Character<'a> = DifferentialCharacter<'a, f64>;
pub type Smith = SmithDecomposition<Int>;
pub type Matrix = IntMatrix<Int>;
/// Machine-integer matrices; fine for small entries, overflow panics in debug.
pub type Matrix64 = IntMatrix<i64>;
