//! Oriented simplicial complexes modelling S² and the shell around the origin.

mod cap;
mod chain;
mod complex;
mod mesh;
mod off;

pub use cap::{cap, CapSolver};
pub use chain::IntChain;
pub use complex::{MeshLabel, MeshScheme, OrientedSimplex, SimplicialComplex};
pub use mesh::{latitude_loop, shell_mesh, sphere_mesh, MAX_LEVEL};
pub use off::{read_off, write_off};
