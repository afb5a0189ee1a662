//! Differential characters of the monopole and the two-patch bundle picture.

mod cech;
mod character;
mod holonomy;
pub mod sampling;

pub use cech::{cech_check, cech_rep, transition_phase, CechReport, CechRep, CECH_TOL};
pub use character::{character, character_with_solver, CharacterSummary, DifferentialCharacter, EXACT_TOL, QUADRATURE_TOL};
pub use holonomy::{holonomy, predicted_string_defect, string_defect, winding_number};
