//! Holonomy of the singular string potentials.

use crate::error::{Error, Result};
use crate::fields::{
    distance_to_integer, line_integral, string_potential, CircleValue, FormField, MonopoleConfig,
    Pole, QuadratureSpec,
};
use crate::geometry::azimuth_increment;
use crate::scalar::Real;
use crate::simplicial::{IntChain, SimplicialComplex};

use super::character::QUADRATURE_TOL;

/// ∮_C A mod 1 for a potential `A/2π`.
pub fn holonomy<T: Real>(
    potential: &FormField<T>,
    complex: &SimplicialComplex<T>,
    cycle: &IntChain,
    quad: &QuadratureSpec,
) -> Result<CircleValue<T>> {
    let value = line_integral(potential, complex, cycle, quad)?;
    Ok(CircleValue::new(value, T::lit(QUADRATURE_TOL)))
}

/// Circle distance between the holonomies of the potentials whose strings
/// leave through `pole1` and `pole2`.
pub fn string_defect<T: Real>(
    cfg: &MonopoleConfig<T>,
    complex: &SimplicialComplex<T>,
    cycle: &IntChain,
    pole1: Pole,
    pole2: Pole,
    quad: &QuadratureSpec,
) -> Result<T> {
    let h1 = holonomy(&string_potential(cfg, pole1), complex, cycle, quad)?;
    let h2 = holonomy(&string_potential(cfg, pole2), complex, cycle, quad)?;
    Ok(h1.distance(&h2))
}

/// Winding number of a 1-cycle about the z-axis, from summed azimuth
/// increments along its edges.
pub fn winding_number<T: Real>(complex: &SimplicialComplex<T>, cycle: &IntChain) -> Result<T> {
    if cycle.dim() != 1 {
        return Err(Error::Argument("winding number of a non-1-chain".into()));
    }
    let mut total = T::zero();
    for (e, coeff) in cycle.iter() {
        let v = complex.simplex(1, e).vertices();
        let (a, b) = (complex.point(v[0]), complex.point(v[1]));
        if a.rho() <= T::epsilon() || b.rho() <= T::epsilon() {
            return Err(Error::Singularity("edge endpoint on the z-axis".into()));
        }
        total = total + T::from_i64(coeff).expect("coefficient") * azimuth_increment(a, b);
    }
    Ok(total / T::two_pi())
}

/// Predicted string defect: distance from 2g·w to Z.
pub fn predicted_string_defect<T: Real>(
    cfg: &MonopoleConfig<T>,
    complex: &SimplicialComplex<T>,
    cycle: &IntChain,
) -> Result<T> {
    let w = winding_number(complex, cycle)?.round();
    Ok(distance_to_integer(cfg.normalized_charge() * w))
}
