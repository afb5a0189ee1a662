//! Two-patch (Wu–Yang) model of the monopole bundle with connection.
//!
//! The northern patch carries the potential whose string runs south, the
//! southern patch the one whose string runs north. On the equatorial overlap
//! they differ by the pure gauge (n/2π) dφ of the transition function
//! φ ↦ e^{inφ}, whose winding is the Chern number.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{dphi, string_potential, FormField, MonopoleConfig, Pole};
use crate::geometry::Point3;
use crate::scalar::Real;
use crate::simplicial::SimplicialComplex;

use super::character::{character, EXACT_TOL};

/// Cocycle tolerance.
pub const CECH_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct CechRep<'a, T> {
    pub winding: i64,
    pub cfg: MonopoleConfig<T>,
    /// Regular on z > −1 (string through the south pole).
    pub northern: FormField<T>,
    /// Regular on z < 1 (string through the north pole).
    pub southern: FormField<T>,
    /// Overlap band |z| ≤ overlap_half_width on the unit sphere.
    pub overlap_half_width: T,
    pub mesh: &'a SimplicialComplex<T>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CechReport {
    pub n: i64,
    pub samples: usize,
    pub cocycle_residual: f64,
    pub winding_integral: f64,
    pub winding: i64,
    pub characteristic_class: i64,
    pub pass: bool,
}

/// Two-patch data for a charge with 2g = n.
pub fn cech_rep<'a, T: Real>(
    n: i64,
    cfg: &MonopoleConfig<T>,
    complex: &'a SimplicialComplex<T>,
) -> Result<CechRep<'a, T>> {
    let expected = T::from_i64(n).ok_or_else(|| Error::Argument("winding out of range".into()))?;
    if cfg.normalized_charge() != expected {
        return Err(Error::Argument(format!(
            "Cech data needs 2g = n exactly (g = {}, n = {n})",
            cfg.g
        )));
    }
    Ok(CechRep {
        winding: n,
        cfg: *cfg,
        northern: string_potential(cfg, Pole::South),
        southern: string_potential(cfg, Pole::North),
        overlap_half_width: T::lit(0.5),
        mesh: complex,
    })
}

/// Transition function phase n·φ/2π (in turns) at azimuth φ.
pub fn transition_phase<T: Real>(n: i64, phi: T) -> T {
    T::from_i64(n).expect("winding") * phi / T::two_pi()
}

fn overlap_samples<T: Real>(half_width: T) -> Vec<(Point3<T>, Point3<T>)> {
    let mut out = Vec::new();
    let heights = 5;
    let azimuths = 24;
    for i in 0..heights {
        let z = half_width * T::lit(2.0 * i as f64 / (heights - 1) as f64 - 1.0);
        let rho = (T::one() - z * z).sqrt();
        for j in 0..azimuths {
            let phi = T::two_pi() * T::lit(j as f64 / azimuths as f64);
            let (s, c) = phi.sin_cos();
            let p = Point3::new(rho * c, rho * s, z);
            let e_phi = Point3::new(-s, c, T::zero());
            let e_theta = Point3::new(z * c, z * s, -rho);
            out.push((p, e_phi));
            out.push((p, e_theta));
            out.push((p, e_phi * T::lit(0.6) + e_theta * T::lit(-0.8)));
        }
    }
    out
}

/// Checks A_N − A_S = (n/2π) dφ on the overlap and that the transition
/// winding equals the character's characteristic class.
pub fn cech_check<T: Real>(rep: &CechRep<'_, T>) -> Result<CechReport> {
    let n = T::from_i64(rep.winding).expect("winding");
    let samples = overlap_samples(rep.overlap_half_width);
    let mut residual = T::zero();
    for (p, v) in &samples {
        let diff = rep.northern.eval(p, &[*v])? - rep.southern.eval(p, &[*v])?;
        let gauge = n * dphi(p, v) / T::two_pi();
        residual = residual.max((diff - gauge).abs());
    }

    // ∮ (A_N − A_S) around the equator, composite Gauss over 8 arcs.
    let segments = 8;
    let (nodes, weights) = crate::fields::gauss_legendre::<T>(16);
    let mut winding_integral = T::zero();
    for k in 0..segments {
        let h = T::two_pi() / T::lit(segments as f64);
        let start = h * T::lit(k as f64);
        for (t, w) in nodes.iter().zip(&weights) {
            let phi = start + h * *t;
            let (s, c) = phi.sin_cos();
            let p = Point3::new(c, s, T::zero());
            let v = Point3::new(-s, c, T::zero()) * h;
            let diff = rep.northern.eval(&p, &[v])? - rep.southern.eval(&p, &[v])?;
            winding_integral = winding_integral + *w * diff;
        }
    }
    let winding = winding_integral.round().to_i64().unwrap_or(i64::MIN);

    let chi = character(&rep.cfg, rep.mesh, T::lit(EXACT_TOL), false)?;
    let class = chi.characteristic_class()?;

    let tol = T::lit(CECH_TOL);
    let winding_err = (winding_integral - n).abs();
    if residual >= tol || winding_err >= tol || winding != class || winding != rep.winding {
        return Err(Error::Cocycle {
            residual: residual.max(winding_err).to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(CechReport {
        n: rep.winding,
        samples: samples.len(),
        cocycle_residual: residual.to_f64().unwrap_or(f64::NAN),
        winding_integral: winding_integral.to_f64().unwrap_or(f64::NAN),
        winding,
        characteristic_class: class,
        pass: true,
    })
}
