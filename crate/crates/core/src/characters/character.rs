use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{
    curvature_form, distance_to_integer, integrate_2form, CircleValue, FormField, MonopoleConfig,
    QuadratureSpec,
};
use crate::scalar::Real;
use crate::simplicial::{CapSolver, IntChain, SimplicialComplex};

/// Default tolerance for exact solid-angle arithmetic.
pub const EXACT_TOL: f64 = 1e-9;
/// Default tolerance once edge quadrature is involved.
pub const QUADRATURE_TOL: f64 = 1e-6;

/// Differential character of the monopole in degree one.
///
/// Represented by its curvature ω and cap evaluation: the value on a 1-cycle
/// C is ∫_S ω mod 1 for any integral 2-chain S with ∂S = C. This is well
/// defined exactly when ω has integral periods. A *defective* character
/// (2g ∉ Z) is kept around to exhibit the cap dependence.
#[derive(Debug, Clone)]
pub struct DifferentialCharacter<'a, T> {
    cfg: MonopoleConfig<T>,
    omega: FormField<T>,
    chern: i64,
    period: T,
    defective: bool,
    tol: T,
    caps: Arc<CapSolver<'a, T>>,
    quad: QuadratureSpec,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterSummary {
    pub g: f64,
    pub chern: i64,
    pub period: f64,
    pub defect: f64,
}

/// Builds the monopole character on `complex`.
pub fn character<'a, T: Real>(
    cfg: &MonopoleConfig<T>,
    complex: &'a SimplicialComplex<T>,
    tol: T,
    allow_defective: bool,
) -> Result<DifferentialCharacter<'a, T>> {
    character_with_solver(cfg, Arc::new(CapSolver::new(complex)?), tol, allow_defective)
}

/// As [`character`], reusing an existing cap solver for the same mesh.
pub fn character_with_solver<'a, T: Real>(
    cfg: &MonopoleConfig<T>,
    caps: Arc<CapSolver<'a, T>>,
    tol: T,
    allow_defective: bool,
) -> Result<DifferentialCharacter<'a, T>> {
    let n = cfg.normalized_charge();
    let defect = distance_to_integer(n);
    let defective = defect >= tol;
    if defective && !allow_defective {
        return Err(Error::Quantization {
            defect: defect.to_f64().unwrap_or(f64::NAN),
        });
    }
    let complex = caps.complex();
    let omega = curvature_form(cfg);
    let quad = QuadratureSpec::default();
    let period = match complex.fundamental_cycle() {
        Ok(f) if complex.dim() == 2 => integrate_2form(&omega, complex, &f, &quad)?,
        _ => n,
    };
    let chern = n.round().to_i64().ok_or_else(|| Error::Argument(format!("charge {n} out of range")))?;
    Ok(DifferentialCharacter {
        cfg: *cfg,
        omega,
        chern,
        period,
        defective,
        tol,
        caps,
        quad,
    })
}

impl<'a, T: Real> DifferentialCharacter<'a, T> {
    pub fn config(&self) -> &MonopoleConfig<T> {
        &self.cfg
    }

    pub fn omega(&self) -> &FormField<T> {
        &self.omega
    }

    /// Nearest integer to the period; the class in H²(S², Z) when not defective.
    pub fn chern(&self) -> i64 {
        self.chern
    }

    /// ∫ ω over the fundamental cycle of the mesh (2g for other complexes).
    pub fn period(&self) -> T {
        self.period
    }

    pub fn is_defective(&self) -> bool {
        self.defective
    }

    pub fn tol(&self) -> T {
        self.tol
    }

    pub fn mesh(&self) -> &'a SimplicialComplex<T> {
        self.caps.complex()
    }

    pub fn cap_solver(&self) -> &CapSolver<'a, T> {
        &self.caps
    }

    /// ∫_S ω (not reduced).
    pub fn surface_integral(&self, surface: &IntChain) -> Result<T> {
        integrate_2form(&self.omega, self.mesh(), surface, &self.quad)
    }

    /// χ(C) using the solver's canonical cap.
    pub fn evaluate(&self, cycle: &IntChain) -> Result<CircleValue<T>> {
        if cycle.dim() != 1 || !self.mesh().is_cycle(cycle)? {
            return Err(Error::Argument("character evaluated on a non-cycle".into()));
        }
        let cap = self.caps.solve(cycle)?;
        Ok(CircleValue::new(self.surface_integral(&cap)?, self.tol))
    }

    /// χ(C) computed from a caller-supplied cap S with ∂S = C.
    pub fn evaluate_with_cap(&self, cycle: &IntChain, cap: &IntChain) -> Result<CircleValue<T>> {
        if cycle.dim() != 1 || cap.dim() != 2 {
            return Err(Error::Argument("expected a 1-cycle and a 2-chain".into()));
        }
        if &self.mesh().boundary(cap)? != cycle {
            return Err(Error::Argument("supplied cap does not bound the cycle".into()));
        }
        Ok(CircleValue::new(self.surface_integral(cap)?, self.tol))
    }

    /// Circle distance between χ(C + ∂S) and χ(C) + ∫_S ω. Zero when the
    /// defining relation of a differential character holds.
    pub fn relation_defect(&self, cycle: &IntChain, surface: &IntChain) -> Result<T> {
        if surface.dim() != 2 {
            return Err(Error::Argument("relation needs a 2-chain S".into()));
        }
        let shifted = cycle + &self.mesh().boundary(surface)?;
        let lhs = self.evaluate(&shifted)?;
        let rhs = CircleValue::new(self.evaluate(cycle)?.value() + self.surface_integral(surface)?, self.tol);
        Ok(lhs.distance(&rhs))
    }

    /// The integer ∫ ω, i.e. the image of χ in H²(S², Z) ≅ Z.
    pub fn characteristic_class(&self) -> Result<i64> {
        let defect = distance_to_integer(self.period);
        if self.defective || defect >= self.tol {
            return Err(Error::Integrality {
                defect: defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        self.period
            .round()
            .to_i64()
            .ok_or_else(|| Error::Integrality { defect: f64::NAN })
    }

    pub fn summary(&self) -> CharacterSummary {
        CharacterSummary {
            g: self.cfg.g.to_f64().unwrap_or(f64::NAN),
            chern: self.chern,
            period: self.period.to_f64().unwrap_or(f64::NAN),
            defect: distance_to_integer(self.cfg.normalized_charge()).to_f64().unwrap_or(f64::NAN),
        }
    }
}
