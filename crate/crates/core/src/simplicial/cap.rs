//! Integer 2-chains bounding a given 1-cycle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::chain::IntChain;
use super::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{smith_normal_form, SmithDecomposition};
use crate::scalar::Real;

/// Solves `∂₂ S = C` over the integers using one Smith decomposition of ∂₂.
///
/// Building the solver is the expensive part; each solve is two sparse
/// matrix–vector products.
#[derive(Debug, Clone)]
pub struct CapSolver<'a, T> {
    complex: &'a SimplicialComplex<T>,
    smith: SmithDecomposition<BigInt>,
    fundamental: Option<IntChain>,
}

impl<'a, T: Real> CapSolver<'a, T> {
    pub fn new(complex: &'a SimplicialComplex<T>) -> Result<Self> {
        if complex.dim() < 2 {
            return Err(Error::Argument("caps need a complex with triangles".into()));
        }
        let d2 = complex.boundary_matrix(2)?.to_dense::<BigInt>();
        let smith = smith_normal_form(&d2);
        let fundamental = if complex.dim() == 2 {
            complex.fundamental_cycle().ok()
        } else {
            None
        };
        Ok(Self {
            complex,
            smith,
            fundamental,
        })
    }

    pub fn complex(&self) -> &'a SimplicialComplex<T> {
        self.complex
    }

    /// Some 2-chain whose boundary is `cycle`.
    ///
    /// On a closed surface the solution is unique up to multiples of the
    /// fundamental cycle; the representative with the smallest coefficient
    /// spread is returned.
    pub fn solve(&self, cycle: &IntChain) -> Result<IntChain> {
        if cycle.dim() != 1 {
            return Err(Error::Argument(format!("cap of a {}-chain", cycle.dim())));
        }
        if !self.complex.boundary(cycle)?.is_zero() {
            return Err(Error::Argument("chain to be capped is not a cycle".into()));
        }
        let SmithDecomposition {
            u,
            v,
            invariant_factors,
            ..
        } = &self.smith;
        let rank = invariant_factors.len();

        // y = U c
        let mut y = vec![BigInt::zero(); u.rows()];
        for (i, yi) in y.iter_mut().enumerate() {
            for (e, c) in cycle.iter() {
                let uij = &u[(i, e)];
                if !uij.is_zero() {
                    *yi += uij * BigInt::from(c);
                }
            }
        }
        let mut z = Vec::with_capacity(rank);
        for (i, d) in invariant_factors.iter().enumerate() {
            let (q, r) = y[i].div_rem(d);
            if !r.is_zero() {
                return Err(Error::HomologyObstruction(
                    "cycle is not an integral boundary (torsion obstruction)".into(),
                ));
            }
            z.push(q);
        }
        if y[rank..].iter().any(|x| !x.is_zero()) {
            return Err(Error::HomologyObstruction(
                "cycle represents a nonzero homology class".into(),
            ));
        }

        // S = V z
        let mut cap = IntChain::zero(2);
        for row in 0..v.rows() {
            let mut s = BigInt::zero();
            for (i, zi) in z.iter().enumerate() {
                if !zi.is_zero() {
                    let vji = &v[(row, i)];
                    if !vji.is_zero() {
                        s += vji * zi;
                    }
                }
            }
            let s = s
                .to_i64()
                .ok_or_else(|| Error::Resource("cap coefficient exceeds 64 bits".into()))?;
            cap.add_term(row, s);
        }

        if let Some(f) = &self.fundamental {
            cap = recentre(&cap, f, self.complex.count(2));
        }
        debug_assert_eq!(&self.complex.boundary(&cap)?, cycle);
        Ok(cap)
    }
}

/// Shifts `cap` by the multiple of the fundamental cycle that centres its
/// coefficient range on zero.
fn recentre(cap: &IntChain, fundamental: &IntChain, n: usize) -> IntChain {
    let coeffs: Vec<i64> = (0..n).map(|t| cap.coeff(t)).collect();
    let (lo, hi) = match (coeffs.iter().min(), coeffs.iter().max()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return cap.clone(),
    };
    let shift = Integer::div_floor(&(lo + hi), &2);
    if shift == 0 {
        return cap.clone();
    }
    cap - &fundamental.scaled(shift)
}

/// One-shot cap; prefer [`CapSolver`] when capping many cycles.
pub fn cap<T: Real>(complex: &SimplicialComplex<T>, cycle: &IntChain) -> Result<IntChain> {
    CapSolver::new(complex)?.solve(cycle)
}
