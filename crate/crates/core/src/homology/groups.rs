//! Homology and cohomology groups of simplicial complexes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize, Serializer};

use super::sparse::invariant_factors;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::simplicial::SimplicialComplex;

/// Coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Z,
    R,
    RmodZ,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Z => "Z",
            Ring::R => "R",
            Ring::RmodZ => "R/Z",
        })
    }
}

/// A finitely described abelian group `Z^free ⊕ ⊕ Z/t_i ⊕ (R/Z)^circle`
/// (or `R^free` over the reals).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroupDescriptor {
    pub ring: Ring,
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigInt>,
    pub circle_factors: usize,
}

fn serialize_torsion<S: Serializer>(t: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(t.len()))?;
    for v in t {
        match v.to_u64() {
            Some(n) => seq.serialize_element(&n)?,
            None => seq.serialize_element(&v.to_string())?,
        }
    }
    seq.end()
}

impl AbelianGroupDescriptor {
    pub fn trivial(ring: Ring) -> Self {
        Self {
            ring,
            free_rank: 0,
            torsion: Vec::new(),
            circle_factors: 0,
        }
    }

    pub fn new(ring: Ring, free_rank: usize, mut torsion: Vec<BigInt>, circle_factors: usize) -> Self {
        torsion.retain(|t| !t.is_one());
        torsion.sort();
        Self {
            ring,
            free_rank,
            torsion,
            circle_factors,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty() && self.circle_factors == 0
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Same group structure, ignoring the coefficient ring tag.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.free_rank == other.free_rank
            && self.torsion == other.torsion
            && self.circle_factors == other.circle_factors
    }

    fn direct_sum(mut self, other: Self) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        self.free_rank += other.free_rank;
        self.circle_factors += other.circle_factors;
        self.torsion.extend(other.torsion);
        self.torsion.sort();
        self
    }
}

impl fmt::Display for AbelianGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let base = match self.ring {
            Ring::R => "R",
            _ => "Z",
        };
        match self.free_rank {
            0 => {}
            1 => parts.push(base.to_string()),
            n => parts.push(format!("{base}^{n}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        match self.circle_factors {
            0 => {}
            1 => parts.push("R/Z".to_string()),
            n => parts.push(format!("(R/Z)^{n}")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Invariant factors of ∂_k; empty outside 1..=dim.
pub fn boundary_invariant_factors<T: Real>(complex: &SimplicialComplex<T>, k: usize) -> Result<Vec<BigInt>> {
    if k == 0 || k > complex.dim() {
        return Ok(Vec::new());
    }
    Ok(invariant_factors(&complex.boundary_matrix(k)?))
}

fn check_degree<T: Real>(complex: &SimplicialComplex<T>, k: usize) -> Result<()> {
    if k > complex.dim() {
        return Err(Error::Argument(format!(
            "degree {k} exceeds complex dimension {}",
            complex.dim()
        )));
    }
    Ok(())
}

fn integral_homology_from(
    n_k: usize,
    factors_k: &[BigInt],
    factors_k1: &[BigInt],
) -> AbelianGroupDescriptor {
    let free = n_k - factors_k.len() - factors_k1.len();
    AbelianGroupDescriptor::new(Ring::Z, free, factors_k1.to_vec(), 0)
}

/// Integral homology H_k(K; Z) via invariant factors of ∂_k and ∂_{k+1}.
fn integral_homology<T: Real>(complex: &SimplicialComplex<T>, k: usize) -> Result<AbelianGroupDescriptor> {
    let fk = boundary_invariant_factors(complex, k)?;
    let fk1 = boundary_invariant_factors(complex, k + 1)?;
    Ok(integral_homology_from(complex.count(k), &fk, &fk1))
}

/// H_k(K; ring).
///
/// Over R only the rank survives. Over R/Z the universal coefficient
/// theorem for homology gives `H_k ⊗ R/Z ⊕ Tor(H_{k-1}, R/Z)`, i.e. one circle
/// per free summand of H_k plus the torsion of H_{k-1}.
pub fn homology<T: Real>(complex: &SimplicialComplex<T>, k: usize, ring: Ring) -> Result<AbelianGroupDescriptor> {
    check_degree(complex, k)?;
    let hk = integral_homology(complex, k)?;
    Ok(match ring {
        Ring::Z => hk,
        Ring::R => AbelianGroupDescriptor::new(Ring::R, hk.free_rank, Vec::new(), 0),
        Ring::RmodZ => {
            let tor = if k == 0 {
                Vec::new()
            } else {
                integral_homology(complex, k - 1)?.torsion
            };
            AbelianGroupDescriptor::new(Ring::RmodZ, 0, tor, hk.free_rank)
        }
    })
}

/// The two summands of H^k(K; ring) = Hom(H_k, ring) ⊕ Ext(H_{k-1}, ring).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UctTerms {
    pub hom: AbelianGroupDescriptor,
    pub ext: AbelianGroupDescriptor,
}

impl UctTerms {
    pub fn total(&self) -> AbelianGroupDescriptor {
        self.hom.clone().direct_sum(self.ext.clone())
    }
}

fn hom_into(h: &AbelianGroupDescriptor, ring: Ring) -> AbelianGroupDescriptor {
    match ring {
        // Hom(Z, Z) = Z, Hom(Z/m, Z) = 0
        Ring::Z => AbelianGroupDescriptor::new(Ring::Z, h.free_rank, Vec::new(), 0),
        Ring::R => AbelianGroupDescriptor::new(Ring::R, h.free_rank, Vec::new(), 0),
        // Hom(Z, R/Z) = R/Z, Hom(Z/m, R/Z) = Z/m
        Ring::RmodZ => AbelianGroupDescriptor::new(Ring::RmodZ, 0, h.torsion.clone(), h.free_rank),
    }
}

fn ext_into(h: &AbelianGroupDescriptor, ring: Ring) -> AbelianGroupDescriptor {
    match ring {
        // Ext(Z/m, Z) = Z/m, Ext(Z, ·) = 0
        Ring::Z => AbelianGroupDescriptor::new(Ring::Z, 0, h.torsion.clone(), 0),
        // R and R/Z are divisible, hence injective
        Ring::R | Ring::RmodZ => AbelianGroupDescriptor::trivial(ring),
    }
}

/// Hom and Ext summands of H^k(K; ring).
pub fn uct_terms<T: Real>(complex: &SimplicialComplex<T>, k: usize, ring: Ring) -> Result<UctTerms> {
    check_degree(complex, k)?;
    let hk = integral_homology(complex, k)?;
    let hk_1 = if k == 0 {
        AbelianGroupDescriptor::trivial(Ring::Z)
    } else {
        integral_homology(complex, k - 1)?
    };
    Ok(UctTerms {
        hom: hom_into(&hk, ring),
        ext: ext_into(&hk_1, ring),
    })
}

/// H^k(K; ring) via the universal coefficient theorem.
pub fn cohomology<T: Real>(complex: &SimplicialComplex<T>, k: usize, ring: Ring) -> Result<AbelianGroupDescriptor> {
    Ok(uct_terms(complex, k, ring)?.total())
}
