//! Seeded random chains and cycles for property checks.

use rand::Rng;

use crate::error::Result;
use crate::scalar::Real;
use crate::simplicial::{latitude_loop, IntChain, MeshLabel, MeshScheme, SimplicialComplex};

/// Random 2-chain with up to `max_terms` triangles and coefficients in ±1..=3.
pub fn random_two_chain<T: Real, R: Rng>(complex: &SimplicialComplex<T>, rng: &mut R, max_terms: usize) -> IntChain {
    let n = complex.count(2);
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut c = IntChain::zero(2);
    for _ in 0..terms {
        let t = rng.gen_range(0..n);
        let mut coeff = rng.gen_range(1..=3);
        if rng.gen_bool(0.5) {
            coeff = -coeff;
        }
        c.add_term(t, coeff);
    }
    c
}

/// A random 1-cycle together with one 2-chain that bounds it.
///
/// The cycle is the boundary of a random 2-chain, plus on octahedron meshes
/// a random multiple of the equator (whose northern hemisphere is added to
/// the returned cap).
pub fn random_cycle<T: Real, R: Rng>(
    complex: &SimplicialComplex<T>,
    rng: &mut R,
) -> Result<(IntChain, IntChain)> {
    let mut cap = random_two_chain(complex, rng, 12);
    let mut cycle = complex.boundary(&cap)?;
    if let MeshLabel::Sphere {
        scheme: MeshScheme::Octahedron,
        ..
    } = complex.label()
    {
        let k: i64 = rng.gen_range(-2..=2);
        if k != 0 {
            let equator = latitude_loop(complex, T::zero())?;
            cycle = &cycle + &equator.scaled(k);
            cap = &cap + &northern_hemisphere(complex).scaled(k);
        }
    }
    Ok((cycle, cap))
}

/// Triangles with centroid above the xy-plane, as a 2-chain.
pub fn northern_hemisphere<T: Real>(complex: &SimplicialComplex<T>) -> IntChain {
    IntChain::from_terms(
        2,
        complex.simplices(2).iter().enumerate().filter_map(|(i, t)| {
            let z: T = t.vertices().iter().map(|&v| complex.point(v).z).sum();
            (z > T::zero()).then_some((i, 1))
        }),
    )
}
