//! Integration of forms over chains.
//!
//! Triangles are integrated over their radial projection onto the sphere
//! through their vertices; edges along great-circle arcs. Per-simplex values
//! are computed in parallel and summed in increasing simplex order, so the
//! result does not depend on the thread count.

use rayon::prelude::*;

use super::forms::{curvature_form, FormField, MonopoleConfig, Pole, SingularLocus, SINGULAR_ANGLE_TOL};
use super::quadrature::{gauss_legendre, QuadratureSpec, TriangleMode, DEFAULT_NUMERIC_ORDER};
use crate::error::{Error, Result};
use crate::geometry::{arc_angular_distance, great_arc, solid_angle, Point3};
use crate::scalar::Real;
use crate::simplicial::{IntChain, SimplicialComplex};

fn ordered_sum<T: Real>(values: Vec<Result<T>>) -> Result<T> {
    let mut acc = T::zero();
    for v in values {
        acc = acc + v?;
    }
    Ok(acc)
}

/// Integral of a 2-form over one triangle (stored orientation).
pub fn triangle_integral<T: Real>(
    form: &FormField<T>,
    tri: [&Point3<T>; 3],
    mode: TriangleMode,
) -> Result<T> {
    if form.is_zero_form() {
        return Ok(T::zero());
    }
    match (mode, form.monopole_charge()) {
        (TriangleMode::ExactSolidAngle, Some(g)) => {
            Ok(g / T::two_pi() * solid_angle(tri[0], tri[1], tri[2]))
        }
        (TriangleMode::ExactSolidAngle, None) => numeric_triangle(form, tri, DEFAULT_NUMERIC_ORDER),
        (TriangleMode::Numeric(order), _) => numeric_triangle(form, tri, order),
    }
}

/// Collapsed Gauss product rule on the reference triangle, pulled back
/// through the radial projection when all vertices share a radius.
fn numeric_triangle<T: Real>(form: &FormField<T>, tri: [&Point3<T>; 3], order: usize) -> Result<T> {
    let (a, b, c) = (*tri[0], *tri[1], *tri[2]);
    let (ra, rb, rc) = (a.norm(), b.norm(), c.norm());
    let same_radius = (ra - rb).abs() <= T::lit(1e-12) * ra && (ra - rc).abs() <= T::lit(1e-12) * ra;
    let (eb, ec) = (b - a, c - a);
    let (nodes, weights) = gauss_legendre::<T>(order);

    let mut total = T::zero();
    for (s, ws) in nodes.iter().zip(&weights) {
        for (u, wu) in nodes.iter().zip(&weights) {
            let t = (T::one() - *s) * *u;
            let jac = T::one() - *s;
            let p = a + eb * *s + ec * t;
            let (q, dq_s, dq_t) = if same_radius {
                let r = p.norm();
                let unit = p * r.recip();
                let project = |v: Point3<T>| (v - unit * unit.dot(&v)) * (ra / r);
                (unit * ra, project(eb), project(ec))
            } else {
                (p, eb, ec)
            };
            form.check_regular(&q)?;
            total = total + *ws * *wu * jac * form.eval_unchecked(&q, &[dq_s, dq_t]);
        }
    }
    Ok(total)
}

/// ∫_S ω for a 2-chain S.
pub fn integrate_2form<T: Real>(
    form: &FormField<T>,
    complex: &SimplicialComplex<T>,
    chain: &IntChain,
    quad: &QuadratureSpec,
) -> Result<T> {
    if form.degree() != 2 {
        return Err(Error::Argument(format!(
            "surface integral of a {}-form",
            form.degree()
        )));
    }
    if chain.dim() != 2 {
        return Err(Error::Argument(format!("surface integral over a {}-chain", chain.dim())));
    }
    quad.validate()?;
    let terms: Vec<(usize, i64)> = chain.iter().collect();
    if let Some(&(s, _)) = terms.iter().find(|&&(s, _)| s >= complex.count(2)) {
        return Err(Error::Argument(format!("triangle {s} out of range")));
    }
    let values: Vec<Result<T>> = terms
        .par_iter()
        .map(|&(s, coeff)| {
            let v = complex.simplex(2, s).vertices();
            let tri = [complex.point(v[0]), complex.point(v[1]), complex.point(v[2])];
            Ok(T::from_i64(coeff).expect("coefficient") * triangle_integral(form, tri, quad.triangle_mode)?)
        })
        .collect();
    ordered_sum(values)
}

fn check_arc<T: Real>(form: &FormField<T>, a: &Point3<T>, b: &Point3<T>) -> Result<()> {
    let tol = T::lit(SINGULAR_ANGLE_TOL);
    let poles = match form.singular_locus() {
        Some(SingularLocus::Ray(p)) => vec![p],
        Some(SingularLocus::Axis) => vec![Pole::North, Pole::South],
        _ => Vec::new(),
    };
    for pole in poles {
        if arc_angular_distance(a, b, &pole.direction()) < tol {
            return Err(Error::Singularity(format!(
                "edge crosses the singular ray through the {pole} pole"
            )));
        }
    }
    Ok(())
}

/// Integral of a 1-form along the arc from `a` to `b`.
pub fn arc_integral<T: Real>(form: &FormField<T>, a: &Point3<T>, b: &Point3<T>, order: usize) -> Result<T> {
    if form.is_zero_form() {
        return Ok(T::zero());
    }
    check_arc(form, a, b)?;
    let (nodes, weights) = gauss_legendre::<T>(order);
    let mut total = T::zero();
    for (t, w) in nodes.iter().zip(&weights) {
        let (p, dp) = great_arc(a, b, *t);
        form.check_regular(&p)?;
        total = total + *w * form.eval_unchecked(&p, &[dp]);
    }
    Ok(total)
}

/// ∮_C A for a 1-chain C.
pub fn line_integral<T: Real>(
    form: &FormField<T>,
    complex: &SimplicialComplex<T>,
    chain: &IntChain,
    quad: &QuadratureSpec,
) -> Result<T> {
    if form.degree() != 1 {
        return Err(Error::Argument(format!("line integral of a {}-form", form.degree())));
    }
    if chain.dim() != 1 {
        return Err(Error::Argument(format!("line integral over a {}-chain", chain.dim())));
    }
    quad.validate()?;
    let terms: Vec<(usize, i64)> = chain.iter().collect();
    if let Some(&(s, _)) = terms.iter().find(|&&(s, _)| s >= complex.count(1)) {
        return Err(Error::Argument(format!("edge {s} out of range")));
    }
    let values: Vec<Result<T>> = terms
        .par_iter()
        .map(|&(e, coeff)| {
            let v = complex.simplex(1, e).vertices();
            let val = arc_integral(form, complex.point(v[0]), complex.point(v[1]), quad.edge_rule_order)?;
            Ok(T::from_i64(coeff).expect("coefficient") * val)
        })
        .collect();
    ordered_sum(values)
}

/// Physical magnetic flux Φ = 2π ∫ ω through a closed surface.
pub fn flux<T: Real>(cfg: &MonopoleConfig<T>, complex: &SimplicialComplex<T>, surface: &IntChain) -> Result<T> {
    if surface.dim() != 2 {
        return Err(Error::Argument("flux needs a 2-chain".into()));
    }
    if !complex.boundary(surface)?.is_zero() {
        return Err(Error::Argument("flux surface is not a 2-cycle".into()));
    }
    let w = curvature_form(cfg);
    Ok(T::two_pi() * integrate_2form(&w, complex, surface, &QuadratureSpec::default())?)
}
