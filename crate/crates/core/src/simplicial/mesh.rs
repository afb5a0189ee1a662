//! Triangulated spheres, spherical shells and latitude loops.

use std::collections::HashMap;

use super::chain::IntChain;
use super::complex::{MeshLabel, MeshScheme, SimplicialComplex};
use crate::error::{Error, Result};
use crate::geometry::{triple, Point3};
use crate::scalar::Real;

/// Largest refinement level accepted by the mesh generators.
pub const MAX_LEVEL: u32 = 8;

fn base_polyhedron<T: Real>(scheme: MeshScheme) -> (Vec<Point3<T>>, Vec<[usize; 3]>) {
    let p = |x: f64, y: f64, z: f64| Point3::new(T::lit(x), T::lit(y), T::lit(z));
    match scheme {
        MeshScheme::Octahedron => {
            let pts = vec![
                p(1.0, 0.0, 0.0),
                p(-1.0, 0.0, 0.0),
                p(0.0, 1.0, 0.0),
                p(0.0, -1.0, 0.0),
                p(0.0, 0.0, 1.0),
                p(0.0, 0.0, -1.0),
            ];
            let faces = vec![
                [4, 0, 2],
                [4, 2, 1],
                [4, 1, 3],
                [4, 3, 0],
                [5, 2, 0],
                [5, 1, 2],
                [5, 3, 1],
                [5, 0, 3],
            ];
            (pts, faces)
        }
        MeshScheme::Icosahedron => {
            let phi = (1.0 + 5f64.sqrt()) / 2.0;
            let raw = [
                (-1.0, phi, 0.0),
                (1.0, phi, 0.0),
                (-1.0, -phi, 0.0),
                (1.0, -phi, 0.0),
                (0.0, -1.0, phi),
                (0.0, 1.0, phi),
                (0.0, -1.0, -phi),
                (0.0, 1.0, -phi),
                (phi, 0.0, -1.0),
                (phi, 0.0, 1.0),
                (-phi, 0.0, -1.0),
                (-phi, 0.0, 1.0),
            ];
            let pts = raw.iter().map(|&(x, y, z)| p(x, y, z).normalized()).collect();
            let faces = vec![
                [0, 11, 5],
                [0, 5, 1],
                [0, 1, 7],
                [0, 7, 10],
                [0, 10, 11],
                [1, 5, 9],
                [5, 11, 4],
                [11, 10, 2],
                [10, 7, 6],
                [7, 1, 8],
                [3, 9, 4],
                [3, 4, 2],
                [3, 2, 6],
                [3, 6, 8],
                [3, 8, 9],
                [4, 9, 5],
                [2, 4, 11],
                [6, 2, 10],
                [8, 6, 7],
                [9, 8, 1],
            ];
            (pts, faces)
        }
    }
}

/// Reorders each triangle so its normal points away from the origin.
fn orient_outward<T: Real>(pts: &[Point3<T>], faces: &mut [[usize; 3]]) {
    for f in faces.iter_mut() {
        if triple(&pts[f[0]], &pts[f[1]], &pts[f[2]]) < T::zero() {
            f.swap(1, 2);
        }
    }
}

/// One 4-way split with midpoints pushed back onto the unit sphere.
fn subdivide<T: Real>(pts: &mut Vec<Point3<T>>, faces: &[[usize; 3]]) -> Vec<[usize; 3]> {
    let mut mid: HashMap<(usize, usize), usize> = HashMap::new();
    let half = T::lit(0.5);
    let mut midpoint = |a: usize, b: usize, pts: &mut Vec<Point3<T>>| -> usize {
        *mid.entry((a.min(b), a.max(b))).or_insert_with(|| {
            let m = ((pts[a] + pts[b]) * half).normalized();
            pts.push(m);
            pts.len() - 1
        })
    };
    let mut out = Vec::with_capacity(faces.len() * 4);
    for &[a, b, c] in faces {
        let ab = midpoint(a, b, pts);
        let bc = midpoint(b, c, pts);
        let ca = midpoint(c, a, pts);
        out.push([a, ab, ca]);
        out.push([ab, b, bc]);
        out.push([ca, bc, c]);
        out.push([ab, bc, ca]);
    }
    out
}

fn check_level(level: u32) -> Result<()> {
    if level > MAX_LEVEL {
        return Err(Error::Resource(format!(
            "refinement level {level} exceeds the limit {MAX_LEVEL}"
        )));
    }
    Ok(())
}

fn sphere_triangles<T: Real>(scheme: MeshScheme, level: u32) -> Result<(Vec<Point3<T>>, Vec<[usize; 3]>)> {
    check_level(level)?;
    let (mut pts, mut faces) = base_polyhedron::<T>(scheme);
    orient_outward(&pts, &mut faces);
    for _ in 0..level {
        faces = subdivide(&mut pts, &faces);
    }
    Ok((pts, faces))
}

/// Coherently oriented triangulation of the unit sphere.
pub fn sphere_mesh<T: Real>(scheme: MeshScheme, level: u32) -> Result<SimplicialComplex<T>> {
    let (pts, faces) = sphere_triangles::<T>(scheme, level)?;
    SimplicialComplex::from_triangles(pts, faces, MeshLabel::Sphere { scheme, level })
}

/// Signed volume of the tetrahedron (a, b, c, d), times six.
fn tet_volume6<T: Real>(a: &Point3<T>, b: &Point3<T>, c: &Point3<T>, d: &Point3<T>) -> T {
    triple(&(*b - *a), &(*c - *a), &(*d - *a))
}

/// One radial layer of prisms over a sphere triangulation, each prism split
/// into three positively oriented tetrahedra.
///
/// Vertex `i` of the sphere mesh becomes `i` on the inner sphere and `i + V`
/// on the outer one. Each quadrilateral side face is cut along the diagonal
/// starting at the lower-indexed inner vertex, so neighbouring prisms agree.
pub fn shell_mesh<T: Real>(scheme: MeshScheme, level: u32, r_inner: T, r_outer: T) -> Result<SimplicialComplex<T>> {
    if !(r_inner > T::zero() && r_outer > r_inner && r_outer.is_finite()) {
        return Err(Error::Argument(format!(
            "shell radii must satisfy 0 < r_inner < r_outer (got {r_inner}, {r_outer})"
        )));
    }
    let (unit, faces) = sphere_triangles::<T>(scheme, level)?;
    let n = unit.len();
    let mut pts: Vec<Point3<T>> = unit.iter().map(|p| *p * r_inner).collect();
    pts.extend(unit.iter().map(|p| *p * r_outer));

    let mut tets = Vec::with_capacity(faces.len() * 3);
    for f in &faces {
        let mut s = *f;
        s.sort_unstable();
        let [a, b, c] = s;
        let (a2, b2, c2) = (a + n, b + n, c + n);
        for mut t in [[a, b, c, c2], [a, b, b2, c2], [a, a2, b2, c2]] {
            if tet_volume6(&pts[t[0]], &pts[t[1]], &pts[t[2]], &pts[t[3]]) < T::zero() {
                t.swap(2, 3);
            }
            tets.push(t.to_vec());
        }
    }
    SimplicialComplex::from_top_simplices(
        pts,
        tets,
        MeshLabel::Shell {
            scheme,
            level,
            r_inner: r_inner.to_f64().unwrap_or(f64::NAN),
            r_outer: r_outer.to_f64().unwrap_or(f64::NAN),
        },
    )
}

/// Edge cycle through the ring of vertices whose z-coordinate is nearest to
/// `z0`, oriented counterclockwise seen from +z.
pub fn latitude_loop<T: Real>(complex: &SimplicialComplex<T>, z0: T) -> Result<IntChain> {
    match complex.label() {
        MeshLabel::Sphere {
            scheme: MeshScheme::Octahedron,
            ..
        } => {}
        other => {
            return Err(Error::Argument(format!(
                "latitude loops need an octahedron sphere mesh, got {other:?}"
            )))
        }
    }
    if !(z0 > -T::one() && z0 < T::one()) {
        return Err(Error::Argument(format!("latitude height {z0} outside (-1, 1)")));
    }
    let eps = T::lit(1e-9);
    let nearest_z = complex
        .points()
        .iter()
        .map(|p| p.z)
        .min_by(|a, b| {
            (*a - z0)
                .abs()
                .partial_cmp(&(*b - z0).abs())
                .expect("finite coordinates")
                .then(a.partial_cmp(b).expect("finite coordinates"))
        })
        .ok_or_else(|| Error::Geometry("empty mesh".into()))?;

    let mut ring: Vec<usize> = (0..complex.points().len())
        .filter(|&v| (complex.point(v).z - nearest_z).abs() < eps)
        .collect();
    if ring.len() < 3 {
        return Err(Error::Geometry(format!(
            "no closed latitude ring at z = {nearest_z} (only {} vertices)",
            ring.len()
        )));
    }
    ring.sort_by(|&a, &b| {
        complex
            .point(a)
            .azimuth()
            .partial_cmp(&complex.point(b).azimuth())
            .expect("finite coordinates")
    });
    let mut chain = IntChain::zero(1);
    for i in 0..ring.len() {
        let (a, b) = (ring[i], ring[(i + 1) % ring.len()]);
        let edge = complex.edge_chain(a, b).map_err(|_| {
            Error::Geometry(format!("latitude ring at z = {nearest_z} is not an edge cycle"))
        })?;
        chain = &chain + &edge;
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_counts() {
        let k = sphere_mesh::<f64>(MeshScheme::Icosahedron, 0).unwrap();
        assert_eq!((k.count(0), k.count(1), k.count(2)), (12, 30, 20));
        assert_eq!(k.euler_characteristic(), 2);
        let k = sphere_mesh::<f64>(MeshScheme::Octahedron, 0).unwrap();
        assert_eq!((k.count(0), k.count(1), k.count(2)), (6, 12, 8));
        assert_eq!(k.euler_characteristic(), 2);
    }

    #[test]
    fn level_guard() {
        assert!(matches!(
            sphere_mesh::<f64>(MeshScheme::Octahedron, MAX_LEVEL + 1),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn shell_radii_validated() {
        assert!(matches!(
            shell_mesh::<f64>(MeshScheme::Octahedron, 0, 2.0, 1.0),
            Err(Error::Argument(_))
        ));
        assert!(shell_mesh::<f64>(MeshScheme::Octahedron, 0, 0.0, 1.0).is_err());
    }

    #[test]
    fn shell_counts() {
        let k = shell_mesh::<f64>(MeshScheme::Octahedron, 0, 1.0, 2.0).unwrap();
        assert_eq!(k.count(0), 12);
        assert_eq!(k.count(3), 24);
        assert_eq!(k.dim(), 3);
    }

    #[test]
    fn equator_loops() {
        for (level, edges) in [(0u32, 4usize), (1, 8), (2, 16)] {
            let k = sphere_mesh::<f64>(MeshScheme::Octahedron, level).unwrap();
            let c = latitude_loop(&k, 0.0).unwrap();
            assert_eq!(c.len(), edges);
            assert!(k.boundary(&c).unwrap().is_zero());
        }
    }

    #[test]
    fn polar_ring_is_rejected() {
        let k = sphere_mesh::<f64>(MeshScheme::Octahedron, 1).unwrap();
        assert!(matches!(latitude_loop(&k, 0.99), Err(Error::Geometry(_))));
        let c = latitude_loop(&k, 0.7).unwrap();
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn icosahedron_has_no_latitude_loops() {
        let k = sphere_mesh::<f64>(MeshScheme::Icosahedron, 1).unwrap();
        assert!(matches!(latitude_loop(&k, 0.0), Err(Error::Argument(_))));
    }
}
