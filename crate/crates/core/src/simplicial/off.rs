//! OFF (Object File Format) import and export for triangle surfaces.

use std::fmt::Write as _;

use super::complex::{MeshLabel, SimplicialComplex};
use crate::error::{Error, Result};
use crate::geometry::Point3;
use crate::scalar::Real;

/// Writes `OFF`, a `V F 0` counts line, one vertex per line, then
/// `3 a b c` faces in stored orientation.
pub fn write_off<T: Real>(complex: &SimplicialComplex<T>) -> Result<String> {
    if complex.dim() != 2 {
        return Err(Error::Argument("OFF export needs a triangle surface".into()));
    }
    let mut out = String::new();
    out.push_str("OFF\n");
    let _ = writeln!(out, "{} {} 0", complex.points().len(), complex.count(2));
    for p in complex.points() {
        let _ = writeln!(
            out,
            "{} {} {}",
            p.x.to_f64().unwrap_or(f64::NAN),
            p.y.to_f64().unwrap_or(f64::NAN),
            p.z.to_f64().unwrap_or(f64::NAN)
        );
    }
    for t in complex.simplices(2) {
        let v = t.vertices();
        let _ = writeln!(out, "3 {} {} {}", v[0], v[1], v[2]);
    }
    Ok(out)
}

pub fn read_off<T: Real>(text: &str) -> Result<SimplicialComplex<T>> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());

    let header = lines.next().ok_or_else(|| Error::Parse("empty OFF file".into()))?;
    let rest_of_header = header
        .strip_prefix("OFF")
        .ok_or_else(|| Error::Parse(format!("expected 'OFF' header, got '{header}'")))?
        .trim();
    let counts_line = if rest_of_header.is_empty() {
        lines.next().ok_or_else(|| Error::Parse("missing counts line".into()))?
    } else {
        rest_of_header
    };
    let counts: Vec<usize> = counts_line
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad count '{t}'"))))
        .collect::<Result<_>>()?;
    let [nv, nf, ..] = counts[..] else {
        return Err(Error::Parse("counts line needs vertex and face counts".into()));
    };

    let mut points = Vec::with_capacity(nv);
    for i in 0..nv {
        let line = lines.next().ok_or_else(|| Error::Parse(format!("missing vertex {i}")))?;
        let c: Vec<f64> = line
            .split_whitespace()
            .take(3)
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad coordinate '{t}'"))))
            .collect::<Result<_>>()?;
        if c.len() != 3 {
            return Err(Error::Parse(format!("vertex {i} needs three coordinates")));
        }
        points.push(Point3::new(T::lit(c[0]), T::lit(c[1]), T::lit(c[2])));
    }

    let mut faces = Vec::with_capacity(nf);
    for i in 0..nf {
        let line = lines.next().ok_or_else(|| Error::Parse(format!("missing face {i}")))?;
        let v: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad index '{t}'"))))
            .collect::<Result<_>>()?;
        match v.as_slice() {
            [3, a, b, c, ..] => faces.push([*a, *b, *c]),
            _ => return Err(Error::Parse(format!("face {i} is not a triangle"))),
        }
    }

    SimplicialComplex::from_triangles(points, faces, MeshLabel::Custom { name: "off".into() })
}
