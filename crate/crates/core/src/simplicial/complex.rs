use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use super::chain::IntChain;
use crate::error::{Error, Result};
use crate::geometry::{triple, Point3};
use crate::homology::SparseIntMatrix;
use crate::scalar::Real;

/// Ordered vertex tuple; orientation is the ordering up to even permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedSimplex {
    vertices: Vec<usize>,
}

impl OrientedSimplex {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Argument("simplex needs at least one vertex".into()));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::Argument(format!("repeated vertex in simplex {vertices:?}")));
        }
        Ok(Self { vertices })
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    fn key(&self) -> Vec<usize> {
        let mut k = self.vertices.clone();
        k.sort_unstable();
        k
    }
}

/// +1 if `a` is an even permutation of `b`, −1 if odd. Both must hold the same set.
pub(crate) fn permutation_sign(a: &[usize], b: &[usize]) -> i64 {
    let pos: HashMap<usize, usize> = b.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let perm: Vec<usize> = a.iter().map(|v| pos[v]).collect();
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeshScheme {
    Icosahedron,
    Octahedron,
}

impl fmt::Display for MeshScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MeshScheme::Icosahedron => "icosahedron",
            MeshScheme::Octahedron => "octahedron",
        })
    }
}

impl std::str::FromStr for MeshScheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "icosahedron" | "ico" => Ok(MeshScheme::Icosahedron),
            "octahedron" | "octa" => Ok(MeshScheme::Octahedron),
            other => Err(Error::Argument(format!("unknown mesh scheme '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MeshLabel {
    Sphere {
        scheme: MeshScheme,
        level: u32,
    },
    Shell {
        scheme: MeshScheme,
        level: u32,
        r_inner: f64,
        r_outer: f64,
    },
    Custom {
        name: String,
    },
}

impl MeshLabel {
    pub fn scheme(&self) -> Option<MeshScheme> {
        match self {
            MeshLabel::Sphere { scheme, .. } | MeshLabel::Shell { scheme, .. } => Some(*scheme),
            MeshLabel::Custom { .. } => None,
        }
    }
}

impl fmt::Display for MeshLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeshLabel::Sphere { scheme, level } => write!(f, "sphere/{scheme}/{level}"),
            MeshLabel::Shell {
                scheme,
                level,
                r_inner,
                r_outer,
            } => write!(f, "shell/{scheme}/{level}/{r_inner}-{r_outer}"),
            MeshLabel::Custom { name } => write!(f, "{name}"),
        }
    }
}

/// Oriented simplicial complex embedded in R³.
///
/// Top-dimensional simplices keep the orientation they were built with.
/// Lower-dimensional simplices are stored with increasing vertex indices and
/// are numbered in lexicographic order of those tuples.
#[derive(Debug, Clone)]
pub struct SimplicialComplex<T> {
    points: Vec<Point3<T>>,
    simplices: Vec<Vec<OrientedSimplex>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    label: MeshLabel,
}

impl<T: Real> SimplicialComplex<T> {
    /// Builds the closure of a list of equal-dimension top simplices.
    pub fn from_top_simplices(
        points: Vec<Point3<T>>,
        top: Vec<Vec<usize>>,
        label: MeshLabel,
    ) -> Result<Self> {
        let dim = match top.first() {
            Some(s) if !s.is_empty() => s.len() - 1,
            _ => 0,
        };
        let mut tops = Vec::with_capacity(top.len());
        for s in top {
            if s.len() != dim + 1 {
                return Err(Error::Argument("top simplices of mixed dimension".into()));
            }
            if let Some(&v) = s.iter().find(|&&v| v >= points.len()) {
                return Err(Error::Argument(format!("vertex index {v} out of range")));
            }
            tops.push(OrientedSimplex::new(s)?);
        }

        let mut faces: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); dim];
        for s in &tops {
            let key = s.key();
            for (k, set) in faces.iter_mut().enumerate().skip(1) {
                for_each_subset(&key, k + 1, &mut |f| {
                    set.insert(f.to_vec());
                });
            }
        }

        let mut simplices: Vec<Vec<OrientedSimplex>> = Vec::with_capacity(dim + 1);
        if dim > 0 {
            simplices.push((0..points.len()).map(|v| OrientedSimplex { vertices: vec![v] }).collect());
        }
        for set in faces.into_iter().skip(1) {
            simplices.push(set.into_iter().map(|vertices| OrientedSimplex { vertices }).collect());
        }
        simplices.push(tops);

        let mut index = Vec::with_capacity(dim + 1);
        for level in &simplices {
            let mut map = HashMap::with_capacity(level.len());
            for (i, s) in level.iter().enumerate() {
                if map.insert(s.key(), i).is_some() {
                    return Err(Error::Argument(format!("duplicate simplex {:?}", s.vertices)));
                }
            }
            index.push(map);
        }

        Ok(Self {
            points,
            simplices,
            index,
            label,
        })
    }

    /// Surface from triangles, orientation as given.
    pub fn from_triangles(points: Vec<Point3<T>>, triangles: Vec<[usize; 3]>, label: MeshLabel) -> Result<Self> {
        Self::from_top_simplices(points, triangles.into_iter().map(|t| t.to_vec()).collect(), label)
    }

    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn label(&self) -> &MeshLabel {
        &self.label
    }

    pub fn points(&self) -> &[Point3<T>] {
        &self.points
    }

    pub fn point(&self, v: usize) -> &Point3<T> {
        &self.points[v]
    }

    pub fn simplices(&self, k: usize) -> &[OrientedSimplex] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn simplex(&self, k: usize, i: usize) -> &OrientedSimplex {
        &self.simplices[k][i]
    }

    /// Number of k-simplices.
    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, Vec::len)
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.dim())
            .map(|k| if k % 2 == 0 { self.count(k) as i64 } else { -(self.count(k) as i64) })
            .sum()
    }

    /// Index of the k-simplex with the given vertex set, and the sign of
    /// `vertices` relative to its stored orientation.
    pub fn find(&self, vertices: &[usize]) -> Option<(usize, i64)> {
        let k = vertices.len().checked_sub(1)?;
        let mut key = vertices.to_vec();
        key.sort_unstable();
        let &i = self.index.get(k)?.get(&key)?;
        Some((i, permutation_sign(vertices, &self.simplices[k][i].vertices)))
    }

    /// Oriented edge a→b as a 1-chain.
    pub fn edge_chain(&self, a: usize, b: usize) -> Result<IntChain> {
        let (i, sign) = self
            .find(&[a, b])
            .ok_or_else(|| Error::Argument(format!("no edge between {a} and {b}")))?;
        Ok(IntChain::from_terms(1, [(i, sign)]))
    }

    /// Signed codimension-1 faces of the k-simplex `s`.
    pub fn faces(&self, k: usize, s: usize) -> Vec<(usize, i64)> {
        let verts = &self.simplices[k][s].vertices;
        (0..verts.len())
            .map(|i| {
                let face: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &v)| v)
                    .collect();
                let (fi, sign) = self.find(&face).expect("complex closed under faces");
                let alt = if i % 2 == 0 { 1 } else { -1 };
                (fi, alt * sign)
            })
            .collect()
    }

    /// Matrix of ∂_k: rows are (k−1)-simplices, columns k-simplices.
    pub fn boundary_matrix(&self, k: usize) -> Result<SparseIntMatrix> {
        if k == 0 || k > self.dim() {
            return Err(Error::Argument(format!(
                "boundary degree {k} outside 1..={}",
                self.dim()
            )));
        }
        let cols = (0..self.count(k)).map(|s| self.faces(k, s)).collect();
        Ok(SparseIntMatrix::new(self.count(k - 1), self.count(k), cols))
    }

    /// Simplicial boundary of a chain.
    pub fn boundary(&self, c: &IntChain) -> Result<IntChain> {
        let k = c.dim();
        if k == 0 || k > self.dim() {
            return Err(Error::Argument(format!("cannot take boundary of a {k}-chain")));
        }
        let mut out = IntChain::zero(k - 1);
        for (s, coeff) in c.iter() {
            if s >= self.count(k) {
                return Err(Error::Argument(format!("{k}-simplex {s} out of range")));
            }
            for (f, sign) in self.faces(k, s) {
                out.add_term(f, sign * coeff);
            }
        }
        Ok(out)
    }

    pub fn is_cycle(&self, c: &IntChain) -> Result<bool> {
        if c.dim() == 0 {
            return Ok(true);
        }
        Ok(self.boundary(c)?.is_zero())
    }

    /// Sum of all top simplices, when that sum is a cycle.
    ///
    /// For a coherently oriented closed surface this is the fundamental class.
    pub fn fundamental_cycle(&self) -> Result<IntChain> {
        let k = self.dim();
        let c = IntChain::from_terms(k, (0..self.count(k)).map(|s| (s, 1)));
        if k == 0 || !self.boundary(&c)?.is_zero() {
            return Err(Error::Geometry(
                "complex is not a coherently oriented closed pseudomanifold".into(),
            ));
        }
        Ok(c)
    }

    /// Checks that every edge of a surface borders exactly two triangles with
    /// opposite induced orientations.
    pub fn is_closed_oriented_surface(&self) -> bool {
        if self.dim() != 2 {
            return false;
        }
        let mut incidence: Vec<Vec<i64>> = vec![Vec::new(); self.count(1)];
        for t in 0..self.count(2) {
            for (e, sign) in self.faces(2, t) {
                incidence[e].push(sign);
            }
        }
        incidence.iter().all(|v| v.len() == 2 && v[0] + v[1] == 0)
    }

    /// Whether every triangle of a surface is positively oriented with respect
    /// to the outward radial direction.
    pub fn is_outward_oriented(&self) -> bool {
        self.dim() == 2
            && self.simplices[2].iter().all(|t| {
                let v = &t.vertices;
                triple(&self.points[v[0]], &self.points[v[1]], &self.points[v[2]]) > T::zero()
            })
    }

    /// Boundary surface of a 3-complex, split into connected components.
    ///
    /// Each component is returned as a surface complex on its own vertex
    /// numbering, oriented by the induced boundary orientation.
    pub fn boundary_components(&self) -> Result<Vec<SimplicialComplex<T>>> {
        if self.dim() != 3 {
            return Err(Error::Argument("boundary components need a 3-complex".into()));
        }
        let mut all = IntChain::zero(3);
        for s in 0..self.count(3) {
            all.add_term(s, 1);
        }
        let mut tet_count = vec![0usize; self.count(2)];
        for s in 0..self.count(3) {
            for (f, _) in self.faces(3, s) {
                tet_count[f] += 1;
            }
        }
        let induced = self.boundary(&all)?;
        let mut tris: Vec<[usize; 3]> = Vec::new();
        for (f, coeff) in induced.iter() {
            if tet_count[f] != 1 {
                continue;
            }
            let v = &self.simplices[2][f].vertices;
            tris.push(if coeff > 0 { [v[0], v[1], v[2]] } else { [v[0], v[2], v[1]] });
        }

        // Union-find over triangles sharing an edge.
        let mut parent: Vec<usize> = (0..tris.len()).collect();
        fn root(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let mut edge_owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (ti, t) in tris.iter().enumerate() {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                let key = (a.min(b), a.max(b));
                if let Some(&o) = edge_owner.get(&key) {
                    let (ra, rb) = (root(&mut parent, o), root(&mut parent, ti));
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                } else {
                    edge_owner.insert(key, ti);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<[usize; 3]>> = BTreeMap::new();
        for (ti, t) in tris.iter().enumerate() {
            let r = root(&mut parent, ti);
            groups.entry(r).or_default().push(*t);
        }

        groups
            .into_values()
            .map(|group| {
                let verts: BTreeSet<usize> = group.iter().flatten().copied().collect();
                let renum: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                let pts = verts.iter().map(|&v| self.points[v]).collect();
                let local = group
                    .iter()
                    .map(|t| [renum[&t[0]], renum[&t[1]], renum[&t[2]]])
                    .collect();
                SimplicialComplex::from_triangles(pts, local, MeshLabel::Custom { name: "boundary".into() })
            })
            .collect()
    }

    /// Relabels vertices by `perm` (new index of old vertex v is perm[v]) and
    /// reorders the top simplices by `order`. The result is isomorphic.
    pub fn permuted(&self, perm: &[usize], order: &[usize]) -> Result<Self> {
        let n = self.points.len();
        if perm.len() != n || order.len() != self.count(self.dim()) {
            return Err(Error::Argument("permutation size mismatch".into()));
        }
        let mut points = vec![Point3::origin(); n];
        for (old, &new) in perm.iter().enumerate() {
            points[new] = self.points[old];
        }
        let k = self.dim();
        let top = order
            .iter()
            .map(|&s| self.simplices[k][s].vertices.iter().map(|&v| perm[v]).collect())
            .collect();
        Self::from_top_simplices(points, top, self.label.clone())
    }
}

/// Calls `f` on every size-`size` subset of the sorted slice `items`, in
/// lexicographic order.
fn for_each_subset(items: &[usize], size: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, size, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut Vec::with_capacity(size), f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_triangle() -> SimplicialComplex<f64> {
        let pts = vec![
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
            Point3::new(0.0, 0.0, 1.0),
        ];
        SimplicialComplex::from_triangles(pts, vec![[0, 1, 2]], MeshLabel::Custom { name: "t".into() }).unwrap()
    }

    #[test]
    fn triangle_boundary_column() {
        let k = single_triangle();
        let d2 = k.boundary_matrix(2).unwrap();
        let e12 = k.find(&[1, 2]).unwrap().0;
        let e02 = k.find(&[0, 2]).unwrap().0;
        let e01 = k.find(&[0, 1]).unwrap().0;
        assert_eq!(d2.get(e12, 0), 1);
        assert_eq!(d2.get(e02, 0), -1);
        assert_eq!(d2.get(e01, 0), 1);
        assert!(k.boundary_matrix(1).unwrap().matmul(&d2).is_zero());
    }

    #[test]
    fn boundary_degree_out_of_range() {
        let k = single_triangle();
        assert!(matches!(k.boundary_matrix(0), Err(Error::Argument(_))));
        assert!(matches!(k.boundary_matrix(3), Err(Error::Argument(_))));
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2], &[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2], &[0, 1, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0], &[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[5, 3], &[3, 5]), -1);
    }

    #[test]
    fn rejects_degenerate_input() {
        let pts = vec![Point3::<f64>::origin(); 3];
        let label = MeshLabel::Custom { name: "bad".into() };
        assert!(SimplicialComplex::from_triangles(pts.clone(), vec![[0, 0, 1]], label.clone()).is_err());
        assert!(SimplicialComplex::from_triangles(pts.clone(), vec![[0, 1, 7]], label.clone()).is_err());
        assert!(SimplicialComplex::from_triangles(pts, vec![[0, 1, 2], [1, 2, 0]], label).is_err());
    }
}
