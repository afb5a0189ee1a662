#![allow(dead_code)]

use monochar::{Complex, MeshLabel, Point3f};

fn dummy_points(n: usize) -> Vec<Point3f> {
    (0..n)
        .map(|i| {
            let t = i as f64;
            Point3f::new(t.cos(), t.sin(), 0.1 * t)
        })
        .collect()
}

/// Six-vertex projective plane.
pub fn projective_plane() -> Complex {
    let faces = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2],
        [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4],
    ];
    let top = faces.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect();
    Complex::from_top_simplices(dummy_points(6), top, MeshLabel::Custom { name: "rp2".into() }).unwrap()
}

/// 3×3 grid torus, each square cut along the same diagonal.
pub fn torus() -> Complex {
    let idx = |i: usize, j: usize| 3 * (i % 3) + (j % 3);
    let mut top = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            top.push(vec![idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)]);
            top.push(vec![idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)]);
        }
    }
    Complex::from_top_simplices(dummy_points(9), top, MeshLabel::Custom { name: "torus".into() }).unwrap()
}

/// Rank of an integer matrix mod a large prime.
pub fn rank_mod_p(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> i64) -> usize {
    const P: i64 = 1_000_000_007;
    let mut m: Vec<Vec<i64>> = (0..rows)
        .map(|i| (0..cols).map(|j| entry(i, j).rem_euclid(P)).collect())
        .collect();
    let pow = |mut b: i64, mut e: i64| {
        let mut r = 1i64;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        let inv = pow(m[rank][c], P - 2);
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % P;
                for k in c..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}
