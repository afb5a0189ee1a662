//! Smith normal form with explicit unimodular transforms.

use super::matrix::IntMatrix;
use crate::scalar::IntScalar;

/// `d = u · a · v` with `u`, `v` unimodular and `d` diagonal, `d_i | d_{i+1}`.
#[derive(Debug, Clone)]
pub struct SmithDecomposition<T> {
    pub u: IntMatrix<T>,
    pub d: IntMatrix<T>,
    pub v: IntMatrix<T>,
    /// Positive nonzero diagonal entries of `d`, in order.
    pub invariant_factors: Vec<T>,
}

impl<T: IntScalar> SmithDecomposition<T> {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// Chooses the nonzero entry of smallest magnitude in the trailing submatrix
/// starting at `(t, t)`. Ties go to the entry with the fewest nonzero
/// neighbours in its row and column (Markowitz count), then to the first in
/// row-major order.
fn pick_pivot<T: IntScalar>(a: &IntMatrix<T>, t: usize) -> Option<(usize, usize)> {
    let (m, n) = a.shape();
    let mut row_nnz = vec![0usize; m];
    let mut col_nnz = vec![0usize; n];
    for i in t..m {
        for (j, v) in a.row(i).iter().enumerate().skip(t) {
            if !v.is_zero() {
                row_nnz[i] += 1;
                col_nnz[j] += 1;
            }
        }
    }
    let mut best: Option<(T, usize, usize, usize)> = None;
    for i in t..m {
        if row_nnz[i] == 0 {
            continue;
        }
        for (j, v) in a.row(i).iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            let cost = (row_nnz[i] - 1) * (col_nnz[j] - 1);
            let better = match &best {
                None => true,
                Some((bm, bc, _, _)) => mag < *bm || (mag == *bm && cost < *bc),
            };
            if better {
                best = Some((mag, cost, i, j));
            }
        }
    }
    best.map(|(_, _, i, j)| (i, j))
}

/// Computes the Smith normal form of `a` in exact arithmetic.
pub fn smith_normal_form<T: IntScalar>(a: &IntMatrix<T>) -> SmithDecomposition<T> {
    let (m, n) = a.shape();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut invariant_factors = Vec::new();

    for t in 0..m.min(n) {
        let Some((pi, pj)) = pick_pivot(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // Clear column t below the pivot.
            let p = d[(t, t)].clone();
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].clone() / p.clone();
                let neg = -q;
                d.add_row_multiple(i, t, &neg);
                u.add_row_multiple(i, t, &neg);
            }
            if let Some(i) = smallest_in_col(&d, t) {
                d.swap_rows(t, i);
                u.swap_rows(t, i);
                continue;
            }

            // Clear row t right of the pivot.
            let p = d[(t, t)].clone();
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].clone() / p.clone();
                let neg = -q;
                d.add_col_multiple(j, t, &neg);
                v.add_col_multiple(j, t, &neg);
            }
            if let Some(j) = smallest_in_row(&d, t) {
                d.swap_cols(t, j);
                v.swap_cols(t, j);
                continue;
            }

            // Divisibility: the pivot must divide the whole trailing block.
            let p = d[(t, t)].clone();
            let offender = (t + 1..m).find(|&i| {
                d.row(i)
                    .iter()
                    .skip(t + 1)
                    .any(|x| !x.is_zero() && !x.is_multiple_of(&p))
            });
            match offender {
                Some(i) => {
                    let one = T::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        invariant_factors.push(d[(t, t)].clone());
    }

    SmithDecomposition {
        u,
        d,
        v,
        invariant_factors,
    }
}

fn smallest_in_col<T: IntScalar>(d: &IntMatrix<T>, t: usize) -> Option<usize> {
    (t + 1..d.rows())
        .filter(|&i| !d[(i, t)].is_zero())
        .min_by(|&a, &b| d[(a, t)].abs().cmp(&d[(b, t)].abs()))
}

fn smallest_in_row<T: IntScalar>(d: &IntMatrix<T>, t: usize) -> Option<usize> {
    (t + 1..d.cols())
        .filter(|&j| !d[(t, j)].is_zero())
        .min_by(|&a, &b| d[(t, a)].abs().cmp(&d[(t, b)].abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn check<T: IntScalar>(a: &IntMatrix<T>) -> SmithDecomposition<T> {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        for (i, f) in s.invariant_factors.iter().enumerate() {
            assert_eq!(&s.d[(i, i)], f);
            assert!(f.is_positive());
        }
        for w in s.invariant_factors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn already_diagonal() {
        let a = IntMatrix::<BigInt>::from_i64_rows(&[vec![3, 0], vec![0, 6]]);
        let s = check(&a);
        assert_eq!(s.invariant_factors, vec![BigInt::from(3), BigInt::from(6)]);
    }

    #[test]
    fn two_by_two_example() {
        let a = IntMatrix::<BigInt>::from_i64_rows(&[vec![2, 4], vec![-2, 6]]);
        let s = check(&a);
        assert_eq!(s.invariant_factors, vec![BigInt::from(2), BigInt::from(10)]);
    }

    #[test]
    fn zero_and_empty() {
        let s = check(&IntMatrix::<i64>::zeros(3, 2));
        assert!(s.invariant_factors.is_empty());
        assert!(s.d.is_zero());
        let s = check(&IntMatrix::<i64>::zeros(0, 4));
        assert!(s.invariant_factors.is_empty());
        assert_eq!(s.v.shape(), (4, 4));
    }

    #[test]
    fn non_divisible_diagonal_is_repaired() {
        let a = IntMatrix::<i64>::from_rows(&[[2, 0], [0, 3]]);
        let s = check(&a);
        assert_eq!(s.invariant_factors, vec![1, 6]);
    }

    #[test]
    fn torsion_of_projective_plane_boundary() {
        // ∂₂ of a cell structure with a single 2-cell attached by degree 2.
        let a = IntMatrix::<i64>::from_rows(&[[2]]);
        assert_eq!(check(&a).invariant_factors, vec![2]);
    }
}
