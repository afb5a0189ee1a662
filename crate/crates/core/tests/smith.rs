//! Smith normal form against determinantal divisors computed from scratch.

use monochar::homology::{invariant_factors, smith_normal_form, IntMatrix, SparseIntMatrix};
use monochar::Int;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Leibniz-free cofactor expansion, exact in i128.
fn det_cofactor(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            let mut total = 0;
            for j in 0..n {
                if m[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                total += sign * m[0][j] * det_cofactor(&minor);
            }
            total
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1},
/// D_k = gcd of all k×k minors.
fn oracle_factors(a: &[Vec<i64>]) -> Vec<i128> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut divisors = vec![1i128];
    for k in 1..=m.min(n) {
        let mut g = 0i128;
        for rows in subsets(m, k) {
            for cols in subsets(n, k) {
                let sub: Vec<Vec<i128>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| a[i][j] as i128).collect())
                    .collect();
                g = g.gcd(&det_cofactor(&sub));
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| w[1] / w[0]).collect()
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let m = rng.gen_range(1..=8);
    let n = rng.gen_range(1..=8);
    let density: f64 = rng.gen_range(0.3..=1.0);
    (0..m)
        .map(|_| {
            (0..n)
                .map(|_| if rng.gen_bool(density) { rng.gen_range(-9..=9) } else { 0 })
                .collect()
        })
        .collect()
}

fn check_decomposition(rows: &[Vec<i64>]) {
    let a: IntMatrix<Int> = IntMatrix::from_i64_rows(rows);
    let s = smith_normal_form(&a);
    let (m, n) = a.shape();

    assert_eq!(&(&s.u * &a) * &s.v, s.d, "D = UAV fails for {rows:?}");
    assert!(s.u.determinant().abs().is_one(), "U not unimodular");
    assert!(s.v.determinant().abs().is_one(), "V not unimodular");
    assert_eq!(s.u.shape(), (m, m));
    assert_eq!(s.v.shape(), (n, n));

    for i in 0..m {
        for j in 0..n {
            if i != j {
                assert!(s.d[(i, j)].is_zero(), "off-diagonal entry at ({i},{j})");
            }
        }
    }
    let diag: Vec<Int> = (0..m.min(n)).map(|i| s.d[(i, i)].clone()).collect();
    let r = s.rank();
    for (i, d) in diag.iter().enumerate() {
        if i < r {
            assert!(d.is_positive());
            assert_eq!(d, &s.invariant_factors[i]);
        } else {
            assert!(d.is_zero());
        }
    }
    for w in s.invariant_factors.windows(2) {
        assert!(w[1].is_multiple_of(&w[0]), "divisibility chain broken: {w:?}");
    }

    let expected: Vec<Int> = oracle_factors(rows).into_iter().map(Int::from).collect();
    assert_eq!(s.invariant_factors, expected, "invariant factors of {rows:?}");

    let sparse = SparseIntMatrix::new(
        m,
        n,
        (0..n).map(|j| (0..m).map(|i| (i, rows[i][j])).collect()).collect(),
    );
    assert_eq!(invariant_factors::<Int>(&sparse), expected, "sparse path on {rows:?}");
    assert_eq!(sparse.rank(), expected.len());
}

#[test]
fn two_hundred_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        check_decomposition(&random_matrix(&mut rng));
    }
}

#[test]
fn documented_examples() {
    let f = |rows: Vec<Vec<i64>>| smith_normal_form(&IntMatrix::<Int>::from_i64_rows(&rows)).invariant_factors;
    assert_eq!(f(vec![vec![3, 0], vec![0, 6]]), vec![Int::from(3), Int::from(6)]);
    assert_eq!(f(vec![vec![2, 4], vec![-2, 6]]), vec![Int::from(2), Int::from(10)]);
    let zero = smith_normal_form(&IntMatrix::<Int>::zeros(3, 2));
    assert!(zero.invariant_factors.is_empty());
    assert!(zero.d.is_zero());
}

#[test]
fn oracle_self_check() {
    assert_eq!(oracle_factors(&[vec![2, 4], vec![-2, 6]]), vec![2, 10]);
    assert_eq!(oracle_factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    assert_eq!(det_cofactor(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
}

#[test]
fn machine_integers_agree_with_bigint() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=4);
        let rows: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let small = smith_normal_form(&IntMatrix::<i64>::from_i64_rows(&rows));
        let big = smith_normal_form(&IntMatrix::<Int>::from_i64_rows(&rows));
        let small: Vec<Int> = small.invariant_factors.into_iter().map(Int::from).collect();
        assert_eq!(small, big.invariant_factors);
    }
}

#[test]
fn entries_beyond_sixty_four_bits() {
    let big = Int::from(u64::MAX) * Int::from(3u8);
    let a = IntMatrix::from_rows(&[
        vec![big.clone(), Int::zero()],
        vec![Int::zero(), big.clone() * Int::from(2u8)],
    ]);
    let s = smith_normal_form(&a);
    assert_eq!(s.invariant_factors, vec![big.clone(), big * Int::from(2u8)]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reconstruction_holds(rows in (1usize..=6, 1usize..=6).prop_flat_map(|(m, n)| {
        proptest::collection::vec(proptest::collection::vec(-9i64..=9, n), m)
    })) {
        check_decomposition(&rows);
    }
}
