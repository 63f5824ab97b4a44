mod common;

use common::dense::{self, q, Q};
use loghodge::exactlin::{self, rat, RatMatrix};
use num_traits::Zero;
use proptest::prelude::*;

/// Small integer matrices with plenty of zeros and dependent rows.
fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        let entry = prop_oneof![3 => Just(0i64), 2 => -3i64..=3];
        prop::collection::vec(prop::collection::vec(entry, c), r).prop_flat_map(move |rows| {
            // append combinations of existing rows to force rank drops
            (prop::collection::vec((0..rows.len(), 0..rows.len(), -2i64..=2), 0..3)).prop_map(move |combos| {
                let mut rows = rows.clone();
                for (a, b, s) in combos {
                    let row: Vec<i64> = rows[a].iter().zip(&rows[b]).map(|(x, y)| x + s * y).collect();
                    rows.push(row);
                }
                rows
            })
        })
    })
}

fn dense_q(rows: &[Vec<i64>]) -> Vec<Vec<Q>> {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_matches_dense_elimination(rows in matrix(12, 12)) {
        let m = RatMatrix::from_dense_i64(&rows);
        prop_assert_eq!(exactlin::rank(&m), dense::rank(&dense_q(&rows)));
    }

    #[test]
    fn rank_of_transpose(rows in matrix(10, 14)) {
        let m = RatMatrix::from_dense_i64(&rows);
        prop_assert_eq!(exactlin::rank(&m), exactlin::rank(&m.transpose()));
    }

    #[test]
    fn rank_invariant_under_permutations(
        (rows, rp, cp) in matrix(8, 8).prop_flat_map(|rows| {
            let (r, c) = (rows.len(), rows[0].len());
            (Just(rows), permutation(r), permutation(c))
        })
    ) {
        let m = RatMatrix::from_dense_i64(&rows);
        let p = m.permute_rows(&rp).permute_cols(&cp);
        prop_assert_eq!(exactlin::rank(&m), exactlin::rank(&p));
    }

    #[test]
    fn rank_invariant_under_row_scaling(rows in matrix(8, 8), num in 1i64..50, den in 1i64..50, neg: bool) {
        let m = RatMatrix::from_dense_i64(&rows);
        let mut scaled = m.clone();
        let s = exactlin::ratio(if neg { -num } else { num }, den);
        for r in 0..scaled.nrows() {
            scaled.scale_row(r, &s);
        }
        prop_assert_eq!(exactlin::rank(&m), exactlin::rank(&scaled));
    }

    #[test]
    fn kernel_basis_is_a_basis_of_the_kernel(rows in matrix(9, 11)) {
        let m = RatMatrix::from_dense_i64(&rows);
        let ker = exactlin::kernel_basis(&m);
        prop_assert_eq!(ker.len(), m.ncols() - exactlin::rank(&m));
        for v in &ker {
            for r in 0..m.nrows() {
                let dot = m.row(r).iter().fold(Q::zero(), |acc, (c, x)| acc + x * &v[*c]);
                prop_assert!(dot.is_zero());
            }
        }
        let kernel_rows: Vec<Vec<Q>> = ker.clone();
        prop_assert_eq!(dense::rank(&kernel_rows), ker.len());
    }

    #[test]
    fn rref_row_space_is_unchanged(rows in matrix(8, 8)) {
        let m = RatMatrix::from_dense_i64(&rows);
        let reduced = RatMatrix::from_sparse_rows(m.ncols(), exactlin::rref(&m)).unwrap();
        let r = exactlin::rank(&m);
        prop_assert_eq!(reduced.nrows(), r);
        prop_assert_eq!(exactlin::rank(&m.vstack(&reduced).unwrap()), r);
        for row in reduced.rows() {
            prop_assert_eq!(&row[0].1, &rat(1));
        }
    }

    #[test]
    fn product_rank_bounded(a in matrix(6, 6), b in matrix(6, 6)) {
        let ma = RatMatrix::from_dense_i64(&a);
        let mb = RatMatrix::from_dense_i64(&b);
        if ma.ncols() == mb.nrows() {
            let prod = ma.mul(&mb).unwrap();
            prop_assert!(exactlin::rank(&prod) <= exactlin::rank(&ma).min(exactlin::rank(&mb)));
        } else {
            prop_assert!(ma.mul(&mb).is_err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn rank_matches_dense_elimination_large(rows in matrix(48, 50)) {
        let m = RatMatrix::from_dense_i64(&rows);
        prop_assert_eq!(exactlin::rank(&m), dense::rank(&dense_q(&rows)));
    }
}

#[test]
fn dense_oracle_at_full_size() {
    // structured 50 x 50 matrix with a planted dependency
    let mut rows: Vec<Vec<i64>> = (0..49).map(|i| (0..50).map(|j| ((i * 7 + j * 3) % 11) as i64 - 5).collect()).collect();
    let extra: Vec<i64> = rows[3].iter().zip(&rows[17]).map(|(a, b)| 2 * a - b).collect();
    rows.push(extra);
    let m = RatMatrix::from_dense_i64(&rows);
    assert_eq!(exactlin::rank(&m), dense::rank(&dense_q(&rows)));
}
