//! Power-series and subset-enumeration oracles.

use std::collections::BTreeMap;

fn choose(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// Coefficients of `Π_k (1 - t^{d_k}) / (1 - t)^{nvars}` through `t^upto`.
pub fn complete_intersection_hilbert(nvars: usize, gen_degrees: &[usize], upto: usize) -> Vec<i128> {
    let mut numerator = vec![0i128; upto + 1];
    numerator[0] = 1;
    for &d in gen_degrees {
        for e in (d..=upto).rev() {
            numerator[e] -= numerator[e - d];
        }
    }
    let n = nvars as i128;
    (0..=upto)
        .map(|d| (0..=d).map(|e| numerator[e] * choose((d - e) as i128 + n - 1, n - 1)).sum())
        .collect()
}

/// Bidegree counts of subsets of generators of bidegree `(d - 1, d)`.
pub fn exterior_algebra_table(degrees: &[usize], j_max: usize) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for mask in 0u32..1 << degrees.len() {
        let chosen: Vec<usize> = (0..degrees.len()).filter(|t| mask >> t & 1 == 1).map(|t| degrees[t]).collect();
        let j: usize = chosen.iter().sum();
        let i = j - chosen.len();
        if j <= j_max {
            *out.entry((i, j)).or_insert(0) += 1;
        }
    }
    out
}
