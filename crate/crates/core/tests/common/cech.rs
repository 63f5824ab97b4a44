//! Independent check of `bott_dims` by Čech cohomology on the standard
//! affine cover of `P^n`.
//!
//! Sections of `Ω^j(k)` over `U_I = {x_t ≠ 0, t ∈ I}` are the forms
//! `Σ_J f_J dx_J` of total degree `k` (with `deg dx_t = 1`) killed by
//! contraction with the Euler field, where `f_J` may have poles along
//! `x_t` for `t ∈ I`. Everything splits by torus weight `m ∈ Z^{n+1}`; in
//! weight `m` the form `dx_J` carries the coefficient `x^{m - e_J}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::dense::{kernel, rank, Q};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|t| m >> t & 1 == 1).collect())
        .collect()
}

/// Contraction with the Euler field on the basis `dx_J`, `|J| = j`.
fn contraction(n1: usize, j: usize) -> (Vec<Vec<usize>>, Vec<Vec<Q>>) {
    let src = subsets(n1, j);
    if j == 0 {
        return (src, Vec::new());
    }
    let dst = subsets(n1, j - 1);
    let mut rows = vec![vec![Q::zero(); src.len()]; dst.len()];
    for (c, s) in src.iter().enumerate() {
        for pos in 0..s.len() {
            let face: Vec<usize> = s.iter().enumerate().filter(|&(t, _)| t != pos).map(|(_, &v)| v).collect();
            let r = dst.iter().position(|d| *d == face).unwrap();
            rows[r][c] = if pos % 2 == 0 { Q::one() } else { -Q::one() };
        }
    }
    (src, rows)
}

/// Čech cohomology dimensions of `Ω^j(k)` in weight `m`.
fn weight_cohomology(n: usize, m: &[i64], contr: &(Vec<Vec<usize>>, Vec<Vec<Q>>)) -> Vec<usize> {
    let n1 = n + 1;
    let (basis, iota) = contr;
    let w = basis.len();
    // K_I as vectors in the ambient space spanned by all dx_J
    let opens: Vec<Vec<Vec<usize>>> = (1..=n1).map(|p| subsets(n1, p)).collect();
    let sections = |open: &[usize]| -> Vec<Vec<Q>> {
        let allowed: Vec<usize> = (0..w)
            .filter(|&c| (0..n1).all(|t| open.contains(&t) || m[t] - basis[c].contains(&t) as i64 >= 0))
            .collect();
        if allowed.is_empty() {
            return Vec::new();
        }
        let restricted: Vec<Vec<Q>> =
            iota.iter().map(|row| allowed.iter().map(|&c| row[c].clone()).collect()).collect();
        kernel(&restricted, allowed.len())
            .into_iter()
            .map(|v| {
                let mut full = vec![Q::zero(); w];
                for (x, &c) in v.into_iter().zip(&allowed) {
                    full[c] = x;
                }
                full
            })
            .collect()
    };
    let cochains: Vec<Vec<(usize, Vec<Vec<Q>>)>> = opens
        .iter()
        .map(|level| level.iter().enumerate().map(|(idx, o)| (idx, sections(o))).collect())
        .collect();
    let dims: Vec<usize> = cochains.iter().map(|l| l.iter().map(|(_, k)| k.len()).sum()).collect();
    // rank of δ_p : C^p -> C^{p+1}, rows indexed by (open of level p+1, ambient coordinate)
    let mut ranks = vec![0usize; n1 + 1];
    for p in 0..n {
        let targets = &opens[p + 1];
        let mut cols: Vec<Vec<Q>> = Vec::new();
        for (idx, kernel_vecs) in &cochains[p] {
            let source = &opens[p][*idx];
            for v in kernel_vecs {
                let mut col = vec![Q::zero(); targets.len() * w];
                for (ti, t) in targets.iter().enumerate() {
                    if !source.iter().all(|s| t.contains(s)) {
                        continue;
                    }
                    let extra = t.iter().position(|x| !source.contains(x)).unwrap();
                    let sign = if extra % 2 == 0 { Q::one() } else { -Q::one() };
                    for (c, x) in v.iter().enumerate() {
                        col[ti * w + c] = &sign * x;
                    }
                }
                cols.push(col);
            }
        }
        ranks[p + 1] = rank(&cols);
    }
    (0..n1).map(|p| dims[p] - ranks[p + 1] - ranks[p]).collect()
}

fn weights(n1: usize, total: i64, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n1];
    fn rec(t: usize, left: i64, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if t + 1 == cur.len() {
            if left.abs() <= bound {
                cur[t] = left;
                out.push(cur.clone());
            }
            return;
        }
        for v in -bound..=bound {
            cur[t] = v;
            rec(t + 1, left - v, bound, cur, out);
        }
    }
    rec(0, total, bound, &mut cur, &mut out);
    out
}

pub fn cech_dims(n: usize, j: usize, k: i64) -> BTreeMap<usize, u128> {
    let contr = contraction(n + 1, j);
    let bound = k.abs() + n as i64 + 3;
    let mut total = vec![0usize; n + 1];
    for m in weights(n + 1, k, bound) {
        let h = weight_cohomology(n, &m, &contr);
        if m.iter().any(|x| x.abs() == bound) {
            assert!(h.iter().all(|&d| d == 0), "cohomology at the edge of the weight box, m = {m:?}");
        }
        for (i, d) in h.into_iter().enumerate() {
            total[i] += d;
        }
    }
    total.into_iter().enumerate().filter(|&(_, d)| d > 0).map(|(i, d)| (i, d as u128)).collect()
}
