//! Degree-wise Koszul complexes and the bigraded Tor table.
//!
//! For a quotient `A = S / I` of a standard graded polynomial ring with
//! variable space `V`, the internal-degree-`j` slice is
//!
//! ```text
//! ∧^j V ⊗ A_0 -> ∧^{j-1} V ⊗ A_1 -> ... -> V ⊗ A_{j-1} -> A_j
//! ```
//!
//! with `∧^k V ⊗ A_{j-k}` in homological degree `k`. Its homology in
//! degree `k` is `Tor_k(Q, A)` in internal degree `j`, which is reported as
//! the table entry `(i, j)` with `i = j - k`.
//!
//! Only one slice is materialised at a time.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::{self, RatMatrix, Rational};
use crate::gralg::GradedQuotientAlgebra;
use crate::table::Source;

pub use crate::table::BigradedTable;

/// Internal degree used when callers do not choose one. Larger values grow
/// the slices combinatorially (`C(dim V, k) * dim A_{j-k}` per term).
pub const DEFAULT_J_MAX: usize = 5;

/// Basis of `∧^k V ⊗ A_{j-k}`: index subsets in lexicographic order, each
/// crossed with the coset basis of `A_{j-k}`.
#[derive(Clone, Debug)]
pub struct TermBasis {
    pub k: usize,
    pub subsets: Vec<Vec<usize>>,
    pub coset_dim: usize,
}

impl TermBasis {
    pub fn dim(&self) -> usize {
        self.subsets.len() * self.coset_dim
    }
}

/// The internal-degree-`j` slice of the Koszul complex.
#[derive(Clone, Debug)]
pub struct KoszulSlice {
    j: usize,
    terms: Vec<TermBasis>,
    /// `differentials[k - 1]` is `∂_k : term_k -> term_{k-1}` for `k = 1..=j`.
    differentials: Vec<RatMatrix>,
}

impl KoszulSlice {
    pub fn internal_degree(&self) -> usize {
        self.j
    }

    pub fn terms(&self) -> &[TermBasis] {
        &self.terms
    }

    pub fn term_dims(&self) -> Vec<usize> {
        self.terms.iter().map(TermBasis::dim).collect()
    }

    /// `∂_k` for `1 <= k <= j`.
    pub fn differential(&self, k: usize) -> Option<&RatMatrix> {
        k.checked_sub(1).and_then(|i| self.differentials.get(i))
    }

    /// `Σ_k (-1)^k dim term_k`.
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.term_dims())
    }

    /// Checks `∂_{k-1} ∘ ∂_k = 0` for every `k`.
    pub fn check_complex(&self) -> Result<()> {
        (2..=self.j).into_par_iter().try_for_each(|k| {
            let lower = self.differential(k - 1).expect("k - 1 >= 1");
            let upper = self.differential(k).expect("k <= j");
            if lower.mul(upper)?.is_zero() {
                Ok(())
            } else {
                Err(Error::NotAComplex { k: k - 1 })
            }
        })
    }
}

fn alternating_sum(values: &[usize]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

/// All `k`-subsets of `0..n` as sorted lists, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // advance the rightmost position that still has room
        let Some(pos) = (0..k).rev().find(|&p| current[p] < n - k + p) else {
            return out;
        };
        current[pos] += 1;
        for q in pos + 1..k {
            current[q] = current[q - 1] + 1;
        }
    }
}

/// Builds the internal-degree-`j` slice.
///
/// `∂(e_{i_1} ∧ ... ∧ e_{i_k} ⊗ a) = Σ_s (-1)^{s+1} e_{... î_s ...} ⊗ x_{i_s} a`,
/// with `s` counted from 1.
pub fn build_slice(a: &GradedQuotientAlgebra, j: usize) -> Result<KoszulSlice> {
    let ring = a.presentation().ring();
    if let Some(index) = ring.var_degrees().iter().position(|&d| d != 1) {
        return Err(Error::NonLinearVariable { index: index + 1, degree: ring.var_degrees()[index] });
    }
    if j > a.truncation_degree() {
        return Err(Error::TruncationExceeded { requested: j, truncation: a.truncation_degree() });
    }
    let n = ring.nvars();
    let terms: Vec<TermBasis> = (0..=j)
        .map(|k| {
            Ok(TermBasis { k, subsets: subsets(n, k), coset_dim: a.dim(j - k)? })
        })
        .collect::<Result<_>>()?;

    let differentials = (1..=j)
        .into_par_iter()
        .map(|k| differential(a, &terms[k], &terms[k - 1], j - k))
        .collect::<Result<Vec<_>>>()?;
    Ok(KoszulSlice { j, terms, differentials })
}

fn differential(a: &GradedQuotientAlgebra, source: &TermBasis, target: &TermBasis, d: usize) -> Result<RatMatrix> {
    let target_pos: HashMap<&[usize], usize> =
        target.subsets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let src_dim = source.coset_dim;
    let dst_dim = target.coset_dim;
    let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();
    // x_v * basis_b for every variable and basis element, computed once.
    let nvars = a.presentation().ring().nvars();
    let products: Vec<Vec<exactlin::SparseRow>> = (0..nvars)
        .map(|v| (0..src_dim).map(|b| a.times_variable(v, d, b)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut face = Vec::with_capacity(source.k);
    for (si, subset) in source.subsets.iter().enumerate() {
        for (s, &var) in subset.iter().enumerate() {
            face.clear();
            face.extend(subset.iter().enumerate().filter(|&(t, _)| t != s).map(|(_, &v)| v));
            let ti = target_pos[face.as_slice()];
            let negative = s % 2 == 1;
            for (b, image) in products[var].iter().enumerate() {
                let col = si * src_dim + b;
                for (r, v) in image {
                    let value = if negative { -v.clone() } else { v.clone() };
                    triplets.push((ti * dst_dim + r, col, value));
                }
            }
        }
    }
    RatMatrix::from_triplets(target.dim(), source.dim(), triplets)
}

/// Homology dimensions `dim H_k` for `k = 0..=j`.
///
/// Fails if a composite of consecutive differentials is non-zero.
pub fn homology_dims(s: &KoszulSlice) -> Result<Vec<usize>> {
    s.check_complex()?;
    let dims = s.term_dims();
    // ranks[k] = rank ∂_k, with ∂_0 and ∂_{j+1} zero
    let mut ranks = vec![0usize; s.j + 2];
    let computed: Vec<usize> = s.differentials.par_iter().map(exactlin::rank).collect();
    ranks[1..=s.j].copy_from_slice(&computed);
    Ok((0..=s.j).map(|k| dims[k] - ranks[k] - ranks[k + 1]).collect())
}

/// `h^{i,j} = dim H_{j-i}` of the degree-`j` slice for `0 <= i <= j <= j_max`.
///
/// The Euler characteristic of every slice is recorded in
/// `table.checksums` after checking it against the homology.
pub fn tor_table(a: &GradedQuotientAlgebra, j_max: usize) -> Result<BigradedTable> {
    if j_max > a.truncation_degree() {
        return Err(Error::TruncationExceeded { requested: j_max, truncation: a.truncation_degree() });
    }
    let slices: Vec<(usize, Vec<usize>, i64)> = (0..=j_max)
        .into_par_iter()
        .map(|j| {
            let slice = build_slice(a, j)?;
            let h = homology_dims(&slice)?;
            let euler = slice.euler_characteristic();
            assert_eq!(euler, alternating_sum(&h), "Euler checksum mismatch in degree {j}");
            Ok((j, h, euler))
        })
        .collect::<Result<_>>()?;

    let mut table = BigradedTable::new(Source::new("koszul").with("jmax", j_max));
    table.j_max = Some(j_max);
    for (j, h, euler) in slices {
        for (k, dim) in h.into_iter().enumerate() {
            table.set(j - k, j, dim);
        }
        table.checksums.insert(j, euler);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gralg::{GradedRing, IdealPresentation, Poly};

    fn algebra(nvars: usize, gens: Vec<Poly>, trunc: usize) -> GradedQuotientAlgebra {
        GradedQuotientAlgebra::new(IdealPresentation::new(GradedRing::standard(nvars), gens).unwrap(), trunc)
    }

    #[test]
    fn subsets_in_lex_order() {
        assert_eq!(subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
        assert_eq!(subsets(16, 5).len(), 4368);
    }

    #[test]
    fn point_slice() {
        // C[x]/(x), j = 1: ∧^1 V ⊗ A_0 -> A_1 = 0
        let a = algebra(1, vec![Poly::var(1, 0)], 1);
        let s = build_slice(&a, 1).unwrap();
        assert_eq!(s.term_dims(), vec![0, 1]);
        let d1 = s.differential(1).unwrap();
        assert_eq!((d1.nrows(), d1.ncols()), (0, 1));
        assert_eq!(homology_dims(&s).unwrap(), vec![0, 1]);
    }

    #[test]
    fn free_ring_is_exact() {
        let a = algebra(2, vec![], 3);
        let s = build_slice(&a, 1).unwrap();
        assert_eq!(s.term_dims(), vec![2, 2]);
        assert_eq!(exactlin::rank(s.differential(1).unwrap()), 2);
        for j in 1..=3 {
            let h = homology_dims(&build_slice(&a, j).unwrap()).unwrap();
            assert!(h.iter().all(|&d| d == 0), "j={j}: {h:?}");
        }
        assert_eq!(homology_dims(&build_slice(&a, 0).unwrap()).unwrap(), vec![1]);
    }

    #[test]
    fn one_linear_relation() {
        let a = algebra(2, vec![&Poly::var(2, 0) - &Poly::var(2, 1)], 3);
        let s = build_slice(&a, 1).unwrap();
        assert_eq!(s.term_dims(), vec![1, 2]);
        assert_eq!(exactlin::rank(s.differential(1).unwrap()), 1);
        assert_eq!(homology_dims(&s).unwrap(), vec![0, 1]);
        assert_eq!(homology_dims(&build_slice(&a, 0).unwrap()).unwrap(), vec![1]);

        let t = tor_table(&a, 3).unwrap();
        let expected = BigradedTable::from_entries(Source::new("x"), vec![(0, 0, 1), (0, 1, 1)]);
        assert!(t.same_entries(&expected), "{t:?}");
        assert_eq!(t.checksums.len(), 4);
    }

    #[test]
    fn weighted_ring_rejected() {
        let ring = GradedRing::weighted(vec![1, 2]).unwrap();
        let a = GradedQuotientAlgebra::new(IdealPresentation::new(ring, vec![]).unwrap(), 2);
        assert!(matches!(build_slice(&a, 1), Err(Error::NonLinearVariable { index: 2, degree: 2 })));
    }

    #[test]
    fn truncation_enforced() {
        let a = algebra(2, vec![], 2);
        assert!(matches!(build_slice(&a, 3), Err(Error::TruncationExceeded { .. })));
        assert!(tor_table(&a, 3).is_err());
    }

    #[test]
    fn broken_complex_is_detected() {
        let a = algebra(2, vec![], 2);
        let mut s = build_slice(&a, 2).unwrap();
        let (hit, _, _) = s.differentials[1].entries().next().unwrap();
        let (rows, cols) = (s.differentials[0].nrows(), s.differentials[0].ncols());
        s.differentials[0] = RatMatrix::from_triplets(rows, cols, vec![(0, hit, exactlin::rat(1))]).unwrap();
        assert!(matches!(homology_dims(&s), Err(Error::NotAComplex { k: 1 })));
    }
}
