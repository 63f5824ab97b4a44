use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::ideal::IdealPresentation;
use super::poly::Poly;
use super::ring::Exponents;
use crate::error::{Error, Result};
use crate::exactlin::{self, RatMatrix, Rational, SparseRow};

/// Degree-`d` piece of `A = S / I`.
#[derive(Clone, Debug)]
struct Piece {
    monomials: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
    /// Positions (into `monomials`) of the standard monomials, in order.
    standard: Vec<usize>,
    /// For every monomial, its normal form over the standard basis.
    normal_form: Vec<NormalForm>,
}

#[derive(Clone, Debug)]
enum NormalForm {
    Standard(usize),
    Reduced(SparseRow),
}

/// Truncated quotient algebra `A = S / I` with per-degree coset bases.
///
/// Every degree up to `truncation` is materialised at construction time.
/// Coset bases consist of the standard monomials selected by pivoting the
/// ideal matrix in graded reverse lexicographic order; every other monomial
/// carries its normal form, read off the reduced echelon form.
#[derive(Clone, Debug)]
pub struct GradedQuotientAlgebra {
    presentation: IdealPresentation,
    truncation: usize,
    pieces: Vec<Piece>,
}

impl GradedQuotientAlgebra {
    pub fn new(presentation: IdealPresentation, truncation: usize) -> Self {
        let pieces = (0..=truncation)
            .into_par_iter()
            .map(|d| build_piece(&presentation, d))
            .collect();
        GradedQuotientAlgebra { presentation, truncation, pieces }
    }

    pub fn presentation(&self) -> &IdealPresentation {
        &self.presentation
    }

    pub fn truncation_degree(&self) -> usize {
        self.truncation
    }

    fn piece(&self, d: usize) -> Result<&Piece> {
        self.pieces
            .get(d)
            .ok_or(Error::TruncationExceeded { requested: d, truncation: self.truncation })
    }

    pub fn dim(&self, d: usize) -> Result<usize> {
        Ok(self.piece(d)?.standard.len())
    }

    /// `dim A_d` for `d = 0..=truncation`.
    pub fn hilbert_function(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.standard.len()).collect()
    }

    /// Standard monomials of degree `d`, in basis order.
    pub fn coset_basis(&self, d: usize) -> Result<Vec<&Exponents>> {
        let p = self.piece(d)?;
        Ok(p.standard.iter().map(|&i| &p.monomials[i]).collect())
    }

    /// Normal form of a degree-`d` monomial over the coset basis of `A_d`.
    pub fn reduce(&self, monomial: &[u32]) -> Result<SparseRow> {
        let d = self.presentation.ring().degree_of(monomial);
        let p = self.piece(d)?;
        let idx = p.index[monomial];
        Ok(match &p.normal_form[idx] {
            NormalForm::Standard(pos) => vec![(*pos, Rational::from_integer(1.into()))],
            NormalForm::Reduced(row) => row.clone(),
        })
    }

    /// Image of the `col`-th coset basis vector of `A_d` under multiplication
    /// by `x_var`, as a sparse vector over the basis of `A_{d+1}`.
    pub(crate) fn times_variable(&self, var: usize, d: usize, col: usize) -> Result<SparseRow> {
        let src = self.piece(d)?;
        let mut prod = src.monomials[src.standard[col]].clone();
        prod[var] += 1;
        let dd = d + self.presentation.ring().var_degrees()[var];
        let dst = self.piece(dd)?;
        Ok(match &dst.normal_form[dst.index[&prod]] {
            NormalForm::Standard(pos) => vec![(*pos, Rational::from_integer(1.into()))],
            NormalForm::Reduced(row) => row.clone(),
        })
    }

    /// Matrix of multiplication by a linear form, `A_d -> A_{d+1}`, with
    /// columns indexed by the basis of `A_d` and rows by that of `A_{d+1}`.
    pub fn mult_linear_matrix(&self, form: &Poly, d: usize) -> Result<RatMatrix> {
        let ring = self.presentation.ring();
        if form.nvars() != ring.nvars() {
            return Err(Error::ArityMismatch { expected: ring.nvars(), found: form.nvars() });
        }
        if !form.is_zero() && form.homogeneous_degree(ring) != Some(1) {
            return Err(Error::NotLinear(format!("{form:?}")));
        }
        let src = self.dim(d)?;
        let dst = self.dim(d + 1)?;
        let mut triplets = Vec::new();
        for (e, c) in form.terms() {
            let var = e.iter().position(|&k| k == 1).expect("degree-1 term");
            for col in 0..src {
                for (row, v) in self.times_variable(var, d, col)? {
                    triplets.push((row, col, v * c));
                }
            }
        }
        RatMatrix::from_triplets(dst, src, triplets)
    }
}

fn build_piece(presentation: &IdealPresentation, d: usize) -> Piece {
    let monomials = presentation.ring().monomial_basis(d);
    let index: HashMap<Exponents, usize> = monomials.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let borrowed: HashMap<&Exponents, usize> = monomials.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let rref = exactlin::rref(&presentation.ideal_degree_matrix_in(d, &borrowed));

    let mut is_pivot = vec![false; monomials.len()];
    for row in &rref {
        is_pivot[row[0].0] = true;
    }
    let standard: Vec<usize> = (0..monomials.len()).filter(|&i| !is_pivot[i]).collect();
    let mut std_pos = vec![usize::MAX; monomials.len()];
    for (pos, &i) in standard.iter().enumerate() {
        std_pos[i] = pos;
    }

    let mut normal_form: Vec<NormalForm> = (0..monomials.len()).map(|i| NormalForm::Standard(std_pos[i])).collect();
    // pivot + sum a_c * x_c lies in I, so pivot = -sum a_c * x_c in A.
    for row in rref {
        let lead = row[0].0;
        let reduced: SparseRow = row
            .into_iter()
            .skip(1)
            .map(|(c, v)| {
                debug_assert!(!is_pivot[c]);
                (std_pos[c], -v)
            })
            .filter(|(_, v)| !v.is_zero())
            .collect();
        normal_form[lead] = NormalForm::Reduced(reduced);
    }
    Piece { monomials, index, standard, normal_form }
}
