use std::collections::HashMap;

use super::poly::Poly;
use super::ring::{Exponents, GradedRing};
use crate::error::{Error, Result};
use crate::exactlin::{self, RatMatrix};

/// Homogeneous ideal `I = (g_1, ..., g_m)` in a graded polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: GradedRing,
    generators: Vec<Poly>,
    degrees: Vec<usize>,
}

impl IdealPresentation {
    /// Validates the generators and records their degrees.
    ///
    /// Zero generators, non-homogeneous generators and non-zero constants
    /// are rejected.
    pub fn new(ring: GradedRing, generators: Vec<Poly>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if g.nvars() != ring.nvars() {
                return Err(Error::ArityMismatch { expected: ring.nvars(), found: g.nvars() });
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator(i));
            }
            let d = g.homogeneous_degree(&ring).ok_or_else(|| {
                let first = g.terms().next().map_or(0, |(e, _)| ring.degree_of(e));
                Error::NotHomogeneous { index: i, declared: first }
            })?;
            if d == 0 {
                return Err(Error::UnitGenerator(i));
            }
            degrees.push(d);
        }
        Ok(IdealPresentation { ring, generators, degrees })
    }

    /// Like [`IdealPresentation::new`] but also checks declared degrees.
    pub fn with_declared_degrees(ring: GradedRing, generators: Vec<Poly>, declared: &[usize]) -> Result<Self> {
        let p = Self::new(ring, generators)?;
        for (i, (&d, &want)) in p.degrees.iter().zip(declared).enumerate() {
            if d != want {
                return Err(Error::NotHomogeneous { index: i, declared: want });
            }
        }
        Ok(p)
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn generator_degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// The same ideal after renaming `x_v` to `x_{perm[v]}`.
    pub fn permute_variables(&self, perm: &[usize]) -> IdealPresentation {
        let mut degs = vec![0; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            degs[p] = self.ring.var_degrees()[v];
        }
        IdealPresentation {
            ring: GradedRing::weighted(degs).expect("weights stay positive"),
            generators: self.generators.iter().map(|g| g.permute_variables(perm)).collect(),
            degrees: self.degrees.clone(),
        }
    }

    /// Matrix whose rows are the coefficient vectors of `m * g_k` over
    /// `monomial_basis(ring, d)`, generator-major, multipliers in basis order.
    pub fn ideal_degree_matrix(&self, d: usize) -> RatMatrix {
        let basis = self.ring.monomial_basis(d);
        let index: HashMap<&Exponents, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
        self.ideal_degree_matrix_in(d, &index)
    }

    pub(crate) fn ideal_degree_matrix_in(&self, d: usize, index: &HashMap<&Exponents, usize>) -> RatMatrix {
        let mut rows = Vec::new();
        for (g, &gd) in self.generators.iter().zip(&self.degrees) {
            if gd > d {
                continue;
            }
            for m in self.ring.monomial_basis(d - gd) {
                let mut row: Vec<(usize, exactlin::Rational)> = g
                    .terms()
                    .map(|(e, c)| {
                        let prod: Exponents = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                        (index[&prod], c.clone())
                    })
                    .collect();
                row.sort_by_key(|(c, _)| *c);
                rows.push(row);
            }
        }
        RatMatrix::from_sparse_rows(index.len(), rows).expect("products of distinct terms stay distinct")
    }

    /// Standard monomials of degree `d`: those whose columns are not pivots
    /// of the degree-`d` ideal matrix. Their count is `dim A_d`.
    pub fn quotient_basis(&self, d: usize) -> Vec<Exponents> {
        let basis = self.ring.monomial_basis(d);
        let pivots = exactlin::pivot_columns(&self.ideal_degree_matrix(d));
        let mut is_pivot = vec![false; basis.len()];
        for p in pivots {
            is_pivot[p] = true;
        }
        basis.into_iter().zip(is_pivot).filter(|(_, p)| !p).map(|(e, _)| e).collect()
    }
}
