//! Exact sparse linear algebra over arbitrary-precision rationals.
//!
//! Matrices are stored row-wise as sorted `(column, value)` lists with no
//! explicit zeros. A matrix that represents a linear map `V -> W` has one
//! column per basis vector of `V` and one row per basis vector of `W`.
//! When a matrix is a *presentation* (as for [`cokernel_dim`]) the columns
//! index generators and each row is one relation among them.
//!
//! Elimination is pivoted rational Gauss with the leftmost non-zero entry
//! of every row as its pivot. Rows are never reordered by magnitude, so
//! ranks and pivot sets are deterministic functions of the input.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Convenience constructor for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Convenience constructor for `num / den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A sparse row: strictly increasing column indices, no zero values.
pub type SparseRow = Vec<(usize, Rational)>;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseRow>,
}

impl RatMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RatMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        RatMatrix { nrows: n, ncols: n, rows }
    }

    /// Builds a matrix from `(row, col, value)` triplets. Repeated keys are
    /// summed and resulting zeros dropped.
    pub fn from_triplets<I>(nrows: usize, ncols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); nrows];
        for (r, c, v) in triplets {
            if r >= nrows || c >= ncols {
                return Err(Error::IndexOutOfBounds { row: r, col: c, nrows, ncols });
            }
            if v.is_zero() {
                continue;
            }
            let slot = acc[r].entry(c).or_insert_with(Rational::zero);
            *slot += v;
        }
        let rows = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(RatMatrix { nrows, ncols, rows })
    }

    /// Builds a matrix from sparse rows. Each row must already be sorted,
    /// duplicate-free and zero-free.
    pub fn from_sparse_rows(ncols: usize, rows: Vec<SparseRow>) -> Result<Self> {
        let nrows = rows.len();
        for (r, row) in rows.iter().enumerate() {
            let mut prev: Option<usize> = None;
            for (c, v) in row {
                if *c >= ncols {
                    return Err(Error::IndexOutOfBounds { row: r, col: *c, nrows, ncols });
                }
                if prev.is_some_and(|p| p >= *c) || v.is_zero() {
                    return Err(Error::MalformedRow(r));
                }
                prev = Some(*c);
            }
        }
        Ok(RatMatrix { nrows, ncols, rows })
    }

    /// Dense integer input, mostly for tests and small fixtures.
    pub fn from_dense_i64(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let sparse = rows
            .iter()
            .map(|row| {
                assert_eq!(row.len(), ncols, "ragged dense matrix");
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(|(c, v)| (c, rat(*v)))
                    .collect()
            })
            .collect();
        RatMatrix { nrows: rows.len(), ncols, rows: sparse }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, Rational)] {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.rows[r].binary_search_by_key(&c, |(col, _)| *col) {
            Ok(pos) => self.rows[r][pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Iterates over stored entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); self.ncols];
        for (r, c, v) in self.entries() {
            rows[c].push((r, v.clone()));
        }
        RatMatrix { nrows: self.ncols, ncols: self.nrows, rows }
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.ncols != rhs.nrows {
            return Err(Error::ShapeMismatch {
                left: (self.nrows, self.ncols),
                right: (rhs.nrows, rhs.ncols),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &rhs.rows[*k] {
                        let slot = acc.entry(*c).or_insert_with(Rational::zero);
                        *slot += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(RatMatrix { nrows: self.nrows, ncols: rhs.ncols, rows })
    }

    /// Multiplies row `r` by a non-zero scalar.
    pub fn scale_row(&mut self, r: usize, s: &Rational) {
        assert!(!s.is_zero(), "scaling by zero changes rank");
        for (_, v) in &mut self.rows[r] {
            *v *= s;
        }
    }

    /// Reorders rows so that new row `i` is old row `perm[i]`.
    pub fn permute_rows(&self, perm: &[usize]) -> RatMatrix {
        assert_eq!(perm.len(), self.nrows);
        let rows = perm.iter().map(|&p| self.rows[p].clone()).collect();
        RatMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    /// Reorders columns so that new column `j` is old column `perm[j]`.
    pub fn permute_cols(&self, perm: &[usize]) -> RatMatrix {
        assert_eq!(perm.len(), self.ncols);
        let mut inverse = vec![0; self.ncols];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out: SparseRow = row.iter().map(|(c, v)| (inverse[*c], v.clone())).collect();
                out.sort_by_key(|(c, _)| *c);
                out
            })
            .collect();
        RatMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.ncols != other.ncols {
            return Err(Error::ShapeMismatch {
                left: (self.nrows, self.ncols),
                right: (other.nrows, other.ncols),
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(RatMatrix { nrows: rows.len(), ncols: self.ncols, rows })
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} ({} nnz)", self.nrows, self.ncols, self.nnz())?;
        if self.nrows <= 12 && self.ncols <= 12 {
            for r in 0..self.nrows {
                let cells: Vec<String> = (0..self.ncols).map(|c| self.get(r, c).to_string()).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        }
        Ok(())
    }
}

/// Incrementally maintained row echelon form.
///
/// Every stored row is normalised so that its leading (leftmost) entry is 1.
/// No two stored rows share a leading column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    by_lead: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), by_lead: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `row` against the stored rows and stores the remainder if it is
    /// non-zero. Returns the new leading column when the row was independent.
    pub fn insert(&mut self, row: &[(usize, Rational)]) -> Option<usize> {
        let mut acc: BTreeMap<usize, Rational> = row.iter().cloned().collect();
        while let Some((lead, value)) = acc.pop_first() {
            match self.by_lead.get(&lead) {
                Some(&idx) => {
                    // value * pivot_row cancels the leading entry.
                    for (c, v) in self.rows[idx].iter().skip(1) {
                        let slot = acc.entry(*c).or_insert_with(Rational::zero);
                        *slot -= &value * v;
                        if slot.is_zero() {
                            acc.remove(c);
                        }
                    }
                }
                None => {
                    let inv = value.recip();
                    let mut stored: SparseRow = Vec::with_capacity(acc.len() + 1);
                    stored.push((lead, Rational::one()));
                    stored.extend(acc.into_iter().map(|(c, v)| (c, v * &inv)));
                    self.by_lead.insert(lead, self.rows.len());
                    self.rows.push(stored);
                    return Some(lead);
                }
            }
        }
        None
    }

    /// Leading columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut leads: Vec<usize> = self.by_lead.keys().copied().collect();
        leads.sort_unstable();
        leads
    }

    /// Consumes the echelon form and returns the reduced row echelon form:
    /// rows sorted by leading column, each pivot column zero outside its row.
    pub fn into_reduced(self) -> Vec<SparseRow> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.rows[i][0].0);
        let mut rows = self.rows;
        let mut reduced_by_lead: HashMap<usize, SparseRow> = HashMap::new();
        let mut out: Vec<SparseRow> = vec![Vec::new(); order.len()];
        // Rows with larger leads are fully reduced first.
        for (slot, &idx) in order.iter().enumerate().rev() {
            let row = std::mem::take(&mut rows[idx]);
            let lead = row[0].0;
            let mut acc: BTreeMap<usize, Rational> = row.into_iter().skip(1).collect();
            let mut done: SparseRow = vec![(lead, Rational::one())];
            while let Some((c, v)) = acc.pop_first() {
                if let Some(prow) = reduced_by_lead.get(&c) {
                    for (pc, pv) in prow.iter().skip(1) {
                        let s = acc.entry(*pc).or_insert_with(Rational::zero);
                        *s -= &v * pv;
                        if s.is_zero() {
                            acc.remove(pc);
                        }
                    }
                } else {
                    done.push((c, v));
                }
            }
            reduced_by_lead.insert(lead, done.clone());
            out[slot] = done;
        }
        out
    }
}

fn echelon_of(m: &RatMatrix) -> Echelon {
    let mut ech = Echelon::new(m.ncols);
    for row in &m.rows {
        if ech.rank() == m.ncols {
            break;
        }
        ech.insert(row);
    }
    ech
}

/// Exact rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    if m.nrows == 0 || m.ncols == 0 {
        return 0;
    }
    // Eliminating along the shorter side keeps the pivot table small.
    if m.nrows > m.ncols {
        echelon_of(&m.transpose()).rank()
    } else {
        echelon_of(m).rank()
    }
}

/// Dimension of the cokernel of a presentation whose columns are generators
/// and whose rows are relations: `ncols - rank`.
pub fn cokernel_dim(m: &RatMatrix) -> usize {
    m.ncols - rank(m)
}

/// Pivot columns of the reduced row echelon form, scanning left to right.
pub fn pivot_columns(m: &RatMatrix) -> Vec<usize> {
    echelon_of(m).pivot_columns()
}

/// Reduced row echelon form as sparse rows sorted by pivot column.
pub fn rref(m: &RatMatrix) -> Vec<SparseRow> {
    echelon_of(m).into_reduced()
}

/// Basis of the right kernel `{v : m v = 0}`, one vector per non-pivot
/// column, as dense rational vectors.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let reduced = rref(m);
    let mut is_pivot = vec![false; m.ncols];
    for row in &reduced {
        is_pivot[row[0].0] = true;
    }
    (0..m.ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); m.ncols];
            v[free] = Rational::one();
            for row in &reduced {
                if let Ok(pos) = row.binary_search_by_key(&free, |(c, _)| *c) {
                    v[row[0].0] = -row[pos].1.clone();
                }
            }
            v
        })
        .collect()
}
