//! Vanishing-strip and dlog-row predicates on bigraded tables.
//!
//! Failures are returned as data. Callers decide whether a violation is
//! fatal.

use serde::Serialize;

use crate::gralg::binomial;
use crate::table::BigradedTable;

pub use crate::table::StripParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub dim: usize,
}

/// Non-zero entries outside `0 <= j - i <= q + r`.
pub fn strip_check(t: &BigradedTable, p: StripParams) -> Vec<Violation> {
    t.iter()
        .filter(|&(i, j, _)| j < i || j - i > p.width())
        .map(|(i, j, dim)| Violation { i, j, dim })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowMismatch {
    pub j: usize,
    pub found: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DlogRowReport {
    pub char_rank: usize,
    pub j_max: usize,
    pub mismatches: Vec<RowMismatch>,
}

impl DlogRowReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares row `i = 0` with `C(char_rank, j)` for `j` up to the table's
/// `j_max` (or its largest non-zero `j` when unset).
pub fn dlog_row_check(t: &BigradedTable, char_rank: usize) -> DlogRowReport {
    let j_max = t.j_max.or(t.max_j()).unwrap_or(0);
    let mismatches = (0..=j_max)
        .filter_map(|j| {
            let expected = binomial(char_rank as u64, j as u64) as usize;
            let found = t.get(0, j);
            (found != expected).then_some(RowMismatch { j, found, expected })
        })
        .collect();
    DlogRowReport { char_rank, j_max, mismatches }
}
