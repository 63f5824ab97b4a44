//! Cohomology of twisted differential forms on projective space.
//!
//! `h^i(P^n, Ω^j(k))` is non-zero only in three cases:
//!
//! * `i = 0`, `k > j`: `C(k + n - j, k) C(k - 1, j)`
//! * `i = j`, `k = 0`: `1`
//! * `i = n`, `k < j - n`: `C(-k + j, -k) C(-k - 1, n - j)`
//!
//! Projective space is the only flag variety covered here; quadrics and
//! other `G/P` need separate algorithms.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gralg::binomial;
use crate::table::{BigradedTable, Source};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BottQuery {
    pub n: usize,
    pub j: usize,
    pub k: i64,
}

impl BottQuery {
    pub fn new(n: usize, j: usize, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange { what: "n", value: 0, range: "1..".into() });
        }
        if j > n {
            return Err(Error::OutOfRange { what: "j", value: j as i64, range: format!("0..={n}") });
        }
        Ok(BottQuery { n, j, k })
    }
}

/// Non-zero `h^i` for the query, keyed by `i`.
pub fn bott_dims(q: BottQuery) -> BTreeMap<usize, u128> {
    let BottQuery { n, j, k } = q;
    let (n64, j64) = (n as i64, j as i64);
    let mut out = BTreeMap::new();
    if k > j64 {
        let d = binomial((k + n64 - j64) as u64, k as u64) * binomial((k - 1) as u64, j as u64);
        if d > 0 {
            out.insert(0, d);
        }
    } else if k == 0 {
        out.insert(j, 1);
    } else if k < j64 - n64 {
        let m = -k;
        let d = binomial((m + j64) as u64, m as u64) * binomial((m - 1) as u64, (n - j) as u64);
        if d > 0 {
            out.insert(n, d);
        }
    }
    out
}

/// `(i, j) -> h^i(P^n, Ω^j(k))` for all `j = 0..=n`.
pub fn bott_table(n: usize, k: i64) -> Result<BigradedTable> {
    let mut t = BigradedTable::new(Source::new("bott").with("n", n).with("twist", k));
    for j in 0..=n {
        for (i, d) in bott_dims(BottQuery::new(n, j, k)?) {
            t.set(i, j, usize::try_from(d).expect("dimension fits in usize"));
        }
    }
    t.j_max = Some(n);
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Locus {
    pub i: usize,
    pub j: usize,
    pub k: i64,
    pub dim: u128,
}

/// Outcome of scanning `H^i(P^n, Ω^j(k))` for `k` in a twist range.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BroerReport {
    pub n: usize,
    pub k_min: i64,
    pub k_max: i64,
    /// Non-zero groups with `k >= 0` and `i > j`; empty when the strip holds.
    pub violations: Vec<Locus>,
    /// Every non-zero group with `k < 0`, where `O(k)` is not nef.
    pub negative_twist_loci: Vec<Locus>,
}

impl BroerReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `H^i(P^n, Ω^j(k)) = 0` for `i > j` over every `j` and every
/// `k ≥ 0` in `[k_min, k_max]`.
pub fn broer_check(n: usize, k_min: i64, k_max: i64) -> Result<BroerReport> {
    if k_min > k_max {
        return Err(Error::OutOfRange { what: "k_min", value: k_min, range: format!("..={k_max}") });
    }
    let mut report = BroerReport { n, k_min, k_max, ..Default::default() };
    for k in k_min..=k_max {
        for j in 0..=n {
            for (i, dim) in bott_dims(BottQuery::new(n, j, k)?) {
                let locus = Locus { i, j, k, dim };
                if k < 0 {
                    report.negative_twist_loci.push(locus);
                } else if i > j {
                    report.violations.push(locus);
                }
            }
        }
    }
    Ok(report)
}
