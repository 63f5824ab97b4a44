//! Equivariant compactifications of reductive groups.
//!
//! For a `G x G`-equivariant compactification of a connected reductive
//! group `G`, the bigraded logarithmic Hodge algebra is a free exterior
//! algebra on generators of bidegree `(d_k - 1, d_k)`, where `d_1..d_r` are
//! the degrees of fundamental invariants of the adjoint representation.
//! This module provides those degrees, the resulting closed-form table,
//! and explicit presentations of the coordinate ring of `g x_{g//G} g`
//! (the graph ideal `(P_k(x) - P_k(y))`) for the types small enough to feed
//! to the Koszul engine.
//!
//! Everything is keyed on the Cartan type; isogenous groups share a table.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gralg::{GradedQuotientAlgebra, GradedRing, IdealPresentation, Poly};
use crate::koszul;
use crate::table::{BigradedTable, Source};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    Torus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = rank >= 1
            && match series {
                Series::A | Series::B | Series::C | Series::Torus => true,
                Series::D => rank >= 3,
                Series::E => (6..=8).contains(&rank),
                Series::F => rank == 4,
                Series::G => rank == 2,
            };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::InvalidType(format!("{series:?}{rank}")))
        }
    }

    pub fn torus(rank: usize) -> Result<Self> {
        Self::new(Series::Torus, rank)
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_torus(&self) -> bool {
        self.series == Series::Torus
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.series {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
            Series::Torus => "T",
        };
        write!(f, "{letter}{}", self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses `A1`, `e8`, `T3`, ... (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            Some('T') => Series::Torus,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = digits.parse().map_err(|_| bad())?;
        CartanType::new(series, rank).map_err(|_| bad())
    }
}

/// Degrees `d_1 <= ... <= d_r` of homogeneous generators of the invariant
/// ring `C[g]^G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantDegrees(Vec<usize>);

impl InvariantDegrees {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        InvariantDegrees(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn product(&self) -> u128 {
        self.0.iter().map(|&d| d as u128).product()
    }

    /// `Σ (d_k - 1)`.
    pub fn exponent_sum(&self) -> usize {
        self.0.iter().map(|&d| d.saturating_sub(1)).sum()
    }
}

pub fn invariant_degrees(t: CartanType) -> InvariantDegrees {
    let n = t.rank;
    let degrees = match t.series {
        Series::A => (2..=n + 1).collect(),
        Series::B | Series::C => (1..=n).map(|k| 2 * k).collect(),
        Series::D => {
            let mut d: Vec<usize> = (1..n).map(|k| 2 * k).collect();
            d.push(n);
            d
        }
        Series::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Series::F => vec![2, 6, 8, 12],
        Series::G => vec![2, 6],
        Series::Torus => vec![1; n],
    };
    InvariantDegrees::new(degrees)
}

/// Order of the Weyl group, from the classical product formulas.
pub fn weyl_group_order(t: CartanType) -> u128 {
    let n = t.rank as u128;
    let fact = |m: u128| (1..=m).product::<u128>();
    match t.series {
        Series::A => fact(n + 1),
        Series::B | Series::C => (1u128 << n) * fact(n),
        Series::D => (1u128 << (n - 1)) * fact(n),
        Series::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Series::F => 1_152,
        Series::G => 12,
        Series::Torus => 1,
    }
}

/// Cartan matrix `a_ij = <α_i, α_j^∨>` in Bourbaki numbering. Empty for a
/// torus.
pub fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    if t.is_torus() {
        return Vec::new();
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t.series {
        Series::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Series::B => {
            (0..n.saturating_sub(2)).for_each(|i| link(i, i + 1, -1, -1));
            if n >= 2 {
                link(n - 2, n - 1, -1, -2);
            }
        }
        Series::C => {
            (0..n.saturating_sub(2)).for_each(|i| link(i, i + 1, -1, -1));
            if n >= 2 {
                link(n - 2, n - 1, -2, -1);
            }
        }
        Series::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Series::E => {
            // 1 - 3 - 4 - 5 - ..., with 2 attached to 4
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Series::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        Series::G => link(0, 1, -1, -3),
        Series::Torus => unreachable!(),
    }
    a
}

/// Positive roots in the simple-root basis, generated from the Cartan
/// matrix by root strings.
pub fn positive_roots(t: CartanType) -> Vec<Vec<i64>> {
    let a = cartan_matrix(t);
    let n = a.len();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut all = simple.clone();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // p = largest with beta - p α_i a root
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * a[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Expansion of `Π_k (1 + u^{d_k - 1} v^{d_k})`: entry `(i, j)` counts the
/// subsets of generators with total bidegree `(i, j)`. With `j_max` set,
/// entries with `j > j_max` are dropped.
pub fn closed_form_table(d: &InvariantDegrees, j_max: Option<usize>) -> BigradedTable {
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    counts.insert((0, 0), 1);
    for &deg in d.degrees() {
        let mut next = counts.clone();
        for (&(i, j), &c) in &counts {
            let (ni, nj) = (i + deg - 1, j + deg);
            if j_max.is_some_and(|m| nj > m) {
                continue;
            }
            *next.entry((ni, nj)).or_insert(0) += c;
        }
        counts = next;
    }
    let degrees: Vec<String> = d.degrees().iter().map(usize::to_string).collect();
    let mut table = BigradedTable::from_entries(
        Source::new("closed_form").with("degrees", degrees.join(",")),
        counts.into_iter().map(|((i, j), c)| (i, j, c)),
    );
    table.j_max = j_max;
    table
}

pub const GRAPH_IDEAL_TYPES: &str = "T1..T9 (any torus), A1, A2";

/// Presentation of `C[g x_{g//G} g] = C[g x g] / (P_k(x) - P_k(y))`.
///
/// Variables: the first `dim g` are coordinates on the first copy of `g`,
/// the next `dim g` on the second copy.
///
/// * `T_r`: `x_k - y_k`.
/// * `A_1`: coordinates `(a, b, c)` of `[[a, b], [c, -a]]`; one generator
///   `κ(x) - κ(y)` with `κ = a^2 + bc`.
/// * `A_2`: coordinates `(x11, x12, x13, x21, x22, x23, x31, x32)` of a
///   traceless `3x3` matrix with `x33 = -x11 - x22`; generators
///   `tr(X^2) - tr(Y^2)` and `tr(X^3) - tr(Y^3)`.
pub fn graph_ideal(t: CartanType) -> Result<IdealPresentation> {
    let gens = match (t.series, t.rank) {
        (Series::Torus, r) => {
            let n = 2 * r;
            (0..r).map(|k| &Poly::var(n, k) - &Poly::var(n, r + k)).collect()
        }
        (Series::A, 1) => {
            let n = 6;
            let v = |i| Poly::var(n, i);
            let casimir = |o: usize| &(&v(o) * &v(o)) + &(&v(o + 1) * &v(o + 2));
            vec![&casimir(0) - &casimir(3)]
        }
        (Series::A, 2) => {
            let n = 16;
            let x = sl3_matrix(n, 0);
            let y = sl3_matrix(n, 8);
            vec![&trace_power(&x, 2) - &trace_power(&y, 2), &trace_power(&x, 3) - &trace_power(&y, 3)]
        }
        _ => {
            return Err(Error::UnsupportedType { given: t.to_string(), supported: GRAPH_IDEAL_TYPES.to_string() });
        }
    };
    IdealPresentation::new(GradedRing::standard(2 * dim_of_lie_algebra(t)?), gens)
}

/// Koszul-engine table of the graph ideal of `t` through internal degree
/// `j_max`.
pub fn engine_table(t: CartanType, j_max: usize) -> Result<BigradedTable> {
    let algebra = GradedQuotientAlgebra::new(graph_ideal(t)?, j_max);
    let mut table = koszul::tor_table(&algebra, j_max)?;
    table.source = Source::new("engine").with("type", t).with("jmax", j_max);
    Ok(table)
}

fn dim_of_lie_algebra(t: CartanType) -> Result<usize> {
    match (t.series, t.rank) {
        (Series::Torus, r) => Ok(r),
        (Series::A, n) => Ok(n * (n + 2)),
        _ => Err(Error::UnsupportedType { given: t.to_string(), supported: GRAPH_IDEAL_TYPES.to_string() }),
    }
}

/// Traceless `3x3` matrix over variables `offset..offset + 8`.
fn sl3_matrix(nvars: usize, offset: usize) -> [[Poly; 3]; 3] {
    let v = |k: usize| Poly::var(nvars, offset + k);
    let x33 = &(-&v(0)) - &v(4);
    [[v(0), v(1), v(2)], [v(3), v(4), v(5)], [v(6), v(7), x33]]
}

fn trace_power(m: &[[Poly; 3]; 3], power: u32) -> Poly {
    let nvars = m[0][0].nvars();
    let mat_mul = |a: &[[Poly; 3]; 3], b: &[[Poly; 3]; 3]| -> [[Poly; 3]; 3] {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(Poly::zero(nvars), |acc, k| &acc + &(&a[i][k] * &b[k][j]))
            })
        })
    };
    let mut acc = m.clone();
    for _ in 1..power {
        acc = mat_mul(&acc, m);
    }
    (0..3).fold(Poly::zero(nvars), |s, i| &s + &acc[i][i])
}

/// Rank of the group of characters of `G x G` trivial on the diagonal,
/// i.e. the number of free exterior generators in row `i = 0`.
pub fn dlog_row_rank(t: CartanType) -> usize {
    if t.is_torus() {
        t.rank
    } else {
        0
    }
}
