//! Smooth complete toric varieties and Chow groups of open unions of orbits.
//!
//! For a smooth complete fan `Σ` and a set `R` of rays, `X_0` is the
//! complement in `X(Σ)` of the divisors `D_ρ`, `ρ ∈ R`. With rational
//! coefficients, `A^i(X_0)` is the cokernel of
//! `⊕_{ρ ∈ R} A^{i-1}(D_ρ) -> A^i(X)`.
//!
//! `A^i(X)` is generated by the orbit closures `V(σ)`, `σ ∈ Σ(i)`, subject
//! to `Σ_{σ ⊃ τ} <m, n_{σ,τ}> [V(σ)] = 0` for every `τ ∈ Σ(i-1)` and
//! `m ∈ τ^⊥`. For a smooth fan `σ = τ + ρ` and the lattice normal
//! `n_{σ,τ}` is the image of the ray generator `v_ρ` in `N / N_τ`; as `m`
//! vanishes on `N_τ` the coefficient is simply `<m, v_ρ>`.
//!
//! The image of `A^{i-1}(D_ρ)` in `A^i(X)` is spanned by the classes
//! `[V(σ)]` with `ρ ∈ σ`: the orbit closures inside `D_ρ` are exactly the
//! `V(σ)` for cones `σ` containing `ρ`, and these generate the Chow groups
//! of the toric variety `D_ρ`. Removing `ρ` therefore amounts to adding one
//! unit relation for each such generator.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{self, RatMatrix, Rational};
use crate::gralg::binomial;
use crate::table::{BigradedTable, Source};

/// Rays and maximal cones of a fan in `N = Z^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanIssue {
    RayDimension { ray: usize, len: usize },
    ZeroRay { ray: usize },
    NonPrimitive { ray: usize },
    DuplicateRay { ray: usize, first: usize },
    UnusedRay { ray: usize },
    BadCone { cone: usize, reason: String },
    NotSmooth { cone: usize, det: i128 },
    FacetMultiplicity { facet: Vec<usize>, cones: Vec<usize> },
    Overlap { facet: Vec<usize>, cones: Vec<usize> },
    Euler { found: i64, expected: i64 },
    CoveringDegree { degree: usize },
}

impl fmt::Display for FanIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanIssue::RayDimension { ray, len } => write!(f, "ray {ray} has {len} coordinates"),
            FanIssue::ZeroRay { ray } => write!(f, "ray {ray} is zero"),
            FanIssue::NonPrimitive { ray } => write!(f, "ray {ray} is not primitive"),
            FanIssue::DuplicateRay { ray, first } => write!(f, "ray {ray} repeats ray {first}"),
            FanIssue::UnusedRay { ray } => write!(f, "ray {ray} lies in no maximal cone"),
            FanIssue::BadCone { cone, reason } => write!(f, "cone {cone}: {reason}"),
            FanIssue::NotSmooth { cone, det } => write!(f, "cone {cone} has determinant {det}, not +-1"),
            FanIssue::FacetMultiplicity { facet, cones } => {
                write!(f, "facet {facet:?} lies in {} maximal cones {cones:?}, expected 2", cones.len())
            }
            FanIssue::Overlap { facet, cones } => {
                write!(f, "cones {cones:?} lie on the same side of their common facet {facet:?}")
            }
            FanIssue::Euler { found, expected } => {
                write!(f, "alternating cone count {found}, expected {expected} for a complete fan")
            }
            FanIssue::CoveringDegree { degree } => {
                write!(f, "a generic point lies in {degree} maximal cones, expected 1")
            }
        }
    }
}

/// Diagnostics from [`validate`]. Empty means the fan is smooth and complete.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<FanIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return writeln!(f, "valid");
        }
        for issue in &self.issues {
            writeln!(f, "{issue}")?;
        }
        Ok(())
    }
}

impl Fan {
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Self {
        Fan { dim, rays, max_cones }
    }

    /// Fan of `P^n`: rays `e_1..e_n, -(e_1+...+e_n)`, every `n`-subset a cone.
    pub fn projective_space(n: usize) -> Fan {
        let mut rays: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        rays.push(vec![-1; n]);
        let max_cones = (0..=n).rev().map(|skip| (0..=n).filter(|&r| r != skip).collect()).collect();
        Fan { dim: n, rays, max_cones }
    }

    /// Hirzebruch surface `F_a`: rays `(1,0), (0,1), (-1,a), (0,-1)`.
    pub fn hirzebruch(a: i64) -> Fan {
        Fan {
            dim: 2,
            rays: vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
            max_cones: vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        }
    }

    /// Fan of the product variety.
    pub fn product(&self, other: &Fan) -> Fan {
        let dim = self.dim + other.dim;
        let mut rays: Vec<Vec<i64>> = self
            .rays
            .iter()
            .map(|r| r.iter().copied().chain(std::iter::repeat_n(0, other.dim)).collect())
            .collect();
        rays.extend(other.rays.iter().map(|r| std::iter::repeat_n(0, self.dim).chain(r.iter().copied()).collect()));
        let shift = self.rays.len();
        let mut max_cones = Vec::new();
        for a in &self.max_cones {
            for b in &other.max_cones {
                max_cones.push(a.iter().copied().chain(b.iter().map(|&r| r + shift)).collect());
            }
        }
        Fan { dim, rays, max_cones }
    }
}

/// Exact determinant of a small integer matrix (fraction-free Bareiss).
fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    &m[n - 1][n - 1] * sign
}

fn ray_matrix(rays: &[Vec<i64>], cone: &[usize]) -> Vec<Vec<BigInt>> {
    // columns are the rays of the cone
    let n = cone.len();
    (0..n).map(|row| cone.iter().map(|&r| BigInt::from(rays[r][row])).collect()).collect()
}

/// Coordinates of `p` in the basis given by the rays of `cone`, via Cramer.
fn cone_coordinates(rays: &[Vec<i64>], cone: &[usize], p: &[BigInt]) -> Vec<Rational> {
    let base = ray_matrix(rays, cone);
    let d = det(base.clone());
    (0..cone.len())
        .map(|col| {
            let mut m = base.clone();
            for (row, val) in p.iter().enumerate() {
                m[row][col] = val.clone();
            }
            Rational::new(det(m), d.clone())
        })
        .collect()
}

fn faces_of_size(cones: &[Vec<usize>], k: usize) -> Vec<Vec<usize>> {
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for cone in cones {
        for subset in crate::koszul::subsets(cone.len(), k) {
            out.insert(subset.iter().map(|&i| cone[i]).collect());
        }
    }
    out.into_iter().collect()
}

/// Checks primitivity, smoothness and completeness.
///
/// Completeness is certified by three conditions: every codimension-one
/// face lies in exactly two maximal cones, those two cones lie on opposite
/// sides of it, and a generic point lies in exactly one maximal cone. The
/// alternating cone count `Σ_k (-1)^k #Σ(k) = (-1)^n` of a triangulated
/// sphere is checked as well.
pub fn validate(f: &Fan) -> ValidationReport {
    let mut issues = Vec::new();
    let n = f.dim;
    let mut seen: HashMap<&[i64], usize> = HashMap::new();
    for (i, ray) in f.rays.iter().enumerate() {
        if ray.len() != n {
            issues.push(FanIssue::RayDimension { ray: i, len: ray.len() });
            continue;
        }
        let g = ray.iter().fold(0i64, |acc, &c| acc.gcd(&c));
        if g == 0 {
            issues.push(FanIssue::ZeroRay { ray: i });
        } else if g != 1 {
            issues.push(FanIssue::NonPrimitive { ray: i });
        }
        if let Some(&first) = seen.get(ray.as_slice()) {
            issues.push(FanIssue::DuplicateRay { ray: i, first });
        } else {
            seen.insert(ray, i);
        }
    }
    if !issues.is_empty() {
        return ValidationReport { issues };
    }

    let mut cones: Vec<Vec<usize>> = Vec::new();
    for (c, cone) in f.max_cones.iter().enumerate() {
        let mut sorted = cone.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let reason = if sorted.len() != cone.len() {
            Some("repeated ray".to_string())
        } else if cone.len() != n {
            Some(format!("has {} rays, expected {n}", cone.len()))
        } else if let Some(&r) = cone.iter().find(|&&r| r >= f.rays.len()) {
            Some(format!("ray index {r} out of range"))
        } else {
            None
        };
        if let Some(reason) = reason {
            issues.push(FanIssue::BadCone { cone: c, reason });
            continue;
        }
        let d = det(ray_matrix(&f.rays, &sorted));
        if d.abs() != BigInt::from(1) {
            issues.push(FanIssue::NotSmooth { cone: c, det: i128::try_from(&d).unwrap_or(i128::MAX) });
        }
        cones.push(sorted);
    }
    if !issues.is_empty() {
        return ValidationReport { issues };
    }
    let mut used = vec![false; f.rays.len()];
    for cone in &cones {
        for &r in cone {
            used[r] = true;
        }
    }
    issues.extend(used.iter().enumerate().filter(|(_, &u)| !u).map(|(ray, _)| FanIssue::UnusedRay { ray }));

    if n == 0 {
        if cones.len() != 1 {
            issues.push(FanIssue::CoveringDegree { degree: cones.len() });
        }
        return ValidationReport { issues };
    }

    // facets of maximal cones
    let mut facet_cones: std::collections::BTreeMap<Vec<usize>, Vec<usize>> = Default::default();
    for (c, cone) in cones.iter().enumerate() {
        for skip in 0..n {
            let facet: Vec<usize> = cone.iter().enumerate().filter(|&(t, _)| t != skip).map(|(_, &r)| r).collect();
            facet_cones.entry(facet).or_default().push(c);
        }
    }
    for (facet, owners) in &facet_cones {
        if owners.len() != 2 {
            issues.push(FanIssue::FacetMultiplicity { facet: facet.clone(), cones: owners.clone() });
            continue;
        }
        // the extra rays must lie on opposite sides of span(facet)
        let side = |c: usize| {
            let extra = cones[c].iter().find(|r| !facet.contains(r)).copied().expect("facet has n-1 rays");
            let mut cols = facet.clone();
            cols.push(extra);
            det(ray_matrix(&f.rays, &cols)).signum()
        };
        if side(owners[0]) == side(owners[1]) {
            issues.push(FanIssue::Overlap { facet: facet.clone(), cones: owners.clone() });
        }
    }

    let counts: Vec<usize> = (0..=n).map(|k| faces_of_size(&cones, k).len()).collect();
    let euler: i64 = counts.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
    let expected = if n.is_multiple_of(2) { 1 } else { -1 };
    if euler != expected {
        issues.push(FanIssue::Euler { found: euler, expected });
    }

    if issues.is_empty() {
        let degree = covering_degree(&f.rays, &cones, n);
        if degree != 1 {
            issues.push(FanIssue::CoveringDegree { degree });
        }
    }
    ValidationReport { issues }
}

/// Number of maximal cones containing a point off every cone wall. Points
/// are taken on the moment curve `(1, t, t^2, ...)` with alternating signs,
/// which meets each wall in finitely many points.
fn covering_degree(rays: &[Vec<i64>], cones: &[Vec<usize>], n: usize) -> usize {
    for t in 1i64.. {
        for sign in [1i64, -1] {
            let p: Vec<BigInt> = (0..n)
                .map(|k| BigInt::from(t).pow(k as u32) * BigInt::from(if k % 2 == 0 { sign } else { 1 }))
                .collect();
            let coords: Vec<Vec<Rational>> = cones.iter().map(|c| cone_coordinates(rays, c, &p)).collect();
            if coords.iter().any(|cs| cs.iter().any(Zero::is_zero)) {
                continue;
            }
            return coords.iter().filter(|cs| cs.iter().all(Signed::is_positive)).count();
        }
    }
    unreachable!("the moment curve leaves every wall")
}

/// A fan that passed [`validate`], with its cones listed by dimension.
#[derive(Clone, Debug)]
pub struct ValidatedFan {
    fan: Fan,
    cones: Vec<Vec<Vec<usize>>>,
    cone_index: Vec<HashMap<Vec<usize>, usize>>,
}

impl ValidatedFan {
    pub fn new(fan: Fan) -> Result<Self> {
        let report = validate(&fan);
        if !report.is_valid() {
            return Err(Error::InvalidFan(report.to_string()));
        }
        let max: Vec<Vec<usize>> = fan
            .max_cones
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort_unstable();
                s
            })
            .collect();
        let cones: Vec<Vec<Vec<usize>>> = (0..=fan.dim).map(|k| faces_of_size(&max, k)).collect();
        let cone_index = cones
            .iter()
            .map(|list| list.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect())
            .collect();
        Ok(ValidatedFan { fan, cones, cone_index })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn dim(&self) -> usize {
        self.fan.dim
    }

    /// `Σ(k)`: cones spanned by `k` rays, as sorted ray-index lists.
    pub fn cones(&self, k: usize) -> &[Vec<usize>] {
        &self.cones[k]
    }

    /// `f_k = #Σ(k)` for `k = 0..=n`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.cones.iter().map(Vec::len).collect()
    }
}

/// `h_i = Σ_k (-1)^{k-i} C(k, i) #Σ(n-k)`, the even Betti numbers of `X`.
pub fn h_vector(f: &ValidatedFan) -> Vec<usize> {
    let n = f.dim();
    let fv = f.f_vector();
    (0..=n)
        .map(|i| {
            let h: i128 = (i..=n)
                .map(|k| {
                    let term = binomial(k as u64, i as u64) as i128 * fv[n - k] as i128;
                    if (k - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            usize::try_from(h).expect("h-vector of a complete fan is non-negative")
        })
        .collect()
}

/// Presentation of `A^i(X_0)`: generators are the cones of `Σ(i)`, rows are
/// rational-equivalence relations followed by one unit row per generator
/// whose cone meets a removed ray.
#[derive(Clone, Debug)]
pub struct ChowPresentation {
    pub codim: usize,
    pub generators: Vec<Vec<usize>>,
    pub relations: RatMatrix,
    pub removed_rays: BTreeSet<usize>,
}

impl ChowPresentation {
    pub fn dim(&self) -> usize {
        exactlin::cokernel_dim(&self.relations)
    }
}

pub fn chow_presentation(f: &ValidatedFan, i: usize, removed: &BTreeSet<usize>) -> Result<ChowPresentation> {
    let n = f.dim();
    if i > n {
        return Err(Error::OutOfRange { what: "codimension", value: i as i64, range: format!("0..={n}") });
    }
    if let Some(&r) = removed.iter().find(|&&r| r >= f.fan.rays.len()) {
        return Err(Error::OutOfRange { what: "removed ray", value: r as i64, range: format!("0..{}", f.fan.rays.len()) });
    }
    let generators = f.cones(i).to_vec();
    let index = &f.cone_index[i];
    let mut rows: Vec<exactlin::SparseRow> = Vec::new();
    if i >= 1 {
        for tau in f.cones(i - 1) {
            // τ^⊥ over Q
            let span = RatMatrix::from_dense_i64(
                &tau.iter().map(|&r| f.fan.rays[r].clone()).collect::<Vec<_>>(),
            );
            let span = if tau.is_empty() { RatMatrix::zeros(0, n) } else { span };
            let perp = exactlin::kernel_basis(&span);
            let cofaces: Vec<(usize, usize)> = (0..f.fan.rays.len())
                .filter(|r| !tau.contains(r))
                .filter_map(|r| {
                    let mut sigma = tau.clone();
                    sigma.push(r);
                    sigma.sort_unstable();
                    index.get(&sigma).map(|&g| (g, r))
                })
                .collect();
            for m in &perp {
                let mut row: exactlin::SparseRow = cofaces
                    .iter()
                    .map(|&(g, r)| {
                        let pairing: Rational = m.iter().zip(&f.fan.rays[r]).map(|(a, &b)| a * Rational::from_integer(b.into())).sum();
                        (g, pairing)
                    })
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                row.sort_by_key(|(g, _)| *g);
                rows.push(row);
            }
        }
    }
    for (g, sigma) in generators.iter().enumerate() {
        if sigma.iter().any(|r| removed.contains(r)) {
            rows.push(vec![(g, Rational::from_integer(1.into()))]);
        }
    }
    let relations = RatMatrix::from_sparse_rows(generators.len(), rows)?;
    Ok(ChowPresentation { codim: i, generators, relations, removed_rays: removed.clone() })
}

/// `dim_Q A^i(X_0)` where `X_0` omits the divisors of the `removed` rays.
pub fn chow_dim(f: &ValidatedFan, i: usize, removed: &BTreeSet<usize>) -> Result<usize> {
    Ok(chow_presentation(f, i, removed)?.dim())
}

/// Diagonal table `(i, i) -> dim A^i(X_0)` for all codimensions.
pub fn chow_table(f: &ValidatedFan, removed: &BTreeSet<usize>) -> Result<BigradedTable> {
    let removed_list: Vec<String> = removed.iter().map(usize::to_string).collect();
    let mut t = BigradedTable::new(Source::new("toric").with("remove", removed_list.join(",")));
    for i in 0..=f.dim() {
        t.set(i, i, chow_dim(f, i, removed)?);
    }
    t.j_max = Some(f.dim());
    Ok(t)
}

/// Parses the fan text format: `dim n`, then `ray c1 .. cn` and
/// `cone i1 .. in` lines (0-based ray indices); `#` starts a comment.
pub fn parse_fan(text: &str) -> Result<Fan> {
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut dim: Option<usize> = None;
    let mut rays = Vec::new();
    let mut cones = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().expect("non-empty line");
        let rest: Vec<&str> = words.collect();
        match (keyword, dim) {
            ("dim", None) => {
                if rest.len() != 1 {
                    return Err(err(line_no, "`dim` takes one value".into()));
                }
                dim = Some(rest[0].parse().map_err(|_| err(line_no, format!("bad dimension `{}`", rest[0])))?);
            }
            ("dim", Some(_)) => return Err(err(line_no, "repeated `dim`".into())),
            (_, None) => return Err(err(line_no, "expected `dim n` first".into())),
            ("ray", Some(n)) => {
                if rest.len() != n {
                    return Err(err(line_no, format!("ray needs {n} coordinates, found {}", rest.len())));
                }
                let coords = rest
                    .iter()
                    .map(|w| parse_int(w).ok_or_else(|| err(line_no, format!("bad integer `{w}`"))))
                    .collect::<Result<Vec<i64>>>()?;
                rays.push(coords);
            }
            ("cone", Some(_)) => {
                let idx = rest
                    .iter()
                    .map(|w| w.parse::<usize>().map_err(|_| err(line_no, format!("bad ray index `{w}`"))))
                    .collect::<Result<Vec<usize>>>()?;
                cones.push(idx);
            }
            (other, Some(_)) => return Err(err(line_no, format!("unknown keyword `{other}`"))),
        }
    }
    let dim = dim.ok_or_else(|| err(0, "missing `dim`".into()))?;
    Ok(Fan { dim, rays, max_cones: cones })
}

// Only optionally signed decimal integers; rejects `1.0`, `1e3`, `+-1`.
fn parse_int(w: &str) -> Option<i64> {
    let digits = w.strip_prefix('-').or_else(|| w.strip_prefix('+')).unwrap_or(w);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    w.parse().ok()
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.dim)?;
        for r in &self.rays {
            let cs: Vec<String> = r.iter().map(i64::to_string).collect();
            writeln!(f, "ray {}", cs.join(" "))?;
        }
        for c in &self.max_cones {
            let cs: Vec<String> = c.iter().map(usize::to_string).collect();
            writeln!(f, "cone {}", cs.join(" "))?;
        }
        Ok(())
    }
}
