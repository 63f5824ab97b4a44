//! Bigraded dimension tables `(i, j) -> dim`.

use std::collections::BTreeMap;
use std::fmt;

/// Irregularity `q` and rank bound `r` of a vanishing strip
/// `0 <= j - i <= q + r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StripParams {
    pub q: usize,
    pub r: usize,
}

impl StripParams {
    pub fn new(q: usize, r: usize) -> Self {
        StripParams { q, r }
    }

    pub fn width(&self) -> usize {
        self.q + self.r
    }
}

/// Where a table came from: the producing command and its parameters, in
/// the order they should be reported.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Source {
    pub command: String,
    pub params: Vec<(String, String)>,
}

impl Source {
    pub fn new(command: impl Into<String>) -> Self {
        Source { command: command.into(), params: Vec::new() }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }
}

/// Finite map `(i, j) -> dim` with zero entries omitted, plus metadata.
///
/// Iteration order is by `j`, then `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedTable {
    // keyed by (j, i) so that iteration follows the document order
    dims: BTreeMap<(usize, usize), usize>,
    pub source: Source,
    pub j_max: Option<usize>,
    pub strip: Option<StripParams>,
    /// Euler characteristic of each Koszul slice, when engine-produced.
    pub checksums: BTreeMap<usize, i64>,
}

impl BigradedTable {
    pub fn new(source: Source) -> Self {
        BigradedTable { source, ..Default::default() }
    }

    pub fn from_entries(source: Source, entries: impl IntoIterator<Item = (usize, usize, usize)>) -> Self {
        let mut t = BigradedTable::new(source);
        for (i, j, d) in entries {
            t.set(i, j, d);
        }
        t
    }

    /// Sets entry `(i, j)`; a zero dimension removes it.
    pub fn set(&mut self, i: usize, j: usize, dim: usize) {
        if dim == 0 {
            self.dims.remove(&(j, i));
        } else {
            self.dims.insert((j, i), dim);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.dims.get(&(j, i)).copied().unwrap_or(0)
    }

    /// Non-zero entries as `(i, j, dim)`, sorted by `(j, i)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.dims.iter().map(|(&(j, i), &d)| (i, j, d))
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total_mass(&self) -> usize {
        self.dims.values().sum()
    }

    /// Largest `j` with a non-zero entry.
    pub fn max_j(&self) -> Option<usize> {
        self.dims.keys().next_back().map(|&(j, _)| j)
    }

    /// Same entries, metadata ignored.
    pub fn same_entries(&self, other: &BigradedTable) -> bool {
        self.dims == other.dims
    }

    /// Copy with every entry of degree `j > j_max` dropped.
    pub fn restricted(&self, j_max: usize) -> BigradedTable {
        let mut t = self.clone();
        t.dims.retain(|&(j, _), _| j <= j_max);
        t.j_max = Some(self.j_max.map_or(j_max, |m| m.min(j_max)));
        t.checksums.retain(|&j, _| j <= j_max);
        t
    }

    /// Entries present in exactly one of the two tables or with different
    /// dimensions, as `(i, j, self_dim, other_dim)`.
    pub fn diff(&self, other: &BigradedTable) -> Vec<(usize, usize, usize, usize)> {
        let mut keys: Vec<(usize, usize)> = self.dims.keys().chain(other.dims.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(j, i)| {
                let (a, b) = (self.get(i, j), other.get(i, j));
                (a != b).then_some((i, j, a, b))
            })
            .collect()
    }
}

impl fmt::Display for BigradedTable {
    /// Triangular grid: one row per `i`, one column per `j`, `.` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j_top = self.j_max.or(self.max_j()).unwrap_or(0);
        let i_top = self.iter().map(|(i, _, _)| i).max().unwrap_or(0).max(j_top);
        let width = self.dims.values().map(|d| d.to_string().len()).max().unwrap_or(1).max(j_top.to_string().len());
        write!(f, "{:>4} |", "i\\j")?;
        for j in 0..=j_top {
            write!(f, " {j:>width$}")?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat(6 + (width + 1) * (j_top + 1)))?;
        for i in 0..=i_top {
            write!(f, "{i:>4} |")?;
            for j in 0..=j_top {
                match self.get(i, j) {
                    0 if j < i => write!(f, " {:>width$}", "")?,
                    0 => write!(f, " {:>width$}", ".")?,
                    d => write!(f, " {d:>width$}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
