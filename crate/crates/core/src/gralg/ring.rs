use std::cmp::Ordering;

/// Exponent vector of a monomial, one entry per ring variable.
pub type Exponents = Vec<u32>;

/// Polynomial ring over Q with positive integer variable weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedRing {
    var_degrees: Vec<usize>,
}

impl GradedRing {
    /// Ring with `nvars` variables, all of degree 1.
    pub fn standard(nvars: usize) -> Self {
        GradedRing { var_degrees: vec![1; nvars] }
    }

    /// Ring with the given variable weights. Returns `None` if a weight is 0.
    pub fn weighted(var_degrees: Vec<usize>) -> Option<Self> {
        if var_degrees.contains(&0) {
            return None;
        }
        Some(GradedRing { var_degrees })
    }

    pub fn nvars(&self) -> usize {
        self.var_degrees.len()
    }

    pub fn var_degrees(&self) -> &[usize] {
        &self.var_degrees
    }

    pub fn is_standard(&self) -> bool {
        self.var_degrees.iter().all(|&d| d == 1)
    }

    pub fn degree_of(&self, exps: &[u32]) -> usize {
        exps.iter().zip(&self.var_degrees).map(|(&e, &w)| e as usize * w).sum()
    }

    /// All monomials of weighted degree `d`, largest first in graded
    /// reverse lexicographic order.
    pub fn monomial_basis(&self, d: usize) -> Vec<Exponents> {
        let n = self.nvars();
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(Vec::new());
            }
            return out;
        }
        let mut current = vec![0u32; n];
        fill(&self.var_degrees, 0, d, &mut current, &mut out);
        out.sort_by(|a, b| grevlex(a, b).reverse());
        out
    }
}

fn fill(weights: &[usize], var: usize, remaining: usize, current: &mut Exponents, out: &mut Vec<Exponents>) {
    if var + 1 == weights.len() {
        if remaining.is_multiple_of(weights[var]) {
            current[var] = (remaining / weights[var]) as u32;
            out.push(current.clone());
            current[var] = 0;
        }
        return;
    }
    let w = weights[var];
    for e in 0..=remaining / w {
        current[var] = e as u32;
        fill(weights, var + 1, remaining - e * w, current, out);
    }
    current[var] = 0;
}

/// Reverse lexicographic comparison of two exponent vectors of equal
/// degree: the one with the smaller exponent in the last differing
/// variable is larger.
pub fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Binomial coefficient as u128; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_variable_quadrics() {
        let ring = GradedRing::standard(2);
        assert_eq!(ring.monomial_basis(2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn odd_degree_unreachable_with_even_weight() {
        let ring = GradedRing::weighted(vec![2]).unwrap();
        assert!(ring.monomial_basis(3).is_empty());
        assert_eq!(ring.monomial_basis(4), vec![vec![2]]);
    }

    #[test]
    fn six_variable_quadrics() {
        assert_eq!(GradedRing::standard(6).monomial_basis(2).len(), 21);
    }

    #[test]
    fn grevlex_three_variables() {
        // x^2 > xy > y^2 > xz > yz > z^2
        let basis = GradedRing::standard(3).monomial_basis(2);
        let expected = vec![
            vec![2, 0, 0],
            vec![1, 1, 0],
            vec![0, 2, 0],
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![0, 0, 2],
        ];
        assert_eq!(basis, expected);
    }

    #[test]
    fn counts_match_binomials() {
        for n in 1..6u64 {
            let ring = GradedRing::standard(n as usize);
            for d in 0..5u64 {
                assert_eq!(ring.monomial_basis(d as usize).len() as u128, binomial(n + d - 1, d));
            }
        }
    }

    #[test]
    fn zero_variables() {
        let ring = GradedRing::standard(0);
        assert_eq!(ring.monomial_basis(0).len(), 1);
        assert!(ring.monomial_basis(1).is_empty());
    }

    #[test]
    fn zero_weight_rejected() {
        assert!(GradedRing::weighted(vec![1, 0]).is_none());
    }
}
