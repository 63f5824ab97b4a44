//! Graded polynomial rings and degree-truncated quotient algebras.
//!
//! Coefficients are rationals. Every presentation handled here is defined
//! over Q, and dimensions of graded pieces do not change under extension
//! of scalars, so the answers are the complex dimensions as well.

mod ideal;
mod poly;
mod quotient;
mod ring;
pub mod text;

pub use ideal::IdealPresentation;
pub use poly::Poly;
pub use quotient::GradedQuotientAlgebra;
pub use ring::{binomial, grevlex, Exponents, GradedRing};

/// Monomials of weighted degree `d`, largest first in grevlex order.
pub fn monomial_basis(ring: &GradedRing, d: usize) -> Vec<Exponents> {
    ring.monomial_basis(d)
}

/// Coefficients of `prod_k (1 - t^{gen_degrees[k]}) / prod_v (1 - t^{var_degrees[v]})`
/// through `t^upto`. This is the Hilbert series of `S / I` when `I` is
/// generated by a regular sequence of the given degrees.
pub fn regular_sequence_hilbert(var_degrees: &[usize], gen_degrees: &[usize], upto: usize) -> Vec<i128> {
    let mut series = vec![0i128; upto + 1];
    series[0] = 1;
    for &w in var_degrees {
        // multiply by 1 / (1 - t^w)
        for d in w..=upto {
            series[d] += series[d - w];
        }
    }
    for &g in gen_degrees {
        // multiply by (1 - t^g)
        for d in (g..=upto).rev() {
            series[d] -= series[d - g];
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hilbert_of_free_ring() {
        assert_eq!(regular_sequence_hilbert(&[1, 1], &[], 3), vec![1, 2, 3, 4]);
    }

    #[test]
    fn hilbert_of_quadric_hypersurface() {
        // (1 - t^2) / (1 - t)^3: 1, 3, 5, 7
        assert_eq!(regular_sequence_hilbert(&[1, 1, 1], &[2], 3), vec![1, 3, 5, 7]);
    }
}
