//! Univariate polynomial evaluation and interpolation over a [`Gf`].
//!
//! Used by the degree-budget checks: a determinant sampled pointwise is
//! reconstructed by Lagrange interpolation and compared against held-out
//! evaluations.

use crate::error::{Error, Result};
use crate::gf::{Fe, Gf};

/// Evaluate a polynomial given by little-endian coefficients at `x`.
pub fn eval(field: &Gf, coeffs: &[Fe], x: Fe) -> Fe {
    let mut acc = field.zero();
    for &c in coeffs.iter().rev() {
        acc = field.add(field.mul(acc, x), c);
    }
    acc
}

/// Lagrange interpolation through `(x_i, y_i)` pairs with pairwise distinct
/// `x_i`. Returns little-endian coefficients of the unique polynomial of
/// degree < points.len().
pub fn interpolate(field: &Gf, points: &[(Fe, Fe)]) -> Result<Vec<Fe>> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i].0 == points[j].0 {
                return Err(Error::RepeatedPoints);
            }
        }
    }
    let mut coeffs = vec![field.zero(); n];
    // full product prod(x - x_i), then per-node synthetic division
    let mut master = vec![field.one()];
    for &(xi, _) in points {
        let mut next = vec![field.zero(); master.len() + 1];
        for (d, &c) in master.iter().enumerate() {
            next[d + 1] = field.add(next[d + 1], c);
            next[d] = field.add(next[d], field.mul(c, field.neg(xi)));
        }
        master = next;
    }
    for &(xi, yi) in points {
        // basis_i = master / (x - xi), by synthetic division
        let mut basis = vec![field.zero(); n];
        let mut carry = field.zero();
        for d in (0..n).rev() {
            carry = field.add(master[d + 1], field.mul(carry, xi));
            basis[d] = carry;
        }
        let denom = eval(field, &basis, xi);
        let scale = field.mul(yi, field.inv(denom)?);
        for d in 0..n {
            coeffs[d] = field.add(coeffs[d], field.mul(basis[d], scale));
        }
    }
    Ok(coeffs)
}

/// Degree of a coefficient vector, ignoring trailing zeros.
pub fn degree(field: &Gf, coeffs: &[Fe]) -> Option<usize> {
    coeffs.iter().rposition(|&c| c != field.zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;

    #[test]
    fn interpolation_recovers_polynomial() {
        let field = Gf::prime(of_size()).unwrap();
        let mut rng = StdRng::seed_from_u64(11);
        for deg in [0usize, 1, 3, 7, 20] {
            let coeffs: Vec<Fe> = (0..=deg)
                .map(|_| Fe(rng.gen_range(0..field.q())))
                .collect();
            let pts: Vec<(Fe, Fe)> = (0..=deg as u64)
                .map(|x| (Fe(x), eval(&field, &coeffs, Fe(x))))
                .collect();
            let got = interpolate(&field, &pts).unwrap();
            // compare as functions on fresh points
            for x in 1000..1010u64 {
                assert_eq!(
                    eval(&field, &got, Fe(x)),
                    eval(&field, &coeffs, Fe(x))
                );
            }
        }
    }

    #[test]
    fn repeated_node_is_an_error() {
        let field = Gf::prime(7).unwrap();
        let pts = [(Fe(1), Fe(2)), (Fe(1), Fe(3))];
        assert_eq!(interpolate(&field, &pts), Err(Error::RepeatedPoints));
    }

    fn of_size() -> u64 {
        crate::gf::smallest_prime_above(1 << 20)
    }
}
