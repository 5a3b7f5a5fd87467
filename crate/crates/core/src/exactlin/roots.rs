//! Aberth–Ehrlich simultaneous iteration for all complex roots of a rational polynomial.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::UniPoly;
use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 2000;

/// A point of `ℂⁿ` together with the residual it was accepted with.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoint {
    pub coordinates: Vec<Complex64>,
    pub residual: f64,
}

impl ComplexPoint {
    pub fn new(coordinates: Vec<Complex64>, residual: f64) -> Self {
        Self { coordinates, residual }
    }

    pub fn dim(&self) -> usize {
        self.coordinates.len()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.coordinates.iter().map(Complex64::conj).collect(), self.residual)
    }

    pub fn norm(&self) -> f64 {
        self.coordinates.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
    }

    pub fn distance(&self, other: &[Complex64]) -> f64 {
        self.coordinates
            .iter()
            .zip(other)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// All complex roots of `p` with multiplicity.
///
/// Exact zero roots are split off first. Every returned root has scaled residual
/// `|p(z)| / Σ|aᵢ||z|ⁱ ≤ tol`; the starting circle is rotated by an angle drawn
/// from `seed`, so results are reproducible.
pub fn complex_roots(p: &UniPoly, tol: f64, seed: u64) -> Result<Vec<ComplexPoint>> {
    if p.is_zero() {
        return Err(Error::Dimension("roots of the zero polynomial".into()));
    }
    let coeffs = p.coeffs();
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut roots: Vec<ComplexPoint> = (0..zeros)
        .map(|_| ComplexPoint::new(vec![Complex64::zero()], 0.0))
        .collect();

    let lead = p.leading().unwrap();
    let monic: Vec<f64> = coeffs[zeros..]
        .iter()
        .map(|c| (c / lead).to_f64().unwrap_or(f64::NAN))
        .collect();
    if monic.iter().any(|c| !c.is_finite()) {
        return Err(Error::Dimension(
            "polynomial coefficients overflow double precision".into(),
        ));
    }
    let deg = monic.len() - 1;
    if deg == 0 {
        return Ok(roots);
    }

    let found = aberth(&monic, seed)?;
    for z in found {
        let residual = scaled_residual(&monic, z);
        if residual > tol {
            return Err(Error::NonConvergence {
                iterations: MAX_ITERATIONS,
                residual,
            });
        }
        roots.push(ComplexPoint::new(vec![z], residual));
    }
    roots.sort_by(|a, b| {
        let (x, y) = (a.coordinates[0], b.coordinates[0]);
        x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im))
    });
    Ok(roots)
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn scaled_residual(c: &[f64], z: Complex64) -> f64 {
    let (p, _) = horner(c, z);
    let r = z.norm();
    let bound = c.iter().rev().fold(0.0, |acc, a| acc * r + a.abs());
    if bound == 0.0 {
        p.norm()
    } else {
        p.norm() / bound
    }
}

fn aberth(c: &[f64], seed: u64) -> Result<Vec<Complex64>> {
    let n = c.len() - 1;
    if n == 1 {
        return Ok(vec![Complex64::new(-c[0], 0.0)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phase: f64 = rng.gen_range(0.0..TAU);
    // Geometric mean of root moduli; the circle is nudged off the real axis.
    let radius = c[0].abs().powf(1.0 / n as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, phase + TAU * (k as f64 + 0.25) / n as f64))
        .collect();

    let mut converged = vec![false; n];
    for _ in 0..MAX_ITERATIONS {
        let mut all = true;
        for k in 0..n {
            if converged[k] {
                continue;
            }
            let (p, dp) = horner(c, z[k]);
            if p.is_zero() {
                converged[k] = true;
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = z[k] - z[j];
                    if d.is_zero() {
                        Complex64::zero()
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                z[k] += Complex64::new(rng.gen_range(-1e-3..1e-3), rng.gen_range(-1e-3..1e-3));
                all = false;
                continue;
            }
            z[k] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * (1.0 + z[k].norm()) {
                converged[k] = true;
            } else {
                all = false;
            }
        }
        if all {
            return Ok(z);
        }
    }
    // Stagnation at multiple roots is acceptable if the backward error is tiny;
    // the caller checks residuals against its tolerance.
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_roots(p: &UniPoly) -> Vec<Complex64> {
        complex_roots(p, 1e-10, 7)
            .unwrap()
            .into_iter()
            .map(|r| r.coordinates[0])
            .collect()
    }

    #[test]
    fn imaginary_unit() {
        let r = sorted_roots(&UniPoly::from_i64(&[1, 0, 1]));
        assert_eq!(r.len(), 2);
        assert!((r[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((r[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn square_root_of_two() {
        let r = sorted_roots(&UniPoly::from_i64(&[-2, 0, 1]));
        assert!((r[0].re + std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!((r[1].re - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(r.iter().all(|z| z.im.abs() < 1e-12));
    }

    #[test]
    fn cubic_with_zero_root() {
        let r = sorted_roots(&UniPoly::from_i64(&[0, -1, 0, 1]));
        let expect = [-1.0, 0.0, 1.0];
        for (z, e) in r.iter().zip(expect) {
            assert!((z - Complex64::new(e, 0.0)).norm() < 1e-12, "{z} vs {e}");
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let p = UniPoly::from_i64(&[3, -1, 4, 1, -5, 9, 2]);
        let a = complex_roots(&p, 1e-10, 11).unwrap();
        let b = complex_roots(&p, 1e-10, 11).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn multiple_root_has_small_backward_error() {
        // (t - 1)^3
        let r = complex_roots(&UniPoly::from_i64(&[-1, 3, -3, 1]), 1e-10, 3).unwrap();
        assert_eq!(r.len(), 3);
        for z in r {
            assert!((z.coordinates[0] - Complex64::new(1.0, 0.0)).norm() < 1e-4);
        }
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(complex_roots(&UniPoly::zero(), 1e-10, 0).is_err());
    }
}
