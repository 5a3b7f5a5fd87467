//! Zeros of a zero-dimensional polynomial system from eigenvalues of a generic
//! multiplication operator on the global quotient.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{char_poly, complex_roots, int, ComplexPoint, RationalMatrix};
use crate::localalg::{quotient_algebra, MonomialOrder};
use crate::poly::OneForm;

const SEPARATING_FORM_TRIES: usize = 12;
const INVERSE_ITERATIONS: usize = 3;
const NEWTON_STEPS: usize = 8;

fn to_complex(m: &RationalMatrix) -> DMatrix<Complex64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        Complex64::new(m.get(i, j).to_f64().unwrap_or(f64::NAN), 0.0)
    })
}

/// Largest residual `|Aᵢ(z)| / Σ|c|·Π max(1, |zⱼ|)^{aⱼ}` over the components.
///
/// Flooring `|zⱼ|` at 1 keeps the measure meaningful for zeros at or near the origin.
pub fn scaled_residual(omega: &OneForm, z: &[Complex64]) -> f64 {
    omega
        .components()
        .iter()
        .map(|a| {
            let v = a.eval_complex(z);
            let s: f64 = a
                .terms()
                .map(|(m, c)| {
                    let size: f64 = m
                        .exponents()
                        .iter()
                        .zip(z)
                        .map(|(&e, zj)| zj.norm().max(1.0).powi(e as i32))
                        .product();
                    c.to_f64().unwrap_or(f64::INFINITY).abs() * size
                })
                .sum();
            if s == 0.0 {
                0.0
            } else {
                v.norm() / s
            }
        })
        .fold(0.0, f64::max)
}

/// All complex zeros of `ω`, each simple.
///
/// A random integer linear form `h` is drawn until the characteristic polynomial of
/// `M_h` is squarefree; multiple zeros make that impossible and are reported as a
/// degenerate perturbation. Coordinates come from Rayleigh quotients of the
/// coordinate multiplication matrices on left eigenvectors of `M_h`, then Newton
/// polishing on the system itself.
pub fn singular_points(omega: &OneForm, seed: u64, tol_root: f64) -> Result<Vec<ComplexPoint>> {
    let algebra = quotient_algebra(omega, MonomialOrder::GlobalDegRevLex)?;
    let n = algebra.dim();
    let nvars = omega.nvars();
    if n == 0 {
        return Ok(Vec::new());
    }
    if nvars == 0 {
        return Ok(vec![ComplexPoint::new(Vec::new(), 0.0)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = None;
    for _ in 0..SEPARATING_FORM_TRIES {
        let coeffs: Vec<i64> = (0..nvars)
            .map(|_| rng.gen_range(1..=9) * if rng.gen() { 1 } else { -1 })
            .collect();
        let mut mh = RationalMatrix::zeros(n, n);
        for (c, m) in coeffs.iter().zip(algebra.mult_matrices()) {
            mh = &mh + &m.scale(&int(*c));
        }
        let p = char_poly(&mh);
        if p.is_squarefree() {
            chosen = Some((mh, p));
            break;
        }
    }
    let (mh, p) = chosen
        .ok_or_else(|| Error::DegeneratePerturbation("no separating linear form: the zeros are not simple".into()))?;
    let roots = complex_roots(&p, tol_root.min(1e-12), seed)?;

    let left = to_complex(&mh.transpose());
    let coords: Vec<DMatrix<Complex64>> = algebra
        .mult_matrices()
        .iter()
        .map(|m| to_complex(&m.transpose()))
        .collect();
    let jac = omega.jacobian_matrix();
    let mut out = Vec::with_capacity(n);
    for r in roots {
        let mu = r.coordinates[0];
        let v = eigenvector(&left, mu)?;
        let norm2: Complex64 = v.dotc(&v);
        let mut z: Vec<Complex64> = coords.iter().map(|m| v.dotc(&(m * &v)) / norm2).collect();
        let mut res = scaled_residual(omega, &z);
        for _ in 0..NEWTON_STEPS {
            if res <= tol_root * 1e-3 {
                break;
            }
            let f = DVector::from_vec(omega.eval_complex(&z));
            let jm = DMatrix::from_fn(nvars, nvars, |i, j| jac[i][j].eval_complex(&z));
            let Some(step) = jm.lu().solve(&f) else { break };
            let cand: Vec<Complex64> = z.iter().zip(step.iter()).map(|(a, b)| a - b).collect();
            let cres = scaled_residual(omega, &cand);
            // a NaN residual also stops the iteration
            if cres.partial_cmp(&res) != Some(std::cmp::Ordering::Less) {
                break;
            }
            z = cand;
            res = cres;
        }
        if res > tol_root {
            return Err(Error::NonConvergence {
                iterations: NEWTON_STEPS,
                residual: res,
            });
        }
        out.push(ComplexPoint::new(z, res));
    }
    Ok(out)
}

/// Inverse iteration on `A − σI` with `σ` slightly off the eigenvalue.
fn eigenvector(a: &DMatrix<Complex64>, mu: Complex64) -> Result<DVector<Complex64>> {
    let n = a.nrows();
    let scale = 1.0 + mu.norm() + a.iter().map(|x| x.norm()).fold(0.0, f64::max);
    for k in 0..6 {
        let shift = mu + Complex64::new(1e-11, 1e-11) * scale * f64::powi(10.0, k);
        let b = a - DMatrix::from_diagonal_element(n, n, shift);
        let lu = b.lu();
        let mut v = DVector::from_element(n, Complex64::new(1.0, 0.3));
        let mut ok = true;
        for _ in 0..INVERSE_ITERATIONS {
            match lu.solve(&v) {
                Some(w) => {
                    let nrm = w.norm();
                    if !nrm.is_finite() || nrm.is_zero() {
                        ok = false;
                        break;
                    }
                    v = w / Complex64::new(nrm, 0.0);
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Ok(v);
        }
    }
    Err(Error::NonConvergence {
        iterations: INVERSE_ITERATIONS,
        residual: f64::INFINITY,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, Poly};

    fn form(f: &str, n: usize) -> OneForm {
        OneForm::differential(&Poly::parse(f, &default_names(n)).unwrap())
    }

    fn sorted_real(points: &[ComplexPoint]) -> Vec<f64> {
        let mut xs: Vec<f64> = points.iter().map(|p| p.coordinates[0].re).collect();
        xs.sort_by(f64::total_cmp);
        xs
    }

    #[test]
    fn one_variable_systems() {
        let p = singular_points(&form("x1^2 + x1", 1), 1, 1e-10).unwrap();
        assert!((p[0].coordinates[0] - Complex64::new(-0.5, 0.0)).norm() < 1e-12);

        let xs = sorted_real(&singular_points(&form("x1^3 - x1", 1), 2, 1e-10).unwrap());
        let a = 1.0 / 3f64.sqrt();
        assert!((xs[0] + a).abs() < 1e-12 && (xs[1] - a).abs() < 1e-12);

        let xs = sorted_real(&singular_points(&form("x1^4 - x1^2", 1), 3, 1e-10).unwrap());
        let b = 1.0 / 2f64.sqrt();
        assert_eq!(xs.len(), 3);
        assert!((xs[0] + b).abs() < 1e-12 && xs[1].abs() < 1e-12 && (xs[2] - b).abs() < 1e-12);
    }

    #[test]
    fn two_variable_system_counts_match_dimension() {
        let w = form("x1^3 - x1 + x2^3 - 2*x2 + x1*x2", 2);
        let pts = singular_points(&w, 7, 1e-10).unwrap();
        assert_eq!(pts.len(), 4);
        for p in &pts {
            assert!(scaled_residual(&w, &p.coordinates) <= 1e-10);
        }
    }

    #[test]
    fn multiple_zero_is_degenerate() {
        let err = singular_points(&form("x1^3", 1), 1, 1e-10).unwrap_err();
        assert!(matches!(err, Error::DegeneratePerturbation(_)));
    }
}
