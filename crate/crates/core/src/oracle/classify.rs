//! Orbit bookkeeping for complex zeros of an invariant form.
//!
//! A zero `p` contributes to the real quotient when its orbit is closed under
//! conjugation, i.e. `p̄ = g·p` for some witness `g`. Then `p` is real in the
//! coordinates of `ℝⁿ_{g+} ⊕ iℝⁿ_{g−}`, and the change to those coordinates
//! multiplies the Jacobian by `(−1)^k`, `k = dim ℝⁿ_{g−}`.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactlin::{ComplexPoint, RationalMatrix};
use crate::group::{Element, MatrixAction};
use crate::poly::{OneForm, Poly};

/// `ω̃`-zero with its orbit data.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassifiedPoint {
    pub point: ComplexPoint,
    /// Index of the first point of the `G`-orbit.
    pub orbit_id: usize,
    pub isotropy: Vec<Element>,
    /// Every isotropy element has determinant 1.
    pub isotropy_in_det_kernel: bool,
    pub real_in_closure: bool,
    pub witness: Option<Element>,
    pub stratum_k: Option<usize>,
    /// Sign of `(−1)^k 𝒥(p)`, for points real in the closure.
    pub jacobian_sign: Option<i32>,
    pub in_ball: bool,
}

impl ClassifiedPoint {
    /// Contribution of this point's orbit when the point is the orbit representative.
    pub fn contribution(&self) -> i64 {
        match (
            self.in_ball,
            self.real_in_closure,
            self.isotropy_in_det_kernel,
            self.jacobian_sign,
        ) {
            (true, true, true, Some(s)) => s as i64,
            _ => 0,
        }
    }
}

/// `true` below `tol`, `false` above `10·tol`, ambiguous in between.
fn decide(value: f64, tol: f64, what: &str) -> Result<bool> {
    if value <= tol {
        Ok(true)
    } else if value >= 10.0 * tol {
        Ok(false)
    } else {
        Err(Error::AmbiguousClassification(format!(
            "{what}: relative value {value:e} inside the gray zone ({tol:e}, {:e})",
            10.0 * tol
        )))
    }
}

fn apply(g: &[Vec<f64>], z: &[Complex64]) -> Vec<Complex64> {
    g.iter()
        .map(|row| row.iter().zip(z).map(|(a, b)| b * *a).sum())
        .collect()
}

fn float_rows(m: &RationalMatrix) -> Vec<Vec<f64>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
        .collect()
}

/// Classifies `points` (zeros of `omega`) under `action`.
///
/// Distances are relative to `1 + ‖p‖`; the Jacobian test is relative to the
/// absolute-value sum of its terms at `p`.
pub fn classify(
    points: &[ComplexPoint],
    omega: &OneForm,
    action: &MatrixAction,
    tol: f64,
    ball_radius: f64,
) -> Result<Vec<ClassifiedPoint>> {
    let group = action.group();
    let elements = group.elements();
    let mats: Vec<Vec<Vec<f64>>> = action.matrices().iter().map(float_rows).collect();
    let jac: Poly = omega.jacobian_det();
    let n = points.len();

    // orbit structure by union-find on g·p ≈ q
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    let mut isotropy: Vec<Vec<Element>> = vec![Vec::new(); n];
    for (i, p) in points.iter().enumerate() {
        let scale = 1.0 + p.norm();
        for (a, g) in elements.iter().zip(&mats) {
            let gp = apply(g, &p.coordinates);
            if decide(p.distance(&gp) / scale, tol, "isotropy test")? {
                isotropy[i].push(a.clone());
            }
            for (j, q) in points.iter().enumerate() {
                if j != i && decide(q.distance(&gp) / scale, tol, "orbit test")? {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
        for a in &isotropy[i] {
            for b in &isotropy[i] {
                if !isotropy[i].contains(&group.compose(a, b)) {
                    return Err(Error::AmbiguousClassification(format!(
                        "numerical isotropy of point {i} is not a subgroup"
                    )));
                }
            }
        }
    }

    let mut out = Vec::with_capacity(n);
    for (i, p) in points.iter().enumerate() {
        let scale = 1.0 + p.norm();
        let conj = p.conj();
        let mut witness = None;
        for (a, g) in elements.iter().zip(&mats) {
            let gp = apply(g, &p.coordinates);
            if decide(conj.distance(&gp) / scale, tol, "conjugation test")? {
                witness = Some(a.clone());
                break;
            }
        }
        let (stratum_k, jacobian_sign) = match &witness {
            Some(w) => {
                let k = action.pm_eigenspaces(w).1.len();
                let (value, jscale) = jac.eval_complex_with_scale(&p.coordinates);
                let signed = if k.is_multiple_of(2) { value } else { -value };
                let jscale = jscale.max(f64::MIN_POSITIVE);
                if !decide(signed.im.abs() / jscale, tol, "imaginary part of the Jacobian")? {
                    return Err(Error::AmbiguousClassification(format!(
                        "Jacobian at point {i} is not real"
                    )));
                }
                if decide(signed.re.abs() / jscale, tol, "Jacobian sign")? {
                    return Err(Error::AmbiguousClassification(format!(
                        "Jacobian vanishes at point {i}"
                    )));
                }
                (Some(k), Some(if signed.re > 0.0 { 1 } else { -1 }))
            }
            None => (None, None),
        };
        let iso = isotropy[i].clone();
        out.push(ClassifiedPoint {
            orbit_id: find(&mut parent, i),
            isotropy_in_det_kernel: iso.iter().all(|a| action.det(a) == 1),
            isotropy: iso,
            real_in_closure: witness.is_some(),
            witness,
            stratum_k,
            jacobian_sign,
            in_ball: p.norm() <= ball_radius,
            point: p.clone(),
        });
    }
    Ok(out)
}

/// `Σ` over orbit representatives of their contributions.
pub fn conservation_sum(classified: &[ClassifiedPoint]) -> i64 {
    classified
        .iter()
        .enumerate()
        .filter(|(i, c)| c.orbit_id == *i)
        .map(|(_, c)| c.contribution())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::solve::singular_points;
    use crate::poly::default_names;

    fn form(f: &str, n: usize) -> OneForm {
        OneForm::differential(&Poly::parse(f, &default_names(n)).unwrap())
    }

    fn total(f: &str, n: usize, action: &MatrixAction) -> (i64, Vec<ClassifiedPoint>) {
        let w = form(f, n);
        let pts = singular_points(&w, 5, 1e-10).unwrap();
        let c = classify(&pts, &w, action, 1e-6, 1.0).unwrap();
        (conservation_sum(&c), c)
    }

    #[test]
    fn antipodal_line() {
        let a = MatrixAction::antipodal(1);
        let (s, c) = total("21/20*x1^2", 1, &a);
        assert_eq!(s, 0);
        assert_eq!(c[0].isotropy.len(), 2);
        assert!(!c[0].isotropy_in_det_kernel);

        let (s, c) = total("x1^4 - 1/20*x1^2", 1, &a);
        assert_eq!(s, 1);
        assert_eq!(c.len(), 3);
        let orbits: std::collections::BTreeSet<usize> = c.iter().map(|p| p.orbit_id).collect();
        assert_eq!(orbits.len(), 2);
    }

    #[test]
    fn hyperbolic_plane() {
        let (s, c) = total("x1^2 - x2^2", 2, &MatrixAction::antipodal(2));
        assert_eq!(s, -1);
        assert!(c[0].isotropy_in_det_kernel);
        assert_eq!(c[0].stratum_k, Some(0));
    }

    #[test]
    fn imaginary_pairs_use_the_stratum_sign() {
        // zeros ±i/√40 lie on iℝ, the minus space of the antipodal map
        let (s, c) = total("x1^4 + 1/20*x1^2", 1, &MatrixAction::antipodal(1));
        assert_eq!(s, 1);
        let imag = c.iter().find(|p| p.point.coordinates[0].im.abs() > 0.1).unwrap();
        assert_eq!(imag.stratum_k, Some(1));
        assert_eq!(imag.witness, Some(Element(vec![1])));
        // trivial group: the same pair is a conjugate pair and drops out
        let (s, c) = total("x1^4 + 1/20*x1^2", 1, &MatrixAction::trivial(1));
        assert_eq!(s, 1);
        assert_eq!(c.iter().filter(|p| p.real_in_closure).count(), 1);
    }

    #[test]
    fn empty_set_sums_to_zero() {
        assert_eq!(conservation_sum(&[]), 0);
    }

    #[test]
    fn conjugate_points_are_classified_consistently() {
        let w = form("x1^3 + 1/5*x1 + x2^2", 2);
        let a = MatrixAction::trivial(2);
        let pts = singular_points(&w, 9, 1e-10).unwrap();
        let c = classify(&pts, &w, &a, 1e-6, 1.0).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|p| !p.real_in_closure));
        let conj: Vec<ComplexPoint> = pts.iter().map(ComplexPoint::conj).collect();
        let cc = classify(&conj, &w, &a, 1e-6, 1.0).unwrap();
        for (x, y) in c.iter().zip(&cc) {
            assert_eq!(
                (x.real_in_closure, x.jacobian_sign),
                (y.real_in_closure, y.jacobian_sign)
            );
        }
    }
}
