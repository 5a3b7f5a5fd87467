use std::fmt;

use num_traits::{Signed, Zero};

use super::{Rational, RationalMatrix};

/// Sylvester inertia of a real symmetric form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct InertiaTriple {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl InertiaTriple {
    pub fn new(n_plus: usize, n_zero: usize, n_minus: usize) -> Self {
        Self {
            n_plus,
            n_zero,
            n_minus,
        }
    }

    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.n_zero == 0
    }
}

impl fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_zero, self.n_minus)
    }
}

/// Exact inertia by symmetric Gaussian elimination.
///
/// Nonzero diagonal entries are used as 1×1 pivots. When every remaining
/// diagonal entry vanishes but some off-diagonal entry `b` does not, the
/// hyperbolic block `[[0, b], [b, 0]]` is split off and contributes one
/// positive and one negative square.
///
/// Panics if `s` is not symmetric.
pub fn inertia(s: &RationalMatrix) -> InertiaTriple {
    assert!(s.is_symmetric(), "inertia of a non-symmetric matrix");
    let n = s.rows();
    let mut a: Vec<Vec<Rational>> = s.to_rows();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = InertiaTriple::default();

    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.remove(pos);
            let d = a[p][p].clone();
            if d.is_positive() {
                out.n_plus += 1;
            } else {
                out.n_minus += 1;
            }
            let col: Vec<Rational> = active.iter().map(|&j| a[j][p].clone()).collect();
            for (x, &j) in active.iter().enumerate() {
                if col[x].is_zero() {
                    continue;
                }
                let f = &col[x] / &d;
                for (y, &k) in active.iter().enumerate() {
                    if !col[y].is_zero() {
                        let v = &a[j][k] - &f * &col[y];
                        a[j][k] = v;
                    }
                }
            }
            continue;
        }

        let pair = active
            .iter()
            .enumerate()
            .find_map(|(x, &i)| active[x + 1..].iter().find(|&&j| !a[i][j].is_zero()).map(|&j| (i, j)));
        let Some((i, j)) = pair else {
            out.n_zero += active.len();
            break;
        };
        out.n_plus += 1;
        out.n_minus += 1;
        let b = a[i][j].clone();
        active.retain(|&k| k != i && k != j);
        let ci: Vec<Rational> = active.iter().map(|&k| a[k][i].clone()).collect();
        let cj: Vec<Rational> = active.iter().map(|&k| a[k][j].clone()).collect();
        for (x, &k) in active.iter().enumerate() {
            for (y, &l) in active.iter().enumerate() {
                let corr = &ci[x] * &cj[y] + &cj[x] * &ci[y];
                if !corr.is_zero() {
                    let v = &a[k][l] - corr / &b;
                    a[k][l] = v;
                }
            }
        }
    }
    out
}
