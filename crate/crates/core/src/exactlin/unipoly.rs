use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{fmt_rational, Rational, RationalMatrix};

/// Univariate polynomial over the rationals, coefficients stored lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.recip();
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &lead_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True when the polynomial has no repeated complex root.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", fmt_rational(&abs))?;
            }
            match i {
                0 => {}
                1 if show_coeff => write!(f, "*t")?,
                1 => write!(f, "t")?,
                _ if show_coeff => write!(f, "*t^{i}")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Exact characteristic polynomial `det(t·I − M)`, monic of degree `dim M`.
///
/// Reduces `M` to upper Hessenberg form by exact similarity transforms and then
/// runs the standard three-term recurrence on the leading principal minors.
pub fn char_poly(m: &RationalMatrix) -> UniPoly {
    assert!(m.is_square(), "characteristic polynomial of non-square matrix");
    let n = m.rows();
    let h = hessenberg(m);

    // p[k] is the characteristic polynomial of the leading k×k block.
    let mut p: Vec<UniPoly> = Vec::with_capacity(n + 1);
    p.push(UniPoly::one());
    for k in 1..=n {
        let diag = h.get(k - 1, k - 1);
        let lin = UniPoly::new(vec![-diag.clone(), Rational::one()]);
        let mut pk = lin.mul(&p[k - 1]);
        let mut prod = Rational::one();
        for i in (1..k).rev() {
            prod *= h.get(i, i - 1);
            if prod.is_zero() {
                break;
            }
            let coeff = &prod * h.get(i - 1, k - 1);
            if !coeff.is_zero() {
                pk = pk.add(&p[i - 1].scale(&-coeff));
            }
        }
        p.push(pk);
    }
    p.pop().unwrap()
}

fn hessenberg(m: &RationalMatrix) -> RationalMatrix {
    let n = m.rows();
    let mut a = m.clone();
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
            continue;
        };
        if piv != k + 1 {
            a.swap_rows(piv, k + 1);
            a.swap_cols(piv, k + 1);
        }
        let pivot = a.get(k + 1, k).clone();
        for i in k + 2..n {
            if a.get(i, k).is_zero() {
                continue;
            }
            let f = a.get(i, k) / &pivot;
            // row_i -= f * row_{k+1}
            for j in 0..n {
                let v = a.get(k + 1, j);
                if !v.is_zero() {
                    let nv = a.get(i, j) - &f * v;
                    a.set(i, j, nv);
                }
            }
            // col_{k+1} += f * col_i
            for r in 0..n {
                let v = a.get(r, i);
                if !v.is_zero() {
                    let nv = a.get(r, k + 1) + &f * v;
                    a.set(r, k + 1, nv);
                }
            }
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    #[test]
    fn char_poly_of_zero() {
        let m = RationalMatrix::from_i64_rows(&[&[0]]);
        assert_eq!(char_poly(&m), UniPoly::t());
    }

    #[test]
    fn char_poly_of_swap() {
        let m = RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(char_poly(&m), UniPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn char_poly_matches_determinant_oracle() {
        let m = RationalMatrix::from_i64_rows(&[&[1, 2, 0, -1], &[3, -1, 4, 2], &[0, 5, 2, 1], &[-2, 0, 1, 3]]);
        let p = char_poly(&m);
        assert_eq!(p.degree(), Some(4));
        for t in -3..=3 {
            let t = rat(t, 1);
            let shifted = &RationalMatrix::identity(4).scale(&t) - &m;
            assert_eq!(p.eval(&t), shifted.determinant());
        }
    }

    #[test]
    fn squarefree_detection() {
        assert!(UniPoly::from_i64(&[-2, 0, 1]).is_squarefree());
        assert!(!UniPoly::from_i64(&[1, -2, 1]).is_squarefree());
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_i64(&[-2, 0, 1]).to_string(), "t^2 - 2");
        assert_eq!(UniPoly::from_i64(&[0, -1, 0, 1]).to_string(), "t^3 - t");
    }
}
