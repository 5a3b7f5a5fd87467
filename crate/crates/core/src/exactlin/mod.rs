//! Exact rational linear algebra and a controlled-precision complex root finder.
//!
//! Everything on the exact path uses arbitrary-precision rationals. Floating
//! point appears only in [`complex_roots`] and the numerical code built on it.

mod inertia;
mod matrix;
mod roots;
mod unipoly;

pub use inertia::{inertia, InertiaTriple};
pub use matrix::{canonical_span, dot, RationalMatrix};
pub use roots::{complex_roots, ComplexPoint};
pub use unipoly::{char_poly, UniPoly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q`, or just `p` for integers.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Basis of the null space of `m`; see [`RationalMatrix::kernel_basis`].
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    m.kernel_basis()
}
