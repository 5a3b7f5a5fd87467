//! Exact multivariate polynomials over the rationals and polynomial 1-forms.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{fmt_rational, int, ComplexPoint, Rational, RationalMatrix};

pub use parse::parse_poly;

/// Exponent vector `x₁^{a₁}⋯xₙ^{aₙ}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        self.divides(other)
            .then(|| Self(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the single variable when this is a pure power `xᵢ^k`, `k ≥ 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nz = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        let (i, _) = nz.next()?;
        nz.next().is_none().then_some(i)
    }

    /// All monomials of total degree exactly `d` in `nvars` variables, in lexicographic order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(prefix: &mut Vec<u32>, left: usize, d: u32, out: &mut Vec<Monomial>) {
            if left == 1 {
                prefix.push(d);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=d).rev() {
                prefix.push(e);
                rec(prefix, left - 1, d - e, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(&mut Vec::new(), nvars, d, &mut out);
        out
    }

    fn fmt_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Default variable names `x1, …, xn`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

/// Polynomial with a fixed number of variables; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    /// Parses the text syntax `c * x1^a1 * … ± …` over the given variable names.
    pub fn parse(text: &str, names: &[String]) -> Result<Self> {
        parse_poly(text, names)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// `c·m·self`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.0.clone();
            d[i] -= 1;
            out.add_term(Monomial(d), c * int(e as i64));
        }
        out
    }

    /// Drops every term of total degree `≥ bound`.
    pub fn truncate(&self, bound: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&e, xi)| acc * num_traits::pow(xi.clone(), e as usize))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Value at a complex point together with `Σ|c|·|z|^a`, the natural scale for
    /// its rounding error (roughly `(deg + #terms)·ε` times that sum).
    pub fn eval_complex_with_scale(&self, z: &[Complex64]) -> (Complex64, f64) {
        assert_eq!(z.len(), self.nvars, "evaluation point dimension mismatch");
        let maxdeg = self.terms.keys().flat_map(|m| m.0.iter().copied()).max().unwrap_or(0) as usize;
        let powers: Vec<Vec<Complex64>> = z
            .iter()
            .map(|&zi| {
                let mut v = Vec::with_capacity(maxdeg + 1);
                let mut acc = Complex64::new(1.0, 0.0);
                for _ in 0..=maxdeg {
                    v.push(acc);
                    acc *= zi;
                }
                v
            })
            .collect();
        let mut value = Complex64::zero();
        let mut scale = 0.0;
        for (m, c) in &self.terms {
            let cf = c.to_f64().unwrap_or(f64::NAN);
            let mono =
                m.0.iter()
                    .enumerate()
                    .fold(Complex64::new(1.0, 0.0), |acc, (i, &e)| acc * powers[i][e as usize]);
            value += mono * cf;
            scale += cf.abs() * mono.norm();
        }
        (value, scale)
    }

    pub fn eval_complex(&self, z: &[Complex64]) -> Complex64 {
        self.eval_complex_with_scale(z).0
    }

    /// `p(M·y)` for an `n × m` matrix `M`, giving a polynomial in `m` variables.
    pub fn compose_linear(&self, m: &RationalMatrix) -> Self {
        assert_eq!(m.rows(), self.nvars, "substitution matrix has wrong row count");
        let out_vars = m.cols();
        let linear: Vec<Poly> = (0..self.nvars)
            .map(|i| {
                Poly::from_terms(
                    out_vars,
                    (0..out_vars).map(|j| (Monomial::var(out_vars, j), m.get(i, j).clone())),
                )
            })
            .collect();
        let mut power_cache: Vec<Vec<Poly>> = linear.iter().map(|l| vec![Poly::one(out_vars), l.clone()]).collect();
        let mut out = Poly::zero(out_vars);
        for (mono, c) in &self.terms {
            let mut term = Poly::constant(out_vars, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut power_cache[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &linear[i];
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Embeds into a ring with more variables (new variables appended, unused).
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        Self {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes `xᵢ ↦ xᵢ + shift[i]`.
    pub fn translate(&self, shift: &[Rational]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        let n = self.nvars;
        let mut out = Poly::zero(n);
        let moved: Vec<Poly> = (0..n)
            .map(|i| &Poly::var(n, i) + &Poly::constant(n, shift[i].clone()))
            .collect();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(n, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = &term * &moved[i].pow(e);
                }
            }
            out = &out + &term;
        }
        out
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        // highest degree first, ties broken by exponent vector descending
        let mut ts: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        ts.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(b.0.cmp(a.0)));
        let mut s = String::new();
        for (k, (m, c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            if m.is_one() {
                s.push_str(&fmt_rational(&abs));
            } else if abs.is_one() {
                s.push_str(&m.fmt_with(names));
            } else {
                s.push_str(&fmt_rational(&abs));
                s.push('*');
                s.push_str(&m.fmt_with(names));
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&default_names(self.nvars)))
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials from different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "subtracting polynomials from different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "multiplying polynomials from different rings");
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// `ω = Σ Aᵢ dxᵢ`, stored as its coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OneForm {
    components: Vec<Poly>,
}

impl OneForm {
    pub fn new(components: Vec<Poly>) -> Result<Self> {
        let n = components.len();
        if let Some(bad) = components.iter().position(|c| c.nvars() != n) {
            return Err(Error::Dimension(format!(
                "component {bad} lives in {} variables, expected {n}",
                components[bad].nvars()
            )));
        }
        Ok(Self { components })
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    /// Gradient form `df`.
    pub fn differential(f: &Poly) -> Self {
        Self {
            components: (0..f.nvars()).map(|i| f.derivative(i)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars(), other.nvars());
        Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            components: self.components.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn jacobian_matrix(&self) -> Vec<Vec<Poly>> {
        self.components
            .iter()
            .map(|a| (0..self.nvars()).map(|j| a.derivative(j)).collect())
            .collect()
    }

    /// `det(∂Aᵢ/∂xⱼ)`.
    pub fn jacobian_det(&self) -> Poly {
        poly_det(&self.jacobian_matrix(), self.nvars())
    }

    /// Pullback `g*ω`, whose `j`-th coefficient is `Σᵢ gᵢⱼ·Aᵢ(g·x)`.
    pub fn pullback(&self, g: &RationalMatrix) -> Self {
        let n = self.nvars();
        let moved: Vec<Poly> = self.components.iter().map(|a| a.compose_linear(g)).collect();
        let components = (0..n)
            .map(|j| {
                let mut acc = Poly::zero(n);
                for (i, a) in moved.iter().enumerate() {
                    let gij = g.get(i, j);
                    if !gij.is_zero() {
                        acc = &acc + &a.scale(gij);
                    }
                }
                acc
            })
            .collect();
        Self { components }
    }

    pub fn is_invariant_under(&self, g: &RationalMatrix) -> bool {
        self.pullback(g) == *self
    }

    pub fn max_degree(&self) -> u32 {
        self.components.iter().filter_map(Poly::total_degree).max().unwrap_or(0)
    }

    pub fn eval_complex(&self, z: &[Complex64]) -> Vec<Complex64> {
        self.components.iter().map(|a| a.eval_complex(z)).collect()
    }
}

fn poly_det(m: &[Vec<Poly>], nvars: usize) -> Poly {
    let n = m.len();
    match n {
        0 => Poly::one(nvars),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Poly::zero(nvars);
            for (j, entry) in m[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = entry * &poly_det(&minor, nvars);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// `p ∘ g⁻¹`, the linear action of `g` on polynomial functions.
pub fn act_linear(p: &Poly, g: &RationalMatrix) -> Result<Poly> {
    let inv = g.inverse().ok_or(Error::SingularMatrix)?;
    if inv.rows() != p.nvars() {
        return Err(Error::Dimension(format!(
            "{}×{} matrix acting on {} variables",
            g.rows(),
            g.cols(),
            p.nvars()
        )));
    }
    Ok(p.compose_linear(&inv))
}

pub fn eval_complex(p: &Poly, z: &ComplexPoint) -> Complex64 {
    p.eval_complex(&z.coordinates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn p(text: &str, vars: &[&str]) -> Poly {
        Poly::parse(text, &names(vars)).unwrap()
    }

    #[test]
    fn differential_examples() {
        let xy = ["x", "y"];
        assert_eq!(
            OneForm::differential(&p("x^2 + y^2", &xy)).components(),
            &[p("2*x", &xy), p("2*y", &xy)]
        );
        assert_eq!(
            OneForm::differential(&p("x^2 - y^2", &xy)).components(),
            &[p("2*x", &xy), p("-2*y", &xy)]
        );
        assert_eq!(
            OneForm::differential(&p("x^4 + y^4", &xy)).components(),
            &[p("4*x^3", &xy), p("4*y^3", &xy)]
        );
    }

    #[test]
    fn jacobian_examples() {
        let xy = ["x", "y"];
        assert_eq!(OneForm::differential(&p("x^2 + y^2", &xy)).jacobian_det(), p("4", &xy));
        assert_eq!(OneForm::differential(&p("x^2 - y^2", &xy)).jacobian_det(), p("-4", &xy));
        assert_eq!(
            OneForm::differential(&p("x^4", &["x"])).jacobian_det(),
            p("12*x^2", &["x"])
        );
    }

    #[test]
    fn act_linear_examples() {
        let minus = RationalMatrix::from_i64_rows(&[&[-1]]);
        assert_eq!(act_linear(&p("x", &["x"]), &minus).unwrap(), p("-x", &["x"]));
        assert_eq!(act_linear(&p("x^2", &["x"]), &minus).unwrap(), p("x^2", &["x"]));
        let flip = RationalMatrix::from_i64_rows(&[&[1, 0], &[0, -1]]);
        assert_eq!(
            act_linear(&p("x*y", &["x", "y"]), &flip).unwrap(),
            p("-x*y", &["x", "y"])
        );
        let singular = RationalMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(act_linear(&p("x", &["x", "y"]), &singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn complex_evaluation() {
        let i = Complex64::new(0.0, 1.0);
        assert!((p("x^2", &["x"]).eval_complex(&[i]) + 1.0).norm() < 1e-15);
        let one = Complex64::new(1.0, 0.0);
        assert!((p("x^2 + y^2", &["x", "y"]).eval_complex(&[one, one]) - 2.0).norm() < 1e-15);
        let half = Complex64::new(0.5, 0.0);
        assert!((p("12*x^2", &["x"]).eval_complex(&[half]) - 3.0).norm() < 1e-15);
    }

    #[test]
    fn display_round_trips() {
        let v = ["x", "y"];
        let q = p("-1/4 + 3*x^2*y - y^3 + x", &v);
        assert_eq!(q.display_with(&names(&v)), "3*x^2*y - y^3 + x - 1/4");
        assert_eq!(p(&q.display_with(&names(&v)), &v), q);
    }

    #[test]
    fn pullback_invariance() {
        let xy = ["x", "y"];
        let w = OneForm::differential(&p("x^2 - y^2", &xy));
        assert!(w.is_invariant_under(&RationalMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]])));
        let rot = RationalMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]);
        assert!(!w.is_invariant_under(&rot));
        assert!(OneForm::differential(&p("x^2 + y^2", &xy)).is_invariant_under(&rot));
    }

    #[test]
    fn translate_shifts_argument() {
        let q = p("x^2 - 1", &["x"]).translate(&[rat(1, 1)]);
        assert_eq!(q, p("x^2 + 2*x", &["x"]));
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn small_poly(nvars: usize) -> impl Strategy<Value = Poly> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, nvars), -3i64..=3), 0..5)
            .prop_map(move |ts| Poly::from_terms(nvars, ts.into_iter().map(|(e, c)| (Monomial::new(e), int(c)))))
    }

    fn invertible(n: usize) -> impl Strategy<Value = RationalMatrix> {
        proptest::collection::vec(-2i64..=2, n * n)
            .prop_map(move |v| {
                let rows = v.chunks(n).map(|r| r.iter().map(|&x| int(x)).collect()).collect();
                RationalMatrix::from_rows(rows).unwrap()
            })
            .prop_filter("invertible", |m| !m.determinant().is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        // p ∘ g⁻¹ composes as a left action: h·(g·p) = (hg)·p.
        #[test]
        fn act_linear_composes(q in small_poly(2), g in invertible(2), h in invertible(2)) {
            let lhs = act_linear(&act_linear(&q, &g).unwrap(), &h).unwrap();
            let rhs = act_linear(&q, &(&h * &g)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn jacobian_of_gradient_is_hessian(f in small_poly(2)) {
            let hess = &(&f.derivative(0).derivative(0) * &f.derivative(1).derivative(1))
                - &(&f.derivative(0).derivative(1) * &f.derivative(1).derivative(0));
            prop_assert_eq!(OneForm::differential(&f).jacobian_det(), hess);
        }

        #[test]
        fn differential_leibniz(f in small_poly(2), g in small_poly(2)) {
            let d = OneForm::differential(&(&f * &g));
            let df = OneForm::differential(&f);
            let dg = OneForm::differential(&g);
            for i in 0..2 {
                let rhs = &(&f * &dg.components()[i]) + &(&g * &df.components()[i]);
                prop_assert_eq!(&d.components()[i], &rhs);
            }
        }

        #[test]
        fn parse_display_round_trip(f in small_poly(3)) {
            let names = default_names(3);
            prop_assert_eq!(Poly::parse(&f.display_with(&names), &names).unwrap(), f);
        }
    }
}
