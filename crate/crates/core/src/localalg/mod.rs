//! Finite-dimensional quotient algebras `R/⟨A₁,…,Aₙ⟩`, at the origin or globally.
//!
//! The local algebra is computed from a Mora standard basis. Once the staircase
//! is known to be finite, every monomial of degree `N` (one more than the largest
//! standard monomial) lies in the localized ideal, so classes are computed in the
//! finite ring `R/(I + mᴺ)` by plain linear reduction.

mod standard;

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{Rational, RationalMatrix};
use crate::poly::{Monomial, OneForm, Poly};

pub use standard::{standard_basis, MonomialOrder};

/// `R/I` for a zero-dimensional ideal `I` with respect to a fixed monomial order.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    order: MonomialOrder,
    nvars: usize,
    standard_basis: Vec<Poly>,
    monomial_basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `N` with `mᴺ ⊂ I` locally; `None` for the global order.
    truncation: Option<u32>,
    mult_matrices: Vec<RationalMatrix>,
}

/// Quotient by the coefficient ideal of `ω`.
pub fn quotient_algebra(omega: &OneForm, order: MonomialOrder) -> Result<QuotientAlgebra> {
    QuotientAlgebra::new(omega.nvars(), omega.components(), order)
}

impl QuotientAlgebra {
    /// Quotient of the polynomial ring in `nvars` variables by the ideal of `gens`.
    pub fn new(nvars: usize, gens: &[Poly], order: MonomialOrder) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::Dimension(format!(
                "generator in {} variables, ring has {nvars}",
                g.nvars()
            )));
        }
        let sb = standard_basis(gens, order);
        let leads: Vec<Monomial> = sb.iter().map(|g| order.leading_monomial(g).unwrap().clone()).collect();

        let mut bounds = vec![u32::MAX; nvars];
        for m in &leads {
            if let Some(i) = m.pure_power_var() {
                bounds[i] = bounds[i].min(m.exponents()[i]);
            }
        }
        let unit = leads.iter().any(Monomial::is_one);
        if !unit {
            if let Some(i) = bounds.iter().position(|&b| b == u32::MAX) {
                return Err(Error::NonIsolated(format!(
                    "no pure power of variable {} among leading monomials",
                    i + 1
                )));
            }
        }

        let mut monomial_basis = Vec::new();
        if !unit {
            enumerate_box(&bounds, &mut |m| {
                if !leads.iter().any(|l| l.divides(&m)) {
                    monomial_basis.push(m);
                }
            });
        }
        // descending in the local order: degree ascending, revlex ties
        monomial_basis.sort_by(|a, b| MonomialOrder::LocalDegRevLex.cmp(b, a));
        let index = monomial_basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let truncation = order
            .is_local()
            .then(|| monomial_basis.iter().map(Monomial::degree).max().map_or(0, |d| d + 1));

        let mut q = Self {
            order,
            nvars,
            standard_basis: sb,
            monomial_basis,
            index,
            truncation,
            mult_matrices: Vec::new(),
        };
        q.mult_matrices = (0..nvars)
            .map(|i| q.multiplication_matrix(&Poly::var(nvars, i)))
            .collect();
        Ok(q)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.monomial_basis.len()
    }

    pub fn standard_basis(&self) -> &[Poly] {
        &self.standard_basis
    }

    /// Standard monomials, sorted by ascending degree.
    pub fn monomial_basis(&self) -> &[Monomial] {
        &self.monomial_basis
    }

    /// Matrices of multiplication by each variable, acting on coordinate columns.
    pub fn mult_matrices(&self) -> &[RationalMatrix] {
        &self.mult_matrices
    }

    /// Remainder of `p` whose terms are all standard monomials.
    pub fn reduce(&self, p: &Poly) -> Poly {
        assert_eq!(p.nvars(), self.nvars, "reducing a polynomial from another ring");
        if self.monomial_basis.is_empty() {
            return Poly::zero(self.nvars);
        }
        match self.truncation {
            Some(bound) => standard::truncated_local_reduce(p, &self.standard_basis, bound),
            None => standard::global_normal_form(p, &self.standard_basis, self.order),
        }
    }

    /// Coordinates of the class of `p` on the monomial basis.
    pub fn normal_form(&self, p: &Poly) -> Vec<Rational> {
        let r = self.reduce(p);
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in r.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// Polynomial representative of a coordinate vector.
    pub fn element(&self, coords: &[Rational]) -> Poly {
        Poly::from_terms(
            self.nvars,
            self.monomial_basis
                .iter()
                .zip(coords)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Matrix of multiplication by `p`.
    pub fn multiplication_matrix(&self, p: &Poly) -> RationalMatrix {
        let cols: Vec<Vec<Rational>> = self
            .monomial_basis
            .iter()
            .map(|m| self.normal_form(&p.mul_term(m, &Rational::from_integer(1.into()))))
            .collect();
        RationalMatrix::from_columns(self.dim(), &cols)
    }

    /// Coordinates of the class of `a·b`.
    pub fn multiply(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        self.normal_form(&(&self.element(a) * &self.element(b)))
    }
}

fn enumerate_box(bounds: &[u32], f: &mut impl FnMut(Monomial)) {
    let n = bounds.len();
    let mut e = vec![0u32; n];
    loop {
        f(Monomial::new(e.clone()));
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}
