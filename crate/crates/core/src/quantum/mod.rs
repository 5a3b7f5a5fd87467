//! Sector decomposition of the quantum state space of an invariant germ.
//!
//! For each `g ∈ G` the germ is restricted to the fixed subspace `ker(g − I)` and
//! the `G`-invariant part of `Ω_{df^g}` is computed with the residual action. An
//! empty fixed subspace contributes a one-dimensional sector with positive
//! pairing by convention.
//!
//! Two input tiers are supported: rational matrix actions, which give dimensions
//! and real signatures, and diagonal actions by roots of unity given as character
//! vectors, which give dimensions only.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{InertiaTriple, RationalMatrix};
use crate::group::{Element, MatrixAction};
use crate::localalg::{MonomialOrder, QuotientAlgebra};
use crate::poly::{default_names, OneForm, Poly};
use crate::residue::omega_module;

/// `f` on `ker(g − I)` in the coordinates of a row-reduced basis, with the
/// induced action.
#[derive(Clone, Debug)]
pub struct Restriction {
    /// Basis vectors of the fixed subspace in ambient coordinates.
    pub fixed_basis: Vec<Vec<crate::exactlin::Rational>>,
    pub restricted_f: Poly,
    pub residual_action: MatrixAction,
}

impl Restriction {
    pub fn n_g(&self) -> usize {
        self.fixed_basis.len()
    }
}

pub fn restrict_to_fixed(f: &Poly, action: &MatrixAction, g: &Element) -> Result<Restriction> {
    action.check_function(f)?;
    let fixed_basis = action.fixed_subspace(g);
    let b = RationalMatrix::from_columns(action.dim(), &fixed_basis);
    let restricted_f = f.compose_linear(&b);
    let residual_action = action.restrict(&b)?;
    Ok(Restriction {
        fixed_basis,
        restricted_f,
        residual_action,
    })
}

/// One summand `Ω^G_{df^g}` of the state space.
#[derive(Clone, Debug, PartialEq)]
pub struct Sector {
    pub element: Element,
    pub n_g: usize,
    pub restricted_f: Poly,
    pub inv_dim: usize,
    pub inertia: InertiaTriple,
    /// Set when `n_g = 0` and the sector value is the convention.
    pub by_convention: bool,
}

impl Sector {
    pub fn signature(&self) -> i64 {
        self.inertia.signature()
    }
}

pub fn sector(f: &Poly, g: &Element, action: &MatrixAction) -> Result<Sector> {
    let r = restrict_to_fixed(f, action, g)?;
    let module = omega_module(&OneForm::differential(&r.restricted_f), &r.residual_action)?;
    let pairing = module.residue_pairing()?;
    Ok(Sector {
        element: g.clone(),
        n_g: r.n_g(),
        restricted_f: r.restricted_f,
        inv_dim: pairing.invariant_basis.len(),
        inertia: pairing.inertia_invariant,
        by_convention: r.fixed_basis.is_empty(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuantumReport {
    pub sectors: Vec<Sector>,
    pub total_dim: usize,
    pub orbifold_dim: i64,
    /// `Σ` of sector signatures; equals the orbifold index of `df`.
    pub real_signature: i64,
}

pub fn quantum_report(f: &Poly, action: &MatrixAction) -> Result<QuantumReport> {
    let sectors = action
        .group()
        .elements()
        .iter()
        .map(|g| sector(f, g, action))
        .collect::<Result<Vec<_>>>()?;
    let total_dim = sectors.iter().map(|s| s.inv_dim).sum();
    let orbifold_dim = sectors
        .iter()
        .map(|s| {
            if s.n_g % 2 == 0 {
                s.inv_dim as i64
            } else {
                -(s.inv_dim as i64)
            }
        })
        .sum();
    let real_signature = sectors.iter().map(Sector::signature).sum();
    Ok(QuantumReport {
        sectors,
        total_dim,
        orbifold_dim,
        real_signature,
    })
}

impl fmt::Display for QuantumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sectors:")?;
        writeln!(f, "  g | n_g | restricted f | inv_dim | inertia | signature")?;
        for s in &self.sectors {
            let names = default_names(s.n_g);
            let note = if s.by_convention {
                " (empty fixed locus, convention)"
            } else {
                ""
            };
            writeln!(
                f,
                "  {} | {} | {} | {} | {} | {}{}",
                s.element,
                s.n_g,
                s.restricted_f.display_with(&names),
                s.inv_dim,
                s.inertia,
                s.signature(),
                note
            )?;
        }
        writeln!(f, "total_dim = {}", self.total_dim)?;
        writeln!(f, "orbifold_dim = {}", self.orbifold_dim)?;
        writeln!(f, "real_signature = {}", self.real_signature)?;
        write!(f, "orbifold_index = {}", self.real_signature)
    }
}

/// A subgroup of `(ℤ_m)ⁿ` acting diagonally by `xⱼ ↦ ζ_m^{aⱼ} xⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalAction {
    modulus: u32,
    nvars: usize,
    generators: Vec<Vec<u32>>,
    elements: Vec<Vec<u32>>,
}

impl DiagonalAction {
    pub fn new(modulus: u32, nvars: usize, generators: Vec<Vec<u32>>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidAction("modulus must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.len() != nvars) {
            return Err(Error::Dimension(format!(
                "character vector of length {}, expected {nvars}",
                g.len()
            )));
        }
        let generators: Vec<Vec<u32>> = generators
            .into_iter()
            .map(|g| g.into_iter().map(|a| a % modulus).collect())
            .collect();
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut frontier = vec![vec![0u32; nvars]];
        seen.insert(frontier[0].clone());
        while let Some(x) = frontier.pop() {
            for g in &generators {
                let y: Vec<u32> = x.iter().zip(g).map(|(a, b)| (a + b) % modulus).collect();
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        Ok(Self {
            modulus,
            nvars,
            generators,
            elements: seen.into_iter().collect(),
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Character vectors of all group elements, sorted.
    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        let a: Vec<u32> = a.iter().map(|x| x % self.modulus).collect();
        self.elements.binary_search(&a).is_ok()
    }
}

/// One sector of the diagonal tier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSector {
    pub element: Vec<u32>,
    pub n_g: usize,
    pub dim: usize,
}

fn check_quasihomogeneous(f: &Poly, weights: &[u32], degree: u32) -> Result<()> {
    if weights.len() != f.nvars() {
        return Err(Error::Dimension(format!(
            "{} weights for {} variables",
            weights.len(),
            f.nvars()
        )));
    }
    if f.is_zero() || degree == 0 || weights.contains(&0) {
        return Err(Error::NotQuasihomogeneous("weights and degree must be positive".into()));
    }
    for (m, _) in f.terms() {
        let wd: u32 = m.exponents().iter().zip(weights).map(|(k, w)| k * w).sum();
        if wd != degree {
            let names = default_names(f.nvars());
            return Err(Error::NotQuasihomogeneous(format!(
                "monomial {} has weighted degree {wd}, expected {degree}",
                Poly::monomial(m.clone(), num_traits::One::one()).display_with(&names)
            )));
        }
    }
    Ok(())
}

/// Sector dimensions by counting basis monomials `xᵏ` of the Milnor algebra of
/// `f^g` with `Σⱼ aⱼ(h)(kⱼ + 1) ≡ 0 (mod m)` for every `h ∈ G`.
pub fn diagonal_sector_dims(
    f: &Poly,
    weights: &[u32],
    degree: u32,
    action: &DiagonalAction,
) -> Result<Vec<DiagonalSector>> {
    check_quasihomogeneous(f, weights, degree)?;
    if action.nvars != f.nvars() {
        return Err(Error::Dimension(format!(
            "action on {} variables, polynomial in {}",
            action.nvars,
            f.nvars()
        )));
    }
    let m = action.modulus;
    for (i, g) in action.generators.iter().enumerate() {
        let moved = f
            .terms()
            .any(|(mono, _)| mono.exponents().iter().zip(g).map(|(k, a)| k * a).sum::<u32>() % m != 0);
        if moved {
            return Err(Error::NotInvariant { generator: i });
        }
    }
    let mut out = Vec::new();
    for g in &action.elements {
        let fixed: Vec<usize> = (0..f.nvars()).filter(|&j| g[j] == 0).collect();
        let mut inclusion = RationalMatrix::zeros(f.nvars(), fixed.len());
        for (c, &j) in fixed.iter().enumerate() {
            inclusion.set(j, c, num_traits::One::one());
        }
        let fg = f.compose_linear(&inclusion);
        let form = OneForm::differential(&fg);
        let algebra = QuotientAlgebra::new(fixed.len(), form.components(), MonomialOrder::GlobalDegRevLex)?;
        let dim = algebra
            .monomial_basis()
            .iter()
            .filter(|mono| {
                action.elements.iter().all(|h| {
                    let s: u64 = fixed
                        .iter()
                        .zip(mono.exponents())
                        .map(|(&j, &k)| h[j] as u64 * (k as u64 + 1))
                        .sum();
                    s.is_multiple_of(m as u64)
                })
            })
            .count();
        out.push(DiagonalSector {
            element: g.clone(),
            n_g: fixed.len(),
            dim,
        });
    }
    Ok(out)
}

/// Whether the exponential grading element `J = (wⱼ·m/d mod m)` lies in `G`.
pub fn admissibility_check(weights: &[u32], degree: u32, action: &DiagonalAction) -> Result<bool> {
    if degree == 0 || !action.modulus.is_multiple_of(degree) {
        return Err(Error::InvalidAction(format!(
            "degree {degree} does not divide the modulus {}",
            action.modulus
        )));
    }
    if weights.len() != action.nvars {
        return Err(Error::Dimension(format!(
            "{} weights for {} variables",
            weights.len(),
            action.nvars
        )));
    }
    let scale = action.modulus / degree;
    let j: Vec<u32> = weights.iter().map(|w| (w * scale) % action.modulus).collect();
    Ok(action.contains(&j))
}

/// Total of a diagonal sector list.
pub fn diagonal_total(sectors: &[DiagonalSector]) -> usize {
    sectors.iter().map(|s| s.dim).sum()
}

/// Signed total `Σ (−1)^{n_g} dim`.
pub fn diagonal_orbifold_dim(sectors: &[DiagonalSector]) -> i64 {
    sectors
        .iter()
        .map(|s| if s.n_g % 2 == 0 { s.dim as i64 } else { -(s.dim as i64) })
        .sum()
}
