//! The residue pairing on `Ω_ω` and its restriction to `G`-invariants.
//!
//! `Ω_ω` is modelled by the local algebra `R/⟨A₁,…,Aₙ⟩` times the volume form
//! `dx₁∧…∧dxₙ`, so `g` acts on a class `φ` by `det(g)·(φ∘g⁻¹)`. The pairing is
//! `B(φ,ψ) = ℓ(φψ)` for a functional `ℓ` that is invariant under the untwisted
//! action and equals 1 on the Jacobian class; its inertia does not depend on the
//! choice of such `ℓ`.

use std::fmt;

use num_traits::{One, Zero};

use crate::burnside::RepRingElement;
use crate::error::{Error, Result};
use crate::exactlin::{canonical_span, fmt_rational, inertia, int, InertiaTriple, Rational, RationalMatrix};
use crate::group::{cyclotomic_blocks, Element, MatrixAction};
use crate::localalg::{quotient_algebra, MonomialOrder, QuotientAlgebra};
use crate::poly::{act_linear, default_names, OneForm, Poly};

/// `Ω_ω` at the origin with its determinant-twisted group action.
#[derive(Clone, Debug)]
pub struct OmegaModule {
    form: OneForm,
    action: MatrixAction,
    algebra: QuotientAlgebra,
    /// Per element in canonical order: `φ ↦ φ∘g⁻¹` on the monomial basis.
    untwisted: Vec<RationalMatrix>,
    /// Per element: `φ ↦ det(g)·φ∘g⁻¹`.
    twist: Vec<RationalMatrix>,
    jacobian_class: Vec<Rational>,
}

/// Builds `Ω_ω` after checking that `ω` is invariant and its singularity isolated.
pub fn omega_module(omega: &OneForm, action: &MatrixAction) -> Result<OmegaModule> {
    action.check_form(omega)?;
    let algebra = quotient_algebra(omega, MonomialOrder::LocalDegRevLex)?;
    let mut untwisted = Vec::new();
    let mut twist = Vec::new();
    for a in action.group().elements() {
        let g = action.element_matrix(&a);
        let cols = algebra
            .monomial_basis()
            .iter()
            .map(|m| {
                let p = Poly::monomial(m.clone(), Rational::one());
                Ok(algebra.normal_form(&act_linear(&p, g)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let u = RationalMatrix::from_columns(algebra.dim(), &cols);
        twist.push(u.scale(&int(action.det(&a) as i64)));
        untwisted.push(u);
    }
    let jacobian_class = algebra.normal_form(&omega.jacobian_det());
    Ok(OmegaModule {
        form: omega.clone(),
        action: action.clone(),
        algebra,
        untwisted,
        twist,
        jacobian_class,
    })
}

/// `Ω_ω` at `point`, in coordinates centred there.
///
/// The action is kept as is, so every group element must fix `point`.
pub fn recentered_module(omega: &OneForm, action: &MatrixAction, point: &[Rational]) -> Result<OmegaModule> {
    if point.len() != omega.nvars() {
        return Err(Error::Dimension(format!(
            "point has {} coordinates, form has {} variables",
            point.len(),
            omega.nvars()
        )));
    }
    for (i, g) in action.generators().iter().enumerate() {
        if g.mul_vec(point) != point {
            return Err(Error::InvalidAction(format!("generator {i} moves the centre point")));
        }
    }
    let shifted = OneForm::new(omega.components().iter().map(|a| a.translate(point)).collect())?;
    omega_module(&shifted, action)
}

impl OmegaModule {
    pub fn form(&self) -> &OneForm {
        &self.form
    }

    pub fn action(&self) -> &MatrixAction {
        &self.action
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Twisted action matrices in canonical element order.
    pub fn twist_matrices(&self) -> &[RationalMatrix] {
        &self.twist
    }

    pub fn twist(&self, a: &Element) -> &RationalMatrix {
        &self.twist[self.action.group().index_of(a)]
    }

    pub fn untwisted(&self, a: &Element) -> &RationalMatrix {
        &self.untwisted[self.action.group().index_of(a)]
    }

    /// Coordinates of the class of `det(∂Aᵢ/∂xⱼ)`.
    pub fn jacobian_class(&self) -> &[Rational] {
        &self.jacobian_class
    }

    /// Basis of `Ω_ω^G` as row-reduced coordinate vectors.
    pub fn invariant_basis(&self) -> Vec<Vec<Rational>> {
        let n = self.dim();
        if n == 0 {
            return Vec::new();
        }
        let id = RationalMatrix::identity(n);
        let blocks: Vec<RationalMatrix> = self.twist.iter().map(|t| t - &id).collect();
        let stacked = RationalMatrix::vstack(&blocks).expect("twist matrices share a shape");
        canonical_span(n, &stacked.kernel_basis())
    }

    /// `ℓ` with `ℓ(𝒥) = 1` and `ℓ∘g = ℓ`, from the dual of the Jacobian class.
    ///
    /// Completing the Jacobian vector greedily by basis vectors in order skips
    /// exactly its last nonzero coordinate `p`, so the dual covector is
    /// `e_p*/𝒥_p` before symmetrization.
    pub fn residue_functional(&self) -> Result<Vec<Rational>> {
        if self.dim() == 0 {
            return Ok(Vec::new());
        }
        let p = self
            .jacobian_class
            .iter()
            .rposition(|c| !c.is_zero())
            .ok_or(Error::ZeroJacobianClass)?;
        let mut l0 = vec![Rational::zero(); self.dim()];
        l0[p] = self.jacobian_class[p].recip();
        self.symmetrize(&l0)
    }

    /// Symmetrizes `raw` under the untwisted action and rescales it so `ℓ(𝒥) = 1`.
    pub fn admissible_functional(&self, raw: &[Rational]) -> Result<Vec<Rational>> {
        if raw.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "functional of length {}, algebra of dimension {}",
                raw.len(),
                self.dim()
            )));
        }
        self.symmetrize(raw)
    }

    fn symmetrize(&self, raw: &[Rational]) -> Result<Vec<Rational>> {
        if self.dim() == 0 {
            return Ok(Vec::new());
        }
        let mut acc = vec![Rational::zero(); self.dim()];
        for u in &self.untwisted {
            for (a, b) in acc.iter_mut().zip(u.vec_mul(raw)) {
                *a += b;
            }
        }
        let value = crate::exactlin::dot(&acc, &self.jacobian_class);
        if value.is_zero() {
            return Err(Error::DegenerateFunctional);
        }
        let s = value.recip();
        Ok(acc.into_iter().map(|x| x * &s).collect())
    }

    /// `[ℓ(bᵢbⱼ)]` on the monomial basis.
    pub fn gram(&self, functional: &[Rational]) -> RationalMatrix {
        let mults = self.algebra.mult_matrices();
        let rows: Vec<Vec<Rational>> = self
            .algebra
            .monomial_basis()
            .iter()
            .map(|m| {
                // ℓ∘M_{bᵢ} as a covector
                let mut row = functional.to_vec();
                for (k, &e) in m.exponents().iter().enumerate() {
                    for _ in 0..e {
                        row = mults[k].vec_mul(&row);
                    }
                }
                row
            })
            .collect();
        if rows.is_empty() {
            return RationalMatrix::zeros(0, 0);
        }
        RationalMatrix::from_rows(rows).expect("square gram matrix")
    }

    /// The pairing for the canonical functional.
    pub fn residue_pairing(&self) -> Result<ResiduePairing> {
        let l = self.residue_functional()?;
        self.pairing_for(l)
    }

    /// The pairing for an already admissible functional.
    pub fn pairing_for(&self, functional: Vec<Rational>) -> Result<ResiduePairing> {
        let gram_full = self.gram(&functional);
        let basis = self.invariant_basis();
        let v = RationalMatrix::from_columns(self.dim(), &basis);
        let gram_invariant = gram_full.congruence(&v);
        let inertia_full = inertia(&gram_full);
        let inertia_invariant = inertia(&gram_invariant);
        for (which, g, i) in [
            ("Ω_ω", &gram_full, inertia_full),
            ("Ω_ω^G", &gram_invariant, inertia_invariant),
        ] {
            if !i.is_nondegenerate() {
                return Err(Error::DegeneratePairing {
                    which: which.into(),
                    inertia: i.to_string(),
                    dump: format!(
                        "basis: {}\ngram: {g}\nfunctional: {}",
                        self.basis_names().join(", "),
                        fmt_vec(&functional)
                    ),
                });
            }
        }
        Ok(ResiduePairing {
            functional,
            gram_full,
            invariant_basis: basis,
            gram_invariant,
            inertia_full,
            inertia_invariant,
        })
    }

    /// Inertia of the pairing on each common cyclotomic block of the twist matrices.
    pub fn g_signature(&self, pairing: &ResiduePairing) -> GSignature {
        let group = self.action.group();
        let elements = group.elements();
        let ops: Vec<(RationalMatrix, u32)> = elements
            .iter()
            .zip(&self.twist)
            .map(|(a, t)| (t.clone(), group.element_order(a)))
            .collect();
        let blocks: Vec<IsotypicBlock> = cyclotomic_blocks(self.dim(), &ops)
            .into_iter()
            .map(|b| {
                let v = RationalMatrix::from_columns(self.dim(), &b.basis);
                let inertia = inertia(&pairing.gram_full.congruence(&v));
                let character = b
                    .orders
                    .iter()
                    .map(|&d| match d {
                        1 => Some(1),
                        2 => Some(-1),
                        _ => None,
                    })
                    .collect::<Option<Vec<i32>>>();
                IsotypicBlock {
                    orders: b.orders,
                    character,
                    basis: b.basis,
                    inertia,
                }
            })
            .collect();
        let virtual_character = blocks
            .iter()
            .map(|b| {
                b.character
                    .as_ref()
                    .map(|c| (sign_character(self.action(), c), b.inertia.signature()))
            })
            .collect::<Option<Vec<_>>>()
            .map(|terms| {
                let mut out = RepRingElement::zero(group);
                for (chi, n) in terms {
                    out.add_character(chi, n);
                }
                out
            });
        GSignature {
            elements,
            blocks,
            virtual_character,
        }
    }

    /// Monomial basis as strings in `x1…xn`.
    pub fn basis_names(&self) -> Vec<String> {
        let names = default_names(self.algebra.nvars());
        self.algebra
            .monomial_basis()
            .iter()
            .map(|m| Poly::monomial(m.clone(), Rational::one()).display_with(&names))
            .collect()
    }
}

/// The exponent tuple of the `±1`-valued character with the given values.
fn sign_character(action: &MatrixAction, values: &[i32]) -> Element {
    let group = action.group();
    let exps = group
        .invariant_factors()
        .iter()
        .enumerate()
        .map(|(k, &m)| {
            let mut unit = vec![0u32; group.rank()];
            unit[k] = 1;
            if values[group.index_of(&Element(unit))] == -1 {
                m / 2
            } else {
                0
            }
        })
        .collect();
    Element(exps)
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_rational).collect();
    format!("[{}]", parts.join(", "))
}

/// Gram matrices and inertias of `B_ω` and `B_ω^G`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResiduePairing {
    pub functional: Vec<Rational>,
    pub gram_full: RationalMatrix,
    /// Columns of the restriction map `Ω_ω^G → Ω_ω`.
    pub invariant_basis: Vec<Vec<Rational>>,
    pub gram_invariant: RationalMatrix,
    pub inertia_full: InertiaTriple,
    pub inertia_invariant: InertiaTriple,
}

impl ResiduePairing {
    pub fn signature(&self) -> i64 {
        self.inertia_invariant.signature()
    }
}

/// One common eigenspace block of the twist matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct IsotypicBlock {
    /// Per element, the order of its eigenvalues on the block.
    pub orders: Vec<u32>,
    /// Per element, the eigenvalue when the block carries a `±1` character.
    pub character: Option<Vec<i32>>,
    pub basis: Vec<Vec<Rational>>,
    pub inertia: InertiaTriple,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GSignature {
    pub elements: Vec<Element>,
    pub blocks: Vec<IsotypicBlock>,
    /// `Σ sgn(block)·χ(block)` when every block carries a `±1` character.
    pub virtual_character: Option<RepRingElement>,
}

impl GSignature {
    /// Signature on the block of the trivial character, 0 if there is none.
    pub fn trivial_part(&self) -> i64 {
        self.blocks
            .iter()
            .filter(|b| b.orders.iter().all(|&d| d == 1))
            .map(|b| b.inertia.signature())
            .sum()
    }
}

impl fmt::Display for GSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let label = match &b.character {
                Some(c) if c.iter().all(|&v| v == 1) => "trivial".to_string(),
                Some(c) => {
                    let parts: Vec<String> = self.elements.iter().zip(c).map(|(g, v)| format!("{g}:{v:+}")).collect();
                    parts.join(" ")
                }
                None => {
                    let parts: Vec<String> = self
                        .elements
                        .iter()
                        .zip(&b.orders)
                        .map(|(g, d)| format!("{g}:Φ{d}"))
                        .collect();
                    parts.join(" ")
                }
            };
            writeln!(
                f,
                "  block {label} | dim {} | inertia {} | signature {}",
                b.basis.len(),
                b.inertia,
                b.inertia.signature()
            )?;
        }
        match &self.virtual_character {
            Some(v) => write!(f, "  virtual character: {v}"),
            None => write!(f, "  virtual character: not a sum of ±1 characters"),
        }
    }
}

/// The signature of `B_ω^G`, reported as the radial index of the form pushed
/// down to the real quotient.
#[derive(Clone, Debug)]
pub struct RadialIndexReport {
    pub basis: Vec<String>,
    pub dim: usize,
    pub invariant_dim: usize,
    pub pairing: ResiduePairing,
    pub g_signature: GSignature,
    pub index: i64,
}

pub fn radial_index_report(omega: &OneForm, action: &MatrixAction) -> Result<RadialIndexReport> {
    let module = omega_module(omega, action)?;
    let pairing = module.residue_pairing()?;
    let g_signature = module.g_signature(&pairing);
    Ok(RadialIndexReport {
        basis: module.basis_names(),
        dim: module.dim(),
        invariant_dim: pairing.invariant_basis.len(),
        index: pairing.signature(),
        pairing,
        g_signature,
    })
}

impl fmt::Display for RadialIndexReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.pairing;
        writeln!(f, "dimension = {}", self.dim)?;
        writeln!(f, "basis = [{}]", self.basis.join(", "))?;
        writeln!(f, "invariant_dimension = {}", self.invariant_dim)?;
        writeln!(f, "functional = {}", fmt_vec(&p.functional))?;
        writeln!(f, "gram_full = {}", p.gram_full)?;
        let inv: Vec<String> = p.invariant_basis.iter().map(|v| fmt_vec(v)).collect();
        writeln!(f, "invariant_basis = [{}]", inv.join(", "))?;
        writeln!(f, "gram_invariant = {}", p.gram_invariant)?;
        writeln!(f, "inertia_full = {}", p.inertia_full)?;
        writeln!(f, "inertia_invariant = {}", p.inertia_invariant)?;
        writeln!(f, "signature = {}", p.signature())?;
        writeln!(f, "radial_index_on_quotient = {}", self.index)?;
        writeln!(f, "g_signature:")?;
        writeln!(f, "{}", self.g_signature)
    }
}

/// Signed count `Σ sign 𝒥(p)` over the real zeros of `ω`, all assumed nondegenerate.
///
/// Uses the trace form `(a, b) ↦ Tr(M_{𝒥ab})` on the global quotient, whose
/// signature counts real zeros weighted by the sign of `𝒥`.
pub fn global_signature(omega: &OneForm) -> Result<InertiaTriple> {
    let algebra = quotient_algebra(omega, MonomialOrder::GlobalDegRevLex)?;
    let n = algebra.dim();
    if n == 0 {
        return Ok(InertiaTriple::new(0, 0, 0));
    }
    let mj = algebra.multiplication_matrix(&omega.jacobian_det());
    let basis: Vec<RationalMatrix> = algebra
        .monomial_basis()
        .iter()
        .map(|m| {
            let mut acc = RationalMatrix::identity(n);
            for (k, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    acc = &acc * &algebra.mult_matrices()[k];
                }
            }
            acc
        })
        .collect();
    let trace = |m: &RationalMatrix| (0..n).fold(Rational::zero(), |s, i| s + m.get(i, i));
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        let a = &mj * &basis[i];
        for j in i..n {
            let t = trace(&(&a * &basis[j]));
            rows[j][i] = t.clone();
            rows[i][j] = t;
        }
    }
    Ok(inertia(&RationalMatrix::from_rows(rows)?))
}
