//! Finite abelian groups acting linearly on `ℚⁿ`.
//!
//! A group is presented by invariant factors `ℤ/m₁ × … × ℤ/m_k`; an action assigns
//! one rational matrix to each factor generator. Elements are exponent tuples and
//! are enumerated lexicographically, identity first.

mod cyclotomic;
mod lattice;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{canonical_span, int, Rational, RationalMatrix};
use crate::poly::{act_linear, OneForm, Poly};

pub use cyclotomic::{cyclotomic_blocks, cyclotomic_poly, CyclotomicBlock};
pub use lattice::{subgroup_lattice, Subgroup, SubgroupLattice, DEFAULT_LATTICE_BOUND};

/// Exponent tuple `(a₁, …, a_k)` standing for `g₁^{a₁}⋯g_k^{a_k}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Element(pub Vec<u32>);

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `ℤ/m₁ × … × ℤ/m_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AbelianGroup {
    invariant_factors: Vec<u32>,
}

impl AbelianGroup {
    pub fn new(invariant_factors: Vec<u32>) -> Result<Self> {
        if invariant_factors.contains(&0) {
            return Err(Error::InvalidAction("invariant factors must be positive".into()));
        }
        Ok(Self { invariant_factors })
    }

    pub fn trivial() -> Self {
        Self {
            invariant_factors: Vec::new(),
        }
    }

    pub fn cyclic(m: u32) -> Self {
        Self::new(vec![m]).expect("positive order")
    }

    pub fn invariant_factors(&self) -> &[u32] {
        &self.invariant_factors
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn order(&self) -> usize {
        self.invariant_factors.iter().map(|&m| m as usize).product()
    }

    pub fn identity(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    /// All elements in lexicographic order of exponent tuples.
    pub fn elements(&self) -> Vec<Element> {
        (0..self.order()).map(|i| self.element_at(i)).collect()
    }

    /// Element with lexicographic index `i`.
    pub fn element_at(&self, mut i: usize) -> Element {
        let mut e = vec![0; self.rank()];
        for (k, &m) in self.invariant_factors.iter().enumerate().rev() {
            e[k] = (i % m as usize) as u32;
            i /= m as usize;
        }
        Element(e)
    }

    pub fn index_of(&self, a: &Element) -> usize {
        a.0.iter()
            .zip(&self.invariant_factors)
            .fold(0, |acc, (&x, &m)| acc * m as usize + (x % m) as usize)
    }

    pub fn contains(&self, a: &Element) -> bool {
        a.0.len() == self.rank() && a.0.iter().zip(&self.invariant_factors).all(|(x, m)| x < m)
    }

    pub fn compose(&self, a: &Element, b: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.invariant_factors)
                .map(|((x, y), m)| (x + y) % m)
                .collect(),
        )
    }

    pub fn inverse(&self, a: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&self.invariant_factors)
                .map(|(x, m)| (m - x % m) % m)
                .collect(),
        )
    }

    pub fn element_order(&self, a: &Element) -> u32 {
        a.0.iter()
            .zip(&self.invariant_factors)
            .map(|(&x, &m)| m / gcd(x % m, m))
            .fold(1, lcm)
    }

    /// Least common multiple of the invariant factors.
    pub fn exponent(&self) -> u32 {
        self.invariant_factors.iter().copied().fold(1, lcm)
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

/// A representation of an [`AbelianGroup`] on `ℚⁿ` by commuting finite-order matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixAction {
    group: AbelianGroup,
    dim: usize,
    generators: Vec<RationalMatrix>,
    matrices: Vec<RationalMatrix>,
}

impl MatrixAction {
    /// Validates shapes, commutativity and generator orders.
    pub fn new(group: AbelianGroup, dim: usize, generators: Vec<RationalMatrix>) -> Result<Self> {
        if generators.len() != group.rank() {
            return Err(Error::InvalidAction(format!(
                "{} generator matrices for {} invariant factors",
                generators.len(),
                group.rank()
            )));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::InvalidAction(format!(
                    "generator {i} is {}×{}, expected {dim}×{dim}",
                    g.rows(),
                    g.cols()
                )));
            }
            let m = group.invariant_factors()[i];
            if !g.pow(m as u64).is_identity() {
                return Err(Error::InvalidAction(format!(
                    "generator {i} does not have order dividing {m}"
                )));
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if &generators[i] * &generators[j] != &generators[j] * &generators[i] {
                    return Err(Error::InvalidAction(format!("generators {i} and {j} do not commute")));
                }
            }
        }
        let matrices = group
            .elements()
            .iter()
            .map(|a| {
                a.0.iter()
                    .zip(&generators)
                    .fold(RationalMatrix::identity(dim), |acc, (&e, g)| &acc * &g.pow(e as u64))
            })
            .collect();
        Ok(Self {
            group,
            dim,
            generators,
            matrices,
        })
    }

    pub fn trivial(dim: usize) -> Self {
        Self::new(AbelianGroup::trivial(), dim, Vec::new()).expect("trivial action")
    }

    /// `ℤ₂` acting by `x ↦ −x`.
    pub fn antipodal(dim: usize) -> Self {
        let g = RationalMatrix::identity(dim).scale(&int(-1));
        Self::new(AbelianGroup::cyclic(2), dim, vec![g]).expect("antipodal action")
    }

    /// `ℤ₂ⁿ` acting by independent sign changes of the coordinates.
    pub fn sign_changes(dim: usize) -> Self {
        let gens = (0..dim)
            .map(|i| {
                let mut d = vec![Rational::one(); dim];
                d[i] = int(-1);
                RationalMatrix::diagonal(&d)
            })
            .collect();
        Self::new(AbelianGroup::new(vec![2; dim]).unwrap(), dim, gens).expect("sign action")
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[RationalMatrix] {
        &self.generators
    }

    /// Matrix of the element `a`; exponents are read modulo the invariant factors.
    pub fn element_matrix(&self, a: &Element) -> &RationalMatrix {
        &self.matrices[self.group.index_of(a)]
    }

    /// Element matrices in the order of [`AbelianGroup::elements`].
    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    /// `det g ∈ {±1}` for the element `a`.
    pub fn det(&self, a: &Element) -> i32 {
        let d = self.element_matrix(a).determinant();
        if d.is_one() {
            1
        } else {
            debug_assert_eq!(d, int(-1), "finite-order rational matrix has det ±1");
            -1
        }
    }

    /// `(element, det)` for every element.
    pub fn det_character(&self) -> Vec<(Element, i32)> {
        self.group
            .elements()
            .into_iter()
            .map(|a| {
                let d = self.det(&a);
                (a, d)
            })
            .collect()
    }

    /// Kernel `K` of the determinant character.
    pub fn det_kernel(&self) -> Vec<Element> {
        self.det_character()
            .into_iter()
            .filter(|(_, d)| *d == 1)
            .map(|(a, _)| a)
            .collect()
    }

    /// Row-reduced bases of `ker(g − I)` and `ker(g + I)`.
    pub fn pm_eigenspaces(&self, a: &Element) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
        let g = self.element_matrix(a);
        let id = RationalMatrix::identity(self.dim);
        let plus = canonical_span(self.dim, &(g - &id).kernel_basis());
        let minus = canonical_span(self.dim, &(g + &id).kernel_basis());
        (plus, minus)
    }

    /// Row-reduced basis of the fixed subspace of `a`.
    pub fn fixed_subspace(&self, a: &Element) -> Vec<Vec<Rational>> {
        self.pm_eigenspaces(a).0
    }

    /// Components of `ℝⁿ = ⊕ ℝⁿ_{g+} ⊕ iℝⁿ_{g−}` making up the preimage of the real quotient.
    ///
    /// One stratum per element of even order plus the identity, deduplicated by subspace.
    pub fn stratify(&self) -> Vec<Stratum> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for a in self.group.elements() {
            let ord = self.group.element_order(&a);
            if ord != 1 && ord % 2 == 1 {
                continue;
            }
            let (plus, minus) = self.pm_eigenspaces(&a);
            if !seen.insert(key(&plus, &minus)) {
                continue;
            }
            let k = minus.len();
            out.push(Stratum {
                element: a,
                plus_basis: plus,
                minus_basis: minus,
                k,
            });
        }
        out
    }

    /// Common refinement of the cyclotomic primary decompositions of every element.
    pub fn isotypic_refinement(&self) -> Vec<CyclotomicBlock> {
        let ops: Vec<(RationalMatrix, u32)> = self
            .group
            .elements()
            .iter()
            .map(|a| (self.element_matrix(a).clone(), self.group.element_order(a)))
            .collect();
        cyclotomic_blocks(self.dim, &ops)
    }

    /// Restriction to an invariant subspace spanned by the columns of `basis`.
    pub fn restrict(&self, basis: &RationalMatrix) -> Result<MatrixAction> {
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                basis
                    .solve_full_column_rank(&(g * basis))
                    .ok_or_else(|| Error::InvalidAction(format!("subspace is not invariant under generator {i}")))
            })
            .collect::<Result<Vec<_>>>()?;
        MatrixAction::new(self.group.clone(), basis.cols(), gens)
    }

    /// Index of the first generator under which `ω` is not invariant.
    pub fn check_form(&self, omega: &OneForm) -> Result<()> {
        if omega.nvars() != self.dim {
            return Err(Error::Dimension(format!(
                "form in {} variables, action on dimension {}",
                omega.nvars(),
                self.dim
            )));
        }
        match self.generators.iter().position(|g| !omega.is_invariant_under(g)) {
            Some(generator) => Err(Error::NotInvariant { generator }),
            None => Ok(()),
        }
    }

    /// Same check for a function, `f ∘ g⁻¹ = f`.
    pub fn check_function(&self, f: &Poly) -> Result<()> {
        if f.nvars() != self.dim {
            return Err(Error::Dimension(format!(
                "function in {} variables, action on dimension {}",
                f.nvars(),
                self.dim
            )));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if act_linear(f, g)? != *f {
                return Err(Error::NotInvariant { generator: i });
            }
        }
        Ok(())
    }

    /// Group average `(1/|G|) Σ_g p ∘ g⁻¹`.
    pub fn reynolds(&self, p: &Poly) -> Poly {
        let mut acc = Poly::zero(p.nvars());
        for g in &self.matrices {
            acc = &acc + &act_linear(p, g).expect("group matrices are invertible");
        }
        acc.scale(&Rational::from_integer((self.group.order() as i64).into()).recip())
    }

    /// Exact test of `g·v = v`.
    pub fn fixes(&self, a: &Element, v: &[Rational]) -> bool {
        self.element_matrix(a)
            .mul_vec(v)
            .iter()
            .zip(v)
            .all(|(x, y)| (x - y).is_zero())
    }
}

fn key(plus: &[Vec<Rational>], minus: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    (plus.to_vec(), minus.to_vec())
}

/// `ℝⁿ_{g+} ⊕ iℝⁿ_{g−}` for one element `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct Stratum {
    pub element: Element,
    pub plus_basis: Vec<Vec<Rational>>,
    pub minus_basis: Vec<Vec<Rational>>,
    /// `dim ℝⁿ_{g−}`.
    pub k: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot3() -> RationalMatrix {
        // order-3 rotation on the plane in a rational basis
        RationalMatrix::from_i64_rows(&[&[0, -1], &[1, -1]])
    }

    #[test]
    fn element_matrices() {
        let a = MatrixAction::antipodal(2);
        assert!(a.element_matrix(&a.group().identity()).is_identity());
        assert_eq!(
            a.element_matrix(&Element(vec![1])),
            &RationalMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]])
        );
        let s = MatrixAction::sign_changes(2);
        assert_eq!(
            s.element_matrix(&Element(vec![1, 0])),
            &RationalMatrix::from_i64_rows(&[&[-1, 0], &[0, 1]])
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(MatrixAction::antipodal(3).det(&Element(vec![1])), -1);
        assert_eq!(MatrixAction::antipodal(2).det(&Element(vec![1])), 1);
        assert_eq!(MatrixAction::sign_changes(2).det(&Element(vec![1, 0])), -1);
        assert_eq!(
            MatrixAction::sign_changes(2).det_kernel(),
            vec![Element(vec![0, 0]), Element(vec![1, 1])]
        );
    }

    #[test]
    fn eigenspaces() {
        let a = MatrixAction::antipodal(2);
        let (p, m) = a.pm_eigenspaces(&Element(vec![1]));
        assert!(p.is_empty());
        assert_eq!(m.len(), 2);
        let (p, m) = a.pm_eigenspaces(&Element(vec![0]));
        assert_eq!((p.len(), m.len()), (2, 0));
        let s = MatrixAction::sign_changes(2);
        let (p, m) = s.pm_eigenspaces(&Element(vec![0, 1]));
        assert_eq!(p, vec![vec![int(1), int(0)]]);
        assert_eq!(m, vec![vec![int(0), int(1)]]);
    }

    #[test]
    fn strata() {
        assert_eq!(MatrixAction::antipodal(2).stratify().len(), 2);
        let z3 = MatrixAction::new(AbelianGroup::cyclic(3), 2, vec![rot3()]).unwrap();
        let s = z3.stratify();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].plus_basis.len(), 2);
        let s = MatrixAction::sign_changes(2).stratify();
        assert_eq!(s.len(), 4);
        let ks: Vec<usize> = s.iter().map(|x| x.k).collect();
        assert_eq!(ks, vec![0, 1, 1, 2]);
    }

    #[test]
    fn strata_deduplicate_unfaithful_elements() {
        // ℤ₄ acting through its ℤ₂ quotient: g and g³ give the same subspace
        let g = RationalMatrix::from_i64_rows(&[&[-1]]);
        let a = MatrixAction::new(AbelianGroup::cyclic(4), 1, vec![g]).unwrap();
        assert_eq!(a.stratify().len(), 2);
    }

    #[test]
    fn invalid_actions_rejected() {
        let a = RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let b = RationalMatrix::from_i64_rows(&[&[-1, 0], &[0, 1]]);
        let err = MatrixAction::new(AbelianGroup::new(vec![2, 2]).unwrap(), 2, vec![a.clone(), b]).unwrap_err();
        assert!(err.to_string().contains("do not commute"), "{err}");
        let err = MatrixAction::new(AbelianGroup::cyclic(3), 2, vec![a]).unwrap_err();
        assert!(err.to_string().contains("order"), "{err}");
    }

    #[test]
    fn isotypic_examples() {
        assert_eq!(MatrixAction::antipodal(2).isotypic_refinement().len(), 1);
        let s = MatrixAction::new(
            AbelianGroup::cyclic(2),
            2,
            vec![RationalMatrix::from_i64_rows(&[&[-1, 0], &[0, 1]])],
        )
        .unwrap();
        let blocks = s.isotypic_refinement();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.basis.len() == 1));
        let mut g = RationalMatrix::identity(3);
        for i in 0..2 {
            for j in 0..2 {
                g.set(i, j, rot3().get(i, j).clone());
            }
        }
        let r = MatrixAction::new(AbelianGroup::cyclic(3), 3, vec![g]).unwrap();
        let mut dims: Vec<usize> = r.isotypic_refinement().iter().map(|b| b.basis.len()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2]);
    }

    #[test]
    fn refinement_needs_all_elements() {
        // g = R ⊕ R, h = R ⊕ R⁻¹: both generators are Φ₃ everywhere but gh splits
        let r = rot3();
        let r2 = r.pow(2);
        let block = |a: &RationalMatrix, b: &RationalMatrix| {
            let mut m = RationalMatrix::zeros(4, 4);
            for i in 0..2 {
                for j in 0..2 {
                    m.set(i, j, a.get(i, j).clone());
                    m.set(i + 2, j + 2, b.get(i, j).clone());
                }
            }
            m
        };
        let act = MatrixAction::new(
            AbelianGroup::new(vec![3, 3]).unwrap(),
            4,
            vec![block(&r, &r), block(&r, &r2)],
        )
        .unwrap();
        let blocks = act.isotypic_refinement();
        assert_eq!(blocks.len(), 2);
        for b in &blocks {
            let basis = RationalMatrix::from_columns(4, &b.basis);
            for m in act.matrices() {
                assert!(basis.solve_full_column_rank(&(m * &basis)).is_some());
            }
        }
    }

    #[test]
    fn restriction_to_fixed_line() {
        let s = MatrixAction::sign_changes(2);
        let basis = RationalMatrix::from_columns(2, &[vec![int(1), int(0)]]);
        let r = s.restrict(&basis).unwrap();
        assert_eq!(r.generators()[0], RationalMatrix::from_i64_rows(&[&[-1]]));
        assert!(r.generators()[1].is_identity());
        let bad = RationalMatrix::from_columns(2, &[vec![int(1), int(1)]]);
        assert!(s.restrict(&bad).is_err());
    }

    #[test]
    fn form_invariance_names_generator() {
        let names = crate::poly::default_names(2);
        let w = OneForm::differential(&Poly::parse("x1^2 + x1*x2^2", &names).unwrap());
        assert_eq!(
            MatrixAction::sign_changes(2).check_form(&w),
            Err(Error::NotInvariant { generator: 0 })
        );
        let w = OneForm::differential(&Poly::parse("x1^2 - x2^2", &names).unwrap());
        assert_eq!(MatrixAction::antipodal(2).check_form(&w), Ok(()));
    }
}
