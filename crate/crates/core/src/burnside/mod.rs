//! The Burnside ring `A(G)` of a finite abelian group.
//!
//! Classes `[G/H]` are indexed by position in the subgroup lattice of the ambient
//! group, so the rings `A(G_p)` of subgroups share indices with `A(G)` and
//! induction is a relabeling. In the abelian case every point of `G/H × G/K`
//! has stabilizer `H ∩ K`, which gives the product rule
//! `[G/H]·[G/K] = (|G|·|H∩K| / (|H|·|K|))·[G/(H∩K)]`.

mod expr;
mod rep;

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{subgroup_lattice, AbelianGroup, Element, SubgroupLattice, DEFAULT_LATTICE_BOUND};

pub use rep::{CyclotomicInt, RepRingElement};

/// Integer combination `Σ a_H [G/H]`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BurnsideElement {
    top: usize,
    coeffs: BTreeMap<usize, i64>,
}

impl BurnsideElement {
    fn new(top: usize) -> Self {
        Self {
            top,
            coeffs: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, h: usize, c: i64) {
        let e = self.coeffs.entry(h).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&h);
        }
    }

    /// `(subgroup index, coefficient)` pairs in index order.
    pub fn coefficients(&self) -> &BTreeMap<usize, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, h: usize) -> i64 {
        self.coeffs.get(&h).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, n: i64) -> Self {
        let mut out = Self::new(self.top);
        for (&h, &c) in &self.coeffs {
            out.add_term(h, c * n);
        }
        out
    }
}

impl Add for &BurnsideElement {
    type Output = BurnsideElement;

    fn add(self, rhs: &BurnsideElement) -> BurnsideElement {
        assert_eq!(self.top, rhs.top, "adding elements of different Burnside rings");
        let mut out = self.clone();
        for (&h, &c) in &rhs.coeffs {
            out.add_term(h, c);
        }
        out
    }
}

impl Sub for &BurnsideElement {
    type Output = BurnsideElement;

    fn sub(self, rhs: &BurnsideElement) -> BurnsideElement {
        self + &rhs.scale(-1)
    }
}

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;

    fn neg(self) -> BurnsideElement {
        self.scale(-1)
    }
}

/// `r⁽⁰⁾a = Σ a_H`, the Euler characteristic of the orbit space.
pub fn r0(a: &BurnsideElement) -> i64 {
    a.coeffs.values().sum()
}

/// `A(G_top)` for a subgroup `G_top` of an ambient group, usually the ambient group itself.
#[derive(Clone, Debug, PartialEq)]
pub struct BurnsideRing {
    lattice: Arc<SubgroupLattice>,
    top: usize,
}

impl BurnsideRing {
    /// `A(G)` with the default lattice bound.
    pub fn new(group: &AbelianGroup) -> Result<Self> {
        Ok(Self::from_lattice(subgroup_lattice(group, DEFAULT_LATTICE_BOUND)?))
    }

    pub fn from_lattice(lattice: SubgroupLattice) -> Self {
        let top = lattice.whole_index();
        Self {
            lattice: Arc::new(lattice),
            top,
        }
    }

    /// `A(G_p)` for the subgroup with lattice index `top`.
    pub fn subring(&self, top: usize) -> Self {
        Self {
            lattice: Arc::clone(&self.lattice),
            top,
        }
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_full(&self) -> bool {
        self.top == self.lattice.whole_index()
    }

    pub fn top_order(&self) -> usize {
        self.lattice.get(self.top).order()
    }

    /// Lattice indices of the subgroups of `G_top`.
    pub fn subgroups(&self) -> Vec<usize> {
        (0..self.lattice.len())
            .filter(|&h| self.lattice.includes(h, self.top))
            .collect()
    }

    pub fn zero(&self) -> BurnsideElement {
        BurnsideElement::new(self.top)
    }

    /// The unit `[G/G]`.
    pub fn one(&self) -> BurnsideElement {
        self.class(self.top).expect("top class exists")
    }

    /// The class `[G/H]` for lattice index `h`.
    pub fn class(&self, h: usize) -> Result<BurnsideElement> {
        self.element(&[(h, 1)])
    }

    pub fn element(&self, terms: &[(usize, i64)]) -> Result<BurnsideElement> {
        let mut out = self.zero();
        for &(h, c) in terms {
            if h >= self.lattice.len() || !self.lattice.includes(h, self.top) {
                return Err(Error::SubgroupMismatch(format!(
                    "H{h} is not a subgroup of H{}",
                    self.top
                )));
            }
            out.add_term(h, c);
        }
        Ok(out)
    }

    fn check(&self, a: &BurnsideElement) {
        assert_eq!(a.top, self.top, "element belongs to a different Burnside ring");
    }

    pub fn multiply(&self, a: &BurnsideElement, b: &BurnsideElement) -> BurnsideElement {
        self.check(a);
        self.check(b);
        let g = self.top_order() as i64;
        let mut out = self.zero();
        for (&h, &x) in &a.coeffs {
            for (&k, &y) in &b.coeffs {
                let hk = self.lattice.intersection_index(h, k);
                let oh = self.lattice.get(h).order() as i64;
                let ok = self.lattice.get(k).order() as i64;
                let ohk = self.lattice.get(hk).order() as i64;
                let c = g * ohk / (oh * ok);
                debug_assert_eq!(c * oh * ok, g * ohk, "orbit count is integral");
                out.add_term(hk, x * y * c);
            }
        }
        out
    }

    pub fn r0(&self, a: &BurnsideElement) -> i64 {
        self.check(a);
        r0(a)
    }

    /// `r⁽¹⁾a = Σ a_H·|H|`.
    pub fn r1(&self, a: &BurnsideElement) -> i64 {
        self.check(a);
        a.coeffs
            .iter()
            .map(|(&h, &c)| c * self.lattice.get(h).order() as i64)
            .sum()
    }

    /// Linear representation on functions: `[G/H] ↦ Σ_{χ|_H = 1} χ`.
    ///
    /// Requires the ring of the ambient group, whose characters are indexed by
    /// exponent tuples.
    pub fn to_rep_ring(&self, a: &BurnsideElement) -> Result<RepRingElement> {
        self.check(a);
        if !self.is_full() {
            return Err(Error::SubgroupMismatch(
                "representation ring is only available for the ambient group".into(),
            ));
        }
        let group = self.lattice.group();
        let m = group.exponent();
        let mut out = RepRingElement::zero(group);
        for (&h, &c) in &a.coeffs {
            let sub = self.lattice.get(h);
            for chi in group.elements() {
                let trivial = sub
                    .elements()
                    .iter()
                    .all(|x| RepRingElement::pairing_exponent(group, &chi, x).is_multiple_of(m));
                if trivial {
                    out.add_character(chi, c);
                }
            }
        }
        Ok(out)
    }

    /// Induction `A(G_p) → A(G)`, `[G_p/H] ↦ [G/H]`, into this ring.
    pub fn induce(&self, a: &BurnsideElement) -> Result<BurnsideElement> {
        if !self.lattice.includes(a.top, self.top) {
            return Err(Error::SubgroupMismatch(format!(
                "H{} is not a subgroup of H{}",
                a.top, self.top
            )));
        }
        let mut out = self.zero();
        for (&h, &c) in &a.coeffs {
            out.add_term(h, c);
        }
        Ok(out)
    }

    /// Coefficients of `a` on classes listed by the subgroups of `G_top`.
    pub fn multiplicities(&self, a: &BurnsideElement) -> Vec<(usize, i64)> {
        self.check(a);
        self.subgroups().into_iter().map(|h| (h, a.coeff(h))).collect()
    }

    /// Text form such as `1 - 2*[G/H0]`; the unit class prints as an integer.
    pub fn format(&self, a: &BurnsideElement) -> String {
        self.check(a);
        let mut terms: Vec<(usize, i64)> = a.coeffs.iter().map(|(&h, &c)| (h, c)).collect();
        terms.sort_by_key(|&(h, _)| (h != self.top, h));
        if terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (h, c)) in terms.into_iter().enumerate() {
            if k == 0 {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { " - " } else { " + " });
            }
            let abs = c.abs();
            if h == self.top {
                s.push_str(&abs.to_string());
            } else if abs == 1 {
                s.push_str(&format!("[G/H{h}]"));
            } else {
                s.push_str(&format!("{abs}*[G/H{h}]"));
            }
        }
        s
    }

    /// Parses `+ - *` expressions over integers, classes `[G/Hi]`, parentheses and
    /// names bound in `env`.
    pub fn parse(&self, text: &str, env: &BTreeMap<String, BurnsideElement>) -> Result<BurnsideElement> {
        expr::parse(self, text, env)
    }
}

/// Decomposition of the `G`-set `G/H × G/K` into orbits, by explicit enumeration.
///
/// Independent of the product rule; used to cross-check [`BurnsideRing::multiply`].
pub fn product_by_orbit_enumeration(ring: &BurnsideRing, h: usize, k: usize) -> BurnsideElement {
    let lattice = ring.lattice();
    let group = lattice.group();
    let top = lattice.get(ring.top());
    let elements: Vec<Element> = top.elements().to_vec();
    let coset = |x: &Element, sub: usize| -> Vec<usize> {
        let mut c: Vec<usize> = lattice
            .get(sub)
            .elements()
            .iter()
            .map(|s| group.index_of(&group.compose(x, s)))
            .collect();
        c.sort_unstable();
        c
    };
    let mut points = Vec::new();
    for x in &elements {
        for y in &elements {
            let p = (coset(x, h), coset(y, k));
            if !points.contains(&p) {
                points.push(p);
            }
        }
    }
    let act = |g: &Element, c: &[usize]| -> Vec<usize> {
        let mut v: Vec<usize> = c
            .iter()
            .map(|&i| group.index_of(&group.compose(g, &group.element_at(i))))
            .collect();
        v.sort_unstable();
        v
    };
    let mut seen = vec![false; points.len()];
    let mut out = ring.zero();
    for i in 0..points.len() {
        if seen[i] {
            continue;
        }
        let (a, b) = &points[i];
        let mut stabilizer = Vec::new();
        for g in &elements {
            let moved = (act(g, a), act(g, b));
            let j = points.iter().position(|p| *p == moved).unwrap();
            seen[j] = true;
            if j == i {
                stabilizer.push(g.clone());
            }
        }
        let s = lattice.find(&stabilizer).expect("stabilizers are subgroups");
        out.add_term(s, 1);
    }
    out
}
