use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::group::{cyclotomic_poly, AbelianGroup, Element};

/// Element of `ℤ[ζ_M]`, stored reduced modulo `Φ_M` (coefficients of `ζ⁰ … ζ^{φ(M)−1}`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclotomicInt {
    modulus: u32,
    coeffs: Vec<i64>,
}

impl CyclotomicInt {
    pub fn zero(modulus: u32) -> Self {
        Self::from_powers(modulus, &[])
    }

    pub fn integer(modulus: u32, n: i64) -> Self {
        Self::from_powers(modulus, &[(0, n)])
    }

    /// `ζ_M^k`.
    pub fn root_power(modulus: u32, k: u32) -> Self {
        Self::from_powers(modulus, &[(k, 1)])
    }

    /// `Σ c·ζ^k` over the given `(k, c)` pairs.
    pub fn from_powers(modulus: u32, terms: &[(u32, i64)]) -> Self {
        assert!(modulus > 0);
        let mut dense = vec![0i64; modulus as usize];
        for &(k, c) in terms {
            dense[(k % modulus) as usize] += c;
        }
        Self::reduce(modulus, dense)
    }

    fn reduce(modulus: u32, mut dense: Vec<i64>) -> Self {
        let phi: Vec<i64> = cyclotomic_poly(modulus)
            .coeffs()
            .iter()
            .map(|c| c.to_integer().try_into().expect("cyclotomic coefficient fits i64"))
            .collect();
        let deg = phi.len() - 1;
        // Φ_M is monic with integer coefficients, so division stays integral
        while dense.len() > deg {
            let top = dense.pop().unwrap();
            if top != 0 {
                let shift = dense.len() - deg;
                for (j, &p) in phi[..deg].iter().enumerate() {
                    dense[shift + j] -= top * p;
                }
            }
        }
        dense.resize(deg, 0);
        Self { modulus, coeffs: dense }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as a rational integer, when it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .skip(1)
            .all(|&c| c == 0)
            .then(|| self.coeffs.first().copied().unwrap_or(0))
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        let theta = std::f64::consts::TAU / self.modulus as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| num_complex::Complex64::from_polar(c as f64, theta * k as f64))
            .sum()
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.modulus, rhs.modulus, "adding in different cyclotomic rings");
        CyclotomicInt {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.modulus, rhs.modulus, "multiplying in different cyclotomic rings");
        let mut dense = vec![0i64; self.coeffs.len() + rhs.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                dense[i + j] += a * b;
            }
        }
        CyclotomicInt::reduce(self.modulus, dense)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "z{}^{k}", self.modulus)?,
                _ => write!(f, "{a}*z{}^{k}", self.modulus)?,
            }
        }
        Ok(())
    }
}

/// Virtual representation `Σ n_χ·χ` of an abelian group, by irreducible characters.
///
/// Characters are exponent tuples `a` dual to the invariant factors:
/// `χ_a(g) = Π exp(2πi·a_k·g_k/m_k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepRingElement {
    group: AbelianGroup,
    multiplicities: BTreeMap<Element, i64>,
}

impl RepRingElement {
    pub fn zero(group: &AbelianGroup) -> Self {
        Self {
            group: group.clone(),
            multiplicities: BTreeMap::new(),
        }
    }

    pub fn character(group: &AbelianGroup, chi: Element) -> Self {
        let mut out = Self::zero(group);
        out.add_character(chi, 1);
        out
    }

    pub(crate) fn add_character(&mut self, chi: Element, n: i64) {
        let e = self.multiplicities.entry(chi.clone()).or_insert(0);
        *e += n;
        if *e == 0 {
            self.multiplicities.remove(&chi);
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn multiplicities(&self) -> &BTreeMap<Element, i64> {
        &self.multiplicities
    }

    /// `χ_a(g)` as a power of `ζ_M`, `M` the group exponent.
    pub fn pairing_exponent(group: &AbelianGroup, chi: &Element, g: &Element) -> u32 {
        let m = group.exponent();
        let mut k = 0u64;
        for ((a, x), f) in chi.0.iter().zip(&g.0).zip(group.invariant_factors()) {
            k += (*a as u64) * (*x as u64) * (m / f) as u64;
        }
        (k % m as u64) as u32
    }

    pub fn value_at(&self, g: &Element) -> CyclotomicInt {
        let m = self.group.exponent();
        let terms: Vec<(u32, i64)> = self
            .multiplicities
            .iter()
            .map(|(chi, &n)| (Self::pairing_exponent(&self.group, chi, g), n))
            .collect();
        CyclotomicInt::from_powers(m, &terms)
    }

    /// Character values on all elements, in canonical element order.
    pub fn character_values(&self) -> Vec<(Element, CyclotomicInt)> {
        self.group
            .elements()
            .into_iter()
            .map(|g| {
                let v = self.value_at(&g);
                (g, v)
            })
            .collect()
    }

    /// Virtual dimension, the value at the identity.
    pub fn dimension(&self) -> i64 {
        self.multiplicities.values().sum()
    }
}

impl Add for &RepRingElement {
    type Output = RepRingElement;

    fn add(self, rhs: &RepRingElement) -> RepRingElement {
        assert_eq!(self.group, rhs.group);
        let mut out = self.clone();
        for (chi, &n) in &rhs.multiplicities {
            out.add_character(chi.clone(), n);
        }
        out
    }
}

impl Mul for &RepRingElement {
    type Output = RepRingElement;

    /// Tensor product: `χ_a·χ_b = χ_{a+b}`.
    fn mul(self, rhs: &RepRingElement) -> RepRingElement {
        assert_eq!(self.group, rhs.group);
        let mut out = RepRingElement::zero(&self.group);
        for (a, &n) in &self.multiplicities {
            for (b, &k) in &rhs.multiplicities {
                out.add_character(self.group.compose(a, b), n * k);
            }
        }
        out
    }
}

impl fmt::Display for RepRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .map(|(chi, n)| format!("{n}*chi{chi}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_relations() {
        // 1 + ζ₃ + ζ₃² = 0
        let s = CyclotomicInt::from_powers(3, &[(0, 1), (1, 1), (2, 1)]);
        assert!(s.is_zero());
        // ζ₄² = −1
        assert_eq!(CyclotomicInt::root_power(4, 2).as_integer(), Some(-1));
        let z = CyclotomicInt::root_power(6, 1);
        assert_eq!((&(&z * &z) * &z).as_integer(), Some(-1));
        assert!(
            (CyclotomicInt::root_power(8, 3).to_complex()
                - num_complex::Complex64::from_polar(1.0, 3.0 * std::f64::consts::TAU / 8.0))
            .norm()
                < 1e-12
        );
    }

    #[test]
    fn character_sum_is_regular() {
        let g = AbelianGroup::new(vec![2, 3]).unwrap();
        let mut reg = RepRingElement::zero(&g);
        for chi in g.elements() {
            reg.add_character(chi, 1);
        }
        for (x, v) in reg.character_values() {
            let expect = if x == g.identity() { 6 } else { 0 };
            assert_eq!(v.as_integer(), Some(expect), "at {x}");
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(CyclotomicInt::integer(4, -3).to_string(), "-3");
        assert_eq!(
            CyclotomicInt::from_powers(4, &[(0, 2), (1, -1)]).to_string(),
            "2 - z4^1"
        );
    }
}
