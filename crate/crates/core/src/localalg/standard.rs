use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::exactlin::Rational;
use crate::poly::{Monomial, Poly};

/// Degree-reverse-lexicographic orders, global or local.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Negative degree, ties broken reverse-lexicographically; `1` is the largest monomial.
    LocalDegRevLex,
    /// Degree first, ties broken reverse-lexicographically; a well-order.
    GlobalDegRevLex,
}

impl MonomialOrder {
    pub fn is_local(self) -> bool {
        self == Self::LocalDegRevLex
    }

    /// `Greater` means `a` is larger than `b` in this order.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        let by_degree = a.degree().cmp(&b.degree());
        let by_degree = match self {
            Self::GlobalDegRevLex => by_degree,
            Self::LocalDegRevLex => by_degree.reverse(),
        };
        by_degree.then_with(|| revlex(a, b))
    }

    pub fn leading_monomial(self, p: &Poly) -> Option<&Monomial> {
        p.terms().map(|(m, _)| m).max_by(|a, b| self.cmp(a, b))
    }

    pub fn leading_term(self, p: &Poly) -> Option<(Monomial, Rational)> {
        p.terms()
            .max_by(|a, b| self.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
    }
}

/// The last variable in which the exponents differ decides; a smaller exponent wins.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn ecart(p: &Poly, lm: &Monomial) -> u32 {
    p.total_degree().unwrap_or(0) - lm.degree()
}

fn make_monic(p: &Poly, order: MonomialOrder) -> Poly {
    match order.leading_term(p) {
        Some((_, c)) if !c.is_one() => p.scale(&c.recip()),
        _ => p.clone(),
    }
}

/// `h − (LT(h)/LT(g))·g`, cancelling the leading term of `h`.
fn reduce_lead(h: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let (mh, ch) = order.leading_term(h).expect("reducing zero");
    let (mg, cg) = order.leading_term(g).expect("reducing by zero");
    let q = mg.quotient_of(&mh).expect("leading monomial does not divide");
    h - &g.mul_term(&q, &(ch / cg))
}

fn spoly(f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let (mf, cf) = order.leading_term(f).unwrap();
    let (mg, cg) = order.leading_term(g).unwrap();
    let l = mf.lcm(&mg);
    let a = f.mul_term(&mf.quotient_of(&l).unwrap(), &cg);
    let b = g.mul_term(&mg.quotient_of(&l).unwrap(), &cf);
    &a - &b
}

/// Weak normal form with respect to a local order, selecting reducers of least écart.
///
/// The result `h` satisfies `u·f − h ∈ ⟨G⟩` for a polynomial `u` with `u(0) ≠ 0`, and
/// `LM(h)` is not divisible by any `LM(g)` unless `h = 0`.
fn mora_normal_form(f: &Poly, basis: &[Poly], order: MonomialOrder) -> Poly {
    let mut h = f.clone();
    let mut t: Vec<(Poly, Monomial, u32)> = basis
        .iter()
        .map(|g| {
            let lm = order.leading_monomial(g).unwrap().clone();
            let e = ecart(g, &lm);
            (g.clone(), lm, e)
        })
        .collect();
    while let Some(lm_h) = order.leading_monomial(&h).cloned() {
        let best = t
            .iter()
            .enumerate()
            .filter(|(_, (_, lm, _))| lm.divides(&lm_h))
            .min_by_key(|(i, (_, _, e))| (*e, *i))
            .map(|(i, _)| i);
        let Some(i) = best else {
            break;
        };
        let ecart_h = ecart(&h, &lm_h);
        let g = t[i].0.clone();
        if t[i].2 > ecart_h {
            t.push((h.clone(), lm_h, ecart_h));
        }
        h = reduce_lead(&h, &g, order);
    }
    h
}

/// Full reduction with respect to a global order; every term of the result is standard.
pub(crate) fn global_normal_form(f: &Poly, basis: &[Poly], order: MonomialOrder) -> Poly {
    debug_assert!(!order.is_local());
    let leads: Vec<(Monomial, Rational)> = basis.iter().map(|g| order.leading_term(g).unwrap()).collect();
    let mut h = f.clone();
    let mut rem = Poly::zero(f.nvars());
    while let Some((m, c)) = order.leading_term(&h) {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(i) => {
                let q = leads[i].0.quotient_of(&m).unwrap();
                h = &h - &basis[i].mul_term(&q, &(&c / &leads[i].1));
            }
            None => {
                let t = Poly::monomial(m, c);
                h = &h - &t;
                rem = &rem + &t;
            }
        }
    }
    rem
}

fn normal_form(f: &Poly, basis: &[Poly], order: MonomialOrder) -> Poly {
    match order {
        MonomialOrder::LocalDegRevLex => mora_normal_form(f, basis, order),
        MonomialOrder::GlobalDegRevLex => global_normal_form(f, basis, order),
    }
}

/// Standard basis of the ideal generated by `gens`: a Gröbner basis for the global order,
/// a Mora standard basis of the localization at the origin for the local order.
///
/// The result is minimal (no leading monomial divides another) with leading coefficient
/// `1`, and tail-reduced for the global order. A unit ideal yields `[1]`.
pub fn standard_basis(gens: &[Poly], order: MonomialOrder) -> Vec<Poly> {
    let Some(nvars) = gens.first().map(Poly::nvars) else {
        return Vec::new();
    };
    let mut basis: Vec<Poly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| make_monic(g, order))
        .collect();
    if basis.is_empty() {
        return basis;
    }
    let lm = |p: &Poly| order.leading_monomial(p).unwrap().clone();
    if basis.iter().any(|g| lm(g).is_one()) {
        return vec![Poly::one(nvars)];
    }

    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        if lm(&basis[i]).coprime(&lm(&basis[j])) {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], order);
        if s.is_zero() {
            continue;
        }
        let h = normal_form(&s, &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = make_monic(&h, order);
        if lm(&h).is_one() {
            return vec![Poly::one(nvars)];
        }
        let k = basis.len();
        basis.push(h);
        pairs.extend((0..k).map(|i| (i, k)));
    }

    // minimalize: keep one element per minimal leading monomial
    let leads: Vec<Monomial> = basis.iter().map(lm).collect();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant =
            (0..basis.len()).any(|j| j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i));
        if !redundant {
            keep.push(i);
        }
    }
    let mut out: Vec<Poly> = keep.into_iter().map(|i| basis[i].clone()).collect();
    if !order.is_local() {
        for k in 0..out.len() {
            let others: Vec<Poly> = out
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, p)| p.clone())
                .collect();
            let (m, c) = order.leading_term(&out[k]).unwrap();
            let tail = &out[k] - &Poly::monomial(m.clone(), c.clone());
            let reduced = global_normal_form(&tail, &others, order);
            out[k] = &Poly::monomial(m, c) + &reduced;
        }
    }
    out.sort_by(|a, b| order.cmp(&lm(b), &lm(a)));
    out
}

/// Reduction of `p` modulo `I + mᴺ` where every monomial of degree `≥ N` lies in `L(I)`.
///
/// Repeatedly cancels the largest (local order) term whose monomial lies in `L(I)`; the
/// remaining terms are standard monomials of degree `< N`.
pub(crate) fn truncated_local_reduce(p: &Poly, basis: &[Poly], bound: u32) -> Poly {
    let order = MonomialOrder::LocalDegRevLex;
    let leads: Vec<(Monomial, Rational)> = basis.iter().map(|g| order.leading_term(g).unwrap()).collect();
    let mut h = p.truncate(bound);
    loop {
        let target = h
            .terms()
            .filter_map(|(m, c)| {
                leads
                    .iter()
                    .position(|(lm, _)| lm.divides(m))
                    .map(|i| (m.clone(), c.clone(), i))
            })
            .max_by(|a, b| order.cmp(&a.0, &b.0));
        let Some((m, c, i)) = target else {
            return h;
        };
        let q = leads[i].0.quotient_of(&m).unwrap();
        let sub = basis[i].mul_term(&q, &(&c / &leads[i].1)).truncate(bound);
        h = &h - &sub;
        debug_assert!(h.coeff(&m).is_zero());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::default_names;

    fn p(s: &str, n: usize) -> Poly {
        Poly::parse(s, &default_names(n)).unwrap()
    }

    #[test]
    fn orders_on_two_variables() {
        let one = Monomial::new(vec![0, 0]);
        let x = Monomial::new(vec![1, 0]);
        let y = Monomial::new(vec![0, 1]);
        let x2 = Monomial::new(vec![2, 0]);
        let g = MonomialOrder::GlobalDegRevLex;
        let l = MonomialOrder::LocalDegRevLex;
        assert_eq!(g.cmp(&x2, &x), Ordering::Greater);
        assert_eq!(l.cmp(&one, &x), Ordering::Greater);
        assert_eq!(l.cmp(&x, &x2), Ordering::Greater);
        assert_eq!(g.cmp(&x, &y), Ordering::Greater);
        assert_eq!(l.cmp(&x, &y), Ordering::Greater);
    }

    #[test]
    fn linear_generators_either_order() {
        for order in [MonomialOrder::LocalDegRevLex, MonomialOrder::GlobalDegRevLex] {
            let sb = standard_basis(&[p("2*x1", 2), p("2*x2", 2)], order);
            assert_eq!(sb, vec![p("x1", 2), p("x2", 2)]);
        }
    }

    #[test]
    fn cubic_generator_made_monic() {
        let sb = standard_basis(&[p("4*x1^3", 1)], MonomialOrder::LocalDegRevLex);
        assert_eq!(sb, vec![p("x1^3", 1)]);
    }

    #[test]
    fn unit_ideal_at_the_origin() {
        // 3x² − 1 is a unit in the local ring
        let sb = standard_basis(&[p("3*x1^2 - 1", 2), p("2*x2", 2)], MonomialOrder::LocalDegRevLex);
        assert_eq!(sb, vec![p("1", 2)]);
        let sb = standard_basis(&[p("3*x1^2 - 1", 2), p("2*x2", 2)], MonomialOrder::GlobalDegRevLex);
        assert_eq!(sb.len(), 2);
    }

    #[test]
    fn local_basis_drops_far_component() {
        // x(1 - x) generates the maximal ideal locally
        let sb = standard_basis(&[p("x1 - x1^2", 1)], MonomialOrder::LocalDegRevLex);
        assert_eq!(sb.len(), 1);
        assert_eq!(
            MonomialOrder::LocalDegRevLex.leading_monomial(&sb[0]),
            Some(&Monomial::new(vec![1]))
        );
    }

    #[test]
    fn mora_on_two_variables() {
        // ⟨x² + y³, y² + x³⟩ has local dimension 4 with leading ideal ⟨x², y²⟩
        let sb = standard_basis(
            &[p("x1^2 + x2^3", 2), p("x2^2 + x1^3", 2)],
            MonomialOrder::LocalDegRevLex,
        );
        let lms: Vec<Monomial> = sb
            .iter()
            .map(|g| MonomialOrder::LocalDegRevLex.leading_monomial(g).unwrap().clone())
            .collect();
        assert!(lms.contains(&Monomial::new(vec![2, 0])));
        assert!(lms.contains(&Monomial::new(vec![0, 2])));
    }
}
