//! Brute-force oracles and the shared input catalog.
//!
//! Nothing here calls the pipeline being checked: sector dimensions come from
//! enumerating exponent vectors against congruences, and Burnside products from
//! enumerating coset pairs.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use quotient_signature::exactlin::RationalMatrix;
use quotient_signature::group::{AbelianGroup, Element, MatrixAction};
use quotient_signature::poly::{default_names, OneForm, Poly};

pub fn poly(text: &str, n: usize) -> Poly {
    Poly::parse(text, &default_names(n)).expect("catalog polynomial parses")
}

pub fn form(text: &str, n: usize) -> OneForm {
    OneForm::differential(&poly(text, n))
}

/// `x1^e + ... + xn^e`.
pub fn fermat(n: usize, e: u32) -> String {
    (1..=n).map(|i| format!("x{i}^{e}")).collect::<Vec<_>>().join(" + ")
}

/// `ℤ₂` acting by `diag(1, −1, −1)`.
pub fn flip_last_two() -> MatrixAction {
    MatrixAction::new(
        AbelianGroup::cyclic(2),
        3,
        vec![RationalMatrix::from_i64_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]])],
    )
    .expect("valid action")
}

/// Order-3 rotation of the plane in an integral basis; it preserves `x² − xy + y²`.
pub fn rotation3() -> MatrixAction {
    MatrixAction::new(
        AbelianGroup::cyclic(3),
        2,
        vec![RationalMatrix::from_i64_rows(&[&[0, -1], &[1, -1]])],
    )
    .expect("valid action")
}

pub struct Entry {
    pub name: String,
    pub f: String,
    pub n: usize,
    pub action: MatrixAction,
}

fn entry(name: &str, f: String, n: usize, action: MatrixAction) -> Entry {
    Entry {
        name: name.to_string(),
        f,
        n,
        action,
    }
}

/// Every invariant function used by the acceptance suite.
pub fn catalog() -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(entry(
            &format!("quadric n={n}, antipodal"),
            fermat(n, 2),
            n,
            MatrixAction::antipodal(n),
        ));
    }
    out.push(entry(
        "saddle, antipodal",
        "x1^2 - x2^2".into(),
        2,
        MatrixAction::antipodal(2),
    ));
    for n in 1..=3 {
        out.push(entry(
            &format!("quartic n={n}, antipodal"),
            fermat(n, 4),
            n,
            MatrixAction::antipodal(n),
        ));
        out.push(entry(
            &format!("quartic n={n}, sign changes"),
            fermat(n, 4),
            n,
            MatrixAction::sign_changes(n),
        ));
    }
    out.push(entry(
        "cusp family at t=0",
        "x1^3 + x2^2 + x3^2".into(),
        3,
        flip_last_two(),
    ));
    out.push(entry(
        "rotation Z3 quadric",
        "x1^2 - x1*x2 + x2^2".into(),
        2,
        rotation3(),
    ));
    out
}

/// Sector dimensions of `Σ xⱼ^{eⱼ}` under a diagonal group of exponent `modulus`.
///
/// For each `g`, counts exponent vectors `k` on the fixed coordinates with
/// `0 ≤ kⱼ ≤ eⱼ − 2` and `Σⱼ hⱼ(kⱼ + 1) ≡ 0 (mod m)` for every `h`. Returns
/// `(n_g, dim)` per element.
pub fn fermat_sectors(exps: &[u32], modulus: u32, elements: &[Vec<u32>]) -> Vec<(usize, usize)> {
    elements
        .iter()
        .map(|g| {
            let fixed: Vec<usize> = (0..exps.len()).filter(|&j| g[j] % modulus == 0).collect();
            let ranges: Vec<u32> = fixed.iter().map(|&j| exps[j].saturating_sub(1)).collect();
            let mut count = 0;
            let mut k = vec![0u32; fixed.len()];
            if ranges.iter().all(|&r| r > 0) {
                loop {
                    let ok = elements.iter().all(|h| {
                        let s: u32 = fixed.iter().zip(&k).map(|(&j, &kj)| h[j] * (kj + 1)).sum();
                        s.is_multiple_of(modulus)
                    });
                    if ok {
                        count += 1;
                    }
                    // odometer over the box
                    let mut i = 0;
                    while i < k.len() {
                        k[i] += 1;
                        if k[i] < ranges[i] {
                            break;
                        }
                        k[i] = 0;
                        i += 1;
                    }
                    if i == k.len() {
                        break;
                    }
                }
            }
            (fixed.len(), count)
        })
        .collect()
}

/// All elements of the subgroup of `(ℤ_m)ⁿ` generated by `gens`.
pub fn diagonal_closure(modulus: u32, n: usize, gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue = VecDeque::from([vec![0; n]]);
    while let Some(a) = queue.pop_front() {
        if !seen.insert(a.clone()) {
            continue;
        }
        for g in gens {
            queue.push_back(a.iter().zip(g).map(|(x, y)| (x + y) % modulus).collect());
        }
    }
    seen.into_iter().collect()
}

type Coset = BTreeSet<Vec<u32>>;

/// Product of coset spaces by orbit enumeration, as `stabilizer ↦ multiplicity`.
///
/// Works on raw exponent tuples of `ℤ_{m₁} × … × ℤ_{m_r}`.
pub fn coset_product(factors: &[u32], h: &[Vec<u32>], k: &[Vec<u32>]) -> BTreeMap<Vec<Vec<u32>>, i64> {
    let add =
        |a: &[u32], b: &[u32]| -> Vec<u32> { a.iter().zip(b).zip(factors).map(|((x, y), m)| (x + y) % m).collect() };
    let all: Vec<Vec<u32>> = {
        let mut v = vec![vec![]];
        for &m in factors {
            v = v
                .into_iter()
                .flat_map(|p: Vec<u32>| {
                    (0..m).map(move |i| {
                        let mut q = p.clone();
                        q.push(i);
                        q
                    })
                })
                .collect();
        }
        v
    };
    let coset = |x: &[u32], sub: &[Vec<u32>]| -> Coset { sub.iter().map(|s| add(x, s)).collect() };
    let mut points: BTreeSet<(Coset, Coset)> = BTreeSet::new();
    for x in &all {
        for y in &all {
            points.insert((coset(x, h), coset(y, k)));
        }
    }
    let shift = |g: &[u32], c: &BTreeSet<Vec<u32>>| -> BTreeSet<Vec<u32>> { c.iter().map(|v| add(g, v)).collect() };
    let mut remaining = points.clone();
    let mut out = BTreeMap::new();
    while let Some(p) = remaining.iter().next().cloned() {
        let orbit: BTreeSet<_> = all.iter().map(|g| (shift(g, &p.0), shift(g, &p.1))).collect();
        for q in &orbit {
            remaining.remove(q);
        }
        let stab: Vec<Vec<u32>> = all
            .iter()
            .filter(|g| shift(g, &p.0) == p.0 && shift(g, &p.1) == p.1)
            .cloned()
            .collect();
        *out.entry(stab).or_insert(0) += 1;
    }
    out
}

pub fn raw(e: &Element) -> Vec<u32> {
    e.0.clone()
}

/// Local degree at 0 of a one-variable `f'`: 0 for even order of vanishing,
/// the sign of the leading coefficient for odd order.
pub fn one_variable_degree(f: &Poly) -> i64 {
    let d = f.derivative(0);
    let (m, c) = d.terms().min_by_key(|(m, _)| m.degree()).expect("nonzero derivative");
    if m.degree() % 2 == 0 {
        0
    } else if *c > num_traits::Zero::zero() {
        1
    } else {
        -1
    }
}
