//! Invariants that must survive random coordinate changes and random inputs.

mod common;

use common::{form, one_variable_degree, poly, rotation3};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use quotient_signature::exactlin::{Rational, RationalMatrix};
use quotient_signature::group::{AbelianGroup, MatrixAction};
use quotient_signature::poly::{OneForm, Poly};
use quotient_signature::quantum::{quantum_report, sector};
use quotient_signature::residue::{global_signature, radial_index_report};

fn rat(n: i64) -> Rational {
    BigRational::from_integer(n.into())
}

fn invertible(n: usize) -> impl Strategy<Value = RationalMatrix> {
    proptest::collection::vec(-2i64..=2, n * n).prop_filter_map("singular", move |v| {
        let rows: Vec<Vec<Rational>> = v.chunks(n).map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        let m = RationalMatrix::from_rows(rows).ok()?;
        (!m.determinant().is_zero()).then_some(m)
    })
}

/// `(f∘P, P⁻¹ G P)`; invariant whenever `f` is `G`-invariant.
fn conjugate(f: &Poly, action: &MatrixAction, p: &RationalMatrix) -> (Poly, MatrixAction) {
    let q = p.inverse().expect("invertible");
    let gens = action.generators().iter().map(|g| &(&q * g) * p).collect();
    let conj = MatrixAction::new(action.group().clone(), action.dim(), gens).expect("conjugate action is valid");
    (f.compose_linear(p), conj)
}

/// Quarter turn of the plane.
fn rotation4() -> MatrixAction {
    MatrixAction::new(
        AbelianGroup::cyclic(4),
        2,
        vec![RationalMatrix::from_i64_rows(&[&[0, -1], &[1, 0]])],
    )
    .expect("valid action")
}

fn bases() -> Vec<(&'static str, usize, MatrixAction)> {
    vec![
        ("x1^2 - x2^2", 2, MatrixAction::antipodal(2)),
        ("x1^4 + x2^4", 2, MatrixAction::sign_changes(2)),
        ("x1^4 + x2^4", 2, rotation4()),
        ("x1^2 - x1*x2 + x2^2", 2, rotation3()),
        ("x1^4 + x2^4 + x1^2*x2^2", 2, rotation4()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn signature_and_quantum_data_are_coordinate_free(which in 0usize..5, p in invertible(2)) {
        let (text, n, action) = &bases()[which];
        let f = poly(text, *n);
        let (g, conj) = conjugate(&f, action, &p);
        let before = radial_index_report(&OneForm::differential(&f), action).unwrap();
        let after = radial_index_report(&OneForm::differential(&g), &conj).unwrap();
        prop_assert_eq!(before.index, after.index);
        prop_assert_eq!(before.invariant_dim, after.invariant_dim);
        prop_assert_eq!(before.pairing.inertia_full, after.pairing.inertia_full);
        let qa = quantum_report(&f, action).unwrap();
        let qb = quantum_report(&g, &conj).unwrap();
        prop_assert_eq!(qa.total_dim, qb.total_dim);
        prop_assert_eq!(qa.orbifold_dim, qb.orbifold_dim);
        prop_assert_eq!(qa.real_signature, qb.real_signature);
    }

    #[test]
    fn inverse_elements_have_equal_sectors(which in 2usize..5, p in invertible(2)) {
        let (text, n, action) = &bases()[which];
        let (f, conj) = conjugate(&poly(text, *n), action, &p);
        let group = conj.group().clone();
        for a in group.elements() {
            let s = sector(&f, &a, &conj).unwrap();
            let t = sector(&f, &group.inverse(&a), &conj).unwrap();
            prop_assert_eq!((s.n_g, s.inv_dim, s.inertia), (t.n_g, t.inv_dim, t.inertia));
        }
    }

    #[test]
    fn odd_order_quotients_have_one_stratum(p in invertible(3)) {
        // ℤ₃ rotating the first two coordinates and fixing the third
        let r = RationalMatrix::from_i64_rows(&[&[0, -1, 0], &[1, -1, 0], &[0, 0, 1]]);
        let q = p.inverse().unwrap();
        let action = MatrixAction::new(AbelianGroup::cyclic(3), 3, vec![&(&q * &r) * &p]).unwrap();
        let strata = action.stratify();
        prop_assert_eq!(strata.len(), 1);
        prop_assert_eq!(strata[0].k, 0);
        prop_assert_eq!(strata[0].plus_basis.len(), 3);
    }

    #[test]
    fn even_order_element_with_minus_one_adds_a_stratum(p in invertible(3)) {
        let s = RationalMatrix::from_i64_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
        let q = p.inverse().unwrap();
        let action = MatrixAction::new(AbelianGroup::cyclic(2), 3, vec![&(&q * &s) * &p]).unwrap();
        let ks: Vec<usize> = action.stratify().iter().map(|s| s.k).collect();
        prop_assert_eq!(ks, vec![0, 2]);
    }

    /// `f' = c·Π(x − rᵢ)·Π(x² + sⱼ²)`: the trace form counts real zeros weighted
    /// by `sign f''`, and its rank counts all complex zeros.
    #[test]
    fn trace_form_counts_signed_real_zeros(
        roots in proptest::collection::btree_set(-6i64..=6, 0..4),
        pairs in proptest::collection::vec(1i64..=3, 0..2),
        c in prop_oneof![Just(-2i64), Just(-1), Just(1), Just(3)],
    ) {
        prop_assume!(!roots.is_empty() || !pairs.is_empty());
        let x = Poly::var(1, 0);
        let mut d = Poly::constant(1, rat(c));
        for &r in &roots {
            d = &d * &(&x - &Poly::constant(1, rat(r)));
        }
        for &s in &pairs {
            d = &d * &(&(&x * &x) + &Poly::constant(1, rat(s * s)));
        }
        let omega = OneForm::new(vec![d.clone()]).unwrap();
        let trace = global_signature(&omega).unwrap();
        let dd = d.derivative(0);
        let expected: i64 = roots
            .iter()
            .map(|&r| if dd.eval(&[rat(r)]).is_positive() { 1 } else { -1 })
            .sum();
        prop_assert_eq!(trace.signature(), expected);
        prop_assert_eq!(trace.n_plus + trace.n_minus, roots.len() + 2 * pairs.len());
    }

    #[test]
    fn one_variable_index_is_the_local_degree(
        order in 2u32..7,
        tail in proptest::collection::vec(-3i64..=3, 3),
        lead in prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)],
    ) {
        let mut terms = vec![format!("{}*x1^{order}", lead)];
        for (k, c) in tail.iter().enumerate() {
            if *c != 0 {
                terms.push(format!("{c}*x1^{}", order + 1 + k as u32));
            }
        }
        let text = terms.join(" + ").replace("+ -", "- ");
        let f = poly(&text, 1);
        let report = radial_index_report(&form(&text, 1), &MatrixAction::trivial(1)).unwrap();
        prop_assert_eq!(report.index, one_variable_degree(&f));
        prop_assert_eq!(report.dim, order as usize - 1);
    }
}
