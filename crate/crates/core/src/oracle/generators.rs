use crate::exactlin::{Rational, RationalMatrix};
use crate::group::MatrixAction;
use crate::poly::{Monomial, Poly};

/// Reynolds averages of all monomials of degree `1..=max_degree`, keeping a
/// linearly independent subset per degree.
///
/// For actions that permute monomials up to sign this is exactly the set of
/// invariant monomials.
pub fn invariant_generators(action: &MatrixAction, max_degree: u32) -> Vec<Poly> {
    let n = action.dim();
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let monos = Monomial::all_of_degree(n, d);
        let mut kept: Vec<Vec<Rational>> = Vec::new();
        for m in &monos {
            let avg = action.reynolds(&Poly::monomial(m.clone(), Rational::from_integer(1.into())));
            if avg.is_zero() {
                continue;
            }
            let v: Vec<Rational> = monos.iter().map(|b| avg.coeff(b)).collect();
            let mut trial = kept.clone();
            trial.push(v.clone());
            if RationalMatrix::from_rows(trial).expect("rectangular").rank() > kept.len() {
                kept.push(v);
                out.push(avg);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::RationalMatrix;
    use crate::group::AbelianGroup;
    use crate::poly::default_names;

    fn shown(ps: &[Poly], n: usize) -> Vec<String> {
        ps.iter().map(|p| p.display_with(&default_names(n))).collect()
    }

    #[test]
    fn monomial_actions() {
        assert_eq!(
            shown(&invariant_generators(&MatrixAction::antipodal(1), 4), 1),
            ["x1^2", "x1^4"]
        );
        assert_eq!(
            shown(&invariant_generators(&MatrixAction::trivial(1), 4), 1),
            ["x1", "x1^2", "x1^3", "x1^4"]
        );
        let flip_y = MatrixAction::new(
            AbelianGroup::cyclic(2),
            2,
            vec![RationalMatrix::from_i64_rows(&[&[1, 0], &[0, -1]])],
        )
        .unwrap();
        let g = shown(&invariant_generators(&flip_y, 3), 2);
        assert_eq!(g, ["x1", "x1^2", "x2^2", "x1^3", "x1*x2^2"]);
    }

    #[test]
    fn rotation_invariants_are_independent_averages() {
        // quarter turn: degree-2 invariants are spanned by x² + y²
        let rot = MatrixAction::new(
            AbelianGroup::cyclic(4),
            2,
            vec![RationalMatrix::from_i64_rows(&[&[0, -1], &[1, 0]])],
        )
        .unwrap();
        let g = invariant_generators(&rot, 2);
        assert_eq!(shown(&g, 2), ["1/2*x1^2 + 1/2*x2^2"]);
        for p in &g {
            assert!(rot.check_function(p).is_ok());
        }
    }
}
