use crate::exactlin::{canonical_span, Rational, RationalMatrix, UniPoly};

/// The `d`-th cyclotomic polynomial, by exact division of `t^d − 1`.
pub fn cyclotomic_poly(d: u32) -> UniPoly {
    assert!(d > 0, "cyclotomic polynomial of index 0");
    let mut coeffs = vec![Rational::from_integer((-1).into())];
    coeffs.resize(d as usize, Rational::from_integer(0.into()));
    coeffs.push(Rational::from_integer(1.into()));
    let mut p = UniPoly::new(coeffs);
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        let (q, r) = p.div_rem(&cyclotomic_poly(e));
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}

/// Common invariant subspace on which each operator has minimal polynomial `Φ_{orders[i]}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclotomicBlock {
    /// Row-reduced basis vectors in ambient coordinates.
    pub basis: Vec<Vec<Rational>>,
    /// For operator `i`, the index `d` with `Φ_d(opᵢ) = 0` on this block.
    pub orders: Vec<u32>,
}

fn eval_at_matrix(p: &UniPoly, m: &RationalMatrix) -> RationalMatrix {
    let n = m.rows();
    let mut acc = RationalMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * m) + &RationalMatrix::identity(n).scale(c);
    }
    acc
}

/// Simultaneous primary decomposition of commuting finite-order operators.
///
/// `ops` pairs each operator with a multiple of its order. Each operator splits every
/// current block into the kernels of `Φ_d(op)` for `d` dividing its order; blocks are
/// returned in lexicographic order of their `orders` labels.
pub fn cyclotomic_blocks(dim: usize, ops: &[(RationalMatrix, u32)]) -> Vec<CyclotomicBlock> {
    if dim == 0 {
        return Vec::new();
    }
    // (basis as columns, labels)
    let mut blocks: Vec<(RationalMatrix, Vec<u32>)> = vec![(RationalMatrix::identity(dim), Vec::new())];
    for (op, order) in ops {
        let mut next = Vec::new();
        for (basis, labels) in &blocks {
            let local = basis
                .solve_full_column_rank(&(op * basis))
                .expect("commuting operators preserve primary components");
            for d in (1..=*order).filter(|d| order % d == 0) {
                let kernel = eval_at_matrix(&cyclotomic_poly(d), &local).kernel_basis();
                if kernel.is_empty() {
                    continue;
                }
                let coords = RationalMatrix::from_columns(local.rows(), &kernel);
                let mut l = labels.clone();
                l.push(d);
                next.push((basis * &coords, l));
            }
        }
        blocks = next;
    }
    blocks.sort_by(|a, b| a.1.cmp(&b.1));
    blocks
        .into_iter()
        .map(|(basis, orders)| CyclotomicBlock {
            basis: canonical_span(dim, &basis.columns()),
            orders,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), UniPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), UniPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), UniPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), UniPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), UniPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), UniPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn swap_splits_into_sum_and_difference() {
        let swap = RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let blocks = cyclotomic_blocks(2, &[(swap, 2)]);
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].orders, vec![1]);
        assert_eq!(blocks[1].orders, vec![2]);
        let one = Rational::from_integer(1.into());
        assert_eq!(blocks[0].basis, vec![vec![one.clone(), one.clone()]]);
        assert_eq!(blocks[1].basis, vec![vec![one.clone(), -one]]);
    }
}
