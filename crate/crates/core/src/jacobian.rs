//! Jacobian matrices, their ranks at rational points, and pruning of redundant generators.

use crate::coeff::{Field, Rational};
use crate::groebner::{groebner_basis, normal_form};
use crate::linalg;
use crate::matrix::PolyMatrix;
use crate::order::TermOrder;
use crate::poly::Poly;

/// Rows indexed by `gens`, columns by the `n` indeterminates.
pub fn jacobian<C: Field>(gens: &[Poly<C>], n: usize) -> PolyMatrix<C> {
    gens.iter().map(|g| (0..n).map(|i| g.derivative(i)).collect()).collect()
}

pub fn eval_at<C: Field>(f: &Poly<C>, point: &[C]) -> C {
    let values: Vec<(usize, C)> = point.iter().cloned().enumerate().collect();
    f.eval_partial(&values).constant_coeff()
}

/// Rank of the Jacobian of `gens` evaluated at `point`.
pub fn rank_at<C: Field>(gens: &[Poly<C>], point: &[C]) -> usize {
    let n = point.len();
    let m: Vec<Vec<C>> = jacobian(gens, n).iter().map(|row| row.iter().map(|p| eval_at(p, point)).collect()).collect();
    linalg::rank(&m, n)
}

/// Drop generators lying in the ideal of the remaining ones, scanning from the last.
pub fn prune_generators<C: Field>(gens: &[Poly<C>]) -> Vec<Poly<C>> {
    let mut keep: Vec<Poly<C>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut i = keep.len();
    while i > 0 {
        i -= 1;
        let others: Vec<Poly<C>> = keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let gb = groebner_basis(&others, &TermOrder::DegRevLex);
        if normal_form(&keep[i], &gb, &TermOrder::DegRevLex).is_zero() {
            keep.remove(i);
        }
    }
    keep
}

/// Points of `{0, 1, -1, 2}^m` in a fixed order.
pub fn small_points(m: usize) -> Vec<Vec<Rational>> {
    let vals = [0i64, 1, -1, 2];
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p| {
                vals.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(Rational::from_i64(v));
                    q
                })
            })
            .collect();
    }
    out
}
