use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial::Monomial;
use crate::ring::Ring;
use std::cmp::Ordering;

/// Term ordering given by an integer matrix whose rows are compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    /// Degree reverse lexicographic with variable 0 largest.
    DegRevLex,
    Matrix(Vec<Vec<i64>>),
}

impl TermOrder {
    pub fn matrix_of(rows: Vec<Vec<i64>>) -> Self {
        TermOrder::Matrix(rows)
    }

    /// Matrix of degrevlex on `n` variables.
    pub fn degrevlex_rows(n: usize) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![1; n]];
        for i in (1..n).rev() {
            let mut r = vec![0; n];
            r[i] = -1;
            rows.push(r);
        }
        rows
    }

    /// Block ordering with the variables in `elim` larger than every term without them.
    pub fn elimination(n: usize, elim: &[usize]) -> Self {
        let mut first = vec![0; n];
        for &i in elim {
            first[i] = 1;
        }
        let mut rows = vec![first];
        rows.extend(Self::degrevlex_rows(n));
        TermOrder::Matrix(rows)
    }

    /// Lexicographic ordering with variable 0 largest.
    pub fn lex(n: usize) -> Self {
        TermOrder::Matrix(
            (0..n)
                .map(|i| {
                    let mut r = vec![0; n];
                    r[i] = 1;
                    r
                })
                .collect(),
        )
    }

    pub fn to_matrix(&self, n: usize) -> Vec<Vec<i64>> {
        match self {
            TermOrder::DegRevLex => Self::degrevlex_rows(n),
            TermOrder::Matrix(rows) => rows.clone(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::DegRevLex => a.cmp_degrevlex(b),
            TermOrder::Matrix(rows) => {
                for row in rows {
                    let va: i64 = a.exps().iter().zip(row).map(|(&e, &w)| e as i64 * w).sum();
                    let vb: i64 = b.exps().iter().zip(row).map(|(&e, &w)| e as i64 * w).sum();
                    match va.cmp(&vb) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// True if the matrix has rank `n` and every variable is larger than 1.
    pub fn is_term_ordering(&self, n: usize) -> bool {
        let m = self.to_matrix(n);
        if rank(&m, n) != n {
            return false;
        }
        (0..n).all(|i| self.compare(&Monomial::var(i), &Monomial::one()) == Ordering::Greater)
    }
}

/// Rank over Q of an integer matrix with `n` columns.
pub fn rank(rows: &[Vec<i64>], n: usize) -> usize {
    let m: Vec<Vec<Rational>> =
        rows.iter().map(|r| (0..n).map(|j| Rational::from_i64(*r.get(j).unwrap_or(&0))).collect()).collect();
    linalg::rank(&m, n)
}

/// Append rows of the reversed identity that raise the rank, until the rank is `n`.
pub fn complete_to_full_rank(mut rows: Vec<Vec<i64>>, n: usize) -> Vec<Vec<i64>> {
    let mut r = rank(&rows, n);
    for i in (0..n).rev() {
        if r == n {
            break;
        }
        let mut e = vec![0; n];
        e[i] = 1;
        rows.push(e);
        let r2 = rank(&rows, n);
        if r2 > r {
            r = r2;
        } else {
            rows.pop();
        }
    }
    rows
}

/// Ordering under which any homogeneous `f` whose Z-linear part is `z_i` has leading term `z_i`.
///
/// `z` must consist of distinct positive-weight indeterminates.
pub fn build_separating_order(ring: &Ring, z: &[usize]) -> Result<TermOrder> {
    let n = ring.n();
    if z.is_empty() {
        return Err(Error::InvalidInput("empty tuple of indeterminates".into()));
    }
    for (k, &i) in z.iter().enumerate() {
        if i >= n {
            return Err(Error::InvalidInput(format!("indeterminate index {i} out of range")));
        }
        if ring.weight(i) == 0 {
            return Err(Error::InvalidInput(format!("indeterminate {} has weight zero", ring.name(i))));
        }
        if z[..k].contains(&i) {
            return Err(Error::InvalidInput(format!("indeterminate {} repeated", ring.name(i))));
        }
    }
    let mut rows = Vec::new();
    if z.len() == 1 {
        let mut r = vec![0; n];
        r[z[0]] = 1;
        rows.push(r);
    } else {
        let mut r1 = vec![0; n];
        let mut r2 = vec![0; n];
        for &i in z {
            r1[i] = ring.weight(i) as i64;
            r2[i] = ring.weight(i) as i64 - 1;
        }
        rows.push(r1);
        rows.push(r2);
    }
    let ord = TermOrder::Matrix(complete_to_full_rank(rows, n));
    debug_assert!(ord.is_term_ordering(n));
    Ok(ord)
}
