//! Dense matrices with polynomial entries.

use crate::coeff::{Field, Rational};
use crate::poly::Poly;

pub type PolyMatrix<C = Rational> = Vec<Vec<Poly<C>>>;

pub fn identity<C: Field>(n: usize) -> PolyMatrix<C> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Poly::one() } else { Poly::zero() }).collect()).collect()
}

pub fn zeros<C: Field>(rows: usize, cols: usize) -> PolyMatrix<C> {
    vec![vec![Poly::zero(); cols]; rows]
}

pub fn ncols<C: Field>(m: &PolyMatrix<C>) -> usize {
    m.first().map_or(0, |r| r.len())
}

pub fn mul<C: Field>(a: &PolyMatrix<C>, b: &PolyMatrix<C>) -> PolyMatrix<C> {
    let inner = b.len();
    let cols = ncols(b);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch in matrix product");
            (0..cols)
                .map(|j| {
                    let mut acc = Poly::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn transpose<C: Field>(m: &PolyMatrix<C>) -> PolyMatrix<C> {
    (0..ncols(m)).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn submatrix<C: Field>(m: &PolyMatrix<C>, rows: &[usize], cols: &[usize]) -> PolyMatrix<C> {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det<C: Field>(m: &PolyMatrix<C>) -> Poly<C> {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All nonzero `k x k` minors.
pub fn minors<C: Field>(m: &PolyMatrix<C>, k: usize) -> Vec<Poly<C>> {
    let rows = subsets(m.len(), k);
    let cols = subsets(ncols(m), k);
    let mut out = Vec::new();
    for r in &rows {
        for c in &cols {
            let d = det(&submatrix(m, r, c));
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

pub fn adjugate<C: Field>(m: &PolyMatrix<C>) -> PolyMatrix<C> {
    let n = m.len();
    if n == 1 {
        return vec![vec![Poly::one()]];
    }
    let mut adj = zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let d = det(&submatrix(m, &rows, &cols));
            adj[i][j] = if (i + j) % 2 == 0 { d } else { d.neg() };
        }
    }
    adj
}

/// Inverse of a matrix whose determinant is a nonzero constant.
pub fn inverse<C: Field>(m: &PolyMatrix<C>) -> Option<PolyMatrix<C>> {
    let d = det(m);
    if d.is_zero() || !d.is_constant() {
        return None;
    }
    let inv = d.constant_coeff().inverse();
    Some(adjugate(m).iter().map(|r| r.iter().map(|p| p.scale(&inv)).collect()).collect())
}

pub fn map_entries<C: Field>(m: &PolyMatrix<C>, f: impl Fn(&Poly<C>) -> Poly<C>) -> PolyMatrix<C> {
    m.iter().map(|r| r.iter().map(&f).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn mat(r: &Ring, rows: &[&[&str]]) -> PolyMatrix {
        rows.iter().map(|row| row.iter().map(|s| r.parse(s).unwrap()).collect()).collect()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let r = Ring::standard(&["a", "b"]);
        let m = mat(&r, &[&["a", "b", "1"], &["0", "a+b", "a"], &["b^2", "1", "a*b"]]);
        // first-row cofactor expansion
        let c0 = &(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1]);
        let c1 = &(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]);
        let c2 = &(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]);
        let expect = &(&(&m[0][0] * &c0) - &(&m[0][1] * &c1)) + &(&m[0][2] * &c2);
        assert_eq!(det(&m), expect);
    }

    #[test]
    fn zero_pivot_and_singular() {
        let r = Ring::standard(&["x"]);
        let m = mat(&r, &[&["0", "1"], &["1", "x"]]);
        assert_eq!(det(&m), r.parse("-1").unwrap());
        let s = mat(&r, &[&["x", "x^2"], &["1", "x"]]);
        assert!(det(&s).is_zero());
    }

    #[test]
    fn inverse_of_unimodular() {
        let r = Ring::standard(&["x"]);
        let m = mat(&r, &[&["1", "-x"], &["-x", "1+x^2"]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(mul(&m, &inv), identity(2));
        assert!(inverse(&mat(&r, &[&["x"]])).is_none());
    }

    #[test]
    fn minors_of_a_row() {
        let r = Ring::standard(&["x"]);
        let m = mat(&r, &[&["1+x^2", "x", "0"]]);
        assert_eq!(minors(&m, 1).len(), 2);
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
