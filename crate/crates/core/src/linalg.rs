//! Dense linear algebra over an exact field.

use crate::coeff::Field;

pub type Matrix<C> = Vec<Vec<C>>;

/// Reduced row echelon form: nonzero rows and their pivot columns.
/// Pivots are chosen in the leftmost available column.
pub fn rref<C: Field>(mut m: Matrix<C>, ncols: usize) -> (Matrix<C>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inverse();
        for j in c..ncols {
            m[r][j] = m[r][j].times(&inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let v = m[r][j].times(&f);
                    m[i][j] = m[i][j].minus(&v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<C: Field>(m: &[Vec<C>], ncols: usize) -> usize {
    rref(m.to_vec(), ncols).1.len()
}

/// Basis of `{v : m v = 0}`.
pub fn nullspace<C: Field>(m: &[Vec<C>], ncols: usize) -> Vec<Vec<C>> {
    let (r, pivots) = rref(m.to_vec(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![C::zero(); ncols];
            v[f] = C::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = row[f].negate();
            }
            v
        })
        .collect()
}

/// Select columns of a matrix.
pub fn columns<C: Field>(m: &[Vec<C>], cols: &[usize]) -> Matrix<C> {
    m.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect()
}
