//! Unimodular matrices, solutions of the unimodular matrix problem, and the
//! re-embeddings they induce.

use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::fibers::Regularity;
use crate::groebner::{groebner_basis, lift_membership, module_groebner_basis, syzygies, Lifter, PolyVector};
use crate::ideal::Ideal;
use crate::jacobian::{eval_at, jacobian, prune_generators, rank_at, small_points};
use crate::matrix::{self, PolyMatrix};
use crate::morphism::RingMorphism;
use crate::order::TermOrder;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::separating::{is_coherent, rewrite, z_linear_data};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Nothing to solve: the matrix has no rows.
    Trivial,
    /// Column reduction over a univariate polynomial ring.
    Euclid,
    /// Inverse of a square block with constant determinant.
    ConstantMinor,
    /// A row of length at least two with two comaximal entries.
    ComaximalPair,
    /// Lifts of the unit vectors completed by a free syzygy basis.
    SyzygyBasis,
    /// As `SyzygyBasis`, after a random linear change of the parameters.
    ShiftedSyzygyBasis,
    Fixture,
}

impl Provenance {
    pub fn label(&self) -> &'static str {
        match self {
            Provenance::Trivial => "trivial",
            Provenance::Euclid => "euclid",
            Provenance::ConstantMinor => "constant-minor",
            Provenance::ComaximalPair => "comaximal-pair",
            Provenance::SyzygyBasis => "syzygy-basis",
            Provenance::ShiftedSyzygyBasis => "shifted-syzygy-basis",
            Provenance::Fixture => "fixture",
        }
    }
}

/// A square `B` with `det(B) = 1` and `A B = (I_k | 0)`, or `B = A^-1` when `A` is square.
#[derive(Clone, Debug)]
pub struct UmpSolution {
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct SolverOptions {
    pub seed: u64,
    pub attempts: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { seed: 0x5eed, attempts: 8 }
    }
}

fn shape(a: &PolyMatrix) -> (usize, usize) {
    (a.len(), matrix::ncols(a))
}

/// Check `A B = (I_k | 0)` and `det(B) = 1` exactly; for square `A` the determinant
/// condition is replaced by `B A = I`.
pub fn verify_ump(a: &PolyMatrix, b: &PolyMatrix) -> Result<()> {
    let (k, l) = shape(a);
    if k > 0 && l == 0 {
        return Err(Error::Verification("matrix has rows but no columns".into()));
    }
    let l = if k == 0 { b.len() } else { l };
    if b.len() != l || b.iter().any(|r| r.len() != l) {
        return Err(Error::Verification(format!("B must be square of size {l}")));
    }
    if k < l && !matrix::det(b).is_one() {
        return Err(Error::Verification("det(B) is not 1".into()));
    }
    if k == l && k > 0 && matrix::mul(b, a) != matrix::identity(l) {
        return Err(Error::Verification("B is not the inverse of A".into()));
    }
    let ab = matrix::mul(a, b);
    for (i, row) in ab.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            let want = if i == j { Poly::one() } else { Poly::zero() };
            if *p != want {
                return Err(Error::Verification(format!("A*B differs from (I|0) at ({}, {})", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

fn unit_ideal(gens: &[Poly]) -> bool {
    groebner_basis(gens, &TermOrder::DegRevLex).iter().any(|g| g.is_constant())
}

/// The maximal minors generate the unit ideal.
pub fn is_unimodular(a: &PolyMatrix) -> bool {
    let (k, l) = shape(a);
    if k == 0 {
        return true;
    }
    if k > l {
        return false;
    }
    unit_ideal(&matrix::minors(a, k))
}

fn matrix_vars(a: &PolyMatrix) -> Vec<usize> {
    let mut vs: Vec<usize> = a.iter().flatten().flat_map(|p| p.vars()).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Quotient and remainder of univariate division in variable `t`.
fn div_rem(f: &Poly, g: &Poly, t: usize) -> (Poly, Poly) {
    let dg = g.degree_in(t).unwrap_or(0);
    let lg = g.coefficients_in(t).pop().expect("nonzero divisor").constant_coeff();
    let mut q = Poly::zero();
    let mut r = f.clone();
    while let Some(dr) = r.degree_in(t) {
        if dr < dg || r.is_zero() {
            break;
        }
        let lr = r.coefficients_in(t).pop().unwrap().constant_coeff();
        let m = Poly::term(crate::monomial::Monomial::var_pow(t, dr - dg), lr.over(&lg));
        r = &r - &(&m * g);
        q = &q + &m;
    }
    (q, r)
}

fn col_axpy(m: &mut PolyMatrix, dst: usize, src: usize, c: &Poly) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let t = c * &row[src];
            row[dst] = &row[dst] - &t;
        }
    }
}

fn col_scale(m: &mut PolyMatrix, j: usize, c: &Rational) {
    for row in m.iter_mut() {
        row[j] = row[j].scale(c);
    }
}

/// Swap two columns, negating one of them so the determinant is unchanged.
fn col_swap(m: &mut PolyMatrix, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
        row[j] = row[j].neg();
    }
}

fn euclid(a: &PolyMatrix, t: Option<usize>) -> Result<PolyMatrix> {
    let (k, l) = shape(a);
    let mut m = a.clone();
    let mut u = matrix::identity::<Rational>(l);
    let deg = |p: &Poly| t.and_then(|t| p.degree_in(t)).unwrap_or(0);
    for i in 0..k {
        loop {
            let nz: Vec<usize> = (i..l).filter(|&j| !m[i][j].is_zero()).collect();
            if nz.is_empty() {
                return Err(Error::NotUnimodular("a row reduces to zero".into()));
            }
            if nz.len() == 1 {
                if nz[0] != i {
                    col_swap(&mut m, i, nz[0]);
                    col_swap(&mut u, i, nz[0]);
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&j| (deg(&m[i][j]), j)).unwrap();
            for &j in &nz {
                if j == p {
                    continue;
                }
                let q = match t {
                    Some(t) => div_rem(&m[i][j], &m[i][p], t).0,
                    None => Poly::constant(m[i][j].constant_coeff().over(&m[i][p].constant_coeff())),
                };
                col_axpy(&mut m, j, p, &q);
                col_axpy(&mut u, j, p, &q);
            }
        }
        if !m[i][i].is_constant() {
            return Err(Error::NotUnimodular("a diagonal entry is not a unit".into()));
        }
        let inv = m[i][i].constant_coeff().inverse();
        col_scale(&mut m, i, &inv);
        col_scale(&mut u, i, &inv);
    }
    for i in 0..k {
        for j in 0..i {
            let c = m[i][j].clone();
            if !c.is_zero() {
                col_axpy(&mut m, j, i, &c);
                col_axpy(&mut u, j, i, &c);
            }
        }
    }
    Ok(u)
}

fn constant_minor(a: &PolyMatrix) -> Option<PolyMatrix> {
    let (k, l) = shape(a);
    let rows: Vec<usize> = (0..k).collect();
    for s in matrix::subsets(l, k) {
        let block = matrix::submatrix(a, &rows, &s);
        let Some(inv) = matrix::inverse(&block) else { continue };
        let t: Vec<usize> = (0..l).filter(|j| !s.contains(j)).collect();
        let n = matrix::submatrix(a, &rows, &t);
        let inv_n = matrix::mul(&inv, &n);
        let mut b = matrix::zeros(l, l);
        for (p, &sp) in s.iter().enumerate() {
            for q in 0..k {
                b[sp][q] = inv[p][q].clone();
            }
            for (c, _) in t.iter().enumerate() {
                b[sp][k + c] = inv_n[p][c].neg();
            }
        }
        for (c, &tc) in t.iter().enumerate() {
            b[tc][k + c] = Poly::one();
        }
        return Some(b);
    }
    None
}

fn comaximal_pair(a: &PolyMatrix) -> Result<Option<PolyMatrix>> {
    let (k, l) = shape(a);
    if k != 1 || l < 2 {
        return Ok(None);
    }
    let p = &a[0];
    for i in 0..l {
        for j in i + 1..l {
            if p[i].is_zero() || p[j].is_zero() {
                continue;
            }
            let gens = vec![vec![p[i].clone()], vec![p[j].clone()]];
            let Some(uv) = lift_membership(&[Poly::one()], &gens)? else { continue };
            let mut b = matrix::zeros(l, l);
            b[i][0] = uv[0].clone();
            b[j][0] = uv[1].clone();
            b[i][1] = p[j].neg();
            b[j][1] = p[i].clone();
            let mut col = 2;
            for r in 0..l {
                if r == i || r == j {
                    continue;
                }
                b[r][col] = Poly::one();
                b[i][col] = (&p[r] * &uv[0]).neg();
                b[j][col] = (&p[r] * &uv[1]).neg();
                col += 1;
            }
            return Ok(Some(b));
        }
    }
    Ok(None)
}

fn syzygy_basis(a: &PolyMatrix) -> Result<Option<PolyMatrix>> {
    let (k, l) = shape(a);
    let cols: Vec<PolyVector<Rational>> = matrix::transpose(a);
    let lifter = Lifter::new(&cols, &TermOrder::DegRevLex);
    let mut c: Vec<Vec<Poly>> = Vec::with_capacity(k);
    for j in 0..k {
        let e: Vec<Poly> = (0..k).map(|i| if i == j { Poly::one() } else { Poly::zero() }).collect();
        match lifter.lift(&e)? {
            Some(coeffs) => c.push(coeffs),
            None => return Err(Error::NotUnimodular("a unit vector is not in the column module".into())),
        }
    }
    let syz = module_groebner_basis(&syzygies(&cols)?, &TermOrder::DegRevLex);
    if syz.len() != l - k {
        return Ok(None);
    }
    let mut b = matrix::zeros(l, l);
    for (j, cj) in c.iter().chain(syz.iter()).enumerate() {
        for r in 0..l {
            b[r][j] = cj.get(r).cloned().unwrap_or_else(Poly::zero);
        }
    }
    let d = matrix::det(&b);
    if d.is_zero() || !d.is_constant() {
        return Ok(None);
    }
    Ok(Some(b))
}

/// Scale the last column so that `det(B) = 1`; only done when that column lies in the kernel block.
fn normalize(a: &PolyMatrix, mut b: PolyMatrix) -> Result<PolyMatrix> {
    let (k, l) = shape(a);
    if k < l {
        let d = matrix::det(&b);
        if d.is_zero() || !d.is_constant() {
            return Err(Error::Verification("determinant of the completion is not a nonzero constant".into()));
        }
        let inv = d.constant_coeff().inverse();
        col_scale(&mut b, l - 1, &inv);
    }
    Ok(b)
}

/// Random unipotent change of the listed variables and its inverse.
fn random_shift(vars: &[usize], rng: &mut ChaCha8Rng) -> (Vec<Poly>, Vec<Poly>) {
    let s = vars.len();
    let width = vars.iter().max().map_or(0, |v| v + 1);
    let mut up = vec![vec![0i64; s]; s];
    for (i, row) in up.iter_mut().enumerate() {
        row[i] = 1;
        for v in row.iter_mut().skip(i + 1) {
            *v = rng.gen_range(-3..=3);
        }
    }
    // inverse of a unipotent upper triangular integer matrix by back substitution
    let mut inv = vec![vec![0i64; s]; s];
    for i in (0..s).rev() {
        inv[i][i] = 1;
        for j in i + 1..s {
            let mut acc = 0;
            for (t, row) in up.iter().enumerate().take(j).skip(i + 1) {
                acc += inv[i][t] * row[j];
            }
            inv[i][j] = -(up[i][j] + acc);
        }
    }
    let build = |mat: &Vec<Vec<i64>>| -> Vec<Poly> {
        let mut images: Vec<Poly> = (0..width).map(Poly::var).collect();
        for (i, &vi) in vars.iter().enumerate() {
            let mut p = Poly::zero();
            for (j, &vj) in vars.iter().enumerate() {
                if mat[i][j] != 0 {
                    p = &p + &Poly::var(vj).scale(&Rational::from_i64(mat[i][j]));
                }
            }
            images[vi] = p;
        }
        images
    };
    (build(&up), build(&inv))
}

pub fn ump_solve(a: &PolyMatrix) -> Result<UmpSolution> {
    ump_solve_with(a, &SolverOptions::default())
}

/// Solve the unimodular matrix problem by the first applicable strategy.
pub fn ump_solve_with(a: &PolyMatrix, opts: &SolverOptions) -> Result<UmpSolution> {
    let (k, l) = shape(a);
    if a.iter().any(|r| r.len() != l) {
        return Err(Error::InvalidInput("ragged matrix".into()));
    }
    if k == 0 {
        return Ok(UmpSolution { a: a.clone(), b: matrix::identity(l), provenance: Provenance::Trivial });
    }
    if !is_unimodular(a) {
        return Err(Error::NotUnimodular(format!("the maximal minors of a {k}x{l} matrix do not generate the unit ideal")));
    }
    let vars = matrix_vars(a);
    let found = if vars.len() <= 1 {
        Some((euclid(a, vars.first().copied())?, Provenance::Euclid))
    } else if let Some(b) = constant_minor(a) {
        Some((b, Provenance::ConstantMinor))
    } else if let Some(b) = comaximal_pair(a)? {
        Some((b, Provenance::ComaximalPair))
    } else if let Some(b) = syzygy_basis(a)? {
        Some((b, Provenance::SyzygyBasis))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut hit = None;
        for _ in 0..opts.attempts {
            let (fwd, back) = random_shift(&vars, &mut rng);
            let shifted = matrix::map_entries(a, |p| p.compose(&fwd));
            let b = match comaximal_pair(&shifted)? {
                Some(b) => Some(b),
                None => syzygy_basis(&shifted)?,
            };
            if let Some(b) = b {
                hit = Some((matrix::map_entries(&b, |p| p.compose(&back)), Provenance::ShiftedSyzygyBasis));
                break;
            }
        }
        hit
    };
    let Some((b, provenance)) = found else {
        return Err(Error::QsIncomplete(format!("no free syzygy basis found for a {k}x{l} matrix")));
    };
    let b = normalize(a, b)?;
    verify_ump(a, &b)?;
    Ok(UmpSolution { a: a.clone(), b, provenance })
}

/// Accept an externally supplied `B` after checking the contract.
pub fn ump_from_fixture(a: &PolyMatrix, b: PolyMatrix) -> Result<UmpSolution> {
    verify_ump(a, &b)?;
    Ok(UmpSolution { a: a.clone(), b, provenance: Provenance::Fixture })
}

/// One degree of the block decomposition of the linear-part matrix.
#[derive(Clone, Debug)]
pub struct DegreeBlock {
    pub degree: u64,
    /// Ambient indices of the indeterminates of this degree.
    pub vars: Vec<usize>,
    /// Positions (in the sorted generator list) of the generators of this degree.
    pub rows: Vec<usize>,
    pub solution: UmpSolution,
}

/// Result of a re-embedding driven by unimodular completions.
#[derive(Clone, Debug)]
pub struct UmpReembedding {
    /// `order[i]` is the input position of the i-th generator after sorting the leading ones by degree.
    pub order: Vec<usize>,
    pub blocks: Vec<DegreeBlock>,
    /// Degree-zero automorphism of the ambient ring, with its inverse.
    pub phi: RingMorphism,
    /// Separated indeterminates, one per leading generator.
    pub nu: Vec<usize>,
    /// Coherent tails: `x_nu_i - q_i` is the rewritten image of the i-th leading generator.
    pub q: Vec<Poly>,
    /// The composed homomorphism onto the smaller polynomial ring.
    pub theta: RingMorphism,
    pub target: Ideal,
    /// Images in the ambient ring of the target indeterminates, inverse to `theta` modulo the ideal.
    pub inverse: Vec<Poly>,
}

fn sorted_positive_vars(ring: &Ring) -> Vec<usize> {
    let mut v = ring.pos_vars();
    v.sort_by_key(|&i| ring.weight(i));
    v
}

/// Linear-part coefficient matrix of `gens` in the columns `vars`, over the weight-zero subring.
pub fn linear_coefficients(ring: &Ring, gens: &[Poly], vars: &[usize]) -> Result<PolyMatrix> {
    gens.iter().map(|g| Ok(z_linear_data(ring, g, vars)?.cvec)).collect()
}

/// Re-embed `P/I` using unimodular completions for the first `k` generators.
///
/// `fixtures` maps a degree to a completion used instead of the solver for that block.
pub fn ump_reembed(
    ideal: &Ideal,
    k: usize,
    fixtures: &BTreeMap<u64, PolyMatrix>,
    opts: &SolverOptions,
) -> Result<UmpReembedding> {
    let ring = ideal.ring();
    let n = ring.n();
    let gens = ideal.gens();
    if k > gens.len() {
        return Err(Error::InvalidInput(format!("k = {k} exceeds the number of generators")));
    }
    ideal.check_positively_generated()?;
    let mut degs = Vec::with_capacity(gens.len());
    for g in gens {
        degs.push(ring.w_degree(g)?.unwrap_or(0));
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| degs[i]);
    order.extend(k..gens.len());
    let lead: Vec<Poly> = order[..k].iter().map(|&i| gens[i].clone()).collect();

    let pos = sorted_positive_vars(ring);
    let mut degrees: Vec<u64> = pos.iter().map(|&i| ring.weight(i) as u64).collect();
    degrees.dedup();
    for &i in &order[..k] {
        if !degrees.contains(&degs[i]) {
            return Err(Error::NotUnimodular(format!(
                "no indeterminate has the degree {} of a leading generator",
                degs[i]
            )));
        }
    }
    for d in fixtures.keys() {
        if !degrees.contains(d) {
            return Err(Error::InvalidInput(format!("fixture for degree {d} matches no indeterminates")));
        }
    }

    let mut blocks = Vec::new();
    for &d in &degrees {
        let vars: Vec<usize> = pos.iter().copied().filter(|&i| ring.weight(i) as u64 == d).collect();
        let rows: Vec<usize> = (0..k).filter(|&p| degs[order[p]] == d).collect();
        let block_gens: Vec<Poly> = rows.iter().map(|&p| lead[p].clone()).collect();
        let a = linear_coefficients(ring, &block_gens, &vars)?;
        blocks.push((d, vars, rows, a));
    }
    let solve = |(d, _, _, a): &(u64, Vec<usize>, Vec<usize>, PolyMatrix)| -> Result<UmpSolution> {
        match fixtures.get(d) {
            Some(b) => ump_from_fixture(a, b.clone()),
            None if a.is_empty() => Ok(UmpSolution {
                a: Vec::new(),
                b: matrix::identity(0),
                provenance: Provenance::Trivial,
            }),
            None => ump_solve_with(a, opts),
        }
    };
    let solutions: Vec<Result<UmpSolution>> = {
        use rayon::prelude::*;
        blocks.par_iter().map(solve).collect()
    };
    let mut done = Vec::with_capacity(blocks.len());
    for ((d, vars, rows, _), sol) in blocks.into_iter().zip(solutions) {
        let mut sol = sol?;
        if sol.b.is_empty() {
            sol.b = matrix::identity(vars.len());
        }
        done.push(DegreeBlock { degree: d, vars, rows, solution: sol });
    }

    let mut phi_images: Vec<Poly> = (0..n).map(Poly::var).collect();
    let mut phi_inverse: Vec<Poly> = (0..n).map(Poly::var).collect();
    for blk in &done {
        let b = &blk.solution.b;
        let binv = matrix::inverse(b).ok_or_else(|| Error::Verification("completion is not invertible".into()))?;
        for (p, &vp) in blk.vars.iter().enumerate() {
            let mut fwd = Poly::zero();
            let mut back = Poly::zero();
            for (q, &vq) in blk.vars.iter().enumerate() {
                fwd = &fwd + &(&b[p][q] * &Poly::var(vq));
                back = &back + &(&binv[p][q] * &Poly::var(vq));
            }
            phi_images[vp] = fwd;
            phi_inverse[vp] = back;
        }
    }
    let mut phi = RingMorphism::new(ring.clone(), ring.clone(), phi_images)?;
    phi.inverse = Some(phi_inverse.clone());
    phi.verify_inverse()?;
    if !phi.degree_zero {
        return Err(Error::Verification("the coordinate change is not homogeneous of degree zero".into()));
    }

    let mut nu = vec![usize::MAX; k];
    for blk in &done {
        for (p, &row) in blk.rows.iter().enumerate() {
            nu[row] = blk.vars[p];
        }
    }
    let mut q: Vec<Poly> = Vec::with_capacity(k);
    for (i, g) in lead.iter().enumerate() {
        let img = phi.apply(g);
        let qi = &Poly::var(nu[i]) - &img;
        if qi.uses_var(nu[i]) {
            return Err(Error::Verification(format!(
                "image of a leading generator is not separating in {}",
                ring.name(nu[i])
            )));
        }
        q.push(rewrite(&qi, &nu[..i], &q));
    }
    let f: Vec<Poly> = nu.iter().zip(&q).map(|(&v, qi)| &Poly::var(v) - qi).collect();
    if !is_coherent(&nu, &f) {
        return Err(Error::Verification("rewritten tuple is not coherent".into()));
    }

    let kept: Vec<usize> = (0..n).filter(|i| !nu.contains(i)).collect();
    let mut map = vec![usize::MAX; n];
    for (new, &old) in kept.iter().enumerate() {
        map[old] = new;
    }
    let target_ring = ring.subring(&kept);
    let psi: Vec<Poly> = (0..n)
        .map(|j| match nu.iter().position(|&v| v == j) {
            Some(i) => q[i].remap_vars(&map),
            None => Poly::var(map[j]),
        })
        .collect();
    let t: Vec<Poly> = phi.images.iter().map(|p| p.compose(&psi)).collect();
    let theta = RingMorphism::new(ring.clone(), target_ring.clone(), t)?;
    if !theta.degree_zero {
        return Err(Error::Verification("the composed map is not homogeneous of degree zero".into()));
    }
    for g in &lead {
        if !theta.apply(g).is_zero() {
            return Err(Error::Verification("a leading generator does not map to zero".into()));
        }
    }
    let rest: Vec<Poly> = order[k..].iter().map(|&i| theta.apply(&gens[i])).collect();
    let target = Ideal::new(target_ring, rest);

    let inverse: Vec<Poly> = kept.iter().map(|&j| phi_inverse[j].clone()).collect();
    for (new, p) in inverse.iter().enumerate() {
        if theta.apply(p) != Poly::var(new) {
            return Err(Error::Verification("the inverse images do not map back to the target indeterminates".into()));
        }
    }
    for (j, tj) in theta.images.iter().enumerate() {
        let back = &tj.compose(&inverse) - &Poly::var(j);
        if !ideal.contains(&back) {
            return Err(Error::Verification(format!("{} is not recovered modulo the ideal", ring.name(j))));
        }
    }
    Ok(UmpReembedding { order, blocks: done, phi, nu, q, theta, target, inverse })
}

/// Isomorphism of a regular graded algebra onto a polynomial ring.
#[derive(Clone, Debug)]
pub struct FreeReembedding {
    /// Generators of the ideal forming a basis of the row space of the linear parts.
    pub basis_gens: Vec<Poly>,
    pub reembedding: UmpReembedding,
}

impl FreeReembedding {
    pub fn target_ring(&self) -> &Ring {
        self.reembedding.target.ring()
    }

    /// Weights of the target indeterminates.
    pub fn weights(&self) -> &[u32] {
        self.target_ring().weights()
    }

    /// Images of the positive-weight indeterminates.
    pub fn images(&self) -> Vec<Poly> {
        let ring = self.reembedding.theta.source.clone();
        ring.pos_vars().into_iter().map(|i| self.reembedding.theta.images[i].clone()).collect()
    }
}

fn rank_over_fractions(a: &PolyMatrix) -> usize {
    let (r, c) = shape(a);
    (1..=r.min(c)).rev().find(|&s| !matrix::minors(a, s).is_empty()).unwrap_or(0)
}

/// Row selection or reduced module basis whose maximal minors generate the unit ideal,
/// with the coefficients expressing each basis vector through the rows.
fn row_space_basis(h: &PolyMatrix, rank: usize) -> Result<Vec<Vec<Poly>>> {
    let r = h.len();
    if rank == 0 {
        return Ok(Vec::new());
    }
    for s in matrix::subsets(r, rank) {
        let sub: PolyMatrix = s.iter().map(|&i| h[i].clone()).collect();
        if is_unimodular(&sub) {
            return Ok(s
                .iter()
                .map(|&i| (0..r).map(|j| if j == i { Poly::one() } else { Poly::zero() }).collect())
                .collect());
        }
    }
    let gb = module_groebner_basis(h, &TermOrder::DegRevLex);
    if gb.len() == rank {
        let width = matrix::ncols(h);
        let cand: PolyMatrix =
            gb.iter().map(|v| (0..width).map(|j| v.get(j).cloned().unwrap_or_else(Poly::zero)).collect()).collect();
        if is_unimodular(&cand) {
            let lifter = Lifter::new(h, &TermOrder::DegRevLex);
            let mut out = Vec::with_capacity(rank);
            for v in &cand {
                match lifter.lift(v)? {
                    Some(u) => out.push(u),
                    None => return Err(Error::Verification("basis vector is not in the row space".into())),
                }
            }
            return Ok(out);
        }
    }
    Err(Error::RowspaceNotFreeBasis(format!("no free basis of rank {rank} found for the row space")))
}

/// Isomorphism `P/I -> P_0[X^]` for a regular graded quotient.
pub fn regular_free_reembed(ideal: &Ideal, fixtures: &BTreeMap<u64, PolyMatrix>, opts: &SolverOptions) -> Result<FreeReembedding> {
    let ring = ideal.ring();
    let n = ring.n();
    ideal.check_positively_generated()?;
    let dim = ideal.krull_dimension().ok_or_else(|| Error::InvalidInput("the ideal is the unit ideal".into()))?;
    let k = n - dim;
    let gens = ideal.gens();
    let mut degs = Vec::with_capacity(gens.len());
    for g in gens {
        degs.push(ring.w_degree(g)?.unwrap_or(0));
    }
    let pos = sorted_positive_vars(ring);
    let mut degrees: Vec<u64> = degs.clone();
    degrees.sort_unstable();
    degrees.dedup();
    let mut basis_gens = Vec::new();
    let mut total = 0;
    for &d in &degrees {
        let vars: Vec<usize> = pos.iter().copied().filter(|&i| ring.weight(i) as u64 == d).collect();
        let rows: Vec<usize> = (0..gens.len()).filter(|&i| degs[i] == d).collect();
        let block_gens: Vec<Poly> = rows.iter().map(|&i| gens[i].clone()).collect();
        let h = if vars.is_empty() {
            vec![Vec::new(); rows.len()]
        } else {
            linear_coefficients(ring, &block_gens, &vars)?
        };
        let rk = if vars.is_empty() { 0 } else { rank_over_fractions(&h) };
        total += rk;
        if rk == 0 {
            continue;
        }
        let rk_minors = matrix::minors(&h, rk);
        if !unit_ideal(&rk_minors) {
            return Err(Error::NotUnimodular(format!(
                "the {rk}x{rk} minors of the linear parts in degree {d} do not generate the unit ideal"
            )));
        }
        for u in row_space_basis(&h, rk)? {
            let mut f = Poly::zero();
            for (c, g) in u.iter().zip(&block_gens) {
                if !c.is_zero() {
                    f = &f + &(c * g);
                }
            }
            basis_gens.push(f);
        }
    }
    if total != k {
        return Err(Error::NotUnimodular(format!(
            "the linear parts have rank {total} but the codimension is {k}"
        )));
    }
    let mut all = basis_gens.clone();
    all.extend(gens.iter().cloned());
    let reembedding = ump_reembed(&Ideal::new(ring.clone(), all), k, fixtures, opts)?;
    if !reembedding.target.is_zero() {
        return Err(Error::Verification("a generator survives the re-embedding; the quotient is not regular".into()));
    }
    if reembedding.target.ring().n() != dim {
        return Err(Error::Verification("target dimension differs from the Krull dimension".into()));
    }
    Ok(FreeReembedding { basis_gens, reembedding })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Smoothness {
    Regular,
    /// A rational point of the zero set at which the Jacobian rank is too small.
    Singular(Vec<Rational>),
    Undetermined,
}

impl Smoothness {
    pub fn regularity(&self) -> Regularity {
        match self {
            Smoothness::Regular => Regularity::Regular,
            Smoothness::Singular(_) => Regularity::Singular,
            Smoothness::Undetermined => Regularity::Undetermined,
        }
    }
}

/// Jacobian criterion with codimension `k = n - dim(P/I)`.
///
/// Regularity is only claimed for complete intersections, where all components have
/// the same dimension. Singular witnesses are searched on the points `(c, 0)` with
/// small integer `c`.
pub fn smoothness_check(ideal: &Ideal) -> Result<Smoothness> {
    let ring = ideal.ring();
    let n = ring.n();
    let Some(dim) = ideal.krull_dimension() else { return Ok(Smoothness::Regular) };
    let k = n - dim;
    if k == 0 {
        return Ok(Smoothness::Regular);
    }
    let gens = prune_generators(ideal.gens());
    let mut cond = matrix::minors(&jacobian(&gens, n), k);
    cond.extend(gens.iter().cloned());
    if unit_ideal(&cond) {
        return Ok(if gens.len() == k { Smoothness::Regular } else { Smoothness::Undetermined });
    }
    let zero = ring.zero_vars();
    for c in small_points(zero.len()) {
        let mut point = vec![Rational::from_i64(0); n];
        for (&i, v) in zero.iter().zip(&c) {
            point[i] = v.clone();
        }
        if gens.iter().any(|g| !eval_at(g, &point).is_zero()) {
            continue;
        }
        if rank_at(&gens, &point) < k {
            return Ok(Smoothness::Singular(point));
        }
    }
    Ok(Smoothness::Undetermined)
}
