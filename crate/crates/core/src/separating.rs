//! Linear parts, Z-coefficient vectors, separating tuples and elimination by substitution.

use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, leading_monomial, Lifter, PolyVector};
use crate::ideal::Ideal;
use crate::linalg::{self, Matrix};
use crate::monomial::Monomial;
use crate::order::{build_separating_order, TermOrder};
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TupleKind {
    Plain,
    Coherent,
}

/// Tuple `F` matched to indeterminates `Z`, with a term ordering witnessing `LT(f_i) = z_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingTuple<C: Field = Rational> {
    pub z: Vec<usize>,
    pub f: Vec<Poly<C>>,
    pub kind: TupleKind,
    pub order: TermOrder,
}

/// Decomposition `g = sum cvec_i z_i + rest` with `cvec_i` in the weight-zero subring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZLinearData<C: Field = Rational> {
    pub cvec: Vec<Poly<C>>,
    pub lin: Poly<C>,
    pub rest: Poly<C>,
}

/// Span of the standard-degree-one parts of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinPartSpace<C: Field = Rational> {
    /// Rows indexed by generators, columns by indeterminates.
    pub matrix: Matrix<C>,
    /// Reduced echelon basis of the row space.
    pub basis: Matrix<C>,
}

impl<C: Field> LinPartSpace<C> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_forms(&self) -> Vec<Poly<C>> {
        self.basis.iter().map(|row| linear_form(row)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptimalityStatus {
    OptimalByLinpart,
    Inconclusive,
}

impl OptimalityStatus {
    pub fn label(&self) -> &'static str {
        match self {
            OptimalityStatus::OptimalByLinpart => "optimal-by-linpart",
            OptimalityStatus::Inconclusive => "inconclusive",
        }
    }
}

pub fn linear_form<C: Field>(row: &[C]) -> Poly<C> {
    Poly::from_terms(row.iter().enumerate().map(|(i, c)| (Monomial::var(i), c.clone())).collect())
}

fn is_p0(ring: &Ring, m: &Monomial) -> bool {
    m.support().all(|i| ring.weight(i) == 0)
}

/// Z-coefficient vector, Z-linear part and remainder of a homogeneous polynomial.
pub fn z_linear_data<C: Field>(ring: &Ring, g: &Poly<C>, z: &[usize]) -> Result<ZLinearData<C>> {
    ring.w_degree(g)?;
    let mut parts: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); z.len()];
    let mut rest = Vec::new();
    'terms: for (m, c) in g.terms() {
        for (k, &zi) in z.iter().enumerate() {
            if let Some(t) = m.div(&Monomial::var(zi)) {
                if is_p0(ring, &t) {
                    parts[k].push((t, c.clone()));
                    continue 'terms;
                }
            }
        }
        rest.push((m.clone(), c.clone()));
    }
    let cvec: Vec<Poly<C>> = parts.into_iter().map(Poly::from_terms).collect();
    let mut lin = Poly::zero();
    for (c, &zi) in cvec.iter().zip(z) {
        lin = &lin + &c.mul_term(&Monomial::var(zi), &C::one());
    }
    Ok(ZLinearData { cvec, lin, rest: Poly::from_terms(rest) })
}

/// Coefficient matrix of the linear parts of `gens` and a basis of its row space.
pub fn lin_part_space<C: Field>(ring: &Ring, gens: &[Poly<C>]) -> Result<LinPartSpace<C>> {
    let n = ring.n();
    let mut matrix = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.constant_coeff().is_zero() {
            return Err(Error::InvalidInput(format!("generator {} has a nonzero constant term", ring.fmt(g))));
        }
        let mut row = vec![C::zero(); n];
        for (m, c) in g.terms() {
            if m.degree() == 1 {
                let i = m.support().next().expect("degree one");
                row[i] = c.clone();
            }
        }
        matrix.push(row);
    }
    let (basis, _) = linalg::rref(matrix.clone(), n);
    Ok(LinPartSpace { matrix, basis })
}

/// True iff the Z-columns of the linear-part coefficient matrix have rank `#Z`.
pub fn top_rank_check<C: Field>(ring: &Ring, gens: &[Poly<C>], z: &[usize]) -> Result<bool> {
    let space = lin_part_space(ring, gens)?;
    if z.iter().any(|&i| ring.weight(i) == 0) || z.len() > space.dim() {
        return Ok(false);
    }
    let cols = linalg::columns(&space.matrix, z);
    Ok(linalg::rank(&cols, z.len()) == z.len())
}

fn check_tuple(ring: &Ring, z: &[usize]) -> Result<()> {
    for (k, &i) in z.iter().enumerate() {
        if i >= ring.n() {
            return Err(Error::InvalidInput(format!("indeterminate index {i} out of range")));
        }
        if ring.weight(i) == 0 {
            return Err(Error::InvalidInput(format!("{} has degree zero", ring.name(i))));
        }
        if z[..k].contains(&i) {
            return Err(Error::InvalidInput(format!("{} repeated", ring.name(i))));
        }
    }
    Ok(())
}

fn sorted_by_degree(ring: &Ring, z: &[usize]) -> Vec<usize> {
    let mut s = z.to_vec();
    s.sort_by_key(|&i| ring.weight(i));
    s
}

/// Homogeneous Z-separating tuple in the ideal, found by module membership over the
/// weight-zero subring, one degree at a time.
pub fn find_separating_tuple<C: Field>(ideal: &Ideal<C>, z: &[usize]) -> Result<SeparatingTuple<C>> {
    let ring = ideal.ring();
    check_tuple(ring, z)?;
    ideal.check_positively_generated()?;
    if z.is_empty() {
        return Ok(SeparatingTuple { z: vec![], f: vec![], kind: TupleKind::Coherent, order: TermOrder::DegRevLex });
    }
    if !top_rank_check(ring, ideal.gens(), z)? {
        return Err(Error::NotSeparating);
    }
    let mut f: Vec<Option<Poly<C>>> = vec![None; z.len()];
    let mut degrees: Vec<u32> = z.iter().map(|&i| ring.weight(i)).collect();
    degrees.sort();
    degrees.dedup();
    for d in degrees {
        let zd_pos: Vec<usize> = (0..z.len()).filter(|&k| ring.weight(z[k]) == d).collect();
        let zd: Vec<usize> = zd_pos.iter().map(|&k| z[k]).collect();
        let gd: Vec<&Poly<C>> =
            ideal.gens().iter().filter(|g| ring.w_degree(g).ok().flatten() == Some(d as u64)).collect();
        let mut cvecs: Vec<PolyVector<C>> = Vec::with_capacity(gd.len());
        for g in &gd {
            cvecs.push(z_linear_data(ring, g, &zd)?.cvec);
        }
        if cvecs.is_empty() {
            return Err(Error::NotSeparating);
        }
        let lifter = Lifter::new(&cvecs, &TermOrder::DegRevLex);
        for (k, &pos) in zd_pos.iter().enumerate() {
            let e: Vec<Poly<C>> = (0..zd.len()).map(|j| if j == k { Poly::one() } else { Poly::zero() }).collect();
            let coeffs = lifter.lift(&e)?.ok_or(Error::NotSeparating)?;
            let mut fi = Poly::zero();
            for (a, g) in coeffs.iter().zip(&gd) {
                if !a.is_zero() {
                    fi = &fi + &(a * *g);
                }
            }
            f[pos] = Some(fi);
        }
    }
    let f: Vec<Poly<C>> = f.into_iter().map(|p| p.expect("filled")).collect();
    let order = build_separating_order(ring, &sorted_by_degree(ring, z))?;
    let tuple = SeparatingTuple { z: z.to_vec(), f, kind: TupleKind::Plain, order };
    verify_separating(ideal, &tuple)?;
    Ok(tuple)
}

/// Leading terms under the witness ordering, membership in the ideal, and coherence when claimed.
pub fn verify_separating<C: Field>(ideal: &Ideal<C>, t: &SeparatingTuple<C>) -> Result<()> {
    if t.z.len() != t.f.len() {
        return Err(Error::Verification("tuple lengths differ".into()));
    }
    let ring = ideal.ring();
    for (zi, fi) in t.z.iter().zip(&t.f) {
        let lm = leading_monomial(fi, &t.order);
        if lm != Some(Monomial::var(*zi)) || !fi.coeff(&Monomial::var(*zi)).is_one() {
            return Err(Error::Verification(format!(
                "leading term of {} is not {}",
                ring.fmt(fi),
                ring.name(*zi)
            )));
        }
        if !ideal.contains(fi) {
            return Err(Error::Verification(format!("{} is not in the ideal", ring.fmt(fi))));
        }
    }
    if t.kind == TupleKind::Coherent && !is_coherent(&t.z, &t.f) {
        return Err(Error::Verification("tuple is not coherently separating".into()));
    }
    Ok(())
}

/// Check a tuple (for instance one printed elsewhere) against the ideal, building the
/// witness ordering from `Z`.
pub fn verify_tuple<C: Field>(ideal: &Ideal<C>, z: &[usize], f: &[Poly<C>]) -> Result<TupleKind> {
    let ring = ideal.ring();
    check_tuple(ring, z)?;
    let order = build_separating_order(ring, &sorted_by_degree(ring, z))?;
    let kind = if is_coherent(z, f) { TupleKind::Coherent } else { TupleKind::Plain };
    for (zi, fi) in z.iter().zip(f) {
        let data = z_linear_data(ring, fi, z)?;
        if data.lin != Poly::var(*zi) {
            return Err(Error::Verification(format!("Z-linear part of {} is not {}", ring.fmt(fi), ring.name(*zi))));
        }
    }
    verify_separating(ideal, &SeparatingTuple { z: z.to_vec(), f: f.to_vec(), kind, order })?;
    Ok(kind)
}

/// `f_i = z_i - h_i` with no `z_j` dividing any term of any `h_i`.
pub fn is_coherent<C: Field>(z: &[usize], f: &[Poly<C>]) -> bool {
    z.len() == f.len()
        && z.iter().zip(f).all(|(&zi, fi)| {
            let lead = Monomial::var(zi);
            fi.coeff(&lead).is_one()
                && fi.terms().iter().filter(|(m, _)| *m != lead).all(|(m, _)| z.iter().all(|&zj| m.exp(zj) == 0))
        })
}

/// The `h_i` of a coherent tuple, `f_i = z_i - h_i`.
pub fn tails<C: Field>(z: &[usize], f: &[Poly<C>]) -> Vec<Poly<C>> {
    z.iter().zip(f).map(|(&zi, fi)| &Poly::var(zi) - fi).collect()
}

/// Substitute `z_i -> h_i` until no `z_i` occurs.
pub fn rewrite<C: Field>(g: &Poly<C>, z: &[usize], h: &[Poly<C>]) -> Poly<C> {
    let mut out = g.clone();
    for _ in 0..=z.len() {
        if z.iter().all(|&zi| !out.uses_var(zi)) {
            return out;
        }
        let n = out.width().max(h.iter().map(|p| p.width()).max().unwrap_or(0));
        let images: Vec<Poly<C>> = (0..n)
            .map(|j| match z.iter().position(|&zi| zi == j) {
                Some(k) => h[k].clone(),
                None => Poly::var(j),
            })
            .collect();
        out = out.compose(&images);
    }
    out
}

/// Turn a homogeneous separating tuple into a coherent one by rewriting each entry
/// with the entries of lower degree.
pub fn coherify<C: Field>(ideal: &Ideal<C>, t: &SeparatingTuple<C>) -> Result<SeparatingTuple<C>> {
    let ring = ideal.ring();
    let mut idx: Vec<usize> = (0..t.z.len()).collect();
    idx.sort_by_key(|&k| ring.weight(t.z[k]));
    let mut done_z: Vec<usize> = Vec::new();
    let mut done_h: Vec<Poly<C>> = Vec::new();
    let mut f = t.f.clone();
    for &k in &idx {
        let fk = rewrite(&t.f[k], &done_z, &done_h);
        done_z.push(t.z[k]);
        done_h.push(&Poly::var(t.z[k]) - &fk);
        f[k] = fk;
    }
    if !is_coherent(&t.z, &f) {
        return Err(Error::Verification("rewriting did not produce a coherent tuple".into()));
    }
    let out = SeparatingTuple { z: t.z.clone(), f, kind: TupleKind::Coherent, order: t.order.clone() };
    verify_separating(ideal, &out)?;
    Ok(out)
}

/// Result of elimination by substitution.
#[derive(Clone, Debug)]
pub struct Elimination<C: Field = Rational> {
    /// Rewritten generators in the ambient ring, zeros kept.
    pub rewritten: Vec<Poly<C>>,
    /// The same generators, zeros dropped, in the ring without `Z`.
    pub ideal: Ideal<C>,
    /// Index of each kept indeterminate in the ambient ring.
    pub kept: Vec<usize>,
}

/// Generators of the elimination ideal obtained by substituting a coherent tuple into the generators.
pub fn rewrite_eliminate<C: Field>(ideal: &Ideal<C>, z: &[usize], f: &[Poly<C>]) -> Result<Elimination<C>> {
    let ring = ideal.ring();
    if !is_coherent(z, f) {
        return Err(Error::Verification("tuple is not coherently separating".into()));
    }
    for fi in f {
        if !ideal.contains(fi) {
            return Err(Error::Verification(format!("{} is not in the ideal", ring.fmt(fi))));
        }
    }
    let h = tails(z, f);
    let rewritten: Vec<Poly<C>> = ideal.gens().iter().map(|g| rewrite(g, z, &h)).collect();
    let kept: Vec<usize> = (0..ring.n()).filter(|i| !z.contains(i)).collect();
    let mut map = vec![usize::MAX; ring.n()];
    for (new, &old) in kept.iter().enumerate() {
        map[old] = new;
    }
    let gens = rewritten.iter().map(|g| g.remap_vars(&map)).collect();
    Ok(Elimination { rewritten, ideal: Ideal::new(ring.subring(&kept), gens), kept })
}

pub fn optimality_status<C: Field>(ideal: &Ideal<C>, z: &[usize]) -> Result<OptimalityStatus> {
    let space = lin_part_space(ideal.ring(), ideal.gens())?;
    Ok(if z.len() == space.dim() { OptimalityStatus::OptimalByLinpart } else { OptimalityStatus::Inconclusive })
}

/// Indeterminates `x_i` for which the ideal contains a homogeneous `x_i`-separating polynomial:
/// the `x_i`-coefficients in the weight-zero subring of the generators of degree `deg(x_i)`
/// must generate the unit ideal.
pub fn separating_indeterminates<C: Field>(ideal: &Ideal<C>) -> Result<Vec<usize>> {
    let ring = ideal.ring();
    ideal.check_positively_generated()?;
    let mut out = Vec::new();
    for i in ring.pos_vars() {
        let d = ring.weight(i) as u64;
        let mut cs = Vec::new();
        for g in ideal.gens() {
            if ring.w_degree(g)? == Some(d) {
                let c = z_linear_data(ring, g, &[i])?.cvec.pop().unwrap();
                if !c.is_zero() {
                    cs.push(c);
                }
            }
        }
        if cs.is_empty() {
            continue;
        }
        let gb = groebner_basis(&cs, &TermOrder::DegRevLex);
        if gb.iter().any(|g| g.is_constant()) {
            out.push(i);
        }
    }
    Ok(out)
}
