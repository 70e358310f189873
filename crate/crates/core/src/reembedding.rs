//! Best separating tuples degree by degree, optimal re-embeddings of positively
//! graded ideals, and detection of a grading.

use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg;
use crate::morphism::RingMorphism;
use crate::order::build_separating_order;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::separating::{
    coherify, find_separating_tuple, lin_part_space, optimality_status, rewrite_eliminate, separating_indeterminates,
    tails, top_rank_check, verify_separating, Elimination, OptimalityStatus, SeparatingTuple, TupleKind,
};
use rayon::prelude::*;

/// A separating re-embedding `P/I -> K[X \ Z] / (I ∩ K[X \ Z])`.
#[derive(Clone, Debug)]
pub struct Reembedding<C: Field = Rational> {
    /// Coherent tuple, sorted by indeterminate index.
    pub tuple: SeparatingTuple<C>,
    pub elimination: Elimination<C>,
    pub status: OptimalityStatus,
    pub morphism: RingMorphism<C>,
    pub note: Option<String>,
}

impl<C: Field> Reembedding<C> {
    pub fn z(&self) -> &[usize] {
        &self.tuple.z
    }

    pub fn target(&self) -> &Ideal<C> {
        &self.elimination.ideal
    }
}

fn generators_of_degree<C: Field>(ideal: &Ideal<C>, d: u64) -> Ideal<C> {
    let ring = ideal.ring();
    let gens = ideal.gens().iter().filter(|g| ring.w_degree(g).ok().flatten() == Some(d)).cloned().collect();
    Ideal::new(ring.clone(), gens)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

fn try_candidate<C: Field>(id: &Ideal<C>, z: &[usize]) -> Result<Option<SeparatingTuple<C>>> {
    if !top_rank_check(id.ring(), id.gens(), z)? {
        return Ok(None);
    }
    match find_separating_tuple(id, z) {
        Ok(t) => Ok(Some(t)),
        Err(Error::NotSeparating) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Candidates of degree `d` and the subset-size bound for the search.
fn degree_setup<C: Field>(ideal: &Ideal<C>, d: u64) -> Result<(Ideal<C>, Vec<usize>, usize)> {
    let ring = ideal.ring();
    let sep = separating_indeterminates(ideal)?;
    let s: Vec<usize> = sep.into_iter().filter(|&i| ring.weight(i) as u64 == d).collect();
    if s.is_empty() {
        return Err(Error::NoSeparatingInDegree(d));
    }
    let id = generators_of_degree(ideal, d);
    let dim = lin_part_space(ring, id.gens())?.dim();
    let m = s.len().min(dim);
    Ok((id, s, m))
}

/// First subset of maximal size (subsets in lexicographic order of indices) admitting a
/// separating tuple in degree `d`.
pub fn best_tuple_in_degree<C: Field>(ideal: &Ideal<C>, d: u64) -> Result<SeparatingTuple<C>> {
    let (id, s, m) = degree_setup(ideal, d)?;
    for k in (1..=m).rev() {
        let cands = combinations(&s, k);
        let found = cands.par_iter().map(|z| try_candidate(&id, z)).find_map_first(|r| match r {
            Ok(Some(t)) => Some(Ok(t)),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        });
        if let Some(r) = found {
            return r;
        }
    }
    Err(Error::NoSeparatingInDegree(d))
}

/// Every subset of the maximal admissible size, each with its separating tuple.
pub fn all_best_tuples_in_degree<C: Field>(ideal: &Ideal<C>, d: u64) -> Result<Vec<SeparatingTuple<C>>> {
    let (id, s, m) = degree_setup(ideal, d)?;
    for k in (1..=m).rev() {
        let cands = combinations(&s, k);
        let results: Vec<Result<Option<SeparatingTuple<C>>>> = cands.par_iter().map(|z| try_candidate(&id, z)).collect();
        let mut hits = Vec::new();
        for r in results {
            if let Some(t) = r? {
                hits.push(t);
            }
        }
        if !hits.is_empty() {
            return Ok(hits);
        }
    }
    Err(Error::NoSeparatingInDegree(d))
}

/// Assemble a re-embedding from a coherent tuple.
pub fn reembedding_from_tuple<C: Field>(ideal: &Ideal<C>, tuple: SeparatingTuple<C>) -> Result<Reembedding<C>> {
    let ring = ideal.ring();
    let mut pairs: Vec<(usize, Poly<C>)> = tuple.z.iter().copied().zip(tuple.f.iter().cloned()).collect();
    pairs.sort_by_key(|p| p.0);
    let tuple = SeparatingTuple {
        z: pairs.iter().map(|p| p.0).collect(),
        f: pairs.into_iter().map(|p| p.1).collect(),
        kind: tuple.kind,
        order: tuple.order,
    };
    let elimination = rewrite_eliminate(ideal, &tuple.z, &tuple.f)?;
    let status = optimality_status(ideal, &tuple.z)?;
    let h = tails(&tuple.z, &tuple.f);
    let kept = &elimination.kept;
    let mut map = vec![usize::MAX; ring.n()];
    for (new, &old) in kept.iter().enumerate() {
        map[old] = new;
    }
    let images: Vec<Poly<C>> = (0..ring.n())
        .map(|i| match tuple.z.iter().position(|&z| z == i) {
            Some(k) => h[k].remap_vars(&map),
            None => Poly::var(map[i]),
        })
        .collect();
    let morphism = RingMorphism::new(ring.clone(), elimination.ideal.ring().clone(), images)?;
    Ok(Reembedding { tuple, elimination, status, morphism, note: None })
}

/// Best separating re-embedding: a best tuple in every degree that carries a separating
/// indeterminate, made coherent across degrees.
pub fn best_separating_reembedding<C: Field>(ideal: &Ideal<C>) -> Result<Reembedding<C>> {
    let ring = ideal.ring();
    ideal.check_positively_generated()?;
    let sep = separating_indeterminates(ideal)?;
    let mut degrees: Vec<u64> = sep.iter().map(|&i| ring.weight(i) as u64).collect();
    degrees.sort();
    degrees.dedup();
    let mut z = Vec::new();
    let mut f = Vec::new();
    for d in degrees {
        let t = best_tuple_in_degree(ideal, d)?;
        z.extend(t.z);
        f.extend(t.f);
    }
    if z.is_empty() {
        let tuple = SeparatingTuple { z: vec![], f: vec![], kind: TupleKind::Coherent, order: crate::order::TermOrder::DegRevLex };
        let mut r = reembedding_from_tuple(ideal, tuple)?;
        r.note = Some("no separating indeterminates; the re-embedding is the identity".into());
        return Ok(r);
    }
    let mut sorted = z.clone();
    sorted.sort_by_key(|&i| ring.weight(i));
    let order = build_separating_order(ring, &sorted)?;
    let plain = SeparatingTuple { z, f, kind: TupleKind::Plain, order };
    verify_separating(ideal, &plain)?;
    let coherent = coherify(ideal, &plain)?;
    reembedding_from_tuple(ideal, coherent)
}

/// Optimal separating re-embedding of an ideal in a positively graded ring, by linear
/// algebra on the linear parts of the generators.
pub fn positively_graded_optimal<C: Field>(ideal: &Ideal<C>) -> Result<Reembedding<C>> {
    let ring = ideal.ring();
    if !ring.is_positive() {
        return Err(Error::InvalidInput("the grading is not positive".into()));
    }
    for g in ideal.gens() {
        ring.w_degree(g)?;
    }
    let n = ring.n();
    let space = lin_part_space(ring, ideal.gens())?;
    let s = space.dim();
    // greedy subtuple whose linear parts form a basis
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<C>> = Vec::new();
    for (k, row) in space.matrix.iter().enumerate() {
        if chosen.len() == s {
            break;
        }
        rows.push(row.clone());
        if linalg::rank(&rows, n) > chosen.len() {
            chosen.push(k);
        } else {
            rows.pop();
        }
    }
    // reduced echelon form of [A | Id] gives the interreducing transformation
    let aug: Vec<Vec<C>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..s).map(|j| if i == j { C::one() } else { C::zero() }));
            v
        })
        .collect();
    let (red, pivots) = linalg::rref(aug, n + s);
    let mut z = Vec::with_capacity(s);
    let mut f = Vec::with_capacity(s);
    for (row, &p) in red.iter().zip(&pivots) {
        z.push(p);
        let mut fi = Poly::zero();
        for (j, &k) in chosen.iter().enumerate() {
            let c = &row[n + j];
            if !c.is_zero() {
                fi = &fi + &ideal.gens()[k].scale(c);
            }
        }
        f.push(fi);
    }
    let mut sorted = z.clone();
    sorted.sort_by_key(|&i| ring.weight(i));
    if z.is_empty() {
        let tuple = SeparatingTuple { z, f, kind: TupleKind::Coherent, order: crate::order::TermOrder::DegRevLex };
        return reembedding_from_tuple(ideal, tuple);
    }
    let order = build_separating_order(ring, &sorted)?;
    let plain = SeparatingTuple { z, f, kind: TupleKind::Plain, order };
    let coherent = coherify(ideal, &plain)?;
    let r = reembedding_from_tuple(ideal, coherent)?;
    if r.status != OptimalityStatus::OptimalByLinpart {
        return Err(Error::Verification("tuple size differs from the dimension of the linear part".into()));
    }
    Ok(r)
}

/// A non-negative integer weight row making every generator homogeneous, with as many
/// zero weights as possible; `None` if only the zero row works.
pub fn detect_grading(ring: &Ring, gens: &[Poly<Rational>]) -> Option<Vec<u32>> {
    let n = ring.n();
    let mut diffs: Vec<Vec<i64>> = Vec::new();
    for g in gens {
        let terms = g.terms();
        if terms.len() < 2 {
            continue;
        }
        let base = terms[0].0.exps_padded(n);
        for (m, _) in &terms[1..] {
            let e = m.exps_padded(n);
            diffs.push((0..n).map(|i| e[i] as i64 - base[i] as i64).collect());
        }
    }
    let all: Vec<usize> = (0..n).collect();
    for size in 1..=n {
        for support in combinations(&all, size) {
            let m: Vec<Vec<Rational>> =
                diffs.iter().map(|d| support.iter().map(|&i| Rational::from_i64(d[i])).collect()).collect();
            let ns = linalg::nullspace(&m, size);
            if ns.len() != 1 {
                continue;
            }
            let v = &ns[0];
            let sign = if v.iter().all(|x| x > &Rational::from_i64(0)) {
                1
            } else if v.iter().all(|x| x < &Rational::from_i64(0)) {
                -1
            } else {
                continue;
            };
            let w = integer_row(v, sign);
            let mut out = vec![0u32; n];
            for (k, &i) in support.iter().enumerate() {
                out[i] = w[k];
            }
            return Some(out);
        }
    }
    None
}

fn integer_row(v: &[Rational], sign: i64) -> Vec<u32> {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let lcm = v.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer() * sign).collect();
    let g = ints.iter().fold(num_bigint::BigInt::from(0), |acc, x| acc.gcd(x));
    ints.iter().map(|x| (x / &g).to_u32().expect("weight fits in u32")).collect()
}
