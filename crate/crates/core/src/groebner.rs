//! Buchberger's algorithm for ideals and for submodules of free modules.
//!
//! Module elements are compared position over term: a smaller position index
//! is larger, ties are broken by the term ordering.

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Poly;
use std::cmp::Ordering;

pub type PolyVector<C> = Vec<Poly<C>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Elem<C: Field> {
    t: Vec<(usize, Monomial, C)>,
}

fn cmp_sig(ord: &TermOrder, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| ord.compare(a.1, b.1))
}

impl<C: Field> Elem<C> {
    fn from_vector(v: &[Poly<C>], ord: &TermOrder) -> Self {
        let mut t: Vec<(usize, Monomial, C)> = Vec::new();
        for (p, f) in v.iter().enumerate() {
            for (m, c) in f.terms() {
                t.push((p, m.clone(), c.clone()));
            }
        }
        t.sort_by(|a, b| cmp_sig(ord, (b.0, &b.1), (a.0, &a.1)));
        Elem { t }
    }

    fn to_vector(&self, len: usize) -> PolyVector<C> {
        let mut parts: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); len];
        for (p, m, c) in &self.t {
            parts[*p].push((m.clone(), c.clone()));
        }
        parts.into_iter().map(Poly::from_terms).collect()
    }

    fn is_zero(&self) -> bool {
        self.t.is_empty()
    }

    fn lead(&self) -> (usize, &Monomial) {
        let (p, m, _) = &self.t[0];
        (*p, m)
    }

    fn monic(mut self) -> Self {
        if let Some((_, _, c)) = self.t.first() {
            if !c.is_one() {
                let inv = c.inverse();
                for x in self.t.iter_mut() {
                    x.2 = x.2.times(&inv);
                }
            }
        }
        self
    }

    /// `a - c * m * b` where `a` is a slice of sorted terms.
    fn sub_scaled(a: &[(usize, Monomial, C)], b: &Elem<C>, m: &Monomial, c: &C, ord: &TermOrder) -> Vec<(usize, Monomial, C)> {
        let mut out = Vec::with_capacity(a.len() + b.t.len());
        let mut i = 0;
        let mut bi = b.t.iter().map(|(p, bm, bc)| (*p, bm.mul(m), bc.times(c))).peekable();
        while i < a.len() {
            let Some(bt) = bi.peek() else { break };
            match cmp_sig(ord, (a[i].0, &a[i].1), (bt.0, &bt.1)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (p, bm, bc) = bi.next().unwrap();
                    out.push((p, bm, bc.negate()));
                }
                Ordering::Equal => {
                    let (p, bm, bc) = bi.next().unwrap();
                    let v = a[i].2.minus(&bc);
                    if !v.is_zero() {
                        out.push((p, bm, v));
                    }
                    i += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (p, bm, bc) in bi {
            out.push((p, bm, bc.negate()));
        }
        out
    }
}

fn find_reducer<'a, C: Field>(basis: &[&'a Elem<C>], p: usize, m: &Monomial) -> Option<&'a Elem<C>> {
    basis.iter().copied().find(|g| {
        let (gp, gm) = g.lead();
        gp == p && gm.divides(m)
    })
}

/// Reduce `f` modulo `basis`; with `full` every term is reduced, otherwise only leading terms.
fn reduce<C: Field>(f: Elem<C>, basis: &[&Elem<C>], ord: &TermOrder, full: bool) -> Elem<C> {
    let mut done: Vec<(usize, Monomial, C)> = Vec::new();
    let mut rem = f.t;
    let mut head = 0;
    while head < rem.len() {
        let (p, m, c) = &rem[head];
        match find_reducer(basis, *p, m) {
            Some(g) => {
                let (_, gm, gc) = &g.t[0];
                let q = m.div(gm).expect("divides");
                let qc = c.over(gc);
                let next = Elem::sub_scaled(&rem[head..], g, &q, &qc, ord);
                rem = next;
                head = 0;
            }
            None => {
                if !full {
                    break;
                }
                done.push(rem[head].clone());
                head += 1;
            }
        }
    }
    done.extend(rem.drain(head..));
    Elem { t: done }
}

struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
}

/// Reduced monic Gröbner basis of the elements, sorted by increasing leading term.
fn buchberger<C: Field>(gens: Vec<Elem<C>>, ord: &TermOrder, ideal_case: bool) -> Vec<Elem<C>> {
    let mut polys: Vec<Elem<C>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Elem<C>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    input.sort_by(|a, b| cmp_sig(ord, a.lead(), b.lead()));
    for g in input {
        let basis: Vec<&Elem<C>> = active.iter().map(|&k| &polys[k]).collect();
        let h = reduce(g, &basis, ord, true);
        if !h.is_zero() {
            update(&mut polys, &mut active, &mut pairs, h.monic(), ideal_case);
        }
    }

    while !pairs.is_empty() {
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let o = cmp_sig(ord, (a.pos, &a.lcm), (b.pos, &b.lcm)).then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if o == Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = spoly(&polys[pair.i], &polys[pair.j], &pair.lcm, ord);
        let basis: Vec<&Elem<C>> = active.iter().map(|&k| &polys[k]).collect();
        let h = reduce(s, &basis, ord, true);
        if !h.is_zero() {
            update(&mut polys, &mut active, &mut pairs, h.monic(), ideal_case);
        }
    }

    let mut lead: Vec<Elem<C>> = active.iter().map(|&k| polys[k].clone()).collect();
    lead.sort_by(|a, b| cmp_sig(ord, a.lead(), b.lead()));
    let mut minimal: Vec<Elem<C>> = Vec::new();
    for g in lead {
        let (gp, gm) = g.lead();
        if !minimal.iter().any(|h| {
            let (hp, hm) = h.lead();
            hp == gp && hm.divides(gm)
        }) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Elem<C>> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g).collect();
        let g = minimal[k].clone();
        let first = Elem { t: vec![g.t[0].clone()] };
        let tail = reduce(Elem { t: g.t[1..].to_vec() }, &others, ord, true);
        let mut t = first.t;
        t.extend(tail.t);
        out.push(Elem { t }.monic());
    }
    out
}

fn spoly<C: Field>(f: &Elem<C>, g: &Elem<C>, lcm: &Monomial, ord: &TermOrder) -> Elem<C> {
    let (_, fm, fc) = &f.t[0];
    let (_, gm, gc) = &g.t[0];
    let qf = lcm.div(fm).expect("lcm");
    let qg = lcm.div(gm).expect("lcm");
    let a: Vec<_> = f.t[1..].iter().map(|(p, m, c)| (*p, m.mul(&qf), c.over(fc))).collect();
    let t = Elem::sub_scaled(&a, &Elem { t: g.t[1..].to_vec() }, &qg, &gc.inverse(), ord);
    Elem { t }
}

fn update<C: Field>(polys: &mut Vec<Elem<C>>, active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: Elem<C>, ideal_case: bool) {
    let hi = polys.len();
    let (hp, hm) = {
        let (p, m) = h.lead();
        (p, m.clone())
    };
    polys.push(h);

    let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
    for &g in active.iter() {
        let (gp, gm) = polys[g].lead();
        if gp != hp {
            continue;
        }
        let coprime = ideal_case && hm.coprime(gm);
        cands.push((g, hm.lcm(gm), coprime));
    }
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for k in 0..cands.len() {
        let (g, ref l, coprime) = cands[k];
        let dominated = cands[k + 1..].iter().any(|(_, l2, _)| l2.divides(l)) || kept.iter().any(|(_, l2, _)| l2.divides(l));
        if coprime || !dominated {
            kept.push((g, l.clone(), coprime));
        }
    }
    pairs.retain(|pr| {
        if pr.pos != hp || !hm.divides(&pr.lcm) {
            return true;
        }
        let li = polys[pr.i].lead().1.lcm(&hm);
        let lj = polys[pr.j].lead().1.lcm(&hm);
        li == pr.lcm || lj == pr.lcm
    });
    for (g, l, coprime) in kept {
        if !coprime {
            pairs.push(Pair { i: g, j: hi, pos: hp, lcm: l });
        }
    }
    active.retain(|&g| {
        let (gp, gm) = polys[g].lead();
        !(gp == hp && hm.divides(gm))
    });
    active.push(hi);
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis<C: Field>(gens: &[Poly<C>], ord: &TermOrder) -> Vec<Poly<C>> {
    let elems = gens.iter().map(|g| Elem::from_vector(std::slice::from_ref(g), ord)).collect();
    buchberger(elems, ord, true).into_iter().map(|e| e.to_vector(1).pop().unwrap()).collect()
}

/// Remainder of `f` under full reduction by a Gröbner basis.
pub fn normal_form<C: Field>(f: &Poly<C>, basis: &[Poly<C>], ord: &TermOrder) -> Poly<C> {
    let elems: Vec<Elem<C>> = basis.iter().map(|g| Elem::from_vector(std::slice::from_ref(g), ord)).collect();
    let refs: Vec<&Elem<C>> = elems.iter().collect();
    reduce(Elem::from_vector(std::slice::from_ref(f), ord), &refs, ord, true).to_vector(1).pop().unwrap()
}

/// Leading monomial of `f` under `ord`.
pub fn leading_monomial<C: Field>(f: &Poly<C>, ord: &TermOrder) -> Option<Monomial> {
    let mut best: Option<&Monomial> = None;
    for (m, _) in f.terms() {
        if best.is_none_or(|b| ord.compare(m, b) == Ordering::Greater) {
            best = Some(m);
        }
    }
    best.cloned()
}

fn vec_len<C: Field>(gens: &[PolyVector<C>]) -> usize {
    gens.iter().map(|g| g.len()).max().unwrap_or(0)
}

fn padded<C: Field>(v: &[Poly<C>], len: usize) -> PolyVector<C> {
    let mut out = v.to_vec();
    out.resize(len, Poly::zero());
    out
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn module_groebner_basis<C: Field>(gens: &[PolyVector<C>], ord: &TermOrder) -> Vec<PolyVector<C>> {
    let s = vec_len(gens);
    let elems = gens.iter().map(|g| Elem::from_vector(g, ord)).collect();
    buchberger(elems, ord, s <= 1).into_iter().map(|e| e.to_vector(s)).collect()
}

pub fn module_normal_form<C: Field>(v: &[Poly<C>], basis: &[PolyVector<C>], ord: &TermOrder) -> PolyVector<C> {
    let s = vec_len(basis).max(v.len());
    let elems: Vec<Elem<C>> = basis.iter().map(|g| Elem::from_vector(g, ord)).collect();
    let refs: Vec<&Elem<C>> = elems.iter().collect();
    reduce(Elem::from_vector(v, ord), &refs, ord, true).to_vector(s)
}

/// Gröbner data for explicit membership and syzygies of a fixed generator list.
///
/// Works in the module spanned by `(v_i, e_i)`: data positions first, then one
/// position per generator recording how each basis element was obtained.
pub struct Lifter<C: Field> {
    gens: Vec<PolyVector<C>>,
    s: usize,
    ord: TermOrder,
    basis: Vec<Elem<C>>,
}

impl<C: Field> Lifter<C> {
    pub fn new(gens: &[PolyVector<C>], ord: &TermOrder) -> Self {
        let s = vec_len(gens);
        let r = gens.len();
        let gens: Vec<PolyVector<C>> = gens.iter().map(|g| padded(g, s)).collect();
        let aug: Vec<Elem<C>> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut v = g.clone();
                v.extend((0..r).map(|j| if i == j { Poly::one() } else { Poly::zero() }));
                Elem::from_vector(&v, ord)
            })
            .collect();
        let basis = buchberger(aug, ord, false);
        Lifter { gens, s, ord: ord.clone(), basis }
    }

    pub fn generators(&self) -> &[PolyVector<C>] {
        &self.gens
    }

    /// Coefficients `a` with `v = sum a_i gens_i`, checked by re-expansion; `None` if `v` is not a member.
    pub fn lift(&self, v: &[Poly<C>]) -> Result<Option<Vec<Poly<C>>>> {
        let r = self.gens.len();
        let mut aug = padded(v, self.s);
        if v.len() > self.s {
            if v[self.s..].iter().any(|p| !p.is_zero()) {
                return Ok(None);
            }
            aug.truncate(self.s);
        }
        aug.extend((0..r).map(|_| Poly::zero()));
        let refs: Vec<&Elem<C>> = self.basis.iter().collect();
        let red = reduce(Elem::from_vector(&aug, &self.ord), &refs, &self.ord, true).to_vector(self.s + r);
        if red[..self.s].iter().any(|p| !p.is_zero()) {
            return Ok(None);
        }
        let coeffs: Vec<Poly<C>> = red[self.s..].iter().map(|p| p.neg()).collect();
        let target = padded(v, self.s);
        if combine(&coeffs, &self.gens, self.s) != target {
            return Err(Error::Verification("membership lift does not re-expand to its input".into()));
        }
        Ok(Some(coeffs))
    }

    /// Generators of the syzygy module of the generator list.
    pub fn syzygies(&self) -> Vec<PolyVector<C>> {
        let r = self.gens.len();
        let mut out = Vec::new();
        for e in &self.basis {
            if e.t.iter().all(|(p, _, _)| *p >= self.s) {
                let v = e.to_vector(self.s + r);
                out.push(v[self.s..].to_vec());
            }
        }
        out
    }

    /// Elements of the Gröbner basis of the generated module, each with its expression in the generators.
    pub fn basis_with_lifts(&self) -> Vec<(PolyVector<C>, Vec<Poly<C>>)> {
        let r = self.gens.len();
        self.basis
            .iter()
            .filter(|e| e.t.first().is_some_and(|(p, _, _)| *p < self.s))
            .map(|e| {
                let v = e.to_vector(self.s + r);
                (v[..self.s].to_vec(), v[self.s..].to_vec())
            })
            .collect()
    }
}

/// `sum coeffs_i * gens_i` in a free module of rank `s`.
pub fn combine<C: Field>(coeffs: &[Poly<C>], gens: &[PolyVector<C>], s: usize) -> PolyVector<C> {
    let mut acc: PolyVector<C> = vec![Poly::zero(); s];
    for (a, g) in coeffs.iter().zip(gens) {
        if a.is_zero() {
            continue;
        }
        for (k, gk) in g.iter().enumerate() {
            if !gk.is_zero() {
                acc[k] = &acc[k] + &(a * gk);
            }
        }
    }
    acc
}

/// Explicit module membership: coefficients expressing `v` through `gens`.
pub fn lift_membership<C: Field>(v: &[Poly<C>], gens: &[PolyVector<C>]) -> Result<Option<Vec<Poly<C>>>> {
    Lifter::new(gens, &TermOrder::DegRevLex).lift(v)
}

/// Generators of the syzygy module of `gens`; each is checked to be a relation.
pub fn syzygies<C: Field>(gens: &[PolyVector<C>]) -> Result<Vec<PolyVector<C>>> {
    let lifter = Lifter::new(gens, &TermOrder::DegRevLex);
    let syz = lifter.syzygies();
    let s = lifter.s;
    for z in &syz {
        if combine(z, lifter.generators(), s).iter().any(|p| !p.is_zero()) {
            return Err(Error::Verification("syzygy is not a relation".into()));
        }
    }
    Ok(syz)
}

/// Krull dimension of `P/I` from the leading monomials of a Gröbner basis of `I` in `n` variables.
/// `None` when the ideal is the unit ideal.
pub fn dimension_from_leading<C: Field>(basis: &[Poly<C>], ord: &TermOrder, n: usize) -> Option<usize> {
    let leads: Vec<Monomial> = basis.iter().filter_map(|g| leading_monomial(g, ord)).collect();
    if leads.iter().any(|m| m.is_one()) {
        return None;
    }
    let supports: Vec<Vec<usize>> = leads.iter().map(|m| m.support().collect()).collect();
    Some(max_independent(&supports, n))
}

/// Largest set of variables containing no support set completely.
fn max_independent(supports: &[Vec<usize>], n: usize) -> usize {
    fn search(k: usize, n: usize, chosen: &mut Vec<bool>, size: usize, supports: &[Vec<usize>], best: &mut usize) {
        if size + (n - k) <= *best {
            return;
        }
        if k == n {
            *best = size;
            return;
        }
        chosen[k] = true;
        let ok = supports.iter().all(|s| !s.iter().all(|&v| v <= k && chosen[v]) || s.iter().any(|&v| v > k));
        if ok {
            search(k + 1, n, chosen, size + 1, supports, best);
        }
        chosen[k] = false;
        search(k + 1, n, chosen, size, supports, best);
    }
    let mut best = 0;
    let mut chosen = vec![false; n];
    search(0, n, &mut chosen, 0, supports, &mut best);
    best
}
