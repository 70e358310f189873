//! Multivariate polynomial gcd by recursive primitive remainder sequences.

use crate::coeff::Field;
use crate::monomial::Monomial;
use crate::poly::Poly;

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd<C: Field>(f: &Poly<C>, g: &Poly<C>) -> Poly<C> {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one();
    }
    if f.len() == 1 && g.len() == 1 {
        return Poly::monomial(f.terms()[0].0.gcd(&g.terms()[0].0));
    }
    let v = f.width().max(g.width()) - 1;
    if !f.uses_var(v) {
        return gcd(f, &content(g, v));
    }
    if !g.uses_var(v) {
        return gcd(&content(f, v), g);
    }
    let cf = content(f, v);
    let cg = content(g, v);
    let c = gcd(&cf, &cg);
    let pf = f.exact_div(&cf).expect("content divides");
    let pg = g.exact_div(&cg).expect("content divides");
    let (mut a, mut b) = if pf.degree_in(v) >= pg.degree_in(v) { (pf, pg) } else { (pg, pf) };
    loop {
        let r = prem(&a, &b, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == Some(0) {
            return c.monic();
        }
        a = b;
        b = primitive_part(&r, v);
    }
    (&c * &primitive_part(&b, v)).monic()
}

/// Gcd of the coefficients of `f` viewed as a polynomial in variable `v`.
pub fn content<C: Field>(f: &Poly<C>, v: usize) -> Poly<C> {
    let mut acc = Poly::zero();
    for c in f.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

pub fn primitive_part<C: Field>(f: &Poly<C>, v: usize) -> Poly<C> {
    let c = content(f, v);
    f.exact_div(&c).expect("content divides")
}

fn lead_in<C: Field>(f: &Poly<C>, v: usize) -> (u32, Poly<C>) {
    let d = f.degree_in(v).unwrap_or(0);
    let part = Poly::from_terms(
        f.terms().iter().filter(|(m, _)| m.exp(v) == d).map(|(m, c)| (m.set_exp(v, 0), c.clone())).collect(),
    );
    (d, part)
}

/// Pseudo-remainder of `a` by `b` with respect to variable `v`.
fn prem<C: Field>(a: &Poly<C>, b: &Poly<C>, v: usize) -> Poly<C> {
    let (db, lb) = lead_in(b, v);
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let (dr, lr) = lead_in(&r, v);
        if dr < db {
            return r;
        }
        let shift = Poly::monomial(Monomial::var_pow(v, dr - db));
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
}
