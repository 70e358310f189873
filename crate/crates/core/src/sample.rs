//! Random homogeneous families over a weight-zero parameter, for property checks.

use crate::coeff::{int, rat, Rational};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::Ring;
use rand::Rng;

#[derive(Clone, Copy, Debug)]
pub struct FamilyShape {
    pub params: usize,
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_degree: u32,
}

impl Default for FamilyShape {
    fn default() -> Self {
        FamilyShape { params: 1, max_vars: 5, max_gens: 4, max_degree: 3 }
    }
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let n = rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 };
    rat(n, rng.gen_range(1..=2))
}

fn exponents(n: usize, total: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in 0..=total {
        for mut rest in exponents(n - 1, total - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Monomials of weighted degree `d` in the positive indeterminates with total degree at most `max_total`.
fn monomials_of_degree(ring: &Ring, d: u64, max_total: u32) -> Vec<Monomial> {
    let n = ring.n();
    (0..=max_total)
        .flat_map(|t| exponents(n, t))
        .map(|e| Monomial::from_exps(&e))
        .filter(|m| ring.mono_degree(m) == d)
        .collect()
}

/// A random ideal generated by homogeneous polynomials of positive degree.
///
/// Parameters come first and have weight zero; the others have weight 1 or 2.
/// With probability one half a generator carries a bare indeterminate, which makes
/// separating tuples common.
pub fn random_family<R: Rng>(rng: &mut R, shape: &FamilyShape) -> Ideal {
    let pos = rng.gen_range(2..=shape.max_vars - shape.params);
    let mut names: Vec<String> = ["a", "b", "c"][..shape.params].iter().map(|s| s.to_string()).collect();
    let mut weights = vec![0u32; shape.params];
    for i in 0..pos {
        names.push(format!("x{}", i + 1));
        weights.push(if rng.gen_bool(0.7) { 1 } else { 2 });
    }
    let ring = Ring::new(&names, &weights).expect("valid ring");
    let s = rng.gen_range(1..=shape.max_gens);
    let mut gens = Vec::new();
    while gens.len() < s {
        let d = rng.gen_range(1..=2u64);
        let monos = monomials_of_degree(&ring, d, shape.max_degree);
        let bare: Vec<&Monomial> = monos.iter().filter(|m| m.degree() == 1).collect();
        let mut terms: Vec<(Monomial, Rational)> = Vec::new();
        if !bare.is_empty() && rng.gen_bool(0.5) {
            terms.push(((*bare[rng.gen_range(0..bare.len())]).clone(), int(1)));
        }
        for m in &monos {
            let has_param = (0..shape.params).any(|i| m.exp(i) > 0);
            if rng.gen_bool(if has_param { 0.3 } else { 0.4 }) {
                terms.push((m.clone(), small_rational(rng)));
            }
        }
        let g = Poly::from_terms(terms);
        if !g.is_zero() {
            gens.push(g);
        }
    }
    Ideal::new(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn families_are_positively_generated() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let i = random_family(&mut rng, &FamilyShape::default());
            assert!(i.ring().n() <= 5 && i.gens().len() <= 4);
            i.check_positively_generated().unwrap();
            assert!(i.gens().iter().all(|g| g.total_degree().unwrap() <= 3));
        }
    }
}
