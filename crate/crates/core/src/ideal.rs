use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::groebner::{dimension_from_leading, groebner_basis, normal_form};
use crate::order::TermOrder;
use crate::poly::Poly;
use crate::ring::Ring;
use std::sync::OnceLock;

/// Ideal given by generators in a graded ring, with a lazily computed degrevlex Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal<C: Field = Rational> {
    ring: Ring,
    gens: Vec<Poly<C>>,
    gb: OnceLock<Vec<Poly<C>>>,
}

impl<C: Field> Ideal<C> {
    /// Zero generators are dropped.
    pub fn new(ring: Ring, gens: Vec<Poly<C>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, gens, gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly<C>] {
        &self.gens
    }

    pub fn groebner(&self) -> &[Poly<C>] {
        self.gb.get_or_init(|| groebner_basis(&self.gens, &TermOrder::DegRevLex))
    }

    pub fn normal_form(&self, f: &Poly<C>) -> Poly<C> {
        normal_form(f, self.groebner(), &TermOrder::DegRevLex)
    }

    pub fn contains(&self, f: &Poly<C>) -> bool {
        f.is_zero() || self.normal_form(f).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().iter().any(|g| g.is_constant())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains_ideal(&self, other: &Ideal<C>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality of ideals by mutual containment of generators.
    pub fn equals(&self, other: &Ideal<C>) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| self.ring.is_homogeneous(g))
    }

    /// Every generator homogeneous of positive degree.
    pub fn check_positively_generated(&self) -> Result<()> {
        for g in &self.gens {
            if let Some(0) = self.ring.w_degree(g)? {
                return Err(Error::InvalidInput(format!("generator {} has degree zero", self.ring.fmt(g))));
            }
        }
        Ok(())
    }

    /// Krull dimension of the quotient ring; `None` for the unit ideal.
    pub fn krull_dimension(&self) -> Option<usize> {
        dimension_from_leading(self.groebner(), &TermOrder::DegRevLex, self.ring.n())
    }

    /// Generators of the intersection with the subring on the indeterminates outside `z`,
    /// via a Gröbner basis for a block ordering.
    pub fn eliminate_oracle(&self, z: &[usize]) -> Ideal<C> {
        let n = self.ring.n();
        let keep: Vec<usize> = (0..n).filter(|i| !z.contains(i)).collect();
        let sub = self.ring.subring(&keep);
        if z.is_empty() {
            return Ideal::new(sub, self.gens.clone());
        }
        let gb = groebner_basis(&self.gens, &TermOrder::elimination(n, z));
        let mut map = vec![usize::MAX; n];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let gens = gb
            .into_iter()
            .filter(|g| z.iter().all(|&i| !g.uses_var(i)))
            .map(|g| g.remap_vars(&map))
            .collect();
        Ideal::new(sub, gens)
    }

    pub fn describe(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.fmt(g)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(names: &[&str], weights: &[u32], gens: &[&str]) -> Ideal {
        let r = Ring::new(names, weights).unwrap();
        let g = gens.iter().map(|s| r.parse(s).unwrap()).collect();
        Ideal::new(r, g)
    }

    #[test]
    fn zero_ideal_has_full_dimension() {
        let i = ideal(&["x", "y", "z"], &[1, 1, 1], &[]);
        assert_eq!(i.krull_dimension(), Some(3));
        let u = ideal(&["x"], &[1], &["x", "x + 1"]);
        assert!(u.is_unit());
        assert_eq!(u.krull_dimension(), None);
    }

    #[test]
    fn elimination_with_empty_tuple_is_identity() {
        let i = ideal(&["x", "y"], &[1, 1], &["x - y"]);
        assert!(i.eliminate_oracle(&[]).equals(&i));
    }

    #[test]
    fn elimination_of_twisted_cubic() {
        let i = ideal(&["t", "x", "y", "z"], &[1, 1, 1, 1], &["x - t", "y - t^2", "z - t^3"]);
        let e = i.eliminate_oracle(&[0]);
        assert_eq!(e.ring().names(), &["x", "y", "z"]);
        let r = e.ring().clone();
        let expected = Ideal::new(r.clone(), vec![r.parse("y - x^2").unwrap(), r.parse("z - x^3").unwrap()]);
        assert!(e.equals(&expected));
    }
}
