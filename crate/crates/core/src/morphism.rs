use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;

/// Substitution homomorphism `source -> target` sending the i-th indeterminate of
/// `source` to `images[i]`.
#[derive(Clone, Debug)]
pub struct RingMorphism<C: Field = Rational> {
    pub source: Ring,
    pub target: Ring,
    pub images: Vec<Poly<C>>,
    /// Every image is homogeneous of the degree of its indeterminate.
    pub degree_zero: bool,
    /// Images of the target indeterminates under an inverse map, when one is known.
    pub inverse: Option<Vec<Poly<C>>>,
}

impl<C: Field> RingMorphism<C> {
    pub fn new(source: Ring, target: Ring, images: Vec<Poly<C>>) -> Result<Self> {
        if images.len() != source.n() {
            return Err(Error::InvalidInput(format!(
                "{} images given for {} indeterminates",
                images.len(),
                source.n()
            )));
        }
        let degree_zero = images.iter().enumerate().all(|(i, p)| match target.w_degree(p) {
            Ok(Some(d)) => d == source.weight(i) as u64,
            Ok(None) => true,
            Err(_) => false,
        });
        Ok(RingMorphism { source, target, images, degree_zero, inverse: None })
    }

    pub fn identity(ring: Ring) -> Self {
        let images = (0..ring.n()).map(Poly::var).collect();
        RingMorphism { source: ring.clone(), target: ring, images, degree_zero: true, inverse: None }
    }

    pub fn apply(&self, f: &Poly<C>) -> Poly<C> {
        f.compose(&self.images)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &RingMorphism<C>) -> RingMorphism<C> {
        let images = self.images.iter().map(|p| next.apply(p)).collect();
        let inverse = match (&self.inverse, &next.inverse) {
            (Some(a), Some(b)) => Some(b.iter().map(|p| p.compose(a)).collect()),
            _ => None,
        };
        RingMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            images,
            degree_zero: self.degree_zero && next.degree_zero,
            inverse,
        }
    }

    /// Check that the stored inverse composes to the identity in both directions.
    pub fn verify_inverse(&self) -> Result<()> {
        let inv = self.inverse.as_ref().ok_or_else(|| Error::Verification("no inverse recorded".into()))?;
        for (j, q) in inv.iter().enumerate() {
            if self.apply(q) != Poly::var(j) {
                return Err(Error::Verification(format!(
                    "forward map does not fix {}",
                    self.target.name(j)
                )));
            }
        }
        for (i, p) in self.images.iter().enumerate() {
            if p.compose(inv) != Poly::var(i) {
                return Err(Error::Verification(format!(
                    "inverse map does not fix {}",
                    self.source.name(i)
                )));
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> Vec<String> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, p)| format!("{} -> {}", self.source.name(i), self.target.fmt(p)))
            .collect()
    }
}
