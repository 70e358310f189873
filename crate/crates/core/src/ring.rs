use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::parse::{format_poly, parse_poly};
use crate::poly::Poly;

/// Polynomial ring with ordered indeterminates and a non-negative weight row.
///
/// `params` is non-empty when the coefficient field is a rational function
/// field in those names rather than Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
    weights: Vec<u32>,
    params: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<Self> {
        Self::with_params(names, weights, &[] as &[&str])
    }

    pub fn with_params<S: AsRef<str>, T: AsRef<str>>(names: &[S], weights: &[u32], params: &[T]) -> Result<Self> {
        if names.len() != weights.len() {
            return Err(Error::InvalidInput(format!(
                "grading has {} entries but the ring has {} indeterminates",
                weights.len(),
                names.len()
            )));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let params: Vec<String> = params.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().chain(params.iter()).enumerate() {
            if names.iter().chain(params.iter()).skip(i + 1).any(|m| m == n) {
                return Err(Error::InvalidInput(format!("duplicate indeterminate `{n}`")));
            }
        }
        Ok(Ring { names, weights: weights.to_vec(), params })
    }

    /// Every indeterminate of weight one.
    pub fn standard<S: AsRef<str>>(names: &[S]) -> Self {
        Self::new(names, &vec![1; names.len()]).expect("valid ring")
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn indices_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names
            .iter()
            .map(|n| self.index_of(n.as_ref()).ok_or_else(|| Error::UnknownVariable(n.as_ref().to_string())))
            .collect()
    }

    /// Indeterminates of weight zero.
    pub fn zero_vars(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.weights[i] == 0).collect()
    }

    /// Indeterminates of positive weight.
    pub fn pos_vars(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.weights[i] > 0).collect()
    }

    pub fn is_positive(&self) -> bool {
        self.weights.iter().all(|&w| w > 0)
    }

    pub fn mono_degree(&self, m: &Monomial) -> u64 {
        m.weighted_degree(&self.weights)
    }

    /// `Ok(None)` for the zero polynomial, an error if the terms have different degrees.
    pub fn w_degree<C: Field>(&self, f: &Poly<C>) -> Result<Option<u64>> {
        let mut d = None;
        for (m, _) in f.terms() {
            let e = self.mono_degree(m);
            match d {
                None => d = Some(e),
                Some(d0) if d0 != e => return Err(Error::NotHomogeneous(self.fmt(f))),
                _ => {}
            }
        }
        Ok(d)
    }

    pub fn is_homogeneous<C: Field>(&self, f: &Poly<C>) -> bool {
        self.w_degree(f).is_ok()
    }

    /// Components by strictly increasing degree; they sum to `f`.
    pub fn homogeneous_components<C: Field>(&self, f: &Poly<C>) -> Vec<(u64, Poly<C>)> {
        let mut parts: Vec<(u64, Vec<(Monomial, C)>)> = Vec::new();
        for (m, c) in f.terms() {
            let d = self.mono_degree(m);
            match parts.iter_mut().find(|(e, _)| *e == d) {
                Some((_, v)) => v.push((m.clone(), c.clone())),
                None => parts.push((d, vec![(m.clone(), c.clone())])),
            }
        }
        parts.sort_by_key(|(d, _)| *d);
        parts.into_iter().map(|(d, t)| (d, Poly::from_terms(t))).collect()
    }

    /// Ring on the listed indeterminates, in the given order.
    pub fn subring(&self, keep: &[usize]) -> Ring {
        Ring {
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
            weights: keep.iter().map(|&i| self.weights[i]).collect(),
            params: self.params.clone(),
        }
    }

    /// Ring over Q(weight-zero indeterminates) in the positive-weight indeterminates.
    pub fn fiber_ring(&self, generic: bool) -> Ring {
        let pos = self.pos_vars();
        let params: Vec<String> = if generic {
            self.zero_vars().iter().map(|&i| self.names[i].clone()).collect()
        } else {
            self.params.clone()
        };
        Ring {
            names: pos.iter().map(|&i| self.names[i].clone()).collect(),
            weights: pos.iter().map(|&i| self.weights[i]).collect(),
            params,
        }
    }

    pub fn parse(&self, text: &str) -> Result<Poly<Rational>> {
        parse_poly(text, &self.names)
    }

    pub fn fmt<C: Field>(&self, f: &Poly<C>) -> String {
        format_poly(f, &self.names, &self.params)
    }

    pub fn describe(&self) -> String {
        let field = if self.params.is_empty() { "Q".to_string() } else { format!("Q({})", self.params.join(",")) };
        format!("{}[{}]", field, self.names.join(","))
    }
}
