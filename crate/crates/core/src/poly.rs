use crate::coeff::{Field, Rational};
use crate::monomial::Monomial;
use std::cmp::Ordering;

/// Sparse polynomial; terms sorted by descending degrevlex, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<C: Field = Rational> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Field> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Field> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_i64(v: i64) -> Self {
        Self::constant(C::from_i64(v))
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i))
    }

    /// Build from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(mut terms: Vec<(Monomial, C)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.plus(&c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn constant_coeff(&self) -> C {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => C::zero(),
        }
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn lc(&self) -> C {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Index one past the largest variable occurring.
    pub fn width(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.width()).max().unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    pub fn vars(&self) -> Vec<usize> {
        (0..self.width()).filter(|&i| self.uses_var(i)).collect()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exp(i)).max()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a.times(c))).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.times(c))).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inverse()),
            _ => self.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negate())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].1.negate() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.minus(&b[j].1) } else { a[i].1.plus(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { t.1.negate() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                prods.push((m1.mul(m2), c1.times(c2)));
            }
        }
        Self::from_terms(prods)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect())
    }

    /// Rename variables: variable `i` becomes `map[i]` (must be injective on the support).
    pub fn remap_vars(&self, map: &[usize]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.remap(map), c.clone())).collect())
    }

    /// Replace every variable `i` by `images[i]`.
    pub fn compose(&self, images: &[Poly<C>]) -> Self {
        assert!(self.width() <= images.len(), "not enough images for substitution");
        let mut cache: Vec<Vec<Poly<C>>> = vec![Vec::new(); images.len()];
        let mut acc = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                if powers.is_empty() {
                    powers.push(Self::one());
                }
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap().mul(&images[i]);
                    powers.push(next);
                }
                t = t.mul(&powers[e as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Replace variable `i` by `image`, leaving the others fixed.
    pub fn substitute(&self, i: usize, image: &Poly<C>) -> Self {
        if !self.uses_var(i) {
            return self.clone();
        }
        let n = self.width().max(image.width()).max(i + 1);
        let images: Vec<Poly<C>> = (0..n).map(|j| if j == i { image.clone() } else { Self::var(j) }).collect();
        self.compose(&images)
    }

    /// Evaluate variables given as `(index, value)`; others are kept.
    pub fn eval_partial(&self, values: &[(usize, C)]) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let mut c2 = c.clone();
            for (i, v) in values {
                let e = m.exp(*i);
                if e > 0 {
                    for _ in 0..e {
                        c2 = c2.times(v);
                    }
                    m2 = m2.set_exp(*i, 0);
                }
            }
            terms.push((m2, c2));
        }
        Self::from_terms(terms)
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                terms.push((m.set_exp(i, e - 1), c.times(&C::from_i64(e as i64))));
            }
        }
        Self::from_terms(terms)
    }

    /// Coefficients with respect to variable `i`: entry `k` multiplies `x_i^k`.
    pub fn coefficients_in(&self, i: usize) -> Vec<Poly<C>> {
        let d = self.degree_in(i).unwrap_or(0) as usize;
        let mut parts: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            parts[m.exp(i) as usize].push((m.set_exp(i, 0), c.clone()));
        }
        parts.into_iter().map(Self::from_terms).collect()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly<C>) -> Option<Self> {
        let (dm, dc) = d.leading()?.clone();
        if d.terms.len() == 1 {
            let inv = dc.inverse();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                terms.push((m.div(&dm)?, c.times(&inv)));
            }
            return Some(Poly { terms });
        }
        let inv = dc.inverse();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = m.div(&dm)?;
            let qc = c.times(&inv);
            rem = rem.sub(&d.mul_term(&q, &qc));
            quot.push((q, qc));
        }
        Some(Self::from_terms(quot))
    }
}

impl<C: Field> std::ops::Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Self {
        Poly::add(&self, &rhs)
    }
}

impl<C: Field> std::ops::Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Poly<C> {
        Poly::add(self, rhs)
    }
}

impl<C: Field> std::ops::Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Self {
        Poly::sub(&self, &rhs)
    }
}

impl<C: Field> std::ops::Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Poly<C> {
        Poly::sub(self, rhs)
    }
}

impl<C: Field> std::ops::Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Self {
        Poly::mul(&self, &rhs)
    }
}

impl<C: Field> std::ops::Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Poly<C> {
        Poly::mul(self, rhs)
    }
}

impl<C: Field> std::ops::Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Self {
        Poly::neg(&self)
    }
}

impl<C: Field> std::ops::Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::neg(self)
    }
}
