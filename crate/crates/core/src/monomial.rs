use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// Exponent vector with trailing zeros trimmed, so monomials need no variable count.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: SmallVec::new() }
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        let mut m = Monomial { exps: exps.iter().copied().collect() };
        m.trim();
        m
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut exps = SmallVec::from_elem(0, i + 1);
        exps[i] = e;
        Monomial { exps }
    }

    fn trim(&mut self) {
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    /// Exponents up to the last nonzero one.
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exps_padded(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.exp(i)).collect()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .map(|(i, &e)| e as u64 * weights.get(i).copied().unwrap_or(0) as u64)
            .sum()
    }

    /// Index one past the last variable that occurs.
    pub fn width(&self) -> usize {
        self.exps.len()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() { (self, other) } else { (other, self) };
        let mut exps = long.exps.clone();
        for (i, &e) in short.exps.iter().enumerate() {
            exps[i] += e;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() <= other.exps.len() && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = self.exps.clone();
        for (i, &e) in other.exps.iter().enumerate() {
            exps[i] -= e;
        }
        let mut m = Monomial { exps };
        m.trim();
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.exps.len().max(other.exps.len());
        let exps = (0..n).map(|i| self.exp(i).max(other.exp(i))).collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let n = self.exps.len().min(other.exps.len());
        let mut m = Monomial { exps: (0..n).map(|i| self.exp(i).min(other.exp(i))).collect() };
        m.trim();
        m
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|&e| e * k).collect() }
    }

    /// Drop variable `i` (exponent discarded) and shift later variables down.
    pub fn remove_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        if i < exps.len() {
            exps.remove(i);
        }
        let mut m = Monomial { exps };
        m.trim();
        m
    }

    /// Keep only the variables listed in `keep` (new index = position in `keep`).
    pub fn select(&self, keep: &[usize]) -> Monomial {
        let mut m = Monomial { exps: keep.iter().map(|&i| self.exp(i)).collect() };
        m.trim();
        m
    }

    /// Move variable `i` to position `map[i]`, for an injective `map`.
    pub fn remap(&self, map: &[usize]) -> Monomial {
        let n = self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| map[i] + 1).max().unwrap_or(0);
        let mut exps: SmallVec<[u32; 8]> = SmallVec::from_elem(0, n);
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[map[i]] += e;
            }
        }
        Monomial { exps }
    }

    pub fn set_exp(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        if exps.len() <= i {
            exps.resize(i + 1, 0);
        }
        exps[i] = e;
        let mut m = Monomial { exps };
        m.trim();
        m
    }

    /// Degree-reverse-lexicographic comparison, variable 0 largest.
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let n = self.exps.len().max(other.exps.len());
        for i in (0..n).rev() {
            match self.exp(i).cmp(&other.exp(i)) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_degrevlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(Monomial::from_exps(&[1, 0, 0]), Monomial::var(0));
        assert!(Monomial::from_exps(&[0, 0]).is_one());
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exps(&[2, 1]);
        let b = Monomial::from_exps(&[1, 0, 3]);
        assert_eq!(a.lcm(&b), Monomial::from_exps(&[2, 1, 3]));
        assert_eq!(a.gcd(&b), Monomial::var(0));
        assert_eq!(a.div(&Monomial::var(1)), Some(Monomial::var_pow(0, 2)));
        assert_eq!(a.div(&b), None);
        assert!(!a.coprime(&b));
        assert!(Monomial::var(1).coprime(&b));
    }

    #[test]
    fn degrevlex_breaks_ties_on_last_variable() {
        let x1x3 = Monomial::from_exps(&[1, 0, 1]);
        let x2sq = Monomial::from_exps(&[0, 2]);
        assert!(x1x3 < x2sq);
        assert!(Monomial::var(0) > Monomial::var(1));
        assert!(Monomial::var_pow(2, 2) > Monomial::var(0));
    }

    #[test]
    fn remap_and_select() {
        let m = Monomial::from_exps(&[1, 2, 3]);
        assert_eq!(m.select(&[2, 0]), Monomial::from_exps(&[3, 1]));
        assert_eq!(m.remap(&[2, 0, 1]), Monomial::from_exps(&[2, 3, 1]));
        assert_eq!(m.remove_var(1), Monomial::from_exps(&[1, 3]));
    }
}
