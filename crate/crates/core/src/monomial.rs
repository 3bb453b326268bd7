//! Sparse monomials: maps from variable index to positive exponent.

use std::collections::{BTreeMap, BTreeSet};

/// A monomial over some variable context, stored sparsely.
///
/// Zero exponents are never stored; the empty map is the monomial 1.
/// The structural `Ord` derived here is used only for canonical storage
/// in maps, never as a monomial order — see [`crate::order::MonomialOrder`].
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: BTreeMap<usize, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(idx: usize) -> Self {
        Monomial::var_pow(idx, 1)
    }

    pub fn var_pow(idx: usize, exp: u32) -> Self {
        let mut exps = BTreeMap::new();
        if exp > 0 {
            exps.insert(idx, exp);
        }
        Monomial { exps }
    }

    /// Builds a monomial from (variable, exponent) pairs, summing
    /// repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut exps: BTreeMap<usize, u32> = BTreeMap::new();
        for (idx, e) in pairs {
            if e > 0 {
                *exps.entry(idx).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    /// Monomial x^v for a dense exponent vector over the x-block.
    pub fn from_exponents(v: &[u32]) -> Self {
        Monomial::from_pairs(v.iter().enumerate().map(|(i, &e)| (i, e)))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.exps.get(&idx).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|(&i, &e)| (i, e))
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.values().map(|&e| e as u64).sum()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.exps.keys().copied().collect()
    }

    pub fn supported_on(&self, vars: &BTreeSet<usize>) -> bool {
        self.exps.keys().all(|i| vars.contains(i))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&i, &e) in &other.exps {
            *exps.entry(i).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(&i, &e)| other.exponent(i) >= e)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = BTreeMap::new();
        for (&i, &e) in &self.exps {
            let oe = other.exponent(i);
            if oe > e {
                return None;
            }
            if e - oe > 0 {
                exps.insert(i, e - oe);
            }
        }
        if other.exps.iter().any(|(&i, &e)| self.exponent(i) < e) {
            return None;
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&i, &e) in &other.exps {
            let entry = exps.entry(i).or_insert(0);
            *entry = (*entry).max(e);
        }
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = BTreeMap::new();
        for (&i, &e) in &self.exps {
            let m = e.min(other.exponent(i));
            if m > 0 {
                exps.insert(i, m);
            }
        }
        Monomial { exps }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.keys().all(|i| other.exponent(*i) == 0)
    }

    /// Restriction to a variable set (exponents outside it dropped).
    pub fn restricted(&self, vars: &BTreeSet<usize>) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .filter(|(i, _)| vars.contains(i))
                .map(|(&i, &e)| (i, e))
                .collect(),
        }
    }

    /// Reindexes variables through `map`; returns `None` if a variable
    /// with positive exponent has no image.
    pub fn remap(&self, map: &[Option<usize>]) -> Option<Monomial> {
        let mut exps = BTreeMap::new();
        for (&i, &e) in &self.exps {
            exps.insert(map.get(i).copied().flatten()?, e);
        }
        Some(Monomial { exps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_has_empty_support() {
        assert!(Monomial::one().is_one());
        assert_eq!(Monomial::var_pow(3, 0), Monomial::one());
        assert_eq!(Monomial::one().total_degree(), 0);
    }

    #[test]
    fn arithmetic_and_divisibility() {
        let a = Monomial::from_pairs([(0, 2), (1, 1)]);
        let b = Monomial::from_pairs([(0, 1)]);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(a.try_div(&b), Some(Monomial::from_pairs([(0, 1), (1, 1)])));
        assert_eq!(b.try_div(&a), None);
        assert_eq!(a.mul(&b), Monomial::from_pairs([(0, 3), (1, 1)]));
        assert_eq!(a.lcm(&b), a);
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.total_degree(), 3);
    }

    #[test]
    fn coprimality() {
        let a = Monomial::from_pairs([(0, 2)]);
        let b = Monomial::from_pairs([(1, 5)]);
        assert!(a.is_coprime_with(&b));
        assert!(!a.is_coprime_with(&a));
    }

    #[test]
    fn remap_drops_nothing_silently() {
        let a = Monomial::from_pairs([(0, 1), (2, 3)]);
        let full = vec![Some(1), None, Some(0)];
        assert_eq!(
            a.remap(&full),
            Some(Monomial::from_pairs([(1, 1), (0, 3)]))
        );
        let partial = vec![Some(0), None, None];
        assert_eq!(a.remap(&partial), None);
    }
}
