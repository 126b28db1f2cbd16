use crate::error::{Error, Result};
use std::fmt;

/// A monomial in the cut variables `q[0], q[1], ...`, stored sparsely as
/// `(variable, exponent)` pairs sorted by variable with no zero exponents.
///
/// The derived `Ord` is a storage order for sorting and hashing, not a
/// monomial order; use [`crate::toric::MonomialOrder`] for that.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    terms: Vec<(u32, u32)>,
    degree: u32,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "q[{v}]")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(index: usize) -> Self {
        Self { terms: vec![(index as u32, 1)], degree: 1 }
    }

    /// Builds from `(variable, exponent)` pairs in any order; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, u32)>,
    {
        let mut terms: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(v, e)| (v as u32, e))
            .collect();
        terms.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(terms.len());
        for (v, e) in terms {
            match merged.last_mut() {
                Some(last) if last.0 == v => {
                    last.1 = last.1.checked_add(e).ok_or(Error::Overflow)?;
                }
                _ => merged.push((v, e)),
            }
        }
        Self::from_sorted(merged)
    }

    /// Product of the listed variables (with repetition).
    pub fn from_vars(vars: &[usize]) -> Self {
        Self::from_pairs(vars.iter().map(|&v| (v, 1))).expect("small exponents")
    }

    /// Builds from a dense exponent vector.
    pub fn from_dense(exponents: &[u32]) -> Self {
        let terms: Vec<(u32, u32)> = exponents
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(v, &e)| (v as u32, e))
            .collect();
        let degree = exponents.iter().sum();
        Self { terms, degree }
    }

    fn from_sorted(terms: Vec<(u32, u32)>) -> Result<Self> {
        let degree = terms
            .iter()
            .try_fold(0u32, |acc, &(_, e)| acc.checked_add(e))
            .ok_or(Error::Overflow)?;
        Ok(Self { terms, degree })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        match self.terms.binary_search_by_key(&(var as u32), |t| t.0) {
            Ok(k) => self.terms[k].1,
            Err(_) => 0,
        }
    }

    /// `(variable, exponent)` pairs in increasing variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.terms.iter().map(|&(v, e)| (v as usize, e))
    }

    /// Variables with multiplicity, in increasing order.
    pub fn vars(&self) -> Vec<usize> {
        self.iter()
            .flat_map(|(v, e)| std::iter::repeat_n(v, e as usize))
            .collect()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.last().map(|t| t.0 as usize)
    }

    pub fn to_dense(&self, len: usize) -> Vec<u32> {
        let mut out = vec![0; len];
        for (v, e) in self.iter() {
            out[v] = e;
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.terms.iter().all(|t| t.1 <= 1)
    }

    fn merge_with(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        let mut terms = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let (v, ea, eb) = match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) if va == vb => {
                    i += 1;
                    j += 1;
                    (va, ea, eb)
                }
                (Some(&(va, ea)), Some(&(vb, _))) if va < vb => {
                    i += 1;
                    (va, ea, 0)
                }
                (Some(&(va, ea)), None) => {
                    i += 1;
                    (va, ea, 0)
                }
                (_, Some(&(vb, eb))) => {
                    j += 1;
                    (vb, 0, eb)
                }
                (None, None) => unreachable!(),
            };
            let e = f(ea, eb);
            if e > 0 {
                terms.push((v, e));
            }
        }
        let degree = terms.iter().map(|t| t.1).sum();
        Self { terms, degree }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.merge_with(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.merge_with(other, u32::max)
    }

    /// Support as a bitset with variables folded modulo 128; if `a` divides
    /// `b` then `a.support_mask() & !b.support_mask() == 0`.
    pub fn support_mask(&self) -> u128 {
        self.terms.iter().fold(0, |m, t| m | 1u128 << (t.0 % 128))
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        if self.degree > other.degree || self.terms.len() > other.terms.len() {
            return false;
        }
        let mut j = 0;
        for &(v, e) in &self.terms {
            while j < other.terms.len() && other.terms[j].0 < v {
                j += 1;
            }
            match other.terms.get(j) {
                Some(&(w, f)) if w == v && f >= e => j += 1,
                _ => return false,
            }
        }
        true
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(self.merge_with(other, |a, b| a - b))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Equal => return false,
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        true
    }
}

/// Calls `f` on every monomial of degree `d` in `nvars` variables, as a
/// nondecreasing list of variable indices.
pub fn for_each_multiset(nvars: usize, d: usize, mut f: impl FnMut(&[usize])) {
    fn rec(nvars: usize, d: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == d {
            f(cur);
            return;
        }
        for v in start..nvars {
            cur.push(v);
            rec(nvars, d, v, cur, f);
            cur.pop();
        }
    }
    if nvars == 0 && d > 0 {
        return;
    }
    let mut cur = Vec::with_capacity(d);
    rec(nvars, d, 0, &mut cur, &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::from_vars(&[0, 0, 2]);
        let b = Monomial::from_vars(&[0, 1]);
        assert_eq!(a.mul(&b), Monomial::from_vars(&[0, 0, 0, 1, 2]));
        assert_eq!(a.lcm(&b), Monomial::from_vars(&[0, 0, 1, 2]));
        assert!(b.divides(&a.mul(&b)));
        assert!(!b.divides(&a));
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(3).is_coprime(&a));
        assert_eq!(a.degree(), 3);
        assert!(!a.is_squarefree());
        assert_eq!(a.to_string(), "q[0]^2*q[2]");
        assert_eq!(Monomial::one().to_string(), "1");
    }

    #[test]
    fn pairs_merge_and_drop_zeros() {
        let m = Monomial::from_pairs([(4, 1), (2, 0), (4, 2), (1, 1)]).unwrap();
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(1, 1), (4, 3)]);
        assert_eq!(m.degree(), 4);
        assert_eq!(Monomial::from_dense(&m.to_dense(5)), m);
        assert!(Monomial::from_pairs([(0, u32::MAX), (0, 1)]).is_err());
    }

    #[test]
    fn multiset_counts() {
        let mut count = 0;
        for_each_multiset(4, 2, |_| count += 1);
        assert_eq!(count, 10);
        count = 0;
        for_each_multiset(3, 0, |m| {
            assert!(m.is_empty());
            count += 1
        });
        assert_eq!(count, 1);
    }
}
