use super::{Monomial, MonomialOrder};
use crate::cut::CutMatrix;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A pure binomial `lead - tail` with distinct terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    lead: Monomial,
    tail: Monomial,
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.tail)
    }
}

impl Binomial {
    pub fn new(lead: Monomial, tail: Monomial) -> Result<Self> {
        if lead == tail {
            return Err(Error::EqualTerms);
        }
        Ok(Self { lead, tail })
    }

    /// `lead - tail` with the terms placed so that `lead` is the larger one
    /// under `ord`.
    pub fn oriented(a: Monomial, b: Monomial, ord: &MonomialOrder) -> Result<Self> {
        match ord.cmp(&a, &b) {
            Ordering::Equal => Err(Error::EqualTerms),
            Ordering::Greater => Ok(Self { lead: a, tail: b }),
            Ordering::Less => Ok(Self { lead: b, tail: a }),
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn tail(&self) -> &Monomial {
        &self.tail
    }

    pub fn degree(&self) -> u32 {
        self.lead.degree().max(self.tail.degree())
    }

    /// Same binomial up to sign, with `lead` the larger term under `ord`.
    pub fn orient(&self, ord: &MonomialOrder) -> Self {
        if ord.cmp(&self.lead, &self.tail) == Ordering::Less {
            Self { lead: self.tail.clone(), tail: self.lead.clone() }
        } else {
            self.clone()
        }
    }

    /// Whether the stored `lead` is the leading term under `ord`.
    pub fn is_oriented(&self, ord: &MonomialOrder) -> bool {
        ord.cmp(&self.lead, &self.tail) == Ordering::Greater
    }

    /// Both terms have the same image under the monomial map.
    pub fn in_kernel(&self, matrix: &CutMatrix) -> Result<bool> {
        Ok(matrix.evaluate(&self.lead)? == matrix.evaluate(&self.tail)?)
    }

    /// Order-independent key identifying the binomial up to sign.
    pub fn unordered_key(&self) -> (Monomial, Monomial) {
        if self.lead <= self.tail {
            (self.lead.clone(), self.tail.clone())
        } else {
            (self.tail.clone(), self.lead.clone())
        }
    }
}

/// Rejects any binomial outside the kernel of `matrix`.
pub fn validate_kernel(binomials: &[Binomial], matrix: &CutMatrix) -> Result<()> {
    for b in binomials {
        if !b.in_kernel(matrix)? {
            return Err(Error::NotInKernel(b.to_string()));
        }
    }
    Ok(())
}

/// One binomial per line, `lead - tail`.
pub fn format_binomials(binomials: &[Binomial]) -> String {
    binomials.iter().map(|b| format!("{b}\n")).collect()
}
