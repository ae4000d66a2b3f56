//! Exponent vectors and monomial orders.

use crate::error::{Error, Result};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A monomial as a dense exponent vector; the length is the ring arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(arity: usize) -> Monomial {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, index: usize) -> Monomial {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|&e| e * k).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variable indices with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Appends zero exponents for `extra` new trailing variables.
    pub fn pad(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.extend(core::iter::repeat(0).take(extra));
        Monomial(e)
    }

    /// Drops the last `extra` exponents; they must all be zero.
    pub fn restrict(&self, extra: usize) -> Monomial {
        let keep = self.0.len() - extra;
        debug_assert!(self.0[keep..].iter().all(|&e| e == 0));
        Monomial(self.0[..keep].to_vec())
    }
}

/// A monomial order on the ring.
///
/// `GrevLex` and `Lex` are the ring orders; `Elim` is the product order used
/// internally for elimination (flagged variables form the leading block,
/// graded reverse lexicographic within each block).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingOrder {
    GrevLex,
    Lex,
    Elim { eliminated: Vec<bool> },
}

impl RingOrder {
    /// Total multiplicative well-order on same-arity monomials.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            RingOrder::GrevLex => grevlex(&a.0, &b.0),
            RingOrder::Lex => lex(&a.0, &b.0),
            RingOrder::Elim { eliminated } => {
                let block = |m: &Monomial, sel: bool| -> Vec<u32> {
                    m.0.iter()
                        .enumerate()
                        .filter(|(i, _)| eliminated.get(*i).copied().unwrap_or(false) == sel)
                        .map(|(_, &e)| e)
                        .collect()
                };
                grevlex(&block(a, true), &block(b, true))
                    .then_with(|| grevlex(&block(a, false), &block(b, false)))
            }
        }
    }

    /// Checked comparison with an arity guard, for callers holding raw input.
    pub fn compare_checked(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch {
                left: a.arity(),
                right: b.arity(),
            });
        }
        Ok(self.cmp(a, b))
    }

    /// The same order viewed in a ring with `extra` appended variables.
    pub fn pad(&self, extra: usize, old_arity: usize) -> RingOrder {
        match self {
            RingOrder::GrevLex => RingOrder::GrevLex,
            RingOrder::Lex => RingOrder::Lex,
            RingOrder::Elim { eliminated } => {
                let mut e = eliminated.clone();
                debug_assert_eq!(e.len(), old_arity);
                e.extend(core::iter::repeat(false).take(extra));
                RingOrder::Elim { eliminated: e }
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for (x, y) in a.iter().zip(b).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    // smaller exponent in the last differing position wins
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}
