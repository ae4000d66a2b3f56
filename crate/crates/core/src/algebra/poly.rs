//! Polynomial rings and exact multivariate polynomials.

use crate::algebra::coeff::{displays_negative, Coeff, FieldSpec};
use crate::algebra::monomial::{Monomial, RingOrder};
use crate::error::{Error, Result};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Hard cap on ring arity; all gallery instances are small.
pub const MAX_ARITY: usize = 16;

/// A named polynomial ring: coefficient field, variables, monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    field: FieldSpec,
    vars: Vec<String>,
    order: RingOrder,
}

impl PolyRing {
    pub fn new(field: FieldSpec, vars: Vec<String>, order: RingOrder) -> Result<Arc<PolyRing>> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable required".into()));
        }
        if vars.len() > MAX_ARITY {
            return Err(Error::InvalidRing(format!(
                "arity {} exceeds the supported maximum {MAX_ARITY}",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable {v}")));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn rational(vars: &[&str]) -> Result<Arc<PolyRing>> {
        PolyRing::new(
            FieldSpec::Rationals,
            vars.iter().map(|v| v.to_string()).collect(),
            RingOrder::GrevLex,
        )
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &RingOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The same ring with `extra` fresh trailing variables (names `#0`, `#1`, ...).
    pub fn extended(self: &Arc<Self>, extra: usize, order: RingOrder) -> Result<Arc<PolyRing>> {
        let mut vars = self.vars.clone();
        for i in 0..extra {
            vars.push(format!("#{i}"));
        }
        PolyRing::new(self.field, vars, order)
    }

    /// The same variables under a different order.
    pub fn with_order(self: &Arc<Self>, order: RingOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            field: self.field,
            vars: self.vars.clone(),
            order,
        })
    }
}

/// An exact polynomial: strictly descending, zero-free term list.
#[derive(Debug, Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Poly {
        Poly::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(ring);
        }
        Poly {
            ring: ring.clone(),
            terms: alloc::vec![(Monomial::one(ring.arity()), c)],
        }
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: alloc::vec![(Monomial::var(ring.arity(), index), ring.field.one())],
        }
    }

    pub fn term(ring: &Arc<PolyRing>, mono: Monomial, c: Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(ring);
        }
        debug_assert_eq!(mono.arity(), ring.arity());
        Poly {
            ring: ring.clone(),
            terms: alloc::vec![(mono, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges, drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, Coeff)>) -> Poly {
        terms.sort_by(|a, b| ring.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = ring.field.add(lc, &c),
                _ => out.push((m, c)),
            }
            if let Some((_, lc)) = out.last() {
                if lc.is_zero() {
                    out.pop();
                }
            }
        }
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn constant_coeff(&self) -> Coeff {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Leading monomial and coefficient under the ring order.
    pub fn leading(&self) -> Result<(&Monomial, &Coeff)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.ring, other.ring);
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ring.order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.field.add(ca, cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.ring.field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    /// Multiplication by a single term; preserves sortedness.
    pub fn mul_term(&self, mono: &Monomial, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), self.ring.field.mul(k, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        self.mul_term(&Monomial::one(self.ring.arity()), c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.ring, other.ring);
        let mut acc = Poly::zero(&self.ring);
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Monic rescaling (leading coefficient 1); zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = self.ring.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Appends `extra` fresh variables, reinterpreting in `ring`.
    pub fn pad(&self, ring: &Arc<PolyRing>) -> Poly {
        let extra = ring.arity() - self.ring.arity();
        Poly {
            ring: ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.pad(extra), c.clone()))
                .collect(),
        }
        .resorted()
    }

    /// Drops the trailing variables of `self.ring` not present in `ring`;
    /// the polynomial must not involve them.
    pub fn restrict(&self, ring: &Arc<PolyRing>) -> Poly {
        let extra = self.ring.arity() - ring.arity();
        Poly {
            ring: ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.restrict(extra), c.clone()))
                .collect(),
        }
        .resorted()
    }

    /// True if no term involves a variable flagged in `mask`.
    pub fn avoids(&self, mask: &[bool]) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| m.support().all(|i| !mask[i]))
    }

    fn resorted(self) -> Poly {
        let ring = self.ring.clone();
        Poly::from_terms(&ring, self.terms)
    }

    /// Checked arithmetic entry point with ring validation.
    pub fn checked_binop(op: PolyOp, f: &Poly, g: &Poly) -> Result<Poly> {
        if f.ring != g.ring {
            return Err(Error::RingMismatch);
        }
        Ok(match op {
            PolyOp::Add => f.add(g),
            PolyOp::Mul => f.mul(g),
        })
    }
}

/// Operation selector for [`Poly::checked_binop`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = displays_negative(c);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = if neg { self.ring.field.neg(c) } else { c.clone() };
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                let mut first = mag.is_one();
                if !first {
                    write!(f, "{mag}")?;
                }
                for (v, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "{}", self.ring.vars[v])?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
