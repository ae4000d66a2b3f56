//! Elements of free modules R^r as flat sorted term lists, and module orders.

use crate::algebra::{Coeff, Monomial, Poly, PolyRing, RingOrder};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// One term `coeff * mono * e_comp` of a free-module element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModTerm {
    pub mono: Monomial,
    pub comp: u32,
    pub coeff: Coeff,
}

/// A monomial order on a free module.
///
/// `Top` is term-over-position, `Pot` position-over-term (lower component
/// index wins ties in both). `Tagged` is the syzygy order: components below
/// `split` form an eliminating leading block ordered `Top`; tag components are
/// ordered by the Schreyer weights induced from the tagged generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModOrder {
    Top(RingOrder),
    Pot(RingOrder),
    Tagged {
        ring: RingOrder,
        split: u32,
        weights: Vec<Monomial>,
    },
}

impl ModOrder {
    pub fn ring_order(&self) -> &RingOrder {
        match self {
            ModOrder::Top(o) | ModOrder::Pot(o) | ModOrder::Tagged { ring: o, .. } => o,
        }
    }

    pub fn cmp(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        match self {
            ModOrder::Top(ord) => ord
                .cmp(&a.mono, &b.mono)
                .then_with(|| b.comp.cmp(&a.comp)),
            ModOrder::Pot(ord) => b
                .comp
                .cmp(&a.comp)
                .then_with(|| ord.cmp(&a.mono, &b.mono)),
            ModOrder::Tagged {
                ring,
                split,
                weights,
            } => {
                let (ba, bb) = (a.comp >= *split, b.comp >= *split);
                match (ba, bb) {
                    (false, true) => Ordering::Greater,
                    (true, false) => Ordering::Less,
                    (false, false) => ring
                        .cmp(&a.mono, &b.mono)
                        .then_with(|| b.comp.cmp(&a.comp)),
                    (true, true) => {
                        let wa = a.mono.mul(&weights[(a.comp - split) as usize]);
                        let wb = b.mono.mul(&weights[(b.comp - split) as usize]);
                        ring.cmp(&wa, &wb).then_with(|| b.comp.cmp(&a.comp))
                    }
                }
            }
        }
    }
}

/// A free-module element: strictly descending, zero-free term list under a
/// fixed [`ModOrder`] that the surrounding computation supplies.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModVec {
    terms: Vec<ModTerm>,
}

impl ModVec {
    pub fn zero() -> ModVec {
        ModVec { terms: Vec::new() }
    }

    pub fn from_terms(order: &ModOrder, field: &crate::algebra::FieldSpec, mut terms: Vec<ModTerm>) -> ModVec {
        terms.sort_by(|a, b| order.cmp(b, a));
        let mut out: Vec<ModTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono && last.comp == t.comp => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
            if let Some(last) = out.last() {
                if last.coeff.is_zero() {
                    out.pop();
                }
            }
        }
        ModVec { terms: out }
    }

    /// Packs polynomial coordinates (index = component) into a vector.
    pub fn from_polys(order: &ModOrder, coords: &[Poly]) -> ModVec {
        let field = match coords.first() {
            Some(p) => *p.ring().field(),
            None => return ModVec::zero(),
        };
        let mut terms = Vec::new();
        for (comp, p) in coords.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(ModTerm {
                    mono: m.clone(),
                    comp: comp as u32,
                    coeff: c.clone(),
                });
            }
        }
        ModVec::from_terms(order, &field, terms)
    }

    /// Unpacks into dense polynomial coordinates of the given rank.
    pub fn to_polys(&self, ring: &Arc<PolyRing>, rank: usize) -> Vec<Poly> {
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = alloc::vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp as usize].push((t.mono.clone(), t.coeff.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Poly::from_terms(ring, b))
            .collect()
    }

    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    pub fn degree(&self) -> u64 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &ModVec, order: &ModOrder, field: &crate::algebra::FieldSpec) -> ModVec {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp(a, b) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&a.coeff, &b.coeff);
                    if !c.is_zero() {
                        out.push(ModTerm {
                            mono: a.mono.clone(),
                            comp: a.comp,
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        ModVec { terms: out }
    }

    pub fn neg(&self, field: &crate::algebra::FieldSpec) -> ModVec {
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    mono: t.mono.clone(),
                    comp: t.comp,
                    coeff: field.neg(&t.coeff),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &ModVec, order: &ModOrder, field: &crate::algebra::FieldSpec) -> ModVec {
        self.add(&other.neg(field), order, field)
    }

    /// Multiplies every term by `mono * coeff`; preserves sortedness.
    pub fn mul_term(&self, mono: &Monomial, coeff: &Coeff, field: &crate::algebra::FieldSpec) -> ModVec {
        if coeff.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    mono: t.mono.mul(mono),
                    comp: t.comp,
                    coeff: field.mul(&t.coeff, coeff),
                })
                .collect(),
        }
    }

    pub fn monic(&self, field: &crate::algebra::FieldSpec) -> ModVec {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => {
                let inv = field.inv(&t.coeff).expect("nonzero leading coefficient");
                self.mul_term(&Monomial::one(t.mono.arity()), &inv, field)
            }
        }
    }

    /// Total deterministic ordering, used only for canonical output sorting.
    pub fn cmp_full(&self, other: &ModVec, order: &ModOrder) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match order.cmp(a, b) {
                Ordering::Equal => {}
                o => return o,
            }
            match a.coeff.cmp(&b.coeff) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}
