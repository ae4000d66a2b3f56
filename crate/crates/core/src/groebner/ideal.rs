//! Ideals and the elimination-based ideal calculus.

use crate::algebra::{Monomial, Poly, PolyRing, RingOrder};
use crate::error::{Error, Result};
use crate::groebner::engine::{ideal_groebner, poly_normal_form, Budget};
use crate::groebner::syzygy::{syzygies, ColumnModule};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

/// An ideal of a polynomial ring, with an optional cached reduced Groebner
/// basis for the ring's own order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Poly>,
    gb: Option<Vec<Poly>>,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Poly>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: None,
        }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, vec![Poly::one(ring)])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Groebner basis under the ring's order, cached if present.
    pub fn groebner(&self, budget: &mut Budget) -> Result<Vec<Poly>> {
        if let Some(gb) = &self.gb {
            return Ok(gb.clone());
        }
        ideal_groebner(&self.gens, &self.ring, self.ring.order(), budget)
    }

    /// Same ideal with the reduced basis computed and stored.
    pub fn cached(mut self, budget: &mut Budget) -> Result<Ideal> {
        if self.gb.is_none() {
            self.gb = Some(ideal_groebner(
                &self.gens,
                &self.ring,
                self.ring.order(),
                budget,
            )?);
        }
        Ok(self)
    }

    pub fn cached_basis(&self) -> Option<&[Poly]> {
        self.gb.as_deref()
    }

    pub fn contains(&self, f: &Poly, budget: &mut Budget) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let gb = self.groebner(budget)?;
        Ok(poly_normal_form(f, &gb, &self.ring, self.ring.order(), budget)?.is_zero())
    }

    /// Radical membership via the extra-variable trick: `f` is in the radical
    /// iff `1` lies in `I + (1 - t*f)` in one more variable.
    pub fn radical_contains(&self, f: &Poly, budget: &mut Budget) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        let ext = self.ring.extended(1, RingOrder::GrevLex)?;
        let t = Poly::var(&ext, ext.arity() - 1);
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.pad(&ext)).collect();
        gens.push(Poly::one(&ext).sub(&t.mul(&f.pad(&ext))));
        let gb = ideal_groebner(&gens, &ext, &RingOrder::GrevLex, budget)?;
        Ok(gb.iter().any(|g| g.is_constant()))
    }

    pub fn is_unit(&self, budget: &mut Budget) -> Result<bool> {
        Ok(self.groebner(budget)?.iter().any(|g| g.is_constant()))
    }

    /// Ideal equality via reduced-basis comparison under the ring order.
    pub fn equals(&self, other: &Ideal, budget: &mut Budget) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner(budget)? == other.groebner(budget)?)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal, budget: &mut Budget) -> Result<Ideal> {
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g));
            }
        }
        // interreduce to keep generator counts tame
        let gb = ideal_groebner(&gens, &self.ring, self.ring.order(), budget)?;
        Ok(Ideal {
            ring: self.ring.clone(),
            gens: gb.clone(),
            gb: Some(gb),
        })
    }

    /// Intersection by the one-tag-variable elimination method.
    pub fn intersect(&self, other: &Ideal, budget: &mut Budget) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let n = self.ring.arity();
        let mut eliminated = vec![false; n + 1];
        eliminated[n] = true;
        let ext = self.ring.extended(1, RingOrder::Elim { eliminated })?;
        let t = Poly::var(&ext, n);
        let one_minus_t = Poly::one(&ext).sub(&t);
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(f.pad(&ext).mul(&t));
        }
        for g in &other.gens {
            gens.push(g.pad(&ext).mul(&one_minus_t));
        }
        let gb = ideal_groebner(&gens, &ext, ext.order(), budget)?;
        let mut mask = vec![false; n + 1];
        mask[n] = true;
        let kept: Vec<Poly> = gb
            .into_iter()
            .filter(|p| p.avoids(&mask))
            .map(|p| p.restrict(&self.ring))
            .collect();
        Ok(Ideal::new(&self.ring, kept))
    }

    /// The colon ideal `(self : other)`; with `saturate`, iterates to the
    /// stable value `(self : other^inf)`.
    pub fn colon(&self, other: &Ideal, saturate: bool, budget: &mut Budget) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut current = self.clone().cached(budget)?;
        loop {
            let next = current.colon_once(other, budget)?.cached(budget)?;
            if !saturate {
                return Ok(next);
            }
            if next.cached_basis() == current.cached_basis() {
                return Ok(next);
            }
            current = next;
        }
    }

    fn colon_once(&self, other: &Ideal, budget: &mut Budget) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let part = self.colon_by_element(g, budget)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersect(&part, budget)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `(self : g)` from the first coordinates of the syzygies of `[g | gens]`.
    fn colon_by_element(&self, g: &Poly, budget: &mut Budget) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut columns: Vec<Vec<Poly>> = vec![vec![g.clone()]];
        for f in &self.gens {
            columns.push(vec![f.clone()]);
        }
        let module = ColumnModule {
            ring: &self.ring,
            order: self.ring.order(),
            rank: 1,
            columns: &columns,
            extra: &[],
        };
        let syz = syzygies(&module, budget)?;
        let gens: Vec<Poly> = syz.into_iter().map(|mut s| s.remove(0)).collect();
        Ok(Ideal::new(&self.ring, gens))
    }

    /// Intersection with the subring generated by the unflagged variables.
    /// Generators of the result do not involve the flagged variables.
    pub fn eliminate(&self, mask: &[bool], budget: &mut Budget) -> Result<Ideal> {
        if mask.len() != self.ring.arity() {
            return Err(Error::ArityMismatch {
                left: mask.len(),
                right: self.ring.arity(),
            });
        }
        if mask.iter().all(|&b| !b) {
            return Ok(self.clone());
        }
        let ord = RingOrder::Elim {
            eliminated: mask.to_vec(),
        };
        let gb = ideal_groebner(&self.gens, &self.ring, &ord, budget)?;
        let kept: Vec<Poly> = gb.into_iter().filter(|p| p.avoids(mask)).collect();
        Ok(Ideal::new(&self.ring, kept))
    }

    /// Krull dimension of the quotient ring by the independence-set rule on
    /// the initial ideal; `-1` for the unit ideal.
    pub fn quotient_dimension(&self, budget: &mut Budget) -> Result<i64> {
        let gb = self.groebner(budget)?;
        if gb.iter().any(|g| g.is_constant()) {
            return Ok(-1);
        }
        let n = self.ring.arity();
        let mut supports: Vec<u32> = Vec::new();
        for g in &gb {
            let (lm, _) = g.leading()?;
            let mut mask = 0u32;
            for i in lm.support() {
                mask |= 1 << i;
            }
            supports.push(mask);
        }
        supports.sort_unstable();
        supports.dedup();
        let mut best = 0u32;
        for subset in 0u32..(1 << n) {
            if subset.count_ones() <= best {
                continue;
            }
            // independent iff no lead support is contained in the subset
            if supports.iter().all(|s| s & !subset != 0) {
                best = subset.count_ones();
            }
        }
        Ok(best as i64)
    }

    /// Substitutes the ring's variables into the leading block of an extended
    /// ring, used by gallery constructors.
    pub fn map_into(&self, target: &Arc<PolyRing>) -> Ideal {
        let gens = self.gens.iter().map(|g| g.pad(target)).collect();
        Ideal::new(target, gens)
    }
}

/// Monomial helper used by dimension tests.
pub fn monomial_ideal(ring: &Arc<PolyRing>, monos: &[&[u32]]) -> Ideal {
    let gens = monos
        .iter()
        .map(|e| {
            Poly::term(
                ring,
                Monomial::from_exponents(e.to_vec()),
                ring.field().one(),
            )
        })
        .collect();
    Ideal::new(ring, gens)
}
