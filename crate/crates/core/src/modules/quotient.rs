//! Quotient rings A = S/I with cached bases and dimensions.

use crate::algebra::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

/// A quotient A = S/I of a polynomial ring by an ideal inside the irrelevant
/// maximal ideal, carrying a cached reduced basis and dimension data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientRing {
    ambient: Arc<PolyRing>,
    ideal: Ideal,
    dim: i64,
    codim: usize,
}

impl QuotientRing {
    /// Builds A = S/I. Every generator must vanish at the origin (the data is
    /// concentrated at the irrelevant ideal), which also keeps I proper.
    pub fn new(ambient: &Arc<PolyRing>, gens: Vec<Poly>, budget: &mut Budget) -> Result<Arc<QuotientRing>> {
        for g in &gens {
            if g.ring() != ambient {
                return Err(Error::RingMismatch);
            }
            if !g.constant_coeff().is_zero() {
                return Err(Error::InvalidRing(format!(
                    "defining relation {g} does not vanish at the origin"
                )));
            }
        }
        let ideal = Ideal::new(ambient, gens).cached(budget)?;
        let dim = ideal.quotient_dimension(budget)?;
        let codim = (ambient.arity() as i64 - dim) as usize;
        Ok(Arc::new(QuotientRing {
            ambient: ambient.clone(),
            ideal,
            dim,
            codim,
        }))
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &[Poly] {
        self.ideal.cached_basis().expect("basis cached at construction")
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.codim
    }
}

/// The ring a module lives over: the base polynomial ring or a quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingHandle {
    Base(Arc<PolyRing>),
    Quotient(Arc<QuotientRing>),
}

impl RingHandle {
    pub fn ambient(&self) -> &Arc<PolyRing> {
        match self {
            RingHandle::Base(r) => r,
            RingHandle::Quotient(q) => q.ambient(),
        }
    }

    pub fn quotient(&self) -> Option<&Arc<QuotientRing>> {
        match self {
            RingHandle::Base(_) => None,
            RingHandle::Quotient(q) => Some(q),
        }
    }

    /// Reduced basis of the defining ideal; empty over the base ring.
    pub fn relation_basis(&self) -> &[Poly] {
        match self {
            RingHandle::Base(_) => &[],
            RingHandle::Quotient(q) => q.basis(),
        }
    }

    /// The columns `f * e_i` for every defining relation `f` and component
    /// `i < rank`; the implicit relations of free modules over a quotient.
    pub fn relation_columns(&self, rank: usize) -> Vec<Vec<Poly>> {
        let ring = self.ambient();
        let mut out = Vec::new();
        for f in self.relation_basis() {
            for i in 0..rank {
                let mut col = alloc::vec![Poly::zero(ring); rank];
                col[i] = f.clone();
                out.push(col);
            }
        }
        out
    }
}
