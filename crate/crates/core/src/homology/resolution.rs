//! Free resolutions: finite over the base ring, length-capped over quotients.

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::modules::{FPModule, Matrix, RingHandle};
use alloc::vec::Vec;

/// A chain of presentation matrices d_1, d_2, ... with exact zero
/// composition; `complete` is set when the last kernel vanished.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    handle: RingHandle,
    diffs: Vec<Matrix>,
    complete: bool,
}

impl FreeResolution {
    /// Minimal resolution of `m` out to at most `max_len` steps.
    pub fn compute(m: &FPModule, max_len: usize, budget: &mut Budget) -> Result<FreeResolution> {
        let pruned = m.prune(budget)?;
        let mut res = FreeResolution {
            handle: m.handle().clone(),
            diffs: alloc::vec![pruned.presentation().clone()],
            complete: pruned.presentation().cols() == 0,
        };
        res.extend(max_len, budget)?;
        Ok(res)
    }

    /// Extends the window to `target_len` differentials (or to completion).
    pub fn extend(&mut self, target_len: usize, budget: &mut Budget) -> Result<()> {
        while !self.complete && self.diffs.len() < target_len {
            let last = self.diffs.last().expect("at least one differential");
            let q = FPModule::matrix_syzygies(&self.handle, last, budget)?;
            let (d, q) = prune_pair(&self.handle, last.clone(), q, budget)?;
            let idx = self.diffs.len() - 1;
            self.diffs[idx] = d;
            debug_assert!(self.composes_to_zero(budget)?);
            if q.cols() == 0 {
                self.complete = true;
            } else {
                self.diffs.push(q);
            }
        }
        Ok(())
    }

    pub fn handle(&self) -> &RingHandle {
        &self.handle
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Number of computed differentials.
    pub fn length(&self) -> usize {
        self.diffs.len()
    }

    /// The i-th differential d_i : F_i -> F_{i-1}, 1-indexed.
    pub fn differential(&self, i: usize) -> Option<&Matrix> {
        if i == 0 {
            return None;
        }
        self.diffs.get(i - 1)
    }

    /// Rank of the free module F_i in the window; zero beyond a complete end.
    pub fn rank(&self, i: usize) -> Option<usize> {
        if i == 0 {
            return Some(self.diffs[0].rows());
        }
        match self.diffs.get(i - 1) {
            Some(d) => Some(d.cols()),
            None if self.complete => Some(0),
            None => None,
        }
    }

    /// Betti numbers of the computed window: ranks of F_0, F_1, ...
    pub fn betti(&self) -> Vec<usize> {
        let mut out = alloc::vec![self.diffs[0].rows()];
        for d in &self.diffs {
            if d.cols() > 0 {
                out.push(d.cols());
            }
        }
        out
    }

    /// Projective dimension when the resolution is complete.
    pub fn projective_dimension(&self) -> Option<usize> {
        if !self.complete {
            return None;
        }
        Some(if self.diffs[0].cols() == 0 {
            0
        } else {
            self.diffs.len()
        })
    }

    fn composes_to_zero(&self, budget: &mut Budget) -> Result<bool> {
        let rel = self.handle.relation_basis().to_vec();
        for w in self.diffs.windows(2) {
            let prod = w[0].mul(&w[1]).reduce_entries(&rel, budget)?;
            if !prod.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Strips unit entries from a syzygy matrix `q` of `d`, deleting the
/// corresponding redundant columns of `d`; the pair stays a complex with the
/// same image and kernel data.
fn prune_pair(
    handle: &RingHandle,
    mut d: Matrix,
    mut q: Matrix,
    budget: &mut Budget,
) -> Result<(Matrix, Matrix)> {
    let rel = handle.relation_basis().to_vec();
    q = q.reduce_entries(&rel, budget)?;
    'outer: loop {
        let mut j = 0;
        while j < q.cols() {
            if (0..q.rows()).all(|i| q.entry(i, j).is_zero()) {
                q = q.delete_col(j);
            } else {
                j += 1;
            }
        }
        for k in 0..q.rows() {
            for j in 0..q.cols() {
                let e = q.entry(k, j);
                if !e.is_zero() && e.is_constant() {
                    let inv = q
                        .ring()
                        .field()
                        .inv(&e.constant_coeff())
                        .expect("nonzero constant");
                    let pivot = q.col(j);
                    for j2 in 0..q.cols() {
                        if j2 == j {
                            continue;
                        }
                        let c = q.entry(k, j2).clone();
                        if c.is_zero() {
                            continue;
                        }
                        let factor = c.scale(&inv);
                        for i2 in 0..q.rows() {
                            let adjusted = q.entry(i2, j2).sub(&factor.mul(&pivot[i2]));
                            *q.entry_mut(i2, j2) = adjusted;
                        }
                    }
                    q = q.delete_row(k).delete_col(j);
                    q = q.reduce_entries(&rel, budget)?;
                    d = d.delete_col(k);
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok((d, q))
}

/// Depth and projective dimension over the base polynomial ring, with data
/// concentrated at the origin. Modules over a quotient are resolved through
/// their base-ring presentation.
pub fn depth_and_pd(m: &FPModule, budget: &mut Budget) -> Result<(i64, usize)> {
    let base = m.over_base();
    let pruned = base.prune(budget)?;
    if pruned.generators() == 0 {
        return Err(Error::ZeroModule);
    }
    let n = base.handle().ambient().arity();
    let res = FreeResolution::compute(&pruned, n + 1, budget)?;
    let pd = res
        .projective_dimension()
        .expect("resolutions over the base ring complete within the arity");
    Ok((n as i64 - pd as i64, pd))
}
