//! Ext modules, the Auslander transpose, and the canonical module.

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::homology::resolution::FreeResolution;
use crate::modules::{FPModule, Matrix, QuotientRing, RingHandle};
use alloc::sync::Arc;
use alloc::vec::Vec;

/// Ext^i(M, R) computed as ker/im of the dualized resolution window.
pub fn ext_from_resolution(
    res: &FreeResolution,
    i: usize,
    budget: &mut Budget,
) -> Result<FPModule> {
    let handle = res.handle().clone();
    let cap = res.length() + 1;
    let rank_i = match res.rank(i) {
        Some(r) => r,
        None => {
            return Err(Error::ResolutionCapExceeded {
                needed: i,
                cap,
            })
        }
    };
    if rank_i == 0 {
        return Ok(FPModule::zero(handle));
    }
    let ring = handle.ambient().clone();

    // kernel generators of the outgoing dual map
    let kernel_gens = match res.differential(i + 1) {
        Some(d_next) => FPModule::matrix_syzygies(&handle, &d_next.transpose(), budget)?,
        None if res.is_complete() => Matrix::identity(&ring, rank_i),
        None => {
            return Err(Error::ResolutionCapExceeded {
                needed: i + 1,
                cap,
            })
        }
    };

    // image of the incoming dual map (empty for i = 0)
    let incoming = match i {
        0 => Matrix::zero(&ring, rank_i, 0),
        _ => res
            .differential(i)
            .expect("rank(i) > 0 implies d_i exists")
            .transpose(),
    };

    let combined = kernel_gens.hstack(&incoming);
    let relations = FPModule::matrix_syzygies(&handle, &combined, budget)?;
    let s = kernel_gens.cols();
    let head_rows: Vec<Vec<crate::algebra::Poly>> = (0..relations.cols())
        .map(|j| relations.col(j)[..s].to_vec())
        .collect();
    let pres = Matrix::from_cols(&ring, s, head_rows);
    FPModule::new(handle, pres).prune(budget)
}

/// Ext^i(M, R) over the module's own ring, resolving internally out to the
/// window the query needs (at most `cap` steps).
pub fn ext_module(m: &FPModule, i: usize, cap: usize, budget: &mut Budget) -> Result<FPModule> {
    let needed = i + 1;
    if needed > cap {
        return Err(Error::ResolutionCapExceeded { needed, cap });
    }
    let res = FreeResolution::compute(m, needed, budget)?;
    ext_from_resolution(&res, i, budget)
}

/// The Auslander transpose: cokernel of the dualized minimal presentation.
/// Well-defined up to projective equivalence, which every consumer respects.
pub fn auslander_transpose(m: &FPModule, budget: &mut Budget) -> Result<FPModule> {
    let pruned = m.prune(budget)?;
    let pres = pruned.presentation().transpose();
    FPModule::new(m.handle().clone(), pres).prune(budget)
}

/// The canonical module of A = S/I as Ext^c_S(A, S), c = codim, presented
/// over A and pruned.
pub fn canonical_module(q: &Arc<QuotientRing>, budget: &mut Budget) -> Result<FPModule> {
    let base = RingHandle::Base(q.ambient().clone());
    let a_over_s = FPModule::cyclic(base, q.ideal().gens().to_vec());
    let e = ext_module(&a_over_s, q.codim(), q.ambient().arity() + 1, budget)?;
    let over_a = FPModule::new(RingHandle::Quotient(q.clone()), e.presentation().clone());
    over_a.prune(budget)
}
