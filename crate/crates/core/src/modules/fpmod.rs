//! Finitely presented modules as first-class values.
//!
//! A module is the cokernel of its presentation matrix; kernels and images
//! are always re-presented through syzygies, so every operation stays in the
//! same representation.

use crate::algebra::Poly;
use crate::error::Result;
use crate::groebner::{in_span, lift, span_groebner, syzygies, Budget, ColumnModule};
use crate::modules::matrix::Matrix;
use crate::modules::quotient::RingHandle;
use alloc::vec;
use alloc::vec::Vec;

/// A finitely presented module `coker(pres)` over a base or quotient ring.
/// Rows of `pres` index generators; columns are relations.
#[derive(Debug, Clone)]
pub struct FPModule {
    handle: RingHandle,
    pres: Matrix,
}

impl FPModule {
    pub fn new(handle: RingHandle, pres: Matrix) -> FPModule {
        debug_assert_eq!(pres.ring(), handle.ambient());
        FPModule { handle, pres }
    }

    pub fn free(handle: RingHandle, rank: usize) -> FPModule {
        let pres = Matrix::zero(handle.ambient(), rank, 0);
        FPModule { handle, pres }
    }

    pub fn zero(handle: RingHandle) -> FPModule {
        let pres = Matrix::zero(handle.ambient(), 0, 0);
        FPModule { handle, pres }
    }

    /// The cyclic module `R/ideal`.
    pub fn cyclic(handle: RingHandle, gens: Vec<Poly>) -> FPModule {
        let ring = handle.ambient().clone();
        let cols = gens.into_iter().map(|g| vec![g]).collect();
        let pres = Matrix::from_cols(&ring, 1, cols);
        FPModule { handle, pres }
    }

    pub fn handle(&self) -> &RingHandle {
        &self.handle
    }

    pub fn presentation(&self) -> &Matrix {
        &self.pres
    }

    /// Number of declared generators (rank of the target free module).
    pub fn generators(&self) -> usize {
        self.pres.rows()
    }

    fn column_module<'a>(
        &'a self,
        extra: &'a [Vec<Poly>],
        columns: &'a [Vec<Poly>],
    ) -> ColumnModule<'a> {
        ColumnModule {
            ring: self.handle.ambient(),
            order: self.handle.ambient().order(),
            rank: self.pres.rows(),
            columns,
            extra,
        }
    }

    /// Syzygies of the columns of `m` over this module's ring.
    pub fn matrix_syzygies(handle: &RingHandle, m: &Matrix, budget: &mut Budget) -> Result<Matrix> {
        let ring = handle.ambient();
        let columns = m.columns();
        let extra = handle.relation_columns(m.rows());
        let module = ColumnModule {
            ring,
            order: ring.order(),
            rank: m.rows(),
            columns: &columns,
            extra: &extra,
        };
        let syz = syzygies(&module, budget)?;
        Ok(Matrix::from_cols(ring, m.cols(), syz))
    }

    /// Expresses the columns of `targets` in the columns of `gens`, modulo
    /// the quotient relations. `None` when some column is not in the span.
    pub fn matrix_lift(
        handle: &RingHandle,
        gens: &Matrix,
        targets: &Matrix,
        budget: &mut Budget,
    ) -> Result<Option<Matrix>> {
        let ring = handle.ambient();
        let columns = gens.columns();
        let extra = handle.relation_columns(gens.rows());
        let module = ColumnModule {
            ring,
            order: ring.order(),
            rank: gens.rows(),
            columns: &columns,
            extra: &extra,
        };
        match lift(&module, &targets.columns(), budget)? {
            None => Ok(None),
            Some(coords) => Ok(Some(Matrix::from_cols(ring, gens.cols(), coords))),
        }
    }

    /// True when the cokernel is the zero module.
    pub fn is_zero_module(&self, budget: &mut Budget) -> Result<bool> {
        let r = self.pres.rows();
        if r == 0 {
            return Ok(true);
        }
        let ring = self.handle.ambient();
        let columns = self.pres.columns();
        let extra = self.handle.relation_columns(r);
        let module = self.column_module(&extra, &columns);
        let gb = span_groebner(&module, budget)?;
        for j in 0..r {
            let mut e = vec![Poly::zero(ring); r];
            e[j] = Poly::one(ring);
            if !in_span(&e, &gb, ring, ring.order(), budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The dual Hom(M, R), presented through a double syzygy.
    pub fn dual(&self, budget: &mut Budget) -> Result<FPModule> {
        let kernel_gens = Self::matrix_syzygies(&self.handle, &self.pres.transpose(), budget)?;
        let pres = Self::matrix_syzygies(&self.handle, &kernel_gens, budget)?;
        Ok(FPModule::new(self.handle.clone(), pres).prune(budget)?)
    }

    /// The double dual together with zero-tests for the kernel and cokernel
    /// of the canonical comparison map: `(M**, ker = 0, coker = 0)`.
    pub fn double_dual_with_map(&self, budget: &mut Budget) -> Result<(FPModule, bool, bool)> {
        let pruned = self.prune(budget)?;
        let p = &pruned.pres;
        let r = p.rows();
        if r == 0 {
            return Ok((FPModule::zero(self.handle.clone()), true, true));
        }
        let handle = &self.handle;
        let ring = handle.ambient();

        // generators of M* inside R^r, then its presentation
        let k = Self::matrix_syzygies(handle, &p.transpose(), budget)?;
        let l = Self::matrix_syzygies(handle, &k, budget)?;
        // generators of M** inside R^s, then its presentation
        let w = Self::matrix_syzygies(handle, &l.transpose(), budget)?;
        let l2 = Self::matrix_syzygies(handle, &w, budget)?;

        // the comparison map sends generator i to evaluation at i: row i of K
        let targets = k.transpose();
        let phi = Self::matrix_lift(handle, &w, &targets, budget)?
            .expect("evaluation functionals lie in the double dual");

        let mdd = FPModule::new(handle.clone(), l2.clone()).prune(budget)?;

        // cokernel of the comparison: M** modulo the image of M
        let coker = FPModule::new(handle.clone(), phi.hstack(&l2));
        let cokernel_zero = coker.is_zero_module(budget)?;

        // kernel: generators of the preimage of im(L2) under phi, tested
        // against the relations of M
        let combined = phi.hstack(&l2);
        let pre = Self::matrix_syzygies(handle, &combined, budget)?;
        let columns = p.columns();
        let extra = handle.relation_columns(r);
        let module = ColumnModule {
            ring,
            order: ring.order(),
            rank: r,
            columns: &columns,
            extra: &extra,
        };
        let gb = span_groebner(&module, budget)?;
        let mut kernel_zero = true;
        for j in 0..pre.cols() {
            let full = pre.col(j);
            let head: Vec<Poly> = full[..r].to_vec();
            if !in_span(&head, &gb, ring, ring.order(), budget)? {
                kernel_zero = false;
                break;
            }
        }
        Ok((mdd, kernel_zero, cokernel_zero))
    }

    /// The annihilator, lifted to an ideal of the ambient polynomial ring
    /// (containing the defining ideal over a quotient).
    pub fn annihilator(&self, budget: &mut Budget) -> Result<crate::groebner::Ideal> {
        use crate::groebner::Ideal;
        let ring = self.handle.ambient();
        let r = self.pres.rows();
        let defining: Vec<Poly> = self.handle.relation_basis().to_vec();
        if r == 0 {
            return Ok(Ideal::unit(ring));
        }
        let extra = self.handle.relation_columns(r);
        let mut acc: Option<Ideal> = None;
        for j in 0..r {
            let mut e = vec![Poly::zero(ring); r];
            e[j] = Poly::one(ring);
            let mut columns = vec![e];
            columns.extend(self.pres.columns());
            let module = self.column_module(&extra, &columns);
            let syz = syzygies(&module, budget)?;
            let gens: Vec<Poly> = syz.into_iter().map(|mut s| s.remove(0)).collect();
            let colon = Ideal::new(ring, gens).sum(&Ideal::new(ring, defining.clone()));
            acc = Some(match acc {
                None => colon,
                Some(prev) => prev.intersect(&colon, budget)?,
            });
        }
        let mut ann = acc.expect("at least one generator");
        ann = ann.sum(&Ideal::new(ring, defining));
        Ok(ann.cached(budget)?)
    }

    /// Fitting ideal `Fitt_i`: minors of size (generators - i), lifted to the
    /// ambient ring. Sizes <= 0 give the unit ideal; oversized minors give
    /// the lifted zero ideal.
    pub fn fitting_ideal(&self, i: usize) -> crate::groebner::Ideal {
        use crate::groebner::Ideal;
        let ring = self.handle.ambient();
        let r = self.pres.rows();
        if i >= r {
            return Ideal::unit(ring);
        }
        let size = r - i;
        let mut gens = self.pres.minors(size);
        gens.extend(self.handle.relation_basis().iter().cloned());
        Ideal::new(ring, gens)
    }

    /// Krull dimension of the support; -1 for the zero module.
    pub fn dimension(&self, budget: &mut Budget) -> Result<i64> {
        let ann = self.annihilator(budget)?;
        ann.quotient_dimension(budget)
    }

    /// Minimal presentation: reduces entries modulo the defining ideal and
    /// strips unit entries; the cokernel is unchanged up to isomorphism.
    pub fn prune(&self, budget: &mut Budget) -> Result<FPModule> {
        let rel = self.handle.relation_basis().to_vec();
        let mut m = self.pres.reduce_entries(&rel, budget)?;
        'outer: loop {
            // drop columns that became zero
            let mut j = 0;
            while j < m.cols() {
                if (0..m.rows()).all(|i| m.entry(i, j).is_zero()) {
                    m = m.delete_col(j);
                } else {
                    j += 1;
                }
            }
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let e = m.entry(i, j);
                    if !e.is_zero() && e.is_constant() {
                        let u = e.constant_coeff();
                        let inv = m.ring().field().inv(&u).expect("nonzero constant");
                        let pivot = m.col(j);
                        for j2 in 0..m.cols() {
                            if j2 == j {
                                continue;
                            }
                            let c = m.entry(i, j2).clone();
                            if c.is_zero() {
                                continue;
                            }
                            let factor = c.scale(&inv);
                            for i2 in 0..m.rows() {
                                let adjusted =
                                    m.entry(i2, j2).sub(&factor.mul(&pivot[i2]));
                                *m.entry_mut(i2, j2) = adjusted;
                            }
                        }
                        m = m.delete_row(i).delete_col(j);
                        m = m.reduce_entries(&rel, budget)?;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        Ok(FPModule::new(self.handle.clone(), m))
    }

    /// The same module viewed over the ambient polynomial ring: the defining
    /// relations become explicit presentation columns.
    pub fn over_base(&self) -> FPModule {
        match &self.handle {
            RingHandle::Base(_) => self.clone(),
            RingHandle::Quotient(q) => {
                let extra = self.handle.relation_columns(self.pres.rows());
                let extra_m =
                    Matrix::from_cols(q.ambient(), self.pres.rows(), extra);
                FPModule::new(
                    RingHandle::Base(q.ambient().clone()),
                    self.pres.hstack(&extra_m),
                )
            }
        }
    }

    /// True when multiplication by `a` is injective on the module.
    pub fn multiplication_is_injective(&self, a: &Poly, budget: &mut Budget) -> Result<bool> {
        let ring = self.handle.ambient();
        let r = self.pres.rows();
        if r == 0 {
            return Ok(true);
        }
        let mut scaled = Matrix::zero(ring, r, r);
        for i in 0..r {
            *scaled.entry_mut(i, i) = a.clone();
        }
        let combined = scaled.hstack(&self.pres);
        let pre = Self::matrix_syzygies(&self.handle, &combined, budget)?;
        let columns = self.pres.columns();
        let extra = self.handle.relation_columns(r);
        let module = self.column_module(&extra, &columns);
        let gb = span_groebner(&module, budget)?;
        for j in 0..pre.cols() {
            let head: Vec<Poly> = pre.col(j)[..r].to_vec();
            if !in_span(&head, &gb, ring, ring.order(), budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
