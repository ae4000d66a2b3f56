//! Syzygies, kernels, and lifts for column modules of free modules, via
//! tagged Groebner bases under an eliminating module order.

use crate::algebra::{Monomial, Poly, PolyRing, RingOrder};
use crate::error::Result;
use crate::groebner::engine::{buchberger, normal_form, Budget, Ctx};
use crate::groebner::modvec::{ModOrder, ModTerm, ModVec};
use alloc::sync::Arc;
use alloc::vec::Vec;

/// A set of column vectors (each of length `rank`) together with quotient
/// relations whose syzygy coordinates are discarded.
pub struct ColumnModule<'a> {
    pub ring: &'a Arc<PolyRing>,
    pub order: &'a RingOrder,
    pub rank: usize,
    pub columns: &'a [Vec<Poly>],
    /// Relation columns of the quotient ring (`f * e_i` for `f` in the
    /// defining ideal); empty when working over the base ring.
    pub extra: &'a [Vec<Poly>],
}

fn top_lead_weight(order: &RingOrder, arity: usize, col: &[Poly]) -> Monomial {
    // leading monomial of the column under Top, used as a Schreyer weight
    let mut best: Option<Monomial> = None;
    for p in col {
        if let Ok((m, _)) = p.leading() {
            best = match best {
                None => Some(m.clone()),
                Some(b) => Some(if order.cmp(m, &b) == core::cmp::Ordering::Greater {
                    m.clone()
                } else {
                    b
                }),
            };
        }
    }
    best.unwrap_or_else(|| Monomial::one(arity))
}

fn tagged_ctx(module: &ColumnModule<'_>) -> Ctx {
    let mut weights: Vec<Monomial> = Vec::new();
    for col in module.columns.iter().chain(module.extra.iter()) {
        weights.push(top_lead_weight(module.order, module.ring.arity(), col));
    }
    Ctx::new(
        module.ring,
        ModOrder::Tagged {
            ring: module.order.clone(),
            split: module.rank as u32,
            weights,
        },
    )
}

fn tagged_generators(module: &ColumnModule<'_>, ctx: &Ctx) -> Vec<ModVec> {
    let field = module.ring.field();
    let arity = module.ring.arity();
    let mut out = Vec::new();
    for (j, col) in module.columns.iter().chain(module.extra.iter()).enumerate() {
        let mut terms: Vec<ModTerm> = Vec::new();
        for (comp, p) in col.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(ModTerm {
                    mono: m.clone(),
                    comp: comp as u32,
                    coeff: c.clone(),
                });
            }
        }
        terms.push(ModTerm {
            mono: Monomial::one(arity),
            comp: (module.rank + j) as u32,
            coeff: field.one(),
        });
        out.push(ModVec::from_terms(&ctx.order, field, terms));
    }
    out
}

/// Generators of the syzygy module of `columns` (relations read modulo the
/// `extra` block): vectors `a` of length `columns.len()` with
/// `sum a_j columns_j = 0` modulo the quotient relations.
pub fn syzygies(module: &ColumnModule<'_>, budget: &mut Budget) -> Result<Vec<Vec<Poly>>> {
    let ctx = tagged_ctx(module);
    let gens = tagged_generators(module, &ctx);
    let gb = buchberger(&gens, &ctx, budget)?;
    let field = module.ring.field();
    let m = module.columns.len();
    let mut out = Vec::new();
    for g in &gb {
        if g.terms().iter().any(|t| (t.comp as usize) < module.rank) {
            continue;
        }
        // keep tag coordinates of the declared columns, drop the extra block
        let kept: Vec<ModTerm> = g
            .terms()
            .iter()
            .filter(|t| (t.comp as usize) < module.rank + m)
            .map(|t| ModTerm {
                mono: t.mono.clone(),
                comp: t.comp - module.rank as u32,
                coeff: t.coeff.clone(),
            })
            .collect();
        if kept.is_empty() {
            continue;
        }
        let v = ModVec::from_terms(&ModOrder::Top(module.order.clone()), field, kept);
        out.push(v.to_polys(module.ring, m));
    }
    Ok(out)
}

/// Expresses each target vector as a combination of the columns (modulo the
/// extra block). Returns `None` if some target is not in the span. The
/// returned coordinate vectors have length `columns.len()`.
pub fn lift(
    module: &ColumnModule<'_>,
    targets: &[Vec<Poly>],
    budget: &mut Budget,
) -> Result<Option<Vec<Vec<Poly>>>> {
    let ctx = tagged_ctx(module);
    let gens = tagged_generators(module, &ctx);
    let gb = buchberger(&gens, &ctx, budget)?;
    let field = *module.ring.field();
    let m = module.columns.len();
    let mut out = Vec::new();
    for v in targets {
        let mut terms = Vec::new();
        for (comp, p) in v.iter().enumerate() {
            for (mo, c) in p.terms() {
                terms.push(ModTerm {
                    mono: mo.clone(),
                    comp: comp as u32,
                    coeff: c.clone(),
                });
            }
        }
        let vv = ModVec::from_terms(&ctx.order, &field, terms);
        let nf = normal_form(&vv, &gb, &ctx, budget)?;
        if nf.terms().iter().any(|t| (t.comp as usize) < module.rank) {
            return Ok(None);
        }
        let coords: Vec<ModTerm> = nf
            .terms()
            .iter()
            .filter(|t| (t.comp as usize) < module.rank + m)
            .map(|t| ModTerm {
                mono: t.mono.clone(),
                comp: t.comp - module.rank as u32,
                coeff: field.neg(&t.coeff),
            })
            .collect();
        let w = ModVec::from_terms(&ModOrder::Top(module.order.clone()), &field, coords);
        out.push(w.to_polys(module.ring, m));
    }
    Ok(Some(out))
}

/// Groebner basis of the column span (including the extra block) under the
/// term-over-position order, for membership tests.
pub fn span_groebner(module: &ColumnModule<'_>, budget: &mut Budget) -> Result<Vec<ModVec>> {
    let ctx = Ctx::new(module.ring, ModOrder::Top(module.order.clone()));
    let gens: Vec<ModVec> = module
        .columns
        .iter()
        .chain(module.extra.iter())
        .map(|col| ModVec::from_polys(&ctx.order, col))
        .collect();
    buchberger(&gens, &ctx, budget)
}

/// Membership of a vector in a span computed by [`span_groebner`].
pub fn in_span(
    v: &[Poly],
    gb: &[ModVec],
    ring: &Arc<PolyRing>,
    order: &RingOrder,
    budget: &mut Budget,
) -> Result<bool> {
    let ctx = Ctx::new(ring, ModOrder::Top(order.clone()));
    let vv = ModVec::from_polys(&ctx.order, v);
    Ok(normal_form(&vv, gb, &ctx, budget)?.is_zero())
}
