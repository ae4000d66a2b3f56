//! Buchberger's algorithm for submodules of free modules, with normal forms
//! and canonical reduced bases.

use crate::algebra::{FieldSpec, Monomial, Poly, PolyRing, RingOrder};
use crate::error::{Error, Result};
use crate::groebner::modvec::{ModOrder, ModTerm, ModVec};
use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Default reduction-step cap for a single engine invocation.
pub const DEFAULT_STEP_CAP: u64 = 1_000_000;

/// Reduction-step budget; exhausted budgets abort with a structured error.
#[derive(Debug, Clone)]
pub struct Budget {
    cap: u64,
    steps: u64,
}

impl Budget {
    pub fn new(cap: u64) -> Budget {
        Budget { cap, steps: 0 }
    }

    pub fn standard() -> Budget {
        Budget::new(DEFAULT_STEP_CAP)
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.cap {
            Err(Error::ResourceExhausted { steps: self.steps })
        } else {
            Ok(())
        }
    }
}

/// Ambient data for one module computation.
pub struct Ctx {
    pub ring: Arc<PolyRing>,
    pub order: ModOrder,
}

impl Ctx {
    pub fn new(ring: &Arc<PolyRing>, order: ModOrder) -> Ctx {
        Ctx {
            ring: ring.clone(),
            order,
        }
    }

    fn field(&self) -> &FieldSpec {
        self.ring.field()
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
    index: u64,
}

/// Fully reduces `v` against `basis`: no term of the result is divisible by
/// any leading term of `basis`. Deterministic for a fixed basis ordering.
pub fn normal_form(v: &ModVec, basis: &[ModVec], ctx: &Ctx, budget: &mut Budget) -> Result<ModVec> {
    let (nf, _) = normal_form_sugar(v, basis, None, 0, ctx, budget)?;
    Ok(nf)
}

fn normal_form_sugar(
    v: &ModVec,
    basis: &[ModVec],
    sugars: Option<&[u64]>,
    start_sugar: u64,
    ctx: &Ctx,
    budget: &mut Budget,
) -> Result<(ModVec, u64)> {
    let field = *ctx.field();
    let mut sugar = start_sugar;
    let mut work = v.clone();
    let mut head: Vec<ModTerm> = Vec::new();
    'outer: while let Some(lead) = work.lead() {
        for (k, g) in basis.iter().enumerate() {
            let glead = match g.lead() {
                Some(t) => t,
                None => continue,
            };
            if glead.comp == lead.comp && glead.mono.divides(&lead.mono) {
                budget.tick()?;
                let shift = lead.mono.div(&glead.mono).expect("divisibility checked");
                let c = field.div(&lead.coeff, &glead.coeff).expect("field division");
                work = work.sub(&g.mul_term(&shift, &c, &field), &ctx.order, &field);
                if let Some(s) = sugars {
                    sugar = sugar.max(s[k] + shift.degree());
                }
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        head.push(work.terms()[0].clone());
        work = ModVec::from_terms(&ctx.order, &field, work.terms()[1..].to_vec());
    }
    head.extend(work.terms().iter().cloned());
    Ok((ModVec::from_terms(&ctx.order, &field, head), sugar))
}

/// Buchberger's algorithm returning the unique reduced Groebner basis of the
/// submodule generated by `gens`, sorted by descending leading term.
///
/// Pair selection follows the normal strategy keyed by (sugar degree, lcm
/// under the ring order, pair creation index), so runs are reproducible.
pub fn buchberger(gens: &[ModVec], ctx: &Ctx, budget: &mut Budget) -> Result<Vec<ModVec>> {
    let field = *ctx.field();
    let rank1 = gens
        .iter()
        .flat_map(|g| g.terms())
        .all(|t| t.comp == 0);

    let mut basis: Vec<ModVec> = Vec::new();
    let mut sugars: Vec<u64> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            sugars.push(g.degree());
            basis.push(g.monic(&field));
        }
    }

    let mut pairs: Vec<Pair> = Vec::new();
    let mut counter = 0u64;
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        add_pairs(&mut pairs, &basis, &sugars, j, &mut counter);
    }

    while !pairs.is_empty() {
        let best = select_pair(&pairs, ctx);
        let pair = pairs.swap_remove(best);
        let (i, j) = (pair.i, pair.j);
        done.insert((i, j));

        let li = basis[i].lead().expect("basis elements are nonzero");
        let lj = basis[j].lead().expect("basis elements are nonzero");

        // product criterion, valid for rank-one (polynomial) data only
        if rank1 && li.mono.is_coprime(&lj.mono) {
            continue;
        }
        // chain criterion against fully processed pairs
        if chain_criterion(&basis, &done, i, j, &pair.lcm, li.comp) {
            continue;
        }

        let si = pair.lcm.div(&li.mono).expect("lcm divisible by lead");
        let sj = pair.lcm.div(&lj.mono).expect("lcm divisible by lead");
        let spoly = basis[i]
            .mul_term(&si, &field.one(), &field)
            .sub(&basis[j].mul_term(&sj, &field.one(), &field), &ctx.order, &field);
        let (nf, sugar) = normal_form_sugar(&spoly, &basis, Some(&sugars), pair.sugar, ctx, budget)?;
        if !nf.is_zero() {
            basis.push(nf.monic(&field));
            sugars.push(sugar);
            add_pairs(&mut pairs, &basis, &sugars, basis.len() - 1, &mut counter);
        }
    }

    interreduce(basis, ctx, budget)
}

fn add_pairs(pairs: &mut Vec<Pair>, basis: &[ModVec], sugars: &[u64], j: usize, counter: &mut u64) {
    let lj = basis[j].lead().expect("nonzero");
    for i in 0..j {
        let li = basis[i].lead().expect("nonzero");
        if li.comp != lj.comp {
            continue;
        }
        let lcm = li.mono.lcm(&lj.mono);
        let sugar_i = sugars[i] + lcm.div(&li.mono).expect("lcm").degree();
        let sugar_j = sugars[j] + lcm.div(&lj.mono).expect("lcm").degree();
        pairs.push(Pair {
            i,
            j,
            lcm,
            sugar: sugar_i.max(sugar_j),
            index: *counter,
        });
        *counter += 1;
    }
}

fn select_pair(pairs: &[Pair], ctx: &Ctx) -> usize {
    let ord = ctx.order.ring_order();
    let mut best = 0;
    for k in 1..pairs.len() {
        let (a, b) = (&pairs[k], &pairs[best]);
        let key = a
            .sugar
            .cmp(&b.sugar)
            .then_with(|| ord.cmp(&a.lcm, &b.lcm))
            .then_with(|| a.index.cmp(&b.index));
        if key == Ordering::Less {
            best = k;
        }
    }
    best
}

fn chain_criterion(
    basis: &[ModVec],
    done: &BTreeSet<(usize, usize)>,
    i: usize,
    j: usize,
    lcm: &Monomial,
    comp: u32,
) -> bool {
    for (k, g) in basis.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        let lk = g.lead().expect("nonzero");
        if lk.comp != comp || !lk.mono.divides(lcm) {
            continue;
        }
        let (a, b) = (i.min(k), i.max(k));
        let (c, d) = (j.min(k), j.max(k));
        if done.contains(&(a, b)) && done.contains(&(c, d)) {
            return true;
        }
    }
    false
}

/// Inter-reduction to the unique reduced basis: minimal leads, monic, fully
/// tail-reduced, sorted by descending lead.
fn interreduce(mut basis: Vec<ModVec>, ctx: &Ctx, budget: &mut Budget) -> Result<Vec<ModVec>> {
    let field = *ctx.field();
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| a.cmp_full(b, &ctx.order));
    basis.dedup();

    // minimal leads: an element survives only if no other kept element's lead
    // divides its lead (equal leads keep the first encountered)
    let mut minimal: Vec<ModVec> = Vec::new();
    'next: for g in basis {
        let lg = g.lead().expect("nonzero").clone();
        minimal.retain(|h| {
            let lh = h.lead().expect("nonzero");
            !(lg.comp == lh.comp && lg.mono.divides(&lh.mono) && lg.mono != lh.mono)
        });
        for h in &minimal {
            let lh = h.lead().expect("nonzero");
            if lh.comp == lg.comp && lh.mono.divides(&lg.mono) {
                continue 'next;
            }
        }
        minimal.push(g);
    }

    // tail reduction to fixpoint
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let rest: Vec<ModVec> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, v)| v.clone())
                .collect();
            let (nf, _) = normal_form_sugar(&minimal[i], &rest, None, 0, ctx, budget)?;
            let nf = nf.monic(&field);
            if nf != minimal[i] {
                minimal[i] = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.retain(|g| !g.is_zero());
    minimal.sort_by(|a, b| b.cmp_full(a, &ctx.order));
    Ok(minimal)
}

/// Reduced Groebner basis of a polynomial ideal under the given ring order.
pub fn ideal_groebner(
    gens: &[Poly],
    ring: &Arc<PolyRing>,
    order: &RingOrder,
    budget: &mut Budget,
) -> Result<Vec<Poly>> {
    let ctx = Ctx::new(ring, ModOrder::Top(order.clone()));
    let vecs: Vec<ModVec> = gens
        .iter()
        .map(|g| ModVec::from_polys(&ctx.order, core::slice::from_ref(g)))
        .collect();
    let gb = buchberger(&vecs, &ctx, budget)?;
    Ok(gb
        .into_iter()
        .map(|v| {
            let mut coords = v.to_polys(ring, 1);
            coords.pop().expect("rank one")
        })
        .collect())
}

/// Normal form of a polynomial against a polynomial basis.
pub fn poly_normal_form(
    f: &Poly,
    basis: &[Poly],
    ring: &Arc<PolyRing>,
    order: &RingOrder,
    budget: &mut Budget,
) -> Result<Poly> {
    let ctx = Ctx::new(ring, ModOrder::Top(order.clone()));
    let v = ModVec::from_polys(&ctx.order, core::slice::from_ref(f));
    let basis: Vec<ModVec> = basis
        .iter()
        .map(|g| ModVec::from_polys(&ctx.order, core::slice::from_ref(g)))
        .collect();
    let nf = normal_form(&v, &basis, &ctx, budget)?;
    let mut coords = nf.to_polys(ring, 1);
    Ok(coords.pop().expect("rank one"))
}
