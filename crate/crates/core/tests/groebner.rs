mod common;

use canmod_core::algebra::{Poly, PolyRing, RingOrder};
use canmod_core::groebner::{
    ideal_groebner, poly_normal_form, syzygies, Budget, ColumnModule, Ideal,
};
use common::{pol, pols};
use std::sync::Arc;

fn budget() -> Budget {
    Budget::standard()
}

fn xyz() -> Arc<PolyRing> {
    PolyRing::rational(&["x", "y", "z"]).unwrap()
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let r = xyz();
    let gens = pols(&r, &["x*y", "x*z"]);
    let gb = ideal_groebner(&gens, &r, r.order(), &mut budget()).unwrap();
    assert_eq!(gb.len(), 2);
    for g in &gens {
        assert!(gb.contains(g));
    }
}

#[test]
fn monomial_curve_3_4_5_by_elimination() {
    // eliminate t from (x - t^3, y - t^4, z - t^5); oracle: substitution kills
    // every output generator, and the three expected quadrics belong to it
    let rt = PolyRing::rational(&["x", "y", "z", "t"]).unwrap();
    let gens = pols(&rt, &["x - t^3", "y - t^4", "z - t^5"]);
    let ideal = Ideal::new(&rt, gens);
    let eliminated = ideal
        .eliminate(&[false, false, false, true], &mut budget())
        .unwrap();

    // substitution oracle in one variable
    let tring = PolyRing::rational(&["t"]).unwrap();
    let subst = |f: &Poly| -> Poly {
        let t = Poly::var(&tring, 0);
        let images = [t.pow(3), t.pow(4), t.pow(5), t.clone()];
        let mut acc = Poly::zero(&tring);
        for (m, c) in f.terms() {
            let mut term = Poly::constant(&tring, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                term = term.mul(&images[v].pow(e));
            }
            acc = acc.add(&term);
        }
        acc
    };
    assert!(!eliminated.gens().is_empty());
    for g in eliminated.gens() {
        assert!(subst(g).is_zero(), "generator does not vanish on the curve");
    }

    // the 2x2 minors of [[x,y,z],[y,z,x^2]] present the curve
    let r = xyz();
    let restricted = Ideal::new(&r, eliminated.gens().iter().map(|g| {
        // generators avoid t, so dropping the extra variable is safe
        let padless: Poly = pol(&r, &format!("{g}"));
        padless
    }).collect());
    let minors = pols(&r, &["x*z - y^2", "x^3 - y*z", "x^2*y - z^2"]);
    for m in &minors {
        assert!(restricted.contains(m, &mut budget()).unwrap());
    }
    for g in restricted.gens() {
        let minor_ideal = Ideal::new(&r, minors.clone());
        assert!(minor_ideal.contains(g, &mut budget()).unwrap());
    }
}

#[test]
fn membership_after_reduction_chain() {
    let r2 = PolyRing::rational(&["x", "y"]).unwrap();
    let ideal = Ideal::new(&r2, pols(&r2, &["x^2 - y", "y^2 - x"]));
    assert!(ideal.contains(&pol(&r2, "x^4 - x"), &mut budget()).unwrap());
    assert!(!ideal.contains(&pol(&r2, "x"), &mut budget()).unwrap());
}

#[test]
fn normal_form_examples() {
    let r = xyz();
    let gb = ideal_groebner(&pols(&r, &["x*y", "x*z"]), &r, r.order(), &mut budget()).unwrap();
    let nf = |f: &Poly| poly_normal_form(f, &gb, &r, r.order(), &mut budget()).unwrap();

    assert!(nf(&pol(&r, "x^2*y*z")).is_zero());
    assert_eq!(nf(&pol(&r, "y^2")), pol(&r, "y^2"));
    // a rational combination of the generators reduces to zero
    let combo = pol(&r, "x*y").mul(&pol(&r, "3*z - 1")).add(&pol(&r, "x*z").mul(&pol(&r, "y^2 + 7")));
    assert!(nf(&combo).is_zero());
}

#[test]
fn normal_form_idempotent_and_linear() {
    let r = xyz();
    let gb = ideal_groebner(
        &pols(&r, &["x^2 - y*z", "y^3 - z"]),
        &r,
        r.order(),
        &mut budget(),
    )
    .unwrap();
    let nf = |f: &Poly| poly_normal_form(f, &gb, &r, r.order(), &mut budget()).unwrap();
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..50 {
        let monos = ["x^3*y", "x*y*z", "z^4", "x^2", "y^2*z^2", "1", "x*y^3"];
        let mut f = Poly::zero(&r);
        for m in monos {
            if rng.gen_bool(0.5) {
                f = f.add(&pol(&r, m).scale(&r.field().from_i64(rng.gen_range(-4..5))));
            }
        }
        let g = pol(&r, "x^4 - y + 3");
        assert_eq!(nf(&nf(&f)), nf(&f));
        assert_eq!(nf(&f.add(&g)), nf(&nf(&f).add(&nf(&g))));
    }
}

#[test]
fn reduced_basis_is_canonical_under_permutation() {
    use rand::{rngs::StdRng, seq::SliceRandom, SeedableRng};
    let r = xyz();
    let systems: Vec<Vec<Poly>> = vec![
        pols(&r, &["x*y - z", "y*z - x", "x*z - y"]),
        pols(&r, &["x^2 + y^2 + z^2 - 1", "x + y + z", "x*y*z"]),
        pols(&r, &["x^3 - y*z", "y^2 - x*z"]),
    ];
    let mut rng = StdRng::seed_from_u64(42);
    for gens in systems {
        let reference = ideal_groebner(&gens, &r, r.order(), &mut budget()).unwrap();
        for _ in 0..10 {
            let mut shuffled = gens.clone();
            shuffled.shuffle(&mut rng);
            // duplicating a generator must not change the reduced basis either
            shuffled.push(shuffled[0].clone());
            let gb = ideal_groebner(&shuffled, &r, r.order(), &mut budget()).unwrap();
            assert_eq!(gb, reference);
        }
    }
}

#[test]
fn buchberger_criterion_holds_post_hoc() {
    // every S-polynomial of the returned basis reduces to zero
    let r = xyz();
    let gb = ideal_groebner(
        &pols(&r, &["x^2*y - z^2", "x*z - y^2", "y^3 - x"]),
        &r,
        r.order(),
        &mut budget(),
    )
    .unwrap();
    for i in 0..gb.len() {
        for j in (i + 1)..gb.len() {
            let (mi, ci) = gb[i].leading().unwrap();
            let (mj, cj) = gb[j].leading().unwrap();
            let lcm = mi.lcm(mj);
            let si = lcm.div(mi).unwrap();
            let sj = lcm.div(mj).unwrap();
            let spoly = gb[i]
                .mul_term(&si, &r.field().inv(ci).unwrap())
                .sub(&gb[j].mul_term(&sj, &r.field().inv(cj).unwrap()));
            let nf = poly_normal_form(&spoly, &gb, &r, r.order(), &mut budget()).unwrap();
            assert!(nf.is_zero());
        }
    }
}

#[test]
fn syzygy_of_monomial_pair() {
    let r = xyz();
    let columns = vec![vec![pol(&r, "x*y")], vec![pol(&r, "x*z")]];
    let module = ColumnModule {
        ring: &r,
        order: r.order(),
        rank: 1,
        columns: &columns,
        extra: &[],
    };
    let syz = syzygies(&module, &mut budget()).unwrap();
    assert_eq!(syz.len(), 1);
    // the Koszul relation z*(xy) - y*(xz) = 0 up to sign
    let s = &syz[0];
    let check = s[0].mul(&pol(&r, "x*y")).add(&s[1].mul(&pol(&r, "x*z")));
    assert!(check.is_zero());
    assert_eq!(s[0].total_degree(), 1);
}

#[test]
fn syzygy_over_quotient_ring_of_two_planes() {
    // multiplication by x on A = S/(xy, xz) has kernel generated by y and z
    let r = xyz();
    let columns = vec![vec![pol(&r, "x")]];
    let extra = vec![vec![pol(&r, "x*y")], vec![pol(&r, "x*z")]];
    let module = ColumnModule {
        ring: &r,
        order: r.order(),
        rank: 1,
        columns: &columns,
        extra: &extra,
    };
    let syz = syzygies(&module, &mut budget()).unwrap();
    let ideal_i = Ideal::new(&r, pols(&r, &["x*y", "x*z"]));
    let target = Ideal::new(&r, pols(&r, &["y", "z"])).sum(&ideal_i);
    let found = Ideal::new(&r, syz.iter().map(|s| s[0].clone()).collect()).sum(&ideal_i);
    assert!(found.equals(&target, &mut budget()).unwrap());
}

#[test]
fn syzygy_of_identity_is_zero() {
    let r = xyz();
    let columns = vec![
        vec![Poly::one(&r), Poly::zero(&r)],
        vec![Poly::zero(&r), Poly::one(&r)],
    ];
    let module = ColumnModule {
        ring: &r,
        order: r.order(),
        rank: 2,
        columns: &columns,
        extra: &[],
    };
    let syz = syzygies(&module, &mut budget()).unwrap();
    assert!(syz.is_empty());
}

#[test]
fn intersection_of_monomial_ideals() {
    let r = xyz();
    let cases = [
        (vec!["x"], vec!["y", "z"], vec!["x*y", "x*z"]),
        (
            vec!["x"],
            vec!["y^2", "y*z", "z^2"],
            vec!["x*y^2", "x*y*z", "x*z^2"],
        ),
        (vec!["x"], vec!["x^2", "y"], vec!["x^2", "x*y"]),
    ];
    for (a, b, want) in cases {
        let ia = Ideal::new(&r, pols(&r, &a));
        let ib = Ideal::new(&r, pols(&r, &b));
        let got = ia.intersect(&ib, &mut budget()).unwrap();
        let expected = Ideal::new(&r, pols(&r, &want));
        assert!(got.equals(&expected, &mut budget()).unwrap());
        // containment spot-checks
        for g in got.gens() {
            assert!(ia.contains(g, &mut budget()).unwrap());
            assert!(ib.contains(g, &mut budget()).unwrap());
        }
    }
}

#[test]
fn colon_examples() {
    // ((x^2, xy) : x) = (x, y) in Q[x,y]
    let r2 = PolyRing::rational(&["x", "y"]).unwrap();
    let i = Ideal::new(&r2, pols(&r2, &["x^2", "x*y"]));
    let j = Ideal::new(&r2, pols(&r2, &["x"]));
    let colon = i.colon(&j, false, &mut budget()).unwrap();
    let want = Ideal::new(&r2, pols(&r2, &["x", "y"]));
    assert!(colon.equals(&want, &mut budget()).unwrap());

    // (I : 1) = I
    let one = Ideal::new(&r2, vec![Poly::one(&r2)]);
    let id = i.colon(&one, false, &mut budget()).unwrap();
    assert!(id.equals(&i, &mut budget()).unwrap());

    // colon duality spot-checks
    let prod = colon.product(&j, &mut budget()).unwrap();
    for g in prod.gens() {
        assert!(i.contains(g, &mut budget()).unwrap());
    }
    for g in i.gens() {
        assert!(colon.contains(g, &mut budget()).unwrap());
    }
}

#[test]
fn colon_in_semigroup_ring_detects_missing_value() {
    // A = Q[x,y,z]/I(3,4,5), I = image of (x, y): (I^2 : I) gains z.
    // Semigroup oracle: values {3,4}+5 = {8,9} lie in the value set {6,7,8,...}
    // of I^2, and z has value 5 not lying in I's value set {3,4}+H.
    let r = xyz();
    let curve = pols(&r, &["x*z - y^2", "x^3 - y*z", "x^2*y - z^2"]);
    let lift = |extra: &[&str]| {
        let mut gens = pols(&r, extra);
        gens.extend(curve.clone());
        Ideal::new(&r, gens)
    };
    let i2 = lift(&["x^2", "x*y", "y^2"]);
    let i = lift(&["x", "y"]);
    let colon = i2.colon(&i, false, &mut budget()).unwrap();
    assert!(colon.contains(&pol(&r, "z"), &mut budget()).unwrap());
    assert!(!i.contains(&pol(&r, "z"), &mut budget()).unwrap());
}

#[test]
fn eliminate_examples() {
    // t from (y - t^2, z - t^3) leaves (z^2 - y^3)
    let r = PolyRing::rational(&["y", "z", "t"]).unwrap();
    let i = Ideal::new(&r, pols(&r, &["y - t^2", "z - t^3"]));
    let e = i.eliminate(&[false, false, true], &mut budget()).unwrap();
    assert_eq!(e.gens().len(), 1);
    let expected = pol(&r, "y^3 - z^2");
    let got = &e.gens()[0];
    assert!(
        got == &expected || got == &expected.neg(),
        "unexpected generator {got}"
    );

    // eliminating nothing returns the ideal unchanged
    let same = i.eliminate(&[false, false, false], &mut budget()).unwrap();
    assert!(same.equals(&i, &mut budget()).unwrap());
}

#[test]
fn quotient_dimension_examples() {
    let r = xyz();
    let i = Ideal::new(&r, pols(&r, &["x*y", "x*z"]));
    assert_eq!(i.quotient_dimension(&mut budget()).unwrap(), 2);

    let unit = Ideal::new(&r, vec![Poly::one(&r)]);
    assert_eq!(unit.quotient_dimension(&mut budget()).unwrap(), -1);

    let r2 = PolyRing::rational(&["x", "y"]).unwrap();
    let j = Ideal::new(&r2, pols(&r2, &["x^2", "x*y"]));
    assert_eq!(j.quotient_dimension(&mut budget()).unwrap(), 1);
}

#[test]
fn dimension_matches_vertex_cover_oracle_on_monomial_ideals() {
    // dim S/I = n - (minimum hitting set of the generator supports)
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(9);
    let names = ["a", "b", "c", "d", "e"];
    for _ in 0..40 {
        let n = rng.gen_range(2..=5);
        let ring = PolyRing::rational(&names[..n]).unwrap();
        let mut supports: Vec<u32> = Vec::new();
        let mut gens = Vec::new();
        for _ in 0..rng.gen_range(1..=4) {
            let mut exps = vec![0u32; n];
            let mut mask = 0u32;
            for v in 0..n {
                if rng.gen_bool(0.4) {
                    exps[v] = rng.gen_range(1..=3);
                    mask |= 1 << v;
                }
            }
            if mask == 0 {
                continue;
            }
            supports.push(mask);
            gens.push(Poly::term(
                &ring,
                canmod_core::algebra::Monomial::from_exponents(exps),
                ring.field().one(),
            ));
        }
        let ideal = Ideal::new(&ring, gens);
        let dim = ideal.quotient_dimension(&mut budget()).unwrap();

        let mut min_cover = u32::MAX;
        for cover in 0u32..(1 << n) {
            if supports.iter().all(|s| s & cover != 0) {
                min_cover = min_cover.min(cover.count_ones());
            }
        }
        let expected = if supports.is_empty() {
            n as i64
        } else {
            n as i64 - min_cover as i64
        };
        assert_eq!(dim, expected);
    }
}

#[test]
fn membership_and_radical_membership() {
    let r = xyz();
    let i = Ideal::new(&r, pols(&r, &["x*y", "x*z"]));
    assert!(i.contains(&pol(&r, "x^2*y"), &mut budget()).unwrap());
    assert!(!i.contains(&pol(&r, "y"), &mut budget()).unwrap());

    let sq = Ideal::new(&r, pols(&r, &["x^2"]));
    assert!(sq.radical_contains(&pol(&r, "x"), &mut budget()).unwrap());
    assert!(!sq.contains(&pol(&r, "x"), &mut budget()).unwrap());
    assert!(!sq.radical_contains(&pol(&r, "y"), &mut budget()).unwrap());
}

#[test]
fn groebner_over_prime_field_and_lex() {
    use canmod_core::algebra::FieldSpec;
    let r = PolyRing::new(
        FieldSpec::prime(101).unwrap(),
        vec!["x".into(), "y".into()],
        RingOrder::Lex,
    )
    .unwrap();
    let gens = pols(&r, &["x^2 + y", "x*y + 1"]);
    let gb = ideal_groebner(&gens, &r, r.order(), &mut budget()).unwrap();
    // lex basis eliminates x from the last element
    assert!(gb.iter().any(|g| g.avoids(&[true, false])));
    let i = Ideal::new(&r, gens);
    // x^3 = x*(x^2) = -xy ... membership consistency
    assert!(i.contains(&pol(&r, "x^3 - 1").mul(&pol(&r, "x^2 + y")), &mut budget()).unwrap());
}

#[test]
fn budget_exhaustion_is_structured() {
    let r = xyz();
    let gens = pols(&r, &["x^5*y - z^3", "y^4 - x*z^2", "z^4 - x^2*y^2"]);
    let mut tiny = Budget::new(3);
    match ideal_groebner(&gens, &r, r.order(), &mut tiny) {
        Err(canmod_core::error::Error::ResourceExhausted { steps }) => assert!(steps > 3),
        other => panic!("expected resource exhaustion, got {other:?}"),
    }
}
