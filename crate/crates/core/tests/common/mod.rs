//! Small expression parser for writing test polynomials compactly.
//! Lives in test code only; the shipped parser is part of the CLI crate.

use canmod_core::algebra::{Poly, PolyRing};
use std::sync::Arc;

pub fn pol(ring: &Arc<PolyRing>, src: &str) -> Poly {
    Parser {
        ring,
        chars: src.chars().collect(),
        pos: 0,
    }
    .parse_expr()
}

pub fn pols(ring: &Arc<PolyRing>, srcs: &[&str]) -> Vec<Poly> {
    srcs.iter().map(|s| pol(ring, s)).collect()
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.chars[self.pos..].iter().find(|c| !c.is_whitespace()).copied()
    }

    fn bump(&mut self) -> Option<char> {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn parse_expr(&mut self) -> Poly {
        let mut acc = self.parse_term();
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.bump();
                    acc = acc.add(&self.parse_term());
                }
                '-' => {
                    self.bump();
                    acc = acc.sub(&self.parse_term());
                }
                _ => break,
            }
        }
        acc
    }

    fn parse_term(&mut self) -> Poly {
        let mut acc = self.parse_factor();
        while let Some('*') = self.peek() {
            self.bump();
            acc = acc.mul(&self.parse_factor());
        }
        acc
    }

    fn parse_factor(&mut self) -> Poly {
        let base = self.parse_base();
        if let Some('^') = self.peek() {
            self.bump();
            let e = self.parse_uint();
            return base.pow(e);
        }
        base
    }

    fn parse_base(&mut self) -> Poly {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.parse_expr();
                assert_eq!(self.bump(), Some(')'), "expected closing paren");
                e
            }
            Some('-') => {
                self.bump();
                self.parse_base().neg()
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.parse_uint();
                Poly::constant(self.ring, self.ring.field().from_i64(n as i64))
            }
            Some(c) if c.is_alphabetic() => {
                let mut name = String::new();
                while let Some(ch) = self.chars.get(self.pos).copied() {
                    if ch.is_alphanumeric() || ch == '_' || ch == '#' {
                        name.push(ch);
                        self.pos += 1;
                    } else if ch.is_whitespace() && name.is_empty() {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let idx = self
                    .ring
                    .var_index(&name)
                    .unwrap_or_else(|| panic!("unknown variable {name}"));
                Poly::var(self.ring, idx)
            }
            other => panic!("unexpected token {other:?}"),
        }
    }

    fn parse_uint(&mut self) -> u32 {
        let mut n = 0u32;
        let mut seen = false;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                self.bump();
                n = n * 10 + c.to_digit(10).unwrap();
                seen = true;
            } else {
                break;
            }
        }
        assert!(seen, "expected integer");
        n
    }
}

// ---------------------------------------------------------------------------
// Independent brute-force oracle: kernels of presentation matrices through
// exact linear algebra on degree-truncated coefficient systems. This path
// shares nothing with the syzygy engine it cross-checks.
// ---------------------------------------------------------------------------

use canmod_core::algebra::{Coeff, Monomial};
use canmod_core::groebner::{poly_normal_form, Budget};
use canmod_core::modules::Matrix;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn monomials_up_to(arity: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; arity];
    fn rec(pos: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == exps.len() {
            out.push(Monomial::from_exponents(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(pos + 1, left - e, exps, out);
        }
        exps[pos] = 0;
    }
    rec(0, degree, &mut exps, &mut out);
    out
}

fn as_rational(c: &Coeff) -> BigRational {
    match c {
        Coeff::Rat(x) => x.clone(),
        Coeff::Fp(_) => panic!("oracle supports rational coefficients only"),
    }
}

/// Basis of { x in R^cols : P x = 0 mod (relations) } with every coordinate
/// of degree <= `bound`, found by exact Gaussian elimination.
pub fn truncated_kernel(
    pres: &Matrix,
    relations: &[Poly],
    bound: u32,
) -> Vec<Vec<Poly>> {
    let ring = pres.ring();
    assert!(matches!(
        ring.field(),
        canmod_core::algebra::FieldSpec::Rationals
    ));
    let monos = monomials_up_to(ring.arity(), bound);
    let unknowns = pres.cols() * monos.len();
    let mut budget = Budget::standard();

    // rows of the linear system, keyed by (presentation row, residual monomial)
    let mut eqs: std::collections::BTreeMap<(usize, Monomial), Vec<BigRational>> =
        std::collections::BTreeMap::new();
    for j in 0..pres.cols() {
        for (mi, m) in monos.iter().enumerate() {
            let unknown = j * monos.len() + mi;
            for i in 0..pres.rows() {
                let prod = pres
                    .entry(i, j)
                    .mul_term(m, &ring.field().one());
                let reduced = if relations.is_empty() {
                    prod
                } else {
                    poly_normal_form(&prod, relations, ring, ring.order(), &mut budget).unwrap()
                };
                for (rm, rc) in reduced.terms() {
                    let row = eqs
                        .entry((i, rm.clone()))
                        .or_insert_with(|| vec![BigRational::zero(); unknowns]);
                    row[unknown] += as_rational(rc);
                }
            }
        }
    }

    // Gaussian elimination
    let mut rows: Vec<Vec<BigRational>> = eqs.into_values().collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; unknowns];
    let mut rank = 0usize;
    for col in 0..unknowns {
        let Some(place) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, place);
        let inv = rows[rank][col].recip();
        for c in col..unknowns {
            let v = &rows[rank][c] * &inv;
            rows[rank][c] = v;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..unknowns {
                    let v = &rows[r][c] - &f * &rows[rank][c];
                    rows[r][c] = v;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }

    // free columns give the nullspace basis
    let mut basis = Vec::new();
    for free in 0..unknowns {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut coords = vec![BigRational::zero(); unknowns];
        coords[free] = BigRational::one();
        for col in 0..unknowns {
            if let Some(r) = pivot_of_col[col] {
                coords[col] = -rows[r][free].clone();
            }
        }
        let mut vec_polys = Vec::new();
        for j in 0..pres.cols() {
            let mut terms = Vec::new();
            for (mi, m) in monos.iter().enumerate() {
                let c = coords[j * monos.len() + mi].clone();
                if !c.is_zero() {
                    terms.push((m.clone(), Coeff::Rat(c)));
                }
            }
            vec_polys.push(Poly::from_terms(ring, terms));
        }
        basis.push(vec_polys);
    }
    basis
}
