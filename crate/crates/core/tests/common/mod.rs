//! Shared generators and independent oracles for the integration tests.
//!
//! The oracles here deliberately avoid the library's Groebner and normality
//! machinery: ideal dimensions come from exhaustive linear algebra on
//! two-sided monomial shifts, and normality from directly solving
//! `f x_j = beta_j x_j f`.

// each test binary compiles this module separately and uses its own subset
#![allow(dead_code)]

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::Rng;

use skewdg::matrix::Matrix;
use skewdg::{Field, FieldElement, Monomial, RingElement, SkewPolyRing};

/// A random multiplicatively antisymmetric matrix over the rationals, drawn
/// from a small pool of units.
pub fn random_ring_qq(rng: &mut StdRng, n: usize) -> Arc<SkewPolyRing> {
    let pool: [(i64, i64); 7] = [(1, 1), (-1, 1), (2, 1), (1, 2), (3, 1), (-2, 3), (5, 1)];
    let mut upper = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (num, den) = pool[rng.gen_range(0..pool.len())];
            upper.push((i, j, Field::Rationals.rational(num, den).unwrap()));
        }
    }
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    SkewPolyRing::new(Field::Rationals, names, vec![1; n], &upper).unwrap()
}

/// A random matrix over `F_p`; every nonzero entry is a root of unity there.
pub fn random_ring_fp(rng: &mut StdRng, n: usize, p: u64) -> Arc<SkewPolyRing> {
    let field = Field::prime(p).unwrap();
    let mut upper = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            upper.push((i, j, field.from_i64(rng.gen_range(1..p as i64))));
        }
    }
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    SkewPolyRing::new(field, names, vec![1; n], &upper).unwrap()
}

pub fn monomial_element(ring: &Arc<SkewPolyRing>, exps: Vec<u32>) -> RingElement {
    ring.from_terms(vec![(ring.monomial(exps), ring.field().one())])
}

pub fn random_monomial(rng: &mut StdRng, ring: &Arc<SkewPolyRing>, degree: u32) -> Monomial {
    let n = ring.num_vars();
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    ring.monomial(exps)
}

pub fn random_scalar(rng: &mut StdRng, field: Field) -> FieldElement {
    match field {
        Field::Rationals => {
            let num = rng.gen_range(-4..=4i64);
            let den = rng.gen_range(1..=3i64);
            field.rational(num, den).unwrap()
        }
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
    }
}

pub fn random_nonzero_scalar(rng: &mut StdRng, field: Field) -> FieldElement {
    loop {
        let s = random_scalar(rng, field);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Random homogeneous element of the given internal degree.
pub fn random_homogeneous(
    rng: &mut StdRng,
    ring: &Arc<SkewPolyRing>,
    degree: u32,
    max_terms: usize,
) -> RingElement {
    let mut el = ring.zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let m = random_monomial(rng, ring, degree);
        el.add_term(&m, &random_nonzero_scalar(rng, ring.field()));
    }
    el
}

/// Brute-force normality: for every variable, try to solve
/// `f x_j = beta_j x_j f` exactly; returns the betas on success.
pub fn brute_force_normal(f: &RingElement) -> Option<Vec<FieldElement>> {
    let ring = f.ring().clone();
    let mut betas = Vec::new();
    for j in 0..ring.num_vars() {
        let xj = ring.variable(j);
        let left = f.multiply(&xj).unwrap();
        let right = xj.multiply(f).unwrap();
        let (m, c) = right.leading().expect("domain");
        let beta = left.coeff(m).div(c);
        if beta.is_zero() || left != right.scale(&beta) {
            return None;
        }
        betas.push(beta);
    }
    Some(betas)
}

/// Dimension of the degree-`d` slice of the two-sided ideal generated by
/// `gens`: the rank of the span of all shifts `x^K f x^L`.
pub fn ideal_dimension_oracle(ring: &Arc<SkewPolyRing>, gens: &[RingElement], d: u32) -> usize {
    let monomials = ring.monomials_of_degree(d);
    if monomials.is_empty() {
        return 0;
    }
    let index = |m: &Monomial| monomials.iter().position(|x| x == m).unwrap();
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for f in gens {
        let df = f.homogeneous_degree().expect("homogeneous generators");
        if df > d {
            continue;
        }
        for kdeg in 0..=(d - df) {
            let ldeg = d - df - kdeg;
            for k in ring.monomials_of_degree(kdeg) {
                for l in ring.monomials_of_degree(ldeg) {
                    let mut lhs = ring.zero();
                    lhs.add_term(&k, &ring.field().one());
                    let mut rhs = ring.zero();
                    rhs.add_term(&l, &ring.field().one());
                    let shifted = lhs.multiply(f).unwrap().multiply(&rhs).unwrap();
                    let mut row = vec![ring.field().zero(); monomials.len()];
                    for (m, c) in shifted.terms() {
                        row[index(m)] = c.clone();
                    }
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(ring.field(), rows).rank()
}

/// Dimension of `(Q/(gens))_d` by the exhaustive two-sided oracle.
pub fn quotient_dimension_oracle(ring: &Arc<SkewPolyRing>, gens: &[RingElement], d: u32) -> usize {
    ring.monomials_of_degree(d).len() - ideal_dimension_oracle(ring, gens, d)
}

/// A random trihomogeneous element of even positive homological degree with
/// at most `max_terms` chi-compatible stratum terms, or `None` when the
/// sampled stratum is empty.
pub fn random_even_element(
    rng: &mut StdRng,
    ext: &skewdg::SemiFreeExtension,
    max_terms: usize,
) -> Option<skewdg::DGElement> {
    let hom = if rng.gen_bool(0.5) { 2 } else { 4 };
    let int = rng.gen_range(hom..=hom + 2);
    let stratum = skewdg::stratum(ext, hom, int).ok()?;
    if stratum.dim() == 0 {
        return None;
    }
    let ring = ext.base().ring();
    let n = ring.num_vars();
    let profile = |w: &skewdg::DGWord, m: &Monomial| -> Vec<FieldElement> {
        let c = ext.word_color(w).add(&m.color());
        (0..n).map(|j| ring.chi_var(&c, j)).collect()
    };
    let anchor = rng.gen_range(0..stratum.dim());
    let (aw, am) = &stratum.items[anchor];
    let target = profile(aw, am);
    let mut el = skewdg::DGElement::zero();
    let mut used = 0;
    for (w, m) in stratum.items.iter() {
        if used >= max_terms {
            break;
        }
        if profile(w, m) == target && rng.gen_bool(0.6) {
            let mut coeff = ring.zero();
            coeff.add_term(m, &random_nonzero_scalar(rng, ring.field()));
            el.add_term(w, &coeff);
            used += 1;
        }
    }
    if el.is_zero() {
        let mut coeff = ring.zero();
        coeff.add_term(am, &random_nonzero_scalar(rng, ring.field()));
        el.add_term(aw, &coeff);
    }
    Some(el)
}
