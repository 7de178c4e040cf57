//! Two-sided quotients `R = Q/I` for ideals generated by homogeneous normal
//! elements.
//!
//! Because every generator is normal, the two-sided ideal equals the left
//! ideal of left multiples, so a left-sided Buchberger procedure suffices;
//! it mirrors the commutative algorithm except that every monomial
//! transposition contributes a twist scalar. All bases carry an explicit
//! degree bound `D` up to which completeness is guaranteed.


use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::FieldElement;
use crate::skewpoly::{same_ring, ColorDegree, Monomial, RingElement, SkewPolyRing};

/// Integer coefficient list `c_0..c_D` of a truncated power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<i64>) -> TruncatedSeries {
        TruncatedSeries { coeffs }
    }

    pub fn one(bound: u32) -> TruncatedSeries {
        let mut coeffs = vec![0; bound as usize + 1];
        coeffs[0] = 1;
        TruncatedSeries { coeffs }
    }

    pub fn bound(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeff(&self, d: u32) -> i64 {
        self.coeffs.get(d as usize).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![0i64; bound];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 || i >= bound {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= bound {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiply by the polynomial `1 - t^d`.
    pub fn mul_one_minus_power(&self, d: u32) -> TruncatedSeries {
        let mut out = self.coeffs.clone();
        for i in (d as usize)..out.len() {
            out[i] -= self.coeffs[i - d as usize];
        }
        TruncatedSeries { coeffs: out }
    }

    /// Divide by a series with constant term 1, truncated.
    pub fn div(&self, denom: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(denom.coeff(0), 1, "division requires unit constant term");
        let bound = self.coeffs.len();
        let mut out = vec![0i64; bound];
        for i in 0..bound {
            let mut acc = self.coeffs[i];
            for j in 1..=i {
                acc -= denom.coeff(j as u32) * out[i - j];
            }
            out[i] = acc;
        }
        TruncatedSeries { coeffs: out }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A degree-truncated Groebner basis of a two-sided ideal generated by
/// normal elements: monic, inter-reduced, complete up to `truncation`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<SkewPolyRing>,
    gens: Vec<RingElement>,
    truncation: u32,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[RingElement] {
        &self.gens
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    fn find_reducer(&self, m: &Monomial) -> Option<usize> {
        self.gens.iter().position(|g| g.leading().unwrap().0.divides(m))
    }

    /// Left reduction: each step cancels the current leading term by
    /// subtracting a scaled left multiple `x^K * g`, or moves it to the
    /// remainder when no basis leading monomial divides it.
    pub fn reduce(&self, f: &RingElement) -> RingElement {
        let mut rem = self.ring.zero();
        let mut work = f.clone();
        while let Some((m, c)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if let Some(gi) = self.find_reducer(&m) {
                let g = &self.gens[gi];
                let lm = g.leading().unwrap().0.clone();
                let k = m.quotient(&lm, &self.ring);
                let scale = c.div(&self.ring.twist(&k, &lm));
                let mut cofactor = self.ring.zero();
                cofactor.add_term(&k, &scale);
                let shifted = cofactor.multiply(g).unwrap();
                debug_assert_eq!(shifted.coeff(&m), c);
                work = work.sub(&shifted);
            } else {
                rem.add_term(&m, &c);
                work.add_term(&m, &c.neg());
            }
        }
        rem
    }

    /// Right-multiple reduction (`g * x^K` rewrites), provided so the
    /// two-sidedness of ideals generated by normal elements can be
    /// cross-checked against [`GroebnerBasis::reduce`].
    pub fn reduce_right(&self, f: &RingElement) -> RingElement {
        let mut rem = self.ring.zero();
        let mut work = f.clone();
        while let Some((m, c)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if let Some(gi) = self.find_reducer(&m) {
                let g = &self.gens[gi];
                let lm = g.leading().unwrap().0.clone();
                let k = m.quotient(&lm, &self.ring);
                let scale = c.div(&self.ring.twist(&lm, &k));
                let mut cofactor = self.ring.zero();
                cofactor.add_term(&k, &scale);
                let shifted = g.multiply(&cofactor).unwrap();
                debug_assert_eq!(shifted.coeff(&m), c);
                work = work.sub(&shifted);
            } else {
                rem.add_term(&m, &c);
                work.add_term(&m, &c.neg());
            }
        }
        rem
    }
}

/// Buchberger's procedure with q-twist scalars, complete to degree `bound`.
///
/// Generators must be homogeneous and normal; the S-element of a pair is
/// formed from the lcm of the leading monomials with twist scalars chosen so
/// the leading terms cancel. S-pairs are processed lowest lcm degree first,
/// ties broken by the monomial order.
pub fn buchberger(generators: &[RingElement], bound: u32) -> Result<GroebnerBasis> {
    let ring = match generators.first() {
        Some(g) => g.ring().clone(),
        None => {
            return Err(Error::ZeroInput("buchberger with no generators needs a ring; use QuotientRing::free"));
        }
    };
    buchberger_in(&ring, generators, bound)
}

pub fn buchberger_in(
    ring: &Arc<SkewPolyRing>,
    generators: &[RingElement],
    bound: u32,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<RingElement> = Vec::new();
    for g in generators {
        if g.is_zero() {
            return Err(Error::ZeroInput("buchberger"));
        }
        if !same_ring(g.ring(), ring) {
            return Err(Error::AmbientMismatch);
        }
        if g.is_normal()?.is_none() {
            return Err(Error::NotNormal(g.to_string()));
        }
        let lc = g.leading().unwrap().1.clone();
        basis.push(g.scale(&lc.inv()));
    }
    let mut gb = GroebnerBasis { ring: ring.clone(), gens: Vec::new(), truncation: bound };
    for g in basis {
        add_and_complete(&mut gb, g, bound)?;
    }
    interreduce(&mut gb);
    Ok(gb)
}

fn add_and_complete(gb: &mut GroebnerBasis, g: RingElement, bound: u32) -> Result<()> {
    let reduced = gb.reduce(&g);
    if reduced.is_zero() {
        return Ok(());
    }
    let lc = reduced.leading().unwrap().1.clone();
    let monic = reduced.scale(&lc.inv());
    gb.gens.push(monic);

    // (lcm degree, lcm monomial, i, j), kept sorted as a worklist
    let mut pairs: Vec<(u32, Monomial, usize, usize)> = Vec::new();
    let queue_pairs = |gens: &[RingElement], new_idx: usize, pairs: &mut Vec<(u32, Monomial, usize, usize)>| {
        for i in 0..new_idx {
            let lm_i = gens[i].leading().unwrap().0;
            let lm_j = gens[new_idx].leading().unwrap().0;
            let lcm = lm_i.lcm(lm_j, &gb.ring);
            if lcm.degree() <= bound {
                pairs.push((lcm.degree(), lcm, i, new_idx));
            }
        }
    };
    queue_pairs(&gb.gens, gb.gens.len() - 1, &mut pairs);

    while !pairs.is_empty() {
        pairs.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        let (_, lcm, i, j) = pairs.remove(0);
        let s = s_element(&gb.ring, &gb.gens[i], &gb.gens[j], &lcm);
        let rem = gb.reduce(&s);
        if rem.is_zero() {
            continue;
        }
        let lc = rem.leading().unwrap().1.clone();
        gb.gens.push(rem.scale(&lc.inv()));
        queue_pairs(&gb.gens, gb.gens.len() - 1, &mut pairs);
    }
    Ok(())
}

fn s_element(
    ring: &Arc<SkewPolyRing>,
    f: &RingElement,
    g: &RingElement,
    lcm: &Monomial,
) -> RingElement {
    let (lm_f, lc_f) = f.leading().unwrap();
    let (lm_g, lc_g) = g.leading().unwrap();
    let kf = lcm.quotient(lm_f, ring);
    let kg = lcm.quotient(lm_g, ring);
    let scale_f = lc_f.mul(&ring.twist(&kf, lm_f)).inv();
    let scale_g = lc_g.mul(&ring.twist(&kg, lm_g)).inv();
    let mut uf = ring.zero();
    uf.add_term(&kf, &scale_f);
    let mut ug = ring.zero();
    ug.add_term(&kg, &scale_g);
    uf.multiply(f).unwrap().sub(&ug.multiply(g).unwrap())
}

fn interreduce(gb: &mut GroebnerBasis) {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < gb.gens.len() {
            let g = gb.gens.remove(i);
            let reduced = gb.reduce(&g);
            if reduced.is_zero() {
                changed = true;
                continue;
            }
            let lc = reduced.leading().unwrap().1.clone();
            let monic = reduced.scale(&lc.inv());
            if monic != g {
                changed = true;
            }
            gb.gens.insert(i, monic);
            i += 1;
        }
        if !changed {
            break;
        }
    }
    gb.gens.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
}

/// The quotient `R = Q/(f_1..f_c)` with arithmetic truncated at degree `D`.
#[derive(Debug)]
pub struct QuotientRing {
    ring: Arc<SkewPolyRing>,
    relations: Vec<RingElement>,
    gb: GroebnerBasis,
    truncation: u32,
    /// Standard monomials per internal degree `0..=D`, descending order.
    graded: Vec<Vec<Monomial>>,
}

impl QuotientRing {
    pub fn new(
        ring: Arc<SkewPolyRing>,
        relations: Vec<RingElement>,
        truncation: u32,
    ) -> Result<Arc<QuotientRing>> {
        for f in &relations {
            if f.is_zero() {
                return Err(Error::ZeroInput("quotient relation"));
            }
            if f.homogeneous_degree().is_none() {
                return Err(Error::Inhomogeneous);
            }
            if f.is_normal()?.is_none() {
                return Err(Error::NotNormal(f.to_string()));
            }
        }
        let gb = buchberger_in(&ring, &relations, truncation)?;
        let graded = (0..=truncation)
            .map(|d| {
                ring.monomials_of_degree(d)
                    .into_iter()
                    .filter(|m| gb.find_reducer(m).is_none())
                    .collect()
            })
            .collect();
        Ok(Arc::new(QuotientRing { ring, relations, gb, truncation, graded }))
    }

    /// The skew polynomial ring itself, as a quotient by no relations.
    pub fn free(ring: Arc<SkewPolyRing>, truncation: u32) -> Arc<QuotientRing> {
        QuotientRing::new(ring, Vec::new(), truncation).expect("free quotient")
    }

    pub fn ring(&self) -> &Arc<SkewPolyRing> {
        &self.ring
    }

    pub fn relations(&self) -> &[RingElement] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// The unique reduced representative of `f` modulo the ideal.
    pub fn normal_form(&self, f: &RingElement) -> Result<RingElement> {
        let deg = f.max_degree();
        if deg > self.truncation {
            return Err(Error::DegreeExceedsTruncation { degree: deg, bound: self.truncation });
        }
        Ok(self.gb.reduce(f))
    }

    /// Standard monomials of internal degree `d`, sorted in the global
    /// monomial order (leading first).
    pub fn graded_basis(&self, d: u32) -> Result<&[Monomial]> {
        if d > self.truncation {
            return Err(Error::DegreeExceedsTruncation { degree: d, bound: self.truncation });
        }
        Ok(&self.graded[d as usize])
    }

    pub fn hilbert_series(&self, bound: u32) -> Result<TruncatedSeries> {
        if bound > self.truncation {
            return Err(Error::DegreeExceedsTruncation { degree: bound, bound: self.truncation });
        }
        Ok(TruncatedSeries::new(
            (0..=bound).map(|d| self.graded[d as usize].len() as i64).collect(),
        ))
    }

    /// Normalize then multiply then normalize; the workhorse for quotient
    /// arithmetic.
    pub fn multiply(&self, f: &RingElement, g: &RingElement) -> Result<RingElement> {
        self.normal_form(&f.multiply(g)?)
    }

    /// Colors of the relations, one per relation.
    pub fn relation_colors(&self) -> Vec<ColorDegree> {
        self.relations.iter().map(|f| f.color_degree().unwrap().unwrap()).collect()
    }
}

/// The augmentation `R -> k`: the constant-term coefficient.
pub fn augment(f: &RingElement) -> FieldElement {
    f.terms()
        .find(|(m, _)| m.is_one())
        .map(|(_, c)| c.clone())
        .unwrap_or_else(|| f.ring().field().zero())
}

/// Regular-sequence detection by degreewise Hilbert factorization, verified
/// up to degree `bound`: a normal homogeneous element of degree `d` is a
/// nonzerodivisor iff `Hilb(A/fA) = (1 - t^d) Hilb(A)` degreewise.
pub fn is_regular_sequence(
    ring: &Arc<SkewPolyRing>,
    fs: &[RingElement],
    bound: u32,
) -> Result<bool> {
    for f in fs {
        if f.is_zero() {
            return Err(Error::ZeroInput("is_regular_sequence"));
        }
        if f.homogeneous_degree().is_none() {
            return Err(Error::Inhomogeneous);
        }
        if f.is_normal()?.is_none() {
            return Err(Error::NotNormal(f.to_string()));
        }
    }
    let mut prev = QuotientRing::free(ring.clone(), bound).hilbert_series(bound)?;
    for j in 0..fs.len() {
        let d = fs[j].homogeneous_degree().unwrap();
        let quotient = QuotientRing::new(ring.clone(), fs[..=j].to_vec(), bound)?;
        let actual = quotient.hilbert_series(bound)?;
        let predicted = prev.mul_one_minus_power(d);
        if actual != predicted {
            return Ok(false);
        }
        prev = actual;
    }
    Ok(true)
}
