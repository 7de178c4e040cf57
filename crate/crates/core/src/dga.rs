//! Color DG algebra engine: semi-free extensions `R<Y>` with exterior and
//! divided-power variables, normal-form multiplication, the differential,
//! cycle-killing adjunction, the skew Koszul complex, and divided powers of
//! arbitrary even elements.
//!
//! Words carry left `R`-coefficients only; right coefficients are normalized
//! left via the bicharacter. All sign and twist bookkeeping funnels through
//! one transposition routine shared by multiplication and the differential.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::One;

use crate::error::{Error, Result};
use crate::quotient::QuotientRing;
use crate::scalar::FieldElement;
use crate::skewpoly::{ColorDegree, RingElement};

/// An adjoined DG variable. Odd homological degree means exterior
/// (`y^2 = 0`), even means divided powers (basis `y^(i)`).
#[derive(Clone, Debug)]
pub struct DGVariable {
    /// 1-based, ordered so homological degree is nondecreasing in the index.
    pub index: usize,
    pub hom_degree: u32,
    pub int_degree: u32,
    pub color: ColorDegree,
}

impl DGVariable {
    pub fn is_exterior(&self) -> bool {
        self.hom_degree % 2 == 1
    }
}

/// A normal monomial `y_{k_1}^{(e_1)} ... y_{k_m}^{(e_m)}` in the adjoined
/// variables, factors listed with strictly increasing indices; exterior
/// variables always carry exponent 1. The empty word is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DGWord {
    factors: Vec<(usize, u32)>,
}

impl DGWord {
    pub fn one() -> DGWord {
        DGWord { factors: Vec::new() }
    }

    pub fn single(index: usize, exponent: u32) -> DGWord {
        assert!(exponent > 0);
        DGWord { factors: vec![(index, exponent)] }
    }

    pub fn from_factors(factors: Vec<(usize, u32)>) -> DGWord {
        assert!(factors.windows(2).all(|w| w[0].0 < w[1].0), "indices must increase");
        assert!(factors.iter().all(|&(_, e)| e > 0));
        DGWord { factors }
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }
}

impl Ord for DGWord {
    fn cmp(&self, other: &DGWord) -> Ordering {
        let wl: u32 = self.factors.iter().map(|&(_, e)| e).sum();
        let ol: u32 = other.factors.iter().map(|&(_, e)| e).sum();
        wl.cmp(&ol).then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for DGWord {
    fn partial_cmp(&self, other: &DGWord) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse left-`R`-combination of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGElement {
    terms: BTreeMap<DGWord, RingElement>,
}

impl DGElement {
    pub fn zero() -> DGElement {
        DGElement { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DGWord, &RingElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &DGWord) -> Option<&RingElement> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, w: &DGWord, c: &RingElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(w) {
            Some(existing) => {
                let next = existing.add(c);
                if next.is_zero() {
                    self.terms.remove(w);
                } else {
                    *existing = next;
                }
            }
            None => {
                self.terms.insert(w.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &DGElement) -> DGElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn sub(&self, other: &DGElement) -> DGElement {
        self.add(&other.scale_neg())
    }

    fn scale_neg(&self) -> DGElement {
        DGElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &FieldElement) -> DGElement {
        if c.is_zero() {
            return DGElement::zero();
        }
        DGElement { terms: self.terms.iter().map(|(w, r)| (w.clone(), r.scale(c))).collect() }
    }
}

/// A semi-free extension `R<Y>` of the base quotient ring, together with the
/// differential assignments of the adjoined variables and the truncation
/// bounds it was built for.
#[derive(Clone, Debug)]
pub struct SemiFreeExtension {
    base: Arc<QuotientRing>,
    variables: Vec<DGVariable>,
    differentials: Vec<DGElement>,
    hom_bound: u32,
    int_bound: u32,
}

impl SemiFreeExtension {
    /// The base ring viewed as an extension with no variables.
    pub fn over(base: Arc<QuotientRing>, hom_bound: u32, int_bound: u32) -> SemiFreeExtension {
        let int_bound = int_bound.min(base.truncation());
        SemiFreeExtension { base, variables: Vec::new(), differentials: Vec::new(), hom_bound, int_bound }
    }

    pub fn base(&self) -> &Arc<QuotientRing> {
        &self.base
    }

    pub fn variables(&self) -> &[DGVariable] {
        &self.variables
    }

    pub fn variable(&self, index: usize) -> &DGVariable {
        &self.variables[index - 1]
    }

    /// The assigned value of the differential on `y_index`.
    pub fn differential_of_variable(&self, index: usize) -> &DGElement {
        &self.differentials[index - 1]
    }

    pub fn hom_bound(&self) -> u32 {
        self.hom_bound
    }

    pub fn int_bound(&self) -> u32 {
        self.int_bound
    }

    pub fn word_hom_degree(&self, w: &DGWord) -> u32 {
        w.factors().iter().map(|&(i, e)| e * self.variable(i).hom_degree).sum()
    }

    pub fn word_int_degree(&self, w: &DGWord) -> u32 {
        w.factors().iter().map(|&(i, e)| e * self.variable(i).int_degree).sum()
    }

    pub fn word_color(&self, w: &DGWord) -> ColorDegree {
        let n = self.base.ring().num_vars();
        let mut color = ColorDegree::zero(n);
        for &(i, e) in w.factors() {
            color = color.add(&self.variable(i).color.scale(e as i64));
        }
        color
    }

    fn word_valid(&self, w: &DGWord) -> bool {
        w.factors().iter().all(|&(i, e)| {
            i >= 1 && i <= self.variables.len() && (e == 1 || !self.variable(i).is_exterior())
        })
    }

    pub fn element_from_word(&self, w: DGWord) -> DGElement {
        let mut el = DGElement::zero();
        el.add_term(&w, &self.base.ring().one());
        el
    }

    pub fn element_from_ring(&self, r: &RingElement) -> DGElement {
        let mut el = DGElement::zero();
        el.add_term(&DGWord::one(), r);
        el
    }

    /// Homological degree when all words agree, `None` otherwise (zero is
    /// homogeneous in every degree).
    pub fn hom_degree(&self, a: &DGElement) -> Option<u32> {
        let mut degrees = a.terms().map(|(w, _)| self.word_hom_degree(w));
        match degrees.next() {
            None => Some(0),
            Some(d) => degrees.all(|e| e == d).then_some(d),
        }
    }

    /// Internal degree (word plus coefficient) when homogeneous.
    pub fn int_degree(&self, a: &DGElement) -> Option<u32> {
        let mut degrees = Vec::new();
        for (w, c) in a.terms() {
            let wd = self.word_int_degree(w);
            match c.homogeneous_degree() {
                Some(cd) => degrees.push(wd + cd),
                None => return None,
            }
        }
        let first = match degrees.first() {
            None => return Some(0),
            Some(d) => *d,
        };
        degrees.iter().all(|&d| d == first).then_some(first)
    }

    /// The common color of all (word, support monomial) pairs, chi-equality
    /// being the criterion; the representative is the lexicographically
    /// least color vector in the support.
    pub fn color_degree(&self, a: &DGElement) -> Result<Option<ColorDegree>> {
        if a.is_zero() {
            return Err(Error::ZeroInput("color of zero DG element"));
        }
        let ring = self.base.ring();
        let n = ring.num_vars();
        let mut rep: Option<(ColorDegree, Vec<FieldElement>)> = None;
        for (w, c) in a.terms() {
            let wc = self.word_color(w);
            for (m, _) in c.terms() {
                let color = wc.add(&m.color());
                let profile: Vec<FieldElement> = (0..n).map(|j| ring.chi_var(&color, j)).collect();
                match &rep {
                    None => rep = Some((color, profile)),
                    Some((least, base)) => {
                        if *base != profile {
                            return Ok(None);
                        }
                        if color < *least {
                            rep = Some((color, base.clone()));
                        }
                    }
                }
            }
        }
        Ok(Some(rep.unwrap().0))
    }

    pub fn is_trihomogeneous(&self, a: &DGElement) -> bool {
        !a.is_zero()
            && self.hom_degree(a).is_some()
            && self.int_degree(a).is_some()
            && matches!(self.color_degree(a), Ok(Some(_)))
    }

    /// Move a G-homogeneous left coefficient written on the right of a word
    /// across to the left: `w * r = chi(color w, color r) * r * w`, applied
    /// per support monomial of `r`. Homological degree of `r` is zero, so no
    /// sign appears.
    fn pass_coefficient_left(&self, w: &DGWord, r: &RingElement) -> RingElement {
        let ring = self.base.ring();
        let wc = self.word_color(w);
        let mut out = ring.zero();
        for (m, c) in r.terms() {
            let scalar = ring.chi(&wc, &m.color()).unwrap();
            out.add_term(m, &c.mul(&scalar));
        }
        out
    }

    /// Scalar for transposing single variables `y_b y_a -> y_a y_b` (`b` on
    /// the left moving right past `a`): `(-1)^{|y_a||y_b|} chi(y_b, y_a)`.
    fn transposition_scalar(&self, left: usize, right: usize) -> FieldElement {
        let ring = self.base.ring();
        let va = self.variable(right);
        let vb = self.variable(left);
        let chi = ring.chi(&vb.color, &va.color).unwrap();
        if (va.hom_degree * vb.hom_degree) % 2 == 1 {
            chi.neg()
        } else {
            chi
        }
    }

    /// Merge `w * v` into normal form, returning the accumulated scalar and
    /// the sorted word; `None` when an exterior square vanishes.
    fn merge_words(&self, w: &DGWord, v: &DGWord) -> Option<(FieldElement, DGWord)> {
        let field = self.base.ring().field();
        let mut scalar = field.one();
        let mut acc: Vec<(usize, u32)> = w.factors().to_vec();
        for &(idx, exp) in v.factors() {
            // walk left past factors with larger index
            let mut pos = acc.len();
            while pos > 0 && acc[pos - 1].0 > idx {
                let (lidx, lexp) = acc[pos - 1];
                let t = self.transposition_scalar(lidx, idx);
                scalar = scalar.mul(&t.pow((lexp * exp) as i64));
                pos -= 1;
            }
            if pos > 0 && acc[pos - 1].0 == idx {
                let var = self.variable(idx);
                if var.is_exterior() {
                    return None;
                }
                let (_, lexp) = acc[pos - 1];
                let binom = binomial(lexp + exp, lexp);
                let b = field_from_bigint(field, &binom);
                if b.is_zero() {
                    return None;
                }
                scalar = scalar.mul(&b);
                acc[pos - 1].1 += exp;
            } else {
                acc.insert(pos, (idx, exp));
            }
        }
        Some((scalar, DGWord { factors: acc }))
    }

    /// Graded color-commutative product, reduced to normal form.
    pub fn multiply(&self, a: &DGElement, b: &DGElement) -> Result<DGElement> {
        let mut out = DGElement::zero();
        for (wa, ra) in a.terms() {
            if !self.word_valid(wa) {
                return Err(Error::ExtensionMismatch);
            }
            for (wb, rb) in b.terms() {
                if !self.word_valid(wb) {
                    return Err(Error::ExtensionMismatch);
                }
                let passed = self.pass_coefficient_left(wa, rb);
                let coeff = self.base.multiply(ra, &passed)?;
                if coeff.is_zero() {
                    continue;
                }
                if let Some((scalar, word)) = self.merge_words(wa, wb) {
                    out.add_term(&word, &coeff.scale(&scalar));
                }
            }
        }
        Ok(out)
    }

    /// The differential, extended from the variable assignments by the
    /// Leibniz rule and `d(y^(i)) = d(y) y^(i-1)`; left `R`-linear in the
    /// coefficients.
    pub fn differential(&self, a: &DGElement) -> Result<DGElement> {
        let mut out = DGElement::zero();
        for (w, r) in a.terms() {
            if !self.word_valid(w) {
                return Err(Error::ExtensionMismatch);
            }
            let dw = self.differential_word(w)?;
            for (v, c) in dw.terms() {
                let coeff = self.base.multiply(r, c)?;
                out.add_term(v, &coeff);
            }
        }
        Ok(out)
    }

    fn differential_word(&self, w: &DGWord) -> Result<DGElement> {
        let mut out = DGElement::zero();
        let factors = w.factors();
        let mut prefix_hom = 0u32;
        for (t, &(idx, exp)) in factors.iter().enumerate() {
            let var = self.variable(idx);
            // prefix * d(y) * y^(e-1) * suffix, with the prefix sign
            let prefix = DGWord { factors: factors[..t].to_vec() };
            let mut tail_factors = Vec::new();
            if exp > 1 {
                tail_factors.push((idx, exp - 1));
            }
            tail_factors.extend_from_slice(&factors[t + 1..]);
            let tail = DGWord { factors: tail_factors };

            let dv = self.differential_of_variable(idx);
            let left = self.multiply(&self.element_from_word(prefix), dv)?;
            let term = self.multiply(&left, &self.element_from_word(tail))?;
            let signed = if prefix_hom % 2 == 1 { term.scale_neg() } else { term };
            out = out.add(&signed);

            prefix_hom += exp * var.hom_degree;
        }
        Ok(out)
    }

    /// Adjoin a variable killing the trihomogeneous cycle `z`; the new
    /// variable sits one homological degree above `z` with the same color
    /// and internal degree.
    pub fn adjoin_variable(&self, z: &DGElement) -> Result<SemiFreeExtension> {
        if z.is_zero() {
            return Err(Error::ZeroInput("adjoin_variable"));
        }
        let hom = self.hom_degree(z).ok_or(Error::NotTrihomogeneous)?;
        let int = self.int_degree(z).ok_or(Error::NotTrihomogeneous)?;
        let color = self.color_degree(z)?.ok_or(Error::NotTrihomogeneous)?;
        if !self.differential(z)?.is_zero() {
            return Err(Error::NotACycle);
        }
        if hom % 2 == 1 && !self.multiply(z, z)?.is_zero() {
            return Err(Error::OddSquareNonzero);
        }
        let mut next = self.clone();
        next.variables.push(DGVariable {
            index: self.variables.len() + 1,
            hom_degree: hom + 1,
            int_degree: int,
            color,
        });
        next.differentials.push(z.clone());
        Ok(next)
    }

    /// All normal words of the given homological degree with internal degree
    /// at most `int_max`, in the word order.
    pub fn words_of_degree(&self, hom: u32, int_max: u32) -> Vec<DGWord> {
        let mut out = Vec::new();
        let mut current: Vec<(usize, u32)> = Vec::new();
        self.enumerate_words(1, hom, int_max, &mut current, &mut out);
        out.sort();
        out
    }

    fn enumerate_words(
        &self,
        from: usize,
        hom_left: u32,
        int_left: u32,
        current: &mut Vec<(usize, u32)>,
        out: &mut Vec<DGWord>,
    ) {
        if hom_left == 0 {
            out.push(DGWord { factors: current.clone() });
            return;
        }
        for idx in from..=self.variables.len() {
            let var = self.variable(idx);
            if var.hom_degree > hom_left || var.int_degree > int_left {
                continue;
            }
            let max_exp = if var.is_exterior() {
                1
            } else {
                (hom_left / var.hom_degree).min(int_left / var.int_degree)
            };
            for e in 1..=max_exp {
                if e * var.hom_degree > hom_left || e * var.int_degree > int_left {
                    break;
                }
                current.push((idx, e));
                self.enumerate_words(
                    idx + 1,
                    hom_left - e * var.hom_degree,
                    int_left - e * var.int_degree,
                    current,
                    out,
                );
                current.pop();
            }
        }
    }
}

/// The skew Koszul complex `K^R(f_1..f_c)`: odd variables `y_j` with
/// `d(y_j) = f_j`, for a sequence of homogeneous normal elements.
pub fn koszul_complex(
    base: &Arc<QuotientRing>,
    fs: &[RingElement],
    hom_bound: u32,
    int_bound: u32,
) -> Result<SemiFreeExtension> {
    let mut ext = SemiFreeExtension::over(base.clone(), hom_bound, int_bound);
    for f in fs {
        let nf = base.normal_form(f)?;
        if nf.is_zero() {
            return Err(Error::ZeroInput("koszul generator reduces to zero"));
        }
        if nf.homogeneous_degree().is_none() {
            return Err(Error::Inhomogeneous);
        }
        if nf.is_normal()?.is_none() {
            return Err(Error::NotNormal(nf.to_string()));
        }
        let z = ext.element_from_ring(&nf);
        ext = ext.adjoin_variable(&z)?;
    }
    Ok(ext)
}

/// The Koszul complex of `R` itself: `K^R(xbar_1..xbar_n)`.
pub fn koszul_complex_of_ring(
    base: &Arc<QuotientRing>,
    hom_bound: u32,
    int_bound: u32,
) -> Result<SemiFreeExtension> {
    let vars: Vec<RingElement> =
        (0..base.ring().num_vars()).map(|i| base.ring().variable(i)).collect();
    koszul_complex(base, &vars, hom_bound, int_bound)
}

/// The k-th divided power of a trihomogeneous element of even positive
/// homological degree, computed from the divided-power axioms.
pub fn divided_power(ext: &SemiFreeExtension, a: &DGElement, k: u32) -> Result<DGElement> {
    let field = ext.base().ring().field();
    if k == 0 {
        return Ok(ext.element_from_ring(&ext.base().ring().one()));
    }
    if a.is_zero() {
        return Ok(DGElement::zero());
    }
    let hom = ext.hom_degree(a).ok_or(Error::NotTrihomogeneous)?;
    if hom == 0 || hom % 2 == 1 {
        return Err(Error::NotTrihomogeneous);
    }
    if ext.int_degree(a).is_none() || ext.color_degree(a)?.is_none() {
        return Err(Error::NotTrihomogeneous);
    }
    if k == 1 {
        return Ok(a.clone());
    }

    // elementary terms: (scalar monomial coefficient, word)
    let mut elementary: Vec<(RingElement, DGWord)> = Vec::new();
    for (w, r) in a.terms() {
        for (m, c) in r.terms() {
            let mut single = ext.base().ring().zero();
            single.add_term(m, c);
            elementary.push((single, w.clone()));
        }
    }

    // (x + y)^(k) = sum_{i+j=k} x^(i) y^(j), summed over compositions; the
    // terms share a chi-class so the product order is immaterial.
    let mut total = DGElement::zero();
    let mut composition = vec![0u32; elementary.len()];
    compose(ext, &elementary, 0, k, &mut composition, &mut total, field)?;
    Ok(total)
}

fn compose(
    ext: &SemiFreeExtension,
    elementary: &[(RingElement, DGWord)],
    pos: usize,
    remaining: u32,
    composition: &mut Vec<u32>,
    total: &mut DGElement,
    field: crate::scalar::Field,
) -> Result<()> {
    if pos == elementary.len() {
        if remaining > 0 {
            return Ok(());
        }
        let mut prod = ext.element_from_ring(&ext.base().ring().one());
        for (s, &j) in elementary.iter().zip(composition.iter()) {
            if j == 0 {
                continue;
            }
            let p = elementary_divided_power(ext, &s.0, &s.1, j, field)?;
            prod = ext.multiply(&prod, &p)?;
            if prod.is_zero() {
                return Ok(());
            }
        }
        *total = total.add(&prod);
        return Ok(());
    }
    for j in 0..=remaining {
        composition[pos] = j;
        compose(ext, elementary, pos + 1, remaining - j, composition, total, field)?;
    }
    composition[pos] = 0;
    Ok(())
}

/// `(c x^I w)^(j)` for a single coefficient-times-word term:
/// `chi(w, x^I)^C(j,2) (c x^I)^j w^(j)`.
fn elementary_divided_power(
    ext: &SemiFreeExtension,
    coeff: &RingElement,
    word: &DGWord,
    j: u32,
    field: crate::scalar::Field,
) -> Result<DGElement> {
    if j == 0 {
        return Ok(ext.element_from_ring(&ext.base().ring().one()));
    }
    let ring = ext.base().ring();
    let (m, _) = coeff.terms().next().unwrap();
    let chi = ring.chi(&ext.word_color(word), &m.color()).unwrap();
    let chi_pow = chi.pow(binomial_c2(j));
    // (c x^I)^j in the quotient
    let mut cpow = ring.one();
    for _ in 0..j {
        cpow = ext.base().multiply(&cpow, coeff)?;
    }
    if cpow.is_zero() {
        return Ok(DGElement::zero());
    }
    let wp = word_divided_power(ext, word, j, field)?;
    let mut out = DGElement::zero();
    for (v, s) in wp.terms() {
        out.add_term(v, &ext.base().multiply(&cpow.scale(&chi_pow), s)?);
    }
    Ok(out)
}

/// `w^(j)` for a pure word: zero for words containing odd variables once
/// `j >= 2`; otherwise peel even factors with
/// `(u v)^(j) = chi(v,u)^C(j,2) u^j v^(j)` and close with
/// `(y^(h))^(j) = [h j] y^(hj)`.
fn word_divided_power(
    ext: &SemiFreeExtension,
    word: &DGWord,
    j: u32,
    field: crate::scalar::Field,
) -> Result<DGElement> {
    if j == 0 || word.is_one() {
        return Ok(ext.element_from_ring(&ext.base().ring().one()));
    }
    if j == 1 {
        return Ok(ext.element_from_word(word.clone()));
    }
    if word.factors().iter().any(|&(i, _)| ext.variable(i).is_exterior()) {
        // the first factor is then odd and the rest odd as well: product of
        // two odds has vanishing divided powers
        return Ok(DGElement::zero());
    }
    let (head, tail) = word.factors().split_first().unwrap();
    let (idx, h) = *head;
    if tail.is_empty() {
        let coeff = field_from_bigint(field, &bracket_coefficient(h, j));
        if coeff.is_zero() {
            return Ok(DGElement::zero());
        }
        return Ok(ext.element_from_word(DGWord::single(idx, h * j)).scale(&coeff));
    }
    let tail_word = DGWord { factors: tail.to_vec() };
    let ring = ext.base().ring();
    let chi = ring
        .chi(&ext.word_color(&tail_word), &ext.variable(idx).color.scale(h as i64))
        .unwrap()
        .pow(binomial_c2(j));
    // u^j as a j-fold product: (y^(h))^j = prod binomials * y^(hj)
    let mut upow_scalar = field.one();
    for t in 1..j {
        upow_scalar = upow_scalar.mul(&field_from_bigint(field, &binomial((t + 1) * h, h)));
    }
    if upow_scalar.is_zero() {
        return Ok(DGElement::zero());
    }
    let upow = DGWord::single(idx, h * j);
    let rest = word_divided_power(ext, &tail_word, j, field)?;
    let mut out = DGElement::zero();
    for (v, s) in rest.terms() {
        if let Some((merge_scalar, merged)) = ext.merge_words(&upow, v) {
            out.add_term(&merged, &s.scale(&merge_scalar.mul(&upow_scalar).mul(&chi)));
        }
    }
    Ok(out)
}

fn binomial_c2(j: u32) -> i64 {
    (j as i64) * (j as i64 - 1) / 2
}

/// Binomial coefficient computed in Z.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k.min(n - k) {
        num *= n - t;
        den *= t + 1;
    }
    num / den
}

/// `[h k] = (hk)! / (k! (h!)^k)`, computed in Z.
pub fn bracket_coefficient(h: u32, k: u32) -> BigInt {
    let fact = |m: u32| -> BigInt {
        let mut acc = BigInt::one();
        for t in 2..=m {
            acc *= t;
        }
        acc
    };
    let mut den = fact(k);
    let hf = fact(h);
    for _ in 0..k {
        den *= &hf;
    }
    fact(h * k) / den
}

pub fn field_from_bigint(field: crate::scalar::Field, n: &BigInt) -> FieldElement {
    field.from_bigint(n)
}

impl fmt::Display for DGWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (t, &(i, e)) in self.factors.iter().enumerate() {
            if t > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "y{i}")?;
            } else {
                write!(f, "y{i}^({e})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for DGElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w.is_one() {
                write!(f, "{c}")?;
            } else if c.num_terms() == 1 && c.terms().next().unwrap().0.is_one()
                && c.terms().next().unwrap().1.is_one()
            {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}
