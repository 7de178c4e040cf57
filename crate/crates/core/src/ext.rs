//! The Ext-algebra layer: Betti numbers, Poincare series, the presentation
//! of `Ext_R(k,k)` for skew complete intersections, PBW dimension counts,
//! Yoneda products by chain-map lifting, complexity, and the K2 generation
//! check.
//!
//! Minimality of the closure makes `Hom_R(F, k)` carry the zero
//! differential, so Ext classes are plain functionals on the basis words;
//! no cycle selection is ever needed.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;
use std::sync::Arc;

use crate::dga::{koszul_complex_of_ring, DGElement, DGWord, SemiFreeExtension};
use crate::error::{Error, Result};
use crate::homology::{
    complete_rounds, finalize_closure, stratum, stratum_matrix, ClosureResult, DeviationTable, Stratum,
};
use crate::matrix::Solver;
use crate::quotient::{augment, is_regular_sequence, QuotientRing, TruncatedSeries};
use crate::scalar::FieldElement;
use crate::skewpoly::ColorDegree;

/// True when every monomial of `f` has at least two variable factors, i.e.
/// `f` lies in the square of the augmentation ideal.
fn in_augmentation_square(f: &crate::skewpoly::RingElement) -> bool {
    f.terms().all(|(m, _)| m.exponents().iter().sum::<u32>() >= 2)
}

/// Ranks of the minimal free resolution: word counts per
/// (homological, internal) bidegree.
#[derive(Clone, Debug)]
pub struct BettiTable {
    counts: BTreeMap<(u32, u32), usize>,
    hom_bound: u32,
    int_bound: u32,
}

impl BettiTable {
    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32), &usize)> {
        self.counts.iter()
    }

    pub fn get(&self, hom: u32, int: u32) -> usize {
        self.counts.get(&(hom, int)).copied().unwrap_or(0)
    }

    /// `b_m`: the rank of the m-th free module.
    pub fn row_sum(&self, hom: u32) -> usize {
        self.counts.iter().filter(|((h, _), _)| *h == hom).map(|(_, c)| c).sum()
    }

    pub fn hom_bound(&self) -> u32 {
        self.hom_bound
    }

    pub fn int_bound(&self) -> u32 {
        self.int_bound
    }
}

/// Count the closure's basis words per bidegree.
pub fn betti_table(result: &ClosureResult) -> BettiTable {
    let ext = &result.extension;
    let hom_bound = ext.hom_bound();
    let int_bound = ext.int_bound();
    let mut counts = BTreeMap::new();
    for h in 0..=hom_bound {
        for w in ext.words_of_degree(h, int_bound) {
            *counts.entry((h, ext.word_int_degree(&w))).or_insert(0) += 1;
        }
    }
    BettiTable { counts, hom_bound, int_bound }
}

/// The Poincare series determined by the deviations:
/// `prod_{i odd} (1+t^i)^{e_i} / prod_{i even} (1-t^i)^{e_i}`.
pub fn poincare_from_deviations(dev: &DeviationTable, bound: u32) -> TruncatedSeries {
    let mut numerator = TruncatedSeries::one(bound);
    let mut denominator = TruncatedSeries::one(bound);
    for i in 1..=dev.max_hom() {
        let e = dev.total(i) as u32;
        if e == 0 {
            continue;
        }
        if i % 2 == 1 {
            // (1 + t^i)^e
            let mut factor = vec![0i64; bound as usize + 1];
            factor[0] = 1;
            if (i as usize) <= bound as usize {
                factor[i as usize] = 1;
            }
            let factor = TruncatedSeries::new(factor);
            for _ in 0..e {
                numerator = numerator.mul(&factor);
            }
        } else {
            let mut factor = vec![0i64; bound as usize + 1];
            factor[0] = 1;
            if (i as usize) <= bound as usize {
                factor[i as usize] = -1;
            }
            let factor = TruncatedSeries::new(factor);
            for _ in 0..e {
                denominator = denominator.mul(&factor);
            }
        }
    }
    numerator.div(&denominator)
}

/// A k-valued functional on the basis words of one homological degree of the
/// closure. Minimality makes every functional a cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub hom: u32,
    values: BTreeMap<DGWord, FieldElement>,
}

impl Cocycle {
    pub fn zero(hom: u32) -> Cocycle {
        Cocycle { hom, values: BTreeMap::new() }
    }

    /// The functional dual to one basis word.
    pub fn dual(ext: &SemiFreeExtension, word: DGWord) -> Cocycle {
        let hom = ext.word_hom_degree(&word);
        let mut values = BTreeMap::new();
        values.insert(word, ext.base().ring().field().one());
        Cocycle { hom, values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, w: &DGWord) -> Option<&FieldElement> {
        self.values.get(w)
    }

    pub fn values(&self) -> impl Iterator<Item = (&DGWord, &FieldElement)> {
        self.values.iter()
    }

    pub fn add_value(&mut self, w: &DGWord, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.values.get_mut(w) {
            Some(existing) => {
                let next = existing.add(c);
                if next.is_zero() {
                    self.values.remove(w);
                } else {
                    *existing = next;
                }
            }
            None => {
                self.values.insert(w.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &Cocycle) -> Cocycle {
        assert_eq!(self.hom, other.hom, "cohomological degrees differ");
        let mut out = self.clone();
        for (w, c) in &other.values {
            out.add_value(w, c);
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Cocycle {
        if c.is_zero() {
            return Cocycle::zero(self.hom);
        }
        Cocycle { hom: self.hom, values: self.values.iter().map(|(w, v)| (w.clone(), v.mul(c))).collect() }
    }

    /// Apply to a DG element of matching homological degree: coefficients
    /// pass through the augmentation.
    pub fn apply(&self, el: &DGElement) -> FieldElement {
        let field = self
            .values
            .values()
            .next()
            .map(|c| c.field())
            .unwrap_or(crate::scalar::Field::Rationals);
        let mut acc = field.zero();
        for (w, c) in el.terms() {
            if let Some(v) = self.values.get(w) {
                let a = augment(c);
                if !a.is_zero() {
                    acc = acc.add(&a.mul(v));
                }
            }
        }
        acc
    }
}

/// Shared solver caches for chain-map lifting through one closure.
pub struct ExtComputer<'a> {
    closure: &'a ClosureResult,
    strata: RefCell<BTreeMap<(u32, u32), Rc<Stratum>>>,
    solvers: RefCell<BTreeMap<(u32, u32), Rc<Solver>>>,
}

impl<'a> ExtComputer<'a> {
    pub fn new(closure: &'a ClosureResult) -> ExtComputer<'a> {
        ExtComputer { closure, strata: RefCell::new(BTreeMap::new()), solvers: RefCell::new(BTreeMap::new()) }
    }

    pub fn closure(&self) -> &ClosureResult {
        self.closure
    }

    fn ext(&self) -> &SemiFreeExtension {
        &self.closure.extension
    }

    fn stratum_cached(&self, hom: u32, int: u32) -> Result<Rc<Stratum>> {
        if let Some(s) = self.strata.borrow().get(&(hom, int)) {
            return Ok(s.clone());
        }
        let s = Rc::new(stratum(self.ext(), hom, int)?);
        self.strata.borrow_mut().insert((hom, int), s.clone());
        Ok(s)
    }

    /// Solver for the differential out of stratum `(hom, int)`.
    fn solver_cached(&self, hom: u32, int: u32) -> Result<Rc<Solver>> {
        if let Some(s) = self.solvers.borrow().get(&(hom, int)) {
            return Ok(s.clone());
        }
        let m = stratum_matrix(self.ext(), hom, int)?;
        let s = Rc::new(m.solver());
        self.solvers.borrow_mut().insert((hom, int), s.clone());
        Ok(s)
    }

    /// Lift a cocycle of degree `j` to a chain map of degree `-j` through
    /// `stages` resolution steps: maps `F_{j+s} -> F_s` with
    /// `d(psi_s(w)) = (-1)^j psi_{s-1}(d w)`, solved stratum by stratum.
    fn lift(&self, psi: &Cocycle, stages: u32) -> Result<Vec<BTreeMap<DGWord, DGElement>>> {
        let ext = self.ext();
        let ring = ext.base().ring();
        let j = psi.hom;
        let int_bound = ext.int_bound();
        let mut maps: Vec<BTreeMap<DGWord, DGElement>> = Vec::new();

        let mut level0 = BTreeMap::new();
        for w in ext.words_of_degree(j, int_bound) {
            if let Some(v) = psi.value(&w) {
                level0.insert(w, ext.element_from_ring(&ring.constant(v.clone())));
            } else {
                level0.insert(w, DGElement::zero());
            }
        }
        maps.push(level0);

        for s in 1..=stages {
            let mut level = BTreeMap::new();
            for w in ext.words_of_degree(j + s, int_bound) {
                let dw = ext.differential(&ext.element_from_word(w.clone()))?;
                // rhs = (-1)^j psi_{s-1}(d w)
                let mut rhs = DGElement::zero();
                for (v, a) in dw.terms() {
                    let prev = maps[(s - 1) as usize]
                        .get(v)
                        .unwrap_or_else(|| panic!("missing lift value for {v}"));
                    for (u, c) in prev.terms() {
                        let coeff = ext.base().multiply(a, c)?;
                        rhs.add_term(u, &coeff);
                    }
                }
                if j % 2 == 1 {
                    rhs = rhs.scale(&ring.field().from_i64(-1));
                }
                // solve d u = rhs per internal-degree component
                let mut solution = DGElement::zero();
                let mut by_degree: BTreeMap<u32, DGElement> = BTreeMap::new();
                for (u, c) in rhs.terms() {
                    let wd = ext.word_int_degree(u);
                    for (m, s2) in c.terms() {
                        let d = wd + m.degree();
                        let entry = by_degree.entry(d).or_insert_with(DGElement::zero);
                        let mut single = ring.zero();
                        single.add_term(m, s2);
                        entry.add_term(u, &single);
                    }
                }
                for (d, component) in by_degree {
                    if d > int_bound {
                        return Err(Error::DegreeExceedsTruncation { degree: d, bound: int_bound });
                    }
                    let target = self.stratum_cached(s - 1, d)?;
                    let source = self.stratum_cached(s, d)?;
                    let solver = self.solver_cached(s, d)?;
                    let b = target.coordinates(ext, &component);
                    let x = solver
                        .solve(&b)
                        .ok_or(Error::LiftInconsistent { hom: s, ideg: d })?;
                    solution = solution.add(&source.element(ext, &x));
                }
                level.insert(w, solution);
            }
            maps.push(level);
        }
        Ok(maps)
    }

    /// The Yoneda product `phi . psi` computed by lifting `psi` to a chain
    /// map and composing with `phi`.
    pub fn product(&self, phi: &Cocycle, psi: &Cocycle) -> Result<Cocycle> {
        let ext = self.ext();
        let total = phi.hom + psi.hom;
        if total > ext.hom_bound() {
            return Err(Error::InsufficientWindow { need: total, have: ext.hom_bound() });
        }
        let maps = self.lift(psi, phi.hom)?;
        let top = &maps[phi.hom as usize];
        let mut out = Cocycle::zero(total);
        for w in ext.words_of_degree(total, ext.int_bound()) {
            let lifted = &top[&w];
            let v = phi.apply(lifted);
            out.add_value(&w, &v);
        }
        Ok(out)
    }
}

/// One-shot Yoneda product; batch callers should hold an [`ExtComputer`] to
/// share the solver caches.
pub fn yoneda_product(phi: &Cocycle, psi: &Cocycle, result: &ClosureResult) -> Result<Cocycle> {
    ExtComputer::new(result).product(phi, psi)
}

/// A generator of the Ext presentation.
#[derive(Clone, Debug)]
pub struct ExtGenerator {
    /// 1-based; `1..=n` are the cohomological-degree-one duals.
    pub index: usize,
    pub cohom_degree: u32,
    pub int_degree: u32,
    /// Inverse of the corresponding closure variable's color.
    pub color: ColorDegree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationLead {
    /// `[theta_l, theta_i]` with the color-graded bracket convention.
    Bracket(usize, usize),
    /// `theta_i^2`.
    Square(usize),
}

/// A defining relation: the lead plus a linear correction
/// `sum_j eps(a_{.,.,j}) theta_{n+j}`.
#[derive(Clone, Debug)]
pub struct ExtRelation {
    pub lead: RelationLead,
    pub correction: Vec<(FieldElement, usize)>,
}

impl fmt::Display for ExtRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lead {
            RelationLead::Bracket(l, i) => write!(f, "[theta_{l},theta_{i}]")?,
            RelationLead::Square(i) => write!(f, "theta_{i}^2")?,
        }
        for (c, idx) in &self.correction {
            if c.is_one() {
                write!(f, " + theta_{idx}")?;
            } else {
                write!(f, " + {c}*theta_{idx}")?;
            }
        }
        Ok(())
    }
}

/// Generators and relations of `Ext_R(k,k)` for a verified skew complete
/// intersection.
#[derive(Clone, Debug)]
pub struct ExtPresentation {
    pub num_vars: usize,
    pub num_relations: usize,
    pub generators: Vec<ExtGenerator>,
    pub relations: Vec<ExtRelation>,
    /// `eps(a_{h,i,j})` indexed by `(h, i, j)` with `h <= i`, both 1-based.
    pub quad_coefficients: BTreeMap<(usize, usize, usize), FieldElement>,
}

/// Extract the presentation data from a verified skew complete intersection:
/// generators `theta_1..theta_{n+c}` and the three relation families, with
/// coefficients read off the quadratic parts of the relations in
/// standard-monomial coordinates.
pub fn ext_presentation(base: &Arc<QuotientRing>) -> Result<ExtPresentation> {
    let ring = base.ring();
    let n = ring.num_vars();
    let c = base.relations().len();
    for f in base.relations() {
        if !in_augmentation_square(f) {
            return Err(Error::RelationDegreeTooSmall(f.homogeneous_degree().unwrap_or(0)));
        }
    }
    if !is_regular_sequence(ring, base.relations(), base.truncation())? {
        return Err(Error::NotSkewCI(format!(
            "relations do not form a regular sequence up to degree {}",
            base.truncation()
        )));
    }

    let mut generators = Vec::new();
    for i in 0..n {
        generators.push(ExtGenerator {
            index: i + 1,
            cohom_degree: 1,
            int_degree: ring.var_degree(i),
            color: ColorDegree::unit(n, i).neg(),
        });
    }
    for (j, f) in base.relations().iter().enumerate() {
        generators.push(ExtGenerator {
            index: n + j + 1,
            cohom_degree: 2,
            int_degree: f.homogeneous_degree().unwrap(),
            color: f.color_degree()?.unwrap().neg(),
        });
    }

    // eps(a_{h,i,j}) = coefficient of the standard monomial x_h x_i (h <= i)
    // in the quadratic part of f_j
    let mut quad = BTreeMap::new();
    for (j, f) in base.relations().iter().enumerate() {
        for (m, coeff) in f.terms() {
            let exps = m.exponents();
            let total: u32 = exps.iter().sum();
            if total != 2 {
                continue;
            }
            let nz: Vec<usize> = (0..n).filter(|&i| exps[i] > 0).collect();
            let (h, i) = if nz.len() == 1 { (nz[0], nz[0]) } else { (nz[0], nz[1]) };
            quad.insert((h + 1, i + 1, j + 1), coeff.clone());
        }
    }

    let mut relations = Vec::new();
    let correction = |h: usize, i: usize| -> Vec<(FieldElement, usize)> {
        (1..=c)
            .filter_map(|j| quad.get(&(h, i, j)).map(|coeff| (coeff.clone(), n + j)))
            .collect()
    };
    for l in 1..=n {
        for i in (l + 1)..=n {
            relations.push(ExtRelation { lead: RelationLead::Bracket(l, i), correction: correction(l, i) });
        }
    }
    for i in 1..=n {
        relations.push(ExtRelation { lead: RelationLead::Square(i), correction: correction(i, i) });
    }
    for l in 1..=(n + c) {
        for i in (l + 1)..=(n + c) {
            if i > n {
                relations.push(ExtRelation { lead: RelationLead::Bracket(l, i), correction: Vec::new() });
            }
        }
    }

    Ok(ExtPresentation { num_vars: n, num_relations: c, generators, relations, quad_coefficients: quad })
}

/// Dimensions of the universal enveloping algebra by PBW normal-monomial
/// counts: the coefficients of `(1+t)^n / (1-t^2)^c` in the cohomological
/// grading.
pub fn upi_dimensions(pres: &ExtPresentation, bound: u32) -> TruncatedSeries {
    let mut numerator = TruncatedSeries::one(bound);
    let odd = TruncatedSeries::new({
        let mut v = vec![0i64; bound as usize + 1];
        v[0] = 1;
        if bound >= 1 {
            v[1] = 1;
        }
        v
    });
    for _ in 0..pres.num_vars {
        numerator = numerator.mul(&odd);
    }
    let even = TruncatedSeries::new({
        let mut v = vec![0i64; bound as usize + 1];
        v[0] = 1;
        if bound >= 2 {
            v[2] = -1;
        }
        v
    });
    let mut denominator = TruncatedSeries::one(bound);
    for _ in 0..pres.num_relations {
        denominator = denominator.mul(&even);
    }
    numerator.div(&denominator)
}

/// Build the closure of a skew complete intersection with the even variables
/// tied to the relations in order: `d(y_{n+j})` is the degree-one cycle
/// carrying `f_j`, written with right-normalized quadratic coordinates. Then
/// complete further rounds generically (they adjoin nothing when the input
/// really is a complete intersection).
pub fn closure_for_presentation(
    base: &Arc<QuotientRing>,
    hom_bound: u32,
    int_bound: u32,
) -> Result<ClosureResult> {
    let ring = base.ring();
    let n = ring.num_vars();
    let int_bound = int_bound.min(base.truncation());
    for f in base.relations() {
        if !in_augmentation_square(f) {
            return Err(Error::RelationDegreeTooSmall(f.homogeneous_degree().unwrap_or(0)));
        }
    }
    let mut ext = koszul_complex_of_ring(base, hom_bound, int_bound)?;
    for f in base.relations() {
        // peel the two right-most variable factors of each monomial:
        // x^I = x^(I - e_h - e_i) * x_h * x_i exactly, no twist
        let mut z = DGElement::zero();
        for (m, coeff) in f.terms() {
            let exps = m.exponents().to_vec();
            let i = (0..n).rev().find(|&t| exps[t] > 0).expect("degree >= 2");
            let mut rest = exps.clone();
            rest[i] -= 1;
            let h = (0..n).rev().find(|&t| rest[t] > 0).expect("degree >= 2");
            rest[h] -= 1;
            // coefficient a x_h with a = coeff * x^rest
            let mut a = ring.zero();
            a.add_term(&ring.monomial(rest), coeff);
            let axh = base.normal_form(&a.multiply(&ring.variable(h))?)?;
            z.add_term(&DGWord::single(i + 1, 1), &axh);
        }
        ext = ext.adjoin_variable(&z)?;
    }
    let ext = complete_rounds(ext, 2, hom_bound, int_bound, None)?;
    finalize_closure(ext, hom_bound, int_bound)
}

/// Global convention used to evaluate Yoneda products against the
/// presentation; the two choices read the computed algebra as the opposite
/// of the presented one or as the presented one itself. Passing to the
/// opposite inverts the bicharacter, so the bracket's chi flips together
/// with the composition order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductOrder {
    /// `a . b = a o lift(b)`, bracket evaluated with the inverse
    /// bicharacter (computed algebra = opposite of the presented one).
    LeftOfLift,
    /// `a . b = b o lift(a)`, bracket with the bicharacter as stated.
    RightOfLift,
}

impl fmt::Display for ProductOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductOrder::LeftOfLift => write!(f, "left-of-lift (opposite reading, inverse bicharacter)"),
            ProductOrder::RightOfLift => write!(f, "right-of-lift (direct reading)"),
        }
    }
}

/// Outcome of [`verify_presentation`].
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub dimensions_match: bool,
    pub dimension_rows: Vec<(u32, usize, i64)>,
    /// The globally consistent composition order, when one exists.
    pub convention: Option<ProductOrder>,
    pub relations_checked: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.dimensions_match && self.convention.is_some()
    }
}

/// Check the Ext presentation against the computed resolution: PBW dimension
/// counts against Betti numbers, and every relation evaluated with Yoneda
/// products, under one globally consistent composition convention.
pub fn verify_presentation(base: &Arc<QuotientRing>, hom_bound: u32, int_bound: u32) -> Result<VerifyReport> {
    if hom_bound < 4 {
        return Err(Error::InsufficientWindow { need: 4, have: hom_bound });
    }
    let pres = ext_presentation(base)?;
    let closure = closure_for_presentation(base, hom_bound, int_bound)?;
    let betti = betti_table(&closure);
    let dims = upi_dimensions(&pres, hom_bound);
    let mut dimension_rows = Vec::new();
    let mut dimensions_match = true;
    for m in 0..=hom_bound {
        let b = betti.row_sum(m);
        let u = dims.coeff(m);
        dimension_rows.push((m, b, u));
        if b as i64 != u {
            dimensions_match = false;
        }
    }

    let computer = ExtComputer::new(&closure);
    let ext = &closure.extension;
    let n = pres.num_vars;
    let theta: Vec<Cocycle> =
        (1..=(n + pres.num_relations)).map(|i| Cocycle::dual(ext, DGWord::single(i, 1))).collect();

    let mut convention = None;
    let mut failures = Vec::new();
    for order in [ProductOrder::LeftOfLift, ProductOrder::RightOfLift] {
        let mut order_failures = Vec::new();
        for rel in &pres.relations {
            let value = evaluate_relation(&computer, ext, &pres, &theta, rel, order)?;
            if !value.is_zero() {
                order_failures.push(format!("{rel} does not vanish under {order}"));
            }
        }
        if order_failures.is_empty() {
            convention = Some(order);
            failures.clear();
            break;
        }
        failures = order_failures;
    }

    Ok(VerifyReport {
        dimensions_match,
        dimension_rows,
        convention,
        relations_checked: pres.relations.len(),
        failures,
    })
}

fn evaluate_relation(
    computer: &ExtComputer,
    ext: &SemiFreeExtension,
    pres: &ExtPresentation,
    theta: &[Cocycle],
    rel: &ExtRelation,
    order: ProductOrder,
) -> Result<Cocycle> {
    let ring = ext.base().ring();
    let prod = |a: &Cocycle, b: &Cocycle| -> Result<Cocycle> {
        match order {
            ProductOrder::LeftOfLift => computer.product(a, b),
            ProductOrder::RightOfLift => computer.product(b, a),
        }
    };
    let mut value = match rel.lead {
        RelationLead::Square(i) => {
            let t = &theta[i - 1];
            prod(t, t)?
        }
        RelationLead::Bracket(l, i) => {
            let tl = &theta[l - 1];
            let ti = &theta[i - 1];
            let ab = prod(tl, ti)?;
            let ba = prod(ti, tl)?;
            let gl = &pres.generators[l - 1];
            let gi = &pres.generators[i - 1];
            let chi = match order {
                ProductOrder::LeftOfLift => ring.chi(&gl.color, &gi.color)?.inv(),
                ProductOrder::RightOfLift => ring.chi(&gl.color, &gi.color)?,
            };
            let sign = if (gl.cohom_degree * gi.cohom_degree) % 2 == 1 {
                chi.neg()
            } else {
                chi
            };
            // [a,b] = ab - (-1)^{|a||b|} chi(a,b) ba
            ab.add(&ba.scale(&sign.neg()))
        }
    };
    for (c, idx) in &rel.correction {
        value = value.add(&theta[idx - 1].scale(c));
    }
    Ok(value)
}

/// Confidence attached to a complexity value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Confidence {
    /// Exact for a verified skew complete intersection.
    Exact,
    /// Fitted on a truncated window of Betti numbers.
    Estimate,
}

/// Polynomial growth rate of the Betti numbers. For a verified skew complete
/// intersection pass `ci = Some(c)` and the answer is exact; otherwise the
/// least `d` whose degree-(d-1) polynomial fits the computed window is
/// returned, flagged as an estimate.
pub fn complexity(betti: &BettiTable, ci: Option<usize>) -> Result<(usize, Confidence)> {
    let n = betti.hom_bound();
    if n < 4 {
        return Err(Error::InsufficientWindow { need: 4, have: n });
    }
    if let Some(c) = ci {
        return Ok((c, Confidence::Exact));
    }
    let tail_start = n.saturating_sub(3).max(1);
    let mut values: Vec<i64> = (tail_start..=n).map(|m| betti.row_sum(m) as i64).collect();
    let mut d = 0usize;
    loop {
        if values.iter().all(|&v| v == 0) {
            return Ok((d, Confidence::Estimate));
        }
        if values.len() < 2 {
            return Ok((d + 1, Confidence::Estimate));
        }
        values = values.windows(2).map(|w| w[1] - w[0]).collect();
        d += 1;
    }
}

/// Outcome of the K2 generation check.
#[derive(Clone, Debug)]
pub struct K2Report {
    pub holds: bool,
    /// per cohomological degree: (degree, span rank, Ext dimension)
    pub ranks: Vec<(u32, usize, usize)>,
}

/// Check, up to degree `bound`, that Ext is generated in cohomological
/// degrees one and two: each `Ext^m` must be spanned by Yoneda products of
/// degree-one and degree-two classes.
pub fn k2_check(closure: &ClosureResult, bound: u32) -> Result<K2Report> {
    let ext = &closure.extension;
    if ext.hom_bound() < bound {
        return Err(Error::InsufficientWindow { need: bound, have: ext.hom_bound() });
    }
    if (0..ext.base().ring().num_vars()).any(|i| ext.base().ring().var_degree(i) != 1) {
        return Err(Error::InvalidRing("K2 check requires generation in internal degree 1".into()));
    }
    let field = ext.base().ring().field();
    let computer = ExtComputer::new(closure);
    let words_of = |m: u32| ext.words_of_degree(m, ext.int_bound());
    let duals_of = |m: u32| -> Vec<Cocycle> {
        words_of(m).into_iter().map(|w| Cocycle::dual(ext, w)).collect()
    };

    // spanning sets per degree, kept as independent cocycles
    let mut spans: BTreeMap<u32, Vec<Cocycle>> = BTreeMap::new();
    spans.insert(1, duals_of(1));
    spans.insert(2, duals_of(2));

    let mut ranks = Vec::new();
    let mut holds = true;
    for m in 3..=bound {
        let words: Vec<DGWord> = words_of(m);
        let dim = words.len();
        let mut products: Vec<Cocycle> = Vec::new();
        for low in [1u32, 2] {
            if m <= low {
                continue;
            }
            let others = spans.get(&(m - low)).cloned().unwrap_or_default();
            for a in duals_of(low) {
                for s in &others {
                    products.push(computer.product(&a, s)?);
                }
            }
        }
        // row-reduce the product coordinates to find the span rank
        let rows: Vec<Vec<FieldElement>> = products
            .iter()
            .map(|p| words.iter().map(|w| p.value(w).cloned().unwrap_or_else(|| field.zero())).collect())
            .collect();
        let mut mat = crate::matrix::Matrix::from_rows(field, rows);
        let pivots = if mat.rows() > 0 { mat.rref() } else { Vec::new() };
        let rank = pivots.len();
        ranks.push((m, rank, dim));
        if rank != dim {
            holds = false;
        }
        // keep an independent subset as the next spanning set
        let mut basis = Vec::new();
        for r in 0..rank {
            let mut cc = Cocycle::zero(m);
            for (k, w) in words.iter().enumerate() {
                cc.add_value(w, mat.get(r, k));
            }
            basis.push(cc);
        }
        spans.insert(m, basis);
    }
    Ok(K2Report { holds, ranks })
}

/// Identity element of the Yoneda algebra: the functional dual to the empty
/// word.
pub fn identity_cocycle(ext: &SemiFreeExtension) -> Cocycle {
    Cocycle::dual(ext, DGWord::one())
}

/// The quadratic-coefficient bracket table on generators, for checking the
/// color Lie axioms on pi^1 and pi^2.
pub fn bracket_from_presentation(
    pres: &ExtPresentation,
    l: usize,
    i: usize,
) -> Vec<(FieldElement, usize)> {
    // [theta_l, theta_i] = -sum_j eps(a_{l,i,j}) theta_{n+j} for l <= i <= n;
    // zero when either index exceeds n
    let n = pres.num_vars;
    if l > n || i > n {
        return Vec::new();
    }
    let (h, i2) = if l <= i { (l, i) } else { (i, l) };
    let mut out = Vec::new();
    for j in 1..=pres.num_relations {
        if let Some(c) = pres.quad_coefficients.get(&(h, i2, j)) {
            out.push((c.neg(), n + j));
        }
    }
    out
}
