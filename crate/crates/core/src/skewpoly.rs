//! Exact arithmetic in skew polynomial rings `k_q[x_1,...,x_n]`.
//!
//! Monomials are kept in normal (ordered) form `x_1^{i_1}...x_n^{i_n}`;
//! reordering a product contributes an exactly computed scalar built from the
//! commutation matrix `q`. The G-degree ("color") of a monomial is its own
//! exponent vector, and the skew bicharacter `chi` evaluates commutation
//! scalars between colors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{Field, FieldElement};

/// Ambient skew polynomial ring: the field, the commutation matrix and the
/// variables' internal degrees.
#[derive(Debug)]
pub struct SkewPolyRing {
    field: Field,
    names: Vec<String>,
    degrees: Vec<u32>,
    /// `q[i][j]` with `q[i][i] = 1` and `q[i][j] q[j][i] = 1`.
    q: Vec<Vec<FieldElement>>,
}

impl SkewPolyRing {
    /// Build a ring from the strictly-upper entries of the matrix; the rest
    /// are implied. Checks the multiplicative antisymmetry axioms.
    pub fn new(
        field: Field,
        names: Vec<String>,
        degrees: Vec<u32>,
        upper: &[(usize, usize, FieldElement)],
    ) -> Result<Arc<SkewPolyRing>> {
        let n = names.len();
        if degrees.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: degrees.len() });
        }
        if degrees.iter().any(|&d| d == 0) {
            return Err(Error::InvalidRing("variable internal degrees must be positive".into()));
        }
        let mut q = vec![vec![field.one(); n]; n];
        for (i, j, c) in upper {
            if *i >= n || *j >= n {
                return Err(Error::InvalidRing(format!("q index ({},{}) out of range", i + 1, j + 1)));
            }
            if i == j && !c.is_one() {
                return Err(Error::InvalidRing("diagonal must be 1".into()));
            }
            if c.is_zero() {
                return Err(Error::InvalidRing("q entries must be nonzero".into()));
            }
            if c.field() != field {
                return Err(Error::InvalidRing("q entry from the wrong field".into()));
            }
            q[*i][*j] = c.clone();
            q[*j][*i] = c.inv();
        }
        Ok(Arc::new(SkewPolyRing { field, names, degrees, q }))
    }

    /// Full matrix constructor used when all entries are already known.
    pub fn from_matrix(
        field: Field,
        names: Vec<String>,
        degrees: Vec<u32>,
        q: Vec<Vec<FieldElement>>,
    ) -> Result<Arc<SkewPolyRing>> {
        let n = names.len();
        if q.len() != n || q.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: q.len() });
        }
        let mut upper = Vec::new();
        for i in 0..n {
            if !q[i][i].is_one() {
                return Err(Error::InvalidRing("diagonal must be 1".into()));
            }
            for j in (i + 1)..n {
                if q[i][j].is_zero() || !q[i][j].mul(&q[j][i]).is_one() {
                    return Err(Error::InvalidRing(format!(
                        "q[{}][{}] q[{}][{}] != 1",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
                upper.push((i, j, q[i][j].clone()));
            }
        }
        SkewPolyRing::new(field, names, degrees, &upper)
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn var_degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn q_entry(&self, i: usize, j: usize) -> &FieldElement {
        &self.q[i][j]
    }

    /// Internal (weighted) degree of an exponent vector.
    pub fn weighted_degree(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.degrees).map(|(e, d)| e * d).sum()
    }

    pub fn monomial(self: &Arc<Self>, exps: Vec<u32>) -> Monomial {
        assert_eq!(exps.len(), self.num_vars(), "monomial length");
        let degree = self.weighted_degree(&exps);
        Monomial { exps, degree }
    }

    pub fn monomial_one(self: &Arc<Self>) -> Monomial {
        self.monomial(vec![0; self.num_vars()])
    }

    pub fn var_monomial(self: &Arc<Self>, i: usize) -> Monomial {
        let mut exps = vec![0; self.num_vars()];
        exps[i] = 1;
        self.monomial(exps)
    }

    /// The reordering scalar of `x^I * x^J = twist(I,J) x^{I+J}`:
    /// the product over `j < i` of `q[i][j]^(I_i J_j)`.
    pub fn twist(&self, lhs: &Monomial, rhs: &Monomial) -> FieldElement {
        let mut acc = self.field.one();
        for i in 1..self.num_vars() {
            if lhs.exps[i] == 0 {
                continue;
            }
            for j in 0..i {
                if rhs.exps[j] == 0 {
                    continue;
                }
                let e = lhs.exps[i] as i64 * rhs.exps[j] as i64;
                acc = acc.mul(&self.q[i][j].pow(e));
            }
        }
        acc
    }

    /// The skew bicharacter on exponent-vector colors:
    /// `chi(a,b) = prod_{i,j} q[i][j]^(a_i b_j)`.
    pub fn chi(&self, a: &ColorDegree, b: &ColorDegree) -> Result<FieldElement> {
        let n = self.num_vars();
        if a.0.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: a.0.len() });
        }
        if b.0.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: b.0.len() });
        }
        let mut acc = self.field.one();
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                if i == j || b.0[j] == 0 {
                    continue;
                }
                acc = acc.mul(&self.q[i][j].pow(a.0[i] * b.0[j]));
            }
        }
        Ok(acc)
    }

    /// `chi` against a single variable, used pervasively for normality checks.
    pub fn chi_var(&self, a: &ColorDegree, j: usize) -> FieldElement {
        let mut acc = self.field.one();
        for i in 0..self.num_vars() {
            if i != j && a.0[i] != 0 {
                acc = acc.mul(&self.q[i][j].pow(a.0[i]));
            }
        }
        acc
    }

    pub fn zero(self: &Arc<Self>) -> RingElement {
        RingElement { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(self: &Arc<Self>) -> RingElement {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: FieldElement) -> RingElement {
        let mut el = self.zero();
        if !c.is_zero() {
            el.terms.insert(self.monomial_one(), c);
        }
        el
    }

    pub fn variable(self: &Arc<Self>, i: usize) -> RingElement {
        let mut el = self.zero();
        el.terms.insert(self.var_monomial(i), self.field.one());
        el
    }

    pub fn from_terms(self: &Arc<Self>, terms: Vec<(Monomial, FieldElement)>) -> RingElement {
        let mut el = self.zero();
        for (m, c) in terms {
            el.add_term(&m, &c);
        }
        el
    }

    /// All monomials of weighted degree exactly `d`, in descending monomial order.
    pub fn monomials_of_degree(self: &Arc<Self>, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.num_vars()];
        self.enumerate(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    fn enumerate(self: &Arc<Self>, i: usize, rem: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.num_vars() {
            if rem == 0 {
                out.push(self.monomial(exps.clone()));
            }
            return;
        }
        let d = self.degrees[i];
        let mut e = 0;
        while e * d <= rem {
            exps[i] = e;
            self.enumerate(i + 1, rem - e * d, exps, out);
            e += 1;
        }
        exps[i] = 0;
    }
}

pub fn same_ring(a: &Arc<SkewPolyRing>, b: &Arc<SkewPolyRing>) -> bool {
    Arc::ptr_eq(a, b)
}

/// An ordered monomial `x_1^{i_1}...x_n^{i_n}`, with its weighted internal
/// degree cached so the monomial order is a plain lexicographic comparison.
///
/// The global order is graded (by internal degree), ties broken by comparing
/// exponent tuples from `x_1`; it is fixed here once and used everywhere
/// downstream.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn color(&self) -> ColorDegree {
        ColorDegree(self.exps.iter().map(|&e| e as i64).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Componentwise quotient; caller must have checked divisibility.
    pub fn quotient(&self, divisor: &Monomial, ring: &Arc<SkewPolyRing>) -> Monomial {
        let exps = self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect();
        ring.monomial(exps)
    }

    pub fn lcm(&self, other: &Monomial, ring: &Arc<SkewPolyRing>) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        ring.monomial(exps)
    }

    pub fn mul(&self, other: &Monomial, ring: &Arc<SkewPolyRing>) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        ring.monomial(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the group G of normalizing automorphisms, modeled as a `Z^n`
/// exponent vector. The color of a monomial is its exponent vector; colors of
/// products add. Distinct vectors may induce the same automorphism; every
/// formula downstream consumes only `chi` values, which factor through this
/// representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorDegree(pub Vec<i64>);

impl ColorDegree {
    pub fn zero(n: usize) -> ColorDegree {
        ColorDegree(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> ColorDegree {
        let mut v = vec![0; n];
        v[i] = 1;
        ColorDegree(v)
    }

    pub fn add(&self, other: &ColorDegree) -> ColorDegree {
        ColorDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> ColorDegree {
        ColorDegree(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> ColorDegree {
        self.scale(-1)
    }
}

impl fmt::Display for ColorDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Witness produced by [`RingElement::is_normal`]: the color together with
/// the scalars `beta_j` satisfying `f x_j = beta_j x_j f`.
#[derive(Clone, Debug)]
pub struct NormalityCertificate {
    pub color: ColorDegree,
    pub betas: Vec<FieldElement>,
}

/// A sparse exact-coefficient linear combination of ordered monomials.
#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Arc<SkewPolyRing>,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &RingElement) -> bool {
        self.terms == other.terms
    }
}

impl Eq for RingElement {}

impl RingElement {
    pub fn ring(&self) -> &Arc<SkewPolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field().zero())
    }

    /// Leading term in the global monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: &Monomial, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(existing) => {
                let next = existing.add(c);
                if next.is_zero() {
                    self.terms.remove(m);
                } else {
                    *existing = next;
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        assert!(same_ring(&self.ring, &other.ring), "ambient mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RingElement {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        RingElement { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &FieldElement) -> RingElement {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect();
        RingElement { ring: self.ring.clone(), terms }
    }

    /// Product in the skew ring: bilinear over `x^I x^J = twist(I,J) x^{I+J}`.
    pub fn multiply(&self, other: &RingElement) -> Result<RingElement> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::AmbientMismatch);
        }
        let mut out = self.ring.zero();
        for (mi, ci) in &self.terms {
            for (mj, cj) in &other.terms {
                let scalar = ci.mul(cj).mul(&self.ring.twist(mi, mj));
                out.add_term(&mi.mul(mj, &self.ring), &scalar);
            }
        }
        Ok(out)
    }

    /// Internal degree when homogeneous, `None` otherwise (zero counts as
    /// homogeneous of any degree and reports `Some(0)`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(0),
            Some(m) => m.degree(),
        };
        if it.all(|m| m.degree() == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Degree of the highest-degree monomial (0 for the zero element).
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Component of the given internal degree.
    pub fn homogeneous_part(&self, d: u32) -> RingElement {
        let terms =
            self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect();
        RingElement { ring: self.ring.clone(), terms }
    }

    /// The common G-degree of the support when the element is G-homogeneous.
    ///
    /// Support monomials must agree on all `chi(-, e_j)` values; the returned
    /// representative is the exponent vector of the lexicographically least
    /// support monomial.
    pub fn color_degree(&self) -> Result<Option<ColorDegree>> {
        if self.is_zero() {
            return Err(Error::ZeroInput("color_degree"));
        }
        let n = self.ring.num_vars();
        let mut rep: Option<(Vec<u32>, Vec<FieldElement>)> = None;
        for m in self.terms.keys() {
            let color = m.color();
            let profile: Vec<FieldElement> = (0..n).map(|j| self.ring.chi_var(&color, j)).collect();
            match &rep {
                None => rep = Some((m.exponents().to_vec(), profile)),
                Some((least, base)) => {
                    if *base != profile {
                        return Ok(None);
                    }
                    if m.exponents() < least.as_slice() {
                        rep = Some((m.exponents().to_vec(), base.clone()));
                    }
                }
            }
        }
        let (exps, _) = rep.unwrap();
        Ok(Some(ColorDegree(exps.iter().map(|&e| e as i64).collect())))
    }

    /// Normality test for internally homogeneous elements: `f` is normal iff
    /// it is G-homogeneous, and then `f x_j = chi(color f, e_j) x_j f`.
    pub fn is_normal(&self) -> Result<Option<NormalityCertificate>> {
        if self.is_zero() {
            return Err(Error::ZeroInput("is_normal"));
        }
        if self.homogeneous_degree().is_none() {
            return Err(Error::Inhomogeneous);
        }
        match self.color_degree()? {
            None => Ok(None),
            Some(color) => {
                let betas = (0..self.ring.num_vars()).map(|j| self.ring.chi_var(&color, j)).collect();
                Ok(Some(NormalityCertificate { color, betas }))
            }
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{cs}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{cs}*")?;
            }
            let mut started = false;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if started {
                    write!(f, "*")?;
                }
                started = true;
                write!(f, "{}", self.ring.var_name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
