//! Sparse multivariate polynomials over an exact coefficient field:
//! ring descriptors, monomials, term orders, arithmetic, evaluation.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::{Field, FieldKind, Rational};
use crate::error::{Error, Result};

/// Names and coefficient field of a polynomial ring. Every polynomial and
/// ideal carries a reference to exactly one descriptor; operations across
/// rings with different descriptors are errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDescriptor {
    vars: Vec<String>,
    field: FieldKind,
}

impl RingDescriptor {
    pub fn new(field: FieldKind, vars: &[&str]) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        let mut seen: Vec<&str> = Vec::new();
        for v in vars {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            let mut chars = v.chars();
            let head = chars.next().unwrap();
            if !head.is_ascii_alphabetic()
                || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if *v == "w" {
                // reserved for the cyclotomic unit in the text grammar
                return Err(Error::InvalidRing("`w` is a reserved symbol".into()));
            }
            if seen.contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
            seen.push(v);
        }
        Ok(Arc::new(RingDescriptor {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            field,
        }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Ring identity is by content, so descriptors built independently with
    /// the same variables and field interoperate.
    pub fn same_ring(&self, other: &Self) -> bool {
        self == other
    }
}

/// Exponent vector; the length always equals the variable count of the
/// ambient ring. Exponents are checked against overflow on multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u32>>>()?;
        Ok(Monomial { exps })
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `self / divisor`, when the division is exact.
    pub fn quotient(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&divisor.exps)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }
}

/// A total multiplicative order on the monomials of a ring. `Elim(k)` is the
/// block order that compares GREVLEX on the first `k` variables and breaks
/// ties by GREVLEX on the rest; it is an elimination order for the first `k`
/// variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermOrder {
    Lex,
    Grevlex,
    Elim(usize),
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::Grevlex => write!(f, "grevlex"),
            TermOrder::Elim(k) => write!(f, "elim({k})"),
        }
    }
}

// GREVLEX: higher total degree wins; on equal degree the smaller last
// nonzero exponent difference, read from the last variable backwards, wins.
fn cmp_grevlex_slice(u: &[u32], v: &[u32]) -> Ordering {
    let du: u64 = u.iter().map(|&e| e as u64).sum();
    let dv: u64 = v.iter().map(|&e| e as u64).sum();
    match du.cmp(&dv) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (0..u.len()).rev() {
        match u[i].cmp(&v[i]) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

fn cmp_lex_slice(u: &[u32], v: &[u32]) -> Ordering {
    for i in 0..u.len() {
        match u[i].cmp(&v[i]) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

impl TermOrder {
    /// Compares two monomials of the same ring. Callers guarantee equal
    /// lengths; use [`order_cmp`] for the checked variant.
    pub fn cmp(self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.nvars(), v.nvars());
        match self {
            TermOrder::Lex => cmp_lex_slice(&u.exps, &v.exps),
            TermOrder::Grevlex => cmp_grevlex_slice(&u.exps, &v.exps),
            TermOrder::Elim(k) => {
                let k = k.min(u.exps.len());
                match cmp_grevlex_slice(&u.exps[..k], &v.exps[..k]) {
                    Ordering::Equal => cmp_grevlex_slice(&u.exps[k..], &v.exps[k..]),
                    other => other,
                }
            }
        }
    }
}

/// Checked comparison of two monomials under an order.
pub fn order_cmp(order: TermOrder, u: &Monomial, v: &Monomial) -> Result<Ordering> {
    if u.nvars() != v.nvars() {
        return Err(Error::RingMismatch(
            "monomials have different variable counts".into(),
        ));
    }
    if let TermOrder::Elim(k) = order {
        if k == 0 || k >= u.nvars() {
            return Err(Error::ElimRange { k, nvars: u.nvars() });
        }
    }
    Ok(order.cmp(u, v))
}

/// All monomials of total degree `t` in `nvars` variables, in descending
/// GREVLEX order.
pub fn monomials_of_degree(nvars: usize, t: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, left: u64) {
        if pos + 1 == current.len() {
            current[pos] = left as u32;
            out.push(Monomial::new(current.clone()));
            return;
        }
        for e in 0..=left {
            current[pos] = e as u32;
            rec(out, current, pos + 1, left - e);
        }
        current[pos] = 0;
    }
    if nvars == 0 {
        return out;
    }
    rec(&mut out, &mut current, 0, t);
    out.sort_by(|a, b| TermOrder::Grevlex.cmp(b, a));
    out
}

/// A sparse polynomial: nonzero coefficients indexed by monomials, kept
/// sorted strictly descending under a stored term order so the leading term
/// is O(1). Re-sorting under a different order is explicit via
/// [`Polynomial::with_order`].
#[derive(Debug, Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<RingDescriptor>,
    order: TermOrder,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        if !self.ring.same_ring(&other.ring) {
            return false;
        }
        if self.order == other.order {
            return self.terms == other.terms;
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms
            .iter()
            .all(|(m, c)| other.terms.iter().any(|(m2, c2)| m2 == m && c2 == c))
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    fn check_field(ring: &RingDescriptor) -> Result<()> {
        if ring.field() != F::KIND {
            return Err(Error::RingMismatch(format!(
                "coefficient type is {:?} but the ring is over {}",
                F::KIND,
                ring.field()
            )));
        }
        Ok(())
    }

    pub fn zero(ring: &Arc<RingDescriptor>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            order: TermOrder::Grevlex,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<RingDescriptor>, value: F) -> Result<Self> {
        Self::from_terms(ring, vec![(Monomial::one(ring.nvars()), value)])
    }

    pub fn variable(ring: &Arc<RingDescriptor>, index: usize) -> Result<Self> {
        if index >= ring.nvars() {
            return Err(Error::InvalidRing(format!(
                "variable index {index} out of range"
            )));
        }
        Self::from_terms(ring, vec![(Monomial::var(index, ring.nvars()), F::one())])
    }

    /// Builds a polynomial from raw terms: coefficients of equal monomials
    /// accumulate, zero terms are dropped, terms are sorted under GREVLEX.
    pub fn from_terms(ring: &Arc<RingDescriptor>, raw: Vec<(Monomial, F)>) -> Result<Self> {
        Self::from_terms_ordered(ring, raw, TermOrder::Grevlex)
    }

    pub fn from_terms_ordered(
        ring: &Arc<RingDescriptor>,
        raw: Vec<(Monomial, F)>,
        order: TermOrder,
    ) -> Result<Self> {
        Self::check_field(ring)?;
        let mut map: HashMap<Monomial, F> = HashMap::with_capacity(raw.len());
        for (m, c) in raw {
            if m.nvars() != ring.nvars() {
                return Err(Error::RingMismatch(format!(
                    "monomial has {} exponents, ring has {} variables",
                    m.nvars(),
                    ring.nvars()
                )));
            }
            match map.get_mut(&m) {
                Some(acc) => *acc = acc.add(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, F)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        Ok(Polynomial {
            ring: Arc::clone(ring),
            order,
            terms,
        })
    }

    /// Internal constructor for terms already strictly descending under `order`.
    pub(crate) fn from_sorted_terms(
        ring: &Arc<RingDescriptor>,
        terms: Vec<(Monomial, F)>,
        order: TermOrder,
    ) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: Arc::clone(ring),
            order,
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Re-sorts the terms under another order. This is the only way a
    /// polynomial changes its stored order.
    pub fn with_order(&self, order: TermOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        Polynomial {
            ring: Arc::clone(&self.ring),
            order,
            terms,
        }
    }

    /// Leading term under the stored order.
    pub fn lt(&self) -> Result<(&Monomial, &F)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading term under an arbitrary order (linear scan when the order
    /// differs from the stored one).
    pub fn leading_term(&self, order: TermOrder) -> Result<(&Monomial, &F)> {
        if self.terms.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if order == self.order {
            let (m, c) = &self.terms[0];
            return Ok((m, c));
        }
        let (m, c) = self
            .terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .unwrap();
        Ok((m, c))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::RingMismatch(format!(
                "[{}] vs [{}]",
                self.ring.vars().join(","),
                other.ring.vars().join(",")
            )));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.order.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        terms.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial {
                ring: Arc::clone(&self.ring),
                order: self.order,
                terms: Vec::new(),
            };
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Multiplies by the single term `c * m`. Term orders are multiplicative,
    /// so sortedness is preserved.
    pub fn mul_term(&self, c: &F, m: &Monomial) -> Result<Self> {
        if c.is_zero() {
            return Ok(Polynomial {
                ring: Arc::clone(&self.ring),
                order: self.order,
                terms: Vec::new(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| Ok((mm.checked_mul(m)?, cc.mul(c))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut map: HashMap<Monomial, F> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.checked_mul(m2)?;
                let p = c1.mul(c2);
                match map.get_mut(&m) {
                    Some(acc) => *acc = acc.add(&p),
                    None => {
                        map.insert(m, p);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, F)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|(a, _), (b, _)| self.order.cmp(b, a));
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Polynomial::constant(&self.ring, F::one())?.with_order(self.order);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub(crate) fn sub_mul_term(&self, c: &F, m: &Monomial, g: &Self) -> Result<Self> {
        self.sub(&g.mul_term(c, m)?)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Result<Self> {
        match self.terms.first() {
            None => Ok(self.clone()),
            Some((_, lc)) => {
                let inv = lc.inv()?;
                Ok(self.scale(&inv))
            }
        }
    }

    /// Divides out the coefficient content, returning the reduced polynomial
    /// and the content. The zero polynomial returns itself with content 1.
    pub fn primitive_part(&self) -> (Self, F) {
        let c = F::content(self.terms.iter().map(|(_, k)| k));
        if c.is_zero() {
            return (self.clone(), F::one());
        }
        if c.is_one() {
            return (self.clone(), c);
        }
        let inv = c.inv().expect("nonzero content");
        (self.scale(&inv), c)
    }

    /// Exact evaluation at a point given by one coordinate per ring variable.
    pub fn eval(&self, point: &[F]) -> Result<F> {
        if point.len() != self.ring.nvars() {
            return Err(Error::EvalArity {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&point[i]);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// True iff every monomial has the same total degree (vacuously true for
    /// the zero polynomial).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// The scalar `c` with `self = c * other`, when one exists. Zero
    /// polynomials are proportional only to each other (with factor 1).
    pub fn proportional_factor(&self, other: &Self) -> Option<F> {
        if !self.ring.same_ring(&other.ring) {
            return None;
        }
        if self.is_zero() && other.is_zero() {
            return Some(F::one());
        }
        if self.terms.len() != other.terms.len() || other.is_zero() {
            return None;
        }
        let me = self.with_order(TermOrder::Grevlex);
        let them = other.with_order(TermOrder::Grevlex);
        let c = me.terms[0].1.div(&them.terms[0].1).ok()?;
        for ((m1, c1), (m2, c2)) in me.terms.iter().zip(&them.terms) {
            if m1 != m2 || *c1 != c2.mul(&c) {
                return None;
            }
        }
        Some(c)
    }

    /// Partial derivative with respect to the `var`-th variable.
    pub fn derivative(&self, var: usize) -> Result<Self> {
        if var >= self.ring.nvars() {
            return Err(Error::InvalidRing(format!(
                "variable index {var} out of range"
            )));
        }
        let mut raw = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] = e - 1;
            raw.push((
                Monomial::new(exps),
                c.mul(&F::from_rational(&Rational::from_int(e as i64))),
            ));
        }
        Self::from_terms_ordered(&self.ring, raw, self.order)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.display_parts();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(&self.ring, m);
            match (&mono[..], mag.as_str()) {
                ("", _) => write!(f, "{mag}")?,
                (_, "1") => write!(f, "{mono}")?,
                _ => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

fn format_monomial(ring: &RingDescriptor, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.var_name(i).to_string()),
            _ => parts.push(format!("{}^{}", ring.var_name(i), e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycloElement;

    fn ring() -> Arc<RingDescriptor> {
        RingDescriptor::new(FieldKind::Rational, &["x", "y", "z"]).unwrap()
    }

    fn m(exps: [u32; 3]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn ring_validation() {
        assert!(RingDescriptor::new(FieldKind::Rational, &[]).is_err());
        assert!(RingDescriptor::new(FieldKind::Rational, &["x", "x"]).is_err());
        assert!(RingDescriptor::new(FieldKind::Rational, &["w"]).is_err());
        assert!(RingDescriptor::new(FieldKind::Rational, &["2x"]).is_err());
        assert!(RingDescriptor::new(FieldKind::Rational, &["t", "x", "y", "z"]).is_ok());
    }

    #[test]
    fn grevlex_examples() {
        // x*z vs y^2: both degree 2; grevlex ranks x*z below y^2
        assert_eq!(
            order_cmp(TermOrder::Grevlex, &m([1, 0, 1]), &m([0, 2, 0])).unwrap(),
            Ordering::Less
        );
        // standard degree-2 chain: x^2 > x*y > y^2 > x*z > y*z > z^2
        let chain = [
            m([2, 0, 0]),
            m([1, 1, 0]),
            m([0, 2, 0]),
            m([1, 0, 1]),
            m([0, 1, 1]),
            m([0, 0, 2]),
        ];
        for w in chain.windows(2) {
            assert_eq!(TermOrder::Grevlex.cmp(&w[0], &w[1]), Ordering::Greater);
        }
        // x^3*z > y^3*z
        assert_eq!(
            TermOrder::Grevlex.cmp(&m([3, 0, 1]), &m([0, 3, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_ignores_degree() {
        assert_eq!(
            order_cmp(TermOrder::Lex, &m([1, 0, 0]), &m([0, 9, 0])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn one_is_minimal() {
        for order in [TermOrder::Lex, TermOrder::Grevlex, TermOrder::Elim(1)] {
            assert_eq!(
                order.cmp(&Monomial::one(3), &m([1, 0, 0])),
                Ordering::Less
            );
        }
    }

    #[test]
    fn elim_order_separates_blocks() {
        // any monomial containing the first variable beats any that does not
        assert_eq!(
            TermOrder::Elim(1).cmp(&m([1, 0, 0]), &m([0, 9, 9])),
            Ordering::Greater
        );
        assert!(order_cmp(TermOrder::Elim(3), &m([1, 0, 0]), &m([0, 1, 0])).is_err());
        assert!(order_cmp(TermOrder::Elim(0), &m([1, 0, 0]), &m([0, 1, 0])).is_err());
    }

    #[test]
    fn order_cmp_rejects_arity_mismatch() {
        let u = Monomial::new(vec![1, 0]);
        let v = Monomial::new(vec![1, 0, 0]);
        assert!(order_cmp(TermOrder::Grevlex, &u, &v).is_err());
    }

    #[test]
    fn addition_cancels() {
        let r = ring();
        let f = crate::text::parse_polynomial::<Rational>(&r, "x^3 - z^3").unwrap();
        let g = crate::text::parse_polynomial::<Rational>(&r, "z^3 - y^3").unwrap();
        let sum = f.add(&g).unwrap();
        let expect = crate::text::parse_polynomial::<Rational>(&r, "x^3 - y^3").unwrap();
        assert_eq!(sum, expect);
        assert_eq!(f.add(&Polynomial::zero(&r)).unwrap(), f);
        // g1 - g2 = x^3 - y^3
        let g1 = crate::text::parse_polynomial::<Rational>(&r, "x^3 - z^3").unwrap();
        let g2 = crate::text::parse_polynomial::<Rational>(&r, "y^3 - z^3").unwrap();
        assert_eq!(g1.sub(&g2).unwrap(), expect);
    }

    #[test]
    fn multiplication_examples() {
        let r = ring();
        let p = |s: &str| crate::text::parse_polynomial::<Rational>(&r, s).unwrap();
        // z * (x^3 - y^3)
        assert_eq!(p("z").mul(&p("x^3 - y^3")).unwrap(), p("x^3*z - y^3*z"));
        // the nine dual Hesse lines multiply out to the nonic, grouped as
        // (x^3 - y^3)(x^3 - z^3)(y^3 - z^3)
        let nonic = p("x^3 - y^3")
            .mul(&p("x^3 - z^3"))
            .unwrap()
            .mul(&p("y^3 - z^3"))
            .unwrap();
        assert_eq!(
            nonic,
            p("x^6*y^3 - x^3*y^6 - x^6*z^3 + y^6*z^3 + x^3*z^6 - y^3*z^6")
        );
        let f = p("x^2 + 3*y - 1/2");
        let one = p("1");
        assert_eq!(f.mul(&one).unwrap(), f);
    }

    #[test]
    fn ring_mismatch_is_error() {
        let r1 = ring();
        let r2 = RingDescriptor::new(FieldKind::Rational, &["a", "b"]).unwrap();
        let f = Polynomial::<Rational>::variable(&r1, 0).unwrap();
        let g = Polynomial::<Rational>::variable(&r2, 0).unwrap();
        assert!(matches!(f.add(&g), Err(Error::RingMismatch(_))));
        assert!(matches!(f.mul(&g), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn order_mismatch_is_error() {
        let r = ring();
        let f = Polynomial::<Rational>::variable(&r, 0).unwrap();
        let g = Polynomial::<Rational>::variable(&r, 1)
            .unwrap()
            .with_order(TermOrder::Lex);
        assert!(matches!(f.add(&g), Err(Error::OrderMismatch)));
        assert_eq!(f.add(&g.with_order(TermOrder::Grevlex)).unwrap().num_terms(), 2);
    }

    #[test]
    fn evaluation() {
        let r = ring();
        let p = |s: &str| crate::text::parse_polynomial::<Rational>(&r, s).unwrap();
        let f1 = p("x^3*z - y^3*z");
        let one = Rational::from_int(1);
        assert!(f1
            .eval(&[one.clone(), one.clone(), one.clone()])
            .unwrap()
            .is_zero());
        assert!(f1.eval(&[one.clone(), one.clone()]).is_err());

        // g1 = x^3 - z^3 vanishes at (1, w, w^2)
        let rc = RingDescriptor::new(FieldKind::Cyclotomic3, &["x", "y", "z"]).unwrap();
        let g1 = crate::text::parse_polynomial::<CycloElement>(&rc, "x^3 - z^3").unwrap();
        let v = g1
            .eval(&[
                CycloElement::one(),
                CycloElement::omega(),
                CycloElement::omega_squared(),
            ])
            .unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn leading_terms() {
        let r = ring();
        let p = |s: &str| crate::text::parse_polynomial::<Rational>(&r, s).unwrap();
        let f1 = p("x^3*z - y^3*z");
        let (lm, lc) = f1.leading_term(TermOrder::Grevlex).unwrap();
        assert_eq!(lm, &m([3, 0, 1]));
        assert!(lc.is_one());

        let g = p("x + y + z");
        let (lm, _) = g.leading_term(TermOrder::Lex).unwrap();
        assert_eq!(lm, &m([1, 0, 0]));

        let c = p("5");
        let (lm, lc) = c.lt().unwrap();
        assert!(lm.is_one());
        assert_eq!(lc, &Rational::from_int(5));

        assert!(Polynomial::<Rational>::zero(&r).lt().is_err());
    }

    #[test]
    fn homogeneity() {
        let r = ring();
        let p = |s: &str| crate::text::parse_polynomial::<Rational>(&r, s).unwrap();
        let nonic = p("x^6*y^3 - x^3*y^6 - x^6*z^3 + y^6*z^3 + x^3*z^6 - y^3*z^6");
        assert!(nonic.is_homogeneous());
        assert_eq!(nonic.degree(), Some(9));
        assert!(!p("x^2 + y").is_homogeneous());
        assert!(Polynomial::<Rational>::zero(&r).is_homogeneous());
    }

    #[test]
    fn derivative_basic() {
        let r = ring();
        let p = |s: &str| crate::text::parse_polynomial::<Rational>(&r, s).unwrap();
        let f = p("x^3*z - y^3*z");
        assert_eq!(f.derivative(0).unwrap(), p("3*x^2*z"));
        assert_eq!(f.derivative(2).unwrap(), p("x^3 - y^3"));
        assert!(f.derivative(7).is_err());
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(3, 0), vec![Monomial::one(3)]);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(3, 9).len(), 55);
        let degree4 = monomials_of_degree(3, 4);
        assert_eq!(degree4.len(), 15);
        for w in degree4.windows(2) {
            assert_eq!(TermOrder::Grevlex.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn exponent_overflow_detected() {
        let big = Monomial::new(vec![u32::MAX, 0, 0]);
        let one_more = m([1, 0, 0]);
        assert!(matches!(
            big.checked_mul(&one_more),
            Err(Error::ExponentOverflow)
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_coeff() -> impl Strategy<Value = Rational> {
            (-30i64..30, 1i64..8).prop_map(|(n, d)| Rational::from_frac(n, d).unwrap())
        }

        fn arb_poly() -> impl Strategy<Value = Polynomial<Rational>> {
            proptest::collection::vec(((0u32..4, 0u32..4, 0u32..4), arb_coeff()), 0..6).prop_map(
                |raw| {
                    let r = ring();
                    let terms = raw
                        .into_iter()
                        .map(|((a, b, c), k)| (Monomial::new(vec![a, b, c]), k))
                        .collect();
                    Polynomial::from_terms(&r, terms).unwrap()
                },
            )
        }

        fn arb_homogeneous(degree: u32) -> impl Strategy<Value = Polynomial<Rational>> {
            proptest::collection::vec((0u32..=degree, 0u32..=degree, arb_coeff()), 1..5).prop_map(
                move |raw| {
                    let r = ring();
                    let terms = raw
                        .into_iter()
                        .map(|(a, b, k)| {
                            let a = a.min(degree);
                            let b = b.min(degree - a);
                            (Monomial::new(vec![a, b, degree - a - b]), k)
                        })
                        .collect();
                    Polynomial::from_terms(&r, terms).unwrap()
                },
            )
        }

        fn arb_point() -> impl Strategy<Value = Vec<Rational>> {
            proptest::collection::vec(arb_coeff(), 3)
        }

        proptest! {
            #[test]
            fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
                prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
                let left = f.add(&g).unwrap().mul(&h).unwrap();
                let right = f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }

            #[test]
            fn homogeneous_degrees_add(f in arb_homogeneous(3), g in arb_homogeneous(2)) {
                prop_assume!(!f.is_zero() && !g.is_zero());
                let fg = f.mul(&g).unwrap();
                prop_assert!(fg.is_homogeneous());
                prop_assert_eq!(fg.degree(), Some(5));
            }

            #[test]
            fn leading_terms_multiply(f in arb_poly(), g in arb_poly()) {
                prop_assume!(!f.is_zero() && !g.is_zero());
                let fg = f.mul(&g).unwrap();
                for order in [TermOrder::Lex, TermOrder::Grevlex, TermOrder::Elim(1)] {
                    let (fm, fc) = f.leading_term(order).unwrap();
                    let (gm, gc) = g.leading_term(order).unwrap();
                    let (pm, pc) = fg.leading_term(order).unwrap();
                    prop_assert_eq!(pm, &fm.checked_mul(gm).unwrap());
                    prop_assert_eq!(pc.clone(), fc.mul(gc));
                }
            }

            #[test]
            fn evaluation_is_a_homomorphism(f in arb_poly(), g in arb_poly(), p in arb_point()) {
                let sum = f.add(&g).unwrap().eval(&p).unwrap();
                prop_assert_eq!(sum, f.eval(&p).unwrap().add(&g.eval(&p).unwrap()));
                let prod = f.mul(&g).unwrap().eval(&p).unwrap();
                prop_assert_eq!(prod, f.eval(&p).unwrap().mul(&g.eval(&p).unwrap()));
            }
        }
    }
}
