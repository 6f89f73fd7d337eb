//! Buchberger's algorithm, normal-form reduction, and reduced Groebner
//! bases. Every membership, containment and intersection in the ideal layer
//! funnels through this module.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, RingDescriptor, TermOrder};

/// Pair selection strategy for the main Buchberger loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionStrategy {
    /// Lowest total degree of the pair lcm first, ties broken by the ambient
    /// order (the normal strategy; for graded orders the degree key is
    /// redundant since they compare total degree first anyway).
    Normal,
    /// Smallest lcm strictly under the ambient order. Under a block
    /// elimination order this front-loads the elimination block and can
    /// swell intermediate coefficients badly; kept as an experiment knob.
    AmbientLcm,
    /// Insertion order; an experiment knob.
    FirstCome,
}

/// Tuning knobs for [`buchberger`]. The defaults are the production
/// configuration; the flags exist so tests can demonstrate that the
/// criteria do not change the computed basis.
#[derive(Debug, Clone)]
pub struct BuchbergerOptions {
    pub strategy: SelectionStrategy,
    /// Skip S-pairs with coprime leading monomials.
    pub product_criterion: bool,
    /// Skip S-pairs subsumed by an already-treated third element.
    pub chain_criterion: bool,
    /// Fail fast if a new basis element exceeds this total degree.
    pub degree_cap: Option<u64>,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            strategy: SelectionStrategy::Normal,
            product_criterion: true,
            chain_criterion: true,
            degree_cap: None,
        }
    }
}

/// A reduced Groebner basis: monic elements, no monomial of any element
/// divisible by the leading monomial of another, sorted ascending by leading
/// monomial. Two reduced bases of the same ideal under the same order are
/// identical, so the representation is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<RingDescriptor>,
    order: TermOrder,
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub(crate) fn new_unchecked(
        ring: Arc<RingDescriptor>,
        order: TermOrder,
        elements: Vec<Polynomial<F>>,
    ) -> Self {
        GroebnerBasis { ring, order, elements }
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// A basis containing a nonzero constant generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    /// Unique normal form of `f` against this basis; zero iff `f` lies in
    /// the ideal. Safe to call concurrently from many threads.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if !f.ring().same_ring(&self.ring) {
            return Err(Error::RingMismatch("normal form across rings".into()));
        }
        reduce_full(f.with_order(self.order), &self.elements, usize::MAX)
    }
}

fn validate_order(order: TermOrder, nvars: usize) -> Result<()> {
    if let TermOrder::Elim(k) = order {
        if k == 0 || k >= nvars {
            return Err(Error::ElimRange { k, nvars });
        }
    }
    Ok(())
}

/// S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g, where lcm is of the two leading
/// monomials; the leading terms cancel by construction.
pub fn s_polynomial<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    order: TermOrder,
) -> Result<Polynomial<F>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.ring().same_ring(g.ring()) {
        return Err(Error::RingMismatch("s-polynomial across rings".into()));
    }
    validate_order(order, f.ring().nvars())?;
    s_poly_prepared(&f.with_order(order), &g.with_order(order))
}

fn s_poly_prepared<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    let (fm, fc) = f.lt()?;
    let (gm, gc) = g.lt()?;
    let lcm = fm.lcm(gm);
    let uf = lcm.quotient(fm).expect("lcm divisible by both");
    let ug = lcm.quotient(gm).expect("lcm divisible by both");
    let left = f.mul_term(&fc.inv()?, &uf)?;
    let right = g.mul_term(&gc.inv()?, &ug)?;
    left.sub(&right)
}

// Full multivariate division: repeatedly reduce the leading term by the
// first reducer whose leading monomial divides it; irreducible leading terms
// move to the remainder. `skip` excludes one basis index (used during
// inter-reduction). The remainder accumulates in strictly descending order
// because the working leading monomial strictly decreases.
//
// The working polynomial is kept content-stripped between steps, which
// bounds coefficient growth without changing the computed remainder (the
// accumulated scale is divided back out of each remainder term).
fn reduce_full<F: Field>(
    mut p: Polynomial<F>,
    basis: &[Polynomial<F>],
    skip: usize,
) -> Result<Polynomial<F>> {
    let ring = Arc::clone(p.ring());
    let order = p.order();
    let mut remainder: Vec<(Monomial, F)> = Vec::new();
    // invariant: p = scale * (exact current remainder tail)
    let mut scale = F::one();
    'outer: while !p.is_zero() {
        let (stripped, content) = p.primitive_part();
        if !content.is_one() {
            p = stripped;
            scale = scale.div(&content)?;
        }
        let (lm, lc) = {
            let (m, c) = p.lt()?;
            (m.clone(), c.clone())
        };
        for (idx, g) in basis.iter().enumerate() {
            if idx == skip {
                continue;
            }
            let (gm, gc) = g.lt()?;
            if gm.divides(&lm) {
                let qm = lm.quotient(gm).expect("divisibility checked");
                let qc = lc.div(gc)?;
                p = p.sub_mul_term(&qc, &qm, g)?;
                continue 'outer;
            }
        }
        remainder.push((lm, lc.div(&scale)?));
        p = Polynomial::from_sorted_terms(&ring, p.terms()[1..].to_vec(), order);
    }
    Ok(Polynomial::from_sorted_terms(&ring, remainder, order))
}

// Top reduction only: stop as soon as the leading term is irreducible. The
// result is a nonzero scalar multiple of the exact top-reduced form (callers
// normalize), kept content-stripped between steps.
fn top_reduce<F: Field>(mut p: Polynomial<F>, basis: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    'outer: while !p.is_zero() {
        p = p.primitive_part().0;
        let (lm, lc) = {
            let (m, c) = p.lt()?;
            (m.clone(), c.clone())
        };
        for g in basis {
            let (gm, gc) = g.lt()?;
            if gm.divides(&lm) {
                let qm = lm.quotient(gm).expect("divisibility checked");
                let qc = lc.div(gc)?;
                p = p.sub_mul_term(&qc, &qm, g)?;
                continue 'outer;
            }
        }
        break;
    }
    Ok(p)
}

/// Remainder of `f` on division by `basis` under `order`: no monomial of the
/// result is divisible by any leading monomial of `basis`, and `f - result`
/// lies in the ideal the basis generates. For a Groebner basis the result is
/// unique and zero exactly on ideal members. An empty basis returns `f`.
pub fn normal_form<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: TermOrder,
) -> Result<Polynomial<F>> {
    validate_order(order, f.ring().nvars())?;
    let mut prepared = Vec::with_capacity(basis.len());
    for g in basis {
        if g.is_zero() {
            return Err(Error::ZeroReducer);
        }
        if !g.ring().same_ring(f.ring()) {
            return Err(Error::RingMismatch("normal form across rings".into()));
        }
        prepared.push(g.with_order(order));
    }
    reduce_full(f.with_order(order), &prepared, usize::MAX)
}

fn norm_pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Computes the reduced Groebner basis of the ideal generated by
/// `generators` under `order`. Zero generators are discarded; an empty or
/// all-zero list yields the zero ideal's empty basis. The output is
/// canonical: permuting the generator list cannot change it.
pub fn buchberger<F: Field>(
    ring: &Arc<RingDescriptor>,
    generators: &[Polynomial<F>],
    order: TermOrder,
    opts: &BuchbergerOptions,
) -> Result<GroebnerBasis<F>> {
    validate_order(order, ring.nvars())?;
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    for g in generators {
        if !g.ring().same_ring(ring) {
            return Err(Error::RingMismatch("generator from another ring".into()));
        }
        if g.is_zero() {
            continue;
        }
        let g = g.with_order(order).primitive_part().0;
        if !basis.contains(&g) {
            basis.push(g);
        }
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis::new_unchecked(
            Arc::clone(ring),
            order,
            Vec::new(),
        ));
    }

    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let lcm = basis[i].lt()?.0.lcm(basis[j].lt()?.0);
            pairs.push(Pair { i, j, lcm });
            pending.insert((i, j));
        }
    }

    while !pairs.is_empty() {
        let pick = match opts.strategy {
            SelectionStrategy::FirstCome => 0,
            SelectionStrategy::Normal | SelectionStrategy::AmbientLcm => {
                let by_degree = opts.strategy == SelectionStrategy::Normal;
                let mut best = 0;
                for idx in 1..pairs.len() {
                    let a = &pairs[idx];
                    let b = &pairs[best];
                    let degree_key = if by_degree {
                        a.lcm.degree().cmp(&b.lcm.degree())
                    } else {
                        Ordering::Equal
                    };
                    let cmp = degree_key
                        .then(order.cmp(&a.lcm, &b.lcm))
                        .then(a.i.cmp(&b.i))
                        .then(a.j.cmp(&b.j));
                    if cmp == Ordering::Less {
                        best = idx;
                    }
                }
                best
            }
        };
        let pair = pairs.remove(pick);
        pending.remove(&(pair.i, pair.j));

        // Product criterion: coprime leading monomials reduce to zero.
        if opts.product_criterion {
            let di = basis[pair.i].lt()?.0.degree();
            let dj = basis[pair.j].lt()?.0.degree();
            if pair.lcm.degree() == di + dj {
                continue;
            }
        }

        // Chain criterion: a third element whose leading monomial divides
        // the lcm, with both side pairs already treated, subsumes this pair.
        if opts.chain_criterion {
            let mut skip = false;
            for (k, g) in basis.iter().enumerate() {
                if k == pair.i || k == pair.j {
                    continue;
                }
                if g.lt()?.0.divides(&pair.lcm)
                    && !pending.contains(&norm_pair(pair.i, k))
                    && !pending.contains(&norm_pair(pair.j, k))
                {
                    skip = true;
                    break;
                }
            }
            if skip {
                continue;
            }
        }

        let s = s_poly_prepared(&basis[pair.i], &basis[pair.j])?;
        let r = top_reduce(s, &basis)?;
        if r.is_zero() {
            continue;
        }
        if let Some(cap) = opts.degree_cap {
            if r.degree().unwrap_or(0) > cap {
                return Err(Error::DegreeCapExceeded { cap });
            }
        }
        let r = r.primitive_part().0;
        let n = basis.len();
        for (k, g) in basis.iter().enumerate() {
            let lcm = g.lt()?.0.lcm(r.lt()?.0);
            pairs.push(Pair { i: k, j: n, lcm });
            pending.insert((k, n));
        }
        basis.push(r);
    }

    let elements = reduce_basis(basis)?;
    Ok(GroebnerBasis::new_unchecked(
        Arc::clone(ring),
        order,
        elements,
    ))
}

// Minimalizes (drops elements whose leading monomial is divisible by
// another's) and fully inter-reduces. Leading monomials are pairwise
// indivisible afterwards, so full reduction cannot change them and a single
// pass yields the reduced basis.
fn reduce_basis<F: Field>(mut basis: Vec<Polynomial<F>>) -> Result<Vec<Polynomial<F>>> {
    let order = match basis.first() {
        Some(g) => g.order(),
        None => return Ok(basis),
    };
    basis.sort_by(|a, b| {
        order
            .cmp(a.lt().expect("nonzero").0, b.lt().expect("nonzero").0)
            .then_with(|| a.num_terms().cmp(&b.num_terms()))
    });
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for g in basis {
        let lm = g.lt()?.0;
        if !minimal.iter().any(|h| h.lt().expect("nonzero").0.divides(lm)) {
            minimal.push(g);
        }
    }
    for i in 0..minimal.len() {
        let reduced = reduce_full(minimal[i].clone(), &minimal, i)?;
        minimal[i] = reduced.monic()?;
    }
    Ok(minimal)
}

/// Direct Buchberger criterion: true iff every S-polynomial of the given
/// elements reduces to zero against them. This is the definition itself and
/// doubles as the independent validator for [`buchberger`] output.
pub fn is_groebner<F: Field>(basis: &[Polynomial<F>], order: TermOrder) -> Result<bool> {
    let prepared: Vec<Polynomial<F>> = basis
        .iter()
        .map(|g| {
            if g.is_zero() {
                Err(Error::ZeroReducer)
            } else {
                Ok(g.with_order(order))
            }
        })
        .collect::<Result<_>>()?;
    for i in 0..prepared.len() {
        for j in (i + 1)..prepared.len() {
            let s = s_poly_prepared(&prepared[i], &prepared[j])?;
            let r = reduce_full(s, &prepared, usize::MAX)?;
            if !r.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{FieldKind, Rational};
    use crate::text::parse_polynomial;

    fn ring() -> Arc<RingDescriptor> {
        RingDescriptor::new(FieldKind::Rational, &["x", "y", "z"]).unwrap()
    }

    fn p(r: &Arc<RingDescriptor>, s: &str) -> Polynomial<Rational> {
        parse_polynomial::<Rational>(r, s).unwrap()
    }

    #[test]
    fn s_polynomial_examples() {
        let r = ring();
        let f = p(&r, "x^2*y + x - 1");
        assert!(s_polynomial(&f, &f, TermOrder::Grevlex).unwrap().is_zero());

        let a = p(&r, "x^2");
        let b = p(&r, "x*y");
        assert!(s_polynomial(&a, &b, TermOrder::Grevlex).unwrap().is_zero());

        let g1 = p(&r, "x^3 - z^3");
        let g2 = p(&r, "y^3 - z^3");
        let s = s_polynomial(&g1, &g2, TermOrder::Grevlex).unwrap();
        assert_eq!(s, p(&r, "x^3*z^3 - y^3*z^3"));

        let zero = Polynomial::<Rational>::zero(&r);
        assert!(s_polynomial(&zero, &g1, TermOrder::Grevlex).is_err());
    }

    #[test]
    fn normal_form_basics() {
        let r = ring();
        let f = p(&r, "x^2*y + x + 3");
        assert_eq!(normal_form(&f, &[], TermOrder::Grevlex).unwrap(), f);

        let zero = Polynomial::<Rational>::zero(&r);
        let basis = [p(&r, "x - y")];
        assert!(normal_form(&zero, &basis, TermOrder::Grevlex)
            .unwrap()
            .is_zero());

        // reduce x^2 by x - y: x^2 -> y^2
        let nf = normal_form(&p(&r, "x^2"), &basis, TermOrder::Lex).unwrap();
        assert_eq!(nf, p(&r, "y^2").with_order(TermOrder::Lex));

        let with_zero = [p(&r, "x - y"), Polynomial::zero(&r)];
        assert!(matches!(
            normal_form(&f, &with_zero, TermOrder::Grevlex),
            Err(Error::ZeroReducer)
        ));
    }

    #[test]
    fn normal_form_is_irreducible_and_idempotent() {
        let r = ring();
        let basis = [p(&r, "x^2 - y"), p(&r, "x*y - z")];
        let f = p(&r, "x^4 + x^3*y + x + 1");
        let nf = normal_form(&f, &basis, TermOrder::Grevlex).unwrap();
        for (m, _) in nf.terms() {
            for g in &basis {
                assert!(!g.lt().unwrap().0.divides(m));
            }
        }
        let again = normal_form(&nf, &basis, TermOrder::Grevlex).unwrap();
        assert_eq!(again, nf);
    }

    #[test]
    fn buchberger_monomial_ideal() {
        let r = ring();
        let gens = [p(&r, "x"), p(&r, "y")];
        let gb = buchberger(&r, &gens, TermOrder::Grevlex, &Default::default()).unwrap();
        assert_eq!(gb.elements().len(), 2);
        assert_eq!(gb.elements()[0], p(&r, "y"));
        assert_eq!(gb.elements()[1], p(&r, "x"));
        assert!(is_groebner(gb.elements(), TermOrder::Grevlex).unwrap());
    }

    #[test]
    fn buchberger_classic_example() {
        // CLO chapter 2: I = (x^2 - y, x^3 - z) under lex has the reduced
        // basis {x^2 - y, x*y - z, x*z - y^2, y^3 - z^2}.
        let r = ring();
        let gens = [p(&r, "x^2 - y"), p(&r, "x^3 - z")];
        let gb = buchberger(&r, &gens, TermOrder::Lex, &Default::default()).unwrap();
        let rendered: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            rendered,
            vec!["y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y"]
        );
        assert!(is_groebner(gb.elements(), TermOrder::Lex).unwrap());
        for g in &gens {
            assert!(gb.normal_form(g).unwrap().is_zero());
        }
    }

    #[test]
    fn buchberger_handles_degenerate_inputs() {
        let r = ring();
        let zero = Polynomial::<Rational>::zero(&r);
        let gb = buchberger(&r, std::slice::from_ref(&zero), TermOrder::Grevlex, &Default::default())
            .unwrap();
        assert!(gb.is_empty());
        let gb = buchberger::<Rational>(&r, &[], TermOrder::Grevlex, &Default::default()).unwrap();
        assert!(gb.is_empty());
        assert!(!gb.is_unit());

        // 1 ∈ (x, x + 1)
        let gb = buchberger(
            &r,
            &[p(&r, "x"), p(&r, "x + 1")],
            TermOrder::Grevlex,
            &Default::default(),
        )
        .unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.elements().len(), 1);
        assert!(gb.elements()[0].is_constant());
    }

    #[test]
    fn degree_cap_fires() {
        let r = ring();
        let gens = [p(&r, "x^2 - y"), p(&r, "x^3 - z")];
        let opts = BuchbergerOptions {
            degree_cap: Some(1),
            ..Default::default()
        };
        assert!(matches!(
            buchberger(&r, &gens, TermOrder::Lex, &opts),
            Err(Error::DegreeCapExceeded { cap: 1 })
        ));
    }

    #[test]
    fn is_groebner_rejects_non_basis() {
        let r = ring();
        // under lex, (x^2 - y, x^3 - z) is not a Groebner basis
        let gens = [p(&r, "x^2 - y"), p(&r, "x^3 - z")];
        assert!(!is_groebner(&gens, TermOrder::Lex).unwrap());
    }

    #[test]
    fn concurrent_normal_forms() {
        let r = ring();
        let gens = [p(&r, "x^2 - y"), p(&r, "x*y - z")];
        let gb = buchberger(&r, &gens, TermOrder::Grevlex, &Default::default()).unwrap();
        let f = p(&r, "x^4*y^2 + x^2 + y + 5");
        let expected = gb.normal_form(&f).unwrap();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|_| scope.spawn(|| gb.normal_form(&f).unwrap()))
                .collect();
            for h in handles {
                assert_eq!(h.join().unwrap(), expected);
            }
        });
    }
}
