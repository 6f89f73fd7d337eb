//! Ideal-level algebra: sums, products, powers, intersection via a fresh
//! elimination variable, membership and containment by normal form, ideal
//! equality, and graded-piece dimensions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, BuchbergerOptions, GroebnerBasis};
use crate::linalg::rref;
use crate::poly::{monomials_of_degree, Monomial, Polynomial, RingDescriptor, TermOrder};

/// A finitely generated ideal of a fixed polynomial ring, with lazily cached
/// reduced Groebner bases per term order.
///
/// The cache is a write-once-per-order memo shared by clones: concurrent
/// readers may at worst duplicate a computation, and the Groebner basis is
/// canonical so duplicated results are identical.
#[derive(Debug, Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<RingDescriptor>,
    generators: Vec<Polynomial<F>>,
    cache: Arc<RwLock<BTreeMap<TermOrder, Arc<GroebnerBasis<F>>>>>,
}

impl<F: Field> Ideal<F> {
    /// Builds an ideal from generators; zero generators are dropped.
    pub fn new(ring: &Arc<RingDescriptor>, generators: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &generators {
            if !g.ring().same_ring(ring) {
                return Err(Error::RingMismatch("generator from another ring".into()));
            }
        }
        Ok(Ideal {
            ring: Arc::clone(ring),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Arc::new(RwLock::new(BTreeMap::new())),
        })
    }

    pub fn zero(ring: &Arc<RingDescriptor>) -> Self {
        Ideal {
            ring: Arc::clone(ring),
            generators: Vec::new(),
            cache: Arc::new(RwLock::new(BTreeMap::new())),
        }
    }

    /// Wraps an already-computed reduced basis as an ideal, seeding the cache.
    pub(crate) fn from_groebner(gb: GroebnerBasis<F>) -> Self {
        let ring = Arc::clone(gb.ring());
        let order = gb.order();
        let generators = gb.elements().to_vec();
        let arc = Arc::new(gb);
        let mut map = BTreeMap::new();
        map.insert(order, arc);
        Ideal {
            ring,
            generators,
            cache: Arc::new(RwLock::new(map)),
        }
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    fn check_same_ring(&self, other: &Ideal<F>) -> Result<()> {
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::RingMismatch("ideals live in different rings".into()));
        }
        Ok(())
    }

    /// The reduced Groebner basis under `order`, computed on first use and
    /// memoized. Concurrent callers may race; the canonical result makes the
    /// race harmless.
    pub fn groebner(&self, order: TermOrder) -> Result<Arc<GroebnerBasis<F>>> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(&order) {
            return Ok(Arc::clone(gb));
        }
        let gb = Arc::new(buchberger(
            &self.ring,
            &self.generators,
            order,
            &BuchbergerOptions::default(),
        )?);
        let mut map = self.cache.write().expect("cache lock");
        let entry = map.entry(order).or_insert(gb);
        Ok(Arc::clone(entry))
    }

    /// Any cached basis, else GREVLEX (the cheapest order in practice).
    fn any_groebner(&self) -> Result<Arc<GroebnerBasis<F>>> {
        {
            let map = self.cache.read().expect("cache lock");
            if let Some((_, gb)) = map.iter().next() {
                return Ok(Arc::clone(gb));
            }
        }
        self.groebner(TermOrder::Grevlex)
    }

    /// True iff the ideal is the whole ring (its basis contains a nonzero
    /// constant). Containment queries answer accordingly without special
    /// cases, since a constant leading term reduces everything to zero.
    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.any_groebner()?.is_unit())
    }

    // Smallest available generating set for derived constructions.
    fn compute_gens(&self) -> Vec<Polynomial<F>> {
        let map = self.cache.read().expect("cache lock");
        if let Some(gb) = map.get(&TermOrder::Grevlex) {
            return gb.elements().to_vec();
        }
        self.generators.clone()
    }

    /// Ideal sum: union of the generator lists.
    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same_ring(other)?;
        let mut gens = self.generators.clone();
        for h in &other.generators {
            if !gens.contains(h) {
                gens.push(h.clone());
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Ideal product: all pairwise products of generators, deduplicated.
    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same_ring(other)?;
        let mut gens: Vec<Polynomial<F>> = Vec::new();
        for g in &self.generators {
            for h in &other.generators {
                let p = g.mul(h)?;
                if !p.is_zero() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `m`-th ordinary power, `m >= 1`.
    pub fn power(&self, m: u32) -> Result<Ideal<F>> {
        if m == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Elimination ideal of the first `k` variables: the basis elements of
    /// the ELIM(k) Groebner basis that involve none of them. The result
    /// stays in the ambient ring.
    pub fn eliminate(&self, k: usize) -> Result<Ideal<F>> {
        let nvars = self.ring.nvars();
        if k == 0 || k >= nvars {
            return Err(Error::ElimRange { k, nvars });
        }
        let gb = self.groebner(TermOrder::Elim(k))?;
        let kept: Vec<Polynomial<F>> = gb
            .elements()
            .iter()
            .filter(|g| {
                g.terms()
                    .iter()
                    .all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0))
            })
            .cloned()
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Exact intersection via the classic trick: a ∩ b is the elimination of
    /// t from t*a + (1-t)*b over an internally constructed ring with one
    /// fresh variable, which is torn down before returning.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same_ring(other)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }

        let fresh = fresh_var_name(&self.ring);
        let mut names: Vec<&str> = vec![&fresh];
        for v in self.ring.vars() {
            names.push(v);
        }
        let ext = RingDescriptor::new(self.ring.field(), &names)?;

        let t = Polynomial::<F>::variable(&ext, 0)?.with_order(TermOrder::Elim(1));
        let one_minus_t = Polynomial::<F>::constant(&ext, F::one())?
            .with_order(TermOrder::Elim(1))
            .sub(&t)?;

        let mut gens = Vec::new();
        for g in self.compute_gens() {
            gens.push(t.mul(&lift(&ext, &g))?);
        }
        for h in other.compute_gens() {
            gens.push(one_minus_t.mul(&lift(&ext, &h))?);
        }

        let gb = buchberger(&ext, &gens, TermOrder::Elim(1), &BuchbergerOptions::default())?;

        // The t-free subset of the reduced ELIM(1) basis, projected back, is
        // the reduced GREVLEX basis of the intersection: the block order
        // restricted to t-free monomials is exactly GREVLEX.
        let mut projected = Vec::new();
        for g in gb.elements() {
            if g.terms().iter().all(|(m, _)| m.exps()[0] == 0) {
                let terms: Vec<(Monomial, F)> = g
                    .terms()
                    .iter()
                    .map(|(m, c)| (Monomial::new(m.exps()[1..].to_vec()), c.clone()))
                    .collect();
                projected.push(Polynomial::from_sorted_terms(
                    &self.ring,
                    terms,
                    TermOrder::Grevlex,
                ));
            }
        }
        Ok(Ideal::from_groebner(GroebnerBasis::new_unchecked(
            Arc::clone(&self.ring),
            TermOrder::Grevlex,
            projected,
        )))
    }

    /// Left fold of pairwise intersections; the result is order-independent
    /// because reduced bases are canonical.
    pub fn intersect_many(ideals: &[Ideal<F>]) -> Result<Ideal<F>> {
        let (first, rest) = ideals
            .split_first()
            .ok_or_else(|| Error::EmptyList("intersect_many of no ideals".into()))?;
        let mut acc = first.clone();
        for next in rest {
            acc = acc.intersect(next)?;
        }
        Ok(acc)
    }

    /// Normal form of `f` against this ideal's (cached or GREVLEX) basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if !f.ring().same_ring(&self.ring) {
            return Err(Error::RingMismatch("membership across rings".into()));
        }
        self.any_groebner()?.normal_form(f)
    }

    /// Membership test: zero normal form against a Groebner basis.
    pub fn member(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// True iff `other` is contained in `self`.
    pub fn contains(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.containment_witness(other)?.is_none())
    }

    /// `None` when `other ⊆ self`; otherwise the first generator of `other`
    /// that fails membership, as a checkable witness.
    pub fn containment_witness(&self, other: &Ideal<F>) -> Result<Option<Polynomial<F>>> {
        self.check_same_ring(other)?;
        let gb = self.any_groebner()?;
        for g in &other.generators {
            if !gb.normal_form(g)?.is_zero() {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    /// Containment with the per-generator membership checks fanned out over
    /// `threads` OS threads. The witness (first failing generator in list
    /// order) matches the sequential variant.
    pub fn containment_witness_threaded(
        &self,
        other: &Ideal<F>,
        threads: usize,
    ) -> Result<Option<Polynomial<F>>> {
        if threads <= 1 || other.generators.len() <= 1 {
            return self.containment_witness(other);
        }
        self.check_same_ring(other)?;
        let gb = self.any_groebner()?;
        let chunk = other.generators.len().div_ceil(threads);
        type ChunkHit<F> = Option<(usize, Polynomial<F>)>;
        let results: Vec<Result<ChunkHit<F>>> = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (c, gens) in other.generators.chunks(chunk).enumerate() {
                let gb = Arc::clone(&gb);
                handles.push(scope.spawn(move || {
                    for (i, g) in gens.iter().enumerate() {
                        if !gb.normal_form(g)?.is_zero() {
                            return Ok(Some((c * chunk + i, g.clone())));
                        }
                    }
                    Ok(None)
                }));
            }
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        let mut best: Option<(usize, Polynomial<F>)> = None;
        for r in results {
            if let Some((i, g)) = r? {
                if best.as_ref().is_none_or(|(bi, _)| i < *bi) {
                    best = Some((i, g));
                }
            }
        }
        Ok(best.map(|(_, g)| g))
    }

    /// Ideal equality: identical reduced GREVLEX bases.
    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        self.check_same_ring(other)?;
        let a = self.groebner(TermOrder::Grevlex)?;
        let b = other.groebner(TermOrder::Grevlex)?;
        Ok(a.elements() == b.elements())
    }

    /// Dimension over the coefficient field of the degree-`t` graded piece,
    /// counted via the leading-term ideal: monomials of degree `t` divisible
    /// by some basis leading monomial. Requires homogeneous generators.
    pub fn graded_dim(&self, t: u64) -> Result<usize> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let gb = self.any_groebner()?;
        if gb.is_empty() {
            return Ok(0);
        }
        let lms: Vec<&Monomial> = gb
            .elements()
            .iter()
            .map(|g| Ok(g.lt()?.0))
            .collect::<Result<_>>()?;
        let count = monomials_of_degree(self.ring.nvars(), t)
            .into_iter()
            .filter(|m| lms.iter().any(|lm| lm.divides(m)))
            .count();
        Ok(count)
    }

    /// A basis of the degree-`t` piece: degree-`t` monomial multiples of the
    /// basis elements, reduced to echelon form by exact elimination. The
    /// length always equals [`Ideal::graded_dim`], computed independently.
    pub fn graded_piece_basis(&self, t: u64) -> Result<Vec<Polynomial<F>>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let gb = self.any_groebner()?;
        let monos = monomials_of_degree(self.ring.nvars(), t);
        let col: HashMap<&Monomial, usize> =
            monos.iter().enumerate().map(|(i, m)| (m, i)).collect();

        let mut rows: Vec<Vec<F>> = Vec::new();
        for g in gb.elements() {
            let d = g.degree().expect("basis elements are nonzero");
            if d > t {
                continue;
            }
            for m in monomials_of_degree(self.ring.nvars(), t - d) {
                let mut row = vec![F::zero(); monos.len()];
                for (gm, gc) in g.terms() {
                    let idx = col[&gm.checked_mul(&m)?];
                    row[idx] = row[idx].add(gc);
                }
                rows.push(row);
            }
        }
        rref(&mut rows);
        let mut basis = Vec::with_capacity(rows.len());
        for row in rows {
            let terms: Vec<(Monomial, F)> = row
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (monos[i].clone(), c))
                .collect();
            basis.push(Polynomial::from_sorted_terms(
                &self.ring,
                terms,
                TermOrder::Grevlex,
            ));
        }
        Ok(basis)
    }
}

fn fresh_var_name(ring: &RingDescriptor) -> String {
    if ring.var_index("t").is_none() {
        return "t".to_string();
    }
    let mut i = 0;
    loop {
        let name = format!("t{i}");
        if ring.var_index(&name).is_none() {
            return name;
        }
        i += 1;
    }
}

// Embeds a polynomial into the extension ring with the fresh variable in
// front (exponent zero everywhere).
fn lift<F: Field>(ext: &Arc<RingDescriptor>, p: &Polynomial<F>) -> Polynomial<F> {
    let terms: Vec<(Monomial, F)> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = Vec::with_capacity(m.nvars() + 1);
            exps.push(0);
            exps.extend_from_slice(m.exps());
            (Monomial::new(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms_ordered(ext, terms, TermOrder::Elim(1)).expect("lift is ring-safe")
}
