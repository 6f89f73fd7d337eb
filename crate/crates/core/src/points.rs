//! Points of the projective plane over Q or Q(w), configurations, their
//! radical and fat-point ideals, and the built-in families: the dual Hesse
//! configuration, star configurations, seeded random rational points.

use std::fmt;
use std::sync::Arc;

use crate::arith::{CycloElement, Field, Rational};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Monomial, Polynomial, RingDescriptor};
use crate::rng::SplitMix64;

/// The coordinate ring of the plane over `F`: variables x, y, z.
pub fn plane_ring<F: Field>() -> Arc<RingDescriptor> {
    RingDescriptor::new(F::KIND, &["x", "y", "z"]).expect("static ring is valid")
}

/// A point of P^2 in canonical form: the first nonzero coordinate is scaled
/// to 1, so equality is componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivePoint<F: Field> {
    coords: [F; 3],
}

impl<F: Field> ProjectivePoint<F> {
    pub fn new(coords: [F; 3]) -> Result<Self> {
        let lead = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::DegeneratePoint)?;
        let inv = coords[lead].inv()?;
        Ok(ProjectivePoint {
            coords: [
                coords[0].mul(&inv),
                coords[1].mul(&inv),
                coords[2].mul(&inv),
            ],
        })
    }

    pub fn from_ints(coords: [i64; 3]) -> Result<Self> {
        Self::new([
            F::from_int(coords[0]),
            F::from_int(coords[1]),
            F::from_int(coords[2]),
        ])
    }

    pub fn coords(&self) -> &[F; 3] {
        &self.coords
    }
}

impl<F: Field> fmt::Display for ProjectivePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// A finite set of pairwise distinct points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration<F: Field> {
    points: Vec<ProjectivePoint<F>>,
}

impl<F: Field> Configuration<F> {
    pub fn new(points: Vec<ProjectivePoint<F>>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::DuplicatePoint(p.to_string()));
            }
        }
        Ok(Configuration { points })
    }

    pub fn points(&self) -> &[ProjectivePoint<F>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// A nonzero homogeneous linear form in x, y, z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineForm<F: Field> {
    poly: Polynomial<F>,
}

impl<F: Field> LineForm<F> {
    pub fn new(poly: Polynomial<F>) -> Result<Self> {
        if poly.is_zero() || !poly.is_homogeneous() || poly.degree() != Some(1) {
            return Err(Error::DegenerateLines(
                "a line form must be homogeneous of degree 1".into(),
            ));
        }
        Ok(LineForm { poly })
    }

    /// Builds `a*x + b*y + c*z`, normalized so the leading coefficient is 1.
    pub fn from_coeffs(ring: &Arc<RingDescriptor>, coeffs: [F; 3]) -> Result<Self> {
        let terms: Vec<(Monomial, F)> = coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(i, 3), c))
            .collect();
        let poly = Polynomial::from_terms(ring, terms)?.monic()?;
        LineForm::new(poly)
    }

    pub fn poly(&self) -> &Polynomial<F> {
        &self.poly
    }

    pub fn coeffs(&self) -> [F; 3] {
        let mut out = [F::zero(), F::zero(), F::zero()];
        for (m, c) in self.poly.terms() {
            let var = m.exps().iter().position(|&e| e == 1).expect("linear form");
            out[var] = c.clone();
        }
        out
    }

    pub fn contains(&self, p: &ProjectivePoint<F>) -> Result<bool> {
        Ok(self.poly.eval(p.coords())?.is_zero())
    }
}

impl<F: Field> fmt::Display for LineForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// The radical (prime) ideal of a single point: the three 2x2 minors of the
/// matrix with rows (x, y, z) and the point's coordinates.
pub fn point_ideal<F: Field>(p: &ProjectivePoint<F>) -> Result<Ideal<F>> {
    let ring = plane_ring::<F>();
    let [c0, c1, c2] = p.coords();
    let x = Polynomial::variable(&ring, 0)?;
    let y = Polynomial::variable(&ring, 1)?;
    let z = Polynomial::variable(&ring, 2)?;
    let gens = vec![
        x.scale(c1).sub(&y.scale(c0))?,
        x.scale(c2).sub(&z.scale(c0))?,
        y.scale(c2).sub(&z.scale(c1))?,
    ];
    Ideal::new(&ring, gens)
}

// Point ideal presented by its reduced basis (two linear forms), which keeps
// generator lists of powers small.
fn point_ideal_reduced<F: Field>(p: &ProjectivePoint<F>) -> Result<Ideal<F>> {
    let ideal = point_ideal(p)?;
    let gb = ideal.groebner(crate::poly::TermOrder::Grevlex)?;
    Ideal::new(ideal.ring(), gb.elements().to_vec())
}

/// The radical ideal of a configuration: the intersection of its point ideals.
pub fn radical_ideal<F: Field>(c: &Configuration<F>) -> Result<Ideal<F>> {
    symbolic_power(c, 1)
}

/// The m-th symbolic power of the ideal of the configuration, realized as
/// the intersection of the m-th powers of the point ideals. For radical
/// ideals of finite point sets this agrees with the localization definition:
/// the associated primes are exactly the point primes, and the vanishing
/// order oracle [`vanishing_order_at_least`] cross-checks membership.
pub fn symbolic_power<F: Field>(c: &Configuration<F>, m: u32) -> Result<Ideal<F>> {
    if m == 0 {
        return Err(Error::ZeroPower);
    }
    if c.is_empty() {
        return Err(Error::EmptyList("empty configuration".into()));
    }
    let powers: Vec<Ideal<F>> = c
        .points()
        .iter()
        .map(|p| point_ideal_reduced(p)?.power(m))
        .collect::<Result<_>>()?;
    Ideal::intersect_many(&powers)
}

/// True iff every partial derivative of `f` of total order <= m-1 vanishes
/// at `p`; in characteristic zero this is membership in the m-th power of
/// the point's ideal. The outcome does not depend on the chosen
/// representative of `p`.
pub fn vanishing_order_at_least<F: Field>(
    f: &Polynomial<F>,
    p: &ProjectivePoint<F>,
    m: u32,
) -> Result<bool> {
    if m == 0 {
        return Err(Error::ZeroPower);
    }
    // (polynomial, first variable allowed to differentiate next) — the
    // non-decreasing variable sequence enumerates each multi-index once
    let mut level: Vec<(Polynomial<F>, usize)> = vec![(f.clone(), 0)];
    for depth in 0..m {
        for (g, _) in &level {
            if !g.eval(p.coords())?.is_zero() {
                return Ok(false);
            }
        }
        if depth + 1 < m {
            let mut next = Vec::new();
            for (g, start) in &level {
                for var in *start..3 {
                    let d = g.derivative(var)?;
                    if !d.is_zero() {
                        next.push((d, var));
                    }
                }
            }
            level = next;
        }
    }
    Ok(true)
}

fn cross<F: Field>(a: &[F; 3], b: &[F; 3]) -> [F; 3] {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

/// The unique line through two distinct points (cross product of coordinate
/// vectors), normalized to leading coefficient 1.
pub fn line_through<F: Field>(
    p: &ProjectivePoint<F>,
    q: &ProjectivePoint<F>,
) -> Result<LineForm<F>> {
    if p == q {
        return Err(Error::DegenerateLines("identical points".into()));
    }
    let coeffs = cross(p.coords(), q.coords());
    LineForm::from_coeffs(&plane_ring::<F>(), coeffs)
}

/// Exact product of the given line forms.
pub fn product_of_lines<F: Field>(lines: &[LineForm<F>]) -> Result<Polynomial<F>> {
    let (first, rest) = lines
        .split_first()
        .ok_or_else(|| Error::EmptyList("product of no lines".into()))?;
    let mut acc = first.poly().clone();
    for l in rest {
        acc = acc.mul(l.poly())?;
    }
    Ok(acc)
}

/// The 12 points of the dual Hesse configuration over Q(w): the three
/// coordinate points and the nine points (1 : w^a : w^b).
pub fn dual_hesse_config() -> Configuration<CycloElement> {
    let one = CycloElement::one;
    let zero = CycloElement::zero;
    let e = CycloElement::omega;
    let e2 = CycloElement::omega_squared;
    let rows: [[CycloElement; 3]; 12] = [
        [one(), zero(), zero()],
        [zero(), one(), zero()],
        [zero(), zero(), one()],
        [one(), one(), one()],
        [one(), e(), e2()],
        [one(), e2(), e()],
        [e(), one(), one()],
        [one(), e(), one()],
        [one(), one(), e()],
        [e2(), one(), one()],
        [one(), e2(), one()],
        [one(), one(), e2()],
    ];
    let points = rows
        .into_iter()
        .map(|coords| ProjectivePoint::new(coords).expect("table points are nonzero"))
        .collect();
    Configuration::new(points).expect("table points are distinct")
}

/// The 9 configuration lines: x - w^k y, x - w^k z, y - w^k z for k = 0,1,2.
pub fn dual_hesse_lines() -> Vec<LineForm<CycloElement>> {
    let ring = plane_ring::<CycloElement>();
    let units = [
        CycloElement::one(),
        CycloElement::omega(),
        CycloElement::omega_squared(),
    ];
    let mut lines = Vec::with_capacity(9);
    for u in &units {
        for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let mut coeffs = [
                CycloElement::zero(),
                CycloElement::zero(),
                CycloElement::zero(),
            ];
            coeffs[i] = CycloElement::one();
            coeffs[j] = u.neg();
            lines.push(
                LineForm::from_coeffs(&ring, coeffs).expect("table lines are linear"),
            );
        }
    }
    lines
}

/// Incidence counts: lines through each point, points on each line.
pub fn incidence_counts<F: Field>(
    config: &Configuration<F>,
    lines: &[LineForm<F>],
) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut per_point = vec![0usize; config.len()];
    let mut per_line = vec![0usize; lines.len()];
    for (i, p) in config.points().iter().enumerate() {
        for (j, l) in lines.iter().enumerate() {
            if l.contains(p)? {
                per_point[i] += 1;
                per_line[j] += 1;
            }
        }
    }
    Ok((per_point, per_line))
}

/// Default star-configuration lines: x + a*y + a^2*z for a = 1..=s. Their
/// coefficient vectors lie on a rational normal curve, so every 3x3 minor is
/// a Vandermonde determinant and no three lines are concurrent.
pub fn star_lines_default<F: Field>(s: usize) -> Result<Vec<LineForm<F>>> {
    let ring = plane_ring::<F>();
    (1..=s as i64)
        .map(|a| {
            let fa = F::from_int(a);
            LineForm::from_coeffs(&ring, [F::one(), fa.clone(), fa.mul(&fa)])
        })
        .collect()
}

fn det3<F: Field>(rows: [&[F; 3]; 3]) -> F {
    let c = cross(rows[1], rows[2]);
    rows[0][0]
        .mul(&c[0])
        .add(&rows[0][1].mul(&c[1]))
        .add(&rows[0][2].mul(&c[2]))
}

/// The star configuration of `s >= 2` lines: their pairwise intersection
/// points. Lines must be pairwise distinct with no three concurrent
/// (validated); defaults to [`star_lines_default`].
pub fn star_configuration<F: Field>(
    s: usize,
    lines: Option<Vec<LineForm<F>>>,
) -> Result<Configuration<F>> {
    if s < 2 {
        return Err(Error::DegenerateLines(
            "a star configuration needs at least 2 lines".into(),
        ));
    }
    let lines = match lines {
        Some(ls) => {
            if ls.len() != s {
                return Err(Error::DegenerateLines(format!(
                    "expected {s} lines, got {}",
                    ls.len()
                )));
            }
            ls
        }
        None => star_lines_default::<F>(s)?,
    };
    let coeffs: Vec<[F; 3]> = lines.iter().map(|l| l.coeffs()).collect();
    for i in 0..s {
        for j in (i + 1)..s {
            if cross(&coeffs[i], &coeffs[j]).iter().all(|c| c.is_zero()) {
                return Err(Error::DegenerateLines(format!(
                    "lines {i} and {j} coincide"
                )));
            }
            for k in (j + 1)..s {
                if det3([&coeffs[i], &coeffs[j], &coeffs[k]]).is_zero() {
                    return Err(Error::DegenerateLines(format!(
                        "lines {i}, {j}, {k} are concurrent"
                    )));
                }
            }
        }
    }
    let mut points = Vec::new();
    for i in 0..s {
        for j in (i + 1)..s {
            points.push(ProjectivePoint::new(cross(&coeffs[i], &coeffs[j]))?);
        }
    }
    Configuration::new(points)
}

/// `k` distinct points (1 : a : b) with seeded random rational a, b;
/// numerators bounded by 50 in absolute value, denominators in 1..=50.
/// The same seed always reproduces the same configuration.
pub fn random_rational_config(k: usize, seed: u64) -> Result<Configuration<Rational>> {
    if k == 0 {
        return Err(Error::EmptyList("requested zero points".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut points: Vec<ProjectivePoint<Rational>> = Vec::with_capacity(k);
    let budget = 100 * k;
    let mut attempts = 0;
    while points.len() < k {
        attempts += 1;
        if attempts > budget {
            return Err(Error::RetryBudgetExceeded);
        }
        let a = rng.next_rational(50, 50);
        let b = rng.next_rational(50, 50);
        let p = ProjectivePoint::new([<Rational as Field>::one(), a, b])?;
        if !points.contains(&p) {
            points.push(p);
        }
    }
    Configuration::new(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn qpt(coords: [i64; 3]) -> ProjectivePoint<Rational> {
        ProjectivePoint::from_ints(coords).unwrap()
    }

    #[test]
    fn canonical_form() {
        let p = qpt([0, 2, 4]);
        assert_eq!(
            p.coords(),
            &[
                Rational::from_int(0),
                Rational::from_int(1),
                Rational::from_int(2)
            ]
        );
        // renormalizing is the identity
        let again = ProjectivePoint::new(p.coords().clone()).unwrap();
        assert_eq!(again, p);
        assert!(ProjectivePoint::<Rational>::from_ints([0, 0, 0]).is_err());
    }

    #[test]
    fn configuration_rejects_duplicates() {
        let dup = vec![qpt([1, 0, 0]), qpt([2, 0, 0])];
        assert!(matches!(
            Configuration::new(dup),
            Err(Error::DuplicatePoint(_))
        ));
    }

    #[test]
    fn point_ideals_match_script_forms() {
        let ring = plane_ring::<CycloElement>();
        let p = |s: &str| parse_polynomial::<CycloElement>(&ring, s).unwrap();
        let ideal_of = |coords: [CycloElement; 3]| {
            point_ideal(&ProjectivePoint::new(coords).unwrap()).unwrap()
        };

        let p1 = ideal_of([
            CycloElement::one(),
            CycloElement::zero(),
            CycloElement::zero(),
        ]);
        let expect = Ideal::new(&ring, vec![p("y"), p("z")]).unwrap();
        assert!(p1.equals(&expect).unwrap());

        let p4 = ideal_of([
            CycloElement::one(),
            CycloElement::one(),
            CycloElement::one(),
        ]);
        let expect = Ideal::new(&ring, vec![p("x - z"), p("y - z")]).unwrap();
        assert!(p4.equals(&expect).unwrap());

        let p5 = ideal_of([
            CycloElement::one(),
            CycloElement::omega(),
            CycloElement::omega_squared(),
        ]);
        let expect = Ideal::new(&ring, vec![p("y - w*x"), p("z - (-1-w)*x")]).unwrap();
        assert!(p5.equals(&expect).unwrap());

        // every generator vanishes at its point
        let pt = ProjectivePoint::new([
            CycloElement::one(),
            CycloElement::omega(),
            CycloElement::omega_squared(),
        ])
        .unwrap();
        for g in p5.generators() {
            assert!(g.eval(pt.coords()).unwrap().is_zero());
        }
    }

    #[test]
    fn sum_of_two_coordinate_point_ideals() {
        // I(P1) + I(P2) cuts out their common zero locus, which is empty:
        // the sum is the full irrelevant ideal (x, y, z)
        let p1 = point_ideal(&qpt([1, 0, 0])).unwrap();
        let p2 = point_ideal(&qpt([0, 1, 0])).unwrap();
        let sum = p1.sum(&p2).unwrap();
        let ring = plane_ring::<Rational>();
        let p = |s: &str| parse_polynomial::<Rational>(&ring, s).unwrap();
        let irrelevant = Ideal::new(&ring, vec![p("x"), p("y"), p("z")]).unwrap();
        assert!(sum.equals(&irrelevant).unwrap());
    }

    #[test]
    fn radical_of_single_point() {
        let cfg = Configuration::new(vec![qpt([1, 0, 0])]).unwrap();
        let rad = radical_ideal(&cfg).unwrap();
        let ring = plane_ring::<Rational>();
        let p = |s: &str| parse_polynomial::<Rational>(&ring, s).unwrap();
        assert!(rad
            .equals(&Ideal::new(&ring, vec![p("y"), p("z")]).unwrap())
            .unwrap());
        assert_eq!(rad.graded_dim(1).unwrap(), 2);
    }

    #[test]
    fn symbolic_power_one_is_radical() {
        let cfg = Configuration::new(vec![qpt([1, 0, 0]), qpt([0, 1, 0]), qpt([1, 2, 3])]).unwrap();
        let rad = radical_ideal(&cfg).unwrap();
        let sym1 = symbolic_power(&cfg, 1).unwrap();
        assert!(rad.equals(&sym1).unwrap());
        assert!(matches!(symbolic_power(&cfg, 0), Err(Error::ZeroPower)));
    }

    #[test]
    fn lines_through_points() {
        let l = line_through(&qpt([1, 0, 0]), &qpt([0, 1, 0])).unwrap();
        let ring = plane_ring::<Rational>();
        assert_eq!(
            l.poly(),
            &parse_polynomial::<Rational>(&ring, "z").unwrap()
        );
        assert!(line_through(&qpt([1, 0, 0]), &qpt([1, 0, 0])).is_err());

        // P1 and P4 share the line y - z
        let hesse = dual_hesse_config();
        let l = line_through(&hesse.points()[0], &hesse.points()[3]).unwrap();
        let cring = plane_ring::<CycloElement>();
        assert_eq!(
            l.poly(),
            &parse_polynomial::<CycloElement>(&cring, "y - z").unwrap()
        );
    }

    #[test]
    fn product_of_two_hesse_lines() {
        let lines = dual_hesse_lines();
        let ring = plane_ring::<CycloElement>();
        let p = |s: &str| parse_polynomial::<CycloElement>(&ring, s).unwrap();
        // L1 = x - y and L4 = x - w*y
        let l1 = LineForm::new(p("x - y")).unwrap();
        let l4 = LineForm::new(p("x - w*y")).unwrap();
        assert!(lines.contains(&l1) && lines.contains(&l4));
        let prod = product_of_lines(&[l1.clone(), l4]).unwrap();
        assert_eq!(prod, p("x^2 - (1+w)*x*y + w*y^2"));
        assert_eq!(
            product_of_lines(std::slice::from_ref(&l1)).unwrap(),
            *l1.poly()
        );
        assert!(product_of_lines::<CycloElement>(&[]).is_err());
    }

    #[test]
    fn dual_hesse_incidences() {
        let cfg = dual_hesse_config();
        let lines = dual_hesse_lines();
        assert_eq!(cfg.len(), 12);
        assert_eq!(lines.len(), 9);
        let (per_point, per_line) = incidence_counts(&cfg, &lines).unwrap();
        assert!(per_point.iter().all(|&n| n == 3));
        assert!(per_line.iter().all(|&n| n == 4));
    }

    #[test]
    fn no_shared_configuration_line_for_p4_p5() {
        // P4 lies on L1,L2,L3 and P5 on L5,L7,L9: the joining line is not a
        // configuration line, unlike the (P4, P8) pair which shares x - z.
        let cfg = dual_hesse_config();
        let lines = dual_hesse_lines();
        let shared = |a: usize, b: usize| -> Vec<usize> {
            lines
                .iter()
                .enumerate()
                .filter(|(_, l)| {
                    l.contains(&cfg.points()[a]).unwrap() && l.contains(&cfg.points()[b]).unwrap()
                })
                .map(|(i, _)| i)
                .collect()
        };
        assert!(shared(3, 4).is_empty());
        let both = shared(3, 7);
        assert_eq!(both.len(), 1);
        let joining = line_through(&cfg.points()[3], &cfg.points()[7]).unwrap();
        assert_eq!(&joining, &lines[both[0]]);
    }

    #[test]
    fn star_configurations() {
        let two = star_configuration::<Rational>(2, None).unwrap();
        assert_eq!(two.len(), 1);
        let four = star_configuration::<Rational>(4, None).unwrap();
        assert_eq!(four.len(), 6);
        assert!(star_configuration::<Rational>(1, None).is_err());

        // x, y, x + y all pass through (0:0:1)
        let ring = plane_ring::<Rational>();
        let p = |s: &str| parse_polynomial::<Rational>(&ring, s).unwrap();
        let concurrent = vec![
            LineForm::new(p("x")).unwrap(),
            LineForm::new(p("y")).unwrap(),
            LineForm::new(p("x + y")).unwrap(),
        ];
        assert!(matches!(
            star_configuration(3, Some(concurrent)),
            Err(Error::DegenerateLines(_))
        ));
    }

    #[test]
    fn random_configs_are_deterministic() {
        let a = random_rational_config(6, 99).unwrap();
        let b = random_rational_config(6, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 6);
        let c = random_rational_config(6, 100).unwrap();
        assert_ne!(a, c);
        assert!(random_rational_config(0, 1).is_err());
    }

    #[test]
    fn vanishing_order_examples() {
        let ring = plane_ring::<CycloElement>();
        let p = |s: &str| parse_polynomial::<CycloElement>(&ring, s).unwrap();

        // a nonzero constant does not even vanish to order 1
        let five = p("5");
        let p1 = ProjectivePoint::<CycloElement>::from_ints([1, 0, 0]).unwrap();
        assert!(!vanishing_order_at_least(&five, &p1, 1).unwrap());

        // f1 = z(x^3 - y^3) at P3 = (0:0:1): in the chart z = 1 the local
        // expansion is x^3 - y^3, so the order of vanishing is exactly 3
        let f1 = p("z*(x^3 - y^3)");
        let p3 = ProjectivePoint::<CycloElement>::from_ints([0, 0, 1]).unwrap();
        assert!(vanishing_order_at_least(&f1, &p3, 2).unwrap());
        assert!(vanishing_order_at_least(&f1, &p3, 3).unwrap());
        assert!(!vanishing_order_at_least(&f1, &p3, 4).unwrap());

        // representative independence: the scaled tuple (0, 0, w) normalizes
        // to the same canonical point, so the outcome cannot change
        let scaled = ProjectivePoint::new([
            CycloElement::zero(),
            CycloElement::zero(),
            CycloElement::omega(),
        ])
        .unwrap();
        for depth in [2u32, 3, 4] {
            assert_eq!(
                vanishing_order_at_least(&f1, &p3, depth).unwrap(),
                vanishing_order_at_least(&f1, &scaled, depth).unwrap()
            );
        }
    }

    #[test]
    fn ideal_power_respects_vanishing_oracle() {
        // generators of I(P)^m vanish to order >= m at P
        let pt = qpt([1, 2, 3]);
        let sq = point_ideal(&pt).unwrap().power(2).unwrap();
        for g in sq.generators() {
            assert!(vanishing_order_at_least(g, &pt, 2).unwrap());
        }
    }

    #[test]
    fn symbolic_contains_ordinary_power_for_random_configs() {
        for (k, seed) in [(2usize, 5u64), (3, 9)] {
            let cfg = random_rational_config(k, seed).unwrap();
            let radical = radical_ideal(&cfg).unwrap();
            for m in 2..=3u32 {
                let sym = symbolic_power(&cfg, m).unwrap();
                let pow = radical.power(m).unwrap();
                assert!(sym.contains(&pow).unwrap(), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn default_star_lines_are_generic() {
        let lines = star_lines_default::<Rational>(5).unwrap();
        let coeffs: Vec<[Rational; 3]> = lines.iter().map(|l| l.coeffs()).collect();
        for i in 0..5 {
            for j in (i + 1)..5 {
                for k in (j + 1)..5 {
                    assert!(!det3([&coeffs[i], &coeffs[j], &coeffs[k]]).is_zero());
                }
            }
        }
    }
}
