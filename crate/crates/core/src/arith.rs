//! Exact coefficient arithmetic: arbitrary-precision rationals and the
//! quadratic cyclotomic field Q(w), where w is a primitive cube root of
//! unity satisfying w^2 + w + 1 = 0.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Tag identifying the coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Cyclotomic3,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Cyclotomic3 => write!(f, "Q(w)"),
        }
    }
}

/// An exact coefficient field.
///
/// The polynomial and ideal layers are generic over this trait; the two
/// instances are [`Rational`] and [`CycloElement`]. Values are immutable and
/// safe to share across threads.
pub trait Field:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const KIND: FieldKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse; errors on zero.
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    /// The cyclotomic unit w, when the field contains one.
    fn omega() -> Option<Self>;

    /// Canonical content of a coefficient list: a scalar `c` such that
    /// dividing every value by `c` leaves a reduced list (integer primitive
    /// with positive leading part for rational data). Zero only when every
    /// value is zero. Stripping content keeps Groebner intermediates in
    /// denominator-free form, which avoids per-operation gcd churn.
    fn content<'a, I>(values: I) -> Self
    where
        I: Iterator<Item = &'a Self>,
        Self: 'a;

    /// Splits a value into a display sign and a magnitude string for the
    /// polynomial printer. The magnitude must parse back through the
    /// expression grammar (compound cyclotomic values are parenthesized).
    fn display_parts(&self) -> (bool, String);
}

/// An arbitrary-precision rational number, always stored reduced with a
/// positive denominator; zero is canonically 0/1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in canonical form. Errors if `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Convenience constructor from machine integers; errors if `den` is zero.
    pub fn from_frac(num: i64, den: i64) -> Result<Self> {
        Self::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Field for Rational {
    const KIND: FieldKind = FieldKind::Rational;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn omega() -> Option<Self> {
        None
    }

    fn content<'a, I>(values: I) -> Self
    where
        I: Iterator<Item = &'a Self>,
    {
        use num_integer::Integer;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        let mut sign_negative = None;
        for v in values {
            if v.0.is_zero() {
                continue;
            }
            if sign_negative.is_none() {
                sign_negative = Some(v.is_negative());
            }
            num_gcd = num_gcd.gcd(v.numerator());
            den_lcm = den_lcm.lcm(v.denominator());
        }
        match sign_negative {
            None => Rational::zero(),
            Some(neg) => {
                if neg {
                    num_gcd = -num_gcd;
                }
                Rational(BigRational::new(num_gcd, den_lcm))
            }
        }
    }

    fn display_parts(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

/// An element a + b*w of Q(w). Since {1, w} is a basis over Q, componentwise
/// equality is canonical. The paper-side square of the unit is w^2 = -1 - w.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElement {
    a: Rational,
    b: Rational,
}

impl CycloElement {
    pub fn new(a: Rational, b: Rational) -> Self {
        CycloElement { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        CycloElement::new(Rational::from_int(n), Rational::zero())
    }

    /// The cyclotomic unit w itself.
    pub fn omega() -> Self {
        CycloElement::new(Rational::zero(), Rational::one())
    }

    /// w^2 = -1 - w, the other primitive cube root of unity.
    pub fn omega_squared() -> Self {
        CycloElement::new(Rational::from_int(-1), Rational::from_int(-1))
    }

    /// Rational part (coefficient of 1).
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of w.
    pub fn omega_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Complex conjugation w -> w^2, a field automorphism:
    /// a + b*w maps to (a - b) - b*w.
    pub fn conjugate(&self) -> Self {
        CycloElement::new(self.a.sub(&self.b), Field::neg(&self.b))
    }

    /// Field norm a^2 - a*b + b^2; zero iff the element is zero.
    pub fn norm(&self) -> Rational {
        let aa = self.a.mul(&self.a);
        let ab = self.a.mul(&self.b);
        let bb = self.b.mul(&self.b);
        aa.sub(&ab).add(&bb)
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return if self.b.is_one() {
                write!(f, "w")
            } else if Field::neg(&self.b).is_one() {
                write!(f, "-w")
            } else {
                write!(f, "{}*w", self.b)
            };
        }
        let bmag = self.b.abs();
        let sign = if self.b.is_negative() { '-' } else { '+' };
        if bmag.is_one() {
            write!(f, "{}{}w", self.a, sign)
        } else {
            write!(f, "{}{}{}*w", self.a, sign, bmag)
        }
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Field for CycloElement {
    const KIND: FieldKind = FieldKind::Cyclotomic3;

    fn zero() -> Self {
        CycloElement::new(Rational::zero(), Rational::zero())
    }

    fn one() -> Self {
        CycloElement::new(Rational::one(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        CycloElement::new(self.a.add(&rhs.a), self.b.add(&rhs.b))
    }

    fn sub(&self, rhs: &Self) -> Self {
        CycloElement::new(self.a.sub(&rhs.a), self.b.sub(&rhs.b))
    }

    fn neg(&self) -> Self {
        CycloElement::new(Field::neg(&self.a), Field::neg(&self.b))
    }

    // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w:
    //   = (a1 a2 - b1 b2) + (a1 b2 + a2 b1 - b1 b2) w
    fn mul(&self, rhs: &Self) -> Self {
        let a1a2 = self.a.mul(&rhs.a);
        let b1b2 = self.b.mul(&rhs.b);
        let a1b2 = self.a.mul(&rhs.b);
        let a2b1 = rhs.a.mul(&self.b);
        CycloElement::new(a1a2.sub(&b1b2), a1b2.add(&a2b1).sub(&b1b2))
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm().inv()?;
        let c = self.conjugate();
        Ok(CycloElement::new(c.a.mul(&n), c.b.mul(&n)))
    }

    fn from_rational(q: &Rational) -> Self {
        CycloElement::new(q.clone(), Rational::zero())
    }

    fn omega() -> Option<Self> {
        Some(CycloElement::omega())
    }

    fn content<'a, I>(values: I) -> Self
    where
        I: Iterator<Item = &'a Self>,
    {
        let parts: Vec<Rational> = values
            .flat_map(|v| [v.a.clone(), v.b.clone()])
            .collect();
        CycloElement::from_rational(&Rational::content(parts.iter()))
    }

    fn display_parts(&self) -> (bool, String) {
        if self.b.is_zero() {
            return (self.a.is_negative(), self.a.abs().to_string());
        }
        if self.a.is_zero() {
            let neg = self.b.is_negative();
            let bmag = self.b.abs();
            let s = if bmag.is_one() {
                "w".to_string()
            } else {
                format!("{bmag}*w")
            };
            return (neg, s);
        }
        // Both parts nonzero: take the sign from the rational part and
        // parenthesize so the printed term re-parses unambiguously.
        let neg = self.a.is_negative();
        let mag = if neg { Field::neg(self) } else { self.clone() };
        (neg, format!("({mag})"))
    }
}
