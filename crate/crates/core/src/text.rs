//! Text syntax: the polynomial expression grammar, field-element literals,
//! and the line-oriented point and ideal file formats.
//!
//! Grammar (ASCII, implicit multiplication forbidden):
//!
//! ```text
//! poly   := [sign] term { sign term }
//! term   := factor { '*' factor }
//! factor := base [ '^' nat ]
//! base   := nat [ '/' nat ] | 'w' | var | '(' poly ')'
//! ```
//!
//! `w` denotes the cyclotomic unit of Q(w) and is rejected in rational rings.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{Field, FieldKind, Rational};
use crate::error::{Error, Result};
use crate::points::{Configuration, ProjectivePoint};
use crate::poly::{Monomial, Polynomial, RingDescriptor};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                toks.push(Tok::Int(text.parse::<BigInt>().map_err(|_| {
                    parse_err(format!("bad integer `{text}`"))
                })?));
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push(Tok::Ident(input[start..i].to_string()));
            }
            _ => return Err(parse_err(format!("unexpected character `{c}`"))),
        }
    }
    Ok(toks)
}

fn parse_err(message: String) -> Error {
    Error::Parse { line: 0, message }
}

fn at_line(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => Error::Parse {
            line,
            message: other.to_string(),
        },
    }
}

struct Parser<'a, F: Field> {
    toks: &'a [Tok],
    pos: usize,
    ring: Option<&'a Arc<RingDescriptor>>,
    _marker: std::marker::PhantomData<F>,
}

/// Value the expression parser folds over: either a bare field constant or a
/// polynomial once a variable has appeared.
enum Val<F: Field> {
    Const(F),
    Poly(Polynomial<F>),
}

impl<F: Field> Val<F> {
    fn into_poly(self, ring: &Arc<RingDescriptor>) -> Result<Polynomial<F>> {
        match self {
            Val::Poly(p) => Ok(p),
            Val::Const(c) => Polynomial::constant(ring, c),
        }
    }
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Val<F>> {
        let mut neg = false;
        if self.eat(&Tok::Minus) {
            neg = true;
        } else {
            self.eat(&Tok::Plus);
        }
        let mut acc = self.term()?;
        if neg {
            acc = neg_val(acc);
        }
        loop {
            let sub = if self.eat(&Tok::Plus) {
                false
            } else if self.eat(&Tok::Minus) {
                true
            } else {
                break;
            };
            let mut rhs = self.term()?;
            if sub {
                rhs = neg_val(rhs);
            }
            acc = add_vals(acc, rhs, self.ring)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Val<F>> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            let rhs = self.factor()?;
            acc = mul_vals(acc, rhs, self.ring)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Val<F>> {
        let base = self.base()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let e = match self.bump() {
            Some(Tok::Int(n)) => n
                .to_u32()
                .ok_or_else(|| parse_err("exponent too large".into()))?,
            _ => return Err(parse_err("expected integer exponent after `^`".into())),
        };
        match base {
            Val::Const(c) => {
                let mut acc = F::one();
                for _ in 0..e {
                    acc = acc.mul(&c);
                }
                Ok(Val::Const(acc))
            }
            Val::Poly(p) => Ok(Val::Poly(p.pow(e)?)),
        }
    }

    fn base(&mut self) -> Result<Val<F>> {
        match self.bump().cloned() {
            Some(Tok::Int(n)) => {
                if self.eat(&Tok::Slash) {
                    match self.bump().cloned() {
                        Some(Tok::Int(d)) => {
                            let q = Rational::new(n, d)
                                .map_err(|_| parse_err("zero denominator".into()))?;
                            Ok(Val::Const(F::from_rational(&q)))
                        }
                        _ => Err(parse_err("expected integer after `/`".into())),
                    }
                } else {
                    let q = Rational::new(n, BigInt::from(1)).unwrap();
                    Ok(Val::Const(F::from_rational(&q)))
                }
            }
            Some(Tok::Ident(name)) => {
                if name == "w" {
                    return F::omega().map(Val::Const).ok_or_else(|| {
                        parse_err("`w` is not an element of a rational ring".into())
                    });
                }
                let ring = self
                    .ring
                    .ok_or_else(|| parse_err(format!("unexpected identifier `{name}`")))?;
                match ring.var_index(&name) {
                    Some(i) => Ok(Val::Poly(Polynomial::from_terms(
                        ring,
                        vec![(Monomial::var(i, ring.nvars()), F::one())],
                    )?)),
                    None => Err(parse_err(format!("unknown variable `{name}`"))),
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(parse_err("expected `)`".into()));
                }
                Ok(inner)
            }
            Some(tok) => Err(parse_err(format!("unexpected token {tok:?}"))),
            None => Err(parse_err("unexpected end of input".into())),
        }
    }
}

fn neg_val<F: Field>(v: Val<F>) -> Val<F> {
    match v {
        Val::Const(c) => Val::Const(c.neg()),
        Val::Poly(p) => Val::Poly(p.neg()),
    }
}

fn add_vals<F: Field>(
    a: Val<F>,
    b: Val<F>,
    ring: Option<&Arc<RingDescriptor>>,
) -> Result<Val<F>> {
    match (a, b) {
        (Val::Const(x), Val::Const(y)) => Ok(Val::Const(x.add(&y))),
        (a, b) => {
            let ring = ring.expect("polynomial value outside a ring context");
            Ok(Val::Poly(a.into_poly(ring)?.add(&b.into_poly(ring)?)?))
        }
    }
}

fn mul_vals<F: Field>(
    a: Val<F>,
    b: Val<F>,
    ring: Option<&Arc<RingDescriptor>>,
) -> Result<Val<F>> {
    match (a, b) {
        (Val::Const(x), Val::Const(y)) => Ok(Val::Const(x.mul(&y))),
        (Val::Const(x), Val::Poly(p)) | (Val::Poly(p), Val::Const(x)) => {
            Ok(Val::Poly(p.scale(&x)))
        }
        (Val::Poly(p), Val::Poly(q)) => {
            let _ = ring;
            Ok(Val::Poly(p.mul(&q)?))
        }
    }
}

/// Parses a polynomial in the expression grammar over the given ring.
pub fn parse_polynomial<F: Field>(
    ring: &Arc<RingDescriptor>,
    input: &str,
) -> Result<Polynomial<F>> {
    if ring.field() != F::KIND {
        return Err(Error::RingMismatch(
            "coefficient type does not match the ring field".into(),
        ));
    }
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(parse_err("empty expression".into()));
    }
    let mut p = Parser::<F> {
        toks: &toks,
        pos: 0,
        ring: Some(ring),
        _marker: std::marker::PhantomData,
    };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return Err(parse_err(format!(
            "trailing input at token {:?}",
            toks[p.pos]
        )));
    }
    v.into_poly(ring)
}

/// Parses a constant field element (the coordinate syntax of point files).
pub fn parse_field_element<F: Field>(input: &str) -> Result<F> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(parse_err("empty coordinate".into()));
    }
    let mut p = Parser::<F> {
        toks: &toks,
        pos: 0,
        ring: None,
        _marker: std::marker::PhantomData,
    };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return Err(parse_err(format!(
            "trailing input at token {:?}",
            toks[p.pos]
        )));
    }
    match v {
        Val::Const(c) => Ok(c),
        Val::Poly(_) => Err(parse_err("expected a constant".into())),
    }
}

/// Infers the coefficient field of a source file: any standalone identifier
/// `w` selects Q(w).
pub fn detect_field(input: &str) -> FieldKind {
    let mut word = String::new();
    for c in input.chars().chain(std::iter::once(' ')) {
        if c.is_ascii_alphanumeric() || c == '_' {
            word.push(c);
        } else {
            if word == "w" {
                return FieldKind::Cyclotomic3;
            }
            word.clear();
        }
    }
    FieldKind::Rational
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses the point-file format: one `c0 : c1 : c2` per line, `#` comments,
/// blank lines ignored. Errors carry 1-based line numbers.
pub fn parse_points_str<F: Field>(input: &str) -> Result<Configuration<F>> {
    let mut points: Vec<ProjectivePoint<F>> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 3 `:`-separated coordinates, got {}", parts.len()),
            });
        }
        let coords: Vec<F> = parts
            .iter()
            .map(|s| parse_field_element::<F>(s))
            .collect::<Result<_>>()
            .map_err(|e| at_line(e, line_no))?;
        let point = ProjectivePoint::new([coords[0].clone(), coords[1].clone(), coords[2].clone()])
            .map_err(|e| at_line(e, line_no))?;
        if points.contains(&point) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("duplicate point {point}"),
            });
        }
        points.push(point);
    }
    Configuration::new(points)
}

/// Serializes a configuration in the point-file format (canonical coordinates).
pub fn format_points<F: Field>(config: &Configuration<F>) -> String {
    let mut out = String::new();
    for p in config.points() {
        let c = p.coords();
        out.push_str(&format!("{} : {} : {}\n", c[0], c[1], c[2]));
    }
    out
}

/// Parses the ideal-file format: one generator per line in the polynomial
/// grammar, `#` comments, blank lines ignored.
pub fn parse_ideal_str<F: Field>(
    ring: &Arc<RingDescriptor>,
    input: &str,
) -> Result<Vec<Polynomial<F>>> {
    let mut gens = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let p = parse_polynomial::<F>(ring, line).map_err(|e| at_line(e, line_no))?;
        gens.push(p);
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycloElement;
    use proptest::prelude::*;

    fn qring() -> Arc<RingDescriptor> {
        RingDescriptor::new(FieldKind::Rational, &["x", "y", "z"]).unwrap()
    }

    fn cring() -> Arc<RingDescriptor> {
        RingDescriptor::new(FieldKind::Cyclotomic3, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_the_nonic() {
        let r = qring();
        let f =
            parse_polynomial::<Rational>(&r, "x^6*y^3 - x^3*y^6 - x^6*z^3 + y^6*z^3 + x^3*z^6 - y^3*z^6")
                .unwrap();
        assert_eq!(f.num_terms(), 6);
        assert_eq!(f.degree(), Some(9));
    }

    #[test]
    fn parses_cyclotomic_coefficients() {
        let r = cring();
        let l4 = parse_polynomial::<CycloElement>(&r, "x - w*y").unwrap();
        assert_eq!(l4.num_terms(), 2);
        let p = parse_polynomial::<CycloElement>(&r, "(1+w)*x + (-1-w)*y + 2/3*w*z").unwrap();
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn rejects_w_in_rational_ring() {
        let r = qring();
        assert!(parse_polynomial::<Rational>(&r, "x - w*y").is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        let r = qring();
        for bad in ["x y", "x +", "1/0", "x^", "(x", "x^y", "q + 1", "x/2", ""] {
            assert!(
                parse_polynomial::<Rational>(&r, bad).is_err(),
                "should reject `{bad}`"
            );
        }
    }

    #[test]
    fn field_elements() {
        assert_eq!(
            parse_field_element::<CycloElement>("-1-w").unwrap(),
            CycloElement::omega_squared()
        );
        assert_eq!(
            parse_field_element::<Rational>("2/3").unwrap(),
            Rational::from_frac(2, 3).unwrap()
        );
        assert_eq!(
            parse_field_element::<CycloElement>("w^2").unwrap(),
            CycloElement::omega_squared()
        );
        assert!(parse_field_element::<Rational>("x").is_err());
    }

    #[test]
    fn field_detection() {
        assert_eq!(detect_field("1 : 2 : 3"), FieldKind::Rational);
        assert_eq!(detect_field("1 : w : -1-w"), FieldKind::Cyclotomic3);
        // `w` must be a standalone word
        assert_eq!(detect_field("ww : 1 : 2"), FieldKind::Rational);
    }

    #[test]
    fn point_file_round_trip() {
        let text = "# the three coordinate points\n1 : 0 : 0\n0:1:0\n\n0 : 0 : 1\n";
        let cfg = parse_points_str::<Rational>(text).unwrap();
        assert_eq!(cfg.len(), 3);
        let rendered = format_points(&cfg);
        let cfg2 = parse_points_str::<Rational>(&rendered).unwrap();
        assert_eq!(cfg, cfg2);
    }

    #[test]
    fn point_file_errors_carry_line_numbers() {
        let dup = "1 : 0 : 0\n2 : 0 : 0\n";
        // (1:0:0) and (2:0:0) normalize to the same point
        match parse_points_str::<Rational>(dup) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected duplicate error, got {other:?}"),
        }
        match parse_points_str::<Rational>("1 : 0 : 0\n0 : 0 : 0\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected degenerate error, got {other:?}"),
        }
        match parse_points_str::<Rational>("1 : 0\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected arity error, got {other:?}"),
        }
    }

    #[test]
    fn ideal_file_parsing() {
        let r = qring();
        let gens = parse_ideal_str::<Rational>(&r, "# generators\nx^3 - z^3\ny^3 - z^3\n").unwrap();
        assert_eq!(gens.len(), 2);
        match parse_ideal_str::<Rational>(&r, "x^3\nq - 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    fn arb_coeff() -> impl Strategy<Value = CycloElement> {
        ((-40i64..40), (-40i64..40), (1i64..9)).prop_map(|(a, b, d)| {
            CycloElement::new(
                Rational::from_frac(a, d).unwrap(),
                Rational::from_frac(b, d).unwrap(),
            )
        })
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<CycloElement>> {
        let r = cring();
        proptest::collection::vec(
            ((0u32..5, 0u32..5, 0u32..5), arb_coeff()),
            0..8,
        )
        .prop_map(move |raw| {
            let terms = raw
                .into_iter()
                .map(|((a, b, c), k)| (Monomial::new(vec![a, b, c]), k))
                .collect();
            Polynomial::from_terms(&r, terms).unwrap()
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(f in arb_poly()) {
            let r = cring();
            let rendered = f.to_string();
            let back = parse_polynomial::<CycloElement>(&r, &rendered).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
