//! Recursive-descent parsers for the text formats.
//!
//! ```text
//! ringspec  := "Z" | "Zn(" nat ")" | "Mat(" nat "," ringspec ")" | "Tri(" nat "," ringspec ")"
//!            | "Prod(" ringspec ("," ringspec)+ ")" | "Quot(" ringspec "," idealspec ")"
//! idealspec := "<" (elem ("," elem)*)? ">" | "<*>"
//! elem      := int | "[" row ("," row)* "]" | "(" elem ("," elem)* ")"
//! row       := "[" elem ("," elem)* "]"
//! fuzzy     := "{" value ":" idealspec ("," value ":" idealspec)* "}"
//! value     := nat "/" nat | nat ("." digits)?
//! ```

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::error::{ParseError, SourceSpan};
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyIdeal;
use crate::ideal::{ideal_generate, CrispIdeal};
use crate::ring::{Element, ElementLiteral, IdealSpec, Ring, RingSpec};
use crate::Membership;

const MAX_FRACTION_DIGITS: usize = 6;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn error(&self, start: usize, end: usize, message: impl Into<String>, expected: &[&str]) -> ParseError {
        ParseError {
            message: message.into(),
            span: SourceSpan::new(start, end.min(self.text.len())),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Span of the next token, for error reports.
    fn next_span(&mut self) -> (usize, usize) {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..].chars().next().map_or(0, char::len_utf8);
        (start, start + len)
    }

    fn unexpected(&mut self, expected: &[&str]) -> ParseError {
        let (s, e) = self.next_span();
        let found = match self.text[s..].chars().next() {
            Some(c) => format!("unexpected `{c}`"),
            None => "unexpected end of input".to_string(),
        };
        self.error(s, e, found, expected)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let tok = format!("`{c}`");
            Err(self.unexpected(&[tok.as_str()]))
        }
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..].find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(self.text.len() - start);
        if len == 0 || !self.text[start..].starts_with(|c: char| c.is_ascii_alphabetic()) {
            return None;
        }
        self.pos += len;
        Some((start, &self.text[start..start + len]))
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..].find(|c: char| !c.is_ascii_digit()).unwrap_or(self.text.len() - start);
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &self.text[start..start + len]))
    }

    fn nat(&mut self) -> Result<(usize, BigUint), ParseError> {
        match self.digits() {
            Some((start, d)) => Ok((start, d.parse().expect("ascii digits"))),
            None => Err(self.unexpected(&["natural number"])),
        }
    }

    fn small_nat(&mut self, min: u64, what: &str) -> Result<u64, ParseError> {
        let (start, n) = self.nat()?;
        let end = self.pos;
        match u64::try_from(&n) {
            Ok(v) if v >= min => Ok(v),
            _ => Err(self.error(start, end, format!("{what} must be at least {min}"), &[&format!("integer >= {min}")])),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            Err(self.unexpected(&["end of input"]))
        } else {
            Ok(())
        }
    }
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, ParseError> {
    let mut c = Cursor::new(text);
    let spec = ring_spec(&mut c)?;
    c.finish()?;
    Ok(spec)
}

const RING_KEYWORDS: [&str; 6] = ["Z", "Zn", "Mat", "Tri", "Prod", "Quot"];

fn ring_spec(c: &mut Cursor<'_>) -> Result<RingSpec, ParseError> {
    let Some((start, word)) = c.ident() else {
        return Err(c.unexpected(&RING_KEYWORDS));
    };
    let spec = match word {
        "Z" => return Ok(RingSpec::Integers),
        "Zn" => {
            c.expect('(')?;
            let n = c.small_nat(2, "the modulus")?;
            RingSpec::Residues(n)
        }
        "Mat" | "Tri" => {
            c.expect('(')?;
            let dim = c.small_nat(1, "the dimension")? as usize;
            c.expect(',')?;
            let base = ring_spec(c)?;
            if word == "Mat" {
                RingSpec::mat(dim, base)
            } else {
                RingSpec::tri(dim, base)
            }
        }
        "Prod" => {
            c.expect('(')?;
            let mut factors = vec![ring_spec(c)?];
            c.expect(',')?;
            factors.push(ring_spec(c)?);
            while c.eat(',') {
                factors.push(ring_spec(c)?);
            }
            RingSpec::Product(factors)
        }
        "Quot" => {
            c.expect('(')?;
            let base = ring_spec(c)?;
            c.expect(',')?;
            let ideal = ideal_spec(c)?;
            RingSpec::quot(base, ideal)
        }
        _ => return Err(c.error(start, start + word.len(), format!("unknown ring `{word}`"), &RING_KEYWORDS)),
    };
    c.expect(')')?;
    Ok(spec)
}

fn ideal_spec(c: &mut Cursor<'_>) -> Result<IdealSpec, ParseError> {
    c.expect('<')?;
    if c.eat('*') {
        c.expect('>')?;
        return Ok(IdealSpec::Whole);
    }
    let mut gens = Vec::new();
    if !c.eat('>') {
        gens.push(element(c)?);
        while c.eat(',') {
            gens.push(element(c)?);
        }
        if !c.eat('>') {
            return Err(c.unexpected(&["`,`", "`>`"]));
        }
    }
    Ok(IdealSpec::Generators(gens))
}

pub fn parse_ideal_spec(text: &str) -> Result<IdealSpec, ParseError> {
    let mut c = Cursor::new(text);
    let spec = ideal_spec(&mut c)?;
    c.finish()?;
    Ok(spec)
}

fn element(c: &mut Cursor<'_>) -> Result<ElementLiteral, ParseError> {
    match c.peek() {
        Some('[') => {
            c.expect('[')?;
            let mut rows = vec![row(c)?];
            while c.eat(',') {
                rows.push(row(c)?);
            }
            c.expect(']')?;
            Ok(ElementLiteral::Matrix(rows))
        }
        Some('(') => {
            c.expect('(')?;
            let mut items = vec![element(c)?];
            while c.eat(',') {
                items.push(element(c)?);
            }
            c.expect(')')?;
            Ok(ElementLiteral::Tuple(items))
        }
        Some('-') => {
            c.expect('-')?;
            let (_, n) = c.nat()?;
            Ok(ElementLiteral::Integer(-BigInt::from(n)))
        }
        Some(d) if d.is_ascii_digit() => Ok(ElementLiteral::Integer(c.nat()?.1.into())),
        _ => Err(c.unexpected(&["integer", "`[`", "`(`"])),
    }
}

fn row(c: &mut Cursor<'_>) -> Result<Vec<ElementLiteral>, ParseError> {
    c.expect('[')?;
    let mut out = vec![element(c)?];
    while c.eat(',') {
        out.push(element(c)?);
    }
    c.expect(']')?;
    Ok(out)
}

pub fn parse_element_literal(text: &str) -> Result<ElementLiteral, ParseError> {
    let mut c = Cursor::new(text);
    let e = element(&mut c)?;
    c.finish()?;
    Ok(e)
}

/// An element literal typed against `ring`. Residues are reduced.
pub fn parse_element(ring: &Ring, text: &str) -> Result<Element> {
    ring.element_from_literal(&parse_element_literal(text)?)
}

fn value(c: &mut Cursor<'_>) -> Result<BigRational, ParseError> {
    let (start, whole) = match c.digits() {
        Some((s, d)) => (s, d.parse::<BigInt>().expect("ascii digits")),
        None => return Err(c.unexpected(&["value"])),
    };
    if c.text[c.pos..].starts_with('/') {
        c.pos += 1;
        let (_, den) = c.nat()?;
        if den.is_zero() {
            return Err(c.error(start, c.pos, "zero denominator", &["positive denominator"]));
        }
        return Ok(BigRational::new(whole, den.into()));
    }
    if c.text[c.pos..].starts_with('.') {
        c.pos += 1;
        let frac_start = c.pos;
        let len = c.text[frac_start..].find(|ch: char| !ch.is_ascii_digit()).unwrap_or(c.text.len() - frac_start);
        if len == 0 || len > MAX_FRACTION_DIGITS {
            return Err(c.error(
                start,
                frac_start + len,
                format!("decimal values take 1 to {MAX_FRACTION_DIGITS} fraction digits"),
                &["fraction digits"],
            ));
        }
        c.pos += len;
        let frac: BigInt = c.text[frac_start..frac_start + len].parse().expect("ascii digits");
        let scale = BigInt::from(10u32).pow(len as u32);
        return Ok(BigRational::new(whole * &scale + frac, scale));
    }
    Ok(BigRational::from_integer(whole))
}

/// A membership value: `p/q`, an integer, or a decimal with at most six
/// fraction digits, read exactly.
pub fn parse_value(text: &str) -> Result<Membership, ParseError> {
    let mut c = Cursor::new(text);
    let v = value(&mut c)?;
    c.finish()?;
    Ok(v)
}

/// Comma-separated values, as used for palettes and grids.
pub fn parse_value_list(text: &str) -> Result<Vec<Membership>, ParseError> {
    let mut c = Cursor::new(text);
    let mut out = vec![value(&mut c)?];
    while c.eat(',') {
        out.push(value(&mut c)?);
    }
    c.finish()?;
    Ok(out)
}

/// A fuzzy ideal written as a cut chain, before typing against a ring.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzySpec {
    pub levels: Vec<(Membership, IdealSpec)>,
    /// Source span of each level.
    pub spans: Vec<SourceSpan>,
}

pub fn parse_fuzzy_syntax(text: &str) -> Result<FuzzySpec, ParseError> {
    let mut c = Cursor::new(text);
    c.expect('{')?;
    let mut levels = Vec::new();
    let mut spans = Vec::new();
    loop {
        c.skip_ws();
        let start = c.pos;
        let v = value(&mut c)?;
        c.expect(':')?;
        let ideal = ideal_spec(&mut c)?;
        spans.push(SourceSpan::new(start, c.pos));
        levels.push((v, ideal));
        if c.eat('}') {
            break;
        }
        if !c.eat(',') {
            return Err(c.unexpected(&["`,`", "`}`"]));
        }
    }
    c.finish()?;
    Ok(FuzzySpec { levels, spans })
}

/// The ideal generated by `spec`, joined with `base`.
fn ideal_of(ring: &Ring, spec: &IdealSpec, base: Option<&CrispIdeal>) -> Result<CrispIdeal> {
    let own = match spec {
        IdealSpec::Whole => CrispIdeal::whole(ring),
        IdealSpec::Generators(gens) => {
            let elems: Vec<Element> = gens.iter().map(|g| ring.element_from_literal(g)).collect::<Result<_>>()?;
            if elems.is_empty() {
                CrispIdeal::zero(ring)
            } else {
                ideal_generate(ring, &elems)?
            }
        }
    };
    Ok(match base {
        Some(b) => own.sum(ring, b),
        None => own,
    })
}

/// Parses a cut chain; each level is generated by its elements together
/// with all earlier levels.
pub fn parse_fuzzy_spec(ring: &Ring, text: &str) -> Result<FuzzyIdeal<Membership>> {
    let spec = parse_fuzzy_syntax(text)?;
    let mut chain: Vec<(CrispIdeal, Membership)> = Vec::with_capacity(spec.levels.len());
    for (v, ideal) in &spec.levels {
        if *v < BigRational::zero() || *v > BigRational::one() {
            return Err(Error::ValueOutOfRange(v.to_string()));
        }
        let c = ideal_of(ring, ideal, chain.last().map(|(c, _)| c))?;
        chain.push((c, v.clone()));
    }
    FuzzyIdeal::from_chain(ring, chain)
}
