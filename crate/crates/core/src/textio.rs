//! Bit-exact text format for polynomials, plus JSON emission.
//!
//! Grammar (whitespace insignificant, juxtaposition multiplies):
//!
//! ```text
//! poly     := ['-'] term (('+'|'-') term)*
//! term     := [coeff] factor* ;  at least one of coeff / factors
//! coeff    := rational ['*'? 'i'] | 'i'
//! rational := integer ['/' positive-integer]
//! factor   := ('x'|'q') index ['^' natural]
//! ```
//!
//! `x` indices run over `1..=2n`, `q` indices over `1..=n`. The serializer
//! emits terms in canonical order with normalized signs, so serialization is
//! byte-identical across runs for equal inputs, and `parse . serialize` is
//! the identity on canonical polynomials.

use crate::error::{Error, Result};
use crate::poly::{Monomial, SPoly, VarBank};
use crate::scalar::{Rational, Scalar, ScalarMode};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// Parses a polynomial over the Gaussian rationals.
pub fn parse(src: &str, n: usize) -> Result<SPoly> {
    parse_with_mode(src, n, ScalarMode::Gaussian)
}

/// Parses a polynomial; in `Rational` mode the imaginary unit is rejected
/// with a positioned error.
pub fn parse_with_mode(src: &str, n: usize, mode: ScalarMode) -> Result<SPoly> {
    Parser {
        src,
        chars: src.char_indices().peekable(),
        n,
        mode,
    }
    .parse_poly()
}

struct Parser<'s> {
    src: &'s str,
    chars: std::iter::Peekable<std::str::CharIndices<'s>>,
    n: usize,
    mode: ScalarMode,
}

impl<'s> Parser<'s> {
    fn error(&self, offset: usize, message: impl Into<String>) -> Error {
        let mut line = 1;
        let mut column = 1;
        for (i, ch) in self.src.char_indices() {
            if i >= offset {
                break;
            }
            if ch == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn eof_offset(&self) -> usize {
        self.src.len()
    }

    fn parse_poly(mut self) -> Result<SPoly> {
        let mut poly = SPoly::zero(self.n);
        let mut negate = false;
        match self.peek() {
            None => {
                return Err(self.error(self.eof_offset(), "empty input"));
            }
            Some((_, '-')) => {
                self.chars.next();
                negate = true;
            }
            _ => {}
        }
        loop {
            let (mono, coeff) = self.parse_term()?;
            let signed = if negate { -&coeff } else { coeff };
            poly = poly.try_add(&SPoly::from_monomial(self.n, mono, signed))?;
            match self.peek() {
                None => return Ok(poly),
                Some((_, '+')) => {
                    self.chars.next();
                    negate = false;
                }
                Some((_, '-')) => {
                    self.chars.next();
                    negate = true;
                }
                Some((off, c)) => {
                    return Err(self.error(off, format!("expected '+' or '-', found '{}'", c)));
                }
            }
        }
    }

    fn parse_term(&mut self) -> Result<(Monomial, Scalar)> {
        let start = match self.peek() {
            Some(p) => p,
            None => return Err(self.error(self.eof_offset(), "expected a term")),
        };
        let mut coeff = Scalar::one();
        let mut saw_anything = false;

        if start.1.is_ascii_digit() {
            let r = self.parse_rational()?;
            coeff = Scalar::real(r);
            saw_anything = true;
            // optional '*'? 'i'
            if let Some((_, '*')) = self.peek() {
                let (off, _) = self.peek().unwrap();
                self.chars.next();
                match self.peek() {
                    Some((_, 'i')) => {}
                    _ => return Err(self.error(off, "'*' must be followed by 'i'")),
                }
            }
            if let Some((off, 'i')) = self.peek() {
                self.require_gaussian(off)?;
                self.chars.next();
                coeff = coeff * Scalar::i();
            }
        } else if start.1 == 'i' {
            self.require_gaussian(start.0)?;
            self.chars.next();
            coeff = Scalar::i();
            saw_anything = true;
        }

        let mut mono = Monomial::unit(self.n);
        loop {
            match self.peek() {
                Some((_, c)) if c == 'x' || c == 'q' => {
                    let (bank, idx0, exp) = self.parse_factor()?;
                    let mut xexp = mono.xexp().to_vec();
                    let mut qexp = mono.qexp().to_vec();
                    match bank {
                        VarBank::Base => xexp[idx0] += exp,
                        VarBank::Spinor => qexp[idx0] += exp,
                    }
                    mono = Monomial::from_exps(xexp, qexp);
                    saw_anything = true;
                }
                _ => break,
            }
        }

        if !saw_anything {
            return Err(self.error(start.0, format!("expected a term, found '{}'", start.1)));
        }
        Ok((mono, coeff))
    }

    fn require_gaussian(&self, offset: usize) -> Result<()> {
        if self.mode == ScalarMode::Rational {
            Err(self.error(
                offset,
                "imaginary unit is unavailable in rational scalar mode",
            ))
        } else {
            Ok(())
        }
    }

    fn parse_factor(&mut self) -> Result<(VarBank, usize, u32)> {
        let (off, c) = self.peek().unwrap();
        self.chars.next();
        let bank = if c == 'x' { VarBank::Base } else { VarBank::Spinor };
        let index = self.parse_digits(off, "variable index")? as usize;
        let max = match bank {
            VarBank::Base => 2 * self.n,
            VarBank::Spinor => self.n,
        };
        if index == 0 || index > max {
            return Err(self.error(
                off,
                format!(
                    "{}{} out of range for n = {} (valid indices 1..={})",
                    c, index, self.n, max
                ),
            ));
        }
        let mut exp = 1u32;
        if let Some((_, '^')) = self.peek() {
            let (coff, _) = self.peek().unwrap();
            self.chars.next();
            let raw = self.parse_digits(coff, "exponent")?;
            if raw > 1_000_000 {
                return Err(self.error(coff, format!("exponent {} too large", raw)));
            }
            exp = raw as u32;
        }
        Ok((bank, index - 1, exp))
    }

    /// A run of digits; whitespace before it is insignificant, like
    /// everywhere else in the grammar.
    fn parse_digits(&mut self, context_off: usize, what: &str) -> Result<u64> {
        self.skip_ws();
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some((_, c)) if c.is_ascii_digit()) {
            digits.push(self.chars.next().unwrap().1);
        }
        if digits.is_empty() {
            return Err(self.error(context_off, format!("expected {}", what)));
        }
        digits
            .parse::<u64>()
            .map_err(|_| self.error(context_off, format!("{} too large", what)))
    }

    fn parse_rational(&mut self) -> Result<Rational> {
        let (off, _) = self.peek().unwrap();
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some((_, c)) if c.is_ascii_digit()) {
            digits.push(self.chars.next().unwrap().1);
        }
        let numer: BigInt = digits.parse().expect("digit string");
        if let Some((_, '/')) = self.peek() {
            let (soff, _) = self.peek().unwrap();
            self.chars.next();
            self.skip_ws();
            let mut den = String::new();
            while matches!(self.chars.peek(), Some((_, c)) if c.is_ascii_digit()) {
                den.push(self.chars.next().unwrap().1);
            }
            if den.is_empty() {
                return Err(self.error(soff, "expected denominator after '/'"));
            }
            let denom: BigInt = den.parse().expect("digit string");
            if denom.is_zero() {
                return Err(self.error(soff, "zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            let _ = off;
            Ok(Rational::from_integer(numer))
        }
    }
}

fn rational_text(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn push_factors(out: &mut String, m: &Monomial) {
    for (i, &e) in m.xexp().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&format!("x{}", i + 1));
        if e > 1 {
            out.push_str(&format!("^{}", e));
        }
    }
    for (j, &e) in m.qexp().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&format!("q{}", j + 1));
        if e > 1 {
            out.push_str(&format!("^{}", e));
        }
    }
}

/// One textual term: magnitude text plus sign, for a pure-real or
/// pure-imaginary coefficient part. A rational coefficient juxtaposes onto
/// the first factor ("2x1"), while "i" is space-separated ("1/2 i q1").
fn term_text(mag: &Rational, imaginary: bool, m: &Monomial) -> String {
    let mut factors = String::new();
    push_factors(&mut factors, m);
    let mut body = String::new();
    if !mag.is_one() || (factors.is_empty() && !imaginary) {
        body.push_str(&rational_text(mag));
    }
    if imaginary {
        if !body.is_empty() {
            body.push(' ');
        }
        body.push('i');
        if !factors.is_empty() {
            body.push(' ');
        }
    }
    body.push_str(&factors);
    body
}

/// Canonical serialization. A Gaussian coefficient `a + b*i` is emitted as
/// two adjacent terms (real part first), which reparse to the same value.
pub fn serialize(p: &SPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    let mut emit = |negative: bool, body: String| {
        if first {
            if negative {
                out.push('-');
            }
            out.push_str(&body);
            first = false;
        } else {
            out.push_str(if negative { " - " } else { " + " });
            out.push_str(&body);
        }
    };
    for (m, c) in p.terms() {
        if !c.re().is_zero() {
            emit(c.re().is_negative(), term_text(&c.re().abs(), false, m));
        }
        if !c.im().is_zero() {
            emit(c.im().is_negative(), term_text(&c.im().abs(), true, m));
        }
    }
    out
}

/// JSON emission: a list of term objects in canonical order, with rationals
/// rendered as exact `p/q` strings (never floats).
pub fn to_json(p: &SPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            json!({
                "xexp": m.xexp(),
                "qexp": m.qexp(),
                "re": rational_text(c.re()),
                "im": rational_text(c.im()),
            })
        })
        .collect();
    Value::Array(terms)
}

impl std::fmt::Display for SPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", serialize(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_the_monogenic_example() {
        let p = parse("2x1 - x2 q1^2", 1).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(serialize(&p), "2x1 - x2 q1^2");
    }

    #[test]
    fn reads_gaussian_coefficients() {
        let p = parse("1/2 i q1", 1).unwrap();
        let q = parse("i q1", 1).unwrap().scale(&Scalar::from_ratio(1, 2));
        assert_eq!(p, q);
        assert_eq!(serialize(&p), "1/2 i q1");
    }

    #[test]
    fn index_out_of_range_carries_position() {
        match parse("x3", 1) {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (1, 1));
                assert!(message.contains("x3"), "{}", message);
            }
            other => panic!("expected parse error, got {:?}", other),
        }
        assert!(parse("q2", 1).is_err());
    }

    #[test]
    fn zero_denominator_rejected() {
        match parse("1/0 x1", 1) {
            Err(Error::Parse { message, .. }) => assert!(message.contains("zero denominator")),
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn rational_mode_rejects_imaginary_unit() {
        assert!(parse_with_mode("i q1", 1, ScalarMode::Rational).is_err());
        assert!(parse_with_mode("2 q1", 1, ScalarMode::Rational).is_ok());
    }

    #[test]
    fn zero_serializes_as_zero() {
        assert_eq!(serialize(&SPoly::zero(2)), "0");
        assert_eq!(serialize(&parse("x1 - x1", 1).unwrap()), "0");
    }

    #[test]
    fn mixed_gaussian_coefficient_round_trips() {
        let p = parse("x1 + i x1 - 3/2 i + 2", 1).unwrap();
        assert_eq!(serialize(&p), "2 - 3/2 i + x1 + i x1");
        assert_eq!(parse(&serialize(&p), 1).unwrap(), p);
    }

    #[test]
    fn json_shape() {
        let v = to_json(&parse("q1", 1).unwrap());
        assert_eq!(
            v,
            serde_json::json!([{"xexp": [0, 0], "qexp": [1], "re": "1", "im": "0"}])
        );
    }

    #[test]
    fn syntax_error_positions() {
        match parse("x1 +\n+ x2", 1) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 1)),
            other => panic!("expected parse error, got {:?}", other),
        }
        assert!(parse("", 1).is_err());
        assert!(parse("x", 1).is_err());
        assert!(parse("2 ^", 1).is_err());
        assert!(parse("x1 x2 &", 1).is_err());
        assert!(parse("x1^4294967297", 1).is_err());
        assert!(parse("2 3", 1).is_err());
        assert!(parse("λx1", 1).is_err());
    }
}
