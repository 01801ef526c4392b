//! Text grammar for quaternion literals.
//!
//! Two forms are accepted:
//!
//! * signed terms in any order, e.g. `1-2i+0.5k`, `-k`, `3j + 1e-3`;
//! * positional `(w, x, y, z)`.
//!
//! Whitespace between tokens is ignored. Each unit (real, `i`, `j`, `k`) may
//! appear at most once.

use std::fmt;
use std::str::FromStr;

use crate::quaternion::Quaternion;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Zero-based character offset of the offending token.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

impl FromStr for Quaternion {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_quaternion(s)
    }
}

pub fn parse_quaternion(text: &str) -> Result<Quaternion, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    p.skip_ws();
    let q = if p.peek() == Some('(') {
        p.positional()?
    } else {
        p.terms()?
    };
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected character '{c}', expected '+', '-' or end of input")));
    }
    // -0.0 never survives formatting, so normalise it away here.
    Ok(Quaternion::new(q.w + 0.0, q.x + 0.0, q.y + 0.0, q.z + 0.0))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Unit {
    Real,
    I,
    J,
    K,
}

impl Unit {
    fn index(self) -> usize {
        self as usize
    }

    fn name(self) -> &'static str {
        match self {
            Unit::Real => "real part",
            Unit::I => "unit i",
            Unit::J => "unit j",
            Unit::K => "unit k",
        }
    }
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        }
    }

    fn sign(&mut self) -> Option<f64> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(1.0)
            }
            Some('-') => {
                self.pos += 1;
                Some(-1.0)
            }
            _ => None,
        }
    }

    fn unit(&mut self) -> Option<Unit> {
        let u = match self.peek()? {
            'i' => Unit::I,
            'j' => Unit::J,
            'k' => Unit::K,
            _ => return None,
        };
        self.pos += 1;
        Some(u)
    }

    /// Unsigned decimal with optional fraction and exponent.
    fn number(&mut self) -> Result<Option<f64>, ParseError> {
        let start = self.pos;
        let digits = |p: &mut Parser| {
            let s = p.pos;
            while p.peek().is_some_and(|c| c.is_ascii_digit()) {
                p.pos += 1;
            }
            p.pos - s
        };
        let mut mantissa = digits(self);
        if self.peek() == Some('.') {
            self.pos += 1;
            mantissa += digits(self);
        }
        if mantissa == 0 {
            self.pos = start;
            return Ok(None);
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            self.pos += 1;
            if matches!(self.peek(), Some('+' | '-')) {
                self.pos += 1;
            }
            if digits(self) == 0 {
                return Err(self.error(format!("expected exponent digits, found {}", self.found())));
            }
        }
        let literal: String = self.chars[start..self.pos].iter().collect();
        let value: f64 = literal.parse().map_err(|_| ParseError {
            position: start,
            message: format!("malformed number '{literal}'"),
        })?;
        if !value.is_finite() {
            return Err(ParseError {
                position: start,
                message: format!("number '{literal}' is out of range"),
            });
        }
        Ok(Some(value))
    }

    fn terms(&mut self) -> Result<Quaternion, ParseError> {
        let mut comps = [0.0f64; 4];
        let mut seen = [false; 4];
        let mut first = true;
        loop {
            self.skip_ws();
            if !first && self.peek().is_none() {
                break;
            }
            let term_start = self.pos;
            let sign = match self.sign() {
                Some(s) => s,
                None if first => 1.0,
                None => {
                    return Err(self.error(format!("expected '+' or '-', found {}", self.found())))
                }
            };
            self.skip_ws();
            let coeff = self.number()?;
            self.skip_ws();
            let unit = self.unit();
            let (value, unit) = match (coeff, unit) {
                (Some(v), Some(u)) => (v, u),
                (Some(v), None) => (v, Unit::Real),
                (None, Some(u)) => (1.0, u),
                (None, None) => {
                    return Err(self.error(format!(
                        "expected a number or one of 'i', 'j', 'k', found {}",
                        self.found()
                    )))
                }
            };
            if seen[unit.index()] {
                return Err(ParseError {
                    position: term_start,
                    message: format!("duplicate {}", unit.name()),
                });
            }
            seen[unit.index()] = true;
            comps[unit.index()] = sign * value;
            first = false;
            self.skip_ws();
            if !matches!(self.peek(), Some('+' | '-')) {
                break;
            }
        }
        Ok(Quaternion::from_array(comps))
    }

    fn positional(&mut self) -> Result<Quaternion, ParseError> {
        self.pos += 1; // '('
        let mut comps = [0.0f64; 4];
        for (n, slot) in comps.iter_mut().enumerate() {
            self.skip_ws();
            let sign = self.sign().unwrap_or(1.0);
            self.skip_ws();
            let Some(v) = self.number()? else {
                return Err(self.error(format!("expected a number, found {}", self.found())));
            };
            *slot = sign * v;
            self.skip_ws();
            let want = if n < 3 { ',' } else { ')' };
            if self.peek() != Some(want) {
                return Err(self.error(format!("expected '{want}', found {}", self.found())));
            }
            self.pos += 1;
        }
        Ok(Quaternion::from_array(comps))
    }
}

/// Shortest decimal that round-trips, without a trailing `.0`.
pub fn format_shortest(v: f64) -> String {
    let s = format!("{v:?}");
    match s.strip_suffix(".0") {
        Some(t) => t.to_string(),
        None => s,
    }
}

/// Rounded to `digits` significant digits, then printed in shortest form.
pub fn format_significant(v: f64, digits: usize) -> String {
    let rounded: f64 = format!("{:.*e}", digits.saturating_sub(1), v)
        .parse()
        .unwrap_or(v);
    let rounded = if rounded.is_finite() { rounded } else { v };
    format_shortest(rounded + 0.0)
}

/// Renders `q` in term form using `fmt_num` for the magnitudes.
/// Zero components are omitted and unit coefficients are elided (`i`, `-k`).
pub fn format_terms(q: Quaternion, fmt_num: impl Fn(f64) -> String) -> String {
    let mut out = String::new();
    for (value, unit) in q.to_array().into_iter().zip(["", "i", "j", "k"]) {
        let mag = fmt_num(value.abs());
        if mag == "0" {
            continue;
        }
        if value < 0.0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if unit.is_empty() || mag != "1" {
            out.push_str(&mag);
        }
        out.push_str(unit);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
