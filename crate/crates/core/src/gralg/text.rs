//! Plain-text ideal presentations.
//!
//! ```text
//! # sl2 graph ideal
//! vars 6
//! x1^2 + x2 x3 - x4^2 - x5 x6
//! ```
//!
//! The header is `vars n` optionally followed by `n` variable degrees.
//! Each further non-blank line is one generator: terms `coeff*monomial`
//! joined by `+` or `-`, monomials written as space-separated factors
//! `x<k>` or `x<k>^<e>` with 1-based `k`. Coefficients are integers or
//! `p/q`. Everything after `#` is ignored.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ideal::IdealPresentation;
use super::poly::Poly;
use super::ring::{grevlex, GradedRing};
use crate::error::{Error, Result};
use crate::exactlin::Rational;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_presentation(text: &str) -> Result<IdealPresentation> {
    let mut ring: Option<GradedRing> = None;
    let mut generators = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match &ring {
            None => ring = Some(parse_header(line, line_no)?),
            Some(r) => generators.push(parse_poly(line, r.nvars(), line_no)?),
        }
    }
    let ring = ring.ok_or_else(|| parse_err(0, "missing `vars` header"))?;
    IdealPresentation::new(ring, generators)
}

fn parse_header(line: &str, line_no: usize) -> Result<GradedRing> {
    let mut words = line.split_whitespace();
    if words.next() != Some("vars") {
        return Err(parse_err(line_no, "expected `vars n [d_1 ... d_n]`"));
    }
    let n: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| parse_err(line_no, "`vars` needs a variable count"))?;
    let degrees: Vec<usize> = words
        .map(|w| w.parse::<usize>().map_err(|_| parse_err(line_no, format!("bad degree `{w}`"))))
        .collect::<Result<_>>()?;
    if degrees.is_empty() {
        return Ok(GradedRing::standard(n));
    }
    if degrees.len() != n {
        return Err(parse_err(line_no, format!("expected {n} degrees, found {}", degrees.len())));
    }
    GradedRing::weighted(degrees).ok_or_else(|| parse_err(line_no, "variable degrees must be positive"))
}

/// Parses one polynomial in `nvars` variables.
pub fn parse_poly(line: &str, nvars: usize, line_no: usize) -> Result<Poly> {
    let mut poly = Poly::zero(nvars);
    let mut sign_negative = false;
    let mut body = String::new();
    let mut seen_term = false;
    let flush = |body: &mut String, negative: bool, poly: &mut Poly, seen: &mut bool| -> Result<()> {
        let trimmed = body.trim();
        if trimmed.is_empty() {
            if *seen {
                return Err(parse_err(line_no, "empty term"));
            }
            return Ok(());
        }
        let (exps, mut c) = parse_term(trimmed, nvars, line_no)?;
        if negative {
            c = -c;
        }
        poly.add_term(exps, c);
        *seen = true;
        body.clear();
        Ok(())
    };
    for ch in line.chars() {
        if ch == '+' || ch == '-' {
            let was_empty = body.trim().is_empty();
            if was_empty && seen_term {
                return Err(parse_err(line_no, format!("dangling `{ch}`")));
            }
            flush(&mut body, sign_negative, &mut poly, &mut seen_term)?;
            sign_negative = ch == '-';
            seen_term = true;
        } else {
            body.push(ch);
        }
    }
    if body.trim().is_empty() {
        return Err(parse_err(line_no, "expression ends without a term"));
    }
    flush(&mut body, sign_negative, &mut poly, &mut seen_term)?;
    Ok(poly)
}

fn parse_term(term: &str, nvars: usize, line_no: usize) -> Result<(Vec<u32>, Rational)> {
    let mut exps = vec![0u32; nvars];
    let mut coeff = Rational::one();
    let mut saw_coeff = false;
    for (k, factor) in term.split(|c: char| c == '*' || c.is_whitespace()).filter(|f| !f.is_empty()).enumerate() {
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            if k != 0 || saw_coeff {
                return Err(parse_err(line_no, format!("coefficient `{factor}` must lead its term")));
            }
            coeff = parse_rational(factor).ok_or_else(|| parse_err(line_no, format!("bad coefficient `{factor}`")))?;
            saw_coeff = true;
            continue;
        }
        let rest = factor
            .strip_prefix('x')
            .ok_or_else(|| parse_err(line_no, format!("unexpected token `{factor}`")))?;
        let (idx, pow) = match rest.split_once('^') {
            Some((i, p)) => (i, p),
            None => (rest, "1"),
        };
        let idx: usize = idx.parse().map_err(|_| parse_err(line_no, format!("bad variable `{factor}`")))?;
        let pow: u32 = pow.parse().map_err(|_| parse_err(line_no, format!("bad exponent in `{factor}`")))?;
        if idx == 0 || idx > nvars {
            return Err(parse_err(line_no, format!("variable x{idx} outside x1..x{nvars}")));
        }
        exps[idx - 1] += pow;
    }
    Ok((exps, coeff))
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if !num.bytes().all(|b| b.is_ascii_digit()) || !den.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Writes a polynomial in the presentation syntax, terms in decreasing
/// graded reverse lexicographic order.
pub fn format_poly(p: &Poly, ring: &GradedRing) -> String {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| {
        ring.degree_of(b).cmp(&ring.degree_of(a)).then_with(|| grevlex(a, b).reverse())
    });
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(v, &k)| if k == 1 { format!("x{}", v + 1) } else { format!("x{}^{}", v + 1, k) })
            .collect();
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono.join(" "));
        } else {
            out.push_str(&format!("{abs}*{}", mono.join(" ")));
        }
    }
    out
}

impl fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.ring();
        write!(f, "vars {}", ring.nvars())?;
        if !ring.is_standard() {
            for d in ring.var_degrees() {
                write!(f, " {d}")?;
            }
        }
        writeln!(f)?;
        for g in self.generators() {
            writeln!(f, "{}", format_poly(g, ring))?;
        }
        Ok(())
    }
}
