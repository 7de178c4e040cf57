//! Line-oriented ring-spec format:
//!
//! ```text
//! field QQ            # or: field GF 7
//! var x deg 1         # one per variable, in order
//! var y deg 1
//! q 1 2 -1            # q[i][j] for i < j; omitted entries are 1
//! rel x^2
//! rel x*y + 2*y^2
//! bounds hdeg 4 ideg 10
//! ```
//!
//! Relations accept `*` products, `^` powers, integer or `a/b` scalars and
//! parentheses-free sums. `#` starts a comment.

use std::fmt::Write as _;
use std::sync::Arc;

use skewdg::{Field, FieldElement, QuotientRing, RingElement, SkewPolyRing};

#[derive(Debug)]
pub struct SpecError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl std::fmt::Display for SpecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, col {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for SpecError {}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, SpecError> {
    Err(SpecError { line, col, message: message.into() })
}

/// A parsed and validated ring spec.
#[derive(Debug)]
pub struct RingSpec {
    pub field: Field,
    pub ring: Arc<SkewPolyRing>,
    pub relations: Vec<RingElement>,
    pub hdeg: u32,
    pub ideg: u32,
}

impl RingSpec {
    /// Build the quotient with the Groebner basis completed to `ideg`.
    pub fn quotient(&self, ideg: u32) -> skewdg::Result<Arc<QuotientRing>> {
        QuotientRing::new(self.ring.clone(), self.relations.clone(), ideg)
    }

    /// Canonical printed form; `parse(print(spec))` reproduces the spec.
    pub fn print(&self) -> String {
        let mut out = String::new();
        match self.field {
            Field::Rationals => out.push_str("field QQ\n"),
            Field::Prime(p) => {
                let _ = writeln!(out, "field GF {p}");
            }
        }
        for i in 0..self.ring.num_vars() {
            let _ = writeln!(out, "var {} deg {}", self.ring.var_name(i), self.ring.var_degree(i));
        }
        for i in 0..self.ring.num_vars() {
            for j in (i + 1)..self.ring.num_vars() {
                let entry = self.ring.q_entry(i, j);
                if !entry.is_one() {
                    let _ = writeln!(out, "q {} {} {}", i + 1, j + 1, entry);
                }
            }
        }
        for rel in &self.relations {
            let _ = writeln!(out, "rel {rel}");
        }
        let _ = writeln!(out, "bounds hdeg {} ideg {}", self.hdeg, self.ideg);
        out
    }
}

/// Parse a ring spec. With `check_normal`, non-normal or internally
/// inhomogeneous relations are rejected (every command except `check-normal`
/// wants that).
pub fn parse_ring_spec(text: &str, check_normal: bool) -> Result<RingSpec, SpecError> {
    let mut field: Option<Field> = None;
    let mut names: Vec<String> = Vec::new();
    let mut degrees: Vec<u32> = Vec::new();
    let mut q_entries: Vec<(usize, usize, FieldElement)> = Vec::new();
    let mut rel_lines: Vec<(usize, String)> = Vec::new();
    let mut bounds: Option<(u32, u32)> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let stripped = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        let trimmed = stripped.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut words = trimmed.split_whitespace();
        let keyword = words.next().unwrap();
        match keyword {
            "field" => {
                let kind = words.next().ok_or_else(|| SpecError {
                    line,
                    col: 1,
                    message: "expected QQ or GF <p>".into(),
                })?;
                field = Some(match kind {
                    "QQ" => Field::Rationals,
                    "GF" => {
                        let p: u64 = words
                            .next()
                            .and_then(|w| w.parse().ok())
                            .ok_or_else(|| SpecError { line, col: 1, message: "expected prime after GF".into() })?;
                        match Field::prime(p) {
                            Ok(f) => f,
                            Err(e) => return err(line, 1, e.to_string()),
                        }
                    }
                    other => return err(line, 1, format!("unknown field {other}")),
                });
            }
            "var" => {
                let name = match words.next() {
                    Some(w) => w.to_string(),
                    None => return err(line, 1, "expected variable name"),
                };
                if names.contains(&name) {
                    return err(line, 1, format!("duplicate variable {name}"));
                }
                match (words.next(), words.next()) {
                    (Some("deg"), Some(d)) => match d.parse::<u32>() {
                        Ok(d) if d >= 1 => {
                            names.push(name);
                            degrees.push(d);
                        }
                        _ => return err(line, 1, "internal degree must be a positive integer"),
                    },
                    _ => return err(line, 1, "expected `deg <d>`"),
                }
            }
            "q" => {
                let f = field.ok_or_else(|| SpecError {
                    line,
                    col: 1,
                    message: "field must be declared before q entries".into(),
                })?;
                let i: usize = match words.next().and_then(|w| w.parse().ok()) {
                    Some(i) => i,
                    None => return err(line, 1, "expected row index"),
                };
                let j: usize = match words.next().and_then(|w| w.parse().ok()) {
                    Some(j) => j,
                    None => return err(line, 1, "expected column index"),
                };
                let scalar_text = match words.next() {
                    Some(w) => w,
                    None => return err(line, 1, "expected scalar"),
                };
                let value = parse_scalar(scalar_text, f, line)?;
                if i == j {
                    if !value.is_one() {
                        return err(line, 1, "diagonal must be 1");
                    }
                    continue;
                }
                if i == 0 || j == 0 || i > names.len() || j > names.len() {
                    return err(line, 1, format!("q index ({i},{j}) out of range"));
                }
                if value.is_zero() {
                    return err(line, 1, "q entries must be nonzero");
                }
                let (a, b, v) = if i < j { (i, j, value) } else { (j, i, value.inv()) };
                q_entries.push((a - 1, b - 1, v));
            }
            "rel" => {
                let rest = trimmed.strip_prefix("rel").unwrap().trim().to_string();
                if rest.is_empty() {
                    return err(line, 4, "empty relation");
                }
                rel_lines.push((line, rest));
            }
            "bounds" => {
                let parts: Vec<&str> = words.collect();
                if parts.len() != 4 || parts[0] != "hdeg" || parts[2] != "ideg" {
                    return err(line, 1, "expected `bounds hdeg <N> ideg <D>`");
                }
                let n: u32 = match parts[1].parse() {
                    Ok(n) => n,
                    Err(_) => return err(line, 1, "bad hdeg"),
                };
                let d: u32 = match parts[3].parse() {
                    Ok(d) => d,
                    Err(_) => return err(line, 1, "bad ideg"),
                };
                bounds = Some((n, d));
            }
            other => return err(line, 1, format!("unknown keyword {other}")),
        }
    }

    let field = match field {
        Some(f) => f,
        None => return err(0, 0, "missing `field` line"),
    };
    if names.is_empty() {
        return err(0, 0, "no variables declared");
    }
    let ring = match SkewPolyRing::new(field, names.clone(), degrees, &q_entries) {
        Ok(r) => r,
        Err(e) => return err(0, 0, e.to_string()),
    };

    let mut relations = Vec::new();
    for (line, text) in rel_lines {
        let el = parse_polynomial(&text, &ring, line)?;
        if el.is_zero() {
            return err(line, 1, "relation is zero");
        }
        if check_normal {
            if el.homogeneous_degree().is_none() {
                return err(line, 1, format!("relation not homogeneous: {el}"));
            }
            match el.is_normal() {
                Ok(Some(_)) => {}
                Ok(None) => return err(line, 1, format!("relation not normal: {el}")),
                Err(e) => return err(line, 1, e.to_string()),
            }
        }
        relations.push(el);
    }

    let (hdeg, ideg) = bounds.unwrap_or((4, 10));
    Ok(RingSpec { field, ring, relations, hdeg, ideg })
}

fn parse_scalar(text: &str, field: Field, line: usize) -> Result<FieldElement, SpecError> {
    let (num_text, den_text) = match text.split_once('/') {
        Some((a, b)) => (a, b),
        None => (text, "1"),
    };
    let num: i64 = match num_text.parse() {
        Ok(n) => n,
        Err(_) => return err(line, 1, format!("bad scalar {text}")),
    };
    let den: i64 = match den_text.parse() {
        Ok(n) => n,
        Err(_) => return err(line, 1, format!("bad scalar {text}")),
    };
    match field.rational(num, den) {
        Ok(v) => Ok(v),
        Err(e) => err(line, 1, e.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Name(String),
    Int(i64),
    Slash,
    Caret,
    Star,
    Plus,
    Minus,
}

fn tokenize(text: &str, line: usize) -> Result<Vec<(usize, Token)>, SpecError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        match c {
            ' ' | '\t' => {
                k += 1;
            }
            '/' => {
                out.push((col, Token::Slash));
                k += 1;
            }
            '^' => {
                out.push((col, Token::Caret));
                k += 1;
            }
            '*' => {
                out.push((col, Token::Star));
                k += 1;
            }
            '+' => {
                out.push((col, Token::Plus));
                k += 1;
            }
            '-' => {
                out.push((col, Token::Minus));
                k += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let s: String = chars[start..k].iter().collect();
                match s.parse() {
                    Ok(n) => out.push((start + 1, Token::Int(n))),
                    Err(_) => return err(line, start + 1, "integer overflow"),
                }
            }
            _ if c.is_alphabetic() || c == '_' => {
                let start = k;
                while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                out.push((start + 1, Token::Name(chars[start..k].iter().collect())));
            }
            other => return err(line, col, format!("unexpected character {other:?}")),
        }
    }
    Ok(out)
}

/// Parse `term (+|- term)*` where a term is `factor (* factor)*` and a
/// factor is a scalar or a variable with an optional `^` power.
pub fn parse_polynomial(
    text: &str,
    ring: &Arc<SkewPolyRing>,
    line: usize,
) -> Result<RingElement, SpecError> {
    let tokens = tokenize(text, line)?;
    let mut pos = 0;
    let result = parse_sum(&tokens, &mut pos, ring, line)?;
    if pos != tokens.len() {
        return err(line, tokens[pos].0, "trailing input in relation");
    }
    Ok(result)
}

fn parse_sum(
    tokens: &[(usize, Token)],
    pos: &mut usize,
    ring: &Arc<SkewPolyRing>,
    line: usize,
) -> Result<RingElement, SpecError> {
    let mut acc = parse_term(tokens, pos, ring, line)?;
    while *pos < tokens.len() {
        match tokens[*pos].1 {
            Token::Plus => {
                *pos += 1;
                acc = acc.add(&parse_term(tokens, pos, ring, line)?);
            }
            Token::Minus => {
                *pos += 1;
                acc = acc.sub(&parse_term(tokens, pos, ring, line)?);
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_term(
    tokens: &[(usize, Token)],
    pos: &mut usize,
    ring: &Arc<SkewPolyRing>,
    line: usize,
) -> Result<RingElement, SpecError> {
    let mut acc = parse_factor(tokens, pos, ring, line)?;
    while *pos < tokens.len() && tokens[*pos].1 == Token::Star {
        *pos += 1;
        let rhs = parse_factor(tokens, pos, ring, line)?;
        acc = acc.multiply(&rhs).expect("same ring");
    }
    Ok(acc)
}

fn parse_factor(
    tokens: &[(usize, Token)],
    pos: &mut usize,
    ring: &Arc<SkewPolyRing>,
    line: usize,
) -> Result<RingElement, SpecError> {
    let field = ring.field();
    let mut negate = false;
    while *pos < tokens.len() && tokens[*pos].1 == Token::Minus {
        negate = !negate;
        *pos += 1;
    }
    if *pos >= tokens.len() {
        return err(line, tokens.last().map_or(1, |t| t.0), "expected factor");
    }
    let (col, tok) = tokens[*pos].clone();
    let base = match tok {
        Token::Int(n) => {
            *pos += 1;
            // optional rational a/b
            if *pos + 1 < tokens.len() && tokens[*pos].1 == Token::Slash {
                if let Token::Int(d) = tokens[*pos + 1].1 {
                    *pos += 2;
                    match field.rational(n, d) {
                        Ok(v) => ring.constant(v),
                        Err(e) => return err(line, col, e.to_string()),
                    }
                } else {
                    return err(line, col, "expected denominator");
                }
            } else {
                ring.constant(field.from_i64(n))
            }
        }
        Token::Name(name) => {
            *pos += 1;
            let idx = match (0..ring.num_vars()).find(|&i| ring.var_name(i) == name) {
                Some(i) => i,
                None => return err(line, col, format!("unknown variable {name}")),
            };
            let mut exp = 1u32;
            if *pos < tokens.len() && tokens[*pos].1 == Token::Caret {
                *pos += 1;
                match tokens.get(*pos) {
                    Some((_, Token::Int(e))) if *e >= 0 => {
                        exp = *e as u32;
                        *pos += 1;
                    }
                    _ => return err(line, col, "expected nonnegative exponent after ^"),
                }
            }
            let mut exps = vec![0u32; ring.num_vars()];
            exps[idx] = exp;
            ring.from_terms(vec![(ring.monomial(exps), field.one())])
        }
        other => return err(line, col, format!("unexpected token {other:?}")),
    };
    Ok(if negate { base.scale(&field.from_i64(-1)) } else { base })
}
