//! Line-oriented quiver files.
//!
//! ```text
//! # comment
//! orientation right-module
//! vertex 1
//! vertex inf framing
//! arrow a: 1 -> 1
//! arrow i: 1 -> inf
//! potential: + a a a - 2 a a
//! ```
//!
//! Several `potential:` lines add up. `orientation` defaults to `path`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{Orientation, Potential, Quiver, QuiverError, QuiverWithPotential};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    Quiver(QuiverError),
}

/// Error with 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax(s) => f.write_str(s),
            ParseErrorKind::Quiver(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize<'a>(line: &'a str, offset: usize) -> Vec<Token<'a>> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let push = |out: &mut Vec<Token<'a>>, s: usize, e: usize| {
        let text = &line[s..e];
        // split a leading sign from what follows
        let mut chars = text.char_indices();
        if let Some((_, c)) = chars.next() {
            if is_sign(c) && text.len() > c.len_utf8() && !text.starts_with("->") {
                let k = c.len_utf8();
                out.push(Token { text: &text[..k], column: column_of(line, s) + offset });
                out.push(Token { text: &text[k..], column: column_of(line, s + k) + offset });
                return;
            }
        }
        out.push(Token { text, column: column_of(line, s) + offset });
    };
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                push(&mut out, s, i);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        push(&mut out, s, line.len());
    }
    out
}

fn column_of(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

fn is_sign(c: char) -> bool {
    matches!(c, '+' | '-' | '\u{2212}')
}

fn syntax(line: usize, column: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        kind: ParseErrorKind::Syntax(msg.into()),
    }
}

fn quiver_err(line: usize, column: usize, e: QuiverError) -> ParseError {
    ParseError {
        line,
        column,
        kind: ParseErrorKind::Quiver(e),
    }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && !s.chars().all(|c| c.is_ascii_digit())
        && !s.starts_with(|c: char| is_sign(c) || c == '#')
        && !s.contains([':', '#'])
}

fn valid_vertex_name(s: &str) -> bool {
    !s.is_empty() && !s.starts_with(|c: char| is_sign(c)) && !s.contains([':', '#'])
}

/// Parse a full quiver file.
pub fn parse_quiver(text: &str) -> Result<QuiverWithPotential, ParseError> {
    let mut q = Quiver::new(Orientation::Path);
    let mut potentials: Vec<(usize, usize, &str)> = Vec::new();
    let mut seen_arrow = false;
    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        if let Some(pos) = line.find("potential:") {
            if !line[..pos].trim().is_empty() {
                return Err(syntax(ln, 1, "unexpected text before 'potential:'"));
            }
            let body_start = pos + "potential:".len();
            potentials.push((ln, column_of(line, body_start) - 1, &line[body_start..]));
            continue;
        }
        let toks = tokenize(line, 0);
        let head = toks[0];
        match head.text {
            "orientation" => {
                if seen_arrow || !q.vertices().is_empty() {
                    return Err(syntax(ln, head.column, "orientation must come before vertices and arrows"));
                }
                let o = match toks.get(1).map(|t| t.text) {
                    Some("path") => Orientation::Path,
                    Some("right-module") => Orientation::RightModule,
                    Some(other) => {
                        return Err(syntax(ln, toks[1].column, format!("unknown orientation {other:?}")))
                    }
                    None => return Err(syntax(ln, head.column, "missing orientation")),
                };
                if let Some(t) = toks.get(2) {
                    return Err(syntax(ln, t.column, "unexpected trailing text"));
                }
                q.set_orientation(o);
            }
            "vertex" => {
                let name = toks
                    .get(1)
                    .ok_or_else(|| syntax(ln, head.column, "missing vertex name"))?;
                if !valid_vertex_name(name.text) {
                    return Err(syntax(ln, name.column, format!("invalid vertex name {:?}", name.text)));
                }
                let framing = match toks.get(2) {
                    None => false,
                    Some(t) if t.text == "framing" => true,
                    Some(t) => return Err(syntax(ln, t.column, format!("expected 'framing', got {:?}", t.text))),
                };
                if let Some(t) = toks.get(3) {
                    return Err(syntax(ln, t.column, "unexpected trailing text"));
                }
                q.add_vertex(name.text, framing)
                    .map_err(|e| quiver_err(ln, name.column, e))?;
            }
            "arrow" => {
                seen_arrow = true;
                // arrow <name>: <src> -> <tgt>
                let rest_start = line.find("arrow").expect("head") + "arrow".len();
                let rest = &line[rest_start..];
                let colon = rest
                    .find(':')
                    .ok_or_else(|| syntax(ln, head.column, "expected ':' after arrow name"))?;
                let name = rest[..colon].trim();
                let name_col = column_of(line, rest_start + rest[..colon].find(name).unwrap_or(0));
                if !valid_name(name) || name.contains(char::is_whitespace) {
                    return Err(syntax(ln, name_col, format!("invalid arrow name {name:?}")));
                }
                let ends_start = rest_start + colon + 1;
                let ends = tokenize(&line[ends_start..], column_of(line, ends_start) - 1);
                if ends.len() != 3 || ends[1].text != "->" {
                    let col = ends.first().map_or(column_of(line, ends_start), |t| t.column);
                    return Err(syntax(ln, col, "expected '<source> -> <target>'"));
                }
                q.add_arrow(name, ends[0].text, ends[2].text).map_err(|e| {
                    let col = match &e {
                        QuiverError::UnknownVertex(v) if v == ends[2].text => ends[2].column,
                        QuiverError::UnknownVertex(_) => ends[0].column,
                        _ => name_col,
                    };
                    quiver_err(ln, col, e)
                })?;
            }
            other => return Err(syntax(ln, head.column, format!("unknown directive {other:?}"))),
        }
    }
    let mut potential = Potential::zero();
    for (ln, offset, body) in potentials {
        potential.extend(parse_terms(body, ln, offset, &q)?);
    }
    Ok(QuiverWithPotential { quiver: q, potential })
}

/// Parse a signed sum of words such as `"+ a1 b1 a2 b2 - a1 b2 a2 b1"` against `q`.
pub fn parse_potential(text: &str, q: &Quiver) -> Result<Potential, ParseError> {
    parse_terms(text, 1, 0, q)
}

fn parse_terms(body: &str, ln: usize, offset: usize, q: &Quiver) -> Result<Potential, ParseError> {
    let toks = tokenize(body, offset);
    let mut terms = Vec::new();
    let mut i = 0;
    while i < toks.len() {
        let start_col = toks[i].column;
        let mut negative = false;
        if toks[i].text.chars().count() == 1 && is_sign(toks[i].text.chars().next().expect("nonempty")) {
            negative = toks[i].text != "+";
            i += 1;
        } else if !terms.is_empty() {
            return Err(syntax(ln, toks[i].column, "expected '+' or '-' between terms"));
        }
        let mut coeff = BigInt::one();
        if let Some(t) = toks.get(i) {
            if t.text.chars().all(|c| c.is_ascii_digit()) {
                coeff = t.text.parse().expect("digits");
                i += 1;
            }
        }
        let mut word = Vec::new();
        let mut cols = Vec::new();
        while let Some(t) = toks.get(i) {
            if t.text.chars().count() == 1 && is_sign(t.text.chars().next().expect("nonempty")) {
                break;
            }
            let a = q
                .arrow_id(t.text)
                .ok_or_else(|| quiver_err(ln, t.column, QuiverError::UnknownArrow(t.text.into())))?;
            word.push(a);
            cols.push(t.column);
            i += 1;
        }
        if word.is_empty() {
            return Err(syntax(ln, start_col, "term has no word"));
        }
        if let Err(e) = q.check_cycle(&word) {
            let col = match &e {
                QuiverError::NotComposable { right, .. } => word
                    .iter()
                    .zip(&cols)
                    .skip(1)
                    .find(|(&a, _)| q.arrow_name(a) == right)
                    .map_or(start_col, |(_, &c)| c),
                _ => cols[0],
            };
            return Err(quiver_err(ln, col, e));
        }
        terms.push((if negative { -coeff } else { coeff }, word));
    }
    Potential::new(q, terms).map_err(|e| quiver_err(ln, 1, e))
}
