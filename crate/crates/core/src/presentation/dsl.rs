//! Line-oriented text format for C-presentations.
//!
//! ```text
//! # G(2)
//! label: G(2)
//! generators: 4
//! hurwitz_degree: 4
//! rel: x4 = x2^2 x1 x2^-2
//! rel: x3 = x2
//! rel: x2 = x4^2 x2 x4^-2
//! central: x1 x2 x3 x4
//! ```
//!
//! * `generators: <m>` must come before any line that mentions a generator.
//! * `rel: x<i> = <word>` requires the reduced right-hand side to be
//!   `u x_j u^-1`; it is stored as `x_i = w^-1 x_j w` with `w = u^-1`.
//! * `central: <word>` adds `x_i = w^-1 x_i w` for every generator.
//! * `hurwitz_degree: <d>` records a degree; when `d` differs from `m`,
//!   `hurwitz_word: <word>` names the central word whose exponent sum is `d`.
//! * `label: <text>` takes the rest of the line verbatim (trimmed).
//! * `#` starts a comment everywhere except inside a label.

use thiserror::Error;

use super::{generator_conjugate, CPresentation, CRelation, PresentationError};
use crate::words::{Word, WordSyntaxError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("right-hand side {0} is not a conjugate of a single generator")]
    NotAConjugate(String),
    #[error("generator index {index} outside 1..={generators}")]
    IndexOutOfRange { index: usize, generators: usize },
    #[error("{0}")]
    Hurwitz(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn syntax(line: usize, column: usize, msg: impl Into<String>) -> Self {
        ParseError { line, column, kind: ParseErrorKind::Syntax(msg.into()) }
    }

    fn from_presentation(line: usize, column: usize, e: PresentationError) -> Self {
        let kind = match e {
            PresentationError::IndexOutOfRange { index, generators } => {
                ParseErrorKind::IndexOutOfRange { index, generators }
            }
            PresentationError::NotAConjugate(w) => ParseErrorKind::NotAConjugate(w),
            PresentationError::Hurwitz(msg) => ParseErrorKind::Hurwitz(msg),
        };
        ParseError { line, column, kind }
    }
}

fn word_at(text: &str, line: usize, col0: usize) -> Result<Word, ParseError> {
    text.parse::<Word>()
        .map_err(|WordSyntaxError { column, msg }| ParseError::syntax(line, col0 + column - 1, msg))
}

fn count_at(text: &str, line: usize, col: usize) -> Result<usize, ParseError> {
    text.trim().parse::<usize>().map_err(|_| {
        ParseError::syntax(line, col, format!("expected a non-negative integer, got '{}'", text.trim()))
    })
}

/// 1-based column where the substring `part` of `raw` starts.
fn start_of(raw: &str, part: &str) -> usize {
    let offset = part.as_ptr() as usize - raw.as_ptr() as usize;
    raw[..offset].chars().count() + 1
}

/// 1-based column of the first non-space character of `part` inside `raw`.
fn column_of(raw: &str, part: &str) -> usize {
    start_of(raw, part.trim_start())
}

pub fn parse(text: &str) -> Result<CPresentation, ParseError> {
    let mut generators: Option<usize> = None;
    let mut relations: Vec<(usize, usize, CRelation)> = Vec::new();
    let mut degree: Option<(usize, usize)> = None;
    let mut word: Option<(usize, Word)> = None;
    let mut label: Option<String> = None;

    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((key, rest)) = raw.split_once(':') else {
            return Err(ParseError::syntax(line, column_of(raw, raw), "expected '<key>: <value>'"));
        };
        let key = key.trim();
        if key == "label" {
            if label.is_some() {
                return Err(ParseError::syntax(line, 1, "duplicate label"));
            }
            label = Some(rest.trim().to_string());
            continue;
        }
        let body = rest.split('#').next().unwrap();
        let col = column_of(raw, body);
        let need_m =
            |g: Option<usize>| g.ok_or_else(|| ParseError::syntax(line, 1, "'generators:' must come first"));
        match key {
            "generators" => {
                if generators.is_some() {
                    return Err(ParseError::syntax(line, 1, "duplicate generators line"));
                }
                generators = Some(count_at(body, line, col)?);
            }
            "hurwitz_degree" => {
                if degree.is_some() {
                    return Err(ParseError::syntax(line, 1, "duplicate hurwitz_degree"));
                }
                degree = Some((line, count_at(body, line, col)?));
            }
            "hurwitz_word" => {
                need_m(generators)?;
                word = Some((line, word_at(body, line, start_of(raw, body))?));
            }
            "central" => {
                let m = need_m(generators)?;
                let y = word_at(body, line, start_of(raw, body))?;
                if y.max_generator() > m {
                    return Err(ParseError {
                        line,
                        column: col,
                        kind: ParseErrorKind::IndexOutOfRange { index: y.max_generator(), generators: m },
                    });
                }
                for i in 1..=m {
                    relations.push((line, col, CRelation::commute(i, y.clone())));
                }
            }
            "rel" => {
                let m = need_m(generators)?;
                let Some((lhs, rhs)) = body.split_once('=') else {
                    return Err(ParseError::syntax(line, col, "expected 'x<i> = <word>'"));
                };
                let lhs_word = word_at(lhs, line, start_of(raw, lhs))?;
                let left = match lhs_word.letters() {
                    [l] if l.exp == 1 => l.gen,
                    _ => {
                        return Err(ParseError::syntax(
                            line,
                            col,
                            "left-hand side must be a single generator",
                        ))
                    }
                };
                let rcol = column_of(raw, rhs);
                let rhs_word = word_at(rhs, line, start_of(raw, rhs))?;
                let Some((right, conj)) = generator_conjugate(&rhs_word) else {
                    return Err(ParseError {
                        line,
                        column: rcol,
                        kind: ParseErrorKind::NotAConjugate(rhs_word.to_string()),
                    });
                };
                for (index, c) in [(left, col), (right, rcol), (conj.max_generator(), rcol)] {
                    if index > m {
                        return Err(ParseError {
                            line,
                            column: c,
                            kind: ParseErrorKind::IndexOutOfRange { index, generators: m },
                        });
                    }
                }
                relations.push((line, col, CRelation::new(left, right, conj)));
            }
            other => {
                return Err(ParseError::syntax(line, 1, format!("unknown key '{other}'")));
            }
        }
    }

    let m = generators.ok_or_else(|| ParseError::syntax(1, 1, "missing 'generators:' line"))?;
    let mut p = CPresentation::new(m, relations.iter().map(|(_, _, r)| r.clone()).collect())
        .map_err(|e| ParseError::from_presentation(1, 1, e))?;
    match (degree, word) {
        (Some((line, d)), w) => {
            p = p
                .with_hurwitz(d, w.map(|(_, w)| w))
                .map_err(|e| ParseError::from_presentation(line, 1, e))?;
        }
        (None, Some((line, _))) => {
            return Err(ParseError {
                line,
                column: 1,
                kind: ParseErrorKind::Hurwitz("hurwitz_word requires hurwitz_degree".into()),
            });
        }
        (None, None) => {}
    }
    if let Some(l) = label {
        p = p.with_label(l);
    }
    Ok(p)
}

/// Emits the DSL; `parse(&render(p)) == p` for every presentation whose
/// label has no line breaks.
pub fn render(p: &CPresentation) -> String {
    let mut out = String::new();
    if let Some(l) = p.label() {
        out.push_str(&format!("label: {l}\n"));
    }
    out.push_str(&format!("generators: {}\n", p.generator_count()));
    if let Some(d) = p.hurwitz_degree() {
        out.push_str(&format!("hurwitz_degree: {d}\n"));
    }
    if let Some(w) = p.hurwitz_word() {
        out.push_str(&format!("hurwitz_word: {w}\n"));
    }
    for r in p.relations() {
        out.push_str(&format!("rel: x{} = {}\n", r.left(), r.rhs()));
    }
    out
}
