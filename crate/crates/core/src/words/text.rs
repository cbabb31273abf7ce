//! Shared text syntax for words and braid words: `x1 x2^-2 (x1 x2)^3`.
//!
//! An atom is `<prefix><index>`, the identity `1`, or a parenthesized
//! sequence; any atom may carry `^<int>`. Whitespace between atoms is
//! optional.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {msg}")]
pub struct WordSyntaxError {
    /// 1-based character column within the parsed text.
    pub column: usize,
    pub msg: String,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    prefix: char,
}

impl Parser {
    fn err(&self, msg: impl Into<String>) -> WordSyntaxError {
        WordSyntaxError { column: self.pos + 1, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        self.chars[start..self.pos].iter().collect::<String>().parse().ok()
    }

    fn exponent(&mut self) -> Result<i64, WordSyntaxError> {
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let neg = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let n = self.number().ok_or_else(|| self.err("expected an integer exponent"))?;
        let n = i64::try_from(n).map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn sequence(&mut self, nested: bool) -> Result<Vec<(usize, i64)>, WordSyntaxError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None if nested => return Err(self.err("unclosed '('")),
                None => return Ok(out),
                Some(')') if nested => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some(')') => return Err(self.err("unmatched ')'")),
                Some('(') => {
                    self.pos += 1;
                    let inner = self.sequence(true)?;
                    let k = self.exponent()?;
                    let block: Vec<(usize, i64)> =
                        if k < 0 { inner.iter().rev().map(|&(g, e)| (g, -e)).collect() } else { inner };
                    for _ in 0..k.unsigned_abs() {
                        out.extend_from_slice(&block);
                    }
                }
                Some('1') => {
                    self.pos += 1;
                    // identity atom; an exponent on it is allowed and ignored
                    self.exponent()?;
                }
                Some(c) if c == self.prefix => {
                    self.pos += 1;
                    let idx =
                        self.number().ok_or_else(|| self.err(format!("expected an index after '{c}'")))?;
                    if idx == 0 {
                        self.pos -= 1;
                        return Err(self.err("generator indices start at 1"));
                    }
                    let k = self.exponent()?;
                    if k != 0 {
                        out.push((idx as usize, k));
                    }
                }
                Some(c) => return Err(self.err(format!("unexpected character '{c}'"))),
            }
        }
    }
}

/// Parses into runs `(index, exponent)`, expanding parenthesized groups.
/// Runs are not reduced.
pub(crate) fn parse_runs(src: &str, prefix: char) -> Result<Vec<(usize, i64)>, WordSyntaxError> {
    let mut p = Parser { chars: src.chars().collect(), pos: 0, prefix };
    p.sequence(false)
}

/// Space-separated `<prefix><index>[^exp]` atoms, or `1` for the empty word.
pub(crate) fn render_runs(runs: impl Iterator<Item = (usize, i64)>, prefix: char) -> String {
    let parts: Vec<String> =
        runs.map(|(g, e)| if e == 1 { format!("{prefix}{g}") } else { format!("{prefix}{g}^{e}") }).collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}
