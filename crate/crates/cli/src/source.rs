//! Resolving input arguments: `-` for standard input, `builtin:<spec>`, or
//! a path to a presentation file.

use std::io::Read;

use serde_json::json;
use thiserror::Error;

use hurwitz_core::braid::g_nm_presentation;
use hurwitz_core::constructions::{abelian_cgroup, g2_presentation, torus6, universal_hurwitz};
use hurwitz_core::presentation::{parse, CPresentation, ParseError, ParseErrorKind};

pub const BUILTINS: &str = "universal:<m>, abelian:<n>, g2, torus:<n>:<m>, torus6:<n>:<m>";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}: {error}")]
    Parse { origin: String, error: ParseError },
    #[error("unknown builtin {0:?}, expected one of {BUILTINS}")]
    UnknownBuiltin(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("{origin}: {msg}")]
    Json { origin: String, msg: String },
    #[error(transparent)]
    Core(#[from] hurwitz_core::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::UnknownBuiltin(_) => "unknown_builtin",
            CliError::Invalid(_) => "invalid_argument",
            CliError::Json { .. } => "json",
            CliError::Core(_) => "computation",
        }
    }

    /// The `{"error": {...}}` object printed in JSON mode.
    pub fn to_json(&self) -> serde_json::Value {
        let mut body = json!({ "kind": self.kind(), "message": self.to_string() });
        if let CliError::Parse { origin, error } = self {
            body["origin"] = json!(origin);
            body["line"] = json!(error.line);
            body["column"] = json!(error.column);
            body["reason"] = json!(match error.kind {
                ParseErrorKind::Syntax(_) => "syntax",
                ParseErrorKind::NotAConjugate(_) => "not_a_conjugate",
                ParseErrorKind::IndexOutOfRange { .. } => "index_out_of_range",
                ParseErrorKind::Hurwitz(_) => "hurwitz",
            });
        }
        json!({ "error": body })
    }
}

/// Raw text behind a non-builtin argument.
pub fn read_text(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        Ok(s)
    } else {
        std::fs::read_to_string(arg).map_err(|source| CliError::Io { path: arg.into(), source })
    }
}

pub fn origin(arg: &str) -> String {
    if arg == "-" {
        "<stdin>".into()
    } else {
        arg.into()
    }
}

/// Presentation named by `arg`.
pub fn load(arg: &str) -> Result<CPresentation, CliError> {
    if let Some(spec) = arg.strip_prefix("builtin:") {
        return builtin(spec);
    }
    let text = read_text(arg)?;
    parse(&text).map_err(|error| CliError::Parse { origin: origin(arg), error })
}

fn number(spec: &str, field: &str, min: usize) -> Result<usize, CliError> {
    let n: usize = field.parse().map_err(|_| CliError::UnknownBuiltin(spec.into()))?;
    if n < min {
        return Err(CliError::Invalid(format!("{spec}: {n} is below the minimum {min}")));
    }
    Ok(n)
}

/// `universal:<m>`, `abelian:<n>`, `g2`, `torus:<n>:<m>`, `torus6:<n>:<m>`.
pub fn builtin(spec: &str) -> Result<CPresentation, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["g2"] => Ok(g2_presentation()),
        ["universal", m] => Ok(universal_hurwitz(number(spec, m, 2)?)),
        ["abelian", n] => Ok(abelian_cgroup(number(spec, n, 1)?)),
        ["torus", n, m] | ["torus6", n, m] => {
            let n = number(spec, n, 2)?;
            let m = u32::try_from(number(spec, m, 1)?)
                .map_err(|_| CliError::Invalid(format!("{spec}: exponent too large")))?;
            Ok(if parts[0] == "torus" { g_nm_presentation(n, m) } else { torus6(n, m) })
        }
        _ => Err(CliError::UnknownBuiltin(spec.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_resolve() {
        assert_eq!(load("builtin:g2").unwrap().generator_count(), 4);
        assert_eq!(load("builtin:universal:3").unwrap().label(), Some("G~_3"));
        assert_eq!(load("builtin:abelian:2").unwrap().relations().len(), 2);
        assert_eq!(load("builtin:torus:2:3").unwrap().generator_count(), 2);
        assert_eq!(load("builtin:torus6:2:3").unwrap().generator_count(), 6);
    }

    #[test]
    fn bad_builtins() {
        assert!(matches!(builtin("torus:2"), Err(CliError::UnknownBuiltin(_))));
        assert!(matches!(builtin("universal:x"), Err(CliError::UnknownBuiltin(_))));
        assert!(matches!(builtin("universal:1"), Err(CliError::Invalid(_))));
        assert!(matches!(builtin("torus:1:3"), Err(CliError::Invalid(_))));
    }

    #[test]
    fn missing_file() {
        let e = load("/nonexistent/file.cp").unwrap_err();
        assert_eq!(e.kind(), "io");
    }
}
