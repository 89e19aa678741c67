//! Ideal file formats.
//!
//! Text:
//!
//! ```text
//! # comment
//! n=3
//! x1^2, x1*x2
//! x3^4
//! ```
//!
//! Structured: `{"n": 3, "generators": [[2,0,0],[1,1,0],[0,0,4]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::parse_monomial_at;

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    generators: Vec<Vec<u32>>,
}

/// Reads either format; a leading `{` selects the structured one.
pub fn read_ideal(text: &str) -> Result<MonomialIdeal> {
    if text.trim_start().starts_with('{') {
        return read_ideal_json(text);
    }
    let mut n: Option<usize> = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(nvars) = n else {
            let header = content.trim();
            let value = header
                .strip_prefix("n=")
                .or_else(|| header.strip_prefix("n ="))
                .ok_or_else(|| Error::Parse {
                    line,
                    column: 1 + content.len() - content.trim_start().len(),
                    message: "expected header `n=<count>`".into(),
                })?;
            let parsed: usize = value.trim().parse().map_err(|_| Error::Parse {
                line,
                column: 1 + content.find('=').unwrap_or(0) + 1,
                message: format!("bad variable count `{}`", value.trim()),
            })?;
            n = Some(parsed);
            continue;
        };
        let mut col = 1;
        for piece in content.split(',') {
            if !piece.trim().is_empty() {
                gens.push(parse_monomial_at(piece, nvars, line, col)?);
            }
            col += piece.len() + 1;
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing header `n=<count>`".into(),
    })?;
    MonomialIdeal::new(n, gens)
}

pub fn read_ideal_json(text: &str) -> Result<MonomialIdeal> {
    let parsed: IdealJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    for (k, g) in parsed.generators.iter().enumerate() {
        if g.len() != parsed.n {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("generator {k} has {} exponents, expected {}", g.len(), parsed.n),
            });
        }
    }
    MonomialIdeal::from_exponents(parsed.n, &parsed.generators)
}

/// Text format, one generator per line.
pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("n={}\n", ideal.n());
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> serde_json::Value {
    serde_json::to_value(IdealJson {
        n: ideal.n(),
        generators: ideal.generators().iter().map(|g| g.exponents().to_vec()).collect(),
    })
    .expect("plain data serialises")
}
