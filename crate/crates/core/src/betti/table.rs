use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Whose Betti numbers a table records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `beta_{i,j}(I) = dim Tor_i(K, I)_j` of an ideal.
    Ideal,
    /// Betti numbers of a graded module (cyclic quotients here).
    Module,
}

impl Convention {
    pub fn name(&self) -> &'static str {
        match self {
            Convention::Ideal => "ideal",
            Convention::Module => "module",
        }
    }
}

/// Graded Betti numbers `beta_{i,j}`, storing only nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiTable {
    n: usize,
    convention: Convention,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn new(n: usize, convention: Convention) -> Self {
        BettiTable { n, convention, entries: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `beta_{i, i+d}`, zero when `i + d` is negative.
    pub fn strand_entry(&self, i: usize, d: i64) -> u64 {
        let j = i as i64 + d;
        if j < 0 {
            0
        } else {
            self.get(i, j as u32)
        }
    }

    pub fn add(&mut self, i: usize, j: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn set(&mut self, i: usize, j: u32, v: u64) {
        if v == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Nonzero entries `(i, j, beta)` in increasing `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number `beta_i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, &v)| v).sum()
    }

    pub fn max_homological(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Values `beta_{i,i+d}` for `i = 0..len`.
    pub fn strand(&self, d: i64, len: usize) -> Vec<u64> {
        (0..len).map(|i| self.strand_entry(i, d)).collect()
    }

    pub fn regularity(&self) -> Result<u32> {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .map(|r| r.max(0) as u32)
            .ok_or(Error::UndefinedRegularity)
    }

    /// Is every entry at most the corresponding entry of `other`?
    pub fn entrywise_le(&self, other: &BettiTable) -> bool {
        self.entries().all(|(i, j, v)| v <= other.get(i, j))
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|(i, j, beta)| json!({"i": i, "j": j, "beta": beta}))
            .collect();
        json!({"n": self.n, "convention": self.convention.name(), "entries": entries})
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Other(format!("malformed Betti table: {m}"));
        let n = value["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let convention = match value["convention"].as_str() {
            Some("ideal") => Convention::Ideal,
            Some("module") => Convention::Module,
            _ => return Err(bad("unknown convention")),
        };
        let mut table = BettiTable::new(n, convention);
        for e in value["entries"].as_array().ok_or_else(|| bad("missing entries"))? {
            let field = |k: &str| e[k].as_u64().ok_or_else(|| bad(k));
            table.add(field("i")? as usize, field("j")? as u32, field("beta")?);
        }
        Ok(table)
    }

    /// Macaulay-style table: columns are homological degrees, rows are
    /// `j - i`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let Some(top_i) = self.max_homological() else {
            out.push_str("(zero table)\n");
            return out;
        };
        let rows: Vec<i64> = {
            let lo = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap();
            let hi = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap();
            (lo..=hi).collect()
        };
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let width = (0..=top_i)
            .map(|i| cell(self.total(i)).len().max(i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = rows.iter().map(|r| r.to_string().len() + 1).max().unwrap_or(1).max(6);
        let _ = write!(out, "{:>label$}", "");
        for i in 0..=top_i {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label$}", "total:");
        for i in 0..=top_i {
            let _ = write!(out, " {:>width$}", cell(self.total(i)));
        }
        out.push('\n');
        for &r in &rows {
            let _ = write!(out, "{:>label$}", format!("{r}:"));
            for i in 0..=top_i {
                let _ = write!(out, " {:>width$}", cell(self.strand_entry(i, r)));
            }
            out.push('\n');
        }
        out
    }
}
