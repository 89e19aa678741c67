//! Monomials in a fixed number of variables and the two graded term orders.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{check_dim, Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 16;

/// A monomial `x_1^{a_1} ... x_n^{a_n}`. The degree is cached.
///
/// The derived `Ord` is the graded lexicographic order (degree first, then
/// lex with `x_1 > ... > x_n`); monomials of different ambient dimension
/// compare by dimension first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() || exps.len() > MAX_VARS {
            return Err(Error::VariableCount(exps.len()));
        }
        Ok(Self::from_exps(exps))
    }

    pub(crate) fn from_exps(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The unit monomial `1`.
    pub fn one(n: usize) -> Self {
        Self::from_exps(vec![0; n])
    }

    /// The variable `x_k` (1-based).
    pub fn var(n: usize, k: usize) -> Self {
        assert!((1..=n).contains(&k), "variable index {k} out of range 1..={n}");
        let mut exps = vec![0; n];
        exps[k - 1] = 1;
        Self::from_exps(exps)
    }

    /// `x_p * x_q` (1-based).
    pub fn quadric(n: usize, p: usize, q: usize) -> Self {
        Self::var(n, p).mul(&Self::var(n, q))
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_k` (1-based).
    pub fn exponent(&self, k: usize) -> u32 {
        self.exps[k - 1]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Largest `q` such that `x_q` divides the monomial.
    pub fn m_index(&self) -> Result<usize> {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map(|p| p + 1)
            .ok_or(Error::UndefinedIndex)
    }

    /// Does `self` divide `other`? Assumes equal ambient dimension.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Self::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Self::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Self::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Self::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Multiply by `x_k` (1-based).
    pub fn times_var(&self, k: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[k - 1] += 1;
        Self::from_exps(exps)
    }

    /// Divide by `x_k` (1-based) if possible.
    pub fn over_var(&self, k: usize) -> Option<Monomial> {
        if self.exps[k - 1] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[k - 1] -= 1;
        Some(Self::from_exps(exps))
    }

    /// The Borel move `x_q * u / x_p`.
    pub fn borel_move(&self, p: usize, q: usize) -> Option<Monomial> {
        self.over_var(p).map(|u| u.times_var(q))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, _)| k + 1)
    }

    /// Parses `x1^2*x3` style text (`1` for the unit) in `n` variables.
    /// Errors report a 1-based column within `text` on line 1.
    pub fn parse(text: &str, n: usize) -> Result<Monomial> {
        parse_monomial_at(text, n, 1, 1)
    }
}

pub(crate) fn parse_monomial_at(text: &str, n: usize, line: usize, col0: usize) -> Result<Monomial> {
    let err = |offset: usize, message: String| Error::Parse {
        line,
        column: col0 + offset,
        message,
    };
    if n == 0 || n > MAX_VARS {
        return Err(Error::VariableCount(n));
    }
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.is_empty() {
        return Err(err(lead, "empty monomial".into()));
    }
    let mut exps = vec![0u32; n];
    if body == "1" {
        return Ok(Monomial::from_exps(exps));
    }
    let mut offset = lead;
    for factor in body.split('*') {
        let raw = factor;
        let f = raw.trim();
        let at = offset + (raw.len() - raw.trim_start().len());
        let (var, pow) = match f.split_once('^') {
            Some((v, p)) => (v.trim(), Some(p.trim())),
            None => (f, None),
        };
        let idx = var
            .strip_prefix('x')
            .ok_or_else(|| err(at, format!("expected a variable like x1, found `{f}`")))?;
        let k: usize = idx
            .parse()
            .map_err(|_| err(at, format!("bad variable index in `{f}`")))?;
        if k == 0 || k > n {
            return Err(err(at, format!("variable x{k} outside x1..x{n}")));
        }
        let e: u32 = match pow {
            Some(p) => p
                .parse()
                .map_err(|_| err(at, format!("bad exponent in `{f}`")))?,
            None => 1,
        };
        exps[k - 1] += e;
        offset += raw.len() + 1;
    }
    Ok(Monomial::from_exps(exps))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| TermOrder::Lex.cmp_unchecked(self, other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded term orders with `x_1 > ... > x_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    /// Degree first, then lexicographic.
    Lex,
    /// Degree first, then reverse lexicographic.
    RevLex,
}

impl TermOrder {
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        check_dim(u.n(), v.n())?;
        Ok(self.cmp_unchecked(u, v))
    }

    pub(crate) fn cmp_unchecked(&self, u: &Monomial, v: &Monomial) -> Ordering {
        u.degree.cmp(&v.degree).then_with(|| match self {
            TermOrder::Lex => {
                for (a, b) in u.exps.iter().zip(&v.exps) {
                    if a != b {
                        return a.cmp(b);
                    }
                }
                Ordering::Equal
            }
            TermOrder::RevLex => {
                for (a, b) in u.exps.iter().zip(&v.exps).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::RevLex => "revlex",
        }
    }
}

impl std::str::FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(TermOrder::Lex),
            "revlex" | "grevlex" => Ok(TermOrder::RevLex),
            other => Err(Error::Other(format!("unknown term order `{other}`"))),
        }
    }
}

pub fn compare_monomials(order: TermOrder, u: &Monomial, v: &Monomial) -> Result<Ordering> {
    order.compare(u, v)
}

/// All monomials of degree `d` in `n` variables, strictly descending in `order`.
pub fn monomials_of_degree(n: usize, d: u32, order: TermOrder) -> Vec<Monomial> {
    assert!(n >= 1, "at least one variable required");
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fill_lex(&mut exps, 0, d, &mut out);
    if order == TermOrder::RevLex {
        out.sort_by(|a, b| order.cmp_unchecked(b, a));
    }
    out
}

// Emits in lex-descending order: larger exponents on earlier variables first.
fn fill_lex(exps: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos == exps.len() - 1 {
        exps[pos] = remaining;
        out.push(Monomial::from_exps(exps.to_vec()));
        exps[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill_lex(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}
