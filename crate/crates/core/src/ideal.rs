//! Monomial ideals, kept in canonical form by their minimal generators.

use std::fmt;

use crate::binomial::monomial_count;
use crate::error::{check_dim, Error, Result};
use crate::monomial::{monomials_of_degree, Monomial, TermOrder, MAX_VARS};

/// A monomial ideal of `K[x_1, ..., x_n]`.
///
/// Generators are divisibility-minimal and sorted by degree, then
/// lex-descending, so structural equality is ideal equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Which side of a degree truncation to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    /// Generated by the generators of degree at most `d`.
    AtMost,
    /// Generated by all monomials of the ideal of degree at least `d`.
    AtLeast,
}

/// `dim_K I_d` for `d = 0..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    pub n: usize,
    pub values: Vec<u64>,
}

impl HilbertFunction {
    pub fn max_degree(&self) -> u32 {
        self.values.len() as u32 - 1
    }

    pub fn get(&self, d: u32) -> Option<u64> {
        self.values.get(d as usize).copied()
    }

    /// Dimension of the quotient `(A/I)_d`.
    pub fn quotient(&self, d: u32) -> Option<u64> {
        self.get(d).map(|v| monomial_count(self.n, d) - v)
    }
}

fn canonical_sort(gens: &mut [Monomial]) {
    gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| TermOrder::Lex.cmp_unchecked(b, a))
    });
}

impl MonomialIdeal {
    /// Minimalises `gens` into an ideal of `K[x_1..x_n]`.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::VariableCount(n));
        }
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        for g in &all {
            check_dim(n, g.n())?;
        }
        canonical_sort(&mut all);
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        Ok(MonomialIdeal { n, gens: kept })
    }

    /// Builds from generator exponent vectors.
    pub fn from_exponents(n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let gens = rows
            .iter()
            .map(|r| Monomial::new(r.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, gens)
    }

    /// Parses generators separated by commas, e.g. `"x1^2, x1*x2"`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let gens = text
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| Monomial::parse(s, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, gens)
    }

    pub(crate) fn from_minimal(n: usize, gens: Vec<Monomial>) -> Self {
        debug_assert_eq!(Self::new(n, gens.clone()).unwrap().gens, gens);
        MonomialIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// `(x_1, ..., x_n)^d`.
    pub fn maximal_power(n: usize, d: u32) -> Self {
        MonomialIdeal {
            n,
            gens: monomials_of_degree(n, d, TermOrder::Lex),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.last().map(Monomial::degree)
    }

    pub fn min_generator_degree(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn generators_of_degree(&self, d: u32) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.degree() == d)
    }

    /// Least common multiple of all generators (`1` for the zero ideal).
    pub fn generator_lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }

    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        check_dim(self.n, u.n())?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens
            .iter()
            .take_while(|g| g.degree() <= u.degree())
            .any(|g| g.divides(u))
    }

    /// Degree-`d` monomials of the ideal, lex-descending.
    pub fn graded_component(&self, d: u32) -> Vec<Monomial> {
        if self.is_zero() || self.min_generator_degree().is_some_and(|m| m > d) {
            return Vec::new();
        }
        monomials_of_degree(self.n, d, TermOrder::Lex)
            .into_iter()
            .filter(|u| self.contains_unchecked(u))
            .collect()
    }

    /// `dim_K I_d`.
    pub fn hilbert_value(&self, d: u32) -> u64 {
        self.graded_component(d).len() as u64
    }

    pub fn hilbert_function(&self, up_to: u32) -> HilbertFunction {
        HilbertFunction {
            n: self.n,
            values: (0..=up_to).map(|d| self.hilbert_value(d)).collect(),
        }
    }

    /// Does the ideal contain every monomial of degree `d`?
    pub fn is_full_in_degree(&self, d: u32) -> bool {
        self.hilbert_value(d) == monomial_count(self.n, d)
    }

    /// Checks Borel moves `x_q u / x_p` (q < p) on the generators.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            u.support().all(|p| {
                (1..p).all(|q| {
                    let moved = u.borel_move(p, q).expect("p in support");
                    self.contains_unchecked(&moved)
                })
            })
        })
    }

    /// Is every graded component up to the top generator degree an initial
    /// lex segment?
    pub fn is_lexsegment(&self) -> bool {
        let Some(top) = self.max_generator_degree() else {
            return true;
        };
        (0..=top).all(|d| {
            let all = monomials_of_degree(self.n, d, TermOrder::Lex);
            let k = all.iter().take_while(|u| self.contains_unchecked(u)).count();
            all[k..].iter().all(|u| !self.contains_unchecked(u))
        })
    }

    /// Number of `u` in `I_j` with `m(u) <= k`.
    pub fn m_leq_count(&self, k: usize, j: u32) -> u64 {
        self.graded_component(j)
            .iter()
            .filter(|u| u.m_index().map_or(true, |m| m <= k))
            .count() as u64
    }

    /// `(I : w)`.
    pub fn colon(&self, w: &Monomial) -> Result<Self> {
        check_dim(self.n, w.n())?;
        Self::new(
            self.n,
            self.gens
                .iter()
                .map(|g| g.div(&g.gcd(w)).expect("gcd divides")),
        )
    }

    pub fn truncate(&self, d: u32, side: Truncation) -> Self {
        match side {
            Truncation::AtMost => MonomialIdeal {
                n: self.n,
                gens: self.gens.iter().filter(|g| g.degree() <= d).cloned().collect(),
            },
            Truncation::AtLeast => {
                let high = self.gens.iter().filter(|g| g.degree() > d).cloned();
                Self::new(self.n, self.graded_component(d).into_iter().chain(high))
                    .expect("same dimension")
            }
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        Self::new(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        let prods = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)));
        Self::new(self.n, prods)
    }

    pub fn power(&self, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::ParameterRange("ideal power exponent must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `w * I`.
    pub fn scale(&self, w: &Monomial) -> Result<Self> {
        check_dim(self.n, w.n())?;
        Ok(MonomialIdeal {
            n: self.n,
            gens: {
                let mut g: Vec<Monomial> = self.gens.iter().map(|g| g.mul(w)).collect();
                canonical_sort(&mut g);
                g
            },
        })
    }

    /// Adds one monomial generator.
    pub fn with(&self, u: Monomial) -> Result<Self> {
        check_dim(self.n, u.n())?;
        Self::new(self.n, self.gens.iter().cloned().chain(std::iter::once(u)))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {}", self.n, self)
    }
}
