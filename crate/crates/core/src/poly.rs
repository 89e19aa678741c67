//! Sparse multivariate polynomials and linear changes of coordinates.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::field::{Field, Rational};
use crate::monomial::{parse_monomial_at, Monomial, TermOrder};

/// `sum c_u u` with nonzero coefficients only.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F> {
    n: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn monomial(u: Monomial) -> Self {
        Self::term(F::one(), u)
    }

    pub fn term(c: F, u: Monomial) -> Self {
        let mut p = Self::zero(u.n());
        if !c.is_zero() {
            p.terms.insert(u, c);
        }
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (F, Monomial)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (c, u) in terms {
            check_dim(n, u.n())?;
            p.add_term(c, u);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, u: &Monomial) -> F {
        self.terms.get(u).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Degree of a homogeneous polynomial (`None` for zero).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_term(&self, order: TermOrder) -> Option<(&Monomial, &F)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_unchecked(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(u, _)| u)
    }

    pub(crate) fn add_term(&mut self, c: F, u: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&u) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&u);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(u, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (u, c) in &other.terms {
            out.add_term(c.clone(), u.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (u, c) in &other.terms {
            out.add_term(-c.clone(), u.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(u, v)| (u.clone(), v.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_term(&self, c: &F, w: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(u, v)| (u.mul(w), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(a.clone() * b.clone(), u.mul(v));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::monomial(Monomial::one(self.n));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self, order: TermOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.inverse()),
            None => self.clone(),
        }
    }

    /// Maps every coefficient into another field.
    pub fn map_coefficients<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<Polynomial<G>> {
        let mut out = Polynomial::zero(self.n);
        for (u, c) in &self.terms {
            out.add_term(f(c)?, u.clone());
        }
        Some(out)
    }
}

impl Polynomial<Rational> {
    /// Parses `3*x1^2*x2 - 1/2*x2^3`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let err = |column: usize, message: String| Error::Parse { line: 1, column, message };
        let mut out = Self::zero(n);
        let bytes: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let mut sign = 1i64;
        let mut expect_term = true;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(err(1, "empty polynomial".into()));
        }
        while pos < bytes.len() {
            skip_ws(&mut pos);
            if pos == bytes.len() {
                break;
            }
            let ch = bytes[pos];
            if ch == '+' || ch == '-' {
                if ch == '-' {
                    sign = -sign;
                }
                expect_term = true;
                pos += 1;
                continue;
            }
            if !expect_term {
                return Err(err(pos + 1, format!("expected `+` or `-`, found `{ch}`")));
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos] != '+' && bytes[pos] != '-' {
                pos += 1;
            }
            let piece: String = bytes[start..pos].iter().collect();
            let (coef, mono) = split_coefficient(piece.trim_end()).map_err(|m| err(start + 1, m))?;
            let u = match mono {
                Some(m) => {
                    let offset = piece.find(m).unwrap_or(0);
                    parse_monomial_at(m, n, 1, start + offset + 1)?
                }
                None => Monomial::one(n),
            };
            out.add_term(coef * Rational::from_i64(sign), u);
            sign = 1;
            expect_term = false;
        }
        if expect_term {
            return Err(err(text.len(), "dangling sign".into()));
        }
        Ok(out)
    }
}

fn split_coefficient(piece: &str) -> std::result::Result<(Rational, Option<&str>), String> {
    let starts_numeric = piece.chars().next().is_some_and(|c| c.is_ascii_digit());
    if !starts_numeric {
        return Ok((Rational::one(), Some(piece)));
    }
    let (num, rest) = match piece.find('*') {
        Some(k) => (&piece[..k], Some(&piece[k + 1..])),
        None => (piece, None),
    };
    let num = num.trim();
    let q = match num.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| format!("bad coefficient `{num}`"))?;
            let b: BigInt = b.trim().parse().map_err(|_| format!("bad coefficient `{num}`"))?;
            if b.is_zero() {
                return Err("zero denominator".into());
            }
            Rational::new(a, b)
        }
        None => Rational::from_integer(num.parse().map_err(|_| format!("bad coefficient `{num}`"))?),
    };
    Ok((q, rest))
}

impl fmt::Display for Polynomial<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| TermOrder::Lex.cmp_unchecked(b.0, a.0));
        for (k, (u, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if u.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{u}")?;
            } else {
                write!(f, "{mag}*{u}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (u, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*{u}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// An invertible substitution `x_i -> sum_j matrix[j][i] x_j`
/// (column `i` holds the image of `x_i`).
#[derive(Clone, Debug, PartialEq)]
pub struct LinearChange<F> {
    matrix: Vec<Vec<F>>,
}

impl<F: Field> LinearChange<F> {
    pub fn new(matrix: Vec<Vec<F>>) -> Result<Self> {
        let n = matrix.len();
        for row in &matrix {
            check_dim(n, row.len())?;
        }
        if crate::linalg::rank(matrix.clone()) != n {
            return Err(Error::SingularChange);
        }
        Ok(LinearChange { matrix })
    }

    pub fn from_integers(matrix: &[Vec<i64>]) -> Result<Self> {
        Self::new(matrix.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|r| (0..n).map(|c| if r == c { F::one() } else { F::zero() }).collect())
            .collect();
        LinearChange { matrix }
    }

    /// `x_target -> x_target + sum (coeff * x_k)`, other variables fixed.
    pub fn shear(n: usize, target: usize, adds: &[(usize, i64)]) -> Result<Self> {
        let mut m: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
        for &(k, c) in adds {
            m[k - 1][target - 1] += c;
        }
        Self::from_integers(&m)
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    /// Image of `x_i` (1-based) as a linear form.
    pub fn image_of_var(&self, i: usize) -> Polynomial<F> {
        let n = self.n();
        let mut p = Polynomial::zero(n);
        for j in 1..=n {
            p.add_term(self.matrix[j - 1][i - 1].clone(), Monomial::var(n, j));
        }
        p
    }

    pub fn apply_monomial(&self, u: &Monomial) -> Polynomial<F> {
        let mut acc = Polynomial::monomial(Monomial::one(self.n()));
        for (k, &e) in u.exponents().iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&self.image_of_var(k + 1).pow(e));
            }
        }
        acc
    }

    pub fn apply(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        check_dim(self.n(), f.n())?;
        let mut out = Polynomial::zero(f.n());
        for (u, c) in f.terms() {
            out = out.add(&self.apply_monomial(u).scale(c));
        }
        Ok(out)
    }
}

pub fn apply_linear_change<F: Field>(phi: &LinearChange<F>, f: &Polynomial<F>) -> Result<Polynomial<F>> {
    phi.apply(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str, n: usize) -> Polynomial<Rational> {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let f = q("3*x1^2*x2 - 1/2*x2^3", 2);
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "3*x1^2*x2 - 1/2*x2^3");
        assert_eq!(q("-x1 + x2 - 2", 2).to_string(), "-x1 + x2 - 2");
        assert_eq!(q("x1 - x1", 2).to_string(), "0");
        assert!(Polynomial::parse("x1 +", 2).is_err());
        assert!(Polynomial::parse("x3", 2).is_err());
        assert!(Polynomial::parse("1/0*x1", 2).is_err());
    }

    #[test]
    fn linear_change_examples() {
        let phi = LinearChange::<Rational>::shear(2, 2, &[(1, 1)]).unwrap();
        assert_eq!(phi.apply(&q("x2^2", 2)).unwrap(), q("x1^2 + 2*x1*x2 + x2^2", 2));

        let f = q("x1^3 - 5*x1*x2*x3", 3);
        assert_eq!(LinearChange::identity(3).apply(&f).unwrap(), f);

        // x_n -> x_i + x_n with n = 4, i = 2.
        let phi = LinearChange::<Rational>::shear(4, 4, &[(2, 1)]).unwrap();
        assert_eq!(phi.apply(&q("x4^2", 4)).unwrap(), q("x2^2 + 2*x2*x4 + x4^2", 4));
        assert!(LinearChange::<Rational>::from_integers(&[vec![1, 2], vec![2, 4]]).is_err());
        assert!(phi.apply(&q("x1", 2)).is_err());
    }
}
