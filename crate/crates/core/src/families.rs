//! Two families of monomial ideals separating the Betti numbers of `I`,
//! `Gin(I)` and `Lex(I)`, with closed forms for their generic initial and
//! lexsegment ideals.
//!
//! * `boston(n, i, j)`, `1 < i < j <= n`: `I = m^3 + J + (x_n^2)` where `J`
//!   is generated by the quadrics lex-greater than `x_{i-1} x_j`.
//! * `sydney(n, i, j)`, `2 <= j <= i < n`:
//!   `I = x_1(H + (x_n^2)) + x_1 m^3 + x_2^2 (G + (x_n^2)) + m^5`, where `H`
//!   holds the quadrics `>= x_{j-1} x_j` and `G` the quadrics in
//!   `x_2..x_n` that are `>= x_i^2`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::binomial::binom;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Boston,
    Sydney,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Boston => "boston",
            Family::Sydney => "sydney",
        }
    }

    /// All valid `(n, i, j)` with `n <= max_n`, sorted.
    pub fn cases(&self, max_n: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for i in 1..=n {
                for j in 1..=n {
                    if self.valid(n, i, j) {
                        out.push((n, i, j));
                    }
                }
            }
        }
        out
    }

    pub fn valid(&self, n: usize, i: usize, j: usize) -> bool {
        match self {
            Family::Boston => 1 < i && i < j && j <= n,
            Family::Sydney => 2 <= j && j <= i && i < n,
        }
    }

    pub fn instance(&self, n: usize, i: usize, j: usize) -> Result<FamilyInstance> {
        match self {
            Family::Boston => boston(n, i, j),
            Family::Sydney => sydney(n, i, j),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "boston" => Ok(Family::Boston),
            "sydney" => Ok(Family::Sydney),
            _ => Err(Error::ParameterRange(format!("unknown family '{s}'"))),
        }
    }
}

/// Auxiliary ideals used by the identities checked for each family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parts {
    Boston {
        /// Quadrics lex-greater than `x_{i-1} x_j`.
        j: MonomialIdeal,
    },
    Sydney {
        h: MonomialIdeal,
        g: MonomialIdeal,
        /// `x_1 H`.
        i_tilde: MonomialIdeal,
        /// `x_1(H + (x_j^2)) + x_1 m^3 + x_2^2 G`.
        j: MonomialIdeal,
        /// `x_1(H + (x_n^2)) + x_1 m^3 + x_2^2 G`.
        j_tilde: MonomialIdeal,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub family: Family,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub ideal: MonomialIdeal,
    pub gin_closed: MonomialIdeal,
    pub lex_closed: MonomialIdeal,
    pub parts: Parts,
}

/// Quadrics `x_p x_q` (`p <= q`, both in `vars`) satisfying `keep`.
pub fn quadrics_where(
    n: usize,
    vars: std::ops::RangeInclusive<usize>,
    keep: impl Fn(&Monomial) -> bool,
) -> MonomialIdeal {
    let mut gens = Vec::new();
    for p in vars.clone() {
        for q in p..=*vars.end() {
            let u = Monomial::quadric(n, p, q);
            if keep(&u) {
                gens.push(u);
            }
        }
    }
    MonomialIdeal::new(n, gens).expect("same dimension")
}

fn lex_cmp(u: &Monomial, v: &Monomial) -> Ordering {
    TermOrder::Lex.cmp_unchecked(u, v)
}

fn principal(u: Monomial) -> MonomialIdeal {
    let n = u.n();
    MonomialIdeal::new(n, [u]).expect("same dimension")
}

fn sum(parts: &[&MonomialIdeal]) -> MonomialIdeal {
    let n = parts[0].n();
    MonomialIdeal::new(n, parts.iter().flat_map(|p| p.generators().iter().cloned())).expect("same dimension")
}

pub fn boston(n: usize, i: usize, j: usize) -> Result<FamilyInstance> {
    if !Family::Boston.valid(n, i, j) || n > crate::monomial::MAX_VARS {
        return Err(Error::ParameterRange(format!("boston needs 1 < i < j <= n, got n={n}, i={i}, j={j}")));
    }
    let pivot = Monomial::quadric(n, i - 1, j);
    let jj = quadrics_where(n, 1..=n, |u| lex_cmp(u, &pivot) == Ordering::Greater);
    let m3 = MonomialIdeal::maximal_power(n, 3);
    let with = |u: Monomial| sum(&[&m3, &jj, &principal(u)]);
    Ok(FamilyInstance {
        family: Family::Boston,
        n,
        i,
        j,
        ideal: with(Monomial::quadric(n, n, n)),
        gin_closed: with(Monomial::quadric(n, i, i)),
        lex_closed: with(pivot.clone()),
        parts: Parts::Boston { j: jj },
    })
}

pub fn sydney(n: usize, i: usize, j: usize) -> Result<FamilyInstance> {
    if !Family::Sydney.valid(n, i, j) || n > crate::monomial::MAX_VARS {
        return Err(Error::ParameterRange(format!("sydney needs 2 <= j <= i < n, got n={n}, i={i}, j={j}")));
    }
    let x1 = Monomial::var(n, 1);
    let x2sq = Monomial::quadric(n, 2, 2);
    let h_pivot = Monomial::quadric(n, j - 1, j);
    let h = quadrics_where(n, 1..=n, |u| lex_cmp(u, &h_pivot) != Ordering::Less);
    let g_pivot = Monomial::quadric(n, i, i);
    let g = quadrics_where(n, 2..=n, |u| lex_cmp(u, &g_pivot) != Ordering::Less);
    let m3 = MonomialIdeal::maximal_power(n, 3);
    let m5 = MonomialIdeal::maximal_power(n, 5);
    let x1m3 = m3.scale(&x1)?;

    let h_plus = |u: Monomial| sum(&[&h, &principal(u)]).scale(&x1).expect("same dimension");
    let g_plus = |u: Monomial| sum(&[&g, &principal(u)]).scale(&x2sq).expect("same dimension");
    let x2g = g.scale(&x2sq)?;
    let xn_sq = Monomial::quadric(n, n, n);
    let xi_xi1 = Monomial::quadric(n, i, i + 1);

    let ideal = sum(&[&h_plus(xn_sq.clone()), &x1m3, &g_plus(xn_sq.clone()), &m5]);
    let gin_closed = sum(&[&h_plus(Monomial::quadric(n, j, j)), &x1m3, &g_plus(xi_xi1.clone()), &m5]);
    let lex_closed = sum(&[&h_plus(Monomial::quadric(n, j - 1, j + 1)), &x1m3, &g_plus(xi_xi1), &m5]);
    let i_tilde = h.scale(&x1)?;
    let jj = sum(&[&h_plus(Monomial::quadric(n, j, j)), &x1m3, &x2g]);
    let j_tilde = sum(&[&h_plus(xn_sq), &x1m3, &x2g]);
    Ok(FamilyInstance {
        family: Family::Sydney,
        n,
        i,
        j,
        ideal,
        gin_closed,
        lex_closed,
        parts: Parts::Sydney { h, g, i_tilde, j: jj, j_tilde },
    })
}

/// Quadrics `x_p x_q` with `x_p x_q >= x_i^2`, either with `p < q` only
/// (`strict = true`) or with `p <= q`.
pub fn g_tilde(n: usize, i: usize, strict: bool) -> MonomialIdeal {
    let pivot = Monomial::quadric(n, i, i);
    quadrics_where(n, 1..=n, |u| {
        let square = u.support().count() == 1;
        lex_cmp(u, &pivot) != Ordering::Less && !(strict && square)
    })
}

/// A predicted difference `beta_{k,k+strand}(left) - beta_{k,k+strand}(right)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaRecord {
    pub id: &'static str,
    pub left: &'static str,
    pub right: &'static str,
    pub strand: u32,
    pub formula: String,
    /// Values for `k = 0..=n`.
    pub values: Vec<i64>,
}

pub fn expected_deltas(inst: &FamilyInstance) -> Vec<DeltaRecord> {
    let (n, i, j) = (inst.n as i64, inst.i as i64, inst.j as i64);
    let record = |id, left, right, strand, formula: &str, f: &dyn Fn(i64) -> i64| DeltaRecord {
        id,
        left,
        right,
        strand,
        formula: formula.to_string(),
        values: (0..=n).map(f).collect(),
    };
    match inst.family {
        Family::Boston => vec![
            record("delta-i", "I", "J", 2, "C(i-2,k)", &|k| binom(i - 2, k)),
            record("delta-gin", "Gin", "J", 2, "C(i-1,k)", &|k| binom(i - 1, k)),
            record("delta-lex", "Lex", "J", 2, "C(j-1,k)", &|k| binom(j - 1, k)),
        ],
        Family::Sydney => vec![
            record("delta3-i", "I", "x1H", 3, "C(j-2,k)", &|k| binom(j - 2, k)),
            record("delta3-gin", "Gin", "x1H", 3, "C(j-1,k)", &|k| binom(j - 1, k)),
            record(
                "delta4-i",
                "I",
                "J",
                4,
                "C(i-1,k) - C(j-1,k+1) + C(j-2,k+1)",
                &|k| binom(i - 1, k) - binom(j - 1, k + 1) + binom(j - 2, k + 1),
            ),
            record("delta4-gin", "Gin", "J", 4, "C(i,k)", &|k| binom(i, k)),
            record(
                "delta4-j",
                "J",
                "J~",
                4,
                "C(j-1,k+1) - C(j-2,k+1)",
                &|k| binom(j - 1, k + 1) - binom(j - 2, k + 1),
            ),
            record("delta4-i-jt", "I", "J~", 4, "C(i-1,k)", &|k| binom(i - 1, k)),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(n, s).unwrap()
    }

    #[test]
    fn boston_small_instance() {
        let b = boston(4, 2, 3).unwrap();
        let Parts::Boston { j } = &b.parts else { panic!() };
        assert_eq!(j, &ideal(4, "x1^2, x1*x2"));
        let m3 = MonomialIdeal::maximal_power(4, 3);
        assert_eq!(b.ideal, m3.sum(&ideal(4, "x1^2, x1*x2, x4^2")).unwrap());
        assert_eq!(b.gin_closed, m3.sum(&ideal(4, "x1^2, x1*x2, x2^2")).unwrap());
        assert_eq!(b.lex_closed, m3.sum(&ideal(4, "x1^2, x1*x2, x1*x3")).unwrap());
        assert!(b.lex_closed.is_lexsegment());
        assert!(matches!(boston(2, 1, 2), Err(Error::ParameterRange(_))));
    }

    #[test]
    fn sydney_small_instance() {
        let s = sydney(3, 2, 2).unwrap();
        let Parts::Sydney { h, g, .. } = &s.parts else { panic!() };
        assert_eq!(h, &ideal(3, "x1^2, x1*x2"));
        assert_eq!(g, &ideal(3, "x2^2"));
        assert!(s.ideal.contains(&Monomial::parse("x1*x3^2", 3).unwrap()).unwrap());
        assert!(s.ideal.contains(&Monomial::parse("x2^2*x3^2", 3).unwrap()).unwrap());
        assert!(s.ideal.contains(&Monomial::parse("x2^4", 3).unwrap()).unwrap());
        assert!(!s.ideal.contains(&Monomial::parse("x2^3*x3", 3).unwrap()).unwrap());
        assert!(sydney(3, 3, 2).is_err());
    }

    #[test]
    fn case_counts() {
        assert_eq!(Family::Boston.cases(6).len(), 20);
        assert_eq!(Family::Sydney.cases(5).len(), 10);
    }

    #[test]
    fn delta_examples() {
        let d = expected_deltas(&boston(4, 2, 3).unwrap());
        assert_eq!(d[1].values[1] - d[0].values[1], 1);
        assert_eq!(d[2].values[0] - d[1].values[0], 0);
    }
}
