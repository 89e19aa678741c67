//! Lexsegment ideals with a prescribed Hilbert function.

use std::collections::HashSet;

use crate::binomial::{binom_u128, monomial_count};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial, TermOrder};

/// The `d`-th Macaulay representation `a = C(k_d, d) + C(k_{d-1}, d-1) + ...`
/// with `k_d > k_{d-1} > ... > k_s >= s >= 1`, as `(k_t, t)` pairs from
/// `t = d` downwards. Empty for `a = 0`.
pub fn macaulay_representation(mut a: u128, d: u32) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut t = d;
    while a > 0 && t >= 1 {
        // Largest k with C(k, t) <= a.
        let mut k = u64::from(t);
        while binom_u128(k + 1, u64::from(t)).is_some_and(|c| c <= a) {
            k += 1;
        }
        a -= binom_u128(k, u64::from(t)).expect("bounded by a");
        out.push((k, t));
        t -= 1;
    }
    out
}

/// Macaulay's bound `a^<d>`: the largest possible quotient dimension in
/// degree `d + 1` given quotient dimension `a` in degree `d`. `None` for
/// `d = 0` or on overflow.
pub fn macaulay_upper(a: u128, d: u32) -> Option<u128> {
    if d == 0 {
        return None;
    }
    macaulay_representation(a, d)
        .into_iter()
        .try_fold(0u128, |acc, (k, t)| acc.checked_add(binom_u128(k + 1, u64::from(t) + 1)?))
}

/// Lexsegment ideal together with the degree up to which it was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexOutcome {
    pub ideal: MonomialIdeal,
    pub degree_bound: u32,
}

const DEGREE_CAP: u32 = 64;

/// `Lex(I)`. With `degree_bound = None` the construction stops once
/// persistence is certified; otherwise it runs exactly to the bound.
pub fn lex_ideal(ideal: &MonomialIdeal, degree_bound: Option<u32>) -> Result<MonomialIdeal> {
    lex_ideal_certified(ideal, degree_bound).map(|o| o.ideal)
}

pub fn lex_ideal_certified(ideal: &MonomialIdeal, degree_bound: Option<u32>) -> Result<LexOutcome> {
    let n = ideal.n();
    if ideal.is_unit() {
        return Err(Error::UnsupportedIdeal("lexification of the unit ideal".into()));
    }
    if ideal.is_zero() {
        return Ok(LexOutcome { ideal: ideal.clone(), degree_bound: 0 });
    }
    let top = ideal.max_generator_degree().unwrap_or(0);
    let mut gens: Vec<Monomial> = Vec::new();
    let mut d = 0;
    loop {
        let generated = MonomialIdeal::from_minimal(n, gens.clone());
        let h = ideal.hilbert_value(d) as usize;
        let segment = segment(n, d, h);
        let members: HashSet<&Monomial> = segment.iter().collect();
        if generated.graded_component(d).iter().any(|u| !members.contains(u)) {
            return Err(Error::SegmentNotIdeal { degree: d });
        }
        gens.extend(segment.iter().filter(|u| !generated.contains_unchecked(u)).cloned());

        match degree_bound {
            Some(b) if d >= b => break,
            Some(_) => {}
            None if d >= top && d >= 1 => {
                let q = |e: u32| u128::from(monomial_count(n, e) - ideal.hilbert_value(e));
                let grown = MonomialIdeal::from_minimal(n, gens.clone());
                if macaulay_upper(q(d), d) == Some(q(d + 1))
                    && grown.hilbert_value(d + 1) == ideal.hilbert_value(d + 1)
                {
                    return Ok(LexOutcome { ideal: MonomialIdeal::new(n, gens)?, degree_bound: d + 1 });
                }
                if d >= DEGREE_CAP {
                    return Err(Error::LexBoundExceeded(DEGREE_CAP));
                }
            }
            None => {}
        }
        d += 1;
    }
    Ok(LexOutcome { ideal: MonomialIdeal::new(n, gens)?, degree_bound: d })
}

fn segment(n: usize, d: u32, len: usize) -> Vec<Monomial> {
    let mut all = monomials_of_degree(n, d, TermOrder::Lex);
    all.truncate(len);
    all
}
