use crate::binomial::binom;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

use super::{BettiTable, Convention};

/// Eliahou–Kervaire: `beta_{q,q+d} = sum over generators u of degree d of
/// C(m(u) - 1, q)`.
pub fn betti_ek(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_strongly_stable() {
        return Err(Error::NotStronglyStable);
    }
    if ideal.is_unit() {
        return Err(Error::UnsupportedIdeal("Betti numbers of the unit ideal".into()));
    }
    let mut table = BettiTable::new(ideal.n(), Convention::Ideal);
    for u in ideal.generators() {
        let m = u.m_index()? as i64;
        for q in 0..m {
            table.add(q as usize, q as u32 + u.degree(), binom(m - 1, q) as u64);
        }
    }
    Ok(table)
}
