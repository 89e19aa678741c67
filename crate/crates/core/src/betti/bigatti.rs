use crate::binomial::binom;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

use super::{BettiTable, Convention};

/// Betti numbers of a strongly stable ideal from the counts `m_{<=k}(I, j)`.
pub fn betti_bigatti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_strongly_stable() {
        return Err(Error::NotStronglyStable);
    }
    if ideal.is_unit() {
        return Err(Error::UnsupportedIdeal("Betti numbers of the unit ideal".into()));
    }
    let n = ideal.n();
    let mut table = BettiTable::new(n, Convention::Ideal);
    let Some(top) = ideal.max_generator_degree() else {
        return Ok(table);
    };
    // counts[j][k] = m_{<=k}(I, j), k = 0..=n.
    let counts: Vec<Vec<i64>> = (0..=top)
        .map(|j| (0..=n).map(|k| ideal.m_leq_count(k, j) as i64).collect())
        .collect();
    let m = |k: usize, j: u32| counts[j as usize][k];
    let n_i = n as i64;
    for j in 1..=top {
        for i in 0..n {
            let ii = i as i64;
            let mut value = m(n, j) * binom(n_i - 1, ii);
            for k in i..n {
                value -= m(k, j) * binom(k as i64 - 1, ii - 1);
            }
            for k in i + 1..=n {
                value -= m(k, j - 1) * binom(k as i64 - 1, ii);
            }
            if value < 0 {
                return Err(Error::Other(format!("negative Betti number at ({i}, {})", i as u32 + j)));
            }
            table.add(i, i as u32 + j, value as u64);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::betti_ek;

    #[test]
    fn matches_closed_form_examples() {
        let t = betti_bigatti(&MonomialIdeal::maximal_power(2, 2)).unwrap();
        assert_eq!(t.get(1, 3), 2);
        assert_eq!(t, betti_ek(&MonomialIdeal::maximal_power(2, 2)).unwrap());
        let x1 = MonomialIdeal::parse(4, "x1").unwrap();
        assert_eq!(betti_bigatti(&x1).unwrap().entries().collect::<Vec<_>>(), vec![(0, 1, 1)]);
        let i = MonomialIdeal::parse(3, "x1^2, x1*x2, x2^3, x1*x3^2").unwrap();
        assert!(i.is_strongly_stable());
        assert_eq!(betti_bigatti(&i).unwrap(), betti_ek(&i).unwrap());
    }
}
