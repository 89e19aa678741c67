use crate::error::{check_dim, Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

use super::{BettiTable, Convention, FieldMode};

/// Betti numbers of `(I + (w)) / I`, which is isomorphic to
/// `(A / (I : w))(-deg w)`.
pub fn betti_cyclic_quotient(ideal: &MonomialIdeal, w: &Monomial, mode: FieldMode) -> Result<BettiTable> {
    check_dim(ideal.n(), w.n())?;
    if ideal.contains_unchecked(w) {
        return Err(Error::DegenerateQuotient(w.to_string()));
    }
    let colon = ideal.colon(w)?;
    let shift = w.degree();
    let mut table = BettiTable::new(ideal.n(), Convention::Module);
    table.add(0, shift, 1);
    if !colon.is_zero() {
        for (i, j, b) in super::betti_koszul(&colon, mode)?.entries() {
            table.add(i + 1, j + shift, b);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let i = MonomialIdeal::parse(2, "x1^2").unwrap();
        let t = betti_cyclic_quotient(&i, &Monomial::var(2, 2), FieldMode::Exact).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 1, 1), (1, 3, 1)]);
        let t = betti_cyclic_quotient(&MonomialIdeal::zero(2), &Monomial::var(2, 1), FieldMode::Exact).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 1, 1)]);
        assert!(matches!(
            betti_cyclic_quotient(&i, &Monomial::var(2, 1).times_var(1), FieldMode::Exact),
            Err(Error::DegenerateQuotient(_))
        ));
    }
}
