//! Binomial coefficients with the "zero outside the triangle" convention.

/// `C(a, b)`, evaluating to zero whenever `b < 0`, `a < 0` or `a < b`.
pub fn binom(a: i64, b: i64) -> i64 {
    if b < 0 || a < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for t in 1..=b {
        acc = acc * (a - b + t) as i128 / t as i128;
    }
    i64::try_from(acc).expect("binomial coefficient overflows i64")
}

/// Unsigned binomial for the Macaulay arithmetic; `None` on overflow.
pub fn binom_u128(a: u64, b: u64) -> Option<u128> {
    if a < b {
        return Some(0);
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for t in 1..=b as u128 {
        acc = acc.checked_mul(a as u128 - b as u128 + t)? / t;
    }
    Some(acc)
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: u32) -> u64 {
    if n == 0 {
        return u64::from(d == 0);
    }
    binom_u128(n as u64 + d as u64 - 1, d as u64)
        .and_then(|v| u64::try_from(v).ok())
        .expect("monomial count overflows u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_triangle() {
        for a in 1..30 {
            for b in 1..a {
                assert_eq!(binom(a, b), binom(a - 1, b - 1) + binom(a - 1, b));
            }
        }
    }

    #[test]
    fn out_of_range_is_zero() {
        assert_eq!(binom(2, 3), 0);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(4, -1), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom_u128(3, 5), Some(0));
    }

    #[test]
    fn counts() {
        assert_eq!(monomial_count(4, 2), 10);
        assert_eq!(monomial_count(3, 0), 1);
        assert_eq!(monomial_count(5, 6), 210);
    }
}
