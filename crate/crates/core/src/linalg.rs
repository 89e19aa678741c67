//! Dense exact linear algebra: ranks over prime fields and over the
//! rationals (fraction-free), and incremental row echelon forms that
//! report the column rank profile.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::field::Field;

/// Rank by Gaussian elimination over a field.
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse();
        let pivot_row: Vec<F> = rows[rank].iter().map(|v| v.clone() * inv.clone()).collect();
        for r in rank + 1..rows.len() {
            let factor = rows[r][col].clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..width {
                let delta = factor.clone() * pivot_row[c].clone();
                rows[r][c] = rows[r][c].clone() - delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank over the rationals of an integer matrix (Bareiss elimination).
pub fn rank_exact(mut rows: Vec<Vec<BigInt>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            let factor = rows[r][col].clone();
            for c in col..width {
                let v = &p * &rows[r][c] - &factor * &rows[rank][c];
                rows[r][c] = v / &prev;
            }
        }
        prev = p;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Incremental echelon basis over a field.
///
/// Every stored row has a distinct pivot (leftmost nonzero column), so the
/// pivot set equals the set of leading positions of all nonzero vectors of
/// the row space.
pub struct Echelon<F> {
    width: usize,
    by_pivot: Vec<Option<Vec<F>>>,
    count: usize,
}

impl<F: Field> Echelon<F> {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            by_pivot: vec![None; width],
            count: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.count
    }

    pub fn is_full(&self) -> bool {
        self.count == self.width
    }

    /// Inserts a row; returns its new pivot column, or `None` if it was
    /// already in the span.
    pub fn insert(&mut self, mut row: Vec<F>) -> Option<usize> {
        assert_eq!(row.len(), self.width);
        for col in 0..self.width {
            if row[col].is_zero() {
                continue;
            }
            match &self.by_pivot[col] {
                Some(prow) => {
                    let factor = row[col].clone();
                    for c in col..self.width {
                        if !prow[c].is_zero() {
                            row[c] = row[c].clone() - factor.clone() * prow[c].clone();
                        }
                    }
                }
                None => {
                    let inv = row[col].inverse();
                    for v in row[col..].iter_mut() {
                        *v = v.clone() * inv.clone();
                    }
                    self.by_pivot[col] = Some(row);
                    self.count += 1;
                    return Some(col);
                }
            }
        }
        None
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.width).filter(|&c| self.by_pivot[c].is_some()).collect()
    }
}

/// Fraction-free incremental echelon basis for integer rows (rank over Q).
pub struct IntEchelon {
    width: usize,
    by_pivot: Vec<Option<Vec<BigInt>>>,
    count: usize,
}

impl IntEchelon {
    pub fn new(width: usize) -> Self {
        IntEchelon {
            width,
            by_pivot: vec![None; width],
            count: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.count
    }

    pub fn is_full(&self) -> bool {
        self.count == self.width
    }

    pub fn insert(&mut self, mut row: Vec<BigInt>) -> Option<usize> {
        assert_eq!(row.len(), self.width);
        for col in 0..self.width {
            if row[col].is_zero() {
                continue;
            }
            match &self.by_pivot[col] {
                Some(prow) => {
                    let a = &prow[col];
                    let g = a.gcd(&row[col]);
                    let scale_row = a / &g;
                    let scale_piv = &row[col] / &g;
                    for c in col..self.width {
                        let v = &scale_row * &row[c] - &scale_piv * &prow[c];
                        row[c] = v;
                    }
                    make_primitive(&mut row[col..]);
                }
                None => {
                    make_primitive(&mut row[col..]);
                    if row[col].is_negative() {
                        for v in row.iter_mut() {
                            *v = -std::mem::take(v);
                        }
                    }
                    self.by_pivot[col] = Some(row);
                    self.count += 1;
                    return Some(col);
                }
            }
        }
        None
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.width).filter(|&c| self.by_pivot[c].is_some()).collect()
    }
}

fn make_primitive(values: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in values.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g == BigInt::from(1) {
                return;
            }
        }
    }
    if g > BigInt::from(1) {
        for v in values.iter_mut() {
            *v = &*v / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    type F = Fp<32003>;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    fn fp(rows: &[&[i64]]) -> Vec<Vec<F>> {
        rows.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect()
    }

    #[test]
    fn ranks_agree_on_small_matrices() {
        let cases: [&[&[i64]]; 4] = [
            &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]],
            &[&[0, 0], &[0, 0]],
            &[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1], &[-1, 0, 0, 1]],
            &[&[2, 0], &[0, 3], &[5, 7]],
        ];
        let expected = [2, 0, 3, 2];
        for (case, want) in cases.iter().zip(expected) {
            assert_eq!(rank_exact(ints(case)), want);
            assert_eq!(rank(fp(case)), want);
            let q: Vec<Vec<Rational>> =
                case.iter().map(|r| r.iter().map(|&v| Rational::from_i64(v)).collect()).collect();
            assert_eq!(rank(q), want);
        }
    }

    #[test]
    fn characteristic_sensitive_rank() {
        // det = 32003, singular only modulo 32003.
        let m: &[&[i64]] = &[&[32003, 0], &[0, 1]];
        assert_eq!(rank_exact(ints(m)), 2);
        assert_eq!(rank(fp(m)), 1);
    }

    #[test]
    fn echelon_pivots_are_leading_positions() {
        let mut e = Echelon::<F>::new(4);
        assert_eq!(e.insert(fp(&[&[0, 1, 1, 0]]).remove(0)), Some(1));
        assert_eq!(e.insert(fp(&[&[0, 2, 2, 0]]).remove(0)), None);
        assert_eq!(e.insert(fp(&[&[0, 1, 0, 1]]).remove(0)), Some(2));
        assert_eq!(e.insert(fp(&[&[3, 0, 0, 0]]).remove(0)), Some(0));
        assert_eq!(e.pivots(), vec![0, 1, 2]);

        let mut z = IntEchelon::new(4);
        for row in ints(&[&[0, 1, 1, 0], &[0, 2, 2, 0], &[0, 1, 0, 1], &[3, 0, 0, 0]]) {
            z.insert(row);
        }
        assert_eq!(z.pivots(), vec![0, 1, 2]);
        assert_eq!(z.rank(), 3);
    }
}
