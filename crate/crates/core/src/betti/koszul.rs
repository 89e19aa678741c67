//! Betti numbers as Koszul homology, one multidegree at a time.
//!
//! For a multidegree `a`, the degree-`a` part of `K(x) ⊗ I` has a basis
//! indexed by the squarefree sets `S ⊆ supp(a)` with `x^(a - S)` in `I`, and
//! `beta_{i,a}(I)` is the homology at `|S| = i`. Only multidegrees dividing
//! the lcm of the generators can carry homology.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, Fp, RANK_PRIMES};
use crate::ideal::MonomialIdeal;
use crate::linalg::{rank, rank_exact};

use super::{BettiTable, Convention};

/// How boundary ranks are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldMode {
    /// Fraction-free elimination over the integers (characteristic 0).
    Exact,
    /// Modulo two primes; the ranks must agree.
    DualPrime,
}

type P1 = Fp<{ RANK_PRIMES.0 }>;
type P2 = Fp<{ RANK_PRIMES.1 }>;

pub fn betti_koszul(ideal: &MonomialIdeal, mode: FieldMode) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::UnsupportedIdeal("Betti numbers of the unit ideal".into()));
    }
    let n = ideal.n();
    let mut table = BettiTable::new(n, Convention::Ideal);
    if ideal.is_zero() {
        return Ok(table);
    }
    let bounds: Vec<usize> = ideal.generator_lcm().exponents().iter().map(|&e| e as usize + 1).collect();
    let size: usize = bounds.iter().product();
    let mut strides = vec![1usize; n];
    for k in 1..n {
        strides[k] = strides[k - 1] * bounds[k - 1];
    }
    let decode = |mut idx: usize| -> Vec<u32> {
        bounds
            .iter()
            .map(|&b| {
                let e = idx % b;
                idx /= b;
                e as u32
            })
            .collect()
    };

    // membership[idx] <=> x^a in I, filled in increasing index order.
    let mut membership = vec![false; size];
    for g in ideal.generators() {
        let idx: usize = g.exponents().iter().zip(&strides).map(|(&e, &s)| e as usize * s).sum();
        membership[idx] = true;
    }
    for idx in 0..size {
        if membership[idx] {
            continue;
        }
        let a = decode(idx);
        membership[idx] = (0..n).any(|k| a[k] > 0 && membership[idx - strides[k]]);
    }

    let results: Vec<Result<Vec<(usize, u32, u64)>>> = (0..size)
        .into_par_iter()
        .filter(|&idx| membership[idx])
        .map(|idx| {
            let a = decode(idx);
            multidegree_betti(&a, &strides, idx, &membership, mode)
                .map(|v| v.into_iter().map(|(i, b)| (i, a.iter().sum(), b)).collect())
        })
        .collect();
    for r in results {
        for (i, j, b) in r? {
            table.add(i, j, b);
        }
    }
    Ok(table)
}

/// Dual-prime ranks, escalating to exact arithmetic on disagreement.
pub fn betti_koszul_auto(ideal: &MonomialIdeal) -> Result<BettiTable> {
    match betti_koszul(ideal, FieldMode::DualPrime) {
        Err(Error::PrimeDisagreement { .. }) => betti_koszul(ideal, FieldMode::Exact),
        other => other,
    }
}

fn multidegree_betti(
    a: &[u32],
    strides: &[usize],
    idx: usize,
    membership: &[bool],
    mode: FieldMode,
) -> Result<Vec<(usize, u64)>> {
    let support: Vec<usize> = (0..a.len()).filter(|&k| a[k] > 0).collect();
    let s = support.len();
    let offset = |mask: u32| -> usize {
        (0..s).filter(|&t| mask >> t & 1 == 1).map(|t| strides[support[t]]).sum()
    };
    // The full support gives a cone: the complex is acyclic.
    if membership[idx - offset((1u32 << s) - 1)] {
        return Ok(Vec::new());
    }
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..(1u32 << s) {
        if membership[idx - offset(mask)] {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    // ranks[i] = rank of the boundary C_i -> C_{i-1}.
    let mut ranks = vec![0usize; s + 2];
    for i in 1..=s {
        if faces[i].is_empty() || faces[i - 1].is_empty() {
            continue;
        }
        let matrix = boundary(&faces[i], &faces[i - 1]);
        ranks[i] = match mode {
            FieldMode::Exact => rank_exact(
                matrix.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
            ),
            FieldMode::DualPrime => {
                let r1 = rank(lift::<P1>(&matrix));
                let r2 = rank(lift::<P2>(&matrix));
                if r1 != r2 {
                    return Err(Error::PrimeDisagreement {
                        p1: RANK_PRIMES.0,
                        p2: RANK_PRIMES.1,
                        multidegree: a.to_vec(),
                    });
                }
                r1
            }
        };
    }
    let mut out = Vec::new();
    for i in 0..=s {
        let h = faces[i].len() - ranks[i] - ranks[i + 1];
        if h > 0 {
            out.push((i, h as u64));
        }
    }
    Ok(out)
}

/// Rows are the faces of size `i`, columns the faces of size `i - 1`;
/// removing the `r`-th element of a face carries the sign `(-1)^r`.
fn boundary(upper: &[u32], lower: &[u32]) -> Vec<Vec<i64>> {
    upper
        .iter()
        .map(|&f| {
            let mut row = vec![0i64; lower.len()];
            let mut r = 0;
            for t in 0..32 {
                if f >> t & 1 == 0 {
                    continue;
                }
                let face = f & !(1 << t);
                if let Ok(pos) = lower.binary_search(&face) {
                    row[pos] = if r % 2 == 0 { 1 } else { -1 };
                }
                r += 1;
            }
            row
        })
        .collect()
}

fn lift<F: Field>(matrix: &[Vec<i64>]) -> Vec<Vec<F>> {
    matrix.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(s: &str, n: usize, mode: FieldMode) -> Vec<(usize, u32, u64)> {
        betti_koszul(&MonomialIdeal::parse(n, s).unwrap(), mode).unwrap().entries().collect()
    }

    #[test]
    fn small_ideals() {
        for mode in [FieldMode::Exact, FieldMode::DualPrime] {
            assert_eq!(entries("x1", 2, mode), vec![(0, 1, 1)]);
            assert_eq!(entries("x1, x2", 2, mode), vec![(0, 1, 2), (1, 2, 1)]);
            assert_eq!(entries("x1^2, x1*x2, x2^2", 2, mode), vec![(0, 2, 3), (1, 3, 2)]);
            assert_eq!(entries("x1, x2, x3", 3, mode), vec![(0, 1, 3), (1, 2, 3), (2, 3, 1)]);
        }
    }

    #[test]
    fn non_stable_ideal() {
        // Complete intersection of two quadrics plus a coprime cubic.
        let t = entries("x1^2, x2^2, x3^3", 3, FieldMode::Exact);
        assert_eq!(
            t,
            vec![(0, 2, 2), (0, 3, 1), (1, 4, 1), (1, 5, 2), (2, 7, 1)]
        );
    }
}
