//! Sample generators and independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use ginlex::{Monomial, MonomialIdeal};
use proptest::prelude::*;
use rand::Rng;

/// Prime for the test-side rank computations.
pub const ORACLE_PRIME: u64 = 1_000_000_007;

/// All exponent vectors of total degree `d` in `n` variables, built by
/// recursion rather than through the library's enumeration.
pub fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponent_vectors(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn all_monomials(n: usize, d: u32) -> Vec<Monomial> {
    exponent_vectors(n, d).into_iter().map(|e| Monomial::new(e).unwrap()).collect()
}

/// Membership by direct divisibility against the generators.
pub fn member(ideal: &MonomialIdeal, u: &Monomial) -> bool {
    ideal.generators().iter().any(|g| g.divides(u))
}

pub fn component_oracle(ideal: &MonomialIdeal, d: u32) -> BTreeSet<Vec<u32>> {
    all_monomials(ideal.n(), d)
        .into_iter()
        .filter(|u| member(ideal, u))
        .map(|u| u.exponents().to_vec())
        .collect()
}

/// Strong stability checked on every monomial of every degree up to the top
/// generator degree plus one.
pub fn strongly_stable_oracle(ideal: &MonomialIdeal) -> bool {
    let top = ideal.max_generator_degree().unwrap_or(0) + 1;
    (0..=top).all(|d| {
        all_monomials(ideal.n(), d).iter().filter(|u| member(ideal, u)).all(|u| {
            (1..=ideal.n()).all(|p| {
                u.exponent(p) == 0 || (1..p).all(|q| member(ideal, &u.over_var(p).unwrap().times_var(q)))
            })
        })
    })
}

/// Rank modulo [`ORACLE_PRIME`] by dense elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let p = ORACLE_PRIME;
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for c in col..width {
            rows[rank][c] = rows[rank][c] * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in col..width {
                    rows[r][c] = (rows[r][c] + p * p - f * rows[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn to_mod_p(v: i64) -> u64 {
    v.rem_euclid(ORACLE_PRIME as i64) as u64
}

/// `beta_{i,j}(I)` as the degree-`j` homology of the Koszul complex of `A/I`
/// in homological degree `i + 1`, one full strand at a time.
pub fn betti_oracle(ideal: &MonomialIdeal, i: usize, j: u32) -> u64 {
    let n = ideal.n();
    let k = i + 1;
    if k > n {
        return 0;
    }
    let basis = |k: usize| -> Vec<(u32, Monomial)> {
        if k > n || (j as usize) < k {
            return Vec::new();
        }
        let standard: Vec<Monomial> = all_monomials(n, j - k as u32)
            .into_iter()
            .filter(|u| !member(ideal, u))
            .collect();
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .flat_map(|s| standard.iter().map(move |u| (s, u.clone())))
            .collect()
    };
    let boundary_rank = |k: usize| -> usize {
        if k == 0 || k > n {
            return 0;
        }
        let src = basis(k);
        let dst = basis(k - 1);
        if src.is_empty() || dst.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<u64>> = src
            .iter()
            .map(|(s, u)| {
                let mut row = vec![0u64; dst.len()];
                for v in 0..n {
                    if s & (1 << v) == 0 {
                        continue;
                    }
                    let image = u.times_var(v + 1);
                    if member(ideal, &image) {
                        continue;
                    }
                    let face = s & !(1 << v);
                    let below = (s & ((1 << v) - 1)).count_ones();
                    let col = dst.iter().position(|(t, w)| *t == face && *w == image).unwrap();
                    row[col] = if below % 2 == 0 { 1 } else { ORACLE_PRIME - 1 };
                }
                row
            })
            .collect();
        rank_mod_p(rows)
    };
    let dim = basis(k).len();
    (dim - boundary_rank(k) - boundary_rank(k + 1)) as u64
}

/// Random monomial ideal with generator degrees in `1..=max_deg`.
pub fn random_ideal(rng: &mut impl Rng, n: usize, max_deg: u32, max_gens: usize) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count).map(|_| {
        let d = rng.gen_range(1..=max_deg);
        let mut e = vec![0u32; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        Monomial::new(e).unwrap()
    });
    MonomialIdeal::new(n, gens).unwrap()
}

/// Smallest strongly stable ideal containing the given monomials.
pub fn borel_closure(n: usize, seeds: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut stack: Vec<Monomial> = seeds.into_iter().collect();
    while let Some(u) = stack.pop() {
        if !seen.insert(u.exponents().to_vec()) {
            continue;
        }
        for p in 2..=n {
            if u.exponent(p) > 0 {
                for q in 1..p {
                    stack.push(u.over_var(p).unwrap().times_var(q));
                }
            }
        }
    }
    MonomialIdeal::new(n, seen.into_iter().map(|e| Monomial::new(e).unwrap())).unwrap()
}

pub fn random_strongly_stable(rng: &mut impl Rng, n: usize, max_deg: u32, max_gens: usize) -> MonomialIdeal {
    let seeds = random_ideal(rng, n, max_deg, max_gens);
    borel_closure(n, seeds.generators().iter().cloned())
}

/// Quadrics `x_p x_q` (`p <= q`), in lex order.
pub fn quadrics(n: usize) -> Vec<Monomial> {
    (1..=n).flat_map(|p| (p..=n).map(move |q| Monomial::quadric(n, p, q))).collect()
}

/// Nonzero quadratic monomial ideal from a bitmask over [`quadrics`].
pub fn quadratic_from_mask(n: usize, mask: u64) -> MonomialIdeal {
    let all = quadrics(n);
    MonomialIdeal::new(n, all.into_iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, u)| u)).unwrap()
}

pub fn random_quadratic(rng: &mut impl Rng, n: usize) -> MonomialIdeal {
    let count = quadrics(n).len();
    let mask = rng.gen_range(1..1u64 << count);
    quadratic_from_mask(n, mask)
}

pub fn arb_monomial(n: usize, max_deg: u32) -> impl Strategy<Value = Monomial> {
    (1..=max_deg).prop_flat_map(move |d| prop::collection::vec(0..n, d as usize)).prop_map(move |vars| {
        let mut e = vec![0u32; n];
        for v in vars {
            e[v] += 1;
        }
        Monomial::new(e).unwrap()
    })
}

pub fn arb_ideal_in(n: usize, max_deg: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(arb_monomial(n, max_deg), 1..=max_gens)
        .prop_map(move |gens| MonomialIdeal::new(n, gens).unwrap())
}

pub fn arb_ideal(max_n: usize, max_deg: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| arb_ideal_in(n, max_deg, max_gens))
}

pub fn arb_strongly_stable(max_n: usize, max_deg: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    arb_ideal(max_n, max_deg, max_gens).prop_map(|i| borel_closure(i.n(), i.generators().iter().cloned()))
}

pub fn arb_quadratic(max_n: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(|n| {
        let count = quadrics(n).len() as u32;
        (1u64..1 << count).prop_map(move |mask| quadratic_from_mask(n, mask))
    })
}
