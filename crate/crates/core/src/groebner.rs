//! Division and Buchberger's algorithm for homogeneous ideals.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;

/// Full remainder of `f` on division by `basis`: no term of the result is
/// divisible by a leading monomial of the basis.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>], order: TermOrder) -> Polynomial<F> {
    let leads: Vec<(usize, Monomial, F)> = basis
        .iter()
        .enumerate()
        .filter_map(|(k, g)| g.leading_term(order).map(|(u, c)| (k, u.clone(), c.clone())))
        .collect();
    let mut rest = f.clone();
    let mut remainder = Polynomial::zero(f.n());
    while let Some((u, c)) = rest.leading_term(order).map(|(u, c)| (u.clone(), c.clone())) {
        match leads.iter().find(|(_, lm, _)| lm.divides(&u)) {
            Some((k, lm, lc)) => {
                let factor = c * lc.inverse();
                let shift = u.div(lm).expect("divisible");
                rest = rest.sub(&basis[*k].mul_term(&factor, &shift));
            }
            None => {
                remainder.add_term(c.clone(), u.clone());
                rest.add_term(-c, u);
            }
        }
    }
    remainder
}

fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, order: TermOrder) -> Polynomial<F> {
    let (uf, cf) = f.leading_term(order).expect("nonzero");
    let (ug, cg) = g.leading_term(order).expect("nonzero");
    let l = uf.lcm(ug);
    let a = f.mul_term(&cf.inverse(), &l.div(uf).expect("lcm"));
    let b = g.mul_term(&cg.inverse(), &l.div(ug).expect("lcm"));
    a.sub(&b)
}

/// Reduced Gröbner basis of the ideal generated by homogeneous `gens`.
///
/// Pairs are processed in order of increasing lcm degree. A pair is dropped
/// when its leading monomials are coprime, or when some third element's
/// leading monomial divides the lcm and both connecting pairs are already
/// treated. The output is monic, inter-reduced and sorted by leading
/// monomial, descending.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>], order: TermOrder) -> Result<Vec<Polynomial<F>>> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if !g.is_zero() {
            basis.push(g.monic(order));
        }
    }
    let Some(n) = basis.first().map(Polynomial::n) else {
        return Ok(Vec::new());
    };
    if basis.iter().any(|g| g.n() != n) {
        return Err(Error::Dimension {
            expected: n,
            found: basis.iter().map(Polynomial::n).find(|&m| m != n).unwrap(),
        });
    }

    let mut leads: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(order).unwrap().clone()).collect();
    // (lcm degree, i, j)
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending_pairs: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |k: usize, leads: &[Monomial], pending: &mut BTreeSet<_>, pp: &mut HashSet<_>| {
        for i in 0..k {
            let d = leads[i].lcm(&leads[k]).degree();
            pending.insert((d, i, k));
            pp.insert((i, k));
        }
    };
    for k in 0..basis.len() {
        push_pairs(k, &leads, &mut pending, &mut pending_pairs);
    }

    while let Some(&(d, i, j)) = pending.iter().next() {
        pending.remove(&(d, i, j));
        pending_pairs.remove(&(i, j));
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let l = leads[i].lcm(&leads[j]);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&l)
                && !pending_pairs.contains(&key(i, k))
                && !pending_pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        let r = r.monic(order);
        leads.push(r.leading_monomial(order).unwrap().clone());
        basis.push(r);
        let k = basis.len() - 1;
        push_pairs(k, &leads, &mut pending, &mut pending_pairs);
    }

    Ok(reduce_basis(basis, order))
}

fn reduce_basis<F: Field>(basis: Vec<Polynomial<F>>, order: TermOrder) -> Vec<Polynomial<F>> {
    // Minimal basis: drop elements whose leading monomial is divisible by
    // another's (ties broken by position).
    let leads: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(order).unwrap().clone()).collect();
    let mut keep: Vec<Polynomial<F>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(m, lm)| {
            m != k && lm.divides(&leads[k]) && (lm != &leads[k] || m < k)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<Polynomial<F>> = keep
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != k)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = keep[k].leading_term(order).map(|(u, c)| (u.clone(), c.clone())).unwrap();
        let tail = {
            let mut t = keep[k].clone();
            t.add_term(-lead.1.clone(), lead.0.clone());
            t
        };
        let mut g = normal_form(&tail, &others, order);
        g.add_term(lead.1, lead.0);
        reduced.push(g.monic(order));
    }
    reduced.sort_by(|a, b| {
        order.cmp_unchecked(b.leading_monomial(order).unwrap(), a.leading_monomial(order).unwrap())
    });
    reduced
}

/// Leading monomials of the reduced Gröbner basis.
pub fn initial_ideal<F: Field>(gens: &[Polynomial<F>], order: TermOrder, n: usize) -> Result<MonomialIdeal> {
    let basis = buchberger(gens, order)?;
    MonomialIdeal::new(n, basis.iter().map(|g| g.leading_monomial(order).unwrap().clone()))
}

/// Monomial generators of an ideal as polynomials.
pub fn ideal_polynomials<F: Field>(ideal: &MonomialIdeal) -> Vec<Polynomial<F>> {
    ideal.generators().iter().cloned().map(Polynomial::monomial).collect()
}
