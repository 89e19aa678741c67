mod common;

use std::cmp::Ordering;

use ginlex::monomial::monomials_of_degree;
use ginlex::{Monomial, TermOrder};
use proptest::prelude::*;

use common::all_monomials;

const ORDERS: [TermOrder; 2] = [TermOrder::Lex, TermOrder::RevLex];

#[test]
fn orders_are_multiplicative_exhaustively() {
    for n in 1..=4 {
        for d in 0..=3 {
            let ms = all_monomials(n, d);
            for order in ORDERS {
                for u in &ms {
                    for v in &ms {
                        if order.compare(u, v).unwrap() != Ordering::Greater {
                            continue;
                        }
                        for e in 0..=3 {
                            for w in all_monomials(n, e) {
                                assert_eq!(
                                    order.compare(&u.mul(&w), &v.mul(&w)).unwrap(),
                                    Ordering::Greater,
                                    "{order:?}: {u} > {v} but not after multiplying by {w}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn degree_lists_descend_with_binomial_length() {
    for n in 1..=5 {
        for d in 0..=5 {
            let expected = ginlex::binomial::monomial_count(n, d);
            for order in ORDERS {
                let list = monomials_of_degree(n, d, order);
                assert_eq!(list.len() as u64, expected);
                assert_eq!(list.len(), all_monomials(n, d).len());
                for w in list.windows(2) {
                    assert_eq!(order.compare(&w[0], &w[1]).unwrap(), Ordering::Greater);
                }
                if d > 0 {
                    let first = Monomial::new((0..n).map(|k| if k == 0 { d } else { 0 }).collect()).unwrap();
                    let last = Monomial::new((0..n).map(|k| if k == n - 1 { d } else { 0 }).collect()).unwrap();
                    assert_eq!(list.first(), Some(&first));
                    assert_eq!(list.last(), Some(&last));
                }
            }
        }
    }
}

#[test]
fn orders_differ_in_three_variables() {
    let a = Monomial::parse("x1*x3", 3).unwrap();
    let b = Monomial::parse("x2^2", 3).unwrap();
    assert_eq!(TermOrder::Lex.compare(&a, &b).unwrap(), Ordering::Greater);
    assert_eq!(TermOrder::RevLex.compare(&a, &b).unwrap(), Ordering::Less);
}

proptest! {
    #[test]
    fn text_round_trip(e in prop::collection::vec(0u32..5, 1..6)) {
        let u = Monomial::new(e.clone()).unwrap();
        let back = Monomial::parse(&u.to_string(), e.len()).unwrap();
        prop_assert_eq!(back, u);
    }

    #[test]
    fn compare_is_antisymmetric(a in prop::collection::vec(0u32..4, 3), b in prop::collection::vec(0u32..4, 3)) {
        let u = Monomial::new(a).unwrap();
        let v = Monomial::new(b).unwrap();
        for order in ORDERS {
            prop_assert_eq!(order.compare(&u, &v).unwrap(), order.compare(&v, &u).unwrap().reverse());
            prop_assert_eq!(order.compare(&u, &v).unwrap() == Ordering::Equal, u == v);
        }
    }

    #[test]
    fn lcm_and_gcd_divide(a in prop::collection::vec(0u32..4, 4), b in prop::collection::vec(0u32..4, 4)) {
        let u = Monomial::new(a).unwrap();
        let v = Monomial::new(b).unwrap();
        let l = u.lcm(&v);
        let g = u.gcd(&v);
        prop_assert!(u.divides(&l) && v.divides(&l));
        prop_assert!(g.divides(&u) && g.divides(&v));
        prop_assert_eq!(l.mul(&g), u.mul(&v));
        prop_assert_eq!(u.mul(&v).div(&v), Some(u));
    }
}
