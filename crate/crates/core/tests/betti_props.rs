mod common;

use ginlex::betti::{
    betti_bigatti, betti_cyclic_quotient, betti_ek, betti_koszul, betti_quadratic_graph, gamma_graph, graph_table,
    BettiTable, FieldMode, Vertex,
};
use ginlex::families::sydney;
use ginlex::{Monomial, MonomialIdeal, Truncation};
use proptest::prelude::*;

use common::*;

fn koszul(ideal: &MonomialIdeal) -> BettiTable {
    betti_koszul(ideal, FieldMode::Exact).unwrap()
}

#[test]
fn maximal_square_in_two_variables() {
    let t = koszul(&MonomialIdeal::maximal_power(2, 2));
    assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 2, 3), (1, 3, 2)]);
    assert_eq!(t.regularity().unwrap(), 2);
}

#[test]
fn principal_and_linear() {
    let t = koszul(&MonomialIdeal::parse(3, "x1").unwrap());
    assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 1, 1)]);
    assert_eq!(t.regularity().unwrap(), 1);
    let m = koszul(&MonomialIdeal::maximal_power(3, 1));
    assert_eq!(m.entries().collect::<Vec<_>>(), vec![(0, 1, 3), (1, 2, 3), (2, 3, 1)]);
}

#[test]
fn gamma_graph_has_primed_edges() {
    // (x1^2, x1x2): the edge {1', 2'} is what makes beta_{0,2} equal 2.
    let l = MonomialIdeal::parse(2, "x1^2, x1*x2").unwrap();
    let g = gamma_graph(&l).unwrap();
    assert!(g.has_edge(Vertex::Primed(1), Vertex::Primed(2)));
    assert_eq!(betti_quadratic_graph(&l).unwrap(), vec![2, 1]);
    assert_eq!(graph_table(&l).unwrap(), koszul(&l));
}

#[test]
fn koszul_matches_strand_oracle_exhaustively_on_quadrics() {
    for n in 1..=3 {
        for mask in 1u64..1 << quadrics(n).len() {
            let l = quadratic_from_mask(n, mask);
            let t = koszul(&l);
            for i in 0..n {
                for j in 0..=2 * n as u32 + 2 {
                    assert_eq!(t.get(i, j), betti_oracle(&l, i, j), "{l} beta_{i},{j}");
                }
            }
        }
    }
}

#[test]
fn sydney_truncation_identity() {
    for (n, i, j) in [(3, 2, 2), (4, 3, 2), (4, 3, 3)] {
        let ideal = sydney(n, i, j).unwrap().ideal;
        let full = betti_koszul(&ideal, FieldMode::DualPrime).unwrap();
        for d in 2..=5u32 {
            let low = betti_koszul(&ideal.truncate(d, Truncation::AtMost), FieldMode::DualPrime).unwrap();
            assert_eq!(full.strand(d as i64, n), low.strand(d as i64, n), "({n},{i},{j}) strand {d}");
        }
    }
}

#[test]
fn table_json_round_trip() {
    let t = koszul(&MonomialIdeal::parse(3, "x1^2, x2^2, x3^3").unwrap());
    assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn engines_agree_on_strongly_stable(ideal in arb_strongly_stable(5, 4, 4)) {
        let k = koszul(&ideal);
        prop_assert_eq!(&betti_ek(&ideal).unwrap(), &k);
        prop_assert_eq!(&betti_bigatti(&ideal).unwrap(), &k);
        prop_assert_eq!(&betti_koszul(&ideal, FieldMode::DualPrime).unwrap(), &k);
    }

    #[test]
    fn graph_formula_matches_koszul_strand(l in arb_quadratic(4)) {
        let k = koszul(&l);
        let g = betti_quadratic_graph(&l).unwrap();
        for i in 0..l.n() {
            prop_assert_eq!(g.get(i).copied().unwrap_or(0), k.get(i, i as u32 + 2));
        }
    }

    #[test]
    fn koszul_matches_strand_oracle(ideal in arb_ideal(4, 3, 4)) {
        let t = koszul(&ideal);
        let top = ideal.generator_lcm().degree() + 1;
        for i in 0..ideal.n() {
            for j in 0..=top {
                prop_assert_eq!(t.get(i, j), betti_oracle(&ideal, i, j), "beta_{},{}", i, j);
            }
        }
    }

    #[test]
    fn first_betti_numbers_count_generators(ideal in arb_ideal(5, 4, 6)) {
        let t = koszul(&ideal);
        for d in 0..=5 {
            prop_assert_eq!(t.get(0, d), ideal.generators_of_degree(d).count() as u64);
        }
    }

    #[test]
    fn truncation_identity(ideal in arb_ideal(4, 4, 6), d in 1u32..=4) {
        let full = koszul(&ideal);
        let low = koszul(&ideal.truncate(d, Truncation::AtMost));
        prop_assert_eq!(full.strand(d as i64, ideal.n()), low.strand(d as i64, ideal.n()));
    }

    #[test]
    fn cyclic_quotient_shifts_colon(
        (ideal, w) in (1usize..=4).prop_flat_map(|n| (arb_ideal_in(n, 3, 4), arb_monomial(n, 2)))
    ) {
        if !member(&ideal, &w) {
            let q = betti_cyclic_quotient(&ideal, &w, FieldMode::Exact).unwrap();
            let colon = ideal.colon(&w).unwrap();
            let shift = w.degree();
            prop_assert_eq!(q.get(0, shift), 1);
            for i in 0..ideal.n() {
                for j in 0..=12 {
                    prop_assert_eq!(q.get(i + 1, j + shift), betti_oracle(&colon, i, j));
                }
            }
        } else {
            prop_assert!(betti_cyclic_quotient(&ideal, &w, FieldMode::Exact).is_err());
        }
    }

    #[test]
    fn koszul_is_multiplicative_under_scaling(ideal in arb_ideal(4, 3, 4), v in 1usize..=4) {
        // w * I is isomorphic to I shifted by deg w.
        let v = v.min(ideal.n());
        let w = Monomial::var(ideal.n(), v);
        let a = koszul(&ideal);
        let b = koszul(&ideal.scale(&w).unwrap());
        let shifted: Vec<_> = a.entries().map(|(i, j, x)| (i, j + 1, x)).collect();
        prop_assert_eq!(b.entries().collect::<Vec<_>>(), shifted);
    }
}
