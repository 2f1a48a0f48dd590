use evenperm::algebra::{RatFunc, Substitution};
use evenperm::genfun::{
    closed_213k, closed_increasing, closed_kd, contain_once_increasing, odd_wedge, Engine,
};
use evenperm::patterns::{generate_132_avoiders, oracle_series, Constraints, Perm};
use proptest::prelude::*;

fn all_avoiders(max_len: usize) -> Vec<Perm> {
    (1..=max_len).flat_map(generate_132_avoiders).collect()
}

fn nonnegative_integers(f: &RatFunc, order: usize) -> bool {
    f.series(order)
        .unwrap()
        .coeffs()
        .iter()
        .all(|c| c.is_integer() && *c >= num_rational::BigRational::from_integer(0.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn engine_parts_are_counting_series(idx in 0usize..1000) {
        let pats = all_avoiders(5);
        let tau = &pats[idx % pats.len()];
        let t = Engine::new().gftriple(tau).unwrap();
        prop_assert_eq!(&t.f, &(&t.e + &t.o));
        prop_assert!(nonnegative_integers(&t.e, 12));
        prop_assert!(nonnegative_integers(&t.o, 12));
        let m = t.m.series(12).unwrap();
        prop_assert!(m.to_integers().is_some());
    }

    #[test]
    fn engine_matches_oracle(idx in 0usize..1000) {
        let pats = all_avoiders(4);
        let tau = &pats[idx % pats.len()];
        let t = Engine::new().gftriple(tau).unwrap();
        let s = oracle_series(&Constraints::new().avoid(tau.clone()), 10).unwrap();
        prop_assert_eq!(t.e.series(10).unwrap(), s.even());
        prop_assert_eq!(t.o.series(10).unwrap(), s.odd());
    }

    #[test]
    fn signed_part_reflects(idx in 0usize..1000) {
        // E(−x) − O(−x) and M(−x) are the same function
        let pats = all_avoiders(5);
        let tau = &pats[idx % pats.len()];
        let t = Engine::new().gftriple(tau).unwrap();
        let reflected = &t.e.substitute(Substitution::Neg) - &t.o.substitute(Substitution::Neg);
        prop_assert_eq!(reflected, t.m.neg_x());
    }
}

#[test]
fn closed_families_match_engine() {
    let mut engine = Engine::new();
    for len in 1..=7 {
        assert_eq!(
            closed_increasing(len).unwrap(),
            engine.gftriple(&Perm::increasing(len)).unwrap()
        );
    }
    for len in 2..=7 {
        let tau = Perm::two_one_then_increasing(len).unwrap();
        assert_eq!(
            closed_213k(len).unwrap(),
            engine.gftriple(&tau).unwrap(),
            "len {len}"
        );
        for d in 1..len {
            let tau = Perm::rotated(len, d).unwrap();
            assert_eq!(
                closed_kd(len, d).unwrap(),
                engine.gftriple(&tau).unwrap(),
                "[{len},{d}]"
            );
        }
    }
}

#[test]
fn odd_rotated_e_does_not_depend_on_d() {
    for len in [3, 5, 7, 9] {
        let first = closed_kd(len, 1).unwrap().e;
        for d in 2..len {
            assert_eq!(closed_kd(len, d).unwrap().e, first, "[{len},{d}]");
        }
    }
}

#[test]
fn named_odd_wedges() {
    let mut engine = Engine::new();
    for p in ["23145", "34251"] {
        let tau: Perm = p.parse().unwrap();
        assert_eq!(odd_wedge(&tau).unwrap(), engine.gftriple(&tau).unwrap());
    }
}

#[test]
fn contain_once_matches_oracle() {
    for k in 1..=5 {
        let g = contain_once_increasing(k).unwrap();
        let s = oracle_series(&Constraints::new().contain(Perm::increasing(k), 1), 11).unwrap();
        assert_eq!(g.e1.series(11).unwrap(), s.even(), "k = {k}");
        assert_eq!(g.o1.series(11).unwrap(), s.odd(), "k = {k}");
    }
}
