use evenperm::algebra::int;
use evenperm::genfun::{
    contain_r_increasing, gk_at_y_one, gk_xy, m_increasing, rlm_distribution, two_restrictions,
    verify_containment_equations, Pairing,
};
use evenperm::patterns::{oracle_bivariate, oracle_series, Constraints, Perm, Statistic};

fn perm(s: &str) -> Perm {
    s.parse().unwrap()
}

#[test]
fn exactly_once_equations_hold() {
    for p in ["12", "21", "123", "213"] {
        let checks = verify_containment_equations(&perm(p), 10, Pairing::Exact).unwrap();
        assert_eq!(checks.len(), 7);
        for c in checks {
            assert!(c.holds, "{p}: {}", c.name);
        }
    }
}

#[test]
fn literal_pairing_breaks_for_21_and_213() {
    for p in ["12", "123"] {
        let checks = verify_containment_equations(&perm(p), 10, Pairing::Literal).unwrap();
        assert!(checks.iter().all(|c| c.holds), "{p}");
    }
    for p in ["21", "213"] {
        let checks = verify_containment_equations(&perm(p), 10, Pairing::Literal).unwrap();
        assert!(checks.iter().any(|c| !c.holds), "{p}");
    }
}

#[test]
fn twice_containment_of_123() {
    let m = contain_r_increasing(1, 2).unwrap().series(10).unwrap();
    let s = oracle_series(&Constraints::new().contain(perm("123"), 2), 10).unwrap();
    assert_eq!(m, s.signed());
}

#[test]
fn rlm_histogram_at_length_four() {
    let (even, odd) = rlm_distribution(4).unwrap();
    let (oe, oo) = oracle_bivariate(&Constraints::new(), &Statistic::Rlm, 4).unwrap();
    assert_eq!(even.row(4), oe.row(4));
    assert_eq!(odd.row(4), oo.row(4));
    // the 14 avoiders of length 4 split 7/7
    let total: num_rational::BigRational = (0..=4).map(|j| even.coeff(4, j)).sum();
    assert_eq!(total, int(7));
}

#[test]
fn two_restrictions_both_length_parities() {
    for len in 4..=7 {
        let t = two_restrictions(len).unwrap();
        let c = Constraints::new()
            .avoid(Perm::increasing(len))
            .avoid(Perm::two_one_then_increasing(len).unwrap());
        let s = oracle_series(&c, 11).unwrap();
        assert_eq!(t.e.series(11).unwrap(), s.even(), "L = {len}");
        assert_eq!(t.o.series(11).unwrap(), s.odd(), "L = {len}");
    }
}

#[test]
fn gk_against_oracle_and_at_y_one() {
    for k in 2..=3 {
        let g = gk_xy(k, 10).unwrap();
        let (e, o) = oracle_bivariate(
            &Constraints::new().avoid(Perm::increasing(k + 1)),
            &Statistic::Inc(k),
            10,
        )
        .unwrap();
        assert_eq!(g, &e - &o, "k = {k}");
        assert_eq!(g.coeff(0, 0), int(1));
        assert_eq!(gk_at_y_one(k).unwrap(), m_increasing(k + 1));
    }
}
