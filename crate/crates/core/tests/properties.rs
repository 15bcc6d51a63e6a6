use proptest::prelude::*;

use quintic_core::ade::{Family, RootSystem, Weight};
use quintic_core::flopsim::{orbit_starts, FiberState, TieBreak};
use quintic_core::localint::{first_blowup, mult, mult_adapted, normal_form, GraphCurve, Multiplicity, Orientation};
use quintic_core::qsing::{
    classify, discrepancies, hj_eval, hj_expand, is_wahl, wahl_certificate, wahl_string, Fraction, GrowthRule,
    SingularityClass, TString,
};
use quintic_core::rational::qi;

const CAP: u32 = 24;

fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
    (2i64..400, 1i64..400).prop_filter_map("coprime, q < m", |(m, q)| {
        let q = q % m;
        (q > 0 && num_integer::gcd(m, q) == 1).then_some((m, q))
    })
}

fn rule() -> impl Strategy<Value = GrowthRule> {
    prop_oneof![Just(GrowthRule::PrependTwo), Just(GrowthRule::AppendTwo)]
}

fn system() -> impl Strategy<Value = RootSystem> {
    prop_oneof![
        (1usize..=6).prop_map(|n| RootSystem::build(Family::A, n).unwrap()),
        (4usize..=6).prop_map(|n| RootSystem::build(Family::D, n).unwrap()),
        Just(RootSystem::build(Family::E, 6).unwrap()),
    ]
}

fn singularity() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (1usize..=8).prop_map(|n| (Family::A, n)),
        (4usize..=8).prop_map(|n| (Family::D, n)),
        (6usize..=8).prop_map(|n| (Family::E, n)),
    ]
}

fn graph() -> impl Strategy<Value = GraphCurve> {
    let orientation = prop_oneof![Just(Orientation::XOfY), Just(Orientation::YOfX)];
    (orientation, prop::collection::vec(-2i64..=2, 1..5)).prop_map(|(o, tail)| {
        let mut coeffs = vec![0];
        coeffs.extend(tail);
        GraphCurve::from_ints(o, &coeffs).unwrap()
    })
}

proptest! {
    #[test]
    fn hj_round_trip((m, q) in coprime_pair()) {
        let f = Fraction::new(m, q).unwrap();
        let t = hj_expand(&f).unwrap();
        prop_assert!(t.entries().iter().all(|&b| b >= 2));
        prop_assert_eq!(hj_eval(&t), f);
    }

    #[test]
    fn growth_preserves_wahl(rules in prop::collection::vec(rule(), 0..12)) {
        let t = rules.iter().fold(TString::new(vec![4]).unwrap(), |t, r| r.apply(&t));
        prop_assert!(is_wahl(&t));
        prop_assert_eq!(t.len(), rules.len() + 1);
        prop_assert_eq!(t.excess(), t.len() as i64 + 1);
        prop_assert_eq!(wahl_certificate(&t).unwrap(), rules);
        let f = hj_eval(&t);
        let SingularityClass::Wahl { n, a } = classify(&t) else { panic!("not Wahl: {t:?}") };
        let w = wahl_string(n, a).unwrap();
        prop_assert!(w == t || w == t.reversed());
        prop_assert_eq!(f.numerator().clone(), (n * n).into());
        let q = f.denominator().clone();
        prop_assert!(q == (n * a - 1).into() || q == (n * (n - a) - 1).into());
    }

    #[test]
    fn wahl_discrepancies_are_log_terminal(rules in prop::collection::vec(rule(), 0..10)) {
        let t = rules.iter().fold(TString::new(vec![4]).unwrap(), |t, r| r.apply(&t));
        let d = discrepancies(&t).unwrap();
        prop_assert!(d.is_log_terminal());
        prop_assert_eq!(d.end_sum(), qi(-1));
    }

    #[test]
    fn reflection_preserves_norm(rs in system(), seed in prop::collection::vec(-3i64..=3, 8), j in 0usize..8) {
        let w = Weight(seed[..rs.rank()].to_vec());
        let j = j % rs.rank();
        let r = rs.reflect(&w, j);
        prop_assert_eq!(rs.norm2(&r), rs.norm2(&w));
        prop_assert_eq!(rs.reflect(&r, j), w.clone());
        prop_assert!(rs.same_coset(&r, &w));
    }

    #[test]
    fn flop_outcome_is_policy_independent(rs in system(), omega in prop::collection::vec(0i64..=1, 8), pick in any::<prop::sample::Index>()) {
        let omega = Weight(omega[..rs.rank()].to_vec());
        let starts = orbit_starts(&rs, &omega, 6).unwrap();
        let a = pick.get(&starts).clone();
        let state = FiberState::new(&rs, omega.clone(), a).unwrap();
        let traces: Vec<_> = TieBreak::ALL.iter().map(|&p| state.reduce(p).unwrap()).collect();
        for t in &traces {
            prop_assert!(t.final_dominant());
            prop_assert_eq!(&t.last.mu, &omega);
            prop_assert!(t.last.coeffs.iter().all(|&x| x == 0));
            prop_assert_eq!(t.steps.len(), traces[0].steps.len());
        }
    }

    #[test]
    fn multiplicity_drops_by_two((family, n) in singularity(), d in graph()) {
        let b = normal_form(family, n, CAP).unwrap();
        if let Ok(Multiplicity::Finite(m)) = mult(&b, &d) {
            prop_assume!(m <= 12);
            let b1 = first_blowup(&b, &d).unwrap();
            prop_assert_eq!(mult_adapted(&b1).unwrap(), Multiplicity::Finite(m - 2));
        }
    }
}
