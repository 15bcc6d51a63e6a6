use quintic_core::ade::tables::minuscule_table;
use quintic_core::ade::{Family, RootSystem, Weight};
use quintic_core::oracle::is_minuscule_by_weights;
use quintic_core::rational::{q, qi};

fn rs(f: Family, n: usize) -> RootSystem {
    RootSystem::build(f, n).unwrap()
}

#[test]
fn root_counts() {
    for (f, n, want) in [(Family::A, 4, 10), (Family::D, 5, 20), (Family::E, 6, 36), (Family::E, 7, 63), (Family::E, 8, 120)] {
        assert_eq!(rs(f, n).positive_roots().len(), want);
    }
    assert!(RootSystem::build(Family::E, 9).is_err());
    assert!(RootSystem::build(Family::D, 3).is_err());
}

#[test]
fn fundamental_norms() {
    let cases = [
        (Family::A, 4, 0, q(4, 5)),
        (Family::D, 5, 0, qi(1)),
        (Family::D, 5, 4, q(5, 4)),
        (Family::E, 6, 0, q(4, 3)),
        (Family::E, 7, 5, q(3, 2)),
    ];
    for (f, n, i, want) in cases {
        let s = rs(f, n);
        assert_eq!(s.norm2(&s.fundamental_weight(i).unwrap()), want, "{f:?}{n} node {i}");
    }
}

#[test]
fn minuscule_nodes_match_weight_systems() {
    for (f, n) in [(Family::A, 5), (Family::D, 4), (Family::D, 6), (Family::E, 6), (Family::E, 7)] {
        let s = rs(f, n);
        let by_api: Vec<usize> = (0..n).filter(|&i| s.is_minuscule(i).unwrap()).map(|i| i + 1).collect();
        let by_oracle: Vec<usize> = (0..n).filter(|&i| is_minuscule_by_weights(&s, i)).map(|i| i + 1).collect();
        assert_eq!(by_api, minuscule_table(f, n));
        assert_eq!(by_oracle, by_api);
    }
}

#[test]
fn orbit_sizes() {
    let cases = [(Family::A, 5, 2, 20), (Family::D, 5, 4, 16), (Family::D, 6, 0, 12), (Family::E, 6, 0, 27)];
    for (f, n, i, want) in cases {
        let s = rs(f, n);
        assert_eq!(s.weyl_orbit(&s.fundamental_weight(i).unwrap()).unwrap().len(), want);
    }
}

#[test]
fn cosets_and_reports() {
    let s = rs(Family::E, 6);
    let w = Weight(vec![1, 0, 0, 0, 0, 0]);
    let r = s.report(&w);
    assert_eq!(r.norm2, q(4, 3));
    assert!(r.dominant);
    assert!(!s.in_root_lattice(&w));
    assert!(s.in_root_lattice(&Weight(vec![0, 0, 0, 0, 0, 1])));
    let sum: RootSystem = "A1+A2".parse().unwrap();
    assert_eq!(sum.rank(), 3);
    assert!(!sum.is_simple());
}
