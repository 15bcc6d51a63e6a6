use quintic_core::ade::{Family, RootSystem, Weight};
use quintic_core::flopsim::{orbit_starts, FiberState, TieBreak};
use quintic_core::Error;

#[test]
fn a3_golden_trace() {
    let rs = RootSystem::build(Family::A, 3).unwrap();
    let s = FiberState::new(&rs, Weight(vec![0, 1, 0]), vec![0, 1, 0]).unwrap();
    assert_eq!(s.mu(), &Weight(vec![1, -1, 1]));
    assert_eq!(s.legal_flops(), [1]);
    let t = s.reduce(TieBreak::SmallestIndex).unwrap();
    let r = t.report();
    assert_eq!((r.steps, r.final_a, r.final_mu), (vec![2], vec![0, 0, 0], vec![0, 1, 0]));
}

#[test]
fn illegal_flops_are_errors() {
    let rs = RootSystem::build(Family::A, 2).unwrap();
    let s = FiberState::new(&rs, Weight(vec![1, 0]), vec![0, 0]).unwrap();
    assert!(matches!(s.flop_step(0), Err(Error::FlopNotAllowed { .. })));
    assert!(FiberState::new(&rs, Weight(vec![1, 0]), vec![0]).is_err());
}

#[test]
fn orbit_start_counts() {
    let rs = RootSystem::build(Family::E, 6).unwrap();
    let w = rs.fundamental_weight(0).unwrap();
    assert_eq!(orbit_starts(&rs, &w, 20).unwrap().len(), 27);
    let d4 = RootSystem::build(Family::D, 4).unwrap();
    assert_eq!(orbit_starts(&d4, &d4.fundamental_weight(0).unwrap(), 20).unwrap().len(), 8);
}
