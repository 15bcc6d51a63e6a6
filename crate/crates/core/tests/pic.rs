use quintic_core::pic::{
    double_cover_pullback, h0_hirzebruch, hirzebruch, horikawa_branch_half, horikawa_branch_valid, projective_plane,
    quadric, split_curve_square,
};
use quintic_core::rational::{q, qi};

#[test]
fn hirzebruch_gram_and_canonical() {
    let f2 = hirzebruch(2);
    let d0 = f2.generator("D0").unwrap();
    let g = f2.generator("G").unwrap();
    assert_eq!(f2.self_intersection(&d0).unwrap(), -2);
    assert_eq!(f2.self_intersection(&g).unwrap(), 0);
    assert_eq!(f2.intersect(&d0, &g).unwrap(), 1);
    assert_eq!(f2.canonical_class().coefficients, [-2, -4]);
    assert_eq!(f2.self_intersection(&f2.canonical_class()).unwrap(), 8);
    assert_eq!(quadric().canonical_class().coefficients, [-2, -2]);
    assert_eq!(projective_plane().canonical_class().coefficients, [-3]);
}

#[test]
fn blowups() {
    let f0 = hirzebruch(0);
    let x = f0.blow_up_all(&["E1", "E2"]).unwrap();
    let e1 = x.generator("E1").unwrap();
    assert_eq!(x.self_intersection(&e1).unwrap(), -1);
    assert_eq!(x.canonical_class().coefficients, [-2, -2, 1, 1]);
    assert_eq!(x.self_intersection(&x.canonical_class()).unwrap(), 6);
    assert!(x.dominates(&f0));
    let g = f0.generator("G").unwrap();
    assert_eq!(x.self_intersection(&x.pullback(&g).unwrap()).unwrap(), 0);
}

#[test]
fn genus_and_riemann_roch() {
    let f1 = hirzebruch(1);
    let c = f1.class_of(&[("D0", 2), ("G", 3)]).unwrap();
    assert_eq!(f1.adjunction_genus(&c).unwrap(), qi(1));
    let line = f1.class_of(&[("D0", 1), ("G", 1)]).unwrap();
    assert_eq!(f1.adjunction_genus(&line).unwrap(), qi(0));
    assert_eq!(f1.riemann_roch_chi(&f1.zero()).unwrap(), 1);
    assert_eq!(f1.riemann_roch_chi(&c).unwrap(), h0_hirzebruch(1, 2, 3));
}

#[test]
fn section_counts() {
    assert_eq!(h0_hirzebruch(0, 1, 1), 4);
    assert_eq!(h0_hirzebruch(0, 6, 6), 49);
    assert_eq!(h0_hirzebruch(2, 1, 0), 1);
    assert_eq!(h0_hirzebruch(2, 1, 2), 4);
}

#[test]
fn double_cover_canonical_square() {
    for (p_g, d) in [(4, 0), (6, 0), (6, 2), (7, 1), (10, 4)] {
        assert!(horikawa_branch_valid(p_g, d));
        let (lat, half) = horikawa_branch_half(p_g, d).unwrap();
        let rules = double_cover_pullback(&lat, &half).unwrap();
        assert_eq!(rules.k_upstairs_squared(&lat).unwrap(), 2 * p_g - 4);
    }
    assert!(!horikawa_branch_valid(5, 0));
    assert!(!horikawa_branch_valid(3, 1));
    assert!(horikawa_branch_half(5, 0).is_err());
}

#[test]
fn split_curves() {
    assert_eq!(split_curve_square(-8, 0), qi(-8));
    assert_eq!(split_curve_square(-2, 4), qi(-4));
    assert_eq!(split_curve_square(0, 1), q(-1, 2));
}
