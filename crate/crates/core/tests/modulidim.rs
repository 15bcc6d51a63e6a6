use quintic_core::modulidim::{
    aut_dim, linear_system_dim, locus_dimension, named_types, top_dimensional, Base, DClass, LinearClass, LocusSpec,
    PointSpec,
};

#[test]
fn linear_systems() {
    assert_eq!(linear_system_dim(Base::F0, LinearClass::SixDelta).unwrap(), 48);
    assert_eq!(linear_system_dim(Base::F0, LinearClass::Delta).unwrap(), 3);
    assert_eq!(linear_system_dim(Base::Cone, LinearClass::Gamma).unwrap(), 1);
    assert_eq!(linear_system_dim(Base::F0, LinearClass::FiveDelta).unwrap(), 35);
    assert_eq!((aut_dim(Base::F0), aut_dim(Base::Cone)), (6, 7));
}

#[test]
fn named_totals() {
    let want = [
        ("1", 39, "3+6+48-12-6"),
        ("1'", 38, "3+6+48-12-1-6"),
        ("1''", 38, "3+6+48-12-7"),
        ("1'''", 38, "3+5+48-12-6"),
        ("2a", 39, "1+4+48-6-1-1-6"),
        ("2a'", 38, "1+3+48-6-2-6"),
        ("2a''", 38, "1+4+48-6-2-1-6"),
        ("2b", 38, "1+4+48-6-1-1-7"),
    ];
    let types = named_types();
    assert_eq!(types.len(), want.len());
    for ((label, spec), (l, total, formula)) in types.iter().zip(want) {
        assert_eq!(*label, l);
        let r = locus_dimension(spec).unwrap();
        assert_eq!((r.total, r.formula().as_str()), (total, formula), "{label}");
    }
}

#[test]
fn contained_divisor() {
    let r = locus_dimension(&LocusSpec::d_in_b(Base::F0, DClass::Delta)).unwrap();
    assert_eq!((r.total, r.formula().as_str()), (32, "3+10+35-10-6"));
}

#[test]
fn point_specs_parse() {
    let p: PointSpec = "node@3".parse().unwrap();
    assert_eq!(p, PointSpec::node(3));
    assert_eq!(p.codim().unwrap(), (2, 2, true));
    let deep: PointSpec = "A3@4:2:9".parse().unwrap();
    assert_eq!(deep.codim().unwrap(), (2, 9, false));
    let mut points = vec![deep];
    points.extend(vec![PointSpec::smooth(1); 2]);
    assert!(locus_dimension(&LocusSpec::new(Base::Cone, DClass::Gamma, points)).is_err());
    assert!("node".parse::<PointSpec>().is_err());
}

#[test]
fn rejects_bad_totals() {
    let spec = LocusSpec::new(Base::F0, DClass::Delta, vec![PointSpec::smooth(2); 5]);
    assert!(locus_dimension(&spec).is_err());
}

#[test]
fn top_loci() {
    let (by_label, _) = top_dimensional().unwrap();
    assert_eq!(by_label.get("1"), Some(&39));
}
