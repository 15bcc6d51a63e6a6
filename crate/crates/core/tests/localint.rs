use quintic_core::ade::Family;
use quintic_core::localint::config::{classify_config, enumerate, realize, ConfigOutcome};
use quintic_core::localint::{mult, normal_form, separation, GraphCurve, Multiplicity, Orientation};
use quintic_core::oracle::local_quotient_dimension;

const CAP: u32 = 24;

fn line(o: Orientation) -> GraphCurve {
    GraphCurve::from_ints(o, &[0]).unwrap()
}

#[test]
fn axis_intersections() {
    use Multiplicity::{Finite, Infinite};
    let cases = [
        (Family::A, 1, Finite(2), Finite(2)),
        (Family::A, 4, Finite(5), Finite(2)),
        (Family::D, 5, Finite(4), Infinite),
        (Family::E, 6, Finite(4), Finite(3)),
        (Family::E, 7, Infinite, Finite(3)),
        (Family::E, 8, Finite(5), Finite(3)),
    ];
    for (f, n, along_x0, along_y0) in cases {
        let b = normal_form(f, n, CAP).unwrap();
        assert_eq!(mult(&b, &line(Orientation::XOfY)).unwrap(), along_x0, "{f:?}{n} x=0");
        assert_eq!(mult(&b, &line(Orientation::YOfX)).unwrap(), along_y0, "{f:?}{n} y=0");
    }
}

// Checked against dim C[[x,y]]/(B, D) computed by linear algebra.
#[test]
fn oracle_agrees_on_tangent_curves() {
    let b = normal_form(Family::A, 6, CAP).unwrap();
    for (coeffs, want) in [(&[0, 0, 1][..], 4), (&[0, 0, 0, 1][..], 6), (&[0, 1][..], 2)] {
        let d = GraphCurve::from_ints(Orientation::XOfY, coeffs).unwrap();
        assert_eq!(mult(&b, &d).unwrap(), Multiplicity::Finite(want));
        assert_eq!(local_quotient_dimension(&b, &d.to_curve(CAP), 30), Some(want));
    }
    let on_branch = GraphCurve::from_ints(Orientation::XOfY, &[0, 0, 0, 1]).unwrap();
    assert_eq!(mult(&normal_form(Family::A, 5, CAP).unwrap(), &on_branch).unwrap(), Multiplicity::Infinite);
}

#[test]
fn separation_counts() {
    let b = normal_form(Family::A, 5, CAP).unwrap();
    let d = GraphCurve::from_ints(Orientation::XOfY, &[0, 0, 1]).unwrap();
    assert_eq!(separation(&b, &d).unwrap(), 2);
    assert_eq!(separation(&b, &line(Orientation::YOfX)).unwrap(), 1);
}

#[test]
fn d5_record() {
    let d = GraphCurve::from_ints(Orientation::XOfY, &[0, 0, 1]).unwrap();
    let ConfigOutcome::Record(r) = classify_config(Family::D, 5, &d).unwrap() else { panic!() };
    assert_eq!((r.mult, r.separation, r.post_blowup_singular), (4, 2, true));
    assert_eq!(r.figure.as_deref(), Some("same_points_4(e)"));
    assert_eq!(r.residual, 0);
}

#[test]
fn containment_and_impossibility() {
    let out = classify_config(Family::D, 5, &line(Orientation::YOfX)).unwrap();
    assert!(matches!(out, ConfigOutcome::Contained { .. }));
    assert!(matches!(realize(Family::E, 7, 4).unwrap(), ConfigOutcome::Impossible { mult: 4, .. }));
    assert!(matches!(realize(Family::E, 7, 5).unwrap(), ConfigOutcome::Record(_)));
}

#[test]
fn e8_only_meets_in_three_or_five() {
    let mut seen: Vec<u32> = enumerate(8, 5)
        .unwrap()
        .into_iter()
        .filter(|r| r.sing == "E8")
        .map(|r| r.mult)
        .collect();
    seen.sort_unstable();
    seen.dedup();
    assert_eq!(seen, [3, 5]);
}
