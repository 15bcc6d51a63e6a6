//! Dimension counts for loci of triples `(Z, B, D)`: a quadric `Z`, a
//! branch curve `B ∈ |6Δ|` and a curve `D` of class `Δ` or `Γ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pic::{h0_hirzebruch, hirzebruch};

/// Highest Taylor degree along `D` at which point conditions are known to be
/// independent.
pub const MAX_TAYLOR_DEGREE: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Base {
    /// The smooth quadric `F_0`.
    F0,
    /// The quadric cone, handled through `F_2`.
    #[serde(rename = "F2-cone")]
    Cone,
}

impl Base {
    fn hirzebruch_d(self) -> i64 {
        match self {
            Base::F0 => 0,
            Base::Cone => 2,
        }
    }
}

impl FromStr for Base {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F0" | "f0" => Ok(Base::F0),
            "F2" | "f2" | "cone" | "F2-cone" => Ok(Base::Cone),
            _ => Err(Error::Parse(format!("unknown base `{s}` (expected F0 or cone)"))),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::F0 => "F0",
            Base::Cone => "F2-cone",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DClass {
    Delta,
    Gamma,
}

impl DClass {
    /// `(B·D)` for `B ~ 6Δ`.
    pub fn branch_intersection(self) -> u32 {
        match self {
            DClass::Delta => 12,
            DClass::Gamma => 6,
        }
    }

    pub fn as_class(self) -> LinearClass {
        match self {
            DClass::Delta => LinearClass::Delta,
            DClass::Gamma => LinearClass::Gamma,
        }
    }
}

impl FromStr for DClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Delta" | "delta" | "Δ" => Ok(DClass::Delta),
            "Gamma" | "gamma" | "Γ" => Ok(DClass::Gamma),
            _ => Err(Error::Parse(format!("unknown class `{s}` (expected Delta or Gamma)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinearClass {
    Delta,
    Gamma,
    FiveDelta,
    SixDelta,
}

impl FromStr for LinearClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Delta" | "delta" => Ok(LinearClass::Delta),
            "Gamma" | "gamma" => Ok(LinearClass::Gamma),
            "5Delta" | "5delta" => Ok(LinearClass::FiveDelta),
            "6Delta" | "6delta" => Ok(LinearClass::SixDelta),
            _ => Err(Error::UnsupportedClass(s.to_string())),
        }
    }
}

/// `dim |L| = h⁰(L) - 1`, cross-checked against Riemann–Roch (all four
/// classes are nef with vanishing higher cohomology).
pub fn linear_system_dim(base: Base, cls: LinearClass) -> Result<i64> {
    let d = base.hirzebruch_d();
    // Δ = D0 + ((d+2)/2)G, Γ = G
    let half = (d + 2) / 2;
    let (a, b) = match cls {
        LinearClass::Delta => (1, half),
        LinearClass::Gamma => (0, 1),
        LinearClass::FiveDelta => (5, 5 * half),
        LinearClass::SixDelta => (6, 6 * half),
    };
    let h0 = h0_hirzebruch(d, a, b);
    let lat = hirzebruch(d);
    let chi = lat.riemann_roch_chi(&lat.class_of(&[("D0", a), ("G", b)])?)?;
    debug_assert_eq!(h0, chi);
    Ok(h0 - 1)
}

pub fn aut_dim(base: Base) -> i64 {
    match base {
        Base::F0 => 6,
        Base::Cone => 7,
    }
}

/// Singularity imposed on `B` at a point of `B ∩ D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PointSing {
    Smooth,
    Node,
    A2,
    /// Outside the built-in table; reported as unverified.
    Custom { label: String, codim: u32, taylor_degree: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointSpec {
    pub mult: u32,
    pub sing: PointSing,
}

impl PointSpec {
    pub fn smooth(mult: u32) -> Self {
        PointSpec { mult, sing: PointSing::Smooth }
    }

    pub fn node(mult: u32) -> Self {
        PointSpec { mult, sing: PointSing::Node }
    }

    pub fn a2(mult: u32) -> Self {
        PointSpec { mult, sing: PointSing::A2 }
    }

    /// `(codimension, Taylor degree used, tabulated?)`.
    pub fn codim(&self) -> Result<(u32, u32, bool)> {
        match (&self.sing, self.mult) {
            (PointSing::Smooth, _) => Ok((0, 1, true)),
            (PointSing::Node, 2) => Ok((1, 2, true)),
            (PointSing::A2, 2) => Ok((2, 3, true)),
            (PointSing::Node, 3) => Ok((2, 2, true)),
            (PointSing::Custom { codim, taylor_degree, .. }, _) => Ok((*codim, *taylor_degree, false)),
            (s, m) => Err(Error::InvalidLocus(format!("no tabulated codimension for {s:?} at a point of multiplicity {m}"))),
        }
    }
}

impl fmt::Display for PointSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.sing {
            PointSing::Smooth => write!(f, "smooth@{}", self.mult),
            PointSing::Node => write!(f, "node@{}", self.mult),
            PointSing::A2 => write!(f, "A2@{}", self.mult),
            PointSing::Custom { label, codim, taylor_degree } => {
                write!(f, "{label}@{}:{codim}:{taylor_degree}", self.mult)
            }
        }
    }
}

impl FromStr for PointSpec {
    type Err = Error;
    /// `smooth@2`, `node@3`, `A2@2` or `LABEL@MULT:CODIM:DEGREE`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad point `{s}` (expected e.g. node@2 or A3@4:2:4)"));
        let (kind, rest) = s.split_once('@').ok_or_else(bad)?;
        let mut parts = rest.split(':');
        let mult: u32 = parts.next().and_then(|m| m.parse().ok()).ok_or_else(bad)?;
        let extra: Vec<u32> = parts.map(|p| p.parse().map_err(|_| bad())).collect::<Result<_>>()?;
        let sing = match (kind, extra.as_slice()) {
            ("smooth", []) => PointSing::Smooth,
            ("node", []) => PointSing::Node,
            ("A2", []) => PointSing::A2,
            (label, [codim, deg]) => PointSing::Custom { label: label.to_string(), codim: *codim, taylor_degree: *deg },
            _ => return Err(bad()),
        };
        Ok(PointSpec { mult, sing })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusSpec {
    pub base: Base,
    pub d_class: DClass,
    pub points: Vec<PointSpec>,
    pub d_in_b: bool,
}

impl LocusSpec {
    pub fn new(base: Base, d_class: DClass, points: Vec<PointSpec>) -> Self {
        LocusSpec { base, d_class, points, d_in_b: false }
    }

    /// `D ⊂ B`: `B = B̄ + D` with `B̄ ∈ |5Δ|` meeting `D` transversally.
    pub fn d_in_b(base: Base, d_class: DClass) -> Self {
        let n = match d_class {
            DClass::Delta => 10,
            DClass::Gamma => 5,
        };
        LocusSpec { base, d_class, points: vec![PointSpec::smooth(1); n], d_in_b: true }
    }

    /// Total `(B·D)` the points must account for.
    pub fn intersection_total(&self) -> u32 {
        if self.d_in_b {
            // B̄ ∈ |5Δ|
            self.d_class.branch_intersection() * 5 / 6
        } else {
            self.d_class.branch_intersection()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimTerms {
    pub dim_d: i64,
    pub k: i64,
    pub dim_b: i64,
    pub mult: i64,
    pub sing: i64,
    pub aut: i64,
}

impl DimTerms {
    pub fn total(&self) -> i64 {
        self.dim_d + self.k + self.dim_b + self.mult + self.sing + self.aut
    }

}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub terms: DimTerms,
    pub total: i64,
    pub type_label: Option<String>,
    /// Nonzero per-point codimensions, in point order; they sum to
    /// `-terms.sing`.
    #[serde(default)]
    pub sing_parts: Vec<i64>,
    /// Per-point singularity codimensions outside the built-in table.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub unverified: Vec<String>,
}

pub fn locus_dimension(spec: &LocusSpec) -> Result<DimReport> {
    let total = spec.intersection_total();
    let sum: u32 = spec.points.iter().map(|p| p.mult).sum();
    if sum != total {
        return Err(Error::InvalidLocus(format!("point multiplicities sum to {sum}, not (B·D) = {total}")));
    }
    if spec.points.iter().any(|p| p.mult == 0) {
        return Err(Error::InvalidLocus("a point of B ∩ D has multiplicity at least 1".into()));
    }
    let mut codim = 0;
    let mut sing_parts = Vec::new();
    let mut unverified = Vec::new();
    for p in &spec.points {
        let (c, deg, tabulated) = p.codim()?;
        if deg > MAX_TAYLOR_DEGREE {
            return Err(Error::InvalidLocus(format!(
                "{p} uses Taylor degree {deg}; independence is known only through degree {MAX_TAYLOR_DEGREE}"
            )));
        }
        if !tabulated {
            unverified.push(p.to_string());
        }
        codim += c as i64;
        if c > 0 {
            sing_parts.push(c as i64);
        }
    }
    let b_class = if spec.d_in_b { LinearClass::FiveDelta } else { LinearClass::SixDelta };
    let terms = DimTerms {
        dim_d: linear_system_dim(spec.base, spec.d_class.as_class())?,
        k: spec.points.len() as i64,
        dim_b: linear_system_dim(spec.base, b_class)?,
        mult: -(total as i64),
        sing: -codim,
        aut: -aut_dim(spec.base),
    };
    Ok(DimReport { terms, total: terms.total(), type_label: type_label(spec), sing_parts, unverified })
}

impl DimReport {
    /// Itemized sum such as `1+4+48-6-1-1-6`.
    pub fn formula(&self) -> String {
        let t = &self.terms;
        let mut s = format!("{}+{}+{}{:+}", t.dim_d, t.k, t.dim_b, t.mult);
        for c in &self.sing_parts {
            s += &format!("-{c}");
        }
        s + &format!("{:+}", t.aut)
    }
}

fn sorted(points: &[PointSpec]) -> Vec<PointSpec> {
    let mut v = points.to_vec();
    v.sort();
    v
}

/// The custom codimension used for the separation-2 point of type 2a′.
pub fn a3_at_four() -> PointSpec {
    PointSpec { mult: 4, sing: PointSing::Custom { label: "A3".into(), codim: 2, taylor_degree: 4 } }
}

/// The named types, as locus specifications.
pub fn named_types() -> Vec<(&'static str, LocusSpec)> {
    use Base::*;
    use DClass::*;
    let tang = |n| vec![PointSpec::smooth(2); n];
    let with = |mut v: Vec<PointSpec>, extra: &[PointSpec]| {
        v.extend_from_slice(extra);
        v
    };
    let transversal = vec![PointSpec::smooth(1); 2];
    vec![
        ("1", LocusSpec::new(F0, Delta, tang(6))),
        ("1'", LocusSpec::new(F0, Delta, with(tang(5), &[PointSpec::node(2)]))),
        ("1''", LocusSpec::new(Cone, Delta, tang(6))),
        ("1'''", LocusSpec::new(F0, Delta, with(tang(4), &[PointSpec::smooth(4)]))),
        ("2a", LocusSpec::new(F0, Gamma, with(transversal.clone(), &[PointSpec::node(2), PointSpec::node(2)]))),
        ("2a'", LocusSpec::new(F0, Gamma, with(transversal.clone(), &[a3_at_four()]))),
        ("2a''", LocusSpec::new(F0, Gamma, with(transversal.clone(), &[PointSpec::a2(2), PointSpec::node(2)]))),
        ("2b", LocusSpec::new(Cone, Gamma, with(transversal, &[PointSpec::node(2), PointSpec::node(2)]))),
    ]
}

pub fn type_label(spec: &LocusSpec) -> Option<String> {
    if spec.d_in_b {
        return None;
    }
    let pts = sorted(&spec.points);
    named_types()
        .into_iter()
        .find(|(_, t)| t.base == spec.base && t.d_class == spec.d_class && sorted(&t.points) == pts)
        .map(|(l, _)| l.to_string())
}

/// Per-point options of the catalogue swept by [`enumerate_specs`].
fn catalogue(d_class: DClass) -> Vec<PointSpec> {
    match d_class {
        // even case: every local intersection is even
        DClass::Delta => vec![
            PointSpec::smooth(2),
            PointSpec::smooth(4),
            PointSpec::smooth(6),
            PointSpec::node(2),
            PointSpec::a2(2),
        ],
        DClass::Gamma => vec![PointSpec::smooth(1), PointSpec::node(2), PointSpec::a2(2), PointSpec::node(3), a3_at_four()],
    }
}

/// Whether a point list fits the local pictures allowed for `D` of this
/// class: even intersections for `Δ`; for `Γ` either two singular points of
/// separation 1 or one of separation 2, the rest transversal.
fn admissible(d_class: DClass, pts: &[PointSpec]) -> bool {
    let total: u32 = pts.iter().map(|p| p.mult).sum();
    if total != d_class.branch_intersection() {
        return false;
    }
    match d_class {
        DClass::Delta => pts.iter().all(|p| p.mult % 2 == 0),
        DClass::Gamma => {
            let sing: Vec<&PointSpec> = pts.iter().filter(|p| p.sing != PointSing::Smooth).collect();
            let smooth_ok = pts.iter().filter(|p| p.sing == PointSing::Smooth).all(|p| p.mult == 1);
            let shape = match sing.as_slice() {
                [a, b] => a.mult <= 3 && b.mult <= 3,
                [a] => a.mult >= 4,
                _ => false,
            };
            smooth_ok && shape
        }
    }
}

fn multisets(options: &[PointSpec], budget: u32, from: usize, cur: &mut Vec<PointSpec>, out: &mut Vec<Vec<PointSpec>>) {
    if budget == 0 {
        out.push(cur.clone());
        return;
    }
    for (i, p) in options.iter().enumerate().skip(from) {
        if p.mult <= budget {
            cur.push(p.clone());
            multisets(options, budget - p.mult, i, cur, out);
            cur.pop();
        }
    }
}

/// Every admissible specification over the point catalogue, with its
/// dimension.
pub fn enumerate_specs() -> Result<Vec<(LocusSpec, DimReport)>> {
    let mut out = Vec::new();
    for base in [Base::F0, Base::Cone] {
        for d_class in [DClass::Delta, DClass::Gamma] {
            let mut sets = Vec::new();
            multisets(&catalogue(d_class), d_class.branch_intersection(), 0, &mut Vec::new(), &mut sets);
            for pts in sets.into_iter().filter(|p| admissible(d_class, p)) {
                let spec = LocusSpec::new(base, d_class, pts);
                let rep = locus_dimension(&spec)?;
                out.push((spec, rep));
            }
        }
    }
    Ok(out)
}

/// Labels reached by the specs of dimension 38 or 39, and any such spec
/// left unnamed.
pub fn top_dimensional() -> Result<(BTreeMap<String, i64>, Vec<LocusSpec>)> {
    let mut named = BTreeMap::new();
    let mut unnamed = Vec::new();
    for (spec, rep) in enumerate_specs()? {
        if rep.total >= 38 {
            match rep.type_label {
                Some(l) => {
                    named.insert(l, rep.total);
                }
                None => unnamed.push(spec),
            }
        }
    }
    Ok((named, unnamed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_systems() {
        assert_eq!(linear_system_dim(Base::F0, LinearClass::Delta).unwrap(), 3);
        assert_eq!(linear_system_dim(Base::F0, LinearClass::Gamma).unwrap(), 1);
        assert_eq!(linear_system_dim(Base::F0, LinearClass::SixDelta).unwrap(), 48);
        assert_eq!(linear_system_dim(Base::Cone, LinearClass::FiveDelta).unwrap(), 35);
        assert_eq!(linear_system_dim(Base::Cone, LinearClass::SixDelta).unwrap(), 48);
    }

    #[test]
    fn aut_difference() {
        assert_eq!(aut_dim(Base::Cone) - aut_dim(Base::F0), 1);
    }

    #[test]
    fn type_one_formula() {
        let r = locus_dimension(&named_types()[0].1).unwrap();
        assert_eq!(r.formula(), "3+6+48-12-6");
        assert_eq!(r.total, 39);
        assert_eq!(r.type_label.as_deref(), Some("1"));
    }

    #[test]
    fn d_in_b_bound() {
        let r = locus_dimension(&LocusSpec::d_in_b(Base::F0, DClass::Delta)).unwrap();
        assert_eq!(r.formula(), "3+10+35-10-6");
        assert_eq!(r.total, 32);
    }

    #[test]
    fn too_many_points() {
        let spec = LocusSpec::new(Base::F0, DClass::Gamma, vec![PointSpec::smooth(1); 7]);
        assert!(matches!(locus_dimension(&spec), Err(Error::InvalidLocus(_))));
    }

    #[test]
    fn high_taylor_degree_refused() {
        let p: PointSpec = "E8@5:6:7".parse().unwrap();
        let spec = LocusSpec::new(Base::F0, DClass::Gamma, vec![p, PointSpec::smooth(1)]);
        assert!(matches!(locus_dimension(&spec), Err(Error::InvalidLocus(_))));
    }

    #[test]
    fn untabulated_needs_custom() {
        let spec = LocusSpec::new(Base::F0, DClass::Gamma, vec![PointSpec::node(4)]);
        assert!(locus_dimension(&spec).is_err());
    }

    #[test]
    fn top_dimensional_loci_are_the_named_types() {
        let (named, unnamed) = top_dimensional().unwrap();
        assert!(unnamed.is_empty(), "{unnamed:?}");
        let want: BTreeMap<String, i64> = [
            ("1", 39),
            ("1'", 38),
            ("1''", 38),
            ("1'''", 38),
            ("2a", 39),
            ("2a'", 38),
            ("2a''", 38),
            ("2b", 38),
        ]
        .iter()
        .map(|&(l, d)| (l.to_string(), d))
        .collect();
        assert_eq!(named, want);
    }

    #[test]
    fn point_parsing_round_trips() {
        for s in ["smooth@2", "node@3", "A2@2", "A3@4:2:4"] {
            assert_eq!(s.parse::<PointSpec>().unwrap().to_string(), s);
        }
    }
}
