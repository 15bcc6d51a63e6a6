//! Intersection theory on rational surfaces: Hirzebruch surfaces, the
//! quadric, the plane, iterated point blowups and double covers.
//!
//! Exceptional classes are total transforms, so pulling a class back along a
//! blowup is zero-padding and every `E_i` is a `(-1)`-class orthogonal to
//! everything else.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{q, qi, to_i64, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BaseModel {
    Hirzebruch { d: i64 },
    /// `P¹ × P¹` with the two rulings as basis.
    Quadric,
    Plane,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceLattice {
    pub id: String,
    #[serde(rename = "basis")]
    pub basis_labels: Vec<String>,
    pub gram: Vec<Vec<i64>>,
    #[serde(rename = "K")]
    pub canonical: Vec<i64>,
    #[serde(rename = "chi")]
    pub chi_structure: i64,
    pub model: BaseModel,
    /// Labels of the exceptional classes, in blowup order.
    pub exceptional: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub lattice: String,
    pub coefficients: Vec<i64>,
}

impl DivisorClass {
    fn combine(&self, other: &DivisorClass, s: i64) -> Result<DivisorClass> {
        if self.lattice != other.lattice || self.coefficients.len() != other.coefficients.len() {
            return Err(Error::LatticeMismatch(format!("{} vs {}", self.lattice, other.lattice)));
        }
        Ok(DivisorClass {
            lattice: self.lattice.clone(),
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + s * b)
                .collect(),
        })
    }

    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.combine(other, -1)
    }

    pub fn scale(&self, k: i64) -> DivisorClass {
        DivisorClass {
            lattice: self.lattice.clone(),
            coefficients: self.coefficients.iter().map(|c| c * k).collect(),
        }
    }
}

fn lattice(id: String, labels: &[&str], gram: Vec<Vec<i64>>, canonical: Vec<i64>, model: BaseModel) -> SurfaceLattice {
    SurfaceLattice {
        id,
        basis_labels: labels.iter().map(|s| s.to_string()).collect(),
        gram,
        canonical,
        chi_structure: 1,
        model,
        exceptional: Vec::new(),
    }
}

/// `F_d` with basis `(Δ_0, Γ)` labelled `D0`, `G`.
pub fn hirzebruch(d: i64) -> SurfaceLattice {
    lattice(
        format!("F{d}"),
        &["D0", "G"],
        vec![vec![-d, 1], vec![1, 0]],
        vec![-2, -(d + 2)],
        BaseModel::Hirzebruch { d },
    )
}

/// `P¹ × P¹` with basis `(Γ_1, Γ_2)` labelled `G1`, `G2`.
pub fn quadric() -> SurfaceLattice {
    lattice(
        "Q".into(),
        &["G1", "G2"],
        vec![vec![0, 1], vec![1, 0]],
        vec![-2, -2],
        BaseModel::Quadric,
    )
}

pub fn projective_plane() -> SurfaceLattice {
    lattice("P2".into(), &["H"], vec![vec![1]], vec![-3], BaseModel::Plane)
}

/// Zero-padding map from a lattice to one of its iterated blowups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub source: String,
    pub target: String,
    pub source_rank: usize,
    pub target_rank: usize,
}

impl Embedding {
    pub fn apply(&self, cls: &DivisorClass) -> Result<DivisorClass> {
        if cls.lattice != self.source || cls.coefficients.len() != self.source_rank {
            return Err(Error::LatticeMismatch(format!("{} is not on {}", cls.lattice, self.source)));
        }
        let mut c = cls.coefficients.clone();
        c.resize(self.target_rank, 0);
        Ok(DivisorClass { lattice: self.target.clone(), coefficients: c })
    }
}

impl SurfaceLattice {
    pub fn rank(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.basis_labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn zero(&self) -> DivisorClass {
        DivisorClass { lattice: self.id.clone(), coefficients: vec![0; self.rank()] }
    }

    pub fn class(&self, coefficients: Vec<i64>) -> Result<DivisorClass> {
        if coefficients.len() != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), got: coefficients.len() });
        }
        Ok(DivisorClass { lattice: self.id.clone(), coefficients })
    }

    /// `Σ c · label`.
    pub fn class_of(&self, terms: &[(&str, i64)]) -> Result<DivisorClass> {
        let mut v = vec![0; self.rank()];
        for &(label, c) in terms {
            v[self.index_of(label)?] += c;
        }
        self.class(v)
    }

    pub fn generator(&self, label: &str) -> Result<DivisorClass> {
        self.class_of(&[(label, 1)])
    }

    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass { lattice: self.id.clone(), coefficients: self.canonical.clone() }
    }

    /// The class `Δ` with `K = -2Δ`: `Δ_0 + ((d+2)/2)Γ` on `F_d` for even `d`,
    /// `Γ_1 + Γ_2` on the quadric. Pulled back to any blowup.
    pub fn delta(&self) -> Result<DivisorClass> {
        match self.model {
            BaseModel::Hirzebruch { d } if d % 2 == 0 => self.class_of(&[("D0", 1), ("G", (d + 2) / 2)]),
            BaseModel::Quadric => self.class_of(&[("G1", 1), ("G2", 1)]),
            _ => Err(Error::UnsupportedClass("Delta".into())),
        }
    }

    fn check(&self, c: &DivisorClass) -> Result<()> {
        if c.lattice != self.id || c.coefficients.len() != self.rank() {
            return Err(Error::LatticeMismatch(format!("class on {} used with {}", c.lattice, self.id)));
        }
        Ok(())
    }

    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
        self.check(a)?;
        self.check(b)?;
        Ok(self
            .gram
            .iter()
            .zip(&a.coefficients)
            .map(|(row, x)| x * row.iter().zip(&b.coefficients).map(|(g, y)| g * y).sum::<i64>())
            .sum())
    }

    pub fn self_intersection(&self, a: &DivisorClass) -> Result<i64> {
        self.intersect(a, a)
    }

    pub fn blow_up(&self, label: &str) -> Result<(SurfaceLattice, Embedding)> {
        if self.basis_labels.iter().any(|l| l == label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        let r = self.rank();
        let mut gram: Vec<Vec<i64>> = self
            .gram
            .iter()
            .map(|row| {
                let mut row = row.clone();
                row.push(0);
                row
            })
            .collect();
        let mut last = vec![0; r + 1];
        last[r] = -1;
        gram.push(last);
        let mut canonical = self.canonical.clone();
        canonical.push(1);
        let mut basis_labels = self.basis_labels.clone();
        basis_labels.push(label.to_string());
        let mut exceptional = self.exceptional.clone();
        exceptional.push(label.to_string());
        let new = SurfaceLattice {
            id: format!("{}+{}", self.id, label),
            basis_labels,
            gram,
            canonical,
            chi_structure: self.chi_structure,
            model: self.model,
            exceptional,
        };
        let emb = Embedding {
            source: self.id.clone(),
            target: new.id.clone(),
            source_rank: r,
            target_rank: r + 1,
        };
        Ok((new, emb))
    }

    /// Blows up each label in turn.
    pub fn blow_up_all(&self, labels: &[&str]) -> Result<SurfaceLattice> {
        labels.iter().try_fold(self.clone(), |l, lab| Ok(l.blow_up(lab)?.0))
    }

    /// True if `self` is obtained from `other` by blowups (or is `other`).
    pub fn dominates(&self, other: &SurfaceLattice) -> bool {
        self.basis_labels.starts_with(&other.basis_labels)
            && self.gram.len() >= other.gram.len()
            && (self.id == other.id || self.id.starts_with(&format!("{}+", other.id)))
    }

    /// Total transform of a class living on `self` or on any lattice it
    /// dominates.
    pub fn pullback(&self, cls: &DivisorClass) -> Result<DivisorClass> {
        let prefix_ok = cls.lattice == self.id || self.id.starts_with(&format!("{}+", cls.lattice));
        if !prefix_ok || cls.coefficients.len() > self.rank() {
            return Err(Error::LatticeMismatch(format!("{} is not below {}", cls.lattice, self.id)));
        }
        let mut c = cls.coefficients.clone();
        c.resize(self.rank(), 0);
        self.class(c)
    }

    /// Pullback of `cls` minus `Σ m_i E_i`.
    pub fn proper_transform(&self, cls: &DivisorClass, multiplicities: &BTreeMap<String, i64>) -> Result<DivisorClass> {
        let mut out = self.pullback(cls)?;
        let base_rank = cls.coefficients.len();
        for (label, m) in multiplicities {
            let i = self.index_of(label)?;
            if i < base_rank || !self.exceptional.contains(label) {
                return Err(Error::UnknownLabel(label.clone()));
            }
            out.coefficients[i] -= m;
        }
        Ok(out)
    }

    /// `p_a = D(D+K)/2 + 1`.
    pub fn adjunction_genus(&self, d: &DivisorClass) -> Result<Q> {
        let k = self.canonical_class();
        let dd = self.intersect(d, d)?;
        let dk = self.intersect(d, &k)?;
        Ok(q(dd + dk, 2) + qi(1))
    }

    /// `χ(D) = χ(O) + D(D-K)/2`; `D(D-K)` is always even.
    pub fn riemann_roch_chi(&self, d: &DivisorClass) -> Result<i64> {
        let k = self.canonical_class();
        let dd = self.intersect(d, d)?;
        let dk = self.intersect(d, &k)?;
        Ok(self.chi_structure + (dd - dk) / 2)
    }

    /// Coordinates of `cls` in another basis of the same lattice.
    pub fn express_in(&self, cls: &DivisorClass, basis: &[DivisorClass]) -> Result<Vec<i64>> {
        self.check(cls)?;
        if basis.len() != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), got: basis.len() });
        }
        for b in basis {
            self.check(b)?;
        }
        let n = self.rank();
        let m: linalg::Matrix = (0..n)
            .map(|r| basis.iter().map(|b| qi(b.coefficients[r])).collect())
            .collect();
        let rhs: Vec<Q> = cls.coefficients.iter().map(|&c| qi(c)).collect();
        let x = linalg::solve(&m, &rhs)
            .ok_or_else(|| Error::LatticeMismatch("basis is not linearly independent".into()))?;
        x.iter()
            .map(|v| to_i64(v).ok_or_else(|| Error::NotIntegral(self.display(cls))))
            .collect()
    }

    pub fn display(&self, cls: &DivisorClass) -> String {
        let mut s = String::new();
        for (c, l) in cls.coefficients.iter().zip(&self.basis_labels) {
            if *c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push_str(if *c > 0 { " + " } else { " - " });
            } else if *c < 0 {
                s.push('-');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(l);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    pub fn determinant(&self) -> Q {
        let m = linalg::from_int(&self.gram);
        // product of pivots via solve is awkward; expand through elimination
        let n = m.len();
        let mut a = m;
        let mut det = qi(1);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return qi(0);
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= a[c][c].clone();
            for r in (c + 1)..n {
                let f = a[r][c].clone() / a[c][c].clone();
                for j in c..n {
                    let v = a[c][j].clone() * f.clone();
                    a[r][j] -= v;
                }
            }
        }
        det
    }
}

impl fmt::Display for SurfaceLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.id, self.basis_labels.join(", "))
    }
}

/// `h⁰(F_d, aΔ_0 + bΓ) = Σ_{k=0..a} max(0, b - kd + 1)`.
pub fn h0_hirzebruch(d: i64, a: i64, b: i64) -> i64 {
    (0..=a).map(|k| (b - k * d + 1).max(0)).sum()
}

/// Upstairs numbers for a double cover `f: Y → Z` branched over `B ~ 2L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCoverRules {
    /// `K_Y = f*(K_Z + L)`; this is `K_Z + L`.
    pub k_upstairs: DivisorClass,
    pub branch: DivisorClass,
}

impl DoubleCoverRules {
    /// `f*A · f*B = 2(A·B)`.
    pub fn pullback_intersection(&self, lat: &SurfaceLattice, a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
        Ok(2 * lat.intersect(a, b)?)
    }

    /// `K_Y · f*D = 2(K_Z + L)·D`.
    pub fn k_dot_pullback(&self, lat: &SurfaceLattice, d: &DivisorClass) -> Result<i64> {
        self.pullback_intersection(lat, &self.k_upstairs, d)
    }

    pub fn k_upstairs_squared(&self, lat: &SurfaceLattice) -> Result<i64> {
        self.pullback_intersection(lat, &self.k_upstairs, &self.k_upstairs)
    }
}

pub fn double_cover_pullback(lat: &SurfaceLattice, branch_half: &DivisorClass) -> Result<DoubleCoverRules> {
    let k_upstairs = lat.canonical_class().add(branch_half)?;
    Ok(DoubleCoverRules { k_upstairs, branch: branch_half.scale(2) })
}

/// Validity of the branch class `6Δ_0 + (p_g+3d+2)Γ` on `F_d`:
/// `p_g ≥ max(d+4, 2d-2)` and `p_g - d` even.
pub fn horikawa_branch_valid(p_g: i64, d: i64) -> bool {
    d >= 0 && p_g >= (d + 4).max(2 * d - 2) && (p_g - d).rem_euclid(2) == 0
}

/// Half of the branch class on `F_d`, `3Δ_0 + ((p_g+3d+2)/2)Γ`.
pub fn horikawa_branch_half(p_g: i64, d: i64) -> Result<(SurfaceLattice, DivisorClass)> {
    if !horikawa_branch_valid(p_g, d) {
        return Err(Error::UnsupportedClass(format!("branch class for p_g={p_g}, d={d}")));
    }
    let f = hirzebruch(d);
    let l = f.class_of(&[("D0", 3), ("G", (p_g + 3 * d + 2) / 2)])?;
    Ok((f, l))
}

/// Self-intersection of one of the two curves `C, C'` over `D̃` when
/// `f*D̃ = C + C'`: from `(C+C')² = 2D̃²` and `2C·C' = B'·D̃`.
pub fn split_curve_square(d_tilde_sq: i64, b_prime_dot_d_tilde: i64) -> Q {
    q(2 * d_tilde_sq - b_prime_dot_d_tilde, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hirzebruch_canonical_and_delta() {
        let f2 = hirzebruch(2);
        let delta = f2.delta().unwrap();
        assert_eq!(f2.canonical_class(), delta.scale(-2));
        assert_eq!(f2.self_intersection(&delta).unwrap(), 2);
        let f0 = hirzebruch(0);
        assert_eq!(f0.self_intersection(&f0.delta().unwrap()).unwrap(), 2);
        assert_eq!(quadric().canonical_class(), quadric().delta().unwrap().scale(-2));
    }

    #[test]
    fn blowup_canonical_in_new_basis() {
        let f2 = hirzebruch(2);
        let z = f2.blow_up_all(&["E1", "E2"]).unwrap();
        let d0 = z.generator("D0").unwrap();
        let dt = z.class_of(&[("G", 1), ("E1", -1), ("E2", -1)]).unwrap();
        let e1 = z.generator("E1").unwrap();
        let e2 = z.generator("E2").unwrap();
        let k = z.express_in(&z.canonical_class(), &[d0, dt, e1, e2]).unwrap();
        assert_eq!(k, vec![-2, -4, -3, -3]);
    }

    #[test]
    fn quadric_blowup_canonical() {
        let z = quadric().blow_up_all(&["E1", "E2"]).unwrap();
        assert_eq!(z.canonical, vec![-2, -2, 1, 1]);
    }

    #[test]
    fn plane_blowup_k2() {
        let p = projective_plane();
        assert_eq!(p.self_intersection(&p.canonical_class()).unwrap(), 9);
        let (b, _) = p.blow_up("E").unwrap();
        assert_eq!(b.self_intersection(&b.canonical_class()).unwrap(), 8);
        assert!(matches!(b.blow_up("E"), Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn proper_transforms() {
        let f2 = hirzebruch(2);
        let z = f2.blow_up_all(&["E1", "E2"]).unwrap();
        let m2: BTreeMap<String, i64> = [("E1".into(), 2), ("E2".into(), 2)].into();
        let b = f2.class_of(&[("D0", 6), ("G", 12)]).unwrap();
        let bt = z.proper_transform(&b, &m2).unwrap();
        assert_eq!(z.self_intersection(&bt).unwrap(), 64);
        let m1: BTreeMap<String, i64> = [("E1".into(), 1), ("E2".into(), 1)].into();
        let dt = z.proper_transform(&f2.generator("G").unwrap(), &m1).unwrap();
        assert_eq!(z.self_intersection(&dt).unwrap(), -2);
        let unchanged = z.proper_transform(&b, &BTreeMap::new()).unwrap();
        assert_eq!(z.self_intersection(&unchanged).unwrap(), 72);
        let bad: BTreeMap<String, i64> = [("E9".into(), 1)].into();
        assert!(matches!(z.proper_transform(&b, &bad), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn intersections() {
        let f2 = hirzebruch(2);
        let delta = f2.delta().unwrap();
        assert_eq!(f2.intersect(&delta.scale(6), &delta).unwrap(), 12);
        assert_eq!(f2.intersect(&delta.scale(6), &f2.generator("G").unwrap()).unwrap(), 6);
        assert_eq!(f2.intersect(&f2.canonical_class(), &f2.generator("D0").unwrap()).unwrap(), 0);
        let other = hirzebruch(0).generator("G").unwrap();
        assert!(matches!(f2.intersect(&delta, &other), Err(Error::LatticeMismatch(_))));
    }

    #[test]
    fn genus_and_rr() {
        let f0 = hirzebruch(0);
        assert_eq!(f0.adjunction_genus(&f0.delta().unwrap()).unwrap(), qi(0));
        assert_eq!(f0.riemann_roch_chi(&f0.zero()).unwrap(), 1);
        assert_eq!(f0.riemann_roch_chi(&f0.delta().unwrap().scale(6)).unwrap(), 49);
        let f2 = hirzebruch(2);
        assert_eq!(f2.riemann_roch_chi(&f2.delta().unwrap().scale(5)).unwrap(), 36);
        // genus from (D², K·D) pairs on a surface with enough room
        let genus = |dd: i64, kd: i64| q(dd + kd, 2) + qi(1);
        assert_eq!(genus(-5, 3), qi(0));
        assert_eq!(genus(1, -1), qi(1));
    }

    #[test]
    fn section_counts() {
        assert_eq!(h0_hirzebruch(0, 1, 1), 4);
        assert_eq!(h0_hirzebruch(2, 1, 2), 4);
        assert_eq!(h0_hirzebruch(0, 0, 1), 2);
    }

    #[test]
    fn double_cover_examples() {
        let f0 = hirzebruch(0);
        let rules = double_cover_pullback(&f0, &f0.delta().unwrap().scale(3)).unwrap();
        assert_eq!(rules.k_upstairs, f0.delta().unwrap());
        assert_eq!(rules.k_dot_pullback(&f0, &f0.generator("G").unwrap()).unwrap(), 2);

        let p2 = projective_plane();
        let rules = double_cover_pullback(&p2, &p2.generator("H").unwrap().scale(4)).unwrap();
        assert_eq!(rules.k_upstairs, p2.generator("H").unwrap());

        for d in 0..6 {
            for p_g in 0..20 {
                if let Ok((f, l)) = horikawa_branch_half(p_g, d) {
                    let rules = double_cover_pullback(&f, &l).unwrap();
                    let expect = f.class_of(&[("D0", 1), ("G", (p_g + d - 2) / 2)]).unwrap();
                    assert_eq!(rules.k_upstairs, expect);
                }
            }
        }
        assert!(horikawa_branch_valid(4, 0));
        assert!(!horikawa_branch_valid(5, 0));
        assert!(!horikawa_branch_valid(3, 1));
    }

    #[test]
    fn determinant_sign() {
        let z = hirzebruch(3).blow_up_all(&["E1", "E2", "E3"]).unwrap();
        assert_eq!(z.determinant(), qi(1));
        assert_eq!(hirzebruch(3).determinant(), qi(-1));
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(hirzebruch(2)).unwrap();
        assert_eq!(v["basis"], serde_json::json!(["D0", "G"]));
        assert_eq!(v["gram"], serde_json::json!([[-2, 1], [1, 0]]));
        assert_eq!(v["K"], serde_json::json!([-2, -4]));
    }
}
