//! Simply-laced root systems in explicit coordinate models.
//!
//! * `A_n`: ambient `e_0..e_n`, `E_i = e_{i-1} - e_i`.
//! * `D_n`: ambient `e_1..e_n`, `E_i = e_i - e_{i+1}` for `i < n`, `E_n = e_{n-1} + e_n`.
//! * `E_n`: ambient `(h, e_1..e_n)` with `h∘h = -1`, `E_i = e_i - e_{i+1}` for
//!   `i < n`, `E_n = h - e_1 - e_2 - e_3`, so node `n` hangs off node 3.
//!
//! Indices in the Rust API are 0-based; node `i` here is `E_{i+1}` in the
//! usual labelling. Weights are stored by their pairings with the simple
//! roots (Dynkin labels) and converted to ambient vectors on demand.

pub mod tables;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{self, qi, to_i64, Q};

/// Largest rank for which Weyl orbits are enumerated explicitly.
pub const ORBIT_RANK_LIMIT: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }

    pub fn valid_rank(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
        }
    }

    pub fn positive_root_count(self, n: usize) -> usize {
        match self {
            Family::A => n * (n + 1) / 2,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            _ => Err(Error::Parse(format!("unknown root system family `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    components: Vec<Component>,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Matrix,
    /// Diagonal of the ambient form `∘`.
    form: Vec<i64>,
    /// Simple roots as ambient integer vectors.
    simple: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates.
    positive: Vec<Vec<i64>>,
}

/// A weight, stored by its pairings `⟨w, E_j⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

fn simple_model(family: Family, n: usize) -> (Vec<i64>, Vec<Vec<i64>>) {
    match family {
        Family::A => {
            let form = vec![1; n + 1];
            let simple = (1..=n)
                .map(|i| {
                    let mut v = vec![0; n + 1];
                    v[i - 1] = 1;
                    v[i] = -1;
                    v
                })
                .collect();
            (form, simple)
        }
        Family::D => {
            let form = vec![1; n];
            let mut simple: Vec<Vec<i64>> = (0..n - 1)
                .map(|i| {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v[i + 1] = -1;
                    v
                })
                .collect();
            let mut last = vec![0; n];
            last[n - 2] = 1;
            last[n - 1] = 1;
            simple.push(last);
            (form, simple)
        }
        Family::E => {
            // coordinate 0 is h
            let mut form = vec![1; n + 1];
            form[0] = -1;
            let mut simple: Vec<Vec<i64>> = (1..n)
                .map(|i| {
                    let mut v = vec![0; n + 1];
                    v[i] = 1;
                    v[i + 1] = -1;
                    v
                })
                .collect();
            let mut last = vec![0; n + 1];
            last[0] = 1;
            last[1] = -1;
            last[2] = -1;
            last[3] = -1;
            simple.push(last);
            (form, simple)
        }
    }
}

fn ambient_dot(form: &[i64], a: &[i64], b: &[i64]) -> i64 {
    form.iter().zip(a).zip(b).map(|((f, x), y)| f * x * y).sum()
}

fn enumerate_positive(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for j in 0..r {
            let pairing: i64 = (0..r).map(|i| beta[i] * cartan[i][j]).sum();
            if pairing == -1 {
                let mut next = beta.clone();
                next[j] += 1;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));
    out
}

impl RootSystem {
    pub fn build(family: Family, n: usize) -> Result<RootSystem> {
        if !family.valid_rank(n) {
            return Err(Error::InvalidRootSystem { family: family.letter(), rank: n });
        }
        let (form, simple) = simple_model(family, n);
        Ok(Self::assemble(vec![Component { family, rank: n }], form, simple))
    }

    fn assemble(components: Vec<Component>, form: Vec<i64>, simple: Vec<Vec<i64>>) -> RootSystem {
        let r = simple.len();
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| ambient_dot(&form, &simple[i], &simple[j])).collect())
            .collect();
        let cartan_inv = linalg::inverse(&linalg::from_int(&cartan)).expect("Cartan matrix is invertible");
        let positive = enumerate_positive(&cartan);
        let expected: usize = components.iter().map(|c| c.family.positive_root_count(c.rank)).sum();
        assert_eq!(positive.len(), expected, "positive root count for {components:?}");
        RootSystem { components, cartan, cartan_inv, form, simple, positive }
    }

    /// Orthogonal direct sum, summands in the given order.
    pub fn direct_sum(parts: &[RootSystem]) -> RootSystem {
        let amb: usize = parts.iter().map(|p| p.form.len()).sum();
        let mut form = Vec::with_capacity(amb);
        let mut simple = Vec::new();
        let mut components = Vec::new();
        let mut offset = 0;
        for p in parts {
            form.extend_from_slice(&p.form);
            for s in &p.simple {
                let mut v = vec![0; amb];
                v[offset..offset + s.len()].copy_from_slice(s);
                simple.push(v);
            }
            components.extend_from_slice(&p.components);
            offset += p.form.len();
        }
        Self::assemble(components, form, simple)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    pub fn name(&self) -> String {
        self.components.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("+")
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &Matrix {
        &self.cartan_inv
    }

    pub fn ambient_form(&self) -> &[i64] {
        &self.form
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn highest_roots(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut off = 0;
        for c in &self.components {
            let best = self
                .positive
                .iter()
                .filter(|b| b.iter().enumerate().all(|(i, &x)| x == 0 || (off..off + c.rank).contains(&i)))
                .max_by_key(|b| b.iter().sum::<i64>())
                .expect("component has roots");
            out.push(best.clone());
            off += c.rank;
        }
        out
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), got: len });
        }
        Ok(())
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Ok(Weight(v))
    }

    pub fn fundamental_weights(&self) -> Vec<Weight> {
        (0..self.rank()).map(|i| self.fundamental_weight(i).unwrap()).collect()
    }

    /// The weight `ω_C` with `ω_C(E_i) = C·E_i`.
    pub fn weight_of_divisor(&self, intersections: &[i64]) -> Result<Weight> {
        self.check_len(intersections.len())?;
        Ok(Weight(intersections.to_vec()))
    }

    /// Coordinates of `w` in the basis of simple roots, `C⁻¹ λ`.
    pub fn root_coordinates(&self, w: &Weight) -> Vec<Q> {
        let lam: Vec<Q> = w.0.iter().map(|&x| qi(x)).collect();
        linalg::mat_vec(&self.cartan_inv, &lam)
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.root_coordinates(w).iter().all(|c| c.denom().is_one())
    }

    /// `λ - μ ∈ Q`.
    pub fn same_coset(&self, a: &Weight, b: &Weight) -> bool {
        let diff = Weight(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect());
        self.in_root_lattice(&diff)
    }

    /// Weight from root-lattice coordinates, `λ = C c`.
    pub fn weight_of_root_vector(&self, coords: &[i64]) -> Result<Weight> {
        self.check_len(coords.len())?;
        Ok(Weight(
            (0..self.rank())
                .map(|j| (0..self.rank()).map(|i| coords[i] * self.cartan[i][j]).sum())
                .collect(),
        ))
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Q {
        let bq: Vec<Q> = b.0.iter().map(|&x| qi(x)).collect();
        let cb = linalg::mat_vec(&self.cartan_inv, &bq);
        a.0.iter().zip(cb).map(|(&x, y)| qi(x) * y).sum()
    }

    pub fn norm2(&self, w: &Weight) -> Q {
        self.inner(w, w)
    }

    pub fn pairing(&self, w: &Weight, j: usize) -> Result<i64> {
        self.check_index(j)?;
        Ok(w.0[j])
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.0.iter().all(|&x| x >= 0)
    }

    /// `⟨ω_i, β⟩ ≤ 1` for every positive root `β`; since `⟨ω_i, β⟩` is the
    /// coefficient of `E_i` in `β`, this reads off the root list.
    pub fn is_minuscule(&self, i: usize) -> Result<bool> {
        self.check_index(i)?;
        Ok(self.positive.iter().all(|b| b[i] <= 1))
    }

    /// `s_j(w) = w - ⟨w, E_j⟩ E_j`.
    pub fn reflect(&self, w: &Weight, j: usize) -> Weight {
        let p = w.0[j];
        Weight(w.0.iter().zip(&self.cartan[j]).map(|(x, c)| x - p * c).collect())
    }

    /// Ambient vector `Σ (C⁻¹ λ)_j E_j`.
    pub fn ambient(&self, w: &Weight) -> Vec<Q> {
        let coords = self.root_coordinates(w);
        let mut v = vec![Q::zero(); self.form.len()];
        for (c, s) in coords.iter().zip(&self.simple) {
            for (x, &y) in v.iter_mut().zip(s) {
                *x += c * qi(y);
            }
        }
        v
    }

    /// The weight whose pairings with the simple roots match those of an
    /// ambient vector. Components orthogonal to the root span are dropped.
    pub fn weight_from_ambient(&self, v: &[Q]) -> Result<Weight> {
        self.check_ambient_len(v.len())?;
        let mut labels = Vec::with_capacity(self.rank());
        for (j, s) in self.simple.iter().enumerate() {
            let p: Q = v
                .iter()
                .zip(s)
                .zip(&self.form)
                .map(|((x, &y), &f)| x * qi(y * f))
                .sum();
            labels.push(to_i64(&p).ok_or(Error::NotAWeight(j))?);
        }
        Ok(Weight(labels))
    }

    pub fn weight_from_ambient_int(&self, v: &[i64]) -> Result<Weight> {
        let q: Vec<Q> = v.iter().map(|&x| qi(x)).collect();
        self.weight_from_ambient(&q)
    }

    fn check_ambient_len(&self, len: usize) -> Result<()> {
        if len != self.form.len() {
            return Err(Error::LengthMismatch { expected: self.form.len(), got: len });
        }
        Ok(())
    }

    pub fn ambient_norm(&self, v: &[Q]) -> Q {
        v.iter().zip(&self.form).map(|(x, &f)| x * x * qi(f)).sum()
    }

    /// Full Weyl orbit by breadth-first reflection, ranks up to
    /// [`ORBIT_RANK_LIMIT`] only.
    pub fn weyl_orbit(&self, w: &Weight) -> Result<Vec<Weight>> {
        if self.rank() > ORBIT_RANK_LIMIT {
            return Err(Error::InvalidRootSystem { family: 'W', rank: self.rank() });
        }
        let mut seen: BTreeSet<Weight> = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(cur) = queue.pop_front() {
            for j in 0..self.rank() {
                if cur.0[j] != 0 {
                    let next = self.reflect(&cur, j);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// The dominant representative of the orbit of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        while let Some(j) = cur.0.iter().position(|&x| x < 0) {
            cur = self.reflect(&cur, j);
        }
        cur
    }

    /// Permutations of the nodes preserving the Cartan matrix, as index maps.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let r = self.rank();
        let mut out = Vec::new();
        let mut perm = Vec::with_capacity(r);
        let mut used = vec![false; r];
        self.extend_automorphism(&mut perm, &mut used, &mut out);
        out
    }

    fn extend_automorphism(&self, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let k = perm.len();
        if k == self.rank() {
            out.push(perm.clone());
            return;
        }
        for t in 0..self.rank() {
            if used[t] {
                continue;
            }
            if (0..k).all(|i| self.cartan[i][k] == self.cartan[perm[i]][t]) {
                used[t] = true;
                perm.push(t);
                self.extend_automorphism(perm, used, out);
                perm.pop();
                used[t] = false;
            }
        }
    }

    pub fn apply_automorphism(&self, w: &Weight, perm: &[usize]) -> Weight {
        let mut out = vec![0; self.rank()];
        for (i, &t) in perm.iter().enumerate() {
            out[t] = w.0[i];
        }
        Weight(out)
    }

    pub fn report(&self, w: &Weight) -> WeightReport {
        let (family, rank) = match self.components.as_slice() {
            [c] => (c.family.letter().to_string(), c.rank),
            _ => (self.name(), self.rank()),
        };
        WeightReport {
            family,
            rank,
            labels: w.0.clone(),
            weight: self.ambient(w),
            norm2: self.norm2(w),
            dominant: self.is_dominant(w),
        }
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    /// `"E7"`, `"A1+A2"`, …
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<RootSystem> = s
            .split('+')
            .map(|p| {
                let p = p.trim();
                let mut chars = p.chars();
                let family: Family = chars
                    .next()
                    .ok_or_else(|| Error::Parse("empty root system".into()))?
                    .to_string()
                    .parse()?;
                let n: usize = chars
                    .as_str()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rank in `{p}`")))?;
                RootSystem::build(family, n)
            })
            .collect::<Result<_>>()?;
        Ok(if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            RootSystem::direct_sum(&parts)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightReport {
    pub family: String,
    pub rank: usize,
    pub labels: Vec<i64>,
    #[serde(serialize_with = "rational::serialize_q_vec", deserialize_with = "rational::deserialize_q_vec")]
    pub weight: Vec<Q>,
    #[serde(serialize_with = "rational::serialize_q", deserialize_with = "rational::deserialize_q")]
    pub norm2: Q,
    pub dominant: bool,
}

/// Parses `"1,0,2"` into integers.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("not an integer: `{t}`"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn a3_model() {
        let rs = RootSystem::build(Family::A, 3).unwrap();
        assert_eq!(rs.simple_roots()[0], vec![1, -1, 0, 0]);
        assert_eq!(rs.simple_roots()[2], vec![0, 0, 1, -1]);
        assert_eq!(rs.cartan(), &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
    }

    #[test]
    fn root_counts() {
        assert_eq!(RootSystem::build(Family::D, 4).unwrap().positive_roots().len(), 12);
        assert_eq!(RootSystem::build(Family::E, 8).unwrap().positive_roots().len(), 120);
        assert_eq!(RootSystem::build(Family::E, 6).unwrap().positive_roots().len(), 36);
        assert!(RootSystem::build(Family::D, 3).is_err());
        assert!(RootSystem::build(Family::E, 9).is_err());
        assert!(RootSystem::build(Family::A, 0).is_err());
    }

    #[test]
    fn e_branch_at_node_three() {
        for n in 6..=8 {
            let rs = RootSystem::build(Family::E, n).unwrap();
            let c = rs.cartan();
            assert_eq!(c[n - 1][2], -1);
            assert_eq!(c[n - 1].iter().filter(|&&x| x == -1).count(), 1);
            for i in 0..n {
                assert_eq!(c[i][i], 2);
            }
        }
    }

    #[test]
    fn fundamental_weight_ambient() {
        let rs = RootSystem::build(Family::A, 3).unwrap();
        let w1 = rs.ambient(&rs.fundamental_weight(0).unwrap());
        assert_eq!(w1, vec![q(3, 4), q(-1, 4), q(-1, 4), q(-1, 4)]);
        assert_eq!(rs.weight_from_ambient(&w1).unwrap(), rs.fundamental_weight(0).unwrap());
    }

    #[test]
    fn table_style_weights() {
        let a = RootSystem::build(Family::A, 5).unwrap();
        let w = a.weight_of_divisor(&[1, 0, 0, 0, 1]).unwrap();
        assert_eq!(a.ambient(&w), vec![qi(1), qi(0), qi(0), qi(0), qi(0), qi(-1)]);
        assert_eq!(a.norm2(&w), qi(2));
        assert!(a.is_dominant(&w));

        let e8 = RootSystem::build(Family::E, 8).unwrap();
        let w = e8.weight_of_divisor(&[0, 0, 0, 0, 0, 0, 1, 0]).unwrap();
        let expect: Vec<Q> = [3, -1, -1, -1, -1, -1, -1, -1, -2].iter().map(|&x| qi(x)).collect();
        assert_eq!(e8.ambient(&w), expect);

        let d = RootSystem::build(Family::D, 6).unwrap();
        let two_e1 = d.weight_from_ambient_int(&[2, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(d.norm2(&two_e1), qi(4));
        assert_eq!(d.norm2(&Weight::zero(6)), qi(0));
    }

    #[test]
    fn minuscule_sets() {
        let mins = |s: &str| -> Vec<usize> {
            let rs: RootSystem = s.parse().unwrap();
            (0..rs.rank()).filter(|&i| rs.is_minuscule(i).unwrap()).map(|i| i + 1).collect()
        };
        assert_eq!(mins("A4"), vec![1, 2, 3, 4]);
        assert_eq!(mins("D6"), vec![1, 5, 6]);
        assert_eq!(mins("E6"), vec![1, 5]);
        assert_eq!(mins("E7"), vec![6]);
        assert_eq!(mins("E8"), Vec::<usize>::new());
    }

    #[test]
    fn orbit_sizes() {
        let a2: RootSystem = "A2".parse().unwrap();
        assert_eq!(a2.weyl_orbit(&a2.fundamental_weight(0).unwrap()).unwrap().len(), 3);
        let e6: RootSystem = "E6".parse().unwrap();
        assert_eq!(e6.weyl_orbit(&e6.fundamental_weight(0).unwrap()).unwrap().len(), 27);
        let e7: RootSystem = "E7".parse().unwrap();
        assert!(e7.weyl_orbit(&e7.fundamental_weight(0).unwrap()).is_err());
    }

    #[test]
    fn direct_sum_blocks() {
        let rs: RootSystem = "A1+A2".parse().unwrap();
        assert_eq!(rs.rank(), 3);
        assert_eq!(rs.cartan()[0], vec![2, 0, 0]);
        assert_eq!(rs.positive_roots().len(), 4);
        assert_eq!(rs.name(), "A1+A2");
    }

    #[test]
    fn automorphism_counts() {
        let count = |s: &str| s.parse::<RootSystem>().unwrap().diagram_automorphisms().len();
        assert_eq!(count("A3"), 2);
        assert_eq!(count("D4"), 6);
        assert_eq!(count("D5"), 2);
        assert_eq!(count("E6"), 2);
        assert_eq!(count("E7"), 1);
    }

    #[test]
    fn weight_membership() {
        let a2: RootSystem = "A2".parse().unwrap();
        let half = vec![q(1, 2), q(-1, 2), qi(0)];
        assert!(matches!(a2.weight_from_ambient(&half), Err(Error::NotAWeight(1))));
        assert!(a2.weight_of_divisor(&[1]).is_err());
        let neg = a2.fundamental_weight(0).unwrap().scale(-1);
        assert!(!a2.is_dominant(&neg));
    }
}
