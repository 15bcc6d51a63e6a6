//! Flop reduction in the weight lattice.
//!
//! The special fibre `C + Σ a_i E_i` of a degenerating curve is recorded as
//! the weight `μ = ω - Σ a_i E_i`. Flopping the `(-2)`-curve `E_j` when
//! `μ·E_j < 0` acts as the reflection `s_j` and lowers `a_j` by `|μ·E_j|`.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::ade::{RootSystem, Weight};
use crate::error::{Error, Result};
use crate::rational::{qi, to_i64};

pub const DEFAULT_HEIGHT_BOUND: i64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    #[default]
    SmallestIndex,
    LargestIndex,
    MostNegative,
}

impl TieBreak {
    pub const ALL: [TieBreak; 3] = [TieBreak::SmallestIndex, TieBreak::LargestIndex, TieBreak::MostNegative];
}

impl std::str::FromStr for TieBreak {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smallest" | "smallest-index" => Ok(TieBreak::SmallestIndex),
            "largest" | "largest-index" => Ok(TieBreak::LargestIndex),
            "most-negative" => Ok(TieBreak::MostNegative),
            _ => Err(Error::Parse(format!("unknown tie-break policy `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberState<'a> {
    rs: &'a RootSystem,
    omega: Weight,
    coeffs: Vec<i64>,
    mu: Weight,
}

impl<'a> FiberState<'a> {
    pub fn new(rs: &'a RootSystem, omega: Weight, coeffs: Vec<i64>) -> Result<Self> {
        for len in [omega.0.len(), coeffs.len()] {
            if len != rs.rank() {
                return Err(Error::LengthMismatch { expected: rs.rank(), got: len });
            }
        }
        if let Some((node, &value)) = coeffs.iter().enumerate().find(|(_, &a)| a < 0) {
            return Err(Error::NegativeCoefficient { node, value });
        }
        let drop = rs.weight_of_root_vector(&coeffs)?;
        let mu = omega.add(&drop.scale(-1));
        Ok(FiberState { rs, omega, coeffs, mu })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn omega(&self) -> &Weight {
        &self.omega
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.rs.is_dominant(&self.mu)
    }

    /// Nodes with `μ·E_j < 0`.
    pub fn legal_flops(&self) -> Vec<usize> {
        (0..self.rs.rank()).filter(|&j| self.mu.0[j] < 0).collect()
    }

    pub fn flop_step(&self, j: usize) -> Result<FiberState<'a>> {
        let p = self.rs.pairing(&self.mu, j)?;
        if p >= 0 {
            return Err(Error::FlopNotAllowed { node: j, pairing: p });
        }
        let aj = self.coeffs[j] + p;
        if aj < 0 {
            return Err(Error::LeftWeightSystem { node: j, coefficient: aj });
        }
        let mut coeffs = self.coeffs.clone();
        coeffs[j] = aj;
        Ok(FiberState {
            rs: self.rs,
            omega: self.omega.clone(),
            coeffs,
            mu: self.rs.reflect(&self.mu, j),
        })
    }

    fn choose(&self, policy: TieBreak) -> Option<usize> {
        let legal = self.legal_flops();
        match policy {
            TieBreak::SmallestIndex => legal.first().copied(),
            TieBreak::LargestIndex => legal.last().copied(),
            TieBreak::MostNegative => legal.into_iter().min_by_key(|&j| (self.mu.0[j], j)),
        }
    }

    /// Flops until `μ` is dominant. Each step lowers `Σ a_i`, so this stops
    /// after at most `height()` steps.
    pub fn reduce(&self, policy: TieBreak) -> Result<FlopTrace> {
        let mut cur = self.clone();
        let mut steps = Vec::new();
        while let Some(j) = cur.choose(policy) {
            cur = cur.flop_step(j)?;
            steps.push(j);
        }
        Ok(FlopTrace {
            omega: self.omega.clone(),
            steps,
            initial: Snapshot::of(self),
            last: Snapshot::of(&cur),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub coeffs: Vec<i64>,
    pub mu: Weight,
}

impl Snapshot {
    fn of(s: &FiberState<'_>) -> Snapshot {
        Snapshot { coeffs: s.coeffs.clone(), mu: s.mu.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlopTrace {
    pub omega: Weight,
    /// 0-based nodes, in the order flopped.
    pub steps: Vec<usize>,
    pub initial: Snapshot,
    #[serde(rename = "final")]
    pub last: Snapshot,
}

impl FlopTrace {
    pub fn final_dominant(&self) -> bool {
        self.last.mu.0.iter().all(|&x| x >= 0)
    }

    /// JSON view with 1-based steps.
    pub fn report(&self) -> TraceReport {
        TraceReport {
            omega: self.omega.0.clone(),
            steps: self.steps.iter().map(|j| j + 1).collect(),
            initial_a: self.initial.coeffs.clone(),
            final_a: self.last.coeffs.clone(),
            final_mu: self.last.mu.0.clone(),
            final_dominant: self.final_dominant(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceReport {
    pub omega: Vec<i64>,
    pub steps: Vec<usize>,
    pub initial_a: Vec<i64>,
    pub final_a: Vec<i64>,
    pub final_mu: Vec<i64>,
    pub final_dominant: bool,
}

/// Coefficient vectors `a` of the Weyl-orbit weights `μ = ω - Σ a_i E_i` of
/// a dominant `ω` with `Σ a_i ≤ height_bound`.
///
/// Every orbit element is reached from `ω` by reflections that only raise
/// the height, so walking down from `ω` and pruning at the bound misses
/// nothing.
pub fn orbit_starts(rs: &RootSystem, omega: &Weight, height_bound: i64) -> Result<Vec<Vec<i64>>> {
    if !rs.is_dominant(omega) {
        return Err(Error::NotDominant(omega.0.clone()));
    }
    let start = vec![0; rs.rank()];
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, omega.clone())]);
    while let Some((a, mu)) = queue.pop_front() {
        for j in 0..rs.rank() {
            let p = mu.0[j];
            if p > 0 && a.iter().sum::<i64>() + p <= height_bound {
                let mut next = a.clone();
                next[j] += p;
                if seen.insert(next.clone()) {
                    queue.push_back((next, rs.reflect(&mu, j)));
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// All `a ≥ 0` with `Σ a_i ≤ height_bound` and `ω - Σ a_i E_i` dominant,
/// optionally keeping only those with `μ² = ω²`.
pub fn dominant_decompositions(
    rs: &RootSystem,
    omega: &Weight,
    height_bound: i64,
    same_norm: bool,
) -> Vec<Vec<i64>> {
    let target = rs.norm2(omega);
    let mut out = Vec::new();
    let mut a = vec![0i64; rs.rank()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        rs: &RootSystem,
        omega: &Weight,
        i: usize,
        left: i64,
        a: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
        same_norm: bool,
        target: &crate::rational::Q,
    ) {
        let r = rs.rank();
        if i == r {
            let drop = rs.weight_of_root_vector(a).expect("full length");
            let mu = omega.add(&drop.scale(-1));
            if rs.is_dominant(&mu) && (!same_norm || rs.norm2(&mu) == *target) {
                out.push(a.clone());
            }
            return;
        }
        for v in 0..=left {
            a[i] = v;
            rec(rs, omega, i + 1, left - v, a, out, same_norm, target);
        }
        a[i] = 0;
    }
    rec(rs, omega, 0, height_bound, &mut a, &mut out, same_norm, &target);
    out.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    out
}

/// Splits a root-lattice weight of norm 4 as `β + γ` with `β, γ` roots and
/// `β∘γ = 0`; returns the pair in simple-root coordinates.
pub fn orthogonal_root_split(rs: &RootSystem, w: &Weight) -> Option<(Vec<i64>, Vec<i64>)> {
    if rs.norm2(w) != qi(4) {
        return None;
    }
    let coords: Vec<i64> = rs.root_coordinates(w).iter().map(to_i64).collect::<Option<_>>()?;
    let roots: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .flat_map(|b| [b.clone(), b.iter().map(|x| -x).collect()])
        .collect();
    for beta in &roots {
        let gamma: Vec<i64> = coords.iter().zip(beta).map(|(c, b)| c - b).collect();
        let is_root = roots.contains(&gamma);
        if is_root {
            let bw = rs.weight_of_root_vector(beta).ok()?;
            let gw = rs.weight_of_root_vector(&gamma).ok()?;
            if rs.inner(&bw, &gw) == qi(0) {
                return Some((beta.clone(), gamma));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ade::Family;

    fn rs(s: &str) -> RootSystem {
        s.parse().unwrap()
    }

    #[test]
    fn a1_single_flop() {
        let r = rs("A1");
        let s = FiberState::new(&r, Weight(vec![1]), vec![1]).unwrap();
        assert_eq!(s.mu(), &Weight(vec![-1]));
        let t = s.flop_step(0).unwrap();
        assert_eq!(t.coeffs(), &[0]);
        assert_eq!(t.mu(), &Weight(vec![1]));
        let tr = s.reduce(TieBreak::default()).unwrap();
        assert_eq!(tr.steps, vec![0]);
    }

    #[test]
    fn a2_adjoint_trace() {
        let r = rs("A2");
        let s = FiberState::new(&r, Weight(vec![1, 1]), vec![1, 0]).unwrap();
        assert_eq!(s.mu(), &Weight(vec![-1, 2]));
        let tr = s.reduce(TieBreak::default()).unwrap();
        assert_eq!(tr.steps, vec![0]);
        assert_eq!(tr.last.coeffs, vec![0, 0]);
    }

    #[test]
    fn a3_minuscule_trace() {
        let r = rs("A3");
        let s = FiberState::new(&r, Weight(vec![0, 1, 0]), vec![0, 1, 0]).unwrap();
        let tr = s.reduce(TieBreak::default()).unwrap();
        assert_eq!(tr.steps, vec![1]);
        assert_eq!(tr.last.coeffs, vec![0, 0, 0]);
        assert!(tr.final_dominant());
        let rep = tr.report();
        assert_eq!(rep.steps, vec![2]);
    }

    #[test]
    fn dominant_start_has_no_flops() {
        let r = rs("D4");
        let s = FiberState::new(&r, Weight(vec![0, 1, 0, 0]), vec![0; 4]).unwrap();
        assert!(s.reduce(TieBreak::LargestIndex).unwrap().steps.is_empty());
        for j in 0..4 {
            assert!(matches!(s.flop_step(j), Err(Error::FlopNotAllowed { .. })));
        }
    }

    #[test]
    fn leaving_weight_system_is_an_error() {
        // μ = ω_1 - 2α_1 in A1: pairing -3, a_1 would become -1
        let r = rs("A1");
        let s = FiberState::new(&r, Weight(vec![1]), vec![2]).unwrap();
        assert!(matches!(s.flop_step(0), Err(Error::LeftWeightSystem { coefficient: -1, .. })));
        assert!(matches!(
            FiberState::new(&r, Weight(vec![1]), vec![-1]),
            Err(Error::NegativeCoefficient { .. })
        ));
    }

    #[test]
    fn orbit_starts_of_minuscule() {
        let r = rs("A3");
        let starts = orbit_starts(&r, &Weight(vec![0, 1, 0]), 8).unwrap();
        assert_eq!(starts.len(), 6);
        let e6 = RootSystem::build(Family::E, 6).unwrap();
        assert_eq!(orbit_starts(&e6, &e6.fundamental_weight(0).unwrap(), 100).unwrap().len(), 27);
    }

    #[test]
    fn decompositions_of_zero_and_minuscule() {
        let r = rs("D5");
        assert_eq!(dominant_decompositions(&r, &Weight::zero(5), 6, false), vec![vec![0; 5]]);
        assert_eq!(dominant_decompositions(&r, &Weight(vec![1, 0, 0, 0, 0]), 8, false), vec![vec![0; 5]]);
        // 2e_1 has the dominant weights 2e_1, e_1+e_2 and 0 below it
        let two_e1 = r.weight_from_ambient_int(&[2, 0, 0, 0, 0]).unwrap();
        assert_eq!(dominant_decompositions(&r, &two_e1, 12, false).len(), 3);
        assert_eq!(dominant_decompositions(&r, &two_e1, 12, true), vec![vec![0; 5]]);
    }

    #[test]
    fn split_norm_four() {
        let r = rs("D6");
        let two_e1 = r.weight_from_ambient_int(&[2, 0, 0, 0, 0, 0]).unwrap();
        let (b, g) = orthogonal_root_split(&r, &two_e1).unwrap();
        let bw = r.weight_of_root_vector(&b).unwrap();
        let gw = r.weight_of_root_vector(&g).unwrap();
        assert_eq!(r.norm2(&bw), qi(2));
        assert_eq!(r.norm2(&gw), qi(2));
        assert_eq!(bw.add(&gw), two_e1);
    }
}
