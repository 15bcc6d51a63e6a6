//! Brute-force reference computations, kept independent of the main code
//! paths so they can cross-check them.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;

use crate::ade::{RootSystem, Weight};
use crate::linalg;
use crate::localint::LocalCurve;
use crate::rational::Q;

/// Dominant weights of the irreducible representation with highest weight
/// `lambda`.
///
/// These are the dominant `μ` with `λ - μ` a non-negative root combination.
/// The dominance order on dominant weights is generated by steps `μ → μ - β`
/// with `β` a positive root and `⟨μ, β⟩ > 0`, so closing `{λ}` under all
/// such steps that stay dominant finds every one of them.
pub fn dominant_weights(rs: &RootSystem, lambda: &Weight) -> BTreeSet<Weight> {
    let roots: Vec<Weight> = rs
        .positive_roots()
        .iter()
        .map(|b| rs.weight_of_root_vector(b).expect("root has full length"))
        .collect();
    let coords = rs.positive_roots();
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for (beta, c) in roots.iter().zip(coords) {
            // ⟨μ, β⟩ = Σ c_i ⟨μ, E_i⟩
            let m: i64 = c.iter().zip(&mu.0).map(|(a, b)| a * b).sum();
            for k in 1..=m {
                let next = mu.add(&beta.scale(-k));
                if rs.is_dominant(&next) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// All weights of `V_λ` by closing under simple-root strings: whenever
/// `m = ⟨μ, E_j⟩ > 0`, the weights `μ - kE_j` for `k = 1..m` belong too.
/// Gives up (returns `None`) past `limit` weights.
pub fn weight_system(rs: &RootSystem, lambda: &Weight, limit: usize) -> Option<BTreeSet<Weight>> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for j in 0..rs.rank() {
            let m = mu.0[j];
            for k in 1..=m {
                let next = Weight(mu.0.iter().zip(&rs.cartan()[j]).map(|(x, c)| x - k * c).collect());
                if seen.insert(next.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Some(seen)
}

/// Minuscule test by counting the dominant weights of `V_{ω_i}`.
pub fn is_minuscule_by_weights(rs: &RootSystem, i: usize) -> bool {
    let w = rs.fundamental_weight(i).expect("index in range");
    dominant_weights(rs, &w).len() == 1
}

/// `dim_Q Q[x,y] / (B, D, m^N)` for increasing `N` until it stabilises.
///
/// The ideal is spanned, in degrees below `N`, by `x^a y^b B` and
/// `x^a y^b D`; its codimension in the polynomials of degree `< N` is the
/// rank deficit. When `B` and `D` meet in finitely many points near the
/// origin this stabilises at the local intersection number. Returns `None`
/// if it has not stabilised by `max_n`.
pub fn local_quotient_dimension(b: &LocalCurve, d: &LocalCurve, max_n: u32) -> Option<u32> {
    let mut prev: Option<u32> = None;
    for n in 1..=max_n {
        let dim = truncated_quotient_dim(b, d, n);
        if prev == Some(dim) && dim < n {
            return Some(dim);
        }
        prev = Some(dim);
    }
    None
}

fn truncated_quotient_dim(b: &LocalCurve, d: &LocalCurve, n: u32) -> u32 {
    // monomials of total degree < n
    let monos: Vec<(u32, u32)> = (0..n).flat_map(|t| (0..=t).map(move |i| (i, t - i))).collect();
    let index = |i: u32, j: u32| -> Option<usize> {
        let t = i + j;
        if t >= n {
            return None;
        }
        Some((t * (t + 1) / 2 + j) as usize)
    };
    let mut rows: linalg::Matrix = Vec::new();
    for g in [b, d] {
        for &(a, c) in &monos {
            let mut row = vec![Q::zero(); monos.len()];
            let mut any = false;
            for ((i, j), coef) in g.terms() {
                if let Some(k) = index(i + a, j + c) {
                    row[k] += coef.clone();
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    let r = if rows.is_empty() { 0 } else { linalg::rank(&rows) };
    (monos.len() - r) as u32
}
