//! Classification of how a smooth germ `D` meets an ADE branch germ `B`.
//!
//! Figure labels are our own stable identifiers:
//! `distinct_points(a..i)` for the configurations with `(B·D)_p ∈ {2,3}`,
//! `same_points_4(a..h)` and `same_points_5(a..h)` for a single point of
//! multiplicity 4 or 5, and `even(..)` for the even-intersection rows.
//! Labels are assigned from the defining conditions (family, which tangent
//! line `D` follows, order of tangency), never from the computed
//! multiplicity, so agreement between the two is a real check.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{mult, mult_adapted, normal_form, separation_ladder, GraphCurve, Multiplicity, Orientation, DEFAULT_CAP};
use crate::ade::Family;
use crate::error::{Error, Result};
use crate::rational::{qi, Q};

/// Largest rank swept by [`enumerate`].
pub const MAX_RANK: usize = 10;
/// Largest order of tangency swept by [`enumerate`].
pub const MAX_K: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigRecord {
    pub sing: String,
    pub orientation: Orientation,
    pub f: String,
    pub k: u32,
    pub transversal: bool,
    pub mult: u32,
    pub separation: u32,
    pub post_blowup_singular: bool,
    /// `(B'·D̃)` at the last followed point.
    pub residual: u32,
    /// Label among the odd-case figures.
    pub figure: Option<String>,
    /// Label in the even-intersection figure, for even `mult`.
    pub even_figure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ConfigOutcome {
    Record(ConfigRecord),
    /// `D` is a component of `B` near the point.
    Contained { sing: String, f: String },
    Impossible { sing: String, mult: u32, reason: String },
}

/// A line `a·x + b·y = 0` through the origin.
#[derive(Debug, Clone)]
struct Line(Q, Q);

impl Line {
    fn same(&self, o: &Line) -> bool {
        &self.0 * &o.1 == &o.0 * &self.1
    }
}

fn x_axis_zero() -> Line {
    Line(Q::one(), Q::zero())
}

fn y_axis_zero() -> Line {
    Line(Q::zero(), Q::one())
}

fn tangent_line(d: &GraphCurve) -> Line {
    let c1 = d.coefficient(1);
    match d.orientation {
        Orientation::XOfY => Line(Q::one(), -c1),
        Orientation::YOfX => Line(c1, -Q::one()),
    }
}

/// Rational lines of the tangent cone, tagged by the branch they belong to.
fn cone_lines(family: Family, n: usize) -> Vec<(Branch, Line)> {
    match (family, n) {
        (Family::A, 1) => vec![
            (Branch::Line, Line(Q::one(), -Q::one())),
            (Branch::Line, Line(Q::one(), Q::one())),
        ],
        (Family::A, _) | (Family::E, _) => vec![(Branch::Cone, x_axis_zero())],
        // y(x² + y²): the other two lines are not rational
        (Family::D, 4) => vec![(Branch::Smooth, y_axis_zero())],
        (Family::D, _) => vec![(Branch::Smooth, y_axis_zero()), (Branch::Cone, x_axis_zero())],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Branch {
    /// One of the two lines of an `A_1`.
    Line,
    /// The smooth branch `y = 0` of a `D_n`.
    Smooth,
    /// The multiple line `x = 0`.
    Cone,
}

/// Which branch's tangent `D` follows, if any.
fn tangency(family: Family, n: usize, d: &GraphCurve) -> Option<Branch> {
    let t = tangent_line(d);
    cone_lines(family, n).into_iter().find(|(_, l)| l.same(&t)).map(|(b, _)| b)
}

pub fn sing_name(family: Family, n: usize) -> String {
    format!("{}{}", family.letter(), n)
}

/// The figure a configuration belongs to, from its defining conditions.
fn figure(family: Family, n: usize, d: &GraphCurve) -> Option<String> {
    let k = d.minimal_degree()?;
    let tan = tangency(family, n, d);
    let even_n = n.is_multiple_of(2);
    let lead_unit = d.coefficient(k as usize).abs().is_one();
    let next_nonzero = !d.coefficient(k as usize + 1).is_zero();
    let tag = |fig: &str, c: char| Some(format!("{fig}({c})"));
    let dp = "distinct_points";
    let s4 = "same_points_4";
    let s5 = "same_points_5";
    match (family, tan) {
        (Family::A, None) => tag(dp, if even_n { 'b' } else { 'a' }),
        (Family::A, Some(Branch::Line)) if next_nonzero => tag(dp, 'c'),
        (Family::A, Some(Branch::Line)) => None,
        (Family::A, Some(_)) => match (n, k) {
            (2, _) => tag(dp, 'd'),
            (3, 3..) => tag(s4, 'a'),
            (3, 2) if !lead_unit => tag(s4, 'b'),
            (3, 2) if next_nonzero => tag(s5, 'a'),
            (_, 2) if n > 3 && !even_n => tag(s4, 'c'),
            (_, 2) if n > 2 && even_n => tag(s4, 'd'),
            (4, 3..) => tag(s5, 'b'),
            _ => None,
        },
        (Family::D, None) => tag(dp, if even_n { 'e' } else { 'f' }),
        (Family::D, Some(Branch::Cone)) => match (n, k) {
            (5, 2..) => tag(s4, 'e'),
            (6, 2..) => tag(s5, 'e'),
            (_, 2) if n >= 7 && !even_n => tag(s5, 'c'),
            (_, 2) if n >= 8 => tag(s5, 'e'),
            _ => None,
        },
        (Family::D, Some(_)) => match k {
            2 => tag(s4, if even_n { 'g' } else { 'f' }),
            3 => tag(s5, if even_n { 'f' } else { 'd' }),
            _ => None,
        },
        (Family::E, None) => tag(dp, match n { 6 => 'g', 7 => 'h', _ => 'i' }),
        (Family::E, Some(_)) => match (n, k) {
            (6, _) => tag(s4, 'h'),
            (7, 2) => tag(s5, 'g'),
            (8, _) => tag(s5, 'h'),
            _ => None,
        },
    }
}

fn even_figure(family: Family, n: usize, tan: Option<Branch>) -> Option<String> {
    let what = match (family, tan) {
        (Family::A, None) => "A,transversal",
        (Family::A, Some(Branch::Line)) => "A1,branch",
        (Family::A, Some(_)) => "A,cone",
        (Family::D, Some(Branch::Smooth)) => "D,smooth_branch",
        (Family::D, Some(_)) => "D,singular_branch",
        (Family::E, Some(_)) if n == 6 => "E6,cone",
        (Family::E, Some(_)) if n == 7 => "E7,cone",
        _ => return None,
    };
    Some(format!("even({what})"))
}

/// Every label the odd-case figures use.
pub fn expected_odd_figures() -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for c in 'a'..='i' {
        out.insert(format!("distinct_points({c})"));
    }
    for c in 'a'..='h' {
        out.insert(format!("same_points_4({c})"));
        out.insert(format!("same_points_5({c})"));
    }
    out
}

/// Every label the even-case figure uses.
pub fn expected_even_figures() -> BTreeSet<String> {
    ["A,transversal", "A1,branch", "A,cone", "D,smooth_branch", "D,singular_branch", "E6,cone", "E7,cone"]
        .iter()
        .map(|w| format!("even({w})"))
        .collect()
}

pub fn classify_config(family: Family, n: usize, d: &GraphCurve) -> Result<ConfigOutcome> {
    let b = normal_form(family, n, DEFAULT_CAP)?;
    let sing = sing_name(family, n);
    let m = match mult(&b, d)? {
        Multiplicity::Infinite => return Ok(ConfigOutcome::Contained { sing, f: d.to_string() }),
        Multiplicity::Finite(m) => m,
    };
    let ladder = separation_ladder(&b, d)?;
    let l = ladder.len() as u32 - 1;
    let residual = match mult_adapted(ladder.last().expect("ladder starts with B"))? {
        Multiplicity::Finite(r) => r,
        Multiplicity::Infinite => return Err(Error::InfiniteIntersection),
    };
    Ok(ConfigOutcome::Record(ConfigRecord {
        sing,
        orientation: d.orientation,
        f: d.to_string(),
        k: d.minimal_degree().unwrap_or(0),
        transversal: tangency(family, n, d).is_none(),
        mult: m,
        separation: l,
        post_blowup_singular: l >= 2,
        residual,
        figure: figure(family, n, d),
        even_figure: if m % 2 == 0 { even_figure(family, n, tangency(family, n, d)) } else { None },
    }))
}

/// Condition on a single point of `D ∩ B` in the odd case: separation 1 at
/// multiplicity 2 or 3, separation at least 2 at multiplicity 4 or 5.
pub fn case_one(r: &ConfigRecord) -> bool {
    match r.mult {
        2 | 3 => r.separation == 1,
        4 | 5 => r.separation >= 2,
        _ => false,
    }
}

/// All ADE forms of rank at most `max_rank`.
pub fn forms(max_rank: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for f in [Family::A, Family::D, Family::E] {
        for n in 1..=max_rank {
            if f.valid_rank(n) {
                out.push((f, n));
            }
        }
    }
    out
}

/// Graph germs `c·t^k + d·t^{k+j}` with `c ∈ {1, -1, 2}`, `d ∈ {0, 1}`,
/// `j ∈ {1, 2, 3}`, in both orientations.
pub fn graph_grid(max_k: u32) -> Vec<GraphCurve> {
    let mut out = Vec::new();
    for o in [Orientation::XOfY, Orientation::YOfX] {
        for k in 1..=max_k {
            for c in [1, -1, 2] {
                let mut tails = vec![(0, 0)];
                tails.extend((1..=3).map(|j| (j, 1)));
                for (j, dv) in tails {
                    let mut v = vec![Q::zero(); (k + j) as usize + 1];
                    v[k as usize] = qi(c);
                    v[(k + j) as usize] += qi(dv);
                    out.push(GraphCurve::new(o, v).expect("vanishes at the origin"));
                }
            }
        }
    }
    out
}

/// Every finite configuration of the sweep.
pub fn enumerate(max_rank: usize, max_k: u32) -> Result<Vec<ConfigRecord>> {
    let grid = graph_grid(max_k);
    let mut out = Vec::new();
    for (f, n) in forms(max_rank) {
        for d in &grid {
            if let ConfigOutcome::Record(r) = classify_config(f, n, d)? {
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// Records grouped by figure label; unlabelled ones are dropped.
pub fn by_figure(records: &[ConfigRecord]) -> BTreeMap<String, Vec<ConfigRecord>> {
    let mut out: BTreeMap<String, Vec<ConfigRecord>> = BTreeMap::new();
    for r in records {
        if let Some(fig) = &r.figure {
            out.entry(fig.clone()).or_default().push(r.clone());
        }
    }
    out
}

/// A configuration on `family`/`n` with the requested multiplicity, or an
/// explicit impossibility. For a fixed form the multiplicity is
/// nondecreasing in the order of tangency, so searching `k ≤ mult` is
/// exhaustive.
pub fn realize(family: Family, n: usize, target: u32) -> Result<ConfigOutcome> {
    let sing = sing_name(family, n);
    for d in graph_grid(target.max(1)) {
        if let ConfigOutcome::Record(r) = classify_config(family, n, &d)? {
            if r.mult == target {
                return Ok(ConfigOutcome::Record(r));
            }
        }
    }
    Ok(ConfigOutcome::Impossible {
        sing,
        mult: target,
        reason: format!("no smooth germ meets {} with multiplicity {target}", sing_name(family, n)),
    })
}

/// Summary of the odd-case sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddSweep {
    pub realized: BTreeSet<String>,
    pub missing: Vec<String>,
    pub unexpected: Vec<String>,
    /// Records passing the Case I filter without a label.
    pub unlabelled: Vec<ConfigRecord>,
    /// Labelled records failing the filter.
    pub mislabelled: Vec<ConfigRecord>,
}

impl OddSweep {
    pub fn pass(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty() && self.unlabelled.is_empty() && self.mislabelled.is_empty()
    }
}

pub fn odd_sweep(records: &[ConfigRecord]) -> OddSweep {
    let odd_label = |r: &ConfigRecord| r.figure.clone();
    let realized: BTreeSet<String> = records.iter().filter_map(odd_label).collect();
    let expected = expected_odd_figures();
    OddSweep {
        missing: expected.difference(&realized).cloned().collect(),
        unexpected: realized.difference(&expected).cloned().collect(),
        unlabelled: records.iter().filter(|r| case_one(r) && odd_label(r).is_none()).cloned().collect(),
        mislabelled: records
            .iter()
            .filter(|r| odd_label(r).is_some_and(|f| !case_one(r) || !figure_mult_ok(&f, r.mult)))
            .cloned()
            .collect(),
        realized,
    }
}

fn figure_mult_ok(fig: &str, m: u32) -> bool {
    if fig.starts_with("distinct_points") {
        m == 2 || m == 3
    } else if fig.starts_with("same_points_4") {
        m == 4
    } else {
        m == 5
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(f: Family, n: usize, o: Orientation, c: &[i64]) -> ConfigRecord {
        match classify_config(f, n, &GraphCurve::from_ints(o, c).unwrap()).unwrap() {
            ConfigOutcome::Record(r) => r,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn a_even_tangent_order_two() {
        let r = rec(Family::A, 4, Orientation::XOfY, &[0, 0, 1]);
        assert_eq!((r.mult, r.post_blowup_singular), (4, true));
        assert_eq!(r.figure.as_deref(), Some("same_points_4(d)"));
    }

    #[test]
    fn e7_order_two_is_five() {
        let r = rec(Family::E, 7, Orientation::XOfY, &[0, 0, 1]);
        assert_eq!(r.mult, 5);
        assert_eq!(r.figure.as_deref(), Some("same_points_5(g)"));
    }

    #[test]
    fn d5_example_record() {
        let r = rec(Family::D, 5, Orientation::XOfY, &[0, 0, 1]);
        assert_eq!((r.mult, r.separation, r.post_blowup_singular), (4, 2, true));
        assert_eq!(r.figure.as_deref(), Some("same_points_4(e)"));
    }

    #[test]
    fn e7_mult_four_impossible() {
        assert!(matches!(realize(Family::E, 7, 4).unwrap(), ConfigOutcome::Impossible { .. }));
        assert!(matches!(realize(Family::E, 7, 5).unwrap(), ConfigOutcome::Record(_)));
    }

    #[test]
    fn component_is_reported() {
        let d = GraphCurve::from_ints(Orientation::XOfY, &[0, 1]).unwrap();
        assert!(matches!(classify_config(Family::A, 1, &d).unwrap(), ConfigOutcome::Contained { .. }));
    }

    #[test]
    fn residual_obeys_drop_law() {
        for r in enumerate(6, 3).unwrap() {
            assert_eq!(r.residual + 2 * r.separation, r.mult, "{r:?}");
        }
    }
}
