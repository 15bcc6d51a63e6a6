//! Curve germs at a point as truncated bivariate polynomials over `Q`.
//!
//! A [`LocalCurve`] knows how far its coefficients can be trusted: an exact
//! curve is an honest polynomial, a truncated one is exact only in total
//! degree `≤ valid_through`. Operations that lose precision lower that
//! bound, and any answer that would depend on unknown coefficients is
//! reported as [`Error::Inconclusive`].

pub mod config;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ade::Family;
use crate::error::{Error, Result};
use crate::rational::{format_q, qi, Q};

pub const DEFAULT_CAP: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCurve {
    terms: BTreeMap<(u32, u32), Q>,
    cap: u32,
    /// `None` for an exact polynomial.
    valid_through: Option<u32>,
}

/// Order of vanishing, or an identically zero result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl Multiplicity {
    pub fn finite(self) -> Option<u32> {
        match self {
            Multiplicity::Finite(m) => Some(m),
            Multiplicity::Infinite => None,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(m) => write!(f, "{m}"),
            Multiplicity::Infinite => write!(f, "infinite"),
        }
    }
}

impl LocalCurve {
    pub fn zero(cap: u32) -> Self {
        LocalCurve { terms: BTreeMap::new(), cap, valid_through: None }
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Q)>>(terms: I, cap: u32) -> Self {
        let mut c = LocalCurve::zero(cap);
        for (m, v) in terms {
            c.add_term(m, v);
        }
        c.enforce_cap();
        c
    }

    pub fn from_int_terms(terms: &[((u32, u32), i64)], cap: u32) -> Self {
        Self::from_terms(terms.iter().map(|&(m, v)| (m, qi(v))), cap)
    }

    fn add_term(&mut self, m: (u32, u32), v: Q) {
        if v.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Q::zero);
        *e += v;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn enforce_cap(&mut self) {
        let cap = self.cap;
        let before = self.terms.len();
        self.terms.retain(|&(i, j), _| i + j <= cap);
        if self.terms.len() != before {
            self.lower_validity(cap);
        }
    }

    fn lower_validity(&mut self, v: u32) {
        self.valid_through = Some(self.valid_through.map_or(v, |w| w.min(v)));
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Q)> {
        self.terms.iter().map(|(&m, v)| (m, v))
    }

    pub fn coefficient(&self, i: u32, j: u32) -> Q {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn degree_cap(&self) -> u32 {
        self.cap
    }

    pub fn is_exact(&self) -> bool {
        self.valid_through.is_none()
    }

    pub fn valid_through(&self) -> Option<u32> {
        self.valid_through
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// Lowest total degree of a nonzero term; `Infinite` for the exact zero
    /// polynomial.
    pub fn order(&self) -> Result<Multiplicity> {
        let low = self.terms.keys().map(|(i, j)| i + j).min();
        match (low, self.valid_through) {
            (Some(d), None) => Ok(Multiplicity::Finite(d)),
            (Some(d), Some(v)) if d <= v => Ok(Multiplicity::Finite(d)),
            (None, None) => Ok(Multiplicity::Infinite),
            _ => Err(Error::Inconclusive { cap: self.cap, what: "order at the origin" }),
        }
    }

    pub fn add(&self, other: &LocalCurve) -> LocalCurve {
        let mut out = self.clone();
        for (m, v) in other.terms() {
            out.add_term(m, v.clone());
        }
        if let Some(v) = other.valid_through {
            out.lower_validity(v);
        }
        out.cap = self.cap.min(other.cap);
        out.enforce_cap();
        out
    }

    pub fn scale(&self, c: &Q) -> LocalCurve {
        let mut out = LocalCurve { terms: BTreeMap::new(), cap: self.cap, valid_through: self.valid_through };
        for (m, v) in self.terms() {
            out.add_term(m, v * c);
        }
        out
    }

    pub fn mul(&self, other: &LocalCurve) -> LocalCurve {
        let cap = self.cap.min(other.cap);
        let mut out = LocalCurve::zero(cap);
        for ((i, j), a) in self.terms() {
            for ((k, l), b) in other.terms() {
                out.add_term((i + k, j + l), a * b);
            }
        }
        // an unknown term of degree > v times a factor of order o lands above v + o
        let ord = |c: &LocalCurve| c.terms.keys().map(|(i, j)| i + j).min().unwrap_or(0);
        if let Some(v) = self.valid_through {
            out.lower_validity(v + ord(other));
        }
        if let Some(v) = other.valid_through {
            out.lower_validity(v + ord(self));
        }
        out.enforce_cap();
        out
    }

    pub fn pow(&self, e: u32) -> LocalCurve {
        let mut out = LocalCurve::from_int_terms(&[((0, 0), 1)], self.cap);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap(&self) -> LocalCurve {
        LocalCurve {
            terms: self.terms.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
            cap: self.cap,
            valid_through: self.valid_through,
        }
    }

    /// `B(x + f(y), y)` for `f` with `f(0) = 0`.
    pub fn shift_x(&self, f: &[Q]) -> LocalCurve {
        let xf = LocalCurve::from_terms(
            std::iter::once(((1, 0), Q::one())).chain(f.iter().enumerate().map(|(k, c)| ((0, k as u32), c.clone()))),
            self.cap,
        );
        let mut out = LocalCurve::zero(self.cap);
        let mut powers = vec![LocalCurve::from_int_terms(&[((0, 0), 1)], self.cap)];
        for ((i, j), c) in self.terms() {
            while powers.len() <= i as usize {
                let next = powers.last().unwrap().mul(&xf);
                powers.push(next);
            }
            let yj = LocalCurve::from_terms([((0, j), c.clone())], self.cap);
            out = out.add(&powers[i as usize].mul(&yj));
        }
        // the substitution does not lower the degree of any term
        if let Some(v) = self.valid_through {
            out.lower_validity(v);
        }
        out
    }

    /// `B(f(y), y)` as coefficients of `y^0, y^1, …` and the highest trusted
    /// degree.
    pub fn restrict_x_graph(&self, f: &[Q]) -> (Vec<Q>, Option<u32>) {
        let fl: Vec<Q> = f.to_vec();
        let mut out: Vec<Q> = Vec::new();
        let mut fpow: Vec<Vec<Q>> = vec![vec![Q::one()]];
        for ((i, j), c) in self.terms() {
            while fpow.len() <= i as usize {
                let next = poly_mul(fpow.last().unwrap(), &fl);
                fpow.push(next);
            }
            for (k, a) in fpow[i as usize].iter().enumerate() {
                let d = k + j as usize;
                if out.len() <= d {
                    out.resize(d + 1, Q::zero());
                }
                out[d] += a * c;
            }
        }
        (out, self.valid_through)
    }

    /// Blows up the origin in one chart and divides by the `e`-th power of
    /// the exceptional coordinate: `e = 2` gives `σ*B - 2E`, `e = 1` the
    /// convention for a branch curve containing the followed curve.
    pub fn blowup(&self, chart: Chart, e: u32) -> Result<LocalCurve> {
        match self.order()? {
            Multiplicity::Finite(o) if o < e => return Err(Error::OrderTooLow { order: o, needed: e }),
            _ => {}
        }
        let mut out = LocalCurve { terms: BTreeMap::new(), cap: self.cap, valid_through: None };
        for ((i, j), c) in self.terms() {
            let m = match chart {
                Chart::X => (i + j - e, j),
                Chart::Y => (i, i + j - e),
            };
            out.add_term(m, c.clone());
        }
        if let Some(v) = self.valid_through {
            out.lower_validity(v.saturating_sub(e));
        }
        out.enforce_cap();
        Ok(out)
    }

    /// Is the curve singular at the origin (order at least 2)?
    pub fn singular_at_origin(&self) -> Result<bool> {
        Ok(match self.order()? {
            Multiplicity::Finite(o) => o >= 2,
            Multiplicity::Infinite => true,
        })
    }
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl fmt::Display for LocalCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|((i, j), _)| (i + j, std::cmp::Reverse(*i)));
        for (n, ((i, j), c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if n > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            let mono = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let p = |v: &str, e: u32| match e {
                        0 => String::new(),
                        1 => v.to_string(),
                        _ => format!("{v}^{e}"),
                    };
                    format!("{}{}", p("x", *i), p("y", *j))
                }
            };
            if mono.is_empty() || !a.is_one() {
                write!(f, "{}", format_q(&a))?;
            }
            write!(f, "{mono}")?;
        }
        if let Some(v) = self.valid_through {
            write!(f, " + O(deg {})", v + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chart {
    /// `(x, y) ↦ (x, xy)`
    X,
    /// `(x, y) ↦ (xy, y)`
    Y,
}

/// ADE normal forms:
/// `A_n: x² - y^{n+1}`, `D_n: y(x² + y^{n-2})`, `E_6: x³ - y⁴`,
/// `E_7: x(x² - y³)`, `E_8: x³ + y⁵`.
pub fn normal_form(family: Family, n: usize, cap: u32) -> Result<LocalCurve> {
    if !family.valid_rank(n) {
        return Err(Error::InvalidRootSystem { family: family.letter(), rank: n });
    }
    let n32 = n as u32;
    let terms: Vec<((u32, u32), i64)> = match (family, n) {
        (Family::A, _) => vec![((2, 0), 1), ((0, n32 + 1), -1)],
        (Family::D, _) => vec![((2, 1), 1), ((0, n32 - 1), 1)],
        (Family::E, 6) => vec![((3, 0), 1), ((0, 4), -1)],
        (Family::E, 7) => vec![((3, 0), 1), ((1, 3), -1)],
        _ => vec![((3, 0), 1), ((0, 5), 1)],
    };
    let c = LocalCurve::from_int_terms(&terms, cap);
    if !c.is_exact() {
        return Err(Error::Inconclusive { cap, what: "normal form" });
    }
    Ok(c)
}

/// The `D_n` variant `x² - y^{n-2}` times `y`, equivalent by `x ↦ ix`.
pub fn d_alias(n: usize, cap: u32) -> Result<LocalCurve> {
    if n < 4 {
        return Err(Error::InvalidRootSystem { family: 'D', rank: n });
    }
    Ok(LocalCurve::from_int_terms(&[((2, 1), 1), ((0, n as u32 - 1), -1)], cap))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    /// `D = {x = f(y)}`
    #[serde(rename = "x-f(y)")]
    XOfY,
    /// `D = {y = g(x)}`
    #[serde(rename = "y-g(x)")]
    YOfX,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::XOfY => "x-f(y)",
            Orientation::YOfX => "y-g(x)",
        })
    }
}

/// A smooth curve through the origin given as a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCurve {
    pub orientation: Orientation,
    /// Coefficients of `t^0, t^1, …` of `f` (or `g`).
    pub coeffs: Vec<Q>,
}

impl GraphCurve {
    pub fn new(orientation: Orientation, coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::GraphNotThroughOrigin);
        }
        Ok(GraphCurve { orientation, coeffs })
    }

    pub fn from_ints(orientation: Orientation, coeffs: &[i64]) -> Result<Self> {
        Self::new(orientation, coeffs.iter().map(|&c| qi(c)).collect())
    }

    /// `c·t^k + d·t^{k+1}`.
    pub fn monomial_pair(orientation: Orientation, k: u32, c: i64, d: i64) -> Result<Self> {
        let mut v = vec![0; k as usize + 2];
        v[k as usize] = c;
        v[k as usize + 1] = d;
        Self::from_ints(orientation, &v)
    }

    /// Minimal degree of the defining series; `None` for `f = 0`.
    pub fn minimal_degree(&self) -> Option<u32> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|k| k as u32)
    }

    pub fn coefficient(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// As a curve `x - f(y)` or `y - g(x)`.
    pub fn to_curve(&self, cap: u32) -> LocalCurve {
        let lin = match self.orientation {
            Orientation::XOfY => (1, 0),
            Orientation::YOfX => (0, 1),
        };
        let series = self.coeffs.iter().enumerate().map(|(k, c)| {
            let m = match self.orientation {
                Orientation::XOfY => (0, k as u32),
                Orientation::YOfX => (k as u32, 0),
            };
            (m, -c.clone())
        });
        LocalCurve::from_terms(std::iter::once((lin, Q::one())).chain(series), cap)
    }

    /// Rewrites `b` in coordinates where this curve is `{x = 0}`.
    pub fn adapt(&self, b: &LocalCurve) -> LocalCurve {
        match self.orientation {
            Orientation::XOfY => b.shift_x(&self.coeffs),
            Orientation::YOfX => b.swap().shift_x(&self.coeffs),
        }
    }
}

impl fmt::Display for GraphCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lhs, t) = match self.orientation {
            Orientation::XOfY => ("x", "y"),
            Orientation::YOfX => ("y", "x"),
        };
        let series = LocalCurve::from_terms(
            self.coeffs.iter().enumerate().map(|(k, c)| ((0, k as u32), c.clone())),
            u32::MAX,
        );
        let s = series.to_string().replace('y', t);
        write!(f, "{lhs} = {s}")
    }
}

/// `(B·D)_p`: the order of `B` restricted to `D`.
pub fn mult(b: &LocalCurve, d: &GraphCurve) -> Result<Multiplicity> {
    let base = match d.orientation {
        Orientation::XOfY => b.clone(),
        Orientation::YOfX => b.swap(),
    };
    let (coeffs, valid) = base.restrict_x_graph(&d.coeffs);
    let low = coeffs.iter().position(|c| !c.is_zero()).map(|k| k as u32);
    match (low, valid) {
        (Some(k), None) => Ok(Multiplicity::Finite(k)),
        (Some(k), Some(v)) if k <= v => Ok(Multiplicity::Finite(k)),
        (None, None) => Ok(Multiplicity::Infinite),
        _ => Err(Error::Inconclusive { cap: b.degree_cap(), what: "local intersection multiplicity" }),
    }
}

/// `(B·{x=0})` at the origin for a curve already in adapted coordinates.
pub fn mult_adapted(b: &LocalCurve) -> Result<Multiplicity> {
    let axis = GraphCurve { orientation: Orientation::XOfY, coeffs: vec![] };
    mult(b, &axis)
}

/// The sequence `B = B_0', B_1', …, B_l'` obtained by blowing up the point
/// of the followed curve while the branch curve is singular there, in
/// coordinates where the followed curve is `{x = 0}`.
pub fn separation_ladder(b: &LocalCurve, d: &GraphCurve) -> Result<Vec<LocalCurve>> {
    if mult(b, d)? == Multiplicity::Infinite {
        return Err(Error::InfiniteIntersection);
    }
    let mut cur = d.adapt(b);
    let mut out = vec![cur.clone()];
    while cur.singular_at_origin()? {
        cur = cur.blowup(Chart::Y, 2)?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// Number of blowups, following `D`, until the branch curve is smooth at or
/// misses the followed point.
pub fn separation(b: &LocalCurve, d: &GraphCurve) -> Result<u32> {
    Ok(separation_ladder(b, d)?.len() as u32 - 1)
}

/// `B_1'` in adapted coordinates, with the followed point at the origin.
pub fn first_blowup(b: &LocalCurve, d: &GraphCurve) -> Result<LocalCurve> {
    d.adapt(b).blowup(Chart::Y, 2)
}
