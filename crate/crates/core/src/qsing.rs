//! Hirzebruch–Jung continued fractions and the T/Wahl singularity calculus.
//!
//! A cyclic quotient singularity `1/p(1,q)` is resolved by a chain of smooth
//! rational curves with self-intersections `-b_1, …, -b_r`, where
//! `p/q = b_1 - 1/(b_2 - 1/(… - 1/b_r))`. Wahl singularities are the chains
//! obtained from `[4]` by repeatedly applying the two growth rules in
//! [`generate_children`]; they are exactly the cyclic quotients
//! `1/n²(1, na-1)`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, qi, Q};

/// Reduced fraction `num/den` with `num > den >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        let reject = |reason| Error::InvalidFraction {
            num: num.to_string(),
            den: den.to_string(),
            reason,
        };
        if !den.is_positive() {
            return Err(reject("denominator must be positive"));
        }
        if num <= den {
            return Err(reject("numerator must exceed denominator"));
        }
        if !num.gcd(&den).is_one() {
            return Err(reject("numerator and denominator are not coprime"));
        }
        Ok(Fraction { num, den })
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl std::str::FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected p/q, got `{s}`")))?;
        let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
        let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
        Fraction::new(n, d)
    }
}

/// Chain `[b_1, …, b_r]` of exceptional curves, `b_i = -C_i²`, stored left to
/// right as written.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TString(Vec<i64>);

impl TString {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyString);
        }
        if let Some((index, &value)) = entries.iter().enumerate().find(|(_, &b)| b < 2) {
            return Err(Error::EntryBelowTwo { index, value });
        }
        Ok(TString(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> TString {
        TString(self.0.iter().rev().copied().collect())
    }

    /// The lexicographically smaller of the string and its reverse; both
    /// orientations describe the same singularity.
    pub fn canonical(&self) -> TString {
        let rev = self.reversed();
        if rev < *self {
            rev
        } else {
            self.clone()
        }
    }

    /// `Σ (b_i - 2)`.
    pub fn excess(&self) -> i64 {
        self.0.iter().map(|b| b - 2).sum()
    }
}

impl fmt::Display for TString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SingularityClass {
    NotT,
    /// `1/(dn²)(1, dna-1)` with `d >= 2`.
    T { d: i64, n: i64, a: i64 },
    /// `1/n²(1, na-1)`, the `d = 1` case.
    Wahl { n: i64, a: i64 },
}

impl SingularityClass {
    /// `(d, n, a)` for any T-singularity, with `d = 1` for Wahl.
    pub fn t_parameters(&self) -> Option<(i64, i64, i64)> {
        match *self {
            SingularityClass::NotT => None,
            SingularityClass::T { d, n, a } => Some((d, n, a)),
            SingularityClass::Wahl { n, a } => Some((1, n, a)),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SingularityClass::NotT => "NotT",
            SingularityClass::T { .. } => "T",
            SingularityClass::Wahl { .. } => "Wahl",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiscrepancyVector(
    #[serde(
        serialize_with = "rational::serialize_q_vec",
        deserialize_with = "rational::deserialize_q_vec"
    )]
    pub Vec<Q>,
);

impl DiscrepancyVector {
    pub fn values(&self) -> &[Q] {
        &self.0
    }

    /// All values strictly inside `(-1, 0)`.
    pub fn is_log_terminal(&self) -> bool {
        self.0.iter().all(|a| *a > qi(-1) && *a < qi(0))
    }

    pub fn end_sum(&self) -> Q {
        self.0.first().cloned().unwrap_or_default() + self.0.last().cloned().unwrap_or_default()
    }
}

/// `K², p_g, q` of a surface together with the derived holomorphic Euler
/// characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalInvariants {
    pub k_squared: i64,
    pub p_g: i64,
    pub q: i64,
    pub chi: i64,
}

impl NumericalInvariants {
    pub fn new(k_squared: i64, p_g: i64, q: i64) -> Self {
        NumericalInvariants {
            k_squared,
            p_g,
            q,
            chi: 1 - q + p_g,
        }
    }

    /// `K² = 2p_g - 4`.
    pub fn on_noether_line(&self) -> bool {
        self.k_squared == 2 * self.p_g - 4
    }

    /// `K² = 2p_g - 3`.
    pub fn one_above_noether_line(&self) -> bool {
        self.k_squared == 2 * self.p_g - 3
    }
}

pub fn hj_expand(f: &Fraction) -> Result<TString> {
    let (mut p, mut q) = (f.num.clone(), f.den.clone());
    let mut out = Vec::new();
    while q.is_positive() {
        // b = ceil(p / q)
        let b = (&p + &q - BigInt::one()).div_floor(&q);
        let next = &b * &q - &p;
        out.push(b.to_i64().ok_or(Error::InvalidFraction {
            num: f.num.to_string(),
            den: f.den.to_string(),
            reason: "continued fraction entry exceeds 64 bits",
        })?);
        p = q;
        q = next;
    }
    TString::new(out)
}

pub fn hj_eval(t: &TString) -> Fraction {
    let mut iter = t.0.iter().rev();
    let mut p = BigInt::from(*iter.next().expect("TString is non-empty"));
    let mut q = BigInt::one();
    for &b in iter {
        let np = BigInt::from(b) * &p - &q;
        q = p;
        p = np;
    }
    Fraction { num: p, den: q }
}

pub fn wahl_string(n: i64, a: i64) -> Result<TString> {
    if n < 2 {
        return Err(Error::InvalidWahlParameters { n, a, reason: "n must be at least 2" });
    }
    if a < 1 || a >= n {
        return Err(Error::InvalidWahlParameters { n, a, reason: "a must satisfy 1 <= a < n" });
    }
    if n.gcd(&a) != 1 {
        return Err(Error::InvalidWahlParameters { n, a, reason: "gcd(n, a) != 1" });
    }
    let num = BigInt::from(n) * n;
    let den = BigInt::from(n) * a - 1;
    hj_expand(&Fraction::new(num, den)?)
}

/// One of the two rules growing a Wahl string by one curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GrowthRule {
    /// `[b_1..b_r] -> [2, b_1, …, b_r + 1]`
    PrependTwo,
    /// `[b_1..b_r] -> [b_1 + 1, b_2, …, b_r, 2]`
    AppendTwo,
}

impl GrowthRule {
    pub fn apply(self, t: &TString) -> TString {
        let mut v = t.0.clone();
        match self {
            GrowthRule::PrependTwo => {
                *v.last_mut().unwrap() += 1;
                v.insert(0, 2);
            }
            GrowthRule::AppendTwo => {
                v[0] += 1;
                v.push(2);
            }
        }
        TString(v)
    }
}

/// The sequence of growth rules producing `t` from `[4]`, if any.
///
/// Undoes one rule at a time. At most one rule can apply at each stage: a
/// string ending in 2 on both sides would have come from `[…]` with both
/// ends raised, which no rule produces for lengths above 2.
pub fn wahl_certificate(t: &TString) -> Option<Vec<GrowthRule>> {
    let mut cur = t.0.clone();
    let mut rules = Vec::new();
    loop {
        if cur == [4] {
            rules.reverse();
            return Some(rules);
        }
        if cur.len() < 2 {
            return None;
        }
        let (first, last) = (cur[0], *cur.last().unwrap());
        if first == 2 && last >= 3 {
            cur.remove(0);
            *cur.last_mut().unwrap() -= 1;
            rules.push(GrowthRule::PrependTwo);
        } else if last == 2 && first >= 3 {
            cur.pop();
            cur[0] -= 1;
            rules.push(GrowthRule::AppendTwo);
        } else {
            return None;
        }
    }
}

pub fn is_wahl(t: &TString) -> bool {
    wahl_certificate(t).is_some()
}

pub fn classify(t: &TString) -> SingularityClass {
    let canon = t.canonical();
    let frac = hj_eval(&canon);
    if is_wahl(&canon) {
        let p = frac.numerator();
        let n = p.sqrt();
        debug_assert_eq!(&n * &n, *p);
        let a = (frac.denominator() + BigInt::one()) / &n;
        return SingularityClass::Wahl {
            n: n.to_i64().expect("desk-scale n"),
            a: a.to_i64().expect("desk-scale a"),
        };
    }
    match t_parameters_by_trial(&frac) {
        Some((d, n, a)) if d >= 2 => SingularityClass::T { d, n, a },
        _ => SingularityClass::NotT,
    }
}

/// Solves `p = d n²`, `q = d n a - 1` with `n >= 2`, `1 <= a < n`,
/// `gcd(n, a) = 1` by trial over `n <= √p`. Returns the smallest `d`.
pub fn t_parameters_by_trial(f: &Fraction) -> Option<(i64, i64, i64)> {
    let p = f.numerator().to_i64()?;
    let q = f.denominator().to_i64()?;
    let mut best = None;
    let mut n = 2i64;
    while n * n <= p {
        if p % (n * n) == 0 {
            let d = p / (n * n);
            if (q + 1) % (d * n) == 0 {
                let a = (q + 1) / (d * n);
                if a >= 1 && a < n && n.gcd(&a) == 1 {
                    // larger n means smaller d
                    best = Some((d, n, a));
                }
            }
        }
        n += 1;
    }
    best
}

pub fn generate_children(t: &TString) -> Result<(TString, TString)> {
    if !is_wahl(t) {
        return Err(Error::NotWahl(t.0.clone()));
    }
    Ok((GrowthRule::PrependTwo.apply(t), GrowthRule::AppendTwo.apply(t)))
}

/// All Wahl strings of length at most `r_max`, ordered by length and then
/// lexicographically.
pub fn enumerate_wahl(r_max: usize) -> Vec<TString> {
    let mut out = Vec::new();
    if r_max == 0 {
        return out;
    }
    let mut level: BTreeSet<TString> = BTreeSet::from([TString(vec![4])]);
    for r in 1..=r_max {
        out.extend(level.iter().cloned());
        if r == r_max {
            break;
        }
        level = level
            .iter()
            .flat_map(|t| [GrowthRule::PrependTwo.apply(t), GrowthRule::AppendTwo.apply(t)])
            .collect();
    }
    out
}

/// Intersection matrix of the chain: `C_i² = -b_i`, neighbours meet once.
pub fn chain_gram(t: &TString) -> Vec<Vec<i64>> {
    let r = t.len();
    let mut g = vec![vec![0; r]; r];
    for i in 0..r {
        g[i][i] = -t.0[i];
        if i + 1 < r {
            g[i][i + 1] = 1;
            g[i + 1][i] = 1;
        }
    }
    g
}

/// Coefficients `a_i` in `K_X = φ*K_W + Σ a_i C_i`, from adjunction
/// `K_X · C_i = b_i - 2`.
pub fn discrepancies(t: &TString) -> Result<DiscrepancyVector> {
    let gram = linalg::from_int(&chain_gram(t));
    let rhs: Vec<Q> = t.0.iter().map(|b| qi(b - 2)).collect();
    linalg::solve(&gram, &rhs)
        .map(DiscrepancyVector)
        .ok_or_else(|| Error::SingularGram(t.0.clone()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthRule {
    /// `K_W² = K_S² + 1`, one above the Noether line, general type: only `[4]`.
    OneAboveNoether,
    /// `K_W² = K_S² + 1`: `1/4(1,1)` or `1/9(1,2)`.
    OneStep,
    /// `r <= 400 (K_S²)^4`.
    Lee,
}

/// Admissible lengths `1..=max_length` of the Wahl string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthBound {
    pub max_length: u64,
    pub rule: LengthRule,
}

impl LengthBound {
    pub fn lengths(&self) -> std::ops::RangeInclusive<u64> {
        1..=self.max_length
    }

    pub fn contains(&self, r: u64) -> bool {
        self.lengths().contains(&r)
    }
}

pub fn length_bound(kw2: i64, ks2: i64, on_line: bool, general_type: bool) -> Result<LengthBound> {
    if kw2 <= ks2 {
        return Err(Error::KawamataInequality { kw2, ks2 });
    }
    if kw2 == ks2 + 1 {
        return Ok(if on_line && general_type {
            LengthBound { max_length: 1, rule: LengthRule::OneAboveNoether }
        } else {
            LengthBound { max_length: 2, rule: LengthRule::OneStep }
        });
    }
    if ks2 < 1 {
        return Err(Error::NonPositiveKs2(ks2));
    }
    let k = ks2 as u64;
    Ok(LengthBound {
        max_length: 400 * k.pow(4),
        rule: LengthRule::Lee,
    })
}

/// JSON view of a string: entries, class, discrepancies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TStringReport {
    pub entries: Vec<i64>,
    pub class: SingularityClass,
    pub discrepancies: DiscrepancyVector,
}

impl TStringReport {
    pub fn new(t: &TString) -> Result<Self> {
        Ok(TStringReport {
            entries: t.0.clone(),
            class: classify(t),
            discrepancies: discrepancies(t)?,
        })
    }
}
