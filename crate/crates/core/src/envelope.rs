//! Maximization of `μ_v(Γ) = (Γ,v)/‖Γ‖` over the ordered-weight cone
//! `Γ_1 ≤ ... ≤ Γ_{t+1}` through the least concave majorant of the graph
//! `(b_i, w_i)`.
//!
//! The inner product is diagonal, `(x,y) = Σ b^i x_i y_i`, and all values
//! are exact rationals. A Kempf-type value `N/√D` is never evaluated in
//! floating point; see [`KempfValue`] for the exact ordering.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::ops::Range;

use num_traits::{ToPrimitive, Zero};

use crate::error::{malformed, Result};
use crate::linalg::{int, signum, Rational};
use crate::quiver::{
    sigma_of, theta_of, DimVector, Filtration, Representation, StabilityWeights, WeightedFiltration,
};

/// The block sizes `b^i` and the vector `v` of a filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVectorData {
    b: Vec<i64>,
    v: Vec<Rational>,
}

impl WeightVectorData {
    /// Requires every `b^i ≥ 1` and `Σ b^i v_i = 0`.
    pub fn new(b: Vec<i64>, v: Vec<Rational>) -> Result<WeightVectorData> {
        if b.len() != v.len() || b.is_empty() {
            return Err(malformed(format!("need equally many b and v entries, got {} and {}", b.len(), v.len())));
        }
        if let Some(i) = b.iter().position(|&x| x < 1) {
            return Err(malformed(format!("b[{i}] = {} must be at least 1", b[i])));
        }
        let total: Rational = b.iter().zip(&v).map(|(&bi, vi)| int(bi) * vi).sum();
        if !total.is_zero() {
            return Err(malformed(format!("Σ b^i v_i = {total}, expected 0")));
        }
        Ok(WeightVectorData { b, v })
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn v(&self) -> &[Rational] {
        &self.v
    }

    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    /// Cumulative points `(b_i, w_i)` for `i = 0..=t+1`, with `w^i = -b^i v_i`.
    pub fn points(&self) -> Vec<(i64, Rational)> {
        let mut out = Vec::with_capacity(self.b.len() + 1);
        let (mut x, mut y) = (0i64, Rational::zero());
        out.push((x, y.clone()));
        for (&bi, vi) in self.b.iter().zip(&self.v) {
            x += bi;
            y -= int(bi) * vi;
            out.push((x, y.clone()));
        }
        out
    }

    /// `(x, y) = Σ b^i x_i y_i`.
    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.b.iter().zip(x).zip(y).map(|((&bi, xi), yi)| int(bi) * xi * yi).sum()
    }
}

/// `v_i = Θ(M) - σ(M)Θ(M^i)/σ(M^i)` and `b^i = σ(M^i)` from dimension data.
pub fn vector_of_dims(total: &DimVector, quotients: &[DimVector], w: &StabilityWeights) -> Result<WeightVectorData> {
    let theta_m = int(theta_of(total, w)?);
    let sigma_m = int(sigma_of(total, w)?);
    let mut b = Vec::with_capacity(quotients.len());
    let mut v = Vec::with_capacity(quotients.len());
    for (i, q) in quotients.iter().enumerate() {
        if q.is_zero() {
            return Err(malformed(format!("quotient {} of the filtration is zero", i + 1)));
        }
        let s = sigma_of(q, w)?;
        b.push(s);
        v.push(&theta_m - &sigma_m * Rational::new(theta_of(q, w)?.into(), s.into()));
    }
    WeightVectorData::new(b, v)
}

pub fn vector_of_filtration(
    rep: &Representation,
    f: &Filtration,
    w: &StabilityWeights,
) -> Result<WeightVectorData> {
    vector_of_dims(rep.dims(), &f.quotient_dims(), w)
}

/// The least concave majorant of the graph, read at each `b_i`, and the
/// weights it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeResult {
    /// `w̃_1, ..., w̃_{t+1}` (the majorant passes through `(0,0)`).
    pub heights: Vec<Rational>,
    /// `Γ_i = -(w̃_i - w̃_{i-1})/b^i`, non-decreasing.
    pub gamma: Vec<Rational>,
    /// Maximal runs of consecutive indices sharing one value of Γ.
    pub blocks: Vec<Range<usize>>,
}

impl EnvelopeResult {
    pub fn is_zero_direction(&self) -> bool {
        self.gamma.iter().all(Zero::is_zero)
    }
}

fn cross(o: &(i64, Rational), a: &(i64, Rational), p: &(i64, Rational)) -> Rational {
    int(a.0 - o.0) * (&p.1 - &o.1) - (&a.1 - &o.1) * int(p.0 - o.0)
}

/// Upper hull of `{(0,0)} ∪ {(b_i, w_i)}` by monotone chain. Collinear
/// points stay on the hull.
pub fn concave_majorant(data: &WeightVectorData) -> EnvelopeResult {
    let points = data.points();
    let mut hull: Vec<usize> = Vec::with_capacity(points.len());
    for (k, p) in points.iter().enumerate() {
        while hull.len() >= 2 {
            let o = &points[hull[hull.len() - 2]];
            let a = &points[hull[hull.len() - 1]];
            if cross(o, a, p) > Rational::zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(k);
    }

    let mut heights = Vec::with_capacity(data.len());
    for edge in hull.windows(2) {
        let (l, r) = (&points[edge[0]], &points[edge[1]]);
        let rise = &r.1 - &l.1;
        let run = int(r.0 - l.0);
        for p in &points[edge[0] + 1..=edge[1]] {
            heights.push(&l.1 + &rise * int(p.0 - l.0) / &run);
        }
    }

    let mut gamma = Vec::with_capacity(data.len());
    let mut prev = Rational::zero();
    for (h, &bi) in heights.iter().zip(&data.b) {
        gamma.push(-(h - &prev) / int(bi));
        prev = h.clone();
    }

    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..=gamma.len() {
        if i == gamma.len() || gamma[i] != gamma[start] {
            blocks.push(start..i);
            start = i;
        }
    }
    EnvelopeResult { heights, gamma, blocks }
}

/// The maximizer `Γ_v` of `μ_v` on the closed cone. The zero vector means
/// `μ_v ≤ 0` everywhere on the cone.
pub fn gamma_opt(data: &WeightVectorData) -> Vec<Rational> {
    concave_majorant(data).gamma
}

/// A value `N/√D` with `D > 0`, compared exactly.
#[derive(Clone, Debug)]
pub struct KempfValue {
    numerator: Rational,
    norm_sq: Rational,
}

impl KempfValue {
    pub fn new(numerator: Rational, norm_sq: Rational) -> Result<KempfValue> {
        if norm_sq <= Rational::zero() {
            return Err(malformed(format!("norm square {norm_sq} must be positive")));
        }
        Ok(KempfValue { numerator, norm_sq })
    }

    pub fn numerator(&self) -> &Rational {
        &self.numerator
    }

    pub fn norm_sq(&self) -> &Rational {
        &self.norm_sq
    }

    pub fn signum(&self) -> i32 {
        signum(&self.numerator)
    }

    /// Decimal rendering only; never used for comparison.
    pub fn to_f64(&self) -> f64 {
        let n = self.numerator.to_f64().unwrap_or(f64::NAN);
        let d = self.norm_sq.to_f64().unwrap_or(f64::NAN);
        n / d.sqrt()
    }
}

fn compare_values(n1: &Rational, d1: &Rational, n2: &Rational, d2: &Rational) -> Ordering {
    let (s1, s2) = (signum(n1), signum(n2));
    if s1 != s2 {
        return s1.cmp(&s2);
    }
    if s1 == 0 {
        return Ordering::Equal;
    }
    let lhs = n1 * n1 * d2;
    let rhs = n2 * n2 * d1;
    if s1 > 0 {
        lhs.cmp(&rhs)
    } else {
        rhs.cmp(&lhs)
    }
}

impl Ord for KempfValue {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_values(&self.numerator, &self.norm_sq, &other.numerator, &other.norm_sq)
    }
}

impl PartialOrd for KempfValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for KempfValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for KempfValue {}

/// Value of `μ_v` or `K` at a direction; `ZeroDirection` marks `Γ = 0` and
/// orders like the value 0.
#[derive(Clone, Debug)]
pub enum DirectionalValue {
    ZeroDirection,
    Value(KempfValue),
}

impl DirectionalValue {
    /// Builds from the pair `((Γ,v), ‖Γ‖²)`.
    pub fn from_parts(numerator: Rational, norm_sq: Rational) -> DirectionalValue {
        if norm_sq.is_zero() {
            DirectionalValue::ZeroDirection
        } else {
            DirectionalValue::Value(KempfValue { numerator, norm_sq })
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            DirectionalValue::ZeroDirection => 0,
            DirectionalValue::Value(k) => k.signum(),
        }
    }

    pub fn value(&self) -> Option<&KempfValue> {
        match self {
            DirectionalValue::ZeroDirection => None,
            DirectionalValue::Value(k) => Some(k),
        }
    }
}

impl Ord for DirectionalValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (DirectionalValue::Value(a), DirectionalValue::Value(b)) => a.cmp(b),
            _ => self.signum().cmp(&other.signum()),
        }
    }
}

impl PartialOrd for DirectionalValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for DirectionalValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for DirectionalValue {}

/// `((Γ,v), ‖Γ‖²)` as a directional value.
pub fn mu_v_eval(gamma: &[Rational], data: &WeightVectorData) -> Result<DirectionalValue> {
    if gamma.len() != data.len() {
        return Err(malformed(format!("Γ has {} entries, v has {}", gamma.len(), data.len())));
    }
    Ok(DirectionalValue::from_parts(data.inner(gamma, &data.v), data.inner(gamma, gamma)))
}

/// Drops every step `M_i` with `Γ_i = Γ_{i+1}`, leaving strictly increasing
/// weights.
pub fn coarsen(f: &Filtration, gamma: &[Rational]) -> Result<WeightedFiltration> {
    if gamma.len() != f.len() {
        return Err(malformed(format!("{} weights for {} filtration steps", gamma.len(), f.len())));
    }
    if gamma.windows(2).any(|w| w[0] > w[1]) {
        return Err(malformed("weights must be non-decreasing to coarsen"));
    }
    let mut steps = Vec::new();
    let mut weights = Vec::new();
    for (i, step) in f.steps().iter().enumerate() {
        if i + 1 < gamma.len() && gamma[i] == gamma[i + 1] {
            continue;
        }
        steps.push(step.clone());
        weights.push(gamma[i].clone());
    }
    WeightedFiltration::new(Filtration::from_steps_unchecked(steps), weights)
}

fn fmt_decimal(q: &Rational) -> String {
    if q.is_integer() {
        return q.to_integer().to_string();
    }
    let s = format!("{:.4}", q.to_f64().unwrap_or(f64::NAN));
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// One row per point `i = 0..=t+1`: `i,b_i,w_i,w_tilde_i,gamma_i`.
/// `gamma_i` is empty at `i = 0`. All values are exact fractions.
pub fn envelope_csv(data: &WeightVectorData, env: &EnvelopeResult) -> String {
    let mut out = String::from("i,b_i,w_i,w_tilde_i,gamma_i\n");
    for (i, (x, y)) in data.points().iter().enumerate() {
        let (h, g) = if i == 0 {
            (Rational::zero().to_string(), String::new())
        } else {
            (env.heights[i - 1].to_string(), env.gamma[i - 1].to_string())
        };
        writeln!(out, "{i},{x},{y},{h},{g}").unwrap();
    }
    out
}

/// Default number of SVG user units per graph unit.
pub const SVG_UNITS_PER_CM: i64 = 40;

/// Static figure: the graph `(b_i, w_i)` as a thin polyline and its concave
/// majorant as a thick one, `scale` SVG units per graph unit.
pub fn envelope_svg(data: &WeightVectorData, env: &EnvelopeResult, scale: i64) -> String {
    let points = data.points();
    let hull: Vec<(i64, Rational)> = std::iter::once((0, Rational::zero()))
        .chain(points.iter().skip(1).map(|p| p.0).zip(env.heights.iter().cloned()))
        .collect();
    let ys = points.iter().chain(&hull).map(|p| p.1.clone());
    let y_max = ys.clone().fold(Rational::zero(), |a, b| a.max(b));
    let y_min = ys.fold(Rational::zero(), |a, b| a.min(b));
    let x_max = points.last().map_or(0, |p| p.0);
    let margin = int(scale);
    let s = int(scale);
    let px = |x: i64| &margin + int(x) * &s;
    let py = |y: &Rational| &margin + (&y_max - y) * &s;
    let width = int(x_max) * &s + int(2) * &margin;
    let height = (&y_max - &y_min) * &s + int(2) * &margin;

    let polyline = |pts: &[(i64, Rational)]| {
        pts.iter()
            .map(|(x, y)| format!("{},{}", fmt_decimal(&px(*x)), fmt_decimal(&py(y))))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = fmt_decimal(&width),
        h = fmt_decimal(&height)
    )
    .unwrap();
    let axis_y = fmt_decimal(&py(&Rational::zero()));
    writeln!(
        out,
        r#"  <line x1="{m}" y1="{axis_y}" x2="{x2}" y2="{axis_y}" stroke="gray" stroke-width="1"/>"#,
        m = fmt_decimal(&margin),
        x2 = fmt_decimal(&(&width - &margin)),
    )
    .unwrap();
    writeln!(
        out,
        r#"  <line x1="{m}" y1="{m}" x2="{m}" y2="{y2}" stroke="gray" stroke-width="1"/>"#,
        m = fmt_decimal(&margin),
        y2 = fmt_decimal(&(&height - &margin)),
    )
    .unwrap();
    writeln!(out, r#"  <polyline points="{}" fill="none" stroke="black" stroke-width="1"/>"#, polyline(&points)).unwrap();
    writeln!(out, r#"  <polyline points="{}" fill="none" stroke="black" stroke-width="3"/>"#, polyline(&hull)).unwrap();
    for (x, y) in points.iter().chain(hull.iter().skip(1)) {
        writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="3" fill="white" stroke="black"/>"#,
            fmt_decimal(&px(*x)),
            fmt_decimal(&py(y))
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
