//! Redheffer-type bounds for the generalized sine, their grid checkers, the
//! q-power counterexample finder, and the quantities used in the monotone
//! proof of the lower bound.
//!
//! The central inequality: for `p, q ≥ 2` and all real `x ≠ 0`,
//!
//! ```text
//! (π_{p,q}² − x²) / (π_{p,q}² + x²)  ≤  sin_{p,q}(x) / x,
//! ```
//!
//! with equality exactly at `x = ±π_{p,q}` (and in the limit `x → 0`).  At
//! `(p, q) = (2, 2)` this is the classical Redheffer inequality for
//! `sin x / x`.  Two companion bounds live here as well:
//!
//! * the *q-power variant* `(π_{p,q}^q − |x|^q)/(π_{p,q}^q + |x|^q)`, a
//!   natural-looking candidate that coincides with the proven bound at
//!   `q = 2`, really is a lower bound near `x = 0`, but **fails** near
//!   `π_{p,q}` for `q ≠ 2` — [`find_qpower_counterexample`] locates the
//!   failure;
//! * for `q = 2` the two-sided refinement
//!   `(π_{p,2}²−x²)/(π_{p,2}²+x²) < sin_{p,2}(x)/x < (6p−x²)/(6p+x²)`
//!   on `(0, π_{p,2})`, whose upper constant `6p` comes from the curvature
//!   limit `d = lim_{x→0} S″(x)/x = −2/p` via `6p = −12/d`.
//!
//! The proof machinery exposed by [`proof_quantities`] tracks the
//! monotone-function argument: `f(x) = x²(x+S)/(x−S)` decreases strictly on
//! `(0, π_{p,q})` from `−12/d` down to `π_{p,q}²`, which is precisely the
//! two-sided bound above; its derivative is tied to
//! `g(x) = x + S − x²(1+S′)/S` by `−(x−S)²/(2xS)·f′ = g`, and positivity of
//! `g` rests on the pointwise condition `S′² − S″S ≥ 1` (checked by
//! [`check_conditions`] as the `s4` component, away from the excluded set
//! `P = {π_{p,q}/2}`).
//!
//! Checkers sample a [`GridSpec`] and report margins `rhs − lhs` of the
//! claimed inequality; a point counts as a violation only when its margin
//! falls below `−1e−12`, separating genuine failures (the q-power variant
//! loses by margins of order 1e−2) from rounding noise at equality points.

use crate::error::{Error, Result};
use crate::params::Params;
use crate::series::series_coeffs;
use crate::special::Accuracy;
use crate::trig::{
    cos_pq, pi_pq, pow_abs, quarter_complement_w, reduce_argument, sin_pq, sin_pq_dd,
};

/// Margin below which a grid point is recorded as a violation.
pub const VIOLATION_TOL: f64 = 1e-12;

/// Default half-width of exclusion windows around removable or singular
/// points (`x = 0` for the ratio, `π_{p,q}/2` for second derivatives).
pub const DEFAULT_EXCLUSION_RADIUS: f64 = 1e-6;

/// Below this |x| the ratio `sin_{p,q}(x)/x` is taken from the three-term
/// expansion instead of the quotient (removable singularity).
const SERIES_RATIO_CUTOFF: f64 = 1e-6;

/// Within this distance of the quarter-period maximum, powers of the
/// generalized cosine are taken from the complement inversion
/// `w(h) = |cos|^p` instead of the sine (which is flat there and leaves
/// `1 − s^q` with no relative precision).
const TOP_COMPLEMENT_CUT: f64 = 0.05;

/// Identity-defect ceiling for the multiple-angle check.
pub const MULTIPLE_ANGLE_TOL: f64 = 1e-9;

/// Defect ceiling for the half-period constant relation `π_{2,q} = 2^{2/q−1}π_{q*,q}`.
pub const CONSTANT_RELATION_TOL: f64 = 1e-10;

/// Uniform sampling plan: `n` interior points of `(lo, hi)`, with optional
/// exclusion windows applied around checker-specific points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// Left end (not itself sampled).
    pub lo: f64,
    /// Right end (not itself sampled).
    pub hi: f64,
    /// Number of interior sample points.
    pub n: usize,
    /// Half-width of windows removed around excluded points.
    pub exclusion_radius: f64,
}

impl GridSpec {
    /// Builds a grid over `(lo, hi)` with `n ≥ 2` interior points and the
    /// default exclusion radius of `1e−6`.
    pub fn new(lo: f64, hi: f64, n: usize) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || !(lo < hi) {
            return Err(Error::Domain(format!("grid needs finite lo < hi (got {lo}, {hi})")));
        }
        if n < 2 {
            return Err(Error::Domain(format!("grid needs n >= 2 points (got {n})")));
        }
        Ok(GridSpec { lo, hi, n, exclusion_radius: DEFAULT_EXCLUSION_RADIUS })
    }

    /// Replaces the exclusion radius (must be nonnegative and finite).
    pub fn with_exclusion_radius(mut self, radius: f64) -> Result<Self> {
        if !radius.is_finite() || radius < 0.0 {
            return Err(Error::Domain(format!("exclusion radius must be >= 0 (got {radius})")));
        }
        self.exclusion_radius = radius;
        Ok(self)
    }

    /// The interior sample points `lo + i·(hi−lo)/(n+1)`, `i = 1..=n`.
    pub fn points(&self) -> Vec<f64> {
        let span = self.hi - self.lo;
        let denom = (self.n + 1) as f64;
        (1..=self.n).map(|i| self.lo + span * i as f64 / denom).collect()
    }

    /// Interior points with windows of `exclusion_radius` removed around
    /// each entry of `excluded`.
    pub fn points_excluding(&self, excluded: &[f64]) -> Vec<f64> {
        self.points()
            .into_iter()
            .filter(|x| excluded.iter().all(|e| (x - e).abs() > self.exclusion_radius))
            .collect()
    }
}

/// One grid point where a claimed inequality failed (or the located witness
/// of the q-power variant's failure).  `margin = rhs − lhs ≤ 0` here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Counterexample {
    /// Abscissa of the failure.
    pub x: f64,
    /// Left-hand side of the claimed `lhs ≤ rhs`.
    pub lhs: f64,
    /// Right-hand side of the claimed `lhs ≤ rhs`.
    pub rhs: f64,
    /// `rhs − lhs`.
    pub margin: f64,
}

/// Outcome of sampling one inequality over a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    /// Parameter pair the claim was evaluated for.
    pub params: Params,
    /// The sampling plan.
    pub grid: GridSpec,
    /// Smallest margin `rhs − lhs` seen over the sampled points.
    pub min_margin: f64,
    /// Abscissa attaining `min_margin`.
    pub argmin_x: f64,
    /// Points with margin ≤ −[`VIOLATION_TOL`].
    pub violations: Vec<Counterexample>,
    /// True when no violations were recorded.
    pub holds: bool,
}

/// Numerical evidence for the structural conditions behind the proof:
/// symmetry (s1), sub-linearity (s2), derivative continuity (s3) and the
/// differential inequality `S′² − S″S ≥ 1` (s4).
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionReport {
    /// Worst oddness / anti-periodicity defect over the grid.
    pub s1_max_defect: f64,
    /// Whether `0 < S(x) < x` held strictly at every grid point in `(0, π_{p,q})`.
    pub s2_holds: bool,
    /// Finite-difference account of the derivative's continuity across `π_{p,q}/2`.
    pub s3_note: String,
    /// Minimum of `S′² − S″S` over the grid minus exclusion windows.
    pub s4_min_value: f64,
    /// The excluded set `P` (here always `{π_{p,q}/2}`).
    pub excluded_points: Vec<f64>,
}

/// Outcome of the multiple-angle identity check
/// `sin_{2,q}(2^{2/q}x) = 2^{2/q}·sin_{q*,q}(x)·cos_{q*,q}^{q*−1}(x)`.
///
/// This is an identity, not an inequality: the margin of interest is the
/// largest absolute defect, so it gets its own report shape instead of
/// shoehorning `|LHS−RHS|` into [`InequalityReport`]'s sign conventions.
#[derive(Debug, Clone, PartialEq)]
pub struct MultipleAngleReport {
    /// Largest `|LHS − RHS|` over the grid.
    pub max_defect: f64,
    /// Abscissa attaining the largest defect.
    pub argmax_x: f64,
    /// Defect of the constant relation `|π_{2,q} − 2^{2/q−1}·π_{q*,q}|`.
    pub constant_defect: f64,
    /// `max_defect ≤ 1e−9` and `constant_defect ≤ 1e−10`.
    pub holds: bool,
}

/// The three proof-side quantities at one abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProofQuantities {
    /// `f(x) = x²(x + S)/(x − S)`; strictly decreasing on `(0, π_{p,q})`.
    pub f: f64,
    /// `g(x) = x + S − x²(1 + S′)/S`; positive on `(0, π_{p,q})`, → 0 at 0⁺.
    pub g: f64,
    /// `S′² − S″S`, or `None` within the exclusion window around
    /// `π_{p,q}/2` when `p > 2` (where `S″` is singular).
    pub s4: Option<f64>,
}

/// Result of the q-power counterexample search: the first scanned violation
/// and, when the margin changed sign inside the scanned window, the
/// bisection-refined crossing abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QpowerSearch {
    /// First scan point with margin ≤ −[`VIOLATION_TOL`].
    pub witness: Counterexample,
    /// Refined abscissa where the margin crosses zero, if the scan saw a
    /// sign change (absent when the variant already fails at the start of
    /// the window, as for `(2, 4)`).
    pub crossing: Option<f64>,
}

/// Which bound a descriptive exploration compares against the sine ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// Proven lower bound `(π² − x²)/(π² + x²)` (in terms of `π = π_{p,q}`).
    Lower,
    /// The q-power variant `(π^q − |x|^q)/(π^q + |x|^q)`.
    QPower,
    /// The `q = 2` upper bound `(6p − x²)/(6p + x²)`.
    UpperP2,
}

/// Lower bound `(a² − x²)/(a² + x²)` of the sine ratio, for any half
/// period `a > 0`.
pub fn lower_bound(x: f64, a: f64) -> f64 {
    let a2 = a * a;
    let x2 = x * x;
    (a2 - x2) / (a2 + x2)
}

/// The q-power variant `(π_{p,q}^q − |x|^q)/(π_{p,q}^q + |x|^q)`.
///
/// At `q = 2` this is exactly [`lower_bound`] with `a = π_{p,2}` and the
/// call delegates, so the coincidence is bitwise.
pub fn qpower_bound(x: f64, pr: Params) -> f64 {
    let a = pi_pq(pr);
    if pr.q() == 2.0 {
        return lower_bound(x, a);
    }
    let aq = a.powf(pr.q());
    let xq = pow_abs(x, pr.q());
    (aq - xq) / (aq + xq)
}

/// Upper bound `(6p − x²)/(6p + x²)` of `sin_{p,2}(x)/x` on `(0, π_{p,2})`
/// for `p ≥ 2`.  Equals `(12 + dx²)/(12 − dx²)` with `d = −2/p`.
pub fn upper_bound_sin_p2(x: f64, p: f64) -> f64 {
    let sp = 6.0 * p;
    let x2 = x * x;
    (sp - x2) / (sp + x2)
}

/// Curvature limit `d = lim_{x→0⁺} S″(x)/x = −2/p` for the `q = 2` family.
///
/// The limit is the source of the upper-bound constant: `−12/d = 6p`.
/// Asserted for `p ≥ 2` only.
pub fn d_limit(p: f64) -> Result<f64> {
    if !(p >= 2.0) {
        return Err(Error::Regime(format!(
            "the curvature limit is asserted for p >= 2 with q = 2 (got p={p})"
        )));
    }
    Ok(-2.0 / p)
}

/// `sin_{p,q}(x)/x` with the removable singularity at `x = 0` filled by the
/// three-term expansion (`|x| <` 1e−6), where the ratio is
/// `1 − c₁|x|^q + c₂|x|^{2q}` to well below machine precision.
pub fn sin_ratio(x: f64, pr: Params, acc: &Accuracy) -> Result<f64> {
    if x.abs() < SERIES_RATIO_CUTOFF {
        let co = series_coeffs(pr);
        let t = x.abs().powf(pr.q());
        return Ok((co.c2 * t).mul_add(t, (-co.c1).mul_add(t, 1.0)));
    }
    Ok(sin_pq(x, pr, acc)? / x)
}

/// Shared sampling loop for the single-sided bounds.
fn run_bound(
    pr: Params,
    grid: &GridSpec,
    kind: BoundKind,
    acc: &Accuracy,
) -> Result<InequalityReport> {
    let a = pi_pq(pr);
    let mut min_margin = f64::INFINITY;
    let mut argmin_x = f64::NAN;
    let mut violations = Vec::new();
    for x in grid.points_excluding(&[0.0]) {
        let ratio = sin_ratio(x, pr, acc)?;
        let (lhs, rhs) = match kind {
            BoundKind::Lower => (lower_bound(x, a), ratio),
            BoundKind::QPower => (qpower_bound(x, pr), ratio),
            BoundKind::UpperP2 => (ratio, upper_bound_sin_p2(x, pr.p())),
        };
        let margin = rhs - lhs;
        if margin < min_margin {
            min_margin = margin;
            argmin_x = x;
        }
        if margin <= -VIOLATION_TOL {
            violations.push(Counterexample { x, lhs, rhs, margin });
        }
    }
    let holds = violations.is_empty();
    Ok(InequalityReport { params: pr, grid: *grid, min_margin, argmin_x, violations, holds })
}

/// Checks the proven lower bound `(π²−x²)/(π²+x²) ≤ sin_{p,q}(x)/x` over a
/// grid.  Requires the theorem regime `p, q ≥ 2`; outside it, use
/// [`explore_inequality`] for a descriptive (non-asserting) scan.
///
/// The margin is strictly positive except within rounding of the equality
/// points `x = ±π_{p,q}`.
pub fn check_theorem_gri2(pr: Params, grid: &GridSpec, acc: &Accuracy) -> Result<InequalityReport> {
    if !pr.theorem_regime() {
        return Err(Error::Regime(format!(
            "the lower bound is asserted for 2 <= p, q (got p={}, q={}); \
             explore_inequality runs outside the regime without asserting",
            pr.p(),
            pr.q()
        )));
    }
    run_bound(pr, grid, BoundKind::Lower, acc)
}

/// Samples any of the three bounds over a grid for any valid `(p, q)`,
/// without regime gating: the report describes what the numbers did, it
/// does not assert a theorem.
pub fn explore_inequality(
    pr: Params,
    grid: &GridSpec,
    kind: BoundKind,
    acc: &Accuracy,
) -> Result<InequalityReport> {
    run_bound(pr, grid, kind, acc)
}

/// Scans `(π_{p,q}/2, π_{p,q})` at resolution `1e−3·π_{p,q}` for the first
/// failure of the q-power variant, then bisects the preceding sign change
/// of the margin down to width `acc.abs_tol`.
///
/// Returns `Ok(None)` when the variant held at every scanned point (as it
/// must for `q = 2`, where it coincides with the proven bound).
pub fn find_qpower_counterexample(pr: Params, acc: &Accuracy) -> Result<Option<QpowerSearch>> {
    let a = pi_pq(pr);
    let step = 1e-3 * a;
    let half = 0.5 * a;
    let margin_at = |x: f64| -> Result<f64> {
        Ok(sin_ratio(x, pr, acc)? - qpower_bound(x, pr))
    };
    let mut prev: Option<(f64, f64)> = None;
    let mut k = 1u32;
    loop {
        let x = half + f64::from(k) * step;
        if x >= a {
            return Ok(None);
        }
        let margin = margin_at(x)?;
        if margin <= -VIOLATION_TOL {
            let witness = Counterexample {
                x,
                lhs: qpower_bound(x, pr),
                rhs: sin_ratio(x, pr, acc)?,
                margin,
            };
            let crossing = match prev {
                Some((px, pm)) if pm > 0.0 => {
                    let (mut lo, mut hi) = (px, x);
                    while hi - lo > acc.abs_tol {
                        let mid = 0.5 * (lo + hi);
                        if margin_at(mid)? > 0.0 {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                    }
                    Some(0.5 * (lo + hi))
                }
                _ => None,
            };
            return Ok(Some(QpowerSearch { witness, crossing }));
        }
        prev = Some((x, margin));
        k += 1;
    }
}

/// Checks the half-angle cosine bound
/// `(π_{q*,q}² − x²)/(π_{q*,q}² + x²) < cos_{q*,q}^{q*−1}(x/2)` on a grid
/// inside `(0, π_{q*,q})`, for `q ≥ 2`.  At `q = 2` this is the classical
/// `(π²−x²)/(π²+x²) < cos(x/2)` on `(0, π)`.
pub fn check_cos_corollary(q: f64, grid: &GridSpec, acc: &Accuracy) -> Result<InequalityReport> {
    if !(q >= 2.0) {
        return Err(Error::Regime(format!(
            "the half-angle cosine bound is asserted for q >= 2 (got q={q})"
        )));
    }
    let qs = q / (q - 1.0);
    let pr = Params::new(qs, q)?;
    let a = pi_pq(pr);
    if !(grid.lo >= 0.0 && grid.hi <= a) {
        return Err(Error::Domain(format!(
            "grid must lie inside (0, pi_(q*,q)) = (0, {a}) (got ({}, {}))",
            grid.lo, grid.hi
        )));
    }
    let exponent = qs - 1.0;
    let half = 0.5 * a;
    let mut min_margin = f64::INFINITY;
    let mut argmin_x = f64::NAN;
    let mut violations = Vec::new();
    for x in grid.points_excluding(&[0.0]) {
        let lhs = lower_bound(x, a);
        // cos^{q*−1} = w^{1/q} for the (q*, q) family; near the flat top of
        // the sine the complement route keeps the relative precision that
        // the rounded sine has already shed.
        let h = half - 0.5 * x;
        let rhs = if h < TOP_COMPLEMENT_CUT {
            quarter_complement_w(h.max(0.0), pr, acc)?.powf(1.0 / q)
        } else {
            pow_abs(cos_pq(0.5 * x, pr, acc)?, exponent)
        };
        let margin = rhs - lhs;
        if margin < min_margin {
            min_margin = margin;
            argmin_x = x;
        }
        if margin <= -VIOLATION_TOL {
            violations.push(Counterexample { x, lhs, rhs, margin });
        }
    }
    let holds = violations.is_empty();
    Ok(InequalityReport { params: pr, grid: *grid, min_margin, argmin_x, violations, holds })
}

/// Verifies the multiple-angle identity
/// `sin_{2,q}(2^{2/q}x) = 2^{2/q}·sin_{q*,q}(x)·cos_{q*,q}^{q*−1}(x)` over a
/// grid inside `[0, π_{q*,q}/2]`, together with the constant relation
/// `π_{2,q} = 2^{2/q−1}·π_{q*,q}`.
pub fn check_multiple_angle(q: f64, grid: &GridSpec, acc: &Accuracy) -> Result<MultipleAngleReport> {
    if !(q >= 2.0) {
        return Err(Error::Regime(format!(
            "the multiple-angle identity check is asserted for q >= 2 (got q={q})"
        )));
    }
    let qs = q / (q - 1.0);
    let inner = Params::new(qs, q)?;
    let outer = Params::new(2.0, q)?;
    let half_inner = 0.5 * pi_pq(inner);
    if !(grid.lo >= 0.0 && grid.hi <= half_inner * (1.0 + 1e-12)) {
        return Err(Error::Domain(format!(
            "grid must lie inside [0, pi_(q*,q)/2] = [0, {half_inner}] (got ({}, {}))",
            grid.lo, grid.hi
        )));
    }
    let scale = 2f64.powf(2.0 / q);
    let exponent = qs - 1.0;
    let mut max_defect = 0.0f64;
    let mut argmax_x = grid.lo;
    for x in grid.points() {
        let lhs = sin_pq(scale * x, outer, acc)?;
        // Same complement trick as the half-angle check: close to the inner
        // maximum, sin·cos^{q*−1} = (1−w)^{1/q}·w^{1/q} with w = w(h).
        let h = half_inner - x;
        let rhs = if h < TOP_COMPLEMENT_CUT {
            let w = quarter_complement_w(h.max(0.0), inner, acc)?;
            scale * (1.0 - w).powf(1.0 / q) * w.powf(1.0 / q)
        } else {
            scale * sin_pq(x, inner, acc)? * pow_abs(cos_pq(x, inner, acc)?, exponent)
        };
        let defect = (lhs - rhs).abs();
        if defect > max_defect {
            max_defect = defect;
            argmax_x = x;
        }
    }
    let constant_defect = (pi_pq(outer) - 2f64.powf(2.0 / q - 1.0) * pi_pq(inner)).abs();
    Ok(MultipleAngleReport {
        max_defect,
        argmax_x,
        constant_defect,
        holds: max_defect <= MULTIPLE_ANGLE_TOL && constant_defect <= CONSTANT_RELATION_TOL,
    })
}

/// Evaluates the proof-side quantities `f`, `g` and `S′² − S″S` at one
/// abscissa `x ∈ (0, π_{p,q}]`.
///
/// Near `x = 0` the difference `x − S(x)` in `f`'s denominator is taken
/// from the series tail `c₁|x|^q·x − c₂|x|^{2q}·x` (below the 1e−6 cutoff)
/// to dodge the cancellation; at `x = π_{p,q}` both `f = π²` and the limit
/// `g = π` are produced exactly.  The `s4` component is `None` inside the
/// exclusion window around `π_{p,q}/2` when `p > 2`.
pub fn proof_quantities(x: f64, pr: Params, acc: &Accuracy) -> Result<ProofQuantities> {
    let a = pi_pq(pr);
    if !(x > 0.0 && x <= a) {
        return Err(Error::Domain(format!(
            "proof quantities are defined on (0, pi_pq] = (0, {a}] (got {x})"
        )));
    }
    let s = sin_pq(x, pr, acc)?;
    let c = cos_pq(x, pr, acc)?;
    let f = if x < SERIES_RATIO_CUTOFF {
        // (x − S)/x = c₁t − c₂t² with t = x^q, accurate to O(t³) relative.
        let co = series_coeffs(pr);
        let t = x.powf(pr.q());
        let one_minus_ratio = co.c1 * t - co.c2 * t * t;
        x * (2.0 - one_minus_ratio) / one_minus_ratio
    } else {
        x * x * (x + s) / (x - s)
    };
    let g = if s == 0.0 {
        // Only at x = π_{p,q}, where x²(1+S′)/S → 0 because S′ → −1.
        x
    } else {
        x + s - x * x * (1.0 + c) / s
    };
    let s4 = if pr.p() > 2.0 {
        let red = reduce_argument(x, pr)?;
        if (red.y - 0.5 * a).abs() <= DEFAULT_EXCLUSION_RADIUS {
            None
        } else {
            Some(c * c - sin_pq_dd(x, pr, acc)? * s)
        }
    } else {
        Some(c * c - sin_pq_dd(x, pr, acc)? * s)
    };
    Ok(ProofQuantities { f, g, s4 })
}

/// Samples numerical evidence for the four structural conditions with
/// `a = π_{p,q}` and excluded set `P = {π_{p,q}/2}`.
///
/// Grid checks cannot prove the conditions; the report states what was
/// sampled (the s3 note deliberately says "consistent with").
pub fn check_conditions(pr: Params, grid: &GridSpec) -> Result<ConditionReport> {
    let acc = Accuracy::default();
    let a = pi_pq(pr);
    let half = 0.5 * a;

    // (S1) oddness and anti-periodicity.
    let mut s1 = 0.0f64;
    for x in grid.points() {
        let odd = (sin_pq(-x, pr, &acc)? + sin_pq(x, pr, &acc)?).abs();
        let anti = (sin_pq(x + a, pr, &acc)? + sin_pq(x, pr, &acc)?).abs();
        s1 = s1.max(odd).max(anti);
    }

    // (S2) 0 < S(x) < x strictly, on the grid's portion of (0, π_{p,q}).
    let mut s2 = true;
    for x in grid.points_excluding(&[0.0]) {
        if x <= 0.0 || x >= a {
            continue;
        }
        let s = sin_pq(x, pr, &acc)?;
        if !(s > 0.0 && s < x) {
            s2 = false;
        }
    }

    // (S3) derivative continuity across π_{p,q}/2, by shrinking
    // finite-difference jumps (the cusp candidate is the excluded point).
    let jump = |h: f64| -> Result<f64> {
        Ok((cos_pq(half - h, pr, &acc)? - cos_pq(half + h, pr, &acc)?).abs())
    };
    let j6 = jump(1e-6)?;
    let j8 = jump(1e-8)?;
    let s3_note = format!(
        "consistent with continuity of S' at pi_pq/2: |S'(a/2-h) - S'(a/2+h)| = {j6:.3e} \
         at h=1e-6, {j8:.3e} at h=1e-8"
    );

    // (S4) min of S′² − S″S away from the exclusion windows around the
    // reduced images of π_{p,q}/2.
    let mut s4_min = f64::INFINITY;
    for x in grid.points() {
        let red = reduce_argument(x, pr)?;
        if (red.y - half).abs() <= grid.exclusion_radius {
            continue;
        }
        let s = sin_pq(x, pr, &acc)?;
        let c = cos_pq(x, pr, &acc)?;
        let dd = sin_pq_dd(x, pr, &acc)?;
        let s4 = c * c - dd * s;
        if s4 < s4_min {
            s4_min = s4;
        }
    }

    Ok(ConditionReport {
        s1_max_defect: s1,
        s2_holds: s2,
        s3_note,
        s4_min_value: s4_min,
        excluded_points: vec![half],
    })
}

/// Checks both sides of the `q = 2` refinement
/// `(π²−x²)/(π²+x²) < sin_{p,2}(x)/x < (6p−x²)/(6p+x²)` over a grid inside
/// `(0, π_{p,2})`, for `p ≥ 2`.  Each point's recorded margin is the
/// tighter of the two sides.
pub fn check_upper_p2(p: f64, grid: &GridSpec, acc: &Accuracy) -> Result<InequalityReport> {
    if !(p >= 2.0) {
        return Err(Error::Regime(format!(
            "the two-sided q=2 bound is asserted for p >= 2 (got p={p})"
        )));
    }
    let pr = Params::new(p, 2.0)?;
    let a = pi_pq(pr);
    if !(grid.lo >= 0.0 && grid.hi <= a) {
        return Err(Error::Domain(format!(
            "grid must lie inside (0, pi_(p,2)) = (0, {a}) (got ({}, {}))",
            grid.lo, grid.hi
        )));
    }
    let mut min_margin = f64::INFINITY;
    let mut argmin_x = f64::NAN;
    let mut violations = Vec::new();
    for x in grid.points_excluding(&[0.0]) {
        let ratio = sin_ratio(x, pr, acc)?;
        let lower = lower_bound(x, a);
        let upper = upper_bound_sin_p2(x, p);
        let lower_margin = ratio - lower;
        let upper_margin = upper - ratio;
        let (lhs, rhs, margin) = if lower_margin <= upper_margin {
            (lower, ratio, lower_margin)
        } else {
            (ratio, upper, upper_margin)
        };
        if margin < min_margin {
            min_margin = margin;
            argmin_x = x;
        }
        if margin <= -VIOLATION_TOL {
            violations.push(Counterexample { x, lhs, rhs, margin });
        }
    }
    let holds = violations.is_empty();
    Ok(InequalityReport { params: pr, grid: *grid, min_margin, argmin_x, violations, holds })
}
