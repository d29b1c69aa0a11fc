//! Generalized trigonometric functions and Redheffer-type bounds.
//!
//! For parameters `p, q > 1`, the generalized sine `sin_{p,q}` is the
//! inverse of
//!
//! ```text
//! F_{p,q}(s) = ∫₀ˢ (1 − tᵠ)^(−1/p) dt,        0 ≤ s ≤ 1,
//! ```
//!
//! extended to the real line by reflection at its quarter period, oddness
//! and periodicity, exactly as `arcsin` begets `sin`.  The generalized
//! circle constant is `π_{p,q} = 2·F_{p,q}(1) = (2/q)·B(1/q, 1−1/p)`, the
//! derivative `cos_{p,q} = (sin_{p,q})′` satisfies the Pythagorean-type
//! identity `|cos_{p,q}|^p + |sin_{p,q}|^q = 1`, and `u = sin_{p,q}`
//! solves the initial value problem attached to the one-dimensional
//! (p, q)-Laplacian eigenproblem.
//!
//! On top of the special-function core this crate verifies, numerically
//! and at scale, a family of Redheffer-type bounds: for `p, q ≥ 2` and
//! `x ≠ 0`,
//!
//! ```text
//! (π_{p,q}² − x²) / (π_{p,q}² + x²)  ≤  sin_{p,q}(x) / x,
//! ```
//!
//! with equality only at `x = ±π_{p,q}`; a two-sided `q = 2` refinement
//! with upper bound `(6p − x²)/(6p + x²)`; a half-angle cosine corollary;
//! and — as a cautionary tale — the *failure* of the tempting q-power
//! variant `(π^q − |x|^q)/(π^q + |x|^q)` near `π_{p,q}` whenever `q ≠ 2`,
//! complete with a counterexample finder.
//!
//! # Modules
//!
//! * [`params`] — validated parameter pairs and argument reduction data.
//! * [`special`] — `ln Γ`, `ln B`, and the regularized incomplete beta
//!   function (the quadrature-free route to `F_{p,q}` and its inverse).
//! * [`trig`] — `π_{p,q}`, `sin_{p,q}`, `cos_{p,q}`, `arcsin_{p,q}`,
//!   second derivatives and argument reduction.
//! * [`series`] — leading Maclaurin coefficients of `sin_{p,q}`.
//! * [`ode`] — an independent Runge–Kutta oracle for the defining initial
//!   value problem, used to cross-check the inverse-function route.
//! * [`redheffer`] — the bounds, grid checkers, proof-side quantities and
//!   the q-power counterexample search.
//! * [`scan`] — CSV tabulation of the ratio against all bounds.
//!
//! # Example
//!
//! ```
//! use gtrig::{Accuracy, Params};
//!
//! let pr = Params::new(3.0, 3.0).unwrap();
//! let acc = Accuracy::default();
//! let a = gtrig::pi_pq(pr);
//! let s = gtrig::sin_pq(0.5 * a, pr, &acc).unwrap();
//! assert!((s - 1.0).abs() < 1e-15); // the quarter period peaks at 1
//!
//! // The lower bound holds strictly inside (0, π_{3,3})…
//! let ratio = gtrig::sin_ratio(1.0, pr, &acc).unwrap();
//! assert!(gtrig::lower_bound(1.0, a) < ratio);
//! // …while the q-power variant fails closer to π_{3,3}.
//! let bad = gtrig::find_qpower_counterexample(pr, &acc).unwrap().unwrap();
//! assert!(bad.witness.margin < 0.0);
//! ```

pub mod error;
pub mod ode;
pub mod params;
pub mod redheffer;
pub mod scan;
pub mod series;
pub mod special;
pub mod trig;

pub use error::{Error, Result};
pub use ode::{solve_ivp, IvpPath};
pub use params::{Params, ReducedArg};
pub use redheffer::{
    check_conditions, check_cos_corollary, check_multiple_angle, check_theorem_gri2,
    check_upper_p2, d_limit, explore_inequality, find_qpower_counterexample, lower_bound,
    proof_quantities, qpower_bound, sin_ratio, upper_bound_sin_p2, BoundKind, ConditionReport,
    Counterexample, GridSpec, InequalityReport, MultipleAngleReport, ProofQuantities,
    QpowerSearch, DEFAULT_EXCLUSION_RADIUS, VIOLATION_TOL,
};
pub use scan::{
    format_significant, format_significant_trimmed, parse_csv, render_csv, scan, ScanRecord,
    CSV_HEADER,
};
pub use series::{series3, series_coeffs, SeriesCoeffs};
pub use special::{beta, inc_beta_reg, ln_beta, ln_gamma, Accuracy};
pub use trig::{arcsin_pq, cos_pq, pi_pq, reduce_argument, sin_pq, sin_pq_dd};
