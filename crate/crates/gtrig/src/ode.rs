//! Independent verification path: integrates the initial value problem that
//! characterizes the generalized sine and exposes the sampled trajectory.
//!
//! `u = sin_{p,q}` is the solution of the p-Laplacian problem
//!
//! ```text
//! −(|u′|^{p−2} u′)′ = ((p−1)q/p) · |u|^{q−2} u,     u(0) = 0,  u′(0) = 1,
//! ```
//!
//! which conserves the energy `|u′|^p + |u|^q = 1`.  This module integrates
//! the equivalent first-order system in the state `u` and the flux
//! `w = |u′|^{p−2}u′`,
//!
//! ```text
//! u′ = |w|^{p′−2} w,        w′ = −((p−1)q/p) · |u|^{q−2} u,
//! ```
//!
//! with `p′ = p/(p−1)`, because this right-hand side stays continuous for
//! `p, q ≥ 2` (the scalar `u″` form degenerates where `u′ = 0`).
//!
//! The integrator is the classical fourth-order one-step scheme on a fixed
//! sample grid.  One wrinkle: for `p > 2` the flux map `|w|^{p′−1}` has a
//! cusp at `w = 0`, and a plain fixed step loses its order exactly where the
//! cosine crosses zero — measured error for (3,3) at step π/2000 is ~5e−6,
//! far above the 1e−8 energy target.  Steps whose flux starts small
//! (|w| < 0.05) or changes sign are therefore subdivided into 128 equal
//! micro-steps.  The sample grid, and hence the returned path, is unchanged
//! and fully deterministic; measured energy drift for (3,3) drops to
//! 3.5e−9.

use crate::error::{Error, Result};
use crate::params::Params;
use crate::trig::pi_pq;

/// Flux threshold below which a step is subdivided.
const REFINE_BAND: f64 = 0.05;
/// Number of equal micro-steps used inside the refinement band.
const REFINE_FACTOR: u32 = 128;

/// Sampled trajectory of the initial value problem.
#[derive(Debug, Clone, PartialEq)]
pub struct IvpPath {
    /// Uniform distance between consecutive samples.
    pub step: f64,
    /// `(x, u, w)` triples, starting at `(0, 0, 1)`.
    pub samples: Vec<(f64, f64, f64)>,
}

/// `|z|^α · sign(z)` with an explicit zero branch (the exponent can dip
/// below 1, where `powf` at 0 is fine but the sign logic is not).
#[inline]
fn signed_pow(z: f64, alpha: f64) -> f64 {
    if z == 0.0 {
        return 0.0;
    }
    z.abs().powf(alpha).copysign(z)
}

/// Right-hand side of the first-order system: `|w|^{p′−2}w = |w|^{p′−1}·sign w`
/// and `−coeff·|u|^{q−2}u`, with `p′−1` and `q−1` precomputed.
#[inline]
fn rhs(u: f64, w: f64, pp_m1: f64, coeff: f64, q_m1: f64) -> (f64, f64) {
    (signed_pow(w, pp_m1), -coeff * signed_pow(u, q_m1))
}

/// One classical fourth-order step of size `h` from `(u, w)`.
fn rk4_step(u: f64, w: f64, h: f64, pp_m1: f64, coeff: f64, q_m1: f64) -> (f64, f64) {
    let (k1u, k1w) = rhs(u, w, pp_m1, coeff, q_m1);
    let (k2u, k2w) = rhs(u + 0.5 * h * k1u, w + 0.5 * h * k1w, pp_m1, coeff, q_m1);
    let (k3u, k3w) = rhs(u + 0.5 * h * k2u, w + 0.5 * h * k2w, pp_m1, coeff, q_m1);
    let (k4u, k4w) = rhs(u + h * k3u, w + h * k3w, pp_m1, coeff, q_m1);
    (
        u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
        w + h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w),
    )
}

/// Integrates the system from `(0, 0, 1)` to `x_end` on a uniform sample
/// grid of spacing `step`.
///
/// Requires `0 < x_end ≤ 2π_{p,q}` and `0 < step ≤ π_{p,q}/100`.
pub fn solve_ivp(pr: Params, x_end: f64, step: f64) -> Result<IvpPath> {
    let pi = pi_pq(pr);
    if !(x_end > 0.0) || x_end > 2.0 * pi {
        return Err(Error::Domain(format!(
            "x_end must lie in (0, 2*pi_pq] = (0, {}] (got {x_end})",
            2.0 * pi
        )));
    }
    if !(step > 0.0) || step > pi / 100.0 {
        return Err(Error::Domain(format!(
            "step must lie in (0, pi_pq/100] = (0, {}] (got {step})",
            pi / 100.0
        )));
    }
    let (p, q) = (pr.p(), pr.q());
    let pp_m1 = p / (p - 1.0) - 1.0;
    let q_m1 = q - 1.0;
    let coeff = (p - 1.0) * q / p;

    let n = (x_end / step).round().max(1.0) as usize;
    let mut samples = Vec::with_capacity(n + 1);
    let (mut u, mut w) = (0.0f64, 1.0f64);
    samples.push((0.0, u, w));
    for k in 0..n {
        let x0 = step * k as f64;
        let x1 = if k + 1 == n { x_end } else { step * (k + 1) as f64 };
        let h = x1 - x0;
        // Trial step decides whether this interval straddles the flux cusp.
        let (ut, wt) = rk4_step(u, w, h, pp_m1, coeff, q_m1);
        if w.abs() < REFINE_BAND || wt.abs() < REFINE_BAND || (wt < 0.0) != (w < 0.0) {
            let hs = h / f64::from(REFINE_FACTOR);
            for _ in 0..REFINE_FACTOR {
                let (un, wn) = rk4_step(u, w, hs, pp_m1, coeff, q_m1);
                u = un;
                w = wn;
            }
        } else {
            u = ut;
            w = wt;
        }
        samples.push((x1, u, w));
    }
    Ok(IvpPath { step, samples })
}

impl IvpPath {
    /// Largest deviation of `|u′|^p + |u|^q` from 1 along the path, with
    /// `u′` reconstructed from the flux.
    pub fn max_energy_defect(&self, pr: Params) -> f64 {
        let pp = pr.p() / (pr.p() - 1.0);
        let mut worst = 0.0f64;
        for &(_, u, w) in &self.samples {
            let du = signed_pow(w, pp - 1.0);
            let e = du.abs().powf(pr.p()) + u.abs().powf(pr.q());
            worst = worst.max((e - 1.0).abs());
        }
        worst
    }
}
