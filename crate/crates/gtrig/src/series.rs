//! Three-term expansion of sin_{p,q} near the origin.
//!
//! Near `x = 0` the generalized sine has a convergent expansion in powers of
//! `|x|^q`:
//!
//! ```text
//! sin_{p,q}(x) = x − c₁·|x|^q·x + c₂·|x|^{2q}·x − ⋯,
//! c₁ = 1/(p(q+1)),
//! c₂ = (1 − p + 3q − pq) / (2p²(q+1)(2q+1)),
//! ```
//!
//! and this module implements exactly those three displayed terms.  The
//! omitted remainder has order `|x|^{3q+1}`, which the tests confirm through
//! the halving ratio `R(x/2)/R(x) ≤ 2^{−(3q+½)}` for
//! `R(x) = |sin_{p,q}(x) − series3(x)|`.
//!
//! The truncation is a useful approximation for `|x|` up to about
//! `π_{p,q}/4`; beyond that the next term is no longer small.  The regime is
//! advisory — `series3` evaluates the polynomial for any finite `x` — and
//! callers inside this crate only rely on it for `|x| < 1e−6`, where it is
//! accurate to well below machine precision of the result.

use crate::params::Params;

/// The two displayed correction coefficients of the expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesCoeffs {
    /// Coefficient of `|x|^q·x`; always positive.
    pub c1: f64,
    /// Coefficient of `|x|^{2q}·x`; sign varies with `(p, q)`.
    pub c2: f64,
}

/// Computes the expansion coefficients for a parameter pair.
pub fn series_coeffs(pr: Params) -> SeriesCoeffs {
    let (p, q) = (pr.p(), pr.q());
    SeriesCoeffs {
        c1: 1.0 / (p * (q + 1.0)),
        c2: (1.0 - p + 3.0 * q - p * q) / (2.0 * p * p * (q + 1.0) * (2.0 * q + 1.0)),
    }
}

/// Three-term approximation `x − c₁|x|^q x + c₂|x|^{2q} x`.
///
/// Intended for `|x| ≲ π_{p,q}/4`; evaluates the polynomial verbatim outside
/// that regime as well (no error, accuracy simply degrades).
pub fn series3(x: f64, pr: Params) -> f64 {
    let SeriesCoeffs { c1, c2 } = series_coeffs(pr);
    let t = x.abs().powf(pr.q());
    x * (c2 * t).mul_add(t, (-c1).mul_add(t, 1.0))
}
