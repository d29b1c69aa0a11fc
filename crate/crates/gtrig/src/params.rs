//! Parameter pair `(p, q)` and argument reduction bookkeeping.
//!
//! The function family is indexed by two exponents `p, q > 1`: the
//! generalized sine on the first quarter period is the inverse of
//! `F_{p,q}(s) = ∫₀ˢ (1 − t^q)^{−1/p} dt`, and everything else follows by
//! the symmetry extension (odd around 0, even around `π_{p,q}/2`, period
//! `2π_{p,q}`).  [`Params`] carries the pair after validation; helper
//! accessors expose the conjugate index `q* = q/(q−1)` and the
//! `p ≥ 2, q ≥ 2` regime gate used by the inequality checks.

use crate::error::{Error, Result};

/// Validated exponent pair for the generalized trigonometric family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    p: f64,
    q: f64,
}

impl Params {
    /// Builds a parameter pair, requiring finite `p > 1` and `q > 1`.
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !p.is_finite() || !(p > 1.0) {
            return Err(Error::Domain(format!("p must be finite and exceed 1 (got {p})")));
        }
        if !q.is_finite() || !(q > 1.0) {
            return Err(Error::Domain(format!("q must be finite and exceed 1 (got {q})")));
        }
        Ok(Params { p, q })
    }

    /// First exponent (controls the `|cos|^p` term of the identity
    /// `|cos_{p,q}|^p + |sin_{p,q}|^q = 1`).
    pub fn p(self) -> f64 {
        self.p
    }

    /// Second exponent (controls the `|sin|^q` term).
    pub fn q(self) -> f64 {
        self.q
    }

    /// Hölder conjugate of `q`: `q* = q/(q−1)`.
    pub fn q_star(self) -> f64 {
        self.q / (self.q - 1.0)
    }

    /// True when both exponents are at least 2 — the regime in which the
    /// two-sided Redheffer-type bound is asserted.
    pub fn theorem_regime(self) -> bool {
        self.p >= 2.0 && self.q >= 2.0
    }
}

/// Result of reducing an argument to the first quarter period.
///
/// For any real `x`, the symmetries pin the pair `(sin, cos)` down to values
/// on `[0, π_{p,q}/2]`:
///
/// ```text
/// sin_{p,q}(x) = sign · s(y),        cos_{p,q}(x) = deriv_sign · c(y),
/// ```
///
/// where `s, c ≥ 0` are the quarter-period branch values at `y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedArg {
    /// Reduced abscissa in `[0, π_{p,q}/2]`.
    pub y: f64,
    /// Sign restoring the sine (±1).
    pub sign: f64,
    /// Sign restoring the cosine, i.e. the sine's derivative (±1).
    pub deriv_sign: f64,
}
