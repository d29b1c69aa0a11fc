//! Independent quadrature oracle for the half period.
//!
//! π_{p,q} is recomputed here as `2·∫₀¹ (1 − t^q)^{−1/p} dt` by adaptive
//! Simpson refinement — no beta functions, no series, nothing shared with
//! the library's own evaluation path.  The integrand blows up at `t = 1`,
//! so the right half is transformed by `t = 1 − σ^r` with `r = p/(p−1)`,
//! which turns it into a bounded function of σ:
//!
//! ```text
//! ∫_{1/2}^{1} (1−t^q)^{−1/p} dt = ∫_0^{(1/2)^{1/r}} (1−(1−σ^r)^q)^{−1/p} · r·σ^{r−1} dσ,
//! ```
//!
//! with the limit `r·q^{−1/p}` at σ = 0.

fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    fa: f64,
    b: f64,
    fb: f64,
    fm: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let refined = left + right;
    if depth == 0 || (refined - whole).abs() <= 15.0 * tol {
        return refined + (refined - whole) / 15.0;
    }
    adaptive_simpson(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1)
        + adaptive_simpson(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1)
}

fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    adaptive_simpson(&f, a, fa, b, fb, fm, whole, tol, 48)
}

/// `π_{p,q}` by direct adaptive quadrature of the defining integral,
/// accurate to a few 1e−12.
pub fn pi_oracle(p: f64, q: f64) -> f64 {
    let tol = 1e-12;
    let left = integrate(|t| (1.0 - t.powf(q)).powf(-1.0 / p), 0.0, 0.5, tol);
    let r = p / (p - 1.0);
    let transformed = move |s: f64| {
        if s == 0.0 {
            return r * q.powf(-1.0 / p);
        }
        // 1 − (1 − σ^r)^q without cancellation near σ = 0.
        let inner = -(q * (-s.powf(r)).ln_1p()).exp_m1();
        inner.powf(-1.0 / p) * r * s.powf(r - 1.0)
    };
    let right = integrate(transformed, 0.0, 0.5f64.powf(1.0 / r), tol);
    2.0 * (left + right)
}
