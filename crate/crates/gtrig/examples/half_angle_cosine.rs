//! A Redheffer-type bound for powers of the generalized cosine.
//!
//! For q ≥ 2 and the conjugate exponent q* = q/(q − 1), set a = π_{q*,q}.
//! Then for 0 ≤ x ≤ a,
//!
//!   (cos_{q*,q}(x/2))^{q*−1}  ≥  (a² − x²) / (a² + x²),
//!
//! the half-angle analogue of the sine-ratio bound.  The classical q = 2
//! case reads cos(x/2) ≥ (π² − x²)/(π² + x²) on [0, π].
//!
//! Run with: `cargo run --example half_angle_cosine`

use gtrig::{check_cos_corollary, pi_pq, Accuracy, GridSpec, Params, Result};

fn main() -> Result<()> {
    let acc = Accuracy::default();
    for &q in &[2.0, 3.0, 4.0, 6.0] {
        let qs = q / (q - 1.0);
        let a = pi_pq(Params::new(qs, q)?);
        let grid = GridSpec::new(0.01, a - 0.01, 1000)?;
        let report = check_cos_corollary(q, &grid, &acc)?;
        println!(
            "q = {q} (q* = {qs:.4}, a = {a:.12}): holds = {}, min margin = {:.6e} at x = {:.9}",
            report.holds, report.min_margin, report.argmin_x
        );
    }
    Ok(())
}
