//! The multiple-angle identity linking the (2, q) and (q*, q) families.
//!
//! For q ≥ 2 and q* = q/(q − 1), the generalized sine of the outer family
//! evaluated at a stretched argument factors through the inner family:
//!
//!   sin_{2,q}(2^{2/q} x) = 2^{2/q} · sin_{q*,q}(x) · (cos_{q*,q}(x))^{q*−1}
//!
//! for 0 ≤ x ≤ π_{q*,q}/2.  At q = 2 it degenerates to the classical
//! double-angle formula sin 2x = 2 sin x cos x.  A matching relation ties
//! the constants: π_{2,q} = 2^{2/q − 1}·π_{q*,q}.
//!
//! Run with: `cargo run --example multiple_angle`

use gtrig::{check_multiple_angle, pi_pq, Accuracy, GridSpec, Params, Result};

fn main() -> Result<()> {
    let acc = Accuracy::default();
    for &q in &[2.0, 3.0, 4.0, 6.0] {
        let qs = q / (q - 1.0);
        let half_inner = 0.5 * pi_pq(Params::new(qs, q)?);
        let grid = GridSpec::new(0.0, half_inner, 800)?;
        let report = check_multiple_angle(q, &grid, &acc)?;
        println!(
            "q = {q}: max identity defect = {:.3e} at x = {:.9}, constant defect = {:.3e}, holds = {}",
            report.max_defect, report.argmax_x, report.constant_defect, report.holds
        );
    }
    Ok(())
}
