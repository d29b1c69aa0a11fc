//! The Redheffer-type lower bound for the generalized sine ratio.
//!
//! With a = π_{p,q}, the inequality
//!
//!   sin_{p,q} x / x  ≥  (a² − x²) / (a² + x²)
//!
//! holds for all x > 0 whenever p, q ≥ 2, with equality only at x = a
//! where both sides vanish.  This example scans a grid, reports the
//! minimum margin (rhs subtracted from lhs), and shows it is attained at
//! the half period.  Outside the exponent regime nothing is asserted, but
//! `explore_inequality` will still happily report what the numbers do.
//!
//! Run with: `cargo run --example lower_bound_check`

use gtrig::{
    check_theorem_gri2, explore_inequality, pi_pq, Accuracy, BoundKind, GridSpec, Params, Result,
};

fn main() -> Result<()> {
    let acc = Accuracy::default();
    for &(p, q) in &[(2.0, 2.0), (2.0, 4.0), (3.0, 3.0), (5.0, 5.0), (10.0, 2.0)] {
        let pr = Params::new(p, q)?;
        let a = pi_pq(pr);
        let grid = GridSpec::new(0.01, 4.0 * a, 2000)?;
        let report = check_theorem_gri2(pr, &grid, &acc)?;
        println!(
            "p = {p}, q = {q}: holds = {}, min margin = {:.6e} at x = {:.12} (pi_pq = {:.12})",
            report.holds, report.min_margin, report.argmin_x, a
        );
    }

    // Outside p, q >= 2 the theorem is silent; exploring is still allowed.
    let pr = Params::new(1.5, 3.0)?;
    let a = pi_pq(pr);
    let grid = GridSpec::new(0.01, 4.0 * a, 2000)?;
    let report = explore_inequality(pr, &grid, BoundKind::Lower, &acc)?;
    println!(
        "p = 1.5, q = 3 (exploratory): violations = {}, min margin = {:.6e}",
        report.violations.len(),
        report.min_margin
    );
    Ok(())
}
