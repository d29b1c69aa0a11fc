//! Why the naive q-power strengthening of the lower bound fails.
//!
//! One might hope to sharpen the Redheffer-type bound to
//!
//!   sin_{p,q} x / x  ≥  ((a^q − x^q) / (a^q + x^q))   with a = π_{p,q},
//!
//! matching the exponent q of the underlying integrand.  For q = 2 the two
//! bounds coincide, but for q > 2 the candidate is *larger* near the half
//! period and overtakes the sine ratio: the strengthening is false.  This
//! example locates a concrete witness for (p, q) = (3, 3) and the crossing
//! point where the margin first changes sign.
//!
//! Run with: `cargo run --example qpower_failure`

use gtrig::{
    explore_inequality, find_qpower_counterexample, pi_pq, Accuracy, BoundKind, GridSpec, Params,
    Result,
};

fn main() -> Result<()> {
    let acc = Accuracy::default();
    let pr = Params::new(3.0, 3.0)?;
    let a = pi_pq(pr);

    // Near the origin the q-power bound is perfectly sound...
    let grid = GridSpec::new(0.01, 0.3 * a, 500)?;
    let report = explore_inequality(pr, &grid, BoundKind::QPower, &acc)?;
    println!(
        "on (0.01, 0.3 pi_pq): violations = {}, min margin = {:.6e}",
        report.violations.len(),
        report.min_margin
    );

    // ...but it breaks in the second half of (0, pi_pq).
    match find_qpower_counterexample(pr, &acc)? {
        Some(search) => {
            let w = search.witness;
            println!(
                "witness: x = {:.15}, lhs = {:.15}, rhs = {:.15}, margin = {:.6e}",
                w.x, w.lhs, w.rhs, w.margin
            );
            if let Some(c) = search.crossing {
                println!("first sign change near x = {c:.15} ({:.6} pi_pq)", c / a);
            }
        }
        None => println!("no counterexample found"),
    }
    Ok(())
}
