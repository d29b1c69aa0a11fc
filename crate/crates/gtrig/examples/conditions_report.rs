//! Numerical audit of the structural facts behind the lower bound.
//!
//! The proof of the sine-ratio inequality leans on four elementary
//! properties of S = sin_{p,q}:
//!
//! S1. oddness and anti-periodicity: S(−x) = −S(x), S(x + a) = −S(x);
//! S2. strict concavity consequence: 0 < S(x) < x on (0, a);
//! S3. continuity of S′ across the half-quarter point a/2;
//! S4. the curvature combination S′² − S″S stays at or above 1
//!     when p, q ≥ 2 (it can fall toward 0 otherwise).
//!
//! This example evaluates all four on a grid and prints the summary that
//! `check_conditions` assembles.
//!
//! Run with: `cargo run --example conditions_report`

use gtrig::{check_conditions, pi_pq, GridSpec, Params, Result};

fn main() -> Result<()> {
    for &(p, q) in &[(2.0, 2.0), (1.5, 3.0), (3.0, 3.0)] {
        let pr = Params::new(p, q)?;
        let a = pi_pq(pr);
        let grid = GridSpec::new(0.01, a - 0.01, 400)?;
        let report = check_conditions(pr, &grid)?;
        println!("p = {p}, q = {q}:");
        println!("  S1 max defect      = {:.3e}", report.s1_max_defect);
        println!("  S2 strict on grid  = {}", report.s2_holds);
        println!("  S3 {}", report.s3_note);
        println!("  S4 min value       = {:.9}", report.s4_min_value);
        println!("  excluded points    = {:?}", report.excluded_points);
        println!();
    }
    Ok(())
}
