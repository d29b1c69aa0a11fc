//! A two-sided sandwich for sin_{p,2}/x on (0, π_{p,2}).
//!
//! For p ≥ 2 and q = 2 the sine ratio is pinched between the
//! Redheffer-type lower bound and a Cusa–Huygens-flavoured upper bound:
//!
//!   (a² − x²)/(a² + x²)  ≤  sin_{p,2} x / x  ≤  (6p − x²)/(6p + x²),
//!
//! with a = π_{p,2}.  The upper constant 6p is forced by the Maclaurin
//! coefficient of the ratio: sin_{p,2} x / x = 1 − x²/(3p) + O(x⁴), and
//! (6p − x²)/(6p + x²) = 1 − x²/(3p) + O(x⁴) matches it to second order.
//! For p = 2 this recovers the classical pair
//! (π² − x²)/(π² + x²) ≤ sin x / x ≤ (12 − x²)/(12 + x²).
//!
//! Run with: `cargo run --example two_sided_q2`

use gtrig::{check_upper_p2, pi_pq, sin_ratio, Accuracy, GridSpec, Params, Result};

fn main() -> Result<()> {
    let acc = Accuracy::default();
    for &p in &[2.0, 3.0, 5.0] {
        let pr = Params::new(p, 2.0)?;
        let a = pi_pq(pr);
        let grid = GridSpec::new(0.01, a - 0.01, 1000)?;
        let report = check_upper_p2(p, &grid, &acc)?;
        println!(
            "p = {p}: two-sided bound holds = {}, tightest margin = {:.6e} at x = {:.9}",
            report.holds, report.min_margin, report.argmin_x
        );
    }

    println!();
    println!("p = 2 cross-section (classical sine):");
    let pr = Params::new(2.0, 2.0)?;
    println!("{:>6} {:>20} {:>20} {:>20}", "x", "lower", "sin(x)/x", "upper");
    for i in 1..=6 {
        let x = 0.5 * i as f64;
        let a = pi_pq(pr);
        let lower = (a * a - x * x) / (a * a + x * x);
        let upper = (12.0 - x * x) / (12.0 + x * x);
        let ratio = sin_ratio(x, pr, &acc)?;
        println!("{x:>6.2} {lower:>20.15} {ratio:>20.15} {upper:>20.15}");
    }
    Ok(())
}
