//! Pointwise evaluation of sin_{p,q}, cos_{p,q}, and arcsin_{p,q}.
//!
//! On [0, π_{p,q}/2] the generalized sine is the inverse of
//! F_{p,q}(s) = ∫₀ˢ (1 − t^q)^{−1/p} dt, and cos_{p,q} is its derivative,
//! so the pair satisfies |cos_{p,q} x|^p + |sin_{p,q} x|^q = 1.  Outside
//! the quarter period the functions are extended by reflection, oddness,
//! and 2π_{p,q}-periodicity, exactly like the classical sine.
//!
//! Run with: `cargo run --example evaluate_functions`

use gtrig::{arcsin_pq, cos_pq, pi_pq, sin_pq, Accuracy, Params, Result};

fn main() -> Result<()> {
    let acc = Accuracy::default();
    let pr = Params::new(3.0, 3.0)?;
    let a = pi_pq(pr);

    println!("p = 3, q = 3, pi_pq = {a:.15}");
    println!();
    println!("{:>8} {:>22} {:>22} {:>12}", "x", "sin_pq", "cos_pq", "identity");
    for i in 0..=12 {
        let x = a * i as f64 / 6.0 - a; // from -pi_pq to +pi_pq
        let s = sin_pq(x, pr, &acc)?;
        let c = cos_pq(x, pr, &acc)?;
        let identity = c.abs().powf(pr.p()) + s.abs().powf(pr.q());
        println!("{x:>8.4} {s:>22.16} {c:>22.16} {identity:>12.9}");
    }

    println!();
    println!("round trip through the inverse on [0, 1]:");
    for &s in &[0.1, 0.5, 0.9, 0.99] {
        let x = arcsin_pq(s, pr, &acc)?;
        let back = sin_pq(x, pr, &acc)?;
        println!("  arcsin_pq({s}) = {x:.15}, sin_pq back = {back:.15}");
    }
    Ok(())
}
