//! Maclaurin-type expansion of sin_{p,q} near the origin.
//!
//! Inverting F_{p,q}(s) = s + s^{q+1}/(p(q+1)) + … term by term gives
//!
//!   sin_{p,q} x = x − x^{q+1}/(p(q+1))
//!               + (2q + 1 − p(q + 1)/2) · x^{2q+1} / (p²(q+1)(2q+1)) + O(x^{3q+1}),
//!
//! the three-term truncation computed by `series3`.  The remainder scales
//! like x^{3q+1}, so halving x shrinks it by about 2^{3q+1} — the decay
//! this example measures.
//!
//! Run with: `cargo run --example series_near_zero`

use gtrig::{series3, series_coeffs, sin_pq, Accuracy, Params, Result};

fn main() -> Result<()> {
    let acc = Accuracy::default();
    for &(p, q) in &[(2.0, 2.0), (2.0, 4.0), (3.0, 3.0)] {
        let pr = Params::new(p, q)?;
        let co = series_coeffs(pr);
        println!("p = {p}, q = {q}: c1 = {:.12}, c2 = {:.12}", co.c1, co.c2);

        let mut x = 0.4;
        let mut prev: Option<f64> = None;
        while x > 0.04 {
            let truth = sin_pq(x, pr, &acc)?;
            let approx = series3(x, pr);
            let r = (truth - approx).abs();
            let ratio = prev.map(|p0| p0 / r.max(f64::MIN_POSITIVE));
            match ratio {
                Some(rt) => println!("  x = {x:>6.4}: |remainder| = {r:.3e}  (decay {rt:>8.1})"),
                None => println!("  x = {x:>6.4}: |remainder| = {r:.3e}"),
            }
            prev = Some(r);
            x *= 0.5;
        }
        println!("  expected decay per halving ~ 2^(3q+1) = {:.1}", 2f64.powf(3.0 * q + 1.0));
        println!();
    }
    Ok(())
}
