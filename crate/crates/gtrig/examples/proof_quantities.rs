//! The auxiliary functions driving the proof of the lower bound.
//!
//! With S = sin_{p,q}, C = cos_{p,q}, a = π_{p,q}, the argument rests on
//!
//!   f(x) = x²(x + S)/(x − S)     and     g(x) = x + S − x²(1 + C)/S,
//!
//! linked by the derivative relation −(x − S)²/(2xS)·f′ = g.  The bound
//! sin_{p,q}x/x ≥ (a² − x²)/(a² + x²) on (0, a) is equivalent to
//! f(x) ≥ f(a) = a², so it holds as soon as f decreases, which in turn
//! follows from g > 0.  The curvature condition s4 = S′² − S″S ≥ 1
//! certifies g > 0 when p, q ≥ 2.
//!
//! Near x = 0 the denominator x − S ~ x^{q+1}/(p(q+1)) is all
//! cancellation, so `proof_quantities` switches to a series tail there;
//! at x = a it produces the limits f = a², g = a exactly.
//!
//! Run with: `cargo run --example proof_quantities`

use gtrig::{pi_pq, proof_quantities, Accuracy, Params, Result};

fn main() -> Result<()> {
    let acc = Accuracy::default();
    let pr = Params::new(3.0, 3.0)?;
    let a = pi_pq(pr);

    println!("p = 3, q = 3, a = pi_pq = {a:.15}, a^2 = {:.15}", a * a);
    println!();
    println!("{:>10} {:>22} {:>18} {:>14}", "x", "f", "g", "s4");
    for &x in &[1e-8, 0.01, 0.1, 0.5, 1.2, 0.5 * a, 2.0, a - 0.01, a] {
        let pq = proof_quantities(x, pr, &acc)?;
        match pq.s4 {
            Some(s4) => println!("{x:>10.6} {:>22.10} {:>18.12} {s4:>14.9}", pq.f, pq.g),
            None => println!("{x:>10.6} {:>22.10} {:>18.12} {:>14}", pq.f, pq.g, "excluded"),
        }
    }

    println!();
    println!("f decreases to a^2 and g stays positive, so the bound holds;");
    println!("s4 is skipped at x = a/2 for p > 2, where S\u{2033} jumps.");
    Ok(())
}
