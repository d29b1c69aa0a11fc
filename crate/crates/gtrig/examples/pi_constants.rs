//! The generalized circle constant π_{p,q} = (2/q)·B(1/q, 1 − 1/p).
//!
//! π_{p,q} is the half period of sin_{p,q} and the first Dirichlet
//! eigenvalue scale of the one-dimensional (p, q)-Laplacian.  A few
//! landmarks: π_{2,2} is the classical π; along q = 2 the constant grows
//! toward 4 as p → ∞; and the conjugate-exponent families are tied by the
//! exact halving relation π_{2,q} = 2^{2/q − 1}·π_{q*,q} with
//! q* = q/(q − 1).
//!
//! Run with: `cargo run --example pi_constants`

use gtrig::{pi_pq, Params};

fn main() {
    println!("{:>6} {:>6} {:>22}", "p", "q", "pi_pq");
    for &(p, q) in &[
        (2.0, 2.0),
        (3.0, 3.0),
        (2.0, 4.0),
        (4.0, 2.0),
        (5.0, 2.0),
        (1.5, 3.0),
        (1.2, 6.0),
        (10.0, 10.0),
        (100.0, 2.0),
    ] {
        let pr = Params::new(p, q).unwrap();
        println!("{:>6} {:>6} {:>22.16}", p, q, pi_pq(pr));
    }

    println!();
    println!("halving relation pi_(2,q) = 2^(2/q-1) * pi_(q*,q):");
    for &q in &[2.0, 3.0, 4.0, 6.0] {
        let qs = q / (q - 1.0);
        let outer = pi_pq(Params::new(2.0, q).unwrap());
        let inner = pi_pq(Params::new(qs, q).unwrap());
        let defect = (outer - 2f64.powf(2.0 / q - 1.0) * inner).abs();
        println!("  q = {q}: pi_(2,q) = {outer:.15}, defect = {defect:.3e}");
    }
}
