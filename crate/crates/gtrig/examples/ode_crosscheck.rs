//! Independent cross-check of sin_{p,q} against its defining ODE.
//!
//! u = sin_{p,q} solves the initial value problem
//!
//!   (|u′|^{p−2} u′)′ + (q − 1)/(p* − 1) · |u|^{q−2} u = 0,
//!   u(0) = 0, u′(0) = 1,
//!
//! whose first integral is the energy |u′|^p/p* + |u|^q/q* = 1/p*
//! (p* = p/(p−1), q* = q/(q−1)).  Integrating the ODE with a classical
//! Runge–Kutta scheme gives a reference path that never touches the
//! inverse-integral machinery, so agreement here validates both routes.
//!
//! Run with: `cargo run --example ode_crosscheck`

use gtrig::{pi_pq, sin_pq, solve_ivp, Accuracy, Params, Result};

fn main() -> Result<()> {
    let acc = Accuracy::default();
    for &(p, q) in &[(2.0, 2.0), (2.0, 4.0), (3.0, 3.0)] {
        let pr = Params::new(p, q)?;
        let a = pi_pq(pr);
        let path = solve_ivp(pr, a, a / 2000.0)?;

        let mut max_err = 0.0f64;
        for &(x, u, _du) in &path.samples {
            let s = sin_pq(x, pr, &acc)?;
            max_err = max_err.max((u - s).abs());
        }
        println!(
            "p = {p}, q = {q}: max |u - sin_pq| = {:.3e}, max energy defect = {:.3e}",
            max_err,
            path.max_energy_defect(pr)
        );
    }
    Ok(())
}
