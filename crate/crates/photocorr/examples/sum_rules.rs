//! Numerical verification of the closure (Σa² + ∫a²dε = 1) and cancellation
//! (Σx + ∫x dε = 0) identities, with residuals shrinking under cutoff
//! refinement.
//!
//! Run with: cargo run --example sum_rules

use photocorr::sumrules::{partition_check, verify_cancellation, verify_closure};

fn main() -> photocorr::Result<()> {
    println!("closure, Z=1, n=2:");
    println!("{:>6} {:>8} {:>12} {:>12} {:>10}", "n_max", "eps_max", "bound", "continuum", "residual");
    for (n_max, eps_max) in [(8u32, 5.0), (14, 10.0), (20, 20.0)] {
        let r = verify_closure(1.0, 2, n_max, eps_max)?;
        println!(
            "{n_max:>6} {eps_max:>8.1} {:>12.6} {:>12.6} {:>10.2e}",
            r.bound_sum, r.continuum_integral.value, r.residual
        );
    }
    println!();
    println!("cancellation, Z=1, n=2:");
    for (n_max, eps_max) in [(10u32, 20.0), (20, 40.0), (30, 60.0)] {
        let r = verify_cancellation(1.0, 2, n_max, eps_max)?;
        println!(
            "{n_max:>6} {eps_max:>8.1} {:>12.6} {:>12.6} {:>10.2e}",
            r.bound_sum, r.continuum_integral.value, r.residual
        );
    }
    println!();
    println!(
        "amplitude partition residual (P = 50 a.u.): {:.2e}",
        partition_check(1.0, 2, 50.0)?
    );
    Ok(())
}
