//! Continuum correlation density x_{εs,np}: its threshold value, decay with
//! energy, integrated contribution x_c, and the exponential suppression
//! model Φ(ε).
//!
//! Run with: cargo run --example continuum_correlation

use photocorr::hydrogenic::{phi_suppression, x_c_coulomb, PStateReference};

fn main() -> photocorr::Result<()> {
    let reference = PStateReference::new(1.0, 2)?;
    let i_z = 0.125; // |E_2p| for Z = 1
    println!("{:>8} {:>12} {:>12}", "eps", "x_eps", "Phi(eps)");
    for eps in [1e-4, 0.01, 0.1, 0.5, 1.0, 5.0, 30.0] {
        println!(
            "{eps:>8.4} {:>12.6} {:>12.6}",
            reference.x_continuum(eps)?,
            phi_suppression(eps, i_z)?
        );
    }
    println!();
    println!("integrated x_c(2p) = {:.4}", x_c_coulomb(2)?);
    println!("integrated x_c(3p) = {:.4}", x_c_coulomb(3)?);
    Ok(())
}
