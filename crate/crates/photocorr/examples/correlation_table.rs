//! Pure-Coulomb relative correlation factors x_{n's,np}: the discrete table
//! for np = 2p and 3p, the n'⁻³ falloff, and the extrapolated level-density
//! constant C = lim n'³ x.
//!
//! Run with: cargo run --example correlation_table

use photocorr::hydrogenic::{coulomb_limit_c, x_ratio_coulomb};

fn main() -> photocorr::Result<()> {
    println!("{:>4} {:>12} {:>12} {:>12}", "n'", "x_{n's,2p}", "x_{n's,3p}", "n'^3 x_2p");
    for n_prime in 1..=10u32 {
        let x2 = x_ratio_coulomb(n_prime, 2)?;
        let x3 = x_ratio_coulomb(n_prime, 3)?;
        println!(
            "{n_prime:>4} {x2:>12.6} {x3:>12.6} {:>12.6}",
            (n_prime as f64).powi(3) * x2
        );
    }
    println!();
    println!("extrapolated C(2p) = {:.5}", coulomb_limit_c(2)?);
    println!("extrapolated C(3p) = {:.5}", coulomb_limit_c(3)?);
    Ok(())
}
