//! Energy-normalized Coulomb continuum s waves: the computed origin value
//! N(ε) against the exact normalization N² = 4Z/(1 − e^{−2πZ/k}).
//!
//! Run with: cargo run --example continuum_normalization

use photocorr::hydrogenic::continuum_radial_s;

fn main() -> photocorr::Result<()> {
    println!("{:>4} {:>8} {:>14} {:>14} {:>10}", "Z", "eps", "N^2 computed", "N^2 exact", "rel err");
    for z in [1.0f64, 5.0] {
        for eps in [1e-3, 0.05, 0.5, 2.0, 10.0, 40.0] {
            let f = continuum_radial_s(z, eps)?;
            let n2 = f.origin_value() * f.origin_value();
            let k = (2.0 * eps).sqrt();
            let exact = 4.0 * z / (1.0 - (-2.0 * std::f64::consts::PI * z / k).exp());
            println!(
                "{z:>4} {eps:>8.3} {n2:>14.8} {exact:>14.8} {:>10.2e}",
                ((n2 - exact) / exact).abs()
            );
        }
    }
    Ok(())
}
