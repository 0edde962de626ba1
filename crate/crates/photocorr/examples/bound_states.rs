//! Hydrogenic bound states: origin values, normalization, and the nuclear
//! cusp condition R'(0)/R(0) = −Z.
//!
//! Run with: cargo run --example bound_states

use photocorr::hydrogenic::bound_radial;

fn main() -> photocorr::Result<()> {
    println!("{:>3} {:>2} {:>2} {:>12} {:>12} {:>12} {:>10}", "Z", "n", "l", "R(0)", "exact R(0)", "norm", "cusp");
    for z in [1.0, 10.0] {
        for (n, ell) in [(1u32, 0u32), (2, 0), (2, 1), (3, 0), (3, 1)] {
            let f = bound_radial(z, n, ell)?;
            let norm = f.norm_squared()?.value;
            // s states start at 2(Z/n)^{3/2}; higher l vanish at the origin.
            let exact0 = if ell == 0 { 2.0 * (z / n as f64).powf(1.5) } else { 0.0 };
            let h = 1e-5 / z;
            let cusp = if ell == 0 {
                let r0 = f.eval(0.0);
                let d1 = (f.eval(h) - r0) / (h * r0);
                let d2 = (f.eval(h / 2.0) - r0) / (h / 2.0 * r0);
                2.0 * d2 - d1
            } else {
                f64::NAN
            };
            println!(
                "{z:>3} {n:>2} {ell:>2} {:>12.6} {exact0:>12.6} {norm:>12.9} {cusp:>10.4}",
                f.eval(0.0)
            );
        }
    }
    Ok(())
}
