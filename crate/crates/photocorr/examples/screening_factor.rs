//! Screening suppression of the inter-shell (1s) correlation term: the η
//! factor from effective charges, its linearized form, and the resulting
//! two-term physical correlation x_ph = 1 + x^C_{1s,2p}·η.
//!
//! Run with: cargo run --example screening_factor

use photocorr::hydrogenic::x_ratio_coulomb;
use photocorr::screening::{
    eta, eta_by_quadrature, eta_linearized, x_ph_two_term, EffectiveCharges, DELTA_1S, DELTA_2P,
    DELTA_2S,
};

fn main() -> photocorr::Result<()> {
    let x1s = x_ratio_coulomb(1, 2)?;
    println!("Coulomb x_1s,2p = {x1s:.5}");
    println!();
    println!("{:>4} {:>8} {:>8} {:>8} {:>8}", "Z", "eta", "eta(qd)", "eta lin", "x_ph");
    for z in [7.0, 10.0, 14.0, 18.0, 36.0] {
        let ch = EffectiveCharges::from_default_deltas(z)?;
        let e = eta(&ch)?;
        let eq = eta_by_quadrature(&ch)?;
        let lin = eta_linearized(z, DELTA_1S, DELTA_2S, DELTA_2P);
        println!("{z:>4} {e:>8.4} {eq:>8.4} {lin:>8.4} {:>8.4}", x_ph_two_term(x1s, e));
    }
    Ok(())
}
