//! High-momentum-transfer tip integral X(Q): its Q⁻⁴ asymptote, the bound
//! reduced amplitudes, and the mechanism classification for double-electron
//! transitions.
//!
//! Run with: cargo run --example tip_amplitude

use photocorr::observables::{
    classify_mechanism, ipa_reduced_amplitude, tc2_reduced_amplitude, xq_analytic,
};

fn main() -> photocorr::Result<()> {
    println!("{:>6} {:>14} {:>12}", "Q", "|X(Q)|", "|X| Q^4");
    let mut q = 10.0;
    while q <= 200.0 {
        let x = xq_analytic(q, 1e-12, 1.0)?;
        println!("{q:>6.1} {:>14.6e} {:>12.6}", x.norm(), x.norm() * q.powi(4));
        q *= 2.0;
    }
    println!();
    let p = 40.0;
    println!(
        "reduced amplitudes at P = {p}: independent-particle {:.3e}, correlation tip {:.3e}",
        ipa_reduced_amplitude(1.0, 1.0, p).value,
        tc2_reduced_amplitude(1.0, 1.0, p).value
    );
    println!();
    println!("mechanism classification (l, l', l*):");
    for (l, lp, ls) in [(0u32, 0u32, 1u32), (2, 0, 0), (1, 0, 0), (0, 0, 0), (1, 1, 1)] {
        println!("  ({l}, {lp}, {ls}) -> {:?}", classify_mechanism(l, lp, ls));
    }
    Ok(())
}
