//! Amplitude and cross-section correction factors for the bundled atoms,
//! contrasting the intra-shell-only estimate (x = 1) with the full x_ph.
//!
//! Run with: cargo run --example cross_sections

use photocorr::atomdata::builtin_dataset;
use photocorr::observables::{amplitude_correction_factor, cross_section_factor};

fn main() -> photocorr::Result<()> {
    println!(
        "{:>3} {:>4} {:>2} {:>6} {:>12} {:>12}",
        "Z", "sym", "n", "ratio", "intra-shell", "full x_ph"
    );
    for atom in builtin_dataset() {
        for n in atom.p_state_ns() {
            let Some(&ratio) = atom.norm_ratio.get(&n) else { continue };
            let x_ph = atom.breakdown(n)?.x_ph;
            let intra = cross_section_factor(ratio, 1.0, 1.0)?;
            let full = cross_section_factor(ratio, 1.0, x_ph)?;
            let amp = amplitude_correction_factor(ratio, 1.0, x_ph)?;
            println!(
                "{:>3} {:>4} {n:>2} {ratio:>6.2} {:>+11.1}% {:>+11.1}%   (amplitude factor {amp:.4})",
                atom.z,
                atom.symbol,
                (intra - 1.0) * 100.0,
                (full - 1.0) * 100.0
            );
        }
    }
    Ok(())
}
