//! Quantum-defect breakdown for the bundled atoms: the discrete-tail,
//! continuum, and total relative correlation (x_d, x_c, x_ph) per ionized
//! np state.
//!
//! Run with: cargo run --example defect_breakdown

use photocorr::atomdata::builtin_dataset;

fn main() -> photocorr::Result<()> {
    println!("{:>3} {:>4} {:>2} {:>7} {:>7} {:>7}", "Z", "sym", "n", "x_d", "x_c", "x_ph");
    for atom in builtin_dataset() {
        for n in atom.p_state_ns() {
            let b = atom.breakdown(n)?;
            println!(
                "{:>3} {:>4} {n:>2} {:>7.3} {:>7.3} {:>7.3}",
                atom.z, atom.symbol, b.x_d, b.x_c, b.x_ph
            );
        }
    }
    Ok(())
}
