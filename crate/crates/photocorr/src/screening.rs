//! Effective-charge (screened hydrogenic) evaluation of the two-term
//! physical correlation factor and the η suppression ratio.

use crate::error::{Error, Result};
use crate::hydrogenic::{bound_radial, overlap_s_p};

/// Effective charges Z_{nℓ} = Z − δ_{nℓ} for the K and L shells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveCharges {
    pub z: f64,
    pub z_1s: f64,
    pub z_2s: f64,
    pub z_2p: f64,
}

/// Default inner-screening constants δ_{1s}, δ_{2s}, δ_{2p} for atoms with
/// filled K and L shells.
pub const DELTA_1S: f64 = 0.35;
pub const DELTA_2S: f64 = 3.25;
pub const DELTA_2P: f64 = 4.75;

impl EffectiveCharges {
    pub fn new(z: f64, z_1s: f64, z_2s: f64, z_2p: f64) -> Result<Self> {
        for (name, v) in [("Z_1s", z_1s), ("Z_2s", z_2s), ("Z_2p", z_2p)] {
            if v <= 0.0 || v > z {
                return Err(Error::domain(format!(
                    "effective charge {name} = {v} outside (0, Z={z}]"
                )));
            }
        }
        if 3.0 * z_2s - z_2p <= 0.0 {
            return Err(Error::domain(format!(
                "3·Z_2s − Z_2p = {} must be positive",
                3.0 * z_2s - z_2p
            )));
        }
        Ok(EffectiveCharges { z, z_1s, z_2s, z_2p })
    }

    /// Charges from the default screening constants.
    pub fn from_default_deltas(z: f64) -> Result<Self> {
        EffectiveCharges::new(z, z - DELTA_1S, z - DELTA_2S, z - DELTA_2P)
    }
}

/// Screening suppression of the 1s correlation term relative to the pure
/// Coulomb field:
/// η = (Z₁s/Z₂s)³ (3Z/(2Z₁s+Z₂p))⁴ ((Z₂s+Z₂p)/2Z)⁵ · 2Z/(3Z₂s−Z₂p).
/// Equals 1 when every effective charge equals Z.
pub fn eta(ch: &EffectiveCharges) -> Result<f64> {
    let EffectiveCharges { z, z_1s, z_2s, z_2p } = *ch;
    let denom = 3.0 * z_2s - z_2p;
    if denom <= 0.0 {
        return Err(Error::domain("eta denominator 3·Z_2s − Z_2p must be positive"));
    }
    Ok((z_1s / z_2s).powi(3)
        * (3.0 * z / (2.0 * z_1s + z_2p)).powi(4)
        * ((z_2s + z_2p) / (2.0 * z)).powi(5)
        * 2.0
        * z
        / denom)
}

/// First-order expansion of η in the screening constants:
/// η ≈ 1 + (−δ₁s/3 − 5δ₂p/3 + 2δ₂s)/Z.
pub fn eta_linearized(z: f64, d1s: f64, d2s: f64, d2p: f64) -> f64 {
    1.0 + (-d1s / 3.0 - 5.0 * d2p / 3.0 + 2.0 * d2s) / z
}

/// Two-term physical correlation: x_ph = 1 + x^C_{1s,np}·η, the intra-shell
/// term plus the screened 1s term.
pub fn x_ph_two_term(x1s_coulomb: f64, eta_val: f64) -> f64 {
    1.0 + x1s_coulomb * eta_val
}

/// η recomputed as a ratio of mixed-charge quadrature overlaps, validating
/// the closed form: each x_{1s,2p} is N₁s·a_{1s,2p}/(N₂s·a_{2s,2p}) with the
/// bound functions taken at their effective charges.
pub fn eta_by_quadrature(ch: &EffectiveCharges) -> Result<f64> {
    let x_screened = x_1s_2p_mixed(ch.z_1s, ch.z_2s, ch.z_2p)?;
    let x_coulomb = x_1s_2p_mixed(ch.z, ch.z, ch.z)?;
    Ok(x_screened / x_coulomb)
}

fn x_1s_2p_mixed(z_1s: f64, z_2s: f64, z_2p: f64) -> Result<f64> {
    let f1s = bound_radial(z_1s, 1, 0)?;
    let f2s = bound_radial(z_2s, 2, 0)?;
    let f2p = bound_radial(z_2p, 2, 1)?;
    let a1 = overlap_s_p(&f1s, &f2p)?.value;
    let a2 = overlap_s_p(&f2s, &f2p)?.value;
    Ok(f1s.origin_value() * a1 / (f2s.origin_value() * a2))
}
