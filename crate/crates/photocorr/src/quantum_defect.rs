//! Quantum-defect model of the unoccupied discrete spectrum and the
//! continuum threshold: produces the relative-correlation breakdown
//! (x_d, x_c, x_ph) for one atom and one ionized np state.

use crate::error::{Error, Result};
use crate::numerics::sum_tail_cubes;

/// 0.5 hartree = 13.6 eV, the Rydberg unit used by the threshold formulas.
pub const I0_HARTREE: f64 = 0.5;

/// Quantum-defect description of one atom's s-state series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DefectModel {
    /// Defect of the highest occupied s state.
    pub delta_h: f64,
    /// Asymptotic defect shared by all unoccupied levels.
    pub delta_inf: f64,
    /// Principal quantum number of the highest occupied s state.
    pub n_h: u32,
    /// Nuclear charge.
    pub z: f64,
}

impl DefectModel {
    pub fn new(delta_h: f64, delta_inf: f64, n_h: u32, z: f64) -> Result<Self> {
        let first_free = n_h as f64 + 1.0 - delta_inf;
        if first_free <= 0.0 {
            return Err(Error::domain(format!(
                "defect model pole: n_h + 1 - delta_inf = {first_free} must be positive"
            )));
        }
        Ok(DefectModel {
            delta_h,
            delta_inf,
            n_h,
            z,
        })
    }
}

/// The triple (x_d, x_c, x_ph) for one atom/state, optionally paired with a
/// direct-summation comparison value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationBreakdown {
    pub x_d: f64,
    pub x_c: f64,
    pub x_ph: f64,
    pub x_direct: Option<f64>,
}

/// Invert E = −ν/(2(n−Δ)²) (ν = 1 hartree) for the defect Δ.
pub fn defect_from_binding(e: f64, n: u32) -> Result<f64> {
    if e >= 0.0 || !e.is_finite() {
        return Err(Error::domain(format!(
            "defect_from_binding requires E < 0, got {e}"
        )));
    }
    Ok(n as f64 - 1.0 / (2.0 * e.abs()).sqrt())
}

/// Invert the level-density normalization N² = 4Z·dE/dn = 4Zν/(n−Δ)³.
pub fn defect_from_normalization(n2: f64, z: f64, n: u32) -> Result<f64> {
    if n2 <= 0.0 || !n2.is_finite() {
        return Err(Error::domain(format!(
            "defect_from_normalization requires N² > 0, got {n2}"
        )));
    }
    Ok(n as f64 - (4.0 * z / n2).cbrt())
}

/// Relative correlation factor between defect levels:
/// x = ((n − Δ_n)/(n' − Δ))³ with the defect derivative neglected and the
/// unoccupied-level defect fixed at the asymptotic value.
pub fn x_ratio_qd(model: &DefectModel, n_prime: u32, n: u32, delta_n: f64) -> Result<f64> {
    let denom = n_prime as f64 - model.delta_inf;
    if denom <= 0.0 {
        return Err(Error::domain(format!(
            "x_ratio_qd pole: n' - delta = {denom} must be positive"
        )));
    }
    Ok(((n as f64 - delta_n) / denom).powi(3))
}

/// Discrete-tail contribution x_d = (n − Δ_n)³ Σ_{n* ≥ n_h+1} (n* − Δ)⁻³,
/// evaluated with the polygamma tail formula; always positive.
pub fn x_d(model: &DefectModel, n: u32, delta_n: f64) -> Result<f64> {
    let a = model.n_h as f64 + 1.0 - model.delta_inf;
    if a <= 0.0 {
        return Err(Error::domain(format!(
            "x_d pole: n_h + 1 - delta = {a} must be positive"
        )));
    }
    Ok((n as f64 - delta_n).powi(3) * sum_tail_cubes(a, 0)?)
}

/// Threshold density of the relative correlation (per hartree):
/// x_{0s,np} = 4Z·I₀/N²_{ns}, the continuum continuation of the n'⁻³ law.
pub fn x_threshold(n2_ns: f64, z: f64) -> Result<f64> {
    if n2_ns <= 0.0 {
        return Err(Error::domain(format!(
            "x_threshold requires N² > 0, got {n2_ns}"
        )));
    }
    Ok(4.0 * z * I0_HARTREE / n2_ns)
}

/// Rectangle estimate of the continuum contribution:
/// x_c ≈ x_threshold × |E_np|, the threshold density held constant up to
/// the np binding energy.
pub fn x_c_estimate(n2_ns: f64, z: f64, e_np: f64) -> Result<f64> {
    if e_np >= 0.0 {
        return Err(Error::domain(format!(
            "x_c_estimate requires E_np < 0, got {e_np}"
        )));
    }
    Ok(x_threshold(n2_ns, z)? * e_np.abs())
}

/// Full breakdown for one atom: x_ph = −x_d − x_c.
pub fn x_ph(
    model: &DefectModel,
    n: u32,
    delta_n: f64,
    n2_ns: f64,
    e_np: f64,
) -> Result<CorrelationBreakdown> {
    let xd = x_d(model, n, delta_n)?;
    let xc = x_c_estimate(n2_ns, model.z, e_np)?;
    Ok(CorrelationBreakdown {
        x_d: xd,
        x_c: xc,
        x_ph: -xd - xc,
        x_direct: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn binding_defect_hydrogen() {
        assert_relative_eq!(defect_from_binding(-0.5, 1).unwrap(), 0.0, epsilon = 1e-12);
        assert_relative_eq!(defect_from_binding(-0.125, 3).unwrap(), 1.0, epsilon = 1e-12);
        assert!(defect_from_binding(0.1, 1).is_err());
    }

    #[test]
    fn binding_defect_round_trip() {
        for i in 0..100 {
            let n = 2 + (i % 5) as u32;
            let delta = 0.01 * i as f64 % (n as f64 - 0.5);
            let e = -0.5 / (n as f64 - delta).powi(2);
            let back = defect_from_binding(e, n).unwrap();
            assert_relative_eq!(back, delta, epsilon = 1e-12);
        }
    }

    #[test]
    fn normalization_defect_coulomb_self_consistency() {
        for n in 1..=6u32 {
            let n2 = 4.0 / (n as f64).powi(3);
            assert_relative_eq!(
                defect_from_normalization(n2, 1.0, n).unwrap(),
                0.0,
                epsilon = 1e-12
            );
        }
        assert!(defect_from_normalization(-1.0, 1.0, 2).is_err());
    }

    #[test]
    fn x_ratio_coulomb_limits() {
        let m = DefectModel::new(0.0, 0.0, 2, 1.0).unwrap();
        assert_relative_eq!(x_ratio_qd(&m, 4, 2, 0.0).unwrap(), 0.125, epsilon = 1e-14);
        let m2 = DefectModel::new(0.5, 0.5, 3, 1.0).unwrap();
        assert_relative_eq!(x_ratio_qd(&m2, 3, 3, 0.5).unwrap(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn x_d_matches_brute_force() {
        let m = DefectModel::new(1.44, 1.27, 2, 10.0).unwrap();
        let delta_n = 1.4828;
        let xd = x_d(&m, 2, delta_n).unwrap();
        // brute-force series oracle
        let mut s = 0.0;
        for k in (0..1_000_000u64).rev() {
            s += 1.0 / (k as f64 + 3.0 - 1.27).powi(3);
        }
        let x0 = 1_000_000.0 + 3.0 - 1.27;
        s += 1.0 / (2.0 * x0 * x0); // integral tail
        let brute = (2.0f64 - delta_n).powi(3) * s;
        assert_relative_eq!(xd, brute, max_relative = 1e-10);
        assert!(xd > 0.0);
    }

    #[test]
    fn x_d_monotone_in_delta() {
        let mut prev = 0.0;
        for i in 0..20 {
            let delta = 0.1 * i as f64;
            let m = DefectModel::new(delta, delta, 3, 10.0).unwrap();
            let xd = x_d(&m, 2, 0.5).unwrap();
            assert!(xd > prev, "x_d not increasing at delta={delta}");
            prev = xd;
        }
    }

    #[test]
    fn threshold_scaling() {
        let a = x_threshold(100.0, 10.0).unwrap();
        let b = x_threshold(200.0, 10.0).unwrap();
        assert_relative_eq!(a, 2.0 * b, epsilon = 1e-14);
        // Coulomb consistency: N² = 4Z⁴/n³ gives x_0s = I0·n³/Z³ per hartree,
        // which equals the n'³-law density lim n'³x/(2 I0) when the limit
        // constant is expressed in threshold units.
        let z: f64 = 2.0;
        let n = 2u32;
        let n2 = 4.0 * z.powi(4) / (n as f64).powi(3);
        let thr = x_threshold(n2, z).unwrap();
        assert_relative_eq!(thr, I0_HARTREE * 8.0 / z.powi(3), max_relative = 1e-12);
    }

    #[test]
    fn x_c_estimate_vanishes_with_binding() {
        let v = x_c_estimate(100.0, 10.0, -1e-12).unwrap();
        assert!(v < 1e-10);
        assert!(x_c_estimate(100.0, 10.0, 0.1).is_err());
    }

    #[test]
    fn x_ph_is_negative_sum() {
        let m = DefectModel::new(1.44, 1.27, 2, 10.0).unwrap();
        let b = x_ph(&m, 2, 1.4828, 227.77, -0.79722).unwrap();
        assert!(b.x_d > 0.0 && b.x_c > 0.0);
        assert_relative_eq!(b.x_ph, -b.x_d - b.x_c, epsilon = 1e-14);
        // Table-pattern check for this input set
        assert!((b.x_d - 0.04).abs() < 0.01);
        assert!((b.x_c - 0.07).abs() < 0.01);
        assert!((b.x_ph + 0.11).abs() < 0.02);
    }
}
