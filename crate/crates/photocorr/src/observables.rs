//! Asymptotic reduced amplitudes, cross-section correction factors, the
//! high-momentum-transfer tip integral X(Q), and the ionization-excitation
//! mechanism classifier.

use crate::error::{Error, Result};
use crate::numerics::EULER_GAMMA;
use num_complex::Complex64;

/// A scalar amplitude with the kinematic factor (e·P)/m divided out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedAmplitude {
    /// Magnitude multiplying (e·P)/m, in atomic units.
    pub value: f64,
    /// Photoelectron momentum (a.u.) the amplitude was evaluated at.
    pub momentum: f64,
    /// Which asymptotic form this realizes.
    pub description: &'static str,
}

/// Which mechanism dominates the asymptotics of ionization with excitation,
/// as a function of the removed electrons' angular momenta (ℓ, ℓ') and the
/// excited electron's ℓ*.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MechanismClass {
    /// ℓ* matches neither removed electron: only correlations contribute.
    CorrelationOnly,
    /// Correlation term falls slower with energy than shake-up.
    CorrelationDominates,
    /// Both terms scale alike; the outcome rides on a small overlap.
    InterplayOverlapSmall,
    /// Shake-up term dominates the asymptotics.
    ShakeupDominates,
}

/// Independent-particle asymptotic amplitude: √(4π)·Z·N_r/P⁴ times (e·P)/m.
pub fn ipa_reduced_amplitude(z: f64, n_r: f64, p: f64) -> ReducedAmplitude {
    ReducedAmplitude {
        value: (4.0 * std::f64::consts::PI).sqrt() * z * n_r / p.powi(4),
        momentum: p,
        description: "independent-particle s-state asymptote",
    }
}

/// Tip-region correlation amplitude: 6√(3π)·N_np·Z/P⁴ times (e·P)/m.
pub fn tc2_reduced_amplitude(n_np: f64, z: f64, p: f64) -> ReducedAmplitude {
    ReducedAmplitude {
        value: 6.0 * (3.0 * std::f64::consts::PI).sqrt() * n_np * z / p.powi(4),
        momentum: p,
        description: "high-Q correlation tip amplitude",
    }
}

/// Amplitude correction: F = F⁰·(1 + (N_ns/(2N_np))·x_ph).
pub fn amplitude_correction_factor(n_ns: f64, n_np: f64, x_ph: f64) -> Result<f64> {
    if n_np == 0.0 {
        return Err(Error::domain("amplitude correction requires N_np != 0"));
    }
    Ok(1.0 + n_ns / (2.0 * n_np) * x_ph)
}

/// Cross-section correction: σ = σ⁰·(1 + (N_ns/(3N_np))·x_ph).
pub fn cross_section_factor(n_ns: f64, n_np: f64, x_ph: f64) -> Result<f64> {
    if n_np == 0.0 {
        return Err(Error::domain("cross-section factor requires N_np != 0"));
    }
    Ok(1.0 + n_ns / (3.0 * n_np) * x_ph)
}

/// Closed form of the tip integral X(Q) = ∫dV e^{−iQz} ln(r−z) ψ_i(r) for a
/// p_z-like state with radial part N·r·e^{−λr}.
///
/// In parabolic coordinates the integral separates, giving
/// X = −i(√3·√π·N/2)·D_Q D_λ J with J = −4(γ_E + ln((λ−iQ)/2))/(λ²+Q²);
/// both derivatives are applied analytically here. λ = 0 is the physical
/// limit and yields the purely real 6√(3π)·N/Q⁴ asymptote.
pub fn xq_analytic(q: f64, lambda: f64, n_np: f64) -> Result<Complex64> {
    if q <= 0.0 || lambda < 0.0 {
        return Err(Error::domain(format!(
            "xq_analytic requires Q > 0 and lambda >= 0, got Q={q}, lambda={lambda}"
        )));
    }
    let s = Complex64::new(lambda, -q);
    let a = lambda * lambda + q * q;
    let l = EULER_GAMMA + (s / 2.0).ln();
    let i = Complex64::i();
    let d = -4.0 * i / (s * s * a) + 8.0 * q / (s * a * a) - 8.0 * i * lambda / (s * a * a)
        - 32.0 * lambda * q * l / (a * a * a);
    let prefactor = -i * 3.0f64.sqrt() * std::f64::consts::PI.sqrt() * n_np / 2.0;
    Ok(prefactor * d)
}

/// Classify which mechanism controls the asymptotics of double-electron
/// response: removing electrons with angular momenta ℓ and ℓ' while exciting
/// a spectator into ℓ*. The rule set is symmetric under exchanging the two
/// removed electrons.
pub fn classify_mechanism(l: u32, l_prime: u32, l_star: u32) -> MechanismClass {
    if l_star != l && l_star != l_prime {
        return MechanismClass::CorrelationOnly;
    }
    // Put the electron matching ℓ* in the "excitation partner" role.
    let (ionized, partner) = if l_star == l_prime { (l, l_prime) } else { (l_prime, l) };
    let li = ionized as i64;
    let le = partner as i64;
    if le < li - 1 {
        MechanismClass::CorrelationDominates
    } else if le == li - 1 {
        MechanismClass::InterplayOverlapSmall
    } else {
        MechanismClass::ShakeupDominates
    }
}
