//! Refractive index, wavevector and group-delay computations for uniaxial
//! crystals, plus the degenerate collinear type-II phasematching angle
//! solver.
//!
//! All operations are pure functions of immutable [`Material`] data.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::material::Material;
use crate::units::{lambda_um_from_omega, omega_from_lambda_um, C_UM_PER_FS};

/// Which index curve a field sees.
///
/// `Extraordinary { theta }` is the angle-tuned index of an extraordinary
/// wave propagating at `theta` to the optic axis:
///
/// ```text
/// 1/n(θ)² = cos²θ/n_o² + sin²θ/n_e²
/// ```
///
/// θ = 0 collapses to the ordinary index, θ = π/2 to the principal
/// extraordinary index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolarizationRole {
    Ordinary,
    Extraordinary { theta: f64 },
}

impl PolarizationRole {
    /// Principal extraordinary index (propagation normal to the optic axis),
    /// the case seen in spacer plates.
    pub const PRINCIPAL_E: Self = Self::Extraordinary { theta: FRAC_PI_2 };
}

fn check_theta(theta: f64) {
    assert!(
        (0.0..=FRAC_PI_2 + 1e-12).contains(&theta),
        "propagation angle {theta} rad outside [0, pi/2]"
    );
}

/// Refractive index at vacuum wavelength λ (µm).
pub fn refractive_index(mat: &Material, role: PolarizationRole, lambda_um: f64) -> Result<f64> {
    mat.check_range(lambda_um)?;
    Ok(index_unchecked(mat, role, lambda_um))
}

fn index_unchecked(mat: &Material, role: PolarizationRole, lambda_um: f64) -> f64 {
    match role {
        PolarizationRole::Ordinary => mat.ordinary.index(lambda_um),
        PolarizationRole::Extraordinary { theta } => {
            check_theta(theta);
            let (s, c) = theta.sin_cos();
            let inv = c * c / mat.ordinary.n_sq(lambda_um) + s * s / mat.extraordinary.n_sq(lambda_um);
            inv.sqrt().recip()
        }
    }
}

/// Wavevector magnitude k = n(ω)·ω/c in rad/µm, ω in rad/fs.
pub fn wavevector(mat: &Material, role: PolarizationRole, omega: f64) -> Result<f64> {
    let lambda = lambda_um_from_omega(omega);
    Ok(refractive_index(mat, role, lambda)? * omega / C_UM_PER_FS)
}

/// Reciprocal group velocity k′ = dk/dω in fs/µm, evaluated analytically
/// from the differentiated Sellmeier form: k′ = (n − λ·dn/dλ)/c.
pub fn reciprocal_group_velocity(
    mat: &Material,
    role: PolarizationRole,
    omega: f64,
) -> Result<f64> {
    let lambda = lambda_um_from_omega(omega);
    mat.check_range(lambda)?;
    let group_index = match role {
        PolarizationRole::Ordinary => {
            mat.ordinary.index(lambda) - lambda * mat.ordinary.dn_dlambda(lambda)
        }
        PolarizationRole::Extraordinary { theta } => {
            check_theta(theta);
            let (s, c) = theta.sin_cos();
            let (s2, c2) = (s * s, c * c);
            let no2 = mat.ordinary.n_sq(lambda);
            let ne2 = mat.extraordinary.n_sq(lambda);
            let inv = c2 / no2 + s2 / ne2;
            let n = inv.sqrt().recip();
            // d(1/n²)/dλ, then dn/dλ = −n³/2 · d(1/n²)/dλ
            let dinv = -c2 * mat.ordinary.dn_sq_dlambda(lambda) / (no2 * no2)
                - s2 * mat.extraordinary.dn_sq_dlambda(lambda) / (ne2 * ne2);
            let dn = -0.5 * n * n * n * dinv;
            n - lambda * dn
        }
    };
    Ok(group_index / C_UM_PER_FS)
}

/// Collinear degenerate type-II phase mismatch at pump frequency 2ω₀:
/// Δk⁽⁰⁾(θ) = k_e(θ, 2ω₀) − k_e(θ, ω₀) − k_o(ω₀), in rad/µm.
pub fn type_ii_mismatch_at(mat: &Material, theta: f64, omega0: f64) -> Result<f64> {
    let role_e = PolarizationRole::Extraordinary { theta };
    Ok(wavevector(mat, role_e, 2.0 * omega0)?
        - wavevector(mat, role_e, omega0)?
        - wavevector(mat, PolarizationRole::Ordinary, omega0)?)
}

/// Cut angle for degenerate collinear type-II phasematching with pump
/// wavelength λ_p (µm): the root of Δk⁽⁰⁾(θ) = 0 on (0, π/2).
///
/// Bisection on a sign bracket, θ tolerance 1e−12 rad; the returned root
/// satisfies |Δk⁽⁰⁾| < 1e−9 rad/µm.
pub fn phasematch_angle(mat: &Material, pump_lambda_um: f64) -> Result<f64> {
    phasematch_angle_with_tol(mat, pump_lambda_um, 1e-12)
}

/// Same as [`phasematch_angle`] with an explicit θ bisection tolerance.
pub fn phasematch_angle_with_tol(
    mat: &Material,
    pump_lambda_um: f64,
    theta_tol: f64,
) -> Result<f64> {
    let omega0 = omega_from_lambda_um(pump_lambda_um) / 2.0;
    let mut lo = 1e-9;
    let mut hi = FRAC_PI_2 - 1e-9;
    let f_lo = type_ii_mismatch_at(mat, lo, omega0)?;
    let f_hi = type_ii_mismatch_at(mat, hi, omega0)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoRootInBracket);
    }
    let mut g_lo = f_lo;
    while hi - lo > theta_tol {
        let mid = 0.5 * (lo + hi);
        let g_mid = type_ii_mismatch_at(mat, mid, omega0)?;
        if g_mid == 0.0 {
            return Ok(mid);
        }
        if g_mid.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    let theta = 0.5 * (lo + hi);
    let residual = type_ii_mismatch_at(mat, theta, omega0)?;
    debug_assert!(
        residual.abs() < 1e-9,
        "phasematch root residual {residual} rad/um"
    );
    Ok(theta)
}
