//! Internal unit system and boundary conversions.
//!
//! All physics runs in micrometres and femtoseconds: wavelengths in µm,
//! angular frequencies in rad/fs, wavevectors in rad/µm and reciprocal
//! group velocities in fs/µm. These keep phase-mismatch and group-delay
//! magnitudes near unity. External interfaces (CLI, data files) speak nm
//! and mm and convert here.

use std::f64::consts::TAU;

/// Speed of light in µm/fs.
pub const C_UM_PER_FS: f64 = 0.299792458;

/// Angular frequency (rad/fs) of a vacuum wavelength in µm.
pub fn omega_from_lambda_um(lambda_um: f64) -> f64 {
    TAU * C_UM_PER_FS / lambda_um
}

/// Vacuum wavelength (µm) of an angular frequency in rad/fs.
pub fn lambda_um_from_omega(omega: f64) -> f64 {
    TAU * C_UM_PER_FS / omega
}

pub fn um_from_nm(nm: f64) -> f64 {
    nm * 1e-3
}

pub fn nm_from_um(um: f64) -> f64 {
    um * 1e3
}

pub fn um_from_mm(mm: f64) -> f64 {
    mm * 1e3
}

pub fn mm_from_um(um: f64) -> f64 {
    um * 1e-3
}

/// fs/µm → fs/mm, the unit used for printed group-velocity tables.
pub fn fs_per_mm_from_fs_per_um(v: f64) -> f64 {
    v * 1e3
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_lambda_roundtrip() {
        let lambda = 0.8;
        let omega = omega_from_lambda_um(lambda);
        assert!((lambda_um_from_omega(omega) - lambda).abs() < 1e-15);
        // 800 nm is about 2.355 rad/fs
        assert!((omega - 2.354_619).abs() < 1e-5);
    }
}
