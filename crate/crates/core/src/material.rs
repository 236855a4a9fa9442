//! Dispersion data for uniaxial birefringent crystals.
//!
//! Each material carries one Sellmeier coefficient set per principal axis,
//! a validity window, and the literature citation for the coefficients.
//! The shipped database (BBO, crystalline quartz, calcite) is embedded at
//! build time; user files with the same JSON schema can extend or override
//! it at runtime.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dispersion model for one principal axis,
///
/// ```text
/// n²(λ) = a + Σ bᵢ/(λ² − cᵢ)  +  Σ bⱼλ²/(λ² − cⱼ)  +  d·λ²      (λ in µm)
/// ```
///
/// The two term shapes cover the common published forms: Kato-style
/// `A + B/(λ²−C) + Dλ²` sets use `poles`, Ghosh-style sets use `rational`.
/// Coefficients are stored exactly as published so values can be checked
/// against the cited source digit for digit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sellmeier {
    /// Constant term of n².
    pub a: f64,
    /// `b/(λ² − c)` resonance terms as `[b, c]` pairs.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub poles: Vec<[f64; 2]>,
    /// `b·λ²/(λ² − c)` terms as `[b, c]` pairs.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rational: Vec<[f64; 2]>,
    /// Coefficient of the `λ²` term.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub lambda_sq: f64,
}

fn is_zero(x: &f64) -> bool {
    *x == 0.0
}

impl Sellmeier {
    /// n² at vacuum wavelength λ (µm). No range checking here; the owning
    /// [`Material`] enforces the validity window.
    pub fn n_sq(&self, lambda_um: f64) -> f64 {
        let l2 = lambda_um * lambda_um;
        let mut n2 = self.a + self.lambda_sq * l2;
        for [b, c] in &self.poles {
            n2 += b / (l2 - c);
        }
        for [b, c] in &self.rational {
            n2 += b * l2 / (l2 - c);
        }
        n2
    }

    /// d(n²)/dλ at λ (µm⁻¹), analytic.
    pub fn dn_sq_dlambda(&self, lambda_um: f64) -> f64 {
        let l2 = lambda_um * lambda_um;
        let mut d = 2.0 * self.lambda_sq * lambda_um;
        for [b, c] in &self.poles {
            let den = l2 - c;
            d += -2.0 * b * lambda_um / (den * den);
        }
        for [b, c] in &self.rational {
            let den = l2 - c;
            d += -2.0 * b * c * lambda_um / (den * den);
        }
        d
    }

    pub fn index(&self, lambda_um: f64) -> f64 {
        self.n_sq(lambda_um).sqrt()
    }

    /// dn/dλ (µm⁻¹), analytic.
    pub fn dn_dlambda(&self, lambda_um: f64) -> f64 {
        self.dn_sq_dlambda(lambda_um) / (2.0 * self.index(lambda_um))
    }
}

/// Sign of the uniaxial birefringence (n_e − n_o).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UniaxialSign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Material {
    #[serde(skip, default)]
    pub name: String,
    pub ordinary: Sellmeier,
    pub extraordinary: Sellmeier,
    /// Wavelength window (µm) the coefficient fit is valid over. Evaluation
    /// outside is an error, never extrapolation.
    pub valid_range_um: [f64; 2],
    pub uniaxial_sign: UniaxialSign,
    /// Citation for the coefficient set.
    pub source: String,
}

impl Material {
    pub fn check_range(&self, lambda_um: f64) -> Result<()> {
        let [min, max] = self.valid_range_um;
        if lambda_um < min || lambda_um > max || !lambda_um.is_finite() {
            return Err(Error::OutOfRange {
                material: self.name.clone(),
                lambda_um,
                min_um: min,
                max_um: max,
            });
        }
        Ok(())
    }
}

/// Named collection of materials with case-insensitive lookup.
#[derive(Debug, Clone)]
pub struct MaterialDb {
    by_key: BTreeMap<String, Material>,
}

const BUILTIN_JSON: &str = include_str!("../data/materials.json");

impl MaterialDb {
    /// The embedded database: BBO (Kato 1986), crystalline quartz and
    /// calcite (Ghosh 1999).
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN_JSON).expect("embedded materials database must parse")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let raw: BTreeMap<String, Material> = serde_json::from_str(json)?;
        let mut by_key = BTreeMap::new();
        for (name, mut mat) in raw {
            mat.name = name.clone();
            by_key.insert(name.to_lowercase(), mat);
        }
        Ok(Self { by_key })
    }

    /// Builtin database extended (and overridden, on name collision) by the
    /// entries of a user JSON file.
    pub fn builtin_with_file(path: &Path) -> Result<Self> {
        let mut db = Self::builtin();
        let text = std::fs::read_to_string(path)?;
        let extra = Self::from_json(&text)?;
        db.by_key.extend(extra.by_key);
        Ok(db)
    }

    pub fn get(&self, name: &str) -> Result<&Material> {
        self.by_key
            .get(&name.to_lowercase())
            .ok_or_else(|| Error::UnknownMaterial(name.to_string()))
    }

    pub fn materials(&self) -> impl Iterator<Item = &Material> {
        self.by_key.values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_and_looks_up_case_insensitively() {
        let db = MaterialDb::builtin();
        assert!(db.get("BBO").is_ok());
        assert!(db.get("bbo").is_ok());
        assert!(db.get("Quartz").is_ok());
        assert!(db.get("calcite").is_ok());
        assert!(matches!(
            db.get("KDP"),
            Err(Error::UnknownMaterial(n)) if n == "KDP"
        ));
    }

    #[test]
    fn bbo_ordinary_matches_hand_evaluated_sellmeier() {
        // Independent scalar evaluation of the published Kato formula
        // n_o² = 2.7359 + 0.01878/(λ² − 0.01822) − 0.01354 λ² at λ = 0.8 µm.
        let l2: f64 = 0.8 * 0.8;
        let expected = (2.7359 + 0.01878 / (l2 - 0.01822) - 0.01354 * l2).sqrt();
        let db = MaterialDb::builtin();
        let n = db.get("BBO").unwrap().ordinary.index(0.8);
        assert!((n - expected).abs() < 1e-9, "n_o = {n}, expected {expected}");
        // and the absolute value is the familiar one
        assert!((n - 1.6605).abs() < 2e-4);
    }

    #[test]
    fn quartz_ordinary_matches_hand_evaluated_ghosh() {
        let l2: f64 = 0.8 * 0.8;
        let expected = (1.28604141
            + 1.07044083 * l2 / (l2 - 0.0100585997)
            + 1.10202242 * l2 / (l2 - 100.0))
            .sqrt();
        let db = MaterialDb::builtin();
        let n = db.get("quartz").unwrap().ordinary.index(0.8);
        assert!((n - expected).abs() < 1e-9);
        assert!((n - 1.5383).abs() < 2e-4);
    }

    #[test]
    fn index_exceeds_one_across_valid_range() {
        let db = MaterialDb::builtin();
        for mat in db.materials() {
            let [lo, hi] = mat.valid_range_um;
            for i in 0..=200 {
                let l = lo + (hi - lo) * i as f64 / 200.0;
                assert!(mat.ordinary.index(l) > 1.0, "{} n_o({l})", mat.name);
                assert!(mat.extraordinary.index(l) > 1.0, "{} n_e({l})", mat.name);
            }
        }
    }

    #[test]
    fn out_of_range_is_an_error() {
        let db = MaterialDb::builtin();
        let bbo = db.get("BBO").unwrap();
        assert!(bbo.check_range(0.8).is_ok());
        let err = bbo.check_range(1.5).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("0.205") && msg.contains("1.06"), "message: {msg}");
    }

    #[test]
    fn birefringence_signs_match_declared_uniaxial_sign() {
        let db = MaterialDb::builtin();
        for mat in db.materials() {
            let l = 0.8;
            let diff = mat.extraordinary.index(l) - mat.ordinary.index(l);
            match mat.uniaxial_sign {
                UniaxialSign::Positive => assert!(diff > 0.0, "{}", mat.name),
                UniaxialSign::Negative => assert!(diff < 0.0, "{}", mat.name),
            }
        }
    }
}
