//! Physical constants and the few unit conversions the toolkit needs.
//!
//! Everything downstream works in spectroscopic units: energies in cm⁻¹,
//! lengths in Å, masses in a.m.u. The only composite constant that appears
//! in the formulas is λ = ħ²/(2μ) expressed in cm⁻¹·Å², so no further unit
//! handling is required outside this module.

use std::str::FromStr;

use crate::error::{Error, Result};

/// Constants fixed to the rounded values used for the reference tables,
/// deliberately not CODATA, so recomputed tables inherit the same rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// MeV/c² per a.m.u.
    pub amu_to_mev: f64,
    /// eV per cm⁻¹.
    pub cm1_to_ev: f64,
    /// ħc in eV·Å.
    pub hbar_c: f64,
}

pub const CONSTANTS: PhysicalConstants = PhysicalConstants {
    amu_to_mev: 931.502,
    cm1_to_ev: 1.23985e-4,
    hbar_c: 1973.29,
};

/// Reduced mass μ = m₁m₂/(m₁+m₂), in a.m.u.
pub fn reduced_mass(m1: f64, m2: f64) -> Result<f64> {
    if m1 <= 0.0 || m2 <= 0.0 {
        return Err(Error::Domain(format!(
            "masses must be positive, got m1={m1}, m2={m2}"
        )));
    }
    Ok(m1 * m2 / (m1 + m2))
}

/// The kinetic prefactor λ = ħ²/(2μ) in cm⁻¹·Å².
///
/// Computed as (ħc)²/(2·μc²) in eV·Å² and then divided by eV-per-cm⁻¹.
pub fn lambda_kinetic(mu: f64) -> Result<f64> {
    if mu <= 0.0 {
        return Err(Error::Domain(format!("mass must be positive, got {mu}")));
    }
    let c = CONSTANTS;
    let ev_angstrom2 = c.hbar_c * c.hbar_c / (2.0 * mu * c.amu_to_mev * 1.0e6);
    Ok(ev_angstrom2 / c.cm1_to_ev)
}

/// Energy units understood by [`energy_convert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyUnit {
    WaveNumber,
    ElectronVolt,
}

impl FromStr for EnergyUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cm-1" | "cm^-1" | "wavenumber" => Ok(EnergyUnit::WaveNumber),
            "eV" | "ev" => Ok(EnergyUnit::ElectronVolt),
            other => Err(Error::Usage(format!("unknown energy unit '{other}'"))),
        }
    }
}

/// Linear conversion between cm⁻¹ and eV.
pub fn energy_convert(value: f64, from: EnergyUnit, to: EnergyUnit) -> f64 {
    use EnergyUnit::*;
    match (from, to) {
        (WaveNumber, ElectronVolt) => value * CONSTANTS.cm1_to_ev,
        (ElectronVolt, WaveNumber) => value / CONSTANTS.cm1_to_ev,
        _ => value,
    }
}
