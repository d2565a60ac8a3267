//! Closed-form ro-vibrational spectra of the EP functions.
//!
//! With λ = ħ²/(2μ) (cm⁻¹·Å²), β = 1/(λα²) and D = Dₑ/(δ−σ)², the working
//! quantities for a level (n, l) are
//!
//! ```text
//! S = √(Dβσ² + l(l+1)A₂/(4α²rₑ²) + 1/4)
//! Q = −Dβσ(δ−σ) + l(l+1)A₁/(4α²rₑ²)
//! 2K = (W − ν²)/ν,   W = Dβσδ + l(l+1)(A₂−A₁)/(4α²rₑ²),  ν = n + 1/2 + S
//! E  = Dₑ + λ l(l+1) A₀/rₑ² − λα² (2K)²
//! ```
//!
//! A level is flagged physical iff S is real and 2K > 0 (normalizable
//! exponent). Levels with 2K ≤ 0 still carry their analytic-continuation
//! energy so that the reference transition table, which tabulates one such
//! state, can be reproduced on request.

use crate::error::{Error, Result};
use crate::potential::{centrifugal_coeffs, CentrifugalCoeffs, EpParams};
use crate::units;

/// One molecule: EP parameters plus the reduced mass.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeSpec {
    pub name: String,
    pub ep: EpParams,
    pub mu: f64,
}

impl MoleculeSpec {
    pub fn new(name: impl Into<String>, ep: EpParams, mu: f64) -> Result<Self> {
        if !(mu > 0.0) {
            return Err(Error::Domain(format!("mu must be positive, got {mu}")));
        }
        Ok(MoleculeSpec { name: name.into(), ep, mu })
    }

    /// λ = ħ²/(2μ) in cm⁻¹·Å².
    pub fn lambda(&self) -> f64 {
        units::lambda_kinetic(self.mu).expect("mu validated positive")
    }

    /// β = 1/(λα²) in 1/cm⁻¹, i.e. 2μ/(ħ²α²).
    pub fn beta(&self) -> f64 {
        1.0 / (self.lambda() * self.ep.alpha * self.ep.alpha)
    }

    pub fn centrifugal(&self) -> Result<CentrifugalCoeffs> {
        centrifugal_coeffs(self.ep.alpha, self.ep.re, self.ep.branch)
    }
}

/// Q and S for a given l. `s` is `None` when its radicand is negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kqs {
    pub q: f64,
    pub s: Option<f64>,
}

/// One (n, l) level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub n: u32,
    pub l: u32,
    /// K from the energy equation (half the 2K bracket); negative for
    /// non-physical levels, NaN when S is complex.
    pub k: f64,
    pub q: f64,
    /// S; NaN when its radicand is negative.
    pub s: f64,
    /// Energy in cm⁻¹; the analytic continuation is recorded even when
    /// `physical` is false, NaN only when S is complex.
    pub energy: f64,
    pub physical: bool,
}

/// The rotational shift terms l(l+1)Aᵢ/(4α²rₑ²) enter Q, S and W with the
/// same prefactor.
fn rot_term(m: &MoleculeSpec, l: u32, a: f64) -> f64 {
    let ll1 = (l as f64) * (l as f64 + 1.0);
    let ar = m.ep.alpha * m.ep.re;
    ll1 * a / (4.0 * ar * ar)
}

/// Q and S for quantum number l.
pub fn kqs(m: &MoleculeSpec, l: u32) -> Result<Kqs> {
    let c = m.centrifugal()?;
    let db = m.ep.depth() * m.beta();
    let q = -db * m.ep.sigma * (m.ep.delta - m.ep.sigma) + rot_term(m, l, c.a1);
    let s_rad = db * m.ep.sigma * m.ep.sigma + rot_term(m, l, c.a2) + 0.25;
    let s = if s_rad >= 0.0 { Some(s_rad.sqrt()) } else { None };
    Ok(Kqs { q, s })
}

/// Closed-form energy of the (n, l) level.
pub fn energy_level(m: &MoleculeSpec, n: u32, l: u32) -> Result<SpectrumEntry> {
    let c = m.centrifugal()?;
    let Kqs { q, s } = kqs(m, l)?;
    let Some(s) = s else {
        return Ok(SpectrumEntry {
            n,
            l,
            k: f64::NAN,
            q,
            s: f64::NAN,
            energy: f64::NAN,
            physical: false,
        });
    };
    let lam = m.lambda();
    let alpha = m.ep.alpha;
    let re = m.ep.re;
    let ll1 = (l as f64) * (l as f64 + 1.0);
    let db = m.ep.depth() * m.beta();

    let w = db * m.ep.sigma * m.ep.delta + rot_term(m, l, c.a2 - c.a1);
    let nu = n as f64 + 0.5 + s;
    let two_k = (w - nu * nu) / nu;
    let energy = m.ep.de + lam * ll1 * c.a0 / (re * re) - lam * alpha * alpha * two_k * two_k;

    Ok(SpectrumEntry {
        n,
        l,
        k: 0.5 * two_k,
        q,
        s,
        energy,
        physical: two_k > 0.0,
    })
}

/// Vibrational (s-wave) energy; identical to `energy_level(m, n, 0)`.
pub fn s_wave_energy(m: &MoleculeSpec, n: u32) -> Result<f64> {
    Ok(energy_level(m, n, 0)?.energy)
}

/// The bound-state count bound for the s-wave ladder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NMax {
    /// Real-valued root of the vanishing-bracket condition.
    pub value: f64,
    /// Greatest integer ≤ `value`; −1 when no bound states exist.
    pub floor: i64,
}

/// n_max = (√(4Dβσδ) − √(4Dβσ² + 1) − 1)/2.
pub fn n_max(m: &MoleculeSpec) -> NMax {
    let db = m.ep.depth() * m.beta();
    let a = 4.0 * db * m.ep.sigma * m.ep.delta;
    let b = 4.0 * db * m.ep.sigma * m.ep.sigma + 1.0;
    if a < 0.0 {
        return NMax { value: f64::NAN, floor: -1 };
    }
    let value = 0.5 * (a.sqrt() - b.sqrt() - 1.0);
    let floor = if value.is_nan() { -1 } else { value.floor() as i64 };
    NMax { value, floor }
}

/// One s-wave transition ΔE = E(n,0) − E(0,0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transition {
    pub n: u32,
    pub delta_e: f64,
    /// Physicality of the upper level.
    pub physical: bool,
}

/// s-wave transition energies relative to the ground state.
pub fn transitions(m: &MoleculeSpec, ns: &[u32]) -> Result<Vec<Transition>> {
    let ground = energy_level(m, 0, 0)?;
    ns.iter()
        .map(|&n| {
            let e = energy_level(m, n, 0)?;
            Ok(Transition {
                n,
                delta_e: e.energy - ground.energy,
                physical: e.physical,
            })
        })
        .collect()
}
