//! The hyperbolical empirical potential (EP) family, the Morse potential and
//! the Pekeris-type approximation of the centrifugal term.
//!
//! The EP functions are
//!
//! ```text
//! V±(r) = D [δ − σ coth(αr)^(±1)]²,   D = De/(δ−σ)²
//! ```
//!
//! so the plus branch carries coth and the minus branch tanh. Both branches
//! are implemented, but all reference data ships for V₊ only.

use crate::error::{Error, Result};

/// Which sign of the EP family is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// V₊: coth form, valid for 0 ≤ σ < δ; diverges at r = 0.
    Plus,
    /// V₋: tanh form, valid for σ < δ ≤ 0.
    Minus,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        }
    }
}

impl std::str::FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Branch::Plus),
            "minus" | "-" => Ok(Branch::Minus),
            other => Err(Error::Usage(format!(
                "unknown branch '{other}', expected 'plus' or 'minus'"
            ))),
        }
    }
}

/// Parameters of one EP function.
///
/// `re` is the spectroscopic equilibrium separation supplied independently;
/// it is *not* recomputed from (σ, δ, α). For the Ar₂ reference parameters
/// the two disagree (see [`ep_equilibrium`]), and the tabulated levels are
/// only reproduced with the spectroscopic value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpParams {
    /// Spectroscopic dissociation energy Dₑ in cm⁻¹.
    pub de: f64,
    /// Dimensionless shape parameter σ.
    pub sigma: f64,
    /// Dimensionless shape parameter δ.
    pub delta: f64,
    /// Range parameter α in Å⁻¹.
    pub alpha: f64,
    /// Sign branch of the potential.
    pub branch: Branch,
    /// Equilibrium separation rₑ in Å.
    pub re: f64,
}

impl EpParams {
    pub fn new(de: f64, sigma: f64, delta: f64, alpha: f64, branch: Branch, re: f64) -> Result<Self> {
        if !(de > 0.0) {
            return Err(Error::Domain(format!("De must be positive, got {de}")));
        }
        if !(alpha > 0.0) {
            return Err(Error::Domain(format!("alpha must be positive, got {alpha}")));
        }
        if !(re > 0.0) {
            return Err(Error::Domain(format!("re must be positive, got {re}")));
        }
        match branch {
            Branch::Plus => {
                if !(0.0 <= sigma && sigma < delta) {
                    return Err(Error::Domain(format!(
                        "plus branch requires 0 <= sigma < delta, got sigma={sigma}, delta={delta}"
                    )));
                }
            }
            Branch::Minus => {
                if !(sigma < delta && delta <= 0.0) {
                    return Err(Error::Domain(format!(
                        "minus branch requires sigma < delta <= 0, got sigma={sigma}, delta={delta}"
                    )));
                }
            }
        }
        Ok(EpParams { de, sigma, delta, alpha, branch, re })
    }

    /// Depth parameter D = Dₑ/(δ−σ)², in cm⁻¹.
    pub fn depth(&self) -> f64 {
        self.de / ((self.delta - self.sigma) * (self.delta - self.sigma))
    }
}

/// Evaluate V±(r) in cm⁻¹.
///
/// coth/tanh are formed from e^(−2αr) so large r cannot overflow.
pub fn ep_evaluate(p: &EpParams, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be positive, got {r}")));
    }
    let e = (-2.0 * p.alpha * r).exp();
    let hyper = match p.branch {
        Branch::Plus => (1.0 + e) / (1.0 - e),  // coth(αr)
        Branch::Minus => (1.0 - e) / (1.0 + e), // tanh(αr)
    };
    let q = p.delta - p.sigma * hyper;
    Ok(p.depth() * q * q)
}

/// Position of the potential minimum implied by (σ, δ, α):
/// rₘᵢₙ = artanh((σ/δ)^(±1)) / α.
///
/// Diagnostic only. For the Ar₂ reference parameters it gives ≈ 1.06 Å,
/// which disagrees with the spectroscopic rₑ = 3.759 Å; the rest of the
/// toolkit therefore always uses the supplied `re`.
pub fn ep_equilibrium(p: &EpParams) -> Result<f64> {
    let arg = match p.branch {
        Branch::Plus => p.sigma / p.delta,
        Branch::Minus => p.delta / p.sigma,
    };
    if !(-1.0 < arg && arg < 1.0) {
        return Err(Error::Domain(format!(
            "artanh argument {arg} outside (-1, 1)"
        )));
    }
    Ok(arg.atanh() / p.alpha)
}

/// Morse potential D[1 − e^(−α(r−rₑ))]² in cm⁻¹.
pub fn morse_evaluate(d: f64, alpha: f64, re: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be positive, got {r}")));
    }
    let q = 1.0 - (-alpha * (r - re)).exp();
    Ok(d * q * q)
}

/// Coefficients of the Pekeris-type expansion of l(l+1)/r² around rₑ.
///
/// They satisfy A₀ + A₁yₑ + A₂yₑ² = 1 exactly, where yₑ is the expansion
/// variable evaluated at rₑ, so the approximant matches l(l+1)/rₑ² there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentrifugalCoeffs {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
}

/// The expansion variable y(r) = ±e^(−2αr)/(1 ∓ e^(−2αr)).
pub fn centrifugal_variable(r: f64, alpha: f64, branch: Branch) -> f64 {
    let e = (-2.0 * alpha * r).exp();
    match branch {
        Branch::Plus => e / (1.0 - e),
        Branch::Minus => -e / (1.0 + e),
    }
}

/// A₀, A₁, A₂ with the upper signs for the plus branch and lower signs for
/// the minus branch.
pub fn centrifugal_coeffs(alpha: f64, re: f64, branch: Branch) -> Result<CentrifugalCoeffs> {
    if !(alpha * re > 0.0) {
        return Err(Error::Domain(format!(
            "alpha*re must be positive, got alpha={alpha}, re={re}"
        )));
    }
    let t = 2.0 * alpha * re;
    let e = (-t).exp();
    // 1 ∓ e^(−2αrₑ) and e^(2αrₑ) ∓ 1 for the selected branch.
    let (ome, emo, sign) = match branch {
        Branch::Plus => (1.0 - e, t.exp() - 1.0, 1.0),
        Branch::Minus => (1.0 + e, t.exp() + 1.0, -1.0),
    };
    let u = ome / t;
    let a0 = 1.0 - u * u * (4.0 * t / ome - (3.0 + t));
    let a1 = sign * 2.0 * emo * (3.0 * u - (3.0 + t) * u * u);
    let a2 = emo * emo * u * u * (3.0 + t - 2.0 * t / ome);
    Ok(CentrifugalCoeffs { a0, a1, a2 })
}

/// Approximated centrifugal potential, in Å⁻²:
/// (l(l+1)/rₑ²)·[A₀ + A₁y + A₂y²].
pub fn centrifugal_approx(
    r: f64,
    l: u32,
    re: f64,
    alpha: f64,
    c: &CentrifugalCoeffs,
    branch: Branch,
) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be positive, got {r}")));
    }
    let y = centrifugal_variable(r, alpha, branch);
    let ll1 = (l as f64) * (l as f64 + 1.0);
    Ok(ll1 / (re * re) * (c.a0 + c.a1 * y + c.a2 * y * y))
}
