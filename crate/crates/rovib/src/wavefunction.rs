//! Radial wavefunctions of the EP bound states and their normalization.
//!
//! A physical level (n, l) with parameters K and S has the unnormalized
//! radial function (plus branch, z = e^(−2αr))
//!
//! ```text
//! R(r) = z^K (1−z)^(S+1/2) P_n^(2K, 2S)(1 − 2z)
//! ```
//!
//! Normalization constants come from two independent routes: adaptive
//! quadrature of the z-space integral (authoritative) and a closed finite
//! sum over terminating ₃F₂(…; 1) values derived from the Euler-type
//! integral of the ₂F₁ representation. The closed sum found in the
//! literature is misprinted (it is singular at n = 0 and off by a gamma
//! factor elsewhere); the sum implemented here is re-derived from the
//! underlying integral identity and matches quadrature to machine
//! precision.

use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::potential::Branch;
use crate::spectrum::{MoleculeSpec, SpectrumEntry};

/// Y₀₀ = 1/√(4π), the only angular factor this crate exposes.
pub const Y00: f64 = 0.28209479177387814;

// ---------------------------------------------------------------------------
// special functions
// ---------------------------------------------------------------------------

/// Rising factorial (x)_n.
pub fn rising(x: f64, n: u32) -> f64 {
    let mut p = 1.0;
    for k in 0..n {
        p *= x + k as f64;
    }
    p
}

fn ln_rising(x: f64, n: u32) -> f64 {
    // x > 0 in every use below
    ln_gamma(x + n as f64) - ln_gamma(x)
}

/// Jacobi polynomial P_n^(a,b)(x) by the three-term recurrence.
///
/// The recurrence is a polynomial identity, so x is not restricted to
/// [−1, 1].
pub fn jacobi(n: u32, a: f64, b: f64, x: f64) -> Result<f64> {
    if a <= -1.0 || b <= -1.0 {
        return Err(Error::Domain(format!(
            "Jacobi parameters must exceed -1, got a={a}, b={b}"
        )));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut pm1 = 1.0;
    let mut p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for k in 2..=n {
        let k = k as f64;
        let c = 2.0 * k + a + b;
        let a1 = 2.0 * k * (k + a + b) * (c - 2.0);
        let a2 = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b);
        let a3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
        let next = (a2 * p - a3 * pm1) / a1;
        pm1 = p;
        p = next;
    }
    Ok(p)
}

/// Terminating ₂F₁(−n, b; c; z); always a degree-n polynomial in z.
pub fn hyp2f1_poly(n: u32, b: f64, c: f64, z: f64) -> f64 {
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 0..n {
        let kf = k as f64;
        term *= (-(n as f64) + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
    }
    sum
}

/// ₂F₁ representation of the Jacobi polynomial:
/// (a+1)_n/n! · ₂F₁(−n, a+b+n+1; a+1; (1−x)/2).
pub fn jacobi_via_hyp2f1(n: u32, a: f64, b: f64, x: f64) -> f64 {
    rising(a + 1.0, n) / rising(1.0, n) * hyp2f1_poly(n, a + b + n as f64 + 1.0, a + 1.0, 0.5 * (1.0 - x))
}

/// Terminating ₃F₂(a1, a2, a3; b1, b2; 1).
///
/// One numerator parameter must be a non-positive integer; anything else is
/// rejected as unsupported.
pub fn hyp3f2_unit(a1: f64, a2: f64, a3: f64, b1: f64, b2: f64) -> Result<f64> {
    let terminates = |a: f64| -> Option<u32> {
        let r = a.round();
        if (a - r).abs() < 1e-9 && r <= 0.0 && r > -1e9 {
            Some((-r) as u32)
        } else {
            None
        }
    };
    // terminate on the numerator parameter with the fewest terms
    let n = [a1, a2, a3]
        .iter()
        .filter_map(|&a| terminates(a))
        .min()
        .ok_or_else(|| {
            Error::Numeric(
                "3F2 does not terminate: no numerator parameter is a non-positive integer".into(),
            )
        })?;
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 0..n {
        let kf = k as f64;
        let d1 = b1 + kf;
        let d2 = b2 + kf;
        if d1 == 0.0 || d2 == 0.0 {
            return Err(Error::Numeric(format!(
                "3F2 denominator parameter hits zero at term {k}"
            )));
        }
        term *= (a1 + kf) * (a2 + kf) * (a3 + kf) / (d1 * d2 * (kf + 1.0));
        sum += term;
    }
    Ok(sum)
}

// ---------------------------------------------------------------------------
// quadrature
// ---------------------------------------------------------------------------

/// Adaptive Simpson integration on [a, b].
///
/// The interval is first cut into coarse panels so narrow peaks cannot be
/// missed, then each panel is refined until the local Richardson estimate
/// meets the tolerance. Summation order is fixed, so results are
/// deterministic.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    const PANELS: usize = 64;
    let h = (b - a) / PANELS as f64;
    // coarse estimate sets the absolute tolerance scale
    let mut coarse = 0.0;
    for i in 0..PANELS {
        let x0 = a + i as f64 * h;
        coarse += simpson(f, x0, x0 + h);
    }
    let tol = rel_tol * coarse.abs().max(f64::MIN_POSITIVE);
    let mut total = 0.0;
    for i in 0..PANELS {
        let x0 = a + i as f64 * h;
        total += adapt(f, x0, x0 + h, simpson(f, x0, x0 + h), tol / PANELS as f64, 48)?;
    }
    Ok(total)
}

fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let m = 0.5 * (a + b);
    (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
}

fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let left = simpson(f, a, m);
    let right = simpson(f, m, b);
    let err = left + right - whole;
    if err.abs() <= 15.0 * tol || (b - a) < 1e-15 {
        return Ok(left + right + err / 15.0);
    }
    if depth == 0 {
        return Err(Error::Numeric(format!(
            "quadrature failed to converge on [{a}, {b}]: residual {err:.3e} vs tolerance {tol:.3e}"
        )));
    }
    Ok(adapt(f, a, m, left, 0.5 * tol, depth - 1)?
        + adapt(f, m, b, right, 0.5 * tol, depth - 1)?)
}

// ---------------------------------------------------------------------------
// radial wavefunctions
// ---------------------------------------------------------------------------

fn require_physical(entry: &SpectrumEntry) -> Result<(f64, f64)> {
    if !entry.physical || !entry.k.is_finite() || !entry.s.is_finite() {
        return Err(Error::NonPhysical(format!(
            "level (n={}, l={}) is not a normalizable bound state",
            entry.n, entry.l
        )));
    }
    Ok((entry.k, entry.s))
}

/// Unnormalized radial function R(r).
///
/// The power-law envelope is evaluated in the log domain so large S (the
/// reference molecules reach S ≈ 25 and S ≈ 427) cannot overflow. For the
/// minus branch the Jacobi part is evaluated through its terminating ₂F₁
/// form, which stays a polynomial for arguments outside [−1, 1]; the
/// envelope uses |z|^K, fixing a real phase convention.
pub fn radial(m: &MoleculeSpec, entry: &SpectrumEntry, r: f64) -> Result<f64> {
    let (k, s) = require_physical(entry)?;
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be positive, got {r}")));
    }
    let t = (-2.0 * m.ep.alpha * r).exp(); // |z|
    let (one_minus_z, poly) = match m.ep.branch {
        Branch::Plus => (1.0 - t, jacobi(entry.n, 2.0 * k, 2.0 * s, 1.0 - 2.0 * t)?),
        Branch::Minus => (
            1.0 + t,
            rising(2.0 * k + 1.0, entry.n) / rising(1.0, entry.n)
                * hyp2f1_poly(entry.n, 2.0 * (k + s) + entry.n as f64 + 1.0, 2.0 * k + 1.0, -t),
        ),
    };
    let ln_env = k * t.ln() + (s + 0.5) * one_minus_z.ln();
    if ln_env < -700.0 {
        return Ok(0.0);
    }
    Ok(ln_env.exp() * poly)
}

/// Normalization constant by adaptive quadrature of the z-space integral
/// (1/2α)·∫₀¹ t^(2K−1)(1∓t)^(2S+1) P² dt.
pub fn normalize_quadrature(m: &MoleculeSpec, entry: &SpectrumEntry) -> Result<f64> {
    let (k, s) = require_physical(entry)?;
    let n = entry.n;
    let branch = m.ep.branch;
    let f = move |t: f64| -> f64 {
        if t <= 0.0 || t >= 1.0 {
            return 0.0; // 2K > 0 and 2S+1 > 0 kill both endpoints
        }
        let (omz, arg_sign) = match branch {
            Branch::Plus => (1.0 - t, 1.0),
            Branch::Minus => (1.0 + t, -1.0),
        };
        let p = match branch {
            Branch::Plus => jacobi(n, 2.0 * k, 2.0 * s, 1.0 - 2.0 * t).unwrap_or(f64::NAN),
            Branch::Minus => {
                rising(2.0 * k + 1.0, n) / rising(1.0, n)
                    * hyp2f1_poly(n, 2.0 * (k + s) + n as f64 + 1.0, 2.0 * k + 1.0, arg_sign * t)
            }
        };
        let ln_env = (2.0 * k - 1.0) * t.ln() + (2.0 * s + 1.0) * omz.ln();
        if ln_env < -700.0 {
            return 0.0;
        }
        ln_env.exp() * p * p
    };
    let integral = integrate(&f, 0.0, 1.0, 1e-12)? / (2.0 * m.ep.alpha);
    if !(integral > 0.0) || !integral.is_finite() {
        return Err(Error::Numeric(format!(
            "normalization integral came out as {integral}"
        )));
    }
    Ok(integral.powf(-0.5))
}

/// Normalization constant by the closed finite sum
///
/// ```text
/// 𝒩⁻² = [(2K+1)_n / n!]² · Γ(2S+2)/(2α)
///        · Σ_{m=0}^{n} (−n)_m (B)_m Γ(2K+m) / [(2K+1)_m m! Γ(m+2K+2S+2)] · f_m
/// B = n + 1 + 2(K+S),
/// f_m = ₃F₂(2K+m, −n, B; m+2(K+S+1); 2K+1; 1)
/// ```
///
/// obtained by expanding one ₂F₁ factor of the squared polynomial and
/// integrating term by term with the Euler integral identity. The sum is
/// finite because (−n)_m vanishes for m > n. Everything is accumulated in
/// the log domain; the reference H₂ states have Γ(2S+2) ≈ Γ(855).
///
/// Only the plus branch has the [0, 1] integral this derivation rests on.
pub fn normalize_series(m: &MoleculeSpec, entry: &SpectrumEntry) -> Result<f64> {
    let (k, s) = require_physical(entry)?;
    if m.ep.branch != Branch::Plus {
        return Err(Error::Numeric(
            "series normalization is derived for the plus branch; use quadrature".into(),
        ));
    }
    let n = entry.n;
    let nf = n as f64;
    let b_top = nf + 1.0 + 2.0 * (k + s);

    let ln_pre = 2.0 * (ln_rising(2.0 * k + 1.0, n) - ln_gamma(nf + 1.0))
        + ln_gamma(2.0 * s + 2.0)
        - (2.0 * m.ep.alpha).ln();

    let mut ln_terms: Vec<(f64, f64)> = Vec::with_capacity(n as usize + 1);
    for mm in 0..=n {
        let mf = mm as f64;
        let f_m = hyp3f2_unit(
            2.0 * k + mf,
            -nf,
            b_top,
            mf + 2.0 * (k + s + 1.0),
            2.0 * k + 1.0,
        )?;
        if f_m == 0.0 {
            continue;
        }
        // (−n)_m = (−1)^m · n!/(n−m)!
        let sign = if mm % 2 == 0 { 1.0 } else { -1.0 } * f_m.signum();
        let ln_mag = ln_gamma(nf + 1.0) - ln_gamma(nf - mf + 1.0)
            + ln_rising(b_top, mm)
            + ln_gamma(2.0 * k + mf)
            - ln_rising(2.0 * k + 1.0, mm)
            - ln_gamma(mf + 1.0)
            - ln_gamma(mf + 2.0 * k + 2.0 * s + 2.0)
            + f_m.abs().ln();
        ln_terms.push((sign, ln_mag));
    }
    let max_ln = ln_terms
        .iter()
        .map(|&(_, l)| l)
        .fold(f64::NEG_INFINITY, f64::max);
    let sum_scaled: f64 = ln_terms
        .iter()
        .map(|&(sign, l)| sign * (l - max_ln).exp())
        .sum();
    if !(sum_scaled > 0.0) {
        return Err(Error::Numeric(format!(
            "series normalization sum is non-positive ({sum_scaled}); fall back to quadrature"
        )));
    }
    let ln_norm_sq = ln_pre + max_ln + sum_scaled.ln();
    Ok((-0.5 * ln_norm_sq).exp())
}

/// A normalized bound-state radial function.
#[derive(Debug, Clone)]
pub struct RadialWavefunction {
    pub entry: SpectrumEntry,
    /// Normalization constant 𝒩 in Å^(−1/2), from quadrature.
    pub norm: f64,
    molecule: MoleculeSpec,
}

impl RadialWavefunction {
    pub fn new(m: &MoleculeSpec, entry: SpectrumEntry) -> Result<Self> {
        let norm = normalize_quadrature(m, &entry)?;
        Ok(RadialWavefunction {
            entry,
            norm,
            molecule: m.clone(),
        })
    }

    /// Normalized R(r); ∫ R² dr = 1.
    pub fn evaluate(&self, r: f64) -> Result<f64> {
        Ok(self.norm * radial(&self.molecule, &self.entry, r)?)
    }

    /// Total s-wave wavefunction ψ(r) = 𝒩 R(r)/r · Y₀₀.
    pub fn total_s_wave(&self, r: f64) -> Result<f64> {
        if self.entry.l != 0 {
            return Err(Error::Usage(format!(
                "total_s_wave requires l = 0, this state has l = {}",
                self.entry.l
            )));
        }
        Ok(self.evaluate(r)? / r * Y00)
    }
}
