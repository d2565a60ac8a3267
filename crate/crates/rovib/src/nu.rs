//! Parametric Nikiforov–Uvarov engine.
//!
//! Input is the six-coefficient form of the generalized hypergeometric-type
//! equation
//!
//! ```text
//! R'' + (c1 − c2 z)/(z(1 − c3 z)) R' + (−ξ1 z² + ξ2 z − ξ3)/(z(1 − c3 z))² R = 0
//! ```
//!
//! From (c1, c2, c3, ξ1, ξ2, ξ3) the engine derives the auxiliary constants
//! c4…c13, the discriminant root k₋, the bound-state slope τ′ and the
//! energy-equation residual. Only the k₋ root is carried; the k₊ root does
//! not produce normalizable states. Non-physical parameter regimes (complex
//! square roots, bad exponents) come back as a flagged solution rather than
//! an error so that callers can scan across them.

use crate::error::{Error, Result};

/// The six input coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuProblem {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
}

impl NuProblem {
    pub fn new(c1: f64, c2: f64, c3: f64, xi1: f64, xi2: f64, xi3: f64) -> Result<Self> {
        if c3 == 0.0 {
            return Err(Error::Domain(
                "c3 must be nonzero (finite z-interval [0, 1/c3])".into(),
            ));
        }
        Ok(NuProblem { c1, c2, c3, xi1, xi2, xi3 })
    }

    /// The specialization produced by the hyperbolical potentials:
    /// c1 = c2 = c3 = 1 and ξ coefficients built from K², Q and S².
    pub fn ep_specialization(k2: f64, q: f64, s2: f64) -> Self {
        NuProblem {
            c1: 1.0,
            c2: 1.0,
            c3: 1.0,
            xi1: k2 + s2 - q - 0.25,
            xi2: 2.0 * k2 - q,
            xi3: k2,
        }
    }
}

/// Everything the method derives from a [`NuProblem`].
///
/// When `physical` is false the fields that would require a complex square
/// root are NaN; callers must consult the flag before interpreting them.
#[derive(Debug, Clone, Copy)]
pub struct NuSolution {
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
    pub c7: f64,
    pub c8: f64,
    pub c9: f64,
    pub c10: f64,
    pub c11: f64,
    pub c12: f64,
    pub c13: f64,
    /// Selected root of the discriminant condition.
    pub k_minus: f64,
    /// Slope of τ(z); must be negative for bound states.
    pub tau_prime: f64,
    /// True iff the square roots are real, τ′ < 0 and the Jacobi/exponent
    /// conditions c10 > −1, c11 > −1, c12 > 0, c13 > 0 all hold.
    pub physical: bool,
    /// Real square roots exist (c8 ≥ 0 and c9 ≥ 0).
    pub roots_real: bool,
}

/// Shape parameters of the unnormalized solution
/// z^a (1 − c3 z)^b P_n^(ja, jb)(1 − 2 c3 z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionShape {
    pub exponent_a: f64,
    pub exponent_b: f64,
    pub jacobi_a: f64,
    pub jacobi_b: f64,
}

/// Derive all auxiliary constants from the problem coefficients.
pub fn derive(p: &NuProblem) -> NuSolution {
    let c4 = 0.5 * (1.0 - p.c1);
    let c5 = 0.5 * (p.c2 - 2.0 * p.c3);
    let c6 = c5 * c5 + p.xi1;
    let c7 = 2.0 * c4 * c5 - p.xi2;
    let c8 = c4 * c4 + p.xi3;
    let c9 = p.c3 * (c7 + p.c3 * c8) + c6;

    let roots_real = c8 >= 0.0 && c9 >= 0.0;
    if !roots_real {
        return NuSolution {
            c4,
            c5,
            c6,
            c7,
            c8,
            c9,
            c10: f64::NAN,
            c11: f64::NAN,
            c12: f64::NAN,
            c13: f64::NAN,
            k_minus: f64::NAN,
            tau_prime: f64::NAN,
            physical: false,
            roots_real: false,
        };
    }

    let s8 = c8.sqrt();
    let s9 = c9.sqrt();
    let k_minus = -(c7 + 2.0 * p.c3 * c8) - 2.0 * (c8 * c9).sqrt();
    let tau_prime = -2.0 * p.c3 - 2.0 * (s9 + p.c3 * s8);
    let c10 = p.c1 + 2.0 * c4 + 2.0 * s8 - 1.0;
    let c11 = 1.0 - p.c1 - 2.0 * c4 + 2.0 / p.c3 * s9;
    let c12 = c4 + s8;
    let c13 = -c4 + (s9 - c5) / p.c3;

    let physical =
        tau_prime < 0.0 && c10 > -1.0 && c11 > -1.0 && c12 > 0.0 && c13 > 0.0;

    NuSolution {
        c4,
        c5,
        c6,
        c7,
        c8,
        c9,
        c10,
        c11,
        c12,
        c13,
        k_minus,
        tau_prime,
        physical,
        roots_real: true,
    }
}

/// Left-hand side of the parametric energy equation:
///
/// ```text
/// (c2−c3)n + c3 n² − (2n+1)c5 + (2n+1)(√c9 + c3√c8) + c7 + 2c3c8 + 2√(c8c9)
/// ```
///
/// A bound state at quantum number n makes this vanish.
pub fn energy_residual(n: u32, p: &NuProblem) -> Result<f64> {
    let s = derive(p);
    if !s.roots_real {
        return Err(Error::NonPhysical(format!(
            "c8 = {} or c9 = {} negative; residual roots are meaningless",
            s.c8, s.c9
        )));
    }
    let nf = n as f64;
    let s8 = s.c8.sqrt();
    let s9 = s.c9.sqrt();
    Ok((p.c2 - p.c3) * nf + p.c3 * nf * nf - (2.0 * nf + 1.0) * s.c5
        + (2.0 * nf + 1.0) * (s9 + p.c3 * s8)
        + s.c7
        + 2.0 * p.c3 * s.c8
        + 2.0 * (s.c8 * s.c9).sqrt())
}

/// The four shape parameters of the unnormalized solution.
pub fn wavefunction_shape(p: &NuProblem) -> Result<WavefunctionShape> {
    let s = derive(p);
    if !s.roots_real {
        return Err(Error::NonPhysical(
            "square roots complex; no wavefunction shape".into(),
        ));
    }
    if s.c12 <= 0.0 || s.c13 <= 0.0 {
        return Err(Error::NonPhysical(format!(
            "exponents c12 = {}, c13 = {} must both be positive",
            s.c12, s.c13
        )));
    }
    Ok(WavefunctionShape {
        exponent_a: s.c12,
        exponent_b: s.c13,
        jacobi_a: s.c10,
        jacobi_b: s.c11,
    })
}
