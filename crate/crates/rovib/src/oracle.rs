//! Independent numerical eigenvalue solver for the reduced radial equation
//!
//! ```text
//! u''(r) = w(r) u(r),   w = (V_eff(r) − E)/λ
//! ```
//!
//! with u → 0 at both grid ends. The solver integrates the Numerov
//! recurrence outward and bisects the energy on the node count of the
//! solution: the n-th eigenvalue is exactly where the interior node count
//! jumps from n to n+1 (equivalently, where the diverging tail changes
//! sign). After the bracket collapses, a two-sided integration matched at
//! the outermost classical turning point provides the derivative-mismatch
//! residual used as the convergence certificate.
//!
//! Where the effective potential is so steep that h²w/12 > 1/4 (the EP inner
//! wall reaches ~10¹⁰ cm⁻¹ for H₂) the recurrence is meaningless; the
//! outward start point is moved to the first grid index where the step is
//! resolved. The true solution is far below underflow there.

use crate::error::{Error, Result};
use crate::potential::{centrifugal_approx, ep_evaluate};
use crate::spectrum::{energy_level, MoleculeSpec};

/// Uniform radial grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub points: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, points: usize) -> Result<Self> {
        if !(0.0 < r_min && r_min < r_max) {
            return Err(Error::Domain(format!(
                "need 0 < r_min < r_max, got [{r_min}, {r_max}]"
            )));
        }
        if points < 1000 {
            return Err(Error::Domain(format!(
                "need at least 1000 grid points, got {points}"
            )));
        }
        Ok(RadialGrid { r_min, r_max, points })
    }

    /// Default grid for a molecule: r_min = max(10⁻⁴, rₑ/50),
    /// r_max = rₑ + 40/α, 20001 points. Boundary truncation error is below
    /// 10⁻⁶ cm⁻¹ for the two reference molecules.
    pub fn default_for(re: f64, alpha: f64) -> Self {
        RadialGrid {
            r_min: (re / 50.0).max(1e-4),
            r_max: re + 40.0 / alpha,
            points: 20001,
        }
    }

    pub fn step(&self) -> f64 {
        (self.r_max - self.r_min) / (self.points - 1) as f64
    }
}

/// Outcome of one eigenvalue solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub n: u32,
    pub l: u32,
    pub energy: f64,
    pub node_count: u32,
    pub converged: bool,
    /// Relative derivative mismatch at the matching point.
    pub residual: f64,
}

struct Mesh {
    h: f64,
    v: Vec<f64>,
    lam: f64,
    /// First index where the Numerov step resolves the potential.
    start: usize,
}

impl Mesh {
    fn build<F: Fn(f64) -> f64>(potential: &F, lam: f64, grid: &RadialGrid) -> Result<Mesh> {
        let h = grid.step();
        let v: Vec<f64> = (0..grid.points)
            .map(|i| potential(grid.r_min + i as f64 * h))
            .collect();
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain(
                "effective potential is not finite on the grid interior".into(),
            ));
        }
        Ok(Mesh { h, v, lam, start: 0 })
    }

    fn set_start(&mut self, energy: f64) {
        let h2 = self.h * self.h;
        let mut i = 0;
        while i + 3 < self.v.len() && h2 * (self.v[i] - energy) / self.lam / 12.0 > 0.25 {
            i += 1;
        }
        self.start = i;
    }

    /// Outward Numerov sweep; returns (interior node count, tail sign).
    fn sweep(&self, energy: f64) -> (u32, f64) {
        let n = self.v.len();
        let h2 = self.h * self.h;
        let f = |i: usize| 1.0 - h2 * (self.v[i] - energy) / self.lam / 12.0;
        let mut y0 = 0.0f64;
        let mut y1 = 1e-12f64;
        let mut nodes = 0u32;
        for i in (self.start + 1)..(n - 1) {
            let y2 = ((12.0 - 10.0 * f(i)) * y1 - f(i - 1) * y0) / f(i + 1);
            if y1 != 0.0 && y2 * y1 < 0.0 {
                nodes += 1;
            }
            y0 = y1;
            y1 = y2;
            if y1.abs() > 1e100 {
                y0 *= 1e-100;
                y1 *= 1e-100;
            }
        }
        (nodes, y1)
    }

    /// Two-sided integration matched at the outermost turning point; returns
    /// the relative mismatch of the Numerov three-point relation there.
    fn matching_residual(&self, energy: f64) -> f64 {
        let n = self.v.len();
        let h2 = self.h * self.h;
        let f = |i: usize| 1.0 - h2 * (self.v[i] - energy) / self.lam / 12.0;
        // outermost classically allowed index, clamped into the interior
        let mut m = (self.start + 2)..(n - 2);
        let m = m
            .rfind(|&i| self.v[i] <= energy)
            .unwrap_or(n / 2)
            .clamp(self.start + 2, n - 3);

        // outward to m+1
        let mut out = vec![0.0f64; m + 2];
        out[self.start] = 0.0;
        out[self.start + 1] = 1e-12;
        for i in (self.start + 1)..=m {
            out[i + 1] = ((12.0 - 10.0 * f(i)) * out[i] - f(i - 1) * out[i - 1]) / f(i + 1);
            if out[i + 1].abs() > 1e100 {
                for y in out[..=i + 1].iter_mut() {
                    *y *= 1e-100;
                }
            }
        }
        // inward to m-1
        let mut inw = vec![0.0f64; n];
        inw[n - 1] = 0.0;
        inw[n - 2] = 1e-12;
        for i in ((m)..=(n - 2)).rev() {
            inw[i - 1] = ((12.0 - 10.0 * f(i)) * inw[i] - f(i + 1) * inw[i + 1]) / f(i - 1);
            if inw[i - 1].abs() > 1e100 {
                for y in inw[i - 1..].iter_mut() {
                    *y *= 1e-100;
                }
            }
        }
        if out[m] == 0.0 || inw[m] == 0.0 {
            return f64::INFINITY;
        }
        let scale = out[m] / inw[m];
        let t1 = f(m + 1) * inw[m + 1] * scale;
        let t2 = f(m - 1) * out[m - 1];
        let t3 = (12.0 - 10.0 * f(m)) * out[m];
        let delta = t1 + t2 - t3;
        delta.abs() / (t1.abs() + t2.abs() + t3.abs()).max(f64::MIN_POSITIVE)
    }
}

/// Solve for the n-th eigenvalue (node count n) of
/// u'' = (V_eff − E)/λ · u on the given grid.
pub fn solve_radial<F: Fn(f64) -> f64>(
    effective_potential: F,
    lam: f64,
    n: u32,
    l: u32,
    grid: &RadialGrid,
    tol: f64,
) -> Result<OracleResult> {
    if !(lam > 0.0) {
        return Err(Error::Domain(format!("lambda must be positive, got {lam}")));
    }
    let mut mesh = Mesh::build(&effective_potential, lam, grid)?;

    let v_min = mesh.v.iter().cloned().fold(f64::INFINITY, f64::min);
    let v_top = mesh.v[mesh.v.len() - 1];
    let span = (v_top - v_min).abs().max(1.0);
    let mut lo = v_min + 1e-12 * span;
    let mut hi = v_top - 1e-12 * span;
    if !(lo < hi) {
        return Err(Error::Numeric(
            "empty energy search window: potential has no well below its boundary value".into(),
        ));
    }

    mesh.set_start(lo);
    let (top_nodes, _) = {
        mesh.set_start(hi);
        mesh.sweep(hi)
    };
    if top_nodes <= n {
        return Err(Error::Numeric(format!(
            "no bound state with {n} nodes: only {top_nodes} node crossings below the dissociation window"
        )));
    }

    // bisect on the node count; the jump n -> n+1 is the eigenvalue
    let width_goal = |e: f64| tol.min((e.abs() * 1e-12).max(1e-11));
    for _ in 0..240 {
        let mid = 0.5 * (lo + hi);
        mesh.set_start(mid);
        let (nodes, _) = mesh.sweep(mid);
        if nodes > n {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo < width_goal(mid) {
            break;
        }
    }
    let energy = 0.5 * (lo + hi);

    mesh.set_start(lo);
    let (node_count, _) = mesh.sweep(lo);
    mesh.set_start(energy);
    let residual = mesh.matching_residual(energy);
    let converged = (hi - lo) <= tol && residual <= 1e-8 && node_count == n;

    Ok(OracleResult {
        n,
        l,
        energy,
        node_count,
        converged,
        residual,
    })
}

/// Closed-form energy next to the oracle on both the Pekeris-approximated
/// and the exact centrifugal Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Validation {
    pub e_closed: f64,
    pub e_oracle_approx: f64,
    pub e_oracle_exact: f64,
    pub approx_converged: bool,
    pub exact_converged: bool,
}

/// Compare the closed-form level (n, l) against the oracle.
///
/// `e_oracle_approx` solves the Hamiltonian whose centrifugal term is the
/// Pekeris approximant (the one the closed form diagonalizes exactly);
/// `e_oracle_exact` keeps l(l+1)/r² and quantifies the approximation error.
pub fn validate(
    m: &MoleculeSpec,
    n: u32,
    l: u32,
    grid: &RadialGrid,
    tol: f64,
) -> Result<Validation> {
    let entry = energy_level(m, n, l)?;
    if !entry.physical {
        return Err(Error::NonPhysical(format!(
            "level (n={n}, l={l}) of {} is not physical; nothing to validate",
            m.name
        )));
    }
    let lam = m.lambda();
    let coeffs = m.centrifugal()?;
    let ep = m.ep;

    let v_approx = move |r: f64| {
        ep_evaluate(&ep, r).unwrap_or(f64::INFINITY)
            + lam * centrifugal_approx(r, l, ep.re, ep.alpha, &coeffs, ep.branch).unwrap_or(f64::INFINITY)
    };
    let ll1 = (l as f64) * (l as f64 + 1.0);
    let v_exact =
        move |r: f64| ep_evaluate(&ep, r).unwrap_or(f64::INFINITY) + lam * ll1 / (r * r);

    let approx = solve_radial(v_approx, lam, n, l, grid, tol)?;
    let exact = solve_radial(v_exact, lam, n, l, grid, tol)?;
    Ok(Validation {
        e_closed: entry.energy,
        e_oracle_approx: approx.energy,
        e_oracle_exact: exact.energy,
        approx_converged: approx.converged,
        exact_converged: exact.converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::{Branch, EpParams};

    fn ar2() -> MoleculeSpec {
        let ep = EpParams::new(99.55, 25.23, 41.75, 0.6604, Branch::Plus, 3.759).unwrap();
        MoleculeSpec::new("Ar2", ep, 19.9812).unwrap()
    }

    #[test]
    fn grid_invariants() {
        assert!(RadialGrid::new(1.0, 0.5, 2000).is_err());
        assert!(RadialGrid::new(0.0, 10.0, 2000).is_err());
        assert!(RadialGrid::new(0.1, 10.0, 999).is_err());
        let g = RadialGrid::default_for(3.759, 0.6604);
        assert_eq!(g.points, 20001);
        assert!(g.r_min > 0.0 && g.r_max > 60.0);
    }

    #[test]
    fn harmonic_oscillator_spectrum() {
        // V = k(r−r0)²/2 with λ = 1 and k = 2 gives E_n = 2n+1, embedded far
        // from the boundaries.
        let grid = RadialGrid::new(0.5, 19.5, 4001).unwrap();
        for n in 0..4u32 {
            let res = solve_radial(|r| (r - 10.0) * (r - 10.0), 1.0, n, 0, &grid, 1e-9).unwrap();
            let want = 2.0 * n as f64 + 1.0;
            assert!(
                ((res.energy - want) / want).abs() < 1e-6,
                "n={n}: {} vs {want}",
                res.energy
            );
            assert!(res.converged, "n={n}: residual {}", res.residual);
            assert_eq!(res.node_count, n);
        }
    }

    #[test]
    fn eigenvalues_increase_with_n() {
        let grid = RadialGrid::new(0.5, 19.5, 4001).unwrap();
        let mut prev = f64::NEG_INFINITY;
        for n in 0..5u32 {
            let e = solve_radial(|r| (r - 10.0) * (r - 10.0), 1.0, n, 0, &grid, 1e-9)
                .unwrap()
                .energy;
            assert!(e > prev);
            prev = e;
        }
    }

    #[test]
    fn missing_bound_state_is_an_error() {
        // shallow well with only a few bound states below the window top
        let grid = RadialGrid::new(0.5, 19.5, 2001).unwrap();
        let shallow = |r: f64| {
            let d = r - 10.0;
            (d * d).min(4.0)
        };
        let err = solve_radial(shallow, 1.0, 30, 0, &grid, 1e-9);
        assert!(err.is_err());
    }

    #[test]
    fn ar2_s_wave_matches_closed_form() {
        let m = ar2();
        let ep = m.ep;
        let lam = m.lambda();
        let grid = RadialGrid::default_for(ep.re, ep.alpha);
        for n in [0u32, 3] {
            let res = solve_radial(
                move |r| ep_evaluate(&ep, r).unwrap_or(f64::INFINITY),
                lam,
                n,
                0,
                &grid,
                1e-6,
            )
            .unwrap();
            let closed = energy_level(&m, n, 0).unwrap().energy;
            assert!(
                (res.energy - closed).abs() < 1e-4,
                "n={n}: {} vs {closed}",
                res.energy
            );
            assert!(res.converged, "residual {}", res.residual);
        }
    }

    #[test]
    fn grid_refinement_fourth_order() {
        let m = ar2();
        let ep = m.ep;
        let lam = m.lambda();
        let pot = move |r: f64| ep_evaluate(&ep, r).unwrap_or(f64::INFINITY);
        let coarse = RadialGrid::new(0.07518, 64.3, 10001).unwrap();
        let fine = RadialGrid::new(0.07518, 64.3, 20001).unwrap();
        let e1 = solve_radial(pot, lam, 0, 0, &coarse, 1e-9).unwrap().energy;
        let e2 = solve_radial(pot, lam, 0, 0, &fine, 1e-9).unwrap().energy;
        // halving the step must move the eigenvalue by far less than tol/4
        assert!((e1 - e2).abs() < 2.5e-7, "moved by {}", (e1 - e2).abs());
    }

    #[test]
    fn validate_ar2_l0_routes_coincide() {
        let m = ar2();
        let grid = RadialGrid::default_for(m.ep.re, m.ep.alpha);
        let v = validate(&m, 1, 0, &grid, 1e-6).unwrap();
        assert!((v.e_closed - v.e_oracle_approx).abs() < 1e-3);
        assert!((v.e_closed - v.e_oracle_exact).abs() < 1e-3);
        assert!((v.e_oracle_approx - v.e_oracle_exact).abs() < 1e-4);
    }

    #[test]
    fn validate_rejects_unphysical() {
        let m = ar2();
        let grid = RadialGrid::default_for(m.ep.re, m.ep.alpha);
        assert!(validate(&m, 7, 0, &grid, 1e-6).is_err());
    }
}
