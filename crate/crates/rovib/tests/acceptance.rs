//! Acceptance gate: one test per release criterion, each printing a single
//! PASS line (visible with --nocapture). Tolerances are pinned here and are
//! the contract, not suggestions.

use rovib::cli::{self, parse_molecule_config};
use rovib::nu::{self, NuProblem};
use rovib::oracle::{validate, RadialGrid};
use rovib::potential::EpParams;
use rovib::spectrum::{energy_level, n_max, MoleculeSpec};
use rovib::wavefunction::{integrate, normalize_quadrature, normalize_series, RadialWavefunction};

fn ar2() -> MoleculeSpec {
    parse_molecule_config(cli::AR2_CFG).unwrap()
}

fn h2() -> MoleculeSpec {
    parse_molecule_config(cli::H2_ROW1_CFG).unwrap()
}

/// Ground-state energies across all four tabulated H2 parameter sets
/// reproduce the reference column to within 0.05 cm^-1.
#[test]
fn criterion_1_h2_ground_state_rows() {
    let report = cli::run_tables(false).unwrap();
    let rows: Vec<_> = report.rows.iter().filter(|r| r.table == "table2").collect();
    assert_eq!(rows.len(), 4);
    for r in &rows {
        assert_eq!(r.status, "ok", "{}: {:?} vs {:?}", r.label, r.computed, r.reference);
        let dev = (r.computed.unwrap() - r.reference.unwrap()).abs();
        assert!(dev <= 0.05, "{}: deviation {dev}", r.label);
    }
    println!("criterion 1 (ground-state parameter rows within 0.05 cm^-1): PASS");
}

/// Ar2 s-wave transition energies n = 1..6 reproduce the reference column to
/// within 0.05 cm^-1; the n = 7 transition involves a non-physical level, is
/// computed only on request, and is flagged either way.
#[test]
fn criterion_2_ar2_transitions() {
    let strict = cli::run_tables(false).unwrap();
    let n7 = strict
        .rows
        .iter()
        .find(|r| r.table == "table3" && r.label == "n=7")
        .unwrap();
    assert_eq!(n7.status, "skipped_nonphysical");
    assert!(n7.computed.is_none());

    let permissive = cli::run_tables(true).unwrap();
    for r in permissive.rows.iter().filter(|r| r.table == "table3") {
        if r.label == "n=7" {
            assert_eq!(r.status, "ok_nonphysical", "{:?}", r);
        } else {
            assert_eq!(r.status, "ok", "{}: {:?} vs {:?}", r.label, r.computed, r.reference);
        }
        let dev = (r.computed.unwrap() - r.reference.unwrap()).abs();
        assert!(dev <= 0.05, "{}: deviation {dev}", r.label);
    }
    println!("criterion 2 (transition table within 0.05 cm^-1, n=7 flagged): PASS");
}

/// The full (n, l) level table reproduces the references: Ar2 to 0.05 cm^-1,
/// H2 to 0.5 cm^-1, and the blank Ar2 (2,2) cell is reported absent rather
/// than fabricated.
#[test]
fn criterion_3_level_table() {
    let report = cli::run_tables(false).unwrap();
    let rows: Vec<_> = report.rows.iter().filter(|r| r.table == "table4").collect();
    assert_eq!(rows.len(), 15 + 15);
    let mut absent = 0;
    for r in &rows {
        if r.label == "Ar2 n=2 l=2" {
            assert_eq!(r.status, "absent_in_reference");
            assert!(r.reference.is_none() && r.computed.is_none());
            absent += 1;
            continue;
        }
        assert_eq!(r.status, "ok", "{}: {:?} vs {:?}", r.label, r.computed, r.reference);
        let tol = if r.label.starts_with("H2") { 0.5 } else { 0.05 };
        let dev = (r.computed.unwrap() - r.reference.unwrap()).abs();
        assert!(dev <= tol, "{}: deviation {dev}", r.label);
    }
    assert_eq!(absent, 1);
    println!("criterion 3 (level table within tolerance, blank cell absent): PASS");
}

/// The Ar2 bound-state count bound lands in [6.5, 6.9] with floor 6.
#[test]
fn criterion_4_ar2_level_count() {
    let nm = n_max(&ar2());
    assert!(
        (6.5..=6.9).contains(&nm.value),
        "n_max = {}",
        nm.value
    );
    assert_eq!(nm.floor, 6);
    println!("criterion 4 (Ar2 n_max in [6.5, 6.9], floor 6): PASS");
}

fn level_tol(e: f64) -> f64 {
    (1e-8 * e.abs()).max(1e-3)
}

/// Closed-form energies agree with the grid eigenvalue oracle on the
/// approximated Hamiltonian for n <= 3, l <= 2 on both molecules, and for
/// l = 0 also with the exact Hamiltonian, to max(1e-3 cm^-1, 1e-8 relative).
#[test]
fn criterion_5_oracle_equivalence() {
    for m in [ar2(), h2()] {
        let grid = RadialGrid::default_for(m.ep.re, m.ep.alpha);
        for n in 0..=3u32 {
            for l in 0..=2u32 {
                let v = validate(&m, n, l, &grid, 1e-7).unwrap();
                assert!(v.approx_converged, "{} ({n},{l}) oracle did not converge", m.name);
                let dev = (v.e_closed - v.e_oracle_approx).abs();
                assert!(
                    dev <= level_tol(v.e_closed),
                    "{} ({n},{l}): closed {} vs oracle {} (dev {dev})",
                    m.name,
                    v.e_closed,
                    v.e_oracle_approx
                );
                if l == 0 {
                    assert!(v.exact_converged, "{} ({n},0) exact oracle did not converge", m.name);
                    let dev = (v.e_closed - v.e_oracle_exact).abs();
                    assert!(
                        dev <= level_tol(v.e_closed),
                        "{} ({n},0): closed {} vs exact oracle {} (dev {dev})",
                        m.name,
                        v.e_closed,
                        v.e_oracle_exact
                    );
                }
            }
        }
    }
    println!("criterion 5 (oracle equivalence to max(1e-3 cm^-1, 1e-8 rel)): PASS");
}

/// The rotational-approximation error report exists: for l = 0 the exact and
/// approximated Hamiltonians coincide (deviation at oracle accuracy), while
/// for l = 1, 2 a finite deviation is computed and reported.
#[test]
fn criterion_6_approximation_error_report() {
    let m = h2();
    let grid = RadialGrid::default_for(m.ep.re, m.ep.alpha);
    let mut report = String::new();
    for l in 0..=2u32 {
        let v = validate(&m, 1, l, &grid, 1e-7).unwrap();
        assert!(v.exact_converged, "l={l}");
        let dev = (v.e_oracle_exact - v.e_oracle_approx).abs();
        if l == 0 {
            assert!(dev <= 1e-3, "l=0 Hamiltonians should coincide, dev = {dev}");
        } else {
            assert!(dev.is_finite() && dev > 0.0, "l={l}: dev = {dev}");
        }
        report.push_str(&format!("l={l}: approximation error {dev:.6} cm^-1\n"));
    }
    assert_eq!(report.lines().count(), 3);
    print!("{report}");
    println!("criterion 6 (centrifugal approximation error reported for l=1,2): PASS");
}

/// Wavefunction suite: quadrature-normalized Ar2 s-wave states integrate to
/// one in r (1e-8), the closed-sum normalization matches quadrature (1e-6),
/// distinct states are orthogonal (1e-6), node counts equal n, and every
/// state satisfies the bound-state shape conditions (tau' < 0, 2K > 0).
#[test]
fn criterion_7_wavefunctions() {
    let m = ar2();
    let mut states = Vec::new();
    for n in 0..=3u32 {
        let e = energy_level(&m, n, 0).unwrap();
        assert!(e.physical && 2.0 * e.k > 0.0, "n={n}");

        let sol = nu::derive(&NuProblem::ep_specialization(e.k * e.k, e.q, e.s * e.s));
        assert!(sol.physical && sol.tau_prime < 0.0, "n={n}: tau' = {}", sol.tau_prime);

        let nq = normalize_quadrature(&m, &e).unwrap();
        let ns = normalize_series(&m, &e).unwrap();
        assert!(((ns - nq) / nq).abs() <= 1e-6, "n={n}: {ns} vs {nq}");

        let wf = RadialWavefunction::new(&m, e).unwrap();
        let total = integrate(&|r| wf.evaluate(r).unwrap_or(0.0).powi(2), 1e-6, 100.0, 1e-10)
            .unwrap();
        assert!((total - 1.0).abs() <= 1e-8, "n={n}: norm {total}");

        let mut nodes = 0u32;
        let mut prev = 0.0f64;
        for i in 1..8000 {
            let v = wf.evaluate(0.2 + i as f64 * 0.0025).unwrap();
            if prev != 0.0 && v * prev < 0.0 {
                nodes += 1;
            }
            if v != 0.0 {
                prev = v;
            }
        }
        assert_eq!(nodes, n, "node count");
        states.push(wf);
    }
    for i in 0..states.len() {
        for j in (i + 1)..states.len() {
            let overlap = integrate(
                &|r| states[i].evaluate(r).unwrap_or(0.0) * states[j].evaluate(r).unwrap_or(0.0),
                1e-6,
                100.0,
                1e-10,
            )
            .unwrap();
            assert!(overlap.abs() <= 1e-6, "<{i}|{j}> = {overlap}");
        }
    }
    println!("criterion 7 (normalization, orthogonality, nodes, shape conditions): PASS");
}

/// The parametric solver specializes correctly for these potentials
/// (c4 = 0, c5 = -1/2, c8 = K^2, c9 = S^2) and its quantization condition is
/// algebraically equivalent to the closed-form energy: over 1000 random
/// parameter draws the residual vanishes at the closed-form K to 1e-12
/// relative.
#[test]
fn criterion_8_parametric_solver_equivalence() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xacce97);
    let mut checked = 0u32;
    while checked < 1000 {
        let de = rng.gen_range(50.0..5.0e4);
        let sigma = rng.gen_range(1.0..30.0);
        let delta = sigma + rng.gen_range(1.0..30.0);
        let alpha = rng.gen_range(0.2..1.5);
        let re = rng.gen_range(0.5..5.0);
        let mu = rng.gen_range(0.5..50.0);
        let n = rng.gen_range(0..6u32);
        let l = rng.gen_range(0..3u32);
        let Ok(ep) = EpParams::new(de, sigma, delta, alpha, rovib::potential::Branch::Plus, re)
        else {
            continue;
        };
        let m = MoleculeSpec::new("draw", ep, mu).unwrap();
        let Ok(e) = energy_level(&m, n, l) else { continue };
        if !e.physical {
            continue;
        }

        let p = NuProblem::ep_specialization(e.k * e.k, e.q, e.s * e.s);
        let sol = nu::derive(&p);
        assert_eq!(sol.c4, 0.0);
        assert_eq!(sol.c5, -0.5);
        assert!((sol.c8 - e.k * e.k).abs() <= 1e-12 * (1.0 + e.k * e.k));
        assert!((sol.c9 - e.s * e.s).abs() <= 1e-9 * (1.0 + e.s * e.s), "{} vs {}", sol.c9, e.s * e.s);

        let residual = nu::energy_residual(n, &p).unwrap();
        let scale = 1.0 + e.q.abs() + e.s * e.s + (n as f64 + 0.5 + e.s).powi(2);
        assert!(
            residual.abs() <= 1e-12 * scale,
            "residual {residual} at n={n}, l={l} (scale {scale})"
        );
        checked += 1;
    }
    println!("criterion 8 (quantization condition equivalent to closed form, 1000 draws): PASS");
}
