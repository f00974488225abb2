//! Cross-module oracle checks: every closed-form path is validated against
//! an independent brute-force computation on seeded random configurations.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use grover_phase::fullsim::{grover_step, init_uniform, marked_probability};
use grover_phase::kernel::{
    apply, build_kernel, kernel_power_brute, kernel_power_closed, ComplexMat2, SubspaceState,
    TOL_MATRIX, TOL_NORM, TOL_UNITARY,
};
use grover_phase::probability::{m_min_general, p_max_exact, success_probability};
use grover_phase::spectral::spectral_params;
use grover_phase::PhaseConfig;

fn random_config(rng: &mut ChaCha8Rng) -> PhaseConfig {
    let beta = rng.random_range(1e-3..FRAC_PI_2);
    let phi = rng.random_range(0.0..2.0 * PI);
    let theta = rng.random_range(0.0..2.0 * PI);
    PhaseConfig::new(beta, phi, theta).unwrap()
}

#[test]
fn closed_power_tracks_brute_force_through_ten_thousand() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst = 0.0f64;
    for _ in 0..60 {
        let cfg = random_config(&mut rng);
        if spectral_params(cfg).is_err() {
            continue;
        }
        let g = build_kernel(cfg);
        let mut brute = ComplexMat2::identity();
        for m in 0..=10_000u64 {
            let closed = kernel_power_closed(cfg, m).unwrap();
            worst = worst.max(closed.max_abs_diff(&brute));
            brute = brute * g;
        }
    }
    assert!(worst <= TOL_MATRIX, "worst entrywise gap {worst:e}");
}

#[test]
fn kernel_powers_stay_unitary() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeed);
    for _ in 0..1000 {
        let cfg = random_config(&mut rng);
        let Ok(_) = spectral_params(cfg) else { continue };
        for m in 0..=100u64 {
            let g = kernel_power_closed(cfg, m).unwrap();
            let defect = g.unitarity_defect();
            assert!(defect <= TOL_UNITARY, "defect {defect:e} at {cfg:?} m={m}");
        }
    }
}

#[test]
fn probability_matches_brute_evolution() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc);
    for trial in 0..1000 {
        let cfg = random_config(&mut rng);
        let m = rng.random_range(0..=500u64);
        let state = apply(kernel_power_brute(cfg, m), SubspaceState::initial(cfg));
        let oracle = 1.0 - state.amp_perp.norm_sqr();
        let p = success_probability(cfg, m);
        assert!(
            (p - oracle).abs() <= 1e-10,
            "trial {trial}: {cfg:?} m={m}: {p} vs {oracle}"
        );
        assert!((-1e-12..=1.0 + 1e-12).contains(&p));
        assert!((state.norm() - 1.0).abs() <= 500.0 * TOL_NORM);
    }
}

#[test]
fn subspace_matches_full_simulation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf011);
    for n in 2..=8u32 {
        for _ in 0..8 {
            let phi = rng.random_range(0.0..2.0 * PI);
            let theta = rng.random_range(0.0..2.0 * PI);
            let tau = rng.random_range(0..(1usize << n));
            let cfg = PhaseConfig::from_qubits(n, phi, theta).unwrap();

            let mut state = init_uniform(n).unwrap();
            for m in 0..=120u64 {
                let full = marked_probability(&state, tau).unwrap();
                let reduced = success_probability(cfg, m);
                assert!(
                    (full - reduced).abs() <= 1e-10,
                    "n={n} tau={tau} m={m}: {full} vs {reduced}"
                );
                state = grover_step(&state, tau, phi, theta).unwrap();
            }
        }
    }
}

#[test]
fn integer_optimum_beats_neighbors_and_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b7a);
    let mut tested = 0;
    while tested < 300 {
        let cfg = random_config(&mut rng);
        let Ok(sp) = spectral_params(cfg) else { continue };
        if sp.sin_w < 1e-3 || m_min_general(cfg).is_err() {
            continue;
        }
        tested += 1;

        let out = p_max_exact(cfg);
        assert!(out.p >= success_probability(cfg, out.m + 1) - 1e-12);
        if out.m > 0 {
            assert!(out.p >= success_probability(cfg, out.m - 1) - 1e-12);
        }
        let period = (PI / sp.w).ceil() as u64 + 1;
        for m in 0..=period {
            assert!(
                success_probability(cfg, m) <= out.p + 1e-12,
                "{cfg:?}: scan found better m={m}"
            );
        }
    }
}
