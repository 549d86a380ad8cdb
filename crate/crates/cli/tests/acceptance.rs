//! Acceptance criteria, one test per criterion. Each prints a single
//! pass/fail line with its measured time and asserts both the checked
//! identities (exact equality, zero tolerance) and the time bound.

use std::process::{Command, Output};
use std::time::Instant;

use bcal_core::boolean::{
    bconv_add, bconv_mul, binomial_identity_check, check_multiplicative, cumulants_to_moments,
    moments_to_cumulants, moments_via_compositions, mul_cumulants, shift_one,
};
use bcal_core::model::Letter::{X, Y};
use bcal_core::model::{AlgElement, EntryPool, JointState};
use bcal_core::ov::distribution::{
    ov_cumulants_to_moments, ov_moments_to_cumulants, ov_series_identity_holds, ov_shift_one,
    OVDistribution,
};
use bcal_core::ov::joint::{
    verify_flattening_dressed, verify_flattening_units, verify_ov_vanishing, OVJointState,
};
use bcal_core::ov::multilinear::MultilinearMap;
use bcal_core::ov::series::MulSeries;
use bcal_core::ov::word::OvElement;
use bcal_core::sampling::{
    rand_joint_state, rand_moment_seq, rand_ov_joint_state, rand_ov_pool,
};
use bcal_core::verify::scalar_suite;
use bcal_core::{Matrix, Rat, TruncatedSeries};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn run_criterion(name: &str, bound_ms: Option<u128>, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = body();
    let ms = start.elapsed().as_millis();
    let timed_out = bound_ms.is_some_and(|b| ms > b);
    let status = if outcome.is_ok() && !timed_out {
        "PASS"
    } else {
        "FAIL"
    };
    match bound_ms {
        Some(b) => println!("criterion {name}: {status} ({ms} ms, bound {b} ms)"),
        None => println!("criterion {name}: {status} ({ms} ms)"),
    }
    if let Err(e) = outcome {
        panic!("criterion {name}: {e}");
    }
    if let Some(b) = bound_ms {
        assert!(ms <= b, "criterion {name}: {ms} ms exceeds the {b} ms bound");
    }
}

#[test]
fn criterion_01_conversion_roundtrip() {
    run_criterion("01 conversion roundtrip", Some(1_000), || {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for i in 0..100 {
            let m = rand_moment_seq(10, &mut rng);
            let back = cumulants_to_moments(&moments_to_cumulants(&m));
            ensure!(back == m, "roundtrip failed on instance {i}");
        }
        Ok(())
    });
}

#[test]
fn criterion_02_composition_oracle() {
    run_criterion("02 composition oracle", Some(1_000), || {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for i in 0..20 {
            let b = rand_moment_seq(10, &mut rng);
            let m = cumulants_to_moments(&b);
            for n in 1..=10 {
                let via_partitions =
                    moments_via_compositions(&b, n).map_err(|e| e.to_string())?;
                ensure!(
                    via_partitions == m[n - 1],
                    "partition sum differs at instance {i}, order {n}"
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_03_adjacent_generators_vanish() {
    run_criterion("03 adjacent generators vanish", Some(10_000), || {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pool = EntryPool::structured();
        for _ in 0..50 {
            let state = rand_joint_state(14, &mut rng);
            for n in 0..=4usize {
                for m in 0..=4 - n {
                    let report =
                        bcal_core::model::verify_vanishing(&state, n, m, &pool, 2, &mut rng)
                            .map_err(|e| e.to_string())?;
                    ensure!(
                        report.passed(),
                        "nonzero cumulant: {:?}",
                        report.violations[0]
                    );
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_unit_and_product_entry_rules() {
    run_criterion("04 unit and product entry rules", Some(30_000), || {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..25 {
            let state = rand_joint_state(14, &mut rng);
            let pool = bcal_core::sampling::rand_entry_pool(&mut rng);
            for n in 1..=5 {
                let units = bcal_core::model::verify_unit_rules(&state, n, &pool, 2, &mut rng)
                    .map_err(|e| e.to_string())?;
                ensure!(units.passed(), "unit rule violated: {:?}", units.violations[0]);
                let products =
                    bcal_core::model::verify_product_rules(&state, n, &pool, 2, &mut rng)
                        .map_err(|e| e.to_string())?;
                ensure!(
                    products.passed(),
                    "product rule violated: {:?}",
                    products.violations[0]
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_05_additive_and_multiplicative_transforms() {
    run_criterion("05 additive and multiplicative transforms", Some(10_000), || {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let z = AlgElement::letter(X)
            .add(&AlgElement::letter(Y))
            .add(&AlgElement::word(vec![X, Y]));
        let sum = AlgElement::letter(X).add(&AlgElement::letter(Y));
        for i in 0..100 {
            let state = rand_joint_state(16, &mut rng);
            let mx = &state.moments_x()[..8];
            let my = &state.moments_y()[..8];
            // Additivity: cumulants of the formula path and of the model
            // path coincide.
            let b_formula = moments_to_cumulants(&bconv_add(mx, my).map_err(|e| e.to_string())?);
            let b_oracle = moments_to_cumulants(
                &state.moments_of(&sum, 8).map_err(|e| e.to_string())?,
            );
            ensure!(b_formula == b_oracle, "additive B-transforms differ at pair {i}");
            // Multiplicative: formula path vs model path, then the
            // product identity for the shifted transforms.
            let via_formula = bconv_mul(mx, my).map_err(|e| e.to_string())?;
            let via_model = state.moments_of(&z, 8).map_err(|e| e.to_string())?;
            ensure!(
                via_formula == via_model,
                "multiplicative transforms differ at pair {i}"
            );
            let check = check_multiplicative(mx, my).map_err(|e| e.to_string())?;
            ensure!(
                check.holds(),
                "B-product identity fails at pair {i}: component {:?}",
                check.first_mismatch
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_06_binomial_identity() {
    run_criterion("06 binomial identity", Some(1_000), || {
        for n in 0..=20 {
            for a in 0..=n {
                for b in 0..=n - a {
                    ensure!(
                        binomial_identity_check(n, a, b).map_err(|e| e.to_string())?,
                        "identity fails at n={n} a={a} b={b}"
                    );
                }
            }
        }
        Ok(())
    });
}

/// A scalar series lifted to a dim-1 multilinear series.
fn mulseries_from_scalar(coeffs: &[Rat]) -> MulSeries<Rat> {
    let comps = coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut map = MultilinearMap::zero(1, j);
            map.set(&vec![0; j], Matrix::from_rows(vec![vec![c.clone()]]).unwrap());
            map
        })
        .collect();
    MulSeries::from_components(comps).expect("matching arities")
}

/// The dim-1 collapse of a multilinear series back to its coefficients.
fn scalar_from_mulseries(s: &MulSeries<Rat>) -> Vec<Rat> {
    (0..s.order())
        .map(|j| s.component(j).get(&vec![0; j]).get(0, 0).clone())
        .collect()
}

#[test]
fn criterion_07_dim_one_collapse() {
    run_criterion("07 dim-1 collapse", Some(10_000), || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let letters = [X, Y];
        for i in 0..50 {
            let m_x = rand_moment_seq(6, &mut rng);
            let m_y = rand_moment_seq(6, &mut rng);

            // Conversions.
            let dist = OVDistribution::from_scalar_moments(&m_x).map_err(|e| e.to_string())?;
            let b_ov = ov_moments_to_cumulants(&dist);
            let b_scalar = moments_to_cumulants(&m_x);
            ensure!(
                scalar_from_mulseries(&b_ov) == b_scalar,
                "cumulant conversion differs at input {i}"
            );
            let back = ov_cumulants_to_moments(&mulseries_from_scalar(&b_scalar));
            ensure!(back == dist, "moment conversion differs at input {i}");

            // Shift.
            ensure!(
                scalar_from_mulseries(&ov_shift_one(&b_ov).map_err(|e| e.to_string())?)
                    == shift_one(&b_scalar),
                "shift differs at input {i}"
            );

            // Series arithmetic.
            let f = mulseries_from_scalar(&m_x);
            let g = mulseries_from_scalar(&m_y);
            let fs = TruncatedSeries::new(m_x.clone()).unwrap();
            let gs = TruncatedSeries::new(m_y.clone()).unwrap();
            ensure!(
                scalar_from_mulseries(&f.checked_add(&g).map_err(|e| e.to_string())?)
                    == fs.checked_add(&gs).map_err(|e| e.to_string())?.coeffs(),
                "series sum differs at input {i}"
            );
            ensure!(
                scalar_from_mulseries(&f.checked_mul(&g).map_err(|e| e.to_string())?)
                    == fs.checked_mul(&gs).map_err(|e| e.to_string())?.coeffs(),
                "series product differs at input {i}"
            );

            // The joint functional, mixed cumulants, and convolutions.
            let ov_state = OVJointState::from_scalar(&m_x, &m_y).map_err(|e| e.to_string())?;
            let state = JointState::new(m_x, m_y).map_err(|e| e.to_string())?;
            let word: Vec<_> = (0..6)
                .map(|_| letters[rand::Rng::random_range(&mut rng, 0..2usize)])
                .collect();
            let ov_word = word.iter().fold(OvElement::unit(1), |acc, &l| {
                acc.mul(&OvElement::letter(l, 1))
            });
            ensure!(
                ov_state.phi_elem(&ov_word).map_err(|e| e.to_string())?.get(0, 0)
                    == &state.phi_word(&word).map_err(|e| e.to_string())?,
                "functional differs at input {i} on {word:?}"
            );
            let ov_entries = [
                OvElement::letter(X, 1),
                OvElement::letter(X, 1).mul(&OvElement::letter(Y, 1)),
                OvElement::letter(Y, 1),
            ];
            let entries = [
                AlgElement::letter(X),
                AlgElement::word(vec![X, Y]),
                AlgElement::letter(Y),
            ];
            let units = vec![Matrix::identity(1); 2];
            ensure!(
                ov_state
                    .mixed_cumulant(&ov_entries, &units)
                    .map_err(|e| e.to_string())?
                    .get(0, 0)
                    == &state.mixed_cumulant(&entries).map_err(|e| e.to_string())?,
                "mixed cumulant differs at input {i}"
            );
            let add_ov = scalar_from_mulseries(&ov_state.bconv_add().map_err(|e| e.to_string())?);
            let add_scalar = moments_to_cumulants(
                &bconv_add(state.moments_x(), state.moments_y()).map_err(|e| e.to_string())?,
            );
            ensure!(add_ov == add_scalar, "additive convolution differs at input {i}");
            let mul_ov = scalar_from_mulseries(&ov_state.bconv_mul().map_err(|e| e.to_string())?);
            let mul_scalar = moments_to_cumulants(
                &bconv_mul(state.moments_x(), state.moments_y()).map_err(|e| e.to_string())?,
            );
            ensure!(mul_ov == mul_scalar, "multiplicative convolution differs at input {i}");
        }
        Ok(())
    });
}

#[test]
fn criterion_08_flattening_identities() {
    run_criterion("08 flattening identities", Some(30_000), || {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..10 {
            let state = rand_ov_joint_state(2, 8, &mut rng);
            let pool = rand_ov_pool(2, &mut rng);
            for n in 1..=4 {
                let units = verify_flattening_units(&state, n, &pool, 3, &mut rng)
                    .map_err(|e| e.to_string())?;
                ensure!(
                    units.passed(),
                    "all-unit flattening violated: {:?}",
                    units.violations[0]
                );
                let dressed = verify_flattening_dressed(&state, n, &pool, 3, &mut rng)
                    .map_err(|e| e.to_string())?;
                ensure!(
                    dressed.passed(),
                    "dressed flattening violated: {:?}",
                    dressed.violations[0]
                );
            }
        }
        Ok(())
    });
}

/// The 20 seeded states shared by criteria 9 and 10.
fn criterion_9_states() -> Vec<OVJointState<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    (0..20).map(|_| rand_ov_joint_state(2, 5, &mut rng)).collect()
}

#[test]
fn criterion_09_ov_convolution_identities() {
    run_criterion("09 ov convolution identities", Some(120_000), || {
        for (i, state) in criterion_9_states().iter().enumerate() {
            let x_plus_y = OvElement::letter(X, 2).add(&OvElement::letter(Y, 2));
            let add_oracle = ov_moments_to_cumulants(
                &state
                    .distribution_of(&x_plus_y, 5)
                    .map_err(|e| e.to_string())?,
            );
            ensure!(
                state.bconv_add().map_err(|e| e.to_string())? == add_oracle,
                "additive identity fails at state {i}"
            );
            let lhs = ov_shift_one(&state.bconv_mul().map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let bx = ov_moments_to_cumulants(state.dist_x());
            let by = ov_moments_to_cumulants(state.dist_y());
            let rhs = ov_shift_one(&bx)
                .map_err(|e| e.to_string())?
                .checked_mul(&ov_shift_one(&by).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            ensure!(lhs == rhs, "multiplicative identity fails at state {i}");
        }
        Ok(())
    });
}

#[test]
fn criterion_10_series_identity_for_all_distributions() {
    run_criterion("10 series identity M = B(1+IM)", None, || {
        for (i, state) in criterion_9_states().iter().enumerate() {
            let x_plus_y = OvElement::letter(X, 2).add(&OvElement::letter(Y, 2));
            let x = OvElement::letter(X, 2);
            let y = OvElement::letter(Y, 2);
            let z = x.add(&y).add(&x.mul(&y));
            let dists = [
                state.dist_x().clone(),
                state.dist_y().clone(),
                state
                    .distribution_of(&x_plus_y, 5)
                    .map_err(|e| e.to_string())?,
                state.distribution_of(&z, 5).map_err(|e| e.to_string())?,
            ];
            for (which, dist) in dists.iter().enumerate() {
                let b = ov_moments_to_cumulants(dist);
                ensure!(
                    ov_series_identity_holds(dist, &b).map_err(|e| e.to_string())?,
                    "series identity fails at state {i}, distribution {which}"
                );
            }
        }
        Ok(())
    });
}

fn bcal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bcal"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_11_cli_determinism() {
    run_criterion("11 cli determinism", None, || {
        for args in [
            vec!["verify", "--seed", "0", "-n", "8"],
            vec!["ov-verify", "--seed", "0", "-n", "4", "-d", "2"],
        ] {
            let first = bcal(&args);
            let second = bcal(&args);
            ensure!(
                first.status.code() == Some(0),
                "{args:?} exited {:?}: {}",
                first.status.code(),
                String::from_utf8_lossy(&first.stderr)
            );
            ensure!(
                second.status.code() == Some(0),
                "second run of {args:?} exited {:?}",
                second.status.code()
            );
            ensure!(
                first.stdout == second.stdout,
                "{args:?} reports differ between runs"
            );
            ensure!(!first.stdout.is_empty(), "{args:?} produced no report");
        }
        Ok(())
    });
}

/// The scalar suite itself is part of the shipped surface; make sure the
/// acceptance run exercises it in-process too, not only through the CLI.
#[test]
fn verification_suites_pass() {
    let suite = scalar_suite(8, 0, 20).expect("suite runs");
    assert!(
        suite.passed(),
        "scalar suite violations: {:?}",
        suite.cases.iter().flat_map(|c| &c.report.violations).collect::<Vec<_>>()
    );
    let suite = bcal_core::verify::ov_suite(4, 2, 0, 8).expect("suite runs");
    assert!(suite.passed(), "ov suite found violations");
}

/// Vanishing sweeps are cheap enough to rerun here at the acceptance
/// sizes for the operator-valued side as well.
#[test]
fn ov_vanishing_at_acceptance_size() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..5 {
        let state = rand_ov_joint_state(2, 8, &mut rng);
        let pool = rand_ov_pool(2, &mut rng);
        for before in 0..=1usize {
            for after in 0..=1 - before {
                let report =
                    verify_ov_vanishing(&state, before, after, &pool, 2, &mut rng).unwrap();
                assert!(report.passed(), "violation: {:?}", report.violations[0]);
            }
        }
    }
}

#[test]
fn mul_cumulant_formula_matches_its_shifted_characterization() {
    // The product-cumulant formula b_Z = b_X + b_Y + sum b^k_X b^{n-k+1}_Y
    // is exactly what makes the shifted transforms multiplicative.
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let bx = rand_moment_seq(8, &mut rng);
        let by = rand_moment_seq(8, &mut rng);
        let bz = mul_cumulants(&bx, &by).unwrap();
        let lhs = TruncatedSeries::new(shift_one(&bz)).unwrap();
        let rhs = TruncatedSeries::new(shift_one(&bx))
            .unwrap()
            .checked_mul(&TruncatedSeries::new(shift_one(&by)).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}
