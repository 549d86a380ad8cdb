//! The deterministic identity suites behind `verify` and `ov-verify`.
//!
//! Each suite runs a fixed list of named cases. A case draws its own
//! seeded generator (derived from the suite seed and a per-case salt),
//! so results are independent of execution order and a given
//! `(order, dim, seed, cases)` tuple always produces the same report.

use crate::boolean::{
    bconv_add, bconv_mul, binomial_identity_check, check_multiplicative, cumulants_to_moments,
    moments_of_shift, moments_to_cumulants, moments_via_compositions, shift_one,
    shift_one_via_partitions,
};
use crate::error::Result;
use crate::model::{
    verify_product_rules, verify_unit_rules, verify_vanishing, AlgElement, CheckReport, Letter,
};
use crate::ov::distribution::{
    ov_cumulants_to_moments, ov_moments_to_cumulants, ov_series_identity_holds, ov_shift_one,
    OVDistribution,
};
use crate::ov::joint::{
    verify_flattening_dressed, verify_flattening_units, verify_ov_b_entry_rules,
    verify_ov_product_rule, verify_ov_vanishing, OVJointState,
};
use crate::ov::multilinear::MultilinearMap;
use crate::ov::word::OvElement;
use crate::sampling::{
    rand_entry_pool, rand_joint_state, rand_moment_seq, rand_ov_joint_state, rand_ov_pool,
};
use crate::scalar::{rat_string, Rat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use Letter::{X, Y};

/// One named case of a suite with its check/violation tally.
#[derive(Debug, Clone)]
pub struct CaseOutcome {
    pub id: String,
    pub report: CheckReport,
}

/// A full suite run; cases are sorted by identifier.
#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub cases: Vec<CaseOutcome>,
}

impl SuiteReport {
    fn push(&mut self, id: &str, report: CheckReport) {
        self.cases.push(CaseOutcome {
            id: id.to_string(),
            report,
        });
    }

    fn finish(mut self) -> Self {
        self.cases.sort_by(|a, b| a.id.cmp(&b.id));
        self
    }

    pub fn checks(&self) -> u64 {
        self.cases.iter().map(|c| c.report.checks).sum()
    }

    pub fn violation_count(&self) -> usize {
        self.cases.iter().map(|c| c.report.violations.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.report.passed())
    }
}

fn case_rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn seq_string(s: &[Rat]) -> String {
    let parts: Vec<String> = s.iter().map(rat_string).collect();
    format!("[{}]", parts.join(", "))
}

/// First index at which two rational sequences differ, as a witness.
fn record_seq_eq(report: &mut CheckReport, lhs: &[Rat], rhs: &[Rat], context: &str) {
    let ok = lhs == rhs;
    report.record_check(
        ok,
        || context.to_string(),
        || format!("{} vs {}", seq_string(lhs), seq_string(rhs)),
    );
}

/// Scalar suite: conversion inverses and oracles, the shift formula,
/// additivity and multiplicativity against the joint model, and the
/// positional sweeps for the vanishing / unit / product rules.
pub fn scalar_suite(order: usize, seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut suite = SuiteReport::default();

    // Conversion roundtrips in both directions.
    {
        let mut rng = case_rng(seed, 1);
        let mut report = CheckReport::default();
        for i in 0..cases {
            let m = rand_moment_seq(order, &mut rng);
            let back = cumulants_to_moments(&moments_to_cumulants(&m));
            record_seq_eq(&mut report, &back, &m, &format!("roundtrip m->b->m #{i}"));
            let b = rand_moment_seq(order, &mut rng);
            let forth = moments_to_cumulants(&cumulants_to_moments(&b));
            record_seq_eq(&mut report, &forth, &b, &format!("roundtrip b->m->b #{i}"));
        }
        suite.push("conversion-roundtrip", report);
    }

    // Moments as sums over interval partitions.
    {
        let mut rng = case_rng(seed, 2);
        let mut report = CheckReport::default();
        for i in 0..cases {
            let b = rand_moment_seq(order, &mut rng);
            let m = cumulants_to_moments(&b);
            for n in 1..=order {
                let via_partitions = moments_via_compositions(&b, n)?;
                report.record_check(
                    via_partitions == m[n - 1],
                    || format!("composition sum #{i} order {n}"),
                    || format!("{} vs {}", rat_string(&via_partitions), rat_string(&m[n - 1])),
                );
            }
        }
        suite.push("composition-sum", report);
    }

    // Shift formula: binomial form, partition form, and the binomial
    // moment oracle all agree.
    {
        let mut rng = case_rng(seed, 3);
        let mut report = CheckReport::default();
        for i in 0..cases {
            let m = rand_moment_seq(order, &mut rng);
            let b = moments_to_cumulants(&m);
            let shifted = shift_one(&b);
            let via_partitions = shift_one_via_partitions(&b)?;
            record_seq_eq(
                &mut report,
                &shifted,
                &via_partitions,
                &format!("shift binomial vs partition form #{i}"),
            );
            let via_moments = moments_to_cumulants(&moments_of_shift(&m));
            record_seq_eq(
                &mut report,
                &shifted,
                &via_moments,
                &format!("shift vs binomial moment oracle #{i}"),
            );
        }
        suite.push("shift-consistency", report);
    }

    // Additive convolution against the joint model.
    {
        let mut rng = case_rng(seed, 4);
        let mut report = CheckReport::default();
        for i in 0..cases {
            let state = rand_joint_state(order, &mut rng);
            let formula = bconv_add(state.moments_x(), state.moments_y())?;
            let oracle = state.moments_of(
                &AlgElement::letter(X).add(&AlgElement::letter(Y)),
                order,
            )?;
            record_seq_eq(&mut report, &formula, &oracle, &format!("additivity #{i}"));
        }
        suite.push("model-additivity", report);
    }

    // Multiplicative convolution: formula path vs model oracle, plus the
    // B-transform product identity.
    {
        let mut rng = case_rng(seed, 5);
        let mut report = CheckReport::default();
        for i in 0..cases {
            // The oracle expands (X+Y+XY)^n, whose words reach degree 2n.
            let state = rand_joint_state(2 * order, &mut rng);
            let m_x = &state.moments_x()[..order];
            let m_y = &state.moments_y()[..order];
            let formula = bconv_mul(m_x, m_y)?;
            let z = AlgElement::letter(X)
                .add(&AlgElement::letter(Y))
                .add(&AlgElement::word(vec![X, Y]));
            let oracle = state.moments_of(&z, order)?;
            record_seq_eq(
                &mut report,
                &formula,
                &oracle,
                &format!("multiplicative convolution vs model #{i}"),
            );
            let check = check_multiplicative(m_x, m_y)?;
            report.record_check(
                check.holds(),
                || format!("B-transform multiplicativity #{i}"),
                || match &check.first_mismatch {
                    Some(n) => format!("first mismatch at component {n}"),
                    None => String::new(),
                },
            );
        }
        suite.push("model-multiplicativity", report);
    }

    // Positional sweeps. Entries reach degree 2, and the propositions
    // are swept at total length <= 6, so marginal order 14 covers every
    // run that can occur.
    {
        let mut rng = case_rng(seed, 6);
        let mut report = CheckReport::default();
        for _ in 0..cases {
            let state = rand_joint_state(14, &mut rng);
            let pool = rand_entry_pool(&mut rng);
            for n in 0..=4usize {
                for m in 0..=4 - n {
                    report.merge(verify_vanishing(&state, n, m, &pool, 2, &mut rng)?);
                }
            }
        }
        suite.push("vanishing-sweep", report);
    }
    {
        let mut rng = case_rng(seed, 7);
        let mut report = CheckReport::default();
        for _ in 0..cases {
            let state = rand_joint_state(14, &mut rng);
            let pool = rand_entry_pool(&mut rng);
            for n in 1..=5 {
                report.merge(verify_unit_rules(&state, n, &pool, 2, &mut rng)?);
            }
        }
        suite.push("unit-rules-sweep", report);
    }
    {
        let mut rng = case_rng(seed, 8);
        let mut report = CheckReport::default();
        for _ in 0..cases {
            let state = rand_joint_state(14, &mut rng);
            let pool = rand_entry_pool(&mut rng);
            for n in 1..=5 {
                report.merge(verify_product_rules(&state, n, &pool, 2, &mut rng)?);
            }
        }
        suite.push("product-rules-sweep", report);
    }

    // The binomial identity underlying the shift/composition equivalence.
    {
        let mut report = CheckReport::default();
        for n in 0..=20 {
            for a in 0..=n {
                for b in 0..=n - a {
                    report.record_check(
                        binomial_identity_check(n, a, b)?,
                        || format!("binomial identity n={n} a={a} b={b}"),
                        String::new,
                    );
                }
            }
        }
        suite.push("binomial-identity", report);
    }

    Ok(suite.finish())
}

/// Operator-valued suite: conversion roundtrips, the series identity,
/// the shift formula, the section-4 positional sweeps, the flattening
/// identities, and both convolution identities against the joint model.
pub fn ov_suite(order: usize, dim: usize, seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut suite = SuiteReport::default();
    // Sweeps insert entries of degree <= 2 at total length <= 4.
    let sweep_order = 8usize;
    let sweep_cases = cases.div_ceil(4).max(2);

    // Conversion roundtrips and the series identity M = B(1 + I M).
    {
        let mut rng = case_rng(seed, 101);
        let mut report = CheckReport::default();
        for i in 0..cases {
            let dist = crate::sampling::rand_ov_distribution(dim, order, &mut rng);
            let b = ov_moments_to_cumulants(&dist);
            let back = ov_cumulants_to_moments(&b);
            report.record_check(
                back == dist,
                || format!("ov roundtrip m->b->m #{i}"),
                || "distributions differ".to_string(),
            );
            report.record_check(
                ov_series_identity_holds(&dist, &b)?,
                || format!("series identity M = B(1+IM) #{i}"),
                || "identity failed".to_string(),
            );
        }
        suite.push("ov-conversion-roundtrip", report);
    }

    // Shift formula cross-checked at dim 1 against the scalar pipeline.
    {
        let mut rng = case_rng(seed, 102);
        let mut report = CheckReport::default();
        for i in 0..cases {
            let m = rand_moment_seq(order, &mut rng);
            let scalar = shift_one(&moments_to_cumulants(&m));
            let dist = OVDistribution::from_scalar_moments(&m)?;
            let ov = ov_shift_one(&ov_moments_to_cumulants(&dist))?;
            let collapsed: Vec<Rat> = (0..order)
                .map(|j| {
                    let args = vec![crate::matrix::Matrix::identity(1); j];
                    Ok(ov.component(j).eval(&args)?.get(0, 0).clone())
                })
                .collect::<Result<_>>()?;
            record_seq_eq(
                &mut report,
                &collapsed,
                &scalar,
                &format!("ov shift collapses to scalar shift #{i}"),
            );
        }
        suite.push("ov-shift-collapse", report);
    }

    // Sweeps for the vanishing, base-entry, and product-entry rules.
    {
        let mut rng = case_rng(seed, 103);
        let mut report = CheckReport::default();
        for _ in 0..sweep_cases {
            let state = rand_ov_joint_state(dim, sweep_order, &mut rng);
            let pool = rand_ov_pool(dim, &mut rng);
            for before in 0..=1usize {
                for after in 0..=1 - before {
                    report.merge(verify_ov_vanishing(
                        &state, before, after, &pool, 2, &mut rng,
                    )?);
                }
            }
        }
        suite.push("ov-vanishing-sweep", report);
    }
    {
        let mut rng = case_rng(seed, 104);
        let mut report = CheckReport::default();
        for _ in 0..sweep_cases {
            let state = rand_ov_joint_state(dim, sweep_order, &mut rng);
            let pool = rand_ov_pool(dim, &mut rng);
            for n in 1..=3 {
                report.merge(verify_ov_b_entry_rules(&state, n, &pool, 1, &mut rng)?);
            }
        }
        suite.push("ov-base-entry-sweep", report);
    }
    {
        let mut rng = case_rng(seed, 105);
        let mut report = CheckReport::default();
        for _ in 0..sweep_cases {
            let state = rand_ov_joint_state(dim, sweep_order, &mut rng);
            let pool = rand_ov_pool(dim, &mut rng);
            for n in 0..=2 {
                report.merge(verify_ov_product_rule(&state, n, &pool, 1, &mut rng)?);
            }
        }
        suite.push("ov-product-entry-sweep", report);
    }

    // Flattening: all-unit upper arguments reproduce the cumulant of the
    // functional, and base-algebra dressing moves between the two roles.
    {
        let mut rng = case_rng(seed, 106);
        let mut report = CheckReport::default();
        for _ in 0..sweep_cases {
            let state = rand_ov_joint_state(dim, sweep_order, &mut rng);
            let pool = rand_ov_pool(dim, &mut rng);
            for n in 1..=4 {
                report.merge(verify_flattening_units(&state, n, &pool, 2, &mut rng)?);
                report.merge(verify_flattening_dressed(&state, n, &pool, 2, &mut rng)?);
            }
        }
        suite.push("ov-flattening", report);
    }

    // Convolution identities against the joint model.
    {
        let mut rng = case_rng(seed, 107);
        let mut report = CheckReport::default();
        for i in 0..cases {
            let state = rand_ov_joint_state(dim, order, &mut rng);
            let formula = state.bconv_add()?;
            let x_plus_y = OvElement::letter(X, dim).add(&OvElement::letter(Y, dim));
            let oracle =
                ov_moments_to_cumulants(&state.distribution_of(&x_plus_y, order)?);
            report.record_check(
                formula == oracle,
                || format!("ov additivity #{i}"),
                || "cumulant series differ".to_string(),
            );
        }
        suite.push("ov-additivity", report);
    }
    {
        let mut rng = case_rng(seed, 108);
        let mut report = CheckReport::default();
        for i in 0..cases {
            let state = rand_ov_joint_state(dim, order, &mut rng);
            let lhs = ov_shift_one(&state.bconv_mul()?)?;
            let bx = ov_moments_to_cumulants(state.dist_x());
            let by = ov_moments_to_cumulants(state.dist_y());
            let rhs = ov_shift_one(&bx)?.checked_mul(&ov_shift_one(&by)?)?;
            report.record_check(
                lhs == rhs,
                || format!("ov multiplicativity #{i}"),
                || "cumulant series differ".to_string(),
            );
        }
        // Degenerate factor: X with zero distribution leaves 1+Y alone.
        let mut rng = case_rng(seed, 109);
        let zero_dist = OVDistribution::new(
            (0..order).map(|j| MultilinearMap::zero(dim, j)).collect(),
        )?;
        let dist_y = crate::sampling::rand_ov_distribution(dim, order, &mut rng);
        let state = OVJointState::new(zero_dist, dist_y.clone())?;
        let lhs = ov_shift_one(&state.bconv_mul()?)?;
        let rhs = ov_shift_one(&ov_moments_to_cumulants(&dist_y))?;
        report.record_check(
            lhs == rhs,
            || "ov multiplicativity with a unit factor".to_string(),
            || "cumulant series differ".to_string(),
        );
        suite.push("ov-multiplicativity", report);
    }

    // Dimension-1 collapse of the joint model itself.
    {
        let mut rng = case_rng(seed, 110);
        let mut report = CheckReport::default();
        for i in 0..cases {
            let scalar_state = rand_joint_state(order, &mut rng);
            let ov_state = OVJointState::from_scalar(
                scalar_state.moments_x(),
                scalar_state.moments_y(),
            )?;
            let words: [&[Letter]; 4] = [&[X, Y], &[X, X, Y], &[Y, X, Y, X], &[X; 4]];
            for w in words {
                if w.len() > order {
                    continue;
                }
                let ov_word = w.iter().fold(OvElement::unit(1), |acc, &l| {
                    acc.mul(&OvElement::letter(l, 1))
                });
                let got = ov_state.phi_elem(&ov_word)?.get(0, 0).clone();
                let want = scalar_state.phi_word(w)?;
                report.record_check(
                    got == want,
                    || format!("dim-1 phi collapse #{i} word {w:?}"),
                    || format!("{} vs {}", rat_string(&got), rat_string(&want)),
                );
            }
        }
        suite.push("ov-scalar-collapse", report);
    }

    Ok(suite.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_suite_passes_and_is_deterministic() {
        let a = scalar_suite(6, 0, 4).unwrap();
        assert!(a.passed(), "violations: {:?}", a.cases);
        assert!(a.checks() > 300);
        let b = scalar_suite(6, 0, 4).unwrap();
        let ids_a: Vec<_> = a.cases.iter().map(|c| &c.id).collect();
        let ids_b: Vec<_> = b.cases.iter().map(|c| &c.id).collect();
        assert_eq!(ids_a, ids_b);
        for (ca, cb) in a.cases.iter().zip(&b.cases) {
            assert_eq!(ca.report.checks, cb.report.checks);
        }
    }

    #[test]
    fn scalar_suite_cases_are_sorted() {
        let r = scalar_suite(4, 1, 1).unwrap();
        let mut sorted = r.cases.iter().map(|c| c.id.clone()).collect::<Vec<_>>();
        sorted.sort();
        assert_eq!(
            r.cases.iter().map(|c| c.id.clone()).collect::<Vec<_>>(),
            sorted
        );
    }

    #[test]
    fn ov_suite_passes_at_small_size() {
        let r = ov_suite(3, 2, 0, 2).unwrap();
        assert!(r.passed(), "violations: {:?}", r.cases);
        assert!(r.checks() > 100);
    }

    #[test]
    fn different_seeds_draw_different_data() {
        let a = scalar_suite(5, 1, 2).unwrap();
        let b = scalar_suite(5, 2, 2).unwrap();
        // Same shape either way.
        assert_eq!(a.cases.len(), b.cases.len());
        assert!(a.passed() && b.passed());
    }
}
