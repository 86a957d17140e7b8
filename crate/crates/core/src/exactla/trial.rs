//! Repeated random specialization with agreement checking.

use std::fmt::Debug;

use serde::Serialize;
use thiserror::Error;

use super::field::PrimeField;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrialError {
    #[error("trial count must be at least 1")]
    NoTrials,
    #[error("trials disagree after {trials} draws including escalation: {detail}")]
    Disagreement { trials: usize, detail: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialPolicy {
    pub trials: usize,
    pub field: PrimeField,
    pub seed: u64,
}

impl Default for TrialPolicy {
    fn default() -> Self {
        Self { trials: 3, field: PrimeField::default(), seed: 0 }
    }
}

impl TrialPolicy {
    pub fn new(trials: usize, field: PrimeField, seed: u64) -> Result<Self, TrialError> {
        if trials == 0 {
            return Err(TrialError::NoTrials);
        }
        Ok(Self { trials, field, seed })
    }

    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }

    /// Seed of the `i`-th draw. Escalation draws continue the same sequence,
    /// so they never reuse a seed from the first batch.
    pub fn trial_seed(&self, i: usize) -> u64 {
        splitmix64(self.seed ^ splitmix64(i as u64 + 1))
    }
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialMeta {
    pub seed: u64,
    pub prime: u64,
    pub trials: usize,
    pub escalated: bool,
    /// Union bound on the chance that a single draw misjudges a generic
    /// rank: polynomial degree over field size.
    pub failure_bound: f64,
}

/// Runs `f` once per trial seed and requires unanimous answers.
///
/// On disagreement the batch is rerun with twice as many fresh seeds; a
/// unanimous second batch is accepted and flagged as escalated, otherwise
/// the disagreement is returned as an error.
pub fn run_trials<T, F>(policy: &TrialPolicy, degree: u64, mut f: F) -> Result<(T, TrialMeta), TrialError>
where
    T: PartialEq + Debug,
    F: FnMut(PrimeField, u64) -> T,
{
    if policy.trials == 0 {
        return Err(TrialError::NoTrials);
    }
    let meta = |trials, escalated| TrialMeta {
        seed: policy.seed,
        prime: policy.field.modulus(),
        trials,
        escalated,
        failure_bound: degree as f64 / policy.field.modulus() as f64,
    };
    let batch = |range: std::ops::Range<usize>, f: &mut F| -> Vec<T> {
        range.map(|i| f(policy.field, policy.trial_seed(i))).collect()
    };

    let n = policy.trials;
    let mut first = batch(0..n, &mut f);
    if first.windows(2).all(|w| w[0] == w[1]) {
        return Ok((first.swap_remove(0), meta(n, false)));
    }
    let mut second = batch(n..3 * n, &mut f);
    if second.windows(2).all(|w| w[0] == w[1]) {
        return Ok((second.swap_remove(0), meta(3 * n, true)));
    }
    Err(TrialError::Disagreement {
        trials: 3 * n,
        detail: format!("first batch {first:?}, escalation batch {second:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_trials_rejected() {
        assert_eq!(TrialPolicy::new(0, PrimeField::default(), 0), Err(TrialError::NoTrials));
    }

    #[test]
    fn unanimous_answers_pass_through() {
        let p = TrialPolicy::with_seed(5);
        let (v, m) = run_trials(&p, 10, |_, _| 42).unwrap();
        assert_eq!(v, 42);
        assert_eq!(m.trials, 3);
        assert!(!m.escalated);
        assert!(m.failure_bound > 0.0 && m.failure_bound < 1e-15);
    }

    #[test]
    fn seeds_are_distinct_and_reproducible() {
        let p = TrialPolicy::with_seed(11);
        let seeds: Vec<u64> = (0..9).map(|i| p.trial_seed(i)).collect();
        let mut uniq = seeds.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), 9);
        assert_eq!(seeds[4], TrialPolicy::with_seed(11).trial_seed(4));
    }

    #[test]
    fn one_bad_draw_escalates() {
        let p = TrialPolicy::with_seed(1);
        let bad = p.trial_seed(1);
        let (v, m) = run_trials(&p, 1, |_, s| if s == bad { 7 } else { 8 }).unwrap();
        assert_eq!(v, 8);
        assert!(m.escalated);
        assert_eq!(m.trials, 9);
    }

    #[test]
    fn persistent_disagreement_is_an_error() {
        let p = TrialPolicy::with_seed(1);
        let r = run_trials(&p, 1, |_, s| s % 2);
        assert!(matches!(r, Err(TrialError::Disagreement { .. })));
    }
}
