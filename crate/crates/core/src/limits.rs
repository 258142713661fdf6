use crate::error::{KernelError, Result};

/// Size caps for the exhaustive sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of subsets a universally quantified subset axiom may sweep.
    pub max_subsets: u64,
    /// Largest admissible `|L|^|X|`.
    pub max_powerset: usize,
    /// Largest number of filters an enumeration may produce.
    pub max_filters: usize,
    /// Largest number of raw candidate tables a brute-force sweep may visit.
    pub max_candidates: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_subsets: 1 << 20,
            max_powerset: 4096,
            max_filters: 200_000,
            max_candidates: 1 << 22,
        }
    }
}

impl Limits {
    /// Fails unless all `2^n` subsets of an `n`-element set fit the subset cap.
    pub fn check_subsets(&self, what: &'static str, n: usize) -> Result<()> {
        let size = if n >= 127 { u128::MAX } else { 1u128 << n };
        if size > self.max_subsets as u128 {
            return Err(KernelError::size_limit(what, size, self.max_subsets as u128));
        }
        Ok(())
    }

    /// Fails unless `base^exp` candidates fit the candidate cap.
    pub fn check_candidates(&self, what: &'static str, base: usize, exp: usize) -> Result<()> {
        let size = checked_pow(base, exp);
        if size > self.max_candidates as u128 {
            return Err(KernelError::size_limit(what, size, self.max_candidates as u128));
        }
        Ok(())
    }
}

pub(crate) fn checked_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = match acc.checked_mul(base as u128) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    acc
}
