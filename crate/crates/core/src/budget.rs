//! Explicit enumeration budgets.
//!
//! Budgets count candidates (maps examined, search nodes visited), never
//! wall-clock time, so a run either fits or fails identically everywhere.

use thiserror::Error;

/// Upper bound on the size of a candidate space an enumeration may examine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Budget(u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    pub const fn new(limit: u64) -> Self {
        Budget(limit)
    }

    pub const fn limit(self) -> u64 {
        self.0
    }

    /// Fails when `required` candidates would exceed the limit.
    pub fn admit(self, required: u128) -> Result<(), BudgetExceeded> {
        if required > u128::from(self.0) {
            Err(BudgetExceeded {
                required,
                limit: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("search space of {required} candidates exceeds the budget of {limit}")]
pub struct BudgetExceeded {
    pub required: u128,
    pub limit: u64,
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn power(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admit_is_inclusive() {
        let b = Budget::new(16);
        assert!(b.admit(16).is_ok());
        assert_eq!(
            b.admit(17),
            Err(BudgetExceeded {
                required: 17,
                limit: 16
            })
        );
    }

    #[test]
    fn power_saturates() {
        assert_eq!(power(4, 3), 64);
        assert_eq!(power(0, 0), 1);
        assert_eq!(power(1000, 100), u128::MAX);
    }
}
