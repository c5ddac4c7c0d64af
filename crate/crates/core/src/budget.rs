//! Dimension budget shared by every model builder.

use crate::error::{Error, Result};

/// Default ceiling on the dimension of any module a builder materializes.
pub const DEFAULT_BUDGET: usize = 20_000;

/// Environment variable that overrides [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "DUALITY_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_dim: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_dim: DEFAULT_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(max_dim: usize) -> Self {
        Budget { max_dim }
    }

    /// Reads `DUALITY_BUDGET`, falling back to the default when unset.
    /// An unparsable value is reported rather than ignored.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .map(Budget::new)
                .map_err(|_| Error::Parse(format!("{BUDGET_ENV}={raw:?} is not a count"))),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn check(&self, what: impl Into<String>, dim: u128) -> Result<()> {
        if dim > self.max_dim as u128 {
            Err(Error::BudgetExceeded {
                what: what.into(),
                dim,
                budget: self.max_dim,
            })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` saturating at `u128::MAX`, for budget checks on `n^d`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
