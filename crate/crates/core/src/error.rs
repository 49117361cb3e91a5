use thiserror::Error;

/// Coarse classification of failures, used by the CLI to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or out-of-range input.
    Input,
    /// A documented precondition of an operation does not hold.
    Precondition,
    /// A search would exceed its configured budget.
    Resource,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty table")]
    EmptyTable,
    #[error("table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("table is not a Latin square")]
    NotLatin,
    #[error("element {element} is out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("map has {len} entries, expected {expected}")]
    MapLength { len: usize, expected: usize },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("maps do not form a homotopy")]
    NotHomotopy,
    #[error("map is not a homomorphism")]
    NotHomomorphism,
    #[error("arrows are not composable")]
    NotComposable,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("search space of {required} candidates exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Precondition(_) => ErrorKind::Precondition,
            Error::BudgetExceeded { .. } | Error::OrderTooLarge { .. } => ErrorKind::Resource,
            _ => ErrorKind::Input,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Upper bound on the number of candidates an exhaustive search may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    /// Fails with [`Error::BudgetExceeded`] when `required` is above the budget.
    pub fn ensure(self, required: u128) -> Result<()> {
        if required > u128::from(self.0) {
            Err(Error::BudgetExceeded {
                required,
                budget: self.0,
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

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn search_space(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_guard() {
        assert!(Budget(10).ensure(10).is_ok());
        let err = Budget(10).ensure(11).unwrap_err();
        assert_eq!(err.kind(), ErrorKind::Resource);
    }

    #[test]
    fn search_space_saturates() {
        assert_eq!(search_space(3, 3), 27);
        assert_eq!(search_space(1000, 1000), u128::MAX);
        assert_eq!(factorial(5), 120);
    }
}
