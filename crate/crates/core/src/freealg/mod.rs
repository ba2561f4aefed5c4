//! Graded free associative algebra on the generators
//! `A < B < C < D < dx < dy < x < y`, with pair-swap rewrite systems that
//! define algebra presentations and compute canonical normal forms.
//!
//! All "identity holds" checks reduce `lhs - rhs` and test for zero.

mod ncpoly;
mod rewrite;
mod word;

pub use ncpoly::NCPoly;
pub use rewrite::{
    check_critical_pairs, check_strategy_independence, linear_rank, nc_mul, normal_order,
    Divergence, DivergenceKind, RewriteRule, RewriteSystem, Strategy,
};
pub use word::{Generator, Word};

use crate::coefficients::CoefficientError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeAlgError {
    #[error("no rule for the out-of-order pair `{0} {1}`")]
    MissingRule(Generator, Generator),
    #[error("invalid rule for `{} {}`: {reason}", lhs.0, lhs.1)]
    InvalidRule {
        lhs: (Generator, Generator),
        reason: String,
    },
    #[error("conflicting rules for `{} {}` in `{system}`", lhs.0, lhs.1)]
    ConflictingRule {
        lhs: (Generator, Generator),
        system: String,
    },
    #[error("letter `{0}` is not a coordinate or differential")]
    NotAForm(Generator),
    #[error(transparent)]
    Coefficient(#[from] CoefficientError),
}

/// Free-function form of [`Word::concat`].
pub fn concat(a: &Word, b: &Word) -> Word {
    a.concat(b)
}
