//! Two-denomination coin problem toolkit.
//!
//! For coprime coin values `a`, `b` this crate computes the Frobenius
//! number `ab - a - b`, the two minimal unit expressions of
//! `a*x + b*y = 1`, and acceptable expressions `d = a*x + b*y` with
//! `x, y >= 0` built one unit at a time from the unique expression of
//! `ab - a - b + 1`. A brute-force oracle cross-checks every result.
//!
//! ```
//! use frobkit::{represent, Denominations};
//!
//! let den = Denominations::new(3, 5)?;
//! let e = represent(&den, 11)?.unwrap();
//! assert_eq!((e.x(), e.y()), (2, 1));
//! assert_eq!(represent(&den, 7)?, None);
//! # Ok::<(), frobkit::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod numeric;
pub mod oracle;
pub mod solver;

pub use error::{Error, Result};
pub use numeric::{
    extended_gcd, frobenius_number, minimal_unit_expressions, validate_denominations,
    Denominations, Expression, MinimalUnitPair, Unit,
};
pub use oracle::{
    gaps, gaps_scan, gaps_with_budget, oracle_representable, verify_range, GapReport, Mismatch,
    VerificationReport, DEFAULT_MAX_ENUM,
};
pub use solver::{
    all_acceptable_expressions, base_expression, count_acceptable_expressions, expression_tree,
    expression_tree_bounded, represent, represent_above_frobenius, represent_direct,
    represent_range, step, ExpressionLevel, ExpressionTree, RecursiveWalk, StepTrace,
};
