//! Brute-force ground truth. Nothing here depends on the solver's
//! construction or on the closed form for the Frobenius number.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{Denominations, Expression};
use crate::solver;

/// Enumeration budget used when none is configured.
pub const DEFAULT_MAX_ENUM: u64 = 1 << 24;

/// Scans `x = 0, 1, ..., d / a` and returns the first `(x, (d - a*x) / b)`
/// with `b | d - a*x`.
pub fn oracle_representable(den: &Denominations, d: i64) -> Result<Option<Expression>> {
    if d < 0 {
        return Err(Error::NegativeTarget(d));
    }
    let (a, b) = (den.a(), den.b());
    let mut rest = d;
    let mut x = 0;
    while rest >= 0 {
        if rest % b == 0 {
            return den.expression(x, rest / b).map(Some);
        }
        rest -= a;
        x += 1;
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    #[serde(skip)]
    pub den: Denominations,
    pub gaps: Vec<i64>,
    pub frobenius: i64,
    pub count: u64,
}

impl GapReport {
    fn from_gaps(den: &Denominations, gaps: Vec<i64>) -> Self {
        GapReport {
            den: *den,
            frobenius: gaps.last().copied().unwrap_or(-1),
            count: gaps.len() as u64,
            gaps,
        }
    }
}

fn check_budget(den: &Denominations, budget: u64) -> Result<()> {
    let size = den.product() as u128;
    if size > budget as u128 {
        return Err(Error::SizeGuard { size, budget });
    }
    Ok(())
}

pub fn gaps(den: &Denominations) -> Result<GapReport> {
    gaps_with_budget(den, DEFAULT_MAX_ENUM)
}

/// Non-representable values in `0..=a*b`, found by marking every
/// `d = d' + a` or `d' + b` reachable from 0.
///
/// Every `d >= a*b` is representable: take `x` in `[0, b)` with
/// `a*x ≡ d (mod b)`; then `a*x < a*b <= d`. So the bound does not rely on
/// the closed form.
pub fn gaps_with_budget(den: &Denominations, budget: u64) -> Result<GapReport> {
    check_budget(den, budget)?;
    let (a, b) = (den.a() as usize, den.b() as usize);
    let limit = den.product() as usize;
    let mut reachable = vec![false; limit + 1];
    reachable[0] = true;
    for d in 1..=limit {
        reachable[d] = (d >= a && reachable[d - a]) || (d >= b && reachable[d - b]);
    }
    let gaps = (0..=limit)
        .filter(|&d| !reachable[d])
        .map(|d| d as i64)
        .collect();
    Ok(GapReport::from_gaps(den, gaps))
}

/// Same report as [`gaps_with_budget`], calling [`oracle_representable`]
/// for each value. Quadratic; kept as the reference the sieve is checked
/// against.
pub fn gaps_scan(den: &Denominations, budget: u64) -> Result<GapReport> {
    check_budget(den, budget)?;
    let mut gaps = Vec::new();
    for d in 0..=den.product() {
        if oracle_representable(den, d)?.is_none() {
            gaps.push(d);
        }
    }
    Ok(GapReport::from_gaps(den, gaps))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub d: i64,
    pub method: Option<Expression>,
    pub oracle: Option<Expression>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub den: Denominations,
    pub d_lo: i64,
    pub d_hi: i64,
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn contract_violation(den: &Denominations, d: i64, e: &Expression) -> Option<String> {
    let value = den.a() as i128 * e.x() as i128 + den.b() as i128 * e.y() as i128;
    if value != d as i128 || e.d() != d {
        Some(format!("{e} does not evaluate to {d}"))
    } else if !e.is_acceptable() {
        Some(format!("{e} has a negative coefficient"))
    } else {
        None
    }
}

/// Compares [`solver::represent`] with [`oracle_representable`] for each
/// `d` in `d_lo..=d_hi`. Presence must agree and each returned expression
/// must be acceptable with the right value; the two expressions themselves
/// may differ.
pub fn verify_range(den: &Denominations, d_lo: i64, d_hi: i64) -> Result<VerificationReport> {
    if d_lo < 0 {
        return Err(Error::NegativeTarget(d_lo));
    }
    if d_hi < d_lo {
        return Err(Error::PreconditionViolation(format!(
            "empty range {d_lo}..={d_hi}"
        )));
    }
    let start = Instant::now();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for item in solver::represent_range(den, d_lo, d_hi)? {
        let (d, method) = item?;
        let oracle = oracle_representable(den, d)?;
        checked += 1;

        let reason = match (&method, &oracle) {
            (Some(_), None) => Some("method found an expression, oracle did not".to_string()),
            (None, Some(_)) => Some("oracle found an expression, method did not".to_string()),
            (Some(m), Some(o)) => contract_violation(den, d, m)
                .map(|r| format!("method: {r}"))
                .or_else(|| contract_violation(den, d, o).map(|r| format!("oracle: {r}"))),
            (None, None) => None,
        };
        if let Some(reason) = reason {
            mismatches.push(Mismatch {
                d,
                method,
                oracle,
                reason,
            });
        }
    }
    Ok(VerificationReport {
        den: *den,
        d_lo,
        d_hi,
        checked,
        mismatches,
        elapsed: start.elapsed(),
    })
}
