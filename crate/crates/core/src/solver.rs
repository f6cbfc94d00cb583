//! The inductive construction: the unique acceptable expression of
//! `f + 1`, the unit step from `d - 1` to `d`, and everything built on it.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{
    extended_gcd, frobenius_number, minimal_unit_expressions, Denominations, Expression,
    MinimalUnitPair, Unit,
};

/// One application of the inductive step: `to = from + added`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StepTrace {
    pub from: Expression,
    pub added: Unit,
    pub to: Expression,
}

/// All acceptable expressions of a single value, sorted by `x` ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpressionLevel {
    pub d: i64,
    pub expressions: Vec<Expression>,
}

impl ExpressionLevel {
    pub fn len(&self) -> usize {
        self.expressions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.expressions.is_empty()
    }
}

/// Levels of acceptable expressions for `f + 1, f + 2, ...`, linked by
/// additions of a minimal unit expression. Nodes are identified by
/// `(x, y, d)`, so a node reachable from two parents appears once with
/// two incoming edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpressionTree {
    pub levels: Vec<ExpressionLevel>,
    /// `edges[k]` connects `levels[k]` to `levels[k + 1]`.
    pub edges: Vec<Vec<StepTrace>>,
}

impl ExpressionTree {
    pub fn root_level(&self) -> &ExpressionLevel {
        &self.levels[0]
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn all_edges(&self) -> impl Iterator<Item = &StepTrace> {
        self.edges.iter().flatten()
    }
}

fn require_nontrivial(den: &Denominations) -> Result<()> {
    if den.is_trivial() {
        Err(Error::TrivialDenomination {
            a: den.a(),
            b: den.b(),
        })
    } else {
        Ok(())
    }
}

/// `a(b - 1 + x2) + b(y2 - 1) = ab - a - b + 1`.
pub fn base_expression(den: &Denominations, mu: &MinimalUnitPair) -> Result<Expression> {
    require_nontrivial(den)?;
    let e2 = mu.e2();
    den.expression(den.b() - 1 + e2.x(), e2.y() - 1)
}

/// Adds `E1` if that stays acceptable, otherwise `E2`.
pub fn step(den: &Denominations, mu: &MinimalUnitPair, e: &Expression) -> Result<StepTrace> {
    let f = frobenius_number(den)?;
    if !e.is_acceptable() {
        return Err(Error::PreconditionViolation(format!(
            "step needs an acceptable expression, got {e}"
        )));
    }
    if e.d() <= f {
        return Err(Error::PreconditionViolation(format!(
            "step needs d > {f}, got d = {}",
            e.d()
        )));
    }
    // For d > f one of the two candidates is always acceptable.
    advance(mu, e)?.ok_or_else(|| {
        Error::PreconditionViolation(format!("no acceptable successor of {e} for {den}"))
    })
}

/// `e + E1` if acceptable, else `e + E2` if acceptable. No precondition
/// checks; callers guarantee `e` is acceptable with `e.d() > f`.
fn advance(mu: &MinimalUnitPair, e: &Expression) -> Result<Option<StepTrace>> {
    for unit in [Unit::E1, Unit::E2] {
        let to = e.checked_add(&mu.get(unit))?;
        if to.is_acceptable() {
            return Ok(Some(StepTrace {
                from: *e,
                added: unit,
                to,
            }));
        }
    }
    Ok(None)
}

/// Iterator over the chain `base, step(base), step(step(base)), ...`.
///
/// Yields the acceptable expression of `f + 1 + k` at position `k`.
#[derive(Debug, Clone)]
pub struct RecursiveWalk {
    mu: MinimalUnitPair,
    next: Option<Expression>,
}

impl RecursiveWalk {
    pub fn new(den: &Denominations) -> Result<Self> {
        let mu = minimal_unit_expressions(den)?;
        let base = base_expression(den, &mu)?;
        Ok(RecursiveWalk {
            mu,
            next: Some(base),
        })
    }

    pub fn minimal_units(&self) -> &MinimalUnitPair {
        &self.mu
    }

    /// Advances one step and returns the trace, or `None` after an overflow.
    pub fn next_step(&mut self) -> Option<StepTrace> {
        // Every element of the walk is acceptable and above f, so advance's
        // preconditions hold inductively from the base expression.
        let current = self.next?;
        let trace = advance(&self.mu, &current).ok().flatten();
        self.next = trace.map(|t| t.to);
        trace
    }
}

impl Iterator for RecursiveWalk {
    type Item = Expression;

    fn next(&mut self) -> Option<Expression> {
        let current = self.next?;
        self.next = advance(&self.mu, &current).ok().flatten().map(|t| t.to);
        Some(current)
    }
}

fn trivial_expression(den: &Denominations, d: i64) -> Result<Expression> {
    if den.a() == 1 {
        den.expression(d, 0)
    } else {
        den.expression(0, d)
    }
}

/// The expression of `d > f` reached by stepping `d - (f + 1)` times from the
/// base expression. With a coin of value 1 this is the direct expression
/// `d*1 + 0` (or `0 + d*1`).
pub fn represent_above_frobenius(den: &Denominations, d: i64) -> Result<Expression> {
    let f = frobenius_number(den)?;
    if d <= f {
        return Err(Error::PreconditionViolation(format!(
            "recursive method needs d > {f}, got {d}"
        )));
    }
    if den.is_trivial() {
        if d < 0 {
            return Err(Error::NegativeTarget(d));
        }
        return trivial_expression(den, d);
    }
    let steps = (d - f - 1) as usize;
    RecursiveWalk::new(den)?
        .nth(steps)
        .ok_or(Error::Overflow("recursive walk"))
}

/// The unique `x` in `[0, b)` with `a*x ≡ d (mod b)`.
fn residue_x(den: &Denominations, d: i64) -> Result<i64> {
    let b = den.b();
    let (_, s, _) = extended_gcd(den.a(), b)?;
    let inverse = s.rem_euclid(b) as i128;
    Ok(((d as i128).rem_euclid(b as i128) * inverse % b as i128) as i64)
}

/// The acceptable expression of `d` with the smallest `x`, if any.
pub fn represent_direct(den: &Denominations, d: i64) -> Result<Option<Expression>> {
    if d < 0 {
        return Err(Error::NegativeTarget(d));
    }
    let x = residue_x(den, d)?;
    let ax = den.a() as i128 * x as i128;
    if ax > d as i128 {
        return Ok(None);
    }
    let y = (d as i128 - ax) / den.b() as i128;
    den.expression(x, y as i64).map(Some)
}

/// An acceptable expression of any `d >= 0`, or `None` when `d` is a gap.
///
/// Above the Frobenius number this is the recursive construction; at or
/// below it, the minimal-`x` expression.
pub fn represent(den: &Denominations, d: i64) -> Result<Option<Expression>> {
    if d < 0 {
        return Err(Error::NegativeTarget(d));
    }
    let f = frobenius_number(den)?;
    if d > f {
        represent_above_frobenius(den, d).map(Some)
    } else {
        represent_direct(den, d)
    }
}

/// `represent(den, d)` for every `d` in `lo..=hi`, sharing one recursive walk
/// across the whole range instead of restarting it for each `d`.
pub fn represent_range(
    den: &Denominations,
    lo: i64,
    hi: i64,
) -> Result<impl Iterator<Item = Result<(i64, Option<Expression>)>>> {
    if lo < 0 {
        return Err(Error::NegativeTarget(lo));
    }
    let den = *den;
    let f = frobenius_number(&den)?;
    let mut walk = if den.is_trivial() || hi <= f {
        None
    } else {
        let mut walk = RecursiveWalk::new(&den)?;
        // Position the walk at max(lo, f + 1).
        let skip = lo.saturating_sub(f + 1).max(0);
        for _ in 0..skip {
            walk.next_step().ok_or(Error::Overflow("recursive walk"))?;
        }
        Some(walk)
    };
    Ok((lo..=hi).map(move |d| {
        if d <= f {
            return represent_direct(&den, d).map(|e| (d, e));
        }
        match walk.as_mut() {
            None => trivial_expression(&den, d).map(|e| (d, Some(e))),
            Some(walk) => walk
                .next()
                .ok_or(Error::Overflow("recursive walk"))
                .map(|e| (d, Some(e))),
        }
    }))
}

/// Number of acceptable expressions of `d`, without materializing them.
pub fn count_acceptable_expressions(den: &Denominations, d: i64) -> Result<u64> {
    Ok(match represent_direct(den, d)? {
        None => 0,
        Some(e) => (e.y() / den.a()) as u64 + 1,
    })
}

/// Every `(x, y)` with `x, y >= 0` and `a*x + b*y = d`, sorted by `x`.
///
/// Starts from the minimal-`x` solution and walks the solution line
/// `(x + k*b, y - k*a)` while `y` stays nonnegative.
pub fn all_acceptable_expressions(den: &Denominations, d: i64) -> Result<ExpressionLevel> {
    let mut expressions = Vec::new();
    if let Some(first) = represent_direct(den, d)? {
        let (mut x, mut y) = (first.x(), first.y());
        while y >= 0 {
            expressions.push(den.expression(x, y)?);
            x += den.b();
            y -= den.a();
        }
    }
    Ok(ExpressionLevel { d, expressions })
}

/// Default depth bound for [`expression_tree`]: `10 * a * b`.
pub fn default_max_depth(den: &Denominations) -> u64 {
    (den.product() as u64).saturating_mul(10)
}

pub fn expression_tree(den: &Denominations, depth: u64) -> Result<ExpressionTree> {
    expression_tree_bounded(den, depth, default_max_depth(den))
}

/// Builds `depth + 1` levels starting at the base expression. Level `k + 1`
/// is every acceptable `e + E1`, `e + E2` for `e` in level `k`.
pub fn expression_tree_bounded(
    den: &Denominations,
    depth: u64,
    max_depth: u64,
) -> Result<ExpressionTree> {
    if depth > max_depth {
        return Err(Error::DepthExceeded {
            depth,
            max: max_depth,
        });
    }
    let mu = minimal_unit_expressions(den)?;
    let root = base_expression(den, &mu)?;

    let mut levels = vec![ExpressionLevel {
        d: root.d(),
        expressions: vec![root],
    }];
    let mut edges = Vec::new();
    for _ in 0..depth {
        let parent = levels.last().expect("root level exists");
        let mut children = BTreeSet::new();
        let mut level_edges = Vec::new();
        for e in &parent.expressions {
            for unit in [Unit::E1, Unit::E2] {
                let to = e.checked_add(&mu.get(unit))?;
                if to.is_acceptable() {
                    children.insert(to);
                    level_edges.push(StepTrace {
                        from: *e,
                        added: unit,
                        to,
                    });
                }
            }
        }
        // Expression orders by x first, so the set iterates in x order.
        levels.push(ExpressionLevel {
            d: parent.d + 1,
            expressions: children.into_iter().collect(),
        });
        edges.push(level_edges);
    }
    Ok(ExpressionTree { levels, edges })
}
