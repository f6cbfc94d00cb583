//! Exact integer foundations: validated denominations, expressions,
//! extended gcd and the two minimal unit expressions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A validated pair of coin values `a`, `b`: both positive, coprime, and
/// with `a * b` representable in `i64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Denominations {
    a: i64,
    b: i64,
}

impl Denominations {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        validate_denominations(a, b)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// True when one of the coins is 1, so every nonnegative integer is
    /// representable.
    pub fn is_trivial(&self) -> bool {
        self.a == 1 || self.b == 1
    }

    pub fn swapped(&self) -> Self {
        Denominations {
            a: self.b,
            b: self.a,
        }
    }

    /// `a * b`; cannot overflow once validated.
    pub fn product(&self) -> i64 {
        self.a * self.b
    }

    /// Builds the expression `a*x + b*y`, computing its value.
    pub fn expression(&self, x: i64, y: i64) -> Result<Expression> {
        let d = self
            .a
            .checked_mul(x)
            .and_then(|ax| self.b.checked_mul(y).and_then(|by| ax.checked_add(by)))
            .ok_or(Error::Overflow("a*x + b*y"))?;
        Ok(Expression { x, y, d })
    }
}

impl fmt::Display for Denominations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// An integer solution `(x, y)` of `d = a*x + b*y` for some denominations.
///
/// Only [`Denominations::expression`] constructs these, so `d` always
/// matches `(x, y)` under the denominations that created it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Expression {
    x: i64,
    y: i64,
    d: i64,
}

impl Expression {
    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Both coefficients nonnegative.
    pub fn is_acceptable(&self) -> bool {
        self.x >= 0 && self.y >= 0
    }

    /// Termwise sum. Both expressions must come from the same denominations.
    pub fn checked_add(&self, other: &Expression) -> Result<Expression> {
        let add = |p: i64, q: i64| p.checked_add(q).ok_or(Error::Overflow("expression sum"));
        Ok(Expression {
            x: add(self.x, other.x)?,
            y: add(self.y, other.y)?,
            d: add(self.d, other.d)?,
        })
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:({},{})", self.d, self.x, self.y)
    }
}

/// Which of the two minimal unit expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Unit {
    /// `x1 > 0`, `y1 < 0`.
    E1,
    /// `x2 < 0`, `y2 > 0`.
    E2,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unit::E1 => "E1",
            Unit::E2 => "E2",
        })
    }
}

/// The two solutions of `a*x + b*y = 1` with
/// `0 < x1 < b`, `-a < y1 < 0`, `-b < x2 < 0`, `0 < y2 < a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimalUnitPair {
    e1: Expression,
    e2: Expression,
}

impl MinimalUnitPair {
    pub fn e1(&self) -> Expression {
        self.e1
    }

    pub fn e2(&self) -> Expression {
        self.e2
    }

    pub fn get(&self, unit: Unit) -> Expression {
        match unit {
            Unit::E1 => self.e1,
            Unit::E2 => self.e2,
        }
    }
}

pub fn validate_denominations(a: i64, b: i64) -> Result<Denominations> {
    if a <= 0 || b <= 0 {
        return Err(Error::NonPositive { a, b });
    }
    let (g, _, _) = extended_gcd(a, b)?;
    if g != 1 {
        return Err(Error::NotCoprime { gcd: g });
    }
    if a.checked_mul(b).is_none() {
        return Err(Error::Overflow("a*b"));
    }
    Ok(Denominations { a, b })
}

/// Classical remainder recursion, unrolled: `gcd(a, 0) = (a, 1, 0)` and
/// `(g, s, t)` for `(a, b)` is `(g, t', s' - (a / b) t')` where
/// `(g, s', t')` is the result for `(b, a mod b)`.
///
/// Returns `(g, s, t)` with `a*s + b*t = g`.
pub fn extended_gcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a < 0 || b < 0 {
        return Err(Error::PreconditionViolation(format!(
            "extended_gcd expects nonnegative inputs (got {a}, {b})"
        )));
    }
    if a == 0 && b == 0 {
        return Err(Error::BothZero);
    }

    // Forward pass records quotients; the backward pass replays the recursion.
    let mut quotients = Vec::new();
    let (mut r0, mut r1) = (a, b);
    while r1 != 0 {
        quotients.push(r0 / r1);
        (r0, r1) = (r1, r0 % r1);
    }

    // |s|, |t| never exceed max(a, b), so the products below stay in range.
    let (mut s, mut t) = (1i64, 0i64);
    for q in quotients.iter().rev() {
        (s, t) = (t, s - q * t);
    }
    Ok((r0, s, t))
}

pub fn minimal_unit_expressions(den: &Denominations) -> Result<MinimalUnitPair> {
    let (a, b) = (den.a, den.b);
    if den.is_trivial() {
        return Err(Error::TrivialDenomination { a, b });
    }
    let (_, s, _) = extended_gcd(a, b)?;
    // s is only determined mod b; shift it into (0, b). gcd = 1 and b > 1
    // exclude the residue 0.
    let x1 = s.rem_euclid(b);
    let y1 = ((1 - a as i128 * x1 as i128) / b as i128) as i64;
    let x2 = x1 - b;
    let y2 = y1 + a;
    Ok(MinimalUnitPair {
        e1: den.expression(x1, y1)?,
        e2: den.expression(x2, y2)?,
    })
}

/// `a*b - a - b`, or `-1` when a coin is 1.
pub fn frobenius_number(den: &Denominations) -> Result<i64> {
    if den.is_trivial() {
        return Ok(-1);
    }
    den.a
        .checked_mul(den.b)
        .and_then(|ab| ab.checked_sub(den.a))
        .and_then(|v| v.checked_sub(den.b))
        .ok_or(Error::Overflow("a*b - a - b"))
}
