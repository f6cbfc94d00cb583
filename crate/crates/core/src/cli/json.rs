//! Serialized shapes shared by the CLI and the browser demo.
//!
//! Integers whose magnitude exceeds 2^53 - 1 are written as decimal strings
//! so consumers that parse json numbers as doubles do not lose precision.

use serde::{Serialize, Serializer};

use crate::numeric::{Denominations, Expression, Unit};
use crate::oracle::{GapReport, Mismatch, VerificationReport};
use crate::solver::{ExpressionLevel, ExpressionTree};

pub const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

/// An integer that serializes as a string outside the double-safe range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Num(pub i64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.unsigned_abs() > MAX_SAFE_INTEGER as u64 {
            s.collect_str(&self.0)
        } else {
            s.serialize_i64(self.0)
        }
    }
}

impl From<i64> for Num {
    fn from(v: i64) -> Self {
        Num(v)
    }
}

impl From<u64> for Num {
    fn from(v: u64) -> Self {
        Num(v as i64)
    }
}

#[derive(Debug, Serialize)]
pub struct FrobeniusJson {
    pub a: Num,
    pub b: Num,
    pub frobenius: Num,
}

impl FrobeniusJson {
    pub fn new(den: &Denominations, frobenius: i64) -> Self {
        FrobeniusJson {
            a: den.a().into(),
            b: den.b().into(),
            frobenius: frobenius.into(),
        }
    }
}

/// A single representation; `x` and `y` are null when `d` is a gap.
#[derive(Debug, Serialize)]
pub struct RepresentJson {
    pub a: Num,
    pub b: Num,
    pub d: Num,
    pub x: Option<Num>,
    pub y: Option<Num>,
}

impl RepresentJson {
    pub fn new(den: &Denominations, d: i64, e: Option<&Expression>) -> Self {
        RepresentJson {
            a: den.a().into(),
            b: den.b().into(),
            d: d.into(),
            x: e.map(|e| e.x().into()),
            y: e.map(|e| e.y().into()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CoefficientsJson {
    pub x: Num,
    pub y: Num,
}

impl From<&Expression> for CoefficientsJson {
    fn from(e: &Expression) -> Self {
        CoefficientsJson {
            x: e.x().into(),
            y: e.y().into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct NodeJson {
    pub d: Num,
    pub x: Num,
    pub y: Num,
}

impl From<&Expression> for NodeJson {
    fn from(e: &Expression) -> Self {
        NodeJson {
            d: e.d().into(),
            x: e.x().into(),
            y: e.y().into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LevelJson {
    pub d: Num,
    pub count: Num,
    pub expressions: Vec<CoefficientsJson>,
}

impl From<&ExpressionLevel> for LevelJson {
    fn from(level: &ExpressionLevel) -> Self {
        LevelJson {
            d: level.d.into(),
            count: (level.len() as u64).into(),
            expressions: level.expressions.iter().map(Into::into).collect(),
        }
    }
}

/// `--all` output: every acceptable expression of one value.
#[derive(Debug, Serialize)]
pub struct AllJson {
    pub a: Num,
    pub b: Num,
    #[serde(flatten)]
    pub level: LevelJson,
}

impl AllJson {
    pub fn new(den: &Denominations, level: &ExpressionLevel) -> Self {
        AllJson {
            a: den.a().into(),
            b: den.b().into(),
            level: level.into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EdgeJson {
    pub from: NodeJson,
    pub to: NodeJson,
    pub unit: Unit,
}

#[derive(Debug, Serialize)]
pub struct TreeJson {
    pub a: Num,
    pub b: Num,
    pub depth: Num,
    pub levels: Vec<LevelJson>,
    pub edges: Vec<EdgeJson>,
}

impl TreeJson {
    pub fn new(den: &Denominations, tree: &ExpressionTree) -> Self {
        TreeJson {
            a: den.a().into(),
            b: den.b().into(),
            depth: (tree.depth() as u64).into(),
            levels: tree.levels.iter().map(Into::into).collect(),
            edges: tree
                .all_edges()
                .map(|t| EdgeJson {
                    from: (&t.from).into(),
                    to: (&t.to).into(),
                    unit: t.added,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GapsJson {
    pub a: Num,
    pub b: Num,
    pub gaps: Vec<Num>,
    pub count: Num,
    pub frobenius: Num,
}

impl From<&GapReport> for GapsJson {
    fn from(r: &GapReport) -> Self {
        GapsJson {
            a: r.den.a().into(),
            b: r.den.b().into(),
            gaps: r.gaps.iter().map(|&g| g.into()).collect(),
            count: r.count.into(),
            frobenius: r.frobenius.into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MismatchJson {
    pub d: Num,
    pub method: Option<CoefficientsJson>,
    pub oracle: Option<CoefficientsJson>,
    pub reason: String,
}

impl From<&Mismatch> for MismatchJson {
    fn from(m: &Mismatch) -> Self {
        MismatchJson {
            d: m.d.into(),
            method: m.method.as_ref().map(Into::into),
            oracle: m.oracle.as_ref().map(Into::into),
            reason: m.reason.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyJson {
    pub a: Num,
    pub b: Num,
    pub d_lo: Num,
    pub d_hi: Num,
    pub checked: Num,
    pub mismatches: Vec<MismatchJson>,
    pub passed: bool,
    pub elapsed_ms: f64,
}

impl From<&VerificationReport> for VerifyJson {
    fn from(r: &VerificationReport) -> Self {
        VerifyJson {
            a: r.den.a().into(),
            b: r.den.b().into(),
            d_lo: r.d_lo.into(),
            d_hi: r.d_hi.into(),
            checked: r.checked.into(),
            mismatches: r.mismatches.iter().map(Into::into).collect(),
            passed: r.passed(),
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
        }
    }
}
