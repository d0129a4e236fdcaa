//! Verification reports shared by the identity checkers and the CLI.

use std::collections::BTreeMap;
use std::fmt;

use crate::series::{Rat, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Numeric mode only: the truncation tail estimate exceeds the tolerance,
    /// so neither agreement nor disagreement can be concluded.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// First differing monomial of a failed exact comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub monomial: Vec<u32>,
    pub lhs: Rat,
    pub rhs: Rat,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub mismatch: Option<Mismatch>,
    /// |L - R| in numeric mode.
    pub residual: Option<f64>,
    /// Truncation tail estimate in numeric mode.
    pub tail_estimate: Option<f64>,
}

impl VerificationReport {
    /// Exact comparison of two series; pass iff term-map equality, fail
    /// reporting the lexicographically smallest differing monomial otherwise.
    pub fn compare(identity: &str, lhs: &Series, rhs: &Series) -> VerificationReport {
        match lhs.first_difference(rhs) {
            None => VerificationReport::pass(identity),
            Some((monomial, l, r)) => VerificationReport {
                identity: identity.to_string(),
                params: BTreeMap::new(),
                status: Status::Fail,
                mismatch: Some(Mismatch {
                    monomial,
                    lhs: l,
                    rhs: r,
                }),
                residual: None,
                tail_estimate: None,
            },
        }
    }

    pub fn pass(identity: &str) -> VerificationReport {
        VerificationReport {
            identity: identity.to_string(),
            params: BTreeMap::new(),
            status: Status::Pass,
            mismatch: None,
            residual: None,
            tail_estimate: None,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl fmt::Display) -> VerificationReport {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Merge: pass only if both pass; the first non-pass wins.
    pub fn and(self, other: VerificationReport) -> VerificationReport {
        if self.status == Status::Pass {
            other
        } else {
            self
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "identity": self.identity,
            "params": self.params,
            "status": self.status.to_string(),
        });
        if let Some(m) = &self.mismatch {
            v["mismatch"] = serde_json::json!({
                "monomial": m.monomial,
                "lhs": m.lhs.to_string(),
                "rhs": m.rhs.to_string(),
            });
        }
        if let Some(r) = self.residual {
            v["residual"] = serde_json::json!(r);
        }
        if let Some(t) = self.tail_estimate {
            v["tail_estimate"] = serde_json::json!(t);
        }
        v
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.identity, self.status)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, " ({})", ps.join(", "))?;
        }
        if let Some(m) = &self.mismatch {
            write!(
                f,
                " first difference at {:?}: lhs={} rhs={}",
                m.monomial, m.lhs, m.rhs
            )?;
        }
        if let Some(r) = self.residual {
            write!(f, " residual={r:.3e}")?;
        }
        if let Some(t) = self.tail_estimate {
            write!(f, " tail~{t:.3e}")?;
        }
        Ok(())
    }
}
