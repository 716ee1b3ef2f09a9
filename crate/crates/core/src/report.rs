//! Machine-readable pass/fail records.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

/// Version of the JSON layout emitted by [`VerificationReport::to_json`].
pub const REPORT_SCHEMA: u64 = 1;

/// One value of `n` at which the two sides of a checked relation disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub n: u64,
    pub lhs: BigInt,
    pub rhs: BigInt,
    /// Which relation failed, for reports covering several.
    pub relation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: String,
    pub k: Option<u64>,
    pub range: (u64, u64),
    /// Number of `n` in range meeting the relation's side conditions.
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(theorem: impl Into<String>, k: Option<u64>, range: (u64, u64)) -> Self {
        VerificationReport {
            theorem: theorem.into(),
            k,
            range,
            checked: 0,
            failures: Vec::new(),
            passed: true,
        }
    }

    /// Compares `lhs` and `rhs`, recording a failure when they differ.
    pub fn compare(
        &mut self,
        n: u64,
        relation: Option<&str>,
        lhs: impl Into<BigInt>,
        rhs: impl Into<BigInt>,
    ) -> bool {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        if lhs == rhs {
            return true;
        }
        self.failures.push(Failure {
            n,
            lhs,
            rhs,
            relation: relation.map(str::to_string),
        });
        self.passed = false;
        false
    }

    pub fn count_checked(&mut self) {
        self.checked += 1;
    }

    /// Stable JSON form. Integers are emitted as exact JSON numbers however
    /// large they are.
    pub fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| {
                let mut obj = json!({
                    "n": f.n,
                    "lhs": big_number(&f.lhs),
                    "rhs": big_number(&f.rhs),
                });
                if let Some(rel) = &f.relation {
                    obj["relation"] = Value::String(rel.clone());
                }
                obj
            })
            .collect();
        json!({
            "schema": REPORT_SCHEMA,
            "theorem": self.theorem,
            "k": self.k,
            "range": [self.range.0, self.range.1],
            "checked": self.checked,
            "failures": failures,
            "passed": self.passed,
        })
    }
}

fn big_number(x: &BigInt) -> Value {
    // arbitrary_precision keeps the decimal text verbatim
    Value::Number(
        x.to_string()
            .parse::<Number>()
            .expect("decimal integer is a valid JSON number"),
    )
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.theorem)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        write!(
            f,
            " n={}..{} checked={} failures={}",
            self.range.0,
            self.range.1,
            self.checked,
            self.failures.len()
        )
    }
}
