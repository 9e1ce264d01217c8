//! Certified intervals for graph invariants.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt::{self, Write as _};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    Mlt,
    Rank,
    Wmlt,
    Smt,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Mlt => "mlt",
            Invariant::Rank => "rank",
            Invariant::Wmlt => "wmlt",
            Invariant::Smt => "smt",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One bound with the data needed to re-check it. `witness` always holds a
/// `"side"` field, `"lower"` or `"upper"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub method: String,
    pub bound: usize,
    pub witness: Value,
    pub seeds: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl Certificate {
    /// `witness` must be a JSON object (or null); the side tag is added to it.
    pub fn new(method: &str, side: Side, bound: usize, witness: Value, seeds: Vec<u64>) -> Self {
        let mut witness = match witness {
            Value::Object(map) => map,
            Value::Null => serde_json::Map::new(),
            other => {
                let mut map = serde_json::Map::new();
                map.insert("value".into(), other);
                map
            }
        };
        let tag = match side {
            Side::Lower => "lower",
            Side::Upper => "upper",
        };
        witness.insert("side".into(), Value::from(tag));
        Self { method: method.to_string(), bound, witness: Value::Object(witness), seeds }
    }

    pub fn side(&self) -> Option<Side> {
        match self.witness.get("side").and_then(Value::as_str) {
            Some("lower") => Some(Side::Lower),
            Some("upper") => Some(Side::Upper),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub invariant: Invariant,
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub certificates: Vec<Certificate>,
    pub notes: Vec<String>,
}

impl BoundsReport {
    /// Assemble from certificates: the lower end is the largest lower bound,
    /// the upper end the smallest upper bound.
    pub fn from_certificates(invariant: Invariant, certificates: Vec<Certificate>, notes: Vec<String>) -> Self {
        let lower = certificates.iter().filter(|c| c.side() == Some(Side::Lower)).map(|c| c.bound).max().unwrap_or(0);
        let upper = certificates.iter().filter(|c| c.side() == Some(Side::Upper)).map(|c| c.bound).min().unwrap_or(usize::MAX);
        assert!(lower <= upper, "{invariant}: lower bound {lower} exceeds upper bound {upper}");
        Self { invariant, lower, upper, exact: (lower == upper).then_some(lower), certificates, notes }
    }

    /// The interval is well formed and no certificate contradicts it.
    pub fn is_consistent(&self) -> bool {
        self.lower <= self.upper
            && self.exact.map_or(true, |e| e == self.lower && e == self.upper)
            && self.certificates.iter().all(|c| match c.side() {
                Some(Side::Lower) => c.bound <= self.lower,
                Some(Side::Upper) => c.bound >= self.upper,
                None => false,
            })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Line-oriented rendering: a summary line, then one line per
    /// certificate and note, each prefixed with the invariant name.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let name = self.invariant.name();
        let exact = self.exact.map_or("none".to_string(), |e| e.to_string());
        writeln!(out, "{name} lower={} upper={} exact={exact}", self.lower, self.upper).unwrap();
        for c in &self.certificates {
            let side = match c.side() {
                Some(Side::Lower) => "lower",
                Some(Side::Upper) => "upper",
                None => "?",
            };
            let seeds: Vec<String> = c.seeds.iter().map(u64::to_string).collect();
            writeln!(out, "{name}.certificate side={side} method={} bound={} seeds=[{}]", c.method, c.bound, seeds.join(",")).unwrap();
        }
        for n in &self.notes {
            writeln!(out, "{name}.note {n}").unwrap();
        }
        out
    }
}
