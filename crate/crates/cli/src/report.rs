//! Report records. Field order is fixed by the struct definitions and no
//! maps or timestamps are involved, so equal inputs give equal bytes.

use octospin::degree::DegreeReport;
use serde::Serialize;
use serde_json::Value;

use crate::config::{Backend, RunConfig};
use crate::text::ScalarText;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    OctonionIdentities,
    RotationLaws,
    F7WellDefined,
    Spin7Membership,
    Triality,
    DoubleCover,
    CommutativeSquare,
    DegreeLedger,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::OctonionIdentities,
        Suite::RotationLaws,
        Suite::F7WellDefined,
        Suite::Spin7Membership,
        Suite::Triality,
        Suite::DoubleCover,
        Suite::CommutativeSquare,
        Suite::DegreeLedger,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OctonionIdentities => "octonion-identities",
            Suite::RotationLaws => "rotation-laws",
            Suite::F7WellDefined => "f7-well-defined",
            Suite::Spin7Membership => "spin7-membership",
            Suite::Triality => "triality",
            Suite::DoubleCover => "double-cover",
            Suite::CommutativeSquare => "commutative-square",
            Suite::DegreeLedger => "degree-ledger",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigRecord {
    pub backend: Backend,
    /// Absent for the exact backend, which compares with `==`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    pub seed: u64,
    pub trials: usize,
}

impl From<&RunConfig> for ConfigRecord {
    fn from(c: &RunConfig) -> Self {
        ConfigRecord {
            backend: c.backend,
            epsilon: (c.backend == Backend::Float).then(|| c.epsilon.to_text()),
            seed: c.seed,
            trials: c.trials,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimRecord {
    pub id: &'static str,
    /// The identity or property checked, written as a formula.
    pub anchor: &'static str,
    pub instances: usize,
    pub pass: bool,
    pub failure_count: usize,
    /// The first few failing instances.
    pub failures: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteRecord {
    pub suite: Suite,
    pub pass: bool,
    pub claims: Vec<ClaimRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: ConfigRecord,
    pub pass: bool,
    pub suites: Vec<SuiteRecord>,
}

impl Report {
    pub fn claims(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.suites.iter().flat_map(|s| s.claims.iter())
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize infallibly");
    s.push('\n');
    s
}

/// A ledger value tagged with where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "provenance", rename_all = "lowercase")]
pub enum Provenanced<T> {
    Computed { value: T },
    Cited { value: T, citation: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeRecord {
    pub p_degree: Provenanced<i64>,
    pub cover_multiplier: Provenanced<i64>,
    pub h_multiplier_magnitude: Provenanced<i64>,
    pub conclusion_magnitude: Provenanced<i64>,
    pub sign_determined: bool,
}

impl From<&DegreeReport> for DegreeRecord {
    fn from(r: &DegreeReport) -> Self {
        DegreeRecord {
            p_degree: Provenanced::Computed { value: r.p_degree },
            cover_multiplier: Provenanced::Cited {
                value: r.cover_multiplier,
                citation: r.cover_citation,
            },
            h_multiplier_magnitude: Provenanced::Cited {
                value: r.h_multiplier_magnitude,
                citation: r.h_citation,
            },
            conclusion_magnitude: Provenanced::Computed {
                value: r.conclusion_magnitude,
            },
            sign_determined: r.sign_determined,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use octospin::degree::{degree_ledger, SquareReport};
    use octospin::{Rational, Scalar};

    #[test]
    fn provenance_tags() {
        let square = SquareReport::<Rational> {
            trials: 1,
            failures: vec![],
            max_residual: Rational::zero(),
        };
        let rec = DegreeRecord::from(&degree_ledger(&square, 2, 2).unwrap());
        let v = serde_json::to_value(&rec).unwrap();
        assert_eq!(v["p_degree"]["provenance"], "computed");
        assert_eq!(v["p_degree"]["value"], 4);
        assert_eq!(v["cover_multiplier"]["provenance"], "cited");
        assert_eq!(v["cover_multiplier"]["value"], 2);
        assert!(v["cover_multiplier"]["citation"]
            .as_str()
            .unwrap()
            .contains("7.4"));
        assert_eq!(v["h_multiplier_magnitude"]["provenance"], "cited");
        assert_eq!(v["h_multiplier_magnitude"]["value"], 4);
        assert_eq!(v["conclusion_magnitude"]["value"], 8);
        assert_eq!(v["sign_determined"], false);
    }

    #[test]
    fn suite_names_match_serde() {
        for s in Suite::ALL {
            assert_eq!(serde_json::to_value(s).unwrap(), s.name());
        }
    }
}
