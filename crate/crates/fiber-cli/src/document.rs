//! The serializable report.
//!
//! Everything here is deterministic: maps are ordered, entry lists follow
//! their enumeration keys, and no timing or environment data is recorded.
//! Two runs with the same configuration therefore serialize to identical
//! bytes, and a serialized report parses back to an equal document.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use semiinf::characters::Character;
use semiinf::qpoly::QPolynomial;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub datum: DatumSummary,
    pub suites: BTreeMap<String, SuiteReport>,
}

impl ReportDocument {
    /// Decides the process exit code: any FAIL entry or suite fails the
    /// run, while REPORT and SKIP do not.
    pub fn has_fail(&self) -> bool {
        self.suites
            .values()
            .any(|s| s.status == "FAIL" || s.entries.iter().any(|e| e.status == "FAIL"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumSummary {
    pub label: String,
    pub rank: usize,
    pub positive_roots: usize,
    pub weyl_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub status: String,
    pub entries: Vec<EntryReport>,
}

/// One verification item. Suites fill the fields they use and leave the
/// rest absent; absent fields are not serialized, so each suite has a
/// stable flat schema. `status` is one of PASS, FAIL, REPORT, SKIP.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct EntryReport {
    /// Fiber and filtration suites: simple-root coordinates of mu (all
    /// nonpositive). Hom-space suite: fundamental coordinates of the
    /// dominant mu.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu: Option<Vec<i64>>,
    /// Tensor suite: fundamental coordinates of the fixed factor's
    /// highest weight.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub v: Option<Vec<i64>>,
    /// Tensor suite: fundamental coordinates of the deep base point.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lam: Option<Vec<i64>>,
    /// Selftest entries and error carriers: the check's name.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shriek_stable: Option<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shriek_threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub star_stable: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub star_threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub truncated_window: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub target: Option<TargetJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta0: Option<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_exponent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pairing_2rho: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub codim_global_model: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub codim_grassmannian: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub observed_threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub apriori_threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub within_apriori: Option<bool>,
    /// Hom-space suite: the certified limit character (weight,
    /// multiplicity pairs in fundamental coordinates, sorted).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub character: Option<Vec<CharWeightJson>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub summands: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dimension: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    pub status: String,
}

/// Sparse polynomial in q: exponent -> coefficient, ordered by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct PolyJson {
    pub coeffs: BTreeMap<usize, i64>,
}

impl fmt::Display for PolyJson {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = QPolynomial::from_coeffs(
            self.coeffs.iter().map(|(&e, &c)| (e, BigInt::from(c))),
        );
        write!(f, "{poly}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetJson {
    pub shriek: PolyJson,
    pub star: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharWeightJson {
    pub weight: Vec<i64>,
    pub mult: u64,
}

/// A value too large for the report encoding; runs abort rather than
/// silently truncating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeError(pub String);

impl fmt::Display for EncodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for EncodeError {}

pub fn poly_json(poly: &QPolynomial) -> Result<PolyJson, EncodeError> {
    let mut coeffs = BTreeMap::new();
    for (e, c) in poly.terms() {
        let small = c.to_i64().ok_or_else(|| {
            EncodeError(format!("coefficient {c} at q^{e} exceeds the report integer range"))
        })?;
        coeffs.insert(e, small);
    }
    Ok(PolyJson { coeffs })
}

pub fn count_u64(value: &BigUint) -> Result<u64, EncodeError> {
    value.to_u64().ok_or_else(|| {
        EncodeError(format!("count {value} exceeds the report integer range"))
    })
}

pub fn character_json(character: &Character) -> Result<Vec<CharWeightJson>, EncodeError> {
    character
        .entries()
        .map(|(w, m)| {
            Ok(CharWeightJson {
                weight: w.coords().to_vec(),
                mult: count_u64(m)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absent_fields_do_not_serialize() {
        let entry = EntryReport {
            mu: Some(vec![-1, 0]),
            status: "PASS".into(),
            ..EntryReport::default()
        };
        let text = serde_json::to_string(&entry).unwrap();
        assert_eq!(text, r#"{"mu":[-1,0],"status":"PASS"}"#);
    }

    #[test]
    fn poly_round_trips_with_numeric_key_order() {
        let poly = PolyJson {
            coeffs: [(0usize, 1i64), (2, 3), (10, 1)].into_iter().collect(),
        };
        let text = serde_json::to_string(&poly).unwrap();
        assert_eq!(text, r#"{"coeffs":{"0":1,"2":3,"10":1}}"#);
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, poly);
    }

    #[test]
    fn poly_displays_lowest_exponent_first() {
        let poly = PolyJson {
            coeffs: [(0usize, 1i64), (1, 2), (2, 1)].into_iter().collect(),
        };
        assert_eq!(poly.to_string(), "1 + 2 q + q^2");
        assert_eq!(PolyJson::default().to_string(), "0");
    }

    #[test]
    fn fail_detection_sees_entries_and_suites() {
        let mut doc = ReportDocument {
            tool_version: "0".into(),
            datum: DatumSummary {
                label: "A1".into(),
                rank: 1,
                positive_roots: 1,
                weyl_order: 2,
            },
            suites: BTreeMap::new(),
        };
        assert!(!doc.has_fail());
        doc.suites.insert(
            "fibers".into(),
            SuiteReport {
                status: "PASS".into(),
                entries: vec![EntryReport {
                    status: "FAIL".into(),
                    ..EntryReport::default()
                }],
            },
        );
        assert!(doc.has_fail());
    }
}
