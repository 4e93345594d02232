//! JSON documents: structures, fuzzy subsets, reports and censuses.
//!
//! Structure files carry `table[i][k][j]`, the index of
//! `elements[i] gammas[k] elements[j]`, and `order` pairs `[i, j]` meaning
//! `elements[i] <= elements[j]`. The pairs may be any generating set; the
//! closed relation is what serializes back. Fuzzy subsets are objects
//! mapping every element label to a number in `[0, 1]`.

use std::fs;
use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::battery::BatteryScope;
use crate::fuzzy::{FuzzyError, FuzzySubset};
use crate::ideal::{ClassificationReport, Decider, RegularityClass};
use crate::structure::{GammaStructure, StructureError, Subset, ValidateOptions};
use crate::suite::{BatteryReport, Claim, Outcome, Property, TheoremVerdict, Violation, Witness};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// JSON schema for [`ReportDocument`].
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("table shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
    #[error("unknown {kind} `{label}` in witness")]
    UnknownLabel { kind: &'static str, label: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    pub elements: Vec<String>,
    pub gammas: Vec<String>,
    pub table: Vec<Vec<Vec<usize>>>,
    #[serde(default)]
    pub order: Vec<[usize; 2]>,
}

impl StructureDocument {
    pub fn from_structure(s: &GammaStructure) -> Self {
        let (n, m) = (s.size(), s.gamma_count());
        let table = (0..n)
            .map(|i| {
                (0..m)
                    .map(|k| (0..n).map(|j| s.mul(i, k, j)).collect())
                    .collect()
            })
            .collect();
        StructureDocument {
            elements: s.elements().to_vec(),
            gammas: s.gammas().to_vec(),
            table,
            order: s.order_pairs().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}

/// Checks the document's shape and builds the validated structure.
pub fn validate_structure(
    doc: &StructureDocument,
    options: ValidateOptions,
) -> Result<GammaStructure, FormatError> {
    let (n, m) = (doc.elements.len(), doc.gammas.len());
    if doc.table.len() != n {
        return Err(FormatError::Shape(format!(
            "expected {n} rows, found {}",
            doc.table.len()
        )));
    }
    let mut flat = Vec::with_capacity(n * m * n);
    for (i, row) in doc.table.iter().enumerate() {
        if row.len() != m {
            return Err(FormatError::Shape(format!(
                "row {i} has {} operation slices, expected {m}",
                row.len()
            )));
        }
        for (k, slice) in row.iter().enumerate() {
            if slice.len() != n {
                return Err(FormatError::Shape(format!(
                    "table[{i}][{k}] has {} entries, expected {n}",
                    slice.len()
                )));
            }
            flat.extend_from_slice(slice);
        }
    }
    let pairs: Vec<(usize, usize)> = doc.order.iter().map(|&[i, j]| (i, j)).collect();
    Ok(GammaStructure::from_parts(
        doc.elements.clone(),
        doc.gammas.clone(),
        flat,
        &pairs,
        options,
    )?)
}

pub fn parse_structure(
    json: &str,
    options: ValidateOptions,
) -> Result<GammaStructure, FormatError> {
    let doc: StructureDocument = serde_json::from_str(json)?;
    validate_structure(&doc, options)
}

pub fn read_structure(
    path: &Path,
    options: ValidateOptions,
) -> Result<GammaStructure, FormatError> {
    parse_structure(&read(path)?, options)
}

pub fn structure_to_json(s: &GammaStructure) -> String {
    serde_json::to_string_pretty(&StructureDocument::from_structure(s)).expect("serializable")
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// `{label: value}` for every element, in carrier order.
pub fn fuzzy_to_map(s: &GammaStructure, values: &[f64]) -> IndexMap<String, f64> {
    s.elements()
        .iter()
        .cloned()
        .zip(values.iter().copied())
        .collect()
}

pub fn parse_fuzzy(s: &GammaStructure, json: &str) -> Result<FuzzySubset, FormatError> {
    let map: IndexMap<String, f64> = serde_json::from_str(json)?;
    Ok(FuzzySubset::from_labels(
        s,
        map.iter().map(|(k, v)| (k.as_str(), *v)),
    )?)
}

pub fn read_fuzzy(s: &GammaStructure, path: &Path) -> Result<FuzzySubset, FormatError> {
    parse_fuzzy(s, &read(path)?)
}

fn map_to_values(s: &GammaStructure, map: &IndexMap<String, f64>) -> Result<Vec<f64>, FormatError> {
    Ok(FuzzySubset::from_labels(s, map.iter().map(|(k, v)| (k.as_str(), *v)))?.into_values())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureSummary {
    pub elements: usize,
    pub gammas: usize,
    pub associative: bool,
    pub compatible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDocument {
    pub class: RegularityClass,
    pub holds: bool,
    pub deciders: IndexMap<String, bool>,
    /// One rendered factorization per element when the class holds.
    pub witnesses: Vec<String>,
    pub failing_element: Option<String>,
}

pub fn classification_documents(
    s: &GammaStructure,
    report: &ClassificationReport,
) -> Vec<ClassDocument> {
    report
        .classes
        .iter()
        .map(|v| ClassDocument {
            class: v.class,
            holds: v.holds,
            deciders: v
                .deciders
                .iter()
                .map(|(d, b)| (decider_name(*d).to_string(), *b))
                .collect(),
            witnesses: v.witnesses.iter().map(|w| w.render(s)).collect(),
            failing_element: v.failing_element.map(|a| s.element_label(a).to_string()),
        })
        .collect()
}

fn decider_name(d: Decider) -> &'static str {
    match d {
        Decider::Definitional => "definitional",
        Decider::IdealCriterion => "ideal_criterion",
        Decider::FuzzyWitness => "fuzzy_witness",
    }
}

/// Label-based form of a [`Witness`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WitnessDocument {
    Fuzzy {
        property: Property,
        f: IndexMap<String, f64>,
        g: Option<IndexMap<String, f64>>,
        element: Option<String>,
        gamma: Option<String>,
    },
    HypothesisGap {
        class: RegularityClass,
        element: String,
    },
    DeciderMismatch {
        class: RegularityClass,
        definitional: bool,
        ideal_criterion: bool,
    },
    SubsetMismatch {
        subset: Vec<String>,
        side: Side,
    },
    ElementPair {
        a: String,
        b: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Right,
    Left,
}

impl WitnessDocument {
    pub fn from_witness(s: &GammaStructure, w: &Witness) -> Self {
        let label = |a: usize| s.element_label(a).to_string();
        match w {
            Witness::Fuzzy {
                property,
                f,
                g,
                violation,
            } => WitnessDocument::Fuzzy {
                property: *property,
                f: fuzzy_to_map(s, f),
                g: g.as_ref().map(|g| fuzzy_to_map(s, g)),
                element: violation.element.map(label),
                gamma: violation.gamma.map(|k| s.gamma_label(k).to_string()),
            },
            Witness::HypothesisGap { class, element } => WitnessDocument::HypothesisGap {
                class: *class,
                element: label(*element),
            },
            Witness::DeciderMismatch {
                class,
                definitional,
                ideal_criterion,
            } => WitnessDocument::DeciderMismatch {
                class: *class,
                definitional: *definitional,
                ideal_criterion: *ideal_criterion,
            },
            Witness::SubsetMismatch { subset, left } => WitnessDocument::SubsetMismatch {
                subset: subset.iter().map(label).collect(),
                side: if *left { Side::Left } else { Side::Right },
            },
            Witness::ElementPair { a, b } => WitnessDocument::ElementPair {
                a: label(*a),
                b: label(*b),
            },
        }
    }

    /// Resolves labels against `s`; the result can be replayed.
    pub fn to_witness(&self, s: &GammaStructure) -> Result<Witness, FormatError> {
        let element = |l: &str| {
            s.element_index(l).ok_or_else(|| FormatError::UnknownLabel {
                kind: "element",
                label: l.to_string(),
            })
        };
        Ok(match self {
            WitnessDocument::Fuzzy {
                property,
                f,
                g,
                element: at,
                gamma,
            } => Witness::Fuzzy {
                property: *property,
                f: map_to_values(s, f)?,
                g: g.as_ref().map(|g| map_to_values(s, g)).transpose()?,
                violation: Violation {
                    element: at.as_deref().map(element).transpose()?,
                    gamma: gamma
                        .as_deref()
                        .map(|l| {
                            s.gamma_index(l).ok_or_else(|| FormatError::UnknownLabel {
                                kind: "gamma",
                                label: l.to_string(),
                            })
                        })
                        .transpose()?,
                },
            },
            WitnessDocument::HypothesisGap { class, element: e } => Witness::HypothesisGap {
                class: *class,
                element: element(e)?,
            },
            WitnessDocument::DeciderMismatch {
                class,
                definitional,
                ideal_criterion,
            } => Witness::DeciderMismatch {
                class: *class,
                definitional: *definitional,
                ideal_criterion: *ideal_criterion,
            },
            WitnessDocument::SubsetMismatch { subset, side } => Witness::SubsetMismatch {
                subset: Subset::from_indices(
                    s.size(),
                    subset
                        .iter()
                        .map(|l| element(l))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                left: *side == Side::Left,
            },
            WitnessDocument::ElementPair { a, b } => Witness::ElementPair {
                a: element(a)?,
                b: element(b)?,
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictDocument {
    pub id: String,
    pub statement: String,
    pub outcome: Outcome,
    pub note: String,
    pub witness: Option<WitnessDocument>,
    pub evidence: Option<WitnessDocument>,
    pub battery: BatteryReport,
}

impl VerdictDocument {
    pub fn from_verdict(s: &GammaStructure, v: &TheoremVerdict) -> Self {
        let statement = match v.claim {
            Claim::Theorem(id) => id.statement().to_string(),
            Claim::Control(_) => "negative control with its hypothesis dropped".to_string(),
        };
        VerdictDocument {
            id: v.claim.as_str().to_string(),
            statement,
            outcome: v.outcome,
            note: v.note.clone(),
            witness: v
                .witness
                .as_ref()
                .map(|w| WitnessDocument::from_witness(s, w)),
            evidence: v
                .evidence
                .as_ref()
                .map(|w| WitnessDocument::from_witness(s, w)),
            battery: v.battery.clone(),
        }
    }
}

/// Battery settings echoed into reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatteryDocument {
    pub levels: usize,
    pub scope: BatteryScope,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub tool_version: String,
    pub structure_digest: String,
    pub structure: StructureSummary,
    pub classification: Option<Vec<ClassDocument>>,
    pub verdicts: Vec<VerdictDocument>,
    pub battery: Option<BatteryDocument>,
    pub timing_ms: f64,
}

impl ReportDocument {
    pub fn new(s: &GammaStructure) -> Self {
        ReportDocument {
            tool_version: TOOL_VERSION.to_string(),
            structure_digest: s.digest(),
            structure: StructureSummary {
                elements: s.size(),
                gammas: s.gamma_count(),
                associative: s.is_associative(),
                compatible: s.is_compatible(),
            },
            classification: None,
            verdicts: Vec::new(),
            battery: None,
            timing_ms: 0.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::suite::{self, TheoremId};
    use crate::GridBattery;

    #[test]
    fn structure_round_trip() {
        for (_, s) in fixtures::all() {
            let json = structure_to_json(&s);
            let back = parse_structure(&json, ValidateOptions::default()).unwrap();
            assert_eq!(back.digest(), s.digest());
            assert_eq!(back, s);
        }
    }

    #[test]
    fn closure_serializes_back() {
        let json = r#"{"elements":["a","b","c"],"gammas":["g"],
            "table":[[[0,0,0]],[[0,0,0]],[[0,0,0]]],"order":[[0,1],[1,2]]}"#;
        let s = parse_structure(json, ValidateOptions::default()).unwrap();
        let doc = StructureDocument::from_structure(&s);
        assert_eq!(doc.order, vec![[0, 1], [0, 2], [1, 2]]);
    }

    #[test]
    fn shape_and_schema_errors() {
        let bad = r#"{"elements":["a"],"gammas":["g"],"table":[[[0,0]]]}"#;
        assert!(matches!(
            parse_structure(bad, ValidateOptions::default()),
            Err(FormatError::Shape(_))
        ));
        let extra = r#"{"elements":["a"],"gammas":["g"],"table":[[[0]]],"colour":1}"#;
        assert!(matches!(
            parse_structure(extra, ValidateOptions::default()),
            Err(FormatError::Json(_))
        ));
        let range = r#"{"elements":["a"],"gammas":["g"],"table":[[[3]]]}"#;
        assert!(matches!(
            parse_structure(range, ValidateOptions::default()),
            Err(FormatError::Structure(
                StructureError::TableOutOfRange { .. }
            ))
        ));
    }

    #[test]
    fn fuzzy_parsing() {
        let s = fixtures::lz2();
        let f = parse_fuzzy(&s, r#"{"a":0.5,"b":1.0}"#).unwrap();
        assert_eq!(f.values(), &[0.5, 1.0]);
        assert!(matches!(
            parse_fuzzy(&s, r#"{"a":1.5,"b":1.0}"#),
            Err(FormatError::Fuzzy(FuzzyError::OutOfRange { .. }))
        ));
        assert!(matches!(
            parse_fuzzy(&s, r#"{"a":0.5}"#),
            Err(FormatError::Fuzzy(FuzzyError::MissingElement(_)))
        ));
    }

    #[test]
    fn witness_documents_replay() {
        let s = fixtures::nz2();
        let v = suite::check(
            &s,
            Claim::Control(suite::NegativeControl::L8Unconditional),
            &GridBattery::exhaustive(6),
        )
        .unwrap();
        let doc = VerdictDocument::from_verdict(&s, &v);
        let json = serde_json::to_string(&doc).unwrap();
        let back: VerdictDocument = serde_json::from_str(&json).unwrap();
        let w = back.witness.unwrap().to_witness(&s).unwrap();
        assert!(w.replay(&s));
        let v = suite::check(
            &s,
            Claim::Theorem(TheoremId::T23),
            &GridBattery::exhaustive(6),
        )
        .unwrap();
        let e = WitnessDocument::from_witness(&s, v.evidence.as_ref().unwrap());
        assert_eq!(e.to_witness(&s).unwrap(), *v.evidence.as_ref().unwrap());
    }
}
