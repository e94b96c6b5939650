//! JSON forms for the domain types.
//!
//! A universe is `{"universe": 3}` or `{"universe": ["a", "b", "c"]}`; a
//! subset is an array of labels (or indices when labels are absent);
//! partitions and coverings add `"blocks"`, relations add `"pairs"`,
//! matroids add `"circuits"` or `"independents"`, and a partition matroid
//! wraps its partition as `{"partition": {...}, "capacities": [...],
//! "weights": [...]}`. Unknown fields are rejected outright.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::approxnum::Covering;
use crate::family::SetFamily;
use crate::ground::{Subset, Universe};
use crate::matroid::Matroid;
use crate::pcm::PartitionMatroid;
use crate::rough::{EquivalenceRelation, Partition};
use crate::{Error, Result};

/// A universe given either by element count or by its labels.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum UniverseForm {
    Count(usize),
    Labels(Vec<String>),
}

impl UniverseForm {
    pub fn build(&self) -> Result<Universe> {
        match self {
            UniverseForm::Count(size) => Ok(Universe::new(*size)),
            UniverseForm::Labels(labels) => Universe::with_labels(labels.clone()),
        }
    }
}

/// One element, by label or by index.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Label(String),
}

impl ElementRef {
    pub fn resolve(&self, universe: &Universe) -> Result<usize> {
        match self {
            ElementRef::Index(index) => {
                if *index < universe.size() {
                    Ok(*index)
                } else {
                    Err(Error::ElementOutOfRange {
                        index: *index,
                        size: universe.size(),
                    })
                }
            }
            ElementRef::Label(label) => {
                universe.index_of(label).ok_or_else(|| Error::UnknownLabel {
                    label: label.clone(),
                })
            }
        }
    }
}

/// The one input document shape shared by every command.
///
/// All fields are optional; each command demands the ones it needs.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDoc {
    pub universe: Option<UniverseForm>,
    pub blocks: Option<Vec<Vec<ElementRef>>>,
    pub pairs: Option<Vec<(ElementRef, ElementRef)>>,
    pub circuits: Option<Vec<Vec<ElementRef>>>,
    pub independents: Option<Vec<Vec<ElementRef>>>,
    pub bases: Option<Vec<Vec<ElementRef>>>,
    pub family: Option<Vec<Vec<ElementRef>>>,
    pub partition: Option<Box<InputDoc>>,
    pub capacities: Option<Vec<usize>>,
    pub weights: Option<Vec<f64>>,
    pub set: Option<Vec<ElementRef>>,
}

impl InputDoc {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// The universe declared at this level.
    pub fn universe(&self) -> Result<Universe> {
        self.universe
            .as_ref()
            .ok_or(Error::MissingField { field: "universe" })?
            .build()
    }

    pub fn resolve_subset(&self, universe: &Universe, elements: &[ElementRef]) -> Result<Subset> {
        let indices = elements
            .iter()
            .map(|e| e.resolve(universe))
            .collect::<Result<Vec<_>>>()?;
        universe.subset(indices)
    }

    fn resolve_blocks(
        &self,
        universe: &Universe,
        blocks: &[Vec<ElementRef>],
    ) -> Result<Vec<Subset>> {
        blocks
            .iter()
            .map(|b| self.resolve_subset(universe, b))
            .collect()
    }

    /// A partition, either nested under `"partition"` or given by
    /// `"universe"` + `"blocks"` at this level.
    pub fn partition(&self) -> Result<Partition> {
        if let Some(nested) = &self.partition {
            return nested.partition();
        }
        let universe = self.universe()?;
        let blocks = self
            .blocks
            .as_ref()
            .ok_or(Error::MissingField { field: "blocks" })?;
        Partition::new(&universe, self.resolve_blocks(&universe, blocks)?)
    }

    /// A covering from `"universe"` + `"blocks"`; disjointness not required.
    pub fn covering(&self) -> Result<Covering> {
        let universe = self.universe()?;
        let blocks = self
            .blocks
            .as_ref()
            .ok_or(Error::MissingField { field: "blocks" })?;
        Covering::new(&universe, self.resolve_blocks(&universe, blocks)?)
    }

    /// An equivalence relation from `"pairs"`, optionally closing it
    /// reflexively first. Without the closure, missing reflexive pairs are
    /// a validation error.
    pub fn relation(&self, reflexive_close: bool) -> Result<EquivalenceRelation> {
        let universe = self.universe()?;
        let given = self
            .pairs
            .as_ref()
            .ok_or(Error::MissingField { field: "pairs" })?;
        let mut pairs = Vec::with_capacity(given.len() + universe.size());
        for (x, y) in given {
            pairs.push((x.resolve(&universe)?, y.resolve(&universe)?));
        }
        if reflexive_close {
            pairs.extend((0..universe.size()).map(|x| (x, x)));
        }
        EquivalenceRelation::new(&universe, pairs)
    }

    /// Whether the document describes a partition (has blocks or a nested
    /// partition) rather than a generic matroid.
    pub fn has_partition(&self) -> bool {
        self.partition.is_some() || self.blocks.is_some()
    }

    /// A matroid from `"circuits"` or `"independents"`, validated.
    pub fn matroid(&self) -> Result<Matroid> {
        let universe = self.universe()?;
        if let Some(circuits) = &self.circuits {
            let family = SetFamily::explicit(&universe, self.resolve_blocks(&universe, circuits)?)?;
            return Matroid::from_circuits(&family);
        }
        if let Some(independents) = &self.independents {
            let family =
                SetFamily::explicit(&universe, self.resolve_blocks(&universe, independents)?)?;
            return Matroid::from_independents(&family);
        }
        Err(Error::MissingField {
            field: "circuits or independents",
        })
    }

    /// The set family to feed an axiom checker: `"family"` first, then the
    /// key matching the requested kind, then `"blocks"`.
    pub fn family_for(&self, kind: &str) -> Result<SetFamily> {
        let universe = self.universe()?;
        let sets = self
            .family
            .as_ref()
            .or(match kind {
                "independents" => self.independents.as_ref(),
                "circuits" => self.circuits.as_ref(),
                "bases" => self.bases.as_ref(),
                _ => None,
            })
            .or(self.blocks.as_ref())
            .ok_or(Error::MissingField { field: "family" })?;
        SetFamily::explicit(&universe, self.resolve_blocks(&universe, sets)?)
    }

    /// A partition matroid: nested or inline partition plus optional
    /// capacities, which default to one less than each block size.
    pub fn partition_matroid(&self) -> Result<PartitionMatroid> {
        let partition = self.partition()?;
        let capacities = match &self.capacities {
            Some(capacities) => capacities.clone(),
            None => partition
                .blocks()
                .iter()
                .map(|b| b.cardinality() - 1)
                .collect(),
        };
        PartitionMatroid::new(partition, capacities)
    }

    /// The query set, if the document carries one.
    pub fn set(&self, universe: &Universe) -> Result<Option<Subset>> {
        match &self.set {
            Some(elements) => Ok(Some(self.resolve_subset(universe, elements)?)),
            None => Ok(None),
        }
    }
}

/// Render one element as its label (string) or index (number).
pub fn element_value(universe: &Universe, index: usize) -> Value {
    match universe.labels() {
        Some(labels) => Value::String(labels[index].clone()),
        None => Value::Number(index.into()),
    }
}

/// Render a subset as an array of element values, ascending by index.
pub fn subset_value(subset: &Subset) -> Value {
    Value::Array(
        subset
            .iter()
            .map(|e| element_value(subset.universe(), e))
            .collect(),
    )
}

/// Render a list of subsets as an array of arrays.
pub fn sets_value(sets: &[Subset]) -> Value {
    Value::Array(sets.iter().map(subset_value).collect())
}

/// Render a partition with its universe.
pub fn partition_value(partition: &Partition) -> Value {
    json!({
        "universe": universe_value(partition.universe()),
        "blocks": sets_value(partition.blocks()),
    })
}

/// Render a universe as labels when present, count otherwise.
pub fn universe_value(universe: &Universe) -> Value {
    match universe.labels() {
        Some(labels) => Value::Array(labels.iter().map(|l| Value::String(l.clone())).collect()),
        None => Value::Number(universe.size().into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_labeled_partition() {
        let doc = InputDoc::parse(
            r#"{"universe": ["a", "b", "c"], "blocks": [["a", "b"], ["c"]], "set": ["a"]}"#,
        )
        .unwrap();
        let p = doc.partition().unwrap();
        assert_eq!(p.block_count(), 2);
        let u = p.universe().clone();
        let set = doc.set(&u).unwrap().unwrap();
        assert_eq!(set, u.singleton(0));
        assert_eq!(subset_value(&set), json!(["a"]));
    }

    #[test]
    fn parses_indexed_universe() {
        let doc = InputDoc::parse(r#"{"universe": 4, "blocks": [[0, 1], [2, 3]]}"#).unwrap();
        let p = doc.partition().unwrap();
        assert_eq!(p.block_count(), 2);
        assert_eq!(partition_value(&p)["blocks"], json!([[0, 1], [2, 3]]));
    }

    #[test]
    fn rejects_unknown_fields() {
        let err = InputDoc::parse(r#"{"universe": 3, "blobs": []}"#).unwrap_err();
        assert!(matches!(err, Error::Json(_)));
    }

    #[test]
    fn rejects_unknown_labels_and_bad_indices() {
        let doc = InputDoc::parse(r#"{"universe": ["a"], "blocks": [["b"]]}"#).unwrap();
        assert!(matches!(
            doc.partition().unwrap_err(),
            Error::UnknownLabel { label } if label == "b"
        ));
        let doc = InputDoc::parse(r#"{"universe": 2, "blocks": [[0, 7]]}"#).unwrap();
        assert!(matches!(
            doc.partition().unwrap_err(),
            Error::ElementOutOfRange { index: 7, size: 2 }
        ));
    }

    #[test]
    fn unlabeled_universe_accepts_index_strings() {
        let doc = InputDoc::parse(r#"{"universe": 3, "blocks": [["0", "1"], [2]]}"#).unwrap();
        assert_eq!(doc.partition().unwrap().block_count(), 2);
    }

    #[test]
    fn relation_respects_reflexive_close_flag() {
        let text = r#"{"universe": 2, "pairs": [[0, 1], [1, 0]]}"#;
        let doc = InputDoc::parse(text).unwrap();
        assert!(matches!(
            doc.relation(false).unwrap_err(),
            Error::NotReflexive { element: 0 }
        ));
        let relation = doc.relation(true).unwrap();
        assert_eq!(relation.pair_count(), 4);
    }

    #[test]
    fn matroid_from_circuits_or_independents() {
        let doc = InputDoc::parse(r#"{"universe": 2, "circuits": [[0, 1]]}"#).unwrap();
        assert_eq!(doc.matroid().unwrap().independents().len(), 3);
        let doc = InputDoc::parse(r#"{"universe": 2, "independents": [[], [0], [1]]}"#).unwrap();
        assert_eq!(doc.matroid().unwrap().rank_of_universe(), 1);
        let doc = InputDoc::parse(r#"{"universe": 2}"#).unwrap();
        assert!(matches!(
            doc.matroid().unwrap_err(),
            Error::MissingField { .. }
        ));
    }

    #[test]
    fn partition_matroid_defaults_capacities() {
        let doc = InputDoc::parse(
            r#"{"partition": {"universe": 4, "blocks": [[0, 1], [2, 3]]}, "weights": [1, 2, 3, 4]}"#,
        )
        .unwrap();
        let m = doc.partition_matroid().unwrap();
        assert_eq!(m.capacities(), &[1, 1]);
        assert_eq!(doc.weights.as_deref(), Some(&[1.0, 2.0, 3.0, 4.0][..]));

        let doc = InputDoc::parse(
            r#"{"partition": {"universe": 4, "blocks": [[0, 1], [2, 3]]}, "capacities": [0, 2]}"#,
        )
        .unwrap();
        assert_eq!(doc.partition_matroid().unwrap().capacities(), &[0, 2]);
    }

    #[test]
    fn family_lookup_order() {
        let doc =
            InputDoc::parse(r#"{"universe": 2, "family": [[0]], "circuits": [[0, 1]]}"#).unwrap();
        assert_eq!(doc.family_for("circuits").unwrap().len(), Some(1));
        let doc = InputDoc::parse(r#"{"universe": 2, "circuits": [[0, 1]]}"#).unwrap();
        assert_eq!(doc.family_for("circuits").unwrap().len(), Some(1));
        let doc = InputDoc::parse(r#"{"universe": 2, "blocks": [[0], [1]]}"#).unwrap();
        assert_eq!(doc.family_for("circuits").unwrap().len(), Some(2));
    }

    #[test]
    fn json_error_carries_position() {
        let err = InputDoc::parse("{\"universe\": 3,").unwrap_err();
        let message = err.to_string();
        assert!(
            message.contains("line") && message.contains("column"),
            "{message}"
        );
    }
}
