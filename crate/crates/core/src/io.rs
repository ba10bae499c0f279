//! JSON documents: labelled topologies, covering tables and frames.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{CoveringRelation, Element, FiniteBooleanAlgebra};
use crate::error::{Error, Result};
use crate::frames::{EquivalenceFrame1, EquivalenceFrame2};
use crate::pointset::PointSet;
use crate::topology::FiniteTopology;

/// Point labels may be written as strings or numbers.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum Label {
    Text(String),
    Number(i64),
}

impl Label {
    fn text(&self) -> String {
        match self {
            Label::Text(s) => s.clone(),
            Label::Number(n) => n.to_string(),
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct TopologyDoc {
    pub universe: Vec<Label>,
    pub subbasis: Vec<Vec<Label>>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct EcaDoc {
    pub atoms: usize,
    #[serde(default)]
    pub covering: Option<Vec<[Element; 3]>>,
    #[serde(default)]
    pub covering_mode: Option<String>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FrameDoc {
    pub worlds: usize,
    pub classes: Vec<usize>,
    #[serde(default)]
    pub classes2: Option<Vec<usize>>,
}

/// A topology together with the user's names for its points.
#[derive(Debug, Clone)]
pub struct LabeledTopology {
    pub labels: Vec<String>,
    pub topology: FiniteTopology,
}

impl LabeledTopology {
    pub fn from_doc(doc: &TopologyDoc) -> Result<Self> {
        let labels: Vec<String> = doc.universe.iter().map(Label::text).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidInput(format!(
                    "label {l:?} appears twice in the universe"
                )));
            }
        }
        let n = labels.len();
        let subbasis = doc
            .subbasis
            .iter()
            .map(|member| {
                let points = member
                    .iter()
                    .map(|l| {
                        let l = l.text();
                        labels
                            .iter()
                            .position(|x| *x == l)
                            .ok_or(Error::UnknownLabel(l))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                PointSet::from_points(n, points)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LabeledTopology {
            topology: FiniteTopology::generate(n, &subbasis)?,
            labels,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::from_doc(&serde_json::from_str(text)?)
    }

    /// Labels `0..n` as `"0"`, `"1"`, ...
    pub fn unlabeled(topology: FiniteTopology) -> Self {
        LabeledTopology {
            labels: (0..topology.universe_size())
                .map(|i| i.to_string())
                .collect(),
            topology,
        }
    }

    /// Member labels in universe order.
    pub fn names(&self, set: &PointSet) -> Vec<String> {
        set.points().map(|p| self.labels[p].clone()).collect()
    }

    /// `{a,b,c}` with user labels.
    pub fn show(&self, set: &PointSet) -> String {
        format!("{{{}}}", self.names(set).join(","))
    }

    pub fn set(&self, labels: &[&str]) -> Result<PointSet> {
        let points = labels
            .iter()
            .map(|l| {
                self.labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| Error::UnknownLabel(l.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        PointSet::from_points(self.labels.len(), points)
    }
}

impl EcaDoc {
    pub fn covering(&self) -> Result<CoveringRelation> {
        let algebra = FiniteBooleanAlgebra::new(self.atoms)?;
        match (self.covering_mode.as_deref(), &self.covering) {
            (Some("discrete"), None) => Ok(CoveringRelation::discrete(algebra)),
            (Some(mode), None) => Err(Error::InvalidInput(format!(
                "unknown covering_mode {mode:?}"
            ))),
            (None, Some(triples)) => CoveringRelation::from_triples(algebra, triples),
            (Some(_), Some(_)) => Err(Error::InvalidInput(
                "give either covering or covering_mode, not both".into(),
            )),
            (None, None) => Err(Error::InvalidInput("missing covering".into())),
        }
    }

    pub fn from_covering(v: &CoveringRelation) -> Self {
        EcaDoc {
            atoms: v.algebra().atom_count(),
            covering: Some(v.true_triples().collect()),
            covering_mode: None,
        }
    }
}

#[derive(Debug)]
pub enum Frame {
    Type1(EquivalenceFrame1),
    Type2(EquivalenceFrame2),
}

impl FrameDoc {
    pub fn frame(&self) -> Result<Frame> {
        let check = |ids: &[usize], key: &str| {
            if ids.len() == self.worlds {
                Ok(())
            } else {
                Err(Error::InvalidInput(format!(
                    "{key} has {} entries for {} worlds",
                    ids.len(),
                    self.worlds
                )))
            }
        };
        check(&self.classes, "classes")?;
        match &self.classes2 {
            None => Ok(Frame::Type1(EquivalenceFrame1::from_ids(&self.classes)?)),
            Some(ids2) => {
                check(ids2, "classes2")?;
                Ok(Frame::Type2(EquivalenceFrame2::from_ids(
                    &self.classes,
                    ids2,
                )?))
            }
        }
    }
}

/// Any of the three input documents, told apart by their keys.
#[derive(Debug)]
pub enum Document {
    Topology(LabeledTopology),
    Eca(EcaDoc),
    Frame(FrameDoc),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let has = |key: &str| value.get(key).is_some();
        if has("universe") {
            Ok(Document::Topology(LabeledTopology::from_doc(
                &serde_json::from_value(value)?,
            )?))
        } else if has("atoms") {
            Ok(Document::Eca(serde_json::from_value(value)?))
        } else if has("worlds") {
            Ok(Document::Frame(serde_json::from_value(value)?))
        } else {
            Err(Error::InvalidInput(
                "expected a topology (universe), algebra (atoms) or frame (worlds) document".into(),
            ))
        }
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = if path.as_os_str() == "-" {
            std::io::read_to_string(std::io::stdin())?
        } else {
            std::fs::read_to_string(path)?
        };
        Self::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topology_with_numeric_and_text_labels() {
        let t = LabeledTopology::parse(r#"{"universe": [1, "b", 3], "subbasis": [[1, "b"], [3]]}"#)
            .unwrap();
        assert_eq!(t.labels, vec!["1", "b", "3"]);
        assert_eq!(t.topology.opens().len(), 4);
        assert_eq!(t.show(&t.set(&["3", "1"]).unwrap()), "{1,3}");
    }

    #[test]
    fn unknown_label_is_reported() {
        let err =
            LabeledTopology::parse(r#"{"universe": ["a"], "subbasis": [["z"]]}"#).unwrap_err();
        assert!(matches!(err, Error::UnknownLabel(l) if l == "z"));
    }

    #[test]
    fn malformed_json_has_a_location() {
        let err = Document::parse("{\n  \"atoms\": 2,\n  oops }").unwrap_err();
        assert!(matches!(err, Error::Json { line: 3, .. }), "{err}");
    }

    #[test]
    fn eca_documents() {
        let disc: EcaDoc =
            serde_json::from_str(r#"{"atoms": 2, "covering_mode": "discrete"}"#).unwrap();
        let v = disc.covering().unwrap();
        let round: EcaDoc =
            serde_json::from_str(&serde_json::to_string(&EcaDoc::from_covering(&v)).unwrap())
                .unwrap();
        assert_eq!(round.covering().unwrap(), v);
        let bad: EcaDoc = serde_json::from_str(r#"{"atoms": 1, "covering": [[0, 0, 2]]}"#).unwrap();
        assert!(bad.covering().is_err());
        let zero: EcaDoc = serde_json::from_str(r#"{"atoms": 0, "covering": []}"#).unwrap();
        assert!(matches!(zero.covering(), Err(Error::DegenerateAlgebra)));
    }

    #[test]
    fn frame_documents() {
        let Document::Frame(doc) =
            Document::parse(r#"{"worlds": 3, "classes": [0, 0, 1], "classes2": [0, 1, 1]}"#)
                .unwrap()
        else {
            panic!("not a frame")
        };
        assert!(matches!(doc.frame().unwrap(), Frame::Type2(_)));
        let short = FrameDoc {
            worlds: 3,
            classes: vec![0],
            classes2: None,
        };
        assert!(short.frame().is_err());
    }
}
