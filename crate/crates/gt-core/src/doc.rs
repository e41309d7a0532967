//! JSON document schemas for spaces and mappings.
//!
//! Space document: `{"points": ["a","b"], "opens": [[], ["a","b"]]}`.
//! Member order is insensitive on input and canonical (ascending bit
//! pattern, labels in point order) on output.
//!
//! Mapping document: `{"domain": <space doc or file path>, "codomain": ...,
//! "map": {"a": "x", ...}}` keyed by domain point labels.

use crate::mapping::{GtMapping, MappingError};
use crate::set::{SetFamily, SubSet};
use crate::space::{GtError, GtSpace};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("unknown point label {0:?}")]
    UnknownLabel(String),
    #[error("point {0:?} has no image in the map")]
    MissingImage(String),
    #[error(transparent)]
    Space(#[from] GtError),
    #[error(transparent)]
    Mapping(#[from] MappingError),
    #[error("failed to read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

impl SpaceDoc {
    pub fn to_space(&self) -> Result<GtSpace, DocError> {
        let n = self.points.len();
        let mut members = Vec::with_capacity(self.opens.len());
        for open in &self.opens {
            let mut bits = 0u32;
            for label in open {
                let p = self
                    .points
                    .iter()
                    .position(|l| l == label)
                    .ok_or_else(|| DocError::UnknownLabel(label.clone()))?;
                bits |= 1 << p;
            }
            members.push(SubSet::new(bits, n));
        }
        Ok(GtSpace::with_labels(
            self.points.clone(),
            SetFamily::new(n, members),
        )?)
    }

    /// Canonical echo of a validated space.
    pub fn from_space(space: &GtSpace) -> Self {
        SpaceDoc {
            points: space.labels().to_vec(),
            opens: space.opens().iter().map(|s| space.labels_of(s)).collect(),
        }
    }
}

/// A space given inline or as a path to a space-document file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Inline(SpaceDoc),
    Path(String),
}

impl SpaceRef {
    pub fn resolve(&self, base: Option<&Path>) -> Result<GtSpace, DocError> {
        match self {
            SpaceRef::Inline(doc) => doc.to_space(),
            SpaceRef::Path(p) => {
                let path = match base {
                    Some(b) => b.join(p),
                    None => Path::new(p).to_path_buf(),
                };
                let text = std::fs::read_to_string(&path).map_err(|source| DocError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                let doc: SpaceDoc = serde_json::from_str(&text)?;
                doc.to_space()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MappingDoc {
    pub domain: SpaceRef,
    pub codomain: SpaceRef,
    pub map: BTreeMap<String, String>,
}

impl MappingDoc {
    pub fn to_mapping(&self, base: Option<&Path>) -> Result<GtMapping, DocError> {
        let dom = self.domain.resolve(base)?;
        let cod = self.codomain.resolve(base)?;
        let mut table = Vec::with_capacity(dom.len());
        for label in dom.labels() {
            let target = self
                .map
                .get(label)
                .ok_or_else(|| DocError::MissingImage(label.clone()))?;
            let y = cod
                .point_by_label(target)
                .ok_or_else(|| DocError::UnknownLabel(target.clone()))?;
            table.push(y);
        }
        Ok(GtMapping::new(dom, cod, table)?)
    }

    pub fn from_mapping(f: &GtMapping) -> Self {
        MappingDoc {
            domain: SpaceRef::Inline(SpaceDoc::from_space(f.dom())),
            codomain: SpaceRef::Inline(SpaceDoc::from_space(f.cod())),
            map: f
                .dom()
                .labels()
                .iter()
                .enumerate()
                .map(|(x, l)| (l.clone(), f.cod().label(f.apply(x)).to_string()))
                .collect(),
        }
    }
}
