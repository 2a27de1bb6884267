use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A vertex labeling into `{0, 1, 2}`; equivalently the partition `(V0; V1; V2)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RomanFunction(Vec<u8>);

impl RomanFunction {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = labels.iter().find(|&&l| l > 2) {
            return Err(Error::InvalidLabel(bad));
        }
        Ok(RomanFunction(labels))
    }

    /// Every vertex labeled `label`.
    pub fn constant(n: usize, label: u8) -> Result<Self> {
        Self::new(vec![label; n])
    }

    pub(crate) fn from_trusted(labels: Vec<u8>) -> Self {
        debug_assert!(labels.iter().all(|&l| l <= 2));
        RomanFunction(labels)
    }

    pub fn labels(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, v: Vertex) -> u8 {
        self.0[v]
    }

    /// `|V1| + 2|V2|`.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&l| l as usize).sum()
    }

    /// Vertices carrying `label`, ascending.
    pub fn class(&self, label: u8) -> Vec<Vertex> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == label)
            .map(|(v, _)| v)
            .collect()
    }

    /// Whether every 0-labeled vertex has a 2-labeled neighbor in `g`.
    pub fn is_roman_dominating(&self, g: &Graph) -> Result<bool> {
        if self.len() != g.vertex_count() {
            return Err(Error::LengthMismatch {
                labels: self.len(),
                n: g.vertex_count(),
            });
        }
        Ok(g.vertices()
            .filter(|&v| self.0[v] == 0)
            .all(|v| g.neighbors(v).iter().any(|&w| self.0[w] == 2)))
    }
}

impl fmt::Debug for RomanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RomanFunction{:?}", self.0)
    }
}

/// Whether `f` is a Roman dominating function on `g`.
pub fn is_rdf(g: &Graph, f: &RomanFunction) -> Result<bool> {
    f.is_roman_dominating(g)
}

pub fn weight(f: &RomanFunction) -> usize {
    f.weight()
}
