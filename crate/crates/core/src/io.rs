//! The graph JSON document and DOT export.
//!
//! ```json
//! {"n": 4, "edges": [[0, 1], [1, 2]], "roots": [0], "partition": {"X": [0, 2], "Y": [1, 3]}}
//! ```
//! `roots` and `partition` are optional; unknown keys are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{BipartiteTemplate, RootedGraph};
use crate::graph::{Bipartition, Graph, Host};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Bipartition>,
}

impl Document {
    /// Edges are stored sorted with `u < v`.
    pub fn new(g: &Graph, roots: Option<Vec<usize>>, partition: Option<Bipartition>) -> Self {
        Document {
            n: g.n(),
            edges: g.edges(),
            roots,
            partition,
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        let g = Graph::from_edges(self.n, &self.edges)?;
        if let Some(p) = &self.partition {
            Bipartition::new(self.n, p.left.clone(), p.right.clone())?;
        }
        Ok(g)
    }

    /// Requires `roots`.
    pub fn rooted(&self) -> Result<RootedGraph> {
        let roots = self
            .roots
            .clone()
            .ok_or_else(|| Error::Document("document has no \"roots\"".into()))?;
        RootedGraph::new(self.graph()?, roots)
    }

    /// Uses the stored partition, or the canonical 2-colouring.
    pub fn template(&self) -> Result<BipartiteTemplate> {
        let g = self.graph()?;
        match &self.partition {
            Some(p) => BipartiteTemplate::new(g, p.clone()),
            None => BipartiteTemplate::from_bipartite(g),
        }
    }

    pub fn host(&self, s: usize) -> Result<Host> {
        Host::new(self.graph()?, self.partition.clone(), s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents always serialise");
        out.push('\n');
        out
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Document(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).map_err(|e| Error::Document(format!("{}: {e}", path.display())))
    }

    pub fn to_dot(&self) -> Result<String> {
        let g = self.graph()?;
        Ok(g.to_dot(self.roots.as_deref().unwrap_or(&[]), self.partition.as_ref()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::path(4);
        let doc = Document::new(&g, Some(vec![0, 3]), g.bipartition());
        let back = Document::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.graph().unwrap(), g);
        assert_eq!(back.rooted().unwrap().roots(), &[0, 3]);
    }

    #[test]
    fn optional_fields_and_unknown_keys() {
        let doc = Document::from_json(r#"{"n": 3, "edges": [[0, 1]]}"#).unwrap();
        assert_eq!(doc.roots, None);
        assert!(doc.to_json().find("roots").is_none());
        assert!(matches!(doc.rooted(), Err(Error::Document(_))));
        assert!(Document::from_json(r#"{"n": 3, "edges": [], "colour": 1}"#).is_err());
        let part = Document::from_json(r#"{"n": 2, "edges": [[0, 1]], "partition": {"X": [0], "Y": [1]}}"#).unwrap();
        assert_eq!(part.template().unwrap().a(), &[0]);
    }

    #[test]
    fn bad_graphs_rejected() {
        let doc = Document::from_json(r#"{"n": 2, "edges": [[0, 2]]}"#).unwrap();
        assert!(doc.graph().is_err());
        let doc = Document::from_json(r#"{"n": 2, "edges": [], "partition": {"X": [0], "Y": []}}"#).unwrap();
        assert!(doc.graph().is_err());
    }
}
