//! Constructive embedding procedures and the classifiers they rely on.
//!
//! Every procedure that claims a copy re-checks it with the independent
//! oracles before reporting `found`.

mod asym;
mod extract;
pub mod fixtures;
mod hall;
mod heavy;
mod keylemma;
mod regularize;
mod sets;
mod thresholds;
mod trees;

use serde::Serialize;

use crate::graph::VertexMap;

pub use asym::{asymmetric_embed, find_rich_blowup};
pub use extract::{auxiliary_graph, extract_induced_power, monochromatic_clique, AuxGraph, Extraction};
pub use hall::hall_disjoint_sets;
pub use heavy::{heavy_path_classify, heavy_path_count, heavy_star_classify, heavy_star_count, HeavyCount};
pub use keylemma::{check_blowup, key_lemma_embed};
pub use regularize::{regularize, RegularizeReport};
pub use sets::{bad_set, bad_set_size_floor, check_bad_set, find_rich_s_set, rich_floor, rich_s_set, BadSetReport};
pub use thresholds::{
    asymmetric_constant, blowup_size, hall_size, heavy_path_constant, rich_threshold, RegularityFactor, Thresholds,
};
pub use trees::{
    admissible_copies, greedy_tree_embed, is_admissible, leaf_order, tree_bad_sets, Subgraph, TreeEmbedding,
};

/// One step of an embedding run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    /// A choice of `φ` on `A`, listed in the order of `A`.
    Attempt {
        attempt: usize,
        phi: Vec<usize>,
    },
    /// Two vertices of `A` were mapped to adjacent host vertices.
    NotIndependent {
        u: usize,
        v: usize,
    },
    /// `φ(a)` lies in the bad set of the common neighbourhood of `φ(N_H(b))`.
    BadSetHit {
        b: usize,
        a: usize,
    },
    /// Hall's step failed; sizes of the candidate sets `Γ(N_H(b))`.
    HallFailed {
        gamma: Vec<usize>,
    },
    HallSets {
        sets: Vec<Vec<usize>>,
    },
    /// No candidate was left for `b`.
    PlacementFailed {
        b: usize,
    },
    /// Every candidate for `b` was in a later bad set; the least one was used.
    BadSetUnavoidable {
        b: usize,
    },
    /// The exhaustive pass over all choices of `φ` started.
    Exhaustive {
        choices: u64,
    },
    /// The exhaustive pass was skipped because it exceeds the limit.
    ExhaustiveSkipped {
        choices: u64,
    },
    /// Density of rich `p`-sets in the neighbourhood of `y`.
    RichDensity {
        y: usize,
        rich: u64,
        total: u64,
        dense: bool,
    },
    /// A blowup of rich sets was found inside the neighbourhood of `y`.
    Blowup {
        y: usize,
        parts: Vec<Vec<usize>>,
    },
    /// The blowup search ran out of budget.
    BlowupBudget {
        y: usize,
    },
    /// Copies chosen by the extraction step.
    Independent {
        copies: Vec<usize>,
    },
    MonochromaticClique {
        colour: (usize, usize),
        copies: Vec<usize>,
    },
    Found {
        attempt: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingOutcome {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<VertexMap>,
    pub trace: Vec<TraceEvent>,
}

impl EmbeddingOutcome {
    pub(crate) fn not_found(trace: Vec<TraceEvent>) -> Self {
        EmbeddingOutcome {
            found: false,
            map: None,
            trace,
        }
    }
}
