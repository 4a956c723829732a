// SPDX-License-Identifier: Apache-2.0

//! From validated inputs to a canonical [`NarrativeBundle`].
//!
//! The pipeline is `expand -> merge -> rows -> steps -> rects -> anchors`,
//! followed by canonical serialization and fingerprinting. Every stage is a
//! pure function and every ordering is total, so identical inputs always
//! produce identical bytes.

mod bundle;
mod expand;
mod merge;
mod rows;
mod search;
mod stats;
mod steps;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::policy::AnchorSpan;
use crate::schema::{Actor, Category, Certainty, Code, DataItem, Diagnostic, SourceFacet, ValidationReport, Verb};

pub use bundle::{
    build_bundle, build_bundle_with, fingerprint_of, parse_bundle, serialize_bundle, BundleParseError, BUNDLE_VERSION,
    HASH_ALGORITHM,
};
pub use expand::expand_category_edges;
pub use merge::merge_practices;
pub use rows::actor_rows;
pub use search::{search_plan, SearchPlan};
pub use stats::{stats, BundleStats, CertaintyHistogram, RowCount, VerbHistogram};
pub use steps::{build_steps, enumerate_caption, SHARE_CAPTION};

/// A practice about a single data item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemPractice {
    pub verb: Verb,
    pub recipient_actor_id: String,
    pub item_id: String,
    pub certainty: Certainty,
    pub quotes: Vec<String>,
    /// Produced by expanding a category-level edge.
    pub expanded: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub actor_id: String,
    pub rank: usize,
    /// Distinct items this actor receives.
    pub item_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Solid,
    Striped,
    Hatched,
}

impl From<Certainty> for Style {
    fn from(c: Certainty) -> Self {
        match c {
            Certainty::Definite => Style::Solid,
            Certainty::Conditional => Style::Striped,
            Certainty::Ambiguous => Style::Hatched,
        }
    }
}

/// One cell of the summary matrix: an item as received by an actor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rect {
    pub actor_id: String,
    pub item_id: String,
    pub verb: Verb,
    pub certainty: Certainty,
    pub style: Style,
    /// In document order.
    pub quote_anchors: Vec<AnchorSpan>,
    pub expanded: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterGroup {
    pub category_id: String,
    pub item_ids: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowItem {
    pub item_id: String,
    pub certainty: Certainty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flow {
    pub actor_id: String,
    pub items: Vec<FlowItem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Intro,
    Facet,
    Enumerate,
    Cluster,
    Ingest,
    ShareCaption,
    ShareFlows,
    Summary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum StepBody {
    Intro {
        platform_name: String,
        owner_actor_id: String,
    },
    Facet(SourceFacet),
    Enumerate {
        n: usize,
        item_ids: Vec<String>,
        caption: String,
    },
    Cluster {
        groups: Vec<ClusterGroup>,
    },
    Ingest {
        owner_actor_id: String,
        n: usize,
    },
    ShareCaption {
        caption: String,
    },
    ShareFlows {
        flows: Vec<Flow>,
    },
    Summary {
        row_count: usize,
        rect_count: usize,
    },
}

impl StepBody {
    pub fn kind(&self) -> StepKind {
        match self {
            StepBody::Intro { .. } => StepKind::Intro,
            StepBody::Facet(_) => StepKind::Facet,
            StepBody::Enumerate { .. } => StepKind::Enumerate,
            StepBody::Cluster { .. } => StepKind::Cluster,
            StepBody::Ingest { .. } => StepKind::Ingest,
            StepBody::ShareCaption { .. } => StepKind::ShareCaption,
            StepBody::ShareFlows { .. } => StepKind::ShareFlows,
            StepBody::Summary { .. } => StepKind::Summary,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub index: usize,
    #[serde(flatten)]
    pub body: StepBody,
    /// Present iff the step maps to a clause of the policy.
    pub text_anchor: Option<AnchorSpan>,
}

impl Step {
    pub fn kind(&self) -> StepKind {
        self.body.kind()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub algorithm: String,
    /// Lowercase hex.
    pub digest: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleMeta {
    pub platform_name: String,
    pub owner_actor_id: String,
    pub item_count_n: usize,
    pub build_fingerprint: Fingerprint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NarrativeBundle {
    pub bundle_version: u32,
    pub meta: BundleMeta,
    pub steps: Vec<Step>,
    pub rows: Vec<Row>,
    pub rects: Vec<Rect>,
    /// Normalized quote to every span where it occurs.
    pub anchors: BTreeMap<String, Vec<AnchorSpan>>,
    pub categories: Vec<Category>,
    pub actors: Vec<Actor>,
    pub items: Vec<DataItem>,
}

impl NarrativeBundle {
    pub fn step_kinds(&self) -> Vec<StepKind> {
        self.steps.iter().map(Step::kind).collect()
    }

    pub fn item(&self, id: &str) -> Option<&DataItem> {
        self.items.iter().find(|i| i.id == id)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error("inputs failed validation with {} error(s)", .0.error_count())]
    Invalid(ValidationReport),
    #[error("edge {edge} references category `{category}`, which has no member items")]
    EmptyCategory { edge: usize, category: String },
    #[error("nothing is collected; the narrative would be empty")]
    NoCollectedItems,
    #[error("internal error: {0}")]
    Internal(String),
}

impl BuildError {
    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        match self {
            BuildError::Invalid(report) => report.diagnostics.clone(),
            BuildError::EmptyCategory { edge, .. } => {
                vec![Diagnostic::new(
                    Code::E050,
                    format!("graph/edges/{edge}/data_ref"),
                    self.to_string(),
                )]
            }
            BuildError::NoCollectedItems => vec![Diagnostic::new(Code::E051, "graph/edges", self.to_string())],
            BuildError::Internal(_) => vec![Diagnostic::new(Code::E099, "bundle", self.to_string())],
        }
    }
}

/// Sort key placing items by case-insensitive label, then id.
pub(crate) fn label_key(label: &str, id: &str) -> (String, String) {
    (label.to_lowercase(), id.to_string())
}
