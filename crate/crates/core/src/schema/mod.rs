// SPDX-License-Identifier: Apache-2.0

//! The two structured inputs (narrative config and practice graph), their
//! parsers, cross-validation against the policy text, and the certainty lint.

mod config;
mod diagnostic;
mod graph;
mod lint;
mod reader;
mod validate;

use serde::{Deserialize, Serialize};

pub use config::{parse_config, COLOR_TOKENS};
pub use diagnostic::{compare_paths, sort_diagnostics, Code, Diagnostic, Severity, ValidationReport};
pub use graph::parse_graph;
pub use lint::{contains_word, lint_certainty, HEDGE_WORDS};
pub use validate::{validate, validate_with};

/// A successfully parsed input plus any non-fatal findings.
#[derive(Debug, Clone, PartialEq)]
pub struct Parsed<T> {
    pub value: T,
    pub warnings: Vec<Diagnostic>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FacetKind {
    Provided,
    Automatic,
    External,
    Inferred,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceFacet {
    pub kind: FacetKind,
    pub label: String,
    pub icon_token: String,
    pub anchor_quote: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Category {
    pub id: String,
    pub label: String,
    pub color_token: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActorKind {
    Owner,
    ThirdPartyClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Actor {
    pub id: String,
    pub label: String,
    pub kind: ActorKind,
    pub icon_token: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NarrativeConfig {
    pub platform_name: String,
    pub owner_actor_id: String,
    /// In display order.
    pub facets: Vec<SourceFacet>,
    pub categories: Vec<Category>,
    pub actors: Vec<Actor>,
}

impl NarrativeConfig {
    pub fn category(&self, id: &str) -> Option<&Category> {
        self.categories.iter().find(|c| c.id == id)
    }

    pub fn actor(&self, id: &str) -> Option<&Actor> {
        self.actors.iter().find(|a| a.id == id)
    }

    /// Canonical JSON text of the config, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("config serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DataItem {
    pub id: String,
    pub label: String,
    pub category_id: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verb {
    Collect,
    Share,
}

/// What an edge talks about: one item, or every item of a category.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DataRef {
    Item(String),
    Category(String),
}

/// How firmly the policy words a practice. Ordered from weakest to
/// strongest, so `max` picks the dominant level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Certainty {
    Ambiguous,
    Conditional,
    Definite,
}

impl Certainty {
    pub const ALL: [Certainty; 3] = [Certainty::Definite, Certainty::Conditional, Certainty::Ambiguous];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Practice {
    pub verb: Verb,
    pub recipient_actor_id: String,
    pub data_ref: DataRef,
    pub certainty: Certainty,
    pub quotes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PracticeGraph {
    pub items: Vec<DataItem>,
    /// In file order.
    pub edges: Vec<Practice>,
}

impl PracticeGraph {
    pub fn item(&self, id: &str) -> Option<&DataItem> {
        self.items.iter().find(|i| i.id == id)
    }

    /// Item ids of a category, sorted by id.
    pub fn members(&self, category_id: &str) -> Vec<&str> {
        let mut ids: Vec<&str> = self
            .items
            .iter()
            .filter(|i| i.category_id == category_id)
            .map(|i| i.id.as_str())
            .collect();
        ids.sort_unstable();
        ids
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graph serializes");
        s.push('\n');
        s
    }
}
