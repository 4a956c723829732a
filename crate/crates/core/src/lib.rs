// SPDX-License-Identifier: Apache-2.0

//! Compiles an annotated privacy policy into a scrollytelling narrative
//! bundle in which every visual element points back to verbatim policy text.
//!
//! Three inputs go in: the policy text ([`policy`]), a narrative config and a
//! practice graph ([`schema`]). [`compile::build_bundle`] validates them
//! against each other and emits a canonical [`compile::NarrativeBundle`].

pub mod compile;
pub mod exec;
pub mod policy;
pub mod schema;

pub use compile::{build_bundle, parse_bundle, serialize_bundle, BuildError, NarrativeBundle};
pub use exec::Execution;
pub use policy::{normalize, parse_policy, resolve_quote, word_count, AnchorSpan, PolicyDocument};
pub use schema::{lint_certainty, parse_config, parse_graph, validate, Diagnostic, ValidationReport};

#[cfg(test)]
mod testing;
