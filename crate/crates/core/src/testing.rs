// SPDX-License-Identifier: Apache-2.0

//! Small fixture shared by unit tests.

use crate::policy::{parse_policy, PolicyDocument};
use crate::schema::{parse_config, parse_graph, NarrativeConfig, PracticeGraph};

pub(crate) const MINI_POLICY: &str = include_str!("../fixtures/mini/acme.policy.txt");
pub(crate) const MINI_CONFIG: &str = include_str!("../fixtures/mini/acme.config.json");
pub(crate) const MINI_GRAPH: &str = include_str!("../fixtures/mini/acme.graph.json");

pub(crate) fn mini_policy() -> PolicyDocument {
    parse_policy(MINI_POLICY.as_bytes(), "Acme").expect("mini policy parses")
}

pub(crate) fn mini_config() -> NarrativeConfig {
    parse_config(MINI_CONFIG.as_bytes()).expect("mini config parses").value
}

pub(crate) fn mini_graph() -> PracticeGraph {
    parse_graph(MINI_GRAPH.as_bytes()).expect("mini graph parses").value
}
