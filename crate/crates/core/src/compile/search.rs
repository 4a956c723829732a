// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use serde::Serialize;

use super::NarrativeBundle;
use crate::policy::normalize;

/// Which items the summary view highlights and which it dims for a query.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SearchPlan {
    pub highlight: BTreeSet<String>,
    pub dim: BTreeSet<String>,
}

/// Case-insensitive substring match of the normalized keyword against each
/// item's label and its category's label. An empty keyword highlights
/// everything.
pub fn search_plan(bundle: &NarrativeBundle, keyword: &str) -> SearchPlan {
    let needle = normalize(keyword).to_lowercase();
    let mut plan = SearchPlan::default();
    for item in &bundle.items {
        let category_label = bundle
            .categories
            .iter()
            .find(|c| c.id == item.category_id)
            .map(|c| c.label.as_str())
            .unwrap_or_default();
        let hit = needle.is_empty()
            || normalize(&item.label).to_lowercase().contains(&needle)
            || normalize(category_label).to_lowercase().contains(&needle);
        if hit {
            plan.highlight.insert(item.id.clone());
        } else {
            plan.dim.insert(item.id.clone());
        }
    }
    plan
}
