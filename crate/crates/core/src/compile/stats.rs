// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use serde::Serialize;

use super::NarrativeBundle;
use crate::schema::{Certainty, Verb};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct CertaintyHistogram {
    pub definite: usize,
    pub conditional: usize,
    pub ambiguous: usize,
}

impl CertaintyHistogram {
    fn add(&mut self, c: Certainty) {
        match c {
            Certainty::Definite => self.definite += 1,
            Certainty::Conditional => self.conditional += 1,
            Certainty::Ambiguous => self.ambiguous += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.definite + self.conditional + self.ambiguous
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct VerbHistogram {
    pub collect: CertaintyHistogram,
    pub share: CertaintyHistogram,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowCount {
    pub actor_id: String,
    pub item_count: usize,
}

/// Authoring summary of a compiled bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BundleStats {
    pub item_count: usize,
    pub items_per_category: BTreeMap<String, usize>,
    /// In row order.
    pub items_per_row: Vec<RowCount>,
    pub rect_count: usize,
    pub certainty: CertaintyHistogram,
    pub certainty_by_verb: VerbHistogram,
    /// Distinct normalized quotes.
    pub total_quotes: usize,
    pub total_spans: usize,
    pub unresolved: usize,
}

pub fn stats(bundle: &NarrativeBundle) -> BundleStats {
    let mut items_per_category: BTreeMap<String, usize> = bundle.categories.iter().map(|c| (c.id.clone(), 0)).collect();
    for item in &bundle.items {
        *items_per_category.entry(item.category_id.clone()).or_default() += 1;
    }

    let mut certainty = CertaintyHistogram::default();
    let mut by_verb = VerbHistogram::default();
    for rect in &bundle.rects {
        certainty.add(rect.certainty);
        match rect.verb {
            Verb::Collect => by_verb.collect.add(rect.certainty),
            Verb::Share => by_verb.share.add(rect.certainty),
        }
    }

    BundleStats {
        item_count: bundle.items.len(),
        items_per_category,
        items_per_row: bundle
            .rows
            .iter()
            .map(|r| RowCount {
                actor_id: r.actor_id.clone(),
                item_count: r.item_count,
            })
            .collect(),
        rect_count: bundle.rects.len(),
        certainty,
        certainty_by_verb: by_verb,
        total_quotes: bundle.anchors.len(),
        total_spans: bundle.anchors.values().map(Vec::len).sum(),
        unresolved: bundle.anchors.values().filter(|s| s.is_empty()).count(),
    }
}
