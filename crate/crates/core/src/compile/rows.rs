// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeSet, HashMap};

use super::{label_key, ItemPractice, Row};
use crate::schema::{NarrativeConfig, Verb};

/// Summary rows: the owner first, then recipients by how many distinct items
/// they receive (descending), ties by case-insensitive label and then id.
/// Actors receiving nothing get no row.
pub fn actor_rows(merged: &[ItemPractice], config: &NarrativeConfig) -> Vec<Row> {
    let mut received: HashMap<&str, BTreeSet<&str>> = HashMap::new();
    let mut collected: BTreeSet<&str> = BTreeSet::new();
    for p in merged {
        match p.verb {
            Verb::Collect => {
                collected.insert(&p.item_id);
            }
            Verb::Share => {
                received.entry(&p.recipient_actor_id).or_default().insert(&p.item_id);
            }
        }
    }

    let mut others: Vec<(&str, usize)> = received
        .into_iter()
        .filter(|(actor, _)| *actor != config.owner_actor_id)
        .map(|(actor, items)| (actor, items.len()))
        .collect();
    others.sort_by_cached_key(|&(actor, count)| {
        let label = config.actor(actor).map(|a| a.label.as_str()).unwrap_or(actor);
        (std::cmp::Reverse(count), label_key(label, actor))
    });

    std::iter::once((config.owner_actor_id.as_str(), collected.len()))
        .chain(others)
        .enumerate()
        .map(|(rank, (actor, item_count))| Row {
            actor_id: actor.to_string(),
            rank,
            item_count,
        })
        .collect()
}
