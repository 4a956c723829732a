// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use super::ItemPractice;
use crate::policy::{normalize, resolve_quote, PolicyDocument};

/// Collapse practices sharing `(recipient, item, verb)`.
///
/// The merged certainty is the strongest contributor's. Quotes are
/// normalized, de-duplicated and ordered by where they first occur in the
/// document. Output order is the order in which each key first appears.
pub fn merge_practices(practices: &[ItemPractice], doc: &PolicyDocument) -> Vec<ItemPractice> {
    let mut slots: HashMap<(&str, &str, crate::schema::Verb), usize> = HashMap::new();
    let mut merged: Vec<ItemPractice> = Vec::new();

    for p in practices {
        let key = (p.recipient_actor_id.as_str(), p.item_id.as_str(), p.verb);
        match slots.get(&key) {
            Some(&slot) => {
                let m = &mut merged[slot];
                m.certainty = m.certainty.max(p.certainty);
                m.expanded &= p.expanded;
                m.quotes.extend(p.quotes.iter().cloned());
            }
            None => {
                slots.insert(key, merged.len());
                merged.push(p.clone());
            }
        }
    }

    let mut first_seen: HashMap<String, Option<(usize, usize)>> = HashMap::new();
    for m in &mut merged {
        let mut quotes: Vec<String> = Vec::with_capacity(m.quotes.len());
        for q in m.quotes.iter().map(|q| normalize(q)) {
            if !quotes.contains(&q) {
                quotes.push(q);
            }
        }
        // Unresolvable quotes sort last.
        quotes.sort_by_cached_key(|q| {
            let pos = *first_seen.entry(q.clone()).or_insert_with(|| {
                resolve_quote(doc, q)
                    .ok()
                    .and_then(|spans| spans.first().map(|s| (s.start, s.end)))
            });
            (pos.is_none(), pos, q.clone())
        });
        m.quotes = quotes;
    }
    merged
}
