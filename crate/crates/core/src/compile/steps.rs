// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{actor_rows, label_key, BuildError, ClusterGroup, Flow, FlowItem, ItemPractice, Step, StepBody};
use crate::policy::{resolve_quote, PolicyDocument};
use crate::schema::{NarrativeConfig, PracticeGraph, Verb};

pub const SHARE_CAPTION: &str = "Some data is shared or conditionally shared with others";

pub fn enumerate_caption(platform: &str, n: usize) -> String {
    format!("In total, {platform} collects {n} pieces of data")
}

/// The fixed narrative sequence:
/// `intro facet* enumerate cluster ingest share_caption share_flows summary`.
///
/// Only facet steps carry a text anchor; the rest leave the policy pane where
/// it is.
pub fn build_steps(
    config: &NarrativeConfig,
    graph: &PracticeGraph,
    merged: &[ItemPractice],
    doc: &PolicyDocument,
) -> Result<Vec<Step>, BuildError> {
    let item_key = |id: &str| {
        let label = graph.item(id).map(|i| i.label.as_str()).unwrap_or(id);
        label_key(label, id)
    };

    let collected: BTreeSet<&str> = merged
        .iter()
        .filter(|p| p.verb == Verb::Collect)
        .map(|p| p.item_id.as_str())
        .collect();
    if collected.is_empty() {
        return Err(BuildError::NoCollectedItems);
    }
    let mut collected: Vec<&str> = collected.into_iter().collect();
    collected.sort_by_cached_key(|id| item_key(id));
    let n = collected.len();

    let mut bodies: Vec<(StepBody, Option<_>)> = vec![(
        StepBody::Intro {
            platform_name: config.platform_name.clone(),
            owner_actor_id: config.owner_actor_id.clone(),
        },
        None,
    )];

    for facet in &config.facets {
        let anchor = resolve_quote(doc, &facet.anchor_quote)
            .ok()
            .and_then(|spans| spans.into_iter().next())
            .ok_or_else(|| BuildError::Internal(format!("facet anchor unresolved: {}", facet.anchor_quote)))?;
        bodies.push((StepBody::Facet(facet.clone()), Some(anchor)));
    }

    bodies.push((
        StepBody::Enumerate {
            n,
            item_ids: collected.iter().map(|s| s.to_string()).collect(),
            caption: enumerate_caption(&config.platform_name, n),
        },
        None,
    ));

    let mut clusters: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for id in &collected {
        let category = graph.item(id).map(|i| i.category_id.as_str()).unwrap_or_default();
        clusters.entry(category).or_default().push(id);
    }
    bodies.push((
        StepBody::Cluster {
            groups: clusters
                .into_iter()
                .map(|(category_id, ids)| ClusterGroup {
                    category_id: category_id.to_string(),
                    item_ids: ids.into_iter().map(str::to_string).collect(),
                })
                .collect(),
        },
        None,
    ));

    bodies.push((
        StepBody::Ingest {
            owner_actor_id: config.owner_actor_id.clone(),
            n,
        },
        None,
    ));
    bodies.push((
        StepBody::ShareCaption {
            caption: SHARE_CAPTION.to_string(),
        },
        None,
    ));

    let rows = actor_rows(merged, config);
    let mut shared: HashMap<&str, Vec<&ItemPractice>> = HashMap::new();
    for p in merged.iter().filter(|p| p.verb == Verb::Share) {
        shared.entry(&p.recipient_actor_id).or_default().push(p);
    }
    let flows = rows
        .iter()
        .skip(1)
        .map(|row| {
            let mut practices = shared.remove(row.actor_id.as_str()).unwrap_or_default();
            practices.sort_by_cached_key(|p| item_key(&p.item_id));
            Flow {
                actor_id: row.actor_id.clone(),
                items: practices
                    .into_iter()
                    .map(|p| FlowItem {
                        item_id: p.item_id.clone(),
                        certainty: p.certainty,
                    })
                    .collect(),
            }
        })
        .collect();
    bodies.push((StepBody::ShareFlows { flows }, None));

    bodies.push((
        StepBody::Summary {
            row_count: rows.len(),
            rect_count: merged.len(),
        },
        None,
    ));

    Ok(bodies
        .into_iter()
        .enumerate()
        .map(|(index, (body, text_anchor))| Step {
            index,
            body,
            text_anchor,
        })
        .collect())
}
