// SPDX-License-Identifier: Apache-2.0

use std::collections::HashSet;

use super::{ActorKind, Code, DataRef, Diagnostic, NarrativeConfig, PracticeGraph, ValidationReport, Verb};
use crate::exec::Execution;
use crate::policy::{resolve_quote, PolicyDocument};

/// Cross-check config, graph and policy text.
pub fn validate(config: &NarrativeConfig, graph: &PracticeGraph, doc: &PolicyDocument) -> ValidationReport {
    validate_with(config, graph, doc, Execution::default())
}

pub fn validate_with(
    config: &NarrativeConfig,
    graph: &PracticeGraph,
    doc: &PolicyDocument,
    exec: Execution,
) -> ValidationReport {
    let mut diags = Vec::new();
    references(config, graph, &mut diags);
    diags.extend(anchors(config, graph, doc, exec));
    ValidationReport::new(diags)
}

fn references(config: &NarrativeConfig, graph: &PracticeGraph, diags: &mut Vec<Diagnostic>) {
    let category_ids: HashSet<&str> = config.categories.iter().map(|c| c.id.as_str()).collect();
    let item_ids: HashSet<&str> = graph.items.iter().map(|i| i.id.as_str()).collect();

    for (i, item) in graph.items.iter().enumerate() {
        if !category_ids.contains(item.category_id.as_str()) {
            diags.push(Diagnostic::new(
                Code::E020,
                format!("graph/items/{i}/category_id"),
                format!("item `{}` names unknown category `{}`", item.id, item.category_id),
            ));
        }
    }

    let mut referenced_items: HashSet<&str> = HashSet::new();
    for (k, edge) in graph.edges.iter().enumerate() {
        let path = format!("graph/edges/{k}");
        match config.actor(&edge.recipient_actor_id) {
            None => diags.push(Diagnostic::new(
                Code::E021,
                format!("{path}/recipient_actor_id"),
                format!("unknown actor `{}`", edge.recipient_actor_id),
            )),
            Some(actor) => match (edge.verb, actor.kind) {
                (Verb::Collect, ActorKind::ThirdPartyClass) => diags.push(Diagnostic::new(
                    Code::E022,
                    format!("{path}/recipient_actor_id"),
                    format!(
                        "collect edge must target the owner `{}`, not `{}`",
                        config.owner_actor_id, actor.id
                    ),
                )),
                (Verb::Share, ActorKind::Owner) => diags.push(Diagnostic::new(
                    Code::E026,
                    format!("{path}/recipient_actor_id"),
                    "share edge cannot target the owner; use collect",
                )),
                _ => {}
            },
        }

        match &edge.data_ref {
            DataRef::Item(id) => {
                if item_ids.contains(id.as_str()) {
                    referenced_items.insert(id);
                } else {
                    diags.push(Diagnostic::new(
                        Code::E021,
                        format!("{path}/data_ref"),
                        format!("unknown item `{id}`"),
                    ));
                }
            }
            DataRef::Category(id) => {
                if !category_ids.contains(id.as_str()) {
                    diags.push(Diagnostic::new(
                        Code::E021,
                        format!("{path}/data_ref"),
                        format!("unknown category `{id}`"),
                    ));
                    continue;
                }
                let members = graph.members(id);
                if members.is_empty() {
                    diags.push(Diagnostic::new(
                        Code::E050,
                        format!("{path}/data_ref"),
                        format!("category `{id}` has no member items to expand to"),
                    ));
                }
                referenced_items.extend(members);
            }
        }
    }

    if !graph.edges.iter().any(|e| e.verb == Verb::Collect) {
        diags.push(Diagnostic::new(Code::E025, "graph/edges", "graph has no collect edges"));
    }

    for (i, item) in graph.items.iter().enumerate() {
        if !referenced_items.contains(item.id.as_str()) {
            diags.push(Diagnostic::new(
                Code::W030,
                format!("graph/items/{i}"),
                format!("item `{}` is not referenced by any edge", item.id),
            ));
        }
    }
}

struct QuoteJob<'a> {
    path: String,
    quote: &'a str,
    code: Code,
}

/// Every facet anchor and edge quote must occur in the policy text.
fn anchors(config: &NarrativeConfig, graph: &PracticeGraph, doc: &PolicyDocument, exec: Execution) -> Vec<Diagnostic> {
    let facet_jobs = config.facets.iter().enumerate().map(|(i, f)| QuoteJob {
        path: format!("config/facets/{i}/anchor_quote"),
        quote: &f.anchor_quote,
        code: Code::E024,
    });
    let edge_jobs = graph.edges.iter().enumerate().flat_map(|(k, e)| {
        e.quotes.iter().enumerate().map(move |(q, quote)| QuoteJob {
            path: format!("graph/edges/{k}/quotes/{q}"),
            quote,
            code: Code::E023,
        })
    });
    let jobs: Vec<QuoteJob> = facet_jobs.chain(edge_jobs).collect();

    exec.map(&jobs, |job| {
        let found = resolve_quote(doc, job.quote).map(|s| !s.is_empty()).unwrap_or(false);
        (!found).then(|| {
            Diagnostic::new(
                job.code,
                job.path.clone(),
                format!("quote not found in policy: \"{}\"", job.quote),
            )
        })
    })
    .into_iter()
    .flatten()
    .collect()
}
