// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeMap, BTreeSet, HashMap};

use sha2::{Digest, Sha256};

use super::{
    build_steps, expand_category_edges, label_key, merge_practices, BuildError, BundleMeta, Fingerprint,
    NarrativeBundle, Rect, Style,
};
use crate::exec::Execution;
use crate::policy::{normalize, resolve_quote, AnchorSpan, PolicyDocument};
use crate::schema::{validate_with, NarrativeConfig, PracticeGraph, Verb};

pub const BUNDLE_VERSION: u32 = 1;
pub const HASH_ALGORITHM: &str = "sha256";

#[derive(Debug, thiserror::Error)]
pub enum BundleParseError {
    #[error("bundle is not valid JSON for this schema: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported bundle_version {0}, expected {BUNDLE_VERSION}")]
    Version(u32),
}

pub fn build_bundle(
    config: &NarrativeConfig,
    graph: &PracticeGraph,
    doc: &PolicyDocument,
) -> Result<NarrativeBundle, BuildError> {
    build_bundle_with(config, graph, doc, Execution::default())
}

/// Validate, then compile. Inputs that fail validation are refused.
pub fn build_bundle_with(
    config: &NarrativeConfig,
    graph: &PracticeGraph,
    doc: &PolicyDocument,
    exec: Execution,
) -> Result<NarrativeBundle, BuildError> {
    let report = validate_with(config, graph, doc, exec);
    if !report.ok {
        return Err(BuildError::Invalid(report));
    }

    let expanded = expand_category_edges(graph)?;
    let merged = merge_practices(&expanded, doc);
    let steps = build_steps(config, graph, &merged, doc)?;
    let rows = super::actor_rows(&merged, config);

    let quotes: Vec<String> = config
        .facets
        .iter()
        .map(|f| normalize(&f.anchor_quote))
        .chain(merged.iter().flat_map(|p| p.quotes.iter().cloned()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let resolved = exec.map(&quotes, |q| resolve_quote(doc, q).unwrap_or_default());
    let anchors: BTreeMap<String, Vec<AnchorSpan>> = quotes.into_iter().zip(resolved).collect();
    if let Some((q, _)) = anchors.iter().find(|(_, spans)| spans.is_empty()) {
        return Err(BuildError::Internal(format!(
            "quote passed validation but does not resolve: \"{q}\""
        )));
    }

    let rank: HashMap<&str, usize> = rows.iter().map(|r| (r.actor_id.as_str(), r.rank)).collect();
    let mut rects: Vec<Rect> = merged
        .iter()
        .map(|p| {
            let mut quote_anchors: Vec<AnchorSpan> = p.quotes.iter().flat_map(|q| anchors[q].iter().cloned()).collect();
            quote_anchors.sort_by(|a, b| (a.start, a.end, &a.quote).cmp(&(b.start, b.end, &b.quote)));
            quote_anchors.dedup();
            Rect {
                actor_id: p.recipient_actor_id.clone(),
                item_id: p.item_id.clone(),
                verb: p.verb,
                certainty: p.certainty,
                style: Style::from(p.certainty),
                quote_anchors,
                expanded: p.expanded,
            }
        })
        .collect();
    rects.sort_by_cached_key(|r| {
        let label = graph.item(&r.item_id).map(|i| i.label.as_str()).unwrap_or(&r.item_id);
        (
            rank.get(r.actor_id.as_str()).copied().unwrap_or(usize::MAX),
            r.verb,
            label_key(label, &r.item_id),
        )
    });

    let item_count_n = merged
        .iter()
        .filter(|p| p.verb == Verb::Collect)
        .map(|p| p.item_id.as_str())
        .collect::<BTreeSet<_>>()
        .len();

    let mut bundle = NarrativeBundle {
        bundle_version: BUNDLE_VERSION,
        meta: BundleMeta {
            platform_name: config.platform_name.clone(),
            owner_actor_id: config.owner_actor_id.clone(),
            item_count_n,
            build_fingerprint: Fingerprint {
                algorithm: HASH_ALGORITHM.to_string(),
                digest: String::new(),
            },
        },
        steps,
        rows,
        rects,
        anchors,
        categories: config.categories.clone(),
        actors: config.actors.clone(),
        items: graph.items.clone(),
    };
    bundle.meta.build_fingerprint.digest = fingerprint_of(&bundle);
    Ok(bundle)
}

/// Digest of the canonical serialization with the digest field blanked.
pub fn fingerprint_of(bundle: &NarrativeBundle) -> String {
    let mut blank = bundle.clone();
    blank.meta.build_fingerprint.digest.clear();
    hex::encode(Sha256::digest(serialize_bundle(&blank)))
}

/// Canonical bytes: pretty JSON, keys in declaration order, trailing newline.
pub fn serialize_bundle(bundle: &NarrativeBundle) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(bundle).expect("bundle serializes");
    out.push(b'\n');
    out
}

pub fn parse_bundle(bytes: &[u8]) -> Result<NarrativeBundle, BundleParseError> {
    let bundle: NarrativeBundle = serde_json::from_slice(bytes)?;
    if bundle.bundle_version != BUNDLE_VERSION {
        return Err(BundleParseError::Version(bundle.bundle_version));
    }
    Ok(bundle)
}
