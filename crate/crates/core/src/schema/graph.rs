// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use serde_json::Value;

use super::reader::{is_slug, Reader};
use super::{sort_diagnostics, Certainty, Code, DataItem, DataRef, Diagnostic, Parsed, Practice, PracticeGraph, Verb};
use crate::policy::normalize;

const ROOT: &str = "graph";

pub fn parse_graph(bytes: &[u8]) -> Result<Parsed<PracticeGraph>, Vec<Diagnostic>> {
    let mut r = Reader::new();
    let graph = read_graph(&mut r, bytes);
    if let Some(graph) = &graph {
        let mut seen = HashMap::new();
        for (i, item) in graph.items.iter().enumerate() {
            if let Some(first) = seen.insert(item.id.as_str(), i) {
                r.push(
                    Code::E003,
                    format!("{ROOT}/items/{i}/id"),
                    format!("duplicate item id `{}` (first at items/{first})", item.id),
                );
            }
        }
    }
    let mut diags = r.diags;
    sort_diagnostics(&mut diags);
    match graph {
        Some(value) if !diags.iter().any(Diagnostic::is_error) => Ok(Parsed { value, warnings: diags }),
        _ => Err(diags),
    }
}

fn read_graph(r: &mut Reader, bytes: &[u8]) -> Option<PracticeGraph> {
    let root = r.root(bytes, ROOT)?;
    r.known_fields(&root, ROOT, &["items", "edges"]);

    let items = r.array(&root, "items", ROOT).map(|arr| {
        arr.iter()
            .enumerate()
            .filter_map(|(i, v)| read_item(r, v, &format!("{ROOT}/items/{i}")))
            .collect::<Vec<_>>()
    });
    let edges = r.array(&root, "edges", ROOT).map(|arr| {
        arr.iter()
            .enumerate()
            .filter_map(|(i, v)| read_edge(r, v, &format!("{ROOT}/edges/{i}")))
            .collect::<Vec<_>>()
    });

    if r.has_errors() {
        return None;
    }
    Some(PracticeGraph {
        items: items?,
        edges: edges?,
    })
}

fn read_item(r: &mut Reader, v: &Value, path: &str) -> Option<DataItem> {
    let obj = r.object(v, path)?;
    r.known_fields(obj, path, &["id", "label", "category_id"]);
    let id = r.slug(obj, "id", path);
    let label = r.text(obj, "label", path);
    let category_id = r.slug(obj, "category_id", path);
    Some(DataItem {
        id: id?,
        label: label?,
        category_id: category_id?,
    })
}

fn read_edge(r: &mut Reader, v: &Value, path: &str) -> Option<Practice> {
    let obj = r.object(v, path)?;
    r.known_fields(
        obj,
        path,
        &["verb", "recipient_actor_id", "data_ref", "certainty", "quotes"],
    );
    let verb = r.token::<Verb>(obj, "verb", path, Code::E007);
    let recipient_actor_id = r.slug(obj, "recipient_actor_id", path);
    let data_ref = read_data_ref(r, obj.get("data_ref"), path);
    let certainty = r.token::<Certainty>(obj, "certainty", path, Code::E011);
    let quotes = read_quotes(r, obj, path);
    Some(Practice {
        verb: verb?,
        recipient_actor_id: recipient_actor_id?,
        data_ref: data_ref?,
        certainty: certainty?,
        quotes: quotes?,
    })
}

fn read_data_ref(r: &mut Reader, v: Option<&Value>, path: &str) -> Option<DataRef> {
    let path = format!("{path}/data_ref");
    let Some(v) = v else {
        r.push(Code::E002, path, "missing required field `data_ref`");
        return None;
    };
    let parsed = v.as_object().filter(|o| o.len() == 1).and_then(|o| {
        let (tag, id) = o.iter().next()?;
        let id = id.as_str().filter(|s| is_slug(s))?.to_string();
        match tag.as_str() {
            "item" => Some(DataRef::Item(id)),
            "category" => Some(DataRef::Category(id)),
            _ => None,
        }
    });
    if parsed.is_none() {
        r.push(
            Code::E007,
            path,
            format!(r#"data_ref must be {{"item": id}} or {{"category": id}}, got {v}"#),
        );
    }
    parsed
}

fn read_quotes(r: &mut Reader, obj: &super::reader::Object, path: &str) -> Option<Vec<String>> {
    let arr = r.array(obj, "quotes", path)?;
    if arr.is_empty() {
        r.push(
            Code::E010,
            format!("{path}/quotes"),
            "edge must carry at least one quote",
        );
        return None;
    }
    let mut quotes = Vec::with_capacity(arr.len());
    let mut bad = false;
    for (i, q) in arr.iter().enumerate() {
        match q.as_str() {
            Some(s) if !normalize(s).is_empty() => quotes.push(s.to_string()),
            _ => {
                r.push(
                    Code::E007,
                    format!("{path}/quotes/{i}"),
                    "quote must be a non-empty string",
                );
                bad = true;
            }
        }
    }
    (!bad).then_some(quotes)
}
