// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use serde_json::Value;

use super::reader::Reader;
use super::{
    sort_diagnostics, Actor, ActorKind, Category, Code, Diagnostic, FacetKind, NarrativeConfig, Parsed, SourceFacet,
};

/// Symbolic palette a category may draw its color from. The viewer maps
/// each token to an actual color.
pub const COLOR_TOKENS: [&str; 12] = [
    "blue", "orange", "green", "red", "purple", "brown", "pink", "gray", "olive", "cyan", "teal", "gold",
];

const ROOT: &str = "config";

pub fn parse_config(bytes: &[u8]) -> Result<Parsed<NarrativeConfig>, Vec<Diagnostic>> {
    let mut r = Reader::new();
    let config = read_config(&mut r, bytes);
    if let Some(config) = &config {
        check_config(&mut r, config);
    }
    let mut diags = r.diags;
    sort_diagnostics(&mut diags);
    match config {
        Some(value) if !diags.iter().any(Diagnostic::is_error) => Ok(Parsed { value, warnings: diags }),
        _ => Err(diags),
    }
}

fn read_config(r: &mut Reader, bytes: &[u8]) -> Option<NarrativeConfig> {
    let root = r.root(bytes, ROOT)?;
    r.known_fields(
        &root,
        ROOT,
        &["platform_name", "owner_actor_id", "facets", "categories", "actors"],
    );

    let platform_name = r.text(&root, "platform_name", ROOT);
    let owner_actor_id = r.slug(&root, "owner_actor_id", ROOT);

    let facets = r.array(&root, "facets", ROOT).map(|arr| {
        arr.iter()
            .enumerate()
            .filter_map(|(i, v)| read_facet(r, v, &format!("{ROOT}/facets/{i}")))
            .collect::<Vec<_>>()
    });
    let categories = r.array(&root, "categories", ROOT).map(|arr| {
        arr.iter()
            .enumerate()
            .filter_map(|(i, v)| read_category(r, v, &format!("{ROOT}/categories/{i}")))
            .collect::<Vec<_>>()
    });
    let actors = r.array(&root, "actors", ROOT).map(|arr| {
        arr.iter()
            .enumerate()
            .filter_map(|(i, v)| read_actor(r, v, &format!("{ROOT}/actors/{i}")))
            .collect::<Vec<_>>()
    });

    if r.has_errors() {
        return None;
    }
    Some(NarrativeConfig {
        platform_name: platform_name?,
        owner_actor_id: owner_actor_id?,
        facets: facets?,
        categories: categories?,
        actors: actors?,
    })
}

fn read_facet(r: &mut Reader, v: &Value, path: &str) -> Option<SourceFacet> {
    let obj = r.object(v, path)?;
    r.known_fields(obj, path, &["kind", "label", "icon_token", "anchor_quote"]);
    let kind = r.token::<FacetKind>(obj, "kind", path, Code::E007);
    let label = r.text(obj, "label", path);
    let icon_token = r.text(obj, "icon_token", path);
    let anchor_quote = r.text(obj, "anchor_quote", path);
    Some(SourceFacet {
        kind: kind?,
        label: label?,
        icon_token: icon_token?,
        anchor_quote: anchor_quote?,
    })
}

fn read_category(r: &mut Reader, v: &Value, path: &str) -> Option<Category> {
    let obj = r.object(v, path)?;
    r.known_fields(obj, path, &["id", "label", "color_token"]);
    let id = r.slug(obj, "id", path);
    let label = r.text(obj, "label", path);
    let color_token = r.string(obj, "color_token", path);
    Some(Category {
        id: id?,
        label: label?,
        color_token: color_token?,
    })
}

fn read_actor(r: &mut Reader, v: &Value, path: &str) -> Option<Actor> {
    let obj = r.object(v, path)?;
    r.known_fields(obj, path, &["id", "label", "kind", "icon_token"]);
    let id = r.slug(obj, "id", path);
    let label = r.text(obj, "label", path);
    let kind = r.token::<ActorKind>(obj, "kind", path, Code::E007);
    let icon_token = r.text(obj, "icon_token", path);
    Some(Actor {
        id: id?,
        label: label?,
        kind: kind?,
        icon_token: icon_token?,
    })
}

/// Constraints spanning several entries of the config.
fn check_config(r: &mut Reader, config: &NarrativeConfig) {
    let mut seen_kinds = HashMap::new();
    for (i, facet) in config.facets.iter().enumerate() {
        if let Some(first) = seen_kinds.insert(facet.kind, i) {
            r.push(
                Code::E006,
                format!("{ROOT}/facets/{i}/kind"),
                format!("facet kind already declared at facets/{first}"),
            );
        }
    }

    duplicate_ids(r, config.categories.iter().map(|c| c.id.as_str()), "categories");
    duplicate_ids(r, config.actors.iter().map(|a| a.id.as_str()), "actors");

    for (i, cat) in config.categories.iter().enumerate() {
        if !COLOR_TOKENS.contains(&cat.color_token.as_str()) {
            r.push(
                Code::E008,
                format!("{ROOT}/categories/{i}/color_token"),
                format!("unknown color token `{}`", cat.color_token),
            );
        }
    }

    let mut owners = config
        .actors
        .iter()
        .enumerate()
        .filter(|(_, a)| a.kind == ActorKind::Owner);
    if let Some((first, _)) = owners.next() {
        for (i, _) in owners {
            r.push(
                Code::E004,
                format!("{ROOT}/actors/{i}/kind"),
                format!("multiple owners: actors/{first} is already the owner"),
            );
        }
    }

    match config.actor(&config.owner_actor_id) {
        Some(a) if a.kind == ActorKind::Owner => {}
        Some(_) => r.push(
            Code::E005,
            format!("{ROOT}/owner_actor_id"),
            format!("actor `{}` is not of kind owner", config.owner_actor_id),
        ),
        None => r.push(
            Code::E005,
            format!("{ROOT}/owner_actor_id"),
            format!("no actor with id `{}`", config.owner_actor_id),
        ),
    }
}

fn duplicate_ids<'a>(r: &mut Reader, ids: impl Iterator<Item = &'a str>, list: &str) {
    let mut seen = HashMap::new();
    for (i, id) in ids.enumerate() {
        if let Some(first) = seen.insert(id, i) {
            r.push(
                Code::E003,
                format!("{ROOT}/{list}/{i}/id"),
                format!("duplicate id `{id}` (first at {list}/{first})"),
            );
        }
    }
}
