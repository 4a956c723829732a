// SPDX-License-Identifier: Apache-2.0

use super::{BuildError, ItemPractice};
use crate::schema::{DataRef, PracticeGraph};

/// Rewrite category-level edges as one edge per member item.
///
/// Output follows source edge order; the products of one category edge are
/// ordered by member item id.
pub fn expand_category_edges(graph: &PracticeGraph) -> Result<Vec<ItemPractice>, BuildError> {
    let mut out = Vec::with_capacity(graph.edges.len());
    for (k, edge) in graph.edges.iter().enumerate() {
        match &edge.data_ref {
            DataRef::Item(id) => out.push(ItemPractice {
                verb: edge.verb,
                recipient_actor_id: edge.recipient_actor_id.clone(),
                item_id: id.clone(),
                certainty: edge.certainty,
                quotes: edge.quotes.clone(),
                expanded: false,
            }),
            DataRef::Category(cat) => {
                let members = graph.members(cat);
                if members.is_empty() {
                    return Err(BuildError::EmptyCategory {
                        edge: k,
                        category: cat.clone(),
                    });
                }
                out.extend(members.into_iter().map(|item_id| ItemPractice {
                    verb: edge.verb,
                    recipient_actor_id: edge.recipient_actor_id.clone(),
                    item_id: item_id.to_string(),
                    certainty: edge.certainty,
                    quotes: edge.quotes.clone(),
                    expanded: true,
                }));
            }
        }
    }
    Ok(out)
}
