// SPDX-License-Identifier: Apache-2.0

//! Heuristic check that an edge's certainty matches its wording.
//!
//! Certainty is assigned by the annotator; this only flags likely slips and
//! never produces errors.

use super::{Certainty, Code, Diagnostic, PracticeGraph};

/// Words that mark a statement as conditional.
pub const HEDGE_WORDS: [&str; 4] = ["may", "might", "could", "if"];

/// Case-insensitive whole-word search.
pub fn contains_word(text: &str, word: &str) -> bool {
    text.split(|c: char| !c.is_alphanumeric())
        .any(|w| w.eq_ignore_ascii_case(word))
}

pub fn lint_certainty(graph: &PracticeGraph) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for (k, edge) in graph.edges.iter().enumerate() {
        let path = format!("graph/edges/{k}/certainty");
        match edge.certainty {
            Certainty::Definite if !edge.quotes.is_empty() && edge.quotes.iter().all(|q| contains_word(q, "may")) => {
                out.push(Diagnostic::new(
                    Code::W040,
                    path,
                    "marked definite but every quote says \"may\"; consider conditional",
                ));
            }
            Certainty::Conditional
                if !edge
                    .quotes
                    .iter()
                    .any(|q| HEDGE_WORDS.iter().any(|w| contains_word(q, w))) =>
            {
                out.push(Diagnostic::new(
                    Code::W041,
                    path,
                    "marked conditional but no quote contains may, might, could or if",
                ));
            }
            _ => {}
        }
    }
    out
}
