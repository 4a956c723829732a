// SPDX-License-Identifier: Apache-2.0

//! Policy text ingestion.
//!
//! A policy source is plain UTF-8 text in which lines starting with `"## "`
//! open a new section. Everything before the first heading is collected into
//! an implicit `preamble` section. Each section is normalized on its own and
//! the sections are joined into a single `full_text`, which defines the
//! character-offset space used by every [`AnchorSpan`].
//!
//! Offsets are counted in Unicode scalar values, not bytes, so a viewer in
//! any language can slice the same text with the same numbers.

use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

/// Joins heading to body and section to section in `full_text`.
///
/// Normalized quotes never contain a newline, so no quote can straddle a
/// section boundary.
pub const SECTION_SEPARATOR: char = '\n';

/// Id given to text preceding the first heading.
pub const PREAMBLE_ID: &str = "preamble";

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolicyError {
    #[error("policy source is not valid UTF-8: {0}")]
    Encoding(#[from] std::str::Utf8Error),
    #[error("policy source contains no text")]
    EmptyDocument,
    #[error("quote is empty after normalization")]
    EmptyQuote,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub id: String,
    pub heading: String,
    pub body: String,
    pub start: usize,
    pub end: usize,
}

/// A resolved occurrence of a quote in [`PolicyDocument::full_text`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnchorSpan {
    pub quote: String,
    pub section_id: String,
    pub start: usize,
    pub end: usize,
    pub occurrence_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolicyDocument {
    pub owner_name: String,
    pub sections: Vec<Section>,
    pub full_text: String,
    /// Character count of `full_text`.
    pub length: usize,
    /// Byte offset of every char in `full_text`, plus a trailing entry for
    /// the end of the string.
    char_bytes: Vec<usize>,
}

impl PolicyDocument {
    /// Characters `[start, end)` of the full text.
    ///
    /// Panics if the range is out of bounds.
    pub fn slice(&self, start: usize, end: usize) -> &str {
        assert!(start <= end && end <= self.length, "span {start}..{end} out of range");
        &self.full_text[self.char_bytes[start]..self.char_bytes[end]]
    }

    pub fn section_at(&self, offset: usize) -> Option<&Section> {
        let idx = self.sections.partition_point(|s| s.end <= offset);
        self.sections.get(idx).filter(|s| s.start <= offset)
    }

    fn char_offset(&self, byte: usize) -> usize {
        // `byte` always falls on a char boundary because it comes from a
        // substring match.
        self.char_bytes
            .binary_search(&byte)
            .expect("byte offset on a char boundary")
    }
}

/// Canonical text form used for both the document and every quote.
///
/// Applies canonical composition (NFC), folds typographic quotes to ASCII,
/// collapses whitespace runs to a single space and trims both ends.
pub fn normalize(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut pending_space = false;
    for c in text.nfc() {
        if c.is_whitespace() {
            pending_space = !out.is_empty();
            continue;
        }
        if pending_space {
            out.push(' ');
            pending_space = false;
        }
        out.push(fold_quote(c));
    }
    out
}

fn fold_quote(c: char) -> char {
    match c {
        '\u{2018}' | '\u{2019}' | '\u{201A}' | '\u{201B}' | '\u{2032}' => '\'',
        '\u{201C}' | '\u{201D}' | '\u{201E}' | '\u{201F}' | '\u{2033}' => '"',
        other => other,
    }
}

/// Lowercase slug: alphanumeric runs joined by `-`.
pub fn slugify(text: &str) -> String {
    let mut slug = String::new();
    for word in text.split(|c: char| !c.is_alphanumeric()).filter(|w| !w.is_empty()) {
        if !slug.is_empty() {
            slug.push('-');
        }
        slug.extend(word.chars().flat_map(char::to_lowercase));
    }
    slug
}

struct RawSection {
    heading: Option<String>,
    lines: Vec<String>,
}

pub fn parse_policy(source: &[u8], owner_name: &str) -> Result<PolicyDocument, PolicyError> {
    let text = std::str::from_utf8(source)?;
    let text = text.strip_prefix('\u{FEFF}').unwrap_or(text);

    let mut raw = vec![RawSection {
        heading: None,
        lines: Vec::new(),
    }];
    for line in text.lines() {
        if let Some(heading) = line.strip_prefix("## ") {
            raw.push(RawSection {
                heading: Some(heading.to_string()),
                lines: Vec::new(),
            });
        } else {
            raw.last_mut().expect("non-empty").lines.push(line.to_string());
        }
    }

    let mut used_ids: Vec<String> = Vec::new();
    let mut sections = Vec::new();
    let mut full_text = String::new();
    let mut cursor = 0usize;

    for (n, r) in raw.into_iter().enumerate() {
        let heading = r.heading.as_deref().map(normalize).unwrap_or_default();
        let body = normalize(&r.lines.join("\n"));
        let segment = match (heading.is_empty(), body.is_empty()) {
            (true, true) => continue,
            (false, true) => heading.clone(),
            (true, false) => body.clone(),
            (false, false) => format!("{heading}{SECTION_SEPARATOR}{body}"),
        };

        let base = if r.heading.is_none() {
            PREAMBLE_ID.to_string()
        } else {
            match slugify(&heading) {
                s if s.is_empty() => format!("section-{n}"),
                s => s,
            }
        };
        let id = unique_id(&base, &used_ids);
        used_ids.push(id.clone());

        if !full_text.is_empty() {
            full_text.push(SECTION_SEPARATOR);
            cursor += 1;
        }
        let len = segment.chars().count();
        full_text.push_str(&segment);
        sections.push(Section {
            id,
            heading,
            body,
            start: cursor,
            end: cursor + len,
        });
        cursor += len;
    }

    if sections.is_empty() {
        return Err(PolicyError::EmptyDocument);
    }

    let mut char_bytes: Vec<usize> = full_text.char_indices().map(|(b, _)| b).collect();
    char_bytes.push(full_text.len());

    Ok(PolicyDocument {
        owner_name: owner_name.to_string(),
        sections,
        length: cursor,
        full_text,
        char_bytes,
    })
}

fn unique_id(base: &str, used: &[String]) -> String {
    if !used.iter().any(|u| u == base) {
        return base.to_string();
    }
    (2..)
        .map(|k| format!("{base}-{k}"))
        .find(|candidate| !used.contains(candidate))
        .expect("unbounded suffix search")
}

/// All non-overlapping occurrences of `normalize(quote)`, left to right.
pub fn resolve_quote(doc: &PolicyDocument, quote: &str) -> Result<Vec<AnchorSpan>, PolicyError> {
    let needle = normalize(quote);
    if needle.is_empty() {
        return Err(PolicyError::EmptyQuote);
    }
    let width = needle.chars().count();
    Ok(doc
        .full_text
        .match_indices(needle.as_str())
        .enumerate()
        .map(|(occurrence_index, (byte, _))| {
            let start = doc.char_offset(byte);
            let section_id = doc.section_at(start).map(|s| s.id.clone()).unwrap_or_default();
            AnchorSpan {
                quote: needle.clone(),
                section_id,
                start,
                end: start + width,
                occurrence_index,
            }
        })
        .collect())
}

pub fn word_count(doc: &PolicyDocument) -> usize {
    doc.full_text.split_whitespace().count()
}
