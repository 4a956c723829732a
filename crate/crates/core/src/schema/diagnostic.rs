// SPDX-License-Identifier: Apache-2.0

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Stable diagnostic codes. `E` codes block compilation, `W` codes do not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Code {
    /// Unknown field.
    W001,
    /// Malformed JSON or wrong top-level shape.
    E001,
    /// Missing required field.
    E002,
    /// Duplicate id.
    E003,
    /// More than one owner actor.
    E004,
    /// `owner_actor_id` missing or not an owner.
    E005,
    /// Duplicate facet kind.
    E006,
    /// Field has the wrong type or an invalid value.
    E007,
    /// Unknown color token.
    E008,
    /// Edge with no quotes.
    E010,
    /// Unknown certainty value.
    E011,
    /// Item references an unknown category.
    E020,
    /// Edge references an unknown actor, item or category.
    E021,
    /// Collect edge whose recipient is not the owner.
    E022,
    /// Edge quote not found in the policy.
    E023,
    /// Facet anchor quote not found in the policy.
    E024,
    /// Graph has no collect edges.
    E025,
    /// Share edge whose recipient is the owner.
    E026,
    /// Item not referenced by any edge.
    W030,
    /// Definite practice whose every quote says "may".
    W040,
    /// Conditional practice with no hedging word in any quote.
    W041,
    /// Edge references a category without member items.
    E050,
    /// Nothing is collected, so there is no narrative.
    E051,
    /// Internal compiler fault.
    E099,
}

impl Code {
    pub fn as_str(self) -> &'static str {
        match self {
            Code::W001 => "W001",
            Code::E001 => "E001",
            Code::E002 => "E002",
            Code::E003 => "E003",
            Code::E004 => "E004",
            Code::E005 => "E005",
            Code::E006 => "E006",
            Code::E007 => "E007",
            Code::E008 => "E008",
            Code::E010 => "E010",
            Code::E011 => "E011",
            Code::E020 => "E020",
            Code::E021 => "E021",
            Code::E022 => "E022",
            Code::E023 => "E023",
            Code::E024 => "E024",
            Code::E025 => "E025",
            Code::E026 => "E026",
            Code::W030 => "W030",
            Code::W040 => "W040",
            Code::W041 => "W041",
            Code::E050 => "E050",
            Code::E051 => "E051",
            Code::E099 => "E099",
        }
    }

    pub fn severity(self) -> Severity {
        if self.as_str().starts_with('W') {
            Severity::Warning
        } else {
            Severity::Error
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagnostic {
    pub code: Code,
    pub severity: Severity,
    /// Slash-delimited locator, e.g. `graph/edges/3/quotes/0`.
    pub path: String,
    pub message: String,
}

impl Diagnostic {
    pub fn new(code: Code, path: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            code,
            severity: code.severity(),
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }

    /// One JSON record, no trailing newline.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("diagnostic serializes")
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] {}: {}", self.severity, self.code, self.path, self.message)
    }
}

/// Compare paths segment by segment, numeric segments by value, so that
/// `edges/2` sorts before `edges/10`.
pub fn compare_paths(a: &str, b: &str) -> Ordering {
    let mut left = a.split('/');
    let mut right = b.split('/');
    loop {
        match (left.next(), right.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) => {
                let ord = match (x.parse::<u64>(), y.parse::<u64>()) {
                    (Ok(m), Ok(n)) => m.cmp(&n),
                    (Ok(_), Err(_)) => Ordering::Less,
                    (Err(_), Ok(_)) => Ordering::Greater,
                    (Err(_), Err(_)) => x.cmp(y),
                };
                if ord != Ordering::Equal {
                    return ord;
                }
            }
        }
    }
}

pub fn sort_diagnostics(diags: &mut [Diagnostic]) {
    diags.sort_by(|a, b| {
        compare_paths(&a.path, &b.path)
            .then_with(|| a.code.as_str().cmp(b.code.as_str()))
            .then_with(|| a.message.cmp(&b.message))
    });
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub diagnostics: Vec<Diagnostic>,
    pub ok: bool,
}

impl ValidationReport {
    /// Sorts and de-duplicates the findings.
    pub fn new(mut diagnostics: Vec<Diagnostic>) -> Self {
        sort_diagnostics(&mut diagnostics);
        diagnostics.dedup();
        let ok = !diagnostics.iter().any(Diagnostic::is_error);
        Self { diagnostics, ok }
    }

    pub fn merge(self, other: impl IntoIterator<Item = Diagnostic>) -> Self {
        let mut all = self.diagnostics;
        all.extend(other);
        Self::new(all)
    }

    pub fn error_count(&self) -> usize {
        self.diagnostics.iter().filter(|d| d.is_error()).count()
    }

    pub fn warning_count(&self) -> usize {
        self.diagnostics.len() - self.error_count()
    }

    pub fn codes(&self) -> Vec<Code> {
        self.diagnostics.iter().map(|d| d.code).collect()
    }
}
