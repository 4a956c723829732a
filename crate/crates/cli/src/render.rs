// SPDX-License-Identifier: Apache-2.0

use std::io::{self, IsTerminal, Write};

use policyscroll::compile::BundleStats;
use policyscroll::schema::Severity;
use policyscroll::{AnchorSpan, Diagnostic};

use crate::ColorChoice;

const RED: &str = "\x1b[1;31m";
const YELLOW: &str = "\x1b[1;33m";
const BOLD: &str = "\x1b[1m";
const DIM: &str = "\x1b[2m";
const RESET: &str = "\x1b[0m";

#[derive(Clone, Copy)]
pub enum Stream {
    Stdout,
    Stderr,
}

#[derive(Clone, Copy)]
pub struct Palette {
    enabled: bool,
}

impl Palette {
    pub fn new(choice: ColorChoice, stream: Stream) -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        let enabled = !no_color
            && match choice {
                ColorChoice::Always => true,
                ColorChoice::Never => false,
                ColorChoice::Auto => match stream {
                    Stream::Stdout => io::stdout().is_terminal(),
                    Stream::Stderr => io::stderr().is_terminal(),
                },
            };
        Palette { enabled }
    }

    fn paint(&self, style: &str, text: &str) -> String {
        if self.enabled {
            format!("{style}{text}{RESET}")
        } else {
            text.to_string()
        }
    }

    pub fn diagnostic(&self, d: &Diagnostic) -> String {
        let style = match d.severity {
            Severity::Error => RED,
            Severity::Warning => YELLOW,
        };
        let tag = self.paint(style, &format!("{}[{}]", d.severity, d.code));
        format!("{tag} {}: {}", self.paint(BOLD, &d.path), d.message)
    }

    pub fn summary(&self, errors: usize, warnings: usize) -> String {
        let plural = |n: usize, word: &str| {
            if n == 1 {
                format!("{n} {word}")
            } else {
                format!("{n} {word}s")
            }
        };
        format!("{}, {}", plural(errors, "error"), plural(warnings, "warning"))
    }
}

pub fn stats(out: &mut dyn Write, s: &BundleStats, p: Palette) -> io::Result<()> {
    let h = &s.certainty;
    writeln!(out, "{} {}", p.paint(BOLD, "items:"), s.item_count)?;
    writeln!(out, "{} {}", p.paint(BOLD, "rects:"), s.rect_count)?;
    writeln!(
        out,
        "{} definite {}, conditional {}, ambiguous {}",
        p.paint(BOLD, "certainty:"),
        h.definite,
        h.conditional,
        h.ambiguous
    )?;
    writeln!(
        out,
        "{} {} ({} spans, {} unresolved)",
        p.paint(BOLD, "quotes:"),
        s.total_quotes,
        s.total_spans,
        s.unresolved
    )?;
    writeln!(out, "{}", p.paint(BOLD, "rows:"))?;
    for row in &s.items_per_row {
        writeln!(out, "  {:<24} {}", row.actor_id, row.item_count)?;
    }
    writeln!(out, "{}", p.paint(BOLD, "categories:"))?;
    for (category, n) in &s.items_per_category {
        writeln!(out, "  {category:<24} {n}")?;
    }
    Ok(())
}

pub fn anchor(out: &mut dyn Write, quote: &str, spans: &[AnchorSpan], p: Palette) -> io::Result<()> {
    writeln!(out, "\"{quote}\"")?;
    if spans.is_empty() {
        writeln!(out, "  {}", p.paint(RED, "unresolved"))?;
    }
    for s in spans {
        writeln!(
            out,
            "  {} {}..{} {}",
            s.occurrence_index,
            s.start,
            s.end,
            p.paint(DIM, &s.section_id)
        )?;
    }
    Ok(())
}
