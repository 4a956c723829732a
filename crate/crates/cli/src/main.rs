// SPDX-License-Identifier: Apache-2.0

//! `policyscroll`: check annotated privacy policies and compile them into
//! narrative bundles.
//!
//! Exit codes: 0 success, 1 diagnostics (errors, or warnings under
//! `--strict`), 2 usage, 3 I/O.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use policyscroll::compile::stats;
use policyscroll::schema::{Code, NarrativeConfig, PracticeGraph};
use policyscroll::{
    build_bundle, lint_certainty, normalize, parse_config, parse_graph, parse_policy, resolve_quote, serialize_bundle,
    validate, Diagnostic, NarrativeBundle, PolicyDocument, ValidationReport,
};

use render::{Palette, Stream};

#[derive(Parser)]
#[command(
    name = "policyscroll",
    version,
    about = "Compile annotated privacy policies into scrollytelling bundles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse, validate and lint the inputs and print every diagnostic.
    Validate(Common),
    /// Compile the inputs into a bundle.
    Build {
        #[command(flatten)]
        common: Common,
        /// Write the bundle here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Summarize the compiled bundle.
    Stats(Common),
    /// List every quote with the spans it resolves to.
    Anchors(Common),
}

#[derive(Args)]
struct Common {
    /// Policy text with `## ` section headings.
    #[arg(long)]
    policy: PathBuf,
    /// Narrative config JSON.
    #[arg(long)]
    config: PathBuf,
    /// Practice graph JSON.
    #[arg(long)]
    graph: PathBuf,
    /// Treat warnings as failures.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Styled output. `NO_COLOR` in the environment always disables it.
    #[arg(long, value_enum, default_value_t = ColorChoice::Auto)]
    color: ColorChoice,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorChoice {
    Auto,
    Always,
    Never,
}

enum Failure {
    /// Diagnostics were already reported.
    Diagnostics,
    Io(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

struct Loaded {
    config: NarrativeConfig,
    graph: PracticeGraph,
    doc: PolicyDocument,
    report: ValidationReport,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate(c) => run_validate(c),
        Command::Build { common, output } => run_build(common, output.as_deref()),
        Command::Stats(c) => run_stats(c),
        Command::Anchors(c) => run_anchors(c),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Diagnostics) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            let _ = writeln!(io::stderr(), "policyscroll: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

/// Parse all three inputs, then validate and lint. Parse failures come back
/// as a report with nothing loaded.
fn load(c: &Common) -> Result<Result<Loaded, ValidationReport>, Failure> {
    let (policy, config, graph) = (read(&c.policy)?, read(&c.config)?, read(&c.graph)?);

    let mut diags = Vec::new();
    let config = parse_config(&config).map_err(|d| diags.extend(d));
    let graph = parse_graph(&graph).map_err(|d| diags.extend(d));
    let (Ok(config), Ok(graph)) = (config, graph) else {
        return Ok(Err(ValidationReport::new(diags)));
    };
    let doc = match parse_policy(&policy, &config.value.platform_name) {
        Ok(doc) => doc,
        Err(e) => {
            return Ok(Err(ValidationReport::new(vec![Diagnostic::new(
                Code::E001,
                "policy",
                e.to_string(),
            )])))
        }
    };

    let mut diags = config.warnings;
    diags.extend(graph.warnings);
    diags.extend(lint_certainty(&graph.value));
    let report = validate(&config.value, &graph.value, &doc).merge(diags);
    Ok(Ok(Loaded {
        config: config.value,
        graph: graph.value,
        doc,
        report,
    }))
}

fn failed(report: &ValidationReport, strict: bool) -> bool {
    report.error_count() > 0 || (strict && report.warning_count() > 0)
}

fn emit_report(out: &mut dyn Write, report: &ValidationReport, format: Format, palette: Palette) -> io::Result<()> {
    match format {
        Format::Json => {
            for d in &report.diagnostics {
                writeln!(out, "{}", d.to_json_line())?;
            }
        }
        Format::Text => {
            for d in &report.diagnostics {
                writeln!(out, "{}", palette.diagnostic(d))?;
            }
            writeln!(out, "{}", palette.summary(report.error_count(), report.warning_count()))?;
        }
    }
    Ok(())
}

fn run_validate(c: &Common) -> Result<(), Failure> {
    let report = match load(c)? {
        Ok(loaded) => loaded.report,
        Err(report) => report,
    };
    let palette = Palette::new(c.color, Stream::Stdout);
    emit_report(&mut io::stdout().lock(), &report, c.format, palette)?;
    if failed(&report, c.strict) {
        return Err(Failure::Diagnostics);
    }
    Ok(())
}

/// Load, report problems on stderr, and compile.
fn compile(c: &Common) -> Result<NarrativeBundle, Failure> {
    let palette = Palette::new(c.color, Stream::Stderr);
    let loaded = match load(c)? {
        Ok(loaded) => loaded,
        Err(report) => {
            emit_report(&mut io::stderr().lock(), &report, c.format, palette)?;
            return Err(Failure::Diagnostics);
        }
    };
    if !loaded.report.diagnostics.is_empty() {
        emit_report(&mut io::stderr().lock(), &loaded.report, c.format, palette)?;
    }
    if failed(&loaded.report, c.strict) {
        return Err(Failure::Diagnostics);
    }
    build_bundle(&loaded.config, &loaded.graph, &loaded.doc).map_err(|e| {
        let report = ValidationReport::new(e.diagnostics());
        let _ = emit_report(&mut io::stderr().lock(), &report, c.format, palette);
        Failure::Diagnostics
    })
}

fn run_build(c: &Common, output: Option<&Path>) -> Result<(), Failure> {
    let bytes = serialize_bundle(&compile(c)?);
    match output {
        Some(path) => {
            fs::write(path, &bytes).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?
        }
        None => io::stdout().lock().write_all(&bytes)?,
    }
    Ok(())
}

fn run_stats(c: &Common) -> Result<(), Failure> {
    let s = stats(&compile(c)?);
    let mut out = io::stdout().lock();
    match c.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&s).expect("stats serialize"))?,
        Format::Text => render::stats(&mut out, &s, Palette::new(c.color, Stream::Stdout))?,
    }
    Ok(())
}

fn run_anchors(c: &Common) -> Result<(), Failure> {
    let loaded = match load(c)? {
        Ok(loaded) => loaded,
        Err(report) => {
            let palette = Palette::new(c.color, Stream::Stderr);
            emit_report(&mut io::stderr().lock(), &report, c.format, palette)?;
            return Err(Failure::Diagnostics);
        }
    };
    let mut quotes: Vec<String> = loaded
        .config
        .facets
        .iter()
        .map(|f| normalize(&f.anchor_quote))
        .chain(
            loaded
                .graph
                .edges
                .iter()
                .flat_map(|e| e.quotes.iter().map(|q| normalize(q))),
        )
        .collect();
    quotes.sort();
    quotes.dedup();

    let palette = Palette::new(c.color, Stream::Stdout);
    let mut out = io::stdout().lock();
    let mut unresolved = 0;
    for quote in &quotes {
        let spans = resolve_quote(&loaded.doc, quote).unwrap_or_default();
        if spans.is_empty() {
            unresolved += 1;
        }
        match c.format {
            Format::Json => {
                let record = serde_json::json!({ "quote": quote, "spans": spans });
                writeln!(out, "{record}")?;
            }
            Format::Text => render::anchor(&mut out, quote, &spans, palette)?,
        }
    }
    if c.format == Format::Text {
        writeln!(out, "{} quotes, {unresolved} unresolved", quotes.len())?;
    }
    if unresolved > 0 {
        return Err(Failure::Diagnostics);
    }
    Ok(())
}
