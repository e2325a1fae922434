//! The `quiverlink` command line.
//!
//! Exit codes: 0 success, 1 a computed result disagrees with what was asserted
//! (or a search exceeded its limits), 2 usage or input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::catalog::Catalog;
use crate::coloring::{arc_classes, count_colorings, enumerate_colorings};
use crate::diagram::{parse_diagrams, parse_stanzas, serialize, validate_nodes, MarkedGraphDiagram, Sign};
use crate::error::{Error, Result};
use crate::quandle::{builtin, enumerate_endos, parse_tables, resolve_quandle, verify_axioms, Quandle, QuandleMap};
use crate::quiver::{are_isomorphic, build_quiver, check_remark, export_dot, export_json, Quiver};
use crate::table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "quiverlink", version, about = "Quandle coloring quivers of oriented links and surface-links")]
struct Cli {
    /// Worker threads for parallel steps (default: all cores).
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write results here instead of standard output.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quandle tables and their endomorphisms.
    #[command(subcommand)]
    Quandle(QuandleCmd),
    /// Marked graph diagrams.
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Quandle colorings of a diagram.
    #[command(subcommand)]
    Color(ColorCmd),
    /// Quandle coloring quivers.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// The surface-link polynomial table.
    #[command(subcommand)]
    Table(TableCmd),
}

#[derive(Subcommand, Debug)]
enum QuandleCmd {
    /// Checks the quandle axioms and lists every violation.
    Verify(QuandleArg),
    /// Enumerates Hom(X, X).
    Endos {
        #[command(flatten)]
        quandle: QuandleArg,
        /// Print only the number of endomorphisms.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Args, Debug)]
struct QuandleArg {
    /// Built-in name (dihedral:<n>, trivial:<n>, alexander:<n>:<t>, symplectic:<p>,
    /// tetrahedral, paper-ex1, paper-ex2, paper-4elt), a file, or `file:name`.
    #[arg(short, long, value_name = "SPEC")]
    quandle: String,
}

#[derive(Args, Debug)]
struct DiagramArg {
    /// Catalog name (such as `8_1` or `8_1/r1`), a file, or `file:name`.
    #[arg(short, long, value_name = "SPEC")]
    diagram: String,
}

#[derive(Subcommand, Debug)]
enum DiagramCmd {
    /// Checks edge multiplicities and orientations of every stanza.
    Validate(DiagramArg),
    /// Prints the crossing-only resolutions.
    Resolve {
        #[command(flatten)]
        diagram: DiagramArg,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
    },
    /// Counts and admissibility summary.
    Info(DiagramArg),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Plus,
    Minus,
    Both,
}

#[derive(Subcommand, Debug)]
enum ColorCmd {
    /// Number of colorings.
    Count(Target),
    /// Every coloring, one per line, colors indexed by arc class.
    List(Target),
}

#[derive(Args, Debug)]
struct Target {
    #[command(flatten)]
    diagram: DiagramArg,
    #[command(flatten)]
    quandle: QuandleArg,
}

#[derive(Args, Debug)]
struct EndoSet {
    /// Use S = Hom(X, X) (the default).
    #[arg(long, conflicts_with = "endo")]
    full: bool,

    /// An endomorphism as a comma-separated image vector such as `1,1,2`; repeatable.
    #[arg(long, value_name = "IMAGES")]
    endo: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum QuiverCmd {
    /// Builds the quiver (text, json or dot).
    Build(QuiverArgs),
    /// In-degree quiver polynomial.
    Poly(QuiverArgs),
    /// Compares the quivers of two diagrams.
    Iso {
        #[command(flatten)]
        args: QuiverArgs,
        /// The second diagram.
        #[arg(long, value_name = "SPEC")]
        other: String,
        /// Exit with status 1 unless the answer is this.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Checks that the quiver embeds into the quivers of both resolutions.
    Remark(QuiverArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Expect {
    Iso,
    NonIso,
}

#[derive(Args, Debug)]
struct QuiverArgs {
    #[command(flatten)]
    target: Target,
    #[command(flatten)]
    endos: EndoSet,
}

#[derive(Subcommand, Debug)]
enum TableCmd {
    /// Computes every cell and compares it with the printed value.
    Reproduce {
        /// Same as `--format json`.
        #[arg(long)]
        json: bool,
    },
}

/// Outcome of a subcommand: its output and exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, code: EXIT_OK }
    }
}

/// Runs the command line with standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the command line writing results to `out` and diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::Domain(format!("cannot start {n} threads: {e}"))),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &outcome.text),
                None => out.write_all(outcome.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::TooLarge(_) => EXIT_MISMATCH,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    if format == Format::Dot && !matches!(cli.command, Command::Quiver(QuiverCmd::Build(_))) {
        return Err(Error::Domain("dot output is only available for `quiver build`".into()));
    }
    match &cli.command {
        Command::Quandle(QuandleCmd::Verify(q)) => quandle_verify(&q.quandle, format),
        Command::Quandle(QuandleCmd::Endos { quandle, count }) => quandle_endos(&quandle.quandle, *count, format),
        Command::Diagram(DiagramCmd::Validate(d)) => diagram_validate(&d.diagram, format),
        Command::Diagram(DiagramCmd::Resolve { diagram, side }) => diagram_resolve(&diagram.diagram, *side, format),
        Command::Diagram(DiagramCmd::Info(d)) => diagram_info(&d.diagram, format),
        Command::Color(ColorCmd::Count(t)) => color_count(t, format),
        Command::Color(ColorCmd::List(t)) => color_list(t, format),
        Command::Quiver(QuiverCmd::Build(a)) => quiver_build(a, format),
        Command::Quiver(QuiverCmd::Poly(a)) => quiver_poly(a, format),
        Command::Quiver(QuiverCmd::Iso { args, other, expect }) => quiver_iso(args, other, *expect, format),
        Command::Quiver(QuiverCmd::Remark(a)) => quiver_remark(a, format),
        Command::Table(TableCmd::Reproduce { json }) => table_reproduce(if *json { Format::Json } else { format }),
    }
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON output");
    s.push('\n');
    s
}

/// The snake_case name serde gives a unit variant.
fn label(value: &impl Serialize) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

/// Splits `file:name` when `file` exists.
fn split_file_spec(spec: &str) -> Option<(&Path, Option<&str>)> {
    if Path::new(spec).is_file() {
        return Some((Path::new(spec), None));
    }
    let (p, n) = spec.rsplit_once(':')?;
    Path::new(p).is_file().then_some((Path::new(p), Some(n)))
}

fn select<T>(mut items: Vec<T>, wanted: Option<&str>, name: impl Fn(&T) -> &str, path: &Path) -> Result<Vec<T>> {
    match wanted {
        None if items.is_empty() => Err(Error::Format(format!("{} holds no stanza", path.display()))),
        None => Ok(items),
        Some(n) => match items.iter().position(|t| name(t) == n) {
            Some(i) => Ok(vec![items.swap_remove(i)]),
            None => {
                Err(Error::Lookup { name: n.to_string(), valid: items.iter().map(|t| name(t).to_string()).collect() })
            }
        },
    }
}

/// A diagram from a file (first stanza, or `file:name`) or the catalog.
pub fn resolve_diagram(spec: &str) -> Result<MarkedGraphDiagram> {
    if let Some((path, wanted)) = split_file_spec(spec) {
        let text = std::fs::read_to_string(path)?;
        let all = select(parse_diagrams(&text)?, wanted, |d| d.name(), path)?;
        return Ok(all.into_iter().next().expect("non-empty selection"));
    }
    Ok(Catalog::load()?.diagram(spec)?.clone())
}

fn parse_endo(x: &Arc<Quandle>, text: &str) -> Result<QuandleMap> {
    let images = text
        .split(',')
        .map(|w| {
            w.trim()
                .parse::<usize>()
                .map_err(|_| Error::Format(format!("bad endomorphism `{text}`: expected comma-separated integers")))
        })
        .collect::<Result<Vec<_>>>()?;
    QuandleMap::from_one_based(x.clone(), x.clone(), &images)
}

fn endo_set(x: &Arc<Quandle>, set: &EndoSet) -> Result<Vec<QuandleMap>> {
    if set.endo.is_empty() {
        return Ok(enumerate_endos(x));
    }
    set.endo.iter().map(|e| parse_endo(x, e)).collect()
}

fn load_target(t: &Target) -> Result<(MarkedGraphDiagram, Arc<Quandle>)> {
    Ok((resolve_diagram(&t.diagram.diagram)?, resolve_quandle(&t.quandle.quandle)?))
}

fn load_quiver(a: &QuiverArgs) -> Result<Quiver> {
    let (d, x) = load_target(&a.target)?;
    let endos = endo_set(&x, &a.endos)?;
    build_quiver(&d, &x, &endos)
}

fn quandle_verify(spec: &str, format: Format) -> Result<Outcome> {
    let tables: Vec<(String, Vec<Vec<usize>>)> = match builtin(spec) {
        Ok(q) => vec![(q.name().to_string(), q.rows())],
        Err(Error::Lookup { valid, .. }) => match split_file_spec(spec) {
            Some((path, wanted)) => {
                let text = std::fs::read_to_string(path)?;
                select(parse_tables(&text)?, wanted, |t| &t.0, path)?
            }
            None => return Err(Error::Lookup { name: spec.to_string(), valid }),
        },
        Err(e) => return Err(e),
    };
    let mut reports = Vec::new();
    let mut text = String::new();
    let mut all_valid = true;
    for (name, rows) in &tables {
        let report = verify_axioms(rows)?;
        all_valid &= report.is_valid();
        let verdict = if report.is_valid() { "valid" } else { "invalid" };
        let _ = writeln!(text, "{name} (order {}): {verdict}", rows.len());
        for v in &report.violations {
            let _ = writeln!(text, "  {v}");
        }
        reports.push(json!({
            "name": name,
            "order": rows.len(),
            "valid": report.is_valid(),
            "violations": report.violations,
        }));
    }
    let text = if format == Format::Json { to_json(&reports) } else { text };
    Ok(Outcome { text, code: if all_valid { EXIT_OK } else { EXIT_MISMATCH } })
}

fn quandle_endos(spec: &str, count: bool, format: Format) -> Result<Outcome> {
    let x = resolve_quandle(spec)?;
    let endos = enumerate_endos(&x);
    let text = match (format, count) {
        (Format::Json, true) => to_json(&json!({ "quandle": x.name(), "count": endos.len() })),
        (Format::Json, false) => {
            let images: Vec<Vec<usize>> = endos.iter().map(|f| f.to_one_based()).collect();
            to_json(&json!({ "quandle": x.name(), "count": endos.len(), "endos": images }))
        }
        (_, true) => format!("{}\n", endos.len()),
        (_, false) => endos.iter().map(|f| format!("{f}\n")).collect(),
    };
    Ok(Outcome::ok(text))
}

/// Every stanza named by `spec`, unvalidated when read from a text file.
fn raw_diagrams(spec: &str) -> Result<Vec<(String, Vec<crate::diagram::Node>)>> {
    if let Some((path, wanted)) = split_file_spec(spec) {
        let text = std::fs::read_to_string(path)?;
        let t = text.trim_start();
        let stanzas = if t.starts_with('{') || t.starts_with('[') {
            parse_diagrams(&text)?.into_iter().map(|d| (d.name().to_string(), d.nodes().to_vec())).collect()
        } else {
            parse_stanzas(&text)?
        };
        return select(stanzas, wanted, |s| &s.0, path);
    }
    let catalog = Catalog::load()?;
    let diagrams: Vec<&MarkedGraphDiagram> = match catalog.get(spec) {
        Ok(entry) => entry.diagrams.iter().collect(),
        Err(_) => vec![catalog.diagram(spec)?],
    };
    Ok(diagrams.into_iter().map(|d| (d.name().to_string(), d.nodes().to_vec())).collect())
}

fn diagram_validate(spec: &str, format: Format) -> Result<Outcome> {
    let mut text = String::new();
    let mut docs = Vec::new();
    let mut all_valid = true;
    for (name, nodes) in raw_diagrams(spec)? {
        let report = validate_nodes(&nodes);
        all_valid &= report.is_valid();
        if report.is_valid() {
            let d = MarkedGraphDiagram::new(name.clone(), nodes)?;
            let verdict = label(&d.admissibility_report().verdict);
            let _ = writeln!(
                text,
                "{name}: valid ({} crossings, {} marked vertices, admissibility {verdict})",
                d.crossing_count(),
                d.marked_count()
            );
            docs.push(json!({
                "name": name,
                "valid": true,
                "violations": [],
                "crossings": d.crossing_count(),
                "marked_vertices": d.marked_count(),
                "admissibility": verdict,
            }));
        } else {
            let _ = writeln!(text, "{name}: invalid");
            for v in &report.violations {
                let _ = writeln!(text, "  {v}");
            }
            docs.push(json!({ "name": name, "valid": false, "violations": report.violations }));
        }
    }
    let text = if format == Format::Json { to_json(&docs) } else { text };
    Ok(Outcome { text, code: if all_valid { EXIT_OK } else { EXIT_MISMATCH } })
}

fn diagram_resolve(spec: &str, side: SideArg, format: Format) -> Result<Outcome> {
    let d = resolve_diagram(spec)?;
    let mut sides = Vec::new();
    if side != SideArg::Minus {
        sides.push((Sign::Positive, "L+"));
    }
    if side != SideArg::Plus {
        sides.push((Sign::Negative, "L-"));
    }
    let resolved: Vec<MarkedGraphDiagram> =
        sides.iter().map(|&(s, tag)| d.resolve(s).with_name(format!("{}/{tag}", d.name()))).collect();
    let text = if format == Format::Json {
        to_json(&resolved)
    } else {
        resolved.iter().map(serialize).collect::<Vec<_>>().join("\n")
    };
    Ok(Outcome::ok(text))
}

fn diagram_info(spec: &str, format: Format) -> Result<Outcome> {
    let d = resolve_diagram(spec)?;
    let arcs = arc_classes(&d).len();
    let mut doc = json!({
        "name": d.name(),
        "classical": d.is_classical(),
        "crossings": d.crossing_count(),
        "marked_vertices": d.marked_count(),
        "ch_number": d.ch_number(),
        "writhe": d.writhe(),
        "arcs": arcs,
    });
    let mut text = format!(
        "name: {}\nkind: {}\ncrossings: {}\nmarked vertices: {}\nch-number: {}\nwrithe: {}\narcs: {arcs}\n",
        d.name(),
        if d.is_classical() { "classical" } else { "surface" },
        d.crossing_count(),
        d.marked_count(),
        d.ch_number(),
        d.writhe(),
    );
    if d.is_classical() {
        let c = d.component_count()?;
        doc["components"] = json!(c);
        let _ = writeln!(text, "components: {c}");
    } else {
        let report = d.admissibility_report();
        let euler = report.plus.components as i64 + report.minus.components as i64 - d.marked_count() as i64;
        let verdict = label(&report.verdict);
        let _ = writeln!(text, "L+ components: {}\nL- components: {}", report.plus.components, report.minus.components);
        let _ = writeln!(text, "euler characteristic: {euler}\nadmissibility: {verdict}");
        doc["euler_characteristic"] = json!(euler);
        doc["admissibility"] = serde_json::to_value(&report)?;
    }
    let text = if format == Format::Json { to_json(&doc) } else { text };
    Ok(Outcome::ok(text))
}

fn color_count(t: &Target, format: Format) -> Result<Outcome> {
    let (d, x) = load_target(t)?;
    let n = count_colorings(&d, &x);
    let text = if format == Format::Json {
        to_json(&json!({ "diagram": d.name(), "quandle": x.name(), "count": n }))
    } else {
        format!("{n}\n")
    };
    Ok(Outcome::ok(text))
}

fn color_list(t: &Target, format: Format) -> Result<Outcome> {
    let (d, x) = load_target(t)?;
    let all = enumerate_colorings(&d, &x);
    let text = if format == Format::Json { to_json(&all) } else { all.iter().map(|c| format!("{c}\n")).collect() };
    Ok(Outcome::ok(text))
}

fn quiver_text(q: &Quiver) -> String {
    let poly = q.in_degree_polynomial();
    let mut s = format!(
        "# quiver {} over {}: {} vertices, {} edges, |S| = {}\n# in-degree polynomial: {poly}\n",
        q.name(),
        q.quandle().name(),
        q.vertices().len(),
        q.edges().len(),
        q.endos().len()
    );
    for (i, f) in q.endos().iter().enumerate() {
        let _ = writeln!(s, "s{} {f}", i + 1);
    }
    let (ins, outs) = (q.in_degrees(), q.out_degrees());
    for (i, c) in q.vertices().iter().enumerate() {
        let _ = writeln!(s, "v{i} {c} in {} out {}", ins[i], outs[i]);
    }
    let mut groups: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    for e in q.edges() {
        groups.entry((e.from, e.to)).or_default().push(format!("s{}", e.endo + 1));
    }
    for ((from, to), labels) in groups {
        let _ = writeln!(s, "v{from} -> v{to} x{} {}", labels.len(), labels.join(","));
    }
    s
}

fn quiver_build(a: &QuiverArgs, format: Format) -> Result<Outcome> {
    let q = load_quiver(a)?;
    let text = match format {
        Format::Json => export_json(&q),
        Format::Dot => export_dot(&q),
        Format::Text => quiver_text(&q),
    };
    Ok(Outcome::ok(text))
}

fn quiver_poly(a: &QuiverArgs, format: Format) -> Result<Outcome> {
    let q = load_quiver(a)?;
    let p = q.in_degree_polynomial();
    let text = if format == Format::Json {
        to_json(&json!({
            "diagram": q.name(),
            "quandle": q.quandle().name(),
            "endos": q.endos().len(),
            "vertices": q.vertices().len(),
            "polynomial": p,
            "checksum": p.satisfies_checksum(q.endos().len()),
        }))
    } else {
        format!("{p}\n")
    };
    Ok(Outcome::ok(text))
}

fn quiver_iso(a: &QuiverArgs, other: &str, expect: Option<Expect>, format: Format) -> Result<Outcome> {
    let q = load_quiver(a)?;
    let d2 = resolve_diagram(other)?;
    let q2 = build_quiver(&d2, q.quandle(), q.endos())?;
    let iso = are_isomorphic(&q, &q2)?;
    let code = match expect {
        Some(Expect::Iso) if !iso => EXIT_MISMATCH,
        Some(Expect::NonIso) if iso => EXIT_MISMATCH,
        _ => EXIT_OK,
    };
    let text = if format == Format::Json {
        let side = |q: &Quiver| json!({ "diagram": q.name(), "vertices": q.vertices().len(), "polynomial": q.in_degree_polynomial() });
        to_json(
            &json!({ "quandle": q.quandle().name(), "endos": q.endos().len(), "first": side(&q), "second": side(&q2), "isomorphic": iso }),
        )
    } else {
        let mut s = String::new();
        for x in [&q, &q2] {
            let _ = writeln!(s, "{}: {} vertices, {}", x.name(), x.vertices().len(), x.in_degree_polynomial());
        }
        let _ = writeln!(s, "isomorphic: {iso}");
        s
    };
    Ok(Outcome { text, code })
}

fn quiver_remark(a: &QuiverArgs, format: Format) -> Result<Outcome> {
    let (d, x) = load_target(&a.target)?;
    let endos = endo_set(&x, &a.endos)?;
    let report = check_remark(&d, &x, &endos)?;
    let code = if report.holds() { EXIT_OK } else { EXIT_MISMATCH };
    let text = if format == Format::Json {
        to_json(
            &json!({ "diagram": d.name(), "quandle": x.name(), "holds": report.holds(), "plus": report.plus, "minus": report.minus }),
        )
    } else {
        let line = |e: &crate::quiver::Embedding| serde_json::to_string(e).expect("embedding JSON");
        format!("L+: {}\nL-: {}\nholds: {}\n", line(&report.plus), line(&report.minus), report.holds())
    };
    Ok(Outcome { text, code })
}

fn table_reproduce(format: Format) -> Result<Outcome> {
    let report = table::reproduce(&Catalog::load()?)?;
    let code = if report.consistent() { EXIT_OK } else { EXIT_MISMATCH };
    let text = if format == Format::Json { report.to_json() } else { report.to_text() };
    Ok(Outcome { text, code })
}
