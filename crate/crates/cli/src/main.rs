//! `eulerpair`: tables, enumerations, derived pair systems and the identity
//! suite from the command line.
//!
//! Exit status is 0 on success, 1 when a check fails and 2 for usage, input
//! or parse errors.

mod output;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use eulerpair::analyze::{run_check, Check};
use eulerpair::dsl::{format_family, format_poly, parse_spec, SpecSource};
use eulerpair::enumerate::{joint_distribution, stat_poly, Family, FamilyFilter, StatName};
use eulerpair::identities::{lookup as lookup_check, registry, verify_all, CheckReport, SuiteReport};
use eulerpair::recurrence::catalog::{lookup, CatalogValue};
use eulerpair::recurrence::verify_duality;
use eulerpair::series::{verify_named, SERIES_IDENTITIES};
use eulerpair::{DegreeBound, IntPoly, RecurrenceSpec};
use output::{render_rows, render_table, Format, Row};
use serde_json::json;

#[derive(Parser)]
#[command(name = "eulerpair", version, about = "Eulerian recurrences, pair systems and their combinatorial checks")]
struct Cli {
    /// Worker threads for enumeration and the identity suite.
    #[arg(long, global = true, env = "EULERPAIR_THREADS")]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Write to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Iterate a catalog recurrence or pair system.
    Compute {
        name: String,
        #[arg(long)]
        n: usize,
        /// Print every index from the start, not just `n`.
        #[arg(long)]
        all: bool,
    },
    /// Brute-force statistic distributions over a family.
    Enumerate {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        stats: Vec<String>,
        #[arg(long, default_value = "none")]
        filter: String,
        /// Weight each element by q^weight.
        #[arg(long)]
        q: Option<i64>,
        #[arg(long, default_value = "neg")]
        weight: String,
    },
    /// Derive the pair system of a `.eurec` recurrence.
    Derive {
        file: PathBuf,
        /// Also iterate both sides and check the duality up to this index.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run identity checks, by name or `all`.
    Verify {
        name: String,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Run analyzers on a catalog polynomial or a `.eurec` recurrence.
    Analyze {
        target: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Window for symmetry-type checks; defaults to the degree.
        #[arg(long)]
        window: Option<usize>,
    },
    /// Check a series identity, by name or `all`.
    Series {
        identity: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
}

enum Failure {
    /// Exit 2.
    Input(String),
    /// Exit 2, with diagnostics already in their final form.
    Diagnostics(String),
    /// Exit 1, after the output has been written.
    Check,
}

impl From<eulerpair::Error> for Failure {
    fn from(e: eulerpair::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, (String, Failure)>;

fn input<T>(r: eulerpair::Result<T>) -> Result<T, (String, Failure)> {
    r.map_err(|e| (String::new(), Failure::from(e)))
}

fn parse_name<T: std::str::FromStr<Err = eulerpair::Error>>(s: &str) -> Result<T, (String, Failure)> {
    input(s.parse())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        eulerpair::set_threads(n);
    }
    let format = if cli.json { Format::Json } else { cli.format };
    let result = run(cli.command, format);
    let (text, code) = match result {
        Ok(text) => (text, ExitCode::SUCCESS),
        Err((text, Failure::Check)) => (text, ExitCode::from(1)),
        Err((text, Failure::Input(message))) => {
            eprintln!("error: {message}");
            (text, ExitCode::from(2))
        }
        Err((text, Failure::Diagnostics(message))) => {
            eprintln!("{message}");
            (text, ExitCode::from(2))
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    code
}

fn run(command: Command, format: Format) -> Outcome {
    match command {
        Command::Compute { name, n, all } => compute(&name, n, all, format),
        Command::Enumerate { family, n, stats, filter, q, weight } => {
            enumerate(&family, n, &stats, &filter, q.map(|q| (weight, q)), format)
        }
        Command::Derive { file, n } => derive(&file, n, format),
        Command::Verify { name, n_max } => verify(&name, n_max, format),
        Command::Analyze { target, n, checks, window } => analyze(&target, n, &checks, window, format),
        Command::Series { identity, order } => series(&identity, order, format),
    }
}

fn compute(name: &str, n: usize, all: bool, format: Format) -> Outcome {
    let entry = input(lookup(name))?;
    let start = entry.start_index();
    let values = input(entry.values(n))?;
    let mut rows = Vec::new();
    for (i, value) in values.into_iter().enumerate() {
        let k = start + i;
        if !all && k != n {
            continue;
        }
        match value {
            CatalogValue::Single(poly) => rows.push(Row { n: k, part: "", poly }),
            CatalogValue::Pair(e, o) => {
                rows.push(Row { n: k, part: "E", poly: e });
                rows.push(Row { n: k, part: "O", poly: o });
            }
        }
    }
    if all && format == Format::Text && rows.len() == 1 && rows[0].part.is_empty() {
        return Ok(format!("{}: {}\n", rows[0].n, rows[0].poly));
    }
    Ok(render_rows(&rows, format, json!({ "name": name, "start": start })))
}

fn enumerate(
    family: &str,
    n: usize,
    stats: &[String],
    filter: &str,
    weight: Option<(String, i64)>,
    format: Format,
) -> Outcome {
    let family: Family = parse_name(family)?;
    let filter: FamilyFilter = parse_name(filter)?;
    let mut names: Vec<StatName> = stats.iter().map(|s| parse_name(s)).collect::<Result<_, _>>()?;
    let weight = match weight {
        Some((w, q)) => {
            let w: StatName = parse_name(&w)?;
            if !names.contains(&w) {
                names.push(w);
            }
            Some((w, q))
        }
        None => None,
    };
    let dist = input(joint_distribution(family, n, filter, &names))?;
    let shown: Vec<StatName> = stats.iter().map(|s| parse_name(s)).collect::<Result<_, _>>()?;
    if shown.len() == 1 || weight.is_some() {
        let mut rows = Vec::new();
        for &stat in &shown {
            rows.push(Row { n, part: stat.as_str(), poly: input(stat_poly(&dist, stat, weight))? });
        }
        if rows.len() == 1 && format == Format::Text {
            return Ok(format!("{}\n", rows[0].poly));
        }
        let meta = json!({ "family": family.as_str(), "filter": filter.as_str(), "q": weight.map(|w| w.1) });
        return Ok(render_rows(&rows, format, meta));
    }
    let header: Vec<String> = names.iter().map(|s| s.as_str().to_string()).chain(["count".to_string()]).collect();
    let cells: Vec<Vec<String>> = dist
        .entries
        .iter()
        .map(|(key, count)| key.iter().map(u32::to_string).chain([count.to_string()]).collect())
        .collect();
    if format == Format::Text {
        let lines: String = dist
            .entries
            .iter()
            .map(|(key, count)| {
                let pairs: Vec<String> = names.iter().zip(key).map(|(s, v)| format!("{s}={v}")).collect();
                format!("{}: {count}\n", pairs.join(" "))
            })
            .collect();
        return Ok(lines);
    }
    Ok(render_table(&header, &cells, format, dist.to_json()))
}

fn read_spec(path: &Path) -> Result<(String, RecurrenceSpec), (String, Failure)> {
    let src = SpecSource::from_file(path)
        .map_err(|e| (String::new(), Failure::Input(format!("cannot read {}: {e}", path.display()))))?;
    match parse_spec(&src) {
        Ok(parsed) => {
            for w in &parsed.warnings {
                eprintln!("{}", w.render(&src.name));
            }
            Ok((parsed.name, parsed.spec))
        }
        Err(diags) => {
            let rendered: Vec<String> = diags.iter().map(|d| d.render(&src.name)).collect();
            Err((String::new(), Failure::Diagnostics(rendered.join("\n"))))
        }
    }
}

fn derive(file: &Path, n: Option<usize>, format: Format) -> Outcome {
    let (name, spec) = read_spec(file)?;
    let pair = spec.derive_pair().map_err(|e| (String::new(), Failure::Input(format!("{name}: {e}"))))?;
    let families = [
        ("p", &pair.p),
        ("q", &pair.q),
        ("r", &pair.r),
        ("u", &pair.u),
        ("v", &pair.v),
        ("w", &pair.w),
    ];
    let mut text = format!("pair system of {name} (from n = {})\n", pair.start_index);
    for (label, fam) in families {
        text.push_str(&format!("  {label} = {}\n", format_family(fam)));
    }
    text.push_str(&format!(
        "  E_{0} = {1}\n  O_{0} = {2}\n",
        pair.start_index,
        format_poly(&pair.e_initial),
        format_poly(&pair.o_initial)
    ));
    let mut json = json!({
        "name": name,
        "start": pair.start_index,
        "families": families.iter().map(|(l, f)| (l.to_string(), json!(format_family(f)))).collect::<serde_json::Map<_, _>>(),
        "e_initial": pair.e_initial.to_string(),
        "o_initial": pair.o_initial.to_string(),
    });
    let mut passed = true;
    if let Some(n) = n {
        let report = input(verify_duality(&spec, &pair, n))?;
        let pairs = input(pair.iterate(n.max(pair.start_index)))?;
        for (i, (e, o)) in pairs.iter().enumerate() {
            text.push_str(&format!("{} E: {e}\n{} O: {o}\n", pair.start_index + i, pair.start_index + i));
        }
        passed = report.passed();
        text.push_str(&format!("duality n≤{n} {}\n", if passed { "PASS" } else { "FAIL" }));
        json["duality"] = json!({
            "n_max": n,
            "passed": passed,
            "values": pairs.iter().map(|(e, o)| json!({ "even": e.to_string(), "odd": o.to_string() })).collect::<Vec<_>>(),
        });
    }
    let out = if format == Format::Json { format!("{}\n", serde_json::to_string_pretty(&json).expect("json")) } else { text };
    if passed {
        Ok(out)
    } else {
        Err((out, Failure::Check))
    }
}

fn verify(name: &str, n_max: Option<usize>, format: Format) -> Outcome {
    let suite = if name == "all" {
        let budgets: BTreeMap<String, usize> = match n_max {
            Some(k) => registry().iter().map(|c| (c.name.to_string(), k)).collect(),
            None => BTreeMap::new(),
        };
        input(verify_all(&budgets))?
    } else {
        let check = input(lookup_check(name))?;
        SuiteReport { reports: vec![check.run(n_max.unwrap_or(check.default_n))] }
    };
    let out = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&suite.to_json()).expect("json")),
        _ => suite_text(&suite),
    };
    if suite.passed() {
        Ok(out)
    } else {
        Err((out, Failure::Check))
    }
}

fn suite_text(suite: &SuiteReport) -> String {
    let mut out = String::new();
    for r in &suite.reports {
        out.push_str(&r.line());
        out.push('\n');
    }
    let failures: Vec<&CheckReport> = suite.failures().collect();
    if suite.reports.len() > 1 {
        out.push_str(&format!("{} of {} passed\n", suite.reports.len() - failures.len(), suite.reports.len()));
    }
    for r in failures {
        if let Some(f) = &r.failure {
            out.push_str(&format!("  {}: {f}\n", r.name));
        }
    }
    out
}

fn analyze_targets(target: &str, n: usize) -> Result<Vec<(&'static str, IntPoly)>, (String, Failure)> {
    if let Ok(entry) = lookup(target) {
        let values = input(entry.values(n))?;
        return Ok(match values.into_iter().last().expect("nonempty") {
            CatalogValue::Single(p) => vec![("", p)],
            CatalogValue::Pair(e, o) => vec![("E", e), ("O", o)],
        });
    }
    let path = Path::new(target);
    if path.exists() || target.ends_with(".eurec") {
        let (_, spec) = read_spec(path)?;
        return Ok(vec![("", input(spec.at(n))?)]);
    }
    Err((String::new(), Failure::Input(format!("unknown name or file '{target}'"))))
}

fn analyze(target: &str, n: usize, checks: &[String], window: Option<usize>, format: Format) -> Outcome {
    let checks: Vec<Check> = if checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        checks.iter().map(|c| parse_name(c)).collect::<Result<_, _>>()?
    };
    let mut cells = Vec::new();
    let mut reports = Vec::new();
    let mut passed = true;
    for (part, poly) in analyze_targets(target, n)? {
        let w = DegreeBound(window.unwrap_or_else(|| poly.degree().unwrap_or(0)));
        for &check in &checks {
            let (verdict, witness, json) = match run_check(check, &poly, w) {
                Ok(r) => (r.verdict, r.witness.clone().unwrap_or_default(), r.to_json()),
                Err(e) => (false, e.to_string(), json!({ "check": check.as_str(), "input": poly.to_string(), "verdict": false, "error": e.to_string() })),
            };
            passed &= verdict;
            let label = if part.is_empty() { n.to_string() } else { format!("{n} {part}") };
            cells.push(vec![label, check.as_str().to_string(), if verdict { "PASS" } else { "FAIL" }.to_string(), witness]);
            let mut json = json;
            json["part"] = json!(part);
            reports.push(json);
        }
    }
    let header = ["n", "check", "verdict", "witness"].map(String::from).to_vec();
    let out = if format == Format::Text {
        cells
            .iter()
            .map(|c| if c[3].is_empty() { format!("{} {} {}\n", c[0], c[1], c[2]) } else { format!("{} {} {}: {}\n", c[0], c[1], c[2], c[3]) })
            .collect()
    } else {
        render_table(&header, &cells, format, json!({ "target": target, "n": n, "reports": reports }))
    };
    if passed {
        Ok(out)
    } else {
        Err((out, Failure::Check))
    }
}

fn series(identity: &str, order: usize, format: Format) -> Outcome {
    let names: Vec<&str> = if identity == "all" { SERIES_IDENTITIES.to_vec() } else { vec![identity] };
    let mut out = String::new();
    let mut reports = Vec::new();
    let mut passed = true;
    for name in names {
        let report = input(verify_named(name, order))?;
        passed &= report.passed();
        out.push_str(&format!("{name} order {order} {}\n", if report.passed() { "PASS" } else { "FAIL" }));
        if let Some((k, l, r)) = &report.first_difference {
            out.push_str(&format!("  entry {k}: {l} != {r}\n"));
        }
        let mut json = report.to_json();
        json["name"] = json!(name);
        reports.push(json);
    }
    if format == Format::Json {
        out = format!("{}\n", serde_json::to_string_pretty(&json!(reports)).expect("json"));
    }
    if passed {
        Ok(out)
    } else {
        Err((out, Failure::Check))
    }
}
