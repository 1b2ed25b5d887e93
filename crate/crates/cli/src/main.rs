use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use sofic::oracle::{cross_validate, OracleBounds};
use sofic::report::AttractorEntry;
use sofic::{essentialize, export_dot, parse_graph, Analysis, LabelledGraph, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Decide chain-transitivity and chain-mixing
    Check,
    /// Print the linking graph G/≈
    Linking,
    /// List every attractor
    Attractors,
    /// Cross-validate against the brute-force oracles
    Oracle,
    /// Write the input graph in DOT format
    ExportDot,
}

/// Chain relation, chain-mixing and attractors of the sofic shift presented
/// by a labelled graph.
#[derive(Debug, Parser)]
#[command(name = "sofic", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Graph file
    input: PathBuf,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// With `check`, exit 1 unless the shift is chain-mixing (and so chain-transitive)
    #[arg(long)]
    strict: bool,
    /// Longest window inspected by `oracle`
    #[arg(long, value_name = "N", default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    max_word_len: u64,
    /// Longest chain inspected by `oracle`
    #[arg(long, value_name = "N", default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    max_chain_len: u64,
    /// Extension budget for window enumeration in `oracle`
    #[arg(long, value_name = "N", default_value_t = sofic::oracle::DEFAULT_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Write output here instead of stdout (`linking` writes DOT for `.dot` paths)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

enum Failure {
    Input(String),
    Empty(String),
}

struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn load(path: &Path) -> Result<(LabelledGraph, LabelledGraph), Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let g = parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let ess = essentialize(&g);
    if ess.is_empty() {
        return Err(Failure::Empty(format!(
            "{}: no vertex lies on a biinfinite path, the shift is empty",
            path.display()
        )));
    }
    Ok((g, ess))
}

fn removed(g: &LabelledGraph, ess: &LabelledGraph) -> Vec<String> {
    g.vertices().iter().filter(|v| ess.vertex_index(v).is_none()).cloned().collect()
}

fn removed_line(names: &[String]) -> String {
    if names.is_empty() {
        "removed by essentialization: none\n".into()
    } else {
        format!("removed by essentialization: {}\n", names.join(" "))
    }
}

fn json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let (g, ess) = load(&cli.input)?;
    let gone = removed(&g, &ess);
    if cli.command == Command::ExportDot {
        let stranded: Vec<usize> = gone.iter().filter_map(|v| g.vertex_index(v)).collect();
        return Ok(Outcome::ok(export_dot(&g, Some(&stranded))));
    }
    if cli.json && !gone.is_empty() && cli.command != Command::Check {
        eprint!("{}", removed_line(&gone));
    }
    let analysis = Analysis::new(&ess).expect("essentialized graph is essential");

    match cli.command {
        Command::Check => {
            let transitive = analysis.is_chain_transitive();
            let mixing = analysis.is_chain_mixing();
            let text = if cli.json {
                Report::from_analysis(&analysis, gone).to_json() + "\n"
            } else {
                let mut s = removed_line(&gone);
                writeln!(s, "chain-transitive: {transitive}").unwrap();
                writeln!(s, "chain-mixing: {mixing}").unwrap();
                if let Some(p) = analysis.quotient_period() {
                    writeln!(s, "quotient period: {p}").unwrap();
                }
                s
            };
            let code = if cli.strict && !(transitive && mixing) { 1 } else { 0 };
            Ok(Outcome { text, code })
        }
        Command::Linking => {
            let lg = analysis.linking();
            let q = lg.quotient();
            let to_dot = cli.out.as_ref().is_some_and(|p| p.extension().is_some_and(|e| e == "dot"));
            let text = if cli.json {
                json(&Report::from_analysis(&analysis, gone).quotient)
            } else if to_dot {
                export_dot(q, None)
            } else {
                let mut s = String::new();
                write!(s, "# {}", removed_line(&gone)).unwrap();
                for v in 0..ess.vertex_count() {
                    writeln!(s, "# {} -> {}", ess.vertex_name(v), q.vertex_name(lg.project(v))).unwrap();
                }
                s.push_str(&q.to_string());
                s
            };
            Ok(Outcome::ok(text))
        }
        Command::Attractors => {
            let entries: Vec<AttractorEntry> =
                analysis.attractors().iter().map(|a| AttractorEntry::new(a, &analysis)).collect();
            let text = if cli.json {
                json(&entries)
            } else {
                let mut s = removed_line(&gone);
                writeln!(s, "{} attractors", entries.len()).unwrap();
                for e in &entries {
                    writeln!(s, "{{{}}} <- {{{}}}", e.quotient_vertices.join(" "), e.preimage_vertices.join(" "))
                        .unwrap();
                }
                s
            };
            Ok(Outcome::ok(text))
        }
        Command::Oracle => {
            let bounds = OracleBounds {
                max_word_len: cli.max_word_len as usize,
                max_chain_len: cli.max_chain_len as usize,
                budget: cli.budget as usize,
            };
            let report = cross_validate(&ess, bounds).expect("essentialized graph is essential");
            let text = if cli.json {
                json(&report)
            } else {
                let mut s = removed_line(&gone);
                for c in &report.checks {
                    match &c.skipped {
                        Some(why) if c.checked == 0 => writeln!(s, "{}: skipped ({why})", c.name).unwrap(),
                        _ => writeln!(s, "{}: {} checked, {} violations", c.name, c.checked, c.violations).unwrap(),
                    }
                    for ex in &c.examples {
                        writeln!(s, "  {ex}").unwrap();
                    }
                }
                writeln!(s, "{}", if report.is_clean() { "agreement" } else { "DISAGREEMENT" }).unwrap();
                s
            };
            Ok(Outcome { text, code: if report.is_clean() { 0 } else { 4 } })
        }
        Command::ExportDot => unreachable!(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, &out.text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Empty(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
