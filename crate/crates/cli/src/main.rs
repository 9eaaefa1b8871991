use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cgbounds::bounds::{
    builtin_corpus, enumerate_transitive_small, load_corpus_dir, parse_group_file, scan_corpus, verify_linear,
    verify_perm, verify_spec, write_group_file, write_perm_group, GroupFile, ScanRow, Theorem, Verdict,
};
use cgbounds::complen::{
    composition_length_analytic, composition_length_oracle, composition_length_with, degree_analytic, EngineOptions,
    DEFAULT_PROBE_BUDGET,
};
use cgbounds::constructions::{Built, ConstructionSpec};
use cgbounds::PermGroup;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

mod report;

use report::{print_report, print_summary, Format};

#[derive(Parser)]
#[command(
    name = "cgbounds",
    version,
    about = "Composition lengths and bound checks for finite groups"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = FormatArg::Table, global = true)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Build a construction and write it as a group file.
    Construct {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Composition length of a construction or a group file.
    Complen {
        input: String,
        /// Cross-check with the chief-series oracle (small groups only).
        #[arg(long)]
        oracle: bool,
        /// Closed form for named families; needs no group to be built.
        #[arg(long)]
        analytic: bool,
        /// Random elements tried per simplicity probe.
        #[arg(long, default_value_t = DEFAULT_PROBE_BUDGET)]
        budget: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check one group against one bound.
    Verify {
        input: String,
        #[arg(long)]
        theorem: Theorem,
    },
    /// Check every group of a corpus against one bound.
    Scan {
        #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
        dir: Option<PathBuf>,
        /// Every transitive group of degree 2 to 6.
        #[arg(long)]
        builtin: bool,
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// List the transitive groups of degree n up to conjugacy (n <= 6).
    EnumerateTransitive { n: usize },
}

/// A command-line input: an existing file is read as a group file,
/// anything else is parsed as a construction.
enum Input {
    Spec(ConstructionSpec),
    File(PathBuf, GroupFile),
}

fn read_input(s: &str) -> Result<Input, String> {
    let path = Path::new(s);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", s, e))?;
        let g = parse_group_file(&text).map_err(|e| format!("{}: {}", s, e))?;
        return Ok(Input::File(path.to_path_buf(), g));
    }
    s.parse().map(Input::Spec).map_err(|e| format!("{:?}: {}", s, e))
}

fn file_id(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let format = match cli.format {
        FormatArg::Table => Format::Table,
        FormatArg::Records => Format::Records,
    };
    match run(cli.command, format) {
        Ok(violation) => ExitCode::from(if violation { 2 } else { 0 }),
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

/// Runs a command; `Ok(true)` means some verdict was a violation.
fn run(command: Command, format: Format) -> Result<bool, String> {
    let err = |e: cgbounds::Error| e.to_string();
    match command {
        Command::Construct { spec, output } => {
            let spec: ConstructionSpec = spec.parse().map_err(err)?;
            let text = match spec.build().map_err(err)? {
                Built::Perm(g) => write_perm_group(&g),
                Built::Linear(h) => write_group_file(&GroupFile::Linear(h)),
            };
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|e| format!("{}: {}", path.display(), e))?,
                None => print!("{}", text),
            }
            Ok(false)
        }
        Command::Complen {
            input,
            oracle,
            analytic,
            budget,
            seed,
        } => {
            let mut opts = EngineOptions {
                probe_budget: budget,
                ..EngineOptions::default()
            };
            if let Some(s) = seed {
                opts.seed = s;
            }
            complen(read_input(&input)?, oracle, analytic, &opts, format)?;
            Ok(false)
        }
        Command::Verify { input, theorem } => {
            let opts = EngineOptions::default();
            let report = match read_input(&input)? {
                Input::Spec(spec) => verify_spec(&spec, theorem, &opts),
                Input::File(path, GroupFile::Perm(g)) => verify_perm(&file_id(&path), &g, theorem, &opts),
                Input::File(path, GroupFile::Linear(h)) if theorem == Theorem::T14 => {
                    verify_linear(&file_id(&path), &h, &opts, None)
                }
                Input::File(..) => return Err(format!("a matrix group can only be checked against {}", Theorem::T14)),
            }
            .map_err(err)?;
            print_report(&report, format);
            Ok(report.verdict == Verdict::Violation)
        }
        Command::Scan {
            dir,
            builtin,
            theorem,
            jobs,
        } => {
            let entries = match (dir, builtin) {
                (_, true) => builtin_corpus(),
                (Some(d), false) => load_corpus_dir(&d).map_err(|e| format!("{}: {}", d.display(), e))?,
                (None, false) => unreachable!("clap requires a directory or --builtin"),
            };
            let scan = scan_corpus(&entries, theorem, jobs, &EngineOptions::default()).map_err(err)?;
            for row in &scan.rows {
                match row {
                    ScanRow::Report(r) => print_report(r, format),
                    ScanRow::Failed { id, error } => match format {
                        Format::Table => println!("{:<24} FAILED {}", id, error),
                        Format::Records => println!("{}", json!({ "id": id, "error": error })),
                    },
                }
            }
            print_summary(&scan.summary, theorem, format);
            Ok(scan.summary.violations > 0)
        }
        Command::EnumerateTransitive { n } => {
            let groups = enumerate_transitive_small(n).map_err(err)?;
            for (i, g) in groups.iter().enumerate() {
                let id = format!("n{}_{}", n, i + 1);
                match format {
                    Format::Table => print!("# {} order {}\n{}\n", id, g.order(), write_perm_group(g)),
                    Format::Records => println!(
                        "{}",
                        json!({ "id": id, "degree": n, "order": g.order().to_string(), "group": write_perm_group(g) })
                    ),
                }
            }
            Ok(false)
        }
    }
}

fn complen(input: Input, oracle: bool, analytic: bool, opts: &EngineOptions, format: Format) -> Result<(), String> {
    let err = |e: cgbounds::Error| e.to_string();
    let (id, spec) = match &input {
        Input::Spec(s) => (s.to_string(), Some(s)),
        Input::File(p, _) => (file_id(p), None),
    };
    let mut record = json!({ "id": id });
    if analytic {
        let spec = spec.ok_or("--analytic needs a construction, not a file")?;
        record["n"] = degree_analytic(spec).to_string().into();
        record["analytic"] = composition_length_analytic(spec).map_err(err)?.to_string().into();
    } else {
        let g: PermGroup = match input {
            Input::Spec(s) => s.build_perm().map_err(|e| match e {
                cgbounds::Error::DegreeCap { .. } => format!("{}; try --analytic", e),
                e => e.to_string(),
            })?,
            Input::File(_, GroupFile::Perm(g)) => g,
            Input::File(_, GroupFile::Linear(h)) => h.to_perm(opts.degree_cap).map_err(err)?,
        };
        let r = composition_length_with(&g, opts).map_err(err)?;
        record["n"] = g.degree().into();
        record["order"] = g.order().to_string().into();
        record["c"] = r.length.into();
        record["certainty"] = r.certainty.to_string().into();
        if oracle {
            let o = composition_length_oracle(&g).map_err(err)?;
            record["oracle"] = o.into();
            record["agrees"] = (o == r.length).into();
        }
    }
    match format {
        Format::Records => println!("{}", record),
        Format::Table => {
            let fields: Vec<String> = record
                .as_object()
                .expect("record is an object")
                .iter()
                .map(|(k, v)| format!("{}={}", k, v.as_str().map_or_else(|| v.to_string(), str::to_string)))
                .collect();
            println!("{}", fields.join("  "));
        }
    }
    if let Some(false) = record.get("agrees").and_then(|v| v.as_bool()) {
        return Err("engine and oracle disagree".into());
    }
    Ok(())
}
