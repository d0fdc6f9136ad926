use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use cuf_iga_bench::report::{to_csv, to_markdown};
use cuf_iga_bench::{builtin, compare, run_case, BenchError, CaseResult, CaseSpec, Profile};
use rayon::prelude::*;

/// Runs the laminated plate benchmark cases and compares them with the
/// published values.
#[derive(Parser)]
#[command(name = "cufbench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the builtin cases.
    List,
    /// Print a builtin case as JSON.
    Show { case: String },
    /// Run a builtin case, a table group (`table3`), `all`, or a JSON case file.
    Run(RunArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Md,
}

#[derive(clap::Args)]
struct RunArgs {
    target: String,
    /// Elements per direction, overriding the case.
    #[arg(long)]
    mesh: Option<usize>,
    /// Spline degree, overriding the case.
    #[arg(long)]
    degree: Option<usize>,
    /// Shear stabilization parameter; turns stabilization on.
    #[arg(long, conflicts_with = "no_stabilization")]
    alpha: Option<f64>,
    #[arg(long)]
    no_stabilization: bool,
    #[arg(long, env = "CUFBENCH_OUT", default_value = "results")]
    out: PathBuf,
    /// Output formats; both when omitted.
    #[arg(long, value_enum)]
    format: Vec<Format>,
    #[arg(long, value_enum, default_value_t = Profile::Paper)]
    tolerance_profile: Profile,
}

fn load_cases(target: &str) -> Result<Vec<CaseSpec>> {
    let path = Path::new(target);
    if path.extension().is_some_and(|e| e == "json") {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        let cases = if value.is_array() {
            let specs: Vec<CaseSpec> =
                serde_json::from_value(value).map_err(|e| BenchError::Spec(e.to_string()))?;
            for s in &specs {
                s.validate()?;
            }
            specs
        } else {
            vec![CaseSpec::from_json(&text)?]
        };
        return Ok(cases);
    }
    let cases = builtin::select(target);
    if cases.is_empty() {
        return Err(BenchError::UnknownCase(target.into()).into());
    }
    Ok(cases)
}

fn apply_overrides(spec: &mut CaseSpec, args: &RunArgs) {
    if let Some(m) = args.mesh {
        spec.mesh = m;
    }
    if let Some(p) = args.degree {
        spec.degree = p;
    }
    if let Some(a) = args.alpha {
        spec.stabilization.enabled = true;
        spec.stabilization.alpha = a;
    }
    if args.no_stabilization {
        spec.stabilization.enabled = false;
    }
}

/// Writes through a temporary sibling and renames, so readers never see a
/// partial file.
fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

fn write_outputs(dir: &Path, stem: &str, results: &[CaseResult], formats: &[Format]) -> Result<()> {
    for f in formats {
        match f {
            Format::Csv => write_atomic(&dir.join(format!("{stem}.csv")), &to_csv(results)?)?,
            Format::Md => write_atomic(&dir.join(format!("{stem}.md")), &to_markdown(results))?,
        }
    }
    Ok(())
}

fn run(args: RunArgs) -> Result<ExitCode> {
    let mut specs = load_cases(&args.target)?;
    for s in &mut specs {
        apply_overrides(s, &args);
        s.validate()?;
    }
    let formats = if args.format.is_empty() {
        vec![Format::Csv, Format::Md]
    } else {
        args.format.clone()
    };
    fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;

    let outcomes: Vec<Result<CaseResult>> = specs
        .par_iter()
        .map(|s| {
            let r = run_case(s)?;
            write_outputs(&args.out, &r.name, std::slice::from_ref(&r), &formats)?;
            eprintln!("{}: done in {:.1} s", r.name, r.runtime_seconds);
            Ok(r)
        })
        .collect();

    let mut results = Vec::new();
    let mut errors = Vec::new();
    for o in outcomes {
        match o {
            Ok(r) => results.push(r),
            Err(e) => errors.push(format!("{e:#}")),
        }
    }
    write_outputs(&args.out, "summary", &results, &formats)?;
    let mut comparison = compare(&results, args.tolerance_profile);
    comparison.errors = errors;
    let report = comparison.render();
    write_atomic(&args.out.join("report.md"), &report)?;
    print!("{report}");
    Ok(ExitCode::from(comparison.exit_code() as u8))
}

fn main() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::List => {
            for c in builtin::all() {
                println!("{:<24} {} | {} | {}", c.name, c.table, c.row, c.column);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Show { case } => {
            let Some(c) = builtin::find(&case) else {
                bail!(BenchError::UnknownCase(case))
            };
            println!("{}", c.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Run(args) => run(args),
    }
}
