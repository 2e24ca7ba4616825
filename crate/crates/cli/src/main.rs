//! `gridfree`: build, check and count configuration-free grid point sets.

mod output;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand};
use gridfree_core::constructions::construct;
use gridfree_core::detectors::pythagorean_pairs;
use gridfree_core::io::{format_points, parse_points, render_svg};
use gridfree_core::search::{extremal_table, DEFAULT_BUDGET};
use gridfree_core::{
    count_all, max_free_subset_exact, verify_free, ConfigClass, CountMethod, Error, PointSet, SearchOptions,
};

use output::{append_csv, timing, write_csv, write_report, CsvRow, RunManifest};

const THREADS_VAR: &str = "GRIDFREE_THREADS";

#[derive(Parser)]
#[command(name = "gridfree", version, about = "Configuration-free subsets of the integer grid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a configuration-free set and write it with a JSON report.
    Construct {
        #[arg(long)]
        config: ConfigClass,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        seed: Option<u64>,
        /// Difference multiplicity for rhombus constructions.
        #[arg(long)]
        g: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        /// Defaults to the output path with a `.json` extension.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Append a summary row to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check a point file; prints a configuration and exits 1 if one exists.
    Verify {
        #[arg(long)]
        config: ConfigClass,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Count the configurations in a point file.
    Count {
        #[arg(long)]
        config: ConfigClass,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "fast")]
        method: CountMethod,
        /// Append a row to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Exact maximum free subset of the n x n grid.
    Exact {
        #[arg(long)]
        config: ConfigClass,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write an optimal set here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Exact optima over several grid sizes, as CSV.
    Table {
        #[arg(long)]
        config: ConfigClass,
        #[arg(long = "n-list", value_delimiter = ',', required = true)]
        n_list: Vec<u32>,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Number of ordered pairs (a, b) with a, b < n and a^2 + b^2 a square.
    Pyth {
        #[arg(long)]
        n: u64,
        /// Print the pairs as well.
        #[arg(long)]
        list: bool,
    },
    /// Draw a point file as SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Draw the whole n x n grid rather than the bounding box.
        #[arg(long)]
        n: Option<u32>,
    },
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(e) => exit_code(e),
            None => 2,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            error: e.into(),
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BruteGuardExceeded { .. } | Error::GuardExceeded { .. } | Error::BudgetExhausted { .. } => 3,
        Error::VerificationFailed { .. } | Error::Unverified(_) => 1,
        _ => 2,
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let threads: usize = raw
        .trim()
        .parse()
        .with_context(|| format!("{THREADS_VAR} must be a nonnegative integer, got `{raw}`"))?;
    // 0 leaves the choice to rayon
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn read_points(path: &Path) -> Result<PointSet, Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_points(&text).map_err(|e| Failure {
        code: 2,
        error: anyhow::Error::from(e).context(path.display().to_string()),
    })
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn args(pairs: &[(&str, Option<String>)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), v.clone())))
        .collect()
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Construct {
            config,
            n,
            seed,
            g,
            out,
            report,
            csv,
        } => {
            let c = construct(config, n, seed, g)?;
            write_text(&out, &format_points(&c.points))?;
            let manifest = RunManifest::new(
                "construct",
                args(&[
                    ("config", Some(config.to_string())),
                    ("n", Some(n.to_string())),
                    ("seed", seed.map(|s| s.to_string())),
                    ("g", g.map(|g| g.to_string())),
                    ("out", Some(out.display().to_string())),
                ]),
                c.report.seed,
            );
            let mut r = c.report.clone();
            r.elapsed = timing(r.elapsed);
            let report_path = report.unwrap_or_else(|| out.with_extension("json"));
            write_report(&report_path, &manifest, &r)?;
            if let Some(path) = csv {
                append_csv(
                    &path,
                    &[CsvRow {
                        class: config.to_string(),
                        n: Some(n),
                        param_g: g,
                        seed: c.report.seed,
                        size: Some(c.points.len() as u64),
                        verified: c.report.verified,
                        elapsed_ms: CsvRow::elapsed(c.report.elapsed),
                    }],
                )?;
            }
            println!("{}", c.points.len());
            eprintln!(
                "{} n={n}: {} points, verified {}",
                c.report.name,
                c.points.len(),
                c.report.verified
            );
            Ok(if c.report.verified { 0 } else { 1 })
        }
        Command::Verify { config, input } => {
            let ps = read_points(&input)?;
            let check = verify_free(&ps, config);
            match check.witness {
                None => {
                    eprintln!("{config}-free ({} points)", ps.len());
                    Ok(0)
                }
                Some(w) => {
                    eprintln!("found {config}:");
                    for p in &w.points {
                        println!("{} {}", p.x, p.y);
                    }
                    Ok(1)
                }
            }
        }
        Command::Count {
            config,
            input,
            method,
            csv,
        } => {
            let ps = read_points(&input)?;
            let report = count_all(&ps, config, method)?;
            println!("{}", report.count);
            if let Some(path) = csv {
                append_csv(
                    &path,
                    &[CsvRow {
                        class: config.to_string(),
                        n: ps.enclosing_side(),
                        param_g: None,
                        seed: None,
                        size: Some(report.count),
                        verified: report.count == 0,
                        elapsed_ms: CsvRow::elapsed(report.elapsed),
                    }],
                )?;
            }
            Ok(0)
        }
        Command::Exact {
            config,
            n,
            budget,
            out,
            report,
        } => {
            let opts = SearchOptions {
                budget,
                ..SearchOptions::default()
            };
            let mut r = max_free_subset_exact(n, config, opts)?;
            println!("{}", r.optimum);
            eprintln!("{config} n={n}: optimum {} after {} nodes", r.optimum, r.nodes_explored);
            if let Some(path) = out {
                write_text(&path, &format_points(&r.witness))?;
            }
            if let Some(path) = report {
                r.elapsed = timing(r.elapsed);
                let manifest = RunManifest::new(
                    "exact",
                    args(&[
                        ("config", Some(config.to_string())),
                        ("n", Some(n.to_string())),
                        ("budget", Some(budget.to_string())),
                    ]),
                    None,
                );
                write_report(&path, &manifest, &r)?;
            }
            Ok(0)
        }
        Command::Table {
            config,
            n_list,
            csv,
            budget,
        } => {
            let rows = extremal_table(config, n_list, budget);
            let csv_rows: Vec<CsvRow> = rows
                .iter()
                .map(|r| CsvRow {
                    class: config.to_string(),
                    n: Some(r.n),
                    param_g: None,
                    seed: None,
                    size: r.size.map(|s| s as u64),
                    verified: r.certified,
                    elapsed_ms: CsvRow::elapsed(r.elapsed),
                })
                .collect();
            write_csv(&csv, &csv_rows)?;
            for r in &rows {
                let size = r.size.map_or("-".to_string(), |s| s.to_string());
                match &r.error {
                    None => println!("{} {size}", r.n),
                    Some(e) => println!("{} {size} uncertified ({e})", r.n),
                }
            }
            Ok(if rows.iter().all(|r| r.certified) { 0 } else { 3 })
        }
        Command::Pyth { n, list } => {
            let start = Instant::now();
            let pairs = pythagorean_pairs(n);
            if list {
                for p in &pairs {
                    println!("{} {} {}", p.a, p.b, p.c);
                }
            }
            println!("{}", pairs.len());
            eprintln!("{} pairs up to {n} in {:?}", pairs.len(), start.elapsed());
            Ok(0)
        }
        Command::Render { input, svg, n } => {
            let ps = read_points(&input)?;
            write_text(&svg, &render_svg(&ps, n))?;
            Ok(0)
        }
    }
}
