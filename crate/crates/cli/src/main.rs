//! `dlx`: exact cover, Sudoku and n-queens from the command line.
//!
//! Solutions go to stdout, statistics and diagnostics to stderr. Exit status
//! is 0 when at least one solution was found, 1 when none was, and 2 on
//! input or usage errors.

mod demo;

use std::fs;
use std::io::{self, Read, Write};
use std::num::NonZeroU64;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use dancing_links::dlx::{solve, SearchMode, SearchStats, SolveError, SolveReport, SolverConfig};
use dancing_links::encode::{
    decode_nqueens, decode_sudoku, encode_nqueens, encode_sudoku, QueensSpec, MAX_QUEENS,
};
use dancing_links::format::{parse_matrix, parse_sudoku};

#[derive(Parser, Debug)]
#[command(name = "dlx", version, about = "Dancing links exact cover solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve an exact cover file
    Solve {
        #[command(flatten)]
        mode: ModeFlags,
        /// Stop after N solutions
        #[arg(long, value_name = "N")]
        limit: Option<NonZeroU64>,
        /// Stop after N row trials
        #[arg(long, value_name = "N")]
        nodes: Option<NonZeroU64>,
        /// Input file, or `-` for stdin
        file: PathBuf,
    },
    /// Solve a Sudoku given as 81 cells
    Sudoku {
        /// Print every solution instead of the first
        #[arg(long)]
        all: bool,
        /// Input file, or `-` for stdin
        file: PathBuf,
    },
    /// Place N non-attacking queens
    Queens {
        #[command(flatten)]
        mode: QueensFlags,
        n: usize,
    },
    /// Trace the list remove/restore operators
    Demo,
    /// Time n-queens counting for n = 8..=MAX
    Bench {
        #[arg(long, value_name = "N", default_value_t = 13)]
        max: usize,
    },
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct ModeFlags {
    /// Print every solution
    #[arg(long)]
    all: bool,
    /// Print the first solution (default)
    #[arg(long)]
    first: bool,
    /// Print only the number of solutions
    #[arg(long)]
    count: bool,
}

impl ModeFlags {
    fn mode(&self) -> SearchMode {
        if self.all {
            SearchMode::All
        } else if self.count {
            SearchMode::Count
        } else {
            SearchMode::First
        }
    }
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct QueensFlags {
    /// Print only the number of solutions
    #[arg(long)]
    count: bool,
    /// Print every solution
    #[arg(long)]
    all: bool,
}

/// Failure that maps to exit status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn read_input(path: &PathBuf) -> Result<String, UsageError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| UsageError(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
    }
}

fn summary(stats: &SearchStats, exhausted: bool) -> String {
    let noun = if stats.solutions == 1 { "solution" } else { "solutions" };
    let mut line = format!(
        "{} {noun}, {} steps, max depth {}",
        stats.solutions, stats.steps, stats.max_depth
    );
    if exhausted {
        line.push_str(", node limit reached");
    }
    line
}

/// Unwraps a solve result; a node-limit stop still yields its partial report.
fn settle(result: Result<SolveReport, SolveError>) -> Result<(SolveReport, bool), UsageError> {
    match result {
        Ok(report) => Ok((report, false)),
        Err(SolveError::BudgetExhausted(report)) => Ok((*report, true)),
        Err(e) => Err(e.into()),
    }
}

fn status(found: u64) -> u8 {
    if found > 0 {
        0
    } else {
        1
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, UsageError> {
    match cli.command {
        Command::Solve {
            mode,
            limit,
            nodes,
            file,
        } => {
            let text = read_input(&file)?;
            let instance =
                parse_matrix(&text).map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
            let config = SolverConfig {
                mode: mode.mode(),
                solution_limit: limit,
                node_limit: nodes,
                audit: false,
            };
            let (report, exhausted) = settle(solve(&instance, &config))?;
            if config.mode == SearchMode::Count {
                writeln!(out, "{}", report.count())?;
            } else {
                for s in &report.solutions {
                    writeln!(out, "{s}")?;
                }
            }
            eprintln!("{}", summary(&report.stats, exhausted));
            Ok(status(report.count()))
        }
        Command::Sudoku { all, file } => {
            let text = read_input(&file)?;
            let grid =
                parse_sudoku(&text).map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
            let (instance, table) = encode_sudoku(&grid)?;
            let mode = if all { SearchMode::All } else { SearchMode::First };
            let (report, _) = settle(solve(&instance, &SolverConfig::new(mode)))?;
            for s in &report.solutions {
                writeln!(out, "{}", decode_sudoku(s, &table))?;
            }
            eprintln!("{}", summary(&report.stats, false));
            Ok(status(report.count()))
        }
        Command::Queens { mode, n } => {
            let spec = QueensSpec::new(n)?;
            let (instance, table) = encode_nqueens(spec);
            let search = if mode.count {
                SearchMode::Count
            } else if mode.all {
                SearchMode::All
            } else {
                SearchMode::First
            };
            let (report, _) = settle(solve(&instance, &SolverConfig::new(search)))?;
            if search == SearchMode::Count {
                writeln!(out, "{}", report.count())?;
            } else {
                for s in &report.solutions {
                    let files: Vec<String> = decode_nqueens(s, &table)
                        .iter()
                        .map(usize::to_string)
                        .collect();
                    writeln!(out, "{}", files.join(" "))?;
                }
            }
            eprintln!("{}", summary(&report.stats, false));
            Ok(status(report.count()))
        }
        Command::Demo => {
            demo::run(out)?;
            Ok(0)
        }
        Command::Bench { max } => {
            if !(8..=MAX_QUEENS).contains(&max) {
                return Err(UsageError(format!("--max must be in 8..={MAX_QUEENS}")));
            }
            for n in 8..=max {
                let (instance, _) = encode_nqueens(QueensSpec::new(n)?);
                let start = Instant::now();
                let (report, _) = settle(solve(&instance, &SolverConfig::new(SearchMode::Count)))?;
                let elapsed = start.elapsed();
                writeln!(
                    out,
                    "n={n} solutions={} steps={}",
                    report.count(),
                    report.stats.steps
                )?;
                eprintln!("n={n} time={:.3}s", elapsed.as_secs_f64());
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("usage error");
            eprintln!("dlx: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => {
            let _ = out.flush();
            ExitCode::from(code)
        }
        Err(UsageError(msg)) => {
            let _ = out.flush();
            eprintln!("dlx: {msg}");
            ExitCode::from(2)
        }
    }
}
