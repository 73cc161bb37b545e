//! Command-line frontend: longest increasing subsequences and generic
//! algebraic path problems over files or standard input.
//!
//! Exit codes: 0 success, 2 unreadable or unparsable input, 3 method
//! disagreement under `--method all`, 4 divergent closure, 1 any other
//! failure.

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pathalgebra::lis::{
    build_incidence, lis_backsub, lis_dp, lis_matrix_power, lis_patience, parse_int_sequence,
    parse_string_sequence, LisResult, Sequence,
};
use pathalgebra::matrix::SemiringMatrix;
use pathalgebra::pathproblems::{parse_graph, solve_path_problem_counted};
use pathalgebra::semiring::{
    Boolean, MaxMin, MaxPlus, MaxTimes, MinPlus, Semiring, SemiringKind,
};
use pathalgebra::Error;

#[derive(Parser)]
#[command(
    name = "pathalgebra",
    version,
    about = "Longest increasing subsequences and algebraic path problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Longest increasing subsequence of a key sequence.
    Lis(LisArgs),
    /// Close a weighted graph over a chosen semiring.
    Path(PathArgs),
}

#[derive(Args)]
struct LisArgs {
    /// Input file of keys separated by whitespace or commas; `-` reads
    /// standard input. `#` starts a comment.
    input: String,

    /// Algorithm to run; `all` runs every one and insists they agree.
    #[arg(long, value_enum, default_value = "backsub")]
    method: MethodArg,

    /// Print one witness subsequence after the length.
    #[arg(long)]
    witness: bool,

    /// Print semiring operation counts per method.
    #[arg(long)]
    counters: bool,

    /// Dump the incidence matrix (and, under `--method power`, each
    /// computed power) in the matrix text format.
    #[arg(long)]
    emit_matrix: bool,

    /// Treat keys as strings compared byte-lexicographically.
    #[arg(long)]
    strings: bool,

    /// Emit one JSON report instead of plain lines.
    #[arg(long)]
    json: bool,

    /// Test hook: report the named method's length off by one.
    #[arg(long, hide = true, value_name = "METHOD")]
    fault_inject: Option<String>,
}

#[derive(Args)]
struct PathArgs {
    /// Input graph file (`N M` header, then `u v w` lines); `-` reads
    /// standard input.
    input: String,

    /// Semiring to solve under: maxplus, minplus, boolean, maxmin, or
    /// maxtimes.
    #[arg(long, value_parser = clap::builder::ValueParser::new(parse_semiring))]
    semiring: SemiringKind,

    /// Print closure operation counts after the matrix.
    #[arg(long)]
    counters: bool,

    /// Emit one JSON report instead of the plain matrix.
    #[arg(long)]
    json: bool,
}

fn parse_semiring(s: &str) -> Result<SemiringKind, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Dp,
    Backsub,
    Power,
    Patience,
    All,
}

enum CliError {
    Io(String, std::io::Error),
    Lib(Error),
    Disagreement(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "cannot read {path}: {e}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Disagreement(details) => write!(f, "methods disagree: {details}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) => 2,
            CliError::Lib(
                Error::Parse { .. }
                | Error::VertexOutOfRange { .. }
                | Error::WeightOutOfDomain { .. },
            ) => 2,
            CliError::Lib(Error::Divergence | Error::DivergenceAtVertex { .. }) => 4,
            CliError::Disagreement(_) => 3,
            CliError::Lib(_) => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Lis(args) => run_lis(&args),
        Command::Path(args) => run_path(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Io("stdin".into(), e))
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_string(), e))
    }
}

fn run_lis(args: &LisArgs) -> Result<(), CliError> {
    let text = read_input(&args.input)?;
    if args.strings {
        let seq = parse_string_sequence(&text);
        report_lis(args, &seq)
    } else {
        let seq = parse_int_sequence(&text)?;
        report_lis(args, &seq)
    }
}

fn report_lis<K: Ord + Clone + Display>(args: &LisArgs, seq: &Sequence<K>) -> Result<(), CliError> {
    let mut results: Vec<LisResult<K>> = match args.method {
        MethodArg::Dp => vec![lis_dp(seq)],
        MethodArg::Backsub => vec![lis_backsub(seq)],
        MethodArg::Power => vec![lis_matrix_power(seq)],
        MethodArg::Patience => vec![lis_patience(seq)],
        MethodArg::All => vec![
            lis_dp(seq),
            lis_backsub(seq),
            lis_matrix_power(seq),
            lis_patience(seq),
        ],
    };

    if let Some(victim) = &args.fault_inject {
        for r in &mut results {
            if r.method.name() == victim {
                r.length += 1;
            }
        }
    }

    if results.windows(2).any(|w| w[0].length != w[1].length) {
        let details = results
            .iter()
            .map(|r| format!("{}={}", r.method.name(), r.length))
            .collect::<Vec<_>>()
            .join(" ");
        return Err(CliError::Disagreement(details));
    }
    let length = results[0].length;

    // The equation solution always carries a witness; methods that do
    // not produce one (matrix powers) borrow it.
    let witness = if args.witness {
        Some(
            results
                .iter()
                .find_map(|r| r.witness.clone())
                .unwrap_or_else(|| lis_backsub(seq).witness.expect("backsub carries a witness")),
        )
    } else {
        None
    };

    let matrices = if args.emit_matrix {
        let a = build_incidence(seq);
        let mut dumps = vec![("A".to_string(), a.clone())];
        if args.method == MethodArg::Power {
            // Every power the iteration examines, final all-phi one
            // included.
            let mut power = a.clone();
            let mut k = 1;
            while !power.is_all_phi() {
                power = power.mmul(&a)?;
                k += 1;
                dumps.push((format!("A^{k}"), power.clone()));
            }
        }
        Some(dumps)
    } else {
        None
    };

    if args.json {
        let report = serde_json::json!({
            "command": "lis",
            "input_length": seq.len(),
            "length": length,
            "methods": results.iter().map(|r| serde_json::json!({
                "method": r.method.name(),
                "length": r.length,
                "oplus": r.oplus_count,
                "odot": r.odot_count,
            })).collect::<Vec<_>>(),
            "witness": witness.as_ref().map(|w| w.iter().map(|(i, k)| serde_json::json!({
                "index": i,
                "key": k.to_string(),
            })).collect::<Vec<_>>()),
            "matrices": matrices.as_ref().map(|ms| ms.iter().map(|(name, m)| serde_json::json!({
                "name": name,
                "rows": m.rows(),
                "cols": m.cols(),
                "rows_text": m.to_text().lines().collect::<Vec<_>>(),
            })).collect::<Vec<_>>()),
        });
        println!("{report:#}");
        return Ok(());
    }

    println!("{length}");
    if let Some(w) = &witness {
        let keys = w
            .iter()
            .map(|(_, k)| k.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        println!("{keys}");
    }
    if args.counters {
        for r in &results {
            println!(
                "{}: oplus={} odot={}",
                r.method.name(),
                r.oplus_count,
                r.odot_count
            );
        }
    }
    if let Some(dumps) = &matrices {
        for (name, m) in dumps {
            println!("# {name}");
            print!("{}", m.to_text());
        }
    }
    Ok(())
}

fn run_path(args: &PathArgs) -> Result<(), CliError> {
    let text = read_input(&args.input)?;
    let graph = parse_graph(&text)?;
    match args.semiring {
        SemiringKind::MaxPlus => close_and_report(args, &graph, MaxPlus),
        SemiringKind::MinPlus => close_and_report(args, &graph, MinPlus),
        SemiringKind::Boolean => close_and_report(args, &graph, Boolean),
        SemiringKind::MaxMin => close_and_report(args, &graph, MaxMin),
        SemiringKind::MaxTimes => close_and_report(args, &graph, MaxTimes),
    }
}

fn close_and_report<S: Semiring>(
    args: &PathArgs,
    graph: &pathalgebra::pathproblems::GraphEdgeList,
    semiring: S,
) -> Result<(), CliError> {
    let (closure, count) = solve_path_problem_counted(graph, semiring)?;
    if args.json {
        let report = serde_json::json!({
            "command": "path",
            "semiring": S::NAME,
            "vertices": closure.rows(),
            "closure": matrix_lines(&closure),
            "oplus": count.oplus,
            "odot": count.odot,
        });
        println!("{report:#}");
        return Ok(());
    }
    print!("{}", closure.to_text());
    if args.counters {
        println!("closure: oplus={} odot={}", count.oplus, count.odot);
    }
    Ok(())
}

fn matrix_lines<S: Semiring>(m: &SemiringMatrix<S>) -> Vec<String> {
    m.to_text().lines().map(str::to_string).collect()
}
