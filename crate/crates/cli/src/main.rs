//! `gkzkit`: command-line access to the GKZ toolkit. Reports go to stdout as
//! JSON; human-readable diagnostics go to stderr.

mod commands;
mod input;

use clap::{Parser, Subcommand};
use commands::{AnalyzeArgs, ConvertArgs, Failure, FuchsArgs, SeriesArgs, UmbrellaArgs};
use serde_json::{json, Value};
use std::io::IsTerminal;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gkzkit", version, about = "Exact combinatorics of A-hypergeometric systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Flags, volume, resonance and rank of a matrix and parameter.
    Analyze {
        /// Integer matrix, rows separated by ';' (or @file).
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        /// Parameter vector; zero when omitted.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Weight vector L for umbrella, triangulation and series summaries.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long, env = "GKZKIT_BOUND", default_value_t = 32)]
        bound: u64,
    },
    /// Umbrella of a weight, its triangulation and optional jumps along a direction.
    Umbrella {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Direction of the family weight + t * direction.
        #[arg(long, allow_hyphen_values = true)]
        direction: Option<String>,
        #[arg(long, default_value = "1/2..16", allow_hyphen_values = true)]
        window: String,
        /// Write an SVG picture to this file.
        #[arg(long)]
        svg: Option<String>,
    },
    /// Slopes along the coordinate hyperplane x_j = 0.
    Slopes {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        /// 1-based column index j.
        #[arg(long)]
        hyperplane: usize,
        #[arg(long, default_value = "1/2..16", allow_hyphen_values = true)]
        window: String,
    },
    /// Truncated Gamma-series solutions for a generic weight.
    Series {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Weight truncation; 8 max|L| by default.
        #[arg(long, allow_hyphen_values = true)]
        truncation: Option<String>,
    },
    /// Generators of the toric ideal and an optional initial ideal.
    Toric {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Standard pairs and irreducible decomposition of a monomial ideal.
    Stdpairs {
        /// Generators as exponent rows, e.g. "0 0 0 1 2".
        #[arg(long)]
        ideal: Option<String>,
        /// Number of variables (defaults to the row length).
        #[arg(long)]
        vars: Option<usize>,
        /// Use the initial ideal of I_A for --weight instead.
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Fuchs polygon of a one-variable operator.
    Fuchs {
        /// Terms "r s c; ..." meaning c z^r d^s (or c z^r theta^s with --theta).
        #[arg(long, allow_hyphen_values = true)]
        terms: Option<String>,
        #[arg(long)]
        theta: bool,
        /// Hypergeometric operator prod(theta - lambda) - z prod(theta - mu).
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Use the chart at infinity.
        #[arg(long)]
        infinity: bool,
        #[arg(long)]
        svg: Option<String>,
    },
    /// Hodge numbers of a hypergeometric module.
    Hodge {
        #[command(subcommand)]
        formula: HodgeFormula,
    },
    /// Convert between univariate operators and GKZ data.
    Convert {
        /// Kernel generator v of a corank-one matrix.
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// Upper parameters of a pFq operator.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Lower parameters of a pFq operator.
        #[arg(long = "beta-params", allow_hyphen_values = true)]
        beta_params: Option<String>,
        /// A corank-one matrix to read back as a univariate operator.
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
}

#[derive(Subcommand)]
enum HodgeFormula {
    /// Regular case, as many lambdas as mus.
    Fedorov {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Confluent case, more lambdas than mus.
    SabbahYu {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        mu: String,
        /// Drop the lambda-proportional term from the levels.
        #[arg(long)]
        omit_alpha: bool,
    },
}

fn run(command: &Command) -> commands::Outcome {
    match command {
        Command::Analyze { a, beta, weight, bound } => commands::analyze(&AnalyzeArgs {
            a,
            beta: beta.as_deref(),
            weight: weight.as_deref(),
            bound: *bound,
        }),
        Command::Umbrella { a, weight, direction, window, svg } => commands::umbrella_cmd(&UmbrellaArgs {
            a,
            weight,
            direction: direction.as_deref(),
            window,
            svg: svg.as_deref(),
        }),
        Command::Slopes { a, hyperplane, window } => commands::slopes(a, *hyperplane, window),
        Command::Series { a, beta, weight, truncation } => {
            commands::series(&SeriesArgs { a, beta, weight, truncation: truncation.as_deref() })
        }
        Command::Toric { a, weight } => commands::toric(a, weight.as_deref()),
        Command::Stdpairs { ideal, vars, a, weight } => {
            commands::stdpairs(ideal.as_deref(), *vars, a.as_deref(), weight.as_deref())
        }
        Command::Fuchs { terms, theta, lambda, mu, infinity, svg } => commands::fuchs(&FuchsArgs {
            terms: terms.as_deref(),
            theta: *theta,
            lambda: lambda.as_deref(),
            mu: mu.as_deref(),
            infinity: *infinity,
            svg: svg.as_deref(),
        }),
        Command::Hodge { formula } => match formula {
            HodgeFormula::Fedorov { lambda, mu } => commands::hodge(true, lambda, mu, false),
            HodgeFormula::SabbahYu { lambda, mu, omit_alpha } => commands::hodge(false, lambda, mu, *omit_alpha),
        },
        Command::Convert { v, c, alpha, beta_params, a, beta } => commands::convert(&ConvertArgs {
            v: v.as_deref(),
            c: c.as_deref(),
            alpha: alpha.as_deref(),
            beta_params: beta_params.as_deref(),
            a: a.as_deref(),
            beta: beta.as_deref(),
        }),
    }
}

fn print_json(v: &Value) {
    use std::io::Write;
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn diagnose(message: &str) {
    let color = std::env::var_os("GKZKIT_NO_COLOR").is_none() && std::io::stderr().is_terminal();
    if color {
        eprintln!("\x1b[31merror\x1b[0m: {message}");
    } else {
        eprintln!("error: {message}");
    }
}

fn fail(kind: &str, message: String, certificate: Value, code: u8) -> ExitCode {
    diagnose(&message);
    print_json(&json!({ "error": { "kind": kind, "message": message, "certificate": certificate } }));
    ExitCode::from(code)
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
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(&cli.command) {
        Ok(v) => {
            print_json(&v);
            ExitCode::SUCCESS
        }
        Err(Failure::Input(e)) => {
            let position = json!({ "argument": e.argument, "column": e.column });
            fail("ParseError", e.to_string(), position, 1)
        }
        Err(Failure::Core(e)) => fail(e.kind(), e.to_string(), commands::certificate(&e), 2),
        Err(Failure::Io(message)) => fail("IoError", message, Value::Null, 2),
    }
}
