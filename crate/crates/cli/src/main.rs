use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyonic::commands::{self, AnyOp, BicharacterMode, Global, MatrixArgs, SearchArgs};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "anyonic", version, about = "Exact computations with anyonic Lie algebras")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Generator order for rewriting, as names or indices; normal words follow it.
    #[arg(long, global = true, value_delimiter = ',')]
    order: Option<Vec<String>>,
    /// `anyonic`, `colour`, or a grading JSON file replacing the declared one.
    #[arg(long, global = true)]
    bicharacter: Option<String>,
    /// Word length up to which local confluence is checked.
    #[arg(long, global = true, default_value_t = 4)]
    degree_cap: usize,
    /// Proceed with specs that fail the axioms.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Expand,
    Coproduct,
    Antipode,
    Derivative,
    Integral,
    Counit,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check an algebra spec against the axioms.
    Verify { spec: PathBuf },
    /// Build the matrix-type algebra of N×N matrices with row degrees f.
    MakeMatrix {
        #[arg(long = "N", alias = "size")]
        size: Option<usize>,
        #[arg(long)]
        n: Option<u32>,
        /// Row degrees, comma separated; use `:` between coordinates.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        f: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        names: Option<Vec<String>>,
        #[arg(long)]
        grading: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        no_verify: bool,
    },
    /// Build the central-extension ansatz from a Lie algebra file.
    MakeAnsatz {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        g_file: PathBuf,
        /// Compare the reduced conditions with the full axiom check.
        #[arg(long)]
        check: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List enveloping-algebra relations, rewrite rules and consequences.
    Env { spec: PathBuf },
    /// Normal form of a polynomial in the generators.
    Nf {
        spec: PathBuf,
        expr: String,
        /// Central grouplike element to set equal to 1.
        #[arg(long)]
        quotient: Option<String>,
    },
    /// Calculus on the anyonic line θ^n = 0.
    Anyspace {
        #[arg(long)]
        n: u32,
        #[arg(value_enum)]
        op: OpArg,
        /// Polynomial in `t`, or in `t1, t2, ...` for expand.
        expr: String,
    },
    /// Enumerate small anyonic Lie algebras over a coefficient alphabet.
    Search {
        #[arg(long, default_value_t = 1)]
        dim: usize,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        grading: Option<PathBuf>,
        /// Fixed basis degrees; all assignments are tried otherwise.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        degrees: Option<Vec<String>>,
        /// Coefficient values such as `0,1,-1,z3,z3^2`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alphabet: Option<Vec<String>>,
        #[arg(long)]
        nonzero_delta: bool,
        #[arg(long)]
        nonzero_degree: bool,
        /// Enumerate grading-incompatible entries too.
        #[arg(long)]
        no_prune: bool,
        #[arg(long, default_value_t = 10_000_000)]
        cap: u128,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let g = Global {
        json: cli.json,
        order: cli.order,
        bicharacter: BicharacterMode::parse(cli.bicharacter.as_deref()),
        degree_cap: cli.degree_cap,
        force: cli.force,
    };
    let result = match cli.cmd {
        Cmd::Verify { spec } => commands::verify(&g, &spec),
        Cmd::MakeMatrix {
            size,
            n,
            f,
            names,
            grading,
            output,
            no_verify,
        } => commands::make_matrix(
            &g,
            MatrixArgs {
                size,
                n,
                f: &f,
                names,
                grading: grading.as_deref(),
                output: output.as_deref(),
                no_verify,
            },
        ),
        Cmd::MakeAnsatz { n, g_file, check, output } => {
            commands::make_ansatz(&g, n, &g_file, check, output.as_deref())
        }
        Cmd::Env { spec } => commands::env(&g, &spec),
        Cmd::Nf { spec, expr, quotient } => commands::nf(&g, &spec, &expr, quotient.as_deref()),
        Cmd::Anyspace { n, op, expr } => {
            let op = match op {
                OpArg::Expand => AnyOp::Expand,
                OpArg::Coproduct => AnyOp::Coproduct,
                OpArg::Antipode => AnyOp::Antipode,
                OpArg::Derivative => AnyOp::Derivative,
                OpArg::Integral => AnyOp::Integral,
                OpArg::Counit => AnyOp::Counit,
            };
            commands::anyspace(&g, n, op, &expr)
        }
        Cmd::Search {
            dim,
            n,
            grading,
            degrees,
            alphabet,
            nonzero_delta,
            nonzero_degree,
            no_prune,
            cap,
            threads,
        } => commands::search(
            &g,
            SearchArgs {
                dim,
                n,
                grading: grading.as_deref(),
                degrees: degrees.as_deref(),
                alphabet: alphabet.as_deref(),
                nonzero_delta,
                nonzero_degree,
                no_prune,
                cap,
                threads,
            },
        ),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
