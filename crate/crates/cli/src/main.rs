use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use knotsig_cli::{
    cmd_approx, cmd_covers, cmd_eta_cyclic, cmd_invariants, cmd_l2, cmd_reps, cmd_resolve, cmd_sigfn, read_knot,
    read_module, CliError,
};

#[derive(Parser)]
#[command(name = "knotsig", version, about = "Exact signature invariants of knots from Seifert matrices")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial, Arf invariant, genus and a metabolizer if one is found.
    Invariants {
        #[arg(long)]
        knot: PathBuf,
    },
    /// Certified enclosure of the integral of the signature function.
    L2 {
        #[arg(long)]
        knot: PathBuf,
        #[arg(long, default_value = "1e-9")]
        eps: String,
    },
    /// Sum and average of the signatures at the k-th roots of unity.
    EtaCyclic {
        #[arg(long)]
        knot: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Cyclic averages against the integral, as CSV.
    Approx {
        #[arg(long)]
        knot: PathBuf,
        /// "factorial:N" or a comma-separated list.
        #[arg(long, default_value = "factorial:8")]
        schedule: String,
        #[arg(long, default_value = "1e-9")]
        eps: String,
    },
    /// Signature function as CSV.
    Sigfn {
        #[arg(long)]
        knot: PathBuf,
    },
    /// Homology of the k-fold cyclic cover.
    Covers {
        #[arg(long)]
        knot: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Irreducible representations of Z/m ⋉ F.
    Reps {
        /// Module JSON {"torsion": [..], "t": [[..], ..]}.
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        m: u64,
    },
    /// Resolution of Z ⋉ Λ/ΔΛ by finite quotients.
    Resolve {
        /// Ascending coefficients of Δ, e.g. "1,-1,1".
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        depth: u32,
        /// "default" (s_i = i), "const:N" or a list.
        #[arg(long, default_value = "default")]
        s: String,
        /// Also test every element with coordinates bounded by this value.
        #[arg(long)]
        witness_bound: Option<u32>,
    },
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Invariants { knot } => cmd_invariants(&read_knot(knot)?),
        Command::L2 { knot, eps } => cmd_l2(&read_knot(knot)?, eps),
        Command::EtaCyclic { knot, k } => cmd_eta_cyclic(&read_knot(knot)?, *k),
        Command::Approx { knot, schedule, eps } => cmd_approx(&read_knot(knot)?, schedule, eps),
        Command::Sigfn { knot } => cmd_sigfn(&read_knot(knot)?),
        Command::Covers { knot, k } => cmd_covers(&read_knot(knot)?, *k),
        Command::Reps { module, m } => cmd_reps(&read_module(module)?, *m),
        Command::Resolve { delta, p, depth, s, witness_bound } => cmd_resolve(delta, *p, *depth, s, *witness_bound),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("knotsig: {e}");
            return ExitCode::from(3);
        }
    }
    let text = match run(&cli) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("knotsig: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("knotsig: {e}");
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
