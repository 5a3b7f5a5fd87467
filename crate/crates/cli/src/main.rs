//! `qsig`: exact signatures, quantum sector dimensions, Burnside-ring arithmetic
//! and a numerical oracle, driven by a plain-text problem description.

mod problem;
mod run;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quotient_signature::exactlin::Rational;

use run::{exit_code, Command, Overrides, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "qsig", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Signature of the invariant residue pairing and its G-signature blocks.
    Signature(Opts),
    /// Sector-wise invariant dimensions, totals and signatures.
    Quantum(Opts),
    /// Compare the exact signature with a perturbed zero count.
    OracleCheck(Opts),
    /// Evaluate the [burnside] expressions and their reductions.
    Burnside(Opts),
}

#[derive(Args)]
struct Opts {
    /// Problem description; `-` reads standard input.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    /// Root residual tolerance of the oracle.
    #[arg(long)]
    tol_root: Option<f64>,
    /// Gray-zone tolerance of the oracle's classification.
    #[arg(long)]
    tol_classify: Option<f64>,
    /// Largest degree of the invariant perturbation generators.
    #[arg(long)]
    max_degree: Option<u32>,
    /// Attach an oracle verdict to `signature`.
    #[arg(long)]
    with_oracle: bool,
    /// Perturbation scale, a rational such as 1/20.
    #[arg(long, value_parser = run::parse_t)]
    t: Option<Rational>,
    /// Radius of the polydisc in which zeros are counted.
    #[arg(long)]
    ball_radius: Option<f64>,
}

fn read_input(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, opts) = match cli.command {
        Cmd::Signature(o) => (Command::Signature, o),
        Cmd::Quantum(o) => (Command::Quantum, o),
        Cmd::OracleCheck(o) => (Command::OracleCheck, o),
        Cmd::Burnside(o) => (Command::Burnside, o),
    };
    let text = match read_input(&opts.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", opts.input.display());
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let overrides = Overrides {
        seed: opts.seed,
        t: opts.t,
        max_degree: opts.max_degree,
        tol_root: opts.tol_root,
        tol_classify: opts.tol_classify,
        ball_radius: opts.ball_radius,
        with_oracle: opts.with_oracle,
    };
    let outcome = problem::parse(&text).and_then(|p| run::run(&p, cmd, &overrides));
    match outcome {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
