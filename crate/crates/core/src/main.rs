use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quadric_moduli::acceptance::DEFAULT_SEED;
use quadric_moduli::arith::Rational;
use quadric_moduli::cli::{run, Command, JobSpec, QuiverChoice, EXIT_SCHEMA};

#[derive(Parser)]
#[command(name = "quadric-moduli", version, about = "Exact moduli computations for quadrics and conifold potentials")]
struct Cli {
    /// Seed for every randomized sweep.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Sample count for randomized sweeps.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Write the JSON result here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Input {
    /// JSON input file; standard input when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariants, stability and geometricity of a 2x2x2x2 tensor.
    ClassifyQuintuple(Input),
    /// Trace invariants, stability and image of a conifold potential.
    ClassifyPotential(Input),
    /// Image quintuple of a semistable potential.
    MapPotential(Input),
    /// Graded dimensions of a Jacobi algebra between two vertices.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "v0")]
        from: String,
        #[arg(long, default_value = "v0")]
        to: String,
        #[arg(long, default_value_t = 8)]
        max: usize,
        /// conifold, double-cover or framed
        #[arg(long, default_value = "conifold")]
        quiver: String,
    },
    /// Elliptic configurations.
    #[command(subcommand)]
    Elliptic(EllipticCmd),
    /// Point counts of framed moduli over prime fields.
    DtCount {
        #[arg(long)]
        potential: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
        primes: Vec<u64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-1,-1,2")]
        theta: Vec<String>,
    },
    /// Run every acceptance criterion and print a pass/fail table.
    Acceptance,
}

#[derive(Subcommand)]
enum EllipticCmd {
    /// Search for a group element carrying one configuration to another.
    OrbitTest {
        #[command(flatten)]
        input: Input,
        /// Also allow the elliptic involution on both points.
        #[arg(long)]
        involution: bool,
    },
    /// Curve membership and admissibility of a configuration.
    Check(Input),
}

fn read_input(path: Option<&PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn usage_error(msg: String) -> ExitCode {
    let err = serde_json::json!({"error": {"kind": "schema", "path": "$", "message": msg}});
    println!("{}", serde_json::to_string_pretty(&err).unwrap());
    ExitCode::from(EXIT_SCHEMA as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, input) = match &cli.command {
        Cmd::ClassifyQuintuple(i) => (Command::ClassifyQuintuple, Some(i)),
        Cmd::ClassifyPotential(i) => (Command::ClassifyPotential, Some(i)),
        Cmd::MapPotential(i) => (Command::MapPotential, Some(i)),
        Cmd::Hilbert { input, from, to, max, quiver } => {
            let Some(quiver) = QuiverChoice::parse(quiver) else {
                return usage_error(format!("unknown quiver `{quiver}`"));
            };
            let cmd = Command::Hilbert {
                from: from.clone(),
                to: to.clone(),
                max: *max,
                quiver,
            };
            (cmd, Some(input))
        }
        Cmd::Elliptic(EllipticCmd::OrbitTest { input, involution }) => (
            Command::EllipticOrbitTest {
                include_involution: *involution,
            },
            Some(input),
        ),
        Cmd::Elliptic(EllipticCmd::Check(i)) => (Command::EllipticCheck, Some(i)),
        Cmd::DtCount { primes, theta, .. } => {
            let parsed: Result<Vec<Rational>, _> = theta.iter().map(|t| t.parse()).collect();
            let Ok(Ok(theta)) = parsed.map(<[Rational; 3]>::try_from) else {
                return usage_error("--theta takes three rationals".into());
            };
            (
                Command::DtCount {
                    primes: primes.clone(),
                    theta,
                },
                None,
            )
        }
        Cmd::Acceptance => (Command::Acceptance, None),
    };
    let text = match (&cli.command, input) {
        (Cmd::DtCount { potential, .. }, _) => read_input(Some(potential)),
        (_, Some(i)) => read_input(i.input.as_ref()),
        (_, None) => Ok(String::new()),
    };
    let input = match text {
        Ok(t) => t,
        Err(e) => return usage_error(format!("cannot read input: {e}")),
    };
    let (code, out) = run(&JobSpec {
        command,
        input,
        seed: cli.seed,
        samples: cli.samples,
    });
    let rendered = serde_json::to_string_pretty(&out).unwrap() + "\n";
    match &cli.output {
        Some(p) => {
            if let Err(e) = std::fs::write(p, rendered) {
                eprintln!("cannot write {}: {e}", p.display());
                return ExitCode::FAILURE;
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(code as u8)
}
