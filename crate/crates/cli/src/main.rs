use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use quiverstab_cli::{dispatch, parse_problem, Command, ExitStatus, Flags};
use quiverstab_core::Guards;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    Slope,
    Semistable,
    Hn,
    Kempf,
    Verify,
    Scan,
    Envelope,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Command {
        match c {
            Cmd::Slope => Command::Slope,
            Cmd::Semistable => Command::Semistable,
            Cmd::Hn => Command::Hn,
            Cmd::Kempf => Command::Kempf,
            Cmd::Verify => Command::Verify,
            Cmd::Scan => Command::Scan,
            Cmd::Envelope => Command::Envelope,
        }
    }
}

/// Stability, Harder-Narasimhan and Kempf filtrations of quiver
/// representations.
#[derive(Debug, Parser)]
#[command(name = "quiverstab", version)]
struct Args {
    command: Cmd,
    /// Problem file (JSON); `-` reads stdin.
    problem: PathBuf,
    /// Maximum number of subspaces enumerated at one vertex.
    #[arg(long, default_value_t = Guards::default().subspaces)]
    guard_subspaces: u128,
    /// Maximum number of representation points in a scan.
    #[arg(long, default_value_t = Guards::default().reps)]
    guard_reps: u128,
    /// Seed for the randomized checks of `scan`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of randomized pairing checks in `scan`.
    #[arg(long, default_value_t = 1000)]
    pairing_samples: usize,
    /// Write the envelope figure to this path (`envelope` only).
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Replace Θ by aΘ + bσ before computing.
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    transform: Option<Vec<i64>>,
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

fn exit(status: ExitStatus) -> ExitCode {
    ExitCode::from(status.code() as u8)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match read_input(&args.problem) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.problem.display());
            return exit(ExitStatus::Malformed);
        }
    };
    let problem = match parse_problem(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return exit(ExitStatus::of_error(&e));
        }
    };
    let flags = Flags {
        guards: Guards { subspaces: args.guard_subspaces, reps: args.guard_reps },
        seed: args.seed,
        pairing_samples: args.pairing_samples,
        transform: args.transform.map(|t| (t[0], t[1])),
        svg: args.svg.is_some(),
    };
    let outcome = dispatch(args.command.into(), &problem, &flags);
    print!("{}", outcome.stdout);
    if let Some(msg) = &outcome.error {
        eprintln!("{msg}");
    }
    if let (Some(path), Some(svg)) = (&args.svg, &outcome.svg) {
        if let Err(e) = std::fs::write(path, svg) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return exit(ExitStatus::Malformed);
        }
    }
    exit(outcome.status)
}
