use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mereo::commands::{self, CommandOutput, Kind};
use mereo::io::Document;
use mereo::{Caps, Error};

#[derive(Parser)]
#[command(
    name = "mereo",
    version,
    about = "Finite mereotopology: regions, contact axioms and frame representations"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Print tables and per-trial lines as well.
    #[arg(long, global = true)]
    verbose: bool,

    /// Largest algebra (number of elements) that is tabulated and swept.
    #[arg(long, global = true, value_name = "N")]
    cap_elements: Option<usize>,

    /// Largest world set for superset enumeration and split searches.
    #[arg(long, global = true, value_name = "N")]
    cap_worlds: Option<usize>,

    /// Input document (topology, algebra or frame JSON); `-` reads stdin.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the regular closed regions of a topology.
    Rc,
    /// Check every axiom family on a covering table.
    CheckAxioms,
    /// Build a frame representation and verify the embedding.
    Represent {
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Two spaces with the same contact algebra but different connectedness.
    Example1,
    /// Seeded random topologies through the whole suite.
    Random {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        max_universe: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Parametrized,
    Type1,
    Type2,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Parametrized => Kind::Parametrized,
            KindArg::Type1 => Kind::Type1,
            KindArg::Type2 => Kind::Type2,
        }
    }
}

fn document(input: &Option<PathBuf>) -> Result<Document, Error> {
    match input {
        Some(path) => Document::read(path),
        None => Err(Error::InvalidInput(
            "this command needs --input FILE".into(),
        )),
    }
}

fn run(cli: &Cli, caps: &Caps) -> Result<CommandOutput, Error> {
    match &cli.command {
        Command::Rc => match document(&cli.input)? {
            Document::Topology(t) => commands::rc(&t, caps, cli.verbose),
            _ => Err(Error::InvalidInput("rc takes a topology document".into())),
        },
        Command::CheckAxioms => commands::check_axioms(&document(&cli.input)?, caps),
        Command::Represent { kind } => {
            commands::represent(&document(&cli.input)?, (*kind).into(), caps)
        }
        Command::Example1 => commands::example1(caps, cli.verbose),
        Command::Random {
            seed,
            trials,
            max_universe,
        } => commands::random(*seed, *trials, *max_universe, caps, cli.verbose),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut caps = Caps::default();
    if let Some(n) = cli.cap_elements {
        caps.elements = n;
        caps.tuple_elements = n;
    }
    if let Some(n) = cli.cap_worlds {
        caps.naive_worlds = n;
    }
    if caps != Caps::default() {
        eprintln!("warning: caps overridden; exhaustive sweeps grow exponentially and may run for a long time");
    }
    match run(&cli, &caps) {
        Ok(out) => {
            if cli.json {
                print!("{}", out.json_text());
            } else {
                print!("{}", out.text);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
