use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use onepoint::connectify::{ExtClosedSet, ExtPoint};
use onepoint::finite::{Axiom, FiniteSpace};
use onepoint::report::{self, Format, Report};
use onepoint::space::Space;
use onepoint::suite::SuiteConfig;
use onepoint::Error;

/// One-point connectifications and compactifications of finite unions of intervals.
#[derive(Parser)]
#[command(name = "onepoint", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// List the connected components of SET.
    Components {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Compactness, local connectedness and compact components of SET.
    Check {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Decide whether SET has a one-point connectification and show its filters.
    Connectify {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Separate points or closed sets in the connectification.
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// Alexandroff one-point compactification of SET.
    Compactify {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Finite topologies.
    #[command(subcommand)]
    Finite(FiniteCommand),
    /// Run the invariant suite.
    Selftest,
}

#[derive(Subcommand)]
enum WitnessCommand {
    /// Disjoint open neighbourhoods of two points; `p` is the added point.
    Hausdorff {
        #[arg(allow_hyphen_values = true)]
        set: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Disjoint open neighbourhoods of two closed sets, each `p`, `SET` or `p+SET`.
    Normal {
        #[arg(allow_hyphen_values = true)]
        set: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
}

#[derive(Subcommand)]
enum FiniteCommand {
    /// Count the topologies on N points.
    Enumerate { n: usize },
    /// Connected one-point extensions of a finite space satisfying AXIOM.
    Search { topology: String, axiom: String },
}

fn run(cli: Cli) -> Result<Report, Error> {
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Records => Format::Records,
    };
    Ok(match cli.command {
        Command::Components { set } => report::components(&Space::parse(&set)?, format),
        Command::Check { set } => report::check(&Space::parse(&set)?, format),
        Command::Connectify { set } => report::connectify(&Space::parse(&set)?, format),
        Command::Witness(WitnessCommand::Hausdorff { set, y, z }) => {
            let (y, z): (ExtPoint, ExtPoint) = (y.parse()?, z.parse()?);
            report::witness_hausdorff(&Space::parse(&set)?, &y, &z, format)?
        }
        Command::Witness(WitnessCommand::Normal { set, f, g }) => {
            let (f, g) = (ExtClosedSet::parse(&f)?, ExtClosedSet::parse(&g)?);
            report::witness_normal(&Space::parse(&set)?, &f, &g, format)?
        }
        Command::Compactify { set } => report::compactification(&Space::parse(&set)?, format)?,
        Command::Finite(FiniteCommand::Enumerate { n }) => report::finite_enumerate(n, format)?,
        Command::Finite(FiniteCommand::Search { topology, axiom }) => {
            let x: FiniteSpace = topology.parse()?;
            report::finite_search(&x, axiom.parse::<Axiom>()?, format)?
        }
        Command::Selftest => report::selftest(&SuiteConfig::quick(), format),
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(report) => {
            print!("{}", report.body);
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(report::exit_code(&e) as u8)
        }
    }
}
