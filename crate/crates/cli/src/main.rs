//! `tropgon`: polygon invariants, moduli dimensions, beehive triangulations and
//! gonality certificates from the command line.
//!
//! Exit codes: 0 on success, 1 when a mathematical check is falsified, 2 on usage or
//! input errors.

mod commands;
mod input;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use tropgon_core::graph::GonalityCap;

#[derive(Parser)]
#[command(name = "tropgon", version, about = "Lattice polygons, tropical skeletons and their gonality")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for parallel stages (defaults to one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest skeleton (in vertices) for exhaustive divisorial gonality.
    #[arg(long, global = true)]
    gonality_cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Verb {
    /// Genus, width, expected gonality, maximality and related invariants.
    Analyze {
        #[arg(long)]
        polygon: String,
    },
    /// Moduli dimension checked against the gonality upper bound.
    Dim {
        #[arg(long)]
        polygon: String,
    },
    /// Push every edge out by lattice distance one.
    Relax {
        #[arg(long)]
        polygon: String,
    },
    /// Maximal non-hyperelliptic polygons of a genus (or of every genus up to a bound).
    Enumerate {
        #[arg(long, conflicts_with = "max_genus", required_unless_present = "max_genus")]
        genus: Option<usize>,
        #[arg(long)]
        max_genus: Option<usize>,
    },
    /// Largest locus dimension per gonality.
    Table {
        #[arg(long, conflicts_with = "max_genus", required_unless_present = "max_genus")]
        genus: Option<usize>,
        #[arg(long)]
        max_genus: Option<usize>,
    },
    /// Beehive triangulation of a maximal non-hyperelliptic polygon.
    Beehive {
        #[arg(long)]
        polygon: String,
    },
    /// Skeleton of a polygon's beehive, or of a given triangulation.
    Skeleton {
        #[arg(long, required_unless_present = "triangulation")]
        polygon: Option<String>,
        #[arg(long)]
        triangulation: Option<String>,
    },
    /// Divisorial gonality of a graph, and the order of a scramble on it.
    Gonality {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        scramble: Option<String>,
    },
    /// Gonality certificate: scramble lower bound against expected gonality.
    Certify {
        #[arg(long)]
        polygon: String,
        /// Use this triangulation instead of the beehive.
        #[arg(long)]
        triangulation: Option<String>,
    },
    /// Run the acceptance checks and print a pass/fail table.
    Verify {
        /// Run every criterion (the default when none is selected).
        #[arg(long)]
        all: bool,
        /// Only run the listed criteria.
        #[arg(long = "criterion", value_parser = clap::value_parser!(u32).range(1..=11))]
        criteria: Vec<u32>,
        #[arg(long, default_value_t = 8)]
        max_genus: usize,
    },
}

/// Why a command stopped early.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Falsified(String),
}

impl From<tropgon_core::Error> for Failure {
    fn from(e: tropgon_core::Error) -> Self {
        match e {
            tropgon_core::Error::Falsified(m) => Failure::Falsified(format!("falsified: {m}\n")),
            other => Failure::Usage(other.to_string()),
        }
    }
}

pub struct Settings {
    pub format: Format,
    pub cap: GonalityCap,
}

fn run(cli: Cli) -> Result<String, Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let mut cap = GonalityCap::default();
    if let Some(v) = cli.gonality_cap {
        cap.max_vertices = v;
    }
    let s = Settings { format: cli.format, cap };
    match cli.verb {
        Verb::Analyze { polygon } => commands::analyze(&s, &input::polygon(&polygon)?),
        Verb::Dim { polygon } => commands::dim(&s, &input::polygon(&polygon)?),
        Verb::Relax { polygon } => commands::relax(&s, &input::polygon(&polygon)?),
        Verb::Enumerate { genus, max_genus } => commands::enumerate(&s, genus_range(genus, max_genus)),
        Verb::Table { genus, max_genus } => commands::table(&s, genus, genus_range(genus, max_genus)),
        Verb::Beehive { polygon } => commands::beehive(&s, &input::polygon(&polygon)?),
        Verb::Skeleton { polygon, triangulation } => {
            let t = match (triangulation, polygon) {
                (Some(t), _) => input::triangulation(&t)?,
                (None, Some(p)) => tropgon_core::triangulation::build_beehive(&input::polygon(&p)?)?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            commands::skeleton(&s, &t)
        }
        Verb::Gonality { graph, scramble } => {
            let sc = scramble.map(|a| input::scramble(&a)).transpose()?;
            commands::gonality(&s, &input::graph(&graph)?, sc.as_ref())
        }
        Verb::Certify { polygon, triangulation } => {
            let p = input::polygon(&polygon)?;
            let t = triangulation.map(|a| input::triangulation(&a)).transpose()?;
            commands::certify(&s, &p, t)
        }
        Verb::Verify { all: _, criteria, max_genus } => verify::run(&s, &criteria, max_genus),
    }
}

fn genus_range(genus: Option<usize>, max_genus: Option<usize>) -> std::ops::RangeInclusive<usize> {
    match (genus, max_genus) {
        (Some(g), _) => g..=g,
        (None, Some(m)) => 2..=m,
        (None, None) => unreachable!("clap requires one of the two"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Falsified(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
