use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use localsys::arith::Rational;
use localsys::classical::VeryEven;
use localsys::goldens;
use localsys::lifting::Lattice;
use localsys_cli::{self as cli, Output};

#[derive(Parser)]
#[command(name = "localsys", version, about = "Lifts of local systems on nilpotent orbits")]
struct Args {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[arg(long, value_enum, default_value_t = LatticeArg::Adjoint, global = true)]
    lattice: LatticeArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeArg {
    Adjoint,
    SimplyConnected,
}

#[derive(Clone, Copy, ValueEnum)]
enum VeryEvenArg {
    I,
    Ii,
}

#[derive(Subcommand)]
enum Command {
    /// List the nilpotent orbits of a group
    Orbits { group: String },
    /// Descent and character of the lift of a weight
    Lift {
        group: String,
        /// orbit name, e.g. "D4(a1)", or its diagram digits
        orbit: String,
        /// weight such as w4, w2-w7, 3w1 or 0,1,0,0
        weight: String,
    },
    /// Shortest weight with the same character as the given one
    MinimalLift {
        group: String,
        orbit: String,
        weight: String,
        /// largest norm to search; defaults to the norm of the given weight
        #[arg(long)]
        bound: Option<String>,
    },
    /// Component group and lifts for a partition in types B, C, D or A
    Classical {
        /// parts separated by commas
        partition: String,
        /// 0 for orthogonal, 1 for symplectic
        #[arg(long, default_value_t = 0)]
        epsilon: u8,
        /// treat the partition as a nilpotent of SL_l
        #[arg(long)]
        type_a: bool,
        /// which of the two very even orbits to use
        #[arg(long, value_enum, default_value_t = VeryEvenArg::I)]
        very_even: VeryEvenArg,
    },
    /// Check every golden table row
    Verify,
    /// Golden tables of a group with computed traces
    Tables { group: String },
    /// Descent of fundamental weights at the nonzero nodes
    Report { group: String, orbit: Option<String> },
}

fn run(args: &Args) -> localsys::Result<(Output, bool)> {
    let lattice = match args.lattice {
        LatticeArg::Adjoint => Lattice::Adjoint,
        LatticeArg::SimplyConnected => Lattice::SimplyConnected,
    };
    Ok(match &args.command {
        Command::Orbits { group } => (Output::Orbits(cli::orbits(cli::parse_group(group)?)), true),
        Command::Lift { group, orbit, weight } => (
            Output::Lift(cli::lift(cli::parse_group(group)?, orbit, weight, lattice)?),
            true,
        ),
        Command::MinimalLift {
            group,
            orbit,
            weight,
            bound,
        } => {
            let bound = bound
                .as_deref()
                .map(|b| {
                    b.parse::<Rational>().map_err(|_| localsys::Error::Parse {
                        what: "norm bound",
                        input: b.to_string(),
                    })
                })
                .transpose()?;
            let r = cli::minimal_lift(cli::parse_group(group)?, orbit, weight, bound)?;
            (Output::MinimalLift(r), true)
        }
        Command::Classical {
            partition,
            epsilon,
            type_a,
            very_even,
        } => {
            let parts = cli::parse_parts(partition)?;
            if *type_a {
                (Output::TypeA(cli::type_a(&parts)?), true)
            } else {
                let variant = match very_even {
                    VeryEvenArg::I => VeryEven::I,
                    VeryEvenArg::Ii => VeryEven::II,
                };
                (
                    Output::Classical(cli::classical_orbit(*epsilon, &parts, variant)?),
                    true,
                )
            }
        }
        Command::Verify => {
            let report = goldens::verify_all();
            let ok = report.passed();
            (Output::Verify(report), ok)
        }
        Command::Tables { group } => {
            let t = cli::tables(cli::parse_group(group)?);
            let ok = t.rows.iter().all(|r| r.passed);
            (Output::Tables(t), ok)
        }
        Command::Report { group, orbit } => {
            let r = cli::report(cli::parse_group(group)?, orbit.as_deref())?;
            (Output::Report(r), true)
        }
    })
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (output, ok) = match run(&args) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match args.format {
        Format::Text => print!("{}", output.text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&output).expect("records serialize")),
        Format::Csv => {
            let (header, rows) = output.table();
            let mut w = csv::Writer::from_writer(std::io::stdout());
            let written = w
                .write_record(&header)
                .and_then(|_| rows.iter().try_for_each(|r| w.write_record(r)))
                .and_then(|_| w.flush().map_err(Into::into));
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
