//! Command-line entry point.
//!
//! Exit codes: 0 on success, 1 for usage errors, 2 for invalid input files
//! or values, 3 when the `check` suite finds a failing property.

use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use tiltlab::commands::{self, Rendered};
use tiltlab::CliError;

/// How results are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    /// Human-readable table.
    Table,
    /// Machine-readable JSON.
    Json,
}

#[derive(Parser)]
#[command(
    name = "tiltlab",
    version,
    about = "Exact workbench for quiver representations, tilting modules, and cluster variables"
)]
struct Cli {
    /// Output format; defaults to a table on terminals and JSON otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots of the quadratic form.
    Roots {
        /// Quiver description (JSON).
        #[arg(long)]
        quiver: PathBuf,
    },
    /// Build (or reuse) the catalog of exceptional modules.
    Catalog {
        /// Quiver description (JSON).
        #[arg(long)]
        quiver: PathBuf,
        /// Total-dimension cap; defaults to the largest root on finite types.
        #[arg(long)]
        cap: Option<i64>,
    },
    /// Dimensions of Hom and Ext1 between two modules.
    Homext {
        /// Quiver description (JSON).
        #[arg(long)]
        quiver: PathBuf,
        /// Source as a dimension vector, e.g. "1,1,0".
        #[arg(long)]
        from: Option<String>,
        /// Target as a dimension vector.
        #[arg(long)]
        to: Option<String>,
        /// Source as an explicit representation file (JSON).
        #[arg(long)]
        rep_from: Option<PathBuf>,
        /// Target as an explicit representation file (JSON).
        #[arg(long)]
        rep_to: Option<PathBuf>,
    },
    /// Enumerate the tilting modules of the catalog.
    Tilting {
        /// Quiver description (JSON).
        #[arg(long)]
        quiver: PathBuf,
        /// Total-dimension cap; defaults to the largest root on finite types.
        #[arg(long)]
        cap: Option<i64>,
    },
    /// Complete an almost complete tilting module in every possible way.
    Complements {
        /// Quiver description (JSON).
        #[arg(long)]
        quiver: PathBuf,
        /// Semicolon-separated dimension vectors, e.g. "1,0,0;1,1,1".
        #[arg(long)]
        modules: String,
        /// Total-dimension cap; defaults to the largest root on finite types.
        #[arg(long)]
        cap: Option<i64>,
    },
    /// Volume identities for the tilting fan.
    Volume {
        /// Quiver description (JSON).
        #[arg(long)]
        quiver: PathBuf,
        /// Partial-sum length over the preprojective Kronecker wall crossings.
        #[arg(long)]
        partial: Option<usize>,
        /// Weights "x,y" for the weighted Kronecker sum (requires --partial).
        #[arg(long)]
        weights: Option<String>,
    },
    /// The simplicial complex of tilting modules (optionally extended).
    Complex {
        /// Quiver description (JSON).
        #[arg(long)]
        quiver: PathBuf,
        /// Total-dimension cap; defaults to the largest root on finite types.
        #[arg(long)]
        cap: Option<i64>,
        /// Include the shifted projectives (negative simple vertices).
        #[arg(long)]
        extended: bool,
        /// Also write the full complex as pretty JSON to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Locate a lattice point in the fan of the extended complex.
    Fan {
        /// Quiver description (JSON).
        #[arg(long)]
        quiver: PathBuf,
        /// Point as a comma-separated integer vector, e.g. "1,-1,0".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Total-dimension cap; defaults to the largest root on finite types.
        #[arg(long)]
        cap: Option<i64>,
    },
    /// Enumerate cluster variables and clusters by mutation.
    Clusters {
        /// Quiver description (JSON).
        #[arg(long)]
        quiver: PathBuf,
        /// Mutation depth to explore before giving up.
        #[arg(long, default_value_t = 16)]
        depth_cap: usize,
        /// Cross-check denominators against the module catalog.
        #[arg(long)]
        verify: bool,
        /// Catalog cap used with --verify; defaults to the largest root.
        #[arg(long)]
        cap: Option<i64>,
    },
    /// Apply a sequence of seed mutations and print the resulting seed.
    Mutate {
        /// Quiver description (JSON).
        #[arg(long)]
        quiver: PathBuf,
        /// Comma-separated vertex ids to mutate at, in order.
        #[arg(long)]
        at: String,
    },
    /// Cluster-tilted algebra data from a tilting module or a presentation.
    Cta {
        /// Quiver description (JSON); required with --modules.
        #[arg(long)]
        quiver: Option<PathBuf>,
        /// Semicolon-separated dimension vectors of a tilting module.
        #[arg(long)]
        modules: Option<String>,
        /// Algebra presentation with zero relations (JSON).
        #[arg(long)]
        presentation: Option<PathBuf>,
        /// Total-dimension cap; defaults to the largest root on finite types.
        #[arg(long)]
        cap: Option<i64>,
    },
    /// Run the full invariant suite and report one line per property.
    Check {},
}

fn run(command: Command) -> Result<Rendered, CliError> {
    match command {
        Command::Roots { quiver } => {
            let (q, _) = tiltlab::formats::load_quiver(&quiver)?;
            commands::roots(&q)
        }
        Command::Catalog { quiver, cap } => {
            let (q, bytes) = tiltlab::formats::load_quiver(&quiver)?;
            commands::catalog(&q, &bytes, cap)
        }
        Command::Homext {
            quiver,
            from,
            to,
            rep_from,
            rep_to,
        } => {
            let (q, _) = tiltlab::formats::load_quiver(&quiver)?;
            commands::homext(
                &q,
                from.as_deref(),
                to.as_deref(),
                rep_from.as_deref(),
                rep_to.as_deref(),
            )
        }
        Command::Tilting { quiver, cap } => {
            let (q, bytes) = tiltlab::formats::load_quiver(&quiver)?;
            commands::tilting(&q, &bytes, cap)
        }
        Command::Complements {
            quiver,
            modules,
            cap,
        } => {
            let (q, bytes) = tiltlab::formats::load_quiver(&quiver)?;
            commands::complements_cmd(&q, &bytes, cap, &modules)
        }
        Command::Volume {
            quiver,
            partial,
            weights,
        } => {
            let (q, _) = tiltlab::formats::load_quiver(&quiver)?;
            commands::volume(&q, partial, weights.as_deref())
        }
        Command::Complex {
            quiver,
            cap,
            extended,
            out,
        } => {
            let (q, bytes) = tiltlab::formats::load_quiver(&quiver)?;
            commands::complex_cmd(&q, &bytes, cap, extended, out.as_deref())
        }
        Command::Fan { quiver, point, cap } => {
            let (q, bytes) = tiltlab::formats::load_quiver(&quiver)?;
            commands::fan(&q, &bytes, cap, &point)
        }
        Command::Clusters {
            quiver,
            depth_cap,
            verify,
            cap,
        } => {
            let (q, bytes) = tiltlab::formats::load_quiver(&quiver)?;
            commands::clusters(&q, &bytes, cap, depth_cap, verify)
        }
        Command::Mutate { quiver, at } => {
            let (q, _) = tiltlab::formats::load_quiver(&quiver)?;
            commands::mutate_cmd(&q, &at)
        }
        Command::Cta {
            quiver,
            modules,
            presentation,
            cap,
        } => match (quiver, modules, presentation) {
            (Some(qp), Some(m), None) => {
                let (q, bytes) = tiltlab::formats::load_quiver(&qp)?;
                commands::cta_dims(&q, &bytes, cap, &m)
            }
            (None, None, Some(p)) => commands::cta_quiver(&p),
            _ => Err(CliError::Usage(
                "pass either --quiver with --modules, or --presentation alone".into(),
            )),
        },
        Command::Check {} => unreachable!("check is handled directly in main"),
    }
}

fn pick_format(flag: Option<OutputFormat>) -> OutputFormat {
    flag.unwrap_or_else(|| {
        if std::io::stdout().is_terminal() {
            OutputFormat::Table
        } else {
            OutputFormat::Json
        }
    })
}

/// Writes the result to stdout. Write errors (e.g. a closed pipe when the
/// output is truncated by `head`) end the program quietly instead of
/// panicking.
fn print_rendered(rendered: &Rendered, format: OutputFormat) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let status = match format {
        OutputFormat::Json => {
            let text = serde_json::to_string_pretty(&rendered.json)
                .expect("rendered values are valid JSON");
            writeln!(out, "{text}")
        }
        OutputFormat::Table => writeln!(out, "{}", rendered.table),
    };
    let _ = status;
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let kind = err.kind();
            if kind == ErrorKind::DisplayHelp || kind == ErrorKind::DisplayVersion {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };
    let format = pick_format(cli.format);
    if matches!(cli.command, Command::Check {}) {
        return match commands::check() {
            Ok((rendered, failed)) => {
                print_rendered(&rendered, format);
                if failed > 0 {
                    ExitCode::from(3)
                } else {
                    ExitCode::SUCCESS
                }
            }
            Err(err) => {
                eprintln!("error: {err}");
                ExitCode::from(err.exit_code())
            }
        };
    }
    match run(cli.command) {
        Ok(rendered) => {
            print_rendered(&rendered, format);
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
