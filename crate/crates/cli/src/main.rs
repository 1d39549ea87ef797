//! Command-line front end: exact counts and tables, conversion between
//! chain maps and path strings (with optional SVG drawings), class
//! listings, and the verification suites.
//!
//! Exit codes: 0 on success, 1 when verification reports a failure, 2 on
//! usage or parse errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pathmaps::chainmap::ClassId;
use pathmaps::counting::{self, FamilyId};
use pathmaps::enumeration::{
    enumerate_class_with_guard, enumerate_paths_with_guard, DEFAULT_GUARD,
};
use pathmaps::harness::{self, Fixture, HarnessConfig};
use pathmaps::{bijection, ChainMap, LatticePath};

#[derive(Parser)]
#[command(
    name = "pathmaps",
    version,
    about = "Lattice paths, order-preserving partial transformations, exact counts, and exhaustive verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact value from a counting family.
    ///
    /// Families: r, s, catalan, delannoy, c-po, f-pc, g-pc, g-c, j-c, f-po,
    /// g-po, j-po, g-o, j-o, e-pc, e-nr, e-tn, e-pn.
    Count {
        family: String,
        #[arg(long)]
        n: usize,
        /// Second parameter for the two-parameter families (and for
        /// rectangular Delannoy values).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Print a whole family as a table.
    Table {
        family: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Convert between chain maps and path strings.
    #[command(subcommand)]
    Convert(ConvertCommand),
    /// List every member of a class, or of a filtered path family.
    ///
    /// Classes: pc, c, po, o, del, q, qp — or `paths` with optional
    /// filters.
    Enumerate {
        class: String,
        #[arg(long)]
        n: usize,
        /// Keep paths weakly below the diagonal (paths only).
        #[arg(long)]
        subdiagonal: bool,
        /// Drop paths with a diagonal step (paths only).
        #[arg(long)]
        no_diag: bool,
        /// Drop paths ending in a horizontal step (paths only).
        #[arg(long)]
        last_not_h: bool,
        /// Raise the enumeration size guard (default 12).
        #[arg(long)]
        guard: Option<usize>,
    },
    /// Run the verification suites and print the report as JSON.
    Verify {
        #[arg(long)]
        orders_max: Option<usize>,
        #[arg(long)]
        bijection_max: Option<usize>,
        #[arg(long)]
        fgj_max: Option<usize>,
        #[arg(long)]
        semigroup_max: Option<usize>,
        #[arg(long)]
        phi_max: Option<usize>,
        #[arg(long)]
        idempotents_max: Option<usize>,
        #[arg(long)]
        idem_paths_max: Option<usize>,
        #[arg(long)]
        tnpn_max: Option<usize>,
        /// Fault-injection fixture (test-only): perturb-r or drop-empty-qp.
        #[arg(long)]
        fixture: Option<String>,
    },
}

#[derive(Subcommand)]
enum ConvertCommand {
    /// Map (JSON, e.g. `{"n":4,"m":4,"map":[[1,1],[3,1]]}`) to a path
    /// string.
    ToPath {
        input: String,
        /// Also write an SVG drawing of the path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Path string (e.g. HVVDVHH) to a map in JSON form.
    ToMap {
        input: String,
        /// Side of the square the path lives in.
        #[arg(long)]
        n: usize,
        /// Also write an SVG drawing of the path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Count { family, n, k } => {
            let family: FamilyId = family.parse().map_err(|e| format!("{e}"))?;
            let value = family.eval(n, k).map_err(|e| format!("{e}"))?;
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { family, max_n, format } => {
            let family: FamilyId = family.parse().map_err(|e| format!("{e}"))?;
            let table = counting::table(family, max_n);
            match format {
                OutputFormat::Csv => print!("{}", table.to_csv()),
                OutputFormat::Json => println!("{}", table.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert(convert) => run_convert(convert),
        Command::Enumerate { class, n, subdiagonal, no_diag, last_not_h, guard } => {
            let guard = guard.unwrap_or(DEFAULT_GUARD);
            if class == "paths" {
                let filter = pathmaps::PathFilter { subdiagonal, no_diag, last_not_h };
                let paths =
                    enumerate_paths_with_guard(n, filter, guard).map_err(|e| format!("{e}"))?;
                let mut count = 0usize;
                for p in paths {
                    println!("{}", p.render());
                    count += 1;
                }
                println!("count: {count}");
            } else {
                if subdiagonal || no_diag || last_not_h {
                    return Err("path filters apply only to the `paths` listing".to_string());
                }
                let class: ClassId = class.parse().map_err(|e| format!("{e}"))?;
                let maps =
                    enumerate_class_with_guard(class, n, guard).map_err(|e| format!("{e}"))?;
                let mut count = 0usize;
                for m in maps {
                    println!("{}", m.to_json());
                    count += 1;
                }
                println!("count: {count}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            orders_max,
            bijection_max,
            fgj_max,
            semigroup_max,
            phi_max,
            idempotents_max,
            idem_paths_max,
            tnpn_max,
            fixture,
        } => {
            let defaults = HarnessConfig::default();
            let fixture = match fixture {
                Some(name) => name.parse::<Fixture>().map_err(|e| format!("{e}"))?,
                None => Fixture::None,
            };
            let config = HarnessConfig {
                orders_max: orders_max.unwrap_or(defaults.orders_max),
                bijection_max: bijection_max.unwrap_or(defaults.bijection_max),
                fgj_max: fgj_max.unwrap_or(defaults.fgj_max),
                semigroup_max: semigroup_max.unwrap_or(defaults.semigroup_max),
                phi_max: phi_max.unwrap_or(defaults.phi_max),
                idempotent_max: idempotents_max.unwrap_or(defaults.idempotent_max),
                idempotent_path_max: idem_paths_max.unwrap_or(defaults.idempotent_path_max),
                tn_pn_max: tnpn_max.unwrap_or(defaults.tn_pn_max),
                fixture,
                ..defaults
            };
            let report = harness::verify_all(&config);
            println!("{}", report.to_json());
            if report.all_pass() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn run_convert(convert: ConvertCommand) -> Result<ExitCode, String> {
    match convert {
        ConvertCommand::ToPath { input, svg } => {
            let map: ChainMap =
                serde_json::from_str(&input).map_err(|e| format!("invalid map: {e}"))?;
            let path = bijection::map_to_path(&map);
            println!("{}", path.render());
            write_svg(svg, &path)?;
            Ok(ExitCode::SUCCESS)
        }
        ConvertCommand::ToMap { input, n, svg } => {
            let path = LatticePath::parse(&input, n).map_err(|e| format!("{e}"))?;
            let map = bijection::path_to_map(&path);
            println!("{}", map.to_json());
            write_svg(svg, &path)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn write_svg(target: Option<PathBuf>, path: &LatticePath) -> Result<(), String> {
    if let Some(file) = target {
        std::fs::write(&file, path.to_svg())
            .map_err(|e| format!("cannot write {}: {e}", file.display()))?;
    }
    Ok(())
}
