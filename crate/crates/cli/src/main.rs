//! `omnisig`: potential and actual signatures of group actions on surfaces.
//!
//! Exit codes: 0 success, 1 definitive negative, 2 inconclusive, 64 usage
//! error, 65 data or format error.

mod group_spec;

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use omnisig::genvec::{search_with, SearchOptions, SearchOutcome, Witness, DEFAULT_NODE_LIMIT};
use omnisig::groups::{parse_catalog_file, validate_catalog, GroupCatalog};
use omnisig::lattice::{
    contains_genus, join_genus, meet_genus, verify_lattice_with_limit, LatticeError,
    DEFAULT_MAX_VERIFY_GENUS,
};
use omnisig::realization::{
    actual_relative, verify_omnipersistent_actual, RealizationStatus, RealizeOptions,
};
use omnisig::signature::MAX_GENUS;
use omnisig::{enumerate_potential, Genus, Signature};

use group_spec::GroupSpec;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser, Debug)]
#[command(
    name = "omnisig",
    version,
    about = "Potential and actual signatures of finite group actions on closed surfaces"
)]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the potential signatures of a genus in canonical order.
    Enumerate {
        #[arg(long, value_parser = parse_genus)]
        genus: Genus,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Genus-level lattice operations.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Empirical checks against full enumerations or explicit vectors.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Search one group for a generating vector of a signature.
    Search {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        signature: Signature,
        /// Node budget before the search gives up as inconclusive.
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        nodes: u64,
    },
    /// Decide realizability of every potential signature against a catalog.
    Realize(RealizeArgs),
    /// Group catalog files.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand, Debug)]
enum LatticeCommand {
    /// Prints whether `P_σ ⊆ P_σ'`.
    Contains {
        #[arg(value_parser = parse_genus)]
        sigma: Genus,
        #[arg(value_parser = parse_genus)]
        sigma_prime: Genus,
    },
    /// Prints the genus of `P_σ ∩ P_σ'`.
    Meet {
        #[arg(value_parser = parse_genus)]
        sigma: Genus,
        #[arg(value_parser = parse_genus)]
        sigma_prime: Genus,
    },
    /// Prints the least genus whose set contains both.
    Join {
        #[arg(value_parser = parse_genus)]
        sigma: Genus,
        #[arg(value_parser = parse_genus)]
        sigma_prime: Genus,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Re-derives containment, meet, join and consecutive intersections.
    Lattice {
        #[arg(long, default_value_t = DEFAULT_MAX_VERIFY_GENUS)]
        max_genus: u64,
    },
    /// Verifies the four constructions present in every genus.
    Omnipersistent {
        #[arg(long, value_parser = parse_genus)]
        from: Genus,
        #[arg(long, value_parser = parse_genus)]
        to: Genus,
    },
}

#[derive(Args, Debug)]
struct RealizeArgs {
    #[arg(long, value_parser = parse_genus)]
    genus: Genus,
    /// Extra catalog file, merged with the built-in groups.
    #[arg(long, env = "OMNISIG_CATALOG")]
    catalog: Option<PathBuf>,
    /// Orders for which the catalog is asserted to list every group, e.g. "24,48".
    #[arg(long)]
    complete_orders: Option<String>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Node budget per group search.
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    nodes: u64,
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// Builds every entry and reports declared against computed orders.
    Validate { path: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ListFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

fn parse_genus(text: &str) -> Result<Genus, String> {
    let value: u64 = text
        .trim()
        .parse()
        .map_err(|_| format!("`{text}` is not a non-negative integer"))?;
    if value > MAX_GENUS {
        return Err(format!(
            "genus {value} exceeds the supported maximum {MAX_GENUS}"
        ));
    }
    Genus::new(value).map_err(|e| e.to_string())
}

fn parse_orders(text: &str) -> Result<BTreeSet<u64>, String> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| match t.trim().parse::<u64>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(format!("`{t}` is not a positive group order")),
        })
        .collect()
}

/// Why a command stopped early.
enum Failure {
    Usage(anyhow::Error),
    Data(anyhow::Error),
}

type Outcome = Result<u8, Failure>;

fn data<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Data(e.into())
}

fn emit(text: &str) -> Outcome {
    let mut out = io::stdout().lock();
    let written = out
        .write_all(text.as_bytes())
        .and_then(|()| {
            if text.ends_with('\n') {
                Ok(())
            } else {
                out.write_all(b"\n")
            }
        })
        .and_then(|()| out.flush());
    match written {
        // a closed reader (e.g. `| head`) is not an error
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(0),
        Err(e) => Err(data(e)),
        Ok(()) => Ok(0),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(data)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Enumerate { genus, format } => {
            let set = enumerate_potential(genus);
            let text = match format {
                ListFormat::Text => set.to_text(),
                ListFormat::Json => set.to_json(),
                ListFormat::Csv => set.to_csv(),
            };
            emit(&text)
        }
        Command::Lattice(cmd) => match cmd {
            LatticeCommand::Contains { sigma, sigma_prime } => {
                emit(&contains_genus(sigma, sigma_prime).to_string())
            }
            LatticeCommand::Meet { sigma, sigma_prime } => {
                emit(&meet_genus(sigma, sigma_prime).to_string())
            }
            LatticeCommand::Join { sigma, sigma_prime } => {
                let joined = join_genus(sigma, sigma_prime).map_err(data)?;
                emit(&joined.to_string())
            }
        },
        Command::Verify(VerifyCommand::Lattice { max_genus }) => {
            let reports = verify_lattice_with_limit(max_genus, DEFAULT_MAX_VERIFY_GENUS).map_err(
                |e| match e {
                    LatticeError::GuardExceeded { .. } | LatticeError::TooSmall(_) => {
                        Failure::Usage(e.into())
                    }
                    LatticeError::Overflow(..) => data(e),
                },
            )?;
            let failed = reports.iter().filter(|r| !r.matches).count();
            eprintln!(
                "{} lattice checks, {failed} with counterexamples",
                reports.len()
            );
            emit(&to_json(&reports)?)?;
            Ok(if failed == 0 { 0 } else { EXIT_NEGATIVE })
        }
        Command::Verify(VerifyCommand::Omnipersistent { from, to }) => {
            if from > to {
                return Err(Failure::Usage(anyhow::anyhow!(
                    "--from {from} is greater than --to {to}"
                )));
            }
            let report = verify_omnipersistent_actual(from, to);
            emit(&to_json(&report)?)?;
            Ok(if report.pass { 0 } else { EXIT_NEGATIVE })
        }
        Command::Search {
            group,
            signature,
            nodes,
        } => {
            let g = group
                .build()
                .with_context(|| format!("cannot build group {group}"))
                .map_err(Failure::Data)?;
            eprintln!(
                "searching {} (order {}) for {signature}",
                g.name(),
                g.order()
            );
            let result = search_with(&g, &signature, SearchOptions { node_limit: nodes });
            match result.outcome {
                SearchOutcome::Found(vector) => {
                    emit(&to_json(&Witness::new(&g, &signature, &vector))?)
                }
                SearchOutcome::Absent => {
                    emit(&format!(
                        "definitive absence: {signature} has no generating vector in {} ({} nodes)",
                        g.name(),
                        result.nodes
                    ))?;
                    Ok(EXIT_NEGATIVE)
                }
                SearchOutcome::Inconclusive => {
                    emit(&format!(
                        "inconclusive: node budget of {nodes} exhausted searching {} for {signature}",
                        g.name()
                    ))?;
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        Command::Realize(args) => realize(args),
        Command::Catalog(CatalogCommand::Validate { path }) => {
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("cannot read {}", path.display()))
                .map_err(Failure::Data)?;
            let file = parse_catalog_file(&text).map_err(data)?;
            let report = validate_catalog(&file);
            emit(&to_json(&report)?)?;
            Ok(if report.is_valid() { 0 } else { EXIT_DATA })
        }
    }
}

fn realize(args: RealizeArgs) -> Outcome {
    let complete_orders = match &args.complete_orders {
        Some(text) => parse_orders(text)
            .map_err(|e| Failure::Usage(anyhow::anyhow!("--complete-orders: {e}")))?,
        None => BTreeSet::new(),
    };
    let mut catalog = GroupCatalog::builtin();
    if let Some(path) = &args.catalog {
        let extra = omnisig::groups::load_catalog(path).map_err(data)?;
        catalog.merge(&extra).map_err(data)?;
    }
    let options = RealizeOptions {
        complete_orders,
        search: SearchOptions {
            node_limit: args.nodes,
        },
    };
    eprintln!(
        "realizing genus {} against {} catalog groups",
        args.genus,
        catalog.len()
    );
    let report = actual_relative(args.genus, &catalog, &options);
    let count = |s| report.records.iter().filter(|r| r.status == s).count();
    let inconclusive = count(RealizationStatus::Inconclusive);
    eprintln!(
        "{} signatures: {} realized, {} absent in catalog, {} not realizable, {inconclusive} inconclusive",
        report.records.len(),
        count(RealizationStatus::Realized),
        count(RealizationStatus::AbsentInCatalog),
        count(RealizationStatus::NotRealizable),
    );
    match args.format {
        ReportFormat::Json => {
            let mut value = serde_json::to_value(&report).map_err(data)?;
            value["complete_orders_flag"] = args.complete_orders.clone().into();
            emit(&to_json(&value)?)?
        }
        ReportFormat::Csv => {
            if let Some(flag) = &args.complete_orders {
                eprintln!("complete orders asserted: {flag}");
            }
            emit(&report.to_csv())?
        }
    };
    Ok(if inconclusive == 0 {
        0
    } else {
        EXIT_INCONCLUSIVE
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Data(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_DATA)
        }
    }
}
