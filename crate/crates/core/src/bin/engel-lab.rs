use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use engel_lab::analysis::DEFAULT_CLIQUE_LIMIT;
use engel_lab::cli::{
    any_failed, cmd_analyze, cmd_graph, cmd_group, cmd_sweep_single_arcs, cmd_verify_paper, records_to_csv,
    records_to_json, CliError, GraphFormat, GraphKind, GroupCache, GroupSpec, SweepFamily, VerifyOptions,
    DEFAULT_MAX_ORDER, SCHEMA,
};

#[derive(Parser)]
#[command(name = "engel-lab", version, about = "Engel graphs of finite groups")]
struct Cli {
    /// Build every group from scratch and write nothing to the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Reduced,
    Full,
    Directed,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormatArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Order census, left Engel elements and structural flags.
    Group { spec: GroupSpec },
    /// Print the reduced, full or directed Engel graph.
    Graph {
        spec: GroupSpec,
        #[arg(long, value_enum, default_value = "reduced")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormatArg,
    },
    /// Shape, clique number, planarity, surface class, spectra and Zagreb indices.
    Analyze {
        spec: GroupSpec,
        #[arg(long, default_value_t = DEFAULT_CLIQUE_LIMIT)]
        clique_limit: usize,
    },
    /// Check the closed-form claims over the built-in group families.
    VerifyPaper {
        /// Comma-separated subset of D, DQ, F, P, other.
        #[arg(long, value_delimiter = ',')]
        families: Vec<SweepFamily>,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Count single arcs outside L(G) for built-in soluble groups.
    SweepSingleArcs {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
    },
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let cache = if cli.no_cache { GroupCache::disabled() } else { GroupCache::from_env() };
    let text = match cli.command {
        Command::Group { spec } => pretty(&cmd_group(&spec, &cache.get_or_build(&spec)?)),
        Command::Graph { spec, kind, format } => {
            let kind = match kind {
                KindArg::Reduced => GraphKind::Reduced,
                KindArg::Full => GraphKind::Full,
                KindArg::Directed => GraphKind::Directed,
            };
            let format = match format {
                GraphFormatArg::Dot => GraphFormat::Dot,
                GraphFormatArg::Json => GraphFormat::Json,
            };
            cmd_graph(&spec, &cache.get_or_build(&spec)?, kind, format)?
        }
        Command::Analyze { spec, clique_limit } => pretty(&cmd_analyze(&spec, &cache.get_or_build(&spec)?, clique_limit)?),
        Command::VerifyPaper { families, max_order, format, output } => {
            let families = if families.is_empty() { SweepFamily::ALL.to_vec() } else { families };
            let records = cmd_verify_paper(&VerifyOptions { families, max_order, cache });
            let text = match format {
                TableFormat::Csv => records_to_csv(&records)?,
                TableFormat::Json => records_to_json(&records),
            };
            match output {
                Some(path) => fs::write(&path, &text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            return Ok(if any_failed(&records) { ExitCode::from(1) } else { ExitCode::SUCCESS });
        }
        Command::SweepSingleArcs { max_order, format } => {
            let rows = cmd_sweep_single_arcs(max_order, &cache)?;
            match format {
                TableFormat::Json => pretty(&serde_json::json!({ "schema": SCHEMA, "rows": rows })),
                TableFormat::Csv => {
                    let mut w = csv::Writer::from_writer(vec![]);
                    for row in &rows {
                        w.serialize(row).map_err(|e| CliError::Io(e.to_string()))?;
                    }
                    String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.to_string()))?).expect("utf-8")
                }
            }
        }
    };
    println!("{}", text.trim_end());
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("engel-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
