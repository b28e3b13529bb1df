//! Command-line front end: generate family graphs, run the constructive
//! labelers, verify labelings, run the exhaustive oracle, sweep parameter
//! ranges, and export DOT renderings.
//!
//! Exit codes are a stable contract:
//!   0  success / the labeling is balanced
//!   1  certified not balanced (verification or exhaustive search)
//!   2  usage or input error
//!   3  degenerate-case rejection (P_1 ∘ P_1)

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tepc::doc::{read_graph, read_labeling, write_graph, GraphDoc, LabelingDoc, ReportDoc, VerdictDoc};
use tepc::{
    build_cycle, build_fan, build_path, build_paw, build_wheel, corona, find_tepc_with,
    label_corona_path_cycle, label_corona_path_path, predicted_tally, tally, Family,
    PredictedTally, SearchOptions, DEFAULT_EDGE_BUDGET,
};

mod sweep;

#[derive(Parser)]
#[command(
    name = "tepc",
    about = "Total edge product cordial labelings of corona graphs: generate, label, check, search, sweep, export",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenFamily {
    Path,
    Cycle,
    Fan,
    Wheel,
    Paw,
    CoronaPp,
    CoronaPc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LabelFamily {
    Pp,
    Pc,
}

impl From<LabelFamily> for Family {
    fn from(f: LabelFamily) -> Family {
        match f {
            LabelFamily::Pp => Family::PathPath,
            LabelFamily::Pc => Family::PathCycle,
        }
    }
}

/// Inclusive integer range written `lo..hi`, or a single value.
#[derive(Clone, Copy, Debug)]
pub struct RangeArg {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("invalid range bound {t:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(RangeArg { lo, hi })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph and write its JSON document.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        /// Spine length for corona families, length for path.
        #[arg(short)]
        n: Option<usize>,
        /// Copy/rim size for corona, cycle, fan, wheel.
        #[arg(short)]
        m: Option<usize>,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the constructive labeler for a corona family member.
    Label {
        #[arg(value_enum)]
        family: LabelFamily,
        n: usize,
        m: usize,
        /// Write the labeling document here; inlined in the record otherwise.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify a labeling file against a graph file.
    Check {
        graph: PathBuf,
        labeling: PathBuf,
    },
    /// Exhaustively search all 2^|E| labelings of a graph.
    Search {
        graph: PathBuf,
        /// Refuse graphs with more edges than this.
        #[arg(long, default_value_t = DEFAULT_EDGE_BUDGET)]
        budget: usize,
        /// Count every balanced labeling instead of stopping at the first.
        #[arg(long)]
        count: bool,
        /// Worker threads; the report is identical for every value.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Sweep a parameter range and report one row per (n, m).
    Sweep {
        #[arg(value_enum)]
        family: LabelFamily,
        n_range: RangeArg,
        m_range: RangeArg,
        /// Confirm rows by exhaustive search when |E| is at most this;
        /// 0 disables confirmation.
        #[arg(long, default_value_t = 16)]
        oracle_max_edges: usize,
        /// Line-delimited JSON instead of the aligned table.
        #[arg(long)]
        json: bool,
    },
    /// Export a graph (optionally with a labeling) as a DOT document.
    Export {
        graph: PathBuf,
        labeling: Option<PathBuf>,
        /// DOT output (the default and only format).
        #[arg(long)]
        dot: bool,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn exit_code_for(err: &tepc::Error) -> u8 {
    match err {
        tepc::Error::NotLabelable(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn run(command: Command) -> tepc::Result<u8> {
    match command {
        Command::Gen {
            family,
            n,
            m,
            output,
        } => cmd_gen(family, n, m, output),
        Command::Label {
            family,
            n,
            m,
            output,
        } => cmd_label(family.into(), n, m, output),
        Command::Check { graph, labeling } => cmd_check(&graph, &labeling),
        Command::Search {
            graph,
            budget,
            count,
            jobs,
        } => cmd_search(&graph, budget, count, jobs),
        Command::Sweep {
            family,
            n_range,
            m_range,
            oracle_max_edges,
            json,
        } => sweep::cmd_sweep(family.into(), n_range, m_range, oracle_max_edges, json),
        Command::Export {
            graph,
            labeling,
            dot: _,
            output,
        } => cmd_export(&graph, labeling.as_deref(), output),
    }
}

fn require(param: Option<usize>, name: &str, family: &str) -> tepc::Result<usize> {
    param.ok_or_else(|| {
        tepc::Error::InvalidParameter(format!("family {family} needs -{name}"))
    })
}

fn cmd_gen(
    family: GenFamily,
    n: Option<usize>,
    m: Option<usize>,
    output: Option<PathBuf>,
) -> tepc::Result<u8> {
    let graph = match family {
        GenFamily::Path => build_path(require(n, "n", "path")?)?,
        GenFamily::Cycle => build_cycle(require(m, "m", "cycle")?)?,
        GenFamily::Fan => build_fan(require(m, "m", "fan")?)?,
        GenFamily::Wheel => build_wheel(require(m, "m", "wheel")?)?,
        GenFamily::Paw => build_paw(),
        GenFamily::CoronaPp => {
            let spine = build_path(require(n, "n", "corona-pp")?)?;
            let copies = build_path(require(m, "m", "corona-pp")?)?;
            corona(&spine, &copies)?.0
        }
        GenFamily::CoronaPc => {
            let spine = build_path(require(n, "n", "corona-pc")?)?;
            let copies = build_cycle(require(m, "m", "corona-pc")?)?;
            corona(&spine, &copies)?.0
        }
    };
    match output {
        Some(path) => write_graph(&path, &graph)?,
        None => println!("{}", GraphDoc::from_graph(&graph).to_json()),
    }
    Ok(0)
}

#[derive(Serialize)]
struct PredictedDoc {
    e0: usize,
    e1: usize,
    v0: usize,
    v1: usize,
    source: String,
}

impl From<PredictedTally> for PredictedDoc {
    fn from(p: PredictedTally) -> Self {
        PredictedDoc {
            e0: p.e0,
            e1: p.e1,
            v0: p.v0,
            v1: p.v1,
            source: p.source.label().to_string(),
        }
    }
}

#[derive(Serialize)]
struct LabelRecord {
    family: String,
    n: usize,
    m: usize,
    case: String,
    verdict: VerdictDoc,
    predicted: Option<PredictedDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labeling_path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labeling: Option<LabelingDoc>,
}

fn cmd_label(family: Family, n: usize, m: usize, output: Option<PathBuf>) -> tepc::Result<u8> {
    let (graph, _, labeling, tag) = match family {
        Family::PathPath => label_corona_path_path(n, m)?,
        Family::PathCycle => label_corona_path_cycle(n, m)?,
    };
    let t = tally(&graph, &labeling)?;
    let doc = LabelingDoc::inline(&graph, &labeling);
    let mut record = LabelRecord {
        family: family.code().to_string(),
        n,
        m,
        case: tag.label().to_string(),
        verdict: VerdictDoc::from_tally(&t),
        predicted: predicted_tally(family, n, m).ok().map(Into::into),
        labeling_path: None,
        labeling: None,
    };
    match output {
        Some(path) => {
            std::fs::write(&path, doc.to_json() + "\n")?;
            record.labeling_path = Some(path.display().to_string());
        }
        None => record.labeling = Some(doc),
    }
    println!("{}", serde_json::to_string(&record)?);
    Ok(0)
}

fn cmd_check(graph_path: &Path, labeling_path: &Path) -> tepc::Result<u8> {
    let graph = read_graph(graph_path)?;
    let labeling = read_labeling(labeling_path)?.bind_to(&graph)?;
    let t = tally(&graph, &labeling)?;
    println!("{}", VerdictDoc::from_tally(&t).to_json());
    Ok(if t.is_balanced() { 0 } else { 1 })
}

fn cmd_search(graph_path: &Path, budget: usize, count: bool, jobs: usize) -> tepc::Result<u8> {
    let graph = read_graph(graph_path)?;
    let opts = SearchOptions {
        edge_budget: budget,
        jobs,
    };
    let report = if count {
        tepc::count_tepc_with(&graph, &opts)?
    } else {
        find_tepc_with(&graph, &opts)?
    };
    println!("{}", ReportDoc::from_report(&report).to_json());
    Ok(if report.witness.is_some() { 0 } else { 1 })
}

fn cmd_export(
    graph_path: &Path,
    labeling_path: Option<&Path>,
    output: Option<PathBuf>,
) -> tepc::Result<u8> {
    let graph = read_graph(graph_path)?;
    let labeling = labeling_path
        .map(|p| read_labeling(p)?.bind_to(&graph))
        .transpose()?;
    let dot = tepc::dot::to_dot(&graph, labeling.as_ref())?;
    match output {
        Some(path) => std::fs::write(path, dot)?,
        None => print!("{dot}"),
    }
    Ok(0)
}
