//! Command-line pipeline: synth -> build -> metrics / communities /
//! temporal / layout / export, with file-based stage boundaries.
//!
//! Exit codes: 0 success, 1 analysis error (bad data, degenerate graph),
//! 2 usage or IO error (bad flags, unreadable/unwritable files).

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use deptflow_core::build::{
    build_static, build_yearly, BuildConfig, ThresholdScope, Windowing,
};
use deptflow_core::community::{louvain, Partition, UGraph};
use deptflow_core::episode::{build_episodes, Episode};
use deptflow_core::graph::DeptGraph;
use deptflow_core::layout::{expand, force_atlas2, LayoutParams};
use deptflow_core::metrics::{
    degree_histogram, node_metrics, summarize, top_k, DegreeKind, METRIC_NAMES,
};
use deptflow_core::syngen::{generate, CorpusSpec};
use deptflow_core::temporal::{
    correlation_matrix, node_metric_series, window_summary, TemporalError,
};

use crate::config::{ConfigError, FileConfig};
use crate::formats::{
    coords_json, dot, events_csv, gexf, graph_json, histogram_csv, metrics_json,
    partition_json, series_csv, svg, temporal_files, truth_json, FormatError,
};
use crate::ingest::{parse_event_log_with, ColumnMap};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot open {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Analysis(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Read { .. } | CliError::Write { .. } => 2,
            CliError::Analysis(_) => 1,
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "deptflow",
    version,
    about = "Department-transfer network analysis: ingest event logs, build directed weighted graphs, compute centrality/community/temporal metrics, lay out and export"
)]
pub struct Cli {
    /// TOML config file; command-line flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Seed for every seeded stage (communities, layout, synth).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Suppress informational output.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    NodeWeightedDegree,
    EdgeWeight,
}

impl From<ScopeArg> for ThresholdScope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::NodeWeightedDegree => ThresholdScope::NodeWeightedDegree,
            ScopeArg::EdgeWeight => ThresholdScope::EdgeWeight,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Gexf,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a synthetic event log with planted communities and hubs.
    Synth {
        /// Output CSV path.
        #[arg(long, default_value = "events.csv")]
        out: PathBuf,
        /// Optional ground-truth JSON path.
        #[arg(long)]
        truth: Option<PathBuf>,
        #[arg(long)]
        patients: Option<usize>,
        /// Comma-separated community sizes, e.g. 8,8,8,8.
        #[arg(long, value_name = "N,N,...")]
        community_sizes: Option<String>,
        #[arg(long)]
        hubs: Option<usize>,
        #[arg(long)]
        episodes_mean: Option<f64>,
        #[arg(long)]
        visits_mean: Option<f64>,
        #[arg(long)]
        p_cross: Option<f64>,
        /// Inclusive year range, e.g. 2010:2016.
        #[arg(long, value_name = "START:END")]
        years: Option<String>,
    },
    /// Build the static transfer graph (and per-year graphs) from a log.
    Build {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Static-network threshold: drop departments (or edges, per
        /// --threshold-scope) with fewer total interactions.
        #[arg(long)]
        min_weighted_degree: Option<u64>,
        /// Same threshold for each one-year window.
        #[arg(long)]
        window_min_weighted_degree: Option<u64>,
        #[arg(long, value_enum)]
        threshold_scope: Option<ScopeArg>,
        /// Skip the per-year temporal graphs.
        #[arg(long)]
        no_windows: bool,
        /// Keep consecutive same-department visits instead of collapsing.
        #[arg(long)]
        keep_repeats: bool,
    },
    /// Per-node metrics, network summary, top tables, degree histograms.
    Metrics {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "metrics.json")]
        out: PathBuf,
        /// Rows per top table.
        #[arg(long)]
        top: Option<usize>,
        /// Directory for the degree histogram CSVs.
        #[arg(long)]
        hist_dir: Option<PathBuf>,
    },
    /// Louvain community detection on the symmetrized graph.
    Communities {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "partition.json")]
        out: PathBuf,
        #[arg(long)]
        resolution: Option<f64>,
    },
    /// Year-windowed summary table, correlation matrix, node series.
    Temporal {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long)]
        window_min_weighted_degree: Option<u64>,
        #[arg(long, value_enum)]
        threshold_scope: Option<ScopeArg>,
        #[arg(long)]
        keep_repeats: bool,
        #[arg(long)]
        resolution: Option<f64>,
        /// Per-node series to emit, e.g. --series "hub0:betweenness".
        #[arg(long, value_name = "DEPT:METRIC")]
        series: Vec<String>,
    },
    /// ForceAtlas2 layout plus expansion; writes SVG and coordinates.
    Layout {
        #[arg(long)]
        graph: PathBuf,
        /// Optional partition.json to color nodes by community.
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long, default_value = "layout.svg")]
        out_svg: PathBuf,
        #[arg(long, default_value = "coords.json")]
        out_coords: PathBuf,
        #[arg(long)]
        iterations: Option<u32>,
        /// Repulsion scaling k_r.
        #[arg(long)]
        scaling: Option<f64>,
        #[arg(long)]
        gravity: Option<f64>,
        #[arg(long)]
        linlog: bool,
        #[arg(long)]
        edge_weight_influence: Option<f64>,
        /// Expansion factor applied after the layout.
        #[arg(long)]
        expand: Option<f64>,
    },
    /// Export a graph as GEXF or DOT.
    Export {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        out: PathBuf,
        /// Optional coords.json for GEXF viz positions.
        #[arg(long)]
        coords: Option<PathBuf>,
        /// Optional partition.json for the community attribute.
        #[arg(long)]
        partition: Option<PathBuf>,
    },
}

struct Ctx {
    config: FileConfig,
    seed: Option<u64>,
    quiet: bool,
}

impl Ctx {
    fn seed(&self) -> u64 {
        self.seed.or(self.config.seed).unwrap_or(42)
    }

    fn top_k(&self, flag: Option<usize>) -> usize {
        flag.or(self.config.top_k).unwrap_or(5)
    }

    fn columns(&self) -> ColumnMap {
        let defaults = ColumnMap::default();
        let section = &self.config.columns;
        ColumnMap {
            patient_id: section.patient_id.clone().unwrap_or(defaults.patient_id),
            episode_id: section.episode_id.clone().unwrap_or(defaults.episode_id),
            department: section.department.clone().unwrap_or(defaults.department),
            timestamp: section.timestamp.clone().unwrap_or(defaults.timestamp),
        }
    }

    fn info(&self, message: std::fmt::Arguments) {
        if !self.quiet {
            println!("{message}");
        }
    }
}

macro_rules! info {
    ($ctx:expr, $($arg:tt)*) => {
        $ctx.info(format_args!($($arg)*))
    };
}

pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let config = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let ctx = Ctx {
        config,
        seed: cli.seed,
        quiet: cli.quiet,
    };
    match cli.command {
        Command::Synth {
            out,
            truth,
            patients,
            community_sizes,
            hubs,
            episodes_mean,
            visits_mean,
            p_cross,
            years,
        } => cmd_synth(
            &ctx,
            &out,
            truth.as_deref(),
            patients,
            community_sizes.as_deref(),
            hubs,
            episodes_mean,
            visits_mean,
            p_cross,
            years.as_deref(),
        ),
        Command::Build {
            input,
            out_dir,
            min_weighted_degree,
            window_min_weighted_degree,
            threshold_scope,
            no_windows,
            keep_repeats,
        } => {
            let build_config = resolve_build_config(
                &ctx,
                min_weighted_degree,
                window_min_weighted_degree,
                threshold_scope,
                if no_windows {
                    Some(Windowing::None)
                } else {
                    None
                },
            )?;
            let collapse = resolve_collapse(&ctx, keep_repeats);
            cmd_build(&ctx, &input, &out_dir, &build_config, collapse)
        }
        Command::Metrics {
            graph,
            out,
            top,
            hist_dir,
        } => cmd_metrics(&ctx, &graph, &out, ctx.top_k(top), hist_dir.as_deref()),
        Command::Communities {
            graph,
            out,
            resolution,
        } => cmd_communities(&ctx, &graph, &out, resolve_resolution(&ctx, resolution)),
        Command::Temporal {
            input,
            out_dir,
            window_min_weighted_degree,
            threshold_scope,
            keep_repeats,
            resolution,
            series,
        } => {
            let build_config = resolve_build_config(
                &ctx,
                None,
                window_min_weighted_degree,
                threshold_scope,
                Some(Windowing::CalendarYear),
            )?;
            let collapse = resolve_collapse(&ctx, keep_repeats);
            cmd_temporal(
                &ctx,
                &input,
                &out_dir,
                &build_config,
                collapse,
                resolve_resolution(&ctx, resolution),
                &series,
            )
        }
        Command::Layout {
            graph,
            partition,
            out_svg,
            out_coords,
            iterations,
            scaling,
            gravity,
            linlog,
            edge_weight_influence,
            expand: expand_factor,
        } => {
            let params = resolve_layout_params(
                &ctx,
                iterations,
                scaling,
                gravity,
                linlog,
                edge_weight_influence,
            );
            let factor = expand_factor
                .or(ctx.config.layout.expand)
                .unwrap_or(1.2);
            cmd_layout(
                &ctx,
                &graph,
                partition.as_deref(),
                &out_svg,
                &out_coords,
                &params,
                factor,
            )
        }
        Command::Export {
            graph,
            format,
            out,
            coords,
            partition,
        } => cmd_export(
            &ctx,
            &graph,
            format,
            &out,
            coords.as_deref(),
            partition.as_deref(),
        ),
    }
}

fn resolve_build_config(
    ctx: &Ctx,
    static_min: Option<u64>,
    window_min: Option<u64>,
    scope: Option<ScopeArg>,
    windowing: Option<Windowing>,
) -> Result<BuildConfig, CliError> {
    let defaults = BuildConfig::default();
    let section = &ctx.config.build;
    let scope = match scope {
        Some(s) => s.into(),
        None => match section.threshold_scope.as_deref() {
            None => defaults.threshold_scope,
            Some("node-weighted-degree") => ThresholdScope::NodeWeightedDegree,
            Some("edge-weight") => ThresholdScope::EdgeWeight,
            Some(other) => {
                return Err(CliError::Usage(format!(
                    "unknown threshold_scope `{other}` (expected node-weighted-degree or edge-weight)"
                )))
            }
        },
    };
    let window = match windowing {
        Some(w) => w,
        None => match section.window.as_deref() {
            None => defaults.window,
            Some("calendar-year") => Windowing::CalendarYear,
            Some("none") => Windowing::None,
            Some(other) => {
                return Err(CliError::Usage(format!(
                    "unknown window `{other}` (expected calendar-year or none)"
                )))
            }
        },
    };
    Ok(BuildConfig {
        static_min_interactions: static_min
            .or(section.min_weighted_degree)
            .unwrap_or(defaults.static_min_interactions),
        window_min_interactions: window_min
            .or(section.window_min_weighted_degree)
            .unwrap_or(defaults.window_min_interactions),
        threshold_scope: scope,
        window,
    })
}

fn resolve_collapse(ctx: &Ctx, keep_repeats: bool) -> bool {
    if keep_repeats {
        false
    } else {
        ctx.config.build.collapse_repeats.unwrap_or(true)
    }
}

fn resolve_resolution(ctx: &Ctx, flag: Option<f64>) -> f64 {
    flag.or(ctx.config.community.resolution).unwrap_or(1.0)
}

fn resolve_layout_params(
    ctx: &Ctx,
    iterations: Option<u32>,
    scaling: Option<f64>,
    gravity: Option<f64>,
    linlog: bool,
    edge_weight_influence: Option<f64>,
) -> LayoutParams {
    let defaults = LayoutParams::default();
    let section = &ctx.config.layout;
    LayoutParams {
        iterations: iterations.or(section.iterations).unwrap_or(defaults.iterations),
        scaling: scaling.or(section.scaling).unwrap_or(defaults.scaling),
        gravity: gravity.or(section.gravity).unwrap_or(defaults.gravity),
        linlog: linlog || section.linlog.unwrap_or(false),
        edge_weight_influence: edge_weight_influence
            .or(section.edge_weight_influence)
            .unwrap_or(defaults.edge_weight_influence),
        seed: ctx.seed(),
        global_speed: defaults.global_speed,
        swing_tolerance: defaults.swing_tolerance,
    }
}

fn open_input(path: &Path) -> Result<BufReader<File>, CliError> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|source| CliError::Read {
            path: path.display().to_string(),
            source,
        })
}

fn create_output(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        })
}

fn finish_output(path: &Path, mut writer: BufWriter<File>) -> Result<(), CliError> {
    writer.flush().map_err(|source| CliError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn write_format<F>(path: &Path, write: F) -> Result<(), CliError>
where
    F: FnOnce(&mut BufWriter<File>) -> Result<(), FormatError>,
{
    let mut writer = create_output(path)?;
    write(&mut writer).map_err(|e| match e {
        FormatError::Io(source) => CliError::Write {
            path: path.display().to_string(),
            source,
        },
        other => CliError::Analysis(format!("{}: {other}", path.display())),
    })?;
    finish_output(path, writer)
}

fn read_graph_file(path: &Path) -> Result<DeptGraph, CliError> {
    let reader = open_input(path)?;
    graph_json::read_graph(reader)
        .map_err(|e| CliError::Analysis(format!("{}: {e}", path.display())))
}

fn load_episodes(ctx: &Ctx, path: &Path, collapse: bool) -> Result<Vec<Episode>, CliError> {
    let reader = open_input(path)?;
    let records = parse_event_log_with(reader, &ctx.columns())
        .map_err(|e| CliError::Analysis(format!("{}: {e}", path.display())))?;
    Ok(build_episodes(&records, collapse))
}

fn read_partition_doc(
    path: &Path,
    graph: &DeptGraph,
) -> Result<Partition, CliError> {
    let reader = open_input(path)?;
    let doc = partition_json::read_partition(reader)
        .map_err(|e| CliError::Analysis(format!("{}: {e}", path.display())))?;
    let assignment = partition_json::assignment_for(&doc, graph)
        .map_err(|e| CliError::Analysis(format!("{}: {e}", path.display())))?;
    Ok(Partition {
        assignment,
        q: doc.q,
        seed: doc.seed,
        resolution: doc.resolution,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_synth(
    ctx: &Ctx,
    out: &Path,
    truth_path: Option<&Path>,
    patients: Option<usize>,
    community_sizes: Option<&str>,
    hubs: Option<usize>,
    episodes_mean: Option<f64>,
    visits_mean: Option<f64>,
    p_cross: Option<f64>,
    years: Option<&str>,
) -> Result<(), CliError> {
    let mut spec = CorpusSpec {
        seed: ctx.seed(),
        ..CorpusSpec::default()
    };
    if let Some(p) = patients {
        spec.n_patients = p;
    }
    if let Some(sizes) = community_sizes {
        spec.community_sizes = sizes
            .split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad community size `{s}`")))
            })
            .collect::<Result<_, _>>()?;
    }
    if let Some(h) = hubs {
        spec.n_hubs = h;
    }
    if let Some(e) = episodes_mean {
        spec.episodes_per_patient = e;
    }
    if let Some(v) = visits_mean {
        spec.visits_per_episode = v;
    }
    if let Some(p) = p_cross {
        spec.p_cross = p;
    }
    if let Some(range) = years {
        let (start, end) = range
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("bad year range `{range}`, expected START:END")))?;
        let parse_year = |s: &str| {
            s.trim()
                .parse::<i32>()
                .map_err(|_| CliError::Usage(format!("bad year `{s}`")))
        };
        spec.year_range = (parse_year(start)?, parse_year(end)?);
    }

    let (records, truth) = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    write_format(out, |w| events_csv::write_records(w, &records))?;
    info!(
        ctx,
        "synthesized {} records for {} patients -> {}",
        records.len(),
        spec.n_patients,
        out.display()
    );
    if let Some(path) = truth_path {
        write_format(path, |w| truth_json::write_truth(w, &truth))?;
        info!(ctx, "ground truth -> {}", path.display());
    }
    Ok(())
}

fn cmd_build(
    ctx: &Ctx,
    input: &Path,
    out_dir: &Path,
    build_config: &BuildConfig,
    collapse: bool,
) -> Result<(), CliError> {
    let episodes = load_episodes(ctx, input, collapse)?;
    let graph =
        build_static(&episodes, build_config).map_err(|e| CliError::Analysis(e.to_string()))?;
    let graph_path = out_dir.join("graph.json");
    write_format(&graph_path, |w| graph_json::write_graph(w, &graph))?;
    info!(
        ctx,
        "static network: {} departments, {} edges -> {}",
        graph.node_count(),
        graph.edge_count(),
        graph_path.display()
    );
    if build_config.window == Windowing::CalendarYear {
        let yearly = build_yearly(&episodes, build_config)
            .map_err(|e| CliError::Analysis(e.to_string()))?;
        for (year, g) in &yearly {
            let path = out_dir.join(format!("{year}.graph.json"));
            write_format(&path, |w| graph_json::write_graph(w, g))?;
            info!(
                ctx,
                "{year}: {} departments, {} edges -> {}",
                g.node_count(),
                g.edge_count(),
                path.display()
            );
        }
    }
    Ok(())
}

fn cmd_metrics(
    ctx: &Ctx,
    graph_path: &Path,
    out: &Path,
    k: usize,
    hist_dir: Option<&Path>,
) -> Result<(), CliError> {
    let graph = read_graph_file(graph_path)?;
    let summary = summarize(&graph).map_err(|e| CliError::Analysis(e.to_string()))?;
    let nodes = node_metrics(&graph);
    let mut top = BTreeMap::new();
    for metric in METRIC_NAMES {
        let rows = top_k(&graph, &nodes, metric, k)
            .map_err(|e| CliError::Analysis(e.to_string()))?;
        top.insert(metric.to_string(), rows);
    }
    let doc = metrics_json::build_doc(&graph, &summary, &nodes, &top);
    write_format(out, |w| metrics_json::write_metrics(w, &doc))?;
    info!(
        ctx,
        "metrics for {} departments (APL {:.3}, ACC {:.3}) -> {}",
        summary.node_count,
        summary.apl,
        summary.acc,
        out.display()
    );

    let hist_dir = hist_dir.unwrap_or_else(|| out.parent().unwrap_or(Path::new(".")));
    for (kind, name) in [
        (DegreeKind::Plain, "degree_hist.csv"),
        (DegreeKind::Weighted, "weighted_degree_hist.csv"),
    ] {
        let histogram = degree_histogram(&graph, kind);
        let path = hist_dir.join(name);
        write_format(&path, |w| histogram_csv::write_histogram(w, &histogram))?;
    }
    Ok(())
}

fn cmd_communities(
    ctx: &Ctx,
    graph_path: &Path,
    out: &Path,
    resolution: f64,
) -> Result<(), CliError> {
    let graph = read_graph_file(graph_path)?;
    let ug = UGraph::symmetrize(&graph);
    let partition =
        louvain(&ug, ctx.seed(), resolution).map_err(|e| CliError::Analysis(e.to_string()))?;
    let doc = partition_json::build_doc(&graph, &partition);
    write_format(out, |w| partition_json::write_partition(w, &doc))?;
    info!(
        ctx,
        "{} communities, q = {:.4} -> {}",
        doc.communities.len(),
        partition.q,
        out.display()
    );
    Ok(())
}

fn cmd_temporal(
    ctx: &Ctx,
    input: &Path,
    out_dir: &Path,
    build_config: &BuildConfig,
    collapse: bool,
    resolution: f64,
    series_specs: &[String],
) -> Result<(), CliError> {
    let episodes = load_episodes(ctx, input, collapse)?;
    let networks =
        build_yearly(&episodes, build_config).map_err(|e| CliError::Analysis(e.to_string()))?;
    let table = window_summary(&networks, ctx.seed(), resolution)
        .map_err(|e| CliError::Analysis(e.to_string()))?;
    let matrix = match correlation_matrix(&table) {
        Ok(m) => Some(m),
        Err(TemporalError::TooFewWindows(n)) => {
            if !ctx.quiet {
                eprintln!("warning: {n} window(s), correlation matrix skipped");
            }
            None
        }
        Err(e) => return Err(CliError::Analysis(e.to_string())),
    };

    let json_path = out_dir.join("temporal.json");
    let doc = temporal_files::build_doc(&table, matrix.as_ref());
    write_format(&json_path, |w| temporal_files::write_temporal_json(w, &doc))?;
    let csv_path = out_dir.join("temporal.csv");
    write_format(&csv_path, |w| temporal_files::write_temporal_csv(w, &table))?;
    info!(
        ctx,
        "{} windows -> {} and {}",
        table.rows.len(),
        json_path.display(),
        csv_path.display()
    );

    for spec in series_specs {
        let (label, metric) = spec.rsplit_once(':').ok_or_else(|| {
            CliError::Usage(format!("bad series spec `{spec}`, expected DEPT:METRIC"))
        })?;
        let series = node_metric_series(&networks, label, metric)
            .map_err(|e| CliError::Analysis(e.to_string()))?;
        let sanitized: String = label
            .chars()
            .map(|c| if c.is_alphanumeric() { c } else { '_' })
            .collect();
        let path = out_dir.join(format!("series_{sanitized}_{metric}.csv"));
        write_format(&path, |w| series_csv::write_series(w, &series))?;
        info!(ctx, "series {label}:{metric} -> {}", path.display());
    }
    Ok(())
}

fn cmd_layout(
    ctx: &Ctx,
    graph_path: &Path,
    partition_path: Option<&Path>,
    out_svg: &Path,
    out_coords: &Path,
    params: &LayoutParams,
    expand_factor: f64,
) -> Result<(), CliError> {
    if expand_factor <= 0.0 {
        return Err(CliError::Usage(format!(
            "expansion factor must be positive, got {expand_factor}"
        )));
    }
    let graph = read_graph_file(graph_path)?;
    let partition = partition_path
        .map(|p| read_partition_doc(p, &graph))
        .transpose()?;
    let coords = expand(&force_atlas2(&graph, params), expand_factor);
    let coords_doc = coords_json::build_doc(&graph, &coords)
        .map_err(|e| CliError::Analysis(e.to_string()))?;
    write_format(out_coords, |w| coords_json::write_coords(w, &coords_doc))?;
    write_format(out_svg, |w| {
        svg::render_svg(w, &graph, &coords, partition.as_ref())
    })?;
    info!(
        ctx,
        "layout of {} nodes ({} iterations, expand {expand_factor}) -> {} and {}",
        graph.node_count(),
        params.iterations,
        out_svg.display(),
        out_coords.display()
    );
    Ok(())
}

fn cmd_export(
    ctx: &Ctx,
    graph_path: &Path,
    format: ExportFormat,
    out: &Path,
    coords_path: Option<&Path>,
    partition_path: Option<&Path>,
) -> Result<(), CliError> {
    let graph = read_graph_file(graph_path)?;
    let coords = match coords_path {
        Some(path) => {
            let reader = open_input(path)?;
            let doc = coords_json::read_coords(reader)
                .map_err(|e| CliError::Analysis(format!("{}: {e}", path.display())))?;
            Some(
                coords_json::coords_for_graph(&doc, &graph)
                    .map_err(|e| CliError::Analysis(format!("{}: {e}", path.display())))?,
            )
        }
        None => None,
    };
    let partition = partition_path
        .map(|p| read_partition_doc(p, &graph))
        .transpose()?;
    match format {
        ExportFormat::Gexf => write_format(out, |w| {
            gexf::write_gexf(w, &graph, coords.as_deref(), partition.as_ref())
        })?,
        ExportFormat::Dot => {
            if coords.is_some() && !ctx.quiet {
                eprintln!("warning: DOT export ignores coordinates");
            }
            write_format(out, |w| dot::write_dot(w, &graph))?
        }
    }
    info!(ctx, "exported {} -> {}", graph_path.display(), out.display());
    Ok(())
}
