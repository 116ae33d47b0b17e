//! Command-line front end: `partition`, `verify`, `simulate`, `tables`, `bounds`.
//!
//! Exit codes: 0 success (or feasible and connected), 1 a negative finding
//! (infeasible, disconnected, failed bound check), 2 bad usage or input.
//!
//! With `--out PATH` the result goes to `PATH` and a run manifest (command,
//! full argument echo, tool version, seeds, output paths) to
//! `PATH.manifest.json`; without it the result goes to standard output.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::backbone::{build_backbone, degree_histogram, is_connected, BackboneGraph, NodeId};
use crate::bounds::{
    gaf_alt_shape_area, scheme_max_area, theoretical_bound, verify_chain_construction, AltShape, BoundSet, ChainReport,
    PUBLISHED_LIFETIME_PCT,
};
use crate::constraints::{
    adversarial_actives, analytic_report, brute_force_worst_distances, check_requirements, maximal_params, ReqReport,
    WorstDistances,
};
use crate::energysim::{median, run_seed_sweep, LifetimeCriterion, SimConfig};
use crate::error::{invalid, Error, Result};
use crate::partition::{build_partition, FieldSpec, Partition, Scheme, SchemeParams};

#[derive(Debug, Parser)]
#[command(name = "gaf-cells", version, about = "GAF-family cell partitions, feasibility checks, lifetime simulation and bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Build a partition and write it as JSON.
    Partition(PartitionArgs),
    /// Check Req I / Req II and backbone connectivity of a partition.
    Verify(VerifyArgs),
    /// Run lifetime simulations over a range of seeds; CSV output.
    Simulate(SimulateArgs),
    /// Maximal cell areas and lifetime percentages; CSV output.
    Tables(TablesArgs),
    /// Overlap, chain and average-cell bounds with a Monte Carlo chain check; JSON output.
    Bounds(BoundsArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Partition(_) => "partition",
            Command::Verify(_) => "verify",
            Command::Simulate(_) => "simulate",
            Command::Tables(_) => "tables",
            Command::Bounds(_) => "bounds",
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FieldArgs {
    #[arg(long, default_value_t = 10.0)]
    pub width: f64,
    #[arg(long, default_value_t = 10.0)]
    pub height: f64,
    #[arg(long = "radio-range", default_value_t = 1.0)]
    pub radio_range: f64,
}

impl FieldArgs {
    fn field(&self) -> Result<FieldSpec> {
        FieldSpec::new(self.width, self.height, self.radio_range)
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CellArgs {
    /// Cell side (triangle: height); defaults to the maximal value at d = 0.
    #[arg(long)]
    pub r: Option<f64>,
    /// Subcell side.
    #[arg(long, default_value_t = 0.0)]
    pub d: f64,
    /// Two-type period (columns per type-B column, counting it).
    #[arg(long, default_value_t = 4)]
    pub k: u32,
}

impl CellArgs {
    fn params(&self, scheme: Scheme, range: f64) -> Result<SchemeParams> {
        let params = match (scheme, self.r) {
            (Scheme::EhgafTwoType, _) => SchemeParams { d: self.d, ..SchemeParams::two_type(self.k) },
            (_, Some(r)) => SchemeParams { scheme, r, d: self.d, k: self.k },
            (_, None) if self.d == 0.0 => maximal_params(scheme, range, self.k)?,
            (_, None) => return Err(invalid("--r is required when --d > 0")),
        };
        params.validate()?;
        Ok(params)
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PartitionArgs {
    #[arg(long)]
    pub scheme: Scheme,
    #[command(flatten)]
    pub cell: CellArgs,
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    /// Partition JSON written by `partition`; otherwise built from the flags.
    #[arg(long, conflicts_with = "scheme")]
    pub partition: Option<PathBuf>,
    #[arg(long, required_unless_present = "partition")]
    pub scheme: Option<Scheme>,
    #[command(flatten)]
    pub cell: CellArgs,
    #[command(flatten)]
    pub field: FieldArgs,
    /// Also run the sampling oracle at this pitch.
    #[arg(long)]
    pub resolution: Option<f64>,
    /// Rotation rounds the oracle inspects (HGAF with d > 0).
    #[arg(long, default_value_t = 64)]
    pub rounds: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SimulateArgs {
    #[arg(long, required_unless_present = "all_schemes")]
    pub scheme: Option<Scheme>,
    /// Simulate every scheme at its maximal cell dimensions.
    #[arg(long, conflicts_with = "scheme")]
    pub all_schemes: bool,
    #[command(flatten)]
    pub cell: CellArgs,
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, default_value_t = 1000)]
    pub nodes: u32,
    #[arg(long, default_value_t = 10.0)]
    pub initial_energy: f64,
    #[arg(long, default_value_t = 1.0)]
    pub e_active: f64,
    #[arg(long, default_value_t = 0.0)]
    pub e_sleep: f64,
    #[arg(long, default_value_t = 1)]
    pub epoch_length: u64,
    /// first-cell-dead, backbone-disconnected or cells-dead:FRACTION.
    #[arg(long, default_value = "first-cell-dead")]
    pub criterion: LifetimeCriterion,
    #[arg(long, default_value_t = 10_000_000)]
    pub max_rounds: u64,
    /// First seed; runs use seed, seed+1, ...
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of seeds.
    #[arg(long, default_value_t = 1)]
    pub seeds: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TablesArgs {
    #[arg(long = "radio-range", default_value_t = 1.0)]
    pub radio_range: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BoundsArgs {
    #[arg(long = "radio-range", default_value_t = 1.0)]
    pub radio_range: f64,
    /// Longest chain evaluated.
    #[arg(long, default_value_t = 5)]
    pub max_n: u32,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct RunManifest<'a> {
    pub command: &'a str,
    pub config: &'a Command,
    pub version: &'a str,
    pub seeds: Vec<u64>,
    pub outputs: Vec<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct VerifyOutput {
    pub report: ReqReport,
    pub analytic: ReqReport,
    pub brute_force: Option<WorstDistances>,
    pub connected: bool,
    pub component_count: usize,
    pub link_violations: usize,
    pub max_edge_length: f64,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub backbone: BackboneGraph,
}

#[derive(Debug, Serialize)]
pub struct BoundsOutput {
    pub bounds: BoundSet,
    pub gaf_triangle_cell: f64,
    pub gaf_hexagon_cell: f64,
    pub chain_checks: Vec<ChainReport>,
}

/// Outcome of a subcommand: the bytes to emit and whether the finding was positive.
struct Outcome {
    body: Vec<u8>,
    ok: bool,
    seeds: Vec<u64>,
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                return 2;
            }
            let _ = stdout.write_all(text.as_bytes());
            return 0;
        }
    };
    match execute(&cli.command, stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

/// Run a parsed command, writing to `--out` (plus manifest) or `stdout`.
pub fn execute(command: &Command, stdout: &mut dyn Write) -> Result<bool> {
    let outcome = match command {
        Command::Partition(a) => cmd_partition(a)?,
        Command::Verify(a) => cmd_verify(a)?,
        Command::Simulate(a) => cmd_simulate(a)?,
        Command::Tables(a) => cmd_tables(a)?,
        Command::Bounds(a) => cmd_bounds(a)?,
    };
    match out_path(command) {
        Some(path) => {
            write_file(path, &outcome.body)?;
            let manifest = RunManifest {
                command: command.name(),
                config: command,
                version: env!("CARGO_PKG_VERSION"),
                seeds: outcome.seeds.clone(),
                outputs: vec![path.to_path_buf()],
            };
            write_file(&manifest_path(path), &to_json(&manifest)?)?;
        }
        None => stdout.write_all(&outcome.body).map_err(|e| io_error("standard output", e))?,
    }
    Ok(outcome.ok)
}

fn out_path(command: &Command) -> Option<&Path> {
    match command {
        Command::Partition(a) => a.out.as_deref(),
        Command::Verify(a) => a.out.as_deref(),
        Command::Simulate(a) => a.out.as_deref(),
        Command::Tables(a) => a.out.as_deref(),
        Command::Bounds(a) => a.out.as_deref(),
    }
}

/// `results.csv` → `results.csv.manifest.json`.
pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

fn io_error(what: &str, e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("{what}: {e}"))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| io_error(&path.display().to_string(), e))
}

fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut body = serde_json::to_vec_pretty(value).map_err(|e| invalid(e.to_string()))?;
    body.push(b'\n');
    Ok(body)
}

fn csv_error(e: csv::Error) -> Error {
    invalid(format!("csv: {e}"))
}

fn cmd_partition(args: &PartitionArgs) -> Result<Outcome> {
    let field = args.field.field()?;
    let partition = build_partition(field, args.cell.params(args.scheme, field.radio_range)?)?;
    Ok(Outcome { body: to_json(&partition)?, ok: true, seeds: vec![] })
}

fn load_partition(args: &VerifyArgs) -> Result<Partition> {
    if let Some(path) = &args.partition {
        let text = fs::read_to_string(path).map_err(|e| io_error(&path.display().to_string(), e))?;
        return serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {e}", path.display())));
    }
    let scheme = args.scheme.ok_or_else(|| invalid("either --partition or --scheme is required"))?;
    let field = args.field.field()?;
    build_partition(field, args.cell.params(scheme, field.radio_range)?)
}

/// Worst-case report for a partition under adversarial active placement,
/// plus the backbone those actives form.
pub fn verify_partition(partition: &Partition, resolution: Option<f64>, rounds: u64) -> Result<VerifyOutput> {
    let range = partition.field.radio_range;
    let actives = adversarial_actives(partition, 0);
    let report = check_requirements(partition, &actives, range)?;
    let analytic = analytic_report(&partition.params, range)?;
    let brute_force = resolution.map(|res| brute_force_worst_distances(partition, res, rounds)).transpose()?;
    let tagged: Vec<_> = actives
        .iter()
        .enumerate()
        .map(|(i, p)| p.map(|p| (i as NodeId, p)))
        .collect();
    let backbone = build_backbone(partition, &tagged, range);
    Ok(VerifyOutput {
        report,
        analytic,
        brute_force,
        connected: is_connected(&backbone),
        component_count: backbone.component_count,
        link_violations: backbone.violations,
        max_edge_length: backbone.edges.iter().map(|e| e.length).fold(0.0, f64::max),
        degree_histogram: degree_histogram(&backbone),
        backbone,
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let partition = load_partition(args)?;
    let out = verify_partition(&partition, args.resolution, args.rounds)?;
    let ok = out.report.feasible && out.connected;
    Ok(Outcome { body: to_json(&out)?, ok, seeds: vec![] })
}

#[derive(Debug, Serialize)]
struct SimRow<'a> {
    scheme: &'a str,
    seed: String,
    lifetime: String,
    mean_active_count: f64,
}

fn cmd_simulate(args: &SimulateArgs) -> Result<Outcome> {
    let field = args.field.field()?;
    let schemes: Vec<Scheme> = match args.scheme {
        Some(s) => vec![s],
        None => Scheme::ALL.to_vec(),
    };
    if args.seeds < 1 {
        return Err(invalid("--seeds must be >= 1"));
    }
    let seeds: Vec<u64> = (0..args.seeds).map(|i| args.seed.wrapping_add(i)).collect();

    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut summaries = Vec::new();
    for scheme in schemes {
        let params = if args.all_schemes {
            maximal_params(scheme, field.radio_range, args.cell.k)?
        } else {
            args.cell.params(scheme, field.radio_range)?
        };
        let config = SimConfig {
            node_count: args.nodes,
            initial_energy: args.initial_energy,
            e_active: args.e_active,
            e_sleep: args.e_sleep,
            epoch_length: args.epoch_length,
            lifetime_criterion: args.criterion,
            max_rounds: args.max_rounds,
            ..SimConfig::new(field, params)
        };
        let runs = run_seed_sweep(&config, &seeds)?;
        for (seed, r) in &runs {
            writer
                .serialize(SimRow {
                    scheme: scheme.name(),
                    seed: seed.to_string(),
                    lifetime: r.lifetime.to_string(),
                    mean_active_count: r.mean_active_count,
                })
                .map_err(csv_error)?;
        }
        let lifetimes: Vec<f64> = runs.iter().map(|(_, r)| r.lifetime as f64).collect();
        let actives: Vec<f64> = runs.iter().map(|(_, r)| r.mean_active_count).collect();
        summaries.push((scheme, median(&lifetimes).unwrap_or(0.0), median(&actives).unwrap_or(0.0)));
    }
    // stable: ties keep the scheme order
    summaries.sort_by(|a, b| a.1.total_cmp(&b.1));
    for (scheme, life, active) in summaries {
        writer
            .serialize(SimRow {
                scheme: scheme.name(),
                seed: "median".to_string(),
                lifetime: life.to_string(),
                mean_active_count: active,
            })
            .map_err(csv_error)?;
    }
    let body = writer.into_inner().map_err(|e| invalid(e.to_string()))?;
    Ok(Outcome { body, ok: true, seeds })
}

#[derive(Debug, Serialize)]
struct TableRow<'a> {
    scheme: &'a str,
    max_cell_area: f64,
    pct_of_bound: f64,
    published_pct: f64,
}

fn cmd_tables(args: &TablesArgs) -> Result<Outcome> {
    let range = args.radio_range;
    let bound = theoretical_bound(range)?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    for (i, &scheme) in Scheme::ALL.iter().enumerate() {
        let area = scheme_max_area(scheme, range)?;
        writer
            .serialize(TableRow {
                scheme: scheme.name(),
                max_cell_area: area,
                pct_of_bound: 100.0 * area / bound,
                published_pct: PUBLISHED_LIFETIME_PCT[i],
            })
            .map_err(csv_error)?;
    }
    writer
        .serialize(TableRow {
            scheme: "bound",
            max_cell_area: bound,
            pct_of_bound: 100.0,
            published_pct: PUBLISHED_LIFETIME_PCT[5],
        })
        .map_err(csv_error)?;
    let body = writer.into_inner().map_err(|e| invalid(e.to_string()))?;
    Ok(Outcome { body, ok: true, seeds: vec![] })
}

fn cmd_bounds(args: &BoundsArgs) -> Result<Outcome> {
    if args.max_n < 2 {
        return Err(invalid("--max-n must be >= 2"));
    }
    let range = args.radio_range;
    let chain_checks = (2..=args.max_n)
        .map(|n| verify_chain_construction(n, range, args.samples, args.seed.wrapping_add(u64::from(n) << 32)))
        .collect::<Result<Vec<_>>>()?;
    let ok = chain_checks.iter().all(|c| c.pass && c.increment_pass);
    let out = BoundsOutput {
        bounds: BoundSet::new(range, 1..=args.max_n)?,
        gaf_triangle_cell: gaf_alt_shape_area(AltShape::Triangle, range),
        gaf_hexagon_cell: gaf_alt_shape_area(AltShape::Hexagon, range),
        chain_checks,
    };
    Ok(Outcome { body: to_json(&out)?, ok, seeds: vec![args.seed] })
}
