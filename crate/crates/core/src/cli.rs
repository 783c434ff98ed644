//! Command-line front end: figure-level scenarios and sweeps with
//! deterministic CSV/JSON output and a JSON run manifest per output file.
//!
//! Determinism contract: identical requests produce byte-identical CSV. All
//! floats are printed in scientific notation with 17 significant digits, rows
//! are written in index order, and the first CSV line names the manifest.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::detector::{effective_overlap, saturated_overlap, solve_projection_for_budget};
use crate::error::{Result, WvaError};
use crate::estimation::{fisher_report, helstrom_error};
use crate::overlap::{input_state_overlap, mode_overlap_closed};
use crate::pulse::PulseParams;
use crate::report::distinguishability_report;
use crate::scheme::{port_transmission, Port, SchemeConfig};

const UM: f64 = 1e-6;
const FS: f64 = 1e-15;
const AS: f64 = 1e-18;

/// Exit codes: 0 success, 2 validation error, 3 degenerate configuration,
/// 4 no solution.
pub fn exit_code(err: &WvaError) -> i32 {
    match err {
        WvaError::DegenerateConfiguration(_) => 3,
        WvaError::NoSolution { .. } => 4,
        _ => 2,
    }
}

fn error_tag(err: &WvaError) -> &'static str {
    match err {
        WvaError::InvalidParameter(_) => "invalid-parameter",
        WvaError::DegenerateConfiguration(_) => "degenerate-configuration",
        WvaError::NoSolution { .. } => "no-solution",
        WvaError::GridResolution(_) => "grid-resolution",
        WvaError::InvalidOverlap(_) => "invalid-overlap",
        WvaError::Io(_) => "io",
    }
}

#[derive(Debug, Parser)]
#[command(name = "wva", version, about = "Temporal-delay interferometry scenarios and sweeps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Flat key = value config file; flags given on the command line override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Carrier wavelength (micrometers).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub lambda0_um: Option<f64>,

    /// Intensity FWHM pulse duration (femtoseconds).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub t0_fs: Option<f64>,

    /// Differential delay (attoseconds).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tau_as: Option<f64>,

    /// Common delay (femtoseconds).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tau0_fs: Option<f64>,

    /// Post-selection angle (degrees).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub theta_deg: Option<f64>,

    /// Mean input photon number.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub n_photons: Option<f64>,

    /// Centroid-measurement noise (Hz); required by `fisher`.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub sigma_hz: Option<f64>,

    /// Detector photon budget; required by `budget`.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub n0_photons: Option<f64>,

    /// Resolution-floor position a, 0 < a < 1.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub floor_a: Option<f64>,

    /// Resolution-floor sharpness n >= 1.
    #[arg(long, global = true)]
    pub floor_n: Option<u32>,

    /// Sweep request, `param:start:stop:count` in CLI units
    /// (e.g. `theta-deg:90:105:1501`).
    #[arg(long, global = true)]
    pub sweep: Option<String>,

    /// Output file path; the manifest goes to `<out>.manifest.json`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Output-port spectral densities versus frequency offset.
    Spectrum,
    /// Spectrum centroid shift versus a swept parameter.
    CentroidSweep,
    /// Port-mode overlap magnitude and insertion loss versus a swept parameter.
    OverlapSweep,
    /// Discrimination error and detected photon number versus a swept parameter.
    ErrorCurve,
    /// Saturated-detector overlap and the projection angles meeting a photon budget.
    Budget,
    /// Fisher information of the centroid measurement with its endpoint values.
    Fisher,
    /// Resolution-floor map of effective versus true mode overlap.
    EffectiveOverlap,
    /// Single-configuration distinguishability report (always JSON).
    Report,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::CentroidSweep => "centroid-sweep",
            Command::OverlapSweep => "overlap-sweep",
            Command::ErrorCurve => "error-curve",
            Command::Budget => "budget",
            Command::Fisher => "fisher",
            Command::EffectiveOverlap => "effective-overlap",
            Command::Report => "report",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Fully resolved request: config file merged under CLI flags, defaults
/// applied, everything converted to SI.
#[derive(Debug, Clone)]
struct Resolved {
    lambda0: f64,
    t0: f64,
    tau: f64,
    tau0: f64,
    theta: f64,
    n_in: f64,
    sigma: Option<f64>,
    n0: Option<f64>,
    floor_a: f64,
    floor_n: u32,
    sweep: Option<Sweep>,
    out: PathBuf,
    format: Format,
}

#[derive(Debug, Clone)]
struct Sweep {
    param: String,
    start: f64,
    stop: f64,
    count: usize,
}

impl Sweep {
    fn parse(spec: &str) -> Result<Self> {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 4 {
            return Err(WvaError::InvalidParameter(format!(
                "sweep must be param:start:stop:count, got '{spec}'"
            )));
        }
        let parse = |s: &str, what: &str| {
            s.parse::<f64>().map_err(|_| {
                WvaError::InvalidParameter(format!("sweep {what} '{s}' is not a number"))
            })
        };
        let start = parse(parts[1], "start")?;
        let stop = parse(parts[2], "stop")?;
        let count: usize = parts[3].parse().map_err(|_| {
            WvaError::InvalidParameter(format!("sweep count '{}' is not an integer", parts[3]))
        })?;
        if count < 2 {
            return Err(WvaError::InvalidParameter(format!(
                "sweep count must be >= 2, got {count}"
            )));
        }
        if !start.is_finite() || !stop.is_finite() {
            return Err(WvaError::InvalidParameter("sweep bounds must be finite".into()));
        }
        Ok(Sweep { param: parts[0].to_string(), start, stop, count })
    }

    fn values(&self) -> Vec<f64> {
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| if i == self.count - 1 { self.stop } else { self.start + i as f64 * step })
            .collect()
    }
}

fn read_config_file(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path)?;
    let mut map = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(WvaError::InvalidParameter(format!(
                "{}:{}: expected 'key = value', got '{line}'",
                path.display(),
                lineno + 1
            )));
        };
        map.insert(key.trim().replace('_', "-"), value.trim().to_string());
    }
    Ok(map)
}

fn file_f64(file: &BTreeMap<String, String>, key: &str) -> Result<Option<f64>> {
    match file.get(key) {
        None => Ok(None),
        Some(raw) => raw.parse::<f64>().map(Some).map_err(|_| {
            WvaError::InvalidParameter(format!("config key '{key}': '{raw}' is not a number"))
        }),
    }
}

const KNOWN_KEYS: &[&str] = &[
    "lambda0-um",
    "t0-fs",
    "tau-as",
    "tau0-fs",
    "theta-deg",
    "n-photons",
    "sigma-hz",
    "n0-photons",
    "floor-a",
    "floor-n",
    "sweep",
    "out",
    "format",
];

impl Resolved {
    fn from_cli(cli: &Cli) -> Result<Self> {
        let file = match &cli.config {
            Some(path) => read_config_file(path)?,
            None => BTreeMap::new(),
        };
        for key in file.keys() {
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(WvaError::InvalidParameter(format!(
                    "unknown config key '{key}'"
                )));
            }
        }
        let merge = |flag: Option<f64>, key: &str, default: f64| -> Result<f64> {
            Ok(flag.or(file_f64(&file, key)?).unwrap_or(default))
        };
        let merge_opt = |flag: Option<f64>, key: &str| -> Result<Option<f64>> {
            Ok(flag.or(file_f64(&file, key)?))
        };

        let floor_n = match cli.floor_n {
            Some(n) => n,
            None => match file.get("floor-n") {
                Some(raw) => raw.parse().map_err(|_| {
                    WvaError::InvalidParameter(format!(
                        "config key 'floor-n': '{raw}' is not an integer"
                    ))
                })?,
                None => 100,
            },
        };
        let sweep_spec = cli.sweep.clone().or_else(|| file.get("sweep").cloned());
        let out = cli
            .out
            .clone()
            .or_else(|| file.get("out").map(PathBuf::from))
            .ok_or_else(|| WvaError::InvalidParameter("--out is required".into()))?;
        let format = match (cli.format, file.get("format").map(String::as_str)) {
            (Some(f), _) => f,
            (None, Some("csv")) => Format::Csv,
            (None, Some("json")) => Format::Json,
            (None, Some(other)) => {
                return Err(WvaError::InvalidParameter(format!(
                    "config key 'format': expected csv or json, got '{other}'"
                )))
            }
            (None, None) => Format::Csv,
        };

        let resolved = Resolved {
            lambda0: merge(cli.lambda0_um, "lambda0-um", 1.5)? * UM,
            t0: merge(cli.t0_fs, "t0-fs", 100.0)? * FS,
            tau: merge(cli.tau_as, "tau-as", 100.0)? * AS,
            tau0: merge(cli.tau0_fs, "tau0-fs", 0.0)? * FS,
            theta: merge(cli.theta_deg, "theta-deg", 0.0)?.to_radians(),
            n_in: merge(cli.n_photons, "n-photons", 1e6)?,
            sigma: merge_opt(cli.sigma_hz, "sigma-hz")?,
            n0: merge_opt(cli.n0_photons, "n0-photons")?,
            floor_a: merge(cli.floor_a, "floor-a", 0.9)?,
            floor_n,
            sweep: sweep_spec.as_deref().map(Sweep::parse).transpose()?,
            out,
            format,
        };
        Ok(resolved)
    }

    fn scheme(&self) -> Result<SchemeConfig> {
        let pulse = PulseParams::new(self.lambda0, self.t0)?;
        if !pulse.is_narrowband() {
            return Err(WvaError::InvalidParameter(format!(
                "pulse is not narrowband: bandwidth {:.3e} rad/s >= carrier {:.3e} rad/s",
                pulse.bandwidth(),
                pulse.omega0()
            )));
        }
        SchemeConfig::new(pulse, self.tau0, self.tau, self.theta, self.n_in)
    }

    /// Applies one sweep value, given in CLI units, to a copy of the request.
    fn with_param(&self, param: &str, value: f64) -> Result<Resolved> {
        let mut next = self.clone();
        match param {
            "theta-deg" => next.theta = value.to_radians(),
            "tau-as" => next.tau = value * AS,
            "tau0-fs" => next.tau0 = value * FS,
            "t0-fs" => next.t0 = value * FS,
            "lambda0-um" => next.lambda0 = value * UM,
            "n-photons" => next.n_in = value,
            other => {
                return Err(WvaError::InvalidParameter(format!(
                    "unknown sweep parameter '{other}'"
                )))
            }
        }
        Ok(next)
    }

    fn require_sigma(&self) -> Result<f64> {
        self.sigma
            .ok_or_else(|| WvaError::InvalidParameter("--sigma-hz is required".into()))
    }

    fn require_n0(&self) -> Result<f64> {
        self.n0
            .ok_or_else(|| WvaError::InvalidParameter("--n0-photons is required".into()))
    }
}

#[derive(Debug, Serialize)]
struct ConfigSi {
    lambda0_m: f64,
    t0_s: f64,
    tau_s: f64,
    tau0_s: f64,
    theta_rad: f64,
    n_photons: f64,
    sigma_hz: Option<f64>,
    n0_photons: Option<f64>,
    floor_a: f64,
    floor_n: u32,
}

#[derive(Debug, Serialize)]
struct RunManifest {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    config_si: ConfigSi,
    sweep: Option<String>,
    unix_timestamp: u64,
    checksums: BTreeMap<String, String>,
}

fn build_manifest(command: Command, resolved: &Resolved) -> RunManifest {
    RunManifest {
        tool: "wva",
        version: env!("CARGO_PKG_VERSION"),
        command: command.name(),
        config_si: ConfigSi {
            lambda0_m: resolved.lambda0,
            t0_s: resolved.t0,
            tau_s: resolved.tau,
            tau0_s: resolved.tau0,
            theta_rad: resolved.theta,
            n_photons: resolved.n_in,
            sigma_hz: resolved.sigma,
            n0_photons: resolved.n0,
            floor_a: resolved.floor_a,
            floor_n: resolved.floor_n,
        },
        sweep: resolved
            .sweep
            .as_ref()
            .map(|s| format!("{}:{}:{}:{}", s.param, s.start, s.stop, s.count)),
        unix_timestamp: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        checksums: BTreeMap::new(),
    }
}

/// One CSV cell. `Empty` marks values skipped on degenerate sweep rows.
#[derive(Debug, Clone)]
enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Empty,
}

impl Cell {
    fn render(&self, buf: &mut String) {
        match self {
            Cell::Num(x) => write!(buf, "{x:.16e}").unwrap(),
            Cell::Int(n) => write!(buf, "{n}").unwrap(),
            Cell::Text(s) => buf.push_str(s),
            Cell::Empty => {}
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            Cell::Num(x) => serde_json::json!(x),
            Cell::Int(n) => serde_json::json!(n),
            Cell::Text(s) => serde_json::json!(s),
            Cell::Empty => serde_json::Value::Null,
        }
    }
}

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    out.with_file_name(name)
}

fn render_csv(table: &Table, manifest: &Path) -> String {
    let mut buf = String::new();
    writeln!(buf, "# manifest: {}", manifest.display()).unwrap();
    writeln!(buf, "{}", table.header.join(",")).unwrap();
    for row in &table.rows {
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                buf.push(',');
            }
            cell.render(&mut buf);
        }
        buf.push('\n');
    }
    buf
}

fn render_json(table: &Table, manifest: &Path) -> String {
    let rows: Vec<Vec<serde_json::Value>> =
        table.rows.iter().map(|row| row.iter().map(Cell::to_json).collect()).collect();
    let value = serde_json::json!({
        "manifest": manifest.display().to_string(),
        "columns": table.header,
        "rows": rows,
    });
    let mut text = serde_json::to_string_pretty(&value).expect("JSON serialization cannot fail");
    text.push('\n');
    text
}

fn write_outputs(
    command: Command,
    resolved: &Resolved,
    body: String,
) -> Result<()> {
    let manifest_file = manifest_path(&resolved.out);
    let mut manifest = build_manifest(command, resolved);
    let digest = Sha256::digest(body.as_bytes());
    let out_name = resolved.out.file_name().unwrap_or_default().to_string_lossy().to_string();
    manifest.checksums.insert(out_name, format!("{digest:x}"));
    std::fs::write(&resolved.out, body)?;
    let mut manifest_text =
        serde_json::to_string_pretty(&manifest).expect("JSON serialization cannot fail");
    manifest_text.push('\n');
    std::fs::write(&manifest_file, manifest_text)?;
    Ok(())
}

fn emit_table(command: Command, resolved: &Resolved, table: Table) -> Result<()> {
    let manifest_file = manifest_path(&resolved.out);
    let body = match resolved.format {
        Format::Csv => render_csv(&table, &manifest_file),
        Format::Json => render_json(&table, &manifest_file),
    };
    write_outputs(command, resolved, body)
}

/// Runs one sweep: each row carries the swept value, the computed cells, and
/// a trailing flag column. Degenerate configurations become rows with empty
/// value cells and flag `degenerate` instead of aborting the sweep.
fn sweep_rows<F>(resolved: &Resolved, sweep: &Sweep, width: usize, mut f: F) -> Result<Vec<Vec<Cell>>>
where
    F: FnMut(&Resolved, f64) -> Result<Vec<Cell>>,
{
    let mut rows = Vec::with_capacity(sweep.count);
    for value in sweep.values() {
        let point = resolved.with_param(&sweep.param, value)?;
        let mut row = vec![Cell::Num(value)];
        match f(&point, value) {
            Ok(cells) => {
                debug_assert_eq!(cells.len(), width);
                row.extend(cells);
                row.push(Cell::Empty);
            }
            Err(WvaError::DegenerateConfiguration(_)) => {
                row.extend(std::iter::repeat_with(|| Cell::Empty).take(width));
                row.push(Cell::Text("degenerate".into()));
            }
            Err(other) => return Err(other),
        }
        rows.push(row);
    }
    Ok(rows)
}

fn param_column(param: &str) -> Result<&'static str> {
    Ok(match param {
        "theta-deg" => "theta_deg",
        "tau-as" => "tau_as",
        "tau0-fs" => "tau0_fs",
        "t0-fs" => "t0_fs",
        "lambda0-um" => "lambda0_um",
        "n-photons" => "n_photons",
        "rho" => "rho_abs",
        other => {
            return Err(WvaError::InvalidParameter(format!(
                "unknown sweep parameter '{other}'"
            )))
        }
    })
}

fn default_sweep(resolved: &Resolved, command: Command) -> Option<Sweep> {
    if resolved.sweep.is_some() {
        return resolved.sweep.clone();
    }
    match command {
        Command::CentroidSweep | Command::OverlapSweep => {
            Some(Sweep { param: "theta-deg".into(), start: 0.0, stop: 360.0, count: 721 })
        }
        Command::ErrorCurve => {
            Some(Sweep { param: "n-photons".into(), start: 0.0, stop: 1e7, count: 101 })
        }
        Command::EffectiveOverlap => {
            Some(Sweep { param: "rho".into(), start: 0.0, stop: 1.0, count: 101 })
        }
        _ => None,
    }
}

fn run_spectrum(resolved: &Resolved) -> Result<Table> {
    let cfg = resolved.scheme()?;
    let grid = cfg.pulse.standard_grid();
    let rows = grid
        .points()
        .map(|f| {
            let (u, v) = cfg.output_amplitudes(f);
            vec![Cell::Num(f), Cell::Num(u.norm_sqr()), Cell::Num(v.norm_sqr())]
        })
        .collect();
    Ok(Table {
        header: vec!["f_hz", "phi_u_sq_per_hz", "phi_v_sq_per_hz"],
        rows,
    })
}

fn run_centroid_sweep(resolved: &Resolved, sweep: &Sweep) -> Result<Table> {
    let rows = sweep_rows(resolved, sweep, 1, |point, _| {
        let cfg = point.scheme()?;
        Ok(vec![Cell::Num(crate::scheme::centroid_shift(&cfg)?)])
    })?;
    Ok(Table {
        header: vec![param_column(&sweep.param)?, "centroid_shift_hz", "flag"],
        rows,
    })
}

fn run_overlap_sweep(resolved: &Resolved, sweep: &Sweep) -> Result<Table> {
    let rows = sweep_rows(resolved, sweep, 2, |point, _| {
        let cfg = point.scheme()?;
        let rho = mode_overlap_closed(&cfg, Port::U)?.rho;
        let transmission = port_transmission(&cfg, Port::U);
        Ok(vec![Cell::Num(rho.norm().min(1.0)), Cell::Num(transmission.loss_db)])
    })?;
    Ok(Table {
        header: vec![param_column(&sweep.param)?, "rho_abs", "insertion_loss_db", "flag"],
        rows,
    })
}

fn run_error_curve(resolved: &Resolved, sweep: &Sweep) -> Result<Table> {
    let rows = sweep_rows(resolved, sweep, 2, |point, _| {
        let cfg = point.scheme()?;
        let p_error = helstrom_error(input_state_overlap(&cfg).overlap_sq)?;
        let n_out = cfg.n_in * port_transmission(&cfg, Port::U).fraction;
        Ok(vec![Cell::Num(p_error), Cell::Num(n_out)])
    })?;
    Ok(Table {
        header: vec![param_column(&sweep.param)?, "p_error", "n_out_photons", "flag"],
        rows,
    })
}

fn run_budget(resolved: &Resolved) -> Result<Table> {
    let cfg = resolved.scheme()?;
    let n0 = resolved.require_n0()?;
    let roots = solve_projection_for_budget(&cfg, cfg.n_in, n0)?;
    let mut rows = Vec::with_capacity(roots.len());
    for (index, &theta) in roots.iter().enumerate() {
        let solved = SchemeConfig { theta, ..cfg };
        let transmission = port_transmission(&solved, Port::U).fraction;
        let report = saturated_overlap(&solved, n0)?;
        rows.push(vec![
            Cell::Int(index as u64),
            Cell::Num(theta.to_degrees()),
            Cell::Num(transmission),
            Cell::Num(report.overlap_sq),
            Cell::Num(helstrom_error(report.overlap_sq)?),
        ]);
    }
    Ok(Table {
        header: vec!["root_index", "theta_deg", "transmission", "overlap_sq", "p_error"],
        rows,
    })
}

fn run_fisher(resolved: &Resolved) -> Result<Table> {
    let cfg = resolved.scheme()?;
    let sigma = resolved.require_sigma()?;
    let report = fisher_report(&cfg, sigma)?;
    Ok(Table {
        header: vec![
            "sigma_hz",
            "n_detected_photons",
            "i_tau_per_s2",
            "i_phi0_per_s2",
            "i_phi_pi_per_s2",
            "enhancement_ratio",
        ],
        rows: vec![vec![
            Cell::Num(report.sigma),
            Cell::Num(report.n_detected),
            Cell::Num(report.i_tau),
            Cell::Num(report.i_phi0),
            Cell::Num(report.i_phi_pi),
            Cell::Num(report.enhancement_ratio),
        ]],
    })
}

fn run_effective_overlap(resolved: &Resolved, sweep: &Sweep) -> Result<Table> {
    if sweep.param != "rho" {
        return Err(WvaError::InvalidParameter(format!(
            "effective-overlap sweeps over 'rho', got '{}'",
            sweep.param
        )));
    }
    let mut rows = Vec::with_capacity(sweep.count);
    for rho in sweep.values() {
        let eff = effective_overlap(rho, resolved.floor_a, resolved.floor_n)?;
        rows.push(vec![Cell::Num(rho), Cell::Num(eff), Cell::Empty]);
    }
    Ok(Table { header: vec!["rho_abs", "rho_eff", "flag"], rows })
}

fn run_report(resolved: &Resolved) -> Result<()> {
    let cfg = resolved.scheme()?;
    let report = distinguishability_report(&cfg)?;
    let manifest_file = manifest_path(&resolved.out);
    let value = serde_json::json!({
        "manifest": manifest_file.display().to_string(),
        "report": report,
    });
    let mut body = serde_json::to_string_pretty(&value).expect("JSON serialization cannot fail");
    body.push('\n');
    write_outputs(Command::Report, resolved, body)
}

fn dispatch(cli: &Cli) -> Result<()> {
    let resolved = Resolved::from_cli(cli)?;
    let command = cli.command;
    if command == Command::Report {
        return run_report(&resolved);
    }
    let table = match command {
        Command::Spectrum => run_spectrum(&resolved)?,
        Command::Budget => run_budget(&resolved)?,
        Command::Fisher => run_fisher(&resolved)?,
        Command::CentroidSweep | Command::OverlapSweep | Command::ErrorCurve
        | Command::EffectiveOverlap => {
            let sweep = default_sweep(&resolved, command)
                .expect("sweep commands always have a default sweep");
            match command {
                Command::CentroidSweep => run_centroid_sweep(&resolved, &sweep)?,
                Command::OverlapSweep => run_overlap_sweep(&resolved, &sweep)?,
                Command::ErrorCurve => run_error_curve(&resolved, &sweep)?,
                Command::EffectiveOverlap => run_effective_overlap(&resolved, &sweep)?,
                _ => unreachable!(),
            }
        }
        Command::Report => unreachable!(),
    };
    emit_table(command, &resolved, table)
}

/// Entry point for the binary; returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error[{}]: {err}", error_tag(&err));
            exit_code(&err)
        }
    }
}
