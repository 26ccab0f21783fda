//! Tabular reports behind the `absphase` command line: run configuration,
//! CSV/JSON emission with fixed 15-significant-digit formatting, and gates.

use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Number, Value};

use crate::classical_limit::{limit_sweeps, limit_sweeps_par, Observable};
use crate::error::{PhaseError, Result};
use crate::fock::MAX_N_MAX;
use crate::oscillator::{trajectory_samples, OscillatorParams};
use crate::phase_ops::{build_phi_analytic, number_state_density};
use crate::restricted::{
    commutator_closed_form, commutator_expectation, finite_theta_matrix, finite_to_rotator_limit,
    random_superposition, uncertainty_check, BoxConfig, FiniteDimConfig, MomentumSuperposition,
};

/// Environment variable naming a default output directory.
pub const OUT_DIR_ENV: &str = "ABSPHASE_OUT_DIR";

pub const DISTRIBUTION_NORM_TOL: f64 = 1e-6;
pub const TRAJECTORY_TOL: f64 = 1e-9;
pub const SPECTRUM_TOL: f64 = 1e-10;
pub const COMMUTATOR_TOL: f64 = 1e-10;
pub const HALVING_RATIO: (f64, f64) = (0.4, 0.6);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// Where the coefficients of an uncertainty run come from.
#[derive(Debug, Clone, PartialEq)]
pub enum StateSource {
    /// `n,re,im` file with a header row.
    File(PathBuf),
    /// Seeded random superpositions.
    Random {
        seed: u64,
        samples: usize,
        terms: usize,
        max_index: i64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    PhiMatrix {
        n_max: usize,
    },
    Distribution {
        n: usize,
        points: usize,
    },
    LimitSweep {
        observable: Observable,
        theta: f64,
        nbar_list: Vec<f64>,
        parallel: bool,
    },
    Classical {
        params: OscillatorParams,
        amplitude: f64,
        phi0: f64,
        t_end: f64,
        steps: usize,
    },
    FiniteDim {
        m_list: Vec<usize>,
        compare_rotator: Option<(i64, i64)>,
        spectrum: bool,
    },
    Uncertainty {
        source: StateSource,
        box_cfg: BoxConfig,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::PhiMatrix { .. } => "phi-matrix",
            Command::Distribution { .. } => "distribution",
            Command::LimitSweep { .. } => "limit-sweep",
            Command::Classical { .. } => "classical",
            Command::FiniteDim { .. } => "finite-dim",
            Command::Uncertainty { .. } => "uncertainty",
        }
    }

    /// Checks the preconditions of the operation behind the command.
    pub fn validate(&self) -> Result<()> {
        match self {
            Command::PhiMatrix { n_max } => {
                if !(1..=MAX_N_MAX).contains(n_max) {
                    return Err(PhaseError::invalid(format!(
                        "n_max must be in 1..={MAX_N_MAX}, got {n_max}"
                    )));
                }
            }
            Command::Distribution { points, .. } => {
                if *points < 2 {
                    return Err(PhaseError::invalid("distribution needs at least 2 points"));
                }
            }
            Command::LimitSweep {
                theta, nbar_list, ..
            } => {
                if !(*theta > -PI && *theta <= PI) {
                    return Err(PhaseError::invalid(format!(
                        "theta must be in (-π, π], got {theta}"
                    )));
                }
                if nbar_list.is_empty() {
                    return Err(PhaseError::invalid("nbar list is empty"));
                }
            }
            Command::Classical {
                amplitude,
                t_end,
                steps,
                ..
            } => {
                if !(*amplitude > 0.0) {
                    return Err(PhaseError::invalid("amplitude must be positive"));
                }
                if !(*t_end > 0.0) || *steps == 0 {
                    return Err(PhaseError::invalid("need t_end > 0 and steps >= 1"));
                }
            }
            Command::FiniteDim { m_list, .. } => {
                if m_list.is_empty() {
                    return Err(PhaseError::invalid("m list is empty"));
                }
                for &m in m_list {
                    FiniteDimConfig::new(m, BoxConfig::default())?;
                }
            }
            Command::Uncertainty { source, .. } => {
                if let StateSource::Random {
                    samples,
                    terms,
                    max_index,
                    ..
                } = source
                {
                    if *samples == 0 || *terms == 0 || *max_index < 0 {
                        return Err(PhaseError::invalid(
                            "need samples >= 1, terms >= 1, max_index >= 0",
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// One invocation: the command plus output selection.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub gnuplot_script: bool,
}

impl RunConfig {
    /// `--out` if given; otherwise `$ABSPHASE_OUT_DIR/<command>.<ext>` if the
    /// variable is set; otherwise stdout (`None`).
    pub fn destination(&self) -> Option<PathBuf> {
        if let Some(p) = &self.out {
            return Some(p.clone());
        }
        std::env::var_os(OUT_DIR_ENV).map(|dir| {
            Path::new(&dir).join(format!(
                "{}.{}",
                self.command.name(),
                self.format.extension()
            ))
        })
    }
}

/// A table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Bool(bool),
    Empty,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_sig15(*v),
            Cell::Bool(v) => v.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => Number::from_f64(*v)
                .map(Value::Number)
                .unwrap_or(Value::Null),
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        // writing into a Vec cannot fail
        w.write_record(&self.header).expect("in-memory csv");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))
                .expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .header
                    .iter()
                    .zip(row)
                    .map(|(k, v)| (k.to_string(), v.to_json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&Value::Array(rows)).expect("json");
        s.push('\n');
        s
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let idx = self.header.iter().position(|h| *h == name)?;
        Some(self.rows.iter().map(|r| &r[idx]).collect())
    }
}

/// Pass/fail check attached to a report.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub table: Table,
    pub gates: Vec<Gate>,
    /// Plot hints for the optional gnuplot script: (x column, y columns).
    pub plot: Option<(&'static str, Vec<&'static str>)>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.gates.iter().all(|g| g.passed)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.table.to_csv(),
            OutputFormat::Json => self.table.to_json(),
        }
    }

    /// gnuplot script plotting this report from `data_path` (CSV only).
    pub fn gnuplot_script(&self, data_path: &Path) -> Option<String> {
        let (x, ys) = self.plot.as_ref()?;
        let col = |name: &str| {
            self.table
                .header
                .iter()
                .position(|h| *h == name)
                .map(|i| i + 1)
        };
        let xi = col(x)?;
        let mut s = String::from("set datafile separator ','\nset key autotitle columnhead\n");
        let plots: Vec<String> = ys
            .iter()
            .filter_map(|y| col(y))
            .map(|yi| format!("'{}' using {xi}:{yi} with linespoints", data_path.display()))
            .collect();
        s.push_str(&format!("plot {}\n", plots.join(", ")));
        Some(s)
    }
}

/// `%.15g`-style rendering: 15 significant digits, trailing zeros trimmed.
pub fn format_sig15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..15).contains(&exp) {
        format!("{}e{}", trim_fraction(mantissa), exp)
    } else {
        let decimals = (14 - exp).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Runs a validated command and builds its report.
pub fn run(command: &Command) -> Result<Report> {
    command.validate()?;
    match command {
        Command::PhiMatrix { n_max } => phi_matrix_report(*n_max),
        Command::Distribution { n, points } => distribution_report(*n, *points),
        Command::LimitSweep {
            observable,
            theta,
            nbar_list,
            parallel,
        } => limit_sweep_report(*observable, *theta, nbar_list, *parallel),
        Command::Classical {
            params,
            amplitude,
            phi0,
            t_end,
            steps,
        } => classical_report(params, *amplitude, *phi0, *t_end, *steps),
        Command::FiniteDim {
            m_list,
            compare_rotator,
            spectrum,
        } => finite_dim_report(m_list, *compare_rotator, *spectrum),
        Command::Uncertainty { source, box_cfg } => uncertainty_report(source, *box_cfg),
    }
}

/// Renders the report and writes it to `dest` (stdout when `None`), plus the
/// gnuplot script next to it when requested.
pub fn emit(report: &Report, config: &RunConfig) -> Result<Option<PathBuf>> {
    let body = report.render(config.format);
    match config.destination() {
        Some(path) => {
            write_file(&path, &body)?;
            if config.gnuplot_script && config.format == OutputFormat::Csv {
                if let Some(script) = report.gnuplot_script(&path) {
                    write_file(&path.with_extension("gp"), &script)?;
                }
            }
            Ok(Some(path))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .map_err(|source| PhaseError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })?;
            Ok(None)
        }
    }
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    fs::write(path, body).map_err(|source| PhaseError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Nonzero ⟨n|Φ|n'⟩ as (n, n', value) triplets.
pub fn phi_matrix_report(n_max: usize) -> Result<Report> {
    let phi = build_phi_analytic(n_max)?;
    let mut table = Table::new(vec!["n", "nprime", "value"]);
    for n in 0..=n_max {
        for np in 0..=n_max {
            let v = phi.get(n, np).re;
            if v != 0.0 {
                table.push(vec![n.into(), np.into(), v.into()]);
            }
        }
    }
    Ok(Report {
        table,
        gates: Vec::new(),
        plot: None,
    })
}

/// P_n(φ) on `points` equally spaced angles covering [0, π].
pub fn distribution_report(n: usize, points: usize) -> Result<Report> {
    let step = PI / (points - 1) as f64;
    let mut table = Table::new(vec!["phi", "density"]);
    let mut samples = Vec::with_capacity(points);
    for k in 0..points {
        let phi = k as f64 * step;
        let d = number_state_density(n, phi);
        samples.push(d);
        table.push(vec![phi.into(), d.into()]);
    }
    let trapezoid: f64 = samples.windows(2).map(|w| 0.5 * step * (w[0] + w[1])).sum();
    let passed = (trapezoid - 1.0).abs() <= DISTRIBUTION_NORM_TOL;
    Ok(Report {
        table,
        gates: vec![Gate {
            name: "normalization".into(),
            passed,
            detail: format!("trapezoid integral {trapezoid}"),
        }],
        plot: Some(("phi", vec!["density"])),
    })
}

pub fn limit_sweep_report(
    observable: Observable,
    theta: f64,
    nbar_list: &[f64],
    parallel: bool,
) -> Result<Report> {
    let sweep = if parallel {
        limit_sweeps_par(observable, &[theta], nbar_list)?
    } else {
        limit_sweeps(observable, &[theta], nbar_list)?
    }
    .remove(0);
    let mut table = Table::new(vec!["nbar", "value", "target", "abs_error"]);
    for ((nbar, value), err) in sweep.nbar_list.iter().zip(&sweep.values).zip(&sweep.errors) {
        table.push(vec![
            (*nbar).into(),
            (*value).into(),
            sweep.target.into(),
            (*err).into(),
        ]);
    }
    let passed = sweep.is_monotone_after_first();
    Ok(Report {
        table,
        gates: vec![Gate {
            name: "monotone-decrease".into(),
            passed,
            detail: format!("{observable} errors {:?}", sweep.errors),
        }],
        plot: Some(("nbar", vec!["abs_error"])),
    })
}

pub fn classical_report(
    params: &OscillatorParams,
    amplitude: f64,
    phi0: f64,
    t_end: f64,
    steps: usize,
) -> Result<Report> {
    let t: Vec<f64> = (0..=steps)
        .map(|k| t_end * k as f64 / steps as f64)
        .collect();
    let samples = trajectory_samples(params, amplitude, phi0, &t)?;
    let mut table = Table::new(vec!["t", "q", "p", "Q", "expected", "deviation", "P"]);
    let mut worst = 0.0f64;
    for s in &samples {
        worst = worst.max(s.deviation);
        table.push(vec![
            s.t.into(),
            s.q.into(),
            s.p.into(),
            s.angle.into(),
            s.expected.into(),
            s.deviation.into(),
            s.action.into(),
        ]);
    }
    Ok(Report {
        table,
        gates: vec![Gate {
            name: "trajectory-phase".into(),
            passed: worst < TRAJECTORY_TOL,
            detail: format!("max deviation {worst:e}"),
        }],
        plot: Some(("t", vec!["Q", "expected"])),
    })
}

pub fn finite_dim_report(
    m_list: &[usize],
    compare_rotator: Option<(i64, i64)>,
    spectrum: bool,
) -> Result<Report> {
    let mut header = vec!["m"];
    if spectrum {
        header.push("spectrum_max_error");
    }
    if compare_rotator.is_some() {
        header.extend(["rotator_error", "ratio"]);
    }
    let mut table = Table::new(header);
    let mut gates = Vec::new();

    let limit = match compare_rotator {
        Some((n, np)) => Some(finite_to_rotator_limit(n, np, m_list)?),
        None => None,
    };

    let mut worst_spectrum = 0.0f64;
    for (k, &m) in m_list.iter().enumerate() {
        let mut row: Vec<Cell> = vec![m.into()];
        if spectrum {
            let cfg = FiniteDimConfig::new(m, BoxConfig::default())?;
            let ev = finite_theta_matrix(&cfg)?.eigenvalues()?;
            let err = ev
                .iter()
                .zip(cfg.angle_spectrum())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            worst_spectrum = worst_spectrum.max(err);
            row.push(err.into());
        }
        if let Some(lim) = &limit {
            row.push(lim.errors[k].into());
            row.push(if k == 0 {
                Cell::Empty
            } else {
                lim.ratios[k - 1].into()
            });
        }
        table.push(row);
    }

    if spectrum {
        gates.push(Gate {
            name: "spectrum".into(),
            passed: worst_spectrum < SPECTRUM_TOL,
            detail: format!("max eigenvalue error {worst_spectrum:e}"),
        });
    }
    if let Some(lim) = &limit {
        let (lo, hi) = HALVING_RATIO;
        let doubling_ratios: Vec<f64> = m_list
            .windows(2)
            .zip(&lim.ratios)
            .filter(|(w, _)| w[1] == 2 * w[0])
            .map(|(_, r)| *r)
            .collect();
        gates.push(Gate {
            name: "rotator-halving".into(),
            passed: doubling_ratios.iter().all(|r| (lo..=hi).contains(r)),
            detail: format!("ratios at doublings {doubling_ratios:?}"),
        });
    }
    Ok(Report {
        table,
        gates,
        plot: limit.map(|_| ("m", vec!["rotator_error"])),
    })
}

/// Parses an `n,re,im` coefficient file (header row required) and normalizes it.
pub fn read_coefficients(path: &Path, box_cfg: BoxConfig) -> Result<MomentumSuperposition> {
    let text = fs::read_to_string(path).map_err(|source| PhaseError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_coefficients(&text, box_cfg)
}

pub fn parse_coefficients(text: &str, box_cfg: BoxConfig) -> Result<MomentumSuperposition> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| PhaseError::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    if header.iter().collect::<Vec<_>>() != ["n", "re", "im"] {
        return Err(PhaseError::Parse {
            line: 1,
            message: format!(
                "expected header n,re,im, found {:?}",
                header.iter().collect::<Vec<_>>()
            ),
        });
    }
    let mut support = Vec::new();
    let mut coeffs = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| PhaseError::Parse {
            line: e.position().map(|p| p.line()).unwrap_or(0),
            message: e.to_string(),
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let bad = |what: &str| PhaseError::Parse {
            line,
            message: format!("invalid {what}: {:?}", record.iter().collect::<Vec<_>>()),
        };
        if record.len() != 3 {
            return Err(bad("field count"));
        }
        let n: i64 = record[0].parse().map_err(|_| bad("index"))?;
        let re: f64 = record[1].parse().map_err(|_| bad("real part"))?;
        let im: f64 = record[2].parse().map_err(|_| bad("imaginary part"))?;
        support.push(n);
        coeffs.push(num_complex::Complex64::new(re, im));
    }
    if support.is_empty() {
        return Err(PhaseError::Parse {
            line: 1,
            message: "no coefficient rows".into(),
        });
    }
    MomentumSuperposition::normalized(support, coeffs, box_cfg)
}

pub fn uncertainty_report(source: &StateSource, box_cfg: BoxConfig) -> Result<Report> {
    let states: Vec<MomentumSuperposition> = match source {
        StateSource::File(path) => vec![read_coefficients(path, box_cfg)?],
        StateSource::Random {
            seed,
            samples,
            terms,
            max_index,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*samples)
                .map(|_| random_superposition(&mut rng, *terms, -*max_index..=*max_index, box_cfg))
                .collect::<Result<_>>()?
        }
    };
    let mut table = Table::new(vec![
        "sample",
        "dx",
        "dp",
        "product",
        "bound",
        "satisfied",
        "commutator_im",
        "closed_form_im",
    ]);
    let mut all_satisfied = true;
    let mut worst_commutator = 0.0f64;
    for (k, state) in states.iter().enumerate() {
        let r = uncertainty_check(state);
        let direct = commutator_expectation(state);
        let closed = commutator_closed_form(state);
        all_satisfied &= r.satisfied;
        worst_commutator = worst_commutator.max((direct - closed).norm());
        table.push(vec![
            k.into(),
            r.dx.into(),
            r.dp.into(),
            r.product.into(),
            r.bound.into(),
            r.satisfied.into(),
            direct.im.into(),
            closed.im.into(),
        ]);
    }
    Ok(Report {
        table,
        gates: vec![
            Gate {
                name: "uncertainty".into(),
                passed: all_satisfied,
                detail: format!("{} states", states.len()),
            },
            Gate {
                name: "commutator-identity".into(),
                passed: worst_commutator < COMMUTATOR_TOL,
                detail: format!("max |direct − closed form| {worst_commutator:e}"),
            },
        ],
        plot: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig15_formatting() {
        assert_eq!(format_sig15(-0.900316316157106), "-0.900316316157106");
        assert_eq!(format_sig15(-2.0 * 2f64.sqrt() / PI), "-0.900316316157106");
        assert_eq!(format_sig15(PI / 2.0), "1.5707963267949");
        assert_eq!(format_sig15(0.0), "0");
        assert_eq!(format_sig15(-0.0), "0");
        assert_eq!(format_sig15(4.0), "4");
        assert_eq!(format_sig15(0.5), "0.5");
        assert_eq!(format_sig15(1e-7), "1e-7");
        assert_eq!(format_sig15(1.25e20), "1.25e20");
        assert_eq!(format_sig15(123456.0), "123456");
        assert_eq!(format_sig15(1.0 / 3.0), "0.333333333333333");
    }

    #[test]
    fn phi_matrix_rows() {
        let csv = phi_matrix_report(2).unwrap().table.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,nprime,value");
        assert!(lines.contains(&"0,1,-0.900316316157106"));
        assert!(!lines.iter().any(|l| l.starts_with("0,2,")));
        assert!(lines.contains(&"0,0,1.5707963267949"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn distribution_table() {
        let r = distribution_report(0, 101).unwrap();
        assert!(r.passed());
        for row in &r.table.rows {
            assert_eq!(row[1], Cell::Float(1.0 / PI));
        }
        let r = distribution_report(1, 101).unwrap();
        assert!(r.passed());
        // φ = π/2 is row 50
        match r.table.rows[50][1] {
            Cell::Float(d) => assert!(d.abs() < 1e-15),
            _ => unreachable!(),
        }
    }

    #[test]
    fn coefficient_parsing() {
        let b = BoxConfig::default();
        let s = parse_coefficients("n,re,im\n0,0.707106781186548,0\n1,0.707106781186548,0\n", b)
            .unwrap();
        assert_eq!(s.support(), &[0, 1]);
        let err = parse_coefficients("n,re,im\n0,1,0\n1,abc,0\n", b).unwrap_err();
        match err {
            PhaseError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_coefficients("a,b,c\n0,1,0\n", b),
            Err(PhaseError::Parse { line: 1, .. })
        ));
        assert!(parse_coefficients("n,re,im\n", b).is_err());
        assert!(matches!(
            parse_coefficients("n,re,im\n0,1,0\n2,1\n", b),
            Err(PhaseError::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn command_validation() {
        assert!(Command::PhiMatrix { n_max: 0 }.validate().is_err());
        assert!(Command::PhiMatrix { n_max: 4097 }.validate().is_err());
        assert!(Command::FiniteDim {
            m_list: vec![3],
            compare_rotator: None,
            spectrum: false
        }
        .validate()
        .is_err());
    }
}
