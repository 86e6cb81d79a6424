//! Experiment configuration: defaults, then a flat `key=value` file, then
//! command-line flags.

use std::path::{Path, PathBuf};

use vqls_core::vqls::{AnsatzKind, AnsatzSpec, CostKind, EvalMode, OptimizerConfig, OverlapForm};
use vqls_core::Scheme;

use crate::CliError;

pub const DEFAULT_OUT: &str = "vqls-out";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeKind {
    Exact,
    Shots,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnsatzChoice {
    ProductRy,
    LayeredRyCx,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub scheme: Scheme,
    pub cost: CostKind,
    pub mode: ModeKind,
    pub shots: u64,
    pub seed: u64,
    pub ansatz: AnsatzChoice,
    /// Entangling rounds of the layered ansatz; ignored for `product_ry`.
    pub layers: usize,
    /// `None` resolves to 1e−6 in exact mode and 1e−5 with shots.
    pub tol: Option<f64>,
    pub max_evals: usize,
    pub overlap: OverlapForm,
    pub out: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            n: 1,
            alpha: 2.0,
            beta: -1.0,
            scheme: Scheme::Pauli,
            cost: CostKind::Normalized,
            mode: ModeKind::Exact,
            shots: 8192,
            seed: 0,
            ansatz: AnsatzChoice::ProductRy,
            layers: 1,
            tol: None,
            max_evals: 500,
            overlap: OverlapForm::Collapsed,
            out: None,
        }
    }
}

fn bad(key: &str, value: &str) -> CliError {
    CliError::Usage(format!("invalid value {value:?} for {key}"))
}

fn num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value.trim().parse().map_err(|_| bad(key, value))
}

fn choose<T: Copy>(key: &str, value: &str, table: &[(&str, T)]) -> Result<T, CliError> {
    table.iter().find(|(name, _)| *name == value).map(|(_, v)| *v).ok_or_else(|| bad(key, value))
}

const COSTS: &[(&str, CostKind)] = &[("normalized", CostKind::Normalized), ("nonnormalized", CostKind::NonNormalized)];
const MODES: &[(&str, ModeKind)] = &[("exact", ModeKind::Exact), ("shots", ModeKind::Shots)];
const ANSATZE: &[(&str, AnsatzChoice)] =
    &[("product_ry", AnsatzChoice::ProductRy), ("layered_ry_cx", AnsatzChoice::LayeredRyCx)];
const OVERLAPS: &[(&str, OverlapForm)] =
    &[("collapsed", OverlapForm::Collapsed), ("double_sum", OverlapForm::DoubleSum)];

fn name_of<T: PartialEq>(table: &[(&'static str, T)], v: T) -> &'static str {
    table.iter().find(|(_, x)| *x == v).map(|(n, _)| *n).expect("every variant is named")
}

impl ExperimentConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "n" => self.n = num(key, value)?,
            "alpha" => self.alpha = num(key, value)?,
            "beta" => self.beta = num(key, value)?,
            "scheme" => self.scheme = value.parse().map_err(|_| bad(key, value))?,
            "cost" => self.cost = choose(key, value, COSTS)?,
            "mode" => self.mode = choose(key, value, MODES)?,
            "shots" => self.shots = num(key, value)?,
            "seed" => self.seed = num(key, value)?,
            "ansatz" => self.ansatz = choose(key, value, ANSATZE)?,
            "layers" => self.layers = num(key, value)?,
            "tol" => self.tol = Some(num(key, value)?),
            "max_evals" => self.max_evals = num(key, value)?,
            "overlap" => self.overlap = choose(key, value, OVERLAPS)?,
            "out" => self.out = Some(PathBuf::from(value)),
            other => return Err(CliError::Usage(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    /// Applies `key=value` lines; blank lines and `#` comments are skipped.
    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", lineno + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        self.apply_text(&text)
    }

    /// The tolerance actually used.
    pub fn resolved_tol(&self) -> f64 {
        self.tol.unwrap_or(match self.mode {
            ModeKind::Exact => 1e-6,
            ModeKind::Shots => 1e-5,
        })
    }

    pub fn resolved_out(&self) -> PathBuf {
        self.out
            .clone()
            .or_else(|| std::env::var_os("VQLS_OUT").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT))
    }

    /// Every key with its effective value; `out` is included only on request
    /// so that artifacts do not depend on where they were written.
    pub fn dump(&self, with_out: bool) -> String {
        let mut s = format!(
            "n={}\nalpha={:?}\nbeta={:?}\nscheme={}\ncost={}\nmode={}\nshots={}\nseed={}\nansatz={}\nlayers={}\ntol={:?}\nmax_evals={}\noverlap={}\n",
            self.n,
            self.alpha,
            self.beta,
            self.scheme,
            name_of(COSTS, self.cost),
            name_of(MODES, self.mode),
            self.shots,
            self.seed,
            name_of(ANSATZE, self.ansatz),
            self.layers,
            self.resolved_tol(),
            self.max_evals,
            name_of(OVERLAPS, self.overlap),
        );
        if with_out {
            s.push_str(&format!("out={}\n", self.resolved_out().display()));
        }
        s
    }

    pub fn eval_mode(&self) -> Result<EvalMode, CliError> {
        match self.mode {
            ModeKind::Exact => Ok(EvalMode::Exact),
            ModeKind::Shots => EvalMode::shots(self.shots, self.seed).map_err(CliError::from),
        }
    }

    pub fn ansatz_spec(&self) -> Result<AnsatzSpec, CliError> {
        let kind = match self.ansatz {
            AnsatzChoice::ProductRy => AnsatzKind::ProductRy,
            AnsatzChoice::LayeredRyCx => AnsatzKind::LayeredRyCx { layers: self.layers },
        };
        AnsatzSpec::new(kind, self.n).map_err(CliError::from)
    }

    pub fn optimizer(&self) -> Result<OptimizerConfig<f64>, CliError> {
        if self.max_evals == 0 {
            return Err(CliError::Usage("max_evals must be >= 1".into()));
        }
        let tol = self.resolved_tol();
        if !(tol.is_finite() && tol >= 0.0) {
            return Err(CliError::Usage(format!("invalid tol {tol}")));
        }
        let mut cfg = OptimizerConfig::defaults(self.eval_mode()?, self.seed);
        cfg.tol = tol;
        cfg.max_evals = self.max_evals;
        cfg.form = self.overlap;
        Ok(cfg)
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        ExperimentConfig { seed, ..self.clone() }
    }
}
