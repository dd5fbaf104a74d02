use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use subspace_bounds::config::Tolerances;
use subspace_bounds::Error;

use crate::args::TolFlags;

pub const CONFIG_ENV: &str = "SUBBOUNDS_CONFIG";

/// Optional TOML config:
///
/// ```toml
/// seed = 7
/// workers = 4
///
/// [tolerances]
/// tol_cluster = 1e-9
/// ```
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(default)]
    pub tolerances: Tolerances,
    pub seed: Option<u64>,
    pub workers: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct Settings {
    pub tolerances: Tolerances,
    pub seed: u64,
    pub workers: Option<usize>,
    pub config_path: Option<PathBuf>,
}

fn load(path: &Path) -> Result<FileConfig, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Error::InvalidInput(format!("malformed config {}: {e}", path.display())))
}

/// Flags override the config file, which overrides the built-in defaults.
pub fn resolve(explicit: Option<&Path>, flags: &TolFlags) -> Result<Settings, Error> {
    let path = explicit
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    let file = match &path {
        Some(p) => load(p)?,
        None => FileConfig::default(),
    };
    let mut tol = file.tolerances;
    if let Some(v) = flags.tol_orth {
        tol.tol_orth = v;
    }
    if let Some(v) = flags.tol_cluster {
        tol.tol_cluster = v;
    }
    if let Some(v) = flags.tol_diag {
        tol.tol_diag = v;
    }
    if let Some(v) = flags.rank_factor {
        tol.rank_factor = v;
    }
    for (name, v) in [
        ("tol_orth", tol.tol_orth),
        ("tol_cluster", tol.tol_cluster),
        ("tol_diag", tol.tol_diag),
        ("rank_factor", tol.rank_factor),
    ] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::InvalidInput(format!("{name} must be positive, got {v}")));
        }
    }
    Ok(Settings {
        tolerances: tol,
        seed: file.seed.unwrap_or(0),
        workers: file.workers,
        config_path: path,
    })
}

/// Reproducibility record written with every JSON or CSV artifact.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub seeds: Vec<u64>,
    pub tolerances: Tolerances,
    pub tool_version: &'static str,
    pub timestamp_unix: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config_path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
}

impl RunManifest {
    pub fn new(settings: &Settings, seeds: Vec<u64>) -> Self {
        RunManifest {
            command_line: std::env::args().collect(),
            seeds,
            tolerances: settings.tolerances,
            tool_version: env!("CARGO_PKG_VERSION"),
            timestamp_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            config_path: settings.config_path.as_ref().map(|p| p.display().to_string()),
            workers: None,
        }
    }
}
