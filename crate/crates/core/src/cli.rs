//! Command-line front end.
//!
//! Settings are resolved per key in this order: command-line flag, then the
//! `key=value` config file given with `--config`, then `MEANDER_JOBS` (worker
//! count only), then the built-in default. Every subcommand writes JSON or CSV
//! to stdout (or `--out`); failures print `{"error": kind, "message": ...}` to
//! stderr and exit nonzero.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{bound_report, BoundConstants};
use crate::classify::{classify, PrimeVariant};
use crate::compose::{build_irreducible, insert_even, insert_odd, prime_closure, ConstructionVariant, InsertSpec};
use crate::enumerate::{calibrate, parallel_count, parallel_count_cached, CountCache, ReferenceTable, SearchConfig};
use crate::error::{MeanderError, Result};
use crate::model::{concatenate, Convention, OpenMeander};
use crate::render::{file_name, render_arc_diagram, RenderFormat, RenderSpec};
use crate::verify::{verify_all, VerifyOptions};

pub const JOBS_ENV: &str = "MEANDER_JOBS";

#[derive(Debug, Parser)]
#[command(name = "meander", version, about = "Open and closed meanders as permutations")]
pub struct Cli {
    /// Plain `key=value` configuration file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count meanders of orders 1..=N and write the table as CSV.
    Count(CountArgs),
    /// Irreducibility and primality of one meander.
    Classify {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        prime_variant: Option<PrimeVariant>,
    },
    /// Concatenate two meanders.
    Concat {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Insert a guest meander into a host.
    Insert {
        #[arg(long)]
        host: String,
        #[arg(long)]
        guest: String,
        #[arg(long)]
        pos: usize,
        /// Even insert (into the arc after position `pos`).
        #[arg(long)]
        even: bool,
    },
    /// Build an irreducible meander of order 2n+32 or 2n+35.
    Construct {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        variant: ConstructionVariant,
    },
    /// Smallest prime extension of a meander.
    PrimeClose {
        #[arg(long)]
        perm: String,
    },
    /// Growth-rate bounds for irreducible meanders.
    Bounds {
        #[arg(long)]
        mu_upper: Option<f64>,
        #[arg(long)]
        mu_lower_sq: Option<f64>,
        #[arg(long)]
        mu_open_lower: Option<f64>,
        /// Also evaluate the upper bound at this k.
        #[arg(long)]
        k: Option<f64>,
    },
    /// Draw the arc diagram of a meander.
    Render {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        format: Option<RenderFormat>,
        /// Output file, or a directory to place `meander_<order>_<hash>.<ext>` in.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the counting convention against reference meandric numbers.
    Calibrate {
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        reference: Option<PathBuf>,
    },
    /// Run the acceptance checks.
    Verify {
        /// Skip criteria that enumerate beyond this order.
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        reference: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Print the report as JSON instead of one line per criterion.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub max_order: Option<usize>,
    #[arg(long)]
    pub convention: Option<Convention>,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub prefix_depth: Option<usize>,
    /// Skip irreducible / prime counts.
    #[arg(long)]
    pub no_classify: bool,
    /// JSON-lines count cache.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Settings shared by the subcommands after precedence resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliConfig {
    pub max_order: usize,
    pub convention: Convention,
    pub prime_variant: PrimeVariant,
    pub workers: usize,
    pub cache: Option<PathBuf>,
    pub format: RenderFormat,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            max_order: 12,
            convention: Convention::EvenRoadReversal,
            prime_variant: PrimeVariant::Paper,
            workers: 1,
            cache: None,
            format: RenderFormat::Svg,
        }
    }
}

/// Parses `key=value` lines; blank lines and `#` comments are skipped.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            MeanderError::Precondition(format!("config line {}: expected key=value", i + 1))
        })?;
        out.insert(k.trim().replace('-', "_"), v.trim().to_string());
    }
    Ok(out)
}

fn parse_value<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| MeanderError::Precondition(format!("config {key}: cannot parse {v:?}")))
}

impl CliConfig {
    /// Config file and environment on top of the defaults; flags are applied
    /// afterwards by the subcommands.
    pub fn resolve(file: Option<&BTreeMap<String, String>>, env_jobs: Option<&str>) -> Result<CliConfig> {
        let mut c = CliConfig::default();
        if let Some(j) = env_jobs {
            c.workers = parse_value(JOBS_ENV, j)?;
        }
        for (k, v) in file.into_iter().flatten() {
            match k.as_str() {
                "max_order" => c.max_order = parse_value(k, v)?,
                "convention" => c.convention = v.parse()?,
                "prime_variant" => c.prime_variant = v.parse()?,
                "workers" | "jobs" => c.workers = parse_value(k, v)?,
                "cache" => c.cache = Some(PathBuf::from(v)),
                "format" => c.format = v.parse()?,
                other => {
                    return Err(MeanderError::Precondition(format!("unknown config key {other:?}")))
                }
            }
        }
        if c.workers == 0 {
            return Err(MeanderError::Precondition("workers must be at least 1".into()));
        }
        Ok(c)
    }
}

/// Output of one subcommand.
enum Output {
    Json(serde_json::Value),
    Text(String),
    /// Printed, then the process exits with status 1.
    Failed(String),
}

fn json<T: Serialize>(v: &T) -> Result<Output> {
    Ok(Output::Json(serde_json::to_value(v)?))
}

fn meander(s: &str) -> Result<OpenMeander> {
    s.parse()
}

fn write_out(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, bytes)?;
    Ok(())
}

fn execute(cli: Cli) -> Result<Output> {
    let file = match &cli.config {
        Some(p) => Some(parse_config_file(&fs::read_to_string(p)?)?),
        None => None,
    };
    let env_jobs = std::env::var(JOBS_ENV).ok();
    let cfg = CliConfig::resolve(file.as_ref(), env_jobs.as_deref())?;

    match cli.command {
        Command::Count(a) => {
            let max_order = a.max_order.unwrap_or(cfg.max_order);
            let config = SearchConfig {
                max_order,
                prefix_depth: a.prefix_depth.unwrap_or(3.min(max_order.saturating_sub(1))),
                workers: a.jobs.unwrap_or(cfg.workers),
                convention: a.convention.unwrap_or(cfg.convention),
                classify: !a.no_classify,
            };
            let table = match a.cache.or(cfg.cache) {
                Some(path) => parallel_count_cached(&config, &CountCache::new(path))?,
                None => parallel_count(&config)?,
            };
            let mut buf = Vec::new();
            table.write_csv(&mut buf)?;
            match a.out {
                Some(path) => {
                    write_out(&path, &buf)?;
                    Ok(Output::Json(json!({ "path": path, "rows": table.rows.len() })))
                }
                None => Ok(Output::Text(String::from_utf8_lossy(&buf).into_owned())),
            }
        }
        Command::Classify { perm, prime_variant } => {
            let m = meander(&perm)?;
            json(&classify(m.perm(), prime_variant.unwrap_or(cfg.prime_variant)))
        }
        Command::Concat { a, b } => json(&concatenate(&meander(&a)?, &meander(&b)?)?),
        Command::Insert { host, guest, pos, even } => {
            let (h, g) = (meander(&host)?, meander(&guest)?);
            let spec = InsertSpec { host: &h, guest: &g, position: pos };
            let r = if even { insert_even(spec)? } else { insert_odd(spec)? };
            Ok(Output::Json(json!({
                "meander": r.meander,
                "order": r.meander.order(),
                "orientation": r.orientation,
            })))
        }
        Command::Construct { perm, variant } => json(&build_irreducible(&meander(&perm)?, variant)?),
        Command::PrimeClose { perm } => json(&prime_closure(&meander(&perm)?)?),
        Command::Bounds { mu_upper, mu_lower_sq, mu_open_lower, k } => {
            let d = BoundConstants::default();
            let c = BoundConstants {
                mu_closed_upper: mu_upper.unwrap_or(d.mu_closed_upper),
                mu_open_lower_sq: mu_lower_sq.unwrap_or(d.mu_open_lower_sq),
                mu_open_lower: mu_open_lower.unwrap_or(d.mu_open_lower),
            };
            json(&bound_report(&c, k)?)
        }
        Command::Render { perm, format, out } => {
            let spec = RenderSpec::new(meander(&perm)?.into_perm()).with_format(format.unwrap_or(cfg.format));
            let doc = render_arc_diagram(&spec)?;
            match out {
                None => Ok(Output::Text(doc)),
                Some(path) => {
                    let path = if path.is_dir() { path.join(file_name(&spec, &doc)) } else { path };
                    write_out(&path, doc.as_bytes())?;
                    Ok(Output::Json(json!({ "path": path, "bytes": doc.len() })))
                }
            }
        }
        Command::Calibrate { max_order, reference } => {
            let reference = match reference {
                Some(p) => ReferenceTable::load(p)?,
                None => ReferenceTable::embedded(),
            };
            json(&calibrate(max_order.unwrap_or(cfg.max_order), &reference)?)
        }
        Command::Verify { max_order, reference, jobs, json: as_json } => {
            let opts = VerifyOptions {
                reference: match reference {
                    Some(p) => ReferenceTable::load(p)?,
                    None => ReferenceTable::embedded(),
                },
                workers: jobs.unwrap_or(if cfg.workers > 1 { cfg.workers } else { 8 }),
                max_order,
            };
            let report = verify_all(&opts);
            let text = if as_json {
                serde_json::to_string_pretty(&report)? + "\n"
            } else {
                report.results.iter().map(|r| r.line() + "\n").collect()
            };
            if report.passed {
                Ok(Output::Text(text))
            } else {
                Ok(Output::Failed(text))
            }
        }
    }
}

fn error_json(kind: &str, message: &str) -> String {
    json!({ "error": kind, "message": message }).to_string()
}

/// Parses `args` (including the program name), runs the subcommand, writes
/// to the given streams and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let _ = writeln!(stderr, "{}", error_json("usage", e.to_string().trim()));
            return 2;
        }
    };
    match execute(cli) {
        Ok(Output::Json(v)) => {
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&v).unwrap_or_default());
            0
        }
        Ok(Output::Text(t)) => {
            let _ = write!(stdout, "{t}");
            0
        }
        Ok(Output::Failed(t)) => {
            let _ = write!(stdout, "{t}");
            let _ = writeln!(stderr, "{}", error_json("verification", "one or more criteria failed"));
            1
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", error_json(e.kind(), &e.to_string()));
            1
        }
    }
}
