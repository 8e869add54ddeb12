//! Executes jobs, with an optional on-disk result cache.

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::Instant;

use globset::{Glob, GlobMatcher};
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use strange_core::bailey::{build_family_pair, closed_beta, verify_pair, BaileyPair, ALL_BASE_PAIRS};
use strange_core::cyclotomic::CycNum;
use strange_core::families::Family;
use strange_core::identities::{build_identity, compare_sides, verify_identity, Identity};
use strange_core::strange::{quantum_check, strange_by_name, strange_check, Outcome, QuantumId};
use strange_core::{Error, QSeries, Rational, VERSION};

use crate::catalog::{Catalog, Job, Mode, Overrides, RUN_KEYS};
use crate::report::{CycValue, RunReport, Status, Timing, Witness};
use crate::HarnessError;

/// Result of a check before it is wrapped into a report.
struct Verdict {
    status: Status,
    witness: Option<Witness>,
    detail: Option<String>,
}

impl Verdict {
    fn pass() -> Verdict {
        Verdict {
            status: Status::Pass,
            witness: None,
            detail: None,
        }
    }

    fn fail(witness: Witness) -> Verdict {
        Verdict {
            status: Status::Fail,
            witness: Some(witness),
            detail: None,
        }
    }

    fn from_outcome(outcome: Outcome, root: u32, lhs: &[CycNum], rhs: &[CycNum]) -> Verdict {
        match outcome {
            Outcome::Pass => Verdict::pass(),
            Outcome::Fail { t_degree } => Verdict::fail(Witness::Root {
                root,
                t_degree,
                lhs: CycValue::from_cyc(&lhs[t_degree]),
                rhs: CycValue::from_cyc(&rhs[t_degree]),
            }),
            Outcome::RootRejected { reason } => Verdict {
                status: Status::RootRejected,
                witness: None,
                detail: Some(reason),
            },
        }
    }
}

fn required(job: &Job, key: &str) -> Result<u32, Error> {
    job.int(key)
        .ok_or_else(|| Error::BadParams(format!("{} {} needs {key}=", job.mode, job.target)))
}

fn run_formal(job: &Job) -> Result<Verdict, Error> {
    let params: Vec<(String, String)> = job
        .params
        .iter()
        .filter(|(k, _)| !RUN_KEYS.contains(&k.as_str()))
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect();
    let id = Identity::from_parts(&job.target, &params)?;
    let order = required(job, "order")?;
    let report = match job.int("perturb") {
        None => verify_identity(&id, order)?,
        Some(d) => {
            let mut sides = build_identity(&id, order)?;
            sides.rhs = &sides.rhs + &QSeries::monomial(Rational::one(), 0, d as u64, order);
            compare_sides(&id.to_string(), &sides, order)
        }
    };
    Ok(match report.first_failure() {
        None => Verdict::pass(),
        Some(c) => Verdict::fail(Witness::series(
            &c.label,
            c.mismatch.as_ref().expect("failed comparison has a mismatch"),
        )),
    })
}

fn check_pair(check: &str, pair: &BaileyPair, n_max: usize, order: u32) -> Result<Option<Verdict>, Error> {
    let report = verify_pair(pair, n_max, order)?;
    Ok(report
        .failure
        .map(|f| Verdict::fail(Witness::pair(check, f.n, &f.mismatch))))
}

fn run_pair(job: &Job) -> Result<Verdict, Error> {
    let order = required(job, "order")?;
    let n_max = required(job, "n_max")? as usize;
    if let Some(name) = job.target.strip_prefix("base.") {
        let base = ALL_BASE_PAIRS
            .into_iter()
            .find(|bp| bp.name() == name)
            .ok_or_else(|| Error::BadParams(format!("unknown base pair {name:?}")))?;
        for (check, pair) in [("slater", base.slater()?), ("displayed", base.displayed())] {
            if let Some(v) = check_pair(check, &pair, n_max, order)? {
                return Ok(v);
            }
        }
        return Ok(Verdict::pass());
    }
    let family: Family = job.target.parse()?;
    let (k, a) = (required(job, "k")?, required(job, "a")?);
    let fp = build_family_pair(family, k, a)?;
    for (check, pair) in [("iterated", &fp.iterated), ("closed_alpha", &fp.displayed)] {
        if let Some(v) = check_pair(check, pair, n_max, order)? {
            return Ok(v);
        }
    }
    for n in 0..=n_max {
        let expected = fp.iterated.beta.get(n, order)?;
        let got = closed_beta(family, k, a, n, order)?;
        if let Some(m) = got.first_difference(&expected, order) {
            return Ok(Verdict::fail(Witness::pair("closed_beta", n, &m)));
        }
    }
    Ok(Verdict::pass())
}

fn run_strange(job: &Job) -> Result<Verdict, Error> {
    let root = required(job, "root")?;
    let t_order = required(job, "t_order")? as usize;
    let k = job.int("k").unwrap_or(1);
    let a = job.int("a").unwrap_or(0);
    let spec = strange_by_name(&job.target, k, a)?;
    let mut report = strange_check(&spec, root, t_order)?;
    if let Some(d) = job.int("perturb").map(|d| d as usize) {
        if report.outcome == Outcome::Pass && d < report.rhs.len() {
            let one = CycNum::one(report.rhs[d].field());
            report.rhs[d] = &report.rhs[d] + &one;
            let t_degree = report
                .lhs
                .iter()
                .zip(&report.rhs)
                .position(|(l, r)| l != r)
                .unwrap_or(d);
            report.outcome = Outcome::Fail { t_degree };
        }
    }
    Ok(Verdict::from_outcome(report.outcome, root, &report.lhs, &report.rhs))
}

fn run_quantum(job: &Job) -> Result<Verdict, Error> {
    let root = required(job, "root")?;
    let id = QuantumId::parse(&job.target, required(job, "k")?, job.int("a").unwrap_or(0))?;
    let report = quantum_check(id, root)?;
    let lhs: Vec<_> = report.lhs.into_iter().collect();
    let rhs: Vec<_> = report.rhs.into_iter().collect();
    Ok(Verdict::from_outcome(report.outcome, root, &lhs, &rhs))
}

/// Run one job without consulting the cache.
pub fn run_job(job: &Job, catalog_digest: &str) -> RunReport {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| match job.mode {
        Mode::Formal => run_formal(job),
        Mode::Pair => run_pair(job),
        Mode::Strange => run_strange(job),
        Mode::Quantum => run_quantum(job),
    }));
    let verdict = match outcome {
        Ok(Ok(v)) => v,
        Ok(Err(e)) => Verdict {
            status: Status::Error,
            witness: None,
            detail: Some(e.to_string()),
        },
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            Verdict {
                status: Status::Error,
                witness: None,
                detail: Some(format!("engine panicked: {msg}")),
            }
        }
    };
    RunReport {
        entry: job.entry.clone(),
        target: job.target.clone(),
        params: job.params.clone(),
        mode: job.mode,
        status: verdict.status,
        witness: verdict.witness,
        detail: verdict.detail,
        timing: Timing {
            millis: start.elapsed().as_millis() as u64,
            cached: false,
        },
        engine_version: VERSION.to_string(),
        catalog_digest: catalog_digest.to_string(),
    }
}

/// Directory of cached reports keyed by job and engine version.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Cache, HarnessError> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir).map_err(|e| HarnessError::Io(dir.display().to_string(), e))?;
        Ok(Cache { dir })
    }

    pub fn key(job: &Job) -> String {
        let mut hasher = Sha256::new();
        hasher.update(job.canonical().as_bytes());
        hasher.update(b"\n");
        hasher.update(VERSION.as_bytes());
        hex::encode(hasher.finalize())
    }

    fn path(&self, job: &Job) -> PathBuf {
        self.dir.join(format!("{}.json", Cache::key(job)))
    }

    pub fn load(&self, job: &Job, catalog_digest: &str) -> Option<RunReport> {
        let text = fs::read_to_string(self.path(job)).ok()?;
        let mut report: RunReport = serde_json::from_str(&text).ok()?;
        if report.params != job.params || report.mode != job.mode || report.target != job.target {
            return None;
        }
        report.entry = job.entry.clone();
        report.catalog_digest = catalog_digest.to_string();
        report.timing = Timing {
            millis: 0,
            cached: true,
        };
        Some(report)
    }

    pub fn store(&self, job: &Job, report: &RunReport) -> Result<(), HarnessError> {
        let path = self.path(job);
        let text = serde_json::to_string(report).expect("reports serialize");
        // Write then rename so a concurrent reader never sees a partial file.
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, text).map_err(|e| HarnessError::Io(tmp.display().to_string(), e))?;
        fs::rename(&tmp, &path).map_err(|e| HarnessError::Io(path.display().to_string(), e))
    }
}

/// Selects jobs whose label, target or family matches a glob.
#[derive(Debug, Clone)]
pub struct Filter {
    matcher: Option<GlobMatcher>,
}

impl Filter {
    pub fn new(pattern: Option<&str>) -> Result<Filter, HarnessError> {
        let matcher = match pattern {
            None => None,
            Some(p) => Some(
                Glob::new(p)
                    .map_err(|e| HarnessError::Usage(format!("bad filter {p:?}: {e}")))?
                    .compile_matcher(),
            ),
        };
        Ok(Filter { matcher })
    }

    pub fn matches(&self, job: &Job) -> bool {
        let Some(m) = &self.matcher else {
            return true;
        };
        m.is_match(&job.entry) || m.is_match(&job.target) || job.name("family").is_some_and(|f| m.is_match(f))
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub filter: Option<String>,
    pub overrides: Overrides,
    /// Worker threads; 0 picks the number of CPUs.
    pub jobs: usize,
    pub cache: Option<PathBuf>,
}

/// Run the selected jobs of a catalog; reports follow catalog order.
pub fn run_suite(catalog: &Catalog, options: &SuiteOptions) -> Result<Vec<RunReport>, HarnessError> {
    let filter = Filter::new(options.filter.as_deref())?;
    let jobs: Vec<Job> = catalog
        .jobs(&options.overrides)
        .into_iter()
        .filter(|j| filter.matches(j))
        .collect();
    run_jobs(&jobs, &catalog.digest, options.jobs, options.cache.as_deref())
}

pub fn run_jobs(
    jobs: &[Job],
    digest: &str,
    threads: usize,
    cache: Option<&Path>,
) -> Result<Vec<RunReport>, HarnessError> {
    let cache = cache.map(Cache::open).transpose()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| HarnessError::Usage(format!("cannot start worker pool: {e}")))?;
    pool.install(|| {
        jobs.par_iter()
            .map(|job| {
                if let Some(hit) = cache.as_ref().and_then(|c| c.load(job, digest)) {
                    return Ok(hit);
                }
                let report = run_job(job, digest);
                if let Some(c) = &cache {
                    c.store(job, &report)?;
                }
                Ok(report)
            })
            .collect()
    })
}
