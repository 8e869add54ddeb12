//! Line-oriented catalog of checks.
//!
//! Each non-blank line that does not start with `#` reads
//! `label mode target key=value ...`. See `CATALOG.md` for the grammar.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use strange_core::bailey::ALL_BASE_PAIRS;
use strange_core::families::{Family, ALL_FAMILIES};
use strange_core::identities::{Identity, IDENTITY_NAMES};
use strange_core::strange::{strange_by_name, QuantumId};

use crate::HarnessError;

pub const DEFAULT_CATALOG: &str = include_str!("../catalog/default.cat");

const DEFAULT_ORDER: u32 = 30;
const DEFAULT_PAIR_ORDER: u32 = 25;
const DEFAULT_N_MAX: u32 = 4;
const DEFAULT_T_ORDER: u32 = 2;

/// Keys that steer a run rather than name the identity.
pub const RUN_KEYS: [&str; 2] = ["order", "perturb"];

pub const STRANGE_TARGETS: [&str; 7] = [
    "zagier", "hikami", "family1", "family2", "family3", "family4", "family5",
];
pub const QUANTUM_TARGETS: [&str; 3] = ["fam1_vs_fam2", "fam5_vs_fam3", "fam5_vs_hikami"];
pub const PAIR_FAMILY_TARGETS: [&str; 6] = ["hikami", "family1", "family2", "family3", "family4", "family5"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Formal,
    Pair,
    Strange,
    Quantum,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Formal => "formal",
            Mode::Pair => "pair",
            Mode::Strange => "strange",
            Mode::Quantum => "quantum",
        }
    }

    fn parse(s: &str) -> Option<Mode> {
        Some(match s {
            "formal" => Mode::Formal,
            "pair" => Mode::Pair,
            "strange" => Mode::Strange,
            "quantum" => Mode::Quantum,
            _ => return None,
        })
    }

    fn keys(self) -> &'static [&'static str] {
        match self {
            Mode::Formal => &["family", "k", "a", "i", "shifted", "order", "perturb"],
            Mode::Pair => &["k", "a", "n_max", "order"],
            Mode::Strange => &["k", "a", "root", "t_order", "perturb"],
            Mode::Quantum => &["k", "a", "root"],
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A parameter value after expansion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(u32),
    Name(String),
}

impl Param {
    pub fn as_int(&self) -> Option<u32> {
        match self {
            Param::Int(n) => Some(*n),
            Param::Name(_) => None,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(n) => write!(f, "{n}"),
            Param::Name(s) => f.write_str(s),
        }
    }
}

/// The right side of `key=value` before expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueSpec {
    All,
    List(Vec<Param>),
}

impl ValueSpec {
    fn is_single(&self) -> bool {
        matches!(self, ValueSpec::List(v) if v.len() == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    /// 1-based line number in the catalog text.
    pub line: usize,
    pub label: String,
    pub mode: Mode,
    pub target: String,
    pub settings: Vec<(String, ValueSpec)>,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub entries: Vec<Entry>,
    /// Hex sha256 of the catalog text.
    pub digest: String,
}

/// Order settings that replace the catalog's values.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Overrides {
    pub order: Option<u32>,
    pub t_order: Option<u32>,
    pub n_max: Option<u32>,
}

/// One concrete check: an entry with every parameter fixed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Job {
    pub entry: String,
    pub mode: Mode,
    pub target: String,
    pub params: BTreeMap<String, Param>,
}

impl Job {
    pub fn int(&self, key: &str) -> Option<u32> {
        self.params.get(key).and_then(Param::as_int)
    }

    pub fn name(&self, key: &str) -> Option<&str> {
        match self.params.get(key) {
            Some(Param::Name(s)) => Some(s),
            _ => None,
        }
    }

    /// `key=value` pairs, space separated, in key order.
    pub fn param_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Canonical text of the job, independent of its label.
    pub fn canonical(&self) -> String {
        format!("{} {} {}", self.mode, self.target, self.param_string())
    }
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> HarnessError {
    HarnessError::CatalogParse {
        line,
        column,
        message: message.into(),
    }
}

fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.')
}

/// Split a line into words with their 1-based starting columns.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(i, w)| (i + 1, w)).collect()
}

fn parse_int(text: &str) -> Option<u32> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

fn parse_value(key: &str, text: &str) -> std::result::Result<ValueSpec, String> {
    if text == "all" {
        return match key {
            "family" | "a" | "i" => Ok(ValueSpec::All),
            _ => Err(format!("`all` is not defined for {key}")),
        };
    }
    if let Some((lo, hi)) = text.split_once("..") {
        let (hi, inclusive) = match hi.strip_prefix('=') {
            Some(h) => (h, true),
            None => (hi, false),
        };
        let (Some(lo), Some(hi)) = (parse_int(lo), parse_int(hi)) else {
            return Err(format!("bad range {text:?}"));
        };
        let values: Vec<Param> = if inclusive {
            (lo..=hi).map(Param::Int).collect()
        } else {
            (lo..hi).map(Param::Int).collect()
        };
        if values.is_empty() {
            return Err(format!("empty range {text:?}"));
        }
        return Ok(ValueSpec::List(values));
    }
    let mut values = Vec::new();
    for item in text.split(',') {
        if key == "family" {
            let family: Family = item.parse().map_err(|_| format!("unknown family {item:?}"))?;
            values.push(Param::Name(family.name().to_string()));
        } else {
            values.push(Param::Int(
                parse_int(item).ok_or_else(|| format!("{key} expects a natural number, got {item:?}"))?,
            ));
        }
    }
    Ok(ValueSpec::List(values))
}

fn target_known(mode: Mode, target: &str) -> bool {
    match mode {
        Mode::Formal => IDENTITY_NAMES.contains(&target) && !matches!(target, "strange" | "zagier"),
        Mode::Pair => {
            PAIR_FAMILY_TARGETS.contains(&target)
                || target
                    .strip_prefix("base.")
                    .is_some_and(|name| ALL_BASE_PAIRS.iter().any(|bp| bp.name() == name))
        }
        Mode::Strange => STRANGE_TARGETS.contains(&target),
        Mode::Quantum => QUANTUM_TARGETS.contains(&target),
    }
}

fn parse_entry(line_no: usize, line: &str) -> Result<Option<Entry>, HarnessError> {
    let words = words(line);
    let Some(&(col, first)) = words.first() else {
        return Ok(None);
    };
    if first.starts_with('#') {
        return Ok(None);
    }
    if let Some(bad) = first.chars().find(|&c| !is_label_char(c)) {
        return Err(parse_error(line_no, col, format!("invalid character {bad:?} in label")));
    }
    let end_col = line.trim_end().len() + 1;
    let &(mode_col, mode_word) = words
        .get(1)
        .ok_or_else(|| parse_error(line_no, end_col, "expected a mode after the label"))?;
    let mode = Mode::parse(mode_word).ok_or_else(|| {
        parse_error(
            line_no,
            mode_col,
            format!("unknown mode {mode_word:?}; expected formal, pair, strange or quantum"),
        )
    })?;
    let &(target_col, target) = words
        .get(2)
        .ok_or_else(|| parse_error(line_no, end_col, "expected a target after the mode"))?;
    if !target_known(mode, target) {
        return Err(parse_error(
            line_no,
            target_col,
            format!("unknown {mode} target {target:?}"),
        ));
    }
    let mut settings: Vec<(String, ValueSpec)> = Vec::new();
    for &(col, word) in &words[3..] {
        if word.starts_with('#') {
            break;
        }
        let Some((key, value)) = word.split_once('=') else {
            return Err(parse_error(line_no, col, format!("expected key=value, got {word:?}")));
        };
        let mut allowed = mode.keys().to_vec();
        if mode == Mode::Strange && target == "zagier" {
            allowed.retain(|k| !matches!(*k, "k" | "a"));
        }
        if !allowed.contains(&key) {
            return Err(parse_error(
                line_no,
                col,
                format!("key {key:?} is not valid for {mode} {target}"),
            ));
        }
        if settings.iter().any(|(k, _)| k == key) {
            return Err(parse_error(line_no, col, format!("duplicate key {key:?}")));
        }
        let value = parse_value(key, value).map_err(|m| parse_error(line_no, col + key.len() + 1, m))?;
        settings.push((key.to_string(), value));
    }
    let required: &[&str] = match mode {
        Mode::Strange | Mode::Quantum => &["root"],
        _ => &[],
    };
    for key in required {
        if !settings.iter().any(|(k, _)| k == key) {
            return Err(parse_error(line_no, end_col, format!("{mode} entries need {key}=")));
        }
    }
    Ok(Some(Entry {
        line: line_no,
        label: first.to_string(),
        mode,
        target: target.to_string(),
        settings,
    }))
}

pub fn parse_catalog(text: &str) -> Result<Catalog, HarnessError> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(entry) = parse_entry(i + 1, line)? {
            entries.push(entry);
        }
    }
    Ok(Catalog {
        entries,
        digest: digest(text),
    })
}

/// Whether the fixed parameters name a legal check.
pub fn job_is_legal(job: &Job) -> bool {
    let k = job.int("k");
    let a = job.int("a").unwrap_or(0);
    match job.mode {
        Mode::Formal => {
            let params: Vec<(String, String)> = job
                .params
                .iter()
                .filter(|(key, _)| !RUN_KEYS.contains(&key.as_str()))
                .map(|(key, v)| (key.clone(), v.to_string()))
                .collect();
            Identity::from_parts(&job.target, &params).is_ok()
        }
        Mode::Pair => match job.target.parse::<Family>() {
            Ok(family) => k.is_some_and(|k| family.validate(k, a).is_ok()),
            Err(_) => true,
        },
        Mode::Strange => job.target == "zagier" || k.is_some_and(|k| strange_by_name(&job.target, k, a).is_ok()),
        Mode::Quantum => k.is_some_and(|k| QuantumId::parse(&job.target, k, a).and_then(|id| id.sides()).is_ok()),
    }
}

fn all_values(key: &str, fixed: &BTreeMap<String, Param>) -> Vec<Param> {
    let k = fixed.get("k").and_then(Param::as_int).unwrap_or(1);
    match key {
        "family" => ALL_FAMILIES.iter().map(|f| Param::Name(f.name().to_string())).collect(),
        "i" => (1..=k).map(Param::Int).collect(),
        // Legality filtering removes the values a family does not accept.
        "a" => (0..k.max(1)).map(Param::Int).collect(),
        _ => Vec::new(),
    }
}

impl Entry {
    /// Expand every value list into concrete jobs.
    ///
    /// Combinations that produce an illegal check are dropped when the entry
    /// has more than one combination; a single-combination entry is kept so
    /// that the run reports the problem.
    pub fn expand(&self, overrides: &Overrides) -> Vec<Job> {
        let mut partial: Vec<BTreeMap<String, Param>> = vec![BTreeMap::new()];
        let mut deferred = Vec::new();
        for (key, value) in &self.settings {
            match value {
                ValueSpec::List(values) => {
                    partial = partial
                        .into_iter()
                        .flat_map(|m| {
                            values.iter().map(move |v| {
                                let mut m = m.clone();
                                m.insert(key.clone(), v.clone());
                                m
                            })
                        })
                        .collect();
                }
                ValueSpec::All => deferred.push(key.as_str()),
            }
        }
        // `family` first, then keys whose range depends on `k`.
        deferred.sort_by_key(|k| *k != "family");
        for key in deferred {
            partial = partial
                .into_iter()
                .flat_map(|m| {
                    all_values(key, &m).into_iter().map(move |v| {
                        let mut m = m.clone();
                        m.insert(key.to_string(), v);
                        m
                    })
                })
                .collect();
        }
        let single = self.settings.iter().all(|(_, v)| v.is_single());
        partial
            .into_iter()
            .map(|mut params| {
                self.fill_defaults(&mut params, overrides);
                Job {
                    entry: self.label.clone(),
                    mode: self.mode,
                    target: self.target.clone(),
                    params,
                }
            })
            .filter(|job| single || job_is_legal(job))
            .collect()
    }

    fn fill_defaults(&self, params: &mut BTreeMap<String, Param>, overrides: &Overrides) {
        let mut set = |key: &str, over: Option<u32>, default: u32| {
            if let Some(v) = over {
                params.insert(key.to_string(), Param::Int(v));
            } else {
                params.entry(key.to_string()).or_insert(Param::Int(default));
            }
        };
        match self.mode {
            Mode::Formal => set("order", overrides.order, DEFAULT_ORDER),
            Mode::Pair => {
                set("order", overrides.order, DEFAULT_PAIR_ORDER);
                set("n_max", overrides.n_max, DEFAULT_N_MAX);
            }
            Mode::Strange => set("t_order", overrides.t_order, DEFAULT_T_ORDER),
            Mode::Quantum => {}
        }
        let needs_k = match self.mode {
            Mode::Strange => self.target != "zagier",
            Mode::Pair => !self.target.starts_with("base."),
            Mode::Quantum => true,
            Mode::Formal => false,
        };
        if needs_k {
            params.entry("k".into()).or_insert(Param::Int(1));
            params.entry("a".into()).or_insert(Param::Int(0));
        }
    }
}

impl Catalog {
    /// Expand every entry, keeping catalog order.
    pub fn jobs(&self, overrides: &Overrides) -> Vec<Job> {
        self.entries.iter().flat_map(|e| e.expand(overrides)).collect()
    }
}
