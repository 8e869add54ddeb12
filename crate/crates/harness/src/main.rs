use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use globset::Glob;
use strange_core::bailey::ALL_BASE_PAIRS;
use strange_core::families::{Family, Validity, ALL_FAMILIES};
use strange_core::identities::IDENTITY_NAMES;
use strange_harness::catalog::{parse_catalog, Overrides, QUANTUM_TARGETS, STRANGE_TARGETS};
use strange_harness::runner::{run_suite, SuiteOptions};
use strange_harness::{emit_report, exit_code, Format, HarnessError, DEFAULT_CATALOG};

#[derive(Parser)]
#[command(
    name = "strange",
    version,
    about = "Exact verification of q-series and strange identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Json,
}

#[derive(Args)]
struct Output {
    /// Report format.
    #[arg(long, value_enum, default_value = "human")]
    format: FormatArg,
    /// Worker threads (0 uses every CPU).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Directory for cached results.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check formal identities whose name matches a glob.
    Verify {
        #[arg(long)]
        name: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        shifted: Option<u32>,
        #[arg(long)]
        order: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Check a family's iterated Bailey pair, or a base pair given as `base.NAME`.
    Pair {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        order: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Check strange identities at a primitive root of unity.
    Strange {
        #[arg(long)]
        name: String,
        #[arg(long)]
        root: u32,
        #[arg(long)]
        t_order: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        a: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Check a quantum identity at a primitive root of unity.
    Quantum {
        #[arg(long)]
        id: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        root: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Run a catalog.
    Suite {
        /// Catalog file; the built-in catalog when omitted.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Glob over entry labels, targets and families.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        order: Option<u32>,
        #[arg(long)]
        t_order: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// List the known identities and where they hold.
    List {
        /// Only show identities with this validity tag.
        #[arg(long)]
        validity: Option<String>,
    },
}

fn glob_names<'a>(pattern: &str, names: &[&'a str]) -> Result<Vec<&'a str>, HarnessError> {
    let matcher = Glob::new(pattern)
        .map_err(|e| HarnessError::Usage(format!("bad glob {pattern:?}: {e}")))?
        .compile_matcher();
    let hits: Vec<&str> = names.iter().copied().filter(|n| matcher.is_match(n)).collect();
    if hits.is_empty() {
        return Err(HarnessError::Usage(format!(
            "no identity matches {pattern:?}; try `strange list`"
        )));
    }
    Ok(hits)
}

fn setting(key: &str, value: Option<u32>, fallback: &str) -> String {
    match value {
        Some(v) => format!(" {key}={v}"),
        None if fallback.is_empty() => String::new(),
        None => format!(" {key}={fallback}"),
    }
}

/// Keys an identity takes and its smallest legal `k`.
fn formal_shape(name: &str) -> (&'static [&'static str], u32) {
    match name {
        "andrews_gordon" => (&["i"], 2),
        "qbinom_generating" => (&["shifted"], 1),
        "x_identity" | "sum_of_tails" => (&["family", "a"], 1),
        _ => (&["a"], 2),
    }
}

fn verify_catalog(
    name: &str,
    k: Option<u32>,
    a: Option<u32>,
    i: Option<u32>,
    family: Option<&str>,
    shifted: Option<u32>,
) -> Result<String, HarnessError> {
    let formal: Vec<&str> = IDENTITY_NAMES
        .iter()
        .copied()
        .filter(|n| !matches!(*n, "strange" | "zagier"))
        .collect();
    let mut text = String::new();
    for target in glob_names(name, &formal)? {
        let (keys, min_k) = formal_shape(target);
        let mut line = format!("cli formal {target} k={}", k.unwrap_or(min_k));
        for key in keys {
            line += &match *key {
                "i" => setting("i", i, "all"),
                "a" => setting("a", a, "all"),
                "shifted" => setting("shifted", shifted, "0"),
                _ => format!(" family={}", family.unwrap_or("all")),
            };
        }
        text += &line;
        text.push('\n');
    }
    Ok(text)
}

fn emit(reports: &[strange_harness::RunReport], format: FormatArg) -> ExitCode {
    let format = match format {
        FormatArg::Human => Format::Human,
        FormatArg::Json => Format::Json,
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(emit_report(reports, format).as_bytes());
    ExitCode::from(exit_code(reports) as u8)
}

fn run_text(text: &str, options: SuiteOptions, format: FormatArg) -> Result<ExitCode, HarnessError> {
    let catalog = parse_catalog(text)?;
    let reports = run_suite(&catalog, &options)?;
    Ok(emit(&reports, format))
}

fn options(output: &Output, overrides: Overrides) -> SuiteOptions {
    SuiteOptions {
        filter: None,
        overrides,
        jobs: output.jobs,
        cache: output.cache.clone(),
    }
}

fn list(validity: Option<&str>) -> Result<ExitCode, HarnessError> {
    let wanted = validity
        .map(|tag| tag.parse::<Validity>().map_err(|e| HarnessError::Usage(e.to_string())))
        .transpose()?;
    let mut rows: Vec<(&str, String, Vec<Validity>)> = Vec::new();
    for name in IDENTITY_NAMES.iter().filter(|n| !matches!(**n, "strange" | "zagier")) {
        rows.push(("formal", name.to_string(), vec![Validity::Formal]));
    }
    for bp in ALL_BASE_PAIRS {
        rows.push(("pair", format!("base.{}", bp.name()), vec![Validity::Formal]));
    }
    for family in ALL_FAMILIES {
        rows.push(("pair", family.name().to_string(), vec![Validity::Formal]));
    }
    for name in STRANGE_TARGETS {
        let validity = match name.parse::<Family>() {
            Ok(Family::Fam3) => vec![Family::Fam3.validity(1), Family::Fam3.validity(2)],
            Ok(f) => vec![f.validity(1)],
            Err(_) => vec![Validity::AllRoots],
        };
        rows.push(("strange", name.to_string(), validity));
    }
    for name in QUANTUM_TARGETS {
        rows.push(("quantum", name.to_string(), vec![Validity::OddRoots]));
    }
    let mut out = String::new();
    out += &format!("{:<8} {:<22} {}\n", "MODE", "TARGET", "VALIDITY");
    for (mode, target, validity) in rows {
        if wanted.is_some_and(|w| !validity.contains(&w)) {
            continue;
        }
        let tags = if validity.len() == 2 {
            format!("{} (k=1), {} (k>=2)", validity[0].tag(), validity[1].tag())
        } else {
            validity[0].tag().to_string()
        };
        out += &format!("{mode:<8} {target:<22} {tags}\n");
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, HarnessError> {
    match cli.command {
        Command::Verify {
            name,
            k,
            a,
            i,
            family,
            shifted,
            order,
            output,
        } => {
            let text = verify_catalog(&name, k, a, i, family.as_deref(), shifted)?;
            let overrides = Overrides {
                order,
                ..Overrides::default()
            };
            run_text(&text, options(&output, overrides), output.format)
        }
        Command::Pair {
            family,
            k,
            a,
            n_max,
            order,
            output,
        } => {
            let text = if family.starts_with("base.") {
                format!("cli pair {family}\n")
            } else {
                format!("cli pair {family}{}{}\n", setting("k", k, "1"), setting("a", a, "all"))
            };
            let overrides = Overrides {
                order,
                n_max,
                ..Overrides::default()
            };
            run_text(&text, options(&output, overrides), output.format)
        }
        Command::Strange {
            name,
            root,
            t_order,
            k,
            a,
            output,
        } => {
            let mut text = String::new();
            for target in glob_names(&name, &STRANGE_TARGETS)? {
                text += &format!("cli strange {target} root={root}");
                if target != "zagier" {
                    text += &setting("k", k, "1");
                    text += &setting("a", a, "all");
                }
                text.push('\n');
            }
            let overrides = Overrides {
                t_order,
                ..Overrides::default()
            };
            run_text(&text, options(&output, overrides), output.format)
        }
        Command::Quantum { id, k, a, root, output } => {
            let a_setting = if id == "fam1_vs_fam2" {
                String::new()
            } else {
                setting("a", a, "all")
            };
            let text = format!("cli quantum {id} k={k}{a_setting} root={root}\n");
            run_text(&text, options(&output, Overrides::default()), output.format)
        }
        Command::Suite {
            catalog,
            filter,
            order,
            t_order,
            n_max,
            output,
        } => {
            let text = match &catalog {
                Some(path) => fs::read_to_string(path)
                    .map_err(|e| HarnessError::Usage(format!("cannot read catalog {}: {e}", path.display())))?,
                None => DEFAULT_CATALOG.to_string(),
            };
            let mut opts = options(&output, Overrides { order, t_order, n_max });
            opts.filter = filter;
            run_text(&text, opts, output.format)
        }
        Command::List { validity } => list(validity.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("strange: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
