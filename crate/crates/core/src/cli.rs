//! The `fuzzy-gamma` command line.
//!
//! Exit codes: 0 when everything checked holds, 1 when a property is
//! refuted, 2 on invalid input.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use crate::battery::GridBattery;
use crate::enumerate::{self, SearchSpec};
use crate::format::{self, BatteryDocument, ReportDocument, VerdictDocument};
use crate::fuzzy;
use crate::ideal::{self, RegularityClass};
use crate::structure::{find_associativity_violation, GammaStructure, ValidateOptions};
use crate::suite::{self, BatteryPlan, Claim, Outcome, SearchSpace, Suite, TheoremId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fuzzy-gamma",
    version,
    about = "Fuzzy ideals and regularity of finite po-Γ-semigroups"
)]
pub struct Cli {
    /// Accept orders that are not compatible with the operations.
    #[arg(long, global = true)]
    pub no_compat: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a structure file.
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide the four regularity classes with every decider.
    Classify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run theorem checks against a structure.
    Check(CheckArgs),
    /// Print f∘g as a JSON object.
    Compose {
        path: PathBuf,
        f: PathBuf,
        g: PathBuf,
    },
    /// Enumerate po-Γ-semigroups and count regularity classes.
    Enumerate(EnumerateArgs),
    /// Search enumerated structures for a refutation of one claim.
    Falsify(FalsifyArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub path: PathBuf,
    /// Registry id (P4 ... QI) or a negative control such as L8-unconditional.
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    pub theorem: Option<String>,
    #[arg(long)]
    pub all: bool,
    /// Grid levels; defaults to 2n + 2.
    #[arg(long)]
    pub levels: Option<usize>,
    /// Seed for sampled batteries.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub limit: Option<usize>,
    #[arg(long)]
    pub up_to_iso: bool,
    /// Write the census JSON here.
    #[arg(long)]
    pub census: Option<PathBuf>,
    /// Write each structure as a JSON file into this directory.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Lift the default caps (n <= 3, m <= 2) up to n <= 4, m <= 3.
    #[arg(long)]
    pub allow_large: bool,
    /// Print the census JSON on standard output.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct FalsifyArgs {
    #[arg(long)]
    pub theorem: String,
    #[arg(long, default_value_t = 2)]
    pub max_n: usize,
    #[arg(long, default_value_t = 1)]
    pub max_m: usize,
    /// Structures examined per (n, m).
    #[arg(long)]
    pub limit: Option<usize>,
    #[arg(long)]
    pub levels: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_INPUT
        }
    }
}

fn options(cli: &Cli) -> ValidateOptions {
    ValidateOptions {
        require_compat: !cli.no_compat,
    }
}

fn load(cli: &Cli, path: &Path) -> anyhow::Result<GammaStructure> {
    format::read_structure(path, options(cli)).with_context(|| format!("{}", path.display()))
}

fn load_semigroup(cli: &Cli, path: &Path) -> anyhow::Result<GammaStructure> {
    let s = load(cli, path)?;
    if let Some((x, g, y, mu, z)) =
        find_associativity_violation(s.size(), s.gamma_count(), s.table())
    {
        let (x, g, y, mu, z) = (
            s.element_label(x),
            s.gamma_label(g),
            s.element_label(y),
            s.gamma_label(mu),
            s.element_label(z),
        );
        bail!(
            "{}: not associative: ({x} {g} {y}) {mu} {z} != {x} {g} ({y} {mu} {z})",
            path.display()
        );
    }
    Ok(s)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs a parsed command; errors are input errors.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    match &cli.command {
        Command::Validate { path, json } => {
            let s = load(cli, path)?;
            if *json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&ReportDocument::new(&s))?
                )?;
            } else {
                writeln!(
                    out,
                    "valid: {} elements, {} operations, associative: {}, compatible: {}, digest {}",
                    s.size(),
                    s.gamma_count(),
                    yes(s.is_associative()),
                    yes(s.is_compatible()),
                    s.digest()
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Classify { path, json } => {
            let start = Instant::now();
            let s = load_semigroup(cli, path)?;
            let report = ideal::classify(&s)?;
            if *json {
                let mut doc = ReportDocument::new(&s);
                doc.classification = Some(format::classification_documents(&s, &report));
                doc.timing_ms = start.elapsed().as_secs_f64() * 1e3;
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                for v in &report.classes {
                    let deciders: Vec<String> = v
                        .deciders
                        .iter()
                        .map(|(d, b)| format!("{d:?}={}", yes(*b)))
                        .collect();
                    writeln!(
                        out,
                        "{:<14} {:<3} [{}]",
                        v.class.name(),
                        yes(v.holds),
                        deciders.join(" ")
                    )?;
                    for w in &v.witnesses {
                        writeln!(out, "    {}", w.render(&s))?;
                    }
                    if let Some(a) = v.failing_element {
                        writeln!(out, "    fails at {}", s.element_label(a))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check(args) => cmd_check(cli, args, out),
        Command::Compose { path, f, g } => {
            let s = load(cli, path)?;
            let f = format::read_fuzzy(&s, f)?;
            let g = format::read_fuzzy(&s, g)?;
            let fg = fuzzy::compose(&s, &f, &g)?;
            writeln!(
                out,
                "{}",
                serde_json::to_string(&format::fuzzy_to_map(&s, fg.values()))?
            )?;
            Ok(EXIT_OK)
        }
        Command::Enumerate(args) => cmd_enumerate(cli, args, out),
        Command::Falsify(args) => {
            let claim: Claim = args.theorem.parse()?;
            let space = SearchSpace {
                max_n: args.max_n,
                max_m: args.max_m,
                limit: args.limit,
            };
            let plan = BatteryPlan {
                levels: args.levels,
                seed: args.seed,
            };
            match suite::find_counterexample(claim, space, plan)? {
                None => {
                    writeln!(
                        out,
                        "{claim}: no refutation for n <= {}, m <= {}",
                        args.max_n, args.max_m
                    )?;
                    Ok(EXIT_OK)
                }
                Some((s, v)) => {
                    writeln!(out, "{claim}: refuted on\n{s}")?;
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&VerdictDocument::from_verdict(&s, &v))?
                    )?;
                    writeln!(out, "structure:\n{}", format::structure_to_json(&s))?;
                    Ok(EXIT_REFUTED)
                }
            }
        }
    }
}

fn cmd_check(cli: &Cli, args: &CheckArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let start = Instant::now();
    let s = load_semigroup(cli, &args.path)?;
    let claims: Vec<Claim> = match &args.theorem {
        Some(id) => vec![id.parse()?],
        None => TheoremId::ALL
            .iter()
            .map(|&id| Claim::Theorem(id))
            .collect(),
    };
    let levels = args
        .levels
        .unwrap_or_else(|| GridBattery::complete_levels(s.size()));
    let battery = GridBattery::auto(s.size(), levels, args.seed);
    let suite = Suite::new(&s, &battery)?;
    let verdicts = claims
        .iter()
        .map(|&c| suite.check(c))
        .collect::<Result<Vec<_>, _>>()?;
    let refuted = verdicts.iter().filter(|v| v.is_refuted()).count();
    if args.json {
        let mut doc = ReportDocument::new(&s);
        doc.classification = Some(format::classification_documents(&s, &ideal::classify(&s)?));
        doc.verdicts = verdicts
            .iter()
            .map(|v| VerdictDocument::from_verdict(&s, v))
            .collect();
        doc.battery = Some(BatteryDocument {
            levels: battery.levels,
            scope: battery.scope,
        });
        doc.timing_ms = start.elapsed().as_secs_f64() * 1e3;
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        for v in &verdicts {
            let outcome = match v.outcome {
                Outcome::Holds => "holds",
                Outcome::HoldsVacuously => "holds (vacuous)",
                Outcome::Refuted => "REFUTED",
                Outcome::Skipped => "skipped",
            };
            let line = format!("{:<18} {:<16} {}", v.claim.as_str(), outcome, v.note);
            writeln!(out, "{}", line.trim_end())?;
            if let Some(w) = &v.witness {
                let doc = format::WitnessDocument::from_witness(&s, w);
                writeln!(out, "    witness: {}", serde_json::to_string(&doc)?)?;
                writeln!(out, "    replays: {}", yes(w.replay(&s)))?;
            }
        }
        let b = suite.battery();
        writeln!(
            out,
            "{} checked, {} refuted; battery: {} levels, {}, {} members",
            verdicts.len(),
            refuted,
            battery.levels,
            if battery.is_exhaustive() {
                "exhaustive".to_string()
            } else {
                format!("sampled (seed {})", args.seed)
            },
            b.len()
        )?;
    }
    Ok(if refuted > 0 { EXIT_REFUTED } else { EXIT_OK })
}

fn cmd_enumerate(cli: &Cli, args: &EnumerateArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let spec = SearchSpec {
        n: args.n,
        m: args.m,
        limit: args.limit,
        up_to_iso: args.up_to_iso,
        require_compat: !cli.no_compat,
        allow_large: args.allow_large,
    };
    if let Some(dir) = &args.out_dir {
        std::fs::create_dir_all(dir).with_context(|| format!("{}", dir.display()))?;
        for (k, s) in enumerate::enumerate_structures(&spec)?.enumerate() {
            let path = dir.join(format!("n{}m{}_{k:05}.json", args.n, args.m));
            std::fs::write(&path, format::structure_to_json(&s))
                .with_context(|| format!("{}", path.display()))?;
        }
    }
    let census = enumerate::census(&spec)?;
    let json = serde_json::to_string_pretty(&census)?;
    if let Some(path) = &args.census {
        std::fs::write(path, &json).with_context(|| format!("{}", path.display()))?;
    }
    if args.json {
        writeln!(out, "{json}")?;
    } else {
        let classes: Vec<String> = RegularityClass::ALL
            .iter()
            .map(|c| format!("{} {}", c.name(), census.classes[c.name()]))
            .collect();
        writeln!(
            out,
            "n={} m={}{}: {} structures over {} tables; {}{}",
            census.n,
            census.m,
            if census.up_to_iso { " up to iso" } else { "" },
            census.total,
            census.tables,
            classes.join(", "),
            if census.truncated { " (truncated)" } else { "" }
        )?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("fuzzy-gamma").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["check"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["bogus"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn enumerate_trivial() {
        let (code, out, _) = run_args(&["enumerate", "--n", "1", "--m", "1", "--json"]);
        assert_eq!(code, 0);
        let c: enumerate::Census = serde_json::from_str(&out).unwrap();
        assert_eq!(c.total, 1);
    }

    #[test]
    fn enumerate_caps_exit_2() {
        let (code, _, err) = run_args(&["enumerate", "--n", "4", "--m", "1"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("cap"));
    }
}
