//! Argument parsing and command dispatch for the `bwtop` binary.

use std::fmt::Write;
use std::path::Path;

use bwtop_core::barcat::{em_bar, hocolim, Diagram};
use bwtop_core::consequences::{hocolim_preservation_check, james, james_rational_comparison};
use bwtop_core::exactalg::{homology_all, ChainComplex, Coefficients, HomologyResult};
use bwtop_core::simplicial::{category_nerve, nerve, product, semigroup_nerve, wedge, FinCategory, FinMonoid, FinSemigroup, SimplicialSet};
use bwtop_core::wconstruct::{block_cells, components_match_products, wbar_complex, wbar_components, Mode};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::eval::{evaluate, Ground};
use crate::fixtures;
use crate::format::{parse_category, parse_chain, parse_diagram, parse_monoid, parse_semigroup, write_chain};
use crate::suites::{self, Suite};

#[derive(Debug, Parser)]
#[command(name = "bwtop", version, about = "Exact homology of classifying spaces, bar constructions and W-resolutions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Homology of a construction on one input.
    Homology(HomologyArgs),
    /// Run a verification suite; one `PASS|FAIL` line per check.
    Verify(VerifyArgs),
    /// Evaluate an expression over W-tuples and ζ-paths.
    Eval(EvalArgs),
    /// Homotopy colimit of a diagram, or the two-group comparison.
    Hocolim(HocolimArgs),
    /// The truncated James construction `J_L X`.
    James(JamesArgs),
    /// The W̄ cell complex of a semigroup with at most `L` letters.
    Wbar(WbarArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Lines,
    /// The chain complex itself, in the `chain` text format.
    Chain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Nerve,
    Bar,
    Hocolim,
    Wbar,
    James,
}

/// Exactly one input object. Each takes a fixture name or a file path.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    #[arg(long)]
    pub monoid: Option<String>,
    #[arg(long)]
    pub semigroup: Option<String>,
    #[arg(long)]
    pub category: Option<String>,
    #[arg(long)]
    pub diagram: Option<String>,
    /// A chain complex file.
    #[arg(long)]
    pub chain: Option<String>,
}

#[derive(Debug, Args)]
pub struct HomologyArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, value_enum)]
    pub construction: Option<Construction>,
    /// Simplicial truncation; degrees below it are reported.
    #[arg(long, default_value_t = 4)]
    pub maxdim: usize,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub letters: u64,
    #[arg(long, default_value = "Z", value_parser = parse_coeffs)]
    pub coeffs: Coefficients,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
    pub suite: String,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = suites::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub expression: String,
    /// Finite monoid ground (required for `zeta` and `ev`).
    #[arg(long, conflicts_with = "semigroup")]
    pub monoid: Option<String>,
    #[arg(long)]
    pub semigroup: Option<String>,
    /// Work in W instead of W̄.
    #[arg(long)]
    pub unital: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("hocolim_input").required(true).args(["diagram", "groups"])))]
pub struct HocolimArgs {
    #[arg(long)]
    pub diagram: Option<String>,
    /// Compare the span `BG₁ ← * → BG₂` with `BG₁ ∨ BG₂` homology.
    #[arg(long, num_args = 2, value_names = ["G1", "G2"])]
    pub groups: Option<Vec<String>>,
    #[arg(long, default_value_t = 4)]
    pub maxdim: usize,
    #[arg(long, default_value = "Z", value_parser = parse_coeffs)]
    pub coeffs: Coefficients,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct JamesArgs {
    /// `s0`, `circle`, `sphere<n>`, `torus`, `wedge` (of two circles).
    #[arg(long, conflicts_with = "monoid", default_value = "circle")]
    pub space: String,
    /// Use the nerve of a monoid as the space.
    #[arg(long)]
    pub monoid: Option<String>,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub letters: u64,
    /// Defaults to `letters + 1`.
    #[arg(long)]
    pub maxdim: Option<usize>,
    #[arg(long, default_value = "Z", value_parser = parse_coeffs)]
    pub coeffs: Coefficients,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("wbar_input").required(true).args(["semigroup", "monoid"])))]
pub struct WbarArgs {
    #[arg(long)]
    pub semigroup: Option<String>,
    #[arg(long)]
    pub monoid: Option<String>,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub letters: u64,
    #[arg(long, default_value = "Z", value_parser = parse_coeffs)]
    pub coeffs: Coefficients,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

fn parse_coeffs(s: &str) -> Result<Coefficients, String> {
    match s {
        "Z" => Ok(Coefficients::Integers),
        "Q" => Ok(Coefficients::Rationals),
        _ => {
            let p = s
                .strip_prefix('F')
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| format!("expected Z, Q or F<p>, found `{s}`"))?;
            Coefficients::prime(p).map_err(|e| e.to_string())
        }
    }
}

/// What a command printed and whether its checks held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, ok: true }
    }
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source })
}

fn unknown(kind: &str, name: &str) -> CliError {
    CliError::Usage(format!("no {kind} fixture or file named `{name}`"))
}

fn is_file(s: &str) -> bool {
    Path::new(s).is_file()
}

pub fn load_monoid(s: &str) -> Result<FinMonoid, CliError> {
    if is_file(s) {
        return Ok(parse_monoid(&read(s)?, s)?);
    }
    fixtures::monoid(s).ok_or_else(|| unknown("monoid", s))
}

pub fn load_semigroup(s: &str) -> Result<FinSemigroup, CliError> {
    if is_file(s) {
        return Ok(parse_semigroup(&read(s)?, s)?);
    }
    fixtures::semigroup(s).ok_or_else(|| unknown("semigroup", s))
}

pub fn load_category(s: &str) -> Result<FinCategory, CliError> {
    if is_file(s) {
        return Ok(parse_category(&read(s)?, s)?);
    }
    fixtures::category(s).ok_or_else(|| unknown("category", s))
}

pub fn load_diagram(s: &str, maxdim: usize) -> Result<Diagram, CliError> {
    if is_file(s) {
        return Ok(parse_diagram(&read(s)?, s, maxdim, &fixtures::category)?);
    }
    fixtures::diagram(s, maxdim).ok_or_else(|| unknown("diagram", s))
}

fn field_power(field: &str, n: usize) -> String {
    match n {
        0 => "0".to_string(),
        1 => field.to_string(),
        _ => format!("{field}^{n}"),
    }
}

fn show_group(h: &HomologyResult, coeffs: Coefficients) -> String {
    match coeffs {
        Coefficients::Integers => h.group().to_string(),
        Coefficients::Rationals => field_power("Q", h.betti),
        Coefficients::Prime(p) => field_power(&format!("F{p}"), h.betti),
    }
}

/// Homology in degrees `0..degrees` of `c`, or `c` itself in chain format.
fn report(title: &str, c: &ChainComplex, degrees: usize, coeffs: Coefficients, format: OutputFormat) -> String {
    if format == OutputFormat::Chain {
        return write_chain(c);
    }
    let hs = homology_all(c, coeffs);
    let mut out = String::new();
    if format == OutputFormat::Text {
        writeln!(out, "# {title}, coefficients {coeffs}").unwrap();
    }
    for h in hs.iter().take(degrees) {
        match format {
            OutputFormat::Text => writeln!(out, "H_{} = {}", h.degree, show_group(h, coeffs)).unwrap(),
            _ => {
                let torsion: Vec<String> = h.torsion.iter().map(|d| d.to_string()).collect();
                let torsion = if torsion.is_empty() { "-".to_string() } else { torsion.join(",") };
                writeln!(out, "H {} betti={} torsion={torsion}", h.degree, h.betti).unwrap();
            }
        }
    }
    out
}

fn cmd_homology(a: &HomologyArgs) -> Result<Outcome, CliError> {
    let i = &a.input;
    let letters = a.letters as usize;
    let mismatch = |what: &str, c: Construction| {
        CliError::Usage(format!("--construction {} does not apply to {what}", c.to_possible_value().unwrap().get_name()))
    };
    // (title, complex, number of trustworthy degrees)
    let (title, c, degrees) = if let Some(path) = &i.chain {
        if let Some(c) = a.construction {
            return Err(mismatch("a chain complex", c));
        }
        let c = parse_chain(&read(path)?, path)?;
        let d = c.top_degree() + 1;
        (format!("chain complex {path}"), c, d)
    } else if let Some(name) = &i.monoid {
        let m = load_monoid(name)?;
        match a.construction.unwrap_or(Construction::Nerve) {
            Construction::Nerve => (format!("nerve of {name}, maxdim {}", a.maxdim), nerve(&m, a.maxdim).chains(), a.maxdim),
            Construction::Wbar => {
                let c = wbar_complex(m.as_semigroup(), letters)?;
                let d = c.top_degree() + 1;
                (format!("W̄ of {name}, {letters} letters"), c, d)
            }
            Construction::James => {
                let j = james(&nerve(&m, a.maxdim), letters, a.maxdim)?;
                (format!("J_{letters} of the nerve of {name}, maxdim {}", a.maxdim), j.chains(), a.maxdim)
            }
            Construction::Bar => {
                let c = FinCategory::from_monoid(&m);
                (format!("EM of {name}, maxdim {}", a.maxdim), em_bar(&c, a.maxdim)?.chains(), a.maxdim)
            }
            other => return Err(mismatch("a monoid", other)),
        }
    } else if let Some(name) = &i.semigroup {
        let g = load_semigroup(name)?;
        match a.construction.unwrap_or(Construction::Wbar) {
            Construction::Wbar => {
                let c = wbar_complex(&g, letters)?;
                let d = c.top_degree() + 1;
                (format!("W̄ of {name}, {letters} letters"), c, d)
            }
            Construction::Nerve => (
                format!("nerve of {name}, maxdim {}", a.maxdim),
                semigroup_nerve(&g, a.maxdim).chains(),
                a.maxdim,
            ),
            other => return Err(mismatch("a semigroup", other)),
        }
    } else if let Some(name) = &i.category {
        let c = load_category(name)?;
        match a.construction.unwrap_or(Construction::Nerve) {
            Construction::Nerve => (
                format!("nerve of {name}, maxdim {}", a.maxdim),
                category_nerve(&c, a.maxdim).chains(),
                a.maxdim,
            ),
            Construction::Bar => (format!("EM of {name}, maxdim {}", a.maxdim), em_bar(&c, a.maxdim)?.chains(), a.maxdim),
            other => return Err(mismatch("a category", other)),
        }
    } else if let Some(name) = &i.diagram {
        match a.construction.unwrap_or(Construction::Hocolim) {
            Construction::Hocolim => {
                let d = load_diagram(name, a.maxdim)?;
                (format!("hocolim of {name}, maxdim {}", a.maxdim), hocolim(&d, a.maxdim)?.chains(), a.maxdim)
            }
            other => return Err(mismatch("a diagram", other)),
        }
    } else {
        unreachable!("clap requires one input")
    };
    Ok(Outcome::ok(report(&title, &c, degrees, a.coeffs, a.format)))
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let suite = Suite::from_name(&a.suite).expect("clap restricts suite names");
    let cfg = suites::Config { seed: a.seed, trials: a.trials };
    let checks = suites::run(suite, &cfg);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut out = String::new();
    if a.format == OutputFormat::Text {
        let trials = a.trials.map_or("default".to_string(), |n| n.to_string());
        writeln!(out, "# suite {} seed {} trials {trials}", a.suite, a.seed).unwrap();
    }
    for c in &checks {
        writeln!(out, "{c}").unwrap();
    }
    if a.format == OutputFormat::Text {
        writeln!(out, "# {} passed, {failed} failed", checks.len() - failed).unwrap();
    }
    Ok(Outcome { output: out, ok: failed == 0 })
}

fn cmd_eval(a: &EvalArgs) -> Result<Outcome, CliError> {
    let ground = match (&a.monoid, &a.semigroup) {
        (Some(m), _) => Ground::Monoid(load_monoid(m)?),
        (_, Some(g)) => Ground::Semigroup(load_semigroup(g)?),
        _ => Ground::Free,
    };
    let mode = if a.unital { Mode::Monoid } else { Mode::Semigroup };
    Ok(Outcome::ok(evaluate(&a.expression, &ground, mode)? + "\n"))
}

fn cmd_hocolim(a: &HocolimArgs) -> Result<Outcome, CliError> {
    if let Some(name) = &a.diagram {
        let d = load_diagram(name, a.maxdim)?;
        let h = hocolim(&d, a.maxdim)?;
        return Ok(Outcome::ok(report(&format!("hocolim of {name}, maxdim {}", a.maxdim), &h.chains(), a.maxdim, a.coeffs, a.format)));
    }
    let names = a.groups.as_ref().expect("clap requires one input");
    let (g1, g2) = (load_monoid(&names[0])?, load_monoid(&names[1])?);
    if a.maxdim == 0 {
        return Err(CliError::Usage("--maxdim must be at least 1".into()));
    }
    let maxdeg = a.maxdim - 1;
    let r = hocolim_preservation_check(&g1, &g2, maxdeg)?;
    let mut out = String::new();
    if a.format == OutputFormat::Text {
        writeln!(out, "# reduced homology of hocolim(B{0} <- * -> B{1}) against B{0} + B{1}", names[0], names[1]).unwrap();
    }
    for (n, l, rr) in &r.degrees {
        writeln!(out, "H~_{n} hocolim={l} sum={rr}").unwrap();
    }
    let tag = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(out, "{tag} hocolim/{}+{} degrees<={maxdeg}", names[0], names[1]).unwrap();
    Ok(Outcome { output: out, ok: r.passed() })
}

fn space(name: &str, maxdim: usize) -> Result<SimplicialSet, CliError> {
    let circle = || SimplicialSet::circle(maxdim);
    Ok(match name {
        "s0" => SimplicialSet::s0(maxdim),
        "circle" => circle(),
        "torus" => product(&circle(), &circle())?.with_basepoint(0)?,
        "wedge" => wedge(&circle(), &circle())?,
        _ => match name.strip_prefix("sphere").and_then(|n| n.parse().ok()) {
            Some(n) => SimplicialSet::sphere(n, maxdim),
            None => return Err(CliError::Usage(format!("unknown space `{name}` (s0, circle, sphere<n>, torus, wedge)"))),
        },
    })
}

fn cmd_james(a: &JamesArgs) -> Result<Outcome, CliError> {
    let letters = a.letters as usize;
    let maxdim = a.maxdim.unwrap_or(letters + 1);
    let (name, x) = match &a.monoid {
        Some(m) => (format!("the nerve of {m}"), nerve(&load_monoid(m)?, maxdim)),
        None => (a.space.clone(), space(&a.space, maxdim)?),
    };
    let j = james(&x, letters, maxdim)?;
    let title = format!("J_{letters} of {name}, maxdim {maxdim}");
    let mut out = report(&title, &j.chains(), maxdim, a.coeffs, a.format);
    if a.format == OutputFormat::Chain {
        return Ok(Outcome::ok(out));
    }
    let (lhs, rhs) = james_rational_comparison(&x, letters, maxdim)?;
    for (n, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
        writeln!(out, "rank_Q {n}: james={l} smash-powers={r}").unwrap();
    }
    let ok = lhs == rhs;
    writeln!(out, "{} james/{name}/L{letters}", if ok { "PASS" } else { "FAIL" }).unwrap();
    Ok(Outcome { output: out, ok })
}

fn cmd_wbar(a: &WbarArgs) -> Result<Outcome, CliError> {
    let letters = a.letters as usize;
    let (name, g) = match (&a.semigroup, &a.monoid) {
        (Some(s), _) => (s.clone(), load_semigroup(s)?),
        (_, Some(m)) => (m.clone(), load_monoid(m)?.as_semigroup().clone()),
        _ => unreachable!("clap requires one input"),
    };
    let c = wbar_complex(&g, letters)?;
    let title = format!("W̄ of {name}, {letters} letters");
    if a.format == OutputFormat::Chain {
        return Ok(Outcome::ok(write_chain(&c)));
    }
    let mut out = String::new();
    let cells = block_cells(&g, letters)?;
    let counts: Vec<String> = cells.iter().map(|d| d.len().to_string()).collect();
    writeln!(out, "cells {}", counts.join(" ")).unwrap();
    out += &report(&title, &c, c.top_degree() + 1, a.coeffs, a.format);
    let classes = wbar_components(&g, letters)?;
    let ok = components_match_products(&g, &classes);
    writeln!(out, "components {}", classes.len()).unwrap();
    writeln!(out, "{} w-components/{name} fibers of the product map", if ok { "PASS" } else { "FAIL" }).unwrap();
    Ok(Outcome { output: out, ok })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Homology(a) => cmd_homology(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Hocolim(a) => cmd_hocolim(a),
        Command::James(a) => cmd_james(a),
        Command::Wbar(a) => cmd_wbar(a),
    }
}
