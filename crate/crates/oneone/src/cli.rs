//! Command-line front end: argument parsing, report building, and text /
//! JSON rendering. Kept in the library so the integration tests can drive
//! it without spawning a process.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{torus_alexander, torus_word_formula, BSign, TorusParams};
use crate::covering::{covering_monodromies, cyclic_word, Monodromy};
use crate::intlinalg::AbelianGroup;
use crate::knot::{analyze, complement_homology, OneOneKnot};
use crate::mcg::MCGWord;
use crate::words::{render_pi1, WordError};

/// Exit code for parse and domain errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit code for the mathematical outcome "no covering exists".
pub const EXIT_NO_COVERING: i32 = 3;

/// Parses a twist word in the CLI grammar; adjacent equal letters merge.
pub fn parse_mcg(text: &str) -> Result<MCGWord, WordError> {
    MCGWord::parse(text)
}

#[derive(Parser, Debug)]
#[command(
    name = "oneone",
    about = "Invariants of (1,1)-knots and their strongly-cyclic branched coverings",
    long_about = "Input words use the letters a, b, g for the three twist \
                  generators, with optional ^<int> exponents, e.g. \"a^-2 g^-2 a^-2\"."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CoverOpts {
    /// Sheet count of the covering.
    #[arg(long)]
    pub n: i64,
    /// Select a single monodromy by its value of omega_f(alpha) in [0, n).
    #[arg(long, conflicts_with = "all_monodromies")]
    pub monodromy: Option<i64>,
    /// Report every monodromy (the default when --monodromy is absent).
    #[arg(long)]
    pub all_monodromies: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Knot invariants: ambient lens space, relator, homology of the complement.
    Analyze { word: String },
    /// Existence and monodromies of the n-fold strongly-cyclic coverings.
    Cover {
        word: String,
        #[arg(long)]
        n: i64,
    },
    /// Cyclic presentation G_n(w) of the covering fundamental group.
    Present {
        word: String,
        #[command(flatten)]
        opts: CoverOpts,
    },
    /// First homology of the complement, or of the coverings when --n is given.
    Homology {
        word: String,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        monodromy: Option<i64>,
    },
    /// Polynomial f_w associated to the covering presentation.
    Poly {
        word: String,
        #[command(flatten)]
        opts: CoverOpts,
    },
    /// Closed-form data for the torus knot t(k, hk+1) or t(k, hk-1).
    Torus {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        h: i64,
        /// "plus" for t(k, hk+1), "minus" for t(k, hk-1).
        #[arg(long)]
        sign: String,
        /// Also emit the closed-form cyclic word for this sheet count.
        #[arg(long)]
        n: Option<i64>,
    },
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct H1Report {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl From<&AbelianGroup> for H1Report {
    fn from(g: &AbelianGroup) -> Self {
        H1Report {
            rank: g.rank,
            torsion: g
                .torsion
                .iter()
                .map(|t| i64::try_from(t).expect("torsion coefficient fits in i64"))
                .collect(),
        }
    }
}

impl H1Report {
    pub fn display(&self) -> String {
        let mut parts: Vec<String> = (0..self.rank).map(|_| "Z".to_string()).collect();
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct MonodromyReport {
    pub x: i64,
    pub word: String,
    pub f_w: Vec<i64>,
    pub h1: H1Report,
}

#[derive(Serialize, Debug, Clone)]
pub struct CoveringReport {
    pub n: i64,
    pub exists: bool,
    pub monodromies: Vec<MonodromyReport>,
}

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub schema: u32,
    pub input: String,
    pub p: i64,
    pub q_raw: i64,
    pub q_normalized: Option<i64>,
    pub ambient: String,
    pub psi_beta: String,
    pub relator: String,
    pub h1_complement: H1Report,
    pub coverings: Vec<CoveringReport>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

fn monodromy_report(k: &OneOneKnot, m: Monodromy) -> Result<MonodromyReport, CliError> {
    let w = cyclic_word(k, m).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(MonodromyReport {
        x: m.x,
        word: w.to_string(),
        f_w: w.polynomial().coeffs.clone(),
        h1: H1Report::from(&w.abelianization()),
    })
}

/// Builds the full report for a knot, with covering data for each requested
/// sheet count.
pub fn build_report(input: &str, ns: &[i64]) -> Result<Report, CliError> {
    let psi = parse_mcg(input).map_err(|e| CliError::Usage(e.to_string()))?;
    let k = analyze(&psi);
    let mut coverings = Vec::new();
    for &n in ns {
        let ms = covering_monodromies(&k, n).map_err(|e| CliError::Usage(e.to_string()))?;
        let monodromies = ms
            .iter()
            .map(|&m| monodromy_report(&k, m))
            .collect::<Result<Vec<_>, _>>()?;
        coverings.push(CoveringReport { n, exists: !monodromies.is_empty(), monodromies });
    }
    Ok(Report {
        schema: 1,
        input: input.to_string(),
        p: k.p,
        q_raw: k.lens_q_raw(),
        q_normalized: k.lens_q_normalized(),
        ambient: k.ambient(),
        psi_beta: render_pi1(&k.psi_beta),
        relator: render_pi1(&k.relator),
        h1_complement: H1Report::from(&complement_homology(&k)),
        coverings,
    })
}

fn select_monodromies<'a>(
    rep: &'a CoveringReport,
    pick: Option<i64>,
) -> Result<Vec<&'a MonodromyReport>, CliError> {
    match pick {
        None => Ok(rep.monodromies.iter().collect()),
        Some(x) => rep
            .monodromies
            .iter()
            .filter(|m| m.x == x)
            .map(Ok)
            .collect::<Result<Vec<_>, _>>()
            .and_then(|v: Vec<&MonodromyReport>| {
                if v.is_empty() {
                    Err(CliError::Usage(format!(
                        "monodromy {x} is not valid for this knot and n = {}",
                        rep.n
                    )))
                } else {
                    Ok(v)
                }
            }),
    }
}

/// Runs one parsed command. Returns the rendered output and the exit code.
pub fn run(cli: Cli, json: bool) -> (String, i32) {
    match run_inner(cli, json) {
        Ok((out, code)) => (out, code),
        Err(CliError::Usage(msg)) => (format!("error: {msg}"), EXIT_USAGE),
    }
}

fn run_inner(cli: Cli, json: bool) -> Result<(String, i32), CliError> {
    match cli.command {
        Command::Analyze { word } => {
            let rep = build_report(&word, &[])?;
            Ok((render(&rep, json, |r| text_analyze(r)), 0))
        }
        Command::Cover { word, n } => {
            let rep = build_report(&word, &[n])?;
            let cov = &rep.coverings[0];
            let code = if cov.exists { 0 } else { EXIT_NO_COVERING };
            let out = render(&rep, json, |r| text_cover(r));
            Ok((out, code))
        }
        Command::Present { word, opts } | Command::Poly { word, opts } => {
            let rep = build_report(&word, &[opts.n])?;
            let cov = &rep.coverings[0];
            if !cov.exists {
                let out = render(&rep, json, |r| text_cover(r));
                return Ok((out, EXIT_NO_COVERING));
            }
            let picked = select_monodromies(cov, opts.monodromy)?;
            let mut lines = vec![format!(
                "{} in {}: n = {}",
                rep.input, rep.ambient, cov.n
            )];
            for m in picked {
                lines.push(format!(
                    "  x = {}: w = {}   f_w = {}   H1 = {}",
                    m.x,
                    m.word,
                    crate::cyclicpres::IntPoly::new(m.f_w.clone()).render(),
                    m.h1.display()
                ));
            }
            Ok((render(&rep, json, |_| lines.join("\n")), 0))
        }
        Command::Homology { word, n, monodromy } => {
            let ns: Vec<i64> = n.into_iter().collect();
            let rep = build_report(&word, &ns)?;
            if rep.coverings.is_empty() {
                let out = render(&rep, json, |r| {
                    format!("H1({} complement) = {}", r.ambient, r.h1_complement.display())
                });
                return Ok((out, 0));
            }
            let cov = &rep.coverings[0];
            if !cov.exists {
                let out = render(&rep, json, |r| text_cover(r));
                return Ok((out, EXIT_NO_COVERING));
            }
            let picked = select_monodromies(cov, monodromy)?;
            let mut lines = Vec::new();
            for m in picked {
                lines.push(format!("  x = {}: H1 = {}", m.x, m.h1.display()));
            }
            let out = render(&rep, json, |_| {
                format!("H1 of the {}-fold coverings:\n{}", cov.n, lines.join("\n"))
            });
            Ok((out, 0))
        }
        Command::Torus { k, h, sign, n } => {
            let sign = match sign.as_str() {
                "plus" | "+" => BSign::Plus,
                "minus" | "-" => BSign::Minus,
                other => {
                    return Err(CliError::Usage(format!(
                        "sign must be plus or minus, got {other}"
                    )))
                }
            };
            let tp = TorusParams::new(k, h, sign).map_err(|e| CliError::Usage(e.to_string()))?;
            let psi = tp.mcg_word();
            let b = tp.b();
            let mut rep = build_report(&psi.to_string(), &n.into_iter().collect::<Vec<_>>())?;
            rep.input = format!("t({k},{b})");
            let mut lines = vec![format!("t({k},{b}): psi = {psi}, ambient {}", rep.ambient)];
            if b >= 2 {
                let delta = torus_alexander(k, b).map_err(|e| CliError::Usage(e.to_string()))?;
                lines.push(format!("  Alexander polynomial: {}", delta.render()));
            }
            if let Some(nn) = n {
                let w = torus_word_formula(tp, nn).map_err(|e| CliError::Usage(e.to_string()))?;
                lines.push(format!("  closed-form word (n = {nn}): {w}"));
            }
            Ok((render(&rep, json, |_| lines.join("\n")), 0))
        }
    }
}

fn render(rep: &Report, json: bool, text: impl Fn(&Report) -> String) -> String {
    if json {
        serde_json::to_string_pretty(rep).expect("report serializes")
    } else {
        text(rep)
    }
}

fn text_analyze(r: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("input: {}\n", r.input));
    out.push_str(&format!("psi(beta) = {}\n", r.psi_beta));
    out.push_str(&format!("relator r = {}\n", r.relator));
    out.push_str(&format!(
        "p = {}, q' + q'' = {}{}\n",
        r.p,
        r.q_raw,
        r.q_normalized
            .map(|q| format!(" (= {q} mod {})", r.p.abs()))
            .unwrap_or_default()
    ));
    out.push_str(&format!("ambient: {}\n", r.ambient));
    out.push_str(&format!("H1(complement) = {}", r.h1_complement.display()));
    out
}

fn text_cover(r: &Report) -> String {
    let cov = &r.coverings[0];
    if !cov.exists {
        return format!(
            "no strongly-cyclic {}-fold covering of {} exists",
            cov.n, r.input
        );
    }
    let xs: Vec<String> = cov.monodromies.iter().map(|m| m.x.to_string()).collect();
    format!(
        "{} strongly-cyclic {}-fold covering(s): omega_f(alpha) in {{{}}}",
        cov.monodromies.len(),
        cov.n,
        xs.join(", ")
    )
}

/// Parses the raw argument list (including the `--json` flag, which may
/// appear anywhere) and runs the command.
pub fn run_args<I, S>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let json = argv.iter().any(|a| a == "--json");
    argv.retain(|a| a != "--json");
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(cli, json),
        Err(e) => (e.to_string(), EXIT_USAGE),
    }
}
