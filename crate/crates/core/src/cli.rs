//! Command-line front end: `analyze`, `enumerate`, `verify` and `walks`.
//!
//! Exit codes: 0 on success whatever the verdict, 1 on input or usage
//! errors, 2 when the two deciders disagree. Lists are comma-separated,
//! indices 1-based.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::cartier::{is_untwisted_with_limit, CartierWitness};
use crate::dynkin::DynkinDiagram;
use crate::error::{Error, Result};
use crate::twistcube::{ell_from_weight, mult_from_weight, LatticeSummary, TwistParams};
use crate::verify::{exhaustive_sweep, SweepSummary};
use crate::walks::{
    find_hesitant_jumping_ell_subword, find_hesitant_lambda_subword, is_diagram_walk,
    is_hesitant_jumping_ell_walk, is_hesitant_jumping_walk, is_jumping_walk, join, parse_list,
    Word,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "twistcube",
    version,
    about = "Untwistedness of Grossberg-Karshon twisted cubes in types A, D, E"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print c, ell and both untwistedness verdicts with witnesses.
    Analyze(ParamArgs),
    /// List the signed lattice points of the twisted cube.
    Enumerate(ParamArgs),
    /// Sweep all words and ell-vectors up to a size and compare the deciders.
    Verify(VerifyArgs),
    /// Evaluate the walk predicates on a word.
    Walks(WalkArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// Root system, e.g. A3, D4, E6.
    #[arg(long)]
    diagram: Option<String>,
    /// Word i_1,...,i_n of diagram nodes.
    #[arg(long)]
    word: Option<String>,
    /// ell_1,...,ell_n given directly.
    #[arg(long, allow_hyphen_values = true)]
    ell: Option<String>,
    /// Multiplicities m_1,...,m_n; ell is derived from the word.
    #[arg(long)]
    mult: Option<String>,
    /// Dominant weight coefficients lambda_1,...,lambda_r.
    #[arg(long)]
    lambda: Option<String>,
    /// Raw c matrix: full n x n rows separated by `;`, entries by `,`.
    /// Only entries above the diagonal are read. Requires --ell and no --diagram.
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Scan 2^n sign vectors even when n exceeds the default limit.
    #[arg(long)]
    allow_large_n: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    diagram: String,
    #[arg(long)]
    max_len: usize,
    #[arg(long)]
    ell_bound: u32,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Args)]
struct WalkArgs {
    #[arg(long)]
    diagram: String,
    #[arg(long)]
    word: String,
    #[arg(long, allow_hyphen_values = true)]
    ell: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

/// Where `ell` comes from in word mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EllSource {
    Ell(Vec<u32>),
    Mult(Vec<u32>),
    Lambda(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamSource {
    Word {
        diagram: DynkinDiagram,
        word: Word,
        ell: EllSource,
    },
    Raw {
        c: Vec<Vec<i64>>,
        ell: Vec<u32>,
    },
}

/// A validated `analyze`/`enumerate` request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisRequest {
    pub source: ParamSource,
    pub format: Format,
    pub allow_large_n: bool,
}

/// Parses the `--c` flag: `"0,1;0,0"`.
pub fn parse_c_matrix(s: &str) -> Result<Vec<Vec<i64>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(parse_list).collect()
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    parse_list(s)
}

impl AnalysisRequest {
    fn from_args(a: &ParamArgs) -> Result<Self> {
        let usage = |m: &str| Error::Parse(m.to_string());
        let source = if let Some(c) = &a.c {
            if a.diagram.is_some() || a.word.is_some() || a.mult.is_some() || a.lambda.is_some() {
                return Err(usage(
                    "--c (raw mode) cannot be combined with --diagram/--word/--mult/--lambda",
                ));
            }
            let ell = a
                .ell
                .as_deref()
                .ok_or_else(|| usage("--c requires --ell"))?;
            ParamSource::Raw {
                c: parse_c_matrix(c)?,
                ell: parse_u32_list(ell)?,
            }
        } else {
            let diagram: DynkinDiagram = a
                .diagram
                .as_deref()
                .ok_or_else(|| usage("--diagram is required (or use --c for raw parameters)"))?
                .parse()?;
            let word: Word = a
                .word
                .as_deref()
                .ok_or_else(|| usage("--word is required"))?
                .parse()?;
            let sources = [&a.ell, &a.mult, &a.lambda];
            if sources.iter().filter(|s| s.is_some()).count() != 1 {
                return Err(usage("give exactly one of --ell, --mult, --lambda"));
            }
            let ell = match (&a.ell, &a.mult, &a.lambda) {
                (Some(s), _, _) => EllSource::Ell(parse_u32_list(s)?),
                (_, Some(s), _) => EllSource::Mult(parse_u32_list(s)?),
                (_, _, Some(s)) => EllSource::Lambda(parse_u32_list(s)?),
                _ => unreachable!(),
            };
            ParamSource::Word { diagram, word, ell }
        };
        Ok(Self {
            source,
            format: a.format,
            allow_large_n: a.allow_large_n,
        })
    }

    pub fn params(&self) -> Result<TwistParams> {
        match &self.source {
            ParamSource::Raw { c, ell } => TwistParams::new(c.clone(), ell.clone()),
            ParamSource::Word { diagram, word, ell } => match ell {
                EllSource::Ell(e) => TwistParams::from_word_and_ell(diagram, word, e),
                EllSource::Mult(m) => TwistParams::from_word(diagram, word, m),
                EllSource::Lambda(l) => {
                    let m = mult_from_weight(diagram, word, l)?;
                    TwistParams::from_word(diagram, word, &m)
                }
            },
        }
    }
}

/// Output of `analyze`. Cross-check fields are present only in word mode;
/// `lambda_*` only when `--lambda` was given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagram: Option<DynkinDiagram>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Word>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<u32>>,
    pub c: Vec<Vec<i64>>,
    pub ell: Vec<u32>,
    pub untwisted: bool,
    pub witness: Option<CartierWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub avoiding: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub avoidance_witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_avoiding: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

pub fn analyze(req: &AnalysisRequest) -> Result<AnalysisReport> {
    let p = req.params()?;
    let verdict = is_untwisted_with_limit(&p, req.allow_large_n)?;
    let mut report = AnalysisReport {
        diagram: None,
        word: None,
        mult: None,
        lambda: None,
        c: p.c_matrix().to_vec(),
        ell: p.ell().to_vec(),
        untwisted: verdict.untwisted,
        witness: verdict.witness,
        avoiding: None,
        avoidance_witness: None,
        lambda_avoiding: None,
        lambda_witness: None,
        agree: None,
    };
    if let ParamSource::Word { diagram, word, ell } = &req.source {
        let hit = find_hesitant_jumping_ell_subword(diagram, word, p.ell())?;
        let avoiding = hit.is_none();
        let mut agree = avoiding == verdict.untwisted;
        match ell {
            EllSource::Mult(m) => report.mult = Some(m.clone()),
            EllSource::Lambda(l) => {
                report.mult = Some(mult_from_weight(diagram, word, l)?);
                let lam_hit = find_hesitant_lambda_subword(diagram, word, l)?;
                agree &= lam_hit.is_none() == avoiding;
                // ell derived through the multiplicities must equal lambda_{i_j}.
                agree &= ell_from_weight(diagram, word, l)? == p.ell();
                report.lambda = Some(l.clone());
                report.lambda_avoiding = Some(lam_hit.is_none());
                report.lambda_witness = lam_hit.map(|h| h.indices);
            }
            EllSource::Ell(_) => {}
        }
        report.diagram = Some(diagram.clone());
        report.word = Some(word.clone());
        report.avoiding = Some(avoiding);
        report.avoidance_witness = hit.map(|h| h.indices);
        report.agree = Some(agree);
    }
    Ok(report)
}

fn write_analysis(out: &mut dyn Write, r: &AnalysisReport) -> std::io::Result<()> {
    if let (Some(d), Some(w)) = (&r.diagram, &r.word) {
        writeln!(out, "diagram: {d}")?;
        writeln!(out, "word: ({w})")?;
    }
    if let Some(m) = &r.mult {
        writeln!(out, "mult: ({})", join(m))?;
    }
    if let Some(l) = &r.lambda {
        writeln!(out, "lambda: ({})", join(l))?;
    }
    writeln!(out, "c:")?;
    for row in &r.c {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        writeln!(out, "  {}", cells.join(" "))?;
    }
    writeln!(out, "ell: ({})", join(&r.ell))?;
    match &r.witness {
        None => writeln!(out, "untwisted: true")?,
        Some(w) => writeln!(
            out,
            "untwisted: false (sigma={}, j={}, m=({}))",
            w.sigma,
            w.j,
            join(&w.m)
        )?,
    }
    if let Some(avoiding) = r.avoiding {
        match &r.avoidance_witness {
            Some(idx) => writeln!(out, "avoiding: {avoiding} (witness [{}])", join(idx))?,
            None => writeln!(out, "avoiding: {avoiding}")?,
        }
    }
    if let Some(la) = r.lambda_avoiding {
        match &r.lambda_witness {
            Some(idx) => writeln!(out, "lambda-avoiding: {la} (witness [{}])", join(idx))?,
            None => writeln!(out, "lambda-avoiding: {la}")?,
        }
    }
    if let Some(agree) = r.agree {
        writeln!(out, "agree: {agree}")?;
    }
    Ok(())
}

/// Output of `walks`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkReport {
    pub diagram: DynkinDiagram,
    pub word: Word,
    pub jumping_walk: bool,
    pub hesitant_jumping_walk: bool,
    pub diagram_walk: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hesitant_jumping_ell_walk: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell_avoiding: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell_witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_avoiding: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_witness: Option<Vec<usize>>,
}

pub fn walk_report(
    d: &DynkinDiagram,
    word: &Word,
    ell: Option<&[u32]>,
    lambda: Option<&[u32]>,
) -> Result<WalkReport> {
    let mut r = WalkReport {
        diagram: d.clone(),
        word: word.clone(),
        jumping_walk: is_jumping_walk(d, word)?,
        hesitant_jumping_walk: is_hesitant_jumping_walk(d, word)?,
        diagram_walk: is_diagram_walk(d, word)?,
        hesitant_jumping_ell_walk: None,
        ell_avoiding: None,
        ell_witness: None,
        lambda_avoiding: None,
        lambda_witness: None,
    };
    if let Some(ell) = ell {
        r.hesitant_jumping_ell_walk = Some(is_hesitant_jumping_ell_walk(d, word, ell)?);
        let hit = find_hesitant_jumping_ell_subword(d, word, ell)?;
        r.ell_avoiding = Some(hit.is_none());
        r.ell_witness = hit.map(|h| h.indices);
    }
    if let Some(lambda) = lambda {
        let hit = find_hesitant_lambda_subword(d, word, lambda)?;
        r.lambda_avoiding = Some(hit.is_none());
        r.lambda_witness = hit.map(|h| h.indices);
    }
    Ok(r)
}

fn write_walks(out: &mut dyn Write, r: &WalkReport) -> std::io::Result<()> {
    writeln!(out, "diagram: {}", r.diagram)?;
    writeln!(out, "word: ({})", r.word)?;
    writeln!(out, "jumping walk: {}", r.jumping_walk)?;
    writeln!(out, "hesitant jumping walk: {}", r.hesitant_jumping_walk)?;
    writeln!(out, "diagram walk: {}", r.diagram_walk)?;
    if let Some(v) = r.hesitant_jumping_ell_walk {
        writeln!(out, "hesitant jumping ell-walk: {v}")?;
    }
    if let Some(v) = r.ell_avoiding {
        match &r.ell_witness {
            Some(idx) => writeln!(out, "ell-walk avoiding: {v} (witness [{}])", join(idx))?,
            None => writeln!(out, "ell-walk avoiding: {v}")?,
        }
    }
    if let Some(v) = r.lambda_avoiding {
        match &r.lambda_witness {
            Some(idx) => writeln!(out, "lambda-walk avoiding: {v} (witness [{}])", join(idx))?,
            None => writeln!(out, "lambda-walk avoiding: {v}")?,
        }
    }
    Ok(())
}

fn write_lattice(out: &mut dyn Write, s: &LatticeSummary) -> std::io::Result<()> {
    writeln!(out, "{:<24} sign", "x")?;
    for p in &s.points {
        writeln!(out, "{:<24} {:+}", format!("({})", join(&p.x)), p.sign)?;
    }
    writeln!(out, "points: {}", s.points.len())?;
    writeln!(out, "positive: {}", s.positive)?;
    writeln!(out, "negative: {}", s.negative)?;
    writeln!(out, "signed_count: {}", s.signed_count)
}

fn write_sweep(out: &mut dyn Write, d: &DynkinDiagram, s: &SweepSummary) -> std::io::Result<()> {
    writeln!(out, "diagram: {d}")?;
    writeln!(out, "instances: {}", s.instances)?;
    writeln!(out, "disagreements: {}", s.disagreements)?;
    writeln!(
        out,
        "untwisted: {} ({:.4})",
        s.untwisted,
        s.untwisted_fraction()
    )?;
    writeln!(out, "elapsed_ms: {}", s.elapsed_ms)?;
    if let Some(cx) = &s.counterexample {
        writeln!(
            out,
            "counterexample: {}",
            serde_json::to_string(cx).expect("report serializes")
        )?;
    }
    Ok(())
}

fn json_line<T: Serialize>(out: &mut dyn Write, v: &T) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("report serializes")
    )
}

enum Failure {
    Input(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match command {
        Command::Analyze(a) => {
            let req = AnalysisRequest::from_args(&a)?;
            let r = analyze(&req)?;
            match req.format {
                Format::Json => json_line(out, &r)?,
                Format::Text => write_analysis(out, &r)?,
            }
            Ok(if r.agree == Some(false) {
                EXIT_DISAGREEMENT
            } else {
                EXIT_OK
            })
        }
        Command::Enumerate(a) => {
            let req = AnalysisRequest::from_args(&a)?;
            let s = LatticeSummary::of(&req.params()?);
            match req.format {
                Format::Json => json_line(out, &s)?,
                Format::Text => write_lattice(out, &s)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify(v) => {
            let d: DynkinDiagram = v.diagram.parse()?;
            let s = exhaustive_sweep(&d, v.max_len, v.ell_bound)?;
            match v.format {
                Format::Json => json_line(out, &s)?,
                Format::Text => write_sweep(out, &d, &s)?,
            }
            Ok(if s.disagreements > 0 {
                EXIT_DISAGREEMENT
            } else {
                EXIT_OK
            })
        }
        Command::Walks(w) => {
            let d: DynkinDiagram = w.diagram.parse()?;
            let word: Word = w.word.parse()?;
            let ell = w.ell.as_deref().map(parse_u32_list).transpose()?;
            let lambda = w.lambda.as_deref().map(parse_u32_list).transpose()?;
            let r = walk_report(&d, &word, ell.as_deref(), lambda.as_deref())?;
            match w.format {
                Format::Json => json_line(out, &r)?,
                Format::Text => write_walks(out, &r)?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
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
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
