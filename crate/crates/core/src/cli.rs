//! Command-line surface: the descriptor file format, JSON reports and the
//! `lspace` subcommands.
//!
//! Descriptor files are TOML:
//!
//! ```toml
//! name = "trefoil"
//! torsion_invariant_factors = []
//! tau_numerator = [
//!   [1, 0, []],
//!   [-1, 1, []],
//!   [1, 2, []],
//! ]
//! tau_denom_power = 1
//!
//! [i_mu]
//! free = 1
//! torsion = []
//!
//! [i_lambda]
//! free = 0
//! torsion = []
//! ```
//!
//! Each numerator term is `[coefficient, free exponent, torsion vector]`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{self, FamilyRecord, TtkParams};
use crate::foxcalc::{self, AlexanderData};
use crate::groupring::{GroupRingElt, NovikovElement};
use crate::homology::{BoundaryData, FiniteAbelianGroup, H1Element};
use crate::slopes::{self, GluingMap, Slope, SlopeInterval};
use crate::torsion::{Certificate, DMode, DWitness, PipelineReport, TorsionDescriptor, Verdict};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Descriptor(#[from] DescriptorError),
    #[error("{0}")]
    Fox(#[from] foxcalc::FoxError),
    #[error("{0}")]
    Slope(#[from] slopes::SlopeError),
    #[error("{0}")]
    Torsion(#[from] crate::torsion::TorsionError),
    #[error("{0}")]
    Family(#[from] families::FamilyError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DescriptorError {
    #[error("{line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
}

fn invalid(field: &str, message: impl ToString) -> DescriptorError {
    DescriptorError::Invalid { field: field.into(), message: message.to_string() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementEntry {
    pub free: i64,
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorFile {
    pub name: String,
    pub torsion_invariant_factors: Vec<i64>,
    pub i_mu: ElementEntry,
    pub i_lambda: ElementEntry,
    pub tau_numerator: Vec<(i64, i64, Vec<i64>)>,
    pub tau_denom_power: u32,
}

impl DescriptorFile {
    pub fn parse(text: &str) -> Result<Self, DescriptorError> {
        toml::from_str(text).map_err(|e| {
            let (line, col) = e.span().map(|s| line_col(text, s.start)).unwrap_or((1, 1));
            DescriptorError::Syntax { line, col, message: e.message().trim().to_string() }
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = read(path)?;
        Ok(Self::parse(&text)?)
    }

    pub fn group(&self) -> Result<FiniteAbelianGroup, DescriptorError> {
        FiniteAbelianGroup::new(self.torsion_invariant_factors.clone()).map_err(|e| invalid("torsion_invariant_factors", e))
    }

    /// Reduces torsion vectors, merges equal terms, drops zeros and sorts.
    pub fn canonicalize(&self) -> Result<Self, DescriptorError> {
        let group = self.group()?;
        let n = group.factors().len();
        let reduce = |field: &str, v: &[i64]| {
            if v.len() != n {
                return Err(invalid(field, format!("torsion vector has length {}, expected {n}", v.len())));
            }
            Ok(group.reduce(v))
        };
        let mut terms: BTreeMap<(i64, Vec<i64>), i64> = BTreeMap::new();
        for (c, f, t) in &self.tau_numerator {
            *terms.entry((*f, reduce("tau_numerator", t)?)).or_insert(0) += c;
        }
        Ok(DescriptorFile {
            name: self.name.clone(),
            torsion_invariant_factors: self.torsion_invariant_factors.clone(),
            i_mu: ElementEntry { free: self.i_mu.free, torsion: reduce("i_mu", &self.i_mu.torsion)? },
            i_lambda: ElementEntry { free: self.i_lambda.free, torsion: reduce("i_lambda", &self.i_lambda.torsion)? },
            tau_numerator: terms.into_iter().filter(|(_, c)| *c != 0).map(|((f, t), c)| (c, f, t)).collect(),
            tau_denom_power: self.tau_denom_power,
        })
    }

    /// Canonical text; `parse` of it gives back the canonical file.
    pub fn to_text(&self) -> String {
        let list = |v: &[i64]| format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
        let mut s = String::new();
        writeln!(s, "name = {}", toml::Value::String(self.name.clone())).unwrap();
        writeln!(s, "torsion_invariant_factors = {}", list(&self.torsion_invariant_factors)).unwrap();
        if self.tau_numerator.is_empty() {
            writeln!(s, "tau_numerator = []").unwrap();
        } else {
            writeln!(s, "tau_numerator = [").unwrap();
            for (c, f, t) in &self.tau_numerator {
                writeln!(s, "  [{c}, {f}, {}],", list(t)).unwrap();
            }
            writeln!(s, "]").unwrap();
        }
        writeln!(s, "tau_denom_power = {}", self.tau_denom_power).unwrap();
        for (key, e) in [("i_mu", &self.i_mu), ("i_lambda", &self.i_lambda)] {
            write!(s, "\n[{key}]\nfree = {}\ntorsion = {}\n", e.free, list(&e.torsion)).unwrap();
        }
        s
    }

    pub fn to_descriptor(&self) -> Result<TorsionDescriptor, DescriptorError> {
        let c = self.canonicalize()?;
        let group = c.group()?;
        let elt = |e: &ElementEntry| H1Element::new(e.free, e.torsion.clone());
        let boundary = BoundaryData::new(group.clone(), elt(&c.i_mu), elt(&c.i_lambda)).map_err(|e| invalid("i_mu/i_lambda", e))?;
        let num = GroupRingElt::from_terms(&group, c.tau_numerator.iter().map(|(k, f, t)| (H1Element::new(*f, t.clone()), *k)));
        if num.is_zero() {
            return Err(invalid("tau_numerator", "torsion must be nonzero"));
        }
        let tau = NovikovElement::new(num, c.tau_denom_power).map_err(|e| invalid("tau_denom_power", e))?;
        TorsionDescriptor::new(boundary, tau).map_err(|e| invalid("tau_numerator", e))
    }

    /// The normalised torsion of `d` as a canonical file.
    pub fn from_descriptor(name: &str, d: &TorsionDescriptor) -> Self {
        let b = d.boundary();
        let entry = |h: &H1Element| ElementEntry { free: h.free, torsion: h.tors.clone() };
        DescriptorFile {
            name: name.into(),
            torsion_invariant_factors: b.group().factors().to_vec(),
            i_mu: entry(b.i_mu()),
            i_lambda: entry(b.i_lambda()),
            tau_numerator: d.tau().numerator().terms().into_iter().map(|(h, c)| (c, h.free, h.tors)).collect(),
            tau_denom_power: d.tau().denom_power(),
        }
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// `4 (numerator degree + g)`, never below the stabilisation point.
pub fn default_window(d: &TorsionDescriptor) -> i64 {
    let num = d.tau().numerator();
    let deg = match (num.min_degree(), num.max_degree()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => 0,
    };
    (4 * (deg + d.g_y())).max(d.stable_from())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DsetReport {
    pub name: String,
    pub mode: DMode,
    /// "empty" or "nonempty"
    pub verdict: String,
    pub window: Window,
    pub period: i64,
    pub stable_from: i64,
    pub elements: Vec<H1Element>,
    /// torsion parts present at every multiple of `period` from `stable_from` on
    pub stable_torsion: Vec<Vec<i64>>,
    pub certificate: Option<DWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GstReport {
    pub name: String,
    pub verdict: Verdict,
    pub window: Window,
    pub period: i64,
    pub certificate: Certificate,
    pub pipeline: PipelineReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalReport {
    pub name: String,
    pub known: Slope,
    pub window: Window,
    pub verdict: SlopeInterval,
    pub endpoints: Option<(Slope, Slope)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpliceReport {
    pub names: (String, String),
    pub matrix: [[i64; 2]; 2],
    pub intervals: (SlopeInterval, SlopeInterval),
    pub verdict: bool,
    /// a slope of the second piece covered by neither interior
    pub certificate: Option<Slope>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub records: Vec<FamilyRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoxReport {
    pub presentation: String,
    pub rank: usize,
    pub torsion: Vec<i64>,
    pub alexander: Option<AlexanderData>,
    pub descriptor: Option<DescriptorFile>,
    /// why no descriptor could be built
    pub descriptor_error: Option<String>,
    pub verdict: Option<Verdict>,
    pub certificate: Option<Certificate>,
}

fn interval_endpoints(i: &SlopeInterval) -> Option<(Slope, Slope)> {
    match *i {
        SlopeInterval::Arc { start, end, .. } => Some((start, end)),
        SlopeInterval::Point(x) => Some((x, x)),
        _ => None,
    }
}

pub fn dset_report(name: &str, d: &TorsionDescriptor, mode: DMode, hi: i64) -> DsetReport {
    let ds = d.dset(hi, mode);
    DsetReport {
        name: name.into(),
        mode,
        verdict: if ds.is_empty() { "empty" } else { "nonempty" }.into(),
        window: Window { lo: 0, hi },
        period: ds.g,
        stable_from: ds.stable_from,
        elements: ds.elements.clone(),
        stable_torsion: ds.stable.clone(),
        certificate: ds.witness.clone(),
    }
}

pub fn gst_report(name: &str, d: &TorsionDescriptor, hi: i64) -> Result<GstReport, CliError> {
    let pipeline = d.gst_pipeline(hi)?;
    Ok(GstReport {
        name: name.into(),
        verdict: pipeline.verdict,
        window: Window { lo: 0, hi },
        period: d.g_y(),
        certificate: pipeline.certificate.clone(),
        pipeline,
    })
}

pub fn interval_report(name: &str, d: &TorsionDescriptor, known: Slope, hi: i64) -> Result<IntervalReport, CliError> {
    let verdict = slopes::lspace_interval(d, &known, hi)?;
    Ok(IntervalReport { name: name.into(), known, window: Window { lo: 0, hi }, verdict, endpoints: interval_endpoints(&verdict) })
}

pub fn splice_report(names: (String, String), intervals: (SlopeInterval, SlopeInterval), m: &GluingMap) -> SpliceReport {
    SpliceReport {
        names,
        matrix: m.matrix(),
        intervals,
        verdict: slopes::splice_is_lspace(&intervals.0, &intervals.1, m),
        certificate: slopes::splice_obstruction(&intervals.0, &intervals.1, m),
    }
}

pub fn fox_report(p: &foxcalc::Presentation) -> FoxReport {
    let ab = foxcalc::abelianization(p);
    let alexander = foxcalc::alexander_data(p).ok();
    let (descriptor, descriptor_error) = match foxcalc::descriptor_from_presentation(p) {
        Ok(d) => (Some(d), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let pipeline = descriptor.as_ref().and_then(|d| d.gst_pipeline(default_window(d)).ok());
    FoxReport {
        presentation: p.to_string(),
        rank: ab.rank(),
        torsion: ab.torsion().factors().to_vec(),
        alexander,
        descriptor: descriptor.as_ref().map(|d| DescriptorFile::from_descriptor("presentation", d)),
        descriptor_error,
        verdict: pipeline.as_ref().map(|r| r.verdict),
        certificate: pipeline.map(|r| r.certificate),
    }
}

/// `k` with `q = kp ± 1`, when it is unique.
pub fn infer_k(p: i64, q: i64) -> Option<i64> {
    if p < 2 {
        return None;
    }
    [q - 1, q + 1].into_iter().find(|x| x.rem_euclid(p) == 0 && x / p >= 1).map(|x| x / p)
}

pub fn ttk_sweep(max_p: i64) -> Vec<FamilyRecord> {
    let mut out = Vec::new();
    for p in 2..=max_p {
        for k in 1..=2 {
            for q in [k * p - 1, k * p + 1] {
                for s in 1..p {
                    for r in 1..=2 {
                        out.push(families::ttk_record(TtkParams::new(p, q, s, r), Some(k)));
                    }
                }
            }
        }
    }
    out.sort_by_key(|r| (r.params.p, r.params.q, r.params.s, r.params.r));
    out.dedup_by_key(|r| r.params);
    out
}

fn fmt_elt(h: &H1Element) -> String {
    if h.tors.is_empty() {
        format!("t^{}", h.free)
    } else {
        format!("t^{} {:?}", h.free, h.tors)
    }
}

fn predicate_condition(name: &str) -> &'static str {
    match name {
        "vafaee_s3" => "s = p - 1, or s in {2, p - 2} with r = 1",
        "gst_extension" => "s in {1, p - 1}, or s in {2, p - 2} with r = 1",
        "ttk_gst" => "s ≡ ±q mod p",
        _ => "",
    }
}

#[derive(Parser, Debug)]
#[command(name = "lspace", version, about = "L-space gluing decisions from torsion data")]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Pos,
    Nonneg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// D-set of a descriptor. Exit 0 if nonempty, 1 if empty.
    Dset {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "pos")]
        mode: ModeArg,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Generalized solid torus verdict with certificate.
    Gst {
        file: PathBuf,
        #[arg(long)]
        window: Option<i64>,
    },
    /// L-space filling interval from one known L-space slope.
    Interval {
        file: PathBuf,
        #[arg(long)]
        known: Slope,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Decide whether a splice along a gluing matrix is an L-space.
    Splice {
        file1: PathBuf,
        file2: PathBuf,
        /// `a,b,c,d` for `[[a, b], [c, d]]`
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        matrix: Vec<i64>,
        #[arg(long, default_value = "1/0")]
        known1: Slope,
        #[arg(long, default_value = "1/0")]
        known2: Slope,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Example families.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Alexander polynomial and verdict from a presentation file.
    Fox { file: PathBuf },
    /// Print a descriptor file in canonical form.
    Canon { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum FamilyCommand {
    /// Twisted torus knot T(p, q; s, r).
    #[command(allow_negative_numbers = true)]
    Ttk {
        p: i64,
        q: i64,
        s: i64,
        r: i64,
        /// `q = kp ± 1`; inferred when omitted
        #[arg(long)]
        k: Option<i64>,
    },
    /// Every T(p, kp ± 1; s, r) with p ≤ max-p, k ≤ 2, r ≤ 2.
    TtkSweep {
        #[arg(long)]
        max_p: i64,
    },
    /// The two-cusped manifold Z_{p,q}.
    #[command(allow_negative_numbers = true)]
    Z { p: i64, q: i64 },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: 2 }
            } else {
                Outcome { stdout: text, stderr: String::new(), code: 0 }
            };
        }
    };
    match execute(&cli) {
        Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}

fn load_descriptor(path: &Path) -> Result<(String, TorsionDescriptor), CliError> {
    let file = DescriptorFile::load(path).map_err(|e| match e {
        CliError::Descriptor(d) => CliError::Usage(format!("{}:{d}", path.display())),
        other => other,
    })?;
    let d = file.to_descriptor().map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok((file.name, d))
}

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("reports serialise") + "\n"
}

fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let mut out = String::new();
    let code = match &cli.command {
        Command::Dset { file, mode, window } => {
            let (name, d) = load_descriptor(file)?;
            let mode = match mode {
                ModeArg::Pos => DMode::Positive,
                ModeArg::Nonneg => DMode::NonNegative,
            };
            let r = dset_report(&name, &d, mode, window.unwrap_or_else(|| default_window(&d)));
            if cli.json {
                out = json(&r);
            } else {
                writeln!(out, "{name}: D {} {}", if mode == DMode::Positive { ">0" } else { ">=0" }, r.verdict).unwrap();
                writeln!(out, "window: 0..={}", r.window.hi).unwrap();
                for h in &r.elements {
                    writeln!(out, "  {}", fmt_elt(h)).unwrap();
                }
                writeln!(out, "period: {} from degree {}", r.period, r.stable_from).unwrap();
                if !r.stable_torsion.is_empty() {
                    writeln!(out, "infinite: torsion parts {:?} recur every {}", r.stable_torsion, r.period).unwrap();
                }
                if let Some(w) = &r.certificate {
                    writeln!(out, "certificate: {} = {} - {}", fmt_elt(&w.element), fmt_elt(&w.x), fmt_elt(&w.y)).unwrap();
                }
            }
            if r.verdict == "empty" { 1 } else { 0 }
        }
        Command::Gst { file, window } => {
            let (name, d) = load_descriptor(file)?;
            let r = gst_report(&name, &d, window.unwrap_or_else(|| default_window(&d)))?;
            if cli.json {
                out = json(&r);
            } else {
                let p = &r.pipeline;
                let yes = r.verdict == Verdict::GeneralizedSolidTorus;
                writeln!(out, "generalized solid torus: {}; deg Δ̄ = {}", if yes { "yes" } else { "no" }, p.delta_bar_degree).unwrap();
                writeln!(out, "g = {}, k = {}, Δ̄ = {}", p.g_y, p.k_y, p.delta_bar).unwrap();
                match &r.certificate {
                    Certificate::Witness(w) => {
                        writeln!(out, "certificate: {} = {} - {} lies in D>0", fmt_elt(&w.element), fmt_elt(&w.x), fmt_elt(&w.y)).unwrap()
                    }
                    Certificate::Shifts(s) => writeln!(out, "certificate: {} elementary shifts reach the canonical Milnor torsion", s.terms.len()).unwrap(),
                    Certificate::None => {}
                }
                if let Some(c) = p.congruence_constant {
                    writeln!(out, "congruence constant: {c}").unwrap();
                }
            }
            0
        }
        Command::Interval { file, known, window } => {
            let (name, d) = load_descriptor(file)?;
            let r = interval_report(&name, &d, *known, window.unwrap_or_else(|| default_window(&d)))?;
            if cli.json {
                out = json(&r);
            } else {
                writeln!(out, "{name}: L-space slopes {}", r.verdict).unwrap();
                if let Some((a, b)) = r.endpoints {
                    writeln!(out, "endpoints: {a} {b}").unwrap();
                }
            }
            0
        }
        Command::Splice { file1, file2, matrix, known1, known2, window } => {
            let [a, b, c, d] = matrix[..] else {
                return Err(CliError::Usage(format!("--matrix needs 4 entries, got {}", matrix.len())));
            };
            let m = GluingMap::new(a, b, c, d)?;
            let (n1, d1) = load_descriptor(file1)?;
            let (n2, d2) = load_descriptor(file2)?;
            let i1 = slopes::lspace_interval(&d1, known1, window.unwrap_or_else(|| default_window(&d1)))?;
            let i2 = slopes::lspace_interval(&d2, known2, window.unwrap_or_else(|| default_window(&d2)))?;
            let r = splice_report((n1, n2), (i1, i2), &m);
            if cli.json {
                out = json(&r);
            } else {
                writeln!(out, "{} ∪ {}: L-space {}", r.names.0, r.names.1, if r.verdict { "yes" } else { "no" }).unwrap();
                writeln!(out, "intervals: {} and {}", r.intervals.0, r.intervals.1).unwrap();
                if let Some(s) = r.certificate {
                    writeln!(out, "uncovered slope: {s}").unwrap();
                }
            }
            0
        }
        Command::Family { family } => {
            let records = match family {
                FamilyCommand::Ttk { p, q, s, r, k } => {
                    vec![families::ttk_record(TtkParams::new(*p, *q, *s, *r), k.or_else(|| infer_k(*p, *q)))]
                }
                FamilyCommand::TtkSweep { max_p } => ttk_sweep(*max_p),
                FamilyCommand::Z { p, q } => vec![families::z_family_catalog(*p, *q)?],
            };
            let r = FamilyReport { records };
            if cli.json {
                out = json(&r);
            } else {
                for rec in &r.records {
                    let x = rec.params;
                    writeln!(out, "{} p={} q={} s={} r={}{}", rec.family, x.p, x.q, x.s, x.r, if rec.distinguished { " (distinguished)" } else { "" })
                        .unwrap();
                    for v in &rec.verdicts {
                        let val = v.value.map_or("out of domain".to_string(), |b| b.to_string());
                        let cond = predicate_condition(&v.predicate);
                        if cond.is_empty() {
                            writeln!(out, "  {}: {val}", v.predicate).unwrap();
                        } else {
                            writeln!(out, "  {}_predicate: {val} ({cond})", v.predicate).unwrap();
                        }
                    }
                }
            }
            0
        }
        Command::Fox { file } => {
            let text = read(file)?;
            let p = foxcalc::parse_presentation(&text).map_err(|e| CliError::Usage(format!("{}:{e}", file.display())))?;
            let r = fox_report(&p);
            if cli.json {
                out = json(&r);
            } else {
                writeln!(out, "{}", r.presentation.lines().next().unwrap_or("")).unwrap();
                writeln!(out, "H_1 = Z^{} + torsion {:?}", r.rank, r.torsion).unwrap();
                match &r.alexander {
                    Some(a) => {
                        writeln!(out, "phi: {:?}", a.phi).unwrap();
                        writeln!(out, "Alexander polynomial: {}", a.polynomial).unwrap();
                    }
                    None => writeln!(out, "Alexander polynomial: unavailable (needs deficiency one and b1 = 1)").unwrap(),
                }
                if let Some(e) = &r.descriptor_error {
                    writeln!(out, "no torsion descriptor: {e}").unwrap();
                }
                match r.verdict {
                    Some(Verdict::GeneralizedSolidTorus) => writeln!(out, "verdict: generalized solid torus").unwrap(),
                    Some(Verdict::NotGeneralizedSolidTorus) => writeln!(out, "verdict: not a generalized solid torus").unwrap(),
                    None => {}
                }
            }
            0
        }
        Command::Canon { file } => {
            let f = DescriptorFile::load(file).map_err(|e| CliError::Usage(format!("{}:{e}", file.display())))?;
            out = f.canonicalize()?.to_text();
            0
        }
    };
    Ok((out, code))
}
