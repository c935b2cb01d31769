//! Command-line front end. Reports go to standard output as JSON with sorted
//! keys; diagnostics and timings go to standard error.
//!
//! Exit codes: 0 success, 1 usage or input errors, 2 invalid presentation,
//! 3 enumeration or lattice caps, 4 pair not in the Apery set or not
//! equivalent, 5 gap report requested for d != 2.

pub mod input;
pub mod search;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::apery::AperyData;
use crate::error::Error;
use crate::lattice::{LatticePoint, Semigroup, SemigroupPresentation};
use crate::linalg::Field;
use crate::monomial::LatticeCaps;
use crate::regularity::{decompose_with, degree_bound_check, eisenbud_goto_verdict, gap_report};
use crate::star::{
    delta_set, enumerate_full, find_crosses, h_min, is_adjacent, is_chain, maximal_cross, third_element,
    CrossCertificate, PairEngine, Scope, SearchCaps,
};

use self::search::{run_search, SearchConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_PAIR: i32 = 4;
pub const EXIT_NOT_CURVE: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "simplicial-reg", version, about = "Regularity of simplicial affine semigroup rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apery-set decomposition, regularity and the Eisenbud-Goto check.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        /// Coefficient field for homology ranks: q or fp:P.
        #[arg(long, default_value = "q")]
        field: Field,
    },
    /// Sequence combinatorics for two equivalent Apery elements.
    Pair {
        #[command(flatten)]
        input: InputArgs,
        /// First element, e.g. 27,243.
        x: String,
        /// Second element.
        y: String,
        #[command(flatten)]
        caps: CapArgs,
        /// How many sequence pairs to list in full.
        #[arg(long, default_value_t = 16)]
        show_pairs: usize,
    },
    /// Randomized search for counterexamples to the delta bound.
    Search(SearchArgs),
    /// Gaps on the degree-one line of a monomial curve.
    Gaps {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check an instance file without computing anything.
    Validate {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Instance file, or - for standard input.
    pub file: PathBuf,
    /// Read the instance as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CapArgs {
    #[arg(long, default_value_t = SearchCaps::default().max_sequences)]
    pub max_seqs: usize,
    #[arg(long, default_value_t = SearchCaps::default().max_pairs)]
    pub max_pairs: u64,
}

impl CapArgs {
    fn caps(&self) -> SearchCaps {
        SearchCaps { max_sequences: self.max_seqs, max_pairs: self.max_pairs }
    }
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 3)]
    pub alpha_min: i64,
    #[arg(long, default_value_t = 12)]
    pub alpha_max: i64,
    /// Fixes the dimension; overrides --d-min and --d-max.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub d_min: usize,
    #[arg(long, default_value_t = 2)]
    pub d_max: usize,
    #[arg(long, default_value_t = 1)]
    pub c_min: usize,
    #[arg(long, default_value_t = 4)]
    pub c_max: usize,
    #[arg(long, value_enum, default_value_t = Scope::AllPairs)]
    pub scope: Scope,
    #[command(flatten)]
    pub caps: CapArgs,
}

impl SearchArgs {
    pub fn config(&self) -> SearchConfig {
        let d_range = match self.d {
            Some(d) => (d, d),
            None => (self.d_min, self.d_max),
        };
        SearchConfig {
            seed: self.seed,
            trials: self.trials,
            alpha_range: (self.alpha_min, self.alpha_max),
            d_range,
            c_range: (self.c_min, self.c_max),
            scope: self.scope,
            caps: self.caps.caps(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let started = Instant::now();
    let result = match &cli.command {
        Command::Decompose { input, field } => cmd_decompose(input, *field),
        Command::Pair { input, x, y, caps, show_pairs } => cmd_pair(input, x, y, caps.caps(), *show_pairs),
        Command::Search(args) => cmd_search(args, err),
        Command::Gaps { input } => cmd_gaps(input),
        Command::Validate { input } => cmd_validate(input),
    };
    let _ = writeln!(err, "elapsed: {:.3}s", started.elapsed().as_secs_f64());
    match result {
        Ok(Report { body, code }) => {
            let _ = out.write_all(body.as_bytes());
            code
        }
        Err(Failure { message, code, body }) => {
            if let Some(body) = body {
                let _ = out.write_all(body.as_bytes());
            }
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Report {
    body: String,
    code: i32,
}

struct Failure {
    message: String,
    code: i32,
    /// Partial report still worth printing.
    body: Option<String>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { message: message.into(), code: EXIT_USAGE, body: None }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string(), body: None }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidPresentation(_) => EXIT_INVALID,
        Error::SequenceCap { .. } | Error::PairCap { .. } | Error::TooManyGenerators { .. } | Error::LatticeTooLarge { .. } => {
            EXIT_CAP
        }
        Error::NotInAperySet(_) | Error::NotEquivalent(..) => EXIT_PAIR,
        Error::NotBivariate(_) => EXIT_NOT_CURVE,
        _ => EXIT_USAGE,
    }
}

/// One line of JSON with sorted keys and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v: Value = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string(&v).expect("values serialize");
    s.push('\n');
    s
}

fn load(input: &InputArgs) -> Result<SemigroupPresentation, Failure> {
    let text = input::read_source(&input.file).map_err(Failure::usage)?;
    input::parse_instance(&text, input.json).map_err(Failure::usage)
}

fn load_semigroup(input: &InputArgs) -> Result<Semigroup, Failure> {
    let p = load(input)?;
    let report = p.validate();
    Semigroup::new(p).map_err(|e| Failure {
        message: e.to_string(),
        code: exit_code(&e),
        body: Some(to_json(&json!({ "valid": false, "report": report }))),
    })
}

fn cmd_validate(input: &InputArgs) -> Result<Report, Failure> {
    let p = load(input)?;
    let report = p.validate();
    let valid = report.is_valid();
    let body = to_json(&json!({ "valid": valid, "report": report, "presentation": p }));
    if valid {
        Ok(Report { body, code: EXIT_OK })
    } else {
        Err(Failure { message: format!("invalid presentation: {report}"), code: EXIT_INVALID, body: Some(body) })
    }
}

fn cmd_decompose(input: &InputArgs, field: Field) -> Result<Report, Failure> {
    let sg = load_semigroup(input)?;
    let apery = AperyData::compute(&sg)?;
    let report = decompose_with(&sg, &apery, field, LatticeCaps::default())?;
    let verdict = eisenbud_goto_verdict(&report);
    let mut v = serde_json::to_value(&report).expect("reports serialize");
    v["proved_case"] = serde_json::to_value(verdict.proved_case).expect("enum serializes");
    v["degree_bound"] = serde_json::to_value(degree_bound_check(&sg, &apery)).expect("report serializes");
    Ok(Report { body: to_json(&v), code: EXIT_OK })
}

fn cmd_gaps(input: &InputArgs) -> Result<Report, Failure> {
    let sg = load_semigroup(input)?;
    let report = gap_report(&sg)?;
    Ok(Report { body: to_json(&report), code: EXIT_OK })
}

fn cmd_search(args: &SearchArgs, err: &mut dyn Write) -> Result<Report, Failure> {
    let config = args.config();
    config.check().map_err(Failure::usage)?;
    let output = run_search(&config);
    let mut body = String::new();
    for record in &output.records {
        if record.get("error").is_some() {
            let _ = writeln!(err, "trial {} skipped: {}", record["trial"], record["error"]);
        }
        body.push_str(&serde_json::to_string(record).expect("values serialize"));
        body.push('\n');
    }
    let summary = json!({ "summary": output.summary, "config": config });
    body.push_str(&serde_json::to_string(&summary).expect("values serialize"));
    body.push('\n');
    Ok(Report { body, code: EXIT_OK })
}

#[derive(Serialize)]
struct SequencePairReport {
    lambda: Vec<LatticePoint>,
    nu: Vec<LatticePoint>,
    delta_set: Vec<(usize, usize)>,
    delta: i64,
    crossless: bool,
    crosses: Vec<(usize, usize, usize, usize)>,
}

/// Analysis of one pair: listed sequence pairs, `delta(x, y)`, crosses,
/// `h(x, y)`, adjacency and the bound verdict.
pub fn pair_report(sg: &Semigroup, apery: &AperyData, x: &LatticePoint, y: &LatticePoint, caps: SearchCaps, show_pairs: usize) -> Result<(Value, bool), Error> {
    let alpha = sg.alpha();
    for p in [x, y] {
        if p.dim() != sg.dim() {
            return Err(Error::DimensionMismatch { expected: sg.dim(), found: p.dim() });
        }
        if !apery.contains(p) || p.is_zero() {
            return Err(Error::NotInAperySet(p.clone()));
        }
    }
    if !x.is_equivalent(y, alpha) {
        return Err(Error::NotEquivalent(x.clone(), y.clone()));
    }

    let lx = enumerate_full(sg, x, caps.max_sequences)?;
    let ly = enumerate_full(sg, y, caps.max_sequences)?;
    let mut listed = Vec::new();
    let mut cross: Option<CrossCertificate> = None;
    'outer: for l in &lx {
        for n in &ly {
            if listed.len() == show_pairs && cross.is_some() {
                break 'outer;
            }
            let d = delta_set(l, n, alpha);
            if cross.is_none() {
                let found = find_crosses(l, n, alpha);
                let idx: Vec<_> = found.iter().map(|c| c.at).collect();
                if let Some(best) = maximal_cross(&idx) {
                    cross = found.into_iter().find(|c| c.at == best);
                }
            }
            if listed.len() < show_pairs {
                listed.push(SequencePairReport {
                    lambda: l.steps().to_vec(),
                    nu: n.steps().to_vec(),
                    crossless: is_chain(&d),
                    crosses: crate::star::cross_indices(&d).iter().map(|c| (c.i, c.j, c.l, c.k)).collect(),
                    delta: d.len() as i64 - 2,
                    delta_set: d.into_iter().collect(),
                });
            }
        }
    }

    let mut engine = PairEngine::new(sg, apery, caps);
    let delta_min = engine.delta_min(x, y);
    let crossless = engine.are_crossless(x, y);
    let verdict = engine.check_pair(x, y, false);
    let capped = delta_min.is_err() || crossless.is_err();

    let h = h_min(x, y);
    let adjacent = if sg.dim() == 2 && x != y {
        apery.class_of(x).and_then(|c| is_adjacent(c, x, y).ok())
    } else {
        None
    };
    let third = cross.as_ref().map(|c| third_element(sg, apery, c).map_err(|e| e.to_string()));

    let report = json!({
        "presentation": sg.presentation(),
        "x": x,
        "y": y,
        "deg_x": x.coordinate_sum() / alpha,
        "deg_y": y.coordinate_sum() / alpha,
        "h": h,
        "deg_h": h.coordinate_sum() / alpha,
        "lambda_x_count": lx.len(),
        "lambda_y_count": ly.len(),
        "sequence_pairs": listed,
        "delta": delta_min.as_ref().ok().map(|m| m.value),
        "delta_witness": delta_min.as_ref().ok(),
        "delta_error": delta_min.as_ref().err().map(|e| e.to_string()),
        "crossless": crossless.as_ref().ok().map(|w| w.is_some()),
        "crossless_witness": crossless.as_ref().ok().and_then(|w| w.as_ref()),
        "cross": cross.as_ref().map(|c| json!({
            "lambda": c.lambda.steps(),
            "nu": c.nu.steps(),
            "i": c.at.i, "j": c.at.j, "l": c.at.l, "k": c.at.k,
            "height": c.height(),
        })),
        "third_element": third.as_ref().map(|t| match t {
            Ok(z) => json!(z),
            Err(e) => json!({ "error": e }),
        }),
        "adjacent": adjacent,
        "verdict": verdict,
    });
    Ok((report, capped))
}

fn cmd_pair(input: &InputArgs, x: &str, y: &str, caps: SearchCaps, show_pairs: usize) -> Result<Report, Failure> {
    let sg = load_semigroup(input)?;
    let x = input::parse_point(x).map_err(Failure::usage)?;
    let y = input::parse_point(y).map_err(Failure::usage)?;
    let apery = AperyData::compute(&sg)?;
    let (report, capped) = pair_report(&sg, &apery, &x, &y, caps, show_pairs).map_err(|e| match e {
        Error::DimensionMismatch { .. } => Failure { message: e.to_string(), code: EXIT_PAIR, body: None },
        other => Failure::from(other),
    })?;
    let body = to_json(&report);
    if capped {
        Err(Failure { message: "enumeration cap reached; delta is indeterminate".into(), code: EXIT_CAP, body: Some(body) })
    } else {
        Ok(Report { body, code: EXIT_OK })
    }
}
