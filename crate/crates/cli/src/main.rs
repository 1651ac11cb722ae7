//! `torman`: presentations, bases and normal forms for torus manifolds and
//! torus manifold bundles.

mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use torman_core::bundlerings::emit_conjecture_sj;
use torman_core::exactalg::parse_laurent;
use torman_core::{
    BaseCohomRing, BaseKRing, BundleCohomology, BundleKRing, BundleNormalForm, Cohomology, Error, FaceAcyclicRing,
    GeneralFacePoset, KFaceRing, KVariant, Presentation, RankReport,
};

use input::{load_base, load_manifold, load_tuple, Manifold};

const GRAMMAR: &str = "\
EXPRESSIONS
  expr     := ['+'|'-'] term (('+'|'-') term)*
  term     := power ('*' power)*
  power    := atom ['^' exponent]
  atom     := integer | variable | '(' expr ')'
  exponent := ['-'] digits | '(' ['-'] digits ')'

  Coefficients are integers. Negative exponents are accepted only in
  K-theory contexts and only on units (monomials). Variables:
    x1..xd          cohomology generators (one per facet)
    y1..yd          K-theory generators
    x_F             generators of a face poset ring (F a face id)
    base names      the non-unit basis names of a --base ring, e.g. t or s

INPUTS
  Characteristic pair: {\"n\", \"facets\"?, \"nerve_maximal\" (1-based), \"lambda\"}
  Fan:                 {\"rays\", \"max_cones\" (1-based), \"complete\"?}
  Face poset:          {\"n\", \"facets\", \"lambda\", \"faces\", \"join\"?, \"meet_components\"?}
  Base ring:           {\"basis\": [{name, degree}], \"mult\", \"char_class\" | \"line_class\"}

ENVIRONMENT
  TORMAN_FUEL   maximum number of rewriting passes in bundle reductions

EXIT STATUS
  0 success, 1 validation or computation failure, 2 parse error";

#[derive(Parser)]
#[command(name = "torman", version, about = "Exact rings of torus manifolds and their bundles", after_long_help = GRAMMAR)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    X,
    Y,
}

impl From<Form> for KVariant {
    fn from(f: Form) -> Self {
        match f {
            Form::X => KVariant::X,
            Form::Y => KVariant::Y,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the smoothness condition and report vertices and Euler characteristic.
    Validate { input: PathBuf },
    /// Presentation and basis of H*(X).
    Cohomology {
        input: PathBuf,
        /// Element to reduce to normal form (repeatable).
        #[arg(long)]
        reduce: Vec<String>,
    },
    /// Betti numbers of X in degrees 0..2n.
    Betti { input: PathBuf },
    /// Presentation and RT-basis of the K-theoretic face ring.
    Kring {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Form::Y)]
        form: Form,
        #[arg(long)]
        reduce: Vec<String>,
    },
    /// Cohomology of the bundle E(X) over a base ring.
    BundleCohomology {
        input: PathBuf,
        /// Base ring with "char_class".
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        reduce: Vec<String>,
        /// Recompute the Z-rank independently.
        #[arg(long)]
        verify: bool,
    },
    /// K-ring of the bundle E(X) over a base ring.
    BundleKring {
        input: PathBuf,
        /// Base ring with "line_class".
        #[arg(long)]
        base: PathBuf,
        #[arg(long, value_enum, default_value_t = Form::Y)]
        form: Form,
        #[arg(long)]
        reduce: Vec<String>,
        #[arg(long)]
        verify: bool,
    },
    /// Vertex restrictions of a Laurent polynomial in y1..yd.
    Restrict {
        input: PathBuf,
        #[arg(long)]
        element: String,
    },
    /// Laurent polynomial with the given vertex restrictions.
    Interpolate {
        input: PathBuf,
        /// Restriction tuple as written by `restrict --format json`.
        #[arg(long)]
        tuple: PathBuf,
    },
    /// Ring of a face-acyclic orbit space, optionally twisted over a base.
    FaceAcyclic {
        input: PathBuf,
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long)]
        reduce: Vec<String>,
        #[arg(long)]
        verify: bool,
    },
    /// Candidate K-ring presentation for a face poset (not verified).
    EmitConjecture {
        input: PathBuf,
        /// Base ring with "line_class".
        #[arg(long)]
        base: Option<PathBuf>,
    },
}

pub enum Failure {
    Parse(String),
    Validation(String),
    /// Failed validation with a structured report.
    Report { text: String, json: Value },
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::NegativeExponent(_) | Error::VariableMismatch { .. } => Failure::Parse(e.to_string()),
            Error::InvalidPair(_)
            | Error::InvalidPoset(_)
            | Error::InvalidBase(_)
            | Error::NonUnimodularVertex { .. }
            | Error::NonSmoothCone { .. }
            | Error::RidgePairingFailure { .. }
            | Error::IncompatibleTuple { .. }
            | Error::TorsionDetected { .. }
            | Error::RankMismatch { .. } => Failure::Validation(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

/// Output of a command in every format.
struct Rendered {
    text: String,
    json: Value,
    latex: Option<String>,
}

impl Rendered {
    fn plain(text: String, json: Value) -> Self {
        Rendered { text, json, latex: None }
    }
}

fn presentation_output(p: &Presentation, reductions: Vec<(String, BundleNormalForm)>, report: Option<RankReport>) -> Rendered {
    let mut text = p.to_text();
    let mut latex = p.to_latex();
    for (input, nf) in &reductions {
        text.push_str(&format!("reduce {input} = {}\n", nf.text));
        latex.push_str(&format!("% reduce {input} = {}\n", nf.text));
    }
    if let Some(r) = &report {
        text.push_str(&rank_text(r));
    }
    let json = if reductions.is_empty() && report.is_none() {
        serde_json::to_value(p).expect("presentation serializes")
    } else {
        let reductions: Vec<Value> =
            reductions.iter().map(|(i, nf)| json!({ "input": i, "normal_form": nf })).collect();
        json!({ "presentation": p, "reductions": reductions, "rank_check": report })
    };
    Rendered { text, json, latex: Some(latex) }
}

fn rank_text(r: &RankReport) -> String {
    let status = if r.is_ok() { "ok" } else { "FAILED" };
    let mut s = format!("rank check: {status}, Z-rank {} (expected {})\n", r.total, r.expected);
    for (d, divs) in &r.torsion {
        s.push_str(&format!("  torsion in degree {d}: {}\n", divs.join(", ")));
    }
    s
}

fn fuel_override() -> Result<Option<usize>, Failure> {
    match std::env::var("TORMAN_FUEL") {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| Failure::Parse(format!("TORMAN_FUEL: '{v}' is not a count"))),
        Err(_) => Ok(None),
    }
}

fn with_fuel(b: BundleCohomology) -> Result<BundleCohomology, Failure> {
    Ok(match fuel_override()? {
        Some(f) => b.with_fuel(f),
        None => b,
    })
}

fn acyclic_with_fuel(r: FaceAcyclicRing) -> Result<FaceAcyclicRing, Failure> {
    Ok(match fuel_override()? {
        Some(f) => r.with_fuel(f),
        None => r,
    })
}

fn cohom_bundle_output(b: &BundleCohomology, p: Presentation, reduce: &[String], verify: bool) -> Result<Rendered, Failure> {
    let mut reductions = Vec::new();
    for r in reduce {
        let e = b.parse(r)?;
        reductions.push((r.clone(), b.reduce(&e)?));
    }
    let report = if verify { Some(b.verify_rank()?) } else { None };
    let failed = report.as_ref().is_some_and(|r| !r.is_ok());
    let out = presentation_output(&p, reductions, report);
    if failed {
        return Err(Failure::Report { text: out.text, json: out.json });
    }
    Ok(out)
}

fn k_bundle_output(b: &BundleKRing, p: Presentation, reduce: &[String], verify: bool) -> Result<Rendered, Failure> {
    let mut reductions = Vec::new();
    for r in reduce {
        let e = b.parse(r)?;
        reductions.push((r.clone(), b.reduce(&e)?));
    }
    let report = if verify { Some(b.verify_rank()?) } else { None };
    let failed = report.as_ref().is_some_and(|r| !r.is_ok());
    let out = presentation_output(&p, reductions, report);
    if failed {
        return Err(Failure::Report { text: out.text, json: out.json });
    }
    Ok(out)
}

fn validate(m: Manifold) -> Result<Rendered, Failure> {
    let invalid = |msg: String| {
        let json = json!({ "valid": false, "issues": [msg] });
        Failure::Report { text: format!("invalid:\n  - {msg}\n"), json }
    };
    let pair = match m {
        Manifold::Pair(p) => p,
        Manifold::Fan(f) => match f.to_pair() {
            Ok(p) => p,
            Err(e) => return Err(invalid(e.to_string())),
        },
        Manifold::Poset(f) => {
            return match GeneralFacePoset::from_file(&f) {
                Ok(p) => {
                    let m = p.euler_characteristic();
                    let text = format!("valid, {m} vertices, χ={m}\n");
                    Ok(Rendered::plain(text, json!({ "valid": true, "n": p.n(), "vertices": m, "euler_characteristic": m })))
                }
                Err(e) => Err(invalid(e.to_string())),
            }
        }
    };
    let report = pair.validate();
    let json = serde_json::to_value(&report).expect("report serializes");
    let text = format!("{report}\n");
    if report.valid {
        Ok(Rendered::plain(text, json))
    } else {
        Err(Failure::Report { text, json })
    }
}

fn run(cli: &Cli) -> Result<Rendered, Failure> {
    match &cli.command {
        Command::Validate { input } => validate(load_manifold(input)?),
        Command::Cohomology { input, reduce } => match load_manifold(input)? {
            Manifold::Poset(_) => {
                let poset = load_manifold(input)?.poset()?;
                let ring = FaceAcyclicRing::new(&poset, BaseCohomRing::point(poset.n()))?;
                cohom_bundle_output(ring.bundle(), ring.presentation(), reduce, false)
            }
            m => {
                let pair = m.pair("cohomology")?;
                let c = Cohomology::new(&pair)?;
                let b = BundleCohomology::new(&pair, BaseCohomRing::point(pair.n()))?;
                cohom_bundle_output(&b, c.to_presentation(), reduce, false)
            }
        },
        Command::Betti { input } => {
            let ranks = match load_manifold(input)? {
                Manifold::Poset(f) => {
                    let poset = GeneralFacePoset::from_file(&f)?;
                    FaceAcyclicRing::new(&poset, BaseCohomRing::point(poset.n()))?.bundle().expected_ranks()
                }
                m => Cohomology::new(&m.pair("betti")?)?.betti_numbers(),
            };
            let text = ranks.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            Ok(Rendered::plain(format!("{text}\n"), json!({ "betti": ranks })))
        }
        Command::Kring { input, form, reduce } => {
            let pair = load_manifold(input)?.pair("kring")?;
            let k = KFaceRing::new(&pair)?;
            let mut p = k.presentation((*form).into()).to_presentation();
            p.basis = k.basis().iter().map(ToString::to_string).collect();
            let b = BundleKRing::new(&pair, BaseKRing::point(pair.n()))?;
            k_bundle_output(&b, p, reduce, false)
        }
        Command::BundleCohomology { input, base, reduce, verify } => {
            let file = load_base(base)?;
            match load_manifold(input)? {
                Manifold::Poset(f) => {
                    let poset = GeneralFacePoset::from_file(&f)?;
                    let ring = acyclic_with_fuel(FaceAcyclicRing::new(&poset, BaseCohomRing::from_file(&file, poset.n())?)?)?;
                    cohom_bundle_output(ring.bundle(), ring.presentation(), reduce, *verify)
                }
                m => {
                    let pair = m.pair("bundle-cohomology")?;
                    let b = with_fuel(BundleCohomology::new(&pair, BaseCohomRing::from_file(&file, pair.n())?)?)?;
                    let p = b.presentation();
                    cohom_bundle_output(&b, p, reduce, *verify)
                }
            }
        }
        Command::BundleKring { input, base, form, reduce, verify } => {
            let file = load_base(base)?;
            let pair = load_manifold(input)?.pair("bundle-kring")?;
            let b = BundleKRing::new(&pair, BaseKRing::from_file(&file, pair.n())?)?;
            let p = b.presentation((*form).into());
            k_bundle_output(&b, p, reduce, *verify)
        }
        Command::Restrict { input, element } => {
            let pair = load_manifold(input)?.pair("restrict")?;
            let k = KFaceRing::new(&pair)?;
            let p = parse_laurent(element, k.y_vars())?;
            let t = k.phi(&p);
            let text: String = t
                .entries
                .iter()
                .map(|e| {
                    let v: Vec<String> = e.vertex.iter().map(ToString::to_string).collect();
                    format!("vertex {{{}}}: {}\n", v.join(","), e.value)
                })
                .collect();
            Ok(Rendered::plain(text, serde_json::to_value(&t).expect("tuple serializes")))
        }
        Command::Interpolate { input, tuple } => {
            let pair = load_manifold(input)?.pair("interpolate")?;
            let k = KFaceRing::new(&pair)?;
            let t = load_tuple(tuple)?;
            let p = k.interpolate(&t)?;
            Ok(Rendered {
                text: format!("{p}\n"),
                json: serde_json::to_value(&p).expect("polynomial serializes"),
                latex: Some(format!("{}\n", torman_core::exactalg::Latex(&p))),
            })
        }
        Command::FaceAcyclic { input, base, reduce, verify } => {
            let poset = load_manifold(input)?.poset()?;
            let base = match base {
                Some(path) => BaseCohomRing::from_file(&load_base(path)?, poset.n())?,
                None => BaseCohomRing::point(poset.n()),
            };
            let ring = acyclic_with_fuel(FaceAcyclicRing::new(&poset, base)?)?;
            cohom_bundle_output(ring.bundle(), ring.presentation(), reduce, *verify)
        }
        Command::EmitConjecture { input, base } => {
            let poset = load_manifold(input)?.poset()?;
            let base = match base {
                Some(path) => BaseKRing::from_file(&load_base(path)?, poset.n())?,
                None => BaseKRing::point(poset.n()),
            };
            let p = emit_conjecture_sj(&poset, &base)?;
            Ok(presentation_output(&p, Vec::new(), None))
        }
    }
}

/// Write errors (a closed pipe) are ignored.
fn emit(format: Format, text: &str, json: &Value, latex: Option<&str>) {
    let mut out = std::io::stdout().lock();
    let _ = match format {
        Format::Text => write!(out, "{text}"),
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(json).expect("json output")),
        Format::Latex => write!(out, "{}", latex.unwrap_or(text)),
    };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit(cli.format, &out.text, &out.json, out.latex.as_deref());
            ExitCode::SUCCESS
        }
        Err(Failure::Report { text, json }) => {
            emit(cli.format, &text, &json, None);
            ExitCode::from(1)
        }
        Err(Failure::Validation(msg)) => {
            emit(cli.format, &format!("invalid:\n  - {msg}\n"), &json!({ "valid": false, "issues": [msg] }), None);
            ExitCode::from(1)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
