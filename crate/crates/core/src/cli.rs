//! Command-line front end. Every invocation prints one JSON envelope
//! `{"status","payload","diagnostics"}` (or raw SVG with `--svg`).
//!
//! Exit codes: 0 ok, 2 usage, 3 unreadable input, 4 domain error.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::fan::{self, Cone, ConeSpec, Fan, FanSpec};
use crate::fvec::{self, ShadowRule};
use crate::hj;
use crate::hochschild::{self, AlgebraSpec, FinDimAlgebra, FiniteGroupoid};
use crate::lvm::{self, Configuration, ConfigurationSpec};
use crate::nctorus::{self, NcTorusError};
use crate::polytope::{PolytopeSpec, SimplePolytope};
use crate::quotient;
use crate::scalar::Scalar;
use crate::svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "nctoric", version, about = "Exact toric, LVM, continued-fraction and Hochschild computations")]
pub struct Cli {
    /// Print SVG instead of JSON (2D polytopes and fans only).
    #[arg(long, global = true, conflicts_with = "json")]
    pub svg: bool,
    /// Print JSON (the default).
    #[arg(long, global = true)]
    pub json: bool,
    /// Extra output target, e.g. `svg:square.svg`.
    #[arg(long, global = true, value_name = "KIND:PATH")]
    pub out: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Simple polytopes given by inequalities.
    #[command(subcommand)]
    Polytope(PolytopeCmd),
    /// Fans and cones.
    #[command(subcommand)]
    Fan(FanCmd),
    /// Quotient-construction data.
    #[command(subcommand)]
    Quotient(QuotientCmd),
    /// LVM configurations.
    #[command(subcommand)]
    Lvm(LvmCmd),
    /// Hirzebruch–Jung expansions and resolutions.
    #[command(subcommand)]
    Hj(HjCmd),
    /// Kronecker foliations and non-commutative tori.
    #[command(subcommand)]
    Nctorus(NcTorusCmd),
    /// h- and g-vectors and the g-theorem necessity check.
    Gvec(GvecArgs),
    /// Hochschild and truncated periodic cyclic homology.
    #[command(subcommand)]
    Hh(HhCmd),
}

#[derive(Subcommand, Debug)]
pub enum PolytopeCmd {
    /// Vertices, facet family, classification and face counts.
    Info { file: PathBuf },
    /// Render a 2D polytope.
    Svg { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum FanCmd {
    /// Normal fan of a polytope.
    OfPolytope { file: PathBuf },
    /// Classify the maximal cones of a fan (or a single cone).
    Classify { file: PathBuf },
    /// Render a 2D fan, or the normal fan of a 2D polytope.
    Svg { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum QuotientCmd {
    /// Forbidden strata, kernel lattice and moment vector.
    Data {
        #[arg(long)]
        polytope: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct ConfigArg {
    /// Configuration file `{"m":…,"lambdas":…}`.
    pub file: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum LvmCmd {
    /// Siegel and weak hyperbolicity conditions.
    Check(ConfigArg),
    /// Gale transform.
    Gale {
        file: PathBuf,
        /// Comma-separated positive scalars; all 1 by default.
        #[arg(long)]
        eps: Option<String>,
    },
    /// Condition (K) and the compact/dense leaf dichotomy.
    Dichotomy(ConfigArg),
    /// Generic moment fiber and Kronecker slopes.
    Fiber(ConfigArg),
    /// Polytope defined by the Gale data.
    Polytope {
        file: PathBuf,
        #[arg(long)]
        eps: Option<String>,
    },
    /// Coordinate strata removed by the Siegel condition.
    Strata(ConfigArg),
    /// Orbifold weights when the solution space is a line.
    Orbifold(ConfigArg),
}

#[derive(Subcommand, Debug)]
pub enum HjCmd {
    /// Digits of the Hirzebruch–Jung expansion of a value > 1.
    Expand {
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Evaluate a digit list.
    Evaluate {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        digits: Vec<BigInt>,
    },
    /// Resolve a 2D cone.
    Resolve {
        #[arg(long)]
        cone: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum NcTorusCmd {
    /// Closed or dense leaves, with the continued fraction when irrational.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
    },
    /// Morita equivalence of two quadratic irrationals.
    Morita {
        #[arg(long, allow_hyphen_values = true)]
        theta1: String,
        #[arg(long, allow_hyphen_values = true)]
        theta2: String,
        #[arg(long)]
        search_bound: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RuleArg {
    Macaulay,
    Unshifted,
}

#[derive(Args, Debug)]
pub struct GvecArgs {
    /// f-vector `f₋₁, f₀, …, f_{d−1}`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub f: Vec<BigInt>,
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_enum, default_value = "macaulay")]
    pub rule: RuleArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Builtin {
    Field,
    Fields2,
    Z2,
    Dual,
    Pair2,
    Upper2,
}

#[derive(Args, Debug)]
pub struct AlgebraArg {
    /// Algebra file `{"dim","labels","unit","c"}`.
    #[arg(long, conflicts_with = "builtin")]
    pub algebra: Option<PathBuf>,
    /// A built-in algebra; the ground field when neither option is given.
    #[arg(long, value_enum)]
    pub builtin: Option<Builtin>,
}

#[derive(Subcommand, Debug)]
pub enum HhCmd {
    /// Hochschild homology ranks.
    Ranks {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long, default_value_t = 3)]
        upto: usize,
        /// Use the reduced complex.
        #[arg(long)]
        reduced: bool,
    },
    /// Truncated periodic cyclic homology.
    Hp {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long = "N", default_value_t = 3)]
        n: usize,
        /// Highest total degree counted.
        #[arg(long, default_value_t = 1)]
        upto: usize,
    },
}

/// Result of one invocation: exit code and text for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    status: &'a str,
    payload: Value,
    diagnostics: &'a [String],
}

enum Failure {
    Usage(String),
    Input(String),
    Domain { name: &'static str, message: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain {
            name: e.name(),
            message: e.to_string(),
        }
    }
}

macro_rules! domain {
    ($e:expr) => {
        $e.map_err(|e| Failure::from(Error::from(e)))
    };
}

struct Output {
    payload: Value,
    diagnostics: Vec<String>,
    svg: Option<Result<String, svg::NotPlanar>>,
}

impl Output {
    fn new<T: Serialize>(payload: &T) -> Self {
        Output {
            payload: serde_json::to_value(payload).expect("serializable"),
            diagnostics: Vec::new(),
            svg: None,
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let res = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    res.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn scalar(lit: &str) -> Result<Scalar, Failure> {
    lit.parse().map_err(|e: crate::ScalarError| Failure::Input(e.to_string()))
}

fn scalars(list: &str) -> Result<Vec<Scalar>, Failure> {
    list.split(',').map(|s| scalar(s.trim())).collect()
}

fn load_polytope(path: &Path) -> Result<SimplePolytope, Failure> {
    let spec: PolytopeSpec = read_json(path)?;
    domain!(SimplePolytope::from_spec(spec))
}

fn load_config(path: &Path) -> Result<Configuration, Failure> {
    let spec: ConfigurationSpec = read_json(path)?;
    domain!(Configuration::try_from(spec))
}

fn load_algebra(arg: &AlgebraArg, diagnostics: &mut Vec<String>) -> Result<FinDimAlgebra, Failure> {
    if let Some(path) = &arg.algebra {
        let spec: AlgebraSpec = read_json(path)?;
        return domain!(FinDimAlgebra::try_from(spec));
    }
    Ok(match arg.builtin {
        None => {
            diagnostics.push("no algebra given; using the ground field".into());
            FinDimAlgebra::ground_field()
        }
        Some(Builtin::Field) => FinDimAlgebra::ground_field(),
        Some(Builtin::Fields2) => FinDimAlgebra::product_of_fields(2),
        Some(Builtin::Z2) => FinDimAlgebra::cyclic_group_algebra(2),
        Some(Builtin::Dual) => FinDimAlgebra::truncated_polynomial(2),
        Some(Builtin::Pair2) => domain!(hochschild::convolution_algebra(&FiniteGroupoid::pair(2)))?,
        Some(Builtin::Upper2) => FinDimAlgebra::upper_triangular_2(),
    })
}

/// A fan file, or a polytope file standing for its normal fan.
fn load_fan(path: &Path) -> Result<Fan, Failure> {
    let value: Value = read_json(path)?;
    if value.get("facets").is_some() {
        let spec: PolytopeSpec = serde_json::from_value(value).map_err(|e| Failure::Input(e.to_string()))?;
        let p = domain!(SimplePolytope::from_spec(spec))?;
        return domain!(fan::normal_fan(&p));
    }
    if value.get("cones").is_some() {
        let spec: FanSpec = serde_json::from_value(value).map_err(|e| Failure::Input(e.to_string()))?;
        return domain!(Fan::from_spec(spec));
    }
    let spec: ConeSpec = serde_json::from_value(value).map_err(|e| Failure::Input(e.to_string()))?;
    let cone = domain!(Cone::from_spec(spec))?;
    let dim = cone.dim();
    domain!(Fan::new(dim, vec![cone]))
}

/// Summary used by `polytope info` and `lvm polytope`.
pub fn polytope_payload(p: &SimplePolytope) -> Value {
    let family: Vec<&Vec<usize>> = p.family().iter().collect();
    json!({
        "dim": p.dim(),
        "field": p.field(),
        "facets": p.facets(),
        "vertices": p.vertices(),
        "family": family,
        "redundant_facets": p.redundant_facets(),
        "classification": p.classify_delzant(),
        "face_counts": p.face_counts(),
    })
}

fn redundancy_notes(p: &SimplePolytope) -> Vec<String> {
    p.redundant_facets().iter().map(|i| format!("redundant_facet {i}")).collect()
}

fn classify_payload(f: &Fan) -> Result<Value, Failure> {
    let mut out = Vec::new();
    for cone in f.maximal_cones() {
        let class = domain!(fan::cone_classify(cone))?;
        let mut entry = json!({ "rays": cone.rays(), "class": class });
        if cone.dim() == 2 && cone.rays().len() == 2 && cone.is_rational() {
            entry["dual"] = serde_json::to_value(domain!(fan::dual_cone_2d(cone))?).expect("serializable");
        }
        out.push(entry);
    }
    Ok(json!({ "dim": f.dim(), "complete": f.is_complete(), "cones": out }))
}

fn dispatch(cmd: &Command) -> Result<Output, Failure> {
    Ok(match cmd {
        Command::Polytope(PolytopeCmd::Info { file }) | Command::Polytope(PolytopeCmd::Svg { file }) => {
            let p = load_polytope(file)?;
            let mut o = Output::new(&polytope_payload(&p));
            o.diagnostics = redundancy_notes(&p);
            o.svg = Some(svg::polytope_svg(&p));
            o
        }
        Command::Fan(FanCmd::OfPolytope { file }) => {
            let p = load_polytope(file)?;
            let f = domain!(fan::normal_fan(&p))?;
            let mut o = Output::new(&f);
            o.diagnostics = redundancy_notes(&p);
            o.svg = Some(svg::fan_svg(&f));
            o
        }
        Command::Fan(FanCmd::Classify { file }) | Command::Fan(FanCmd::Svg { file }) => {
            let f = load_fan(file)?;
            let mut o = Output::new(&classify_payload(&f)?);
            o.svg = Some(svg::fan_svg(&f));
            o
        }
        Command::Quotient(QuotientCmd::Data { polytope }) => {
            let p = load_polytope(polytope)?;
            let mut o = Output::new(&domain!(quotient::quotient_data(&p))?);
            o.diagnostics = redundancy_notes(&p);
            o
        }
        Command::Lvm(cmd) => lvm_dispatch(cmd)?,
        Command::Hj(HjCmd::Expand { value, depth }) => Output::new(&domain!(hj::hj_expand(&scalar(value)?, *depth))?),
        Command::Hj(HjCmd::Evaluate { digits }) => {
            let v = domain!(hj::hj_evaluate(digits))?;
            Output::new(&json!({ "value": v, "literal": v.to_string() }))
        }
        Command::Hj(HjCmd::Resolve { cone, depth }) => {
            let spec: ConeSpec = read_json(cone)?;
            let sigma = domain!(Cone::from_spec(spec))?;
            let r = domain!(hj::resolve_cone(&sigma, *depth))?;
            let mut o = Output::new(&r);
            if r.truncated {
                o.diagnostics.push("truncated".into());
            }
            o.svg = Some(svg::fan_svg(&r.fan));
            o
        }
        Command::Nctorus(NcTorusCmd::Classify { theta }) => {
            let t = scalar(theta)?;
            let leaf = nctorus::kronecker_classify(&t);
            let cf = if t.is_rational() { None } else { Some(domain!(nctorus::cf_expand(&t))?) };
            Output::new(&json!({ "theta": t, "leaf_type": leaf, "continued_fraction": cf }))
        }
        Command::Nctorus(NcTorusCmd::Morita {
            theta1,
            theta2,
            search_bound,
        }) => {
            let (a, b) = (scalar(theta1)?, scalar(theta2)?);
            match nctorus::morita_equivalent(&a, &b, *search_bound) {
                Err(NcTorusError::RationalInput(_)) => {
                    let mut o = Output::new(&json!({ "equivalent": Value::Null, "witness": Value::Null, "commutative_torus": true }));
                    o.diagnostics.push("commutative torus".into());
                    o
                }
                r => {
                    let r = domain!(r)?;
                    let mut o = Output::new(&r);
                    if r.gl2_only_certificate {
                        o.diagnostics.push("gl2_only_certificate".into());
                    }
                    o
                }
            }
        }
        Command::Gvec(args) => {
            let rule = match args.rule {
                RuleArg::Macaulay => ShadowRule::Macaulay,
                RuleArg::Unshifted => ShadowRule::Unshifted,
            };
            Output::new(&domain!(fvec::g_theorem_necessity_with(&args.f, args.d, rule))?)
        }
        Command::Hh(HhCmd::Ranks { alg, upto, reduced }) => {
            let mut diagnostics = Vec::new();
            let a = load_algebra(alg, &mut diagnostics)?;
            let ranks = if *reduced {
                domain!(hochschild::hh_ranks_reduced(&a, *upto))?
            } else {
                domain!(hochschild::hh_ranks(&a, *upto))?
            };
            let mut o = Output::new(&json!({ "dim": a.dim(), "reduced": reduced, "ranks": ranks }));
            o.diagnostics = diagnostics;
            o
        }
        Command::Hh(HhCmd::Hp { alg, n, upto }) => {
            let mut diagnostics = Vec::new();
            let a = load_algebra(alg, &mut diagnostics)?;
            let r = domain!(hochschild::hp_truncated(&a, *n, *upto))?;
            if !r.stabilized {
                diagnostics.push("not stabilized".into());
            }
            let mut o = Output::new(&r);
            o.diagnostics = diagnostics;
            o
        }
    })
}

fn lvm_dispatch(cmd: &LvmCmd) -> Result<Output, Failure> {
    Ok(match cmd {
        LvmCmd::Check(ConfigArg { file }) => {
            let cfg = load_config(file)?;
            let a = lvm::check_admissible(&cfg);
            Output::new(&json!({
                "n": cfg.n(),
                "m": cfg.m(),
                "siegel": a.siegel,
                "weak_hyperbolic": a.weak_hyperbolic,
                "admissible": a.admissible(),
            }))
        }
        LvmCmd::Gale { file, eps } => {
            let cfg = load_config(file)?;
            let eps = eps.as_deref().map(scalars).transpose()?;
            let g = domain!(lvm::gale_transform(&cfg, eps))?;
            let mut o = Output::new(&g);
            o.diagnostics = g.zero_rows().iter().map(|i| format!("zero_row {i}")).collect();
            o
        }
        LvmCmd::Dichotomy(ConfigArg { file }) => {
            let cfg = load_config(file)?;
            let k = domain!(lvm::condition_k(&cfg))?;
            let leaf = domain!(lvm::leaf_dichotomy(&cfg))?;
            let mut o = Output::new(&json!({
                "condition_k": k,
                "leaf_type": leaf,
                "agree": k == (leaf == lvm::LeafType::CompactTori),
            }));
            if !lvm::check_admissible(&cfg).admissible() {
                o.diagnostics.push("configuration is not admissible".into());
            }
            o
        }
        LvmCmd::Fiber(ConfigArg { file }) => Output::new(&domain!(lvm::generic_fiber(&load_config(file)?))?),
        LvmCmd::Polytope { file, eps } => {
            let cfg = load_config(file)?;
            let eps = eps.as_deref().map(scalars).transpose()?;
            let g = domain!(lvm::gale_transform(&cfg, eps))?;
            let p = domain!(lvm::polytope_from_gale(&g))?;
            let mut o = Output::new(&polytope_payload(&p));
            o.diagnostics = redundancy_notes(&p);
            o.svg = Some(svg::polytope_svg(&p));
            o
        }
        LvmCmd::Strata(ConfigArg { file }) => Output::new(&lvm::siegel_index_family(&load_config(file)?)),
        LvmCmd::Orbifold(ConfigArg { file }) => Output::new(&domain!(lvm::orbifold_weights_1d(&load_config(file)?))?),
    })
}

fn envelope(status: &str, payload: Value, diagnostics: &[String]) -> String {
    let mut s = serde_json::to_string_pretty(&Envelope {
        status,
        payload,
        diagnostics,
    })
    .expect("serializable");
    s.push('\n');
    s
}

fn failure(f: Failure) -> Outcome {
    let (code, kind, name, message) = match f {
        Failure::Usage(m) => (EXIT_USAGE, "UsageError", "UsageError", m),
        Failure::Input(m) => (EXIT_INPUT, "InputError", "InputError", m),
        Failure::Domain { name, message } => (EXIT_DOMAIN, "DomainError", name, message),
    };
    let payload = json!({ "error": { "kind": kind, "name": name, "message": message } });
    Outcome {
        code,
        stdout: envelope("error", payload, &[]),
        stderr: format!("{kind}: {message}\n"),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            return failure(Failure::Usage(e.to_string().trim_end().to_string()));
        }
    };
    let svg_path = match cli.out.as_deref() {
        None => None,
        Some(target) => match target.split_once(':') {
            Some(("svg", path)) if !path.is_empty() => Some(PathBuf::from(path)),
            _ => return failure(Failure::Usage(format!("unsupported output target `{target}`; use svg:PATH"))),
        },
    };
    let wants_svg_stdout = cli.svg || matches!(cli.command, Command::Polytope(PolytopeCmd::Svg { .. }) | Command::Fan(FanCmd::Svg { .. }));
    let mut out = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(f) => return failure(f),
    };
    if wants_svg_stdout || svg_path.is_some() {
        let drawing = match out.svg.take() {
            None => return failure(Failure::Usage("this command has no SVG rendering".into())),
            Some(Err(e)) => {
                return failure(Failure::Domain {
                    name: "NotPlanar",
                    message: e.to_string(),
                })
            }
            Some(Ok(s)) => s,
        };
        if let Some(path) = svg_path {
            if let Err(e) = std::fs::write(&path, &drawing) {
                return failure(Failure::Input(format!("{}: {e}", path.display())));
            }
            out.diagnostics.push(format!("wrote svg to {}", path.display()));
        }
        if wants_svg_stdout {
            return Outcome {
                code: EXIT_OK,
                stdout: drawing,
                stderr: String::new(),
            };
        }
    }
    Outcome {
        code: EXIT_OK,
        stdout: envelope("ok", out.payload, &out.diagnostics),
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn payload(args: &[&str]) -> (i32, Value) {
        let out = run(std::iter::once("nctoric").chain(args.iter().copied()));
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        (out.code, v)
    }

    #[test]
    fn gvec_example() {
        let (code, v) = payload(&["gvec", "--f", "1,6,12,8", "--d", "3"]);
        assert_eq!(code, 0);
        assert_eq!(v["status"], "ok");
        assert_eq!(v["payload"]["h"], json!([1, 3, 3, 1]));
        assert_eq!(v["payload"]["pass"], json!(true));
    }

    #[test]
    fn morita_example() {
        let (code, v) = payload(&["nctorus", "morita", "--theta1", "sqrt(2)", "--theta2", "1+sqrt(2)"]);
        assert_eq!(code, 0);
        assert_eq!(v["payload"]["equivalent"], json!(true));
        assert_eq!(v["payload"]["witness"], json!([[1, 1], [0, 1]]));
    }

    #[test]
    fn rational_theta_is_a_commutative_torus() {
        let (code, v) = payload(&["nctorus", "morita", "--theta1", "1/2", "--theta2", "sqrt(2)"]);
        assert_eq!(code, 0);
        assert_eq!(v["diagnostics"], json!(["commutative torus"]));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(payload(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(payload(&["hj", "expand", "--value", "0.5"]).0, EXIT_INPUT);
        let (code, v) = payload(&["hj", "expand", "--value", "1/2"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert_eq!(v["payload"]["error"]["name"], "OutOfRange");
        assert_eq!(v["status"], "error");
        assert_eq!(payload(&["polytope", "info", "/nonexistent/p.json"]).0, EXIT_INPUT);
    }

    #[test]
    fn builtin_algebras() {
        let (code, v) = payload(&["hh", "ranks", "--builtin", "pair2", "--upto", "2"]);
        assert_eq!(code, 0);
        assert_eq!(v["payload"]["ranks"], json!([1, 0, 0]));
        let (_, v) = payload(&["hh", "hp", "--N", "2"]);
        assert_eq!((v["payload"]["even"].clone(), v["payload"]["odd"].clone()), (json!(1), json!(0)));
    }
}
