//! Command-line surface and dispatch.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use cohom_core::cohom::{build_cohom, check_in_omega, cocomposition, coevaluation_check, OmegaReport};
use cohom_core::dsl::print_relation;
use cohom_core::products::{black_product, koszul_dual, triangle, white_product};
use cohom_core::report::Report;
use cohom_core::twist::{check_admissible, twist_space};
use cohom_core::verify::{self, Suite, SuiteConfig};
use cohom_core::{Field, Primitive, QuantumSpace, Rat, RatFunc};
use serde_json::{json, Value};

use crate::file::{AlgebraFile, FieldTag};
use crate::matrix::parse_matrix;

#[derive(Debug, Parser)]
#[command(name = "cohom", version, about = "Twisted coHom objects of graded quantum spaces, checked degree by degree")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// Degree cutoff for every construction (overrides the files' `cutoff`)
    #[arg(long, global = true, value_name = "D")]
    pub max_degree: Option<usize>,
    /// Print a JSON object instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized suites
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Number of samples per randomized suite
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// σ shared by every space unless overridden by --sigma-a/-b/-c
    #[arg(long, global = true, value_name = "MATRIX")]
    pub sigma: Option<String>,
    /// σ for the first space: `diag(..)` or `[[..],[..]]`
    #[arg(long, global = true, value_name = "MATRIX")]
    pub sigma_a: Option<String>,
    /// σ for the second space
    #[arg(long, global = true, value_name = "MATRIX")]
    pub sigma_b: Option<String>,
    /// σ for the third space
    #[arg(long, global = true, value_name = "MATRIX")]
    pub sigma_c: Option<String>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Generators, Hilbert series and minimal relations
    Info { file: PathBuf },
    /// Hilbert series up to the cutoff
    Hilbert { file: PathBuf },
    /// Koszul dual of a quadratic space
    Dual { file: PathBuf },
    /// White (Segre) product A ∘ B
    White { a: PathBuf, b: PathBuf },
    /// Black product A • B of quadratic spaces
    Black { a: PathBuf, b: PathBuf },
    /// Triangle product B ▷ A
    Triangle { b: PathBuf, a: PathBuf },
    /// Twist A by the primitive of --sigma-a
    Twist { file: PathBuf },
    /// hom[B, A] twisted by --sigma-a (on A) and --sigma-b (on B)
    Cohom { b: PathBuf, a: PathBuf },
    /// Compose the coevaluations of hom[B, A] and hom[C, B]
    Compose { a: PathBuf, b: PathBuf, c: PathBuf },
    /// Run a verification suite: theorem1, theorem2, theorem4, prop3, corollary1, corollary2 or all
    Verify {
        suite: Suite,
        /// A, then optionally B and C (default to A)
        #[arg(required = true, num_args = 1..=3)]
        files: Vec<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Info { .. } => "info",
            Command::Hilbert { .. } => "hilbert",
            Command::Dual { .. } => "dual",
            Command::White { .. } => "white",
            Command::Black { .. } => "black",
            Command::Triangle { .. } => "triangle",
            Command::Twist { .. } => "twist",
            Command::Cohom { .. } => "cohom",
            Command::Compose { .. } => "compose",
            Command::Verify { .. } => "verify",
        }
    }

    fn files(&self) -> Vec<&Path> {
        match self {
            Command::Info { file } | Command::Hilbert { file } | Command::Dual { file } | Command::Twist { file } => vec![file],
            Command::White { a, b } | Command::Black { a, b } => vec![a, b],
            Command::Triangle { b, a } | Command::Cohom { b, a } => vec![b, a],
            Command::Compose { a, b, c } => vec![a, b, c],
            Command::Verify { files, .. } => files.iter().map(PathBuf::as_path).collect(),
        }
    }
}

/// Result of a command: human text, structured value, and the check report.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub value: Value,
    pub report: Report,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.report.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string_pretty(&json!({ "result": self.value, "report": self.report })).expect("report serializes");
        }
        let mut out = self.text.clone();
        if !self.report.checks.is_empty() && !out.contains(&self.report.render()) {
            if !out.is_empty() && !out.ends_with('\n') {
                out.push('\n');
            }
            out.push_str(&self.report.render());
        }
        out
    }
}

/// A usage problem: unreadable input, bad literal, mismatched fields. Exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

pub fn execute(cli: &Cli, echo: &str) -> Result<Outcome, Usage> {
    let mut files = Vec::new();
    for path in cli.command.files() {
        let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
        files.push(AlgebraFile::parse(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))?);
    }
    let field = files[0].field;
    if let Some(f) = files.iter().find(|f| f.field != field) {
        return Err(Usage(format!("all inputs must share a field; found {} and {}", field.name(), f.field.name())));
    }
    let start = Instant::now();
    let mut outcome = match field {
        FieldTag::Q => run::<Rat>(&cli.command, &files, &cli.opts, echo),
        FieldTag::Qq => run::<RatFunc>(&cli.command, &files, &cli.opts, echo),
    }?;
    if outcome.report.elapsed_ms == 0 {
        outcome.report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    Ok(outcome)
}

struct Sigmas<F: Field> {
    a: Option<cohom_core::Matrix<F>>,
    b: Option<cohom_core::Matrix<F>>,
    c: Option<cohom_core::Matrix<F>>,
}

fn sigma<F: Field>(flag: &str, text: &Option<String>) -> Result<Option<cohom_core::Matrix<F>>, Usage> {
    text.as_deref().map(|t| parse_matrix::<F>(t).map_err(|e| Usage(format!("--{flag}: {e}")))).transpose()
}

fn primitive<F: Field>(m: &Option<cohom_core::Matrix<F>>, space: &QuantumSpace<F>, flag: &str) -> Result<Primitive<F>, Usage> {
    match m {
        None => Ok(Primitive::identity(space.n(), space.cutoff())),
        Some(m) if m.rows() != space.n() || m.cols() != space.n() => {
            Err(Usage(format!("--{flag} is {}×{} but the space has {} generators", m.rows(), m.cols(), space.n())))
        }
        Some(m) => Primitive::from_sigma(m, space.cutoff()).map_err(|e| Usage(format!("--{flag}: {e}"))),
    }
}

fn run<F: Field>(cmd: &Command, files: &[AlgebraFile], opts: &Options, echo: &str) -> Result<Outcome, Usage> {
    let spaces = files.iter().map(|f| f.build::<F>(opts.max_degree)).collect::<Result<Vec<_>, _>>().map_err(|e| Usage(e.to_string()))?;
    let shared = sigma::<F>("sigma", &opts.sigma)?;
    let pick = |flag: &str, own: &Option<String>| -> Result<Option<cohom_core::Matrix<F>>, Usage> { Ok(sigma::<F>(flag, own)?.or_else(|| shared.clone())) };
    let sig = Sigmas { a: pick("sigma-a", &opts.sigma_a)?, b: pick("sigma-b", &opts.sigma_b)?, c: pick("sigma-c", &opts.sigma_c)? };
    let mut report = Report::new(echo);
    let result = match cmd {
        Command::Verify { suite, .. } => {
            let mut cfg = SuiteConfig::new(spaces[0].clone());
            if let Some(b) = spaces.get(1) {
                cfg.b = b.clone();
                cfg.c = b.clone();
            }
            if let Some(c) = spaces.get(2) {
                cfg.c = c.clone();
            }
            for (flag, m, s) in [("sigma-a", &sig.a, &cfg.a), ("sigma-b", &sig.b, &cfg.b), ("sigma-c", &sig.c, &cfg.c)] {
                primitive(m, s, flag)?;
            }
            (cfg.sigma_a, cfg.sigma_b, cfg.sigma_c) = (sig.a, sig.b, sig.c);
            cfg.seed = opts.seed.unwrap_or(verify::DEFAULT_SEED);
            cfg.samples = opts.samples.unwrap_or(verify::DEFAULT_SAMPLES);
            let mut r = verify::run(*suite, &cfg);
            r.command = echo.to_string();
            let text = r.render();
            let summary = json!({ "suite": suite.name(), "checks": r.checks.len(), "failures": r.failures().count() });
            return Ok(Outcome { text, value: summary, report: r });
        }
        Command::Twist { .. } | Command::Cohom { .. } | Command::Compose { .. } => twisted(cmd, &spaces, &sig, &mut report)?,
        _ => plain(cmd, &spaces),
    };
    Ok(match result {
        Ok((text, value)) => Outcome { text, value, report },
        Err(e) => {
            report.fail(cmd.name(), (0, spaces[0].cutoff()), None, format!("error: {e}"));
            Outcome { text: format!("error: {e}"), value: Value::Null, report }
        }
    })
}

type Computed = cohom_core::Result<(String, Value)>;

fn plain<F: Field>(cmd: &Command, s: &[QuantumSpace<F>]) -> Computed {
    match cmd {
        Command::Info { .. } => describe(&s[0]),
        Command::Hilbert { .. } => {
            let h = s[0].hilbert();
            Ok((serde_json::to_string(&h).expect("vector serializes"), json!(h)))
        }
        Command::Dual { .. } => describe(&koszul_dual(&s[0])?),
        Command::White { .. } => describe(&white_product(&s[0], &s[1])?),
        Command::Black { .. } => describe(&black_product(&s[0], &s[1])?),
        Command::Triangle { .. } => describe(&triangle(&s[0], &s[1])?),
        _ => unreachable!("dispatched elsewhere"),
    }
}

fn omega_record<F: Field>(report: &mut Report, name: &str, r: &OmegaReport<F>, a: &QuantumSpace<F>) {
    let witness = r.witness.as_ref().zip(r.relation_failure).map(|(w, d)| print_relation(w, d, a.labels()));
    let detail = format!(
        "transport defined {}, identity {}, admissible failure {:?}, relation failure {:?}",
        r.transport_defined, r.transport_is_identity, r.admissible_failure, r.relation_failure
    );
    if r.ok {
        report.pass(name, (1, r.checked_to), detail);
    } else {
        report.fail(name, (1, r.checked_to), witness, detail);
    }
}

fn twisted<F: Field>(cmd: &Command, s: &[QuantumSpace<F>], sig: &Sigmas<F>, report: &mut Report) -> Result<Computed, Usage> {
    Ok(match cmd {
        Command::Twist { .. } => {
            if sig.a.is_none() {
                return Err(Usage("twist needs --sigma-a or --sigma".into()));
            }
            let theta = primitive(&sig.a, &s[0], "sigma-a")?;
            (|| {
                let adm = check_admissible(&s[0], &theta)?;
                report.check("admissible", (2, s[0].cutoff()), adm.primal(), format!("{adm:?}"));
                describe(&twist_space(&s[0], &theta)?)
            })()
        }
        Command::Cohom { .. } => {
            let (b, a) = (&s[0], &s[1]);
            let (ta, tb) = (primitive(&sig.a, a, "sigma-a")?, primitive(&sig.b, b, "sigma-b")?);
            (|| {
                let c = build_cohom(b, a, &ta, &tb)?;
                let coev = coevaluation_check(&c)?;
                let witness = coev.witness.as_ref().zip(coev.delta_failure).map(|(w, d)| print_relation(w, d, a.labels()));
                if coev.ok() {
                    report.pass("coevaluation", (1, coev.checked_to), "δ respects relations; untwisting identity holds");
                } else {
                    report.fail("coevaluation", (1, coev.checked_to), witness, format!("δ fails at {:?}, untwisting at {:?}", coev.delta_failure, coev.untwist_failure));
                }
                omega_record(report, "omega", &check_in_omega(&c.coevaluation_diagram(), &ta, &tb)?, a);
                describe(&c.space)
            })()
        }
        Command::Compose { .. } => {
            let (a, b, c) = (&s[0], &s[1], &s[2]);
            let ta = primitive(&sig.a, a, "sigma-a")?;
            let tb = primitive(&sig.b, b, "sigma-b")?;
            let tc = primitive(&sig.c, c, "sigma-c")?;
            (|| {
                let ab = build_cohom(b, a, &ta, &tb)?;
                let bc = build_cohom(c, b, &tb, &tc)?;
                let comp = ab.coevaluation_diagram().compose(&bc.coevaluation_diagram())?;
                omega_record(report, "composite-in-omega", &check_in_omega(&comp, &ta, &tc)?, a);
                let (ac, delta) = cocomposition(&ab, &bc)?;
                let m = delta.check_morphism()?;
                report.check("cocomposition-morphism", (2, m.checked_to), m.ok, format!("Δ: hom[C,A] → hom[B,A] ∘ hom[C,B], failing degree {:?}", m.failing_degree));
                let (text, value) = describe(&ac.space)?;
                let carrier = Arc::clone(&comp.h_space);
                Ok((format!("{text}\ncomposite carrier hilbert {:?}", carrier.hilbert()), json!({ "hom": value, "composite_hilbert": carrier.hilbert() })))
            })()
        }
        _ => unreachable!("dispatched elsewhere"),
    })
}

/// Field, generators, Hilbert series and minimal relations of a space.
pub fn describe<F: Field>(s: &QuantumSpace<F>) -> Computed {
    let mut rels = Vec::new();
    for d in 2..=s.cutoff() {
        for v in s.generators(d)? {
            rels.push((d, print_relation(&v, d, s.labels())));
        }
    }
    let mut text = format!("field {}\ngenerators {}\ncutoff {}\nhilbert {:?}\nrelations ({}):", F::NAME, s.labels().join(", "), s.cutoff(), s.hilbert(), rels.len());
    for (d, r) in &rels {
        text.push_str(&format!("\n  [{d}] {r}"));
    }
    let value = json!({
        "field": F::NAME,
        "generators": s.labels(),
        "cutoff": s.cutoff(),
        "hilbert": s.hilbert(),
        "relations": rels.iter().map(|(d, r)| json!({ "degree": d, "relation": r })).collect::<Vec<_>>(),
    });
    Ok((text, value))
}
