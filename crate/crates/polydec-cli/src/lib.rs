//! The `polydec` command line: argument parsing, dispatch and output formatting.

use std::fmt::Display;
use std::io::Write;

use clap::{Parser, Subcommand};
use polydec_core::additive::{self, SimilarityBounds};
use polydec_core::{addecomp, gendecomp, ratfun};
use polydec_core::{
    AdditivePoly, Compose, Decomposition, Error, Field, Poly, RationalFunction, Strategy,
};
use serde::{Deserialize, Serialize};

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code when no decomposition (or witness) exists.
pub const EXIT_NONE: i32 = 1;
/// Exit code for usage and input errors.
pub const EXIT_USAGE: i32 = 2;

/// The embedded self-test corpus.
pub const SELFTEST_CORPUS: &str = include_str!("../data/selftest.json");

#[derive(Parser, Debug)]
#[command(
    name = "polydec",
    version,
    about = "Functional decomposition of polynomials over finite fields"
)]
struct Cli {
    /// Field spec: GF(p), GF(p^e) or GF(p)[g1]/(m1)[g2]/(m2)...
    #[arg(long, global = true)]
    field: Option<String>,
    /// Decomposition strategy: tame, sep, irred or additive.
    #[arg(long, global = true)]
    strategy: Option<String>,
    /// Comma-separated degree shape, outermost first.
    #[arg(long, global = true)]
    shape: Option<String>,
    /// Maximum number of results to print.
    #[arg(long, global = true)]
    limit: Option<usize>,
    /// Seed for randomized factoring.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Reject polynomial inputs with terms at non p-power exponents.
    #[arg(long, global = true)]
    assert_additive: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Compose polynomials or rational functions, outermost first.
    Compose {
        #[arg(required = true, num_args = 2..)]
        inputs: Vec<String>,
    },
    /// Decompose with a given shape and strategy.
    Decompose { input: String },
    /// One complete decomposition.
    Complete { input: String },
    /// All complete decompositions of an additive polynomial.
    AllComplete { input: String },
    /// Greatest common right component of two additive polynomials.
    Meet { f: String, g: String },
    /// Least common left multiple of two additive polynomials.
    Join { f: String, g: String },
    /// The transformation f ▷ g.
    Transform { f: String, g: String },
    /// Decide similarity of two additive polynomials.
    Similar { f: String, g: String },
    /// All transmutations of f by g.
    Transmute { f: String, g: String },
    /// Minimal additive multiple of a polynomial.
    Minaddmult { input: String },
    /// An indecomposable basis of a completely reducible additive polynomial.
    Basis { input: String },
    /// Subspace and flag counts in Z_p^nu.
    Counts { nu: usize, sigma: usize },
    /// The i-th Chebyshev polynomial.
    Chebyshev { index: usize },
    /// Absolute decomposition into p-linear factors over an extension tower.
    Absdec { input: String },
    /// Rational function decomposition with shape rN,rD,sN,sD.
    Ratdec { input: String },
    /// Replay the embedded corpus of worked examples.
    Selftest,
}

/// One record of the self-test corpus.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SelftestCase {
    pub argv: Vec<String>,
    pub expect_stdout: String,
    pub expect_exit: i32,
    pub citation: String,
}

#[derive(Serialize)]
struct DecJson<'a> {
    target: String,
    field: String,
    factors: Vec<String>,
    complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    tower: Option<&'a str>,
}

#[derive(Serialize)]
struct ValueJson<'a> {
    field: String,
    result: &'a serde_json::Value,
}

enum Failure {
    Usage(String),
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn field(&self) -> std::result::Result<Field, Failure> {
        let spec = self
            .cli
            .field
            .as_deref()
            .ok_or_else(|| Failure::Usage("--field is required".into()))?;
        Ok(Field::parse(spec)?)
    }

    fn poly(&self, field: &Field, s: &str) -> std::result::Result<Poly, Failure> {
        if self.cli.assert_additive {
            Ok(AdditivePoly::parse(field, s)?.to_poly())
        } else {
            Ok(Poly::parse(field, s)?)
        }
    }

    fn additive(&self, field: &Field, s: &str) -> std::result::Result<AdditivePoly, Failure> {
        Ok(AdditivePoly::parse(field, s)?)
    }

    fn shape(&self) -> std::result::Result<Vec<usize>, Failure> {
        let s = self
            .cli
            .shape
            .as_deref()
            .ok_or_else(|| Failure::Usage("--shape is required".into()))?;
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Failure::Usage(format!("bad shape entry {t:?}")))
            })
            .collect()
    }

    fn strategy(&self) -> std::result::Result<Strategy, Failure> {
        match self.cli.strategy.as_deref() {
            None => Ok(Strategy::Separated),
            Some(s) => s
                .parse()
                .map_err(|_| Failure::Usage(format!("unknown strategy {s:?}"))),
        }
    }

    fn limit<T>(&self, mut v: Vec<T>) -> Vec<T> {
        if let Some(n) = self.cli.limit {
            v.truncate(n);
        }
        v
    }

    fn line(&mut self, s: impl Display) {
        let _ = writeln!(self.out, "{s}");
    }

    fn value(&mut self, field: &Field, v: serde_json::Value, text: impl Display) {
        if self.cli.json {
            let j = ValueJson {
                field: field.to_string(),
                result: &v,
            };
            self.line(serde_json::to_string(&j).expect("serializable"));
        } else {
            self.line(text);
        }
    }

    fn decomposition<P: Display + Compose>(
        &mut self,
        field: &Field,
        d: &Decomposition<P>,
        complete: bool,
        tower: Option<&str>,
    ) {
        if self.cli.json {
            let j = DecJson {
                target: d.target().to_string(),
                field: field.to_string(),
                factors: d.factors().iter().map(ToString::to_string).collect(),
                complete,
                tower,
            };
            self.line(serde_json::to_string(&j).expect("serializable"));
        } else {
            self.line(d);
        }
    }

    fn decompositions<P: Display + Compose>(
        &mut self,
        field: &Field,
        ds: Vec<Decomposition<P>>,
        complete: bool,
    ) -> i32 {
        let ds = self.limit(ds);
        if ds.is_empty() {
            return self.none();
        }
        for d in &ds {
            self.decomposition(field, d, complete, None);
        }
        EXIT_OK
    }

    fn none(&mut self) -> i32 {
        if self.cli.json {
            self.line("[]");
        } else {
            self.line("no decomposition");
        }
        EXIT_NONE
    }
}

/// Runs `polydec` on `argv` (including the program name), writing results to `out`
/// and diagnostics to `err`, and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let mut ctx = Ctx { cli: &cli, out };
    match dispatch(&mut ctx) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(ctx: &mut Ctx<'_>) -> Outcome {
    let cli = ctx.cli;
    let seed = cli.seed;
    match &cli.cmd {
        Cmd::Compose { inputs } => {
            let field = ctx.field()?;
            if inputs.iter().any(|s| s.contains('/')) {
                let fs = inputs
                    .iter()
                    .map(|s| RationalFunction::parse(&field, s))
                    .collect::<polydec_core::Result<Vec<_>>>()?;
                let r = fs[1..].iter().fold(fs[0].clone(), |acc, h| acc.compose(h));
                ctx.value(&field, r.to_string().into(), &r);
            } else {
                let ps = inputs
                    .iter()
                    .map(|s| ctx.poly(&field, s))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                let r = polydec_core::compose_all(&ps);
                ctx.value(&field, r.to_string().into(), &r);
            }
            Ok(EXIT_OK)
        }
        Cmd::Decompose { input } => {
            let field = ctx.field()?;
            let f = ctx.poly(&field, input)?;
            let shape = ctx.shape()?;
            let ds = gendecomp::ord_fact_decomp(&f, &shape, ctx.strategy()?, seed)?;
            Ok(ctx.decompositions(&field, ds, false))
        }
        Cmd::Complete { input } => {
            let field = ctx.field()?;
            let strategy = ctx.strategy()?;
            if strategy == Strategy::Additive {
                let f = ctx.additive(&field, input)?;
                let d = addecomp::complete_decomposition(&f, seed)?;
                ctx.decomposition(&field, &d, true, None);
            } else {
                let f = ctx.poly(&field, input)?;
                let d = gendecomp::first_complete(&f, strategy, seed)?;
                ctx.decomposition(&field, &d, true, None);
            }
            Ok(EXIT_OK)
        }
        Cmd::AllComplete { input } => {
            let field = ctx.field()?;
            let f = ctx.additive(&field, input)?;
            let ds = addecomp::all_complete_decompositions(&f, cli.limit, seed)?;
            Ok(ctx.decompositions(&field, ds, true))
        }
        Cmd::Meet { f, g } | Cmd::Join { f, g } | Cmd::Transform { f, g } => {
            let field = ctx.field()?;
            let (f, g) = (ctx.additive(&field, f)?, ctx.additive(&field, g)?);
            let r = match &cli.cmd {
                Cmd::Meet { .. } => f.meet(&g)?,
                Cmd::Join { .. } => f.join(&g)?,
                _ => f.transform(&g)?,
            };
            ctx.value(&field, r.to_string().into(), &r);
            Ok(EXIT_OK)
        }
        Cmd::Similar { f, g } => {
            let field = ctx.field()?;
            let (f, g) = (ctx.additive(&field, f)?, ctx.additive(&field, g)?);
            match additive::is_similar(&f, &g, SimilarityBounds::default())? {
                Some(w) => {
                    let j = serde_json::json!({"similar": true, "u": w.u.to_string(), "scale": w.scale.to_string()});
                    ctx.value(
                        &field,
                        j,
                        format!("similar: u = {}, scale = {}", w.u, w.scale),
                    );
                    Ok(EXIT_OK)
                }
                None => {
                    ctx.value(&field, serde_json::json!({"similar": false}), "not similar");
                    Ok(EXIT_NONE)
                }
            }
        }
        Cmd::Transmute { f, g } => {
            let field = ctx.field()?;
            let (f, g) = (ctx.additive(&field, f)?, ctx.additive(&field, g)?);
            let target = f.compose(&g);
            let ds = additive::transmutable(&f, &g, seed)?
                .into_iter()
                .map(|(gb, fb)| Decomposition::new(target.clone(), vec![gb, fb]))
                .collect::<polydec_core::Result<Vec<_>>>()?;
            Ok(ctx.decompositions(&field, ds, false))
        }
        Cmd::Minaddmult { input } => {
            let field = ctx.field()?;
            let f = ctx.poly(&field, input)?;
            let r = additive::min_add_mult(&f)?;
            ctx.value(&field, r.to_string().into(), &r);
            Ok(EXIT_OK)
        }
        Cmd::Basis { input } => {
            let field = ctx.field()?;
            let f = ctx.additive(&field, input)?;
            match addecomp::indec_basis(&f, seed)? {
                Some(b) => {
                    let items: Vec<String> = b.iter().map(ToString::to_string).collect();
                    let text = items.join("\n");
                    ctx.value(&field, items.into(), text);
                    Ok(EXIT_OK)
                }
                None => {
                    ctx.value(&field, serde_json::Value::Null, "not completely reducible");
                    Ok(EXIT_NONE)
                }
            }
        }
        Cmd::Counts { nu, sigma } => {
            let field = ctx.field()?;
            let c = additive::counts(field.p(), *nu, *sigma)?;
            let containing = c.containing.map_or("-".to_string(), |t| t.to_string());
            let j = serde_json::json!({
                "subspaces": c.subspaces.to_string(),
                "containing": c.containing.map(|t| t.to_string()),
                "flags": c.flags.to_string(),
            });
            let text = format!(
                "subspaces: {}\ncontaining: {containing}\nflags: {}",
                c.subspaces, c.flags
            );
            ctx.value(&field, j, text);
            Ok(EXIT_OK)
        }
        Cmd::Chebyshev { index } => {
            let field = ctx.field()?;
            let t = Poly::chebyshev(*index, &field);
            ctx.value(&field, t.to_string().into(), &t);
            Ok(EXIT_OK)
        }
        Cmd::Absdec { input } => {
            let field = ctx.field()?;
            let f = ctx.additive(&field, input)?;
            let (tower, d) = addecomp::abs_decompose(&f, seed)?;
            let tower = tower.to_string();
            if cli.json {
                ctx.decomposition(&field, &d, true, Some(&tower));
            } else {
                ctx.line(format!("over {tower}"));
                ctx.line(&d);
            }
            Ok(EXIT_OK)
        }
        Cmd::Ratdec { input } => {
            let field = ctx.field()?;
            let f = RationalFunction::parse(&field, input)?;
            let shape = ctx.shape()?;
            let [rn, rd, sn, sd] = shape[..] else {
                return Err(Failure::Usage("ratdec --shape takes rN,rD,sN,sD".into()));
            };
            let pairs = ratfun::general_rat_dec(&f, (rn, rd, sn, sd), seed)?;
            let ds = pairs
                .into_iter()
                .map(|(g, h)| Decomposition::new(f.clone(), vec![g, h]))
                .collect::<polydec_core::Result<Vec<_>>>()?;
            Ok(ctx.decompositions(&field, ds, false))
        }
        Cmd::Selftest => selftest(ctx),
    }
}

/// Parses the self-test corpus.
pub fn selftest_cases() -> serde_json::Result<Vec<SelftestCase>> {
    serde_json::from_str(SELFTEST_CORPUS)
}

fn selftest(ctx: &mut Ctx<'_>) -> Outcome {
    let cases = selftest_cases().map_err(|e| Failure::Usage(format!("corrupt corpus: {e}")))?;
    let mut failed = 0;
    for case in &cases {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("polydec".to_string()).chain(case.argv.iter().cloned());
        let code = run(argv, &mut out, &mut err);
        let stdout = String::from_utf8_lossy(&out);
        let ok = code == case.expect_exit && stdout == case.expect_stdout;
        if !ok {
            failed += 1;
        }
        ctx.line(format!(
            "{} {} ({})",
            if ok { "PASS" } else { "FAIL" },
            case.argv.join(" "),
            case.citation
        ));
        if !ok {
            ctx.line(format!(
                "  expected exit {} stdout {:?}, got exit {code} stdout {stdout:?}",
                case.expect_exit, case.expect_stdout
            ));
        }
    }
    ctx.line(format!("{}/{} passed", cases.len() - failed, cases.len()));
    Ok(if failed == 0 { EXIT_OK } else { EXIT_NONE })
}
