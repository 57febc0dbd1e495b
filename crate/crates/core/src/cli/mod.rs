//! Command-line front end: argument parsing, dispatch, budgets and report
//! output.
//!
//! Exit codes: 0 success, 1 verified violation, 2 usage error, 3 budget or
//! precision exhausted.

pub mod golden;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;

use crate::algebra::Field;
use crate::dirichlet::{
    di_check, dirichlet_solve, verify_system, weight_vectors, DirichletSolution, Epsilon, LinearFormsY, WeightVector,
};
use crate::error::{Error, Result};
use crate::exterior::{check_norm_like, NormLikeConfig};
use crate::goodness::constants::parse_ratio;
use crate::goodness::nonplanar::MarginVerdict;
use crate::goodness::{
    cg_good_check, coefficient_grid, di_measure_probe, epsilon0, federer_report, nonplanar_margin, prop_instance_check,
    sub_balls, PolyMap, SymbolicReal, UniPoly,
};
use crate::lattice::{flow_trace, lambda1_log, scale_to_poly, weak_popov, LatticeBasis};
use crate::laurent::{Ball, DEFAULT_PREC};

#[derive(Parser, Debug)]
#[command(name = "ffdirichlet", version, about = "Exact Diophantine approximation over F_q((1/T))")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Flags shared by every subcommand.
#[derive(Args, Debug, Clone, Serialize)]
pub struct Common {
    /// Order of the base field F_q.
    #[arg(long, global = true, default_value_t = 2)]
    pub q: u32,
    /// Extension degree r with q = p^r.
    #[arg(long, global = true)]
    pub r: Option<u32>,
    /// Irreducible modulus over Z/p, coefficients in ascending order (e.g. 1,1,1).
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    /// Working precision (coefficient places) of random inputs.
    #[arg(long, global = true, default_value_t = DEFAULT_PREC)]
    pub prec: i64,
    /// Cap on enumerated candidates or visited cylinders.
    #[arg(long, global = true, default_value_t = 1 << 24)]
    pub budget: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dirichlet systems of linear forms.
    #[command(subcommand)]
    Dirichlet(DirichletCmd),
    /// Shortest vectors of lattices over F_q[T].
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Lattices along the diagonal flow.
    #[command(subcommand)]
    Flow(FlowCmd),
    /// Norms of submodules via exterior powers.
    #[command(subcommand)]
    Exterior(ExteriorCmd),
    /// Good-function, Federer and nonplanarity checks.
    #[command(subcommand)]
    Good(GoodCmd),
    /// Exact measures along a polynomial curve.
    #[command(subcommand)]
    Measure(MeasureCmd),
    /// Explicit constants.
    #[command(subcommand)]
    Consts(ConstsCmd),
    /// Recorded scenarios.
    #[command(subcommand)]
    Golden(GoldenCmd),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct FormsArgs {
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Matrix of Laurent literals: rows split by `|`, entries by `,`.
    #[arg(long = "Y", conflicts_with = "random")]
    pub y: Option<String>,
    /// Draw Y at random from --seed and --prec.
    #[arg(long)]
    pub random: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct WeightArgs {
    /// Weight vector, e.g. 2,1,1 (repeatable).
    #[arg(long)]
    pub t: Vec<String>,
    /// Every balanced t with lo <= ||t|| <= hi, written lo..hi.
    #[arg(long)]
    pub window: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum DirichletCmd {
    /// A witness of the plain system for each t.
    Solve {
        #[command(flatten)]
        forms: FormsArgs,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Solvability of the epsilon-improved system for each t.
    Improve {
        #[command(flatten)]
        forms: FormsArgs,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long)]
        eps: String,
    },
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct BasisArgs {
    /// Rows split by `|`, entries by `,`; or `identity`.
    #[arg(long)]
    pub basis: String,
    /// Rank for `identity`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Truncation guard.
    #[arg(long, default_value_t = 16)]
    pub guard: i64,
}

#[derive(Subcommand, Debug)]
pub enum LatticeCmd {
    /// Log-norm of a shortest nonzero vector.
    Lambda1 {
        #[command(flatten)]
        basis: BasisArgs,
    },
    /// Weak Popov form of the scaled basis.
    Reduce {
        #[command(flatten)]
        basis: BasisArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum FlowCmd {
    /// `t;lambda1_log;in_K_eps` along a list of weight vectors.
    Trace {
        #[command(flatten)]
        forms: FormsArgs,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, default_value = "e^-1")]
        eps: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExteriorCmd {
    /// Sample submodules and check the norm-like properties with constant 1.
    CheckNormlike {
        /// Largest n (the ambient rank is n + 1).
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        deg: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Field orders to sample from (default: --q).
        #[arg(long)]
        fields: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum GoodCmd {
    /// The (C, alpha)-good inequality on a family of polynomials and balls.
    Check {
        /// Polynomial in x (repeatable); default is the coefficient grid.
        #[arg(long)]
        phi: Vec<String>,
        #[arg(long, default_value_t = 2)]
        x_deg: usize,
        #[arg(long, default_value_t = 1)]
        coef_deg: usize,
        #[arg(long, default_value = "B(0; e^0)")]
        ball: String,
        /// Radii e^k of the tested sub-balls.
        #[arg(long, default_value = "-1,-2,-3,-4", allow_hyphen_values = true)]
        radii: String,
        /// Test eps = e^-1, ..., e^-eps_max.
        #[arg(long, default_value_t = 6)]
        eps_max: i64,
        #[arg(long = "C", default_value = "2")]
        c: String,
        #[arg(long, default_value = "1/2")]
        alpha: String,
    },
    /// Measure ratio of dilated balls.
    Federer {
        #[arg(long, default_value_t = 1)]
        steps: u32,
        #[arg(long = "D", default_value = "e^2")]
        d: String,
    },
    /// Nonplanarity margin delta and the thresholds M and s = nM.
    Margin {
        #[arg(long, default_value = "x, x^2")]
        map: String,
        #[arg(long, default_value = "B[0; e^0]")]
        ball: String,
        #[arg(long, default_value_t = 3)]
        depth: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum MeasureCmd {
    /// Fraction of points improvable for every t up to each bound.
    Probe {
        #[arg(long, default_value = "x, x^2")]
        map: String,
        #[arg(long, default_value = "B[0; e^0]")]
        ball: String,
        #[arg(long, default_value = "e^-3")]
        eps: String,
        #[arg(long, default_value_t = 12)]
        depth: i64,
        /// Bounds S, as lo..hi or a comma list.
        #[arg(long, default_value = "4..8")]
        bounds: String,
    },
    /// Exact measure of points whose flowed lattice leaves K_eps.
    PropInstance {
        #[arg(long, default_value = "x, x^2")]
        map: String,
        #[arg(long, default_value = "B[0; e^0]")]
        ball: String,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, default_value = "e^-3")]
        eps: String,
        #[arg(long = "Ctilde", default_value = "6*e^12")]
        c_tilde: String,
        #[arg(long, default_value = "1/2")]
        alpha: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConstsCmd {
    /// `C~ = (n+1) C D^(2(n+1))` and `eps0 = C~^(-1/alpha)`.
    Epsilon0 {
        #[arg(long)]
        n: u32,
        #[arg(long = "C")]
        c: String,
        #[arg(long)]
        alpha: String,
        #[arg(long = "D")]
        d: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum GoldenCmd {
    /// Re-execute a suite and diff it against its recorded file.
    Run {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Record the current output instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::GoldenMismatch { .. } => 1,
            Error::BudgetExceeded { .. } | Error::PrecisionExhausted(_) | Error::GuardTooSmall { .. } => 3,
            _ => 2,
        }
    }
}

/// What a subcommand produced.
struct Outcome {
    body: String,
    violation: bool,
    /// Inconclusive for lack of depth or precision.
    exhausted: bool,
}

impl Outcome {
    fn ok(body: String) -> Outcome {
        Outcome { body, violation: false, exhausted: false }
    }
}

#[derive(Serialize)]
struct RunConfig<'a> {
    argv: Vec<String>,
    field: String,
    #[serde(flatten)]
    common: &'a Common,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    config: &'a RunConfig<'a>,
    report: T,
}

struct Ctx<'a> {
    field: Field,
    common: &'a Common,
    config: RunConfig<'a>,
}

impl Ctx<'_> {
    fn format(&self, default: Format) -> Format {
        self.common.format.unwrap_or(default)
    }

    fn json<T: Serialize>(&self, report: T) -> String {
        let mut s = serde_json::to_string_pretty(&Envelope { config: &self.config, report }).expect("serializable report");
        s.push('\n');
        s
    }

    fn config_line(&self) -> String {
        serde_json::to_string(&self.config).expect("serializable config")
    }
}

/// Run the command line `args` (program name first) and return the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let argv: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, argv) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, argv: Vec<String>) -> Result<i32> {
    let field = resolve_field(&cli.common)?;
    let config = RunConfig { argv, field: field_name(&field), common: &cli.common };
    let ctx = Ctx { field, common: &cli.common, config };
    let outcome = dispatch(&ctx, &cli.command)?;
    match &cli.common.out {
        Some(path) => {
            fs::write(path, &outcome.body).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?
        }
        None => print!("{}", outcome.body),
    }
    if !outcome.body.starts_with('{') {
        eprintln!("config: {}", ctx.config_line());
    }
    Ok(if outcome.violation {
        1
    } else if outcome.exhausted {
        3
    } else {
        0
    })
}

fn field_name(f: &Field) -> String {
    match f.modulus() {
        None => format!("F_{}", f.q()),
        Some(m) => format!("F_{}^{} mod {m:?}", f.p(), f.r()),
    }
}

/// The base field from `--q`, `--r` and `--modulus`.
pub fn resolve_field(c: &Common) -> Result<Field> {
    let modulus = c
        .modulus
        .as_deref()
        .map(|m| {
            m.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Usage(format!("bad modulus coefficient {x:?}"))))
                .collect::<Result<Vec<u32>>>()
        })
        .transpose()?;
    let r = match (&modulus, c.r) {
        (Some(m), Some(r)) if m.len() != r as usize + 1 => {
            return Err(Error::Usage(format!("modulus of degree {} does not match --r {r}", m.len() - 1)))
        }
        (Some(m), _) => Some(m.len() as u32 - 1),
        (None, r) => r,
    };
    let field = match r {
        None => Field::with_order(c.q)?,
        Some(r) => {
            let p = (2..=c.q)
                .find(|p| p.checked_pow(r) == Some(c.q))
                .ok_or_else(|| Error::Usage(format!("q = {} is not an r-th power for r = {r}", c.q)))?;
            Field::new(p, r, if r == 1 { None } else { modulus })?
        }
    };
    Ok(field)
}

/// `lo..hi` or a comma-separated list.
pub fn parse_range(s: &str) -> Result<Vec<i64>> {
    let bad = || Error::Usage(format!("expected lo..hi or a comma list, got {s:?}"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        return Ok((lo..=hi).collect());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
}

fn forms(ctx: &Ctx, a: &FormsArgs) -> Result<LinearFormsY> {
    match (&a.y, a.random) {
        (Some(text), _) => {
            let y = LinearFormsY::parse(&ctx.field, text)?;
            if (y.m(), y.n()) != (a.m, a.n) {
                return Err(Error::Usage(format!("Y is {}x{}, expected --m {} --n {}", y.m(), y.n(), a.m, a.n)));
            }
            Ok(y)
        }
        (None, true) => Ok(LinearFormsY::random(&ctx.field, a.m, a.n, ctx.common.prec, ctx.common.seed)),
        (None, false) => Err(Error::Usage("give --Y or --random".into())),
    }
}

fn weights(m: usize, n: usize, a: &WeightArgs) -> Result<Vec<WeightVector>> {
    let mut out = a.t.iter().map(|t| WeightVector::parse(m, t)).collect::<Result<Vec<_>>>()?;
    if let Some(w) = &a.window {
        let norms = parse_range(w)?;
        let (lo, hi) = (*norms.first().unwrap_or(&0), *norms.last().unwrap_or(&-1));
        out.extend(weight_vectors(m, n, hi).filter(|t| t.norm() >= lo));
    }
    if out.is_empty() {
        return Err(Error::Usage("give at least one --t or a --window".into()));
    }
    Ok(out)
}

fn basis(ctx: &Ctx, a: &BasisArgs) -> Result<LatticeBasis> {
    if a.basis.trim() == "identity" {
        let k = a.k.ok_or_else(|| Error::Usage("--basis identity needs --k".into()))?;
        return Ok(LatticeBasis::identity(&ctx.field, k));
    }
    LatticeBasis::parse(&ctx.field, &a.basis)
}

fn ratio(s: &str) -> Result<Ratio<i64>> {
    parse_ratio(s).map_err(|e| Error::Usage(e.to_string()))
}

#[derive(Serialize)]
struct SystemRow {
    t: String,
    solvable: bool,
    witness_p: Vec<String>,
    witness_q: Vec<String>,
    verified: Option<bool>,
}

impl SystemRow {
    fn new(t: &WeightVector, sol: Option<&DirichletSolution>, verified: Option<bool>) -> SystemRow {
        let strings = |v: &[crate::algebra::Poly]| v.iter().map(ToString::to_string).collect();
        SystemRow {
            t: t.to_string(),
            solvable: sol.is_some(),
            witness_p: sol.map_or_else(Vec::new, |s| strings(&s.p)),
            witness_q: sol.map_or_else(Vec::new, |s| strings(&s.q)),
            verified,
        }
    }

    fn csv(&self) -> String {
        format!("{};{};{};{}", self.t, self.solvable, self.witness_p.join(","), self.witness_q.join(","))
    }
}

fn system_rows(ctx: &Ctx, rows: &[SystemRow], extra: Option<(&str, bool)>) -> String {
    match ctx.format(Format::Json) {
        Format::Csv | Format::Text => {
            let mut s = String::from("t;solvable;witness_p;witness_q\n");
            for r in rows {
                s.push_str(&r.csv());
                s.push('\n');
            }
            s
        }
        Format::Json => match extra {
            None => ctx.json(rows),
            Some((key, v)) => ctx.json(serde_json::json!({ "rows": rows, key: v })),
        },
    }
}

fn dispatch(ctx: &Ctx, cmd: &Command) -> Result<Outcome> {
    let budget = ctx.common.budget;
    match cmd {
        Command::Dirichlet(DirichletCmd::Solve { forms: fa, weights: wa }) => {
            let y = forms(ctx, fa)?;
            let mut rows = Vec::new();
            let mut violation = false;
            for t in weights(fa.m, fa.n, wa)? {
                let sol = dirichlet_solve(&y, &t)?;
                let ok = verify_system(&y, &t, &sol, None)?;
                violation |= !ok;
                rows.push(SystemRow::new(&t, Some(&sol), Some(ok)));
            }
            Ok(Outcome { body: system_rows(ctx, &rows, None), violation, exhausted: false })
        }
        Command::Dirichlet(DirichletCmd::Improve { forms: fa, weights: wa, eps }) => {
            let y = forms(ctx, fa)?;
            let eps = Epsilon::parse(eps)?;
            let mut rows = Vec::new();
            for t in weights(fa.m, fa.n, wa)? {
                let sol = di_check(&y, &t, eps, budget as u128)?;
                let ok = sol.as_ref().map(|s| verify_system(&y, &t, s, Some(eps))).transpose()?;
                rows.push(SystemRow::new(&t, sol.as_ref(), ok));
            }
            let improvable = rows.iter().all(|r| r.solvable);
            Ok(Outcome::ok(system_rows(ctx, &rows, Some(("improvable", improvable)))))
        }
        Command::Lattice(LatticeCmd::Lambda1 { basis: ba }) => {
            let b = basis(ctx, ba)?;
            let l = lambda1_log(&b, ba.guard)?;
            Ok(Outcome::ok(match ctx.format(Format::Text) {
                Format::Json => ctx.json(serde_json::json!({ "lambda1_log": l, "guard": ba.guard })),
                _ => format!("{l}\n"),
            }))
        }
        Command::Lattice(LatticeCmd::Reduce { basis: ba }) => {
            let b = basis(ctx, ba)?;
            let scaled = scale_to_poly(&b, ba.guard)?;
            let (form, degs) = weak_popov(&scaled.matrix)?;
            let rows: Vec<Vec<String>> =
                (0..form.rows()).map(|i| form.row(i).iter().map(ToString::to_string).collect()).collect();
            let l = lambda1_log(&b, ba.guard)?;
            Ok(Outcome::ok(ctx.json(serde_json::json!({
                "shift": scaled.shift,
                "lossy": scaled.lossy,
                "weak_popov": rows,
                "row_degrees": degs,
                "lambda1_log": l,
            }))))
        }
        Command::Flow(FlowCmd::Trace { forms: fa, weights: wa, eps }) => {
            let y = forms(ctx, fa)?;
            let eps = Epsilon::parse(eps)?;
            let points = flow_trace(&y, &weights(fa.m, fa.n, wa)?, eps)?;
            Ok(Outcome::ok(match ctx.format(Format::Csv) {
                Format::Json => ctx.json(&points),
                _ => {
                    let mut s = String::from("t;lambda1_log;in_K_eps\n");
                    for p in &points {
                        s.push_str(&p.csv_row());
                        s.push('\n');
                    }
                    s
                }
            }))
        }
        Command::Exterior(ExteriorCmd::CheckNormlike { n, deg, samples, fields }) => {
            let fields = match fields {
                Some(list) => parse_range(list)?.into_iter().map(|q| q as u32).collect(),
                None => vec![ctx.field.q()],
            };
            let config = NormLikeConfig { fields, max_n: *n, max_deg: *deg, samples: *samples, seed: ctx.common.seed };
            let report = check_norm_like(&config)?;
            Ok(Outcome { violation: !report.passed(), body: ctx.json(&report), exhausted: false })
        }
        Command::Good(GoodCmd::Check { phi, x_deg, coef_deg, ball, radii, eps_max, c, alpha }) => {
            let family = if phi.is_empty() {
                coefficient_grid(&ctx.field, *x_deg, *coef_deg)
            } else {
                phi.iter().map(|p| UniPoly::parse(&ctx.field, p)).collect::<Result<_>>()?
            };
            let balls = sub_balls(&Ball::parse(&ctx.field, ball)?, &parse_range(radii)?, budget as u128)?;
            let eps: Vec<Epsilon> = (1..=*eps_max).map(Epsilon::new).collect::<Result<_>>()?;
            let report = cg_good_check(&family, ratio(c)?, ratio(alpha)?, &balls, &eps, budget)?;
            Ok(Outcome { violation: !report.passed(), body: ctx.json(&report), exhausted: false })
        }
        Command::Good(GoodCmd::Federer { steps, d }) => {
            let report = federer_report(&ctx.field, *steps, &SymbolicReal::parse(d)?);
            Ok(Outcome { violation: !report.verdict, body: ctx.json(&report), exhausted: false })
        }
        Command::Good(GoodCmd::Margin { map, ball, depth }) => {
            let map = PolyMap::parse(&ctx.field, map)?;
            let report = nonplanar_margin(&map, &Ball::parse(&ctx.field, ball)?, *depth, budget)?;
            Ok(Outcome {
                violation: report.verdict == MarginVerdict::Planar,
                exhausted: report.verdict == MarginVerdict::Inconclusive,
                body: ctx.json(&report),
            })
        }
        Command::Measure(MeasureCmd::Probe { map, ball, eps, depth, bounds }) => {
            let map = PolyMap::parse(&ctx.field, map)?;
            let curve = di_measure_probe(
                &map,
                &Ball::parse(&ctx.field, ball)?,
                Epsilon::parse(eps)?,
                &parse_range(bounds)?,
                *depth,
                budget as u128,
            )?;
            Ok(Outcome::ok(match ctx.format(Format::Csv) {
                Format::Json => ctx.json(&curve),
                _ => curve.to_csv(),
            }))
        }
        Command::Measure(MeasureCmd::PropInstance { map, ball, weights: wa, eps, c_tilde, alpha }) => {
            let map = PolyMap::parse(&ctx.field, map)?;
            let ball = Ball::parse(&ctx.field, ball)?;
            let eps = Epsilon::parse(eps)?;
            let c_tilde = SymbolicReal::parse(c_tilde)?;
            let alpha = ratio(alpha)?;
            let reports = weights(1, map.n(), wa)?
                .iter()
                .map(|t| prop_instance_check(&map, &ball, t, eps, &c_tilde, alpha, budget))
                .collect::<Result<Vec<_>>>()?;
            Ok(Outcome { violation: reports.iter().any(|r| !r.pass), body: ctx.json(&reports), exhausted: false })
        }
        Command::Consts(ConstsCmd::Epsilon0 { n, c, alpha, d }) => {
            let r = epsilon0(*n, ratio(c)?, ratio(alpha)?, &SymbolicReal::parse(d)?)?;
            Ok(Outcome::ok(match ctx.format(Format::Text) {
                Format::Json => ctx.json(&r),
                _ => format!("{}\n", r.eps0),
            }))
        }
        Command::Golden(GoldenCmd::Run { suite, dir, bless }) => {
            let dir = dir.clone().unwrap_or_else(golden::default_dir);
            golden::golden_run(suite, &dir, *bless, ctx.common.prec)?;
            let verb = if *bless { "recorded" } else { "pass" };
            Ok(Outcome::ok(format!("{suite}: {verb}\n")))
        }
    }
}
