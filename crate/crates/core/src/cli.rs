//! The `nncalc` command line. Every subcommand evaluates library functions
//! and emits one table as CSV or JSON.
//!
//! A run is fully described by a [`RunConfig`], which can be dumped with
//! `--dump-config` and replayed with `--config FILE`. The environment
//! variable `NNCALC_SEED` overrides `--seed`.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on numeric or domain
//! failures.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arithmetic::{mixed, Arithmetic, Generator, GeneratorConfig, Op};
use crate::calculus::{nn_derivative, nn_exp, nn_integral, nn_ln, NNFunction};
use crate::cosmo::{self, CosmologyParams};
use crate::error::Error;
use crate::escort::{self, EscortFamily};
use crate::kappa;
use crate::numeric::linspace;
use crate::selfcheck;
use crate::statmech::{self, EnergySpectrum, ProbabilityVector};
use crate::table::Table;

pub const SEED_ENV: &str = "NNCALC_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpArg {
    Add,
    Sub,
    Mul,
    Div,
}

impl From<OpArg> for Op {
    fn from(o: OpArg) -> Op {
        match o {
            OpArg::Add => Op::Add,
            OpArg::Sub => Op::Sub,
            OpArg::Mul => Op::Mul,
            OpArg::Div => Op::Div,
        }
    }
}

/// Preset maps `A`, applied as ordinary functions of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FuncArg {
    X,
    Square,
    Cube,
    Exp,
    Ln,
    Sin,
    Sqrt,
    Recip,
}

impl FuncArg {
    fn eval(self, x: f64) -> f64 {
        match self {
            FuncArg::X => x,
            FuncArg::Square => x * x,
            FuncArg::Cube => x * x * x,
            FuncArg::Exp => x.exp(),
            FuncArg::Ln => x.ln(),
            FuncArg::Sin => x.sin(),
            FuncArg::Sqrt => x.sqrt(),
            FuncArg::Recip => 1.0 / x,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyArg {
    Identity,
    Sine,
    Spin,
    Affine,
}

/// `name`, `name:key=value,...`, inline JSON, or a path to a JSON file.
fn parse_gen(s: &str) -> std::result::Result<GeneratorConfig, String> {
    let s = s.trim();
    let cfg = if s.starts_with('{') {
        serde_json::from_str(s).map_err(|e| format!("bad generator JSON: {e}"))?
    } else if s.ends_with(".json") {
        let text = fs::read_to_string(s).map_err(|e| format!("cannot read {s}: {e}"))?;
        serde_json::from_str(&text).map_err(|e| format!("bad generator JSON in {s}: {e}"))?
    } else {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut cfg = GeneratorConfig::new(name);
        for kv in rest.split(',').filter(|kv| !kv.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{kv}`"))?;
            let v: f64 = v.parse().map_err(|_| format!("bad number `{v}` for {k}"))?;
            cfg = cfg.with(k, v);
        }
        cfg
    };
    Generator::from_config(&cfg).map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn arith_of(cfg: &GeneratorConfig) -> crate::Result<Arithmetic> {
    Generator::from_config(cfg).map(Arithmetic::new)
}

/// Defaults of an argument struct, as clap would fill them in.
fn clap_defaults<T: Args + FromArgMatches>() -> T {
    let cmd = T::augment_args(clap::Command::new("defaults"));
    T::from_arg_matches(&cmd.get_matches_from(["defaults"])).expect("every argument has a default")
}

macro_rules! clap_default {
    ($($t:ty),*) => {$(
        impl Default for $t {
            fn default() -> Self {
                clap_defaults()
            }
        }
    )*};
}

/// Binary operation in a generated arithmetic, or a mixed operation when
/// the operands carry their own generators.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct ArithArgs {
    /// Generator of the result (and of both operands unless overridden).
    #[arg(long = "gen", default_value = "identity", value_parser = parse_gen)]
    pub generator: GeneratorConfig,
    #[arg(long, value_enum, default_value = "add")]
    pub op: OpArg,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub lhs: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub rhs: f64,
    /// Generator of the left operand.
    #[arg(long, value_parser = parse_gen)]
    pub lhs_gen: Option<GeneratorConfig>,
    /// Generator of the right operand.
    #[arg(long, value_parser = parse_gen)]
    pub rhs_gen: Option<GeneratorConfig>,
}

/// Non-Newtonian derivative of a preset map on a grid.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct DeriveArgs {
    /// Generator of the domain arithmetic.
    #[arg(long, default_value = "identity", value_parser = parse_gen)]
    pub dom: GeneratorConfig,
    /// Generator of the codomain arithmetic.
    #[arg(long, default_value = "identity", value_parser = parse_gen)]
    pub cod: GeneratorConfig,
    #[arg(long, value_enum, default_value = "x")]
    pub func: FuncArg,
    #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
    pub xmin: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    pub xmax: f64,
    #[arg(long, default_value_t = 100)]
    pub points: usize,
}

/// Non-Newtonian integral of a preset map.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct IntegrateArgs {
    #[arg(long, default_value = "identity", value_parser = parse_gen)]
    pub dom: GeneratorConfig,
    #[arg(long, default_value = "identity", value_parser = parse_gen)]
    pub cod: GeneratorConfig,
    #[arg(long, value_enum, default_value = "x")]
    pub func: FuncArg,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub lo: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub hi: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

/// Exp and Ln between two arithmetics on a grid.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct ExpLogArgs {
    #[arg(long, default_value = "identity", value_parser = parse_gen)]
    pub dom: GeneratorConfig,
    #[arg(long, default_value = "identity", value_parser = parse_gen)]
    pub cod: GeneratorConfig,
    #[arg(long, default_value_t = -2.0, allow_hyphen_values = true)]
    pub xmin: f64,
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub xmax: f64,
    #[arg(long, default_value_t = 41)]
    pub points: usize,
}

/// Tails of the two κ-exponentials of −x on a log grid.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct Fig1Args {
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub kappa: f64,
    #[arg(long, default_value_t = 0.01)]
    pub xmin: f64,
    #[arg(long, default_value_t = 1e4)]
    pub xmax: f64,
    #[arg(long, default_value_t = 200)]
    pub points: usize,
}

/// Rényi entropies of one distribution for several orders.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct EntropyArgs {
    /// Probabilities, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub p: Option<Vec<f64>>,
    /// Draw a random distribution with this many outcomes (uses the seed).
    #[arg(long)]
    pub random: Option<usize>,
    /// Orders q, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0.5,1,2,5")]
    pub q: Vec<f64>,
    /// Report bits instead of nats.
    #[arg(long)]
    pub bits: bool,
}

/// Kolmogorov–Nagumo mean and its rewriting with transformed probabilities.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct KnMeanArgs {
    #[arg(long = "gen", default_value = "identity", value_parser = parse_gen)]
    pub generator: GeneratorConfig,
    #[arg(long, value_delimiter = ',', default_value = "0.5,0.5")]
    pub p: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0,1", allow_hyphen_values = true)]
    pub a: Vec<f64>,
    /// Shift used for the translation check.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub shift: f64,
}

/// Maximum-entropy distribution with probabilities and energies in their
/// own arithmetics.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct MaxEntArgs {
    /// Arithmetic of the probabilities.
    #[arg(long = "prob-gen", default_value = "identity", value_parser = parse_gen)]
    pub prob_gen: GeneratorConfig,
    /// Arithmetic of the energies.
    #[arg(long = "energy-gen", default_value = "identity", value_parser = parse_gen)]
    pub energy_gen: GeneratorConfig,
    #[arg(long, value_delimiter = ',', default_value = "0,1", allow_hyphen_values = true)]
    pub energies: Vec<f64>,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub beta: f64,
    /// Emit C, α and the stationarity residual instead of the states.
    #[arg(long)]
    pub summary: bool,
}

/// Escort maps on a probability grid, or the large-n collapse of the affine
/// family.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct EscortArgs {
    #[arg(long, value_enum, default_value = "sine")]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, default_value_t = 3)]
    pub n: u32,
    #[arg(long, default_value_t = 11)]
    pub points: usize,
    /// Outcome counts for the collapse table, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ns: Option<Vec<u32>>,
    /// Probability used by the collapse table.
    #[arg(long, default_value_t = 0.9)]
    pub p: f64,
}

/// Hidden-variable integral against cos²((α−β)/2), or the rescaled
/// four-outcome normalization check.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct BellArgs {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 13)]
    pub points: usize,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Four joint probabilities for the rescaled check.
    #[arg(long, value_delimiter = ',')]
    pub p4: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value = "spin")]
    pub family: FamilyArg,
}

/// Scale factors with and without Λ, and the matched generator.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct CosmoArgs {
    #[arg(long, default_value_t = 0.3)]
    pub omega_m: f64,
    #[arg(long, default_value_t = 0.7)]
    pub omega_lambda: f64,
    /// Constant of the Λ-free equation; defaults to omega_m.
    #[arg(long)]
    pub omega: Option<f64>,
    /// Print κ = (3/2)√Ω_Λ to four decimals and stop.
    #[arg(long)]
    pub report_kappa: bool,
    #[arg(long, default_value_t = 0.05)]
    pub t_start: f64,
    #[arg(long, default_value_t = 3.0)]
    pub t_end: f64,
    #[arg(long, default_value_t = 10_000)]
    pub steps: usize,
    /// Emit every k-th RK4 sample.
    #[arg(long, default_value_t = 100)]
    pub every: usize,
    /// Time arithmetic; defaults to the matched generator.
    #[arg(long = "gen", value_parser = parse_gen)]
    pub generator: Option<GeneratorConfig>,
}

/// Randomized invariant suite.
#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[serde(default)]
pub struct SelfCheckArgs {
    #[arg(long, default_value_t = 100)]
    pub cases: usize,
}

clap_default!(
    ArithArgs,
    DeriveArgs,
    IntegrateArgs,
    ExpLogArgs,
    Fig1Args,
    EntropyArgs,
    KnMeanArgs,
    MaxEntArgs,
    EscortArgs,
    BellArgs,
    CosmoArgs,
    SelfCheckArgs
);

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "lowercase")]
pub enum Command {
    /// x ⊕ y, x ⊖ y, x ⊙ y, x ⊘ y in the arithmetic of a generator; mixed
    /// operands via --lhs-gen/--rhs-gen (the 2 + 2 = e⁴ construction).
    Arith(ArithArgs),
    /// DA/Dx = f_Y⁻¹(dÃ/dr) for a preset A between two arithmetics.
    Derive(DeriveArgs),
    /// ∫ A Dx = f_Y⁻¹(∫ Ã dr) for a preset A between two arithmetics.
    Integrate(IntegrateArgs),
    /// Exp = f_Y⁻¹(e^{f_X}) and Ln = f_X⁻¹(ln f_Y), with the round trip.
    Explog(ExpLogArgs),
    /// κ-exponentials e^{f_κ(−x)} and f_κ⁻¹(e^{f_κ(−x)}): distinct at small
    /// x, identical tails.
    Fig1(Fig1Args),
    /// Rényi entropies (Shannon at q = 1) of a distribution.
    Entropy(EntropyArgs),
    /// Kolmogorov–Nagumo mean f⁻¹(Σ p f(a)), its ⊕/⊙ form and the
    /// translation property.
    Knmean(KnMeanArgs),
    /// Maximum-entropy state p_k = f_X⁻¹(C e^{−β f_E(E_k)}).
    Maxent(MaxEntArgs),
    /// Escort maps preserving normalization for two and for n outcomes.
    Escort(EscortArgs),
    /// cos²((α−β)/2) as a non-Newtonian integral of a flat density, and the
    /// half-normalized four-outcome rescaling.
    Bell(BellArgs),
    /// Friedman scale factor with Λ versus the Λ-free non-Newtonian
    /// equation in the matched arithmetic (κ = (3/2)√Ω_Λ).
    Cosmo(CosmoArgs),
    /// Randomized invariant suite with pass/fail counts.
    Selfcheck(SelfCheckArgs),
}

/// A complete, replayable run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub seed: u64,
}

impl RunConfig {
    /// Pretty JSON with a fixed key order.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable config");
        let mut s = serde_json::to_string_pretty(&value).expect("serializable value");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "nncalc",
    version,
    about = "Arithmetics induced by generators: calculus, entropies, escorts and cosmology")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,
    /// Write the table here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for randomized subcommands; NNCALC_SEED takes precedence.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Replay a run from a JSON config file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Print the canonical JSON config of this run and stop.
    #[arg(long, global = true)]
    dump_config: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

enum Failure {
    Usage(String),
    Numeric(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(msg) => Failure::Usage(msg),
            other => Failure::Numeric(other),
        }
    }
}

/// Runs with the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    run_with(argv, &mut out, &mut err)
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    let result = resolve(cli).and_then(|(config, dump)| {
        if dump {
            out.write_all(config.to_canonical_json().as_bytes())
                .map_err(|e| Failure::Usage(e.to_string()))?;
            return Ok(0);
        }
        execute(&config, out)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Numeric(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn resolve(cli: Cli) -> Result<(RunConfig, bool), Failure> {
    let mut config = match (cli.config, cli.command) {
        (Some(path), None) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            RunConfig::from_json(&text)?
        }
        (None, Some(command)) => RunConfig {
            command,
            format: cli.format,
            output: cli.output,
            seed: cli.seed,
        },
        (None, None) => {
            return Err(Failure::Usage(format!(
                "a subcommand or --config is required\n\n{}",
                Cli::command().render_usage()
            )))
        }
        (Some(_), Some(_)) => {
            return Err(Failure::Usage("--config replaces the subcommand; give only one".into()))
        }
    };
    if let Ok(raw) = std::env::var(SEED_ENV) {
        config.seed = raw
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{SEED_ENV} must be an unsigned integer, got `{raw}`")))?;
    }
    Ok((config, cli.dump_config))
}

enum Output {
    Table(Table),
    Text(String),
}

fn execute(config: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut code = 0;
    let output = match &config.command {
        Command::Arith(a) => Output::Table(arith(a)?),
        Command::Derive(a) => Output::Table(derive(a)?),
        Command::Integrate(a) => Output::Table(integrate(a)?),
        Command::Explog(a) => Output::Table(explog(a)?),
        Command::Fig1(a) => Output::Table(kappa::tail_table(&kappa::fig1_table(
            a.xmin, a.xmax, a.points, a.kappa,
        )?)),
        Command::Entropy(a) => Output::Table(entropy(a, config.seed)?),
        Command::Knmean(a) => Output::Table(knmean(a)?),
        Command::Maxent(a) => Output::Table(maxent(a)?),
        Command::Escort(a) => Output::Table(escort_cmd(a)?),
        Command::Bell(a) => Output::Table(bell(a)?),
        Command::Cosmo(a) => cosmo_cmd(a)?,
        Command::Selfcheck(a) => {
            let report = selfcheck::run_suite(config.seed, a.cases);
            if report.iter().any(|c| c.failed > 0) {
                code = 2;
            }
            Output::Table(selfcheck::report_table(&report))
        }
    };
    let text = match output {
        Output::Text(s) => s,
        Output::Table(t) => match config.format {
            Format::Csv => t.to_csv(),
            Format::Json => t.to_json(),
        },
    };
    match &config.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(e.to_string()))?,
    }
    Ok(code)
}

fn arith(a: &ArithArgs) -> Result<Table, Failure> {
    let target = arith_of(&a.generator)?;
    let lhs = a.lhs_gen.as_ref().map(arith_of).transpose()?.unwrap_or_else(|| target.clone());
    let rhs = a.rhs_gen.as_ref().map(arith_of).transpose()?.unwrap_or_else(|| target.clone());
    let op = Op::from(a.op);
    let value = mixed(&target, op, &lhs, a.lhs, &rhs, a.rhs)?;
    let mut t = Table::new(["generator", "op", "lhs", "rhs", "result"]);
    t.push(vec![
        target.label().into(),
        op.symbol().into(),
        a.lhs.into(),
        a.rhs.into(),
        value.into(),
    ]);
    Ok(t)
}

fn grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, Failure> {
    if n < 2 || !(hi > lo) {
        return Err(Failure::Usage(format!(
            "grid needs xmin < xmax and at least 2 points (got [{lo}, {hi}], {n})"
        )));
    }
    Ok(linspace(lo, hi, n))
}

fn derive(a: &DeriveArgs) -> Result<Table, Failure> {
    let func = a.func;
    let f = NNFunction::new(arith_of(&a.dom)?, arith_of(&a.cod)?, move |x| func.eval(x));
    let mut t = Table::new(["x", "value", "derivative"]);
    for x in grid(a.xmin, a.xmax, a.points)? {
        t.push_nums([x, f.eval(x), nn_derivative(&f, x, None)?]);
    }
    Ok(t)
}

fn integrate(a: &IntegrateArgs) -> Result<Table, Failure> {
    let func = a.func;
    let f = NNFunction::new(arith_of(&a.dom)?, arith_of(&a.cod)?, move |x| func.eval(x));
    let value = nn_integral(&f, a.lo, a.hi, Some(a.tol))?;
    let mut t = Table::new(["lo", "hi", "integral"]);
    t.push_nums([a.lo, a.hi, value]);
    Ok(t)
}

fn explog(a: &ExpLogArgs) -> Result<Table, Failure> {
    let (x, y) = (arith_of(&a.dom)?, arith_of(&a.cod)?);
    let mut t = Table::new(["x", "exp", "ln_of_exp"]);
    for v in grid(a.xmin, a.xmax, a.points)? {
        let e = nn_exp(&x, &y, v)?;
        t.push_nums([v, e, nn_ln(&x, &y, e)?]);
    }
    Ok(t)
}

fn entropy(a: &EntropyArgs, seed: u64) -> Result<Table, Failure> {
    let p = match (&a.p, a.random) {
        (Some(p), None) => ProbabilityVector::new(p.clone())?,
        (None, Some(n)) if n >= 1 => {
            ProbabilityVector::random(&mut ChaCha8Rng::seed_from_u64(seed), n)?
        }
        (None, None) => return Err(Failure::Usage("give --p or --random".into())),
        _ => return Err(Failure::Usage("give exactly one of --p and --random (n >= 1)".into())),
    };
    let unit = if a.bits { statmech::to_bits } else { |x| x };
    let mut t = Table::new(["q", "entropy"]);
    for &q in &a.q {
        t.push_nums([q, unit(statmech::renyi_entropy(&p, q)?)]);
    }
    Ok(t)
}

fn knmean(a: &KnMeanArgs) -> Result<Table, Failure> {
    let f = Generator::from_config(&a.generator)?;
    let p = ProbabilityVector::new(a.p.clone())?;
    let mean = statmech::kn_mean(&f, &p, &a.a)?;
    let nd = statmech::kn_mean_as_nd_probability(&f, &p, &a.a)?;
    let shifted = statmech::kn_translation_check(&f, &p, &a.a, a.shift);
    let mut t = Table::new(["generator", "kn_mean", "kn_mean_nd", "translation_ok"]);
    t.push(vec![f.label().into(), mean.into(), nd.into(), shifted.into()]);
    Ok(t)
}

fn maxent(a: &MaxEntArgs) -> Result<Table, Failure> {
    let x = arith_of(&a.prob_gen)?;
    let spectrum = EnergySpectrum::new(a.energies.clone(), arith_of(&a.energy_gen)?)?;
    let sol = statmech::maxent_solve(&x, &spectrum, a.beta)?;
    if a.summary {
        let mut t = Table::new(["c", "ln_c", "alpha", "beta", "residual"]);
        t.push_nums([sol.c, sol.ln_c, sol.alpha, sol.beta, sol.stationarity_residual()]);
        return Ok(t);
    }
    let mut t = Table::new(["k", "energy", "p", "weight"]);
    for (k, ((e, p), w)) in a.energies.iter().zip(&sol.p).zip(sol.weights.iter()).enumerate() {
        t.push(vec![(k as i64).into(), (*e).into(), (*p).into(), (*w).into()]);
    }
    Ok(t)
}

fn family_of(kind: FamilyArg, a: f64, n: u32) -> crate::Result<EscortFamily> {
    Ok(match kind {
        FamilyArg::Identity => EscortFamily::identity(),
        FamilyArg::Sine => EscortFamily::sine(),
        FamilyArg::Spin => EscortFamily::spin(),
        FamilyArg::Affine => EscortFamily::affine(a, n)?,
    })
}

fn escort_cmd(a: &EscortArgs) -> Result<Table, Failure> {
    if let Some(ns) = &a.ns {
        let mut t = Table::new(["n", "g"]);
        for row in escort::correspondence_limit(a.a, a.p, ns)? {
            t.push(vec![row.n.into(), row.g.into()]);
        }
        return Ok(t);
    }
    let family = family_of(a.family, a.a, a.n)?;
    let ps = grid(0.0, 1.0, a.points)?;
    if let EscortFamily::Affine { a: coef, n } = family {
        let mut t = Table::new(["p", "g"]);
        for p in ps {
            t.push_nums([p, escort::escort_affine(coef, n, p)?]);
        }
        return Ok(t);
    }
    let mut t = Table::new(["p", "g", "g_complement", "sum"]);
    for p in ps {
        let (g, gc) = (escort::escort_binary(&family, p)?, escort::escort_binary(&family, 1.0 - p)?);
        t.push_nums([p, g, gc, g + gc]);
    }
    Ok(t)
}

fn bell(a: &BellArgs) -> Result<Table, Failure> {
    if let Some(p4) = &a.p4 {
        let p4: [f64; 4] = p4
            .as_slice()
            .try_into()
            .map_err(|_| Failure::Usage(format!("--p4 needs 4 values, got {}", p4.len())))?;
        let family = family_of(a.family, 0.0, 3)?;
        let total: f64 = p4.iter().map(|&p| 0.5 * family.g(2.0 * p)).sum();
        let ok = escort::bell_rescaled_check(&family, p4)?;
        let mut t = Table::new(["total", "normalized"]);
        t.push(vec![total.into(), ok.into()]);
        return Ok(t);
    }
    let mut t = Table::new(["alpha", "beta", "integral", "cos2", "conditional"]);
    for theta in grid(0.0, std::f64::consts::PI, a.points)? {
        let alpha = a.beta + theta;
        let integral = escort::hidden_variable_integral(alpha, a.beta, a.tol)?;
        t.push_nums([
            alpha,
            a.beta,
            integral,
            (0.5 * theta).cos().powi(2),
            escort::quantum_conditional(theta)?,
        ]);
    }
    Ok(t)
}

fn cosmo_cmd(a: &CosmoArgs) -> Result<Output, Failure> {
    let params = CosmologyParams::new(a.omega_m, a.omega_lambda, a.omega.unwrap_or(a.omega_m))?;
    if a.report_kappa {
        let matched = cosmo::matched_generator(&params)?;
        return Ok(Output::Text(format!("{:.4}\n", matched.kappa)));
    }
    let x = match &a.generator {
        Some(cfg) => arith_of(cfg)?,
        None => cosmo::matched_generator(&params)?.arithmetic(),
    };
    if a.every == 0 {
        return Err(Failure::Usage("--every must be >= 1".into()));
    }
    let traj = cosmo::nn_friedman_integrate(a.t_start, a.t_end, params.omega, &x, a.steps)?;
    let last = traj.len() - 1;
    let sampled: Vec<_> = traj
        .iter()
        .enumerate()
        .filter(|(i, _)| i % a.every == 0 || *i == last)
        .map(|(_, p)| *p)
        .collect();
    Ok(Output::Table(cosmo::trajectory_table(&sampled, &params, &x)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["nncalc"];
        argv.extend_from_slice(args);
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn example_one_sum() {
        let (code, out, _) = run_str(&["arith", "--gen", "log", "--op", "add", "--lhs", "7.389056", "--rhs", "7.389056"]);
        assert_eq!(code, 0);
        let value: f64 = out.lines().nth(1).unwrap().rsplit(',').next().unwrap().parse().unwrap();
        assert!((value - 54.59815).abs() < 5e-6, "{value}");
    }

    #[test]
    fn mixed_operands() {
        let (code, out, _) = run_str(&[
            "arith", "--gen", "log", "--lhs-gen", "identity", "--rhs-gen", "identity", "--lhs", "2", "--rhs", "2",
        ]);
        assert_eq!(code, 0);
        let value: f64 = out.lines().nth(1).unwrap().rsplit(',').next().unwrap().parse().unwrap();
        assert!((value - 4f64.exp()).abs() < 1e-12);
    }

    #[test]
    fn report_kappa() {
        let (code, out, _) = run_str(&["cosmo", "--omega-lambda", "0.7", "--omega-m", "0.3", "--report-kappa"]);
        assert_eq!((code, out.as_str()), (0, "1.2550\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["nosuch"]).0, 1);
        assert_eq!(run_str(&[]).0, 1);
        assert_eq!(run_str(&["arith", "--gen", "bogus"]).0, 1);
        assert_eq!(run_str(&["arith", "--gen", "log", "--lhs", "-1", "--rhs", "1"]).0, 2);
        assert_eq!(run_str(&["fig1", "--kappa", "-1"]).0, 2);
        let (code, out, _) = run_str(&["fig1", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("identical tails"));
    }

    #[test]
    fn generator_specs() {
        assert_eq!(parse_gen("log").unwrap(), GeneratorConfig::new("log"));
        assert_eq!(
            parse_gen("kaniadakis:kappa=0.5").unwrap(),
            GeneratorConfig::new("kaniadakis").with("kappa", 0.5)
        );
        assert_eq!(
            parse_gen(r#"{"name":"renyi","params":{"q":2}}"#).unwrap(),
            GeneratorConfig::new("renyi").with("q", 2.0)
        );
        assert!(parse_gen("kaniadakis").is_err());
        assert!(parse_gen("renyi:q=x").is_err());
    }

    #[test]
    fn config_round_trip() {
        let (code, json, _) = run_str(&["--dump-config", "knmean", "--gen", "renyi:q=0.5", "--p", "0.2,0.8"]);
        assert_eq!(code, 0);
        let cfg = RunConfig::from_json(&json).unwrap();
        assert_eq!(cfg.to_canonical_json(), json);
        match cfg.command {
            Command::Knmean(k) => assert_eq!(k.p, vec![0.2, 0.8]),
            other => panic!("{other:?}"),
        }
        let partial = RunConfig::from_json(r#"{"subcommand":"fig1","kappa":2.0}"#).unwrap();
        match partial.command {
            Command::Fig1(f) => assert_eq!((f.kappa, f.points), (2.0, 200)),
            other => panic!("{other:?}"),
        }
        assert!(RunConfig::from_json(r#"{"subcommand":"nope"}"#).is_err());
    }

    #[test]
    fn every_subcommand_runs() {
        let cases: &[&[&str]] = &[
            &["derive", "--dom", "log", "--points", "5"],
            &["integrate", "--func", "exp"],
            &["explog", "--dom", "log", "--xmin", "0.5", "--xmax", "3", "--points", "4"],
            &["fig1", "--points", "10"],
            &["entropy", "--p", "0.3,0.7"],
            &["entropy", "--random", "5", "--bits"],
            &["knmean", "--gen", "renyi:q=2", "--p", "0.25,0.75", "--a", "-1,2"],
            &["maxent", "--prob-gen", "log"],
            &["maxent", "--summary"],
            &["escort", "--family", "affine", "--a", "0.5", "--n", "4"],
            &["escort", "--ns", "3,10,100"],
            &["bell", "--points", "5"],
            &["bell", "--p4", "0.1,0.4,0.3,0.2"],
            &["cosmo", "--steps", "200", "--every", "50"],
            &["selfcheck", "--cases", "5"],
            &["--format", "json", "fig1", "--points", "3"],
        ];
        for args in cases {
            let (code, out, err) = run_str(args);
            assert_eq!(code, 0, "{args:?}: {err}");
            assert!(!out.is_empty(), "{args:?}");
        }
    }
}
