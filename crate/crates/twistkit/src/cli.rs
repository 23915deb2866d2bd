//! Command-line front end: named verification suites, series/table display,
//! and JSON export, with stable exit codes (0 = all checks pass, 1 = a
//! check failed, 2 = usage error).

use crate::liealg::{
    algebra_from_json, algebra_to_json, build_abstract, build_concrete, build_embedding,
    embedding_check, recipe_from_json, recipe_to_json, AbstractFamily, ConcreteFamily,
    EmbeddingFamily, EmbeddingRecipe, LieAlgebraDef,
};
use crate::rmat::{cybe_residual, extract_classical_r, pushforward, qybe_residual, universal_r, ClassicalR};
use crate::report::{CheckResult, CheckStatus, LedgerEntryDoc, Report};
use crate::scalars::GaussianRational;
use crate::twist::{
    coproduct_table_check, factorization_check, Carrier, CarrierSide, EntryStatus,
    FactorizationCheck, TwistFamily, TwistParams,
};
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

pub const REPORT_SCHEMA: &str = include_str!("../schemas/report.schema.json");

#[derive(Debug, Parser)]
#[command(
    name = "twistkit",
    about = "Exact verification of extended peripheric twists on inhomogeneous Lie algebras",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite and emit a report.
    Verify(VerifyArgs),
    /// Print algebra tables, twist factors, coproducts or r-matrices.
    Show(ShowArgs),
    /// Emit JSON documents (algebras, embeddings, r-matrices, report schema).
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Jacobi,
    Embedding,
    Cocycle,
    Counit,
    Coproducts,
    Factorization,
    Coassoc,
    Rmatrix,
    Cybe,
    Qybe,
    ClassicalLimit,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Twist family (F_P, F_P', F, F~, F', F~'); default: all six.
    #[arg(long)]
    pub family: Option<String>,
    /// Named algebra for algebra-level suites (abstract or concrete family).
    #[arg(long)]
    pub algebra: Option<String>,
    /// Algebra definition document to ingest instead of a builder.
    #[arg(long, value_name = "path.json")]
    pub algebra_file: Option<PathBuf>,
    /// Embedding document to ingest instead of a builder.
    #[arg(long, value_name = "path.json")]
    pub embedding_file: Option<PathBuf>,
    /// Embedding target family (isu, iso, schrodinger, poincare).
    #[arg(long)]
    pub target: Option<String>,
    /// Dimension parameter for isu/iso/schrodinger.
    #[arg(long)]
    pub n: Option<usize>,
    /// Carrier parameters, e.g. γ=2i,δ=1,μ=i (ASCII names accepted).
    #[arg(long)]
    pub params: Option<String>,
    /// Free coefficients α_k (comma-separated exact scalars).
    #[arg(long)]
    pub alpha: Option<String>,
    /// Free coefficients β_k.
    #[arg(long)]
    pub beta: Option<String>,
    /// Truncation order N.
    #[arg(long, default_value_t = 4)]
    pub order: u32,
    /// Number of seeded random parameter triples to add.
    #[arg(long, default_value_t = 5)]
    pub trials: u32,
    /// Seed for the random parameter trials.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Use the misprinted reference recipes instead of the corrected ones.
    #[arg(long)]
    pub verbatim: bool,
    /// Treat recorded reference-form mismatches as failures.
    #[arg(long = "strict-paper")]
    pub strict_paper: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShowObject {
    Algebra,
    Twist,
    Primitives,
    Coproduct,
    Rmatrix,
}

#[derive(Debug, Args)]
pub struct ShowArgs {
    #[arg(value_enum)]
    pub object: ShowObject,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub params: Option<String>,
    #[arg(long, default_value_t = 4)]
    pub order: u32,
    /// Restrict a coproduct table to one generator.
    #[arg(long)]
    pub generator: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportObject {
    Algebra,
    Embedding,
    Rmatrix,
    Schema,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(value_enum)]
    pub object: ExportObject,
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long)]
    pub target: Option<String>,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub params: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long, default_value_t = 4)]
    pub order: u32,
    /// Use the misprinted reference recipes.
    #[arg(long)]
    pub verbatim: bool,
    /// Output path (stdout when omitted).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Runs a parsed command; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Show(args) => run_show(args).map(|text| {
            print!("{text}");
            0
        }),
        Command::Export(args) => run_export(args).map(|_| 0),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<i32> {
    let report = verify(&args)?;
    match args.format {
        OutputFormat::Text => print!("{}", report.to_text()),
        OutputFormat::Json => print!("{}", report.to_json_string()),
    }
    Ok(report.exit_code)
}

// --- shared argument handling ---------------------------------------------

pub fn parse_params(text: &str) -> Result<TwistParams> {
    let mut gamma = GaussianRational::from_int(2);
    let mut delta = GaussianRational::from_int(3);
    let mut mu = GaussianRational::from_int(5);
    if !text.trim().is_empty() {
        for piece in text.split(',') {
            let (key, value) = piece
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("bad parameter assignment {piece:?}")))?;
            let value = GaussianRational::parse(value.trim())?;
            match key.trim() {
                "γ" | "gamma" | "g" => gamma = value,
                "δ" | "delta" | "d" => delta = value,
                "μ" | "mu" | "m" => mu = value,
                other => {
                    return Err(Error::Config(format!("unknown parameter {other:?}")));
                }
            }
        }
    }
    Ok(TwistParams::new(gamma, delta, mu))
}

fn parse_scalar_list(text: &Option<String>) -> Result<Vec<GaussianRational>> {
    match text {
        None => Ok(Vec::new()),
        Some(text) => text
            .split(',')
            .map(|piece| GaussianRational::parse(piece.trim()))
            .collect(),
    }
}

fn families_from(arg: &Option<String>) -> Result<Vec<TwistFamily>> {
    match arg {
        None => Ok(TwistFamily::MAIN.to_vec()),
        Some(name) => Ok(vec![TwistFamily::from_str(name)?]),
    }
}

fn embedding_targets(arg: &Option<String>) -> Result<Vec<EmbeddingFamily>> {
    match arg {
        None => Ok(vec![
            EmbeddingFamily::Poincare,
            EmbeddingFamily::Isu,
            EmbeddingFamily::Iso,
            EmbeddingFamily::Schrodinger,
        ]),
        Some(name) => Ok(vec![EmbeddingFamily::from_str(name)?]),
    }
}

fn default_n(family: EmbeddingFamily, n: Option<usize>) -> usize {
    n.unwrap_or(match family {
        EmbeddingFamily::Schrodinger => 2,
        EmbeddingFamily::Poincare => 3,
        _ => 4,
    })
}

fn resolve_algebra(
    name: &str,
    params: &TwistParams,
    n: Option<usize>,
) -> Result<std::sync::Arc<LieAlgebraDef>> {
    if let Ok(family) = AbstractFamily::from_str(name) {
        return build_abstract(family, &params.gamma, &params.delta, Some(&params.mu));
    }
    let family = ConcreteFamily::from_str(name)?;
    let n = n.unwrap_or(match family {
        ConcreteFamily::Schrodinger => 2,
        ConcreteFamily::Poincare => 3,
        _ => 4,
    });
    build_concrete(family, n)
}

/// Deterministic nonzero Gaussian-rational triples for the trial runs.
fn random_param_sets(seed: u64, trials: u32) -> Vec<TwistParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_scalar = move |rng: &mut ChaCha8Rng| loop {
        let value = GaussianRational::from_parts(
            rng.gen_range(-3..=3),
            rng.gen_range(1..=2),
            rng.gen_range(-3..=3),
            rng.gen_range(1..=2),
        );
        if !value.is_zero() {
            return value;
        }
    };
    (0..trials)
        .map(|_| {
            TwistParams::new(
                random_scalar(&mut rng),
                random_scalar(&mut rng),
                random_scalar(&mut rng),
            )
        })
        .collect()
}

/// Cache of built carriers, keyed by side, parameters and order.
struct CarrierCache {
    cache: HashMap<(CarrierSide, String, u32), std::rc::Rc<Carrier>>,
}

impl CarrierCache {
    fn new() -> Self {
        Self {
            cache: HashMap::new(),
        }
    }

    fn get(
        &mut self,
        side: CarrierSide,
        params: &TwistParams,
        order: u32,
    ) -> Result<std::rc::Rc<Carrier>> {
        let key = (side, params.to_string(), order);
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        let carrier = std::rc::Rc::new(Carrier::new(side, params.clone(), order)?);
        self.cache.insert(key, carrier.clone());
        Ok(carrier)
    }
}

fn timed(check: &str, subject: String, body: impl FnOnce() -> Result<CheckResult>) -> CheckResult {
    let start = Instant::now();
    let mut result = body().unwrap_or_else(|err| {
        CheckResult::new(check, subject.clone(), CheckStatus::Fail)
            .with_detail(format!("error: {err}"))
    });
    result.timing_ms = start.elapsed().as_millis();
    result
}

// --- verify ----------------------------------------------------------------

pub fn verify(args: &VerifyArgs) -> Result<Report> {
    if args.order > 6 {
        return Err(Error::Config("truncation order must be ≤ 6".into()));
    }
    let params = parse_params(args.params.as_deref().unwrap_or(""))?;
    let families = families_from(&args.family)?;
    let mut cache = CarrierCache::new();
    let mut results = Vec::new();

    let suites: Vec<Suite> = match args.suite {
        Suite::All => vec![
            Suite::Jacobi,
            Suite::Embedding,
            Suite::Cocycle,
            Suite::Counit,
            Suite::Coproducts,
            Suite::Factorization,
            Suite::Coassoc,
            Suite::Rmatrix,
            Suite::Cybe,
            Suite::Qybe,
            Suite::ClassicalLimit,
        ],
        suite => vec![suite],
    };

    for suite in suites {
        match suite {
            Suite::Jacobi => suite_jacobi(args, &params, &mut results)?,
            Suite::Embedding => suite_embedding(args, &mut results)?,
            Suite::Cocycle => suite_per_params(
                "cocycle", args, &params, &families, &mut cache, &mut results, cocycle_one,
            )?,
            Suite::Counit => suite_per_params(
                "counit", args, &params, &families, &mut cache, &mut results, counit_one,
            )?,
            Suite::Qybe => suite_per_params(
                "qybe", args, &params, &families, &mut cache, &mut results, qybe_one,
            )?,
            Suite::Coproducts => {
                suite_coproducts(args, &params, &families, &mut cache, &mut results)?
            }
            Suite::Factorization => suite_factorization(&params, args, &mut cache, &mut results)?,
            Suite::Coassoc => suite_coassoc(args, &params, &families, &mut cache, &mut results)?,
            Suite::Rmatrix => suite_rmatrix(args, &params, &families, &mut cache, &mut results)?,
            Suite::Cybe => suite_cybe(args, &params, &families, &mut cache, &mut results)?,
            Suite::ClassicalLimit => {
                suite_classical_limit(args, &params, &families, &mut cache, &mut results)?
            }
            Suite::All => unreachable!(),
        }
    }

    let config = serde_json::json!({
        "command": "verify",
        "suite": format!("{:?}", args.suite).to_lowercase(),
        "family": args.family,
        "algebra": args.algebra,
        "algebra_file": args.algebra_file,
        "embedding_file": args.embedding_file,
        "target": args.target,
        "n": args.n,
        "params": params.to_string(),
        "order": args.order,
        "trials": args.trials,
        "seed": args.seed,
        "verbatim": args.verbatim,
        "strict_paper": args.strict_paper,
    });
    Ok(Report::assemble(config, results, args.strict_paper))
}

fn suite_jacobi(
    args: &VerifyArgs,
    params: &TwistParams,
    results: &mut Vec<CheckResult>,
) -> Result<()> {
    let mut algebras: Vec<std::sync::Arc<LieAlgebraDef>> = Vec::new();
    if let Some(path) = &args.algebra_file {
        let text = std::fs::read_to_string(path)?;
        let doc = serde_json::from_str(&text)?;
        algebras.push(algebra_from_json(&doc)?);
    } else if let Some(name) = &args.algebra {
        algebras.push(resolve_algebra(name, params, args.n)?);
    } else {
        algebras.push(build_abstract(
            AbstractFamily::L,
            &params.gamma,
            &params.delta,
            Some(&params.mu),
        )?);
        algebras.push(build_abstract(
            AbstractFamily::LPrime,
            &params.gamma,
            &params.delta,
            Some(&params.mu),
        )?);
        algebras.push(build_concrete(ConcreteFamily::Poincare, 3)?);
        algebras.push(build_concrete(ConcreteFamily::Isu, args.n.unwrap_or(4))?);
        algebras.push(build_concrete(ConcreteFamily::Iso, args.n.unwrap_or(4))?);
        algebras.push(build_concrete(
            ConcreteFamily::Schrodinger,
            args.n.unwrap_or(2),
        )?);
    }
    for algebra in algebras {
        results.push(timed("jacobi", algebra.name().to_string(), || {
            let report = algebra.jacobi_check();
            let status = if report.passed() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            let mut result = CheckResult::new("jacobi", algebra.name(), status)
                .with_detail(format!("{} triples checked", report.triples_checked));
            if !report.passed() {
                let triples: Vec<String> = report
                    .violations
                    .iter()
                    .take(8)
                    .map(|v| {
                        format!(
                            "[[{}, {}], {}]",
                            algebra.symbol(v.triple.0),
                            algebra.symbol(v.triple.1),
                            algebra.symbol(v.triple.2)
                        )
                    })
                    .collect();
                result = result.with_residual(triples.join(", "));
            }
            Ok(result)
        }));
    }
    Ok(())
}

fn embedding_result(recipe: &EmbeddingRecipe) -> CheckResult {
    let checks = embedding_check(recipe);
    let failing: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{} residual {}", c.relation, c.residual))
        .collect();
    let status = if failing.is_empty() {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    let mut result = CheckResult::new("embedding", recipe.name.clone(), status).with_detail(
        format!(
            "{} relations checked, params γ={} δ={} μ={}",
            checks.len(),
            recipe.gamma,
            recipe.delta,
            recipe.mu
        ),
    );
    if !failing.is_empty() {
        result = result.with_residual(failing.join("; "));
    }
    result
}

fn suite_embedding(args: &VerifyArgs, results: &mut Vec<CheckResult>) -> Result<()> {
    if let Some(path) = &args.embedding_file {
        let text = std::fs::read_to_string(path)?;
        let doc = serde_json::from_str(&text)?;
        let recipe = recipe_from_json(&doc)?;
        results.push(timed("embedding", recipe.name.clone(), || {
            Ok(embedding_result(&recipe))
        }));
        return Ok(());
    }
    let alpha = parse_scalar_list(&args.alpha)?;
    let beta = parse_scalar_list(&args.beta)?;
    for family in embedding_targets(&args.target)? {
        let n = default_n(family, args.n);
        let recipe = build_embedding(family, n, &alpha, &beta, args.verbatim)?;
        results.push(timed("embedding", recipe.name.clone(), || {
            Ok(embedding_result(&recipe))
        }));
        // the dual carrier embedding obtained by the A ↔ B exchange
        if !args.verbatim {
            let dual = crate::liealg::dualize_recipe(&recipe)?;
            results.push(timed("embedding", dual.name.clone(), || {
                Ok(embedding_result(&dual))
            }));
        }
    }
    Ok(())
}

type PerParamsCheck = fn(&Carrier, TwistFamily, &TwistParams) -> Result<CheckResult>;

fn suite_per_params(
    name: &'static str,
    args: &VerifyArgs,
    params: &TwistParams,
    families: &[TwistFamily],
    cache: &mut CarrierCache,
    results: &mut Vec<CheckResult>,
    check: PerParamsCheck,
) -> Result<()> {
    let mut param_sets = vec![params.clone()];
    param_sets.extend(random_param_sets(args.seed, args.trials));
    for set in &param_sets {
        for &family in families {
            let carrier = cache.get(family.side(), set, args.order)?;
            let subject = format!("{family} @ {set} N={}", args.order);
            results.push(timed(name, subject.clone(), || check(&carrier, family, set)));
        }
    }
    Ok(())
}

fn cocycle_one(carrier: &Carrier, family: TwistFamily, params: &TwistParams) -> Result<CheckResult> {
    let report = carrier.cocycle_check(family)?;
    let status = if report.passed() {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    let subject = format!("{family} @ {params} N={}", carrier.order());
    Ok(CheckResult::new("cocycle", subject, status)
        .with_residual(if report.passed() {
            "0".to_string()
        } else {
            report.residual.render()
        })
        .with_detail(format!(
            "sides have {} / {} terms; left side degree profile {:?}",
            report.side_terms.0, report.side_terms.1, report.per_degree
        )))
}

fn counit_one(carrier: &Carrier, family: TwistFamily, params: &TwistParams) -> Result<CheckResult> {
    let report = carrier.counit_check(family)?;
    let status = if report.passed() {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    let subject = format!("{family} @ {params} N={}", carrier.order());
    Ok(CheckResult::new("counit", subject, status).with_detail(format!(
        "(ε⊗id): {}, (id⊗ε): {}",
        report.left_ok, report.right_ok
    )))
}

fn qybe_one(carrier: &Carrier, family: TwistFamily, params: &TwistParams) -> Result<CheckResult> {
    let r = universal_r(carrier.bundle(family)?)?;
    let residual = qybe_residual(&r)?;
    let status = if residual.is_zero() {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    let subject = format!("{family} @ {params} N={}", carrier.order());
    Ok(CheckResult::new("qybe", subject, status).with_residual(if residual.is_zero() {
        "0".to_string()
    } else {
        residual.render()
    }))
}

fn suite_coproducts(
    args: &VerifyArgs,
    params: &TwistParams,
    families: &[TwistFamily],
    cache: &mut CarrierCache,
    results: &mut Vec<CheckResult>,
) -> Result<()> {
    for &family in families {
        let carrier = cache.get(family.side(), params, args.order)?;
        let report = coproduct_table_check(&carrier, family)?;
        for entry in &report.entries {
            let subject = format!("Δ[{family}]({}) @ {params}", entry.generator);
            let status = match entry.status {
                EntryStatus::Match => CheckStatus::Pass,
                EntryStatus::RecordedMismatch => CheckStatus::RecordedMismatch,
                EntryStatus::Fail => CheckStatus::Fail,
                EntryStatus::ComputedOnly => CheckStatus::Vacuous,
            };
            let mut result = CheckResult::new("coproduct-table", subject, status);
            match entry.status {
                EntryStatus::ComputedOnly => {
                    result = result.with_detail(format!(
                        "no closed form; computed series: {}",
                        entry.computed
                    ));
                }
                EntryStatus::Fail => {
                    result = result.with_detail(format!(
                        "computed {} vs expected {}",
                        entry.computed,
                        entry.expected.as_deref().unwrap_or("-")
                    ));
                }
                _ => {}
            }
            if let Some(ledger) = &entry.ledger {
                result.typo_ledger.push(LedgerEntryDoc::from(ledger));
            }
            results.push(result);
        }
    }
    Ok(())
}

fn suite_factorization(
    params: &TwistParams,
    args: &VerifyArgs,
    cache: &mut CarrierCache,
    results: &mut Vec<CheckResult>,
) -> Result<()> {
    for check in FactorizationCheck::ALL {
        let carrier = cache.get(check.side(), params, args.order)?;
        let subject = format!("{check} @ {params} N={}", args.order);
        results.push(timed("factorization", subject.clone(), || {
            let report = factorization_check(&carrier, check)?;
            let status = if report.passed() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            Ok(CheckResult::new("factorization", subject.clone(), status).with_residual(format!(
                "left {} terms, right {} terms",
                report.left_residual_terms, report.right_residual_terms
            )))
        }));
    }
    Ok(())
}

fn suite_coassoc(
    args: &VerifyArgs,
    params: &TwistParams,
    families: &[TwistFamily],
    cache: &mut CarrierCache,
    results: &mut Vec<CheckResult>,
) -> Result<()> {
    for &family in families {
        let carrier = cache.get(family.side(), params, args.order)?;
        let subject = format!("{family} @ {params} N={}", args.order);
        results.push(timed("coassociativity", subject.clone(), || {
            let mut failing = Vec::new();
            for index in 0..carrier.algebra().dim() {
                let symbol = carrier.algebra().symbol(index).to_string();
                let x = carrier.generator(&symbol)?;
                if !carrier.coassociativity_check(family, &x)? {
                    failing.push(symbol);
                }
            }
            let status = if failing.is_empty() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            let mut result = CheckResult::new("coassociativity", subject.clone(), status)
                .with_detail("all generators".to_string());
            if !failing.is_empty() {
                result = result.with_residual(failing.join(", "));
            }
            Ok(result)
        }));
    }
    Ok(())
}

/// The wedge form each family's classical r-matrix must equal.
pub fn expected_classical_r(carrier: &Carrier, family: TwistFamily) -> Result<ClassicalR> {
    let coefficient = carrier
        .params()
        .gamma
        .checked_div(&carrier.params().delta)?;
    let one = GaussianRational::one();
    let wedges: Vec<(&str, &str, GaussianRational)> = match family {
        TwistFamily::F => vec![
            ("J", "B", one.clone()),
            ("A", "B", one),
            ("H", "E", coefficient),
        ],
        TwistFamily::FTilde => vec![
            ("J", "B", -one.clone()),
            ("A", "B", one),
            ("H", "E", coefficient),
        ],
        TwistFamily::FPrime => vec![
            ("J", "A", one.clone()),
            ("A", "B", one),
            ("H", "E", coefficient),
        ],
        TwistFamily::FTildePrime => vec![
            ("J", "A", -one.clone()),
            ("A", "B", one),
            ("H", "E", coefficient),
        ],
        TwistFamily::FP | TwistFamily::FPPrime => {
            vec![("A", "B", one), ("H", "E", coefficient)]
        }
        other => {
            return Err(Error::FamilyMismatch {
                family: other.to_string(),
                algebra: carrier.algebra().name().to_string(),
            })
        }
    };
    ClassicalR::from_wedges(carrier.algebra().clone(), &wedges)
}

fn suite_rmatrix(
    args: &VerifyArgs,
    params: &TwistParams,
    families: &[TwistFamily],
    cache: &mut CarrierCache,
    results: &mut Vec<CheckResult>,
) -> Result<()> {
    for &family in families {
        let carrier = cache.get(family.side(), params, args.order)?;
        let subject = format!("{family} @ {params}");
        results.push(timed("rmatrix", subject.clone(), || {
            let r = extract_classical_r(&universal_r(carrier.bundle(family)?)?)?;
            let expected = expected_classical_r(&carrier, family)?;
            let status = if r == expected {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            Ok(CheckResult::new("rmatrix", subject.clone(), status)
                .with_detail(format!("r = {}", r.render()))
                .with_residual(r.sub(&expected).render()))
        }));
    }
    // pushforward comparison for the (1+3) Poincaré light-cone form
    if let Some(target) = &args.target {
        if EmbeddingFamily::from_str(target)? == EmbeddingFamily::Poincare {
            results.push(timed("rmatrix-pushforward", "poincare".to_string(), || {
                let recipe = build_embedding(EmbeddingFamily::Poincare, 3, &[], &[], false)?;
                let carrier = Carrier::new(
                    CarrierSide::L,
                    TwistParams::new(
                        recipe.gamma.clone(),
                        recipe.delta.clone(),
                        recipe.mu.clone(),
                    ),
                    args.order.max(1),
                )?;
                let r = extract_classical_r(&universal_r(carrier.bundle(TwistFamily::F)?)?)?;
                let pushed = pushforward(&r, &recipe)?;
                let expected = poincare_lightcone_r(&recipe)?;
                let status = if pushed == expected {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                };
                Ok(
                    CheckResult::new("rmatrix-pushforward", "poincare", status)
                        .with_detail(format!("r = {}", pushed.render()))
                        .with_residual(pushed.sub(&expected).render()),
                )
            }));
        }
    }
    Ok(())
}

/// `(J_3 + P_+) ∧ (J_- + iK_-) + 2i·K_3 ∧ (P_t - P_3)` expanded in the
/// Poincaré wedge basis.
pub fn poincare_lightcone_r(recipe: &EmbeddingRecipe) -> Result<ClassicalR> {
    let target = recipe.target.clone();
    let i = GaussianRational::i();
    let one = GaussianRational::one();
    let mut out = ClassicalR::zero(target.clone());
    let plus = [
        ("J_3", one.clone()),
        ("P_1", one.clone()),
        ("P_2", i.clone()),
    ];
    let minus = [
        ("J_1", one.clone()),
        ("J_2", -i.clone()),
        ("K_1", i.clone()),
        ("K_2", one.clone()),
    ];
    for (ls, lc) in &plus {
        for (rs, rc) in &minus {
            out.add_wedge(target.index_of(ls)?, target.index_of(rs)?, &(lc * rc));
        }
    }
    let two_i = GaussianRational::ratio_i(2, 1);
    out.add_wedge(
        target.index_of("K_3")?,
        target.index_of("P_t")?,
        &two_i,
    );
    out.add_wedge(
        target.index_of("K_3")?,
        target.index_of("P_3")?,
        &-two_i,
    );
    Ok(out)
}

fn suite_cybe(
    args: &VerifyArgs,
    params: &TwistParams,
    families: &[TwistFamily],
    cache: &mut CarrierCache,
    results: &mut Vec<CheckResult>,
) -> Result<()> {
    for &family in families {
        let carrier = cache.get(family.side(), params, args.order)?;
        let subject = format!("{family} @ {params}");
        results.push(timed("cybe", subject.clone(), || {
            let r = extract_classical_r(&universal_r(carrier.bundle(family)?)?)?;
            let report = cybe_residual(&r);
            let status = if report.passed() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            Ok(CheckResult::new("cybe", subject.clone(), status)
                .with_residual(report.render()))
        }));
    }
    // pushforward CYBE in the embedding targets
    let alpha = parse_scalar_list(&args.alpha)?;
    let beta = parse_scalar_list(&args.beta)?;
    if args.target.is_some() || args.suite == Suite::All {
        for target in embedding_targets(&args.target)? {
            let n = default_n(target, args.n);
            let subject = format!("{target}({n}) pushforward");
            results.push(timed("cybe", subject.clone(), || {
                let recipe = build_embedding(target, n, &alpha, &beta, false)?;
                let carrier = Carrier::new(
                    CarrierSide::L,
                    TwistParams::new(
                        recipe.gamma.clone(),
                        recipe.delta.clone(),
                        recipe.mu.clone(),
                    ),
                    args.order.max(1),
                )?;
                let r = extract_classical_r(&universal_r(carrier.bundle(TwistFamily::F)?)?)?;
                let pushed = pushforward(&r, &recipe)?;
                let report = cybe_residual(&pushed);
                let status = if report.passed() {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                };
                Ok(CheckResult::new("cybe", subject.clone(), status)
                    .with_residual(report.render())
                    .with_detail(format!("r = {}", pushed.render())))
            }));
        }
    }
    Ok(())
}

fn suite_classical_limit(
    args: &VerifyArgs,
    params: &TwistParams,
    families: &[TwistFamily],
    cache: &mut CarrierCache,
    results: &mut Vec<CheckResult>,
) -> Result<()> {
    for &family in families {
        let carrier = cache.get(family.side(), params, args.order)?;
        let report = carrier.classical_limit_check(family)?;
        let element_status = if report.element_is_unit {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        results.push(CheckResult::new(
            "classical-limit",
            format!("{family} @ {params} element at N=0"),
            element_status,
        ));
        for entry in &report.generators {
            let status = if entry.vacuous {
                CheckStatus::Vacuous
            } else if entry.matches {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
            results.push(CheckResult::new(
                "classical-limit",
                format!("{family} @ {params} degree-0 of Δ({})", entry.generator),
                status,
            ));
        }
    }
    Ok(())
}

// --- show -------------------------------------------------------------------

fn run_show(args: ShowArgs) -> Result<String> {
    let params = parse_params(args.params.as_deref().unwrap_or(""))?;
    match args.object {
        ShowObject::Algebra => {
            let name = args
                .algebra
                .as_deref()
                .or(args.family.as_deref())
                .ok_or_else(|| Error::Config("show algebra needs --algebra".into()))?;
            let algebra = resolve_algebra(name, &params, args.n)?;
            match args.format {
                OutputFormat::Json => Ok(serde_json::to_string_pretty(&algebra_to_json(
                    &algebra,
                ))? + "\n"),
                OutputFormat::Text => {
                    let mut out = format!("algebra {}\n", algebra.name());
                    out.push_str(&format!("generators ({}):", algebra.dim()));
                    for g in algebra.generators() {
                        out.push_str(&format!(" {}", g.symbol));
                        if g.zdegree > 0 {
                            out.push_str(&format!("(deg {})", g.zdegree));
                        }
                    }
                    out.push('\n');
                    for (&(i, j), rhs) in algebra.stored_brackets() {
                        out.push_str(&format!(
                            "[{}, {}] = {}\n",
                            algebra.symbol(i),
                            algebra.symbol(j),
                            rhs.render(&algebra)
                        ));
                    }
                    Ok(out)
                }
            }
        }
        ShowObject::Twist => {
            let family = TwistFamily::from_str(
                args.family
                    .as_deref()
                    .ok_or_else(|| Error::Config("show twist needs --family".into()))?,
            )?;
            let carrier = Carrier::for_family(family, params, args.order)?;
            let bundle = carrier.bundle(family)?;
            let mut out = format!("{family} on {} at N={}\n", carrier.algebra().name(), args.order);
            for (label, factor) in &bundle.factors {
                out.push_str(&format!("factor {label} = {}\n", factor.render()));
            }
            out.push_str(&format!("element = {}\n", bundle.element.render()));
            out.push_str(&format!("inverse = {}\n", bundle.inverse.render()));
            Ok(out)
        }
        ShowObject::Primitives => {
            let side = match args.family.as_deref() {
                Some(name) => TwistFamily::from_str(name)?.side(),
                None => CarrierSide::L,
            };
            let carrier = Carrier::new(side, params, args.order)?;
            let primitives = carrier.primitives();
            let mut out = format!("primitive series on {}\n", carrier.algebra().name());
            out.push_str(&format!("σ = {}\n", primitives.sigma.render()));
            if let Some(w) = &primitives.w {
                out.push_str(&format!("Be^{{-δσ}} = {}\n", w.render()));
            }
            if let Some(rho) = &primitives.rho {
                out.push_str(&format!("ρ = {}\n", rho.render()));
            }
            if let Some(rho_prime) = &primitives.rho_prime {
                out.push_str(&format!("ρ' = {}\n", rho_prime.render()));
            }
            for (label, value) in &primitives.exp_cache {
                out.push_str(&format!("{label} = {}\n", value.render()));
            }
            Ok(out)
        }
        ShowObject::Coproduct => {
            let family = TwistFamily::from_str(
                args.family
                    .as_deref()
                    .ok_or_else(|| Error::Config("show coproduct needs --family".into()))?,
            )?;
            let carrier = Carrier::for_family(family, params, args.order)?;
            let symbols: Vec<String> = match &args.generator {
                Some(symbol) => vec![symbol.clone()],
                None => carrier
                    .algebra()
                    .generators()
                    .iter()
                    .map(|g| g.symbol.clone())
                    .collect(),
            };
            let mut out = String::new();
            for symbol in symbols {
                let x = carrier.generator(&symbol)?;
                let twisted = carrier.twisted_coproduct(family, &x)?;
                out.push_str(&format!("Δ[{family}]({symbol}) = {}\n", twisted.render()));
            }
            Ok(out)
        }
        ShowObject::Rmatrix => {
            let family = TwistFamily::from_str(
                args.family
                    .as_deref()
                    .ok_or_else(|| Error::Config("show rmatrix needs --family".into()))?,
            )?;
            let carrier = Carrier::for_family(family, params, args.order.max(1))?;
            let r = extract_classical_r(&universal_r(carrier.bundle(family)?)?)?;
            match args.format {
                OutputFormat::Json => Ok(serde_json::to_string_pretty(&r.to_json())? + "\n"),
                OutputFormat::Text => Ok(format!("r[{family}] = {}\n", r.render())),
            }
        }
    }
}

// --- export -----------------------------------------------------------------

fn run_export(args: ExportArgs) -> Result<()> {
    let params = parse_params(args.params.as_deref().unwrap_or(""))?;
    let text = match args.object {
        ExportObject::Schema => REPORT_SCHEMA.to_string(),
        ExportObject::Algebra => {
            let name = args
                .algebra
                .as_deref()
                .ok_or_else(|| Error::Config("export algebra needs --algebra".into()))?;
            let algebra = resolve_algebra(name, &params, args.n)?;
            serde_json::to_string_pretty(&algebra_to_json(&algebra))? + "\n"
        }
        ExportObject::Embedding => {
            let target = EmbeddingFamily::from_str(
                args.target
                    .as_deref()
                    .ok_or_else(|| Error::Config("export embedding needs --target".into()))?,
            )?;
            let n = default_n(target, args.n);
            let alpha = parse_scalar_list(&args.alpha)?;
            let beta = parse_scalar_list(&args.beta)?;
            let recipe = build_embedding(target, n, &alpha, &beta, args.verbatim)?;
            serde_json::to_string_pretty(&recipe_to_json(&recipe))? + "\n"
        }
        ExportObject::Rmatrix => {
            let family = TwistFamily::from_str(
                args.family
                    .as_deref()
                    .ok_or_else(|| Error::Config("export rmatrix needs --family".into()))?,
            )?;
            let carrier = Carrier::for_family(family, params, args.order.max(1))?;
            let r = extract_classical_r(&universal_r(carrier.bundle(family)?)?)?;
            serde_json::to_string_pretty(&r.to_json())? + "\n"
        }
    };
    match &args.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse_with_greek_and_ascii_names() {
        let params = parse_params("γ=2i,δ=1,μ=i").unwrap();
        assert_eq!(params.gamma, GaussianRational::ratio_i(2, 1));
        assert_eq!(params.delta, GaussianRational::one());
        assert_eq!(params.mu, GaussianRational::i());
        let params = parse_params("gamma=-1,delta=2,mu=-2").unwrap();
        assert_eq!(params.gamma, GaussianRational::from_int(-1));
        let defaults = parse_params("").unwrap();
        assert_eq!(defaults.gamma, GaussianRational::from_int(2));
    }

    #[test]
    fn random_param_sets_are_seed_deterministic() {
        let a = random_param_sets(0, 5);
        let b = random_param_sets(0, 5);
        assert_eq!(a, b);
        let c = random_param_sets(1, 5);
        assert_ne!(a, c);
        assert!(a.iter().all(|p| !p.gamma.is_zero() && !p.delta.is_zero() && !p.mu.is_zero()));
    }
}
