use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::{json, Value};

use rimhook::involution::{iota, outer_involution_traced, standard_pairs, type_census};
use rimhook::posets::generate::posets_up_to_isomorphism;
use rimhook::posets::{csf, csf_with, stanley_stembridge_involution};
use rimhook::render::Canvas;
use rimhook::tableaux::{enumerate_srht, enumerate_ssyt};
use rimhook::symfunc::{evaluate_at_ones, inverse_kostka_matrix, kostka_matrix, verify_identities};
use rimhook::{Error, IntMatrix, Integer, Partition, Poset, RootedTableau, SemistandardTableau, SpecialRimHookTableau};

mod examples;

#[derive(Parser)]
#[command(name = "rimhook", version, about = "Special rim-hook tableaux, inverse Kostka numbers and chromatic symmetric functions")]
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
}

#[derive(Subcommand)]
enum Command {
    /// Kostka matrix of weight n, or one entry with its tableaux.
    Kostka(KostkaArgs),
    /// Inverse Kostka matrix of weight n, or one entry with its special rim-hook tableaux.
    InvKostka(InvKostkaArgs),
    /// Check both matrix products and replay the pair involution on the last column.
    Verify(Weight),
    /// Apply the pair involution to one pair, or to every pair of a type.
    Involve(InvolveArgs),
    /// Show every step of the rooted involution.
    Trace(TraceArgs),
    /// Schur and elementary expansions of a poset's chromatic symmetric function.
    Csf(PosetArgs),
    /// Matching and fixed points of the height-two involution.
    SsInvolution(PosetArgs),
    /// Test whether a poset avoids a disjoint a-chain and b-chain.
    AbFree(AbArgs),
    /// Sweep all (3+1)-free posets up to a size and cross-check every expansion.
    Corpus(CorpusArgs),
}

#[derive(Args)]
struct Weight {
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct KostkaArgs {
    #[arg(long, required_unless_present = "shape")]
    n: Option<usize>,
    #[arg(long, requires = "content")]
    shape: Option<Partition>,
    #[arg(long, requires = "shape")]
    content: Option<Partition>,
}

#[derive(Args)]
struct InvKostkaArgs {
    #[arg(long, required_unless_present = "shape")]
    n: Option<usize>,
    #[arg(long, requires = "type")]
    shape: Option<Partition>,
    #[arg(long = "type", requires = "shape")]
    r#type: Option<Partition>,
}

#[derive(Args)]
struct InvolveArgs {
    /// JSON file holding {"tableau": ..., "standard": [[...], ...]}.
    #[arg(long, conflicts_with_all = ["type", "shape"])]
    input: Option<PathBuf>,
    /// Hook type of the pairs to run.
    #[arg(long = "type")]
    r#type: Option<Partition>,
    /// Restrict to pairs of this shape.
    #[arg(long)]
    shape: Option<Partition>,
}

#[derive(Args)]
struct TraceArgs {
    /// JSON file holding a rooted tableau {"hooks": ..., "root": [i, j]}.
    #[arg(long, conflicts_with = "example")]
    input: Option<PathBuf>,
    /// A built-in starting tableau.
    #[arg(long, value_enum)]
    example: Option<examples::Example>,
    /// Expected shape: either the full diagram or the diagram without the root.
    #[arg(long)]
    shape: Option<Partition>,
}

#[derive(Args)]
struct PosetArgs {
    /// Poset file: one `x < y` cover or bare label per line.
    #[arg(long)]
    poset: PathBuf,
}

#[derive(Args)]
struct AbArgs {
    #[arg(long)]
    poset: PathBuf,
    #[arg(long, default_value_t = 3)]
    a: usize,
    #[arg(long, default_value_t = 1)]
    b: usize,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value_t = 6)]
    max_elements: usize,
    /// Shuffles the processing order; results do not depend on it.
    #[arg(long)]
    seed: Option<u64>,
}

enum Failure {
    Input(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Input(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_poset(path: &Path) -> Result<Poset, Failure> {
    Ok(Poset::parse(&read(path)?)?)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn matrix(m: &IntMatrix, format: Format) -> String {
    match format {
        Format::Text => m.to_text(),
        Format::Json => pretty(&m.to_json()),
    }
}

fn same_weight(a: &Partition, b: &Partition) -> Result<(), Failure> {
    if a.n() == b.n() {
        Ok(())
    } else {
        Err(Error::ShapeMismatch {
            left: a.clone(),
            right: b.clone(),
        }
        .into())
    }
}

fn kostka(args: KostkaArgs, format: Format) -> Outcome {
    let (Some(shape), Some(content)) = (args.shape, args.content) else {
        return Ok(matrix(&kostka_matrix(args.n.unwrap_or_default()), format));
    };
    same_weight(&shape, &content)?;
    let tableaux = enumerate_ssyt(&shape, &content);
    Ok(match format {
        Format::Json => pretty(&json!({
            "shape": shape,
            "content": content,
            "value": tableaux.len(),
            "tableaux": tableaux,
        })),
        Format::Text => {
            let mut out = format!("K({shape}, {content}) = {}\n", tableaux.len());
            for t in &tableaux {
                let _ = writeln!(out, "  {}", rows_text(t));
            }
            out
        }
    })
}

fn inv_kostka(args: InvKostkaArgs, format: Format) -> Outcome {
    let (Some(shape), Some(mu)) = (args.shape, args.r#type) else {
        return Ok(matrix(&inverse_kostka_matrix(args.n.unwrap_or_default()), format));
    };
    same_weight(&shape, &mu)?;
    let tableaux = enumerate_srht(&shape, &mu);
    let value: i64 = tableaux.iter().map(|s| i64::from(s.sign())).sum();
    Ok(match format {
        Format::Json => pretty(&json!({
            "type": mu,
            "shape": shape,
            "value": value,
            "tableaux": tableaux
                .iter()
                .map(|s| json!({ "tableau": s, "sign": s.sign() }))
                .collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = format!("K^-1({mu}, {shape}) = {value}\n");
            for s in &tableaux {
                let mut canvas = Canvas::new();
                for h in s.hooks() {
                    canvas.hook(h, "*");
                }
                let _ = write!(out, "\nsign {:+}\n{}", s.sign(), canvas.render());
            }
            out
        }
    })
}

fn verify(n: usize, format: Format) -> Outcome {
    let report = verify_identities(n);
    let out = match format {
        Format::Text => report.to_text(),
        Format::Json => pretty(&serde_json::to_value(&report).expect("serializable")),
    };
    if report.all_pass() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Domain(format!("identity check failed for n = {n}")))
    }
}

#[derive(serde::Deserialize)]
struct PairInput {
    tableau: SpecialRimHookTableau,
    standard: SemistandardTableau,
}

fn pair_json(s: &SpecialRimHookTableau, t: &SemistandardTableau) -> Value {
    json!({ "tableau": s, "standard": t, "sign": s.sign() })
}

fn rows_text(t: &SemistandardTableau) -> String {
    t.rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(" / ")
}

fn involve_one(s: &SpecialRimHookTableau, t: &SemistandardTableau, format: Format) -> Result<Value, Failure> {
    let image = outer_involution_traced(s, t)?;
    Ok(match format {
        Format::Json => json!({
            "input": pair_json(s, t),
            "output": pair_json(&image.tableau, &image.standard),
            "stripped": image.stripped,
            "trace": image.trace.to_json(),
        }),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "T  = {}   sign {:+}", rows_text(t), s.sign());
            let _ = writeln!(out, "T' = {}   sign {:+}", rows_text(&image.standard), image.tableau.sign());
            let rules: Vec<String> = image.trace.rules().iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "rules: {}", rules.join(" "));
            out.push('\n');
            out.push_str(&image.trace.render());
            Value::String(out)
        }
    })
}

fn involve(args: InvolveArgs, format: Format) -> Outcome {
    let finish = |v: Value| match v {
        Value::String(s) => s,
        other => pretty(&other),
    };
    if let Some(path) = args.input {
        let pair: PairInput = read_json(&path)?;
        return Ok(finish(involve_one(&pair.tableau, &pair.standard, format)?));
    }
    let mu = args
        .r#type
        .ok_or_else(|| Failure::Input("either --input or --type is required".into()))?;
    if mu == Partition::column(mu.n()) {
        return Err(Error::AllSingletonType(mu).into());
    }
    let pairs: Vec<_> = standard_pairs(&mu)
        .into_iter()
        .filter(|(s, _)| args.shape.as_ref().is_none_or(|sh| s.shape() == sh))
        .collect();
    let mut results = Vec::new();
    for (s, t) in &pairs {
        results.push(involve_one(s, t, format)?);
    }
    Ok(match format {
        Format::Json => pretty(&json!({
            "type": mu,
            "census": type_census(&mu),
            "pairs": results,
        })),
        Format::Text => {
            let census = type_census(&mu);
            let mut out = format!(
                "type {mu}: {} pairs in all, {} 2-cycles, signed sum {}, failures {}\n",
                census.pairs,
                census.two_cycles,
                census.signed_sum,
                census.failures.len()
            );
            for r in results {
                out.push('\n');
                out.push_str(r.as_str().unwrap_or_default());
            }
            out
        }
    })
}

fn trace(args: TraceArgs, format: Format) -> Outcome {
    let start: RootedTableau = match (&args.input, args.example) {
        (Some(path), _) => read_json(path)?,
        (None, Some(ex)) => ex.tableau(),
        (None, None) => return Err(Failure::Input("either --input or --example is required".into())),
    };
    if let Some(shape) = &args.shape {
        let region = Partition::from_cells(&start.cells_without_root());
        if shape != start.shape() && region.as_ref() != Some(shape) {
            return Err(Error::ShapeMismatch {
                left: shape.clone(),
                right: start.shape().clone(),
            }
            .into());
        }
    }
    let (_, trace) = iota(&start)?;
    Ok(match format {
        Format::Json => pretty(&trace.to_json()),
        Format::Text => trace.render(),
    })
}

fn csf_command(args: PosetArgs, format: Format) -> Outcome {
    let poset = load_poset(&args.poset)?;
    let r = csf::<Integer>(&poset)?;
    Ok(match format {
        Format::Json => {
            let mut v = json!({
                "s_expansion": r.s_expansion.to_json(),
                "e_expansion": r.e_expansion.to_json(),
            });
            if let Some(c) = &r.pair_census {
                v["pair_census"] = c.to_json(&poset);
            }
            pretty(&v)
        }
        Format::Text => format!("s: {}\ne: {}\n", r.s_expansion, r.e_expansion),
    })
}

fn ss_involution(args: PosetArgs, format: Format) -> Outcome {
    let poset = load_poset(&args.poset)?;
    let census = stanley_stembridge_involution(&poset)?;
    Ok(match format {
        Format::Json => pretty(&census.to_json(&poset)),
        Format::Text => census.render(&poset),
    })
}

fn ab_free(args: AbArgs, format: Format) -> Outcome {
    if args.a == 0 || args.b == 0 {
        return Err(Failure::Input("--a and --b must be positive".into()));
    }
    let poset = load_poset(&args.poset)?;
    let free = poset.is_ab_free(args.a, args.b);
    Ok(match format {
        Format::Json => pretty(&json!({ "a": args.a, "b": args.b, "free": free })),
        Format::Text => format!("{free}\n"),
    })
}

#[derive(Default, serde::Serialize)]
struct Level {
    elements: usize,
    posets: usize,
    height_at_most_two: usize,
    colouring_mismatches: usize,
    fixed_point_mismatches: usize,
    negative_coefficients: usize,
}

fn corpus(args: CorpusArgs, format: Format) -> Outcome {
    if args.max_elements > 8 {
        return Err(Failure::Input("--max-elements is limited to 8".into()));
    }
    let levels = posets_up_to_isomorphism(args.max_elements, Poset::is_three_plus_one_free);
    let mut rng = args.seed.map(StdRng::seed_from_u64);
    let mut summary = Vec::new();
    let mut failures = Vec::new();
    for (n, level) in levels.into_iter().enumerate().skip(1) {
        let inverse = inverse_kostka_matrix::<Integer>(n);
        let mut order: Vec<Poset> = level;
        if let Some(rng) = rng.as_mut() {
            order.shuffle(rng);
        }
        let mut stats = Level {
            elements: n,
            posets: order.len(),
            ..Level::default()
        };
        for poset in &order {
            let r = csf_with(poset, &inverse)?;
            let g = poset.incomparability_graph();
            if (1..=6).any(|k| evaluate_at_ones(&r.e_expansion, k) != Integer::from(g.chromatic_polynomial_value(k))) {
                stats.colouring_mismatches += 1;
                failures.push(poset.to_text());
            }
            if let Some(census) = &r.pair_census {
                stats.height_at_most_two += 1;
                let fixed = census.fixed_by_type();
                let agree = r
                    .e_expansion
                    .terms()
                    .all(|(mu, c)| *c == Integer::from(fixed.get(mu).copied().unwrap_or(0)))
                    && fixed.iter().all(|(mu, &f)| r.e_expansion.coeff(mu) == Integer::from(f));
                if !agree {
                    stats.fixed_point_mismatches += 1;
                    failures.push(poset.to_text());
                }
                if !r.e_expansion.is_positive() {
                    stats.negative_coefficients += 1;
                }
            }
        }
        summary.push(stats);
    }
    failures.sort();
    let out = match format {
        Format::Json => pretty(&json!({ "levels": summary, "failures": failures })),
        Format::Text => {
            let mut out = String::from("elements  posets  height<=2  colouring  fixed-points  negative\n");
            for s in &summary {
                let _ = writeln!(
                    out,
                    "{:>8}  {:>6}  {:>9}  {:>9}  {:>12}  {:>8}",
                    s.elements,
                    s.posets,
                    s.height_at_most_two,
                    s.colouring_mismatches,
                    s.fixed_point_mismatches,
                    s.negative_coefficients
                );
            }
            let total: usize = summary.iter().map(|s| s.posets).sum();
            let _ = writeln!(out, "total {total} posets, {} failures", failures.len());
            out
        }
    };
    if failures.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Domain(format!("{} posets failed a cross-check", failures.len())))
    }
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Kostka(a) => kostka(a, format),
        Command::InvKostka(a) => inv_kostka(a, format),
        Command::Verify(w) => verify(w.n, format),
        Command::Involve(a) => involve(a, format),
        Command::Trace(a) => trace(a, format),
        Command::Csf(a) => csf_command(a, format),
        Command::SsInvolution(a) => ss_involution(a, format),
        Command::AbFree(a) => ab_free(a, format),
        Command::Corpus(a) => corpus(a, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
