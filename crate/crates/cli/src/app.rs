//! Subcommand definitions and execution. Every command produces
//! deterministic output for a fixed invocation and seed; identity checks
//! exit 1 with a witness dump when a checked identity fails, and usage or
//! parse problems exit 2.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use mixshuffle_core::baxter::{
    augmented_product, check_baxter_identity, check_product_expansion, BaxElement, BaxterAlgebra,
    CheckOutcome, IdentityOperatorAlgebra, ScalarOperatorAlgebra, ShuffleBaxterAlgebra,
    ZeroOperatorAlgebra,
};
use mixshuffle_core::cartier::{cartier_product, embed_cartier, CartierElement};
use mixshuffle_core::hurwitz::{embed_sha_c, hurwitz_mul, HurwitzAlgebra, HurwitzPolynomial};
use mixshuffle_core::monomial::Alphabet;
use mixshuffle_core::ring::{Coeff, RingDescriptor, Weight};
use mixshuffle_core::sample::{random_bax_element, random_coeff, random_hurwitz, SampleSpec};
use mixshuffle_core::shuffle::{
    count_mixable_pair, count_mixable_pair_by_merges, count_mixable_triple,
    count_mixable_triple_by_degree, enumerate_mixable_pair, enumerate_mixable_triple, MergeEntry,
};
use mixshuffle_core::tensor::PlusElement;

use crate::expr;

#[derive(Parser)]
#[command(
    name = "mixshuffle",
    version,
    about = "Exact mixable shuffle products and free Baxter algebra constructions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// The free Baxter algebra on the alphabet.
    Sha,
    /// Basis sequences with the shift operator (weight 0).
    Hurwitz,
    /// The coefficient ring with the zero operator.
    Zero,
    /// The coefficient ring with the scaled-identity operator.
    Scalar,
    /// The coefficient ring with the raw identity operator (negative
    /// control; fails except at weight -1).
    Idop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Bax,
    Plus,
    Cartier,
    Hurwitz,
}

#[derive(Args)]
pub struct RingArgs {
    /// Coefficient ring: int, rat or mod:<n>.
    #[arg(long, default_value = "int")]
    ring: String,
    /// Weight literal, parsed in the ring (e.g. -1 or 2/3).
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    lambda: String,
    /// Comma-separated generator names.
    #[arg(long, default_value = "x,y")]
    alphabet: String,
}

#[derive(Subcommand)]
pub enum Command {
    /// Count mixable shuffles by the closed forms.
    Count {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Third block size; switches to three-block counting.
        #[arg(long)]
        l: Option<usize>,
        /// Print the distribution over merge count (or merge degree).
        #[arg(long)]
        by_merges: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Enumerate mixable shuffles in canonical order.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Multiply two elements with the augmented shuffle product.
    Product {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum)]
        format: Option<Format>,
        left: String,
        right: String,
    },
    /// Check the weighted operator identity on random pairs in a target.
    BaxterCheck {
        #[arg(long, value_enum)]
        target: Target,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Multiply bracket symbols (weight -1); optionally print the embedded
    /// image as tensor words.
    Cartier {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        embed: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
        left: String,
        right: String,
    },
    /// Basis-sequence arithmetic.
    Hurwitz {
        #[command(subcommand)]
        command: HurwitzCommand,
    },
    /// Parse an expression and print its canonical form.
    Eval {
        #[arg(long, value_enum, default_value_t = Kind::Bax)]
        kind: Kind,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum)]
        format: Option<Format>,
        expr: String,
    },
    /// Check the expansion of products of iterated operator stacks.
    ExpandProp {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        target: Target,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(Subcommand)]
pub enum HurwitzCommand {
    /// Multiply two basis-sequence polynomials.
    Mul {
        #[arg(long, default_value = "int")]
        ring: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
        left: String,
        right: String,
    },
    /// Map an element over the empty alphabet (weight 0) to its basis
    /// sequence.
    Embed {
        #[arg(long, default_value = "int")]
        ring: String,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// Rendered output plus the process exit code.
pub struct Output {
    pub text: String,
    pub code: i32,
}

fn ok(text: String) -> Result<Output, String> {
    Ok(Output { text, code: 0 })
}

fn resolve_format(flag: Option<Format>) -> Format {
    if let Some(f) = flag {
        return f;
    }
    match std::env::var("MIXSHUFFLE_FORMAT").as_deref() {
        Ok("json") => Format::Json,
        _ => Format::Text,
    }
}

fn parse_alphabet(spec: &str) -> Result<Alphabet, String> {
    let names: Vec<String> = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    Alphabet::new(names).map_err(|e| e.to_string())
}

struct Context {
    ring: RingDescriptor,
    weight: Weight,
    alphabet: Alphabet,
}

impl RingArgs {
    fn resolve(&self) -> Result<Context, String> {
        let ring = RingDescriptor::parse(&self.ring).map_err(|e| e.to_string())?;
        let lambda = Coeff::parse_in(&ring, &self.lambda).map_err(|e| e.to_string())?;
        let alphabet = parse_alphabet(&self.alphabet)?;
        Ok(Context {
            ring,
            weight: Weight::new(lambda),
            alphabet,
        })
    }
}

fn merges_text(merges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = merges.iter().map(|(a, b)| format!("({a},{b})")).collect();
    format!("[{}]", parts.join(","))
}

fn entry_text(merges: &[MergeEntry]) -> String {
    let parts: Vec<String> = merges
        .iter()
        .map(|e| match e {
            MergeEntry::Pair { start, .. } => format!("({},{})", start, start + 1),
            MergeEntry::Triple { start } => format!("({},{},{})", start, start + 1, start + 2),
        })
        .collect();
    format!("[{}]", parts.join(","))
}

fn sigma_text(images: &[usize]) -> String {
    let parts: Vec<String> = images.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn bax_terms_json(e: &BaxElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(w, c)| {
            json!({
                "word": w.factors().iter().map(|m| m.render(e.alphabet())).collect::<Vec<_>>(),
                "coeff": c.to_string(),
            })
        })
        .collect();
    Value::Array(terms)
}

fn plus_terms_json(e: &PlusElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(w, c)| {
            json!({
                "word": w.factors().iter().map(|m| m.render(e.alphabet())).collect::<Vec<_>>(),
                "coeff": c.to_string(),
            })
        })
        .collect();
    Value::Array(terms)
}

fn cartier_terms_json(e: &CartierElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(s, c)| {
            json!({
                "head": s.head().render(e.alphabet()),
                "bracket": s.bracket().iter().map(|m| m.render(e.alphabet())).collect::<Vec<_>>(),
                "coeff": c.to_string(),
            })
        })
        .collect();
    Value::Array(terms)
}

fn hurwitz_json(h: &HurwitzPolynomial) -> Value {
    let coeffs: Vec<String> = (0..h.support_len()).map(|n| h.coeff(n).to_string()).collect();
    json!({ "coeffs": coeffs })
}

struct CheckReport {
    checked: usize,
    failure: Option<(usize, String, String)>,
}

fn run_pair_checks<R: BaxterAlgebra, G>(
    alg: &R,
    samples: usize,
    seed: u64,
    mut gen: G,
) -> CheckReport
where
    G: FnMut(&mut ChaCha8Rng) -> R::Elem,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let x = gen(&mut rng);
        let y = gen(&mut rng);
        if let CheckOutcome::Fails { lhs, rhs } = check_baxter_identity(alg, &x, &y) {
            return CheckReport {
                checked: i + 1,
                failure: Some((i, format!("{lhs}"), format!("{rhs}"))),
            };
        }
    }
    CheckReport {
        checked: samples,
        failure: None,
    }
}

fn run_expansion_checks<R: BaxterAlgebra, G>(
    alg: &R,
    m: usize,
    n: usize,
    samples: usize,
    seed: u64,
    mut gen: G,
) -> CheckReport
where
    G: FnMut(&mut ChaCha8Rng) -> R::Elem,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let xs: Vec<R::Elem> = (0..m).map(|_| gen(&mut rng)).collect();
        let ys: Vec<R::Elem> = (0..n).map(|_| gen(&mut rng)).collect();
        if let CheckOutcome::Fails { lhs, rhs } = check_product_expansion(alg, &xs, &ys) {
            return CheckReport {
                checked: i + 1,
                failure: Some((i, format!("{lhs}"), format!("{rhs}"))),
            };
        }
    }
    CheckReport {
        checked: samples,
        failure: None,
    }
}

fn report_output(
    command: &str,
    details: &str,
    json_base: Value,
    report: CheckReport,
    format: Format,
) -> Output {
    match report.failure {
        None => {
            let text = match format {
                Format::Text => format!("{command} {details}: ok"),
                Format::Json => {
                    let mut v = json_base;
                    v["status"] = json!("ok");
                    v["checked"] = json!(report.checked);
                    v.to_string()
                }
            };
            Output { text, code: 0 }
        }
        Some((case, lhs, rhs)) => {
            let text = match format {
                Format::Text => format!(
                    "{command} {details}: FAILED at sample {case}\nlhs: {lhs}\nrhs: {rhs}"
                ),
                Format::Json => {
                    let mut v = json_base;
                    v["status"] = json!("failed");
                    v["case"] = json!(case);
                    v["lhs"] = json!(lhs);
                    v["rhs"] = json!(rhs);
                    v.to_string()
                }
            };
            Output { text, code: 1 }
        }
    }
}

fn element_spec() -> SampleSpec {
    SampleSpec {
        max_word_len: 2,
        max_terms: 2,
        coeff_bound: 3,
        max_exp: 2,
    }
}

pub fn run(cli: Cli) -> Result<Output, String> {
    match cli.command {
        Command::Count {
            m,
            n,
            l,
            by_merges,
            format,
        } => {
            let format = resolve_format(format);
            match (l, by_merges) {
                (None, false) => {
                    let count = count_mixable_pair(m, n);
                    match format {
                        Format::Text => ok(count.to_string()),
                        Format::Json => {
                            ok(json!({"m": m, "n": n, "count": count.to_string()}).to_string())
                        }
                    }
                }
                (None, true) => {
                    let counts: Vec<_> =
                        (0..=n).map(|i| count_mixable_pair_by_merges(m, n, i)).collect();
                    match format {
                        Format::Text => ok(counts
                            .iter()
                            .enumerate()
                            .map(|(i, c)| format!("{i} {c}"))
                            .collect::<Vec<_>>()
                            .join("\n")),
                        Format::Json => ok(json!({
                            "m": m, "n": n,
                            "by_merges": counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                            "count": count_mixable_pair(m, n).to_string(),
                        })
                        .to_string()),
                    }
                }
                (Some(l), false) => {
                    let count = count_mixable_triple(m, n, l);
                    match format {
                        Format::Text => ok(count.to_string()),
                        Format::Json => ok(json!(
                            {"m": m, "n": n, "l": l, "count": count.to_string()}
                        )
                        .to_string()),
                    }
                }
                (Some(l), true) => {
                    let counts: Vec<_> = (0..=n + l)
                        .map(|k| count_mixable_triple_by_degree(m, n, l, k))
                        .collect();
                    match format {
                        Format::Text => ok(counts
                            .iter()
                            .enumerate()
                            .map(|(k, c)| format!("{k} {c}"))
                            .collect::<Vec<_>>()
                            .join("\n")),
                        Format::Json => ok(json!({
                            "m": m, "n": n, "l": l,
                            "by_degree": counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                            "count": count_mixable_triple(m, n, l).to_string(),
                        })
                        .to_string()),
                    }
                }
            }
        }

        Command::Enumerate { m, n, l, format } => {
            let format = resolve_format(format);
            match l {
                None => {
                    let items = enumerate_mixable_pair(m, n);
                    match format {
                        Format::Text => ok(items
                            .iter()
                            .map(|ms| {
                                format!(
                                    "sigma={} merges={} degree={}",
                                    sigma_text(ms.shuffle.perm().images()),
                                    merges_text(&ms.merges),
                                    ms.merges.len()
                                )
                            })
                            .collect::<Vec<_>>()
                            .join("\n")),
                        Format::Json => {
                            let arr: Vec<Value> = items
                                .iter()
                                .map(|ms| {
                                    json!({
                                        "sigma": ms.shuffle.perm().images(),
                                        "merges": ms.merges
                                            .iter()
                                            .map(|(a, b)| vec![*a, *b])
                                            .collect::<Vec<_>>(),
                                        "degree": ms.merges.len(),
                                    })
                                })
                                .collect();
                            ok(json!({"m": m, "n": n, "items": arr}).to_string())
                        }
                    }
                }
                Some(l) => {
                    let items = enumerate_mixable_triple(m, n, l);
                    match format {
                        Format::Text => ok(items
                            .iter()
                            .map(|ms| {
                                format!(
                                    "sigma={} merges={} degree={}",
                                    sigma_text(ms.shuffle.perm().images()),
                                    entry_text(&ms.merges),
                                    ms.degree()
                                )
                            })
                            .collect::<Vec<_>>()
                            .join("\n")),
                        Format::Json => {
                            let arr: Vec<Value> = items
                                .iter()
                                .map(|ms| {
                                    json!({
                                        "sigma": ms.shuffle.perm().images(),
                                        "merges": ms.merges
                                            .iter()
                                            .map(|e| {
                                                let s = e.start();
                                                (s..s + e.width()).collect::<Vec<_>>()
                                            })
                                            .collect::<Vec<_>>(),
                                        "degree": ms.degree(),
                                    })
                                })
                                .collect();
                            ok(json!({"m": m, "n": n, "l": l, "items": arr}).to_string())
                        }
                    }
                }
            }
        }

        Command::Product {
            ring,
            format,
            left,
            right,
        } => {
            let format = resolve_format(format);
            let ctx = ring.resolve()?;
            let x = expr::parse_bax(&left, &ctx.ring, &ctx.alphabet).map_err(|e| e.to_string())?;
            let y =
                expr::parse_bax(&right, &ctx.ring, &ctx.alphabet).map_err(|e| e.to_string())?;
            let product = augmented_product(&x, &y, &ctx.weight).map_err(|e| e.to_string())?;
            match format {
                Format::Text => ok(product.to_string()),
                Format::Json => ok(bax_terms_json(&product).to_string()),
            }
        }

        Command::BaxterCheck {
            target,
            ring,
            samples,
            seed,
            format,
        } => {
            let format = resolve_format(format);
            let ctx = ring.resolve()?;
            let details = format!(
                "target={} ring={} lambda={} samples={} seed={}",
                match target {
                    Target::Sha => "sha",
                    Target::Hurwitz => "hurwitz",
                    Target::Zero => "zero",
                    Target::Scalar => "scalar",
                    Target::Idop => "idop",
                },
                ctx.ring,
                ctx.weight,
                samples,
                seed
            );
            let json_base = json!({
                "command": "baxter-check",
                "target": format!("{target:?}").to_lowercase(),
                "ring": ctx.ring.to_string(),
                "lambda": ctx.weight.to_string(),
                "samples": samples,
                "seed": seed,
            });
            let spec = element_spec();
            let report = match target {
                Target::Sha => {
                    let alg = ShuffleBaxterAlgebra::new(
                        ctx.ring.clone(),
                        ctx.alphabet.clone(),
                        ctx.weight.clone(),
                    )
                    .map_err(|e| e.to_string())?;
                    run_pair_checks(&alg, samples, seed, |rng| {
                        random_bax_element(rng, &ctx.ring, &ctx.alphabet, &spec)
                    })
                }
                Target::Hurwitz => {
                    if !ctx.weight.lambda.is_zero() {
                        return Err(format!(
                            "the shift operator target has weight 0, not {}",
                            ctx.weight
                        ));
                    }
                    let alg = HurwitzAlgebra::new(ctx.ring.clone());
                    run_pair_checks(&alg, samples, seed, |rng| {
                        random_hurwitz(rng, &ctx.ring, 4, 4)
                    })
                }
                Target::Zero => {
                    let alg = ZeroOperatorAlgebra::new(ctx.ring.clone(), ctx.weight.clone())
                        .map_err(|e| e.to_string())?;
                    run_pair_checks(&alg, samples, seed, |rng| random_coeff(rng, &ctx.ring, 9))
                }
                Target::Scalar => {
                    let alg = ScalarOperatorAlgebra::new(ctx.ring.clone(), ctx.weight.clone())
                        .map_err(|e| e.to_string())?;
                    run_pair_checks(&alg, samples, seed, |rng| random_coeff(rng, &ctx.ring, 9))
                }
                Target::Idop => {
                    let alg = IdentityOperatorAlgebra::new(ctx.ring.clone(), ctx.weight.clone())
                        .map_err(|e| e.to_string())?;
                    run_pair_checks(&alg, samples, seed, |rng| random_coeff(rng, &ctx.ring, 9))
                }
            };
            Ok(report_output("baxter-check", &details, json_base, report, format))
        }

        Command::Cartier {
            ring,
            embed,
            format,
            left,
            right,
        } => {
            let format = resolve_format(format);
            let ctx = ring.resolve()?;
            let x = expr::parse_cartier(&left, &ctx.ring, &ctx.alphabet)
                .map_err(|e| e.to_string())?;
            let y = expr::parse_cartier(&right, &ctx.ring, &ctx.alphabet)
                .map_err(|e| e.to_string())?;
            let product = cartier_product(&x, &y).map_err(|e| e.to_string())?;
            if embed {
                let image = embed_cartier(&product);
                match format {
                    Format::Text => ok(image.to_string()),
                    Format::Json => ok(bax_terms_json(&image).to_string()),
                }
            } else {
                match format {
                    Format::Text => ok(product.to_string()),
                    Format::Json => ok(cartier_terms_json(&product).to_string()),
                }
            }
        }

        Command::Hurwitz { command } => match command {
            HurwitzCommand::Mul {
                ring,
                format,
                left,
                right,
            } => {
                let format = resolve_format(format);
                let ring = RingDescriptor::parse(&ring).map_err(|e| e.to_string())?;
                let a = expr::parse_hurwitz(&left, &ring).map_err(|e| e.to_string())?;
                let b = expr::parse_hurwitz(&right, &ring).map_err(|e| e.to_string())?;
                let product = hurwitz_mul(&a, &b).map_err(|e| e.to_string())?;
                match format {
                    Format::Text => ok(product.to_string()),
                    Format::Json => ok(hurwitz_json(&product).to_string()),
                }
            }
            HurwitzCommand::Embed { ring, expr, format } => {
                let format = resolve_format(format);
                let ring = RingDescriptor::parse(&ring).map_err(|e| e.to_string())?;
                let element = crate::expr::parse_bax(&expr, &ring, &Alphabet::empty())
                    .map_err(|e| e.to_string())?;
                let weight = Weight::new(Coeff::zero(&ring));
                let image = embed_sha_c(&element, &weight).map_err(|e| e.to_string())?;
                match format {
                    Format::Text => ok(image.to_string()),
                    Format::Json => ok(hurwitz_json(&image).to_string()),
                }
            }
        },

        Command::Eval {
            kind,
            ring,
            format,
            expr: source,
        } => {
            let format = resolve_format(format);
            let ctx = ring.resolve()?;
            match kind {
                Kind::Bax => {
                    let e = expr::parse_bax(&source, &ctx.ring, &ctx.alphabet)
                        .map_err(|e| e.to_string())?;
                    match format {
                        Format::Text => ok(e.to_string()),
                        Format::Json => ok(bax_terms_json(&e).to_string()),
                    }
                }
                Kind::Plus => {
                    let e = expr::parse_plus(&source, &ctx.ring, &ctx.alphabet)
                        .map_err(|e| e.to_string())?;
                    match format {
                        Format::Text => ok(e.to_string()),
                        Format::Json => ok(plus_terms_json(&e).to_string()),
                    }
                }
                Kind::Cartier => {
                    let e = expr::parse_cartier(&source, &ctx.ring, &ctx.alphabet)
                        .map_err(|e| e.to_string())?;
                    match format {
                        Format::Text => ok(e.to_string()),
                        Format::Json => ok(cartier_terms_json(&e).to_string()),
                    }
                }
                Kind::Hurwitz => {
                    let e = expr::parse_hurwitz(&source, &ctx.ring).map_err(|e| e.to_string())?;
                    match format {
                        Format::Text => ok(e.to_string()),
                        Format::Json => ok(hurwitz_json(&e).to_string()),
                    }
                }
            }
        }

        Command::ExpandProp {
            m,
            n,
            target,
            ring,
            samples,
            seed,
            format,
        } => {
            if m == 0 || n == 0 {
                return Err("expansion stacks need --m >= 1 and --n >= 1".into());
            }
            let format = resolve_format(format);
            let ctx = ring.resolve()?;
            let details = format!(
                "target={} ring={} lambda={} m={} n={} samples={} seed={}",
                format!("{target:?}").to_lowercase(),
                ctx.ring,
                ctx.weight,
                m,
                n,
                samples,
                seed
            );
            let json_base = json!({
                "command": "expand-prop",
                "target": format!("{target:?}").to_lowercase(),
                "ring": ctx.ring.to_string(),
                "lambda": ctx.weight.to_string(),
                "m": m,
                "n": n,
                "samples": samples,
                "seed": seed,
            });
            let spec = element_spec();
            let report = match target {
                Target::Sha => {
                    let alg = ShuffleBaxterAlgebra::new(
                        ctx.ring.clone(),
                        ctx.alphabet.clone(),
                        ctx.weight.clone(),
                    )
                    .map_err(|e| e.to_string())?;
                    run_expansion_checks(&alg, m, n, samples, seed, |rng| {
                        random_bax_element(rng, &ctx.ring, &ctx.alphabet, &spec)
                    })
                }
                Target::Hurwitz => {
                    if !ctx.weight.lambda.is_zero() {
                        return Err(format!(
                            "the shift operator target has weight 0, not {}",
                            ctx.weight
                        ));
                    }
                    let alg = HurwitzAlgebra::new(ctx.ring.clone());
                    run_expansion_checks(&alg, m, n, samples, seed, |rng| {
                        random_hurwitz(rng, &ctx.ring, 3, 3)
                    })
                }
                Target::Zero => {
                    let alg = ZeroOperatorAlgebra::new(ctx.ring.clone(), ctx.weight.clone())
                        .map_err(|e| e.to_string())?;
                    run_expansion_checks(&alg, m, n, samples, seed, |rng| {
                        random_coeff(rng, &ctx.ring, 9)
                    })
                }
                Target::Scalar => {
                    let alg = ScalarOperatorAlgebra::new(ctx.ring.clone(), ctx.weight.clone())
                        .map_err(|e| e.to_string())?;
                    run_expansion_checks(&alg, m, n, samples, seed, |rng| {
                        random_coeff(rng, &ctx.ring, 9)
                    })
                }
                Target::Idop => {
                    let alg = IdentityOperatorAlgebra::new(ctx.ring.clone(), ctx.weight.clone())
                        .map_err(|e| e.to_string())?;
                    run_expansion_checks(&alg, m, n, samples, seed, |rng| {
                        random_coeff(rng, &ctx.ring, 9)
                    })
                }
            };
            Ok(report_output("expand-prop", &details, json_base, report, format))
        }
    }
}
