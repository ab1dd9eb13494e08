//! Command-line front end: exact block data as deterministic text or JSON.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use akblocks::blocks::{
    blocks_for_hyperplane, rouquier_blocks, rouquier_blocks_residue_oracle,
    verify_block_invariants, CheckOutcome,
};
use akblocks::combinatorics::{
    charged_symbol, content_multiset, enumerate_multipartitions, MultiPartition, WeightSystem,
};
use akblocks::hyperplanes::{essential_hyperplanes, hyperplanes_containing, Specialization};
use akblocks::render;
use akblocks::schur::{schur_factored, specialize_schur};

#[derive(Parser)]
#[command(
    name = "akblocks",
    version,
    about = "Rouquier blocks of cyclotomic Ariki-Koike algebras of G(d,1,r), exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SpecOpts {
    /// Comma-separated integer weights m_0,...,m_{d-1}
    #[arg(long, allow_hyphen_values = true, conflicts_with = "spetsial")]
    weights: Option<String>,
    /// Exponent n of the specialization x -> q^n
    #[arg(long, allow_hyphen_values = true, conflicts_with = "spetsial")]
    n: Option<i64>,
    /// Use the spetsial specialization m = (1,0,...,0), n = 1
    #[arg(long)]
    spetsial: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the essential hyperplanes of G(d,1,r), and the ones containing a
    /// given specialization
    Hyperplanes {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        spec: SpecOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Charged standard symbol and content of one multipartition
    Symbols {
        #[arg(long)]
        d: usize,
        /// Multipartition as nested JSON arrays, e.g. [[2,1],[3]]
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Comma-separated weights; all zero (ordinary symbol) if omitted
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Factored Schur element of one multipartition, optionally specialized
    Schur {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        spec: SpecOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Rouquier blocks of a specialization
    Blocks {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        spec: SpecOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Cross-check the blocks of a specialization (invariant constancy,
    /// content refinement, rank recursion, residue oracle agreement)
    Verify {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        spec: SpecOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Block tables for every essential hyperplane of G(d,1,r)
    Atlas {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
}

enum AppError {
    /// Bad request data; exit status 2, message names the offending flag.
    Validation(String),
    /// Verification found a failing check; exit status 1.
    VerificationFailed(String),
}

fn parse_weights(text: &str, d: usize) -> Result<Vec<i64>, AppError> {
    let weights = text
        .split(',')
        .map(|w| w.trim().parse::<i64>())
        .collect::<Result<Vec<i64>, _>>()
        .map_err(|e| AppError::Validation(format!("--weights: {e}")))?;
    if weights.len() != d {
        return Err(AppError::Validation(format!(
            "--weights: expected {d} comma-separated integers, got {}",
            weights.len()
        )));
    }
    Ok(weights)
}

/// Resolves --weights/--n/--spetsial into a specialization. With
/// `required = false` an absent specification yields None.
fn resolve_spec(
    d: usize,
    r: u32,
    opts: &SpecOpts,
    required: bool,
) -> Result<Option<Specialization>, AppError> {
    if opts.spetsial {
        return Ok(Some(Specialization::spetsial(d, r)));
    }
    match (&opts.weights, opts.n) {
        (Some(w), Some(n)) => {
            let weights = parse_weights(w, d)?;
            let phi = Specialization::new(d, r, weights, n)
                .map_err(|e| AppError::Validation(format!("--weights/--n: {e}")))?;
            Ok(Some(phi))
        }
        (None, None) if !required => Ok(None),
        (None, None) => Err(AppError::Validation(
            "--weights and --n (or --spetsial) are required".into(),
        )),
        (Some(_), None) => Err(AppError::Validation("--n: required when --weights is given".into())),
        (None, Some(_)) => Err(AppError::Validation("--weights: required when --n is given".into())),
    }
}

fn parse_lambda(text: &str, d: usize) -> Result<MultiPartition, AppError> {
    let lambda = render::multipartition_from_str(text)
        .map_err(|e| AppError::Validation(format!("--lambda: {e}")))?;
    if lambda.d() != d {
        return Err(AppError::Validation(format!(
            "--lambda: has {} components but --d is {d}",
            lambda.d()
        )));
    }
    Ok(lambda)
}

fn validate_rank(d: usize, r: u32) -> Result<(), AppError> {
    if d < 1 {
        return Err(AppError::Validation("--d: must be at least 1".into()));
    }
    if r < 1 {
        return Err(AppError::Validation("--r: must be at least 1".into()));
    }
    Ok(())
}

fn run(command: &Command) -> Result<String, AppError> {
    match command {
        Command::Hyperplanes { d, r, spec, out } => {
            validate_rank(*d, *r)?;
            let essential = essential_hyperplanes(*d, *r);
            let phi = resolve_spec(*d, *r, spec, false)?;
            let containing = phi.as_ref().map(hyperplanes_containing);
            Ok(match out.format {
                Format::Json => {
                    let mut obj = json!({
                        "d": d,
                        "r": r,
                        "essential": essential.iter().map(render::hyperplane_to_json).collect::<Vec<_>>(),
                    });
                    if let Some(containing) = &containing {
                        obj["containing"] = Value::Array(
                            containing.iter().map(render::hyperplane_to_json).collect(),
                        );
                    }
                    format!("{obj}\n")
                }
                Format::Text => {
                    let mut text = format!("essential hyperplanes of G({d},1,{r}): {}\n", essential.len());
                    for h in &essential {
                        text.push_str(&format!("  {}\n", render::hyperplane_to_text(h)));
                    }
                    if let Some(containing) = &containing {
                        text.push_str(&format!("containing the specialization: {}\n", containing.len()));
                        for h in containing {
                            text.push_str(&format!("  {}\n", render::hyperplane_to_text(h)));
                        }
                    }
                    text
                }
            })
        }
        Command::Symbols { d, lambda, weights, out } => {
            if *d < 1 {
                return Err(AppError::Validation("--d: must be at least 1".into()));
            }
            let lambda = parse_lambda(lambda, *d)?;
            let weights = match weights {
                Some(w) => WeightSystem::new(parse_weights(w, *d)?),
                None => WeightSystem::zero(*d),
            };
            let symbol = charged_symbol(&lambda, &weights)
                .map_err(|e| AppError::Validation(format!("--weights: {e}")))?;
            let content = content_multiset(&symbol);
            Ok(match out.format {
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "lambda": render::multipartition_to_json(&lambda),
                        "weights": weights.weights(),
                        "rows": render::symbol_to_json(&symbol),
                        "content": render::content_to_json(&content),
                    })
                ),
                Format::Text => {
                    let mut text = String::new();
                    for row in symbol.rows() {
                        let entries: Vec<String> =
                            row.entries().iter().map(|e| e.to_string()).collect();
                        text.push_str(&format!("row: {}\n", entries.join(" ")));
                    }
                    let content: Vec<String> =
                        content.to_sorted_vec().iter().map(|e| e.to_string()).collect();
                    text.push_str(&format!("content: {{{}}}\n", content.join(",")));
                    text
                }
            })
        }
        Command::Schur { d, lambda, spec, out } => {
            if *d < 1 {
                return Err(AppError::Validation("--d: must be at least 1".into()));
            }
            let lambda = parse_lambda(lambda, *d)?;
            let r = u32::try_from(lambda.size())
                .map_err(|_| AppError::Validation("--lambda: too large".into()))?;
            if r < 1 {
                return Err(AppError::Validation(
                    "--lambda: Schur elements need total size at least 1".into(),
                ));
            }
            let factored = schur_factored(&lambda, None)
                .map_err(|e| AppError::Validation(format!("--lambda: {e}")))?;
            let phi = resolve_spec(*d, r, spec, false)?;
            let specialized = phi
                .as_ref()
                .map(|phi| specialize_schur(&factored, phi))
                .transpose()
                .map_err(|e| AppError::Validation(format!("--weights/--n: {e}")))?;
            Ok(match out.format {
                Format::Json => {
                    let mut obj = json!({
                        "lambda": render::multipartition_to_json(&lambda),
                        "factored": render::factored_to_json(&factored),
                    });
                    if let Some(data) = &specialized {
                        obj["specialized"] = render::specialized_to_json(data);
                    }
                    format!("{obj}\n")
                }
                Format::Text => {
                    let mut text = format!("factored: {}\n", render::factored_to_json(&factored));
                    if let Some(data) = &specialized {
                        text.push_str(&format!(
                            "a = {}, A = {}\n",
                            data.q_valuation(),
                            data.q_degree()
                        ));
                    }
                    text
                }
            })
        }
        Command::Blocks { d, r, spec, out } => {
            validate_rank(*d, *r)?;
            let phi = resolve_spec(*d, *r, spec, true)?.expect("required");
            let universe = enumerate_multipartitions(*d, *r);
            let blocks = rouquier_blocks(&phi);
            Ok(match out.format {
                Format::Json => {
                    format!("{}\n", render::set_partition_to_json(&blocks, &universe))
                }
                Format::Text => render::set_partition_to_text(&blocks, &universe),
            })
        }
        Command::Verify { d, r, spec, out } => {
            validate_rank(*d, *r)?;
            let phi = resolve_spec(*d, *r, spec, true)?.expect("required");
            let mut report = verify_block_invariants(&phi);
            let oracle_agrees = rouquier_blocks(&phi) == rouquier_blocks_residue_oracle(&phi);
            report.checks.push(CheckOutcome {
                name: "residue_oracle_agreement".into(),
                passed: oracle_agrees,
                details: (!oracle_agrees)
                    .then(|| "hyperplane-join blocks differ from residue-oracle blocks".into()),
            });

            let report_json = json!({
                "ok": report.all_passed(),
                "checks": report
                    .checks
                    .iter()
                    .map(|c| {
                        json!({
                            "name": c.name,
                            "passed": c.passed,
                            "details": c.details,
                        })
                    })
                    .collect::<Vec<_>>(),
            });
            let rendered = match out.format {
                Format::Json => format!("{report_json}\n"),
                Format::Text => {
                    let mut text = String::new();
                    for c in &report.checks {
                        text.push_str(&format!(
                            "{}: {}{}\n",
                            c.name,
                            if c.passed { "pass" } else { "FAIL" },
                            c.details.as_deref().map(|m| format!(" ({m})")).unwrap_or_default()
                        ));
                    }
                    if !report.all_passed() {
                        text.push_str(&format!("{report_json}\n"));
                    }
                    text
                }
            };
            if report.all_passed() {
                Ok(rendered)
            } else {
                Err(AppError::VerificationFailed(rendered))
            }
        }
        Command::Atlas { d, r, out } => {
            validate_rank(*d, *r)?;
            let universe = enumerate_multipartitions(*d, *r);
            let tables: Vec<(_, _)> = essential_hyperplanes(*d, *r)
                .into_iter()
                .map(|h| {
                    let blocks =
                        blocks_for_hyperplane(&h, *d, *r).expect("listed hyperplanes are essential");
                    (h, blocks)
                })
                .collect();
            Ok(match out.format {
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "d": d,
                        "r": r,
                        "tables": tables
                            .iter()
                            .map(|(h, blocks)| {
                                json!({
                                    "hyperplane": render::hyperplane_to_json(h),
                                    "blocks": render::set_partition_to_json(blocks, &universe),
                                })
                            })
                            .collect::<Vec<_>>(),
                    })
                ),
                Format::Text => {
                    let mut text = String::new();
                    for (h, blocks) in &tables {
                        text.push_str(&format!("hyperplane {}\n", render::hyperplane_to_text(h)));
                        text.push_str(&render::set_partition_to_text(blocks, &universe));
                    }
                    text
                }
            })
        }
    }
}

fn output_opts(command: &Command) -> &OutputOpts {
    match command {
        Command::Hyperplanes { out, .. }
        | Command::Symbols { out, .. }
        | Command::Schur { out, .. }
        | Command::Blocks { out, .. }
        | Command::Verify { out, .. }
        | Command::Atlas { out, .. } => out,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = output_opts(&cli.command);
    match run(&cli.command) {
        Ok(rendered) => {
            if let Some(path) = &out.output {
                if let Err(e) = fs::write(path, rendered) {
                    eprintln!("--output: {e}");
                    return ExitCode::from(2);
                }
            } else {
                print!("{rendered}");
            }
            ExitCode::SUCCESS
        }
        Err(AppError::VerificationFailed(rendered)) => {
            if let Some(path) = &out.output {
                let _ = fs::write(path, &rendered);
            }
            print!("{rendered}");
            ExitCode::from(1)
        }
        Err(AppError::Validation(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
