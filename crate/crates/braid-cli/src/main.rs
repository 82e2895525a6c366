//! `braid` — normalize braid words to the Garside `Δ^k · A` form, decide
//! equality, and run the confluence, lemma and oracle checks from the
//! command line.
//!
//! Exit codes: 0 success (or `equal` true / reports clean), 1 logical
//! failure (`equal` false, report failures), 2 parse or usage errors,
//! 3 resource limits (step guard, class caps, enumeration budgets).

use std::fs;
use std::time::Instant;

use braid_cli::{parse_pair, parse_word, WordParseError};
use braid_garside::{
    confluence, desugar_inverses, normal_form_with_guard, normalize_with_guard, BraidError,
    NormalForm, Policy, SignedWord,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

const STEP_GUARD_ENV: &str = "BRAID_STEP_GUARD";

#[derive(Parser)]
#[command(
    name = "braid",
    about = "Garside normal forms for braid groups via confluent rewriting",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Number of Artin generators n (the group is B_{n+1})
    #[arg(short = 'n', long = "rank")]
    rank: u16,

    /// Emit machine-readable JSON (one array or object per invocation)
    #[arg(long)]
    json: bool,

    /// Rewrite-step guard; exceeding it is an internal error, exit 3
    #[arg(long, env = STEP_GUARD_ENV, default_value_t = braid_garside::DEFAULT_STEP_GUARD)]
    step_guard: u64,
}

#[derive(Args)]
struct BatchInput {
    /// Words given directly on the command line
    words: Vec<String>,

    /// Read one item per line from a file instead ("-" for stdin)
    #[arg(long, conflicts_with = "words")]
    file: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite words to the normal form `D^k | tail`
    Normalize {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        input: BatchInput,
        /// Also print every rewrite step as "before | rule@span | after"
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether two words are the same group element
    Equal {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        input: BatchInput,
    },
    /// Normal form of the group inverse
    Invert {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        input: BatchInput,
    },
    /// Check joinability of every rule composition within a budget
    Confluence {
        #[command(flatten)]
        common: CommonArgs,
        /// Upper bound on instantiated left-hand-side length
        #[arg(short = 'L', long = "max-lhs-len")]
        max_lhs_len: usize,
    },
    /// Randomized re-verification of the derived word identities
    Lemmas {
        #[command(flatten)]
        common: CommonArgs,
        /// Random instantiations per identity
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cross-check engine equality against the free-group oracle
    OracleCheck {
        #[command(flatten)]
        common: CommonArgs,
        /// Check every signed word up to --max-len instead of sampling
        #[arg(long)]
        exhaustive: bool,
        /// Maximum word length
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        /// Number of sampled words (ignored with --exhaustive)
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time normalization over a generated corpus
    Bench {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Signed length of each generated word
        #[arg(long, default_value_t = 24)]
        len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure with its process exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<WordParseError> for Failure {
    fn from(err: WordParseError) -> Failure {
        Failure::new(2, err.to_string())
    }
}

impl From<BraidError> for Failure {
    fn from(err: BraidError) -> Failure {
        let code = match err {
            BraidError::StepGuardExceeded { .. }
            | BraidError::ClassCapExceeded { .. }
            | BraidError::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        Failure::new(code, err.to_string())
    }
}

fn main() {
    // Die quietly on a closed pipe, like any other line-oriented unix tool.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(failure) => {
            eprintln!("braid: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}

fn read_items(input: &BatchInput) -> Result<Vec<String>, Failure> {
    match &input.file {
        None => Ok(input.words.clone()),
        Some(path) => {
            let text = if path == "-" {
                use std::io::Read;
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Failure::new(2, format!("reading stdin: {e}")))?;
                buf
            } else {
                fs::read_to_string(path)
                    .map_err(|e| Failure::new(2, format!("reading {path}: {e}")))?
            };
            Ok(text.lines().map(str::to_string).collect())
        }
    }
}

fn nf_json(nf: &NormalForm) -> Value {
    json!({
        "delta_exp": nf.delta_exp(),
        "tail": nf.tail().letters().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Normalize {
            common,
            input,
            trace,
        } => {
            let mut outputs = Vec::new();
            for item in read_items(&input)? {
                let u = parse_word(&item, common.rank)?;
                let steps = if trace {
                    let word = desugar_inverses(&u);
                    normalize_with_guard(&word, Policy::Deterministic, common.step_guard)?.1
                } else {
                    braid_garside::RewriteTrace::default()
                };
                let nf = normal_form_with_guard(&u, common.step_guard)?;
                outputs.push((nf, steps));
            }
            if common.json {
                let items: Vec<Value> = outputs
                    .iter()
                    .map(|(nf, steps)| {
                        let mut v = nf_json(nf);
                        if trace {
                            v["trace"] = steps
                                .steps
                                .iter()
                                .map(|s| Value::String(s.to_string()))
                                .collect();
                        }
                        v
                    })
                    .collect();
                println!("{}", Value::Array(items));
            } else {
                for (nf, steps) in &outputs {
                    if trace {
                        for step in &steps.steps {
                            println!("{step}");
                        }
                    }
                    println!("{nf}");
                }
            }
            Ok(0)
        }

        Command::Equal { common, input } => {
            let items = read_items(&input)?;
            let pairs: Vec<(SignedWord, SignedWord)> = if input.file.is_none() {
                if items.len() != 2 {
                    return Err(Failure::new(
                        2,
                        "equal takes exactly two words (or --file with 'w1 | w2' lines)",
                    ));
                }
                vec![(
                    parse_word(&items[0], common.rank)?,
                    parse_word(&items[1], common.rank)?,
                )]
            } else {
                items
                    .iter()
                    .map(|line| parse_pair(line, common.rank))
                    .collect::<Result<_, _>>()?
            };
            let mut results = Vec::new();
            for (u, v) in &pairs {
                let eq = normal_form_with_guard(u, common.step_guard)?
                    == normal_form_with_guard(v, common.step_guard)?;
                results.push(eq);
            }
            if common.json {
                println!("{}", json!(results));
            } else {
                for eq in &results {
                    println!("{eq}");
                }
            }
            Ok(if results.iter().all(|&e| e) { 0 } else { 1 })
        }

        Command::Invert { common, input } => {
            let mut forms = Vec::new();
            for item in read_items(&input)? {
                let u = parse_word(&item, common.rank)?;
                forms.push(normal_form_with_guard(&u.inverse(), common.step_guard)?);
            }
            if common.json {
                println!("{}", Value::Array(forms.iter().map(nf_json).collect()));
            } else {
                for nf in &forms {
                    println!("{nf}");
                }
            }
            Ok(0)
        }

        Command::Confluence {
            common,
            max_lhs_len,
        } => {
            let report = confluence::check_compositions(common.rank, max_lhs_len)?;
            if common.json {
                let records: Vec<Value> = report
                    .records
                    .iter()
                    .map(|r| {
                        json!({
                            "word": r.ambiguity.word.to_string(),
                            "kind": r.ambiguity.kind.to_string(),
                            "left": r.ambiguity.left.to_string(),
                            "right": r.ambiguity.right.to_string(),
                            "joinable": r.joinable,
                            "left_nf": r.left_nf.to_string(),
                            "right_nf": r.right_nf.to_string(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "rank": report.rank,
                        "max_lhs_len": report.max_lhs_len,
                        "instances": report.instances,
                        "total": report.total,
                        "joinable": report.joinable,
                        "failures": report.failure_count(),
                        "records": records,
                    })
                );
            } else {
                print!("{report}");
            }
            Ok(if report.failure_count() == 0 { 0 } else { 1 })
        }

        Command::Lemmas {
            common,
            trials,
            seed,
        } => {
            let report = confluence::lemma_suite(common.rank, trials, seed)?;
            if common.json {
                let entries: Vec<Value> = report
                    .entries
                    .iter()
                    .map(|e| {
                        json!({
                            "lemma": e.lemma.to_string(),
                            "trials": e.trials,
                            "counterexamples": e.counterexamples.iter().map(|c| {
                                json!({
                                    "lhs": c.lhs.to_string(),
                                    "rhs": c.rhs.to_string(),
                                    "lhs_nf": c.lhs_nf.to_string(),
                                    "rhs_nf": c.rhs_nf.to_string(),
                                })
                            }).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "rank": report.rank,
                        "trials": report.requested_trials,
                        "seed": report.seed,
                        "counterexamples": report.counterexample_count(),
                        "entries": entries,
                    })
                );
            } else {
                print!("{report}");
            }
            Ok(if report.counterexample_count() == 0 { 0 } else { 1 })
        }

        Command::OracleCheck {
            common,
            exhaustive,
            max_len,
            trials,
            seed,
        } => {
            let words = oracle_check_corpus(common.rank, exhaustive, max_len, trials, seed);
            let mut disagreements = 0usize;
            let mut pair_count = 0usize;
            for u in &words {
                let nf = normal_form_with_guard(u, common.step_guard)?;
                if !braid_garside::oracle_equal(u, &nf.to_signed_word())? {
                    disagreements += 1;
                    eprintln!("normal form of {u} is not oracle-equal to it");
                }
            }
            for pair in words.windows(2) {
                let engine = normal_form_with_guard(&pair[0], common.step_guard)?
                    == normal_form_with_guard(&pair[1], common.step_guard)?;
                let oracle = braid_garside::oracle_equal(&pair[0], &pair[1])?;
                if engine != oracle {
                    disagreements += 1;
                    eprintln!(
                        "engine and oracle disagree on {} vs {}",
                        pair[0], pair[1]
                    );
                }
                pair_count += 1;
            }
            if common.json {
                println!(
                    "{}",
                    json!({
                        "words": words.len(),
                        "pairs": pair_count,
                        "disagreements": disagreements,
                    })
                );
            } else {
                println!(
                    "checked {} words and {} pairs: {} disagreements",
                    words.len(),
                    pair_count,
                    disagreements
                );
            }
            Ok(if disagreements == 0 { 0 } else { 1 })
        }

        Command::Bench {
            common,
            count,
            len,
            seed,
        } => {
            let words = random_corpus(common.rank, count, len, seed);
            let mut total_steps = 0usize;
            let mut max_ms = 0.0f64;
            let start = Instant::now();
            for u in &words {
                let word = desugar_inverses(u);
                let one = Instant::now();
                let (_, trace) =
                    normalize_with_guard(&word, Policy::Deterministic, common.step_guard)?;
                max_ms = max_ms.max(one.elapsed().as_secs_f64() * 1e3);
                total_steps += trace.steps.len();
            }
            let total_ms = start.elapsed().as_secs_f64() * 1e3;
            let mean_ms = total_ms / count.max(1) as f64;
            let mean_steps = total_steps as f64 / count.max(1) as f64;
            if common.json {
                println!(
                    "{}",
                    json!({
                        "rank": common.rank,
                        "count": count,
                        "len": len,
                        "total_ms": total_ms,
                        "mean_ms": mean_ms,
                        "max_ms": max_ms,
                        "mean_steps": mean_steps,
                    })
                );
            } else {
                println!(
                    "normalized {count} words (rank {}, signed length {len}): \
                     total {total_ms:.2} ms, mean {mean_ms:.4} ms, max {max_ms:.4} ms, \
                     mean steps {mean_steps:.1}",
                    common.rank
                );
            }
            Ok(0)
        }
    }
}

fn oracle_check_corpus(
    rank: u16,
    exhaustive: bool,
    max_len: usize,
    trials: usize,
    seed: u64,
) -> Vec<SignedWord> {
    use braid_garside::{Generator, Sign, SignedLetter};
    let mut tokens: Vec<SignedLetter> = Vec::new();
    for i in 1..=rank {
        for sign in [Sign::Pos, Sign::Neg] {
            tokens.push(SignedLetter {
                generator: Generator::artin(i),
                sign,
            });
        }
    }
    tokens.push(SignedLetter {
        generator: Generator::DELTA,
        sign: Sign::Pos,
    });
    tokens.push(SignedLetter {
        generator: Generator::DELTA_INV,
        sign: Sign::Pos,
    });

    if exhaustive {
        let mut out = vec![SignedWord::empty(rank)];
        let mut layer: Vec<Vec<SignedLetter>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for stem in &layer {
                for &t in &tokens {
                    let mut ext = stem.clone();
                    ext.push(t);
                    out.push(SignedWord::new(rank, ext.clone()).expect("valid letters"));
                    next.push(ext);
                }
            }
            layer = next;
        }
        out
    } else {
        // Small deterministic generator, decoupled from the library's RNG.
        let mut state = seed.wrapping_add(0x9E3779B97F4A7C15);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        (0..trials)
            .map(|_| {
                let len = (next() as usize) % (max_len + 1);
                let letters = (0..len).map(|_| tokens[(next() as usize) % tokens.len()]).collect();
                SignedWord::new(rank, letters).expect("valid letters")
            })
            .collect()
    }
}

fn random_corpus(rank: u16, count: usize, len: usize, seed: u64) -> Vec<SignedWord> {
    let mut words = oracle_check_corpus(rank, false, len, count, seed);
    // Benchmarks want fixed-length words; rebuild short ones.
    let tokens = oracle_check_corpus(rank, true, 1, 0, 0);
    let singles: Vec<SignedWord> = tokens.into_iter().filter(|w| w.len() == 1).collect();
    let mut state = seed.wrapping_add(1);
    for w in words.iter_mut() {
        while w.len() < len {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let pick = &singles[(state as usize) % singles.len()];
            *w = w.concat(pick).expect("same rank");
        }
    }
    words
}
