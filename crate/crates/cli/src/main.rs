//! Command-line front end for the quasitone library.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on domain errors. All
//! tabular output is tab-separated with `#`-prefixed header lines, and
//! rerunning a command reproduces its bytes exactly.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use quasitone::render::write_samples_text;
use quasitone::score::{parse_score_document, write_timeline_tsv, Score};
use quasitone::words::Word;
use quasitone::{
    best_approximants, classify_morse_hedlund, combined_period, complexity, expand,
    fibonacci_word, quasiperiods, rationally_independent, raindrops_preset, render, schedule,
    verify_near_coincidence, write_wav, ApproximantKind, Fraction, GoldenReal, Independence,
    Real, RenderConfig, SubstitutionRule,
};

#[derive(Parser)]
#[command(
    name = "quasitone",
    about = "Best rational approximants, substitution words, quasiperiod reports, and quasiperiodic music rendering",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Best rational approximants of a value
    Approx(ApproxArgs),
    /// Generate substitution words and subword-complexity tables
    Word(WordArgs),
    /// Near-coincidence (quasiperiod) reports for a period pair
    Quasiperiod(QuasiperiodArgs),
    /// Decide rational independence of exact values
    Independent(IndependentArgs),
    /// Combined period (least common multiple) of stacked cycles
    Period(PeriodArgs),
    /// Schedule a score and render it to a WAV file
    Compose(ComposeArgs),
}

#[derive(Args)]
struct ApproxArgs {
    /// Value: an integer, `a/b`, `phi`, `a+b*phi`, or `pi`
    value: String,
    /// Largest denominator to consider
    #[arg(long = "max-den")]
    max_den: u64,
    /// Approximant kind
    #[arg(long, value_parser = parse_kind, default_value = "second")]
    kind: ApproximantKind,
}

#[derive(Args)]
struct WordArgs {
    /// Substitution rules, e.g. "A:AB,B:A"
    #[arg(long, conflicts_with = "fibonacci", requires = "axiom", requires = "iters")]
    rule: Option<String>,
    /// Axiom string for --rule
    #[arg(long)]
    axiom: Option<String>,
    /// Number of rewriting iterations for --rule
    #[arg(long)]
    iters: Option<usize>,
    /// Generate the Fibonacci word instead of using --rule
    #[arg(long, requires = "length")]
    fibonacci: bool,
    /// Prefix length for --fibonacci
    #[arg(long)]
    length: Option<usize>,
    /// Also print the sigma table for window lengths 1..=N
    #[arg(long)]
    complexity: Option<usize>,
    /// Truncate expanded words to this many symbols
    #[arg(long, default_value_t = 1_000_000)]
    max_length: usize,
    /// Also print the bounded-complexity classification up to N
    #[arg(long)]
    classify: Option<usize>,
}

#[derive(Args)]
struct QuasiperiodArgs {
    /// First period (exact expression)
    #[arg(long)]
    p1: String,
    /// Second period (exact expression)
    #[arg(long)]
    p2: String,
    /// Largest approximant denominator
    #[arg(long = "max-den")]
    max_den: u64,
    /// Approximant kind
    #[arg(long, value_parser = parse_kind, default_value = "second")]
    kind: ApproximantKind,
    /// Double-check each report by brute-force scan
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct IndependentArgs {
    /// Exact values (integer, `a/b`, `phi`, `a+b*phi`)
    #[arg(required = true)]
    values: Vec<String>,
}

#[derive(Args)]
struct PeriodArgs {
    /// Cycle lengths
    #[arg(required = true)]
    lengths: Vec<u64>,
}

#[derive(Args)]
struct ComposeArgs {
    /// Use a built-in score
    #[arg(long, conflicts_with = "score")]
    preset: Option<String>,
    /// Read the score from a config file
    #[arg(long)]
    score: Option<String>,
    /// Schedule horizon in seconds (decimal); overrides the file's horizon
    #[arg(long)]
    horizon: Option<String>,
    /// Output WAV path
    #[arg(long)]
    out: String,
    /// Also write the scheduled timeline as tab-separated text
    #[arg(long)]
    events: Option<String>,
    /// Also dump raw samples as text, one integer per line
    #[arg(long)]
    samples: Option<String>,
}

fn parse_kind(s: &str) -> Result<ApproximantKind, String> {
    match s {
        "first" => Ok(ApproximantKind::First),
        "second" => Ok(ApproximantKind::Second),
        _ => Err(format!("unknown kind {s:?}, expected first or second")),
    }
}

/// A failure after argument parsing succeeded.
struct DomainError(String);

impl<E: std::error::Error> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

fn usage_error(message: String) -> DomainError {
    // tagged so main can map it to exit code 1
    DomainError(format!("UsageError: {message}"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    return ExitCode::SUCCESS;
                }
                _ => 1,
            };
            eprint!("{e}");
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(DomainError(message)) => {
            if let Some(rest) = message.strip_prefix("UsageError: ") {
                eprintln!("error: {rest}");
                ExitCode::from(1)
            } else {
                eprintln!("{message}");
                ExitCode::from(2)
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), DomainError> {
    match cli.command {
        Command::Approx(args) => run_approx(args),
        Command::Word(args) => run_word(args),
        Command::Quasiperiod(args) => run_quasiperiod(args),
        Command::Independent(args) => run_independent(args),
        Command::Period(args) => run_period(args),
        Command::Compose(args) => run_compose(args),
    }
}

fn parse_value(s: &str) -> Result<Real, DomainError> {
    s.parse::<Real>()
        .map_err(|e| usage_error(format!("bad value {s:?}: {e}")))
}

fn run_approx(args: ApproxArgs) -> Result<(), DomainError> {
    if args.max_den < 1 {
        return Err(usage_error("--max-den must be at least 1".into()));
    }
    let value = parse_value(&args.value)?;
    let list = best_approximants(&value, args.max_den, args.kind)?;
    println!(
        "# approximants of {} kind={} max-den={}",
        args.value,
        args.kind.label(),
        args.max_den
    );
    for fraction in list {
        println!("{fraction}");
    }
    Ok(())
}

fn run_word(args: WordArgs) -> Result<(), DomainError> {
    let word = if args.fibonacci {
        let length = args.length.expect("clap enforces --length");
        if length < 1 {
            return Err(usage_error("--length must be at least 1".into()));
        }
        fibonacci_word(length)
    } else if let Some(rule_text) = &args.rule {
        let rule = parse_rule(rule_text)?;
        let axiom = Word::literal(args.axiom.clone().expect("clap enforces --axiom"));
        let iters = args.iters.expect("clap enforces --iters");
        expand(&rule, &axiom, iters, args.max_length)?
    } else {
        return Err(usage_error("need either --fibonacci or --rule".into()));
    };
    println!("{word}");
    if let Some(max_n) = args.complexity {
        println!("# n\tsigma");
        for n in 1..=max_n {
            println!("{n}\t{}", complexity(&word, n)?);
        }
    }
    if let Some(max_n) = args.classify {
        print!("{}", classify_morse_hedlund(&word, max_n)?);
    }
    Ok(())
}

fn parse_rule(text: &str) -> Result<SubstitutionRule, DomainError> {
    let mut pairs = Vec::new();
    for piece in text.split(',') {
        let (head, image) = piece
            .split_once(':')
            .ok_or_else(|| usage_error(format!("rule piece {piece:?} is not SYMBOL:IMAGE")))?;
        let head = head.trim();
        if head.chars().count() != 1 {
            return Err(usage_error(format!("rule head {head:?} must be one symbol")));
        }
        pairs.push((head.chars().next().unwrap(), image.trim().to_string()));
    }
    let borrowed: Vec<(char, &str)> =
        pairs.iter().map(|(c, s)| (*c, s.as_str())).collect();
    Ok(SubstitutionRule::new(&borrowed)?)
}

fn run_quasiperiod(args: QuasiperiodArgs) -> Result<(), DomainError> {
    let p1 = parse_value(&args.p1)?;
    let p2 = parse_value(&args.p2)?;
    let reports = quasiperiods(&p1, &p2, args.max_den, args.kind)?;
    println!(
        "# quasiperiods of p1={} p2={} kind={} max-den={} (quasiperiod = min of pair, a convention)",
        args.p1,
        args.p2,
        args.kind.label(),
        args.max_den
    );
    println!("# approximant\ta*p1\tb*p2\tgap\tquasiperiod");
    for report in &reports {
        let mut line = String::new();
        write!(
            line,
            "{}\t{:.10}\t{:.10}\t{:.10}\t{:.10}",
            report.approximant,
            report.coincidence_pair.0,
            report.coincidence_pair.1,
            report.gap,
            report.quasiperiod
        )
        .expect("string write");
        if args.verify {
            let confirmed = verify_near_coincidence(&p1, &p2, report, 1e-9);
            write!(line, "\t{}", if confirmed { "confirmed" } else { "refuted" })
                .expect("string write");
        }
        println!("{line}");
    }
    Ok(())
}

fn run_independent(args: IndependentArgs) -> Result<(), DomainError> {
    let mut values = Vec::new();
    for text in &args.values {
        let value = parse_value(text)?;
        let golden = match value {
            Real::Rational(f) => GoldenReal::from_fraction(f),
            Real::Golden(g) => g,
            Real::Decimal(_) => {
                return Err(DomainError(format!(
                    "InexactValue: {text:?} has no exact {{1, phi}} embedding; independence needs exact values"
                )));
            }
        };
        if golden.is_zero() {
            return Err(DomainError(format!("ZeroValue: {text:?} must be nonzero")));
        }
        values.push(golden);
    }
    println!("# independent\twitness");
    match rationally_independent(&values) {
        Independence::Independent => println!("true"),
        Independence::Dependent { witness } => {
            let parts: Vec<String> = witness.iter().map(BigInt::to_string).collect();
            println!("false\t{}", parts.join("\t"));
        }
    }
    Ok(())
}

fn run_period(args: PeriodArgs) -> Result<(), DomainError> {
    if args.lengths.contains(&0) {
        return Err(usage_error("cycle lengths must be positive".into()));
    }
    println!("{}", combined_period(&args.lengths));
    Ok(())
}

fn run_compose(args: ComposeArgs) -> Result<(), DomainError> {
    let (score, file_horizon): (Score, Option<Fraction>) = match (&args.preset, &args.score) {
        (Some(name), None) => {
            if name != "raindrops" {
                return Err(usage_error(format!(
                    "unknown preset {name:?}; available: raindrops"
                )));
            }
            (raindrops_preset(), None)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| DomainError(format!("IoFailure: {path}: {e}")))?;
            let document = parse_score_document(&text)?;
            (document.score, document.horizon)
        }
        _ => return Err(usage_error("need exactly one of --preset or --score".into())),
    };

    let horizon = match &args.horizon {
        Some(text) => Fraction::from_decimal_str(text)
            .map_err(|e| usage_error(format!("bad --horizon: {e}")))?,
        None => file_horizon
            .ok_or_else(|| usage_error("no --horizon given and the score sets none".into()))?,
    };
    if !horizon.is_positive() {
        return Err(usage_error("horizon must be positive".into()));
    }

    if !score.independence_checked {
        let witness = score
            .independence_witness
            .as_ref()
            .map(|w| {
                w.iter().map(BigInt::to_string).collect::<Vec<_>>().join(" ")
            })
            .unwrap_or_default();
        eprintln!(
            "warning: part periods are rationally dependent (relation {witness}); the piece is periodic"
        );
    }

    let timeline = schedule(&score, &horizon)?;
    let config = RenderConfig::default();
    let samples = render(&timeline, &config)?;

    let mut wav_bytes = Vec::new();
    write_wav(&samples, &config, &mut wav_bytes)?;
    fs::write(&args.out, &wav_bytes)
        .map_err(|e| DomainError(format!("IoFailure: {}: {e}", args.out)))?;

    if let Some(path) = &args.events {
        let mut buf = Vec::new();
        write_timeline_tsv(&timeline, &mut buf)
            .map_err(|e| DomainError(format!("IoFailure: {path}: {e}")))?;
        fs::write(path, &buf).map_err(|e| DomainError(format!("IoFailure: {path}: {e}")))?;
    }
    if let Some(path) = &args.samples {
        let mut buf = Vec::new();
        write_samples_text(&samples, &mut buf)
            .map_err(|e| DomainError(format!("IoFailure: {path}: {e}")))?;
        fs::write(path, &buf).map_err(|e| DomainError(format!("IoFailure: {path}: {e}")))?;
    }

    let mut stdout = std::io::stdout().lock();
    writeln!(stdout, "# compose").expect("stdout");
    writeln!(stdout, "parts\t{}", score.parts.len()).expect("stdout");
    writeln!(stdout, "events\t{}", timeline.events.len()).expect("stdout");
    writeln!(stdout, "samples\t{}", samples.len()).expect("stdout");
    Ok(())
}
