//! `klr`: generate tableau crystals, run the verification sweeps, and print
//! induced characters of segment modules.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use klr_core::cartan::dominant_to_partition;
use klr_core::crystal::{generate, generate_crystal, TableauCrystal};
use klr_core::segments::{certify_tableau, induced_char, s_t, verify_phi_lambda, SegmentList};
use klr_core::tableaux::{Partition, Reading, Tableau};
use klr_core::verify::{self, SweepReport};

#[derive(Parser)]
#[command(name = "klr", version, about = "Type A crystals and KLR characters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tableau crystals B(λ).
    Crystal {
        #[command(subcommand)]
        command: CrystalCommand,
    },
    /// Run verification sweeps; exits with 1 if any check fails.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
        #[command(flatten)]
        output: ReportArgs,
    },
    /// Print the induced character of a segment list or of S_T.
    Char(CharArgs),
}

#[derive(Subcommand)]
enum CrystalCommand {
    /// Generate the crystal graph of B(λ) from its highest weight tableau.
    Graph {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Reading used for the Kashiwara operators.
        #[arg(long, value_enum, default_value_t = ReadingArg::MiddleEastern)]
        reading: ReadingArg,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Certificates (a)–(d) for every T in B(λ), or for all |λ| ≤ max-size.
    PhiLambda {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, conflicts_with = "lambda")]
        partition: Option<String>,
        /// Sweep every partition with at most n parts and |λ| ≤ this bound.
        #[arg(long, conflicts_with_all = ["lambda", "partition"])]
        max_size: Option<usize>,
    },
    /// Multiplicity of the distinguished word i(μ;k) in ch(ind S_μ[k]).
    Multiplicity {
        #[arg(long, default_value_t = 6)]
        max_mu: usize,
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// ch(ind S_μ[k]) = ch(ind S̃_μ[k]).
    Reorder {
        #[arg(long, default_value_t = 6)]
        max_mu: usize,
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// ε_k and e_k^r on ch(ind Ŝ_μ[k]).
    Hook {
        #[arg(long, default_value_t = 5)]
        max_mu: usize,
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// The built-in sl_6 example: i_T, ε and T⁺ two ways.
    #[command(name = "example-1")]
    Example1,
    /// Serre relations for ch(ind S_T) over B(λ) for each listed λ.
    Serre {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Partitions separated by `;`, e.g. "2,1;2,2;3,1".
        #[arg(long, default_value = "2,1;2,2;3,1")]
        partitions: String,
    },
    /// B(∞): random round trips and the embedding of B(λ).
    Binfinity {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value = "2,1")]
        partition: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 12)]
        max_depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// dim L(i^m) = m! and the restriction exactness identity.
    Nilhecke {
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct WeightArgs {
    #[arg(long)]
    n: usize,
    /// Highest weight as ϖ-coefficients, e.g. "1,1".
    #[arg(long, allow_hyphen_values = true, required_unless_present = "partition")]
    lambda: Option<String>,
    /// Highest weight as a partition, e.g. "2,1".
    #[arg(long, conflicts_with = "lambda")]
    partition: Option<String>,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long, value_enum, default_value_t = ReportFormat::Json, global = true)]
    format: ReportFormat,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct CharArgs {
    /// Segments as "a,ℓ;a,ℓ;…".
    #[arg(long, conflicts_with = "tableau", required_unless_present = "tableau")]
    segments: Option<String>,
    /// A JSON tableau file; the character of ind S_T is printed.
    #[arg(long)]
    tableau: Option<PathBuf>,
    /// Rank; inferred from the input when omitted.
    #[arg(long)]
    n: Option<usize>,
    /// Keep the q-grading.
    #[arg(long)]
    graded: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReadingArg {
    MiddleEastern,
    FarEastern,
}

impl From<ReadingArg> for Reading {
    fn from(r: ReadingArg) -> Self {
        match r {
            ReadingArg::MiddleEastern => Reading::MiddleEastern,
            ReadingArg::FarEastern => Reading::FarEastern,
        }
    }
}

/// A verification outcome that should exit with status 1.
struct Failed;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(value) = std::env::var("KLR_THREADS") {
        let threads: usize = value
            .parse()
            .with_context(|| format!("KLR_THREADS={value:?} is not a number"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the thread pool")?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<Result<(), Failed>> {
    match cli.command {
        Command::Crystal {
            command: CrystalCommand::Graph { weight, format, reading },
        } => {
            let lambda = parse_weight(&weight)?;
            let hw = Tableau::highest_weight(&lambda);
            let graph = match reading {
                ReadingArg::MiddleEastern => generate_crystal(&hw, weight.n)?,
                ReadingArg::FarEastern => {
                    generate_crystal(&hw, weight.n)?;
                    generate(&TableauCrystal::with_reading(weight.n, reading.into()), hw, None)
                }
            };
            match format {
                GraphFormat::Dot => print!("{}", graph.to_dot()),
                GraphFormat::Json => println!("{}", serde_json::to_string_pretty(&graph)?),
                GraphFormat::Text => print!("{graph}"),
            }
            Ok(Ok(()))
        }
        Command::Verify { command, output } => run_verify(command, &output),
        Command::Char(args) => run_char(&args).map(Ok),
    }
}

fn parse_list(text: &str) -> anyhow::Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|x| x.trim().parse::<i64>().with_context(|| format!("{x:?} is not an integer")))
        .collect()
}

fn parse_partition(text: &str) -> anyhow::Result<Partition> {
    let parts = parse_list(text)?
        .into_iter()
        .map(|p| usize::try_from(p).with_context(|| format!("negative part {p}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Partition::new(parts)?)
}

fn parse_lambda(n: usize, lambda: Option<&str>, partition: Option<&str>) -> anyhow::Result<Partition> {
    let lambda = match (lambda, partition) {
        (Some(a), _) => {
            let coeffs = parse_list(a)?;
            if coeffs.len() != n {
                bail!("--lambda needs {n} coefficients, got {}", coeffs.len());
            }
            dominant_to_partition(&coeffs)?.normalized()
        }
        (None, Some(p)) => parse_partition(p)?,
        (None, None) => bail!("give --lambda or --partition"),
    };
    if lambda.length() > n {
        bail!("λ = {lambda} has more than n = {n} parts");
    }
    Ok(lambda)
}

fn parse_weight(w: &WeightArgs) -> anyhow::Result<Partition> {
    parse_lambda(w.n, w.lambda.as_deref(), w.partition.as_deref())
}

fn emit(value: &Value, text: &str, output: &ReportArgs) -> anyhow::Result<()> {
    let pretty = serde_json::to_string_pretty(value)?;
    if let Some(path) = &output.report {
        fs::write(path, format!("{pretty}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    match output.format {
        ReportFormat::Json => println!("{pretty}"),
        ReportFormat::Text => print!("{text}"),
    }
    Ok(())
}

fn summarize(reports: &[SweepReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        s.push_str(&format!("{status} {} ({} cases)\n", r.check, r.cases));
        for f in &r.failures {
            s.push_str(&format!("  {}: {}\n", f.witness, f.detail));
        }
    }
    s
}

fn sweeps(reports: Vec<SweepReport>, output: &ReportArgs) -> anyhow::Result<Result<(), Failed>> {
    let passed = reports.iter().all(|r| r.passed);
    emit(&json!({ "passed": passed, "checks": reports }), &summarize(&reports), output)?;
    Ok(if passed { Ok(()) } else { Err(Failed) })
}

fn run_verify(command: VerifyCommand, output: &ReportArgs) -> anyhow::Result<Result<(), Failed>> {
    match command {
        VerifyCommand::PhiLambda { n, lambda, partition, max_size } => {
            let lambdas = match max_size {
                Some(m) => Partition::all_up_to(m)
                    .into_iter()
                    .filter(|l| l.length() <= n)
                    .collect(),
                None => vec![parse_lambda(n, lambda.as_deref(), partition.as_deref())?],
            };
            let mut reports = Vec::new();
            let mut text = String::new();
            for lam in &lambdas {
                let r = verify_phi_lambda(lam, n)?;
                let status = if r.passed { "PASS" } else { "FAIL" };
                text.push_str(&format!("{status} λ={} n={n} ({} tableaux)\n", r.lambda, r.tableaux));
                for f in &r.failures {
                    text.push_str(&format!("  {}: {}\n", f.tableau, f.failures.join("; ")));
                }
                reports.push(r);
            }
            let passed = reports.iter().all(|r| r.passed);
            emit(&json!({ "passed": passed, "reports": reports }), &text, output)?;
            Ok(if passed { Ok(()) } else { Err(Failed) })
        }
        VerifyCommand::Multiplicity { max_mu, n } => {
            sweeps(vec![verify::multiplicity_sweep(max_mu, n)?], output)
        }
        VerifyCommand::Reorder { max_mu, n } => sweeps(vec![verify::reorder_sweep(max_mu, n)?], output),
        VerifyCommand::Hook { max_mu, n } => sweeps(vec![verify::hook_epsilon_sweep(max_mu, n)?], output),
        VerifyCommand::Example1 => {
            let r = verify::example_1()?;
            let n = klr_core::fixtures::EXAMPLE_RANK;
            let cert = certify_tableau(&klr_core::fixtures::example_tableau(), n)?;
            let psi: Vec<String> = r.psi.iter().map(ToString::to_string).collect();
            let text = format!(
                "T = {}\nΨ_λ(T) = {}\ni_T = {}\nε = {}\nT⁺ = {}\nẽ_{}^{} T = {}\ncertificates: {}\n",
                r.tableau,
                psi.join(" "),
                r.letter,
                r.epsilon,
                r.raised,
                r.letter,
                r.epsilon,
                r.crystal_raised.as_deref().unwrap_or("0"),
                if cert.passed() { "pass" } else { "FAIL" },
            );
            let passed = r.passed && cert.passed();
            emit(&json!({ "passed": passed, "example": r, "certificate": cert }), &text, output)?;
            Ok(if passed { Ok(()) } else { Err(Failed) })
        }
        VerifyCommand::Serre { n, partitions } => {
            let lambdas = partitions
                .split(';')
                .map(parse_partition)
                .collect::<anyhow::Result<Vec<_>>>()?;
            sweeps(vec![verify::serre_sweep(&lambdas, n)?], output)
        }
        VerifyCommand::Binfinity { n, partition, samples, max_depth, seed } => {
            let lambda = parse_partition(&partition)?;
            sweeps(
                vec![
                    verify::binfinity_roundtrip(samples, n, max_depth, seed),
                    verify::binfinity_embedding(&lambda, n)?,
                ],
                output,
            )
        }
        VerifyCommand::Nilhecke { max_m, n, samples, seed } => sweeps(
            vec![
                verify::nilhecke_sweep(max_m, n)?,
                verify::exactness_sweep(samples, n, seed)?,
            ],
            output,
        ),
    }
}

fn run_char(args: &CharArgs) -> anyhow::Result<()> {
    let (segments, n) = match (&args.segments, &args.tableau) {
        (Some(text), _) => {
            let n = match args.n {
                Some(n) => n,
                None => infer_rank(text)?,
            };
            (SegmentList::parse(text, n)?, n)
        }
        (None, Some(path)) => {
            let data = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let t: Tableau = serde_json::from_str(&data).context("parsing the tableau")?;
            let n = args
                .n
                .unwrap_or_else(|| t.num_rows().max(t.max_entry().saturating_sub(1)).max(1));
            if !t.validate_ssyt(n) {
                bail!("{t} is not a semistandard tableau for rank {n}");
            }
            (s_t(&t, n)?, n)
        }
        (None, None) => bail!("give --segments or --tableau"),
    };
    let ch = induced_char(&segments, n, args.graded)?;
    match args.format {
        ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&ch)?),
        ReportFormat::Text => println!("{ch}"),
    }
    Ok(())
}

/// The largest letter used by a segment list given as text.
fn infer_rank(text: &str) -> anyhow::Result<usize> {
    let loose = SegmentList::parse(text, usize::MAX / 2)?;
    Ok(loose
        .segments()
        .iter()
        .map(|s| s.end())
        .max()
        .unwrap_or(1)
        .max(1))
}
