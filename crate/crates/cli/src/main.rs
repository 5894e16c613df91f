mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use casimir_kit::casimir::CasimirData;
use casimir_kit::fusion::{fpdim_ring_with, FusionRing, DEFAULT_PRECISION};
use casimir_kit::hi::{
    build_hi_ring, check_ring_against_oracle, hi_cyclic, recognize_hi_cyclic, sweep_par, FiniteGroup, SweepRow,
};
use casimir_kit::reps::{codegree_report_on, commutative_codegrees_with};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use report::{Codegrees, InvariantsReport, Results, RingSummary, SpectrumEntry, SweepReport, SweepReportRow};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INVALID: u8 = 2;

#[derive(Parser)]
#[command(name = "casimir-kit", version, about = "Casimir numbers, determinants and formal codegrees of fusion rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the ring file of HI_G.
    Gen(GenArgs),
    /// Compute invariants of a ring file.
    Invariants(InvariantsArgs),
    /// Compare HI_{Z_n}, n = 1..=N, against the closed forms.
    Sweep(SweepArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["n", "group"])))]
struct GenArgs {
    /// Build HI_{Z_n}.
    #[arg(long)]
    n: Option<usize>,
    /// Build HI_G from a JSON Cayley table.
    #[arg(long)]
    group: Option<PathBuf>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InvariantsArgs {
    ring: PathBuf,
    #[arg(long)]
    casimir: bool,
    #[arg(long)]
    det: bool,
    #[arg(long)]
    spectrum: bool,
    #[arg(long)]
    codegrees: bool,
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    timing: bool,
    /// Corrupts one structure constant of the last ring before checking it.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let result = match cli.command {
        Command::Gen(args) => gen(args),
        Command::Invariants(args) => invariants(args, command),
        Command::Sweep(args) => sweep(args, command),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn precision() -> Result<f64, String> {
    match std::env::var("CASIMIR_KIT_PRECISION") {
        Ok(text) => match text.trim().parse::<f64>() {
            Ok(p) if p > 0.0 && p < 1.0 => Ok(p),
            _ => Err(format!("CASIMIR_KIT_PRECISION must be a number in (0, 1), got {text:?}")),
        },
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn gen(args: GenArgs) -> Result<u8, String> {
    let ring = match (args.n, &args.group) {
        (Some(0), _) => return Err("--n must be at least 1".into()),
        (Some(n), _) => hi_cyclic(n),
        (None, Some(path)) => {
            let group = FiniteGroup::from_json(&read(path)?).map_err(|e| e.to_string())?;
            build_hi_ring(&group)
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let json = ring.to_json();
    let violations = ring.validate();
    let status = if violations.is_empty() {
        "validation OK".to_string()
    } else {
        format!("validation FAILED ({} violations, first: {})", violations.len(), violations[0])
    };
    match &args.out {
        Some(path) => {
            std::fs::write(path, json + "\n").map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            println!("wrote {}: rank {}, {status}", path.display(), ring.rank());
        }
        None => {
            println!("{json}");
            eprintln!("rank {}, {status}", ring.rank());
        }
    }
    Ok(if violations.is_empty() { 0 } else { EXIT_MISMATCH })
}

fn invariants(args: InvariantsArgs, command: String) -> Result<u8, String> {
    let precision = precision()?;
    let start = Instant::now();
    let ring = FusionRing::from_json(&read(&args.ring)?).map_err(|e| e.to_string())?;
    let violations = ring.validate();
    if !violations.is_empty() {
        eprintln!("{}: {} axiom violations", args.ring.display(), violations.len());
        for v in &violations {
            eprintln!("  {v}");
        }
        return Ok(EXIT_INVALID);
    }
    let none = !(args.casimir || args.det || args.spectrum || args.codegrees);
    let want = |flag: bool| flag || args.all || none;
    let ring = Arc::new(ring);
    let recognized = recognize_hi_cyclic(&ring);
    let data = CasimirData::new(&ring);
    let mut results = Results::default();
    if want(args.casimir) {
        let c = data.casimir_number().map_err(|e| e.to_string())?;
        results.casimir_number = Some(c.to_string());
    }
    if want(args.det) {
        results.determinant = Some(data.determinant().to_string());
    }
    if want(args.spectrum) {
        let spectrum = data.spectrum().map_err(|e| e.to_string())?;
        results.spectrum = Some(spectrum.iter().map(SpectrumEntry::from).collect());
    }
    if want(args.codegrees) {
        let fp = fpdim_ring_with(&ring, precision).value;
        results.codegrees = Some(match recognized {
            Some(n) => {
                let report = codegree_report_on(&ring, n).map_err(|e| e.to_string())?;
                Codegrees::from_report("exact", &report, fp)
            }
            None if ring.is_commutative() => match commutative_codegrees_with(&ring, precision) {
                Ok(report) => Codegrees::from_report("characters", &report, fp),
                Err(e) => Codegrees::spectrum_only(&format!("character extraction failed: {e}")),
            },
            None => Codegrees::spectrum_only(
                "codegree extraction needs the irreducible representation dimensions of this noncommutative ring",
            ),
        });
    }
    let report = InvariantsReport {
        command,
        ring: RingSummary {
            rank: ring.rank(),
            labels: ring.labels().to_vec(),
            commutative: ring.is_commutative(),
            recognized: recognized.map(|n| format!("HI_Z_{n}")),
        },
        results,
        elapsed_ms: args.timing.then(|| start.elapsed().as_millis()),
    };
    emit(args.format, &report, InvariantsReport::to_text);
    Ok(0)
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl Fn(&T) -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("report serializes")),
        Format::Text => print!("{}", text(value)),
    }
}

fn sweep(args: SweepArgs, command: String) -> Result<u8, String> {
    if args.n_max == 0 {
        return Err("--n-max must be at least 1".into());
    }
    let start = Instant::now();
    let mut rows = sweep_par(args.n_max, args.jobs);
    if args.inject_fault {
        let n = args.n_max;
        let ring = hi_cyclic(n);
        let (x, unit) = (n, ring.unit());
        let bumped = ring.n(x, x, unit) + BigInt::from(1);
        rows[n - 1] = check_ring_against_oracle(n, &Arc::new(ring.with_entry(x, x, unit, bumped)));
    }
    let report = SweepReport {
        command,
        all_match: rows.iter().all(SweepRow::all_match),
        rows: rows.iter().map(row).collect(),
        elapsed_ms: args.timing.then(|| start.elapsed().as_millis()),
    };
    emit(args.format, &report, SweepReport::to_text);
    for r in rows.iter().filter(|r| !r.all_match()) {
        let which: Vec<String> = r.mismatches.iter().map(|q| q.to_string()).collect();
        eprintln!("mismatch at n={}: {}", r.n, which.join(", "));
    }
    Ok(if report.all_match { 0 } else { EXIT_MISMATCH })
}

fn row(r: &SweepRow) -> SweepReportRow {
    SweepReportRow {
        n: r.n,
        casimir: r.casimir.as_ref().map(|c| c.to_string()),
        expected_casimir: r.expected_casimir.to_string(),
        determinant: r.determinant.to_string(),
        expected_determinant: r.expected_determinant.to_string(),
        codegrees: r.codegrees.as_ref().map(|c| c.iter().map(|q| q.pretty()).collect()),
        expected_codegrees: r.expected_codegrees.iter().map(|q| q.pretty()).collect(),
        codegree_sum: r.codegree_sum.as_ref().map(|q| q.pretty()),
        expected_codegree_sum: r.expected_codegree_sum.to_string(),
        pseudo_unitary: r.verdict,
        all_match: r.all_match(),
        mismatches: r.mismatches.iter().map(|q| q.to_string()).collect(),
    }
}
