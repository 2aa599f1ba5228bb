//! Command-line verifier for the quantum-torus Lie algebra library.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on
//! usage or input errors. Randomized checks take `--seed` and default to a
//! fixed seed, so runs are reproducible. `QTB_THREADS` caps the worker
//! pool used by the window enumerations.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qtorus::algebra::AlgElement;
use qtorus::bialgebra::{check_cybe, delta_r, RMatrix};
use qtorus::derivation::{reduce_to_inner, windowed_faithfulness, DerivationError};
use qtorus::identities::SuiteId;
use qtorus::json;
use qtorus::tensor::act2;
use qtorus::verify::{self, VerifyReport};

const DEFAULT_SEED: u64 = 7;

#[derive(Parser)]
#[command(name = "qtorus", version, about = "Exact checks for the quantum-torus Lie algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification pass over a finite window
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Check the classical Yang-Baxter equation for a pair-tensor file
    Cybe {
        /// Tensor file in the pair-tensor JSON format
        file: PathBuf,
    },
    /// Print the coboundary cobracket `x . r`
    Delta {
        /// Tensor file defining r
        r: PathBuf,
        /// Element file defining x
        x: PathBuf,
    },
    /// Reduce a homogeneous derivation table to inner form
    ReduceDerivation {
        /// Derivation table file
        file: PathBuf,
    },
    /// Search the default probe set for an element moving a tensor
    Faithfulness {
        /// Tensor file in the pair-tensor JSON format
        file: PathBuf,
    },
    /// Built-in end-to-end demonstrations
    Demo {
        #[command(subcommand)]
        which: DemoWhich,
    },
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// Antisymmetry and the Jacobi identity on all window basis triples
    Jacobi(CommonOpts),
    /// Structure constants against the quantum-torus matrix oracle
    Oracle(CommonOpts),
    /// Bracket-compatibility of the pair and triple actions
    ModuleAxioms(SampledOpts),
    /// The displayed identity suites (a..g)
    Identities(IdentityOpts),
    /// Co-Jacobi, cocycle and skew-image laws of the coboundary layer
    BialgebraAxioms(SampledOpts),
}

#[derive(Args)]
struct CommonOpts {
    /// Window radius for basis indices
    #[arg(long, default_value_t = 3)]
    radius: i64,
    /// Seed for the randomized parts
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct SampledOpts {
    #[arg(long, default_value_t = 3)]
    radius: i64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of seeded random samples
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct IdentityOpts {
    #[arg(long, default_value_t = 3)]
    radius: i64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Run a single suite (a..g) instead of all of them
    #[arg(long, value_parser = parse_suite)]
    suite: Option<SuiteId>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

fn parse_suite(s: &str) -> Result<SuiteId, String> {
    s.parse().map_err(|e: qtorus::identities::UnknownSuite| e.to_string())
}

#[derive(Subcommand)]
enum DemoWhich {
    /// Skewness, the Yang-Baxter equation and the co-Jacobi law for the
    /// wedge of the weight element with e(0,0)
    Triangular {
        #[arg(long, default_value_t = 2)]
        radius: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Human,
    Json,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("QTB_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("QTB_THREADS must be a positive integer, got `{threads}`");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify { what } => {
            let (report, format) = match what {
                VerifyWhat::Jacobi(opts) => (verify::verify_lie_axioms(opts.radius, opts.seed), opts.format),
                VerifyWhat::Oracle(opts) => (verify::verify_oracle(opts.radius, opts.seed), opts.format),
                VerifyWhat::ModuleAxioms(opts) => {
                    (verify::verify_module_axioms(opts.radius, opts.seed, opts.samples), opts.format)
                }
                VerifyWhat::Identities(opts) => {
                    (verify::verify_identities(opts.radius, opts.seed, opts.suite), opts.format)
                }
                VerifyWhat::BialgebraAxioms(opts) => {
                    (verify::verify_bialgebra_axioms(opts.radius, opts.seed, opts.samples), opts.format)
                }
            };
            Ok(emit(&report, format))
        }
        Command::Cybe { file } => {
            let r = RMatrix::new(json::parse_tensor2(&read(&file)?).map_err(in_file(&file))?);
            if check_cybe(&r) {
                println!("yang-baxter element vanishes: r satisfies the classical equation");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("{}", json::tensor3_to_string(&qtorus::bialgebra::c_of_r(&r)));
                eprintln!("yang-baxter element is nonzero (printed on stdout)");
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Delta { r, x } => {
            let rm = RMatrix::new(json::parse_tensor2(&read(&r)?).map_err(in_file(&r))?);
            let xe = json::parse_element(&read(&x)?).map_err(in_file(&x))?;
            println!("{}", json::tensor2_to_string(&delta_r(&rm, &xe)));
            Ok(ExitCode::SUCCESS)
        }
        Command::ReduceDerivation { file } => reduce_derivation(&file),
        Command::Faithfulness { file } => {
            let v = json::parse_tensor2(&read(&file)?).map_err(in_file(&file))?;
            if v.is_zero() {
                println!("tensor is zero; nothing to detect");
                return Ok(ExitCode::SUCCESS);
            }
            match windowed_faithfulness(&v, &verify::default_probes()) {
                Some(witness) => {
                    println!("{}", json::element_to_string(&witness));
                    eprintln!("witness found: the printed element moves the tensor");
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    eprintln!(
                        "no witness among the default probes; this is inconclusive, not a \
                         proof that every action vanishes - extend the probe set"
                    );
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Demo { which } => match which {
            DemoWhich::Triangular { radius, format } => {
                Ok(emit(&verify::demo_triangular(radius), format))
            }
        },
    }
}

fn reduce_derivation(file: &Path) -> Result<ExitCode, String> {
    let table = json::parse_table(&read(file)?).map_err(in_file(file))?;
    if table.is_zero() {
        println!("{}", json::tensor2_to_string(&qtorus::tensor::Tensor2Element::zero()));
        eprintln!("table is zero; the zero tensor generates it");
        return Ok(ExitCode::SUCCESS);
    }
    let degree = table
        .homogeneous_degree()
        .ok_or_else(|| "table is not homogeneous; reduce each component separately".to_string())?;
    let v = match reduce_to_inner(&table, degree) {
        Ok(v) => v,
        Err(DerivationError::ZeroDegree) => {
            return Err(
                "table is homogeneous of degree (0,0); the probe pairing vanishes there and \
                 no automatic reduction applies"
                    .to_string(),
            )
        }
        Err(e) => return Err(e.to_string()),
    };
    println!("{}", json::tensor2_to_string(&v));
    let mut disagreements = 0usize;
    let mut checked = 0usize;
    for (b, image) in table.assignments() {
        let acted = act2(&AlgElement::basis(*b), &v);
        checked += 1;
        if &acted != image {
            disagreements += 1;
            eprintln!("disagree at {b}: table has {image}, inner derivation gives {acted}");
        }
    }
    eprintln!(
        "degree {degree}; agreement on {}/{checked} window basis vectors",
        checked - disagreements
    );
    if disagreements == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

fn emit(report: &VerifyReport, format: Format) -> ExitCode {
    match format {
        Format::Human => print!("{report}"),
        Format::Json => {
            println!("{}", serde_json::to_string(report).expect("report serialization"))
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn in_file(path: &Path) -> impl Fn(json::FormatError) -> String + '_ {
    move |e| format!("{}: {e}", path.display())
}
