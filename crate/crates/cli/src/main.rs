use std::process::ExitCode;

use centstab::report::{specht_report, stabilize_report};
use centstab::verify::{verify, Bounds, SuiteSelection, VerifyConfig};
use centstab::{Error, Field, FieldSpec, Partition, PrimeField, Rationals, Seed};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_USAGE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_VERIFICATION: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "centstab", version, about = "Specht modules, central stabilization and central stability complexes")]
struct Cli {
    /// Coefficient field: Q or Fp:<prime>.
    #[arg(long, global = true, default_value = "Q")]
    field: String,
    #[arg(long, global = true, default_value_t = 5)]
    max_n: usize,
    #[arg(long, global = true, default_value_t = 3)]
    max_k: usize,
    #[arg(long, global = true, default_value_t = 9)]
    max_m: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Only run verification cases whose id matches this glob.
    #[arg(long, global = true)]
    filter: Option<String>,
    /// Seed: trivial, perm, specht:MU, zero:NU or ind:LAMBDA.
    #[arg(long, global = true)]
    seed_spec: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Specht module S^MU in its standard basis.
    Specht {
        /// Partition, e.g. 3,1,1.
        mu: String,
    },
    /// Iterate central stabilization from a seed map.
    Stabilize {
        /// Seed (overrides --seed-spec).
        seed: Option<String>,
        /// Number of maps in the sequence.
        #[arg(long, default_value_t = 4)]
        steps: usize,
        /// Target degree N of the seed map for trivial and perm.
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Report dimensions only; works over any field.
        #[arg(long)]
        no_decompose: bool,
    },
    /// Run a verification suite: chain, resolution, restriction, duality, dimpoly or all.
    Verify { suite: String },
}

enum Failure {
    Usage(String),
    Precondition(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidPartition(_)
            | Error::InvalidTableau(_)
            | Error::InvalidPermutation(_)
            | Error::NotPrime(_) => Failure::Usage(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let result = cli.field.parse::<FieldSpec>().map_err(Failure::from).and_then(|spec| match spec {
        FieldSpec::Rational => run(&cli, &Rationals),
        FieldSpec::Prime(p) => run(&cli, &PrimeField::new(p).expect("checked when parsed")),
    });
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Precondition(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_PRECONDITION)
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            eprintln!("verification failed");
            ExitCode::from(EXIT_VERIFICATION)
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn parse_seed(text: Option<&str>) -> Result<Seed, Failure> {
    let text = text.ok_or_else(|| Failure::Usage("stabilize needs a seed (positional or --seed-spec)".into()))?;
    Ok(text.parse()?)
}

fn run<K: Field>(cli: &Cli, field: &K) -> Result<String, Failure> {
    match &cli.command {
        Command::Specht { mu } => {
            let mu: Partition = mu.parse()?;
            let report = specht_report(&mu, field);
            Ok(match cli.format {
                Format::Json => to_json(&report),
                Format::Text => {
                    let doc = &report.rep;
                    let mut out = format!("S^({mu}) over {}: dim {}\n", doc.field, doc.dim);
                    out.push_str("basis:\n");
                    for (i, l) in doc.labels.iter().enumerate() {
                        out.push_str(&format!("  e{} = {l}\n", i + 1));
                    }
                    out.push_str("generators:\n");
                    for (i, g) in doc.generators.iter().enumerate() {
                        out.push_str(&format!("  s{} = ({} {}):\n", i + 1, i + 1, i + 2));
                        for row in g {
                            out.push_str(&format!("    [{}]\n", row.join(" ")));
                        }
                    }
                    out
                }
            })
        }
        Command::Stabilize { seed, steps, degree, no_decompose } => {
            let seed = parse_seed(seed.as_deref().or(cli.seed_spec.as_deref()))?;
            let report = stabilize_report(&seed, *degree, *steps, !no_decompose, field)?;
            Ok(match cli.format {
                Format::Json => to_json(&report),
                Format::Text => report.to_text(),
            })
        }
        Command::Verify { suite } => {
            let selection: SuiteSelection = suite.parse()?;
            let seed = match &cli.seed_spec {
                Some(s) => Some(s.parse::<Seed>()?),
                None => None,
            };
            let config = VerifyConfig {
                bounds: Bounds { max_n: cli.max_n, max_k: cli.max_k, max_m: cli.max_m },
                filter: cli.filter.clone(),
                seed,
            };
            let report = verify(selection, field, &config)?;
            let out = match cli.format {
                Format::Json => to_json(&report),
                Format::Text => report.to_text(),
            };
            if report.pass {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}
