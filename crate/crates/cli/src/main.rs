use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orbit_hilbert::universal::{
    hilbert_polynomial, hilbert_series, ideal_series, numerator_polynomial, variety_degree, variety_dimension,
};
use orbit_hilbert::verify::verify_many;
use orbit_hilbert::vogel::{adjoint_dimension, derived_params, vogel_params};
use orbit_hilbert::{LieType, Rational, VogelParams};

use orbit_hilbert_cli::record::{self, Layout, OutputRecord};

const DEFAULT_MAX_TERMS: usize = 10_000;
const MAX_TERMS_VAR: &str = "ORBIT_HILBERT_MAX_TERMS";

/// Hilbert series, polynomial and degree of the adjoint variety P(O_min).
#[derive(Parser)]
#[command(name = "orbit-hilbert", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Vogel parameters and the derived a1..a4, b1..b3.
    Params { lie_type: LieType },
    /// Coefficients dim S(X)_k for k = 0..=K.
    Series {
        lie_type: LieType,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Hilbert polynomial coefficients, constant term first.
    Polynomial { lie_type: LieType },
    /// Dimension, degree and Hilbert series numerator.
    Degree { lie_type: LieType },
    /// Parameters, dimension and degree, one row per type.
    Table {
        #[arg(long, conflicts_with = "types")]
        all: bool,
        types: Vec<LieType>,
    },
    /// Graded dimensions of the ideal of X for k = 0..=K.
    Ideal {
        lie_type: LieType,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Cross-check the universal and root-system computations.
    /// With no types, every catalog type is checked.
    Verify {
        #[arg(long, conflicts_with = "types")]
        all: bool,
        types: Vec<LieType>,
        #[arg(long, default_value_t = 20)]
        terms: usize,
        /// CSV of `type,alpha,beta,gamma` rows replacing catalog parameters.
        #[arg(long, hide = true)]
        vogel_table: Option<PathBuf>,
    },
}

/// Exit code 1; message goes to stderr.
struct DomainError(String);

impl<E: std::fmt::Display> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

type CmdResult<T> = Result<T, DomainError>;

struct Rendered {
    records: Vec<OutputRecord>,
    layout: Layout,
    single: bool,
    failed: Option<String>,
}

fn table_types() -> Vec<LieType> {
    LieType::catalog(8)
}

fn max_terms() -> CmdResult<usize> {
    match std::env::var(MAX_TERMS_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| DomainError(format!("{MAX_TERMS_VAR} must be a non-negative integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_MAX_TERMS),
    }
}

fn check_terms(terms: usize) -> CmdResult<()> {
    let cap = max_terms()?;
    if terms > cap {
        return Err(DomainError(format!("--terms {terms} exceeds the cap of {cap} (set {MAX_TERMS_VAR})")));
    }
    Ok(())
}

fn params_record(ty: LieType, with_vogel: bool) -> CmdResult<OutputRecord> {
    let v = vogel_params(ty);
    let u = derived_params(&v)?;
    let dim = variety_dimension(&u)?;
    let deg = variety_degree(&u)?;
    let mut r = OutputRecord {
        lie_type: ty.to_string(),
        a1: Some(u.a1.clone()),
        a2: Some(u.a2.clone()),
        a3: Some(u.a3.clone()),
        a4: Some(u.a4.clone()),
        b1: Some(u.b1.clone()),
        b2: Some(u.b2.clone()),
        b3: Some(u.b3.clone()),
        dim_x: Some(dim as u64),
        deg_x: Some(deg),
        ..Default::default()
    };
    if with_vogel {
        r.alpha = Some(v.alpha);
        r.beta = Some(v.beta);
        r.gamma = Some(v.gamma);
        r.t = Some(v.t);
    }
    Ok(r)
}

fn read_vogel_table(path: &Path) -> CmdResult<Vec<(LieType, VogelParams)>> {
    let mut reader = csv::Reader::from_path(path)?;
    let mut out = Vec::new();
    for row in reader.records() {
        let row = row?;
        let field = |i: usize| row.get(i).ok_or_else(|| DomainError(format!("{}: short row", path.display())));
        let ty: LieType = field(0)?.parse()?;
        let q = |i: usize| -> CmdResult<Rational> { Ok(field(i)?.parse()?) };
        out.push((ty, VogelParams::from_triple(q(1)?, q(2)?, q(3)?)));
    }
    Ok(out)
}

fn one(record: OutputRecord, layout: Layout) -> Rendered {
    Rendered { records: vec![record], layout, single: true, failed: None }
}

fn run(command: Command) -> CmdResult<Rendered> {
    Ok(match command {
        Command::Params { lie_type } => one(params_record(lie_type, true)?, Layout::Params),
        Command::Series { lie_type, terms } => {
            check_terms(terms)?;
            let u = derived_params(&vogel_params(lie_type))?;
            let s = hilbert_series(&u, terms)?;
            let r = OutputRecord {
                lie_type: lie_type.to_string(),
                coefficients: Some(s.coeffs().to_vec()),
                ..Default::default()
            };
            one(r, Layout::Coefficients)
        }
        Command::Polynomial { lie_type } => {
            let u = derived_params(&vogel_params(lie_type))?;
            let p = hilbert_polynomial(&u)?;
            let r = OutputRecord {
                lie_type: lie_type.to_string(),
                dim_x: Some(variety_dimension(&u)? as u64),
                coefficients: Some(p.coeffs().to_vec()),
                ..Default::default()
            };
            one(r, Layout::Polynomial)
        }
        Command::Degree { lie_type } => {
            let u = derived_params(&vogel_params(lie_type))?;
            let r = OutputRecord {
                lie_type: lie_type.to_string(),
                dim_x: Some(variety_dimension(&u)? as u64),
                deg_x: Some(variety_degree(&u)?),
                numerator: Some(numerator_polynomial(&u)?.coeffs().to_vec()),
                ..Default::default()
            };
            one(r, Layout::Degree)
        }
        Command::Table { all, types } => {
            let types = if all { table_types() } else { types };
            let records = types.into_iter().map(|ty| params_record(ty, false)).collect::<CmdResult<Vec<_>>>()?;
            Rendered { records, layout: Layout::Table, single: false, failed: None }
        }
        Command::Ideal { lie_type, terms } => {
            check_terms(terms)?;
            let v = vogel_params(lie_type);
            let s = ideal_series(&derived_params(&v)?, &adjoint_dimension(&v)?, terms)?;
            let r = OutputRecord {
                lie_type: lie_type.to_string(),
                coefficients: Some(s.coeffs().to_vec()),
                ..Default::default()
            };
            one(r, Layout::Coefficients)
        }
        Command::Verify { all, types, terms, vogel_table } => {
            check_terms(terms)?;
            let types = if all || types.is_empty() { table_types() } else { types };
            let overrides = match vogel_table {
                Some(path) => read_vogel_table(&path)?,
                None => Vec::new(),
            };
            let results = verify_many(&types, terms, &overrides);
            let failed = results.iter().find_map(|tv| {
                tv.first_failure().map(|f| {
                    let at = f.k.map(|k| format!(" at k = {k}")).unwrap_or_default();
                    format!(
                        "verification failed: {} {}{at}: {}",
                        tv.lie_type,
                        f.check,
                        f.detail.as_deref().unwrap_or("")
                    )
                })
            });
            Rendered {
                records: results.iter().map(OutputRecord::from).collect(),
                layout: Layout::Verify,
                single: false,
                failed,
            }
        }
    })
}

fn render(out: &Rendered, format: Format) -> CmdResult<String> {
    Ok(match format {
        Format::Json => record::to_json(&out.records, out.single)?,
        Format::Csv => record::to_csv(&out.records, out.layout).map_err(|e| DomainError(e.to_string()))?,
        Format::Plain => record::to_plain(&out.records, out.layout),
    })
}

fn emit(text: &str, output: Option<&Path>) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = run(cli.command).and_then(|out| {
        let text = render(&out, cli.format)?;
        emit(&text, cli.output.as_deref())?;
        Ok(out.failed)
    });
    match result {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(failure)) => {
            eprintln!("{failure}");
            ExitCode::from(2)
        }
        Err(DomainError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
