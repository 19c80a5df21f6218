use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use paradim::arith::primes_up_to;
use paradim::corpus::{self, DataSource, Status};
use paradim::paramodular::{
    check_bias_region, fallback_denominator, hilbert_series_with, registry_denominator, search_weight3_zero,
    ParamodularFormula, Space,
};
use paradim::Error;

mod output;

use output::{Format, Sink};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MISSING: u8 = 3;

#[derive(Parser)]
#[command(
    name = "paradim",
    version,
    about = "Dimensions of paramodular cusp forms of prime level split by Atkin-Lehner sign"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Print timings to stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signed dimensions at one level and weight.
    Dim(DimArgs),
    /// Table rows H, R, M+-, s2+-, S+- for every prime up to --pmax.
    Table(TableArgs),
    /// Graded dimensions of one space, optionally with the fitted generating function.
    Hilbert(HilbertArgs),
    /// Bounded searches.
    Search {
        #[command(subcommand)]
        what: SearchCommand,
    },
    /// Checks the Atkin-Lehner bias is nonnegative and lists its zeros.
    Bias {
        #[arg(long)]
        pmax: u64,
        #[arg(long)]
        kmax: i64,
    },
    /// Checks every embedded data file against the formulas.
    Verify {
        /// Restrict to one group.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(corpus::GROUPS))]
        only: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
enum DimSpace {
    /// Cusp forms `S_{k,j}(K(p))`.
    S,
    /// All paramodular forms `A_k(K(p))`, `j = 0` only.
    A,
    /// Algebraic modular forms of highest weight `(k + j - 3, k - 3)`.
    M,
}

#[derive(Args)]
struct DimArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, allow_negative_numbers = true)]
    k: i64,
    #[arg(long, default_value_t = 0)]
    j: i64,
    #[arg(long, value_enum, ignore_case = true, default_value_t = DimSpace::S)]
    space: DimSpace,
}

pub const TABLE_ROWS: [&str; 8] = ["H", "R", "M+", "M-", "s2+", "s2-", "S+", "S-"];

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    k: i64,
    #[arg(long)]
    pmax: u64,
    #[arg(long, default_value_t = 2)]
    pmin: u64,
    #[arg(long, value_delimiter = ',', value_parser = clap::builder::PossibleValuesParser::new(TABLE_ROWS))]
    rows: Vec<String>,
}

#[derive(Args)]
struct HilbertArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    space: Space,
    #[arg(long, default_value_t = 0)]
    j: i64,
    #[arg(long, default_value_t = 80)]
    nmax: usize,
    /// Also fit the numerator over the tabulated denominator.
    #[arg(long)]
    fit: bool,
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Primes with no weight-3 plus forms.
    Zero3 {
        #[arg(long)]
        pmax: u64,
    },
}

#[derive(Serialize)]
struct DimRecord {
    p: u64,
    k: i64,
    j: i64,
    space: DimSpace,
    plus: i64,
    minus: i64,
    total: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<i64>,
    source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

struct TableRecord<'a> {
    p: u64,
    k: i64,
    values: Vec<(&'a str, i64)>,
}

impl Serialize for TableRecord<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.values.len() + 2))?;
        map.serialize_entry("p", &self.p)?;
        map.serialize_entry("k", &self.k)?;
        for (row, value) in &self.values {
            map.serialize_entry(row, value)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct HilbertRecord {
    p: u64,
    space: Space,
    j: i64,
    dims: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    numerator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    denominator: Option<Vec<u32>>,
}

enum Failure {
    Core(Error),
    Mismatch(String),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let started = Instant::now();
    let stdout = io::stdout();
    let mut sink = Sink::new(stdout.lock(), cli.format);
    let result = run(&cli.command, &mut sink).and_then(|()| sink.flush().map_err(Failure::from));
    if cli.verbose {
        eprintln!("[{:.3}s] done", started.elapsed().as_secs_f64());
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UnsupportedJ(_) | Error::MissingData(..) | Error::MissingJacobiData(_) | Error::Data(_) => EXIT_MISSING,
        Error::BiasViolation(..) | Error::NegativeDim(..) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

fn run<W: Write>(command: &Command, sink: &mut Sink<W>) -> Result<(), Failure> {
    match command {
        Command::Dim(args) => {
            let r = dim(args)?;
            let mut line = format!(
                "p={} k={} j={} space={:?} plus={} minus={} total={}",
                r.p, r.k, r.j, r.space, r.plus, r.minus, r.total
            );
            if let Some(t) = r.trace {
                line.push_str(&format!(" trace={t}"));
            }
            if let Some(n) = r.note {
                line.push_str(&format!(" note=\"{n}\""));
            }
            let cells = vec![
                r.p.to_string(),
                r.k.to_string(),
                r.j.to_string(),
                format!("{:?}", r.space),
                r.plus.to_string(),
                r.minus.to_string(),
                r.total.to_string(),
                r.trace.map(|t| t.to_string()).unwrap_or_default(),
                r.source.to_string(),
                r.note.unwrap_or_default().to_string(),
            ];
            let header = [
                "p", "k", "j", "space", "plus", "minus", "total", "trace", "source", "note",
            ];
            sink.record(&r, vec![line], &header, vec![cells])?;
        }
        Command::Table(args) => {
            let rows: Vec<&str> = if args.rows.is_empty() {
                TABLE_ROWS.to_vec()
            } else {
                args.rows.iter().map(String::as_str).collect()
            };
            let mut header = vec!["p"];
            header.extend(&rows);
            sink.header(&header)?;
            for p in primes_up_to(args.pmax).into_iter().filter(|&p| p >= args.pmin) {
                let formula = ParamodularFormula::new(p)?;
                let values = rows
                    .iter()
                    .map(|&row| Ok((row, corpus::table_value(&formula, args.k, row)?)))
                    .collect::<paradim::Result<Vec<_>>>()?;
                let mut cells = vec![p.to_string()];
                cells.extend(values.iter().map(|(_, v)| v.to_string()));
                sink.row(&TableRecord { p, k: args.k, values }, cells, None)?;
            }
        }
        Command::Hilbert(args) => {
            let formula = ParamodularFormula::new(args.p)?;
            let len = args.nmax + 1;
            let degree: usize = registry_denominator(args.p, args.space, args.j)
                .unwrap_or_else(|| fallback_denominator(args.p))
                .iter()
                .map(|&a| a as usize)
                .sum();
            if args.fit && len <= degree {
                return Err(Failure::Usage(format!(
                    "--fit at p={} needs --nmax >= {degree}",
                    args.p
                )));
            }
            let dims = formula.graded_dims(args.space, args.j, len)?;
            let (numerator, denominator) = if args.fit {
                let series = hilbert_series_with(&formula, args.space, args.j, len, None)?;
                (
                    Some(series.gf.numerator().to_string()),
                    Some(series.gf.denominator().to_vec()),
                )
            } else {
                (None, None)
            };
            let r = HilbertRecord {
                p: args.p,
                space: args.space,
                j: args.j,
                dims,
                numerator,
                denominator,
            };
            let mut fields = vec![
                ("p", r.p.to_string()),
                ("space", r.space.to_string()),
                ("j", r.j.to_string()),
                ("dims", join(&r.dims)),
            ];
            if let (Some(n), Some(d)) = (&r.numerator, &r.denominator) {
                fields.push(("numerator", n.clone()));
                fields.push(("denominator", join(d)));
            }
            let text = fields.iter().map(|(k, v)| format!("{k}: {v}")).collect();
            let csv = fields.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect();
            sink.record(&r, text, &["field", "value"], csv)?;
        }
        Command::Search {
            what: SearchCommand::Zero3 { pmax },
        } => {
            sink.header(&["p"])?;
            for p in search_weight3_zero(*pmax)? {
                sink.row(&serde_json::json!({ "p": p }), vec![p.to_string()], None)?;
            }
        }
        Command::Bias { pmax, kmax } => {
            sink.header(&["p", "k"])?;
            for (p, k) in check_bias_region(*pmax, *kmax)? {
                sink.row(
                    &serde_json::json!({ "p": p, "k": k }),
                    vec![p.to_string(), k.to_string()],
                    None,
                )?;
            }
        }
        Command::Verify { only } => {
            let report = corpus::verify(&DataSource::from_env(), only.as_deref())?;
            sink.header(&["status", "group", "id", "expected", "actual"])?;
            for item in &report.items {
                let cells = vec![
                    item.status.to_string(),
                    item.group.clone(),
                    item.id.clone(),
                    item.expected.clone(),
                    item.actual.clone(),
                ];
                sink.row(item, cells, Some(item.to_string()))?;
            }
            sink.summary(&format!(
                "{} items: {} passed, {} failed, {} notes",
                report.items.len(),
                report.passed(),
                report.failed(),
                report.notes()
            ))?;
            if !report.is_success() {
                let failed: Vec<String> = report
                    .items
                    .iter()
                    .filter(|i| i.status == Status::Fail)
                    .map(|i| format!("{}/{}", i.group, i.id))
                    .collect();
                sink.flush()?;
                return Err(Failure::Mismatch(failed.join(", ")));
            }
        }
    }
    Ok(())
}

fn dim(args: &DimArgs) -> paradim::Result<DimRecord> {
    let formula = ParamodularFormula::new(args.p)?;
    let (p, k, j) = (args.p, args.k, args.j);
    let note = (j % 2 != 0).then_some("odd j");
    let (plus, minus, trace) = match args.space {
        DimSpace::S => {
            let d = formula.signed(k, j)?;
            (d.plus, d.minus, None)
        }
        DimSpace::A => {
            if j != 0 {
                return Err(Error::UnsupportedJ(j));
            }
            let (plus, minus) = formula.a_signed(k)?;
            (plus, minus, None)
        }
        DimSpace::M => {
            if note.is_some() {
                (0, 0, Some(0))
            } else {
                let d = formula.compact().signed(k + j - 3, k - 3)?;
                (d.plus, d.minus, Some(d.trace))
            }
        }
    };
    Ok(DimRecord {
        p,
        k,
        j,
        space: args.space,
        plus,
        minus,
        total: plus + minus,
        trace,
        source: "formula",
        note,
    })
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}
