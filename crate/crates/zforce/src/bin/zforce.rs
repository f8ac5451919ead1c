use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use zforce::analysis::{self, Analysis, Certification, HuntError};
use zforce::batch::{ordered_map, worker_pool};
use zforce::dot::{certificate_dot, graph_dot};
use zforce::graph6;
use zforce::input::{GraphReader, InputError};
use zforce::json::{CertificateJson, GraphJson, PartitionJson, ReportJson, SkippedJson};
use zforce_core::forcing::DEFAULT_FORCING_CAP;
use zforce_core::generators::{
    enumerate_connected_claw_free_cubic, k4, necklace, prism, random_claw_free_cubic,
};
use zforce_core::{triangle_diamond_partition, Graph, SolverConfig, UnitKind};

const CHUNK: usize = 256;

const EXIT_USAGE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;
const EXIT_CERTIFICATE: u8 = 4;

/// Zero forcing bounds and certificates for claw-free cubic graphs.
#[derive(Debug, Parser)]
#[command(name = "zforce", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input file with one graph per line (graph6 or JSON); `-` reads stdin.
    #[arg(long, global = true, default_value = "-")]
    input: String,

    /// Output format; each command accepts a subset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest order for `gen enumerate` and `hunt`.
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Largest order the exact forcing solvers will attempt.
    #[arg(long, global = true, env = "ZFORCE_CAP", default_value_t = DEFAULT_FORCING_CAP,
          value_parser = clap::builder::TypedValueParser::map(
              clap::value_parser!(u32).range(1..), |x| x as usize))]
    cap: usize,

    /// Seed for `gen random`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for batch commands; 0 uses one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit named, random or enumerated graphs.
    Gen {
        #[command(subcommand)]
        which: GenKind,
    },
    /// One bounds report per input graph.
    Analyze,
    /// One certificate per input graph, verified independently.
    Certify {
        /// Render certificates as Graphviz DOT instead of JSON.
        #[arg(long)]
        emit_dot: bool,
    },
    /// The triangle/diamond partition of each input graph.
    Partition,
    /// Every corpus graph up to --max-n with Z = alpha + 1.
    Hunt,
}

#[derive(Debug, Subcommand)]
enum GenKind {
    Prism,
    K4,
    Necklace {
        #[arg(long)]
        k: usize,
    },
    Random {
        #[arg(long)]
        units: usize,
        #[arg(long, default_value_t = 0.3)]
        diamond_fraction: f64,
    },
    Enumerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Graph6,
    Table,
}

#[derive(Debug, Default)]
struct Status {
    violation: bool,
    certificate_failure: bool,
}

impl Status {
    fn code(&self) -> u8 {
        if self.certificate_failure {
            EXIT_CERTIFICATE
        } else if self.violation {
            EXIT_VIOLATION
        } else {
            0
        }
    }
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Io(e) => Failure::Io(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn usage_error(message: impl std::fmt::Display) -> ! {
    Cli::command()
        .error(ErrorKind::InvalidValue, message)
        .exit()
}

fn pick_format(cli: &Cli, allowed: &[Format]) -> Format {
    match cli.format {
        None => allowed[0],
        Some(f) if allowed.contains(&f) => f,
        Some(f) => usage_error(format!(
            "--format {} is not available for this command",
            f.to_possible_value()
                .expect("no skipped variants")
                .get_name()
        )),
    }
}

fn json_line<T: Serialize>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>, Failure> {
    if path == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    File::open(path)
        .map(|f| Box::new(BufReader::new(f)) as Box<dyn BufRead>)
        .map_err(|e| Failure::Usage(format!("cannot open {path}: {e}")))
}

/// Feeds input graphs to `handle` in chunks; a parse error stops the stream
/// after the graphs before it are written.
fn for_each_chunk(
    cli: &Cli,
    mut handle: impl FnMut(&[Graph]) -> Result<(), Failure>,
) -> Result<(), Failure> {
    let mut reader = GraphReader::new(open_input(&cli.input)?);
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        let mut error = None;
        for item in reader.by_ref() {
            match item {
                Ok(g) => chunk.push(g),
                Err(e) => {
                    error = Some(e);
                    break;
                }
            }
            if chunk.len() == CHUNK {
                break;
            }
        }
        let done = chunk.len() < CHUNK;
        if !chunk.is_empty() {
            handle(&chunk)?;
        }
        if let Some(e) = error {
            return Err(e.into());
        }
        if done {
            return Ok(());
        }
    }
}

fn pool(cli: &Cli) -> rayon::ThreadPool {
    worker_pool(cli.jobs).unwrap_or_else(|e| usage_error(format!("cannot start workers: {e}")))
}

fn cmd_gen(cli: &Cli, which: &GenKind, out: &mut impl Write) -> Result<Status, Failure> {
    let format = pick_format(cli, &[Format::Graph6, Format::Json, Format::Dot]);
    let graphs = match which {
        GenKind::Prism => vec![prism()],
        GenKind::K4 => vec![k4()],
        GenKind::Necklace { k } => vec![necklace(*k).map_err(|e| Failure::Usage(e.to_string()))?],
        GenKind::Random {
            units,
            diamond_fraction,
        } => vec![random_claw_free_cubic(*units, *diamond_fraction, cli.seed)
            .map_err(|e| Failure::Usage(e.to_string()))?],
        GenKind::Enumerate => {
            let max_n = cli
                .max_n
                .unwrap_or_else(|| usage_error("gen enumerate needs --max-n"));
            enumerate_connected_claw_free_cubic(max_n).map_err(|e| Failure::Usage(e.to_string()))?
        }
    };
    for (idx, g) in graphs.iter().enumerate() {
        match format {
            Format::Json => json_line(out, &GraphJson::from(g))?,
            Format::Dot => write!(out, "{}", graph_dot(g, &format!("g{idx}")))?,
            _ => writeln!(out, "{}", graph6::encode(g))?,
        }
    }
    Ok(Status::default())
}

fn report_row(r: &ReportJson) -> String {
    let status = match r.violations.is_empty() {
        true => "ok".to_string(),
        false => format!("violations:{}", r.violations.join(",")),
    };
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.graph,
        r.n,
        r.n3,
        r.n4,
        r.z,
        r.ft,
        r.alpha,
        r.alpha_prime,
        r.cert_size,
        r.certificate.mode,
        status
    )
}

fn cmd_analyze(cli: &Cli, out: &mut impl Write) -> Result<Status, Failure> {
    let format = pick_format(cli, &[Format::Json, Format::Table]);
    let config = SolverConfig { cap: cli.cap };
    let pool = pool(cli);
    let mut status = Status::default();
    if format == Format::Table {
        writeln!(
            out,
            "graph6\tn\tn3\tn4\tZ\tFt\talpha\talpha'\tcert\tmode\tstatus"
        )?;
    }
    for_each_chunk(cli, |chunk| {
        let results = ordered_map(&pool, chunk, |g| analysis::analyze(g, &config));
        for (g, a) in chunk.iter().zip(results) {
            let code = graph6::encode(g);
            match a {
                Analysis::Report(r) => {
                    let row = ReportJson::new(code, &r);
                    status.violation |= r.inequalities.iter().any(|i| !i.holds)
                        || !r.half_order_equality_characterized();
                    status.certificate_failure |= !r.certificate_verified;
                    match format {
                        Format::Table => writeln!(out, "{}", report_row(&row))?,
                        _ => json_line(out, &row)?,
                    }
                }
                Analysis::Skipped(s) => {
                    let skipped = SkippedJson {
                        graph: code,
                        skipped: s.as_str().to_string(),
                    };
                    match format {
                        Format::Table => {
                            writeln!(out, "{}\tskipped:{}", skipped.graph, skipped.skipped)?
                        }
                        _ => json_line(out, &skipped)?,
                    }
                }
                Analysis::Failed(e) => {
                    status.certificate_failure = true;
                    eprintln!("zforce: {code}: {e}");
                    let failed = serde_json::json!({ "graph": code, "error": e });
                    match format {
                        Format::Table => writeln!(out, "{code}\terror:{e}")?,
                        _ => json_line(out, &failed)?,
                    }
                }
            }
        }
        Ok(())
    })?;
    Ok(status)
}

#[derive(Serialize)]
struct CertifiedJson {
    graph: String,
    verified: bool,
    failures: Vec<&'static str>,
    certificate: CertificateJson,
}

fn cmd_certify(cli: &Cli, emit_dot: bool, out: &mut impl Write) -> Result<Status, Failure> {
    let format = match emit_dot {
        true => Format::Dot,
        false => pick_format(cli, &[Format::Json, Format::Dot, Format::Table]),
    };
    let pool = pool(cli);
    let mut status = Status::default();
    let mut index = 0;
    if format == Format::Table {
        writeln!(out, "graph6\tmode\t|S|\t|I|\t|M|\tverified")?;
    }
    for_each_chunk(cli, |chunk| {
        let results = ordered_map(&pool, chunk, analysis::certify);
        for (g, c) in chunk.iter().zip(results) {
            let code = graph6::encode(g);
            match c {
                Certification::Built(cert, report) => {
                    let failures: Vec<&'static str> = report.failures().map(|c| c.name()).collect();
                    status.certificate_failure |= !failures.is_empty();
                    match format {
                        Format::Dot => {
                            write!(out, "{}", certificate_dot(g, &cert, &format!("g{index}")))?
                        }
                        Format::Table => writeln!(
                            out,
                            "{code}\t{}\t{}\t{}\t{}\t{}",
                            cert.mode.as_str(),
                            cert.s.len(),
                            cert.i.len(),
                            cert.m.len(),
                            failures.is_empty()
                        )?,
                        _ => json_line(
                            out,
                            &CertifiedJson {
                                graph: code,
                                verified: failures.is_empty(),
                                failures,
                                certificate: (&*cert).into(),
                            },
                        )?,
                    }
                }
                Certification::Skipped(s) => match format {
                    Format::Dot => writeln!(out, "// {code} skipped: {}", s.as_str())?,
                    Format::Table => writeln!(out, "{code}\tskipped:{}", s.as_str())?,
                    _ => json_line(
                        out,
                        &SkippedJson {
                            graph: code,
                            skipped: s.as_str().to_string(),
                        },
                    )?,
                },
                Certification::Failed(e) => {
                    status.certificate_failure = true;
                    eprintln!("zforce: {code}: {e}");
                    match format {
                        Format::Dot => writeln!(out, "// {code} failed: {e}")?,
                        Format::Table => writeln!(out, "{code}\terror:{e}")?,
                        _ => json_line(out, &serde_json::json!({ "graph": code, "error": e }))?,
                    }
                }
            }
            index += 1;
        }
        Ok(())
    })?;
    Ok(status)
}

fn cmd_partition(cli: &Cli, out: &mut impl Write) -> Result<Status, Failure> {
    let format = pick_format(cli, &[Format::Json, Format::Table]);
    for_each_chunk(cli, |chunk| {
        for g in chunk {
            let code = graph6::encode(g);
            let partition = analysis::qualify(g).map(|()| triangle_diamond_partition(g));
            match (partition, format) {
                (Ok(Ok(p)), Format::Table) => {
                    let units: Vec<String> = p
                        .units
                        .iter()
                        .map(|u| {
                            let tag = if u.kind == UnitKind::Triangle {
                                'T'
                            } else {
                                'D'
                            };
                            let members: Vec<String> =
                                u.members.iter().map(|v| v.to_string()).collect();
                            format!("{tag}{{{}}}", members.join(","))
                        })
                        .collect();
                    writeln!(out, "{code}\t{}", units.join(" "))?;
                }
                (Ok(Ok(p)), _) => {
                    let mut value =
                        serde_json::to_value(PartitionJson::from(&p)).expect("plain data");
                    value["graph"] = code.into();
                    json_line(out, &value)?;
                }
                (Ok(Err(e)), _) => return Err(Failure::Usage(format!("{code}: {e}"))),
                (Err(s), Format::Table) => writeln!(out, "{code}\tskipped:{}", s.as_str())?,
                (Err(s), _) => json_line(
                    out,
                    &SkippedJson {
                        graph: code,
                        skipped: s.as_str().to_string(),
                    },
                )?,
            }
        }
        Ok(())
    })?;
    Ok(Status::default())
}

fn cmd_hunt(cli: &Cli, out: &mut impl Write) -> Result<Status, Failure> {
    let format = pick_format(cli, &[Format::Json, Format::Table, Format::Graph6]);
    let max_n = cli
        .max_n
        .unwrap_or_else(|| usage_error("hunt needs --max-n"));
    let config = SolverConfig { cap: cli.cap };
    let outcome = match analysis::hunt(max_n, &config, &pool(cli)) {
        Ok(o) => o,
        Err(e @ (HuntError::EnumerationLimit { .. } | HuntError::SolverCap { .. })) => {
            return Err(Failure::Usage(e.to_string()))
        }
    };
    if format == Format::Table {
        writeln!(out, "graph6\tn\tname\tZ\talpha\talpha'\tcert\tmode")?;
    }
    for f in &outcome.findings {
        let row = ReportJson::new(graph6::encode(&f.graph), &f.report);
        if row.named.is_none() {
            eprintln!("zforce: discovery: {} has Z = alpha + 1", row.graph);
        }
        match format {
            Format::Graph6 => writeln!(out, "{}", row.graph)?,
            Format::Table => writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                row.graph,
                row.n,
                row.named.as_deref().unwrap_or("-"),
                row.z,
                row.alpha,
                row.alpha_prime,
                row.cert_size,
                row.certificate.mode
            )?,
            _ => json_line(out, &row)?,
        }
    }
    for f in &outcome.violations {
        eprintln!(
            "zforce: {} fails {}",
            graph6::encode(&f.graph),
            f.report.violations().join(",")
        );
    }
    for (g, why) in &outcome.failures {
        eprintln!("zforce: {} not analyzed: {why}", graph6::encode(g));
    }
    eprintln!(
        "zforce: examined {} graphs, {} with Z = alpha + 1",
        outcome.examined,
        outcome.findings.len()
    );
    Ok(Status {
        violation: outcome.violations.iter().any(|f| {
            f.report.inequalities.iter().any(|i| !i.holds)
                || !f.report.half_order_equality_characterized()
        }),
        certificate_failure: outcome
            .violations
            .iter()
            .any(|f| !f.report.certificate_verified)
            || !outcome.failures.is_empty(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Gen { which } => cmd_gen(&cli, which, &mut out),
        Command::Analyze => cmd_analyze(&cli, &mut out),
        Command::Certify { emit_dot } => cmd_certify(&cli, *emit_dot, &mut out),
        Command::Partition => cmd_partition(&cli, &mut out),
        Command::Hunt => cmd_hunt(&cli, &mut out),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Err(Failure::Io(e)), _) | (Ok(_), Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => {
            ExitCode::SUCCESS
        }
        (Err(Failure::Io(e)), _) | (Ok(_), Err(e)) => {
            eprintln!("zforce: {e}");
            ExitCode::FAILURE
        }
        (Err(Failure::Usage(message)), _) => {
            eprintln!("zforce: {message}");
            ExitCode::from(EXIT_USAGE)
        }
        (Ok(status), Ok(())) => ExitCode::from(status.code()),
    }
}
