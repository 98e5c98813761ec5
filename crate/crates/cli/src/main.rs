use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polywedge::census::{
    census_report, closed_form, count_e_tilde_formula, enumerate_e, reconstruct_puzzle,
    CensusReport, Method,
};
use polywedge::diagram::{adjacent_classes, fourth_node, relatedness, Relatedness};
use polywedge::oracle::{count_classes_bruteforce, oracle_report, real_toric_closure, verify};
use polywedge::polygon::enumerate_classes;
use polywedge::{BigCount, DJClass, ESeq, ESet, Error, JTuple};
use serde_json::json;

mod render;

use render::Format;

#[derive(Parser)]
#[command(
    name = "polywedge",
    version,
    about = "Small covers and real toric manifolds over wedged polygons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the D-J classes over the m-gon.
    Nodes {
        #[arg(long)]
        m: usize,
        /// Emit the diagram's nontrivial edges as a DOT graph.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List the edges at a class, for one vertex or all of them.
    Edges {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        p: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Classify a pair of e-sets at a class.
    Related {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The fourth node of the square spanned by two related e-sets.
    Square {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Count small covers over P_m(J).
    CountCovers {
        #[command(flatten)]
        wedge: WedgeArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Diagram)]
        method: MethodArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Count real toric manifolds over P_m(J).
    CountRealToric {
        #[command(flatten)]
        wedge: WedgeArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Diagram)]
        method: MethodArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate the closed form for m in {4, 5, 6}, or the tilde formula for one class.
    Formula {
        #[command(flatten)]
        wedge: WedgeArgs,
        #[arg(long)]
        lambda: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare diagram, closed form and brute force.
    Verify {
        #[command(flatten)]
        wedge: WedgeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Rebuild the puzzle of a class and e-set sequence, or of every sequence.
    Puzzle {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        j: Option<String>,
        /// `;`-separated e-sets, one per slot, e.g. "1:{1,3};1:{}".
        #[arg(long)]
        eseq: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct WedgeArgs {
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated wedge vector; defaults to all ones.
    #[arg(long)]
    j: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for per-class and per-partition jobs.
    #[arg(long)]
    parallel: Option<usize>,
    /// Report elapsed time on stderr.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Diagram,
    Formula,
    Oracle,
    All,
}

enum Failure {
    Usage(String),
    Guard(String),
    Disagree(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Guard { .. } => Failure::Guard(e.to_string()),
            Error::PuzzleViolation(_) => Failure::Other(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn parse_class(text: &str) -> Result<DJClass, Failure> {
    Ok(DJClass::parse(text)?)
}

fn parse_wedge(w: &WedgeArgs) -> Result<JTuple, Failure> {
    match (&w.j, w.m) {
        (Some(text), m) => {
            let j: JTuple = text.parse()?;
            if let Some(m) = m {
                if m != j.m() {
                    return Err(Failure::Usage(format!(
                        "--m {m} does not match the {} entries of --j",
                        j.m()
                    )));
                }
            }
            Ok(j)
        }
        (None, Some(m)) => Ok(JTuple::ones(m)?),
        (None, None) => Err(Failure::Usage("one of --m or --j is required".into())),
    }
}

fn nodes(m: usize, dot: bool, format: Format) -> Outcome {
    let classes = enumerate_classes(m)?;
    if dot {
        let mut edges = Vec::new();
        for class in &classes {
            for p in 1..=m {
                for (e, other) in adjacent_classes(class, p)? {
                    if !e.is_empty() && *class < other {
                        edges.push((class.clone(), other, p));
                    }
                }
            }
        }
        return Ok(render::dot(m, &classes, &edges));
    }
    Ok(render::nodes(m, &classes, format))
}

fn edges(lambda: &str, p: Option<usize>, format: Format) -> Outcome {
    let class = parse_class(lambda)?;
    let vertices: Vec<usize> = match p {
        Some(p) => vec![p],
        None => (1..=class.m()).collect(),
    };
    let mut rows = Vec::new();
    for p in vertices {
        for (e, other) in adjacent_classes(&class, p)? {
            rows.push((e, other));
        }
    }
    Ok(render::edges(&class, &rows, format))
}

fn related(lambda: &str, e1: &str, e2: &str, format: Format) -> Outcome {
    let class = parse_class(lambda)?;
    let (e1, e2) = (ESet::parse(e1, class.m())?, ESet::parse(e2, class.m())?);
    let kind = relatedness(&class, &e1, &e2)?;
    Ok(render::value(
        format,
        json!({"lambda": class, "e1": e1, "e2": e2, "relatedness": kind}),
        &[
            ("lambda", class.to_string()),
            ("e1", e1.to_string()),
            ("e2", e2.to_string()),
            ("relatedness", kind.to_string()),
        ],
        kind.to_string(),
    ))
}

fn square(lambda: &str, e1: &str, e2: &str, format: Format) -> Outcome {
    let class = parse_class(lambda)?;
    let (e1, e2) = (ESet::parse(e1, class.m())?, ESet::parse(e2, class.m())?);
    let kind = relatedness(&class, &e1, &e2)?;
    if kind == Relatedness::Unrelated {
        return Err(Failure::Usage(format!(
            "{e1} and {e2} are not related at {class}"
        )));
    }
    let far = fourth_node(&class, &e1, &e2)?;
    Ok(render::value(
        format,
        json!({"lambda": class, "e1": e1, "e2": e2, "relatedness": kind, "fourth": far}),
        &[
            ("lambda", class.to_string()),
            ("e1", e1.to_string()),
            ("e2", e2.to_string()),
            ("relatedness", kind.to_string()),
            ("fourth", far.to_string()),
        ],
        far.to_string(),
    ))
}

fn reports_for(method: MethodArg, j: &JTuple) -> Result<Vec<CensusReport>, Failure> {
    let m = j.m();
    Ok(match method {
        MethodArg::Diagram => vec![census_report(m, j, Method::Diagram)?],
        MethodArg::Formula => vec![census_report(m, j, Method::Formula)?],
        MethodArg::Oracle => vec![oracle_report(m, j)?],
        MethodArg::All => {
            let mut out = vec![census_report(m, j, Method::Diagram)?];
            if (4..=6).contains(&m) {
                out.push(census_report(m, j, Method::Formula)?);
            }
            out.push(oracle_report(m, j)?);
            out
        }
    })
}

fn count_covers(j: &JTuple, method: MethodArg, format: Format) -> Outcome {
    let reports = reports_for(method, j)?;
    let text = render::reports(&reports, format);
    if let Some(other) = reports.iter().find(|r| r.total != reports[0].total) {
        return Err(Failure::Disagree(format!(
            "{text}\n{} reports {} but {} reports {}",
            reports[0].method, reports[0].total, other.method, other.total
        )));
    }
    Ok(text)
}

fn real_toric_oracle(j: &JTuple) -> Result<CensusReport, Failure> {
    let m = j.m();
    if j.entries().iter().any(|&v| v != 1) || m > 12 {
        return Err(Failure::Usage(
            "the oracle counts real toric classes only for J = (1, ..., 1) and m <= 12".into(),
        ));
    }
    let closure = real_toric_closure(m.max(3))?;
    Ok(CensusReport {
        m,
        j: j.clone(),
        method: Method::Oracle,
        total: count_classes_bruteforce(m, j)?,
        real_toric: Some(BigCount::from(closure[&m].len())),
        per_class: Vec::new(),
    })
}

fn count_real_toric(j: &JTuple, method: MethodArg, format: Format) -> Outcome {
    let m = j.m();
    let mut reports = Vec::new();
    if matches!(method, MethodArg::Diagram | MethodArg::All) {
        reports.push(census_report(m, j, Method::Diagram)?);
    }
    if method == MethodArg::Formula || (method == MethodArg::All && (4..=6).contains(&m)) {
        reports.push(census_report(m, j, Method::Formula)?);
    }
    if method == MethodArg::Oracle
        || (method == MethodArg::All && j.entries().iter().all(|&v| v == 1) && m <= 12)
    {
        reports.push(real_toric_oracle(j)?);
    }
    let text = render::real_toric_reports(&reports, format);
    if let Some(other) = reports
        .iter()
        .find(|r| r.real_toric != reports[0].real_toric)
    {
        return Err(Failure::Disagree(format!(
            "{text}\n{} and {} disagree on the real toric count",
            reports[0].method, other.method
        )));
    }
    Ok(text)
}

fn formula(j: &JTuple, lambda: Option<&str>, format: Format) -> Outcome {
    let (value, extra) = match lambda {
        Some(text) => {
            let class = parse_class(text)?;
            (count_e_tilde_formula(&class, j)?, Some(class))
        }
        None => (closed_form(j.m(), j)?, None),
    };
    let mut fields = vec![("m", j.m().to_string()), ("j", j.to_string())];
    let mut body = json!({"m": j.m(), "j": j, "formula": value});
    if let Some(class) = &extra {
        fields.push(("lambda", class.to_string()));
        body["lambda"] = json!(class);
    }
    fields.push(("formula", value.to_string()));
    Ok(render::value(format, body, &fields, value.to_string()))
}

fn verify_cmd(j: &JTuple, format: Format) -> Outcome {
    let report = verify(j.m(), j)?;
    let text = render::verification(&report, format);
    if report.agree {
        Ok(text)
    } else {
        Err(Failure::Disagree(text))
    }
}

fn puzzle(lambda: &str, j: Option<&str>, eseq: Option<&str>, format: Format) -> Outcome {
    let class = parse_class(lambda)?;
    let j = match j {
        Some(text) => text.parse::<JTuple>()?,
        None => JTuple::ones(class.m())?,
    };
    match eseq {
        Some(text) => {
            let seq = ESeq::parse(text, &j)?;
            let grid = reconstruct_puzzle(&class, &seq, &j)?;
            Ok(render::grid(&class, &seq, &grid, format))
        }
        None => {
            let mut built = 0usize;
            for seq in enumerate_e(&class, &j)? {
                reconstruct_puzzle(&class, &seq, &j)?;
                built += 1;
            }
            Ok(render::value(
                format,
                json!({"lambda": class, "j": j, "puzzles": built, "ok": true}),
                &[
                    ("lambda", class.to_string()),
                    ("j", j.to_string()),
                    ("puzzles", built.to_string()),
                    ("ok", "true".into()),
                ],
                format!("{built} puzzles rebuilt, all squares close"),
            ))
        }
    }
}

fn run(command: &Command) -> Outcome {
    match command {
        Command::Nodes { m, dot, out } => nodes(*m, *dot, out.format),
        Command::Edges { lambda, p, out } => edges(lambda, *p, out.format),
        Command::Related {
            lambda,
            e1,
            e2,
            out,
        } => related(lambda, e1, e2, out.format),
        Command::Square {
            lambda,
            e1,
            e2,
            out,
        } => square(lambda, e1, e2, out.format),
        Command::CountCovers { wedge, method, out } => {
            count_covers(&parse_wedge(wedge)?, *method, out.format)
        }
        Command::CountRealToric { wedge, method, out } => {
            count_real_toric(&parse_wedge(wedge)?, *method, out.format)
        }
        Command::Formula { wedge, lambda, out } => {
            formula(&parse_wedge(wedge)?, lambda.as_deref(), out.format)
        }
        Command::Verify { wedge, out } => verify_cmd(&parse_wedge(wedge)?, out.format),
        Command::Puzzle {
            lambda,
            j,
            eseq,
            out,
        } => puzzle(lambda, j.as_deref(), eseq.as_deref(), out.format),
    }
}

fn output_args(command: &Command) -> &OutputArgs {
    match command {
        Command::Nodes { out, .. }
        | Command::Edges { out, .. }
        | Command::Related { out, .. }
        | Command::Square { out, .. }
        | Command::CountCovers { out, .. }
        | Command::CountRealToric { out, .. }
        | Command::Formula { out, .. }
        | Command::Verify { out, .. }
        | Command::Puzzle { out, .. } => out,
    }
}

fn emit(text: &str, out: &OutputArgs) -> io::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &out.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let out = output_args(&cli.command);
    let start = Instant::now();
    let result = match out.parallel {
        Some(0) => Err(Failure::Usage("--parallel must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(&cli.command)),
            Err(e) => Err(Failure::Other(e.to_string())),
        },
        None => run(&cli.command),
    };
    if out.timing {
        eprintln!("elapsed: {:.3?}", start.elapsed());
    }
    let (text, code) = match result {
        Ok(text) => (Some(text), 0),
        Err(Failure::Disagree(text)) => (Some(text), 4),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            (None, 2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            (None, 3)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            (None, 1)
        }
    };
    if let Some(text) = text {
        if let Err(e) = emit(&text, out) {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(1);
        }
    }
    ExitCode::from(code)
}
