use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use quandlekit::fpq::{check_assignment, enumerate_presented, parse_presentation, Presentation};
use quandlekit::geometric::{build_cell, build_x_set, spherical_mosaic, Cell};
use quandlekit::knots::{knot_quandle_presentation, parse_diagram, TwistSpinSpec};
use quandlekit::quandle::{find_isomorphism, io};
use quandlekit::verify::{verify_paper, Fault};
use quandlekit::FiniteQuandle;

#[derive(Parser)]
#[command(
    name = "quandlekit",
    version,
    about = "Build, enumerate and compare quandles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Gap,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named quandle and export its table.
    Build {
        /// trivial:N, dihedral:N, cell16, cell24, cell600, conj16, conj24, conj600, mosaic:N (N in 2..5)
        name: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the table here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate a finitely presented quandle.
    Enumerate {
        presentation: PathBuf,
        /// Maximum number of live elements.
        #[arg(long, default_value_t = 5000)]
        cap: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the closed table here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the JSON report instead of the summary.
        #[arg(long)]
        json: bool,
    },
    /// Knot-quandle presentation of the m-twist-spin of a diagram.
    TwistSpin {
        diagram: PathBuf,
        #[arg(short, long)]
        m: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for an isomorphism between two quandles (table files or built-in names).
    Iso {
        a: String,
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Check that a generator assignment satisfies a presentation.
    Check {
        presentation: PathBuf,
        /// Table file or built-in name.
        table: String,
        /// generator=element, where element is an index or a label.
        #[arg(long = "assign", value_name = "GEN=ELEMENT")]
        assign: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run every verification claim and print a pass/fail matrix.
    VerifyPaper {
        /// A claim name or group (theorem1, theorem2, structure, toolkit).
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
        /// Invert the given 600-cell rotation block before checking.
        #[arg(long, hide = true)]
        inject_fault: Option<usize>,
    },
}

enum Status {
    Success,
    Violation,
    CapExceeded,
}

impl Status {
    fn code(&self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Violation | Status::CapExceeded => 1,
        }
    }
}

/// Usage and input errors; exit status 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<Status, Failure>;

/// `println!` that ignores a closed pipe.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

fn builtin(name: &str) -> Result<FiniteQuandle, Failure> {
    let parameter = |prefix: &str| -> Option<Result<usize, Failure>> {
        name.strip_prefix(prefix).map(|n| {
            n.parse()
                .map_err(|_| Failure(format!("invalid parameter in '{name}'")))
        })
    };
    if let Some(n) = parameter("trivial:") {
        return Ok(FiniteQuandle::trivial(n?)?);
    }
    if let Some(n) = parameter("dihedral:") {
        return Ok(FiniteQuandle::dihedral(n?)?);
    }
    if let Some(n) = parameter("mosaic:") {
        let n = u32::try_from(n?).map_err(|_| Failure(format!("invalid parameter in '{name}'")))?;
        return Ok(spherical_mosaic(n)?.to_finite_quandle()?);
    }
    let cell = |s: &str| match s {
        "16" => Some(Cell::C16),
        "24" => Some(Cell::C24),
        "600" => Some(Cell::C600),
        _ => None,
    };
    if let Some(c) = name.strip_prefix("cell").and_then(cell) {
        return Ok(build_cell(c)?.to_finite_quandle()?);
    }
    if let Some(c) = name.strip_prefix("conj").and_then(cell) {
        return Ok(build_x_set(c, &build_cell(c)?)?.to_finite_quandle()?);
    }
    Err(Failure(format!("unknown quandle '{name}'")))
}

/// A table file if `spec` names an existing path, otherwise a built-in quandle.
fn load_quandle(spec: &str) -> Result<FiniteQuandle, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = fs::read_to_string(path)?;
        return io::from_text(&text).map_err(|e| Failure(format!("{spec}: {e}")));
    }
    builtin(spec)
}

fn load_presentation(path: &Path) -> Result<Presentation, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_presentation(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn render(q: &FiniteQuandle, format: Format) -> String {
    match format {
        Format::Json => io::to_json(q) + "\n",
        Format::Csv => io::to_csv(q),
        Format::Gap => io::to_gap(q),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
            {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_build(name: &str, format: Format, out: Option<&Path>) -> Outcome {
    let q = builtin(name)?;
    let report = q.validate_axioms();
    emit(&render(&q, format), out)?;
    let summary = format!(
        "{name}: order {}, connected {}",
        q.order(),
        yes_no(q.is_connected())
    );
    // the table owns standard output unless it went to a file
    if out.is_some() {
        out!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    if report.is_empty() {
        Ok(Status::Success)
    } else {
        eprintln!("axiom violations: {}", report.violation_count());
        Ok(Status::Violation)
    }
}

fn cmd_enumerate(
    path: &Path,
    cap: usize,
    format: Format,
    out: Option<&Path>,
    as_json: bool,
) -> Outcome {
    let p = load_presentation(path)?;
    let result = enumerate_presented(&p, cap)?;
    let stats = &result.stats;
    if as_json {
        out!("{}", serde_json::to_string_pretty(&result.to_json(&p))?);
    }
    match result.quandle() {
        Some(q) => {
            if !as_json {
                out!(
                    "closed: order {} ({} passes, {} definitions, {} coincidences)",
                    q.order(),
                    stats.passes,
                    stats.definitions,
                    stats.coincidences
                );
            }
            if let Some(path) = out {
                emit(&render(q, format), Some(path))?;
            }
            Ok(Status::Success)
        }
        None => {
            if !as_json {
                out!("cap exceeded: more than {cap} live elements");
                out!("live elements per pass: {:?}", stats.pass_live_counts);
                out!("this is evidence of growth, not a proof that the quandle is infinite");
            }
            Ok(Status::CapExceeded)
        }
    }
}

fn cmd_twist_spin(path: &Path, m: u32, out: Option<&Path>) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let d = parse_diagram(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let p = knot_quandle_presentation(&TwistSpinSpec::new(d, m)?);
    emit(&p.to_string(), out)?;
    Ok(Status::Success)
}

fn cmd_iso(a: &str, b: &str, as_json: bool) -> Outcome {
    let (qa, qb) = (load_quandle(a)?, load_quandle(b)?);
    let found = if qa.order() == qb.order() {
        find_isomorphism(&qa, &qb)
    } else {
        None
    };
    let reason = if qa.order() != qb.order() {
        format!("orders {} and {} differ", qa.order(), qb.order())
    } else if found.is_none() {
        "no bijection preserves the operation".to_string()
    } else {
        String::new()
    };
    if as_json {
        let v = json!({
            "schema": "quandlekit/iso/v1",
            "orders": [qa.order(), qb.order()],
            "isomorphic": found.is_some(),
            "map": found.as_ref().map(|f| f.images.clone()),
            "reason": if found.is_some() { None } else { Some(&reason) },
        });
        out!("{}", serde_json::to_string_pretty(&v)?);
    } else if let Some(f) = &found {
        out!("isomorphic (order {})", qa.order());
        out!("map: {:?}", f.images);
    } else {
        out!("not isomorphic: {reason}");
    }
    Ok(if found.is_some() {
        Status::Success
    } else {
        Status::Violation
    })
}

fn cmd_check(path: &Path, table: &str, assign: &[String], as_json: bool) -> Outcome {
    let p = load_presentation(path)?;
    let q = load_quandle(table)?;
    let mut images: Vec<Option<usize>> = vec![None; p.generators().len()];
    for a in assign {
        let (g, value) = a
            .split_once('=')
            .ok_or_else(|| Failure(format!("expected GEN=ELEMENT, got '{a}'")))?;
        let i = p
            .generator_index(g.trim())
            .ok_or_else(|| Failure(format!("unknown generator '{g}'")))?;
        let value = value.trim();
        let x = match value.parse::<usize>() {
            Ok(x) if x < q.order() => x,
            Ok(x) => {
                return Err(Failure(format!(
                    "element {x} out of range (order {})",
                    q.order()
                )))
            }
            Err(_) => q
                .find_label(value)
                .ok_or_else(|| Failure(format!("no element labelled '{value}'")))?,
        };
        images[i] = Some(x);
    }
    let images = p
        .generators()
        .iter()
        .zip(&images)
        .map(|(g, x)| x.ok_or_else(|| Failure(format!("generator '{g}' is not assigned"))))
        .collect::<Result<Vec<_>, _>>()?;
    let check = check_assignment(&p, &q, &images)?;
    if as_json {
        let v = json!({
            "schema": "quandlekit/check/v1",
            "images": images,
            "relations_hold": check.relations_hold(),
            "failing_relations": check.failing_relations,
            "surjective": check.surjective,
        });
        out!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        out!("relations hold: {}", yes_no(check.relations_hold()));
        for &i in &check.failing_relations {
            out!("  fails: {}", p.relations()[i]);
        }
        out!("images generate (surjective): {}", yes_no(check.surjective));
    }
    Ok(if check.relations_hold() {
        Status::Success
    } else {
        Status::Violation
    })
}

fn cmd_verify(only: Option<&str>, as_json: bool, fault: Option<usize>) -> Outcome {
    let report = verify_paper(only, fault.map(Fault::InvertCell600Block));
    if as_json {
        out!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        for c in &report.claims {
            out!(
                "[{}] {:<14} {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.id.name(),
                c.statement
            );
            for d in &c.details {
                out!("       {d}");
            }
        }
        let passed = report.claims.iter().filter(|c| c.passed).count();
        out!("{passed}/{} claims passed", report.claims.len());
    }
    if report.claims.is_empty() {
        return Err(Failure(format!(
            "no claim matches '{}'",
            only.unwrap_or_default()
        )));
    }
    Ok(if report.all_passed() {
        Status::Success
    } else {
        Status::Violation
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Build { name, format, out } => cmd_build(name, *format, out.as_deref()),
        Command::Enumerate {
            presentation,
            cap,
            format,
            out,
            json,
        } => cmd_enumerate(presentation, *cap, *format, out.as_deref(), *json),
        Command::TwistSpin { diagram, m, out } => cmd_twist_spin(diagram, *m, out.as_deref()),
        Command::Iso { a, b, json } => cmd_iso(a, b, *json),
        Command::Check {
            presentation,
            table,
            assign,
            json,
        } => cmd_check(presentation, table, assign, *json),
        Command::VerifyPaper {
            only,
            json,
            inject_fault,
        } => cmd_verify(only.as_deref(), *json, *inject_fault),
    };
    match outcome {
        Ok(status) => ExitCode::from(status.code()),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
