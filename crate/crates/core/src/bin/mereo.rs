use std::collections::HashSet;
use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use mereo::enumeration::{all_fixtures, Relabel};
use mereo::equivalence::{Difference, Direction};
use mereo::{
    check_part_axioms, check_sum_axioms, derived_theorem_suite, enumerate_mereo, enumerate_sum, export_dot,
    induce_part, induce_sum, parse_model, roundtrip_part, roundtrip_sum, write_model, AxiomId, AxiomReport, Domain,
    ModelDocument, PartAxiom, Structure, SumAxiom, Theory,
};

// Writes to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($arg)*);
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoryArg {
    Part,
    Sum,
}

impl From<TheoryArg> for Theory {
    fn from(t: TheoryArg) -> Self {
        match t {
            TheoryArg::Part => Theory::Part,
            TheoryArg::Sum => Theory::Sum,
        }
    }
}

/// Check finite parthood and sum structures against the axioms of classical mereology.
#[derive(Debug, Parser)]
#[command(name = "mereo", version)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a model against the axioms of a theory.
    Check {
        /// Model document or DOT file (`-` reads stdin).
        file: PathBuf,
        /// Theory to check; defaults to the document's kind. A structure of the
        /// other kind is carried across by the induction map first.
        #[arg(long, value_enum)]
        theory: Option<TheoryArg>,
        /// Comma-separated axiom or theorem names (e.g. P4,P4' or S1,S5).
        #[arg(long, value_delimiter = ',')]
        axioms: Vec<String>,
        /// Read S1 literally: the sum of a collection must be one of its members.
        #[arg(long)]
        strict_s1_in_x: bool,
        /// Also run the derived theorems of the sum theory.
        #[arg(long)]
        theorems: bool,
    },
    /// Translate a model into the other signature.
    Induce {
        file: PathBuf,
        /// Target kind; defaults to the kind the document is not.
        #[arg(long, value_enum)]
        to: Option<TheoryArg>,
    },
    /// Translate a model there and back and compare with the original.
    Roundtrip { file: PathBuf },
    /// Enumerate all models on a labeled domain.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TheoryArg::Part)]
        theory: TheoryArg,
        /// Print only the number of models.
        #[arg(long)]
        count_only: bool,
        /// Count (or list) models up to isomorphism.
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Run the five independence fixtures and compare with their expected profiles.
    Witnesses,
    /// Write a Graphviz diagram of a model.
    ExportDot {
        file: PathBuf,
        /// Graph name.
        #[arg(long)]
        name: Option<String>,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
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
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &PathBuf) -> Result<Structure, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?
    };
    parse_model(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn print_json(value: &impl serde::Serialize) {
    outln!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

/// Returns whether everything requested held.
fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Check {
            file,
            theory,
            axioms,
            strict_s1_in_x,
            theorems,
        } => {
            let structure = load(&file)?;
            let theory = theory.map(Theory::from).unwrap_or(structure.theory());
            let ids = axioms
                .iter()
                .map(|a| a.trim().parse::<AxiomId>())
                .collect::<Result<Vec<_>, _>>()?;
            let (report, domain) = check(&structure, theory, &ids, strict_s1_in_x, theorems)?;
            match cli.format {
                Format::Text => out!("{}", report.render(&domain)),
                Format::Json => print_json(&report),
            }
            Ok(report.all_hold())
        }
        Command::Induce { file, to } => {
            let structure = load(&file)?;
            let target = to.map(Theory::from).unwrap_or(match structure.theory() {
                Theory::Part => Theory::Sum,
                Theory::Sum => Theory::Part,
            });
            let out = carry(structure, target);
            out!("{}", write_model(&out, None));
            Ok(true)
        }
        Command::Roundtrip { file } => {
            let structure = load(&file)?;
            let report = match &structure {
                Structure::Part(m) => roundtrip_part(m),
                Structure::Sum(s) => roundtrip_sum(s),
            };
            let d = structure.domain();
            let direction = match report.direction {
                Direction::PartFirst => "part-first",
                Direction::SumFirst => "sum-first",
            };
            let difference = report.first_difference.map(|diff| describe(d, diff));
            match cli.format {
                Format::Text => {
                    outln!(
                        "{direction} round trip: input {} its axioms, reconstruction {}",
                        if report.in_theory { "satisfies" } else { "violates" },
                        if report.equal { "equals the original" } else { "differs" }
                    );
                    if let Some(diff) = &difference {
                        outln!("first difference: {diff}");
                    }
                }
                Format::Json => print_json(&json!({
                    "direction": report.direction,
                    "in_theory": report.in_theory,
                    "equal": report.equal,
                    "first_difference": report.first_difference,
                    "first_difference_text": difference,
                })),
            }
            Ok(report.equal)
        }
        Command::Enumerate {
            n,
            theory,
            count_only,
            up_to_iso,
        } => {
            let collect = !count_only;
            let (summary, models) = match theory {
                TheoryArg::Part => {
                    let r = enumerate_mereo(n, collect)?;
                    let models = r.models.as_deref().map(|ms| documents(ms, up_to_iso, Structure::Part));
                    ((r.labeled_count, r.iso_count, r.elapsed, r.via_bijection), models)
                }
                TheoryArg::Sum => {
                    let r = enumerate_sum(n, collect)?;
                    let models = r.models.as_deref().map(|ms| documents(ms, up_to_iso, Structure::Sum));
                    ((r.labeled_count, r.iso_count, r.elapsed, r.via_bijection), models)
                }
            };
            let (labeled, iso, elapsed, via_bijection) = summary;
            let count = if up_to_iso { iso } else { labeled };
            match cli.format {
                Format::Text if count_only => outln!("{count}"),
                Format::Text => {
                    outln!(
                        "n={n} theory={} labeled={labeled} up-to-iso={iso} elapsed={:.3}s{}",
                        Theory::from(theory),
                        elapsed.as_secs_f64(),
                        if via_bijection { " (via parthood models)" } else { "" }
                    );
                    for doc in models.unwrap_or_default() {
                        outln!("{}", serde_json::to_string(&doc).expect("documents serialize"));
                    }
                }
                Format::Json => print_json(&json!({
                    "n": n,
                    "theory": Theory::from(theory),
                    "labeled_count": labeled,
                    "iso_count": iso,
                    "count": count,
                    "via_bijection": via_bijection,
                    "elapsed_ms": elapsed.as_millis() as u64,
                    "models": models,
                })),
            }
            Ok(true)
        }
        Command::Witnesses => {
            let mut all = true;
            let mut rows = Vec::new();
            for f in all_fixtures() {
                let report = f.check();
                let matched = f.matches();
                all &= matched;
                match cli.format {
                    Format::Text => {
                        outln!(
                            "{}: {} ({})",
                            f.name,
                            if matched { "profile matched" } else { "PROFILE MISMATCH" },
                            f.caption
                        );
                        for line in report.render(f.structure.domain()).lines() {
                            outln!("  {line}");
                        }
                    }
                    Format::Json => rows.push(json!({
                        "name": f.name.as_str(),
                        "caption": f.caption,
                        "matched": matched,
                        "expected": f.expected.iter().map(|(a, h)| json!({"axiom": AxiomId::from(*a), "holds": h})).collect::<Vec<_>>(),
                        "report": report,
                    })),
                }
            }
            if cli.format == Format::Json {
                print_json(&rows);
            }
            Ok(all)
        }
        Command::ExportDot { file, name } => {
            let structure = load(&file)?;
            out!("{}", export_dot(&structure, name.as_deref()));
            Ok(true)
        }
    }
}

fn carry(structure: Structure, target: Theory) -> Structure {
    match (structure, target) {
        (Structure::Part(m), Theory::Sum) => Structure::Sum(induce_sum(&m)),
        (Structure::Sum(s), Theory::Part) => Structure::Part(induce_part(&s)),
        (same, _) => same,
    }
}

fn check(
    structure: &Structure,
    theory: Theory,
    ids: &[AxiomId],
    strict_s1: bool,
    theorems: bool,
) -> Result<(AxiomReport, Domain), Failure> {
    match carry(structure.clone(), theory) {
        Structure::Part(m) => {
            if strict_s1 || theorems {
                return Err(Failure("--strict-s1-in-x and --theorems apply to the sum theory".into()));
            }
            let axioms = if ids.is_empty() {
                PartAxiom::CORE.to_vec()
            } else {
                ids.iter()
                    .map(|id| match id {
                        AxiomId::Part(a) => Ok(*a),
                        other => Err(Failure(format!("`{other}` is not a parthood axiom"))),
                    })
                    .collect::<Result<_, _>>()?
            };
            Ok((check_part_axioms(&m, &axioms), m.domain().clone()))
        }
        Structure::Sum(s) => {
            let mut axioms = Vec::new();
            let mut wanted_theorems = Vec::new();
            for id in ids {
                match id {
                    AxiomId::Sum(a) => axioms.push(*a),
                    AxiomId::Theorem(t) => wanted_theorems.push(AxiomId::Theorem(*t)),
                    other => return Err(Failure(format!("`{other}` is not a sum axiom or theorem"))),
                }
            }
            if ids.is_empty() {
                axioms = SumAxiom::CORE.to_vec();
            }
            if strict_s1 {
                for a in &mut axioms {
                    if *a == SumAxiom::S1 {
                        *a = SumAxiom::S1InCollection;
                    }
                }
            }
            let mut report = check_sum_axioms(&s, &axioms);
            if theorems || !wanted_theorems.is_empty() {
                let suite = derived_theorem_suite(&s);
                let seen: HashSet<AxiomId> = report.verdicts.iter().map(|v| v.axiom).collect();
                report.verdicts.extend(
                    suite
                        .verdicts
                        .into_iter()
                        .filter(|v| !seen.contains(&v.axiom))
                        .filter(|v| theorems || wanted_theorems.contains(&v.axiom)),
                );
            }
            Ok((report, s.domain().clone()))
        }
    }
}

fn documents<T: Relabel + Clone>(models: &[T], up_to_iso: bool, wrap: fn(T) -> Structure) -> Vec<ModelDocument> {
    let mut seen = HashSet::new();
    models
        .iter()
        .filter(|m| !up_to_iso || seen.insert(m.canonical_key()))
        .map(|m| ModelDocument::from_structure(&wrap(m.clone()), None))
        .collect()
}

fn describe(d: &Domain, diff: Difference) -> String {
    match diff {
        Difference::Pair { x, y, in_original } => format!(
            "{} ⊑ {} {}",
            d.label(x),
            d.label(y),
            if in_original { "only in the original" } else { "only in the reconstruction" }
        ),
        Difference::Sum { x, set, in_original } => format!(
            "{} + {} {}",
            d.label(x),
            d.show(set),
            if in_original { "only in the original" } else { "only in the reconstruction" }
        ),
    }
}
