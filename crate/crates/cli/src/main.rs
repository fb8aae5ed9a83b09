use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gtlattice_core::export::{labeling_json, lattice_dot, lattice_json, matrix_json, report_json, trace_json};
use gtlattice_core::{
    build_lattice, check_identity, check_sl_relations, compare_forced_vs_formula, compare_products,
    enumerate_ssyt, force_all_with, label_all, matrix_ekk_diag, matrix_h, matrix_x, matrix_y,
    verify_all, weyl_dimension, ConditionReport, DiamondMode, ForcingOrder, GtError, GtLattice,
    IdentityInstance, Partition,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gtlattice", version, about = "Exact Gelfand-Tsetlin lattices for sl_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the lattice and export it.
    Build(Common),
    /// Label the lattice and check every condition and relation.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Check every same-rank pair instead of pairs with a shared cover.
        #[arg(long)]
        exhaustive_diamond: bool,
    },
    /// Export the X, Y, H and diagonal E_kk matrices.
    Matrices(Common),
    /// Derive edge products from the vertex weights and compare with the labels.
    Force {
        #[command(flatten)]
        common: Common,
        /// Process each component from its own minimum.
        #[arg(long)]
        per_component_forcing: bool,
    },
    /// Check the rational function identity on random instances.
    Identity {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Largest instance size.
        #[arg(long = "max-len", default_value_t = 8)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the number of tableaux with the Weyl dimension formula.
    Dim(Common),
}

#[derive(Args)]
struct Common {
    /// Partition as comma-separated parts, e.g. 2,1.
    #[arg(long)]
    shape: String,
    /// Rank of gl_n; entries are bounded by n.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<GtError> for Failure {
    fn from(e: GtError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Output, Failure>;

/// Rendered output plus whether every check passed.
struct Output {
    text: String,
    pass: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, pass: true }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("valid json");
    s.push('\n');
    s
}

fn lattice_of(common: &Common) -> Result<GtLattice, Failure> {
    let shape: Partition = common
        .shape
        .parse()
        .map_err(|e: GtError| Failure::Usage(e.to_string()))?;
    if common.n < 2 {
        return Err(Failure::Usage(format!("n must be at least 2, got {}", common.n)));
    }
    Ok(build_lattice(&shape, common.n)?)
}

fn unsupported(format: Format, command: &str) -> Failure {
    let name = match format {
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Text => "text",
    };
    Failure::Usage(format!("format {name} is not available for {command}"))
}

fn report_lines(reports: &[&ConditionReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s += &format!("{}: {}\n", r.condition, if r.pass { "pass" } else { "FAIL" });
        for v in &r.violations {
            s += &format!("  {}: expected {}, got {}\n", v.location, v.expected, v.actual);
        }
    }
    s
}

fn cmd_build(common: &Common) -> Outcome {
    let l = lattice_of(common)?;
    let text = match common.format {
        Format::Json => pretty(&lattice_json(&l)),
        Format::Dot => lattice_dot(&l),
        Format::Text => {
            let mut s = format!("shape {} n {}: {} vertices, {} edges\n", l.shape(), l.n(), l.len(), l.edges().len());
            for (id, t) in l.vertices().iter().enumerate() {
                s += &format!("{id}\t{t}\tm={:?}\n", l.m_vector(id));
            }
            for e in l.edges() {
                s += &format!("{} -> {}\tcolor {}\n", e.from, e.to, e.color);
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn cmd_verify(common: &Common, exhaustive: bool) -> Outcome {
    let l = lattice_of(common)?;
    let lab = label_all(&l)?;
    let mode = if exhaustive { DiamondMode::Exhaustive } else { DiamondMode::SharedCovers };
    let summary = verify_all(&l, &lab, mode);
    let relations = check_sl_relations(&l, &lab);
    let products = compare_products(&l, &lab)?;
    let oracle = ConditionReport {
        condition: "classical-products".into(),
        pass: products.all_equal(),
        violations: products
            .mismatches()
            .map(|m| gtlattice_core::Violation {
                location: format!("edge {}", m.edge),
                expected: m.classical.to_string(),
                actual: m.combinatorial.to_string(),
            })
            .collect(),
        checked: products.entries.len(),
    };
    let mut reports: Vec<&ConditionReport> = summary.reports.iter().collect();
    reports.push(&relations);
    reports.push(&oracle);
    let pass = reports.iter().all(|r| r.pass);
    let text = match common.format {
        Format::Json => pretty(&json!({
            "pass": pass,
            "labeling": labeling_json(&l, &lab),
            "reports": reports.iter().map(|r| report_json(r)).collect::<Vec<_>>(),
        })),
        Format::Text => report_lines(&reports),
        Format::Dot => return Err(unsupported(common.format, "verify")),
    };
    Ok(Output { text, pass })
}

fn cmd_matrices(common: &Common) -> Outcome {
    let l = lattice_of(common)?;
    let lab = label_all(&l)?;
    let family = |f: &dyn Fn(usize) -> gtlattice_core::SparseMatrix, range: std::ops::RangeInclusive<usize>| {
        Value::Object(range.map(|k| (k.to_string(), matrix_json(&f(k)))).collect())
    };
    let colors = 1..=l.colors();
    let value = json!({
        "dim": l.len(),
        "X": family(&|k| matrix_x(&l, &lab, k), colors.clone()),
        "Y": family(&|k| matrix_y(&l, &lab, k), colors.clone()),
        "H": family(&|k| matrix_h(&l, k), colors),
        "E": family(&|k| matrix_ekk_diag(&l, k), 1..=l.n()),
    });
    match common.format {
        Format::Json => Ok(Output::ok(pretty(&value))),
        Format::Text => {
            let mut s = String::new();
            for k in 1..=l.colors() {
                s += &format!("X_{k}\n{}Y_{k}\n{}H_{k}\n{}", matrix_x(&l, &lab, k), matrix_y(&l, &lab, k), matrix_h(&l, k));
            }
            Ok(Output::ok(s))
        }
        Format::Dot => Err(unsupported(common.format, "matrices")),
    }
}

fn cmd_force(common: &Common, per_component: bool) -> Outcome {
    let l = lattice_of(common)?;
    let lab = label_all(&l)?;
    let order = if per_component { ForcingOrder::PerComponent } else { ForcingOrder::RankSweep };
    let asg = force_all_with(&l, order).map_err(|e| Failure::Verification(e.to_string()))?;
    let report = compare_forced_vs_formula(&l, &lab, &asg);
    let pass = report.pass && asg.is_total() && asg.all_positive();
    let text = match common.format {
        Format::Json => pretty(&json!({
            "pass": pass,
            "report": report_json(&report),
            "trace": trace_json(&asg),
        })),
        Format::Text => {
            let mut s = report_lines(&[&report]);
            for e in 0..asg.len() {
                let by = match asg.provenance(e) {
                    Some(gtlattice_core::ForcedBy::Crossing { vertex, .. }) => format!("crossing at {vertex}"),
                    Some(gtlattice_core::ForcedBy::Diamond { witnesses }) => format!("diamond {witnesses:?}"),
                    None => "undetermined".into(),
                };
                let pi = asg.get(e).map_or("?".into(), ToString::to_string);
                s += &format!("edge {e}\tpi {pi}\t{by}\n");
            }
            s
        }
        Format::Dot => return Err(unsupported(common.format, "force")),
    };
    Ok(Output { text, pass })
}

fn cmd_identity(seed: u64, trials: usize, max_len: usize, format: Format) -> Outcome {
    if max_len == 0 {
        return Err(Failure::Usage("max-len must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let failed: Vec<usize> = (0..trials)
        .filter(|_| !check_identity(&IdentityInstance::random(&mut rng, max_len)))
        .collect();
    let pass = failed.is_empty();
    let text = match format {
        Format::Json => pretty(&json!({
            "seed": seed,
            "trials": trials,
            "passed": trials - failed.len(),
            "failed_trials": failed,
        })),
        Format::Text => format!("{}/{trials} instances passed (seed {seed})\n", trials - failed.len()),
        Format::Dot => return Err(unsupported(format, "identity")),
    };
    Ok(Output { text, pass })
}

fn cmd_dim(common: &Common) -> Outcome {
    let shape: Partition = common
        .shape
        .parse()
        .map_err(|e: GtError| Failure::Usage(e.to_string()))?;
    if common.n < 2 {
        return Err(Failure::Usage(format!("n must be at least 2, got {}", common.n)));
    }
    let count = enumerate_ssyt(&shape, common.n)?.len();
    let weyl = weyl_dimension(&shape, common.n);
    let pass = weyl == count.into();
    let text = match common.format {
        Format::Json => pretty(&json!({ "enumeration": count, "weyl_dimension": weyl.to_string(), "pass": pass })),
        Format::Text => format!("{count}, {weyl}\n"),
        Format::Dot => return Err(unsupported(common.format, "dim")),
    };
    Ok(Output { text, pass })
}

fn write(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, out) = match &cli.command {
        Command::Build(c) => (cmd_build(c), c.out.as_ref()),
        Command::Verify { common, exhaustive_diamond } => (cmd_verify(common, *exhaustive_diamond), common.out.as_ref()),
        Command::Matrices(c) => (cmd_matrices(c), c.out.as_ref()),
        Command::Force { common, per_component_forcing } => (cmd_force(common, *per_component_forcing), common.out.as_ref()),
        Command::Identity { seed, trials, max_len, format, out } => (cmd_identity(*seed, *trials, *max_len, *format), out.as_ref()),
        Command::Dim(c) => (cmd_dim(c), c.out.as_ref()),
    };
    let result = outcome.and_then(|o| write(out, &o.text).map(|_| o.pass));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
