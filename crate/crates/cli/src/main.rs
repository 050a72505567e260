use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spanfrob::constructions::{
    group_frobenius, groupoid_frobenius, identity_section, pair_groupoid, two_element_family,
    AlphaChoice, Group,
};
use spanfrob::frobenius::{check_commutative_base, check_frobenius, check_symmetric};
use spanfrob::io::{self, Structure};
use spanfrob::linear::{linearize, verify_frobenius_algebra};
use spanfrob::rel::{reduce_word, word_matrix};
use spanfrob::simplicial::TruncatedSS2;
use spanfrob::span::MultiplicityMatrix;
use spanfrob::tqft::{evaluate_word, partition_function, partition_functions, GeneratorWord};
use spanfrob::Error;

#[derive(Parser)]
#[command(name = "spanfrob", version, about = "Frobenius objects in finite spans")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Validate simplicial data and its monoid / Frobenius conditions.
    Check { file: PathBuf },
    /// Closed-surface invariants Z(Σ_g).
    Invariant {
        file: PathBuf,
        #[arg(long, conflicts_with = "max_genus", required_unless_present = "max_genus")]
        genus: Option<u64>,
        /// Print every genus from 0 up to this one.
        #[arg(long)]
        max_genus: Option<u64>,
    },
    /// Census of the two-edge family.
    Classify {
        #[arg(long, default_value_t = 2)]
        x1_size: usize,
        #[arg(long)]
        max_count: usize,
    },
    /// Export the linearized Frobenius algebra.
    Algebra {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a generator word, e.g. '["compose","counit","unit"]'.
    Eval {
        file: PathBuf,
        /// The word as JSON, or @path to read it from a file.
        word: String,
    },
    /// Relation words: reduce monic pairs or count trajectories.
    Ww { file: PathBuf, action: WwAction },
    /// Print a built-in example as a structure file.
    Example {
        kind: ExampleKind,
        /// Group order, or number of objects of the pair groupoid.
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        n_bab: usize,
        #[arg(long, default_value_t = 0)]
        n_bbb: usize,
        #[arg(long, value_enum, default_value_t = Alpha::Id)]
        alpha: Alpha,
        /// Twist element of a group (defaults to the identity).
        #[arg(long)]
        omega: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WwAction {
    Reduce,
    Trajectories,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleKind {
    TwoElement,
    Cyclic,
    Klein,
    S3,
    PairGroupoid,
}

#[derive(Clone, Copy, ValueEnum)]
enum Alpha {
    Id,
    Swap,
}

impl From<Alpha> for AlphaChoice {
    fn from(a: Alpha) -> Self {
        match a {
            Alpha::Id => AlphaChoice::Identity,
            Alpha::Swap => AlphaChoice::Swap,
        }
    }
}

/// Exit code 1: the input is well formed but a check failed.
const CHECK_FAILED: u8 = 1;
/// Exit code 2: bad usage or unparseable input.
const USAGE: u8 = 2;

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotFrobenius(_)
            | Error::NotAMonoid(_)
            | Error::Precondition(_)
            | Error::InvalidGroupoid(_) => CHECK_FAILED,
            _ => USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into() }
}

type CmdResult = Result<u8, Failure>;

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Writes to stdout, ignoring a closed pipe.
fn write_out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn emit(format: Format, value: &Value, table: impl FnOnce() -> String) {
    match format {
        Format::Json => write_out(&pretty(value)),
        Format::Table => write_out(&table()),
    }
}

fn matrix_table(m: &MultiplicityMatrix) -> String {
    let mut out = format!("{:>12}", "");
    for y in m.dst().iter() {
        out += &format!(" {y:>12}");
    }
    out.push('\n');
    for (i, x) in m.src().iter().enumerate() {
        out += &format!("{x:>12}");
        for j in 0..m.dst().len() {
            out += &format!(" {:>12}", m.counts().get(i, j).to_string());
        }
        out.push('\n');
    }
    out
}

fn simplicial_report(t: &TruncatedSS2) -> (bool, Value) {
    let violations = t.validate();
    let units = t.unit_violations();
    let mismatches = t.fiber_mismatches();
    let ok = violations.is_empty() && units.is_empty() && mismatches.is_empty();
    let report = json!({
        "simplicial_identities": { "pass": violations.is_empty(), "violations": violations },
        "unit_conditions": { "pass": units.is_empty(), "violations": units },
        "associativity": { "pass": mismatches.is_empty(), "mismatches": mismatches },
    });
    (ok, report)
}

fn cmd_check(format: Format, file: &Path) -> CmdResult {
    let s = io::load_structure(&read_json(file)?)?;
    let (mut ok, mut report) = simplicial_report(s.base());
    report["commutative"] = json!(check_commutative_base(s.base()));
    if let Structure::Frobenius(f) = &s {
        let fr = match check_frobenius(f) {
            Ok(w) => json!({ "pass": true, "gamma": w.gamma.to_labels() }),
            Err(e) => {
                ok = false;
                json!({ "pass": false, "violations": e.violations })
            }
        };
        report["frobenius"] = fr;
        report["symmetric"] = json!(check_symmetric(f));
    }
    report["pass"] = json!(ok);

    emit(format, &report, || {
        let mut out = String::new();
        let mut line = |name: &str, pass: bool| out += &format!("{name:<24} {}\n", if pass { "pass" } else { "FAIL" });
        for key in ["simplicial_identities", "unit_conditions", "associativity", "frobenius"] {
            if let Some(section) = report.get(key) {
                line(key, section["pass"].as_bool().unwrap_or(false));
            }
        }
        for key in ["commutative", "symmetric"] {
            if let Some(v) = report.get(key) {
                out += &format!("{key:<24} {}\n", v.as_bool().unwrap_or(false));
            }
        }
        let details = [
            ("simplicial_identities", "violations"),
            ("unit_conditions", "violations"),
            ("associativity", "mismatches"),
            ("frobenius", "violations"),
        ];
        for (key, list) in details {
            if let Some(items) = report.get(key).and_then(|s| s.get(list)).and_then(Value::as_array) {
                for item in items {
                    out += &format!("  {key}: {item}\n");
                }
            }
        }
        out
    });
    Ok(if ok { 0 } else { CHECK_FAILED })
}

fn frobenius_input(file: &Path) -> Result<spanfrob::frobenius::FrobeniusDatum, Failure> {
    match io::load_structure(&read_json(file)?)? {
        Structure::Frobenius(f) => Ok(f),
        Structure::Simplicial(_) => Err(Failure {
            code: CHECK_FAILED,
            message: "input has no alpha_hat, so it carries no Frobenius structure".into(),
        }),
    }
}

fn cmd_invariant(format: Format, file: &Path, genus: Option<u64>, max_genus: Option<u64>) -> CmdResult {
    let f = frobenius_input(file)?;
    let rows: Vec<(u64, String)> = match (genus, max_genus) {
        (Some(g), _) => vec![(g, partition_function(&f, g)?.to_string())],
        (None, Some(m)) => partition_functions(&f, m)?
            .into_iter()
            .enumerate()
            .map(|(g, z)| (g as u64, z.to_string()))
            .collect(),
        (None, None) => return Err(usage("pass --genus or --max-genus")),
    };
    let value = Value::Array(rows.iter().map(|(g, z)| json!({ "genus": g, "Z": z })).collect());
    emit(format, &value, || {
        let mut out = String::from("genus Z\n");
        for (g, z) in &rows {
            out += &format!("{g} {z}\n");
        }
        out
    });
    Ok(0)
}

fn cmd_classify(format: Format, x1_size: usize, max_count: usize) -> CmdResult {
    if x1_size != 2 {
        return Err(usage("only --x1-size 2 is implemented"));
    }
    let mut rows = Vec::new();
    for alpha in [AlphaChoice::Identity, AlphaChoice::Swap] {
        for n_bab in 0..=max_count {
            for n_bbb in 0..=max_count {
                let fam = two_element_family(n_bab, n_bbb, alpha);
                let t = fam.datum.base();
                let monoid = t.validate().is_empty() && t.check_unit_conditions() && t.check_associativity_fibers();
                let frobenius = check_frobenius(&fam.datum).is_ok();
                rows.push(json!({
                    "alpha": alpha.name(),
                    "n_bab": n_bab,
                    "n_bbb": n_bbb,
                    "monoid": monoid,
                    "frobenius": frobenius,
                }));
            }
        }
    }
    let count = |alpha: &str, key: &str| {
        rows.iter().filter(|r| r["alpha"] == alpha && r[key] == true).count()
    };
    let per_alpha = (max_count + 1) * (max_count + 1);
    let summary = json!({
        "candidates_per_alpha": per_alpha,
        "id": { "monoid": count("id", "monoid"), "frobenius": count("id", "frobenius") },
        "swap": { "monoid": count("swap", "monoid"), "frobenius": count("swap", "frobenius") },
    });
    let value = json!({ "rows": rows, "summary": summary });
    emit(format, &value, || {
        let mut out = String::from("alpha n_bab n_bbb monoid frobenius\n");
        for r in &rows {
            out += &format!(
                "{:<5} {:>5} {:>5} {:>6} {:>9}\n",
                r["alpha"].as_str().unwrap_or(""),
                r["n_bab"],
                r["n_bbb"],
                r["monoid"],
                r["frobenius"]
            );
        }
        for alpha in ["id", "swap"] {
            out += &format!(
                "{alpha}: {}/{per_alpha} monoids, {}/{per_alpha} Frobenius\n",
                count(alpha, "monoid"),
                count(alpha, "frobenius")
            );
        }
        out
    });
    Ok(0)
}

fn cmd_algebra(format: Format, file: &Path, out: Option<&Path>) -> CmdResult {
    let f = frobenius_input(file)?;
    let p = linearize(&f)?;
    let violations = verify_frobenius_algebra(&p);
    if !violations.is_empty() {
        let report = json!({ "pass": false, "violations": violations });
        emit(format, &report, || {
            violations.iter().map(|v| format!("{}: {}\n", v.axiom, v.detail)).collect()
        });
        return Ok(CHECK_FAILED);
    }
    let value = p.to_json();
    match out {
        Some(path) => {
            fs::write(path, pretty(&value)).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let report = json!({ "pass": true, "dimension": p.dim(), "out": path.display().to_string() });
            emit(format, &report, || format!("wrote {}-dimensional algebra to {}\n", p.dim(), path.display()));
        }
        None => emit(format, &value, || {
            let mut s = format!("basis: {}\n", p.basis().labels().join(" "));
            let n = p.dim();
            for x in 0..n {
                for y in 0..n {
                    let terms: Vec<String> = p
                        .product_terms(x, y)
                        .into_iter()
                        .map(|(z, c)| format!("{c}·{}", p.basis().label(z)))
                        .collect();
                    if !terms.is_empty() {
                        s += &format!("{} * {} = {}\n", p.basis().label(x), p.basis().label(y), terms.join(" + "));
                    }
                }
            }
            s
        }),
    }
    Ok(0)
}

fn cmd_eval(format: Format, file: &Path, word: &str) -> CmdResult {
    let text = match word.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?,
        None => word.to_string(),
    };
    let w: Value = serde_json::from_str(&text).map_err(|e| usage(format!("word: {e}")))?;
    let w = GeneratorWord::from_json(&w)?;
    w.arity()?;
    let f = frobenius_input(file)?;
    let m = evaluate_word(&f, &w)?;
    emit(format, &io::matrix_to_json(&m), || {
        if m.src().len() == 1 && m.dst().len() == 1 && w.arity().map(|a| a == (0, 0)).unwrap_or(false) {
            format!("{}\n", m.counts().get(0, 0))
        } else {
            matrix_table(&m)
        }
    });
    Ok(0)
}

fn cmd_ww(format: Format, file: &Path, action: WwAction) -> CmdResult {
    let w = io::word_from_json(&read_json(file)?)?;
    match action {
        WwAction::Reduce => {
            let r = reduce_word(&w);
            emit(format, &io::word_to_json(&r), || {
                let mut out = format!("{} letter(s)\n", r.len());
                for (i, l) in r.letters().iter().enumerate() {
                    let pairs: Vec<String> = l.label_pairs().iter().map(|(x, y)| format!("{x}→{y}")).collect();
                    out += &format!("R{}: {}\n", i + 1, pairs.join(" "));
                }
                out
            });
        }
        WwAction::Trajectories => {
            let m = word_matrix(&w);
            emit(format, &io::matrix_to_json(&m), || matrix_table(&m));
        }
    }
    Ok(0)
}

fn cmd_example(
    kind: ExampleKind,
    n: usize,
    n_bab: usize,
    n_bbb: usize,
    alpha: Alpha,
    omega: Option<&str>,
) -> CmdResult {
    let group = |g: Group| -> Result<Value, Failure> {
        let w = omega.unwrap_or(g.identity()).to_string();
        Ok(io::frobenius_to_json(&group_frobenius(&g, &w)?))
    };
    let value = match kind {
        ExampleKind::TwoElement => io::frobenius_to_json(&two_element_family(n_bab, n_bbb, alpha.into()).datum),
        ExampleKind::Cyclic => {
            if n == 0 {
                return Err(usage("--n must be positive"));
            }
            group(Group::cyclic(n))?
        }
        ExampleKind::Klein => group(Group::klein())?,
        ExampleKind::S3 => group(Group::symmetric3())?,
        ExampleKind::PairGroupoid => {
            let gpd = pair_groupoid(n);
            io::frobenius_to_json(&groupoid_frobenius(&gpd, &identity_section(&gpd))?)
        }
    };
    write_out(&pretty(&value));
    Ok(0)
}

fn run(cli: Cli) -> CmdResult {
    let fmt = cli.format;
    match cli.command {
        Command::Check { file } => cmd_check(fmt, &file),
        Command::Invariant { file, genus, max_genus } => cmd_invariant(fmt, &file, genus, max_genus),
        Command::Classify { x1_size, max_count } => cmd_classify(fmt, x1_size, max_count),
        Command::Algebra { file, out } => cmd_algebra(fmt, &file, out.as_deref()),
        Command::Eval { file, word } => cmd_eval(fmt, &file, &word),
        Command::Ww { file, action } => cmd_ww(fmt, &file, action),
        Command::Example { kind, n, n_bab, n_bbb, alpha, omega } => {
            cmd_example(kind, n, n_bab, n_bbb, alpha, omega.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
