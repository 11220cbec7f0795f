//! Command-line front end for arithmetic matroids and toric arrangements.
//!
//! Matrices are read in the text format `rows cols` followed by one line per
//! row; matroids in the JSON format with full rank and multiplicity tables.
//! A matroid argument may also be a matrix file, which is read as the matroid
//! it represents.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use arith_matroid::decomposition::decompose;
use arith_matroid::linalg::{hnf, snf};
use arith_matroid::representations::{
    all_representations, is_orientable, represent_surjective, representation_bound,
};
use arith_matroid::shnf::shnf;
use arith_matroid::toric::{
    homology, independence_poset, layers_poset, order_complex, poset_isomorphic, Poset,
};
use arith_matroid::{reduction, ArithmeticMatroid, AxiomViolation, IntMatrix, Subset};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Number, Value};

const EXIT_INPUT: u8 = 1;
const EXIT_NOT_REPRESENTABLE: u8 = 2;
const EXIT_AXIOM: u8 = 3;

#[derive(Parser)]
#[command(name = "arith-matroid", version, about = "Arithmetic matroids, their integer representations and toric arrangements")]
struct Cli {
    /// Output encoding; `dot` applies to poset output only.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Check the rank and arithmetic axioms, printing a witness for each failure.
    Validate {
        input: PathBuf,
        /// Exit with status 3 unless the matroid is arithmetic.
        #[arg(long)]
        strict: bool,
    },
    /// Summary invariants of a matroid.
    Info { input: PathBuf },
    /// Hermite normal form.
    Hnf {
        input: PathBuf,
        /// Also print the unimodular transform `U` with `U A = H`.
        #[arg(long)]
        witness: bool,
    },
    /// Smith normal form.
    Snf {
        input: PathBuf,
        /// Also print `U` and `V` with `U A V = D`.
        #[arg(long)]
        witness: bool,
    },
    /// Signed Hermite normal form, the canonical form under `A -> U A S`.
    Shnf {
        input: PathBuf,
        /// Also print `U` and the column signs `S`.
        #[arg(long)]
        witness: bool,
    },
    /// The reduction of a quasi-arithmetic matroid.
    Reduce { input: PathBuf },
    /// One representation, or exit status 2 if there is none.
    Represent { input: PathBuf },
    /// Every essential representation up to equivalence.
    Representations { input: PathBuf },
    /// Whether the reduction admits a consistent choice of signs.
    Orientable { input: PathBuf },
    /// Finest decomposition of a represented matroid into direct summands.
    Decompose { input: PathBuf },
    /// Poset of layers of the toric arrangement of a matrix.
    PosetLayers { input: PathBuf },
    /// Arithmetic independence poset of the toric arrangement of a matrix.
    PosetIndependence {
        input: PathBuf,
        /// Instead, build the poset for every representation of the matroid
        /// and report its isomorphism classes.
        #[arg(long)]
        all_reps: bool,
    },
    /// Reduced integral homology of the order complex of a poset.
    Homology {
        input: PathBuf,
        /// Keep the minimum instead of removing it.
        #[arg(long)]
        keep_bottom: bool,
    },
    /// Whether two posets are isomorphic.
    Isomorphic { first: PathBuf, second: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<arith_matroid::Error> for Failure {
    fn from(e: arith_matroid::Error) -> Failure {
        Failure::input(e.to_string())
    }
}

type Outcome = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<IntMatrix, Failure> {
    IntMatrix::from_str(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_matroid(path: &Path) -> Result<ArithmeticMatroid, Failure> {
    let text = read(path)?;
    let parsed = if text.trim_start().starts_with('{') {
        ArithmeticMatroid::from_json(&text)
    } else {
        IntMatrix::from_str(&text).and_then(|a| ArithmeticMatroid::from_matrix(&a))
    };
    parsed.map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_poset(path: &Path) -> Result<Poset, Failure> {
    Poset::from_json(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn big(x: &impl ToString) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

fn matrix_json(a: &IntMatrix) -> Value {
    let rows: Vec<Value> = a.to_rows().iter().map(|row| Value::Array(row.iter().map(big).collect())).collect();
    json!({ "rows": a.rows(), "cols": a.cols(), "entries": rows })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(Failure::input("--format dot applies to posets only"))
    } else {
        Ok(())
    }
}

fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    if !matches!(cli.command, Command::PosetLayers { .. } | Command::PosetIndependence { all_reps: false, .. }) {
        no_dot(format)?;
    }
    match &cli.command {
        Command::Validate { input, strict } => validate(&load_matroid(input)?, *strict, format),
        Command::Info { input } => info(&load_matroid(input)?, format),
        Command::Hnf { input, witness } => {
            let h = hnf(&load_matrix(input)?);
            let mut parts = vec![("H", h.h)];
            if *witness {
                parts.push(("U", h.u));
            }
            Ok((matrices(&parts, format), 0))
        }
        Command::Snf { input, witness } => {
            let s = snf(&load_matrix(input)?);
            let mut parts = vec![("D", s.d)];
            if *witness {
                parts.push(("U", s.u));
                parts.push(("V", s.v));
            }
            Ok((matrices(&parts, format), 0))
        }
        Command::Shnf { input, witness } => shnf_command(&load_matrix(input)?, *witness, format),
        Command::Reduce { input } => {
            let r = reduction::reduce(&load_matroid(input)?)?;
            Ok((matroid_output(&r, format), 0))
        }
        Command::Represent { input } => represent(&load_matroid(input)?, format),
        Command::Representations { input } => representations(&load_matroid(input)?, format),
        Command::Orientable { input } => {
            let yes = is_orientable(&load_matroid(input)?)?;
            Ok((flag("orientable", yes, format), 0))
        }
        Command::Decompose { input } => {
            let d = decompose(&load_matrix(input)?)?;
            let blocks: Vec<Vec<usize>> = d.blocks.iter().map(|b| b.elements().collect()).collect();
            let out = match format {
                Format::Json => pretty(&json!({ "blocks": blocks })),
                _ => blocks.iter().map(|b| join(b) + "\n").collect(),
            };
            Ok((out, 0))
        }
        Command::PosetLayers { input } => Ok((poset_output(&layers_poset(&load_matrix(input)?)?, format), 0)),
        Command::PosetIndependence { input, all_reps: false } => {
            Ok((poset_output(&independence_poset(&load_matrix(input)?)?, format), 0))
        }
        Command::PosetIndependence { input, all_reps: true } => independence_experiment(&load_matrix(input)?, format),
        Command::Homology { input, keep_bottom } => {
            let complex = order_complex(&load_poset(input)?, !keep_bottom)?;
            let h = homology(&complex);
            let out = match format {
                Format::Json => pretty(&h.to_json_value()),
                _ => format!("{h}\n"),
            };
            Ok((out, 0))
        }
        Command::Isomorphic { first, second } => {
            let yes = poset_isomorphic(&load_poset(first)?, &load_poset(second)?);
            Ok((flag("isomorphic", yes, format), 0))
        }
    }
}

fn join(items: &[impl ToString]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn flag(name: &str, value: bool, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({ name: value })),
        _ => format!("{value}\n"),
    }
}

/// Named matrices: a single matrix prints bare, several get `# name` headers.
fn matrices(parts: &[(&str, IntMatrix)], format: Format) -> String {
    match format {
        Format::Json => {
            let map: serde_json::Map<String, Value> =
                parts.iter().map(|(name, a)| (name.to_string(), matrix_json(a))).collect();
            pretty(&Value::Object(map))
        }
        _ if parts.len() == 1 => parts[0].1.to_string(),
        _ => parts.iter().map(|(name, a)| format!("# {name}\n{a}")).collect::<Vec<_>>().join("\n"),
    }
}

fn shnf_command(a: &IntMatrix, witness: bool, format: Format) -> Outcome {
    let r = shnf(a);
    if !witness {
        return Ok((matrices(&[("H", r.canonical)], format), 0));
    }
    let signs: Vec<i64> = (0..r.signs.len()).map(|j| r.signs.sign(j)).collect();
    let out = match format {
        Format::Json => pretty(&json!({
            "H": matrix_json(&r.canonical),
            "U": matrix_json(&r.u),
            "S": signs,
        })),
        _ => format!("{}\n# S\n{}\n", matrices(&[("H", r.canonical), ("U", r.u)], format), join(&signs)),
    };
    Ok((out, 0))
}

fn check_line(name: &str, result: &Result<(), AxiomViolation>) -> (String, Value) {
    match result {
        Ok(()) => (format!("{name}: ok\n"), json!({ "ok": true })),
        Err(v) => (format!("{name}: violated: {v}\n"), json!({ "ok": false, "witness": v.to_string() })),
    }
}

fn validate(m: &ArithmeticMatroid, strict: bool, format: Format) -> Outcome {
    let checks = [
        ("rank function", m.check_rank_function()),
        ("A1", m.check_a1()),
        ("A2", m.check_a2()),
        ("P", m.check_p()),
    ];
    let arithmetic = checks.iter().all(|(_, r)| r.is_ok());
    let quasi = checks[..3].iter().all(|(_, r)| r.is_ok());
    let pseudo = checks[0].1.is_ok() && checks[3].1.is_ok();
    let mut text = String::new();
    let mut map = serde_json::Map::new();
    for (name, result) in &checks {
        let (line, value) = check_line(name, result);
        text.push_str(&line);
        map.insert(name.to_lowercase().replace(' ', "_"), value);
    }
    let _ = write!(text, "arithmetic: {arithmetic}\nquasi-arithmetic: {quasi}\npseudo-arithmetic: {pseudo}\n");
    map.insert("arithmetic".into(), json!(arithmetic));
    map.insert("quasi_arithmetic".into(), json!(quasi));
    map.insert("pseudo_arithmetic".into(), json!(pseudo));
    let out = match format {
        Format::Json => pretty(&Value::Object(map)),
        _ => text,
    };
    let code = if strict && !arithmetic { EXIT_AXIOM } else { 0 };
    Ok((out, code))
}

fn info(m: &ArithmeticMatroid, format: Format) -> Outcome {
    let fields: Vec<(&str, Value)> = vec![
        ("elements", json!(m.n())),
        ("rank", json!(m.rank())),
        ("bases", json!(m.bases().len())),
        ("torsion_free", json!(m.is_torsion_free())),
        ("surjective", json!(m.is_surjective())),
        ("m_ground", big(m.m(m.ground()))),
        ("gcd_property", json!(m.gcd_property())),
        ("strong_gcd_property", json!(m.strong_gcd_property())),
        ("arithmetic", json!(m.is_arithmetic())),
        ("representation_bound", big(&representation_bound(m))),
    ];
    let out = match format {
        Format::Json => pretty(&Value::Object(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect())),
        _ => fields.iter().map(|(k, v)| format!("{}: {v}\n", k.replace('_', " "))).collect(),
    };
    Ok((out, 0))
}

fn matroid_output(m: &ArithmeticMatroid, format: Format) -> String {
    match format {
        Format::Json => m.to_json() + "\n",
        _ => {
            let mut out = format!("# subset rank multiplicity, {} elements\n", m.n());
            for x in Subset::all(m.n()) {
                let _ = writeln!(out, "{{{}}} {} {}", x.key(), m.rk(x), m.m(x));
            }
            out
        }
    }
}

fn not_representable() -> Failure {
    Failure { code: EXIT_NOT_REPRESENTABLE, message: "not representable".into() }
}

fn represent(m: &ArithmeticMatroid, format: Format) -> Outcome {
    let found = if m.is_torsion_free() && m.is_surjective() {
        represent_surjective(m)?
    } else {
        all_representations(m)?.reps.into_iter().next()
    };
    let a = found.ok_or_else(not_representable)?;
    Ok((matrices(&[("A", a)], format), 0))
}

fn representations(m: &ArithmeticMatroid, format: Format) -> Outcome {
    let set = all_representations(m)?;
    if set.is_empty() {
        return Err(not_representable());
    }
    let out = match format {
        Format::Json => pretty(&json!({
            "count": set.len(),
            "representations": set.reps.iter().map(matrix_json).collect::<Vec<_>>(),
        })),
        _ => {
            let body: Vec<String> = set.reps.iter().map(ToString::to_string).collect();
            format!("{}\n\n{}", set.len(), body.join("\n"))
        }
    };
    Ok((out, 0))
}

fn poset_output(p: &Poset, format: Format) -> String {
    match format {
        Format::Json => p.to_json() + "\n",
        Format::Dot => p.to_dot(),
        Format::Text => {
            let mut out = format!("{} elements\n", p.len());
            for (i, label) in p.labels().iter().enumerate() {
                let _ = writeln!(out, "{i} {label}");
            }
            let covers = p.covers();
            let _ = writeln!(out, "{} covers", covers.len());
            for (i, j) in covers {
                let _ = writeln!(out, "{i} < {j}");
            }
            out
        }
    }
}

/// For every representation of the matroid of `a`, the independence poset,
/// grouped into isomorphism classes.
fn independence_experiment(a: &IntMatrix, format: Format) -> Outcome {
    let m = ArithmeticMatroid::from_matrix(a)?;
    let reps = all_representations(&m)?.reps;
    let posets: Vec<Poset> = reps.iter().map(independence_poset).collect::<Result<_, _>>()?;
    let mut leaders: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(posets.len());
    for (i, p) in posets.iter().enumerate() {
        match leaders.iter().position(|&l| poset_isomorphic(&posets[l], p)) {
            Some(c) => class_of.push(c),
            None => {
                class_of.push(leaders.len());
                leaders.push(i);
            }
        }
    }
    let out = match format {
        Format::Json => pretty(&json!({
            "representations": reps.len(),
            "classes": leaders.len(),
            "class_of": class_of,
        })),
        _ => format!(
            "representations: {}\nisomorphism classes: {}\nclass of each: {}\n",
            reps.len(),
            leaders.len(),
            join(&class_of)
        ),
    };
    Ok((out, 0))
}
