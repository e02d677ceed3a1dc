//! Command-line front end. `cli_run` returns the exit code: 0 when every check
//! passes, 1 for a verified mathematical failure, 2 for usage and IO errors.

mod hbx;

pub use hbx::{parse_field, HbxDocument, RawHopf, HBX_VERSION};

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{algebra_verify, simple_modules, StructAlgebra};
use crate::catalog::{catalog_entry, catalog_get, catalog_list, verify_dim8_remark, verify_taft_square, verify_unique_a, SuiteReport};
use crate::cleft::{crossed_product, datum_from_json, datum_to_json, datum_validate, normalize_taft_datum, CleftDatum};
use crate::cyclo::{CycScalar, FieldSpec};
use crate::error::{Error, Result};
use crate::exactla::Vector;
use crate::hopf::{
    check_exact_sequence, coradical_filtration, dual, fingerprint, iso_search, tensor_product, HopfAlgebra, IsoBudget,
    IsoStatus, MorphismDocument,
};
use crate::par;
use crate::present::{hopf_from_source, DEFAULT_DEGREE_CAP};

#[derive(Parser, Debug)]
#[command(name = "hopfkit", version, about = "Exact finite-dimensional Hopf algebras over cyclotomic fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutArg {
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compile a `.hpf` presentation into a verified `.hbx` document.
    Build {
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
        /// Degree cap for the rewriting completion.
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        cap: usize,
    },
    /// Check algebra, bialgebra and antipode axioms of a `.hbx` document.
    Verify { input: PathBuf },
    /// Fingerprint of a `.hbx` document.
    Invariants {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Dual Hopf algebra.
    Dual {
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Tensor product H⊗K.
    Tensor {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Bundled algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Simple modules of the underlying algebra.
    Reps { input: PathBuf },
    /// Coradical filtration and coradical type.
    Coradical { input: PathBuf },
    /// Cleft data over the Sweedler algebra.
    Cleft {
        #[command(subcommand)]
        action: CleftAction,
    },
    /// Search for a Hopf isomorphism.
    Iso {
        left: PathBuf,
        right: PathBuf,
        /// Scalar assignments tried per group isomorphism.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check A ↪ H ↠ B for exactness.
    Exactseq {
        a: PathBuf,
        h: PathBuf,
        b: PathBuf,
        #[arg(long)]
        iota: PathBuf,
        #[arg(long)]
        pi: PathBuf,
    },
    /// Verification suites.
    Suite { name: SuiteName },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Get {
        name: String,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Subcommand, Debug)]
enum CleftAction {
    /// Validate, then emit the crossed product algebra.
    Build {
        datum: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    Validate { datum: PathBuf },
    Normalize { datum: PathBuf },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum SuiteName {
    #[value(name = "unique-A")]
    UniqueA,
    Dim8,
    TaftSquare,
    All,
}

/// Outcome of a subcommand: JSON or text to print and whether every check passed.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn json(v: &impl Serialize, passed: bool) -> Output {
        let v = serde_json::to_value(v).expect("output serializes");
        let mut text = serde_json::to_string_pretty(&v).expect("json prints");
        text.push('\n');
        Output { text, passed }
    }
}

/// Exit code for an error: 1 when the error is a mathematical verdict, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidAlgebra(_)
        | Error::BialgebraAxiom(_)
        | Error::NoAntipode(_)
        | Error::NotSplit { .. }
        | Error::NotGrouplike
        | Error::InvalidMorphism(_)
        | Error::AntipodeOrderUnbounded(_)
        | Error::NotConfluent(_)
        | Error::InfiniteBasis { .. }
        | Error::InvalidDatum(_)
        | Error::NotUnit(_)
        | Error::SqrtMissing { .. }
        | Error::ExactnessPrecondition(_)
        | Error::NonCanonical(_)
        | Error::CrossedProductAssociativity(_) => 1,
        _ => 2,
    }
}

/// Runs the command line `argv` (program name first), writing results to `out`
/// and diagnostics to `err`.
pub fn cli_run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(o) => {
            if out.write_all(o.text.as_bytes()).is_err() {
                return 2;
            }
            if o.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Document(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| io_err(path, e))
}

/// The HOPFKIT_FIELD override, if set.
fn field_override() -> Result<Option<FieldSpec>> {
    match std::env::var_os("HOPFKIT_FIELD") {
        Some(_) => FieldSpec::from_env().map(Some),
        None => Ok(None),
    }
}

fn load_doc(path: &Path) -> Result<HbxDocument> {
    HbxDocument::parse(&read(path)?).map_err(|e| Error::Document(format!("{}: {e}", path.display())))
}

fn load_hopf(path: &Path) -> Result<HopfAlgebra> {
    load_doc(path)?.to_hopf(field_override()?)
}

/// Lifts to the override field, refusing algebras that need a larger one.
fn apply_override(h: HopfAlgebra) -> Result<HopfAlgebra> {
    match field_override()? {
        Some(f) if f.conductor() < h.field().conductor() => Err(Error::FieldMismatch(h.field().conductor(), f.conductor())),
        Some(f) => Ok(h.lift(f)),
        None => Ok(h),
    }
}

fn emit_hopf(h: &HopfAlgebra, note: Option<String>, out: &OutArg) -> Result<Output> {
    let text = HbxDocument::from_hopf(h, note).to_json();
    match &out.output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| io_err(path, e))?;
            Ok(Output { text: String::new(), passed: true })
        }
        None => Ok(Output { text, passed: true }),
    }
}

fn text_vec(v: &[CycScalar]) -> Vec<Vec<String>> {
    v.iter().map(CycScalar::to_text).collect()
}

fn dispatch(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Build { input, out, cap } => {
            let h = apply_override(hopf_from_source(&read(&input)?, cap)?)?;
            let note = input.file_name().map(|n| format!("built from {}", n.to_string_lossy()));
            emit_hopf(&h, note, &out)
        }
        Command::Verify { input } => verify(&input),
        Command::Invariants { input, json } => {
            let h = load_hopf(&input)?;
            let fp = fingerprint(&h)?;
            if json {
                return Ok(Output::json(&fp, true));
            }
            let mut text = String::new();
            let v = serde_json::to_value(&fp).expect("fingerprint serializes");
            for (k, val) in v.as_object().expect("object") {
                if k != "group" && k != "bd_bound_report" {
                    text.push_str(&format!("{k}: {val}\n"));
                }
            }
            Ok(Output { text, passed: true })
        }
        Command::Dual { input, out } => {
            let h = load_hopf(&input)?;
            emit_hopf(&dual(&h), Some(format!("dual of {}", input.display())), &out)
        }
        Command::Tensor { left, right, out } => {
            let (h, k) = (load_hopf(&left)?, load_hopf(&right)?);
            let field = h.field().join(k.field());
            let t = tensor_product(&h.lift(field), &k.lift(field))?;
            emit_hopf(&t, Some(format!("{} ⊗ {}", left.display(), right.display())), &out)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let list: Vec<Value> = catalog_list()
                    .into_iter()
                    .map(|n| {
                        let e = catalog_entry(n).expect("listed entry");
                        json!({ "name": n, "dim": e.expected.dim, "note": e.note })
                    })
                    .collect();
                Ok(Output::json(&list, true))
            }
            CatalogAction::Get { name, out } => {
                let h = apply_override((*catalog_get(&name)?).clone())?;
                emit_hopf(&h, Some(format!("catalog entry {name}")), &out)
            }
        },
        Command::Reps { input } => {
            let h = load_hopf(&input)?;
            let reps = simple_modules(h.alg())?;
            let modules: Vec<Value> = reps
                .iter()
                .map(|r| {
                    let mats: Vec<Value> = r
                        .matrices
                        .iter()
                        .zip(h.labels())
                        .map(|(m, l)| json!({ "basis": l, "matrix": m.row_vectors().iter().map(|row| text_vec(row)).collect::<Vec<_>>() }))
                        .collect();
                    json!({ "dim": r.dim, "action": mats })
                })
                .collect();
            let dims: Vec<usize> = reps.iter().map(|r| r.dim).collect();
            Ok(Output::json(&json!({ "dims": dims, "modules": modules }), true))
        }
        Command::Coradical { input } => {
            let h = load_hopf(&input)?;
            let c = coradical_filtration(&h)?;
            let dims: Vec<usize> = c.filtration.iter().map(|s| s.dim()).collect();
            let v = json!({
                "filtration_dims": dims,
                "block_sizes": c.block_sizes,
                "coradical_type": c.type_vector(),
                "coradical_dim": c.coradical().dim(),
            });
            Ok(Output::json(&v, true))
        }
        Command::Cleft { action } => cleft(action),
        Command::Iso { left, right, budget, seed } => {
            let (h, k) = (load_hopf(&left)?, load_hopf(&right)?);
            let mut b = IsoBudget::default();
            if let Some(n) = budget {
                b.max_candidates = n;
            }
            if let Some(s) = seed {
                b.seed = s;
            }
            let outcome = iso_search(&h, &k, b);
            let morphism = outcome.morphism.as_ref().map(|f| {
                let doc = MorphismDocument::new(&left.display().to_string(), &right.display().to_string(), &f.matrix);
                serde_json::to_value(&doc).expect("morphism serializes")
            });
            let v = json!({
                "status": outcome.status,
                "reason": outcome.reason,
                "attempts": outcome.attempts,
                "morphism": morphism,
            });
            Ok(Output::json(&v, outcome.status == IsoStatus::Found))
        }
        Command::Exactseq { a, h, b, iota, pi } => {
            let (ha, hh, hb) = (load_hopf(&a)?, load_hopf(&h)?, load_hopf(&b)?);
            let field = ha.field().join(hh.field()).join(hb.field());
            let (ha, hh, hb) = (Arc::new(ha.lift(field)), Arc::new(hh.lift(field)), Arc::new(hb.lift(field)));
            let iota = MorphismDocument::parse(&read(&iota)?)?.load(ha, hh.clone())?;
            let pi = MorphismDocument::parse(&read(&pi)?)?.load(hh, hb)?;
            let report = check_exact_sequence(&iota, &pi);
            let passed = report.all_pass();
            Ok(Output::json(&report, passed))
        }
        Command::Suite { name } => Ok(suite(name)),
    }
}

fn verify(input: &Path) -> Result<Output> {
    let raw = load_doc(input)?.raw(field_override()?)?;
    let alg_report = algebra_verify(&raw.alg);
    if !alg_report.violations.is_empty() {
        let v = json!({ "valid": false, "stage": "algebra", "violations": alg_report.violations });
        return Ok(Output::json(&v, false));
    }
    let dim = raw.alg.dim();
    match raw.verify() {
        Ok(h) => Ok(Output::json(&json!({ "valid": true, "dim": dim, "field": h.field().to_string() }), true)),
        Err(e) if exit_code(&e) == 1 => Ok(Output::json(&json!({ "valid": false, "stage": "hopf", "error": e.to_string() }), false)),
        Err(e) => Err(e),
    }
}

/// Datum base: "T", a catalog name, or a `.hbx` path relative to the datum file.
fn load_datum(path: &Path) -> Result<(CleftDatum, String)> {
    let text = read(path)?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let resolve = |base: &str| -> Result<(StructAlgebra, Option<Vector>)> {
        let h = if base.ends_with(".hbx") { load_hopf(&dir.join(base))? } else { (*catalog_get(base)?).clone() };
        Ok((h.alg().clone(), Some(h.counit().clone())))
    };
    let dt = datum_from_json(&text, resolve)?;
    let base: Value = serde_json::from_str(&text).map_err(|e| Error::Document(e.to_string()))?;
    Ok((dt, base["base"].as_str().unwrap_or("T").to_string()))
}

fn datum_value(dt: &CleftDatum, base: &str) -> Value {
    serde_json::from_str(&datum_to_json(dt, base)).expect("datum json parses")
}

fn cleft(action: CleftAction) -> Result<Output> {
    match action {
        CleftAction::Validate { datum } => {
            let (dt, _) = load_datum(&datum)?;
            let r = datum_validate(&dt);
            Ok(Output::json(&json!({ "valid": r.is_valid(), "violations": r.violations }), r.is_valid()))
        }
        CleftAction::Build { datum, out } => {
            let (dt, base) = load_datum(&datum)?;
            let c = crossed_product(&dt)?;
            let n = dt.dim();
            let base_labels: Vec<String> =
                if base == "T" { ["1", "g", "x", "gx"].map(String::from).to_vec() } else { (0..n).map(|i| format!("e{i}")).collect() };
            let labels: Vec<String> =
                base_labels.iter().flat_map(|a| base_labels.iter().map(move |b| format!("{a}#{b}"))).collect();
            let mult: Vec<Value> = c.entries().map(|(i, j, k, s)| json!([i, j, k, s.to_text()])).collect();
            let v = json!({
                "dim": c.dim(),
                "field": c.field().to_string(),
                "labels": labels,
                "unit": text_vec(c.unit()),
                "mult": mult,
            });
            let mut text = serde_json::to_string_pretty(&v).expect("json prints");
            text.push('\n');
            match out.output {
                Some(p) => {
                    std::fs::write(&p, &text).map_err(|e| io_err(&p, e))?;
                    Ok(Output { text: String::new(), passed: true })
                }
                None => Ok(Output { text, passed: true }),
            }
        }
        CleftAction::Normalize { datum } => {
            let (dt, base) = load_datum(&datum)?;
            let n = normalize_taft_datum(&dt)?;
            let steps: Vec<Value> = n
                .transcript
                .iter()
                .map(|s| json!({ "name": s.name, "s": text_vec(&s.transform.s), "t": text_vec(&s.transform.t), "flags": s.flags }))
                .collect();
            let canonical = n.transcript.last().map(|s| &s.after).unwrap_or(&dt);
            let v = json!({ "canonical": n.canonical, "steps": steps, "datum": datum_value(canonical, &base) });
            Ok(Output::json(&v, true))
        }
    }
}

fn suite(name: SuiteName) -> Output {
    let runners: Vec<fn() -> SuiteReport> = match name {
        SuiteName::UniqueA => vec![verify_unique_a],
        SuiteName::Dim8 => vec![verify_dim8_remark],
        SuiteName::TaftSquare => vec![verify_taft_square],
        SuiteName::All => vec![verify_unique_a, verify_dim8_remark, verify_taft_square],
    };
    let reports = par::map_slice(&runners, |f| f());
    let passed = reports.iter().all(|r| r.passed);
    if reports.len() == 1 {
        Output::json(&reports[0], passed)
    } else {
        Output::json(&json!({ "passed": passed, "suites": reports }), passed)
    }
}
