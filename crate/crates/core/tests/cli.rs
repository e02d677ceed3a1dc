use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

use hopfkit::cleft::{datum_to_json, datum_transform, Canonical, DatumTransform};
use hopfkit::cli::HbxDocument;
use hopfkit::cyclo::CycScalar;
use hopfkit::exactla::Mat;
use hopfkit::hopf::{ground, MorphismDocument};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hopfkit"));
    cmd.args(args).env_remove("HOPFKIT_FIELD");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let o = cmd.output().expect("binary runs");
    Run {
        code: o.status.code().unwrap_or(-1),
        out: String::from_utf8(o.stdout).unwrap(),
        err: String::from_utf8(o.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_env(args, &[])
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("src/catalog/data").join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).expect("json output")
}

#[test]
fn built_documents_verify() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["T", "A4pp", "A22", "kC2xC2"] {
        let out = dir.path().join(format!("{name}.hbx"));
        let r = run(&["build", s(&data(&format!("{name}.hpf"))), "-o", s(&out)]);
        assert_eq!(r.code, 0, "{}", r.err);
        let v = run(&["verify", s(&out)]);
        assert_eq!(v.code, 0, "{}", v.out);
        assert_eq!(json(&v.out)["valid"], true);
    }
}

#[test]
fn invariants_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("T.hbx");
    assert_eq!(run(&["build", s(&data("T.hpf")), "-o", s(&t)]).code, 0);
    let a = run(&["invariants", s(&t), "--json"]);
    let b = run(&["invariants", s(&t), "--json"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    assert_eq!(json(&a.out)["antipode_order"], 4);
    let text = run(&["invariants", s(&t)]);
    assert!(text.out.contains("antipode_order: 4"));
}

#[test]
fn perturbed_tensor_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("T.hbx");
    assert_eq!(run(&["build", s(&data("T.hpf")), "-o", s(&t)]).code, 0);
    let mut doc: Value = json(&std::fs::read_to_string(&t).unwrap());
    // x·x = 1 instead of 0
    doc["mult"].as_array_mut().unwrap().push(serde_json::json!([2, 2, 0, ["1/1", "0/1", "0/1", "0/1"]]));
    let broken = dir.path().join("broken.hbx");
    std::fs::write(&broken, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    let r = run(&["verify", s(&broken)]);
    assert_eq!(r.code, 1);
    let v = json(&r.out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["stage"], "algebra");
    assert!(v["violations"][0]["axiom"].as_str().unwrap().contains("assoc"), "{}", r.out);
    assert_eq!(v["violations"][0]["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn catalog_dual_tensor_and_iso() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("T.hbx");
    let td = dir.path().join("Td.hbx");
    let tt = dir.path().join("TT.hbx");
    assert_eq!(run(&["catalog", "get", "T", "-o", s(&t)]).code, 0);
    assert_eq!(run(&["dual", s(&t), "-o", s(&td)]).code, 0);
    let iso = run(&["iso", s(&t), s(&td)]);
    assert_eq!(iso.code, 0, "{}", iso.out);
    assert_eq!(json(&iso.out)["status"], "found");
    assert_eq!(run(&["tensor", s(&t), s(&t), "-o", s(&tt)]).code, 0);
    let inv = json(&run(&["invariants", s(&tt), "--json"]).out);
    assert_eq!(inv["dim"], 16);
    assert_eq!(inv["pointed"], true);
    let c4 = dir.path().join("C4.hbx");
    assert_eq!(run(&["catalog", "get", "kC4", "-o", s(&c4)]).code, 0);
    let refuted = run(&["iso", s(&t), s(&c4), "--budget", "16"]);
    assert_eq!(refuted.code, 1);
    assert_eq!(json(&refuted.out)["status"], "refuted");
}

#[test]
fn coradical_and_reps() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("A.hbx");
    let a4pp = dir.path().join("A4pp.hbx");
    assert_eq!(run(&["catalog", "get", "A", "-o", s(&a)]).code, 0);
    assert_eq!(run(&["catalog", "get", "A4pp", "-o", s(&a4pp)]).code, 0);
    let c = json(&run(&["coradical", s(&a)]).out);
    assert_eq!(c["coradical_type"], serde_json::json!([2, 1]));
    assert_eq!(c["coradical_dim"], 6);
    let r = json(&run(&["reps", s(&a4pp)]).out);
    let mut dims: Vec<u64> = r["dims"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect();
    dims.sort();
    assert_eq!(dims, [1, 1, 2]);
}

#[test]
fn cleft_commands() {
    let dir = tempfile::tempdir().unwrap();
    let canonical = Canonical::Twisted.datum();
    let f = canonical.base.field();
    let one = CycScalar::one(f);
    let z = CycScalar::zero(f);
    let tau = DatumTransform {
        s: vec![CycScalar::from_ratio(f, 1, 3), CycScalar::from_ratio(f, 2, 3), one.clone(), z.clone()],
        t: vec![one.clone(), -&one, z.clone(), CycScalar::from_int(f, 2)],
    };
    let perturbed = datum_transform(&canonical, &tau).unwrap().datum;
    let path = dir.path().join("datum.json");
    std::fs::write(&path, datum_to_json(&perturbed, "T")).unwrap();
    assert_eq!(run(&["cleft", "validate", s(&path)]).code, 0);
    let n = run(&["cleft", "normalize", s(&path)]);
    assert_eq!(n.code, 0, "{}", n.err);
    let v = json(&n.out);
    assert_eq!(v["canonical"], "twisted");
    assert_eq!(v["steps"].as_array().unwrap().len(), 5);
    assert_eq!(v["datum"], json(&datum_to_json(&canonical, "T")));
    let b = json(&run(&["cleft", "build", s(&path)]).out);
    assert_eq!(b["dim"], 16);

    // α = 0 is not a unit
    let mut doc = json(&datum_to_json(&canonical, "T"));
    doc["alpha"] = serde_json::json!(vec![vec!["0/1"; 4]; 4]);
    std::fs::write(&path, doc.to_string()).unwrap();
    let bad = run(&["cleft", "validate", s(&path)]);
    assert_eq!(bad.code, 1);
    assert_eq!(json(&bad.out)["valid"], false);
}

#[test]
fn exact_sequences() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("T.hbx");
    let k = dir.path().join("k.hbx");
    assert_eq!(run(&["catalog", "get", "T", "-o", s(&t)]).code, 0);
    let kh = ground(Default::default());
    std::fs::write(&k, HbxDocument::from_hopf(&kh, None).to_json()).unwrap();
    let f = kh.field();
    let unit = Mat::from_rows(f, 1, (0..4).map(|i| vec![CycScalar::from_int(f, (i == 0) as i64)]).collect()).unwrap();
    let counit = Mat::from_rows(f, 4, vec![(0..4).map(|i| CycScalar::from_int(f, (i < 2) as i64)).collect()]).unwrap();
    let write = |name: &str, doc: MorphismDocument| {
        let p = dir.path().join(name);
        std::fs::write(&p, doc.to_json()).unwrap();
        p
    };
    let iota = write("iota.json", MorphismDocument::new("k", "T", &unit));
    let id = write("id.json", MorphismDocument::new("T", "T", &Mat::identity(f, 4)));
    let eps = write("eps.json", MorphismDocument::new("T", "k", &counit));
    let ok = run(&["exactseq", s(&k), s(&t), s(&t), "--iota", s(&iota), "--pi", s(&id)]);
    assert_eq!(ok.code, 0, "{}{}", ok.out, ok.err);
    let bad = run(&["exactseq", s(&k), s(&t), s(&k), "--iota", s(&iota), "--pi", s(&eps)]);
    assert_eq!(bad.code, 1, "{}{}", bad.out, bad.err);
    assert_eq!(json(&bad.out)["coinvariants_match"], false);
}

#[test]
fn suite_unique_a() {
    let r = run(&["suite", "unique-A"]);
    assert_eq!(r.code, 0, "{}", r.out);
    let v = json(&r.out);
    assert_eq!(v["data"]["coradical_type"], serde_json::json!([2, 1]));
}

#[test]
fn field_override() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("T.hbx");
    let r = run_env(&["catalog", "get", "T", "-o", s(&t)], &[("HOPFKIT_FIELD", "16")]);
    assert_eq!(r.code, 0);
    assert_eq!(json(&std::fs::read_to_string(&t).unwrap())["field"], "cyclotomic(16)");
    let refused = run_env(&["verify", s(&t)], &[("HOPFKIT_FIELD", "8")]);
    assert_eq!(refused.code, 2);
    assert!(refused.err.contains("field mismatch"));
    assert_eq!(run_env(&["verify", s(&t)], &[("HOPFKIT_FIELD", "6")]).code, 2);
    assert_eq!(run_env(&["verify", s(&t)], &[("HOPFKIT_FIELD", "32")]).code, 0);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["suite", "nope"]).code, 2);
    let r = run(&["catalog", "get", "Zorro"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("unknown catalog entry"));
}
