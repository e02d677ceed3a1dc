use super::*;
use crate::hopf::{iso_search, IsoBudget, IsoStatus};

#[test]
fn unknown_name_is_rejected() {
    assert!(matches!(catalog_get("Zorro"), Err(Error::UnknownCatalogEntry(_))));
}

#[test]
fn sweedler_and_a4pp_dimensions() {
    assert_eq!(catalog_get("T").unwrap().dim(), 4);
    let h = catalog_get("A4pp").unwrap();
    assert_eq!(h.dim(), 8);
    assert_eq!(h.labels(), ["1", "g", "x", "g^2", "gx", "g^3", "g^2x", "g^3x"]);
}

#[test]
fn entries_match_expected_invariants() {
    for name in catalog_list() {
        assert_eq!(verify_entry(name).unwrap(), None);
    }
}

#[test]
fn certified_isomorphisms_verify_on_load() {
    let isos = certified_isomorphisms().unwrap();
    assert_eq!(isos.len(), 5);
    for f in &isos {
        assert!(f.check().is_valid() && f.is_bijective());
    }
}

#[test]
fn builds_are_deterministic() {
    let a = hopf_from_source(include_str!("data/A22.hpf"), 16).unwrap();
    let b = catalog_get("A22").unwrap();
    assert!(a.same_tensors(&b));
}

#[test]
fn dual_names_resolve() {
    let t = catalog_get("T").unwrap();
    let d = catalog_get("T*").unwrap();
    assert!(dual(&d).same_tensors(&t));
}

/// Regenerates data/iso/*.json from seeded searches; run with --ignored.
#[test]
#[ignore]
fn regenerate_certified_isos() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("src/catalog/data/iso");
    std::fs::create_dir_all(&dir).unwrap();
    for (file, a, b) in [
        ("A2_A2dual", "A2", "A2*"),
        ("A4ppp_i_A4ppp_-i", "A4ppp_i", "A4ppp_-i"),
        ("A4ppp_i_A4pdual", "A4ppp_i", "A4p*"),
        ("A22_A22dual", "A22", "A22*"),
        ("T_Tdual", "T", "T*"),
    ] {
        let out = iso_search(&catalog_get(a).unwrap(), &catalog_get(b).unwrap(), IsoBudget::default());
        assert_eq!(out.status, IsoStatus::Found, "{a} vs {b}: {}", out.reason);
        let doc = MorphismDocument::new(a, b, &out.morphism.unwrap().matrix);
        std::fs::write(dir.join(format!("{file}.json")), doc.to_json() + "\n").unwrap();
    }
}

fn show(r: &SuiteReport) {
    for c in &r.checks {
        eprintln!("[{}] {} {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
    }
}

#[test]
fn unique_a_suite_passes() {
    let r = verify_unique_a();
    show(&r);
    assert!(r.passed);
    assert_eq!(r.data["coradical_type"], serde_json::json!([2, 1]));
}

#[test]
fn taft_square_suite_passes() {
    let r = verify_taft_square();
    show(&r);
    assert!(r.passed);
}

#[test]
fn dim8_suite() {
    let r = verify_dim8_remark();
    show(&r);
    for c in r.checks.iter().filter(|c| c.name.contains('≅') || c.name.contains('≇')) {
        assert!(c.passed, "{}", c.name);
    }
    // A2, A4ppp_i and A22 contain ⟨c, y⟩ ≅ T; A4p and A4pp have no group-like of order 2
    // with a nontrivial (1, c)-skew-primitive
    for (name, expected) in [("A2", true), ("A4p", false), ("A4pp", false), ("A4ppp_i", true), ("A22", true)] {
        assert_eq!(r.get(&format!("Sweedler Hopf subalgebra in {name}")).unwrap().passed, expected, "{name}");
    }
}
