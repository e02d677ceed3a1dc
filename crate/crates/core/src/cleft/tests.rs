use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::algebra_verify;
use crate::error::Error;
use crate::exactla::{is_zero_vector, unit_vector};

fn s(n: i64) -> CycScalar {
    CycScalar::from_int(taft().field(), n)
}

fn e(i: usize) -> Vector {
    taft().basis_vector(i)
}

fn random_flagged(rng: &mut ChaCha8Rng) -> DatumTransform {
    random_flagged_transform(rng)
}

fn perturbed(base: &CleftDatum, seed: u64) -> CleftDatum {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau = random_flagged(&mut rng);
    datum_transform(base, &tau).unwrap().datum
}

#[test]
fn canonical_data_validate() {
    assert!(datum_validate(&CleftDatum::trivial()).is_valid());
    assert!(datum_validate(&CleftDatum::twisted()).is_valid());
}

#[test]
fn alpha_g_breaks_d3_at_x() {
    let mut dt = CleftDatum::trivial();
    dt.alpha = e(G);
    let report = datum_validate(&dt);
    let d3: Vec<_> = report.violations.iter().filter(|v| v.axiom == "D3").collect();
    assert!(d3.iter().any(|v| v.witness == vec![X]));
}

#[test]
fn orientation_experiment() {
    // γ ≠ 0 after (s, t) = (1, x) on the trivial datum
    let dt = datum_transform(&CleftDatum::trivial(), &DatumTransform { s: e(ONE), t: e(X) }).unwrap().datum;
    assert!(!is_zero_vector(&dt.gamma));
    let assoc = |o| algebra_verify(&crossed_product_unchecked(&dt, o).unwrap()).is_valid();
    assert!(assoc(Orientation::Printed));
    assert!(!assoc(Orientation::SwapXG));
    assert!(!assoc(Orientation::Transposed));
}

#[test]
fn worked_products() {
    let dt = perturbed(&CleftDatum::twisted(), 7);
    assert!(!is_zero_vector(&dt.gamma));
    let c = crossed_product(&dt).unwrap();
    let at = |v: &[CycScalar], b: usize| {
        let mut out = crate::exactla::zero_vector(c.field(), 16);
        for (k, x) in v.iter().enumerate() {
            out[k * 4 + b] = x.clone();
        }
        out
    };
    let one = e(ONE);
    let g1 = at(&one, G);
    let x1 = at(&one, X);
    assert_eq!(c.mul(&g1, &g1), at(&dt.alpha, ONE));
    // γ appears when x is on the left: (1#x)(1#g) = γ#1 − 1#gx
    let mut expect = at(&dt.gamma, ONE);
    expect[GX] = &expect[GX] - &s(1);
    assert_eq!(c.mul(&x1, &g1), expect);
    assert_eq!(c.mul(&g1, &x1), at(&one, GX));
    // β sits alone in (1#x)² once D(1) = 0
    assert_eq!(c.mul(&x1, &x1), at(&dt.beta, ONE));
}

#[test]
fn identity_transform_is_identity() {
    let dt = CleftDatum::twisted();
    let out = datum_transform(&dt, &DatumTransform::identity(&dt.base)).unwrap();
    assert_eq!(out.datum, dt);
    assert!(out.flags.unwrap().all());
}

#[test]
fn conjugating_by_g() {
    let tau = DatumTransform { s: e(G), t: taft_element(0, 0, 0, 0) };
    let out = datum_transform(&CleftDatum::trivial(), &tau).unwrap().datum;
    assert_eq!(out.alpha, e(ONE));
    assert_eq!(out.apply_f(&e(X)), taft_element(0, 0, -1, 0));
    assert_eq!(out.apply_f(&e(G)), e(G));
    let out = datum_transform(&CleftDatum::twisted(), &tau).unwrap().datum;
    assert_eq!(out.apply_f(&e(X)), taft_element(0, 0, 0, -1));
}

#[test]
fn non_unit_s_is_rejected() {
    let tau = DatumTransform { s: taft_element(1, 1, 0, 0), t: taft_element(0, 0, 0, 0) };
    assert!(matches!(datum_transform(&CleftDatum::trivial(), &tau), Err(Error::NotUnit(_))));
}

#[test]
fn phi_map_is_an_algebra_isomorphism() {
    let base = CleftDatum::twisted();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..4 {
        let tau = random_flagged(&mut rng);
        let out = datum_transform(&base, &tau).unwrap();
        let src = crossed_product(&out.datum).unwrap();
        let tgt = crossed_product(&base).unwrap();
        let m = crossed_product_map(&base.base, &out.phi).unwrap();
        assert!(m.inverse().is_some());
        assert!(is_algebra_map(&src, &tgt, &m));
    }
}

#[test]
fn normalize_fixes_canonical_data() {
    for c in [Canonical::Trivial, Canonical::Twisted] {
        let n = normalize_taft_datum(&c.datum()).unwrap();
        assert_eq!(n.canonical, c);
        assert_eq!(n.transcript.len(), 5);
        assert!(n.transcript.iter().all(|s| s.flags.all()));
        assert_eq!(n.transcript.last().unwrap().after, c.datum());
    }
}

#[test]
fn normalize_round_trips() {
    for c in [Canonical::Trivial, Canonical::Twisted] {
        for seed in 0..6 {
            let dt = perturbed(&c.datum(), seed);
            let n = normalize_taft_datum(&dt).unwrap();
            assert_eq!(n.canonical, c, "seed {seed}");
            let mut cur = dt.clone();
            for tau in n.transforms() {
                cur = datum_transform(&cur, &tau).unwrap().datum;
            }
            assert_eq!(cur, c.datum());
        }
    }
}

#[test]
fn normalize_rejects_non_exact_input() {
    let mut dt = CleftDatum::trivial();
    dt.alpha = taft_element(2, 0, 0, 0);
    assert!(matches!(normalize_taft_datum(&dt), Err(Error::ExactnessPrecondition(_))));
}

#[test]
fn radical_bound_on_canonical_data() {
    let r = radical_bound_check(&CleftDatum::twisted()).unwrap();
    assert_eq!(r.quotient_dim, 4);
    assert_eq!(r.radical_dim, 12);
    assert_eq!(r.trivial_action_cocycle, Some(true));
    assert!(r.holds());
    let r = radical_bound_check(&CleftDatum::trivial()).unwrap();
    assert_eq!(r.tensor_iso, Some(true));
    assert_eq!(r.quotient_dim, 4);
    assert!(r.holds());
}

#[test]
fn radical_bound_rejects_other_data() {
    let mut dt = CleftDatum::trivial();
    dt.alpha = e(G);
    assert!(matches!(radical_bound_check(&dt), Err(Error::NonCanonical(_))));
}

#[test]
fn datum_json_round_trip() {
    let dt = perturbed(&CleftDatum::twisted(), 11);
    let text = datum_to_json(&dt, "T");
    let back = datum_from_json(&text, |b| Err(Error::Document(b.into()))).unwrap();
    assert_eq!(back, dt);
    assert!(text.find("\"D\"").unwrap() < text.find("\"F\"").unwrap());
}

#[test]
fn inverse_of_unit() {
    let a = taft().alg();
    let v = taft_element(2, 1, 1, 0);
    let w = inverse_element(a, &v).unwrap();
    assert_eq!(a.mul(&v, &w), unit_vector(a.field(), 4, ONE));
    assert!(inverse_element(a, &taft_element(1, 1, 0, 0)).is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn transforms_compose(seed in any::<u64>(), twisted in any::<bool>()) {
        let base = if twisted { CleftDatum::twisted() } else { CleftDatum::trivial() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t1 = random_flagged(&mut rng);
        let t2 = random_flagged(&mut rng);
        let stepwise = datum_transform(&datum_transform(&base, &t1).unwrap().datum, &t2).unwrap().datum;
        let once = datum_transform(&base, &compose(&base.base, &t1, &t2)).unwrap().datum;
        prop_assert_eq!(stepwise, once);
    }

    #[test]
    fn valid_data_give_associative_products(seed in any::<u64>(), twisted in any::<bool>()) {
        let base = if twisted { CleftDatum::twisted() } else { CleftDatum::trivial() };
        let dt = perturbed(&base, seed);
        prop_assert!(datum_validate(&dt).is_valid());
        prop_assert!(crossed_product(&dt).is_ok());
    }

    #[test]
    fn normalize_is_idempotent(seed in any::<u64>(), twisted in any::<bool>()) {
        let base = if twisted { CleftDatum::twisted() } else { CleftDatum::trivial() };
        let n = normalize_taft_datum(&perturbed(&base, seed)).unwrap();
        let again = normalize_taft_datum(&n.canonical.datum()).unwrap();
        prop_assert_eq!(again.canonical, n.canonical);
    }
}

