use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use super::catalog_get;
use crate::algebra::{characters, simple_modules, Representation};
use crate::cleft::{
    datum_transform, datum_validate, normalize_taft_datum, radical_bound_check, random_flagged_transform, Canonical,
};
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::exactla::{scale_vector, sub_vectors, zero_vector, Mat, Subspace, Vector};
use crate::hopf::{
    check_exact_sequence, fingerprint, generated_subalgebra, grouplikes, iso_search, skew_primitives, HopfAlgebra,
    HopfMorphism, IsoBudget, IsoStatus,
};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub data: BTreeMap<String, Value>,
}

impl SuiteReport {
    fn new(suite: &str) -> SuiteReport {
        SuiteReport { suite: suite.into(), passed: true, checks: Vec::new(), data: BTreeMap::new() }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.passed &= passed;
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
        passed
    }

    /// Records a failed check for an error that stopped a sub-computation.
    fn fail(&mut self, name: impl Into<String>, err: &Error) {
        self.check(name, false, err.to_string());
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn label_index(h: &HopfAlgebra, label: &str) -> Result<usize> {
    h.labels().iter().position(|l| l == label).ok_or_else(|| Error::Internal(format!("no basis element labelled {label}")))
}

fn mat2(field: crate::cyclo::FieldSpec, a: [[CycScalar; 2]; 2]) -> Mat {
    let [[p, q], [r, s]] = a;
    Mat::from_rows(field, 2, vec![vec![p, q], vec![r, s]]).expect("2×2")
}

/// The comatrix basis e_ij = E_ij∘ρ of the 4-dimensional simple subcoalgebra of A = (A4pp)*.
#[derive(Clone, Debug)]
pub struct ComatrixData {
    pub a: Arc<HopfAlgebra>,
    /// Simple A4pp-module conjugated so that ρ(g) = diag(i, −i), ρ(x) = [[0, 2], [−1, 0]].
    pub rho: Representation,
    pub e: [[Vector; 2]; 2],
    /// The character g ↦ −1, x ↦ 0, as an element of A.
    pub alpha: Vector,
    /// ρ(g)₁₁.
    pub xi: CycScalar,
}

/// ρ(g) = diag(i, −i), ρ(x) = [[0, 2], [−1, 0]].
fn reference_rep(field: crate::cyclo::FieldSpec) -> Result<(Mat, Mat)> {
    let i = CycScalar::imag_unit(field)?;
    let z = CycScalar::zero(field);
    let n = |k| CycScalar::from_int(field, k);
    Ok((mat2(field, [[i.clone(), z.clone()], [z.clone(), -&i]]), mat2(field, [[z.clone(), n(2)], [n(-1), z]])))
}

/// Invertible P with P·src(b) = dst(b)·P for each pair, if the two are equivalent.
fn intertwiner(pairs: &[(Mat, Mat)]) -> Option<Mat> {
    let field = pairs.first()?.0.field();
    let mut rows = Vec::new();
    for (src, dst) in pairs {
        for i in 0..2 {
            for j in 0..2 {
                // (P src)[i][j] − (dst P)[i][j], P at index 2a + b
                let mut row = zero_vector(field, 4);
                for a in 0..2 {
                    row[2 * i + a] += src.get(a, j);
                    row[2 * a + j] -= dst.get(i, a);
                }
                rows.push(row);
            }
        }
    }
    let ker = Mat::from_rows(field, 4, rows).ok()?.kernel();
    ker.basis().iter().find_map(|v| {
        let p = Mat::from_rows(field, 2, vec![v[0..2].to_vec(), v[2..4].to_vec()]).ok()?;
        p.inverse().is_some().then_some(p)
    })
}

pub fn unique_a_comatrix() -> Result<ComatrixData> {
    let a4pp = catalog_get("A4pp")?;
    let a = catalog_get("A")?;
    let field = a4pp.field();
    let gi = label_index(&a4pp, "g")?;
    let xi_idx = label_index(&a4pp, "x")?;
    let reps = simple_modules(a4pp.alg())?;
    let rho = reps.into_iter().find(|r| r.dim == 2).ok_or_else(|| Error::Internal("no 2-dimensional simple module".into()))?;
    let (rg, rx) = reference_rep(field)?;
    let p = intertwiner(&[(rho.matrices[gi].clone(), rg), (rho.matrices[xi_idx].clone(), rx)])
        .ok_or_else(|| Error::Internal("2-dimensional simple module is not equivalent to the reference".into()))?;
    let pinv = p.inverse().expect("invertible");
    let matrices = rho.matrices.iter().map(|m| p.mul(m).and_then(|x| x.mul(&pinv))).collect::<Result<Vec<_>>>()?;
    let rho = Representation { dim: 2, matrices };
    let e = [0, 1].map(|i| [0, 1].map(|j| rho.matrices.iter().map(|m| m.get(i, j).clone()).collect::<Vector>()));
    let chars = characters(a4pp.alg())?;
    let alpha = chars
        .list
        .iter()
        .find(|chi| chi[gi] == CycScalar::from_int(field, -1))
        .cloned()
        .ok_or_else(|| Error::Internal("no character with g ↦ −1".into()))?;
    let xi = rho.matrices[gi].get(0, 0).clone();
    Ok(ComatrixData { a, rho, e, alpha, xi })
}

fn unique_a_representations(r: &mut SuiteReport) -> Result<()> {
    let h = catalog_get("A4pp")?;
    let field = h.field();
    let gi = label_index(&h, "g")?;
    let xi = label_index(&h, "x")?;
    let chars = characters(h.alg())?;
    let one = CycScalar::one(field);
    let values: Vec<String> = chars.list.iter().map(|c| format!("g ↦ {}, x ↦ {}", c[gi], c[xi])).collect();
    let has_eps = chars.list.iter().any(|c| c[gi] == one && c[xi].is_zero());
    let has_alpha = chars.list.iter().any(|c| c[gi] == -&one && c[xi].is_zero());
    r.check("representations: two characters ε and α", chars.list.len() == 2 && has_eps && has_alpha, values.join("; "));
    let reps = simple_modules(h.alg())?;
    let dims: Vec<usize> = reps.iter().map(|m| m.dim).collect();
    r.check(
        "representations: one 2-dimensional simple module",
        dims.iter().filter(|&&d| d == 2).count() == 1 && dims.iter().filter(|&&d| d == 1).count() == 2,
        format!("simple module dimensions {dims:?}"),
    );
    let (rg, rx) = reference_rep(field)?;
    let id = Mat::identity(field, 2);
    let g2 = rg.mul(&rg)?;
    let relations = g2.mul(&g2)? == id
        && rx.mul(&rx)?.add(&g2.scale(&-&one))?.add(&id)?.is_zero()
        && rg.mul(&rx)?.add(&rx.mul(&rg)?)?.is_zero();
    r.check("representations: reference ρ satisfies the relations", relations, "g⁴ = 1, x² = g² − 1, gx = −xg");
    let data = unique_a_comatrix()?;
    let traces_match = reps
        .iter()
        .find(|m| m.dim == 2)
        .map(|m| (0..h.dim()).all(|k| m.matrices[k].trace() == data.rho.matrices[k].trace()))
        .unwrap_or(false);
    let on_gens = data.rho.matrices[gi] == rg && data.rho.matrices[xi] == rx;
    r.check(
        "representations: simple module equivalent to reference ρ",
        traces_match && on_gens && data.rho.is_homomorphism(h.alg()),
        "intertwiner found; traces agree on every basis element",
    );
    Ok(())
}

fn unique_a_comatrix_relations(r: &mut SuiteReport) -> Result<ComatrixData> {
    let d = unique_a_comatrix()?;
    let a = &d.a;
    let field = a.field();
    let e = &d.e;
    let s = |v: &Vector| a.apply_antipode(v);
    let m = |u: &Vector, v: &Vector| a.mul(u, v);
    let c = |k: &CycScalar, v: &Vector| scale_vector(k, v);
    let xi = &d.xi;
    let neg_xi = -xi;
    let eps = a.unit().clone();
    let zero = zero_vector(field, a.dim());
    let (e11, e12, e21, e22) = (&e[0][0], &e[0][1], &e[1][0], &e[1][1]);
    r.check("xi is a primitive 4th root of unity", (xi * xi) == CycScalar::from_int(field, -1), format!("ξ = {xi}"));
    let le1 = s(e11) == *e22 && s(e22) == *e11 && s(e12) == c(&neg_xi, e12) && s(e21) == c(xi, e21);
    r.check("le1: antipode on the comatrix basis", le1, "S(e11) = e22, S(e22) = e11, S(e12) = −ξe12, S(e21) = ξe21");
    let le2 = m(e11, e11) == d.alpha && m(e22, e22) == d.alpha && m(e12, e12) == zero && m(e21, e21) == zero;
    r.check("le2: squares", le2, "e11² = e22² = α, e12² = e21² = 0");
    let le3 = m(e11, e22) == eps && m(e22, e11) == eps && m(e12, e21) == zero && m(e21, e12) == zero;
    r.check("le3: products with the antipode image", le3, "e11e22 = e22e11 = ε, e12e21 = e21e12 = 0");
    let le4 = m(e12, e11) == c(xi, &m(e11, e12)) && m(e21, e11) == c(xi, &m(e11, e21));
    r.check("le4: commutation with e11", le4, "e12e11 = ξe11e12, e21e11 = ξe11e21");
    let le5 = m(e12, e22) == c(&neg_xi, &m(e22, e12)) && m(e21, e22) == c(&neg_xi, &m(e22, e21));
    r.check("le5: commutation with e22", le5, "e12e22 = −ξe22e12, e21e22 = −ξe22e21");
    let tensor = |u: &Vector, v: &Vector| crate::algebra::tensor_vectors(u, v);
    let add = |u: Vector, v: Vector| crate::exactla::add_vectors(&u, &v);
    let p12 = m(e11, e12);
    let p21 = m(e11, e21);
    let skew12 = a.comult_vector(&p12) == add(tensor(&p12, &eps), tensor(&d.alpha, &p12));
    let skew21 = a.comult_vector(&p21) == add(tensor(&p21, &d.alpha), tensor(&eps, &p21));
    r.check("skew-primitive e11e12", skew12 && p12 != zero, "Δ(e11e12) = e11e12⊗ε + α⊗e11e12");
    r.check("skew-primitive e11e21", skew21 && p21 != zero, "Δ(e11e21) = e11e21⊗α + ε⊗e11e21");
    // these span all nontrivial skew-primitives
    let p = skew_primitives(a, &d.alpha, &eps)?;
    let q = skew_primitives(a, &eps, &d.alpha)?;
    r.check(
        "skew-primitives of A are spanned by e11e12 and e11e21",
        p.nontrivial_dim == 1 && q.nontrivial_dim == 1 && p.space.contains(&p12) && q.space.contains(&p21),
        format!("dim P_(α,ε) = {}, dim P_(ε,α) = {}", p.dim, q.dim),
    );
    Ok(d)
}

fn unique_a_exact_sequence(r: &mut SuiteReport, d: &ComatrixData) -> Result<()> {
    let a = d.a.clone();
    let field = a.field();
    let gens = Subspace::from_vectors(field, a.dim(), vec![d.alpha.clone(), a.mul(&d.e[0][0], &d.e[1][0])]);
    let sub = generated_subalgebra(&a, &gens);
    r.check(
        "T = ⟨α, e11e21⟩ is a 4-dimensional Hopf subalgebra",
        sub.space.dim() == 4 && sub.is_hopf_subalgebra,
        format!("dim {}", sub.space.dim()),
    );
    let (t_sub, inclusion) = a.restrict(&sub.space)?;
    let t_sub = Arc::new(t_sub);
    let taft_iso = iso_search(&t_sub, &*catalog_get("T")?, IsoBudget::default());
    r.check("T ≅ Sweedler algebra", taft_iso.status == IsoStatus::Found, taft_iso.reason.clone());
    let iota = HopfMorphism::verified(t_sub, a.clone(), inclusion)?;
    // ψ: A = (A4pp)* → (k⟨g²⟩)*, restriction of functionals to the central group-like g²
    let a4pp = catalog_get("A4pp")?;
    let g2 = a4pp.basis_vector(label_index(&a4pp, "g^2")?);
    let central = (0..a4pp.dim()).all(|k| {
        let b = a4pp.basis_vector(k);
        a4pp.mul(&g2, &b) == a4pp.mul(&b, &g2)
    });
    r.check("g² is a central group-like of A4pp", central && crate::hopf::is_grouplike(&a4pp, &g2), "");
    let c2 = Subspace::from_vectors(field, a4pp.dim(), vec![a4pp.unit().clone(), g2]);
    let (kc2, j) = a4pp.restrict(&c2)?;
    let b = Arc::new(crate::hopf::dual(&kc2));
    let kc2_iso = iso_search(&b, &*catalog_get("kC2")?, IsoBudget::default());
    r.check("quotient ≅ k[C₂]", kc2_iso.status == IsoStatus::Found, kc2_iso.reason.clone());
    let psi = HopfMorphism::verified(a.clone(), b.clone(), j.transpose())?;
    let ex = check_exact_sequence(&iota, &psi);
    r.check(
        "exact sequence T → A → k[C₂]",
        ex.all_pass(),
        format!(
            "injective {}, surjective {}, composite trivial {}, kernel = A⁺·C {}, coinvariants {}",
            ex.injective, ex.surjective, ex.composite_trivial, ex.kernel_is_augmentation_ideal, ex.coinvariants_match
        ),
    );
    r.check(
        "dim A = dim A^coψ · dim k[C₂]",
        ex.dimension_identity && a.dim() == iota.source.dim() * b.dim(),
        format!("{} = {}·{}", a.dim(), iota.source.dim(), b.dim()),
    );
    Ok(())
}

/// Representations of A4pp, comatrix relations in A = (A4pp)*, the exact sequence T → A → k[C₂]
/// and the invariants of A.
pub fn verify_unique_a() -> SuiteReport {
    let mut r = SuiteReport::new("unique-A");
    if let Err(e) = unique_a_representations(&mut r) {
        r.fail("representations", &e);
    }
    match unique_a_comatrix_relations(&mut r) {
        Ok(d) => {
            if let Err(e) = unique_a_exact_sequence(&mut r, &d) {
                r.fail("exact sequence", &e);
            }
        }
        Err(e) => r.fail("comatrix relations", &e),
    }
    match catalog_get("A").and_then(|a| fingerprint(&a)) {
        Ok(fp) => {
            r.check("coradical type (2,1)", fp.coradical_type == vec![2, 1], format!("{:?}", fp.coradical_type));
            r.check("|G(A)| = 2", fp.grouplike_order == 2, fp.grouplike_order.to_string());
            r.check("A is not semisimple", !fp.semisimple, "");
            r.check("A is not pointed", !fp.pointed, "");
            r.check("A lacks the Chevalley property", !fp.chevalley, "");
            r.check("ord S = 4", fp.antipode_order == 4, fp.antipode_order.to_string());
            r.data.insert("coradical_type".into(), serde_json::json!(fp.coradical_type));
            r.data.insert("fingerprint".into(), serde_json::to_value(&fp).expect("fingerprint serializes"));
        }
        Err(e) => r.fail("fingerprint of A", &e),
    }
    r
}

/// A Hopf subalgebra isomorphic to the Sweedler algebra, with the embedding.
#[derive(Clone, Debug)]
pub struct TaftSubalgebra {
    pub grouplike: Vector,
    pub skew_primitive: Vector,
    pub space: Subspace,
    pub embedding: HopfMorphism,
}

/// Searches group-likes c of order 2 and nontrivial y ∈ P_{1,c} for ⟨c, y⟩ ≅ T₋₁.
pub fn locate_taft_subalgebra(h: &Arc<HopfAlgebra>) -> Result<Option<TaftSubalgebra>> {
    let t = catalog_get("T")?;
    let g = grouplikes(h)?;
    let one = h.unit().clone();
    for c in 0..g.order() {
        if g.element_order(c) != 2 {
            continue;
        }
        let cv = g.elements[c].clone();
        let p = skew_primitives(h, &one, &cv)?;
        if p.nontrivial_dim == 0 {
            continue;
        }
        let trivial = Subspace::from_vectors(h.field(), h.dim(), vec![sub_vectors(&cv, &one)]);
        for y in p.space.basis().iter().filter(|y| !trivial.contains(y)) {
            let gens = Subspace::from_vectors(h.field(), h.dim(), vec![cv.clone(), y.clone()]);
            let sub = generated_subalgebra(h, &gens);
            if sub.space.dim() != 4 || !sub.is_hopf_subalgebra {
                continue;
            }
            let (k, inclusion) = h.restrict(&sub.space)?;
            let out = iso_search(&t, &k, IsoBudget::default());
            if let Some(f) = out.morphism {
                let m = inclusion.mul(&f.matrix)?;
                let embedding = HopfMorphism::verified(t.clone(), h.clone(), m)?;
                return Ok(Some(TaftSubalgebra {
                    grouplike: cv,
                    skew_primitive: y.clone(),
                    space: sub.space,
                    embedding,
                }));
            }
        }
    }
    Ok(None)
}

pub const DIM8: [&str; 5] = ["A2", "A4p", "A4pp", "A4ppp_i", "A22"];

/// The isomorphisms among the dimension-8 algebras and a Sweedler subalgebra in each.
pub fn verify_dim8_remark() -> SuiteReport {
    let mut r = SuiteReport::new("dim8");
    let pairs = [("A2", "A2*"), ("A4ppp_i", "A4ppp_-i"), ("A4ppp_i", "A4p*"), ("A4ppp_-i", "A4p*"), ("A22", "A22*")];
    for (x, y) in pairs {
        let name = format!("{x} ≅ {y}");
        match (catalog_get(x), catalog_get(y)) {
            (Ok(h), Ok(k)) => {
                let out = iso_search(&h, &k, IsoBudget::default());
                let ok = out.status == IsoStatus::Found
                    && out.morphism.as_ref().map(|f| f.check().is_valid() && f.is_bijective()).unwrap_or(false);
                r.check(name, ok, format!("{:?} after {} attempts: {}", out.status, out.attempts, out.reason));
            }
            (Err(e), _) | (_, Err(e)) => r.fail(name, &e),
        }
    }
    match (catalog_get("T"), catalog_get("kC4")) {
        (Ok(h), Ok(k)) => {
            let out = iso_search(&h, &k, IsoBudget::default());
            r.check("T ≇ kC4", out.status == IsoStatus::Refuted, out.reason);
        }
        (Err(e), _) | (_, Err(e)) => r.fail("T ≇ kC4", &e),
    }
    for name in DIM8 {
        let label = format!("Sweedler Hopf subalgebra in {name}");
        match catalog_get(name).and_then(|h| locate_taft_subalgebra(&h)) {
            Ok(Some(s)) => {
                r.check(label, true, format!("⟨c, y⟩ of dimension {}", s.space.dim()));
            }
            Ok(None) => {
                r.check(label, false, "no group-like c of order 2 with a nontrivial (1, c)-skew-primitive generating one");
            }
            Err(e) => r.fail(label, &e),
        }
    }
    r
}

pub const ROUND_TRIPS: usize = 25;
pub const ROUND_TRIP_SEED: u64 = 0x7AF7;

/// The canonical data, the radical bound, seeded perturb-and-normalize round trips and T⊗T.
pub fn verify_taft_square() -> SuiteReport {
    let mut r = SuiteReport::new("taft-square");
    for c in [Canonical::Trivial, Canonical::Twisted] {
        let dt = c.datum();
        let tag = format!("{c:?}").to_lowercase();
        let report = datum_validate(&dt);
        r.check(format!("{tag} datum validates"), report.is_valid(), format!("{:?}", report.violations));
        match radical_bound_check(&dt) {
            Ok(b) => {
                r.check(
                    format!("{tag}: radical bound"),
                    b.holds(),
                    format!("radical dim {}, quotient dim {} = {} − {}", b.radical_dim, b.quotient_dim, b.dim, b.radical_dim),
                );
                r.check(format!("{tag}: semisimple quotient has dimension 4"), b.quotient_dim == 4, b.quotient_dim.to_string());
                if let Some(ok) = b.tensor_iso {
                    r.check(format!("{tag}: crossed product ≅ T ⊗ T as algebras"), ok, "identity map on the basis a#b ↦ a⊗b");
                }
                if let Some(ok) = b.trivial_action_cocycle {
                    r.check(format!("{tag}: x, gx act by zero and σ = ε⊗ε"), ok, "");
                }
                r.data.insert(format!("{tag}_radical_bound"), serde_json::to_value(&b).expect("report serializes"));
            }
            Err(e) => r.fail(format!("{tag}: radical bound"), &e),
        }
        let mut rng = ChaCha8Rng::seed_from_u64(ROUND_TRIP_SEED + c as u64);
        let mut good = 0;
        let mut notes = Vec::new();
        for k in 0..ROUND_TRIPS {
            let tau = random_flagged_transform(&mut rng);
            let outcome = datum_transform(&dt, &tau).and_then(|p| {
                let n = normalize_taft_datum(&p.datum)?;
                let intermediates_valid = n.transcript.iter().all(|s| datum_validate(&s.after).is_valid());
                Ok(n.canonical == c && intermediates_valid && n.transcript.last().map(|s| s.after == dt).unwrap_or(false))
            });
            match outcome {
                Ok(true) => good += 1,
                Ok(false) => notes.push(format!("trip {k} normalized elsewhere")),
                Err(e) => notes.push(format!("trip {k}: {e}")),
            }
        }
        r.check(
            format!("{tag}: {ROUND_TRIPS} perturb-and-normalize round trips"),
            good == ROUND_TRIPS,
            if notes.is_empty() { format!("{good}/{ROUND_TRIPS}") } else { notes.join("; ") },
        );
    }
    match catalog_get("TT").and_then(|h| fingerprint(&h)) {
        Ok(fp) => {
            r.check("T⊗T has dimension 16", fp.dim == 16, fp.dim.to_string());
            r.check("T⊗T is pointed", fp.pointed, "");
            r.check(
                "G(T⊗T) ≅ C₂×C₂",
                fp.grouplike_order == 4 && fp.group.order_profile == vec![1, 2, 2, 2],
                format!("{:?}", fp.group.order_profile),
            );
            r.check("ord S = 4 on T⊗T", fp.antipode_order == 4, fp.antipode_order.to_string());
            r.data.insert("tt_fingerprint".into(), serde_json::to_value(&fp).expect("fingerprint serializes"));
        }
        Err(e) => r.fail("fingerprint of T⊗T", &e),
    }
    r
}
