use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::grouplike::GroupLikes;
use super::{fingerprint, grouplikes, skew_primitives, HopfAlgebra, HopfMorphism};
use crate::cyclo::{verified_roots, CycPoly, CycScalar, FieldSpec, DEFAULT_DENOM_BOUND};
use crate::exactla::{add_scaled, linear_solve, Mat, Subspace, Vector};

#[derive(Clone, Copy, Debug)]
pub struct IsoBudget {
    /// Group isomorphisms G(H) → G(K) tried.
    pub max_group_maps: usize,
    /// Scalar assignments tried per group isomorphism.
    pub max_candidates: usize,
    /// Orders the candidate group maps; the search itself is sequential.
    pub seed: u64,
}

impl Default for IsoBudget {
    fn default() -> Self {
        IsoBudget { max_group_maps: 5000, max_candidates: 4096, seed: crate::algebra::DEFAULT_SEED }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoStatus {
    Found,
    Refuted,
    Exhausted,
}

#[derive(Clone, Debug)]
pub struct IsoOutcome {
    pub morphism: Option<HopfMorphism>,
    pub status: IsoStatus,
    pub reason: String,
    pub attempts: usize,
}

impl IsoOutcome {
    fn refuted(reason: String) -> Self {
        IsoOutcome { morphism: None, status: IsoStatus::Refuted, reason, attempts: 0 }
    }

    fn exhausted(reason: String, attempts: usize) -> Self {
        IsoOutcome { morphism: None, status: IsoStatus::Exhausted, reason, attempts }
    }
}

/// Skew-primitive generator: x ∈ P_{1,g} with s x s⁻¹ = χ(s) x for each group generator s.
#[derive(Clone, Debug)]
struct SkewGen {
    grouplike: usize,
    chi: Vec<CycScalar>,
    vector: Vector,
}

fn subgroup(g: &GroupLikes, gens: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        for &s in gens {
            let b = g.table[a][s];
            if !inside[b] {
                inside[b] = true;
                stack.push(b);
            }
        }
    }
    inside
}

/// Greedy generating set, preferring elements of large order.
fn group_generators(g: &GroupLikes) -> Vec<usize> {
    let mut by_order: Vec<usize> = (1..g.order()).collect();
    by_order.sort_by_key(|&i| std::cmp::Reverse(g.element_order(i)));
    let mut gens = Vec::new();
    let mut inside = subgroup(g, &gens);
    for i in by_order {
        if !inside[i] {
            gens.push(i);
            inside = subgroup(g, &gens);
        }
    }
    gens
}

/// Extends s_i ↦ t_i to a group isomorphism, if it is one.
fn extend_group_map(gh: &GroupLikes, gk: &GroupLikes, src: &[usize], dst: &[usize]) -> Option<Vec<usize>> {
    let n = gh.order();
    let mut phi = vec![usize::MAX; n];
    phi[0] = 0;
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        for (&s, &t) in src.iter().zip(dst) {
            let b = gh.table[a][s];
            let img = gk.table[phi[a]][t];
            if phi[b] == usize::MAX {
                phi[b] = img;
                stack.push(b);
            } else if phi[b] != img {
                return None;
            }
        }
    }
    let mut seen = vec![false; n];
    for &p in &phi {
        if p == usize::MAX || seen[p] {
            return None;
        }
        seen[p] = true;
    }
    for a in 0..n {
        for b in 0..n {
            if phi[gh.table[a][b]] != gk.table[phi[a]][phi[b]] {
                return None;
            }
        }
    }
    Some(phi)
}

fn group_isomorphisms(gh: &GroupLikes, gk: &GroupLikes, gens: &[usize], budget: &IsoBudget) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let options: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let mut c: Vec<usize> = (0..gk.order()).filter(|&t| gk.element_order(t) == gh.element_order(s)).collect();
            c.shuffle(&mut rng);
            c
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0; gens.len()];
    if options.iter().any(Vec::is_empty) {
        return out;
    }
    let mut tried = 0;
    loop {
        let dst: Vec<usize> = idx.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        if let Some(phi) = extend_group_map(gh, gk, gens, &dst) {
            out.push(phi);
        }
        tried += 1;
        if tried >= budget.max_group_maps || !advance(&mut idx, &options.iter().map(Vec::len).collect::<Vec<_>>()) {
            return out;
        }
    }
}

/// Odometer increment; false once every combination has been visited.
fn advance(idx: &mut [usize], sizes: &[usize]) -> bool {
    for p in (0..idx.len()).rev() {
        idx[p] += 1;
        if idx[p] < sizes[p] {
            return true;
        }
        idx[p] = 0;
    }
    false
}

fn conjugation_on(h: &HopfAlgebra, s: &[CycScalar], u: &Subspace) -> Option<Mat> {
    let sinv = h.apply_antipode(s);
    let cols: Option<Vec<Vector>> = u.basis().iter().map(|b| u.coordinates(&h.mul(&h.mul(s, b), &sinv))).collect();
    Mat::from_columns(h.field(), u.dim(), &cols?).ok()
}

fn roots_of_unity(field: FieldSpec) -> Vec<CycScalar> {
    (0..field.conductor() as i64).map(|j| CycScalar::zeta_pow(field, j)).collect()
}

/// Vectors of `u` (given in ambient coordinates) with s x s⁻¹ = λ x.
fn eigen_subspace(h: &HopfAlgebra, s: &[CycScalar], u: &Subspace, lam: &CycScalar) -> Option<Subspace> {
    let m = conjugation_on(h, s, u)?;
    let shifted = m.add(&Mat::identity(h.field(), u.dim()).scale(&-lam)).ok()?;
    let kernel = shifted.kernel();
    let vecs = kernel
        .basis()
        .iter()
        .map(|c| {
            let mut v = u.zero_vector();
            for (x, b) in c.iter().zip(u.basis()) {
                add_scaled(&mut v, x, b);
            }
            v
        })
        .collect();
    Some(Subspace::from_vectors(h.field(), h.dim(), vecs))
}

/// Joint eigenspace decomposition of the nontrivial skew-primitives P_{1,g} under conjugation.
fn skew_generators(h: &HopfAlgebra, g: &GroupLikes, gens: &[usize]) -> Option<Vec<SkewGen>> {
    let units = roots_of_unity(h.field());
    let mut out = Vec::new();
    for gi in 1..g.order() {
        let p = skew_primitives(h, h.unit(), &g.elements[gi]).ok()?;
        if p.nontrivial_dim == 0 {
            continue;
        }
        let mut pieces: Vec<(Vec<CycScalar>, Subspace)> = vec![(Vec::new(), p.space.clone())];
        for &s in gens {
            let mut next = Vec::new();
            for (chi, u) in pieces {
                let mut covered = 0;
                for lam in &units {
                    let e = eigen_subspace(h, &g.elements[s], &u, lam)?;
                    if !e.is_zero() {
                        covered += e.dim();
                        let mut c = chi.clone();
                        c.push(lam.clone());
                        next.push((c, e));
                    }
                }
                if covered != u.dim() {
                    return None;
                }
            }
            pieces = next;
        }
        for (chi, u) in pieces {
            if chi.iter().all(CycScalar::is_one) {
                continue;
            }
            for v in u.basis() {
                out.push(SkewGen { grouplike: gi, chi: chi.clone(), vector: v.clone() });
            }
        }
    }
    Some(out)
}

/// Words in the generators whose products span H, each with its value.
fn spanning_words(h: &HopfAlgebra, gens: &[Vector]) -> Option<Vec<(Vec<usize>, Vector)>> {
    let mut words = vec![(Vec::new(), h.unit().clone())];
    let mut span = Subspace::from_vectors(h.field(), h.dim(), vec![h.unit().clone()]);
    let mut frontier = 0;
    while frontier < words.len() && !span.is_full() {
        let (w, v) = words[frontier].clone();
        for (i, g) in gens.iter().enumerate() {
            let p = h.mul(&v, g);
            if !span.contains(&p) {
                span = span.sum(&Subspace::from_vectors(h.field(), h.dim(), vec![p.clone()])).ok()?;
                let mut w2 = w.clone();
                w2.push(i);
                words.push((w2, p));
            }
        }
        frontier += 1;
    }
    span.is_full().then_some(words)
}

/// The linear extension of a group isomorphism φ: G(H) → G(K) to k[G(H)].
struct GroupMap<'a> {
    /// Group-likes of H as columns.
    columns: &'a Mat,
    phi: &'a [usize],
    target: &'a GroupLikes,
}

impl GroupMap<'_> {
    fn apply(&self, v: &[CycScalar]) -> Option<Vector> {
        let field = self.columns.field();
        let rhs = Mat::from_columns(field, v.len(), &[v.to_vec()]).ok()?;
        let c = linear_solve(self.columns, &rhs).ok()?.particular?;
        let mut out = vec![CycScalar::zero(field); self.target.elements[0].len()];
        for (a, &p) in self.phi.iter().enumerate() {
            add_scaled(&mut out, c.get(a, 0), &self.target.elements[p]);
        }
        Some(out)
    }
}

/// Least n ≥ 2 with xⁿ ∈ k[G(H)], together with the image of xⁿ.
fn power_in(h: &HopfAlgebra, x: &[CycScalar], group_map: &GroupMap) -> Option<(u32, Vector)> {
    let mut p = x.to_vec();
    for n in 2..=(h.dim() as u32 + 1) {
        p = h.mul(&p, x);
        if let Some(img) = group_map.apply(&p) {
            return Some((n, img));
        }
    }
    None
}

/// Scalars λ with (λy)ⁿ matching the image of xⁿ.
fn scalar_candidates(
    h: &HopfAlgebra,
    k: &HopfAlgebra,
    x: &[CycScalar],
    y: &[CycScalar],
    group_map: &GroupMap,
) -> Vec<CycScalar> {
    let one = CycScalar::one(k.field());
    let Some((n, target)) = power_in(h, x, group_map) else {
        return vec![one];
    };
    let mut yn = y.to_vec();
    for _ in 1..n {
        yn = k.mul(&yn, y);
    }
    if target.iter().all(CycScalar::is_zero) {
        return if yn.iter().all(CycScalar::is_zero) { vec![one] } else { Vec::new() };
    }
    // yⁿ = c·φ(xⁿ) with λⁿ = 1/c
    let Some(pivot) = target.iter().position(|c| !c.is_zero()) else { return Vec::new() };
    let Ok(c) = yn[pivot].checked_div(&target[pivot]) else { return Vec::new() };
    if c.is_zero() || yn.iter().zip(&target).any(|(a, b)| *a != &c * b) {
        return Vec::new();
    }
    let Ok(cinv) = c.inv() else { return Vec::new() };
    let mut coeffs = vec![CycScalar::zero(k.field()); n as usize + 1];
    coeffs[0] = -&cinv;
    coeffs[n as usize] = one;
    verified_roots(&CycPoly::new(k.field(), coeffs), DEFAULT_DENOM_BOUND).distinct()
}

pub fn iso_search(h: &HopfAlgebra, k: &HopfAlgebra, budget: IsoBudget) -> IsoOutcome {
    let field = h.field().join(k.field());
    let h = Arc::new(h.lift(field));
    let k = Arc::new(k.lift(field));
    let (fh, fk) = match (fingerprint(&h), fingerprint(&k)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return IsoOutcome::exhausted(format!("fingerprint failed: {e}"), 0),
    };
    if let Some(name) = fh.first_difference(&fk) {
        return IsoOutcome::refuted(format!("invariant {name} differs"));
    }
    let (Ok(gh), Ok(gk)) = (grouplikes(&h), grouplikes(&k)) else {
        return IsoOutcome::exhausted("group-likes unavailable".into(), 0);
    };
    if !gh.is_abelian() {
        return IsoOutcome::exhausted("generator search needs an abelian group of group-likes".into(), 0);
    }
    let ggens = group_generators(&gh);
    let Some(h_skew) = skew_generators(&h, &gh, &ggens) else {
        return IsoOutcome::exhausted("conjugation does not split the skew-primitives".into(), 0);
    };
    let mut gens_h: Vec<Vector> = ggens.iter().map(|&s| gh.elements[s].clone()).collect();
    gens_h.extend(h_skew.iter().map(|s| s.vector.clone()));
    let Some(words) = spanning_words(&h, &gens_h) else {
        return IsoOutcome::exhausted("not generated by group-likes and skew-primitives".into(), 0);
    };
    let h_group_cols = Mat::from_columns(field, h.dim(), &gh.elements).expect("shape");
    let words_inv = match Mat::from_columns(field, h.dim(), &words.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>())
        .ok()
        .and_then(|m| m.inverse())
    {
        Some(m) => m,
        None => return IsoOutcome::exhausted("spanning words are dependent".into(), 0),
    };
    let mut attempts = 0;
    for phi in group_isomorphisms(&gh, &gk, &ggens, &budget) {
        let group_map = GroupMap { columns: &h_group_cols, phi: &phi, target: &gk };
        // targets for the skew generators
        let mut targets: Vec<Vec<(Vector, CycScalar)>> = Vec::new();
        let mut ok = true;
        let mut used: Vec<(usize, Vec<CycScalar>, usize)> = Vec::new();
        for x in &h_skew {
            let img_g = phi[x.grouplike];
            let Ok(p) = skew_primitives(&k, k.unit(), &gk.elements[img_g]) else {
                ok = false;
                break;
            };
            let mut space = p.space;
            for (&s, lam) in ggens.iter().zip(&x.chi) {
                match eigen_subspace(&k, &gk.elements[phi[s]], &space, lam) {
                    Some(e) => space = e,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok || space.is_zero() {
                ok = false;
                break;
            }
            // generators sharing (g, χ) take successive basis vectors of the target space
            let slot = used.iter().filter(|(g, c, _)| *g == x.grouplike && *c == x.chi).count();
            used.push((x.grouplike, x.chi.clone(), slot));
            let Some(y) = space.basis().get(slot).cloned() else {
                ok = false;
                break;
            };
            let lams = scalar_candidates(&h, &k, &x.vector, &y, &group_map);
            if lams.is_empty() {
                ok = false;
                break;
            }
            targets.push(lams.into_iter().map(|l| (y.clone(), l)).collect());
        }
        if !ok {
            attempts += 1;
            continue;
        }
        let sizes: Vec<usize> = targets.iter().map(Vec::len).collect();
        let mut idx = vec![0; targets.len()];
        let mut tried = 0;
        loop {
            attempts += 1;
            tried += 1;
            let mut images: Vec<Vector> = ggens.iter().map(|&s| gk.elements[phi[s]].clone()).collect();
            for (t, &i) in targets.iter().zip(&idx) {
                let (y, l) = &t[i];
                images.push(y.iter().map(|c| l * c).collect());
            }
            let cols: Vec<Vector> = words
                .iter()
                .map(|(w, _)| w.iter().fold(k.unit().clone(), |acc, &g| k.mul(&acc, &images[g])))
                .collect();
            if let Ok(m) = Mat::from_columns(field, k.dim(), &cols).and_then(|m| m.mul(&words_inv)) {
                if let Ok(f) = HopfMorphism::verified(h.clone(), k.clone(), m) {
                    if f.is_bijective() {
                        return IsoOutcome { morphism: Some(f), status: IsoStatus::Found, reason: String::new(), attempts };
                    }
                }
            }
            if tried >= budget.max_candidates || !advance(&mut idx, &sizes) {
                break;
            }
        }
    }
    IsoOutcome::exhausted("no generator assignment extends to a Hopf isomorphism".into(), attempts)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{dual, tensor_product};
    use super::*;

    #[test]
    fn sweedler_is_self_dual() {
        let t = sweedler_hopf();
        let out = iso_search(&t, &dual(&t), IsoBudget::default());
        assert_eq!(out.status, IsoStatus::Found, "{}", out.reason);
        let f = out.morphism.unwrap();
        assert!(f.check().is_valid());
        assert!(f.matrix.inverse().is_some());
    }

    #[test]
    fn sweedler_is_not_a_group_algebra() {
        let out = iso_search(&sweedler_hopf(), &group_hopf(4), IsoBudget::default());
        assert_eq!(out.status, IsoStatus::Refuted);
    }

    #[test]
    fn group_algebras_of_same_group() {
        let out = iso_search(&group_hopf(4), &dual(&dual(&group_hopf(4))), IsoBudget::default());
        assert_eq!(out.status, IsoStatus::Found);
    }

    #[test]
    fn tensor_square_is_self_dual() {
        let t = sweedler_hopf();
        let tt = tensor_product(&t, &t).unwrap();
        let out = iso_search(&tt, &dual(&tt), IsoBudget::default());
        assert_eq!(out.status, IsoStatus::Found, "{}", out.reason);
    }
}
