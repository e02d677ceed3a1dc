use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ideal_closure, radical, Quotient, StructAlgebra};
use crate::cyclo::{splitting_conductor, verified_roots, CycPoly, CycScalar, DEFAULT_DENOM_BOUND};
use crate::error::Result;
use crate::exactla::{add_scaled, linear_solve, scale_vector, sub_vectors, Mat, Subspace, Vector};

pub const DEFAULT_SEED: u64 = 0x5eed;

const RANDOM_ATTEMPTS: usize = 64;
const MAX_COEFF: i64 = 4;

/// Center {z : zeᵢ = eᵢz for all i}.
pub fn center(a: &StructAlgebra) -> Subspace {
    let d = a.dim();
    // row (j, k), column i: m[i][j][k] − m[j][i][k]
    let mut rows = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            rows.push((0..d).map(|i| &a.coeff(i, j, k) - &a.coeff(j, i, k)).collect::<Vector>());
        }
    }
    Mat::from_rows(a.field(), d, rows).expect("shape").kernel()
}

/// Minimal polynomial of z inside the algebra with identity `e` (z must satisfy ez = z).
pub fn minimal_polynomial(a: &StructAlgebra, z: &[CycScalar], e: &[CycScalar]) -> CycPoly {
    let field = a.field();
    let mut powers: Vec<Vector> = vec![e.to_vec()];
    loop {
        let next = a.mul(z, powers.last().expect("nonempty"));
        let m = Mat::from_columns(field, a.dim(), &powers).expect("shape");
        let b = Mat::from_columns(field, a.dim(), std::slice::from_ref(&next)).expect("shape");
        let sol = linear_solve(&m, &b).expect("shape");
        if let Some(x) = sol.particular {
            let mut coeffs: Vec<CycScalar> = (0..powers.len()).map(|i| -x.get(i, 0)).collect();
            coeffs.push(CycScalar::one(field));
            return CycPoly::new(field, coeffs);
        }
        powers.push(next);
    }
}

/// Semisimple part of an algebra: radical, quotient and its block decomposition.
#[derive(Clone, Debug)]
pub struct WedderburnData {
    pub radical: Subspace,
    pub quotient: Quotient,
    /// One entry per block, sorted ascending.
    pub block_sizes: Vec<usize>,
    /// Central primitive idempotents of the quotient, in quotient coordinates, aligned with `block_sizes`.
    pub central_idempotents: Vec<Vector>,
    pub split: bool,
    pub diagnostic: Option<String>,
    /// A larger conductor over which a failed split would succeed, when known.
    pub hint: Option<u32>,
}

impl WedderburnData {
    /// eᵢB for block i, in quotient coordinates.
    pub fn block_space(&self, i: usize) -> Subspace {
        let b = &self.quotient.algebra;
        let e = &self.central_idempotents[i];
        Subspace::from_vectors(b.field(), b.dim(), (0..b.dim()).map(|j| b.mul(e, &b.basis_vector(j))).collect())
    }

    /// Counts of blocks by size: entry k−1 is the number of k×k blocks.
    pub fn type_vector(&self) -> Vec<usize> {
        block_type(&self.block_sizes)
    }
}

/// Multiset of block sizes written as counts per size (index 0 counts the 1×1 blocks).
pub fn block_type(sizes: &[usize]) -> Vec<usize> {
    let max = sizes.iter().copied().max().unwrap_or(0);
    let mut out = vec![0; max];
    for &s in sizes.iter().filter(|&&s| s > 0) {
        out[s - 1] += 1;
    }
    out
}

fn exact_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

enum SplitOutcome {
    Primitive,
    Split(Vec<Vector>),
    Stuck { hint: Option<u32> },
}

fn lagrange_idempotents(b: &StructAlgebra, z: &[CycScalar], e: &[CycScalar], roots: &[CycScalar]) -> Vec<Vector> {
    let mut out = Vec::with_capacity(roots.len());
    for (k, rk) in roots.iter().enumerate() {
        let mut acc = e.to_vec();
        for (l, rl) in roots.iter().enumerate() {
            if l == k {
                continue;
            }
            let factor = sub_vectors(z, &scale_vector(rl, e));
            let denom = (rk - rl).inv().expect("distinct roots");
            acc = scale_vector(&denom, &b.mul(&acc, &factor));
        }
        out.push(acc);
    }
    out
}

fn split_idempotent(b: &StructAlgebra, zbasis: &[Vector], e: &[CycScalar], rng: &mut ChaCha8Rng) -> SplitOutcome {
    let ez = Subspace::from_vectors(b.field(), b.dim(), zbasis.iter().map(|z| b.mul(e, z)).collect());
    if ez.dim() <= 1 {
        return SplitOutcome::Primitive;
    }
    let basis = ez.basis().to_vec();
    let mut candidates: Vec<Vector> = basis.clone();
    let mut hint = None;
    let mut tried = 0;
    let mut idx = 0;
    loop {
        let z = if idx < candidates.len() {
            idx += 1;
            candidates[idx - 1].clone()
        } else if tried < RANDOM_ATTEMPTS {
            tried += 1;
            let mut z = crate::exactla::zero_vector(b.field(), b.dim());
            for v in &basis {
                let c = CycScalar::from_int(b.field(), rng.gen_range(-MAX_COEFF..=MAX_COEFF));
                add_scaled(&mut z, &c, v);
            }
            candidates.push(z.clone());
            idx += 1;
            z
        } else {
            return SplitOutcome::Stuck { hint };
        };
        let p = minimal_polynomial(b, &z, e);
        if p.degree().unwrap_or(0) < 2 {
            continue;
        }
        let roots = verified_roots(&p, DEFAULT_DENOM_BOUND);
        let distinct = roots.distinct();
        if roots.certified_complete && distinct.len() == p.degree().unwrap_or(0) {
            return SplitOutcome::Split(lagrange_idempotents(b, &z, e, &distinct));
        }
        if hint.is_none() {
            hint = splitting_conductor(&p);
        }
    }
}

/// Wedderburn decomposition of A/Rad A with a fixed default seed.
pub fn wedderburn(a: &StructAlgebra) -> Result<WedderburnData> {
    wedderburn_seeded(a, DEFAULT_SEED)
}

pub fn wedderburn_seeded(a: &StructAlgebra, seed: u64) -> Result<WedderburnData> {
    let rad = radical(a)?;
    let quotient = Quotient::new(a, &rad);
    let b = &quotient.algebra;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zbasis = center(b).basis().to_vec();
    let mut pending = if b.dim() == 0 { Vec::new() } else { vec![b.unit().clone()] };
    let mut primitive = Vec::new();
    let mut diagnostic = None;
    let mut hint = None;
    while let Some(e) = pending.pop() {
        match split_idempotent(b, &zbasis, &e, &mut rng) {
            SplitOutcome::Primitive => primitive.push(e),
            SplitOutcome::Split(parts) => pending.extend(parts.into_iter().rev()),
            SplitOutcome::Stuck { hint: h } => {
                diagnostic = Some("center does not split over the ground field".to_string());
                hint = hint.or(h);
                primitive.push(e);
            }
        }
    }
    let mut blocks: Vec<(usize, Vector)> = Vec::new();
    for e in primitive {
        let dim = Subspace::from_vectors(b.field(), b.dim(), (0..b.dim()).map(|j| b.mul(&e, &b.basis_vector(j))).collect())
            .dim();
        match exact_sqrt(dim) {
            Some(n) => blocks.push((n, e)),
            None => {
                diagnostic.get_or_insert_with(|| format!("block of dimension {dim} is not a perfect square"));
                blocks.push((0, e));
            }
        }
    }
    blocks.sort_by_key(|(n, _)| *n);
    let split = diagnostic.is_none();
    Ok(WedderburnData {
        radical: rad,
        block_sizes: blocks.iter().map(|(n, _)| *n).collect(),
        central_idempotents: blocks.into_iter().map(|(_, e)| e).collect(),
        quotient,
        split,
        diagnostic,
        hint,
    })
}

/// Algebra maps A → k, each given by its values on the basis.
#[derive(Clone, Debug)]
pub struct Characters {
    pub list: Vec<Vector>,
    pub complete: bool,
    pub hint: Option<u32>,
}

/// All characters, through the abelianization A/([A,A]) and its semisimple part.
pub fn characters(a: &StructAlgebra) -> Result<Characters> {
    let d = a.dim();
    let mut commutators = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let c = sub_vectors(&a.basis_product(i, j), &a.basis_product(j, i));
            if !crate::exactla::is_zero_vector(&c) {
                commutators.push(c);
            }
        }
    }
    let abel = Quotient::new(a, &ideal_closure(a, &commutators).space);
    let w = wedderburn(&abel.algebra)?;
    let q = &w.quotient;
    let b = &q.algebra;
    let mut list = Vec::new();
    for (e, &n) in w.central_idempotents.iter().zip(&w.block_sizes) {
        if n != 1 {
            continue;
        }
        let pivot = e.iter().position(|c| !c.is_zero()).expect("nonzero idempotent");
        let pinv = e[pivot].inv().expect("nonzero");
        let chi: Vector = (0..d)
            .map(|i| {
                let img = q.project(&abel.project(&a.basis_vector(i)));
                &b.mul(&img, e)[pivot] * &pinv
            })
            .collect();
        list.push(chi);
    }
    for chi in &list {
        debug_assert!(is_character(a, chi));
        if !is_character(a, chi) {
            return Err(crate::error::Error::Internal("extracted character is not multiplicative".into()));
        }
    }
    list.sort_by_key(|chi| chi.iter().map(|c| c.to_text()).collect::<Vec<_>>());
    Ok(Characters { list, complete: w.split, hint: w.hint })
}

/// χ(1) = 1 and χ(eᵢ)χ(eⱼ) = χ(eᵢeⱼ) for all basis pairs.
pub fn is_character(a: &StructAlgebra, chi: &[CycScalar]) -> bool {
    let eval = |v: &[CycScalar]| -> CycScalar {
        let mut t = CycScalar::zero(a.field());
        for (x, c) in v.iter().zip(chi) {
            if !x.is_zero() {
                t += &(x * c);
            }
        }
        t
    };
    if !eval(a.unit()).is_one() {
        return false;
    }
    (0..a.dim()).all(|i| (0..a.dim()).all(|j| &chi[i] * &chi[j] == eval(&a.basis_product(i, j))))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::cyclo::FieldSpec;

    #[test]
    fn group_algebra_c2_blocks() {
        let w = wedderburn(&cyclic(2)).unwrap();
        assert_eq!(w.block_sizes, vec![1, 1]);
        assert!(w.split);
    }

    #[test]
    fn a4pp_blocks() {
        let w = wedderburn(&a4pp_algebra()).unwrap();
        assert_eq!(w.block_sizes, vec![1, 1, 2]);
        assert_eq!(w.type_vector(), vec![2, 1]);
    }

    #[test]
    fn sweedler_blocks_match_characters() {
        let t = sweedler();
        let w = wedderburn(&t).unwrap();
        assert_eq!(w.block_sizes, vec![1, 1]);
        // oracle: χ(g) = ±1, χ(x) = 0 are the only solutions of χ(g)² = 1, χ(x)χ(g) = −χ(g)χ(x)
        let chars = characters(&t).unwrap();
        assert!(chars.complete);
        let mut gvals: Vec<i64> = chars
            .list
            .iter()
            .map(|c| {
                assert!(c[2].is_zero() && c[3].is_zero());
                if c[1] == s(1) { 1 } else { -1 }
            })
            .collect();
        gvals.sort();
        assert_eq!(gvals, vec![-1, 1]);
    }

    #[test]
    fn idempotents_are_orthogonal_and_sum_to_unit() {
        let w = wedderburn(&a4pp_algebra()).unwrap();
        let b = &w.quotient.algebra;
        let mut total = crate::exactla::zero_vector(f8(), b.dim());
        for (i, e) in w.central_idempotents.iter().enumerate() {
            assert_eq!(&b.mul(e, e), e);
            for f in &w.central_idempotents[i + 1..] {
                assert!(crate::exactla::is_zero_vector(&b.mul(e, f)));
            }
            total = crate::exactla::add_vectors(&total, e);
        }
        assert_eq!(&total, b.unit());
    }

    #[test]
    fn characters_of_c4_are_powers_of_i() {
        let chars = characters(&cyclic(4)).unwrap();
        assert_eq!(chars.list.len(), 4);
        let i = CycScalar::imag_unit(f8()).unwrap();
        let mut found: Vec<usize> = chars
            .list
            .iter()
            .map(|c| (0..4).find(|&k| c[1] == i.pow(k as u32)).expect("power of i"))
            .collect();
        found.sort();
        assert_eq!(found, vec![0, 1, 2, 3]);
    }

    #[test]
    fn characters_of_a4pp() {
        let chars = characters(&a4pp_algebra()).unwrap();
        assert_eq!(chars.list.len(), 2);
        assert!(chars.list.iter().all(|c| c[4].is_zero()));
        assert!(chars.list.iter().any(|c| c[1] == s(-1)));
    }

    #[test]
    fn c8_does_not_split_over_q_i() {
        let f4 = FieldSpec::new(4).unwrap();
        let c8 = StructAlgebra::new(
            f4,
            8,
            cyclic(8)
                .entries().map(|(i, j, k, _)| (i, j, k, CycScalar::one(f4))).collect::<Vec<_>>(),
            crate::exactla::unit_vector(f4, 8, 0),
        )
        .unwrap();
        let w = wedderburn(&c8).unwrap();
        assert!(!w.split);
        assert_eq!(w.hint, Some(8));
    }
}
