use serde::Serialize;

use super::grouplike::is_grouplike;
use super::{coradical_filtration, is_subcoalgebra, tensor_coordinates, HopfAlgebra};
use crate::algebra::simple_modules;
use crate::algebra::StructAlgebra;
use crate::cyclo::{splitting_conductor, verified_roots, CycPoly, CycScalar, DEFAULT_DENOM_BOUND};
use crate::error::{Error, Result};
use crate::exactla::{add_scaled, zero_vector, Mat, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionKind {
    /// x ↦ gx
    Left,
    /// x ↦ xg
    Right,
    /// x ↦ gxg⁻¹
    AdLeft,
    /// x ↦ g⁻¹xg
    AdRight,
}

/// Where the action sends one simple subcoalgebra of the coradical.
#[derive(Clone, Debug, Serialize)]
pub struct StabilityEntry {
    pub index: usize,
    pub dim: usize,
    /// Index of the simple subcoalgebra equal to the image, if any.
    pub image: Option<usize>,
    pub stable: bool,
}

#[derive(Clone, Debug)]
pub struct TranslationAction {
    pub matrix: Mat,
    pub is_identity: bool,
    pub stability: Vec<StabilityEntry>,
}

pub fn translation_action(h: &HopfAlgebra, g: &[CycScalar], kind: ActionKind) -> Result<TranslationAction> {
    if !is_grouplike(h, g) {
        return Err(Error::NotGrouplike);
    }
    let ginv = h.apply_antipode(g);
    let a = h.alg();
    let matrix = match kind {
        ActionKind::Left => a.left_mult(g),
        ActionKind::Right => a.right_mult(g),
        ActionKind::AdLeft => a.left_mult(g).mul(&a.right_mult(&ginv))?,
        ActionKind::AdRight => a.left_mult(&ginv).mul(&a.right_mult(g))?,
    };
    let simple = coradical_filtration(h)?.simple_subcoalgebras;
    let stability = simple
        .iter()
        .enumerate()
        .map(|(index, c)| {
            let img = c.image_under(&matrix).expect("square action");
            let image = simple.iter().position(|d| *d == img);
            StabilityEntry { index, dim: c.dim(), stable: image == Some(index), image }
        })
        .collect();
    Ok(TranslationAction { is_identity: matrix.is_identity(), matrix, stability })
}

/// Comatrix basis (e_ij) of a 4-dimensional simple subcoalgebra on which a finite-order
/// coalgebra automorphism f acts by f(e_ij) = ω^{i−j} e_ij.
#[derive(Clone, Debug)]
pub struct ComatrixBasis {
    /// basis[i][j] = e_{i+1, j+1} in the coordinates of H.
    pub basis: Vec<Vec<Vector>>,
    pub omega: CycScalar,
    /// Multiplicative order of ω, when it is a root of unity of the field.
    pub order: Option<usize>,
}

fn root_order(w: &CycScalar) -> Option<usize> {
    let bound = 2 * w.field().conductor() as usize;
    let mut p = w.clone();
    for n in 1..=bound {
        if p.is_one() {
            return Some(n);
        }
        p = &p * w;
    }
    None
}

/// Eigenvalues of a 2×2 matrix, required to lie in the field.
fn eigenvalues_2x2(p: &Mat) -> Result<Vec<CycScalar>> {
    let field = p.field();
    let tr = p.trace();
    let det = &(p.get(0, 0) * p.get(1, 1)) - &(p.get(0, 1) * p.get(1, 0));
    let chi = CycPoly::new(field, vec![det, -&tr, CycScalar::one(field)]);
    let roots = verified_roots(&chi, DEFAULT_DENOM_BOUND);
    let total: usize = roots.roots.iter().map(|(_, m)| m).sum();
    if total < 2 {
        return Err(Error::NotSplit {
            conductor: field.conductor(),
            reason: "eigenvalues of the automorphism lie outside the field".into(),
            hint: splitting_conductor(&chi),
        });
    }
    Ok(roots.roots.iter().flat_map(|(r, m)| std::iter::repeat(r.clone()).take(*m)).collect())
}

/// The basis of `ComatrixBasis` for f restricted to C; the identity on C is rejected.
pub fn eigen_comatrix_basis(h: &HopfAlgebra, c: &Subspace, f: &Mat) -> Result<ComatrixBasis> {
    let field = h.field();
    if c.dim() != 4 {
        return Err(Error::InvalidInput(format!("expected a 4-dimensional simple subcoalgebra, got dimension {}", c.dim())));
    }
    if f.rows() != h.dim() || f.cols() != h.dim() {
        return Err(Error::ShapeMismatch("automorphism must be a square matrix on H".into()));
    }
    let basis = c.basis();
    // coalgebra structure of C in its own basis
    let mut entries = Vec::new();
    for (k, b) in basis.iter().enumerate() {
        let n = tensor_coordinates(&h.comult_matrix(b), c)
            .ok_or_else(|| Error::InvalidInput("subspace is not a subcoalgebra".into()))?;
        for p in 0..4 {
            for q in 0..4 {
                if !n.get(p, q).is_zero() {
                    entries.push((p, q, k, n.get(p, q).clone()));
                }
            }
        }
    }
    let counit: Vector = basis.iter().map(|b| h.counit_of(b)).collect();
    let dual = StructAlgebra::new(field, 4, entries, counit)?;
    let reps = simple_modules(&dual)?;
    let rho = reps
        .into_iter()
        .find(|r| r.dim == 2)
        .ok_or_else(|| Error::InvalidInput("subcoalgebra is not a 2×2 comatrix coalgebra".into()))?;
    // f on C: f(c_k) = Σ_m F[m][k] c_m
    let mut cols = Vec::with_capacity(4);
    for b in basis {
        cols.push(
            c.coordinates(&f.mul_vec(b)).ok_or_else(|| Error::InvalidInput("automorphism does not preserve the subcoalgebra".into()))?,
        );
    }
    let fc = Mat::from_columns(field, 4, &cols)?;
    if fc.is_identity() {
        return Err(Error::IdentityAutomorphism);
    }
    // f*φ_k = Σ_m F[k][m] φ_m; solve ρ(f*φ_k) P = P ρ(φ_k) for the 2×2 matrix P (index 2a + b)
    let mut rows = Vec::new();
    for k in 0..4 {
        let mut lhs = Mat::zeros(field, 2, 2);
        for m in 0..4 {
            if !fc.get(k, m).is_zero() {
                lhs = lhs.add(&rho.matrices[m].scale(fc.get(k, m)))?;
            }
        }
        let r = &rho.matrices[k];
        for i in 0..2 {
            for j in 0..2 {
                // Σ_a lhs[i][a] P[a][j] − Σ_b P[i][b] r[b][j]
                let mut row = zero_vector(field, 4);
                for a in 0..2 {
                    row[2 * a + j] += lhs.get(i, a);
                    row[2 * i + a] -= r.get(a, j);
                }
                rows.push(row);
            }
        }
    }
    let sol = Mat::from_rows(field, 4, rows)?.kernel();
    let pv = sol
        .basis()
        .first()
        .ok_or_else(|| Error::Internal("no intertwiner for the automorphism".into()))?;
    let p = Mat::from_rows(field, 2, vec![pv[0..2].to_vec(), pv[2..4].to_vec()])?;
    let eig = eigenvalues_2x2(&p)?;
    if eig[0] == eig[1] {
        return Err(Error::Internal("automorphism is not diagonalizable on the subcoalgebra".into()));
    }
    // Q has eigenvectors of P as columns
    let mut qcols = Vec::with_capacity(2);
    for lam in &eig {
        let shifted = p.add(&Mat::identity(field, 2).scale(&-lam))?;
        let v = shifted.kernel();
        qcols.push(v.basis()[0].clone());
    }
    let q = Mat::from_columns(field, 2, &qcols)?;
    let qinv = q.inverse().ok_or_else(|| Error::Internal("eigenvectors are dependent".into()))?;
    let rho_mats: Vec<Mat> = rho
        .matrices
        .iter()
        .map(|m| qinv.mul(m).and_then(|x| x.mul(&q)))
        .collect::<Result<_>>()?;
    let mut e = vec![vec![zero_vector(field, h.dim()); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for (k, b) in basis.iter().enumerate() {
                let coef = rho_mats[k].get(i, j);
                if !coef.is_zero() {
                    add_scaled(&mut e[i][j], coef, b);
                }
            }
        }
    }
    let omega = eig[1].checked_div(&eig[0])?;
    let basis = verify_comatrix(h, f, e, &omega)?;
    Ok(ComatrixBasis { order: root_order(&omega), omega, basis })
}

fn verify_comatrix(h: &HopfAlgebra, f: &Mat, e: Vec<Vec<Vector>>, omega: &CycScalar) -> Result<Vec<Vec<Vector>>> {
    let field = h.field();
    let d = h.dim();
    for i in 0..2 {
        for j in 0..2 {
            let mut expected = Mat::zeros(field, d, d);
            for l in 0..2 {
                for (p, x) in e[i][l].iter().enumerate() {
                    for (q, y) in e[l][j].iter().enumerate() {
                        if !x.is_zero() && !y.is_zero() {
                            expected.add_at(p, q, &(x * y));
                        }
                    }
                }
            }
            if h.comult_matrix(&e[i][j]) != expected {
                return Err(Error::Internal(format!("Δ(e{}{}) is not comatrix", i + 1, j + 1)));
            }
            let delta = if i == j { CycScalar::one(field) } else { CycScalar::zero(field) };
            if h.counit_of(&e[i][j]) != delta {
                return Err(Error::Internal(format!("ε(e{}{}) ≠ δ", i + 1, j + 1)));
            }
            // f(e_ij) = ω^{i−j} e_ij
            let factor = match (i, j) {
                (0, 1) => omega.inv()?,
                (1, 0) => omega.clone(),
                _ => CycScalar::one(field),
            };
            let scaled: Vector = e[i][j].iter().map(|x| &factor * x).collect();
            if f.mul_vec(&e[i][j]) != scaled {
                return Err(Error::Internal(format!("automorphism is not diagonal on e{}{}", i + 1, j + 1)));
            }
        }
    }
    Ok(e)
}

/// Whether a square matrix is a coalgebra automorphism of the subcoalgebra `c`.
pub fn is_coalgebra_automorphism_on(h: &HopfAlgebra, c: &Subspace, f: &Mat) -> bool {
    if !is_subcoalgebra(h, c) {
        return false;
    }
    let ft = f.transpose();
    c.basis().iter().all(|b| {
        let img = f.mul_vec(b);
        c.contains(&img)
            && h.counit_of(&img) == h.counit_of(b)
            && f.mul(&h.comult_matrix(b)).and_then(|m| m.mul(&ft)).map(|m| m == h.comult_matrix(&img)).unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{dual, grouplikes};
    use super::*;
    use crate::algebra::fixtures::s;

    #[test]
    fn adjoint_action_on_sweedler() {
        let t = sweedler_hopf();
        let g = t.basis_vector(1);
        let ad = translation_action(&t, &g, ActionKind::AdLeft).unwrap();
        let expected = Mat::from_rows(
            t.field(),
            4,
            vec![
                vec![s(1), s(0), s(0), s(0)],
                vec![s(0), s(1), s(0), s(0)],
                vec![s(0), s(0), s(-1), s(0)],
                vec![s(0), s(0), s(0), s(-1)],
            ],
        )
        .unwrap();
        assert_eq!(ad.matrix, expected);
        assert!(!ad.is_identity);
        let left_one = translation_action(&t, t.unit(), ActionKind::Left).unwrap();
        assert!(left_one.is_identity);
        assert!(translation_action(&t, &t.basis_vector(2), ActionKind::Left).is_err());
    }

    #[test]
    fn square_of_antipode_on_dual_a4pp() {
        let a = dual(&a4pp_hopf());
        let c = coradical_filtration(&a).unwrap().simple_subcoalgebras.into_iter().find(|c| c.dim() == 4).unwrap();
        let s2 = a.antipode().pow(2);
        assert!(is_coalgebra_automorphism_on(&a, &c, &s2));
        let cb = eigen_comatrix_basis(&a, &c, &s2).unwrap();
        assert_eq!(cb.omega, s(-1));
        assert_eq!(cb.order, Some(2));
        let id = Mat::identity(a.field(), 8);
        assert!(matches!(eigen_comatrix_basis(&a, &c, &id), Err(Error::IdentityAutomorphism)));
    }

    #[test]
    fn left_translation_by_nontrivial_grouplike_fixes_matrix_block() {
        let a = dual(&a4pp_hopf());
        let g = grouplikes(&a).unwrap();
        let act = translation_action(&a, &g.elements[1], ActionKind::Left).unwrap();
        let big = act.stability.iter().find(|e| e.dim == 4).unwrap();
        assert!(big.stable);
        let small: Vec<_> = act.stability.iter().filter(|e| e.dim == 1).collect();
        assert!(small.iter().all(|e| !e.stable && e.image.is_some()));
        let c = coradical_filtration(&a).unwrap().simple_subcoalgebras[2].clone();
        let cb = eigen_comatrix_basis(&a, &c, &act.matrix).unwrap();
        assert_eq!(cb.order, Some(2));
    }
}
