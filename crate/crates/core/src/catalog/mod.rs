//! Named Hopf algebras and the verification suites built on them.

mod suites;

pub use suites::{
    locate_taft_subalgebra, unique_a_comatrix, DIM8, ROUND_TRIPS, ROUND_TRIP_SEED, verify_dim8_remark, verify_taft_square, verify_unique_a, Check,
    ComatrixData, SuiteReport, TaftSubalgebra,
};

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{dual, tensor_product, HopfAlgebra, HopfMorphism, MorphismDocument};
use crate::present::hopf_from_source;

#[derive(Clone, Copy, Debug)]
pub enum Recipe {
    Source(&'static str),
    Dual(&'static str),
    Tensor(&'static str, &'static str),
}

/// Invariants an entry must reproduce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub dim: usize,
    pub grouplike_order: usize,
    pub coradical_type: Vec<usize>,
    pub antipode_order: usize,
    pub pointed: bool,
    pub semisimple: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub recipe: Recipe,
    /// Degree cap for completing the presentation.
    pub cap: usize,
    pub expected: Expected,
    pub note: &'static str,
}

const fn exp(dim: usize, g: usize, ty: &'static [usize], ord: usize, pointed: bool, semisimple: bool) -> ExpectedRef {
    ExpectedRef { dim, g, ty, ord, pointed, semisimple }
}

struct ExpectedRef {
    dim: usize,
    g: usize,
    ty: &'static [usize],
    ord: usize,
    pointed: bool,
    semisimple: bool,
}

macro_rules! src {
    ($f:literal) => {
        Recipe::Source(include_str!(concat!("data/", $f, ".hpf")))
    };
}

fn table() -> Vec<(&'static str, Recipe, ExpectedRef, &'static str)> {
    vec![
        ("T", src!("T"), exp(4, 2, &[2], 4, true, false), "Sweedler algebra; basis 1, g, x, gx"),
        ("A2", src!("A2"), exp(8, 2, &[2], 4, true, false), "basis in deglex on g < x < y"),
        ("A4p", src!("A4p"), exp(8, 4, &[4], 4, true, false), "basis g^n x^m"),
        ("A4pp", src!("A4pp"), exp(8, 4, &[4], 4, true, false), "basis 1, g, x, g^2, gx, g^3, g^2x, g^3x"),
        ("A4ppp_i", src!("A4ppp_i"), exp(8, 4, &[4], 4, true, false), "gx = i xg, Δ(x) = x⊗g² + 1⊗x"),
        ("A4ppp_-i", src!("A4ppp_-i"), exp(8, 4, &[4], 4, true, false), "gx = −i xg, Δ(x) = x⊗g² + 1⊗x"),
        ("A22", src!("A22"), exp(8, 4, &[4], 4, true, false), "basis in deglex on g < h < x"),
        ("A", Recipe::Dual("A4pp"), exp(8, 2, &[2, 1], 4, false, false), "dual of A4pp on the dual basis"),
        ("TT", Recipe::Tensor("T", "T"), exp(16, 4, &[4], 4, true, false), "T ⊗ T, index 4i + j"),
        ("kC2", src!("kC2"), exp(2, 2, &[2], 1, true, true), ""),
        ("kC4", src!("kC4"), exp(4, 4, &[4], 2, true, true), ""),
        ("kC8", src!("kC8"), exp(8, 8, &[8], 2, true, true), ""),
        ("kC16", src!("kC16"), exp(16, 16, &[16], 2, true, true), "over cyclotomic(16)"),
        ("kC2xC2", src!("kC2xC2"), exp(4, 4, &[4], 1, true, true), ""),
        ("kC8xC2", src!("kC8xC2"), exp(16, 16, &[16], 2, true, true), ""),
        ("kC4xC4", src!("kC4xC4"), exp(16, 16, &[16], 2, true, true), ""),
        ("kC4xC2xC2", src!("kC4xC2xC2"), exp(16, 16, &[16], 2, true, true), ""),
        ("kC2xC2xC2xC2", src!("kC2xC2xC2xC2"), exp(16, 16, &[16], 1, true, true), ""),
    ]
}

fn entries() -> &'static Vec<CatalogEntry> {
    static CELL: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CELL.get_or_init(|| {
        table()
            .into_iter()
            .map(|(name, recipe, e, note)| CatalogEntry {
                name,
                recipe,
                cap: 2 * e.dim,
                expected: Expected {
                    dim: e.dim,
                    grouplike_order: e.g,
                    coradical_type: e.ty.to_vec(),
                    antipode_order: e.ord,
                    pointed: e.pointed,
                    semisimple: e.semisimple,
                },
                note,
            })
            .collect()
    })
}

/// Compares the entry's fingerprint with its expected invariants.
pub fn verify_entry(name: &str) -> Result<Option<String>> {
    let entry = catalog_entry(name)?;
    let fp = crate::hopf::fingerprint(&*catalog_get(name)?)?;
    let got = Expected {
        dim: fp.dim,
        grouplike_order: fp.grouplike_order,
        coradical_type: fp.coradical_type,
        antipode_order: fp.antipode_order,
        pointed: fp.pointed,
        semisimple: fp.semisimple,
    };
    Ok((got != entry.expected).then(|| format!("{name}: expected {:?}, got {got:?}", entry.expected)))
}

/// Base entry names; every name also has a dual "NAME*".
pub fn catalog_list() -> Vec<&'static str> {
    entries().iter().map(|e| e.name).collect()
}

pub fn catalog_entry(name: &str) -> Result<&'static CatalogEntry> {
    entries().iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownCatalogEntry(name.into()))
}

fn cache() -> &'static Mutex<BTreeMap<String, Arc<HopfAlgebra>>> {
    static CELL: OnceLock<Mutex<BTreeMap<String, Arc<HopfAlgebra>>>> = OnceLock::new();
    CELL.get_or_init(|| Mutex::new(BTreeMap::new()))
}

fn build(name: &str) -> Result<HopfAlgebra> {
    if let Some(base) = name.strip_suffix('*') {
        return Ok(dual(&*catalog_get(base)?));
    }
    let entry = catalog_entry(name)?;
    let h = match entry.recipe {
        Recipe::Source(src) => hopf_from_source(src, entry.cap)?,
        Recipe::Dual(base) => dual(&*catalog_get(base)?),
        Recipe::Tensor(a, b) => tensor_product(&*catalog_get(a)?, &*catalog_get(b)?)?,
    };
    if h.dim() != entry.expected.dim {
        return Err(Error::Internal(format!("{name} built with dimension {}, expected {}", h.dim(), entry.expected.dim)));
    }
    Ok(h)
}

/// The named Hopf algebra, fully verified when built; "NAME*" gives the dual.
pub fn catalog_get(name: &str) -> Result<Arc<HopfAlgebra>> {
    if let Some(h) = cache().lock().expect("catalog cache").get(name) {
        return Ok(h.clone());
    }
    let h = Arc::new(build(name)?);
    cache().lock().expect("catalog cache").insert(name.to_string(), h.clone());
    Ok(h)
}

/// Stored isomorphisms between catalog entries, as morphism documents.
const CERTIFIED: &[&str] = &[
    include_str!("data/iso/A2_A2dual.json"),
    include_str!("data/iso/A4ppp_i_A4ppp_-i.json"),
    include_str!("data/iso/A4ppp_i_A4pdual.json"),
    include_str!("data/iso/A22_A22dual.json"),
    include_str!("data/iso/T_Tdual.json"),
];

/// Every stored isomorphism, re-verified (all four morphism checks plus invertibility).
pub fn certified_isomorphisms() -> Result<Vec<HopfMorphism>> {
    CERTIFIED
        .iter()
        .map(|text| {
            let doc = MorphismDocument::parse(text)?;
            let f = doc.load(catalog_get(&doc.source)?, catalog_get(&doc.target)?)?;
            if !f.is_bijective() {
                return Err(Error::InvalidMorphism(format!("{} → {} is not bijective", doc.source, doc.target)));
            }
            Ok(f)
        })
        .collect()
}

/// The documents behind `certified_isomorphisms`.
pub fn certified_documents() -> Result<Vec<MorphismDocument>> {
    CERTIFIED.iter().map(|t| MorphismDocument::parse(t)).collect()
}

#[cfg(test)]
mod tests;
