use serde::{Deserialize, Serialize};

use super::datum::CleftDatum;
use super::taft::taft;
use crate::algebra::StructAlgebra;
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::exactla::{Mat, Vector};

type Text = Vec<String>;

/// On-disk form of a datum: matrices row-major, scalars as coordinate strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DatumDocument {
    /// "T" for the Sweedler algebra, otherwise a reference the caller resolves.
    pub base: String,
    #[serde(rename = "F")]
    pub f: Vec<Vec<Text>>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<Text>>,
    pub alpha: Vec<Text>,
    pub beta: Vec<Text>,
    pub gamma: Vec<Text>,
}

fn vec_text(v: &[CycScalar]) -> Vec<Text> {
    v.iter().map(|c| c.to_text()).collect()
}

fn parse_vec(items: &[Text]) -> Result<Vector> {
    items.iter().map(|t| CycScalar::from_text(t, None)).collect()
}

fn parse_mat(rows: &[Vec<Text>], n: usize) -> Result<Vec<Vector>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Document(format!("datum matrices must be {n}×{n}")));
    }
    rows.iter().map(|r| parse_vec(r)).collect()
}

impl DatumDocument {
    pub fn from_datum(dt: &CleftDatum, base: &str) -> DatumDocument {
        let mat = |m: &Mat| m.row_vectors().iter().map(|r| vec_text(r)).collect();
        DatumDocument {
            base: base.into(),
            f: mat(&dt.f),
            d: mat(&dt.d),
            alpha: vec_text(&dt.alpha),
            beta: vec_text(&dt.beta),
            gamma: vec_text(&dt.gamma),
        }
    }

    /// Resolves the base ("T" built in, anything else through `resolve`) and parses the tensors.
    pub fn to_datum(
        &self,
        resolve: impl Fn(&str) -> Result<(StructAlgebra, Option<Vector>)>,
    ) -> Result<CleftDatum> {
        let (base, counit) = if self.base == "T" {
            (taft().alg().clone(), Some(taft().counit().clone()))
        } else {
            resolve(&self.base)?
        };
        let n = base.dim();
        let f = parse_mat(&self.f, n)?;
        let d = parse_mat(&self.d, n)?;
        let alpha = parse_vec(&self.alpha)?;
        let beta = parse_vec(&self.beta)?;
        let gamma = parse_vec(&self.gamma)?;
        if alpha.len() != n || beta.len() != n || gamma.len() != n {
            return Err(Error::Document(format!("datum vectors must have length {n}")));
        }
        let mut field = base.field();
        for c in f.iter().chain(&d).flatten().chain(&alpha).chain(&beta).chain(&gamma) {
            field = field.join(c.field());
        }
        let lift = |v: Vector| -> Vector { v.into_iter().map(|c| c.lift(field)).collect() };
        let to_mat = |rows: Vec<Vector>| Mat::from_rows(field, n, rows.into_iter().map(lift).collect());
        Ok(CleftDatum {
            base: base.lift(field),
            counit: counit.map(lift),
            f: to_mat(f)?,
            d: to_mat(d)?,
            alpha: lift(alpha),
            beta: lift(beta),
            gamma: lift(gamma),
        })
    }
}

pub fn datum_to_json(dt: &CleftDatum, base: &str) -> String {
    let doc = DatumDocument::from_datum(dt, base);
    let value = serde_json::to_value(&doc).expect("datum document serializes");
    serde_json::to_string_pretty(&value).expect("json value prints")
}

pub fn datum_from_json(
    text: &str,
    resolve: impl Fn(&str) -> Result<(StructAlgebra, Option<Vector>)>,
) -> Result<CleftDatum> {
    let doc: DatumDocument = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    doc.to_datum(resolve)
}

