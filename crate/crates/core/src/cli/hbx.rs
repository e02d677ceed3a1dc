use serde::{Deserialize, Serialize};

use crate::algebra::StructAlgebra;
use crate::cyclo::{CycScalar, FieldSpec};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Vector};
use crate::hopf::{from_parts, CoRow, HopfAlgebra};

pub const HBX_VERSION: u32 = 1;

type Text = Vec<String>;

/// `.hbx` document: structure tensors in sparse form, scalars as coordinate strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HbxDocument {
    pub version: u32,
    pub field: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Vec<Text>,
    /// [i, j, k, c]: eᵢeⱼ has coefficient c on e_k.
    pub mult: Vec<(usize, usize, usize, Text)>,
    /// [k, i, j, c]: Δ(e_k) has coefficient c on eᵢ⊗eⱼ.
    pub comult: Vec<(usize, usize, usize, Text)>,
    pub counit: Vec<Text>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<Text>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Structure read from a document before any axiom is checked.
pub struct RawHopf {
    pub alg: StructAlgebra,
    pub comult: Vec<CoRow>,
    pub counit: Vector,
    pub antipode: Option<Mat>,
    pub labels: Vec<String>,
}

/// "cyclotomic(N)" or a bare "N".
pub fn parse_field(text: &str) -> Result<FieldSpec> {
    let t = text.trim();
    let inner = t.strip_prefix("cyclotomic(").and_then(|r| r.strip_suffix(')')).unwrap_or(t);
    let n: u32 = inner.trim().parse().map_err(|_| Error::InvalidFieldText(text.into()))?;
    FieldSpec::new(n)
}

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

impl HbxDocument {
    pub fn from_hopf(h: &HopfAlgebra, note: Option<String>) -> HbxDocument {
        HbxDocument {
            version: HBX_VERSION,
            field: h.field().to_string(),
            dim: h.dim(),
            labels: h.labels().to_vec(),
            unit: h.unit().iter().map(CycScalar::to_text).collect(),
            mult: h.alg().entries().map(|(i, j, k, c)| (i, j, k, c.to_text())).collect(),
            comult: h.comult_entries().map(|(k, i, j, c)| (k, i, j, c.to_text())).collect(),
            counit: h.counit().iter().map(CycScalar::to_text).collect(),
            antipode: Some(h.antipode().row_vectors().iter().map(|r| r.iter().map(CycScalar::to_text).collect()).collect()),
            note,
        }
    }

    pub fn parse(text: &str) -> Result<HbxDocument> {
        serde_json::from_str(text).map_err(|e| doc_err(e.to_string()))
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("hbx document serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("json prints");
        s.push('\n');
        s
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        parse_field(&self.field)
    }

    /// Shape checks and scalar parsing; `target` (if larger) lifts the data.
    pub fn raw(&self, target: Option<FieldSpec>) -> Result<RawHopf> {
        if self.version != HBX_VERSION {
            return Err(doc_err(format!("unsupported hbx version {}", self.version)));
        }
        let declared = self.field_spec()?;
        let field = match target {
            Some(t) if t.conductor() < declared.conductor() => {
                return Err(Error::FieldMismatch(declared.conductor(), t.conductor()))
            }
            Some(t) => t,
            None => declared,
        };
        let d = self.dim;
        let scalar = |t: &Text| -> Result<CycScalar> {
            let c = CycScalar::from_text(t, Some(declared))?;
            Ok(c.lift(field))
        };
        let vector = |items: &[Text], what: &str| -> Result<Vector> {
            if items.len() != d {
                return Err(doc_err(format!("{what} has length {}, expected {d}", items.len())));
            }
            items.iter().map(scalar).collect()
        };
        if self.labels.len() != d {
            return Err(doc_err(format!("{} labels for dimension {d}", self.labels.len())));
        }
        let unit = vector(&self.unit, "unit")?;
        let counit = vector(&self.counit, "counit")?;
        let mut mult = Vec::with_capacity(self.mult.len());
        for (i, j, k, c) in &self.mult {
            if *i >= d || *j >= d || *k >= d {
                return Err(doc_err(format!("mult index [{i}, {j}, {k}] out of range")));
            }
            mult.push((*i, *j, *k, scalar(c)?));
        }
        let mut comult = vec![CoRow::new(); d];
        for (k, i, j, c) in &self.comult {
            if *i >= d || *j >= d || *k >= d {
                return Err(doc_err(format!("comult index [{k}, {i}, {j}] out of range")));
            }
            comult[*k].push((*i, *j, scalar(c)?));
        }
        let antipode = match &self.antipode {
            None => None,
            Some(rows) => {
                if rows.len() != d {
                    return Err(doc_err("antipode must be dim × dim"));
                }
                let rows = rows.iter().map(|r| vector(r, "antipode row")).collect::<Result<Vec<_>>>()?;
                Some(Mat::from_rows(field, d, rows)?)
            }
        };
        let alg = StructAlgebra::new(field, d, mult, unit)?;
        Ok(RawHopf { alg, comult, counit, antipode, labels: self.labels.clone() })
    }

    /// Full verification: algebra, bialgebra and antipode axioms.
    pub fn to_hopf(&self, target: Option<FieldSpec>) -> Result<HopfAlgebra> {
        self.raw(target)?.verify()
    }
}

impl RawHopf {
    pub fn verify(self) -> Result<HopfAlgebra> {
        from_parts(self.alg, self.comult, self.counit, self.antipode)?.with_labels(self.labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_get;

    #[test]
    fn round_trip_is_byte_identical() {
        for name in ["T", "A4pp", "A", "kC4"] {
            let h = catalog_get(name).unwrap();
            let text = HbxDocument::from_hopf(&h, Some(name.into())).to_json();
            let doc = HbxDocument::parse(&text).unwrap();
            assert_eq!(doc.to_json(), text);
            let back = doc.to_hopf(None).unwrap();
            assert!(back.same_tensors(&h));
            assert_eq!(HbxDocument::from_hopf(&back, Some(name.into())).to_json(), text);
        }
    }

    #[test]
    fn keys_are_sorted() {
        let text = HbxDocument::from_hopf(&catalog_get("kC2").unwrap(), None).to_json();
        let keys: Vec<&str> = text
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(!text.contains("note"));
    }

    #[test]
    fn out_of_range_index_is_a_document_error() {
        let mut doc = HbxDocument::from_hopf(&catalog_get("kC2").unwrap(), None);
        doc.mult[0].2 = 7;
        assert!(matches!(doc.to_hopf(None), Err(Error::Document(_))));
    }

    #[test]
    fn lifting_and_refusing_fields() {
        let doc = HbxDocument::from_hopf(&catalog_get("T").unwrap(), None);
        let h = doc.to_hopf(Some(FieldSpec::new(16).unwrap())).unwrap();
        assert_eq!(h.field().conductor(), 16);
        assert!(matches!(doc.to_hopf(Some(FieldSpec::new(4).unwrap())), Err(Error::FieldMismatch(8, 4))));
        assert_eq!(parse_field("cyclotomic(32)").unwrap().conductor(), 32);
        assert!(parse_field("cyclotomic(6)").is_err());
    }

    #[test]
    fn missing_antipode_is_solved() {
        let mut doc = HbxDocument::from_hopf(&catalog_get("T").unwrap(), None);
        let s = doc.antipode.take();
        let h = doc.to_hopf(None).unwrap();
        assert_eq!(HbxDocument::from_hopf(&h, None).antipode, s);
    }
}
