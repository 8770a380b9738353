//! The JSON input document and its conversion into core types.
//!
//! One document shape serves every subcommand; each subcommand states which
//! fields it requires and rejects documents carrying anything else, so a
//! document never silently half-applies.

use serde::Deserialize;

use tercet::{Decomposition, Field, ProjectivePoint, Scalar, TernaryForm};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub field: Option<RawField>,
    pub d: Option<u32>,
    pub form: Option<Vec<String>>,
    pub decomposition: Option<Vec<RawTerm>>,
    pub decomposition2: Option<Vec<RawTerm>>,
    pub points: Option<Vec<[String; 3]>>,
    pub k: Option<usize>,
    pub cap: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum RawField {
    Name(String),
    Prime { prime: u32 },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawTerm {
    pub point: [String; 3],
    pub lambda: String,
}

#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl From<tercet::Error> for InputError {
    fn from(e: tercet::Error) -> Self {
        InputError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, InputError>;

impl InputDocument {
    pub fn parse(json: &str) -> Result<InputDocument> {
        serde_json::from_str(json).map_err(|e| InputError(format!("invalid input document: {e}")))
    }

    /// Rejects any populated field that the subcommand does not consume.
    pub fn restrict(&self, allowed: &[&str]) -> Result<()> {
        let present: &[(&str, bool)] = &[
            ("field", self.field.is_some()),
            ("d", self.d.is_some()),
            ("form", self.form.is_some()),
            ("decomposition", self.decomposition.is_some()),
            ("decomposition2", self.decomposition2.is_some()),
            ("points", self.points.is_some()),
            ("k", self.k.is_some()),
            ("cap", self.cap.is_some()),
        ];
        for (name, is_present) in present {
            if *is_present && !allowed.contains(name) {
                return Err(InputError(format!(
                    "field {name:?} is not used by this subcommand"
                )));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Result<Field> {
        match &self.field {
            None => Ok(Field::Rational),
            Some(RawField::Name(name)) if name == "rational" => Ok(Field::Rational),
            Some(RawField::Name(name)) => Err(InputError(format!(
                "unknown field {name:?}; expected \"rational\" or {{\"prime\": p}}"
            ))),
            Some(RawField::Prime { prime }) => Ok(Field::prime(*prime)?),
        }
    }

    pub fn degree(&self) -> Result<u32> {
        self.d.ok_or_else(|| InputError("missing field \"d\"".into()))
    }

    pub fn form(&self, field: Field) -> Result<Option<TernaryForm>> {
        let Some(coeffs) = &self.form else {
            return Ok(None);
        };
        let d = self.degree()?;
        let parsed: Vec<Scalar> = coeffs
            .iter()
            .map(|s| Scalar::parse(s, field))
            .collect::<std::result::Result<_, _>>()?;
        Ok(Some(TernaryForm::new(d, parsed)?))
    }

    pub fn points(&self, field: Field) -> Result<Vec<ProjectivePoint>> {
        let raw = self
            .points
            .as_ref()
            .ok_or_else(|| InputError("missing field \"points\"".into()))?;
        raw.iter().map(|triple| parse_point(triple, field)).collect()
    }

    pub fn decomposition(&self, field: Field, which: DecSlot) -> Result<Decomposition> {
        let (raw, name) = match which {
            DecSlot::First => (&self.decomposition, "decomposition"),
            DecSlot::Second => (&self.decomposition2, "decomposition2"),
        };
        let raw = raw
            .as_ref()
            .ok_or_else(|| InputError(format!("missing field {name:?}")))?;
        let d = self.degree()?;
        let terms = raw
            .iter()
            .map(|t| {
                Ok((
                    parse_point(&t.point, field)?,
                    Scalar::parse(&t.lambda, field)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition::new(d, terms)?)
    }
}

#[derive(Clone, Copy)]
pub enum DecSlot {
    First,
    Second,
}

fn parse_point(triple: &[String; 3], field: Field) -> Result<ProjectivePoint> {
    let c: Vec<Scalar> = triple
        .iter()
        .map(|s| Scalar::parse(s, field))
        .collect::<std::result::Result<_, _>>()?;
    Ok(ProjectivePoint::new(c[0].clone(), c[1].clone(), c[2].clone())?)
}
