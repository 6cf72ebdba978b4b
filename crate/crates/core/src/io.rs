//! Code description files: a `field <spec>` or `ring <spec>` line followed
//! by a generator matrix in the matrix text format.

use crate::code::{FieldCode, RingCode};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::matrix::{FieldMatrix, RingMatrix};
use crate::ring::RingSpec;

#[derive(Clone, Debug)]
pub enum CodeFile {
    Field(FieldCode),
    Ring(RingCode),
}

impl CodeFile {
    pub fn parse(text: &str) -> Result<CodeFile> {
        let mut lines = text.lines();
        let header = lines
            .by_ref()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .ok_or_else(|| Error::parse("empty code file"))?;
        let rest: Vec<&str> = lines.collect();
        let body = rest.join("\n");
        let (kind, spec) = header
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::parse(format!("expected `field <spec>` or `ring <spec>`, got {header:?}")))?;
        let field: FieldSpec = spec.trim().parse()?;
        match kind {
            "field" => Ok(CodeFile::Field(FieldCode::new(&FieldMatrix::parse(field, &body)?))),
            "ring" => {
                let ring = RingSpec::new(field)?;
                Ok(CodeFile::Ring(RingCode::new(&RingMatrix::parse(ring, &body)?)))
            }
            other => Err(Error::parse(format!("unknown code kind {other:?}"))),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            CodeFile::Field(c) => format!("field {}\n{}", c.spec(), c.generator().to_text()),
            CodeFile::Ring(c) => format!("ring {}\n{}", c.spec().field(), c.generator().to_text()),
        }
    }
}
