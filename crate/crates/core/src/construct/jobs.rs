//! Declarative job files: one construction per line,
//! `recipe key=value ...`, with `#` comments.
//!
//! Sequences are comma separated and matrix rows are separated by `;`, so
//! `matrix=1,v;v,2` is a 2 x 2 matrix. Weighing matrices are named by
//! `w=`: a bundled fixture (`w6_4`, `h4`, `w14_9`), a Paley construction
//! (`paley_hadamard:q`, `paley_conference:q`, `paley_skew:q`,
//! `doubled_paley_skew:q`), or a path to a matrix file.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use super::bounds::{selfdual_to_lcd_bound, BoundEntry};
use super::{
    bordered_circulant, double_circulant, lcd_expand, lift_to_r, raw_systematic, skew_weighing_code, symmetric_code,
    weighing_code, BuiltCode, ConstructionReport, Expansion,
};
use crate::code::FieldCode;
use crate::cyclic::mds_lcd_generator;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::matrix::{Matrix, Scalar};
use crate::ring::RingSpec;
use crate::weighing::{paley_conference, paley_hadamard, paley_skew_conference, skew_double, WeighingMatrix};

/// One parsed job line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub line: usize,
    pub recipe: String,
    pub params: BTreeMap<String, String>,
}

/// Report of the cyclic MDS LCD construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MdsReport {
    pub q: u32,
    pub mu: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_exact: bool,
    pub generator: String,
    pub self_reciprocal: bool,
    pub lcd: bool,
    pub singleton: usize,
}

pub fn mds_report(q: u32, mu: u32, budget: u64) -> Result<MdsReport> {
    let m = mds_lcd_generator(q, mu, budget)?;
    Ok(MdsReport {
        q,
        mu,
        n: m.code.n(),
        k: m.code.k(),
        d: m.distance.d,
        d_exact: m.distance.exact,
        generator: m.generator.to_string(),
        self_reciprocal: m.generator.is_self_reciprocal_up_to_scalar()?,
        lcd: m.code.is_lcd()?,
        singleton: m.code.n() - m.code.k() + 1,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum JobOutput {
    Construction(ConstructionReport),
    Mds(MdsReport),
    Bound(BoundEntry),
}

pub fn parse_jobs(text: &str) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let recipe = tokens.next().unwrap_or_default().to_string();
        let mut params = BTreeMap::new();
        for tok in tokens {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::parse(format!("line {}: expected key=value, got {tok:?}", i + 1)))?;
            params.insert(k.to_string(), v.to_string());
        }
        jobs.push(Job { line: i + 1, recipe, params });
    }
    Ok(jobs)
}

impl Job {
    fn get(&self, key: &str) -> Result<&str> {
        self.params
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::parse(format!("line {}: {} needs {key}=", self.line, self.recipe)))
    }

    fn flag(&self, key: &str) -> bool {
        self.params.get(key).is_some_and(|v| v == "true" || v == "1")
    }

    fn number(&self, key: &str) -> Result<u32> {
        self.get(key)?.parse().map_err(|_| Error::parse(format!("line {}: {key} must be a number", self.line)))
    }

    fn field(&self) -> Result<FieldSpec> {
        self.get("field")?.parse()
    }
}

pub fn parse_seq<T: Scalar>(spec: T::Spec, s: &str) -> Result<Vec<T>> {
    s.split(',').map(|t| T::parse_in(spec, t.trim())).collect()
}

pub fn parse_rows<T: Scalar>(spec: T::Spec, s: &str) -> Result<Matrix<T>> {
    let rows = s.split(';').map(|r| parse_seq(spec, r)).collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(spec, &rows)
}

/// Resolves a weighing-matrix name; relative paths are taken from `base`.
pub fn weighing_source(name: &str, base: &Path) -> Result<WeighingMatrix> {
    let num = |s: &str| s.parse::<u32>().map_err(|_| Error::parse(format!("bad order in {name:?}")));
    match name.split_once(':') {
        Some(("paley_hadamard", q)) => paley_hadamard(num(q)?),
        Some(("paley_conference", q)) => paley_conference(num(q)?),
        Some(("paley_skew", q)) => paley_skew_conference(num(q)?),
        Some(("doubled_paley_skew", q)) => skew_double(&paley_skew_conference(num(q)?)?),
        _ => match name {
            "w6_4" => Ok(crate::fixtures::w6_4()),
            "h4" => Ok(crate::fixtures::h4()),
            "w14_9" => Ok(crate::fixtures::w14_9()),
            path => {
                let text = std::fs::read_to_string(base.join(path))
                    .map_err(|e| Error::parse(format!("cannot read {path}: {e}")))?;
                WeighingMatrix::parse(&text)
            }
        },
    }
}

fn generic_recipe<T: Scalar>(job: &Job, spec: T::Spec, budget: u64) -> Result<ConstructionReport>
where
    for<'a> BuiltCode: From<&'a Matrix<T>>,
{
    let elem = |key: &str| -> Result<T> { T::parse_in(spec, job.get(key)?) };
    let raw = job.flag("raw");
    match job.recipe.as_str() {
        "double_circulant" => double_circulant(elem("lambda")?, &parse_seq(spec, job.get("row")?)?, raw, budget),
        "bordered_circulant" => bordered_circulant(
            elem("alpha")?,
            elem("omega")?,
            elem("lambda")?,
            &parse_seq(spec, job.get("row")?)?,
            raw,
            budget,
        ),
        "symmetric" => symmetric_code(&parse_rows(spec, job.get("matrix")?)?, budget),
        "systematic" => raw_systematic(&parse_rows(spec, job.get("matrix")?)?, budget),
        "lcd_expand" => {
            lcd_expand(&parse_rows(spec, job.get("matrix")?)?, job.get("case")?.parse::<Expansion>()?, budget)
        }
        other => Err(Error::parse(format!("line {}: unknown recipe {other:?}", job.line))),
    }
}

/// Runs one job; file references resolve against `base`.
pub fn run_job(job: &Job, base: &Path, budget: u64) -> Result<JobOutput> {
    let construction = |r: Result<ConstructionReport>| r.map(JobOutput::Construction);
    match job.recipe.as_str() {
        "weighing" => {
            let f = job.field()?;
            let w = weighing_source(job.get("w")?, base)?;
            construction(weighing_code(f.parse_elem(job.get("alpha")?)?, &w, budget))
        }
        "skew_weighing" => {
            let f = job.field()?;
            let w = weighing_source(job.get("w")?, base)?;
            construction(skew_weighing_code(
                f.parse_elem(job.get("alpha")?)?,
                f.parse_elem(job.get("beta")?)?,
                &w,
                budget,
            ))
        }
        "lift" => {
            let f = job.field()?;
            construction(lift_to_r(&FieldCode::new(&parse_rows(f, job.get("matrix")?)?), budget))
        }
        "mds" => Ok(JobOutput::Mds(mds_report(job.number("q")?, job.number("mu")?, budget)?)),
        "selfdual_bound" => {
            let p = match job.params.get("p").map(String::as_str) {
                Some("golay24") => crate::fixtures::golay24().generator().clone(),
                _ => parse_rows(job.field()?, job.get("matrix")?)?,
            };
            Ok(JobOutput::Bound(selfdual_to_lcd_bound(&p, budget)?))
        }
        _ => {
            if job.params.contains_key("ring") {
                let ring = RingSpec::new(job.get("ring")?.parse()?)?;
                construction(generic_recipe::<crate::ring::RingElem>(job, ring, budget))
            } else {
                construction(generic_recipe::<crate::gf::FieldElem>(job, job.field()?, budget))
            }
        }
    }
}
