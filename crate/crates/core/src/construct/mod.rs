//! Code constructions: weighing-matrix LCD codes, lifts to `R`, double and
//! bordered λ-circulant codes, symmetric `[I | A]` codes and LCD expansions.
//!
//! Every recipe returns a [`ConstructionReport`] whose verdicts are computed
//! from the resulting code. Where a recipe's hypotheses promise a verdict and
//! the computed one differs, the report carries a flag.

pub mod bounds;
pub mod jobs;
pub mod squares;
pub mod tables;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::code::{Analysis, FieldCode, RingAnalysis, RingCode};
use crate::error::{Error, Result};
use crate::gf::FieldElem;
use crate::io::CodeFile;
use crate::matrix::{lambda_circulant, lambda_circulant_unchecked, FieldMatrix, Matrix, RingMatrix, Scalar};
use crate::weighing::WeighingMatrix;

pub use squares::{four_squares_zero, sqrt_minus_one, two_squares_minus_one};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuiltCode {
    Field(FieldCode),
    Ring(RingCode),
}

impl From<&FieldMatrix> for BuiltCode {
    fn from(g: &FieldMatrix) -> Self {
        BuiltCode::Field(FieldCode::new(g))
    }
}

impl From<&RingMatrix> for BuiltCode {
    fn from(g: &RingMatrix) -> Self {
        BuiltCode::Ring(RingCode::new(g))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CodeAnalysis {
    Field(Analysis),
    Ring(RingAnalysis),
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub recipe: String,
    pub params: BTreeMap<String, String>,
    pub analysis: CodeAnalysis,
    pub flags: Vec<String>,
    /// The generator in the code file format.
    pub code_file: String,
    #[serde(skip)]
    pub code: BuiltCode,
}

impl ConstructionReport {
    pub fn new(recipe: &str, params: &[(&str, String)], code: BuiltCode, budget: u64) -> Result<ConstructionReport> {
        let (analysis, code_file) = match &code {
            BuiltCode::Field(c) => (CodeAnalysis::Field(c.analyze(budget)?), CodeFile::Field(c.clone()).to_text()),
            BuiltCode::Ring(c) => (CodeAnalysis::Ring(c.analyze(budget)?), CodeFile::Ring(c.clone()).to_text()),
        };
        let mut flags = Vec::new();
        let distance_known = match &analysis {
            CodeAnalysis::Field(a) => a.d_exact,
            CodeAnalysis::Ring(a) => a.d_exact,
        };
        if !distance_known {
            flags.push("distance is an upper bound (enumeration budget exceeded)".into());
        }
        Ok(ConstructionReport {
            recipe: recipe.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            analysis,
            flags,
            code_file,
            code,
        })
    }

    pub fn lcd(&self) -> bool {
        match &self.analysis {
            CodeAnalysis::Field(a) => a.lcd,
            CodeAnalysis::Ring(a) => a.lcd,
        }
    }

    pub fn self_dual(&self) -> bool {
        match &self.analysis {
            CodeAnalysis::Field(a) => a.self_dual,
            CodeAnalysis::Ring(a) => a.self_dual,
        }
    }

    pub fn formally_self_dual(&self) -> Option<bool> {
        match &self.analysis {
            CodeAnalysis::Field(a) => a.formally_self_dual,
            CodeAnalysis::Ring(a) => a.formally_self_dual,
        }
    }

    /// Parameters `[n, k, d]` over `F_q`: the code itself, or its Gray image.
    pub fn field_params(&self) -> (usize, usize, Option<usize>) {
        let a = match &self.analysis {
            CodeAnalysis::Field(a) => a,
            CodeAnalysis::Ring(a) => &a.gray,
        };
        (a.n, a.k, a.d)
    }

    pub fn d_exact(&self) -> bool {
        match &self.analysis {
            CodeAnalysis::Field(a) => a.d_exact,
            CodeAnalysis::Ring(a) => a.d_exact,
        }
    }

    fn expect(&mut self, holds: bool, msg: &str) {
        if !holds {
            self.flags.push(msg.to_string());
        }
    }

    fn expect_fsd(&mut self, msg: &str) {
        if self.formally_self_dual() == Some(false) {
            self.flags.push(msg.to_string());
        }
    }
}

fn weighing_generator(alpha: FieldElem, beta: FieldElem, w: &WeighingMatrix) -> Result<FieldMatrix> {
    let spec = alpha.field();
    let right = w.to_field(spec).add(&FieldMatrix::identity(spec, w.n()).scale(beta))?;
    FieldMatrix::identity(spec, w.n()).scale(alpha).hstack(&right)
}

/// `[αI | W]` over `F_q`: LCD when `α² + k ≠ 0`, self-dual when `α² + k = 0`.
pub fn weighing_code(alpha: FieldElem, w: &WeighingMatrix, budget: u64) -> Result<ConstructionReport> {
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    let spec = alpha.field();
    let g = weighing_generator(alpha, spec.zero(), w)?;
    let mut report = ConstructionReport::new(
        "weighing",
        &[
            ("field", spec.to_string()),
            ("alpha", alpha.to_string()),
            ("n", w.n().to_string()),
            ("k", w.k().to_string()),
        ],
        (&g).into(),
        budget,
    )?;
    if (alpha * alpha + spec.from_int(w.k() as i64)).is_zero() {
        let sd = report.self_dual();
        report.expect(sd, "alpha^2 + k = 0 but the code is not self-dual");
    } else {
        let lcd = report.lcd();
        report.expect(lcd, "alpha^2 + k != 0 but the code is not LCD");
    }
    Ok(report)
}

/// `[αI | βI + W]` for skew `W`: LCD when `α² + β² + k ≠ 0`. With `β = 0`
/// this is [`weighing_code`].
pub fn skew_weighing_code(
    alpha: FieldElem,
    beta: FieldElem,
    w: &WeighingMatrix,
    budget: u64,
) -> Result<ConstructionReport> {
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    if !w.is_skew() {
        return Err(Error::NotSkew);
    }
    if beta.is_zero() {
        let mut report = weighing_code(alpha, w, budget)?;
        report.params.insert("beta".into(), "0".into());
        report.flags.push("beta = 0: built as [alpha I | W]".into());
        return Ok(report);
    }
    let spec = alpha.field();
    let g = weighing_generator(alpha, beta, w)?;
    let mut report = ConstructionReport::new(
        "skew_weighing",
        &[
            ("field", spec.to_string()),
            ("alpha", alpha.to_string()),
            ("beta", beta.to_string()),
            ("n", w.n().to_string()),
            ("k", w.k().to_string()),
        ],
        (&g).into(),
        budget,
    )?;
    if !(alpha * alpha + beta * beta + spec.from_int(w.k() as i64)).is_zero() {
        let lcd = report.lcd();
        report.expect(lcd, "alpha^2 + beta^2 + k != 0 but the code is not LCD");
    }
    Ok(report)
}

/// The code `η₁C ⊕ η₂C ⊕ η₃C` over `R`; LCD exactly when `C` is.
pub fn lift_to_r(code: &FieldCode, budget: u64) -> Result<ConstructionReport> {
    let lifted = RingCode::lift(code)?;
    let mut report =
        ConstructionReport::new("lift", &[("field", code.spec().to_string())], BuiltCode::Ring(lifted), budget)?;
    let lcd = code.is_lcd()?;
    report.expect(report.lcd() == lcd, "lift changed the LCD verdict");
    report.expect(report.self_dual() == code.is_self_dual(), "lift changed the self-dual verdict");
    Ok(report)
}

/// `[I | M]`.
pub fn systematic<T: Scalar>(m: &Matrix<T>) -> Result<Matrix<T>> {
    Matrix::identity(m.spec(), m.rows()).hstack(m)
}

/// `[I | M]` with `M` the λ-circulant on `first_row`; requires a unit `λ`.
pub fn double_circulant_generator<T: Scalar>(lambda: T, first_row: &[T]) -> Result<Matrix<T>> {
    systematic(&lambda_circulant(lambda, first_row)?)
}

/// The `n x n` block with corner `α`, border `ω` and core `M`.
pub fn bordered_block<T: Scalar>(alpha: T, omega: T, m: &Matrix<T>) -> Result<Matrix<T>> {
    if !m.is_square() {
        return Err(Error::NonSquare(m.rows(), m.cols()));
    }
    let n = m.rows() + 1;
    Ok(Matrix::from_fn(m.spec(), n, n, |i, j| match (i, j) {
        (0, 0) => alpha,
        (0, _) | (_, 0) => omega,
        _ => m[(i - 1, j - 1)],
    }))
}

/// `[I | bordered block]` over a λ-circulant core; requires a unit `λ`.
pub fn bordered_circulant_generator<T: Scalar>(alpha: T, omega: T, lambda: T, first_row: &[T]) -> Result<Matrix<T>> {
    systematic(&bordered_block(alpha, omega, &lambda_circulant(lambda, first_row)?)?)
}

/// `[I | A]` for symmetric `A`.
pub fn symmetric_generator<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    if !a.is_square() {
        return Err(Error::NonSquare(a.rows(), a.cols()));
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    systematic(a)
}

fn join<T: Scalar>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn rows_param<T: Scalar>(m: &Matrix<T>) -> String {
    (0..m.rows()).map(|i| join(m.row(i))).collect::<Vec<_>>().join(";")
}

fn spec_param<T: Scalar>(spec: T::Spec) -> (&'static str, String) {
    (T::KIND, T::base_field(spec).to_string())
}

fn report_for<T: Scalar>(
    recipe: &str,
    params: Vec<(&str, String)>,
    g: &Matrix<T>,
    budget: u64,
) -> Result<ConstructionReport>
where
    for<'a> BuiltCode: From<&'a Matrix<T>>,
{
    let mut all = vec![spec_param::<T>(g.spec())];
    all.extend(params);
    ConstructionReport::new(recipe, &all, g.into(), budget)
}

/// Double λ-circulant code `[I | M]`. Non-unit `λ` is rejected unless `raw`
/// is set, in which case the code is built and flagged.
pub fn double_circulant<T: Scalar>(lambda: T, first_row: &[T], raw: bool, budget: u64) -> Result<ConstructionReport>
where
    for<'a> BuiltCode: From<&'a Matrix<T>>,
{
    let unit = lambda.is_unit();
    let m = if raw { lambda_circulant_unchecked(lambda, first_row) } else { lambda_circulant(lambda, first_row)? };
    let g = systematic(&m)?;
    let mut report =
        report_for("double_circulant", vec![("lambda", lambda.to_string()), ("row", join(first_row))], &g, budget)?;
    if unit {
        report.expect_fsd("unit lambda but the code is not formally self-dual");
    } else {
        report.flags.push("lambda is not a unit".into());
    }
    Ok(report)
}

/// Bordered double λ-circulant code. Non-unit `λ` as in [`double_circulant`].
pub fn bordered_circulant<T: Scalar>(
    alpha: T,
    omega: T,
    lambda: T,
    first_row: &[T],
    raw: bool,
    budget: u64,
) -> Result<ConstructionReport>
where
    for<'a> BuiltCode: From<&'a Matrix<T>>,
{
    let unit = lambda.is_unit();
    let m = if raw { lambda_circulant_unchecked(lambda, first_row) } else { lambda_circulant(lambda, first_row)? };
    let g = systematic(&bordered_block(alpha, omega, &m)?)?;
    let mut report = report_for(
        "bordered_circulant",
        vec![
            ("alpha", alpha.to_string()),
            ("omega", omega.to_string()),
            ("lambda", lambda.to_string()),
            ("row", join(first_row)),
        ],
        &g,
        budget,
    )?;
    if unit {
        report.expect_fsd("unit lambda but the code is not formally self-dual");
    } else {
        report.flags.push("lambda is not a unit".into());
    }
    Ok(report)
}

/// `[I | A]` for symmetric `A`.
pub fn symmetric_code<T: Scalar>(a: &Matrix<T>, budget: u64) -> Result<ConstructionReport>
where
    for<'a> BuiltCode: From<&'a Matrix<T>>,
{
    let g = symmetric_generator(a)?;
    let mut report = report_for("symmetric", vec![("matrix", rows_param(a))], &g, budget)?;
    report.expect_fsd("A symmetric but the code is not formally self-dual");
    Ok(report)
}

/// `[I | M]` for an arbitrary square `M`.
pub fn raw_systematic<T: Scalar>(m: &Matrix<T>, budget: u64) -> Result<ConstructionReport>
where
    for<'a> BuiltCode: From<&'a Matrix<T>>,
{
    if !m.is_square() {
        return Err(Error::NonSquare(m.rows(), m.cols()));
    }
    report_for("systematic", vec![("matrix", rows_param(m))], &systematic(m)?, budget)
}

/// LCD expansions of `G = [I | P]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expansion {
    /// `[I | P | αP]`, `α² + 1 = 0`.
    SquareRoot,
    /// `[I | P | αP | βP]`, `α² + β² + 1 = 0`.
    TwoSquares,
    /// `[I | αP | βP | γP | δP]`, `α² + β² + γ² + δ² = 0`.
    FourSquares,
    /// `[I | P | αP | βP | δP | γP]` as displayed, with the same scalars.
    FourSquaresLiteral,
}

impl std::str::FromStr for Expansion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Expansion> {
        match s {
            "i" => Ok(Expansion::SquareRoot),
            "ii" => Ok(Expansion::TwoSquares),
            "iii" => Ok(Expansion::FourSquares),
            "iii-literal" => Ok(Expansion::FourSquaresLiteral),
            _ => Err(Error::parse(format!("unknown expansion case {s:?} (expected i, ii, iii, iii-literal)"))),
        }
    }
}

impl Expansion {
    fn label(self) -> &'static str {
        match self {
            Expansion::SquareRoot => "i",
            Expansion::TwoSquares => "ii",
            Expansion::FourSquares => "iii",
            Expansion::FourSquaresLiteral => "iii-literal",
        }
    }
}

/// Splits `G = [I | P]`, failing when the left block is not the identity.
pub fn split_systematic<T: Scalar>(g: &Matrix<T>) -> Result<Matrix<T>> {
    let k = g.rows();
    if g.cols() < k || g.select_cols(&(0..k).collect::<Vec<_>>()) != Matrix::identity(g.spec(), k) {
        return Err(Error::DimensionMismatch("generator is not of the form [I | P]".into()));
    }
    Ok(g.select_cols(&(k..g.cols()).collect::<Vec<_>>()))
}

/// `[I | s₁P | s₂P | ...]` for base-field scalars `s_i`.
pub fn scaled_blocks<T: Scalar>(p: &Matrix<T>, scalars: &[FieldElem]) -> Result<Matrix<T>> {
    let spec = p.spec();
    let mut g = Matrix::identity(spec, p.rows());
    for &s in scalars {
        g = g.hstack(&p.scale(T::from_base(spec, s)))?;
    }
    Ok(g)
}

/// The expanded generator and the scalars used.
pub fn lcd_expand_generator<T: Scalar>(g: &Matrix<T>, case: Expansion) -> Result<(Matrix<T>, Vec<FieldElem>)> {
    let p = split_systematic(g)?;
    let field = T::base_field(g.spec());
    let one = field.one();
    let scalars = match case {
        Expansion::SquareRoot => vec![one, sqrt_minus_one(field)?],
        Expansion::TwoSquares => {
            let (a, b) = two_squares_minus_one(field)?;
            vec![one, a, b]
        }
        Expansion::FourSquares => four_squares_zero(field)?.to_vec(),
        Expansion::FourSquaresLiteral => {
            let [a, b, c, d] = four_squares_zero(field)?;
            vec![one, a, b, d, c]
        }
    };
    Ok((scaled_blocks(&p, &scalars)?, scalars))
}

/// LCD expansion of `G = [I | P]`.
pub fn lcd_expand<T: Scalar>(g: &Matrix<T>, case: Expansion, budget: u64) -> Result<ConstructionReport>
where
    for<'a> BuiltCode: From<&'a Matrix<T>>,
{
    let (expanded, scalars) = lcd_expand_generator(g, case)?;
    let mut report = report_for(
        "lcd_expand",
        vec![("case", case.label().into()), ("scalars", join(&scalars)), ("matrix", rows_param(g))],
        &expanded,
        budget,
    )?;
    if case != Expansion::FourSquaresLiteral {
        let lcd = report.lcd();
        report.expect(lcd, "expansion identity holds but the code is not LCD");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_BUDGET;
    use crate::gf::FieldSpec;
    use crate::ring::RingSpec;
    use crate::weighing::{paley_conference, paley_skew_conference, WeighingMatrix};

    fn f(q: u32) -> FieldSpec {
        FieldSpec::of_order(q).unwrap()
    }

    fn r(q: u32) -> RingSpec {
        RingSpec::new(f(q)).unwrap()
    }

    #[test]
    fn weighing_recipes() {
        // rows 4 and 5 of W_{6,4} sum to (1,0,0,0,0,1) mod 3, so d = 4
        let rep = weighing_code(f(3).from_int(2), &crate::fixtures::w6_4(), DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.field_params(), (12, 6, Some(4)));
        assert!(rep.lcd() && rep.flags.is_empty());
        let rep = weighing_code(f(5).one(), &paley_conference(5).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.field_params().0, 12);
        assert!(rep.lcd());
        assert_eq!(weighing_code(f(3).zero(), &crate::fixtures::h4(), DEFAULT_BUDGET).unwrap_err(), Error::ZeroAlpha);
        let w43 = paley_skew_conference(3).unwrap();
        let rep = skew_weighing_code(f(5).from_int(2), f(5).one(), &w43, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.field_params(), (8, 4, Some(4)));
        assert!(rep.lcd());
        let rep = skew_weighing_code(f(7).one(), f(7).from_int(3), &w43, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.field_params().2, Some(5));
        assert_eq!(
            skew_weighing_code(f(5).one(), f(5).one(), &paley_conference(5).unwrap(), DEFAULT_BUDGET).unwrap_err(),
            Error::NotSkew
        );
    }

    #[test]
    fn self_dual_when_alpha_squared_cancels_k() {
        // W_{2,1} skew, alpha = 1, beta = 0 over F_3: 1 + 0 + 1 = 2, LCD;
        // over F_2 the same matrix gives alpha^2 + k = 0
        let w21 = WeighingMatrix::validate(&[vec![0, -1], vec![1, 0]], 1).unwrap();
        let rep = skew_weighing_code(f(3).one(), f(3).zero(), &w21, DEFAULT_BUDGET).unwrap();
        assert!(rep.lcd());
        assert!(rep.flags.iter().any(|s| s.contains("beta = 0")));
        let rep = weighing_code(f(2).one(), &w21, DEFAULT_BUDGET).unwrap();
        assert!(rep.self_dual() && !rep.lcd());
        assert!(rep.flags.is_empty());
        // H_4 over F_3 with alpha = 1: 1 + 4 = 5 = 2, LCD; over F_5 with
        // alpha = 1: 1 + 4 = 0, self-dual
        let rep = weighing_code(f(5).one(), &crate::fixtures::h4(), DEFAULT_BUDGET).unwrap();
        assert!(rep.self_dual());
    }

    #[test]
    fn lifting() {
        let base = weighing_code(f(3).from_int(2), &crate::fixtures::w6_4(), DEFAULT_BUDGET).unwrap();
        let BuiltCode::Field(c) = &base.code else { panic!() };
        let rep = lift_to_r(c, DEFAULT_BUDGET).unwrap();
        assert!(rep.lcd());
        assert_eq!(rep.field_params(), (36, 18, Some(4)));
        let zero = FieldCode::zero(f(3), 4);
        let rep = lift_to_r(&zero, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.field_params(), (12, 0, None));
        let tetra = FieldCode::new(&FieldMatrix::from_integers(f(3), 2, 4, &[1, 0, 1, 1, 0, 1, 1, -1]).unwrap());
        let rep = lift_to_r(&tetra, DEFAULT_BUDGET).unwrap();
        assert!(rep.self_dual());
    }

    #[test]
    fn circulant_recipes() {
        let ring = r(3);
        let e = |s: &str| ring.parse_elem(s).unwrap();
        assert!(matches!(
            double_circulant(e("1+v"), &[e("1"), e("v")], false, DEFAULT_BUDGET),
            Err(Error::NonUnitLambda(_))
        ));
        let rep = double_circulant(e("1+v"), &[e("1"), e("v")], true, DEFAULT_BUDGET).unwrap();
        assert!(rep.flags.iter().any(|s| s == "lambda is not a unit"));
        let m = Matrix::from_rows(ring, &[vec![e("v"), e("v")], vec![e("v"), e("v")]]).unwrap();
        let block = bordered_block(e("v"), e("v^2"), &m).unwrap();
        assert_eq!(block.row(0), &[e("v"), e("v^2"), e("v^2")]);
        assert_eq!(block.row(2), &[e("v^2"), e("v"), e("v")]);
        let rep = bordered_circulant(e("1"), e("0"), e("1"), &[e("1")], false, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.formally_self_dual(), Some(true));
        let bad = Matrix::from_rows(ring, &[vec![e("1"), e("v")], vec![e("0"), e("1")]]).unwrap();
        assert!(matches!(symmetric_code(&bad, DEFAULT_BUDGET), Err(Error::NotSymmetric)));
    }

    #[test]
    fn zero_symmetric_block() {
        let a = FieldMatrix::zeros(f(3), 2, 2);
        let rep = symmetric_code(&a, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.formally_self_dual(), Some(true));
        assert!(rep.lcd());
    }

    #[test]
    fn expansions() {
        let g = FieldMatrix::from_integers(f(5), 2, 4, &[1, 0, 1, 2, 0, 1, 3, 1]).unwrap();
        let rep = lcd_expand(&g, Expansion::SquareRoot, DEFAULT_BUDGET).unwrap();
        assert!(rep.lcd());
        assert_eq!(rep.field_params().0, 2 + 2 * 2);
        let g3 = FieldMatrix::from_integers(f(3), 2, 4, &[1, 0, 1, 2, 0, 1, 1, 1]).unwrap();
        let rep = lcd_expand(&g3, Expansion::TwoSquares, DEFAULT_BUDGET).unwrap();
        assert!(rep.lcd());
        assert_eq!(rep.field_params().0, 2 + 3 * 2);
        for q in [3, 5, 7] {
            let gq = FieldMatrix::from_integers(f(q), 1, 2, &[1, 2]).unwrap();
            let (x, _) = lcd_expand_generator(&gq, Expansion::FourSquares).unwrap();
            assert_eq!(x.gram(), FieldMatrix::identity(f(q), 1));
        }
        let literal = FieldMatrix::from_integers(f(5), 1, 2, &[1, 2]).unwrap();
        let rep = lcd_expand(&literal, Expansion::FourSquaresLiteral, DEFAULT_BUDGET).unwrap();
        assert!(!rep.lcd());
        assert!(matches!(lcd_expand(&g, Expansion::TwoSquares, DEFAULT_BUDGET), Err(Error::WrongResidueClass { .. })));
        let not_sys = FieldMatrix::from_integers(f(5), 1, 2, &[2, 1]).unwrap();
        assert!(lcd_expand(&not_sys, Expansion::SquareRoot, DEFAULT_BUDGET).is_err());
        let ring = r(5);
        let gr = RingMatrix::lift(ring, &g);
        let rep = lcd_expand(&gr, Expansion::FourSquares, DEFAULT_BUDGET).unwrap();
        assert!(rep.lcd());
    }
}
