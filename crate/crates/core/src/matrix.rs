//! Dense matrices over `F_q` and over `R`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::ring::{RingElem, RingSpec};

/// Element type of a [`Matrix`].
pub trait Scalar:
    Copy
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Spec: Copy + Eq + fmt::Debug;
    /// `"field"` or `"ring"`, as in code file headers.
    const KIND: &'static str;

    fn spec_of(&self) -> Self::Spec;
    fn zero_of(spec: Self::Spec) -> Self;
    fn one_of(spec: Self::Spec) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn parse_in(spec: Self::Spec, s: &str) -> Result<Self>;
    fn base_field(spec: Self::Spec) -> FieldSpec;
    fn from_base(spec: Self::Spec, x: FieldElem) -> Self;
}

impl Scalar for FieldElem {
    type Spec = FieldSpec;
    const KIND: &'static str = "field";

    fn spec_of(&self) -> FieldSpec {
        self.field()
    }
    fn zero_of(spec: FieldSpec) -> Self {
        spec.zero()
    }
    fn one_of(spec: FieldSpec) -> Self {
        spec.one()
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(*self)
    }
    fn is_unit(&self) -> bool {
        !FieldElem::is_zero(*self)
    }
    fn parse_in(spec: FieldSpec, s: &str) -> Result<Self> {
        spec.parse_elem(s)
    }
    fn base_field(spec: FieldSpec) -> FieldSpec {
        spec
    }
    fn from_base(_: FieldSpec, x: FieldElem) -> Self {
        x
    }
}

impl Scalar for RingElem {
    type Spec = RingSpec;
    const KIND: &'static str = "ring";

    fn spec_of(&self) -> RingSpec {
        self.spec()
    }
    fn zero_of(spec: RingSpec) -> Self {
        spec.zero()
    }
    fn one_of(spec: RingSpec) -> Self {
        spec.one()
    }
    fn is_zero(&self) -> bool {
        RingElem::is_zero(*self)
    }
    fn is_unit(&self) -> bool {
        RingElem::is_unit(*self)
    }
    fn parse_in(spec: RingSpec, s: &str) -> Result<Self> {
        spec.parse_elem(s)
    }
    fn base_field(spec: RingSpec) -> FieldSpec {
        spec.field()
    }
    fn from_base(spec: RingSpec, x: FieldElem) -> Self {
        spec.from_field(x)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T: Scalar> {
    spec: T::Spec,
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type FieldMatrix = Matrix<FieldElem>;
pub type RingMatrix = Matrix<RingElem>;

impl<T: Scalar> Matrix<T> {
    pub fn new(spec: T::Spec, rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if data.iter().any(|x| x.spec_of() != spec) {
            return Err(Error::MixedFields);
        }
        Ok(Matrix { spec, rows, cols, data })
    }

    pub fn from_rows(spec: T::Spec, rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(spec, rows.len(), cols, rows.concat())
    }

    pub fn from_fn(spec: T::Spec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|t| f(t / cols.max(1), t % cols.max(1))).collect();
        Matrix { spec, rows, cols, data }
    }

    pub fn zeros(spec: T::Spec, rows: usize, cols: usize) -> Self {
        Matrix { spec, rows, cols, data: vec![T::zero_of(spec); rows * cols] }
    }

    pub fn identity(spec: T::Spec, n: usize) -> Self {
        Self::from_fn(spec, n, n, |i, j| if i == j { T::one_of(spec) } else { T::zero_of(spec) })
    }

    pub fn spec(&self) -> T::Spec {
        self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.spec, self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let zero = T::zero_of(self.spec);
        let mut out = Self::zeros(self.spec, self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self[(i, t)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs[(t, j)];
                    if b != zero {
                        out[(i, j)] = out[(i, j)] + a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `M M^t`.
    pub fn gram(&self) -> Self {
        self.matmul(&self.transpose()).expect("shapes agree")
    }

    pub fn hstack(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let rows: Vec<Vec<T>> = (0..self.rows).map(|i| [self.row(i), rhs.row(i)].concat()).collect();
        Ok(Self::from_fn(self.spec, self.rows, self.cols + rhs.cols, |i, j| rows[i][j]))
    }

    pub fn vstack(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.cols && self.rows > 0 && rhs.rows > 0 {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { rhs.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(Matrix { spec: self.spec, rows: self.rows + rhs.rows, cols, data })
    }

    pub fn scale(&self, s: T) -> Self {
        Matrix { spec: self.spec, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| s * x).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(T, T) -> T) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("shapes differ".into()));
        }
        Ok(Matrix {
            spec: self.spec,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<U: Scalar>(&self, spec: U::Spec, f: impl Fn(T) -> U) -> Matrix<U> {
        Matrix { spec, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    /// Rows selected by index.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.spec, idx.len(), self.cols, |i, j| self[(idx[i], j)])
    }

    /// Columns selected by index.
    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.spec, self.rows, idx.len(), |i, j| self[(i, idx[j])])
    }

    /// Parses the text format: a `rows cols` header line followed by rows of
    /// whitespace-separated entry literals.
    pub fn parse(spec: T::Spec, text: &str) -> Result<Self> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::parse("missing matrix header"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::parse(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(Error::parse(format!("header must be `rows cols`, got {header:?}")));
        };
        let mut data = Vec::with_capacity(rows * cols);
        for (i, line) in lines.enumerate() {
            if i >= rows {
                return Err(Error::parse("more rows than the header declares"));
            }
            let row: Vec<T> = line.split_whitespace().map(|tok| T::parse_in(spec, tok)).collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(Error::parse(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            data.extend(row);
        }
        if data.len() != rows * cols {
            return Err(Error::parse(format!("expected {rows} rows")));
        }
        Matrix::new(spec, rows, cols, data)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl<T: Scalar> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.spec)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form with its rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: FieldMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix<FieldElem> {
    /// Leftmost pivot, first nonzero row below, pivot scaled to 1.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] *= inv;
            }
            for i in 0..m.rows {
                if i != r {
                    let factor = m[(i, c)];
                    if !factor.is_zero() {
                        for j in c..m.cols {
                            let t = m[(r, j)];
                            m[(i, j)] -= factor * t;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_basis(&self) -> FieldMatrix {
        let rr = self.rref();
        let idx: Vec<usize> = (0..rr.rank).collect();
        rr.matrix.select_rows(&idx)
    }

    /// Determinant by Gaussian elimination with row-swap sign tracking.
    pub fn det(&self) -> Result<FieldElem> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.spec.one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(self.spec.zero());
            };
            if pr != c {
                m.swap_rows(pr, c);
                det = -det;
            }
            let pivot = m[(c, c)];
            det *= pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..n {
                let factor = m[(i, c)] * inv;
                if !factor.is_zero() {
                    for j in c..n {
                        let t = m[(c, j)];
                        m[(i, j)] -= factor * t;
                    }
                }
            }
        }
        Ok(det)
    }

    /// Basis (as rows) of `{x : M x^t = 0}`; `cols - rank` rows.
    pub fn nullspace(&self) -> FieldMatrix {
        let rr = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !rr.pivots.contains(c)).collect();
        let mut out = FieldMatrix::zeros(self.spec, free.len(), self.cols);
        for (t, &fc) in free.iter().enumerate() {
            out[(t, fc)] = self.spec.one();
            for (i, &pc) in rr.pivots.iter().enumerate() {
                out[(t, pc)] = -rr.matrix[(i, fc)];
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Option<FieldMatrix>> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let aug = self.hstack(&FieldMatrix::identity(self.spec, n))?;
        let rr = aug.rref();
        if rr.pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) || rr.rank < n {
            return Ok(None);
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Ok(Some(rr.matrix.select_cols(&idx)))
    }

    /// Same row space.
    pub fn same_row_space(&self, other: &FieldMatrix) -> bool {
        self.cols == other.cols && self.row_basis() == other.row_basis()
    }

    /// Whether `v` lies in the row space.
    pub fn spans(&self, v: &[FieldElem]) -> bool {
        let row = FieldMatrix::from_rows(self.spec, &[v.to_vec()]).expect("one row");
        let stacked = self.vstack(&row).expect("same width");
        stacked.rank() == self.rank()
    }

    /// Integer matrix mapped into the prime subfield (`-1 -> p - 1`).
    pub fn from_integers(spec: FieldSpec, rows: usize, cols: usize, ints: &[i64]) -> Result<Self> {
        Matrix::new(spec, rows, cols, ints.iter().map(|&x| spec.from_int(x)).collect())
    }
}

impl Matrix<RingElem> {
    /// Entrywise evaluation at `v = 0, 1, -1`.
    pub fn crt_split(&self) -> [FieldMatrix; 3] {
        let f = self.spec.field();
        [0, 1, 2].map(|t| self.map(f, |x| x.to_crt()[t]))
    }

    pub fn crt_join(parts: &[FieldMatrix; 3]) -> Result<RingMatrix> {
        let [a, b, c] = parts;
        if a.rows() != b.rows() || a.rows() != c.rows() || a.cols() != b.cols() || a.cols() != c.cols() {
            return Err(Error::DimensionMismatch("CRT components differ in shape".into()));
        }
        let ring = RingSpec::new(a.spec())?;
        let data =
            (0..a.entries().len()).map(|t| ring.from_crt([a.entries()[t], b.entries()[t], c.entries()[t]])).collect();
        Matrix::new(ring, a.rows(), a.cols(), data)
    }

    /// Determinant, assembled from the three component determinants.
    pub fn det(&self) -> Result<RingElem> {
        let [a, b, c] = self.crt_split();
        Ok(self.spec.from_crt([a.det()?, b.det()?, c.det()?]))
    }

    /// `det` is a unit, i.e. every component determinant is nonzero.
    pub fn is_nonsingular(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        Ok(self.det()?.is_unit())
    }

    pub fn inverse(&self) -> Result<Option<RingMatrix>> {
        let [a, b, c] = self.crt_split();
        let (Some(a), Some(b), Some(c)) = (a.inverse()?, b.inverse()?, c.inverse()?) else {
            return Ok(None);
        };
        Ok(Some(RingMatrix::crt_join(&[a, b, c])?))
    }

    /// Field matrix embedded as constants.
    pub fn lift(ring: RingSpec, m: &FieldMatrix) -> RingMatrix {
        m.map(ring, |x| ring.from_field(x))
    }
}

/// The λ-circulant whose first row is `first_row`: each row is the previous
/// one shifted right, with the wrapped entry multiplied by `lambda`.
pub fn lambda_circulant<T: Scalar>(lambda: T, first_row: &[T]) -> Result<Matrix<T>> {
    if !lambda.is_unit() {
        return Err(Error::NonUnitLambda(lambda.to_string()));
    }
    Ok(lambda_circulant_unchecked(lambda, first_row))
}

/// [`lambda_circulant`] without the unit requirement on `lambda`.
pub fn lambda_circulant_unchecked<T: Scalar>(lambda: T, first_row: &[T]) -> Matrix<T> {
    let spec = lambda.spec_of();
    let n = first_row.len();
    Matrix::from_fn(spec, n, n, |i, j| if j >= i { first_row[j - i] } else { lambda * first_row[n + j - i] })
}

/// The λ-shift: λ-circulant with first row `(0, 1, 0, ..., 0)`.
pub fn lambda_shift<T: Scalar>(lambda: T, n: usize) -> Matrix<T> {
    let spec = lambda.spec_of();
    let mut row = vec![T::zero_of(spec); n];
    if n > 1 {
        row[1] = T::one_of(spec);
    } else if n == 1 {
        row[0] = lambda;
    }
    lambda_circulant_unchecked(lambda, &row)
}
