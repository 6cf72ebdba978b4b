//! Reference tables of LCD codes `[αI | βI + W]` from weighing matrices, and
//! their reproduction.

use rayon::prelude::*;
use serde::Serialize;

use super::weighing_generator;
use crate::code::FieldCode;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::matrix::FieldMatrix;
use crate::weighing::{paley_conference, paley_skew_conference, skew_double, WeighingMatrix};

pub const PRIMES: [u32; 7] = [5, 7, 11, 13, 17, 19, 23];

/// Projective codeword count up to which a cell's distance is enumerated.
pub const FEASIBLE: u128 = 100_000_000;

/// One published entry: `[N, N/2, d]_p` from `α`, `β` (`None` for the
/// symmetric columns).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PublishedCell {
    pub table: u8,
    pub p: u32,
    pub n: usize,
    pub alpha: u32,
    pub beta: Option<u32>,
    pub d: usize,
}

// per table: column lengths and whether they carry β, then rows in PRIMES order
const TABLE1: ([usize; 3], [[u32; 8]; 7]) = (
    [8, 12, 16],
    [
        [2, 1, 4, 1, 6, 2, 1, 7],
        [1, 3, 5, 1, 6, 2, 1, 7],
        [1, 2, 5, 1, 6, 1, 0, 7],
        [2, 3, 5, 1, 6, 1, 6, 7],
        [2, 8, 5, 1, 6, 2, 3, 7],
        [1, 8, 5, 1, 6, 2, 7, 7],
        [3, 4, 5, 1, 6, 3, 0, 7],
    ],
);

const TABLE2: ([usize; 3], [[u32; 8]; 7]) = (
    [20, 24, 28],
    [
        [2, 8, 1, 0, 9, 1, 10, 0],
        [1, 8, 2, 3, 9, 2, 10, 0],
        [1, 8, 1, 0, 9, 1, 10, 0],
        [1, 8, 5, 5, 9, 1, 10, 0],
        [1, 8, 1, 6, 9, 1, 10, 0],
        [1, 8, 2, 8, 9, 1, 10, 0],
        [1, 8, 1, 0, 9, 1, 10, 0],
    ],
);

const TABLE3: ([usize; 3], [[u32; 8]; 7]) = (
    [32, 36, 40],
    [
        [2, 2, 10, 1, 12, 2, 0, 13],
        [1, 3, 11, 1, 12, 1, 0, 13],
        [1, 5, 11, 1, 12, 1, 0, 13],
        [2, 6, 11, 1, 12, 1, 4, 13],
        [1, 0, 11, 1, 12, 1, 0, 13],
        [1, 0, 11, 1, 12, 1, 0, 13],
        [1, 2, 11, 1, 12, 1, 0, 13],
    ],
);

const TABLE4: [[u32; 3]; 7] = [[2, 0, 8], [2, 2, 10], [1, 3, 10], [2, 4, 11], [1, 2, 11], [2, 3, 11], [2, 6, 11]];

/// Whether the column of length `n` is built from a skew matrix.
pub fn is_skew_column(n: usize) -> bool {
    let q = n / 2 - 1;
    !(q % 4 == 1 && FieldSpec::of_order(q as u32).is_ok())
}

/// All published entries, in table, prime, column order.
pub fn published_cells() -> Vec<PublishedCell> {
    let mut out = Vec::new();
    for (table, (cols, rows)) in [(1u8, TABLE1), (2, TABLE2), (3, TABLE3)] {
        for (&p, row) in PRIMES.iter().zip(rows) {
            let mut at = 0;
            for &n in &cols {
                let (beta, used) = if is_skew_column(n) { (Some(row[at + 1]), 3) } else { (None, 2) };
                out.push(PublishedCell { table, p, n, alpha: row[at], beta, d: row[at + used - 1] as usize });
                at += used;
            }
        }
    }
    for (&p, row) in PRIMES.iter().zip(TABLE4) {
        out.push(PublishedCell { table: 4, p, n: 28, alpha: row[0], beta: Some(row[1]), d: row[2] as usize });
    }
    out
}

/// The weighing matrix used for a table column: a symmetric Paley
/// conference matrix of order `N/2` when `N/2 - 1 ≡ 1 mod 4`, a skew Paley
/// conference matrix when `N/2 - 1 ≡ 3 mod 4` is a prime power, otherwise
/// the double of a skew Paley matrix of order `N/4`. Table 4 uses the
/// bundled skew `W_{14,9}`.
pub fn column_matrix(table: u8, n: usize) -> Result<WeighingMatrix> {
    if table == 4 {
        return Ok(crate::fixtures::w14_9());
    }
    let q = (n / 2 - 1) as u32;
    if FieldSpec::of_order(q).is_ok() {
        return if q % 4 == 1 { paley_conference(q) } else { paley_skew_conference(q) };
    }
    skew_double(&paley_skew_conference((n / 4 - 1) as u32)?)
}

/// Short description of [`column_matrix`].
pub fn column_matrix_name(table: u8, n: usize) -> String {
    if table == 4 {
        return "skew two-circulant W_{14,9}".into();
    }
    let q = n / 2 - 1;
    if FieldSpec::of_order(q as u32).is_ok() {
        if q % 4 == 1 {
            format!("symmetric Paley conference W_{{{},{}}}", q + 1, q)
        } else {
            format!("skew Paley conference W_{{{},{}}}", q + 1, q)
        }
    } else {
        format!("doubled skew Paley W_{{{},{}}}", n / 2, n / 2 - 1)
    }
}

/// One `(α, β)` point of a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchRow {
    pub alpha: u32,
    pub beta: u32,
    pub d: usize,
    pub d_exact: bool,
    pub lcd: bool,
}

fn evaluate(spec: FieldSpec, w: &WeighingMatrix, alpha: u32, beta: u32, budget: u64) -> Result<SearchRow> {
    let g = weighing_generator(spec.elem(alpha), spec.elem(beta), w)?;
    let code = FieldCode::new(&g);
    let lcd = code.is_lcd()?;
    let dist = code.min_distance(budget)?;
    Ok(SearchRow { alpha, beta, d: dist.d, d_exact: dist.exact, lcd })
}

/// Distance and LCD verdict of `[αI | βI + W]` for every `α ≠ 0` in
/// `alphas` and `β` in `betas`, ordered by `(α, β)`.
pub fn table_search(
    w: &WeighingMatrix,
    spec: FieldSpec,
    alphas: &[u32],
    betas: &[u32],
    budget: u64,
) -> Result<Vec<SearchRow>> {
    let pairs: Vec<(u32, u32)> =
        alphas.iter().filter(|&&a| a % spec.q() != 0).flat_map(|&a| betas.iter().map(move |&b| (a, b))).collect();
    pairs.par_iter().map(|&(a, b)| evaluate(spec, w, a % spec.q(), b % spec.q(), budget)).collect()
}

/// Outcome of reproducing one published entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellResult {
    pub cell: PublishedCell,
    pub matrix: String,
    /// `(p^{N/2} - 1)/(p - 1)`, saturating.
    pub codewords: u128,
    /// `codewords` is within the budget.
    pub feasible: bool,
    pub lcd: bool,
    pub d: usize,
    pub d_exact: bool,
    /// Whether the distance equals the published one. An upper bound below
    /// the published value is `Some(false)`; other inexact results are `None`.
    pub matches: Option<bool>,
    /// All `(α, β)` results for the cell, filled on a mismatch.
    pub spectrum: Vec<SearchRow>,
}

/// Generator `[αI | βI + W]` of a published entry.
pub fn cell_generator(cell: &PublishedCell) -> Result<FieldMatrix> {
    let spec = FieldSpec::prime(cell.p)?;
    let w = column_matrix(cell.table, cell.n)?;
    weighing_generator(spec.elem(cell.alpha), spec.elem(cell.beta.unwrap_or(0)), &w)
}

/// `(p^{N/2} - 1)/(p - 1)` for a published entry, saturating.
pub fn cell_codewords(cell: &PublishedCell) -> u128 {
    projective_count(cell.p, cell.n / 2)
}

fn projective_count(p: u32, k: usize) -> u128 {
    let mut acc: u128 = 0;
    for _ in 0..k {
        acc = acc.saturating_mul(p as u128).saturating_add(1);
    }
    acc
}

/// Reproduces `cell`, spending at most `budget` codewords per distance. On
/// an exact mismatch and with `spectrum` set, every `(α, β)` is evaluated as
/// well.
pub fn reproduce_cell(cell: &PublishedCell, budget: u64, spectrum: bool) -> Result<CellResult> {
    let spec = FieldSpec::prime(cell.p)?;
    let w = column_matrix(cell.table, cell.n)?;
    if w.n() * 2 != cell.n {
        return Err(Error::DimensionMismatch(format!("matrix order {} for length {}", w.n(), cell.n)));
    }
    let row = evaluate(spec, &w, cell.alpha, cell.beta.unwrap_or(0), budget)?;
    let codewords = projective_count(cell.p, w.n());
    let matches = if row.d_exact || row.d < cell.d { Some(row.d == cell.d) } else { None };
    let mut spec_rows = Vec::new();
    if spectrum && matches == Some(false) {
        let alphas: Vec<u32> = (1..cell.p).collect();
        let betas: Vec<u32> = if cell.beta.is_some() { (0..cell.p).collect() } else { vec![0] };
        spec_rows = table_search(&w, spec, &alphas, &betas, budget)?;
    }
    Ok(CellResult {
        cell: *cell,
        matrix: column_matrix_name(cell.table, cell.n),
        codewords,
        feasible: codewords <= budget as u128,
        lcd: row.lcd,
        d: row.d,
        d_exact: row.d_exact,
        matches,
        spectrum: spec_rows,
    })
}
