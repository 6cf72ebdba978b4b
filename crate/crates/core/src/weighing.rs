//! Weighing, Hadamard and conference matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::matrix::FieldMatrix;

/// An `n x n` matrix over `{-1, 0, 1}` with `W W^t = k I`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeighingMatrix {
    n: usize,
    k: usize,
    entries: Vec<i8>,
    symmetric: bool,
    skew: bool,
}

impl WeighingMatrix {
    /// Checks `W W^t = k I` over the integers.
    pub fn validate(rows: &[Vec<i64>], k: usize) -> Result<WeighingMatrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) || rows.iter().flatten().any(|&x| !(-1..=1).contains(&x)) {
            return Err(Error::NotTernaryGrid);
        }
        let entries: Vec<i8> = rows.iter().flatten().map(|&x| x as i8).collect();
        Self::from_entries(n, k, entries)
    }

    fn from_entries(n: usize, k: usize, entries: Vec<i8>) -> Result<WeighingMatrix> {
        for i in 0..n {
            for j in i..n {
                let value: i64 = (0..n).map(|t| entries[i * n + t] as i64 * entries[j * n + t] as i64).sum();
                let expected = if i == j { k as i64 } else { 0 };
                if value != expected {
                    return Err(Error::NotWeighing { row: i, col: j, value, expected });
                }
            }
        }
        let at = |i: usize, j: usize| entries[i * n + j];
        let symmetric = (0..n).all(|i| (0..n).all(|j| at(i, j) == at(j, i)));
        let skew = (0..n).all(|i| (0..n).all(|j| at(i, j) == -at(j, i)));
        Ok(WeighingMatrix { n, k, entries, symmetric, skew })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.entry(i, j) as i64).collect()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_skew(&self) -> bool {
        self.skew
    }

    /// Entries mapped into `F_q` (`-1 -> p - 1`).
    pub fn to_field(&self, spec: FieldSpec) -> FieldMatrix {
        FieldMatrix::from_fn(spec, self.n, self.n, |i, j| spec.from_int(self.entry(i, j) as i64))
    }

    /// Parses the matrix text format; the weight is read off the first row.
    pub fn parse(text: &str) -> Result<WeighingMatrix> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::parse("missing matrix header"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::parse(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        if dims.len() != 2 || dims[0] != dims[1] {
            return Err(Error::NotTernaryGrid);
        }
        let rows: Vec<Vec<i64>> = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|_| Error::parse(format!("bad entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        if rows.len() != dims[0] {
            return Err(Error::parse(format!("expected {} rows, found {}", dims[0], rows.len())));
        }
        let k = rows.first().map_or(0, |r| r.iter().filter(|&&x| x != 0).count());
        Self::validate(&rows, k)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.entry(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for WeighingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "W_{{{},{}}}", self.n, self.k)?;
        write!(f, "{}", self.to_text())
    }
}

fn odd_field(q: u32) -> Result<FieldSpec> {
    let spec = FieldSpec::of_order(q)?;
    if spec.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    Ok(spec)
}

/// `Q_ij = η(x_j - x_i)` over the elements of `F_q` in index order.
fn jacobsthal(spec: FieldSpec) -> Result<Vec<Vec<i64>>> {
    let elems: Vec<FieldElem> = spec.elements().collect();
    elems.iter().map(|&a| elems.iter().map(|&b| (b - a).quadratic_character().map(i64::from)).collect()).collect()
}

fn residue_check(q: u32, r: u32, required: &'static str) -> Result<FieldSpec> {
    let spec = odd_field(q)?;
    if q % 4 != r {
        return Err(Error::WrongResidueClass { q: q as u64, required });
    }
    Ok(spec)
}

/// Bordered Jacobsthal matrix with border row `top`, border column `left`,
/// corner `corner` and core `Q + diag`.
fn bordered(q_mat: &[Vec<i64>], corner: i64, top: i64, left: i64, diag: i64) -> Vec<Vec<i64>> {
    let q = q_mat.len();
    let mut rows = vec![vec![0; q + 1]; q + 1];
    rows[0][0] = corner;
    for i in 0..q {
        rows[0][i + 1] = top;
        rows[i + 1][0] = left;
        for j in 0..q {
            rows[i + 1][j + 1] = q_mat[i][j] + if i == j { diag } else { 0 };
        }
    }
    rows
}

/// Paley Hadamard matrix of order `q + 1` for `q ≡ 3 mod 4`.
pub fn paley_hadamard(q: u32) -> Result<WeighingMatrix> {
    let spec = residue_check(q, 3, "q ≡ 3 mod 4")?;
    let rows = bordered(&jacobsthal(spec)?, 1, 1, 1, -1);
    WeighingMatrix::validate(&rows, q as usize + 1)
}

/// Symmetric Paley conference matrix of order `q + 1` for `q ≡ 1 mod 4`.
pub fn paley_conference(q: u32) -> Result<WeighingMatrix> {
    let spec = residue_check(q, 1, "q ≡ 1 mod 4")?;
    let rows = bordered(&jacobsthal(spec)?, 0, 1, 1, 0);
    WeighingMatrix::validate(&rows, q as usize)
}

/// Skew Paley conference matrix of order `q + 1` for `q ≡ 3 mod 4`.
pub fn paley_skew_conference(q: u32) -> Result<WeighingMatrix> {
    let spec = residue_check(q, 3, "q ≡ 3 mod 4")?;
    let rows = bordered(&jacobsthal(spec)?, 0, 1, -1, 0);
    WeighingMatrix::validate(&rows, q as usize)
}

/// `[[W, W - I], [W + I, -W]]`, a skew `W_{2n, 2k+1}` from a skew `W_{n,k}`.
pub fn skew_double(w: &WeighingMatrix) -> Result<WeighingMatrix> {
    if !w.is_skew() {
        return Err(Error::NotSkew);
    }
    let n = w.n();
    let mut rows = vec![vec![0i64; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let x = w.entry(i, j) as i64;
            let d = if i == j { 1 } else { 0 };
            rows[i][j] = x;
            rows[i][j + n] = x - d;
            rows[i + n][j] = x + d;
            rows[i + n][j + n] = -x;
        }
    }
    WeighingMatrix::validate(&rows, 2 * w.k() + 1)
}

/// First skew circulant `W_{n,k}` in lexicographic first-row order
/// (`-1 < 0 < 1`).
pub fn find_skew_circulant(n: usize, k: usize) -> Result<WeighingMatrix> {
    if n == 0 || n > 16 {
        return Err(Error::NotFound(format!("circulant search supports 1 <= n <= 16, got {n}")));
    }
    for row in ternary_rows(n) {
        if row.iter().filter(|&&c| c != 0).count() != k {
            continue;
        }
        if row[0] != 0 || (1..n).any(|j| row[n - j] != -row[j]) {
            continue;
        }
        let c = circulant(&row);
        let entries: Vec<i8> = (0..n * n).map(|t| c(t / n, t % n)).collect();
        if let Ok(w) = WeighingMatrix::from_entries(n, k, entries) {
            if w.is_skew() {
                return Ok(w);
            }
        }
    }
    Err(Error::NotFound(format!("no skew circulant W_{{{n},{k}}}")))
}

fn ternary_rows(len: usize) -> impl Iterator<Item = Vec<i8>> {
    (0..3u64.pow(len as u32)).map(move |t| {
        let mut x = t;
        let mut row = vec![0i8; len];
        for i in (0..len).rev() {
            row[i] = (x % 3) as i8 - 1;
            x /= 3;
        }
        row
    })
}

fn circulant(row: &[i8]) -> impl Fn(usize, usize) -> i8 + '_ {
    let n = row.len();
    move |i, j| row[(j + n - i) % n]
}

/// First skew `W_{2h,k}` of the form `[[A, B], [-B^t, A^t]]` with `A` a skew
/// circulant and `B` a circulant of order `h`, scanning `(A, B)` first rows
/// lexicographically.
pub fn find_skew_two_circulant(n: usize, k: usize) -> Result<WeighingMatrix> {
    if !n.is_multiple_of(2) || n == 0 || n > 16 {
        return Err(Error::NotFound(format!("two-circulant search supports even 2 <= n <= 16, got {n}")));
    }
    let h = n / 2;
    let skew_rows: Vec<Vec<i8>> = ternary_rows(h).filter(|a| a[0] == 0 && (1..h).all(|j| a[h - j] == -a[j])).collect();
    for a in &skew_rows {
        let wa = a.iter().filter(|&&x| x != 0).count();
        if wa > k {
            continue;
        }
        for b in ternary_rows(h) {
            if wa + b.iter().filter(|&&x| x != 0).count() != k {
                continue;
            }
            let (ca, cb) = (circulant(a), circulant(&b));
            let entries: Vec<i8> = (0..n * n)
                .map(|t| {
                    let (i, j) = (t / n, t % n);
                    match (i < h, j < h) {
                        (true, true) => ca(i, j),
                        (true, false) => cb(i, j - h),
                        (false, true) => -cb(j, i - h),
                        (false, false) => ca(j - h, i - h),
                    }
                })
                .collect();
            if let Ok(w) = WeighingMatrix::from_entries(n, k, entries) {
                if w.is_skew() {
                    return Ok(w);
                }
            }
        }
    }
    Err(Error::NotFound(format!("no skew two-circulant W_{{{n},{k}}}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let id: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| (i == j) as i64).collect()).collect();
        let w = WeighingMatrix::validate(&id, 1).unwrap();
        assert!(w.is_symmetric());
        let w = crate::fixtures::w6_4();
        assert!(w.is_skew());
        assert_eq!((w.n(), w.k()), (6, 4));
        assert_eq!(
            WeighingMatrix::validate(&[vec![1, 1], vec![1, 1]], 2),
            Err(Error::NotWeighing { row: 0, col: 1, value: 2, expected: 0 })
        );
        assert_eq!(WeighingMatrix::validate(&[vec![2]], 4), Err(Error::NotTernaryGrid));
        let back = WeighingMatrix::parse(&w.to_text()).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn paley_matrices() {
        let h4 = paley_hadamard(3).unwrap();
        assert_eq!((h4.n(), h4.k()), (4, 4));
        assert!(h4.rows()[0].iter().all(|&x| x == 1));
        assert!((1..4).all(|i| h4.entry(i, i) == -1));
        let h8 = paley_hadamard(7).unwrap();
        assert!(h8.rows().iter().flatten().all(|&x| x == 1 || x == -1));
        assert!(matches!(paley_hadamard(5), Err(Error::WrongResidueClass { q: 5, .. })));
        let c6 = paley_conference(5).unwrap();
        assert!(c6.is_symmetric() && c6.k() == 5);
        assert!((0..6).all(|i| c6.entry(i, i) == 0));
        let c10 = paley_conference(9).unwrap();
        assert!(c10.is_symmetric() && c10.k() == 9);
        for q in [3, 7, 11] {
            let s = paley_skew_conference(q).unwrap();
            assert!(s.is_skew());
            assert_eq!((s.n(), s.k()), (q as usize + 1, q as usize));
        }
    }

    #[test]
    fn conference_independent_of_enumeration() {
        // reversed element order gives a permutation-similar matrix, still symmetric
        let spec = FieldSpec::of_order(9).unwrap();
        let mut elems: Vec<FieldElem> = spec.elements().collect();
        elems.reverse();
        let q: Vec<Vec<i64>> = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| (b - a).quadratic_character().unwrap() as i64).collect())
            .collect();
        let w = WeighingMatrix::validate(&bordered(&q, 0, 1, 1, 0), 9).unwrap();
        assert!(w.is_symmetric());
    }

    #[test]
    fn doubling() {
        let w10 = WeighingMatrix::validate(&[vec![0]], 0).unwrap();
        let w21 = skew_double(&w10).unwrap();
        assert_eq!(w21.rows(), vec![vec![0, -1], vec![1, 0]]);
        let w87 = skew_double(&paley_skew_conference(3).unwrap()).unwrap();
        assert!(w87.is_skew());
        assert_eq!((w87.n(), w87.k()), (8, 7));
        assert_eq!(skew_double(&paley_conference(5).unwrap()), Err(Error::NotSkew));
    }

    #[test]
    fn circulant_search() {
        // a skew matrix of odd order is singular, so no skew W_{7,4} exists
        assert!(matches!(find_skew_circulant(7, 4), Err(Error::NotFound(_))));
        assert_eq!(find_skew_circulant(1, 0).unwrap().rows(), vec![vec![0]]);
        assert!(matches!(find_skew_circulant(2, 2), Err(Error::NotFound(_))));
    }

    #[test]
    fn two_circulant_search() {
        let w = find_skew_two_circulant(14, 9).unwrap();
        assert!(w.is_skew());
        assert_eq!(w.rows()[0], vec![0, -1, -1, 1, -1, 1, 1, -1, -1, 0, -1, 0, 0, 0]);
        assert_eq!(w, crate::fixtures::w14_9());
        assert!(matches!(find_skew_two_circulant(7, 4), Err(Error::NotFound(_))));
    }

    #[test]
    fn minus_one_character() {
        for q in [3u32, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 49] {
            let f = FieldSpec::of_order(q).unwrap();
            let eta = f.from_int(-1).quadratic_character().unwrap();
            assert_eq!(eta == -1, q % 4 == 3, "q = {q}");
        }
    }
}
