//! Bounds on the minimum distance of LCD codes.

use serde::Serialize;

use super::{four_squares_zero, scaled_blocks, sqrt_minus_one, two_squares_minus_one};
use crate::code::FieldCode;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::io::CodeFile;
use crate::matrix::FieldMatrix;

/// A verified lower bound `LCD[n, k]_q >= d_lower`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub d_lower: usize,
    /// The witness distance was enumerated exhaustively.
    pub exact: bool,
    pub witness: String,
    pub singleton: usize,
    /// The witness generator in the code file format.
    pub code_file: String,
}

pub fn singleton(n: usize, k: usize) -> usize {
    n + 1 - k
}

/// Block multipliers `m` of the rows `d <= LCD[mn + k, k]_q <= mn + 1` that
/// apply to `q`.
pub fn chain_rows(q: u32) -> Vec<usize> {
    let mut rows = Vec::new();
    if q.is_power_of_two() {
        rows.push(1);
    } else if q % 4 == 1 {
        rows.push(2);
    } else if q % 4 == 3 {
        rows.push(3);
    }
    rows.push(4);
    rows
}

/// Checks the arithmetic of every applicable chain row for an `[n, k, d]_q`
/// code: `d <= n - k + 1` and `d <= B(mn + k, k) = mn + 1`.
pub fn bound_chain_check(n: usize, k: usize, d: usize, q: u32) -> bool {
    if k == 0 || k > n || d > singleton(n, k) {
        return false;
    }
    chain_rows(q).into_iter().all(|m| d <= singleton(m * n + k, k) && singleton(m * n + k, k) == m * n + 1)
}

/// The LCD code behind chain row `m`: `[I | G]`, `[I | G | αG]`,
/// `[I | G | αG | βG]` or `[I | αG | βG | γG | δG]`. All but `m = 1` satisfy
/// `G' G'^t = I`; for `m = 1` the LCD property is checked by the caller.
pub fn chain_witness(code: &FieldCode, m: usize) -> Result<FieldCode> {
    let spec = code.spec();
    let one = spec.one();
    let scalars = match m {
        1 => vec![one],
        2 => vec![one, sqrt_minus_one(spec)?],
        3 => {
            let (a, b) = two_squares_minus_one(spec)?;
            vec![one, a, b]
        }
        4 => four_squares_zero(spec)?.to_vec(),
        _ => return Err(Error::DimensionMismatch(format!("no chain row with {m} blocks"))),
    };
    Ok(FieldCode::new(&scaled_blocks(code.generator(), &scalars)?))
}

/// Extremal-code value the bound from a self-dual code attains:
/// `4⌊n/24⌋ + 4` (or `+ 6` when `n ≡ 22 mod 24`) for `q = 2`, `3⌊n/12⌋ + 3`
/// for `q = 3` with `4 | n`.
pub fn extremal_value(n: usize, q: u32) -> Option<usize> {
    match q {
        2 if n % 24 == 22 => Some(4 * (n / 24) + 6),
        2 => Some(4 * (n / 24) + 4),
        3 if n.is_multiple_of(4) => Some(3 * (n / 12) + 3),
        _ => None,
    }
}

/// `LCD[3n/2, n/2]_q >= d` from a self-dual `[n, n/2, d]` code generated by
/// `p`, witnessed by `[I | P]`.
pub fn selfdual_to_lcd_bound(p: &FieldMatrix, budget: u64) -> Result<BoundEntry> {
    let sd = FieldCode::new(p);
    if p.rows() != sd.k() || !sd.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let spec: FieldSpec = p.spec();
    let g = FieldMatrix::identity(spec, p.rows()).hstack(p)?;
    let witness = FieldCode::new(&g);
    if !witness.is_lcd()? {
        return Err(Error::OracleDisagreement("[I | P] with P self-dual is not LCD".into()));
    }
    let d = witness.min_distance(budget)?;
    let (n, k) = (witness.n(), witness.k());
    Ok(BoundEntry {
        n,
        k,
        q: spec.q(),
        d_lower: d.d,
        exact: d.exact,
        witness: "[I | P], P a self-dual generator".into(),
        singleton: singleton(n, k),
        code_file: CodeFile::Field(witness).to_text(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_BUDGET;
    use crate::cyclic::mds_lcd_generator;

    fn f(q: u32) -> FieldSpec {
        FieldSpec::of_order(q).unwrap()
    }

    #[test]
    fn singleton_and_chain() {
        assert_eq!(singleton(6, 3), 4);
        let mds = mds_lcd_generator(5, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(mds.distance.d, singleton(6, 3));
        assert_eq!(chain_rows(5), vec![2, 4]);
        assert_eq!(chain_rows(7), vec![3, 4]);
        assert_eq!(chain_rows(8), vec![1, 4]);
        assert!(bound_chain_check(6, 3, 4, 5));
        assert!(!bound_chain_check(6, 3, 5, 5));
        for n in 1..10 {
            for k in 1..=n {
                assert!(bound_chain_check(n, k, n + 1 - k, 5));
                assert_eq!(singleton(2 * n + k, k), 2 * n + 1);
            }
        }
    }

    #[test]
    fn chain_witnesses_are_lcd() {
        let tetra = FieldCode::new(&FieldMatrix::from_integers(f(3), 2, 4, &[1, 0, 1, 1, 0, 1, 1, -1]).unwrap());
        for m in [3, 4] {
            let w = chain_witness(&tetra, m).unwrap();
            assert!(w.is_lcd().unwrap());
            assert_eq!(w.n(), m * 4 + 2);
            assert!(w.min_distance(DEFAULT_BUDGET).unwrap().d >= 3);
        }
        let mds = mds_lcd_generator(5, 1, DEFAULT_BUDGET).unwrap();
        let w = chain_witness(&mds.code, 2).unwrap();
        assert!(w.is_lcd().unwrap());
        assert_eq!(w.generator().gram(), FieldMatrix::identity(f(5), 3));
        assert!(matches!(chain_witness(&mds.code, 3), Err(Error::WrongResidueClass { .. })));
    }

    #[test]
    fn golay_bound() {
        let golay = crate::fixtures::golay24();
        assert!(golay.is_self_dual());
        let entry = selfdual_to_lcd_bound(golay.generator(), DEFAULT_BUDGET).unwrap();
        assert_eq!((entry.n, entry.k, entry.q), (36, 12, 2));
        assert!(entry.exact);
        assert!(entry.d_lower >= extremal_value(24, 2).unwrap());
        assert!(entry.d_lower <= entry.singleton);
        let not_sd = FieldMatrix::from_integers(f(5), 1, 2, &[1, 1]).unwrap();
        assert_eq!(selfdual_to_lcd_bound(&not_sd, DEFAULT_BUDGET), Err(Error::NotSelfDual));
    }

    #[test]
    fn small_self_dual_over_f5() {
        // [I_2 | 2 I_2] is self-dual over F_5 since 1 + 4 = 0
        let p = FieldMatrix::from_integers(f(5), 2, 4, &[1, 0, 2, 0, 0, 1, 0, 2]).unwrap();
        let entry = selfdual_to_lcd_bound(&p, DEFAULT_BUDGET).unwrap();
        assert_eq!((entry.n, entry.k), (6, 2));
        assert!(entry.d_lower >= 2);
    }

    #[test]
    fn extremal_values() {
        assert_eq!(extremal_value(24, 2), Some(8));
        assert_eq!(extremal_value(22, 2), Some(6));
        assert_eq!(extremal_value(12, 3), Some(6));
        assert_eq!(extremal_value(10, 3), None);
    }
}
