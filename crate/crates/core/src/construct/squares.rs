//! Small sums-of-squares witnesses over `F_q`, found by lexicographic search.

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};

/// First `α` with `α² + 1 = 0`; needs `q ≡ 1 mod 4`.
pub fn sqrt_minus_one(spec: FieldSpec) -> Result<FieldElem> {
    if spec.p() == 2 || spec.q() % 4 != 1 {
        return Err(Error::WrongResidueClass { q: spec.q() as u64, required: "q ≡ 1 mod 4" });
    }
    let minus_one = -spec.one();
    spec.elements()
        .find(|&a| a * a == minus_one)
        .ok_or_else(|| Error::NotFound(format!("square root of -1 in F_{}", spec.q())))
}

/// First `(α, β)` with `α² + β² + 1 = 0`; needs `q ≡ 3 mod 4`.
pub fn two_squares_minus_one(spec: FieldSpec) -> Result<(FieldElem, FieldElem)> {
    if spec.p() == 2 || spec.q() % 4 != 3 {
        return Err(Error::WrongResidueClass { q: spec.q() as u64, required: "q ≡ 3 mod 4" });
    }
    let target = -spec.one();
    for a in spec.elements() {
        for b in spec.elements() {
            if a * a + b * b == target {
                return Ok((a, b));
            }
        }
    }
    Err(Error::NotFound(format!("a^2 + b^2 = -1 in F_{}", spec.q())))
}

/// First nonzero `(α, β, γ, δ)` with `α² + β² + γ² + δ² = 0`.
pub fn four_squares_zero(spec: FieldSpec) -> Result<[FieldElem; 4]> {
    let elems: Vec<FieldElem> = spec.elements().collect();
    let squares: Vec<FieldElem> = elems.iter().map(|&x| x * x).collect();
    let q = elems.len();
    for i in 0..q {
        for j in 0..q {
            for k in 0..q {
                let partial = squares[i] + squares[j] + squares[k];
                if let Some(l) = (0..q).find(|&l| partial + squares[l] == spec.zero()) {
                    if i + j + k + l > 0 {
                        return Ok([elems[i], elems[j], elems[k], elems[l]]);
                    }
                }
            }
        }
    }
    Err(Error::NotFound(format!("four squares summing to 0 in F_{}", spec.q())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u32) -> FieldSpec {
        FieldSpec::of_order(q).unwrap()
    }

    #[test]
    fn witnesses() {
        assert_eq!(sqrt_minus_one(f(5)).unwrap(), f(5).from_int(2));
        assert_eq!(two_squares_minus_one(f(3)).unwrap(), (f(3).one(), f(3).one()));
        let w = four_squares_zero(f(7)).unwrap();
        assert_eq!(w.map(|x| x.index()), [0, 1, 2, 3]);
        assert!(matches!(sqrt_minus_one(f(7)), Err(Error::WrongResidueClass { .. })));
        assert!(matches!(two_squares_minus_one(f(13)), Err(Error::WrongResidueClass { .. })));
    }

    #[test]
    fn identities_hold_for_all_supported_orders() {
        for q in [3u32, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 49, 81] {
            let s = f(q);
            let zero = s.zero();
            if q % 4 == 1 {
                let a = sqrt_minus_one(s).unwrap();
                assert_eq!(a * a + s.one(), zero);
            } else {
                let (a, b) = two_squares_minus_one(s).unwrap();
                assert_eq!(a * a + b * b + s.one(), zero);
            }
            let w = four_squares_zero(s).unwrap();
            assert!(w.iter().any(|x| !x.is_zero()));
            assert_eq!(w.iter().fold(zero, |acc, &x| acc + x * x), zero);
        }
        let w = four_squares_zero(f(4)).unwrap();
        assert_eq!(w.iter().fold(f(4).zero(), |acc, &x| acc + x * x), f(4).zero());
    }
}
