//! The ring `R = F_q + vF_q + v^2F_q` with `v^3 = v`, for odd `q`.
//!
//! `R` splits as `F_q × F_q × F_q` through evaluation at `v = 0, 1, -1`.
//! Elements are kept in the `a + vb + v^2c` form; the evaluation triple is
//! available through [`RingElem::to_crt`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    field: FieldSpec,
}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({:?})", self.field)
    }
}

impl RingSpec {
    pub fn new(field: FieldSpec) -> Result<RingSpec> {
        if field.p() == 2 {
            return Err(Error::EvenCharacteristic);
        }
        Ok(RingSpec { field })
    }

    pub fn field(self) -> FieldSpec {
        self.field
    }

    pub fn zero(self) -> RingElem {
        let z = self.field.zero();
        RingElem { a: z, b: z, c: z }
    }

    pub fn one(self) -> RingElem {
        let z = self.field.zero();
        RingElem { a: self.field.one(), b: z, c: z }
    }

    pub fn v(self) -> RingElem {
        let z = self.field.zero();
        RingElem { a: z, b: self.field.one(), c: z }
    }

    /// The orthogonal idempotents `1 - v^2`, `(v + v^2)/2`, `(v^2 - v)/2`.
    pub fn idempotents(self) -> [RingElem; 3] {
        let f = self.field;
        let half = f.from_int(2).inv().expect("odd characteristic");
        let z = f.zero();
        [
            RingElem { a: f.one(), b: z, c: -f.one() },
            RingElem { a: z, b: half, c: half },
            RingElem { a: z, b: -half, c: half },
        ]
    }

    pub fn from_field(self, x: FieldElem) -> RingElem {
        assert_eq!(x.field(), self.field, "mixed fields");
        let z = self.field.zero();
        RingElem { a: x, b: z, c: z }
    }

    pub fn elem(self, a: FieldElem, b: FieldElem, c: FieldElem) -> Result<RingElem> {
        if a.field() != self.field || b.field() != self.field || c.field() != self.field {
            return Err(Error::MixedFields);
        }
        Ok(RingElem { a, b, c })
    }

    /// Inverse of [`RingElem::to_crt`].
    pub fn from_crt(self, phi: [FieldElem; 3]) -> RingElem {
        let f = self.field;
        let half = f.from_int(2).inv().expect("odd characteristic");
        let [p1, p2, p3] = phi;
        RingElem { a: p1, b: (p2 - p3) * half, c: (p2 + p3) * half - p1 }
    }

    /// All `q^3` elements, ordered by `(a, b, c)` index.
    pub fn elements(self) -> impl Iterator<Item = RingElem> {
        let f = self.field;
        f.elements().flat_map(move |a| f.elements().flat_map(move |b| f.elements().map(move |c| RingElem { a, b, c })))
    }

    /// Parses `a+b*v+c*v^2`. Terms may appear in any order, with or without
    /// `*`, and with zero terms omitted (`2v+2v^2`, `4v+1`, `-v`, `v^2`).
    pub fn parse_elem(self, s: &str) -> Result<RingElem> {
        let f = self.field;
        let mut acc = [f.zero(); 3];
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::parse("empty ring element"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '-' && i == 0 {
                neg = true;
            } else if ch == '+' && i == 0 {
            } else {
                cur.push(ch);
            }
        }
        terms.push((neg, cur));
        for (neg, term) in terms {
            if term.is_empty() {
                return Err(Error::parse(format!("empty term in {s:?}")));
            }
            let (coef, power) = match term.find('v') {
                None => (term.as_str(), 0u32),
                Some(pos) => {
                    let coef = term[..pos].trim_end_matches('*');
                    let rest = &term[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse::<u32>().ok())
                            .filter(|&e| e >= 1)
                            .ok_or_else(|| Error::parse(format!("bad power of v in {term:?}")))?
                    };
                    (coef, power)
                }
            };
            let c = if coef.is_empty() { f.one() } else { f.parse_elem(coef)? };
            let c = if neg { -c } else { c };
            // v^3 = v, so odd powers fold to v and even positive powers to v^2.
            let slot = match power {
                0 => 0,
                e if e % 2 == 1 => 1,
                _ => 2,
            };
            acc[slot] += c;
        }
        Ok(RingElem { a: acc[0], b: acc[1], c: acc[2] })
    }
}

/// `a + vb + v^2c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElem {
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
}

impl RingElem {
    pub fn spec(self) -> RingSpec {
        RingSpec { field: self.a.field() }
    }

    pub fn field(self) -> FieldSpec {
        self.a.field()
    }

    pub fn is_zero(self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// Evaluations at `v = 0, 1, -1`.
    pub fn to_crt(self) -> [FieldElem; 3] {
        [self.a, self.a + self.b + self.c, self.a - self.b + self.c]
    }

    pub fn is_unit(self) -> bool {
        self.to_crt().iter().all(|x| !x.is_zero())
    }

    pub fn inv(self) -> Option<RingElem> {
        let [x, y, z] = self.to_crt();
        Some(self.spec().from_crt([x.inv().ok()?, y.inv().ok()?, z.inv().ok()?]))
    }

    /// Product computed componentwise in `F_q^3`.
    pub fn mul_crt(self, rhs: RingElem) -> RingElem {
        let l = self.to_crt();
        let r = rhs.to_crt();
        self.spec().from_crt([l[0] * r[0], l[1] * r[1], l[2] * r[2]])
    }

    pub fn lee_weight(self) -> usize {
        self.to_crt().iter().filter(|x| !x.is_zero()).count()
    }

    pub fn checked_add(self, rhs: RingElem) -> Result<RingElem> {
        self.same_ring(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(self, rhs: RingElem) -> Result<RingElem> {
        self.same_ring(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(self, rhs: RingElem) -> Result<RingElem> {
        self.same_ring(rhs)?;
        Ok(self * rhs)
    }

    fn same_ring(self, rhs: RingElem) -> Result<()> {
        if self.field() == rhs.field() {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn pow(self, mut e: u64) -> RingElem {
        let mut result = self.spec().one();
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base;
            }
            base = base * base;
            e >>= 1;
        }
        result
    }
}

impl Add for RingElem {
    type Output = RingElem;
    fn add(self, rhs: RingElem) -> RingElem {
        RingElem { a: self.a + rhs.a, b: self.b + rhs.b, c: self.c + rhs.c }
    }
}

impl AddAssign for RingElem {
    fn add_assign(&mut self, rhs: RingElem) {
        *self = *self + rhs;
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    fn sub(self, rhs: RingElem) -> RingElem {
        RingElem { a: self.a - rhs.a, b: self.b - rhs.b, c: self.c - rhs.c }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { a: -self.a, b: -self.b, c: -self.c }
    }
}

impl Mul for RingElem {
    type Output = RingElem;
    /// Closed form after reducing `v^3 -> v`, `v^4 -> v^2`.
    fn mul(self, rhs: RingElem) -> RingElem {
        let (a, b, c) = (self.a, self.b, self.c);
        let (x, y, z) = (rhs.a, rhs.b, rhs.c);
        let out = RingElem { a: a * x, b: a * y + x * b + b * z + y * c, c: a * z + x * c + b * y + c * z };
        debug_assert_eq!(out, self.mul_crt(rhs));
        out
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.a.is_zero() {
            parts.push(format!("{}", self.a));
        }
        if !self.b.is_zero() {
            parts.push(if self.b.is_one() { "v".to_string() } else { format!("{}*v", self.b) });
        }
        if !self.c.is_zero() {
            parts.push(if self.c.is_one() { "v^2".to_string() } else { format!("{}*v^2", self.c) });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Gray image of a word in block order: all evaluations at `v = 0`, then at
/// `v = 1`, then at `v = -1`.
pub fn gray(word: &[RingElem]) -> Vec<FieldElem> {
    let crts: Vec<[FieldElem; 3]> = word.iter().map(|r| r.to_crt()).collect();
    (0..3).flat_map(|i| crts.iter().map(move |t| t[i])).collect()
}

/// Sum of coordinate Lee weights.
pub fn lee_weight(word: &[RingElem]) -> usize {
    word.iter().map(|r| r.lee_weight()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(q: u32) -> RingSpec {
        RingSpec::new(FieldSpec::of_order(q).unwrap()).unwrap()
    }

    fn el(r: RingSpec, s: &str) -> RingElem {
        r.parse_elem(s).unwrap()
    }

    #[test]
    fn rejects_characteristic_two() {
        assert_eq!(RingSpec::new(FieldSpec::of_order(4).unwrap()), Err(Error::EvenCharacteristic));
    }

    #[test]
    fn multiplication_examples() {
        let r = ring(3);
        let v = r.v();
        assert_eq!(v * v, el(r, "v^2"));
        assert_eq!(el(r, "v^2") * el(r, "v^2"), el(r, "v^2"));
        let [e1, e2, e3] = r.idempotents();
        assert!((e2 * e3).is_zero());
        assert_eq!(e1 + e2 + e3, r.one());
    }

    #[test]
    fn idempotents_over_f3() {
        let r = ring(3);
        let [e1, e2, e3] = r.idempotents();
        assert_eq!(e1, el(r, "1+2v^2"));
        assert_eq!(e2, el(r, "2v+2v^2"));
        assert_eq!(e3, el(r, "v+2v^2"));
        let f = r.field();
        assert_eq!(e1.to_crt(), [f.one(), f.zero(), f.zero()]);
        for (i, e) in [e1, e2, e3].iter().enumerate() {
            assert_eq!(*e * *e, *e);
            for (j, g) in [e1, e2, e3].iter().enumerate() {
                if i != j {
                    assert!((*e * *g).is_zero());
                }
            }
        }
    }

    #[test]
    fn crt_examples() {
        let r = ring(3);
        let f = r.field();
        assert_eq!(r.zero().to_crt(), [f.zero(); 3]);
        assert_eq!(el(r, "1+v").to_crt(), [f.elem(1), f.elem(2), f.elem(0)]);
        assert_eq!(el(r, "v^2").to_crt(), [f.elem(0), f.elem(1), f.elem(1)]);
        assert_eq!(r.from_crt([f.one(), f.zero(), f.zero()]), r.idempotents()[0]);
        assert_eq!(r.from_crt([f.one(); 3]), r.one());
        let r5 = ring(5);
        let f5 = r5.field();
        assert_eq!(r5.from_crt([f5.zero(), f5.one(), -f5.one()]), r5.v());
    }

    #[test]
    fn units() {
        let r = ring(3);
        assert!(r.one().is_unit());
        assert!(!r.v().is_unit());
        assert!(!el(r, "1+v").is_unit());
        // exhaustive inverse search agrees with the CRT criterion
        for x in r.elements() {
            let has_inverse = r.elements().any(|y| x * y == r.one());
            assert_eq!(has_inverse, x.is_unit(), "{x}");
            if let Some(y) = x.inv() {
                assert_eq!(x * y, r.one());
            }
        }
    }

    #[test]
    fn gray_and_lee() {
        let r = ring(3);
        let f = r.field();
        assert_eq!(gray(&[r.zero(); 2]), vec![f.zero(); 6]);
        assert_eq!(gray(&[r.idempotents()[0]]), vec![f.one(), f.zero(), f.zero()]);
        let word = [el(r, "1+v"), el(r, "v^2")];
        let expected: Vec<FieldElem> = [1, 0, 2, 1, 0, 1].iter().map(|&t| f.elem(t)).collect();
        assert_eq!(gray(&word), expected);
        assert_eq!(r.zero().lee_weight(), 0);
        assert_eq!(r.idempotents()[0].lee_weight(), 1);
        assert_eq!(el(r, "1+v").lee_weight(), 2);
    }

    #[test]
    fn closed_form_matches_crt_exhaustively() {
        let r = ring(3);
        for x in r.elements() {
            for y in r.elements() {
                assert_eq!(x * y, x.mul_crt(y));
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let r = ring(5);
        let x = el(r, "3+4*v+2*v^2");
        assert_eq!(x.to_string(), "3+4*v+2*v^2");
        assert_eq!(el(r, &x.to_string()), x);
        assert_eq!(el(r, "4v+1"), el(r, "1+4*v"));
        assert_eq!(el(r, "-v"), el(r, "4v"));
        assert_eq!(el(r, "v^3"), r.v());
        assert_eq!(el(r, "0"), r.zero());
        assert!(r.parse_elem("").is_err());
        assert!(r.parse_elem("1+").is_err());
        assert!(r.parse_elem("7").is_err());
        assert!(r.parse_elem("2w").is_err());
    }

    #[test]
    fn mixed_rings() {
        let a = ring(3).one();
        let b = ring(5).one();
        assert_eq!(a.checked_mul(b), Err(Error::MixedRings));
    }
}
