//! Finite fields `F_{p^r}` with table-driven arithmetic.
//!
//! Elements are stored as an index `t = c_0 + c_1 p + ... + c_{r-1} p^{r-1}`
//! where `c_i` are the coefficients in the polynomial basis of the modulus.
//! Field descriptions are interned, so a [`FieldSpec`] is a `Copy` handle and
//! two handles compare equal exactly when they describe the same field.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest supported field order; keeps the q×q tables small.
pub const MAX_ORDER: u32 = 1024;

/// Moduli used when none is supplied, low-to-high including the leading 1.
const BUNDLED_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 1, 0, 0, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (5, 2, &[2, 0, 1]),
    (5, 3, &[2, 3, 0, 1]),
    (5, 4, &[2, 0, 1, 0, 1]),
    (7, 2, &[1, 0, 1]),
    (7, 3, &[4, 0, 0, 1]),
    (11, 2, &[1, 0, 1]),
    (13, 2, &[2, 0, 1]),
    (17, 2, &[3, 0, 1]),
    (19, 2, &[1, 0, 1]),
    (23, 2, &[1, 0, 1]),
    (29, 2, &[2, 0, 1]),
    (31, 2, &[1, 0, 1]),
];

struct FieldData {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

fn registry() -> &'static Mutex<Vec<&'static FieldData>> {
    static REGISTRY: OnceLock<Mutex<Vec<&'static FieldData>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(Vec::new()))
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over Z_p as coefficient vectors, low-to-high.

fn zp_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn zp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    zp_trim(&mut a);
    let dm = m.len() - 1;
    let lead_inv = zp_inv(m[dm], p);
    while a.len() > dm {
        let shift = a.len() - 1 - dm;
        let c = (a[a.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &mi) in m.iter().enumerate() {
            let t = (c as u64 * mi as u64 % p as u64) as u32;
            a[shift + i] = (a[shift + i] + p - t) % p;
        }
        zp_trim(&mut a);
    }
    a
}

fn zp_inv(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn zp_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    zp_rem(&prod, m, p)
}

/// Exhaustive check that `m` has no monic factor of degree `1..=deg/2`.
fn zp_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for t in 0..count {
            let mut cand = digits(t, p, d);
            cand.push(1);
            if zp_rem(m, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits(mut t: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((t % p as u64) as u32);
        t /= p as u64;
    }
    out
}

fn index_of(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl FieldData {
    fn build(p: u32, r: u32, modulus: Vec<u32>) -> FieldData {
        let q = p.pow(r);
        let qs = q as usize;
        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        let mut neg = vec![0u16; qs];
        let coeffs: Vec<Vec<u32>> = (0..q).map(|t| digits(t as u64, p, r as usize)).collect();
        for a in 0..qs {
            neg[a] = index_of(&coeffs[a].iter().map(|&c| (p - c) % p).collect::<Vec<_>>(), p) as u16;
            for b in 0..qs {
                let s: Vec<u32> = coeffs[a].iter().zip(&coeffs[b]).map(|(&x, &y)| (x + y) % p).collect();
                add[a * qs + b] = index_of(&s, p) as u16;
                let m = if r == 1 {
                    vec![(a as u64 * b as u64 % p as u64) as u32]
                } else {
                    let mut pa = coeffs[a].clone();
                    let mut pb = coeffs[b].clone();
                    zp_trim(&mut pa);
                    zp_trim(&mut pb);
                    let mut prod = zp_mulmod(&pa, &pb, &modulus, p);
                    prod.resize(r as usize, 0);
                    prod
                };
                mul[a * qs + b] = index_of(&m, p) as u16;
            }
        }
        let mut inv = vec![0u16; qs];
        for a in 1..qs {
            for b in 1..qs {
                if mul[a * qs + b] == 1 {
                    inv[a] = b as u16;
                    break;
                }
            }
        }
        FieldData { p, r, q, modulus, add, mul, neg, inv }
    }
}

/// Handle to an interned finite field `F_{p^r}`.
#[derive(Clone, Copy)]
pub struct FieldSpec {
    data: &'static FieldData,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.data, other.data)
    }
}

impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.data as *const FieldData).hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q())
    }
}

impl fmt::Display for FieldSpec {
    /// Renders in the `p` / `p^r:c0,...,cr` spec-string format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.data.r == 1 {
            write!(f, "{}", self.data.p)
        } else {
            let cs: Vec<String> = self.data.modulus.iter().map(|c| c.to_string()).collect();
            write!(f, "{}^{}:{}", self.data.p, self.data.r, cs.join(","))
        }
    }
}

impl FieldSpec {
    /// Builds (or fetches) the field `F_{p^r}`.
    ///
    /// For `r > 1` the modulus is given low-to-high; the leading 1 may be
    /// included or left implicit. Without a modulus a bundled default is used.
    pub fn new(p: u32, r: u32, modulus: Option<&[u32]>) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if r == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(r).unwrap_or(u64::MAX);
        if q > MAX_ORDER as u64 {
            return Err(Error::FieldTooLarge(q));
        }
        let modulus: Vec<u32> = if r == 1 {
            Vec::new()
        } else {
            let m = match modulus {
                Some(m) => m.to_vec(),
                None => BUNDLED_MODULI
                    .iter()
                    .find(|(bp, br, _)| *bp == p && *br == r)
                    .map(|(_, _, m)| m.to_vec())
                    .ok_or(Error::MissingModulus(q))?,
            };
            let mut m = m;
            if m.len() == r as usize {
                m.push(1);
            }
            if m.len() != r as usize + 1 || m[r as usize] != 1 {
                return Err(Error::InvalidModulus(format!("expected a monic polynomial of degree {r}, got {m:?}")));
            }
            if m.iter().any(|&c| c >= p) {
                return Err(Error::InvalidModulus(format!("coefficients must lie in 0..{p}")));
            }
            if !zp_irreducible(&m, p) {
                return Err(Error::ReducibleModulus(m, p));
            }
            m
        };
        let mut reg = registry().lock().expect("field registry poisoned");
        if let Some(d) = reg.iter().find(|d| d.p == p && d.r == r && d.modulus == modulus) {
            return Ok(FieldSpec { data: d });
        }
        let data: &'static FieldData = Box::leak(Box::new(FieldData::build(p, r, modulus)));
        reg.push(data);
        Ok(FieldSpec { data })
    }

    /// The prime field `Z_p`.
    pub fn prime(p: u32) -> Result<FieldSpec> {
        FieldSpec::new(p, 1, None)
    }

    /// Field of order `q` with the bundled modulus.
    pub fn of_order(q: u32) -> Result<FieldSpec> {
        let (p, r) = prime_power(q).ok_or(Error::NonPrimeCharacteristic(q))?;
        FieldSpec::new(p, r, None)
    }

    pub fn p(&self) -> u32 {
        self.data.p
    }

    pub fn r(&self) -> u32 {
        self.data.r
    }

    pub fn q(&self) -> u32 {
        self.data.q
    }

    /// Monic modulus low-to-high; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        if self.data.r == 1 {
            None
        } else {
            Some(&self.data.modulus)
        }
    }

    pub fn zero(self) -> FieldElem {
        FieldElem { field: self, idx: 0 }
    }

    pub fn one(self) -> FieldElem {
        FieldElem { field: self, idx: 1 }
    }

    /// Element with index `t` (base-p digit encoding). Panics if `t >= q`.
    pub fn elem(self, t: u32) -> FieldElem {
        assert!(t < self.q(), "index {t} out of range for F_{}", self.q());
        FieldElem { field: self, idx: t as u16 }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(self, n: i64) -> FieldElem {
        let p = self.p() as i64;
        FieldElem { field: self, idx: n.rem_euclid(p) as u16 }
    }

    /// Element from its coefficient vector in the modulus basis.
    pub fn from_coeffs(self, coeffs: &[u32]) -> Result<FieldElem> {
        if coeffs.len() > self.r() as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::parse(format!("coefficients {coeffs:?} invalid for {self:?}")));
        }
        Ok(FieldElem { field: self, idx: index_of(coeffs, self.p()) as u16 })
    }

    /// All elements in index order.
    pub fn elements(self) -> impl Iterator<Item = FieldElem> {
        (0..self.q()).map(move |t| FieldElem { field: self, idx: t as u16 })
    }

    /// First element, in index order, of exact multiplicative order `m`.
    pub fn element_of_order(self, m: u64) -> Result<FieldElem> {
        let qm1 = self.q() as u64 - 1;
        if m == 0 || !qm1.is_multiple_of(m) {
            return Err(Error::OrderDoesNotDivide { m, q_minus_1: qm1 });
        }
        self.elements()
            .skip(1)
            .find(|x| x.multiplicative_order() == m)
            .ok_or_else(|| Error::NotFound(format!("element of order {m}")))
    }

    /// Parses an element literal: an index `0..q`, optionally negated.
    pub fn parse_elem(self, s: &str) -> Result<FieldElem> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, s),
        };
        let t: u32 = body.parse().map_err(|_| Error::parse(format!("bad field element literal {s:?}")))?;
        if t >= self.q() {
            return Err(Error::parse(format!("element {t} out of range for F_{}", self.q())));
        }
        let e = self.elem(t);
        Ok(if neg { -e } else { e })
    }

    #[inline]
    pub(crate) fn add_table(self) -> &'static [u16] {
        &self.data.add
    }
}

/// Splits `q` into `(p, r)` with `q = p^r`, if it is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut r = 0;
    let mut t = q;
    while t.is_multiple_of(p) {
        t /= p;
        r += 1;
    }
    (t == 1).then_some((p, r))
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `"p"` or `"p^r:c0,c1,...,cr"`; `"p^r"` or a bare prime power `"q"`
    /// selects the bundled modulus.
    fn from_str(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        let (head, modulus) = match s.split_once(':') {
            Some((h, m)) => (h.trim(), Some(m)),
            None => (s, None),
        };
        let (p, r) = match head.split_once('^') {
            Some((p, r)) => (p.trim(), r.trim()),
            None => (head, "1"),
        };
        let p: u32 = p.parse().map_err(|_| Error::parse(format!("bad characteristic in {s:?}")))?;
        let r: u32 = r.parse().map_err(|_| Error::parse(format!("bad degree in {s:?}")))?;
        if modulus.is_none() && r == 1 && !is_prime(p) {
            return FieldSpec::of_order(p);
        }
        let modulus = modulus
            .map(|m| {
                m.split(',')
                    .map(|c| {
                        c.trim().parse::<u32>().map_err(|_| Error::parse(format!("bad modulus coefficient {c:?}")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .transpose()?;
        FieldSpec::new(p, r, modulus.as_deref())
    }
}

/// An element of a finite field.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    field: FieldSpec,
    idx: u16,
}

impl FieldElem {
    pub fn field(self) -> FieldSpec {
        self.field
    }

    /// Index in the base-p digit encoding.
    pub fn index(self) -> u32 {
        self.idx as u32
    }

    pub fn coeffs(self) -> Vec<u32> {
        digits(self.idx as u64, self.field.p(), self.field.r() as usize)
    }

    pub fn is_zero(self) -> bool {
        self.idx == 0
    }

    pub fn is_one(self) -> bool {
        self.idx == 1
    }

    pub fn inv(self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElem { field: self.field, idx: self.field.data.inv[self.idx as usize] })
    }

    pub fn pow(self, mut e: u64) -> FieldElem {
        let mut result = self.field.one();
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                result *= base;
            }
            base = base * base;
            e >>= 1;
        }
        result
    }

    pub fn checked_add(self, rhs: FieldElem) -> Result<FieldElem> {
        self.same_field(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(self, rhs: FieldElem) -> Result<FieldElem> {
        self.same_field(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(self, rhs: FieldElem) -> Result<FieldElem> {
        self.same_field(rhs)?;
        Ok(self * rhs)
    }

    pub fn checked_div(self, rhs: FieldElem) -> Result<FieldElem> {
        self.same_field(rhs)?;
        Ok(self * rhs.inv()?)
    }

    fn same_field(self, rhs: FieldElem) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    /// Multiplicative order; 0 for the zero element.
    pub fn multiplicative_order(self) -> u64 {
        if self.is_zero() {
            return 0;
        }
        let qm1 = self.field.q() as u64 - 1;
        let mut order = qm1;
        for d in divisors(qm1) {
            if self.pow(d).is_one() {
                order = d;
                break;
            }
        }
        order
    }

    /// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_character(self) -> Result<i8> {
        if self.field.p() == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if self.is_zero() {
            return Ok(0);
        }
        let e = (self.field.q() as u64 - 1) / 2;
        Ok(if self.pow(e).is_one() { 1 } else { -1 })
    }

    /// Square root by exhaustive scan, if one exists.
    pub fn sqrt(self) -> Option<FieldElem> {
        self.field.elements().find(|&y| y * y == self)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    ds.sort_unstable();
    ds
}

#[inline]
fn check_same(a: FieldElem, b: FieldElem) {
    assert!(a.field == b.field, "mixed fields: {:?} and {:?}", a.field, b.field);
}

impl Add for FieldElem {
    type Output = FieldElem;
    #[inline]
    fn add(self, rhs: FieldElem) -> FieldElem {
        check_same(self, rhs);
        let q = self.field.data.q as usize;
        FieldElem { field: self.field, idx: self.field.data.add[self.idx as usize * q + rhs.idx as usize] }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    #[inline]
    fn sub(self, rhs: FieldElem) -> FieldElem {
        self + (-rhs)
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    #[inline]
    fn mul(self, rhs: FieldElem) -> FieldElem {
        check_same(self, rhs);
        let q = self.field.data.q as usize;
        FieldElem { field: self.field, idx: self.field.data.mul[self.idx as usize * q + rhs.idx as usize] }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    #[inline]
    fn neg(self) -> FieldElem {
        FieldElem { field: self.field, idx: self.field.data.neg[self.idx as usize] }
    }
}

impl AddAssign for FieldElem {
    fn add_assign(&mut self, rhs: FieldElem) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElem {
    fn sub_assign(&mut self, rhs: FieldElem) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElem {
    fn mul_assign(&mut self, rhs: FieldElem) {
        *self = *self * rhs;
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.idx)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.idx)
    }
}

/// Embedding of `F_q` into an extension `F_{q^m}` of the same characteristic.
///
/// Built by locating a root of the small field's modulus inside the large
/// field; for prime fields the embedding is the identity on `Z_p`.
pub struct FieldEmbedding {
    small: FieldSpec,
    large: FieldSpec,
    image: Vec<FieldElem>,
}

impl FieldEmbedding {
    pub fn new(small: FieldSpec, large: FieldSpec) -> Result<FieldEmbedding> {
        if small.p() != large.p() || !large.r().is_multiple_of(small.r()) {
            return Err(Error::MixedFields);
        }
        let generator = match small.modulus() {
            None => large.one(),
            Some(m) => large
                .elements()
                .find(|&b| {
                    let val = m.iter().rev().fold(large.zero(), |acc, &c| acc * b + large.from_int(c as i64));
                    val.is_zero()
                })
                .ok_or(Error::CoefficientNotInBaseField)?,
        };
        let image = small
            .elements()
            .map(|x| x.coeffs().iter().rev().fold(large.zero(), |acc, &c| acc * generator + large.from_int(c as i64)))
            .collect();
        Ok(FieldEmbedding { small, large, image })
    }

    pub fn small(&self) -> FieldSpec {
        self.small
    }

    pub fn large(&self) -> FieldSpec {
        self.large
    }

    pub fn embed(&self, x: FieldElem) -> FieldElem {
        self.image[x.index() as usize]
    }

    /// Preimage in the small field, if `y` lies in the embedded subfield.
    pub fn restrict(&self, y: FieldElem) -> Option<FieldElem> {
        self.image.iter().position(|&z| z == y).map(|t| self.small.elem(t as u32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u32) -> FieldSpec {
        FieldSpec::of_order(q).unwrap()
    }

    #[test]
    fn construction_examples() {
        let f3 = FieldSpec::new(3, 1, None).unwrap();
        assert_eq!(f3.q(), 3);
        let f9 = FieldSpec::new(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!(f9.q(), 9);
        assert_eq!(f9, f(9));
        assert!(matches!(FieldSpec::new(5, 2, Some(&[1, 0, 1])), Err(Error::ReducibleModulus(..))));
        assert_eq!(FieldSpec::new(6, 1, None), Err(Error::NonPrimeCharacteristic(6)));
        assert!(matches!(FieldSpec::new(11, 3, None), Err(Error::FieldTooLarge(_))));
        assert!(matches!(FieldSpec::new(3, 7, None), Err(Error::FieldTooLarge(_))));
        assert!(matches!(FieldSpec::new(31, 3, None), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn missing_modulus() {
        // 7^3 = 343 is bundled, 2^7 = 128 is not.
        assert!(FieldSpec::new(7, 3, None).is_ok());
        assert_eq!(FieldSpec::new(2, 7, None), Err(Error::MissingModulus(128)));
        let m = [1, 1, 0, 0, 0, 0, 0, 1];
        assert_eq!(FieldSpec::new(2, 7, Some(&m)).unwrap().q(), 128);
    }

    #[test]
    fn bundled_moduli_are_irreducible() {
        for &(p, r, m) in BUNDLED_MODULI {
            assert!(zp_irreducible(m, p), "{p}^{r}: {m:?}");
        }
    }

    #[test]
    fn spec_strings() {
        let f9: FieldSpec = "3^2:1,0,1".parse().unwrap();
        assert_eq!(f9.q(), 9);
        assert_eq!(f9.to_string(), "3^2:1,0,1");
        let f3: FieldSpec = "3".parse().unwrap();
        assert_eq!(f3.to_string(), "3");
        let implicit: FieldSpec = "3^2:1,0".parse().unwrap();
        assert_eq!(implicit, f9);
        assert!("3^2:1,0,1,1".parse::<FieldSpec>().is_err());
        assert!("x".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let f5 = f(5);
        assert_eq!(f5.elem(2).inv().unwrap(), f5.elem(3));
        assert_eq!(f5.zero().inv(), Err(Error::DivisionByZero));
        let f9 = f(9);
        let x = f9.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(x * x, f9.elem(2));
        for a in f9.elements() {
            assert_eq!(a.pow(9), a);
        }
        assert_eq!(f5.elem(1).checked_add(f9.elem(1)), Err(Error::MixedFields));
        assert_eq!(f5.parse_elem("-1").unwrap(), f5.elem(4));
    }

    #[test]
    fn quadratic_character_examples() {
        let f5 = f(5);
        assert_eq!(f5.zero().quadratic_character(), Ok(0));
        assert_eq!(f5.elem(2).quadratic_character(), Ok(-1));
        for q in [3, 5, 7, 9, 11, 25, 27, 49] {
            assert_eq!(f(q).one().quadratic_character(), Ok(1));
        }
        assert_eq!(f(4).one().quadratic_character(), Err(Error::EvenCharacteristic));
        // oracle: enumerate the squares of F_5
        let squares: Vec<u32> = f5.elements().map(|x| (x * x).index()).collect();
        assert!(!squares.contains(&2));
    }

    #[test]
    fn element_of_order_examples() {
        assert_eq!(f(5).element_of_order(4).unwrap(), f(5).elem(2));
        for q in [3, 5, 9, 25] {
            assert_eq!(f(q).element_of_order(1).unwrap(), f(q).one());
        }
        let x = f(25).element_of_order(6).unwrap();
        assert!(x.pow(6).is_one() && !x.pow(3).is_one() && !x.pow(2).is_one());
        assert!(matches!(f(5).element_of_order(3), Err(Error::OrderDoesNotDivide { .. })));
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let fq = f(q);
            for a in fq.elements() {
                for b in fq.elements() {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for c in fq.elements() {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
                if !a.is_zero() {
                    assert!((a * a.inv().unwrap()).is_one());
                    assert!(a.pow(q as u64 - 1).is_one());
                }
            }
        }
    }

    #[test]
    fn character_counts_and_multiplicativity() {
        for q in [3, 5, 7, 9, 11, 13, 25, 27, 49] {
            let fq = f(q);
            let plus = fq.elements().filter(|x| x.quadratic_character().unwrap() == 1).count();
            assert_eq!(plus as u32, (q - 1) / 2);
            for x in fq.elements().skip(1) {
                for y in fq.elements().skip(1) {
                    let lhs = (x * y).quadratic_character().unwrap();
                    let rhs = x.quadratic_character().unwrap() * y.quadratic_character().unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn embedding_into_extension() {
        for (small, large) in [(5, 25), (4, 16), (9, 81), (2, 16), (3, 27)] {
            let e = FieldEmbedding::new(f(small), f(large)).unwrap();
            for a in f(small).elements() {
                for b in f(small).elements() {
                    assert_eq!(e.embed(a + b), e.embed(a) + e.embed(b));
                    assert_eq!(e.embed(a * b), e.embed(a) * e.embed(b));
                }
                assert_eq!(e.restrict(e.embed(a)), Some(a));
            }
            let inside = f(large).elements().filter(|y| e.restrict(*y).is_some()).count();
            assert_eq!(inside as u32, small);
        }
    }
}
