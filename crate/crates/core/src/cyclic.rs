//! Polynomials over `F_q`, cyclic codes, and MDS LCD cyclic codes.

use std::fmt;

use crate::code::{Distance, FieldCode, RingCode};
use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldEmbedding, FieldSpec};
use crate::matrix::FieldMatrix;

/// Polynomial with coefficients stored low to high, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    spec: FieldSpec,
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn new(spec: FieldSpec, mut coeffs: Vec<FieldElem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { spec, coeffs }
    }

    pub fn from_ints(spec: FieldSpec, ints: &[i64]) -> Poly {
        Poly::new(spec, ints.iter().map(|&c| spec.from_int(c)).collect())
    }

    pub fn zero(spec: FieldSpec) -> Poly {
        Poly { spec, coeffs: vec![] }
    }

    pub fn one(spec: FieldSpec) -> Poly {
        Poly::constant(spec.one())
    }

    pub fn constant(c: FieldElem) -> Poly {
        Poly::new(c.field(), vec![c])
    }

    /// `c x^d`.
    pub fn monomial(c: FieldElem, d: usize) -> Poly {
        let mut coeffs = vec![c.field().zero(); d + 1];
        coeffs[d] = c;
        Poly::new(c.field(), coeffs)
    }

    /// `x - a`.
    pub fn linear(a: FieldElem) -> Poly {
        Poly::new(a.field(), vec![-a, a.field().one()])
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(spec: FieldSpec, n: usize) -> Poly {
        Poly::monomial(spec.one(), n).sub(&Poly::one(spec))
    }

    /// Parses `c0,c1,...,cd` (low to high).
    pub fn parse(spec: FieldSpec, s: &str) -> Result<Poly> {
        let coeffs = s.split(',').map(|t| spec.parse_elem(t.trim())).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(spec, coeffs))
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(self.spec.zero())
    }

    pub fn leading(&self) -> Option<FieldElem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(c) => self.scale(c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: FieldElem) -> Poly {
        Poly::new(self.spec, self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.spec, (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.spec, (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.spec);
        }
        let mut out = vec![self.spec.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(self.spec, out)
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let inv = divisor.leading().expect("nonzero").inv()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Poly::zero(self.spec), self.clone()));
        };
        let mut quot = vec![self.spec.zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = rem[i + dd] * inv;
            quot[i] = c;
            if !c.is_zero() {
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= c * b;
                }
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(self.spec, quot), Poly::new(self.spec, rem)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        self.coeffs.iter().rev().fold(self.spec.zero(), |acc, &c| acc * x + c)
    }

    /// `h*(x) = x^{deg h} h(1/x)`.
    pub fn reciprocal(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Poly::new(self.spec, self.coeffs.iter().rev().copied().collect()))
    }

    /// `h = h*` exactly.
    pub fn is_self_reciprocal(&self) -> Result<bool> {
        Ok(self.reciprocal()? == *self)
    }

    /// `h* = c h` for some nonzero scalar `c`.
    pub fn is_self_reciprocal_up_to_scalar(&self) -> Result<bool> {
        let r = self.reciprocal()?;
        if r.degree() != self.degree() {
            return Ok(false);
        }
        let c = r.leading().expect("nonzero") * self.leading().expect("nonzero").inv()?;
        Ok(r == self.scale(c))
    }

    /// Coefficients mapped through a field embedding.
    pub fn embed(&self, emb: &FieldEmbedding) -> Poly {
        Poly::new(emb.large(), self.coeffs.iter().map(|&c| emb.embed(c)).collect())
    }

    /// Coefficients pulled back into the subfield, if they all lie there.
    pub fn restrict(&self, emb: &FieldEmbedding) -> Result<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| emb.restrict(c).ok_or(Error::CoefficientNotInBaseField))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(emb.small(), coeffs))
    }

    /// Literal form `c0,c1,...,cd`.
    pub fn to_literal(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = if c.is_one() && i > 0 { String::new() } else { c.to_string() };
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            let sep = if !coef.is_empty() && !mono.is_empty() { "*" } else { "" };
            terms.push(format!("{coef}{sep}{mono}"));
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.spec, self)
    }
}

/// `h` with `x^n - 1 = f h`.
pub fn check_divisor(f: &Poly, n: usize) -> Result<Poly> {
    if f.is_zero() {
        return Err(Error::NotADivisor(n));
    }
    let (h, r) = Poly::x_n_minus_one(f.spec(), n).divmod(f)?;
    if !r.is_zero() {
        return Err(Error::NotADivisor(n));
    }
    Ok(h)
}

/// Cyclic code `<f>` of length `n`, generated by the shifts of `f`.
pub fn cyclic_code(f: &Poly, n: usize) -> Result<FieldCode> {
    check_divisor(f, n)?;
    let spec = f.spec();
    let deg = f.degree().expect("nonzero");
    let k = n - deg;
    let gen =
        FieldMatrix::from_fn(spec, k, n, |i, j| if j >= i && j - i <= deg { f.coeff(j - i) } else { spec.zero() });
    Ok(FieldCode::new(&gen))
}

/// Monic `h*` with `<h*> = <f>^⊥`, where `x^n - 1 = f h`.
pub fn cyclic_dual_generator(f: &Poly, n: usize) -> Result<Poly> {
    let h = check_divisor(f, n)?;
    Ok(h.reciprocal()?.monic())
}

/// LCD verdict for `<f>`: `gcd(f, h*) = 1`. This forces `f` to be
/// self-reciprocal up to a scalar, and for `gcd(n, q) = 1` is equivalent to it.
pub fn cyclic_is_lcd(f: &Poly, n: usize) -> Result<bool> {
    let hs = cyclic_dual_generator(f, n)?;
    let verdict = f.gcd(&hs).degree() == Some(0);
    let hull = cyclic_code(f, n)?.hull_dim()?;
    if verdict != (hull == 0) {
        return Err(Error::OracleDisagreement(format!(
            "cyclic LCD criterion {verdict} but hull dimension {hull} for f = {f}, n = {n}"
        )));
    }
    Ok(verdict)
}

/// Monic irreducible factors of `x^n - 1` with multiplicities, by trial division.
pub fn factor_x_n_minus_one(spec: FieldSpec, n: usize) -> Vec<(Poly, usize)> {
    let mut rest = Poly::x_n_minus_one(spec, n);
    let mut out: Vec<(Poly, usize)> = Vec::new();
    let q = spec.q() as u64;
    let mut d = 1;
    while rest.degree().is_some_and(|r| r >= 2 * d) {
        let count = q.pow(d as u32);
        for t in 0..count {
            let mut coeffs: Vec<FieldElem> = (0..d)
                .scan(t, |x, _| {
                    let c = spec.elem((*x % q) as u32);
                    *x /= q;
                    Some(c)
                })
                .collect();
            coeffs.push(spec.one());
            let cand = Poly::new(spec, coeffs);
            let mut mult = 0;
            loop {
                let (quot, r) = rest.divmod(&cand).expect("nonzero");
                if !r.is_zero() {
                    break;
                }
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        d += 1;
    }
    if rest.degree().is_some_and(|r| r > 0) {
        let rest = rest.monic();
        if let Some(e) = out.iter_mut().find(|(p, _)| *p == rest) {
            e.1 += 1;
        } else {
            out.push((rest, 1));
        }
    }
    out
}

/// All monic divisors of `x^n - 1`.
pub fn monic_divisors(spec: FieldSpec, n: usize) -> Vec<Poly> {
    let mut out = vec![Poly::one(spec)];
    for (p, m) in factor_x_n_minus_one(spec, n) {
        let mut next = Vec::with_capacity(out.len() * (m + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..m {
                acc = acc.mul(&p);
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.to_literal().cmp(&b.to_literal())));
    out
}

/// `<η₁f₁, η₂f₂, η₃f₃>` over `R`.
pub fn r_cyclic_code(f: [&Poly; 3], n: usize) -> Result<RingCode> {
    let comps = [cyclic_code(f[0], n)?, cyclic_code(f[1], n)?, cyclic_code(f[2], n)?];
    RingCode::from_components(comps)
}

/// LCD verdict for a cyclic code over `R` from its component generators.
pub fn r_cyclic_is_lcd(f: [&Poly; 3], n: usize) -> Result<bool> {
    let mut all = true;
    for fi in f {
        all &= cyclic_is_lcd(fi, n)?;
    }
    Ok(all)
}

/// A cyclic MDS LCD code of length `q + 1` with its generator.
#[derive(Clone, Debug)]
pub struct MdsLcd {
    pub generator: Poly,
    pub code: FieldCode,
    pub distance: Distance,
}

/// Largest admissible `μ` for the MDS construction over `F_q`.
pub fn mds_mu_max(q: u32) -> u32 {
    if q % 2 == 1 {
        (q - 1) / 2
    } else {
        q / 2 - 1
    }
}

/// BCH-type generator over `F_q` with roots `α^i`, `α` of order `q + 1` in
/// `F_{q^2}`: `i = -μ..=μ` for odd `q`, `i = ±(q/2-μ..=q/2)` for even `q`.
pub fn mds_lcd_generator(q: u32, mu: u32, budget: u64) -> Result<MdsLcd> {
    let max = mds_mu_max(q);
    if mu < 1 || mu > max {
        return Err(Error::MuOutOfRange { mu, max });
    }
    let base = FieldSpec::of_order(q)?;
    let ext = FieldSpec::of_order(q.checked_mul(q).ok_or(Error::FieldTooLarge(q as u64 * q as u64))?)?;
    let emb = FieldEmbedding::new(base, ext)?;
    let alpha = ext.element_of_order(q as u64 + 1)?;
    let order = q as i64 + 1;
    let exps: Vec<i64> = if q % 2 == 1 {
        (-(mu as i64)..=mu as i64).collect()
    } else {
        let h = q as i64 / 2;
        (h - mu as i64..=h).flat_map(|i| [i, -i]).collect()
    };
    let mut g = Poly::one(ext);
    for e in exps {
        g = g.mul(&Poly::linear(alpha.pow(e.rem_euclid(order) as u64)));
    }
    let g = g.restrict(&emb)?;
    let n = q as usize + 1;
    let code = cyclic_code(&g, n)?;
    if !g.is_self_reciprocal_up_to_scalar()? || !code.is_lcd()? {
        return Err(Error::OracleDisagreement(format!("generator {g} does not give an LCD code")));
    }
    let distance = code.min_distance(budget)?;
    let singleton = n - code.k() + 1;
    if distance.d < singleton || (distance.exact && distance.d != singleton) {
        return Err(Error::OracleDisagreement(format!(
            "distance {} differs from the Singleton bound {singleton}",
            distance.d
        )));
    }
    Ok(MdsLcd { generator: g, code, distance })
}
