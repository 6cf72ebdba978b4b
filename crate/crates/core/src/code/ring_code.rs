//! Linear codes over `R = F_q + vF_q + v^2F_q`.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::weights::macwilliams_sized;
use super::{FieldCode, Systematic, WeightDistribution};
use crate::error::{Error, Result};
use crate::gf::FieldElem;
use crate::matrix::{FieldMatrix, RingMatrix};
use crate::ring::{RingElem, RingSpec};

/// Minimum distance over `R` with a codeword attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDistance {
    pub d: usize,
    pub exact: bool,
    pub witness: Vec<RingElem>,
}

/// Summary of a ring code's properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingAnalysis {
    pub n: usize,
    /// `log_q |C|`.
    pub log_q_size: usize,
    pub component_dims: [usize; 3],
    /// Rank when the code is free.
    pub rank: Option<usize>,
    pub d_lee: Option<usize>,
    pub d_hamming: Option<usize>,
    pub d_exact: bool,
    pub lcd: bool,
    pub self_dual: bool,
    pub formally_self_dual: Option<bool>,
    /// Formal self-duality for Hamming weight over the alphabet `R`.
    pub formally_self_dual_hamming: Option<bool>,
    /// `G G^t` nonsingular, when the generator is a free basis.
    pub gram_nonsingular: Option<bool>,
    /// `log_q` of the hull size.
    pub hull_dim: usize,
    pub gray: super::Analysis,
}

/// `C = η₁C₁ ⊕ η₂C₂ ⊕ η₃C₃`.
#[derive(Clone, Debug)]
pub struct RingCode {
    spec: RingSpec,
    gen: RingMatrix,
    components: [FieldCode; 3],
    n: usize,
}

impl PartialEq for RingCode {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.components == other.components
    }
}

impl Eq for RingCode {}

impl RingCode {
    /// Code spanned over `R` by the rows of `gen`.
    pub fn new(gen: &RingMatrix) -> RingCode {
        let components = gen.crt_split().map(|m| FieldCode::new(&m));
        RingCode { spec: gen.spec(), gen: gen.clone(), components, n: gen.cols() }
    }

    pub fn from_components(components: [FieldCode; 3]) -> Result<RingCode> {
        let lens: Vec<usize> = components.iter().map(|c| c.n()).collect();
        if lens.iter().any(|&l| l != lens[0]) {
            return Err(Error::LengthMismatch(lens));
        }
        let field = components[0].spec();
        if components.iter().any(|c| c.spec() != field) {
            return Err(Error::MixedFields);
        }
        let spec = RingSpec::new(field)?;
        let n = lens[0];
        let rows = components.iter().map(|c| c.k()).max().unwrap_or(0);
        let padded: Vec<FieldMatrix> = components
            .iter()
            .map(|c| {
                let pad = FieldMatrix::zeros(field, rows - c.k(), n);
                c.generator().vstack(&pad).expect("same width")
            })
            .collect();
        let gen = RingMatrix::crt_join(&[padded[0].clone(), padded[1].clone(), padded[2].clone()])?;
        let gen = if rows == 0 { RingMatrix::zeros(spec, 0, n) } else { gen };
        Ok(RingCode { spec, gen, components, n })
    }

    /// `η₁C ⊕ η₂C ⊕ η₃C`, the code over `R` generated by `C`.
    pub fn lift(code: &FieldCode) -> Result<RingCode> {
        RingCode::from_components([code.clone(), code.clone(), code.clone()])
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn generator(&self) -> &RingMatrix {
        &self.gen
    }

    pub fn components(&self) -> &[FieldCode; 3] {
        &self.components
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn component_dims(&self) -> [usize; 3] {
        [0, 1, 2].map(|i| self.components[i].k())
    }

    /// `log_q |C| = k₁ + k₂ + k₃`.
    pub fn log_q_size(&self) -> usize {
        self.component_dims().iter().sum()
    }

    pub fn is_free(&self) -> bool {
        let [a, b, c] = self.component_dims();
        a == b && b == c
    }

    pub fn rank(&self) -> Option<usize> {
        self.is_free().then(|| self.components[0].k())
    }

    /// The rows of the stored generator form a free basis.
    pub fn presentation_is_free(&self) -> bool {
        self.gen.rows() > 0 && self.component_dims().iter().all(|&k| k == self.gen.rows())
    }

    pub fn dual(&self) -> RingCode {
        RingCode::from_components(self.components.clone().map(|c| c.dual())).expect("equal lengths")
    }

    pub fn contains(&self, word: &[RingElem]) -> bool {
        if word.len() != self.n {
            return false;
        }
        (0..3).all(|i| {
            let part: Vec<FieldElem> = word.iter().map(|x| x.to_crt()[i]).collect();
            self.components[i].contains(&part)
        })
    }

    /// `log_q |C ∩ C^⊥|`.
    pub fn hull_dim(&self) -> Result<usize> {
        self.components.iter().map(|c| c.hull_dim()).sum()
    }

    /// LCD test by components; when the generator is a free basis the
    /// `G G^t` nonsingularity test is also run and must agree.
    pub fn is_lcd(&self) -> Result<bool> {
        let by_components =
            self.components.iter().map(|c| c.is_lcd()).collect::<Result<Vec<bool>>>()?.into_iter().all(|b| b);
        if self.presentation_is_free() {
            let by_gram = self.gen.gram().is_nonsingular()?;
            if by_gram != by_components {
                return Err(Error::OracleDisagreement(format!(
                    "componentwise LCD = {by_components}, G G^t nonsingular = {by_gram}"
                )));
            }
        }
        Ok(by_components)
    }

    /// Whether `GG^t` is nonsingular, when the generator is a free basis.
    pub fn gram_is_nonsingular(&self) -> Result<Option<bool>> {
        if !self.presentation_is_free() {
            return Ok(None);
        }
        Ok(Some(self.gen.gram().is_nonsingular()?))
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.components.iter().all(|c| c.is_self_orthogonal())
    }

    pub fn is_self_dual(&self) -> bool {
        self.components.iter().all(|c| c.is_self_dual())
    }

    /// `Ψ(C) = C₁ × C₂ × C₃`, generated block-diagonally.
    pub fn gray_image(&self) -> FieldCode {
        let field = self.spec.field();
        let n = self.n;
        let mut gen = FieldMatrix::zeros(field, 0, 3 * n);
        for (t, c) in self.components.iter().enumerate() {
            let g = c.generator();
            let block = FieldMatrix::from_fn(field, g.rows(), 3 * n, |i, j| {
                if j >= t * n && j < (t + 1) * n {
                    g[(i, j - t * n)]
                } else {
                    field.zero()
                }
            });
            gen = gen.vstack(&block).expect("same width");
        }
        FieldCode::new(&gen)
    }

    fn embed_component(&self, t: usize, word: &[FieldElem]) -> Vec<RingElem> {
        let z = self.spec.field().zero();
        word.iter()
            .map(|&x| {
                let mut phi = [z; 3];
                phi[t] = x;
                self.spec.from_crt(phi)
            })
            .collect()
    }

    /// Minimum Lee distance, `min d(C_i)` over the nonzero components.
    pub fn min_lee(&self, budget: u64) -> Result<RingDistance> {
        let mut best: Option<RingDistance> = None;
        let mut exact = true;
        for (t, c) in self.components.iter().enumerate() {
            if c.k() == 0 {
                continue;
            }
            let d = c.min_distance(budget)?;
            exact &= d.exact;
            if best.as_ref().is_none_or(|b| d.d < b.d) {
                best = Some(RingDistance { d: d.d, exact: true, witness: self.embed_component(t, &d.witness) });
            }
        }
        let mut best = best.ok_or(Error::EmptyCode)?;
        best.exact = exact;
        Ok(best)
    }

    /// Total number of codewords, saturating.
    pub fn size(&self) -> u128 {
        let q = self.spec.field().q() as u128;
        (0..self.log_q_size()).fold(1u128, |acc, _| acc.saturating_mul(q))
    }

    /// Support-mask counts of a component over all its codewords.
    fn masks(code: &FieldCode) -> HashMap<u64, u128> {
        let mut out = HashMap::new();
        out.insert(0u64, 1u128);
        if code.k() == 0 {
            return out;
        }
        let scale = code.spec().q() as u128 - 1;
        let sys = Systematic::new(code.generator());
        let mut local: HashMap<u64, u128> = HashMap::new();
        sys.walk(0..sys.projective_count(), |st| {
            *local.entry(sys.support_mask(st)).or_insert(0) += 1;
            true
        });
        for (m, c) in local {
            *out.entry(m).or_insert(0) += c * scale;
        }
        out
    }

    fn joint_feasible(&self, budget: u64) -> bool {
        self.n <= 64 && self.size() <= budget as u128
    }

    /// Minimum Hamming distance over `R` (nonzero coordinates). Joint
    /// enumeration of component triples when `|C|` is within budget, checked
    /// against `min d(C_i)`; otherwise the componentwise value.
    pub fn min_hamming(&self, budget: u64) -> Result<RingDistance> {
        let by_components = self.min_lee(budget)?;
        if !self.joint_feasible(budget) {
            return Ok(by_components);
        }
        let masks: Vec<Vec<u64>> = self.components.iter().map(|c| Self::masks(c).into_keys().collect()).collect();
        let mut best = usize::MAX;
        for &a in &masks[0] {
            for &b in &masks[1] {
                let ab = a | b;
                for &c in &masks[2] {
                    let m = ab | c;
                    if m != 0 {
                        best = best.min(m.count_ones() as usize);
                    }
                }
            }
        }
        if best != by_components.d {
            return Err(Error::OracleDisagreement(format!(
                "joint Hamming distance {best} but componentwise {}",
                by_components.d
            )));
        }
        Ok(RingDistance { exact: true, ..by_components })
    }

    /// A codeword whose Gray image has weight `w`, assembled from component
    /// codewords of weights summing to `w`.
    pub fn gray_word_of_weight(&self, w: usize, budget: u64) -> Result<Option<Vec<RingElem>>> {
        let dists = self.components.iter().map(|c| c.weight_distribution(budget)).collect::<Result<Vec<_>>>()?;
        let has = |t: usize, x: usize| dists[t].counts.get(x).is_some_and(|&c| c > 0);
        for w0 in (0..=w.min(self.n)).filter(|&x| has(0, x)) {
            for w1 in (0..=(w - w0).min(self.n)).filter(|&x| has(1, x)) {
                let w2 = w - w0 - w1;
                if !has(2, w2) {
                    continue;
                }
                let parts: Vec<Vec<FieldElem>> = [w0, w1, w2]
                    .iter()
                    .zip(&self.components)
                    .map(|(&x, c)| c.find_weight(x, budget).expect("weight present in distribution"))
                    .collect();
                let word = (0..self.n).map(|i| self.spec.from_crt([parts[0][i], parts[1][i], parts[2][i]])).collect();
                return Ok(Some(word));
            }
        }
        Ok(None)
    }

    /// Lee weight distribution (Hamming distribution of the Gray image).
    pub fn lee_distribution(&self, budget: u64) -> Result<WeightDistribution> {
        let mut acc = WeightDistribution::exact(vec![1]);
        for c in &self.components {
            acc = acc.convolve(&c.weight_distribution(budget)?);
        }
        Ok(acc)
    }

    /// Hamming weight distribution over `R`, by OR-convolution of the
    /// components' support masks.
    pub fn hamming_distribution(&self, budget: u64) -> Result<WeightDistribution> {
        if !self.joint_feasible(budget) {
            return Err(Error::BudgetExceeded { needed: self.size(), budget });
        }
        let m: Vec<HashMap<u64, u128>> = self.components.iter().map(Self::masks).collect();
        let mut ab: HashMap<u64, u128> = HashMap::new();
        for (&a, &ca) in &m[0] {
            for (&b, &cb) in &m[1] {
                *ab.entry(a | b).or_insert(0) += ca * cb;
            }
        }
        let mut counts = vec![0u128; self.n + 1];
        for (&x, &cx) in &ab {
            for (&c, &cc) in &m[2] {
                counts[(x | c).count_ones() as usize] += cx * cc;
            }
        }
        Ok(WeightDistribution::exact(counts))
    }

    /// Lee formal self-duality: `C` and `C^⊥` have the same Lee distribution.
    pub fn is_formally_self_dual_lee(&self, budget: u64) -> Result<bool> {
        if 2 * self.log_q_size() != 3 * self.n {
            return Ok(false);
        }
        let w = self.lee_distribution(budget)?;
        let dual = self.dual().lee_distribution(budget)?;
        let q = self.spec.field().q() as u64;
        let via_transform = super::macwilliams(&w, 3 * self.n, self.log_q_size(), q)?;
        if via_transform != dual {
            return Err(Error::OracleDisagreement(
                "Lee distribution of the dual differs from the MacWilliams transform".into(),
            ));
        }
        Ok(w == dual)
    }

    /// Hamming formal self-duality over the alphabet `R`.
    pub fn is_formally_self_dual_hamming(&self, budget: u64) -> Result<bool> {
        if 2 * self.log_q_size() != 3 * self.n {
            return Ok(false);
        }
        let w = self.hamming_distribution(budget)?;
        let q = self.spec.field().q() as u64;
        let size = num_traits::pow(BigInt::from(q), self.log_q_size());
        let dual = macwilliams_sized(&w, self.n, size, q * q * q)?;
        Ok(w == dual)
    }

    pub fn analyze(&self, budget: u64) -> Result<RingAnalysis> {
        let lee = match self.min_lee(budget) {
            Ok(d) => Some(d),
            Err(Error::EmptyCode) => None,
            Err(e) => return Err(e),
        };
        let ham = match self.min_hamming(budget) {
            Ok(d) => Some(d),
            Err(Error::EmptyCode) => None,
            Err(e) => return Err(e),
        };
        let fsd = match self.is_formally_self_dual_lee(budget) {
            Ok(b) => Some(b),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let fsd_hamming = match self.is_formally_self_dual_hamming(budget) {
            Ok(b) => Some(b),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let lcd = self.is_lcd()?;
        let hull = self.hull_dim()?;
        let self_dual = self.is_self_dual();
        let gray = super::Analysis {
            n: 3 * self.n,
            k: self.log_q_size(),
            d: lee.as_ref().map(|d| d.d),
            d_exact: lee.as_ref().is_none_or(|d| d.exact),
            lcd,
            self_dual,
            formally_self_dual: fsd,
            hull_dim: hull,
        };
        Ok(RingAnalysis {
            n: self.n,
            log_q_size: self.log_q_size(),
            component_dims: self.component_dims(),
            rank: self.rank(),
            d_lee: lee.as_ref().map(|d| d.d),
            d_hamming: ham.as_ref().map(|d| d.d),
            d_exact: lee.as_ref().is_none_or(|d| d.exact) && ham.as_ref().is_none_or(|d| d.exact),
            lcd,
            self_dual,
            formally_self_dual: fsd,
            formally_self_dual_hamming: fsd_hamming,
            gram_nonsingular: self.gram_is_nonsingular()?,
            hull_dim: hull,
            gray,
        })
    }
}
