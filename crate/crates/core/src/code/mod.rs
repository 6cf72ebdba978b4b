//! Linear codes over `F_q` and over `R`.

mod enumerate;
mod infoset;
mod ring_code;
mod weights;

use serde::Serialize;

pub(crate) use enumerate::Systematic;
pub use ring_code::{RingAnalysis, RingCode, RingDistance};
pub use weights::{krawtchouk, macwilliams, WeightDistribution};

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::matrix::FieldMatrix;

/// Default cap on enumerated projective codewords.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

const INFO_SET_TRIALS: usize = 256;
const INFO_SET_SEED: u64 = 0x5eed;

/// Minimum distance with a codeword attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distance {
    pub d: usize,
    /// The whole projective message space was enumerated.
    pub exact: bool,
    pub witness: Vec<FieldElem>,
}

/// Summary of a code's properties, as emitted in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub d_exact: bool,
    pub lcd: bool,
    pub self_dual: bool,
    pub formally_self_dual: Option<bool>,
    pub hull_dim: usize,
}

/// A linear `[n, k]` code over `F_q`, stored by a reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldCode {
    spec: FieldSpec,
    gen: FieldMatrix,
    n: usize,
}

impl FieldCode {
    /// Code spanned by the rows of `gen`.
    pub fn new(gen: &FieldMatrix) -> FieldCode {
        FieldCode { spec: gen.spec(), gen: gen.row_basis(), n: gen.cols() }
    }

    pub fn full(spec: FieldSpec, n: usize) -> FieldCode {
        FieldCode::new(&FieldMatrix::identity(spec, n))
    }

    pub fn zero(spec: FieldSpec, n: usize) -> FieldCode {
        FieldCode::new(&FieldMatrix::zeros(spec, 0, n))
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    /// Generator in reduced row echelon form.
    pub fn generator(&self) -> &FieldMatrix {
        &self.gen
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn dual(&self) -> FieldCode {
        FieldCode::new(&self.parity_check())
    }

    /// Generator of the dual code.
    pub fn parity_check(&self) -> FieldMatrix {
        if self.k() == 0 {
            return FieldMatrix::identity(self.spec, self.n);
        }
        self.gen.nullspace()
    }

    pub fn contains(&self, word: &[FieldElem]) -> bool {
        word.len() == self.n
            && (self.k() == 0 && word.iter().all(|x| x.is_zero()) || self.k() > 0 && self.gen.spans(word))
    }

    /// Subset test on row spaces.
    pub fn is_subcode_of(&self, other: &FieldCode) -> bool {
        self.n == other.n && (0..self.k()).all(|i| other.contains(self.gen.row(i)))
    }

    /// `dim(C ∩ C^⊥)`, computed as `k - rank(G G^t)` and as `n - rank([G; H])`.
    pub fn hull_dim(&self) -> Result<usize> {
        let k = self.k();
        if k == 0 {
            return Ok(0);
        }
        let via_gram = k - self.gen.gram().rank();
        let stacked = self.gen.vstack(&self.parity_check())?;
        let via_span = self.n - stacked.rank();
        if via_gram != via_span {
            return Err(Error::OracleDisagreement(format!(
                "hull dimension {via_gram} from G G^t but {via_span} from the stacked span"
            )));
        }
        Ok(via_gram)
    }

    pub fn is_lcd(&self) -> Result<bool> {
        Ok(self.hull_dim()? == 0)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.k() == 0 || self.gen.gram().is_zero()
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.n && self.is_self_orthogonal()
    }

    /// `(q^k - 1)/(q - 1)`, saturating.
    pub fn projective_size(&self) -> u128 {
        Systematic::new(&self.gen).projective_count()
    }

    /// Minimum Hamming distance. Codewords are enumerated by message weight
    /// over disjoint information sets, then, if that does not settle the
    /// distance within `budget` codewords, over all projective messages when
    /// there are at most `budget` of them. Otherwise the result is an upper
    /// bound, improved by random information sets.
    pub fn min_distance(&self, budget: u64) -> Result<Distance> {
        if self.k() == 0 {
            return Err(Error::EmptyCode);
        }
        let partial = infoset::min_distance(&self.gen, budget);
        if let Some(out) = partial.as_ref().filter(|o| o.exact) {
            return Ok(Distance { d: out.d, exact: true, witness: out.witness.clone() });
        }
        let sys = Systematic::new(&self.gen);
        if sys.projective_count() <= budget as u128 {
            let (d, rank) = sys.min_weight(0..sys.projective_count()).ok_or(Error::EmptyCode)?;
            return Ok(Distance { d, exact: true, witness: sys.codeword(rank) });
        }
        let mut best = partial.map(|o| (o.d, o.witness));
        if let Some((w, word)) = Systematic::random_information_sets(&self.gen, INFO_SET_TRIALS, INFO_SET_SEED) {
            if best.as_ref().is_none_or(|(b, _)| w < *b) {
                best = Some((w, word));
            }
        }
        let (d, witness) = best.ok_or(Error::EmptyCode)?;
        Ok(Distance { d, exact: false, witness })
    }

    /// A codeword of Hamming weight `w` among the first `budget` projective
    /// ranks, if one is found.
    pub fn find_weight(&self, w: usize, budget: u64) -> Option<Vec<FieldElem>> {
        if w == 0 {
            return Some(vec![self.spec.zero(); self.n]);
        }
        if self.k() == 0 {
            return None;
        }
        let sys = Systematic::new(&self.gen);
        let limit = sys.projective_count().min(budget as u128);
        let mut found = None;
        sys.walk(0..limit, |st| {
            if st.weight() == w {
                found = Some(st.rank);
                false
            } else {
                true
            }
        });
        found.map(|rank| sys.codeword(rank))
    }

    /// Exact Hamming weight distribution over all `q^k` codewords.
    pub fn weight_distribution(&self, budget: u64) -> Result<WeightDistribution> {
        let mut counts = vec![0u128; self.n + 1];
        counts[0] = 1;
        if self.k() == 0 {
            return Ok(WeightDistribution::exact(counts));
        }
        let sys = Systematic::new(&self.gen);
        let total = sys.projective_count();
        if total > budget as u128 {
            return Err(Error::BudgetExceeded { needed: total, budget });
        }
        let scale = self.spec.q() as u128 - 1;
        for (w, c) in sys.histogram(0..total).into_iter().enumerate().skip(1) {
            counts[w] = c * scale;
        }
        Ok(WeightDistribution::exact(counts))
    }

    /// Same weight distribution as the dual.
    pub fn is_formally_self_dual(&self, budget: u64) -> Result<bool> {
        if 2 * self.k() != self.n {
            return Ok(false);
        }
        let w = self.weight_distribution(budget)?;
        let dual = macwilliams(&w, self.n, self.k(), self.spec.q() as u64)?;
        Ok(w == dual)
    }

    /// Full property summary; `d` and formal self-duality are omitted when
    /// they are out of budget or undefined.
    pub fn analyze(&self, budget: u64) -> Result<Analysis> {
        let dist = match self.min_distance(budget) {
            Ok(d) => Some(d),
            Err(Error::EmptyCode) => None,
            Err(e) => return Err(e),
        };
        let fsd = match self.is_formally_self_dual(budget) {
            Ok(b) => Some(b),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let hull = self.hull_dim()?;
        Ok(Analysis {
            n: self.n,
            k: self.k(),
            d: dist.as_ref().map(|d| d.d),
            d_exact: dist.as_ref().is_none_or(|d| d.exact),
            lcd: hull == 0,
            self_dual: self.is_self_dual(),
            formally_self_dual: fsd,
            hull_dim: hull,
        })
    }
}

#[cfg(test)]
fn hamming_weight(word: &[FieldElem]) -> usize {
    word.iter().filter(|x| !x.is_zero()).count()
}
