//! Minimum distance by the Brouwer-Zimmermann method.
//!
//! The generator is brought into systematic form on several pairwise
//! disjoint information sets. Round `t` encodes every projective message of
//! weight `t` in every form; afterwards each unseen codeword has weight at
//! least `t + 1` on each information set, so `m (t + 1)` bounds the distance
//! from below for `m` forms.

use rayon::prelude::*;

use crate::gf::{FieldElem, FieldSpec};
use crate::matrix::FieldMatrix;

struct Form {
    info: Vec<usize>,
    others: Vec<usize>,
    /// Row `i` restricted to `others`.
    par: Vec<Vec<FieldElem>>,
}

pub(crate) struct Outcome {
    pub d: usize,
    pub witness: Vec<FieldElem>,
    pub exact: bool,
}

fn forms(g: &FieldMatrix) -> Vec<Form> {
    let (k, n) = (g.rows(), g.cols());
    let mut used = vec![false; n];
    let mut out = Vec::new();
    loop {
        let avail: Vec<usize> = (0..n).filter(|&c| !used[c]).collect();
        if avail.len() < k {
            break;
        }
        let rr = g.select_cols(&avail).rref();
        if rr.rank < k {
            break;
        }
        let info: Vec<usize> = rr.pivots.iter().map(|&p| avail[p]).collect();
        let others: Vec<usize> = (0..n).filter(|c| !info.contains(c)).collect();
        let order: Vec<usize> = info.iter().chain(&others).copied().collect();
        let sys = g.select_cols(&order).rref().matrix;
        let par = (0..k).map(|i| (k..n).map(|j| sys[(i, j)]).collect()).collect();
        for &c in &info {
            used[c] = true;
        }
        out.push(Form { info, others, par });
    }
    out
}

fn binomial(n: usize, t: usize) -> u128 {
    (0..t).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

fn combinations(k: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut c: Vec<usize> = (0..t).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..t).rev().find(|&i| c[i] < k - t + i) else {
            return out;
        };
        c[i] += 1;
        for j in i + 1..t {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Lightest codeword among messages supported on `support` with leading
/// coefficient 1, as `(weight, coefficients)`.
fn best_on_support(
    form: &Form,
    spec: FieldSpec,
    support: &[usize],
    nonzero: &[FieldElem],
    cap: usize,
) -> Option<(usize, Vec<usize>)> {
    let t = support.len();
    let r = form.others.len();
    let mut digits = vec![0usize; t];
    let coef = |digits: &[usize], i: usize| if i == 0 { spec.one() } else { nonzero[digits[i]] };
    // acc[i] holds the sum of the first i scaled rows
    let mut acc = vec![vec![spec.zero(); r]; t + 1];
    let refill = |acc: &mut Vec<Vec<FieldElem>>, digits: &[usize], from: usize| {
        for i in from..t {
            let c = coef(digits, i);
            let row = &form.par[support[i]];
            let (head, tail) = acc.split_at_mut(i + 1);
            for ((dst, &src), &x) in tail[0].iter_mut().zip(&head[i]).zip(row) {
                *dst = src + c * x;
            }
        }
    };
    refill(&mut acc, &digits, 0);
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut limit = cap;
    loop {
        let w = t + acc[t].iter().filter(|x| !x.is_zero()).count();
        if w < limit {
            limit = w;
            best = Some((w, digits.clone()));
        }
        let Some(i) = (1..t).rev().find(|&i| digits[i] + 1 < nonzero.len()) else {
            return best;
        };
        digits[i] += 1;
        for d in digits.iter_mut().skip(i + 1) {
            *d = 0;
        }
        refill(&mut acc, &digits, i);
    }
}

fn expand(
    form: &Form,
    spec: FieldSpec,
    n: usize,
    support: &[usize],
    digits: &[usize],
    nonzero: &[FieldElem],
) -> Vec<FieldElem> {
    let mut word = vec![spec.zero(); n];
    for (i, &s) in support.iter().enumerate() {
        let c = if i == 0 { spec.one() } else { nonzero[digits[i]] };
        word[form.info[s]] = c;
        for (j, &col) in form.others.iter().enumerate() {
            word[col] += c * form.par[s][j];
        }
    }
    word
}

/// Minimum weight of the code generated by the full-rank `g`, spending at
/// most `budget` codewords. `None` if no round fits in the budget.
pub(crate) fn min_distance(g: &FieldMatrix, budget: u64) -> Option<Outcome> {
    let spec = g.spec();
    let (k, n) = (g.rows(), g.cols());
    let forms = forms(g);
    let m = forms.len();
    let nonzero: Vec<FieldElem> = spec.elements().filter(|e| !e.is_zero()).collect();
    let mut spent: u128 = 0;
    let mut best: Option<(usize, Vec<FieldElem>)> = None;
    for t in 1..=k {
        let round = binomial(k, t)
            .saturating_mul((nonzero.len() as u128).saturating_pow(t as u32 - 1))
            .saturating_mul(m as u128);
        if spent.saturating_add(round) > budget as u128 {
            return best.map(|(d, witness)| Outcome { d, witness, exact: false });
        }
        spent += round;
        let supports = combinations(k, t);
        for form in &forms {
            let cap = best.as_ref().map_or(n + 1, |b| b.0);
            let found = supports
                .par_iter()
                .enumerate()
                .filter_map(|(idx, s)| best_on_support(form, spec, s, &nonzero, cap).map(|(w, d)| (w, idx, d)))
                .min_by_key(|&(w, idx, _)| (w, idx));
            if let Some((w, idx, digits)) = found {
                best = Some((w, expand(form, spec, n, &supports[idx], &digits, &nonzero)));
            }
        }
        let d = best.as_ref().map_or(n + 1, |b| b.0);
        if d <= m * (t + 1) || t == k {
            return best.map(|(d, witness)| Outcome { d, witness, exact: true });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Systematic;

    fn exhaustive(g: &FieldMatrix) -> usize {
        let sys = Systematic::new(g);
        sys.min_weight(0..sys.projective_count()).unwrap().0
    }

    #[test]
    fn combinations_in_order() {
        assert_eq!(combinations(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(binomial(8, 3), 56);
    }

    #[test]
    fn agrees_with_exhaustive_enumeration() {
        let f = FieldSpec::prime(3).unwrap();
        let w = crate::fixtures::w6_4().to_field(f);
        let g = FieldMatrix::identity(f, 6).scale(f.elem(2)).hstack(&w).unwrap().row_basis();
        let out = min_distance(&g, u64::MAX).unwrap();
        assert!(out.exact);
        assert_eq!(out.d, exhaustive(&g));
        assert_eq!(out.witness.iter().filter(|x| !x.is_zero()).count(), out.d);
        assert!(crate::code::FieldCode::new(&g).contains(&out.witness));
        let golay = crate::fixtures::golay24();
        let out = min_distance(golay.generator(), u64::MAX).unwrap();
        assert_eq!((out.d, out.exact), (8, true));
    }

    #[test]
    fn budget_stops_early() {
        let golay = crate::fixtures::golay24();
        let out = min_distance(golay.generator(), 30).unwrap();
        assert!(!out.exact);
        assert!(out.d >= 8);
        assert!(min_distance(golay.generator(), 5).is_none());
    }
}
