//! Exhaustive codeword enumeration over projective messages.
//!
//! Messages are visited one per scalar class: the first nonzero digit is 1.
//! Ranks order the classes by the position `L` of that leading digit
//! (`L = 0` first), then lexicographically with the last digit fastest.
//! Codewords are produced in systematic form, so only the parity part is
//! stored and updated with one row addition per odometer step.

use std::ops::Range;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::gf::{FieldElem, FieldSpec};
use crate::matrix::FieldMatrix;

const MIN_CHUNK: u128 = 1 << 15;

#[derive(Clone, Debug)]
pub(crate) struct Systematic {
    spec: FieldSpec,
    q: u32,
    p: u32,
    s: usize,
    k: usize,
    n: usize,
    pivots: Vec<usize>,
    others: Vec<usize>,
    /// Parity rows `x^j R_i`, flattened with index `(i * s + j) * r`.
    sub: Vec<u16>,
    rows: Vec<u16>,
    prime: bool,
}

/// Walker state exposed to visitors.
pub(crate) struct State<'a> {
    pub rank: u128,
    pub msg_wt: usize,
    pub par_wt: usize,
    pub par: &'a [u16],
    pub digit_nz: &'a [u8],
}

impl State<'_> {
    #[inline]
    pub fn weight(&self) -> usize {
        self.msg_wt + self.par_wt
    }
}

impl Systematic {
    /// `g` must have full row rank.
    pub fn new(g: &FieldMatrix) -> Systematic {
        let spec = g.spec();
        let rr = g.rref();
        let k = rr.rank;
        let n = g.cols();
        let pivots = rr.pivots.clone();
        let others: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let r = others.len();
        let s = spec.r() as usize;
        let x = if s > 1 { spec.elem(spec.p()) } else { spec.one() };
        let mut rows = Vec::with_capacity(k * r);
        let mut sub = Vec::with_capacity(k * s * r);
        for i in 0..k {
            let row: Vec<FieldElem> = others.iter().map(|&c| rr.matrix[(i, c)]).collect();
            rows.extend(row.iter().map(|e| e.index() as u16));
            let mut xj = spec.one();
            for _ in 0..s {
                sub.extend(row.iter().map(|&e| (xj * e).index() as u16));
                xj *= x;
            }
        }
        Systematic { spec, q: spec.q(), p: spec.p(), s, k, n, pivots, others, sub, rows, prime: s == 1 }
    }

    fn r(&self) -> usize {
        self.others.len()
    }

    /// `q^e`, saturating.
    fn qpow(&self, e: usize) -> u128 {
        let mut out: u128 = 1;
        for _ in 0..e {
            out = out.saturating_mul(self.q as u128);
        }
        out
    }

    /// `(q^k - 1)/(q - 1)`, saturating.
    pub fn projective_count(&self) -> u128 {
        let mut total: u128 = 0;
        for lead in 0..self.k {
            total = total.saturating_add(self.qpow(self.k - 1 - lead));
        }
        total
    }

    /// Leading position and digit values (base-q indices) of the message of rank `rank`.
    fn decode(&self, mut rank: u128) -> (usize, Vec<u32>) {
        let mut lead = 0;
        loop {
            let size = self.qpow(self.k - 1 - lead);
            if rank < size {
                break;
            }
            rank -= size;
            lead += 1;
        }
        let mut digits = vec![0u32; self.k];
        digits[lead] = 1;
        for i in (lead + 1..self.k).rev() {
            digits[i] = (rank % self.q as u128) as u32;
            rank /= self.q as u128;
        }
        (lead, digits)
    }

    pub fn message(&self, rank: u128) -> Vec<FieldElem> {
        let (_, digits) = self.decode(rank);
        digits.into_iter().map(|d| self.spec.elem(d)).collect()
    }

    /// Full codeword of the message of rank `rank`, in original coordinates.
    pub fn codeword(&self, rank: u128) -> Vec<FieldElem> {
        self.encode(&self.message(rank))
    }

    pub fn encode(&self, msg: &[FieldElem]) -> Vec<FieldElem> {
        let mut word = vec![self.spec.zero(); self.n];
        let r = self.r();
        for (i, &m) in msg.iter().enumerate() {
            word[self.pivots[i]] = m;
            if m.is_zero() {
                continue;
            }
            for t in 0..r {
                let e = self.spec.elem(self.rows[i * r + t] as u32);
                word[self.others[t]] += m * e;
            }
        }
        word
    }

    #[inline(always)]
    fn add_row(&self, par: &mut [u16], row: &[u16]) -> usize {
        let mut nz = 0;
        if self.prime {
            let p = self.p as u16;
            for (a, &b) in par.iter_mut().zip(row) {
                let mut t = *a + b;
                if t >= p {
                    t -= p;
                }
                *a = t;
                nz += (t != 0) as usize;
            }
        } else {
            let add = self.spec.add_table();
            let q = self.q as usize;
            for (a, &b) in par.iter_mut().zip(row) {
                let t = add[*a as usize * q + b as usize];
                *a = t;
                nz += (t != 0) as usize;
            }
        }
        nz
    }

    /// Visits ranks `range` in order.
    pub fn walk<F: FnMut(&State<'_>) -> bool>(&self, range: Range<u128>, mut visit: F) {
        if range.is_empty() || self.k == 0 {
            return;
        }
        let r = self.r();
        let s = self.s;
        let p = self.p as u16;
        let mut rank = range.start;
        while rank < range.end {
            let (lead, digits) = self.decode(rank);
            let group_rest = {
                let size = self.qpow(self.k - 1 - lead);
                let mut off = 0u128;
                for &d in &digits[lead + 1..] {
                    off = off * self.q as u128 + d as u128;
                }
                size - off
            };
            let steps = group_rest.min(range.end - rank);

            // sub-digit odometer, most significant position first
            let npos = s * (self.k - 1 - lead);
            let mut subd = vec![0u16; npos];
            let mut digit_nz = vec![0u8; self.k];
            digit_nz[lead] = 1;
            let mut par = vec![0u16; r];
            let mut msg_wt = 1;
            let mut par_wt = self.add_row(&mut par, &self.rows[lead * r..(lead + 1) * r]);
            for i in lead + 1..self.k {
                let mut d = digits[i];
                for j in 0..s {
                    let c = (d % self.p) as u16;
                    d /= self.p;
                    let pos = (i - lead - 1) * s + (s - 1 - j);
                    subd[pos] = c;
                    if c != 0 {
                        digit_nz[i] += 1;
                        let row = &self.sub[(i * s + j) * r..(i * s + j + 1) * r];
                        for _ in 0..c {
                            par_wt = self.add_row(&mut par, row);
                        }
                    }
                }
                if digit_nz[i] > 0 {
                    msg_wt += 1;
                }
            }
            if r == 0 {
                par_wt = 0;
            }

            let mut t: u128 = 0;
            loop {
                let keep = visit(&State { rank: rank + t, msg_wt, par_wt, par: &par, digit_nz: &digit_nz });
                if !keep {
                    return;
                }
                t += 1;
                if t == steps {
                    break;
                }
                let mut pos = npos;
                loop {
                    pos -= 1;
                    let i = lead + 1 + pos / s;
                    let j = s - 1 - pos % s;
                    let row = &self.sub[(i * s + j) * r..(i * s + j + 1) * r];
                    par_wt = self.add_row(&mut par, row);
                    let c = subd[pos] + 1;
                    if c == p {
                        subd[pos] = 0;
                        digit_nz[i] -= 1;
                        if digit_nz[i] == 0 {
                            msg_wt -= 1;
                        }
                    } else {
                        subd[pos] = c;
                        if c == 1 {
                            digit_nz[i] += 1;
                            if digit_nz[i] == 1 {
                                msg_wt += 1;
                            }
                        }
                        break;
                    }
                }
                if r == 0 {
                    par_wt = 0;
                }
            }
            rank += steps;
        }
    }

    fn chunks(&self, range: Range<u128>) -> Vec<Range<u128>> {
        let len = range.end - range.start;
        let threads = rayon::current_num_threads().max(1) as u128;
        let size = (len / (threads * 16)).max(MIN_CHUNK);
        let mut out = Vec::new();
        let mut a = range.start;
        while a < range.end {
            let b = a.saturating_add(size).min(range.end);
            out.push(a..b);
            a = b;
        }
        out
    }

    /// Smallest weight in `range` with the smallest rank attaining it.
    pub fn min_weight(&self, range: Range<u128>) -> Option<(usize, u128)> {
        self.chunks(range)
            .into_par_iter()
            .map(|chunk| {
                let mut best: Option<(usize, u128)> = None;
                let mut floor = usize::MAX;
                self.walk(chunk, |st| {
                    let w = st.weight();
                    if w < floor {
                        floor = w;
                        best = Some((w, st.rank));
                    }
                    floor > 1
                });
                best
            })
            .reduce(|| None, merge_min)
    }

    /// Projective weight counts over `range`.
    pub fn histogram(&self, range: Range<u128>) -> Vec<u128> {
        let n = self.n;
        self.chunks(range)
            .into_par_iter()
            .map(|chunk| {
                let mut h = vec![0u64; n + 1];
                self.walk(chunk, |st| {
                    h[st.weight()] += 1;
                    true
                });
                h
            })
            .map(|h| h.into_iter().map(u128::from).collect::<Vec<u128>>())
            .reduce(
                || vec![0u128; n + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    }

    /// Support mask of the visited codeword (n <= 64).
    #[inline]
    pub fn support_mask(&self, st: &State<'_>) -> u64 {
        let mut mask = 0u64;
        for (i, &c) in st.digit_nz.iter().enumerate() {
            if c != 0 {
                mask |= 1 << self.pivots[i];
            }
        }
        for (t, &x) in st.par.iter().enumerate() {
            if x != 0 {
                mask |= 1 << self.others[t];
            }
        }
        mask
    }

    /// Best codeword found over random information sets, using messages of
    /// weight at most two in each systematic form.
    pub fn random_information_sets(g: &FieldMatrix, trials: usize, seed: u64) -> Option<(usize, Vec<FieldElem>)> {
        let spec = g.spec();
        let n = g.cols();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best: Option<(usize, Vec<FieldElem>)> = None;
        let nonzero: Vec<FieldElem> = spec.elements().filter(|e| !e.is_zero()).collect();
        for _ in 0..trials {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let sys = Systematic::new(&g.select_cols(&perm));
            let k = sys.k;
            let mut consider = |msg: &[FieldElem]| {
                let w = sys.encode(msg);
                let wt = w.iter().filter(|e| !e.is_zero()).count();
                if best.as_ref().is_none_or(|(b, _)| wt < *b) {
                    let mut orig = vec![spec.zero(); n];
                    for (t, &c) in perm.iter().enumerate() {
                        orig[c] = w[t];
                    }
                    best = Some((wt, orig));
                }
            };
            let mut msg = vec![spec.zero(); k];
            for a in 0..k {
                msg[a] = spec.one();
                consider(&msg);
                for b in a + 1..k {
                    for &c in &nonzero {
                        msg[b] = c;
                        consider(&msg);
                    }
                    msg[b] = spec.zero();
                }
                msg[a] = spec.zero();
            }
        }
        best
    }
}

fn merge_min(a: Option<(usize, u128)>, b: Option<(usize, u128)>) -> Option<(usize, u128)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(g: &FieldMatrix) -> Vec<Vec<FieldElem>> {
        // all projective messages in rank order
        let spec = g.spec();
        let k = g.rows();
        let q = spec.q();
        let mut out = Vec::new();
        for lead in 0..k {
            let free = k - 1 - lead;
            for t in 0..q.pow(free as u32) {
                let mut msg = vec![spec.zero(); k];
                msg[lead] = spec.one();
                let mut x = t;
                for i in (lead + 1..k).rev() {
                    msg[i] = spec.elem(x % q);
                    x /= q;
                }
                out.push(msg);
            }
        }
        out
    }

    fn check_against_brute(g: &FieldMatrix) {
        let sys = Systematic::new(g);
        let basis = g.row_basis();
        let msgs = brute(&basis);
        assert_eq!(sys.projective_count(), msgs.len() as u128);
        let mut seen = Vec::new();
        sys.walk(0..sys.projective_count(), |st| {
            seen.push((st.rank, st.weight(), sys.support_mask(st)));
            true
        });
        for (t, msg) in msgs.iter().enumerate() {
            assert_eq!(sys.message(t as u128), *msg);
            let word = sys.codeword(t as u128);
            let direct: Vec<FieldElem> = (0..g.cols())
                .map(|c| msg.iter().enumerate().fold(g.spec().zero(), |acc, (i, &m)| acc + m * basis[(i, c)]))
                .collect();
            assert_eq!(word, direct);
            let wt = word.iter().filter(|e| !e.is_zero()).count();
            let mask = word.iter().enumerate().filter(|(_, e)| !e.is_zero()).fold(0u64, |m, (c, _)| m | 1 << c);
            assert_eq!(seen[t], (t as u128, wt, mask));
        }
        // restarting mid-range agrees
        let total = sys.projective_count();
        for start in [1, total / 3, total / 2, total.saturating_sub(2)] {
            let mut part = Vec::new();
            sys.walk(start..total, |st| {
                part.push((st.rank, st.weight(), sys.support_mask(st)));
                true
            });
            assert_eq!(part, seen[start as usize..]);
        }
    }

    fn random_matrix(q: u32, k: usize, n: usize, seed: u64) -> FieldMatrix {
        use rand::Rng;
        let spec = FieldSpec::of_order(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        FieldMatrix::from_fn(spec, k, n, |_, _| spec.elem(rng.gen_range(0..q)))
    }

    #[test]
    fn walk_matches_brute_force() {
        for (q, k, n) in [(3, 3, 6), (5, 2, 5), (4, 3, 6), (9, 2, 4), (2, 4, 7), (3, 4, 4), (8, 2, 5)] {
            for seed in 0..3 {
                let g = random_matrix(q, k, n, seed).row_basis();
                if g.rows() > 0 {
                    check_against_brute(&g);
                }
            }
        }
    }

    #[test]
    fn min_and_histogram() {
        let f3 = FieldSpec::of_order(3).unwrap();
        let rep = FieldMatrix::from_fn(f3, 1, 3, |_, _| f3.one());
        let sys = Systematic::new(&rep);
        assert_eq!(sys.min_weight(0..1), Some((3, 0)));
        assert_eq!(sys.histogram(0..1), vec![0, 0, 0, 1]);
        let sum0 = FieldMatrix::from_integers(f3, 2, 3, &[1, 0, -1, 0, 1, -1]).unwrap();
        let sys = Systematic::new(&sum0);
        assert_eq!(sys.histogram(0..4), vec![0, 0, 3, 1]);
    }

    #[test]
    fn information_sets_find_low_weight() {
        let f3 = FieldSpec::of_order(3).unwrap();
        let rep = FieldMatrix::from_fn(f3, 1, 5, |_, _| f3.one());
        let (w, word) = Systematic::random_information_sets(&rep, 4, 1).unwrap();
        assert_eq!(w, 5);
        assert_eq!(word.len(), 5);
    }
}
