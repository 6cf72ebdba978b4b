#![allow(dead_code)]

use lcdkit::code::{macwilliams, FieldCode, RingCode, WeightDistribution};
use lcdkit::cyclic::{cyclic_code, cyclic_is_lcd, monic_divisors, r_cyclic_code};
use lcdkit::gf::{FieldElem, FieldSpec};
use lcdkit::matrix::{FieldMatrix, RingMatrix};
use lcdkit::ring::{gray, lee_weight, RingElem, RingSpec};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub const CASES: u32 = 500;

pub type Check = fn() -> Result<(), String>;

/// Every property of the randomized and exhaustive suites, by name.
pub const PROPERTIES: [(&str, Check); 11] = [
    ("crt round trip and homomorphism", crt_round_trip),
    ("gray additivity and isometry", gray_isometry),
    ("gray image of the dual is the dual of the gray image", gray_dual),
    ("lee distance equals min component distance", lee_distance_identity),
    ("macwilliams equals brute-force dual distribution", macwilliams_brute_force),
    ("minimum distance equals brute force", distance_brute_force),
    ("lcd oracles agree", lcd_oracles),
    ("cyclic lcd verdict agrees with the hull", cyclic_lcd_hull),
    ("cyclic self-reciprocal iff lcd", cyclic_self_reciprocal_iff_lcd),
    ("cyclic self-reciprocal iff lcd, gcd(n, q) = 1", cyclic_self_reciprocal_iff_lcd_coprime),
    ("no self-dual cyclic code over R", no_self_dual_cyclic),
];

pub fn field(q: u32) -> FieldSpec {
    FieldSpec::of_order(q).unwrap()
}

pub fn ring(q: u32) -> RingSpec {
    RingSpec::new(field(q)).unwrap()
}

fn run<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn ring_elem(r: RingSpec, t: (u32, u32, u32)) -> RingElem {
    let f = r.field();
    r.elem(f.elem(t.0 % f.q()), f.elem(t.1 % f.q()), f.elem(t.2 % f.q())).unwrap()
}

fn ring_matrix(r: RingSpec, rows: usize, cols: usize, raw: &[(u32, u32, u32)]) -> RingMatrix {
    RingMatrix::from_fn(r, rows, cols, |i, j| ring_elem(r, raw[i * cols + j]))
}

fn triples(len: usize) -> impl Strategy<Value = Vec<(u32, u32, u32)>> {
    proptest::collection::vec((0u32..81, 0u32..81, 0u32..81), len)
}

fn ring_matrix_strategy(
    qs: Vec<u32>,
    max_rows: usize,
    max_cols: usize,
) -> impl Strategy<Value = (u32, usize, usize, Vec<(u32, u32, u32)>)> {
    (proptest::sample::select(qs), 1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(q, k, n)| (Just(q), Just(k), Just(n), triples(k * n)))
}

fn hamming(word: &[FieldElem]) -> usize {
    word.iter().filter(|x| !x.is_zero()).count()
}

fn crt_round_trip() -> Result<(), String> {
    let strat = (
        proptest::sample::select(vec![3u32, 5, 7, 9, 11, 25]),
        (0u32..625, 0u32..625, 0u32..625),
        (0u32..625, 0u32..625, 0u32..625),
    );
    run(strat, |(q, x, y)| {
        let r = ring(q);
        let (x, y) = (ring_elem(r, x), ring_elem(r, y));
        prop_assert_eq!(r.from_crt(x.to_crt()), x);
        let (cx, cy) = (x.to_crt(), y.to_crt());
        let sum = (x + y).to_crt();
        let prod = (x * y).to_crt();
        for i in 0..3 {
            prop_assert_eq!(sum[i], cx[i] + cy[i]);
            prop_assert_eq!(prod[i], cx[i] * cy[i]);
        }
        prop_assert_eq!(x * y, x.mul_crt(y));
        Ok(())
    })
}

fn gray_isometry() -> Result<(), String> {
    let strat = (proptest::sample::select(vec![3u32, 5, 7, 9]), 1usize..8)
        .prop_flat_map(|(q, n)| (Just(q), triples(n), triples(n)));
    run(strat, |(q, x, y)| {
        let r = ring(q);
        let x: Vec<RingElem> = x.into_iter().map(|t| ring_elem(r, t)).collect();
        let y: Vec<RingElem> = y.into_iter().map(|t| ring_elem(r, t)).collect();
        let sum: Vec<RingElem> = x.iter().zip(&y).map(|(&a, &b)| a + b).collect();
        let (gx, gy) = (gray(&x), gray(&y));
        let expected: Vec<FieldElem> = gx.iter().zip(&gy).map(|(&a, &b)| a + b).collect();
        prop_assert_eq!(gray(&sum), expected);
        prop_assert_eq!(lee_weight(&x), hamming(&gx));
        let n = x.len();
        for (i, e) in x.iter().enumerate() {
            prop_assert_eq!(gx[i], e.a);
            prop_assert_eq!(gx[n + i], e.a + e.b + e.c);
            prop_assert_eq!(gx[2 * n + i], e.a - e.b + e.c);
        }
        Ok(())
    })
}

fn same_code(a: &FieldCode, b: &FieldCode) -> bool {
    a.n() == b.n() && a.k() == b.k() && a.is_subcode_of(b)
}

fn gray_dual() -> Result<(), String> {
    run(ring_matrix_strategy(vec![3], 4, 4), |(q, k, n, raw)| {
        let c = RingCode::new(&ring_matrix(ring(q), k, n, &raw));
        prop_assert!(same_code(&c.dual().gray_image(), &c.gray_image().dual()));
        Ok(())
    })
}

/// Minimum Lee weight over every `R`-combination of the generator rows.
fn brute_min_lee(g: &RingMatrix) -> Option<usize> {
    let r = g.spec();
    let elems: Vec<RingElem> = r.elements().collect();
    let (k, n) = (g.rows(), g.cols());
    let total = elems.len().pow(k as u32);
    let mut best: Option<usize> = None;
    for mut idx in 1..total {
        let mut word = vec![r.zero(); n];
        for i in 0..k {
            let coef = elems[idx % elems.len()];
            idx /= elems.len();
            for (j, w) in word.iter_mut().enumerate() {
                *w += coef * g[(i, j)];
            }
        }
        let w = lee_weight(&word);
        if w > 0 && best.is_none_or(|b| w < b) {
            best = Some(w);
        }
    }
    best
}

fn lee_distance_identity() -> Result<(), String> {
    run(ring_matrix_strategy(vec![3], 2, 4), |(q, k, n, raw)| {
        let g = ring_matrix(ring(q), k, n, &raw);
        let c = RingCode::new(&g);
        let brute = brute_min_lee(&g);
        let by_components =
            c.components().iter().filter(|x| x.k() > 0).map(|x| x.min_distance(u64::MAX).unwrap().d).min();
        prop_assert_eq!(by_components, brute);
        match brute {
            Some(d) => {
                let lee = c.min_lee(u64::MAX).unwrap();
                prop_assert!(lee.exact);
                prop_assert_eq!(lee.d, d);
                prop_assert_eq!(lee_weight(&lee.witness), d);
                prop_assert!(c.contains(&lee.witness));
                prop_assert_eq!(c.gray_image().min_distance(u64::MAX).unwrap().d, d);
            }
            None => prop_assert_eq!(c.log_q_size(), 0),
        }
        Ok(())
    })
}

/// Weight distribution of the row space of `h`, by encoding every message.
fn brute_distribution(h: &FieldMatrix) -> WeightDistribution {
    let f = h.spec();
    let q = f.q() as usize;
    let (k, n) = (h.rows(), h.cols());
    let mut counts = vec![0u128; n + 1];
    for mut idx in 0..q.pow(k as u32) {
        let mut word = vec![f.zero(); n];
        for i in 0..k {
            let coef = f.elem((idx % q) as u32);
            idx /= q;
            for (j, w) in word.iter_mut().enumerate() {
                *w += coef * h[(i, j)];
            }
        }
        counts[hamming(&word)] += 1;
    }
    WeightDistribution::exact(counts)
}

fn macwilliams_brute_force() -> Result<(), String> {
    let strat = (proptest::sample::select(vec![3u32, 5]), 2usize..=8)
        .prop_flat_map(|(q, n)| (Just(q), Just(n), 1..=n.min(4).min(n - 1)))
        .prop_flat_map(|(q, n, k)| (Just(q), Just(n), Just(k), proptest::collection::vec(0u32..5, k * n)));
    run(strat, |(q, n, k, raw)| {
        let f = field(q);
        let g = FieldMatrix::from_fn(f, k, n, |i, j| f.elem(raw[i * n + j] % q));
        let code = FieldCode::new(&g);
        if code.k() == 0 {
            return Ok(());
        }
        let w = code.weight_distribution(u64::MAX).unwrap();
        prop_assert_eq!(&w, &brute_distribution(code.generator()));
        let predicted = macwilliams(&w, n, code.k(), q as u64).unwrap();
        prop_assert_eq!(predicted, brute_distribution(&code.parity_check()));
        Ok(())
    })
}

fn distance_brute_force() -> Result<(), String> {
    let strat = (proptest::sample::select(vec![2u32, 3, 4, 5]), 2usize..=10)
        .prop_flat_map(|(q, n)| (Just(q), Just(n), 1..=n.min(5)))
        .prop_flat_map(|(q, n, k)| (Just(q), Just(n), Just(k), proptest::collection::vec(0u32..4, k * n)))
        .prop_flat_map(|(q, n, k, raw)| (Just(q), Just(n), Just(k), Just(raw), any::<u64>()));
    run(strat, |(q, n, k, raw, budget)| {
        let f = field(q);
        let g = FieldMatrix::from_fn(f, k, n, |i, j| f.elem(raw[i * n + j] % q));
        let code = FieldCode::new(&g);
        let Some(d) = brute_distribution(code.generator()).min_weight() else {
            return Ok(());
        };
        let exact = code.min_distance(u64::MAX).unwrap();
        prop_assert!(exact.exact);
        prop_assert_eq!(exact.d, d);
        prop_assert_eq!(hamming(&exact.witness), d);
        prop_assert!(code.contains(&exact.witness));
        let bounded = code.min_distance(1 + budget % 64).unwrap();
        prop_assert!(bounded.d >= d);
        prop_assert!(code.contains(&bounded.witness));
        if bounded.exact {
            prop_assert_eq!(bounded.d, d);
        }
        Ok(())
    })
}

fn lcd_oracles() -> Result<(), String> {
    let strat = (ring_matrix_strategy(vec![3, 5, 7], 3, 6), any::<bool>());
    run(strat, |((q, k, n, raw), systematic)| {
        let r = ring(q);
        let mut g = ring_matrix(r, k, n, &raw);
        if systematic {
            g = RingMatrix::identity(r, k).hstack(&g).unwrap();
        }
        let c = RingCode::new(&g);
        let verdict = c.is_lcd().map_err(|e| TestCaseError::fail(e.to_string()))?;
        if let Some(gram) = c.gram_is_nonsingular().unwrap() {
            prop_assert_eq!(gram, verdict);
        }
        if systematic {
            prop_assert!(c.presentation_is_free());
        }
        for comp in c.components() {
            let hull = comp.hull_dim().map_err(|e| TestCaseError::fail(e.to_string()))?;
            if comp.k() > 0 {
                prop_assert_eq!(hull == 0, comp.generator().gram().det().unwrap() != comp.spec().zero());
            }
        }
        let gray = c.gray_image();
        prop_assert_eq!(gray.is_lcd().unwrap(), verdict);
        prop_assert_eq!(gray.hull_dim().unwrap(), c.hull_dim().unwrap());
        Ok(())
    })
}

fn cyclic_divisors() -> Vec<(u32, usize, lcdkit::cyclic::Poly)> {
    let mut out = Vec::new();
    for q in [3u32, 5] {
        for n in 3..=8 {
            for f in monic_divisors(field(q), n) {
                out.push((q, n, f));
            }
        }
    }
    out
}

fn cyclic_lcd_hull() -> Result<(), String> {
    for (q, n, f) in cyclic_divisors() {
        let hull = cyclic_code(&f, n).map_err(|e| e.to_string())?.hull_dim().map_err(|e| e.to_string())?;
        let verdict = cyclic_is_lcd(&f, n).map_err(|e| e.to_string())?;
        if verdict != (hull == 0) {
            return Err(format!("q = {q}, n = {n}, f = {f}: verdict {verdict}, hull {hull}"));
        }
    }
    Ok(())
}

fn cyclic_self_reciprocal_iff_lcd() -> Result<(), String> {
    self_reciprocal_iff_lcd(|_, _| true)
}

fn cyclic_self_reciprocal_iff_lcd_coprime() -> Result<(), String> {
    self_reciprocal_iff_lcd(|q, n| n % q as usize != 0)
}

fn self_reciprocal_iff_lcd(keep: fn(u32, usize) -> bool) -> Result<(), String> {
    let mut bad = Vec::new();
    for (q, n, f) in cyclic_divisors().into_iter().filter(|(q, n, _)| keep(*q, *n)) {
        let sr = f.is_self_reciprocal_up_to_scalar().map_err(|e| e.to_string())?;
        let lcd = cyclic_code(&f, n).map_err(|e| e.to_string())?.is_lcd().map_err(|e| e.to_string())?;
        if sr != lcd {
            bad.push(format!("q={q} n={n} f={f} (self-reciprocal {sr}, lcd {lcd})"));
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(format!("{} counterexamples: {}", bad.len(), bad.join("; ")))
    }
}

fn no_self_dual_cyclic() -> Result<(), String> {
    for n in [3usize, 4, 6] {
        let divs = monic_divisors(field(3), n);
        for f1 in &divs {
            for f2 in &divs {
                for f3 in &divs {
                    let c = r_cyclic_code([f1, f2, f3], n).map_err(|e| e.to_string())?;
                    let dual = c.dual();
                    let equal = (0..3).all(|i| same_code(&c.components()[i], &dual.components()[i]));
                    if equal || c.is_self_dual() {
                        return Err(format!("n = {n}: <{f1}, {f2}, {f3}> is self-dual"));
                    }
                }
            }
        }
    }
    Ok(())
}
