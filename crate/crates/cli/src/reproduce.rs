//! The acceptance table: nine criteria, each a pass/fail line with timing.
//!
//! Randomized suites draw from a ChaCha8 stream seeded by the caller.

use std::fmt;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hurwitz_core::alexander::{
    alexander_polynomial, build_matrix, minor_gcd, verify, AlexanderMatrix, AlexanderResult,
};
use hurwitz_core::braid::{artin_apply, b_nm, full_twist, g_nm_presentation, le_formula, BraidWord};
use hurwitz_core::constructions::{
    abelian_cgroup, g2_presentation, hurwitz_product, torus6, universal_char_oracle, universal_hurwitz,
};
use hurwitz_core::covering::betti_b1;
use hurwitz_core::laurent::{cyclotomic, factor_cyclotomic, CyclotomicFactorization, LaurentPoly, Unit};
use hurwitz_core::presentation::{CPresentation, CRelation};
use hurwitz_core::words::{Letter, Word};

const CASES: usize = 256;

pub const DEFAULT_SEED: u64 = 20240611;

/// One line of the table.
#[derive(Debug, Clone)]
pub struct Row {
    pub criterion: usize,
    pub name: &'static str,
    pub pass: bool,
    pub seconds: f64,
    pub detail: String,
}

impl Row {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "criterion": self.criterion,
            "name": self.name,
            "pass": self.pass,
            "seconds": self.seconds,
            "detail": self.detail,
        })
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {:<34} {} ({:.3} s) {}",
            self.criterion,
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.seconds,
            self.detail
        )
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok_detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: ok_detail }
    } else {
        Outcome { pass: false, detail: failures.join("; ") }
    }
}

fn p(c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_i64s(0, c)
}

fn t_minus_one() -> LaurentPoly {
    p(&[-1, 1])
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

/// Results computed for criteria 1 to 5, re-checked by criterion 9.
#[derive(Default)]
struct Corpus {
    results: Vec<AlexanderResult>,
}

fn criterion_1(corpus: &mut Corpus) -> Outcome {
    let mut failures = Vec::new();
    for (n, m) in [(2usize, 3u32), (2, 5), (3, 4), (3, 5)] {
        let (r, dt) = timed(|| alexander_polynomial(&g_nm_presentation(n, m)));
        let want = le_formula(n as u64, m as u64).unwrap();
        if r.canonical != want {
            failures.push(format!("G_{{{n},{m}}}: {} != {want}", r.canonical));
        }
        if dt > Duration::from_secs(1) {
            failures.push(format!("G_{{{n},{m}}} took {dt:?}"));
        }
        corpus.results.push(r);
    }
    outcome(failures, "G_{2,3}, G_{2,5}, G_{3,4}, G_{3,5} match the quotient formula".into())
}

fn criterion_2(corpus: &mut Corpus) -> Outcome {
    let mut failures = Vec::new();
    let (_, dt) = timed(|| {
        for m in 1..=6u32 {
            let r = alexander_polynomial(&g_nm_presentation(2, 2 * m));
            let want = (p(&[1, -1]) * LaurentPoly::geometric(0, 2, m as usize, 1)).canonical();
            if r.canonical != want {
                failures.push(format!("G_{{2,{}}}: {} != {want}", 2 * m, r.canonical));
            }
            corpus.results.push(r);
        }
    });
    if dt > Duration::from_secs(1) {
        failures.push(format!("took {dt:?}"));
    }
    outcome(failures, format!("m = 1..6 in {:.3} s", dt.as_secs_f64()))
}

fn criterion_3(corpus: &mut Corpus) -> Outcome {
    let (r, dt) = timed(|| alexander_polynomial(&g2_presentation()));
    let mut failures = Vec::new();
    if r.canonical != p(&[-1, 0, 1]) {
        failures.push(format!("Delta = {}", r.canonical));
    }
    if r.components != 2 || r.hurwitz_degree != Some(4) {
        failures.push(format!("k = {}, m = {:?}", r.components, r.hurwitz_degree));
    }
    for (name, c) in r.checks.failures() {
        failures.push(format!("{name}: {}", c.detail));
    }
    if dt > Duration::from_secs(5) {
        failures.push(format!("took {dt:?}"));
    }
    corpus.results.push(r);
    outcome(failures, format!("Delta = t^2 - 1, k = 2, all checks pass, {:.3} s", dt.as_secs_f64()))
}

fn criterion_4(corpus: &mut Corpus) -> Outcome {
    let mut failures = Vec::new();
    let mut times = Vec::new();
    for m in 2..=5usize {
        let (r, dt) = timed(|| alexander_polynomial(&universal_hurwitz(m)));
        let tm = LaurentPoly::monomial(1.into(), m as i64) - LaurentPoly::one();
        let formula = (&t_minus_one() * &tm.pow(m as u32 - 2)).canonical();
        let oracle = universal_char_oracle(m).canonical();
        if r.canonical != formula || r.canonical != oracle {
            failures.push(format!("m = {m}: pipeline {}, formula {formula}, oracle {oracle}", r.canonical));
        }
        if dt > Duration::from_secs(30) {
            failures.push(format!("m = {m} took {dt:?}"));
        }
        times.push(format!("{:.3}", dt.as_secs_f64()));
        corpus.results.push(r);
    }
    outcome(failures, format!("m = 2..5 agree with the permutation oracle, times {} s", times.join("/")))
}

fn criterion_5(corpus: &mut Corpus) -> Outcome {
    let mut failures = Vec::new();
    let z2 = abelian_cgroup(2);
    let h23 = torus6(2, 3);
    let cases = [
        ("Z^2 ◇ Z^2", (z2.clone(), z2.clone()), t_minus_one().pow(2)),
        ("G(2) ◇ Z^2", (g2_presentation(), z2.clone()), &t_minus_one().pow(2) * &p(&[1, 1])),
        ("H(G_{2,3}) ◇ H(G_{2,3})", (h23.clone(), h23.clone()), p(&[1, -1, 1]).pow(2)),
    ];
    let (_, dt) = timed(|| {
        for (name, (a, b), want) in cases {
            let prod = hurwitz_product(&a, &b).expect("both factors are Hurwitz");
            let r = alexander_polynomial(&prod);
            if r.canonical != want {
                failures.push(format!("{name}: {} != {want}", r.canonical));
            }
            corpus.results.push(r);
        }
    });
    if dt > Duration::from_secs(60) {
        failures.push(format!("took {dt:?}"));
    }
    outcome(failures, format!("three products multiply, {:.3} s total", dt.as_secs_f64()))
}

fn fact(factors: &[(u64, u32)]) -> CyclotomicFactorization {
    CyclotomicFactorization { unit: Unit::ONE, factors: factors.to_vec(), residual: None }
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    for k in 1..=5u32 {
        let b = betti_b1(&fact(&[(6, k)]), 6).unwrap().b1;
        if b != 2 * k as u64 {
            failures.push(format!("{{(6,{k})}}, n = 6: b1 = {b}"));
        }
        let b = betti_b1(&fact(&[(1, k), (2, k)]), 2).unwrap().b1;
        if b != k as u64 {
            failures.push(format!("{{(1,{k}),(2,{k})}}, n = 2: b1 = {b}"));
        }
    }
    let samples: [&[(u64, u32)]; 4] = [&[(6, 1)], &[(6, 3)], &[(2, 2), (3, 1)], &[(1, 2), (4, 1), (6, 2)]];
    let mut coprime_cases = 0;
    for f in samples {
        for n in 1..=60u64 {
            if f.iter().all(|&(d, _)| d == 1 || num_integer::gcd(n, d) == 1) {
                coprime_cases += 1;
                let b = betti_b1(&fact(f), n).unwrap().b1;
                if b != 0 {
                    failures.push(format!("{f:?}, n = {n}: b1 = {b}"));
                }
            }
        }
    }
    outcome(failures, format!("sextic and G(2) families k = 1..5, {coprime_cases} coprime cases vanish"))
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let prime_powers =
        [(2u64, 2i64), (3, 3), (4, 2), (5, 5), (7, 7), (8, 2), (9, 3), (16, 2), (25, 5), (27, 3)];
    for (k, q) in prime_powers {
        let v = cyclotomic(k).eval_at_one();
        if v != q.into() {
            failures.push(format!("Phi_{k}(1) = {v}, expected {q}"));
        }
    }
    for k in [6u64, 10, 12, 15, 18, 20, 30] {
        let v = cyclotomic(k).eval_at_one();
        if v != 1.into() {
            failures.push(format!("Phi_{k}(1) = {v}, expected 1"));
        }
    }
    outcome(failures, "17 values of Phi_k(1)".into())
}

fn random_word(rng: &mut ChaCha8Rng, gens: usize, max_runs: usize) -> Word {
    let runs = rng.gen_range(0..=max_runs);
    Word::from_letters((0..runs).map(|_| {
        let e = loop {
            let e = rng.gen_range(-3i64..=3);
            if e != 0 {
                break e;
            }
        };
        Letter::new(rng.gen_range(1..=gens), e)
    }))
}

fn random_presentation(rng: &mut ChaCha8Rng, max_gens: usize, max_rels: usize) -> CPresentation {
    let m = rng.gen_range(1..=max_gens);
    let rels = rng.gen_range(0..=max_rels);
    let relations = (0..rels)
        .map(|_| {
            let conj = random_word(rng, m, 3);
            CRelation::new(rng.gen_range(1..=m), rng.gen_range(1..=m), conj)
        })
        .collect();
    CPresentation::new(m, relations).unwrap()
}

fn random_braid(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| (rng.gen_range(1..n), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
    BraidWord::new(n, letters).unwrap()
}

fn leibniz(a: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = a.len();
    let mut total = LaurentPoly::zero();
    for perm in (0..n).permutations(n) {
        let inversions =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let term = perm.iter().enumerate().fold(LaurentPoly::one(), |acc, (i, &j)| &acc * &a[i][j]);
        if inversions % 2 == 1 {
            total -= &term;
        } else {
            total += &term;
        }
    }
    total
}

/// Canonical GCD of all order-(cols - 1) minors by permutation expansion,
/// without simplification or early exit.
fn brute_minor_gcd(m: &AlexanderMatrix) -> LaurentPoly {
    let cols = m.col_count();
    if cols == 1 {
        return LaurentPoly::one();
    }
    let k = cols - 1;
    let mut acc = LaurentPoly::zero();
    for cs in (0..cols).combinations(k) {
        for rs in (0..m.row_count()).combinations(k) {
            let sub: Vec<Vec<LaurentPoly>> =
                rs.iter().map(|&r| cs.iter().map(|&c| m.entry(r, c).clone()).collect()).collect();
            acc = hurwitz_core::laurent::gcd(&acc, &leibniz(&sub));
        }
    }
    acc
}

fn random_entry(rng: &mut ChaCha8Rng) -> LaurentPoly {
    match rng.gen_range(0..4) {
        0 => LaurentPoly::zero(),
        1 => LaurentPoly::monomial(
            if rng.gen_bool(0.5) { 1.into() } else { (-1).into() },
            rng.gen_range(-2..=2),
        ),
        _ => {
            let len = rng.gen_range(1..=3);
            let c: Vec<i64> = (0..len).map(|_| rng.gen_range(-2..=2)).collect();
            LaurentPoly::from_i64s(rng.gen_range(-1..=1), &c)
        }
    }
}

fn criterion_8(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut counts = Vec::new();

    // row sums of Alexander matrices
    let mut n = 0;
    for _ in 0..CASES {
        let q = random_presentation(&mut rng, 5, 8);
        let m = build_matrix(&q);
        for row in m.rows() {
            n += 1;
            if !LaurentPoly::sum(row).is_zero() {
                failures.push(format!("row sum nonzero for {:?}", q.relations()));
            }
        }
    }
    counts.push(format!("{n} rows"));

    // Fox calculus
    for _ in 0..CASES {
        let u = random_word(&mut rng, 4, 8);
        let v = random_word(&mut rng, 4, 8);
        let i = rng.gen_range(1..=4);
        let lhs = u.compose(&v).fox_abelianized(i);
        let rhs = &u.fox_abelianized(i) + &v.fox_abelianized(i).shift(u.exponent_sum());
        if lhs != rhs {
            failures.push(format!("product rule fails for {u} * {v}, x{i}"));
        }
        let total: Vec<LaurentPoly> = (1..=4).map(|g| u.fox_abelianized(g)).collect();
        let lhs = &LaurentPoly::sum(&total) * &t_minus_one();
        let rhs = LaurentPoly::monomial(1.into(), u.exponent_sum()) - LaurentPoly::one();
        if lhs != rhs {
            failures.push(format!("fundamental identity fails for {u}"));
        }
    }
    counts.push(format!("{CASES} Fox pairs"));

    // braid relations at the action level
    for _ in 0..CASES {
        let n = rng.gen_range(3..=5);
        let i = rng.gen_range(1..n - 1);
        let prefix = random_braid(&mut rng, n, 6);
        let a = BraidWord::new(n, vec![(i, 1), (i + 1, 1), (i, 1)]).unwrap();
        let b = BraidWord::new(n, vec![(i + 1, 1), (i, 1), (i + 1, 1)]).unwrap();
        if prefix.compose(&a).generator_images() != prefix.compose(&b).generator_images() {
            failures.push(format!("braid relation fails at s{i} after {prefix}"));
        }
        let far: Vec<(usize, usize)> =
            (1..n).flat_map(|j| (1..n).map(move |k| (j, k))).filter(|(j, k)| j + 1 < *k).collect();
        if let Some(&(j, k)) = far.get(rng.gen_range(0..far.len().max(1))) {
            let a = BraidWord::new(n, vec![(j, 1), (k, 1)]).unwrap();
            let b = BraidWord::new(n, vec![(k, 1), (j, 1)]).unwrap();
            if prefix.compose(&a).generator_images() != prefix.compose(&b).generator_images() {
                failures.push(format!("s{j} and s{k} do not commute after {prefix}"));
            }
        }
    }
    counts.push(format!("{CASES} braid relations"));

    // full twist acts by conjugation with y = x1...xn
    for _ in 0..CASES {
        let n = rng.gen_range(2..=4);
        let w = random_word(&mut rng, n, 6);
        let y = Word::product_range(1, n);
        let img = artin_apply(&full_twist(n), &w).unwrap();
        if img != w.conjugate(&y.inverse()) {
            failures.push(format!("full twist on {w} gives {img}"));
        }
        if b_nm(n, n as u32) != full_twist(n) {
            failures.push(format!("b_{{{n},{n}}} differs from the full twist"));
        }
    }
    counts.push(format!("{CASES} full twists"));

    // factorization round trip
    for _ in 0..CASES {
        let k = rng.gen_range(0..4);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut g = LaurentPoly::monomial(sign.into(), rng.gen_range(-3..=3));
        for _ in 0..k {
            g = &g * &cyclotomic(rng.gen_range(1..=40)).pow(rng.gen_range(1..=3));
        }
        let f = factor_cyclotomic(&g).unwrap();
        if !f.is_cyclotomic() || f.reconstruct() != g {
            failures.push(format!("factorization of {g} does not round-trip"));
        }
    }
    counts.push(format!("{CASES} factorizations"));

    // unit-pivot simplification against brute-force minors
    let mut pivoted = 0;
    for case in 0..CASES {
        let m = if case % 2 == 0 {
            build_matrix(&random_presentation(&mut rng, 4, 8))
        } else {
            let cols = rng.gen_range(1..=4);
            let rows = rng.gen_range(0..=5);
            let data = (0..rows).map(|_| (0..cols).map(|_| random_entry(&mut rng)).collect()).collect();
            AlexanderMatrix::from_rows(cols, data)
        };
        let s = m.simplify_unit_pivots();
        if s.col_count() < m.col_count() {
            pivoted += 1;
        }
        let brute = brute_minor_gcd(&m);
        let fast = minor_gcd(&s);
        if brute != fast {
            failures.push(format!("minor GCD {fast} after pivots, {brute} by brute force on {m:?}"));
        }
    }
    counts.push(format!("{CASES} matrices ({pivoted} pivoted)"));

    failures.truncate(5);
    outcome(failures, counts.join(", "))
}

fn criterion_9(corpus: &Corpus) -> Outcome {
    let mut failures = Vec::new();
    for r in &corpus.results {
        let label = r.label.clone().unwrap_or_default();
        if r.hurwitz_degree.is_none() {
            failures.push(format!("{label}: no Hurwitz degree"));
        }
        let fresh = verify(&r.canonical, r.hurwitz_degree, r.components);
        if fresh != r.checks {
            failures.push(format!("{label}: report differs on recomputation"));
        }
        for (name, c) in fresh.failures() {
            failures.push(format!("{label}: {name} ({})", c.detail));
        }
    }
    outcome(failures, format!("{} presentations, 7 checks each", corpus.results.len()))
}

type Criterion = (&'static str, Box<dyn FnOnce(&mut Corpus) -> Outcome>);

/// Runs every criterion in order. `on_row` sees each row as soon as it is
/// finished.
pub fn run(seed: u64, mut on_row: impl FnMut(&Row)) -> Vec<Row> {
    let mut corpus = Corpus::default();
    let criteria: Vec<Criterion> = vec![
        ("torus-knot polynomials", Box::new(criterion_1)),
        ("G_{2,2m} series", Box::new(criterion_2)),
        ("G(2)", Box::new(criterion_3)),
        ("universal Hurwitz oracle", Box::new(criterion_4)),
        ("Hurwitz product multiplicativity", Box::new(criterion_5)),
        ("Betti numbers", Box::new(|_| criterion_6())),
        ("cyclotomic values at 1", Box::new(|_| criterion_7())),
        ("property suites", Box::new(move |_| criterion_8(seed))),
        ("verify on the corpus", Box::new(|c: &mut Corpus| criterion_9(c))),
    ];
    let mut rows = Vec::new();
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let (o, dt) = timed(|| check(&mut corpus));
        let row = Row { criterion: i + 1, name, pass: o.pass, seconds: dt.as_secs_f64(), detail: o.detail };
        on_row(&row);
        rows.push(row);
    }
    rows
}
