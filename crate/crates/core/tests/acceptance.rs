//! Acceptance run: one line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use burau_core::corpus::{perturb, random_braid, random_diagram, random_move};
use burau_core::engine::generator_matrix;
use burau_core::finitetype::{bk_coefficient, is_zero_matrix};
use burau_core::markov::{evaluate_stochastic, mat_mul, mat_pow, persistence_check, persistence_exponent, simulate_walks, stationary};
use burau_core::matrix::permutation_rational;
use burau_core::{burau_matrix, parse_braid, parse_tangle, series_burau, BurauMatrix, LaurentPoly, RatFun, StringLinkDiagram};
use num_rational::BigRational;
use num_traits::One;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome { pass: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { pass: false, detail: detail.into() }
}

fn within(limit: Duration, started: Instant, mut out: Outcome) -> Outcome {
    let took = started.elapsed();
    if took > limit {
        out.pass = false;
        out.detail = format!("{} (took {:.2?}, limit {:?})", out.detail, took, limit);
    } else {
        out.detail = format!("{} in {:.2?}", out.detail, took);
    }
    out
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn poly(terms: &[(i64, i64)]) -> RatFun {
    RatFun::from_poly(LaurentPoly::from_terms(terms.iter().copied()))
}

fn corpus() -> Vec<StringLinkDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0A1);
    let mut out = Vec::new();
    for i in 0..60 {
        let n = 2 + i % 3;
        let braid = random_braid(&mut rng, n, 2 + i % 6, false);
        out.push(if i % 2 == 0 { braid } else { perturb(&mut rng, &braid, 4, false, 12) });
    }
    for _ in 0..6 {
        out.push(perturb(&mut rng, &StringLinkDiagram::identity(1), 5, false, 12));
    }
    out
}

fn ac1() -> Outcome {
    let started = Instant::now();
    for n in 2..=5 {
        for i in 1..n {
            for inv in [false, true] {
                let w = format!("s{i}{}", if inv { "^-1" } else { "" });
                let got = burau_matrix(&parse_braid(&w, n).unwrap()).unwrap();
                // Block [[1 - t^e, t^e], [1, 0]] at (i, i+1), or its inverse.
                let mut want = BurauMatrix::identity(n);
                let (a, b) = (i - 1, i);
                if inv {
                    want.set(a, a, RatFun::zero());
                    want.set(a, b, RatFun::one());
                    want.set(b, a, RatFun::t_inv());
                    want.set(b, b, &RatFun::one() - &RatFun::t_inv());
                } else {
                    want.set(a, a, &RatFun::one() - &RatFun::t());
                    want.set(a, b, RatFun::t());
                    want.set(b, a, RatFun::one());
                    want.set(b, b, RatFun::zero());
                }
                if got != want || got != generator_matrix(i, inv, n) {
                    return fail(format!("{w} on {n} strands:\n{}", got.to_text()));
                }
            }
        }
    }
    within(Duration::from_secs(1), started, ok("all generators and inverses, n <= 5"))
}

fn ac2() -> Outcome {
    let m = |w: &str, n| burau_matrix(&parse_braid(w, n).unwrap()).unwrap();
    let mut checked = 0;
    for n in 2usize..=5 {
        for i in 1..n {
            for j in 1..n {
                let pairs: Vec<(String, String)> = if j == i + 1 {
                    vec![(format!("s{i} s{j} s{i}"), format!("s{j} s{i} s{j}"))]
                } else if i.abs_diff(j) >= 2 {
                    vec![(format!("s{i} s{j}"), format!("s{j} s{i}"))]
                } else {
                    vec![]
                };
                for (a, b) in pairs {
                    if m(&a, n) != m(&b, n) {
                        return fail(format!("{a} != {b} on {n} strands"));
                    }
                    checked += 1;
                }
            }
            if !m(&format!("s{i} s{i}^-1"), n).rows().enumerate().all(|(r, row)| {
                row.iter().enumerate().all(|(c, x)| if r == c { x.is_one() } else { x.is_zero() })
            }) {
                return fail(format!("s{i} s{i}^-1 is not the identity"));
            }
        }
    }
    ok(format!("{checked} braid and commutation relations exact, n <= 5"))
}

fn ac3(corpus: &[StringLinkDiagram]) -> Outcome {
    let started = Instant::now();
    let tested: Vec<_> = corpus.iter().filter(|d| d.crossing_count() <= 12).collect();
    for d in &tested {
        let exact = burau_matrix(d).unwrap().expand_h(6).unwrap();
        if series_burau(d, 5) != exact {
            return fail(format!("mismatch on\n{}", d.render()));
        }
    }
    if tested.len() < 50 {
        return fail(format!("only {} diagrams", tested.len()));
    }
    within(Duration::from_secs(60), started, ok(format!("{} diagrams, K = 5", tested.len())))
}

fn ac4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0A4);
    let mut kinds = [0usize; 3];
    let mut applied = 0;
    let mut d = random_braid(&mut rng, 3, 4, false);
    let mut b = burau_matrix(&d).unwrap();
    while applied < 200 {
        if applied % 25 == 0 {
            let n = 2 + applied / 25 % 3;
            d = random_braid(&mut rng, n, 4, false);
            b = burau_matrix(&d).unwrap();
        }
        let Some(mv) = random_move(&mut rng, &d, false, 12) else { continue };
        let e = d.apply_move(&mv).unwrap();
        let be = burau_matrix(&e).unwrap();
        if be != b {
            return fail(format!("{mv:?} changed the matrix of\n{}", d.render()));
        }
        let name = format!("{mv:?}");
        kinds[if name.starts_with("R1") { 0 } else if name.starts_with("R2") { 1 } else { 2 }] += 1;
        d = e;
        applied += 1;
    }
    if kinds.contains(&0) {
        return fail(format!("move mix R1/R2/R3 = {kinds:?}"));
    }
    ok(format!("200 moves (R1 {}, R2 {}, R3 {})", kinds[0], kinds[1], kinds[2]))
}

fn ac5(corpus: &[StringLinkDiagram]) -> Outcome {
    let mut one_strand = 0;
    for d in corpus {
        let b = burau_matrix(d).unwrap();
        if !b.row_sums().iter().all(RatFun::is_one) {
            return fail(format!("row sum not 1 on\n{}", d.render()));
        }
        if b.eval_exact(&BigRational::one()).unwrap() != permutation_rational(&d.permutation()) {
            return fail(format!("B(1) is not the permutation on\n{}", d.render()));
        }
        if d.n() == 1 {
            one_strand += 1;
            if b != BurauMatrix::identity(1) {
                return fail(format!("1-strand diagram gives {}", b.to_text()));
            }
        }
    }
    ok(format!("{} diagrams, {one_strand} of them on 1 strand", corpus.len()))
}

const THREADED_KINK: &str = "strands 2
crossing 1 +
crossing 2 +
crossing 3 -
strand 1 from 1 to 1: U1 O2
strand 2 from 2 to 2: O3 U2 O1 U3
";

fn ac6() -> Outcome {
    let loop_weight = &RatFun::t() * &(&RatFun::one() - &RatFun::t_inv());
    let two_minus_t = poly(&[(0, 2), (1, -1)]);
    let star = loop_weight.kleene_star().unwrap();
    if star != two_minus_t.recip().unwrap() || star.to_string() != "(1)/(2 - t)" {
        return fail(format!("kleene_star gave {star}"));
    }
    let kink = parse_tangle("strands 1\ncrossing 1 -\nstrand 1 from 1 to 1: U1 O1\n").unwrap();
    if burau_matrix(&kink).unwrap() != BurauMatrix::identity(1) {
        return fail("negative kink is not (1)");
    }
    let d = parse_tangle(THREADED_KINK).unwrap();
    let e = |p: RatFun| p.checked_div(&two_minus_t).unwrap();
    let want = BurauMatrix::from_rows(vec![
        vec![e(RatFun::one()), e(poly(&[(0, 1), (1, -1)]))],
        vec![e(poly(&[(-1, 1), (0, -1)])), e(poly(&[(-1, -1), (0, 3), (1, -1)]))],
    ]);
    let got = burau_matrix(&d).unwrap();
    if got != want {
        return fail(format!("reconstructed example gave\n{}", got.to_text()));
    }
    ok("kleene_star(t(1 - t^-1)) = (1)/(2 - t), kink = (1), example matrix reconstructed")
}

fn ac7() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0A7);
    let mut count = [0usize; 3];
    let mut attempts = 0;
    while count.iter().sum::<usize>() < 60 && attempts < 10_000 {
        attempts += 1;
        let k = 1 + attempts % 3;
        let d = random_diagram(&mut rng, attempts % 2 == 0, 10);
        if d.crossing_count() < k {
            continue;
        }
        let ids: BTreeSet<usize> = sample(&mut rng, d.crossing_count(), k).into_iter().collect();
        let s = d.make_singular(&ids).unwrap();
        for j in 0..k {
            if !is_zero_matrix(&bk_coefficient(&s, j)) {
                return fail(format!("b_{j} nonzero with {k} double points on\n{}", s.render()));
            }
        }
        count[k - 1] += 1;
    }
    if count.contains(&0) {
        return fail(format!("double-point mix {count:?}"));
    }
    within(
        Duration::from_secs(30),
        started,
        ok(format!("|D| = 1, 2, 3 on {}, {}, {} links", count[0], count[1], count[2])),
    )
}

fn positive_corpus() -> Vec<StringLinkDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0A8);
    let mut out: Vec<_> = ["s1", "s1 s1", "s1 s2", "s1 s2 s1", "s2 s1 s2 s2", "s1 s2 s3", "s1 s3 s2 s1"]
        .iter()
        .map(|w| parse_braid(w, 1 + w.split(' ').map(|t| t[1..].parse::<usize>().unwrap()).max().unwrap()).unwrap())
        .collect();
    while out.len() < 12 {
        out.push(random_diagram(&mut rng, true, 8));
    }
    out
}

fn ac8() -> Outcome {
    let diagrams = positive_corpus();
    let mut worst_z: f64 = 0.0;
    for d in &diagrams {
        for t0 in [q(1, 4), q(1, 2), q(3, 4)] {
            let p = evaluate_stochastic(d, &t0).unwrap().p;
            for row in &p {
                if row.iter().any(|&x| x < 0.0) || (row.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
                    return fail(format!("not stochastic at {t0}:\n{}", d.render()));
                }
            }
            let est = simulate_walks(d, &t0, 100_000, 0x5EED).unwrap();
            for (fr, pr) in est.frequencies().iter().zip(&p) {
                for (f, x) in fr.iter().zip(pr) {
                    let sigma = (x * (1.0 - x) / 1e5).sqrt();
                    let dev = (f - x).abs();
                    if sigma == 0.0 {
                        if dev > 0.0 {
                            return fail(format!("impossible walk observed at {t0}:\n{}", d.render()));
                        }
                    } else {
                        worst_z = worst_z.max(dev / sigma);
                    }
                }
            }
            let p2 = evaluate_stochastic(&d.power(2).unwrap(), &t0).unwrap().p;
            let gap = p2.iter().flatten().zip(mat_mul(&p, &p).iter().flatten()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            if gap > 1e-10 {
                return fail(format!("Chapman-Kolmogorov gap {gap:e}"));
            }
        }
    }
    if worst_z > 5.0 {
        return fail(format!("Monte Carlo deviation {worst_z:.2} sigma"));
    }
    ok(format!("{} positive diagrams x 3 values of t, worst deviation {worst_z:.2} sigma", diagrams.len()))
}

fn ac9() -> Outcome {
    let half = q(1, 2);
    let mut regular = 0;
    for d in positive_corpus() {
        let Some(n) = persistence_exponent(&d) else { continue };
        regular += 1;
        let pn = evaluate_stochastic(&d.power(n).unwrap(), &half).unwrap().p;
        if pn.iter().flatten().any(|&x| x <= 0.0) {
            return fail(format!("power {n} has a zero entry:\n{}", d.render()));
        }
        let st = stationary(&d, &half, 1e-15).unwrap();
        let p = evaluate_stochastic(&d, &half).unwrap().p;
        let limit = mat_pow(&p, 1 << 12);
        let gap = limit.iter().flat_map(|r| r.iter().zip(&st.u).map(|(a, b)| (a - b).abs())).fold(0.0, f64::max);
        if gap > 1e-8 || st.row_limit_gap > 1e-8 {
            return fail(format!("rows of P^n are {gap:e} from u"));
        }
        let rep = persistence_check(&d, &half, 200).unwrap();
        let slope_gap = rep.slopes.iter().flat_map(|r| r.iter().zip(&st.u).map(|(a, b)| (a - b).abs())).fold(0.0, f64::max);
        if slope_gap > 1e-4 || !rep.all_persistent {
            return fail(format!("partial-sum slope off by {slope_gap:e}"));
        }
    }
    if regular == 0 {
        return fail("no regular diagram in the corpus");
    }
    ok(format!("{regular} regular diagrams: B(d^N) > 0, row limits within 1e-8, slopes within 1e-4"))
}

fn main() -> ExitCode {
    let corpus = corpus();
    type Check<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);
    let checks: Vec<Check> = vec![
        ("generator fidelity", Box::new(ac1)),
        ("braid and commutation relations", Box::new(ac2)),
        ("series oracle equals exact expansion", Box::new(|| ac3(&corpus))),
        ("Reidemeister invariance", Box::new(ac4)),
        ("row sums, one strand, t = 1", Box::new(|| ac5(&corpus))),
        ("example machinery", Box::new(ac6)),
        ("finite-type vanishing", Box::new(ac7)),
        ("Markov layer", Box::new(ac8)),
        ("persistence and stationary limits", Box::new(ac9)),
    ];
    let mut failures = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let out = check();
        failures += usize::from(!out.pass);
        println!("[{}] {:>2} {name}: {}", if out.pass { "PASS" } else { "FAIL" }, i + 1, out.detail);
    }
    let summary = if failures == 0 {
        "all quantitative claims reproduced at desk scale by criteria 1-9"
    } else {
        "some criteria failed; see above"
    };
    println!("[{}] 10 desk-scale reproduction: {summary}", if failures == 0 { "PASS" } else { "FAIL" });
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
