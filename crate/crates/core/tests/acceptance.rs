//! Acceptance suite: one line per criterion on stdout, then a single assert.
//! Run with `cargo test --test acceptance -- --nocapture` to see timings.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use common::corpus::*;
use common::{dense, is_zero, random_algebra, random_invertible, transport, Oracle};
use homnambu::generators::*;
use homnambu::identities::*;
use homnambu::linalg::{frac, int, LinearMap, Vector};
use homnambu::{CheckConfig, CheckMode, CheckReport, Constructor, HomAlgebra, Identity, TraceFunctional};
use rand::Rng;

const C1_LIMIT: Duration = Duration::from_millis(1);
const C2_LIMIT: Duration = Duration::from_secs(1);
const C3_LIMIT: Duration = Duration::from_secs(300);
const C6_LIMIT: Duration = Duration::from_secs(10);
const C7_LIMIT: Duration = Duration::from_secs(120);
const C8_LIMIT: Duration = Duration::from_secs(30);
const C9_LIMIT: Duration = Duration::from_secs(1);

/// Exhaustive checks up to this many basis tuples in the closure suite.
const CLOSURE_EXHAUSTIVE_LIMIT: u128 = 1_000_000;
const CLOSURE_SAMPLES: usize = 500;
const CLOSURE_SEED: u64 = 0;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn within(limit: Duration, elapsed: Duration) -> bool {
    elapsed < limit
}

fn say(line: &str) {
    let mut out = std::io::stdout();
    writeln!(out, "{line}").unwrap();
    out.flush().unwrap();
}

fn a(n: usize, plus: bool, j: usize) -> Vector {
    Vector::basis(2 * n, fermion_index(n, plus, j))
}

fn criterion_1() -> Outcome {
    let (lambda, eta) = (int(1), [int(2), int(3)]);
    let (v_alpha, _) = fermionic_system(2, &lambda, &eta).unwrap();
    // the bracket [,,]_α alone, with identity twists
    let plain = v_alpha.forget_twists();
    let xs = [a(2, true, 1), a(2, true, 2)];
    let ys = [a(2, false, 2), a(2, true, 2), a(2, false, 2)];
    let start = Instant::now();
    let j = plain.hom_jacobian(&xs, &ys).unwrap();
    let elapsed = start.elapsed();

    let quoted = &lambda * &lambda * (&eta[0] / &eta[1] - &eta[0] * &eta[0]);
    let expected = a(2, true, 1).scale(&frac(-10, 3));
    let oracle = Oracle::new(&plain).jacobian(
        &xs.iter().map(dense).collect::<Vec<_>>(),
        &ys.iter().map(dense).collect::<Vec<_>>(),
    );
    let ok = j == expected && quoted == frac(-10, 3) && dense(&j) == oracle && within(C1_LIMIT, elapsed);
    outcome(ok, format!("J = {j}, λ²(η₁η₂⁻¹ − η₁²) = {quoted}, {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let (v_alpha, _) = fermionic_system(2, &int(1), &[int(2), int(3)]).unwrap();
    let nambu = check_hom_nambu(&v_alpha, &CheckConfig::exhaustive()).unwrap();
    let mult = v_alpha.is_multiplicative();
    let plain = check_hom_nambu(&v_alpha.forget_twists(), &CheckConfig::exhaustive()).unwrap();
    let elapsed = start.elapsed();
    let ok = nambu.passed
        && nambu.tuples_checked == 1024
        && mult.passed
        && !plain.passed
        && witness_reverifies(&v_alpha.forget_twists(), &plain)
        && within(C2_LIMIT, elapsed);
    outcome(ok, format!("V_α: {nambu}; {mult}; identity twists: {plain}; {elapsed:?}"))
}

/// The witness of a failed report is a genuine counterexample according to
/// the oracle, and its recorded sides match.
fn witness_reverifies(alg: &HomAlgebra, report: &CheckReport) -> bool {
    let Some(w) = &report.witness else { return false };
    let args: Vec<_> = w.args.to_vectors(alg.dim()).iter().map(dense).collect();
    match Oracle::new(alg).residual(&w.identity_name, &args) {
        Some(r) => !is_zero(&r) && r == dense(&(&w.lhs - &w.rhs)),
        None => w.lhs != w.rhs,
    }
}

fn closure_config(alg: &HomAlgebra) -> CheckConfig {
    let n = alg.arity() as u32;
    if (alg.dim() as u128).pow(2 * n - 1) <= CLOSURE_EXHAUSTIVE_LIMIT {
        CheckConfig::exhaustive()
    } else {
        CheckConfig::randomized(CLOSURE_SAMPLES, CLOSURE_SEED)
    }
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let corpus = closure_corpus();
    let mut failures = Vec::new();
    let (mut exhaustive, mut randomized) = (0, 0);
    for case in &corpus {
        let alg = match &case.output {
            Ok(alg) => alg,
            Err(e) => {
                failures.push(format!("{}: refused: {e}", case.name));
                continue;
            }
        };
        let cfg = closure_config(alg);
        for id in &case.conclusion {
            match id.check(alg, &cfg) {
                Ok(r) if r.passed => {
                    if r.mode == CheckMode::Exhaustive {
                        exhaustive += 1;
                    } else {
                        randomized += 1;
                    }
                }
                Ok(r) => failures.push(format!("{}: {r}", case.name)),
                Err(e) => failures.push(format!("{}: {id}: {e}", case.name)),
            }
        }
    }
    let elapsed = start.elapsed();
    for f in &failures {
        say(&format!("    {f}"));
    }
    let ok = corpus.len() >= 50 && failures.is_empty() && within(C3_LIMIT, elapsed);
    outcome(
        ok,
        format!(
            "{} outputs, {exhaustive} exhaustive and {randomized} randomized checks passed, {} failed; {elapsed:?}",
            corpus.len(),
            failures.len()
        ),
    )
}

fn criterion_4() -> Outcome {
    let c = Constructor::default();
    let mut rng = common::rng(4);
    let mut compared = 0;
    let mut mismatches = Vec::new();
    for (name, alg, beta) in weak_morphism_pairs() {
        let twisted = match c.twist(&alg, &beta) {
            Ok(t) => t,
            Err(e) => {
                mismatches.push(format!("{name}: {e}"));
                continue;
            }
        };
        let oracle = Oracle::new(&alg);
        let beta2 = beta.compose(&beta).unwrap();
        let n = alg.arity();
        for _ in 0..10 {
            let xs: Vec<Vector> = (0..n - 1).map(|_| common::random_vector(&mut rng, alg.dim())).collect();
            let ys: Vec<Vector> = (0..n).map(|_| common::random_vector(&mut rng, alg.dim())).collect();
            let lhs = twisted.hom_jacobian(&xs, &ys).unwrap();
            let j = oracle.jacobian(&xs.iter().map(dense).collect::<Vec<_>>(), &ys.iter().map(dense).collect::<Vec<_>>());
            let rhs = beta2.apply(&common::vector(&j)).unwrap();
            compared += 1;
            if lhs != rhs {
                mismatches.push(format!("{name}: {lhs} ≠ {rhs}"));
            }
        }
    }
    outcome(compared == 100 && mismatches.is_empty(), format!("{compared} tuples over 10 algebras, {} mismatches {mismatches:?}", mismatches.len()))
}

fn same_algebra(x: &HomAlgebra, y: &HomAlgebra) -> bool {
    x.bracket().entries() == y.bracket().entries() && x.twists() == y.twists()
}

fn criterion_5() -> Outcome {
    let c = Constructor::unchecked();
    let mut agree = 0;
    let mut total = 0;
    for (_, a) in ternary_associative_inputs() {
        total += 1;
        let direct = c.lts_from_ternary_assoc(&a).unwrap();
        let composed = c.lts_from_jts(&c.jts_from_ternary_assoc(&a).unwrap()).unwrap();
        agree += same_algebra(&direct, &composed) as usize;
    }
    for (_, a) in hom_associative_inputs() {
        total += 1;
        let direct = c.lts_from_hom_assoc(&a).unwrap();
        let composed = c.lts_from_ternary_assoc(&c.ternary_assoc_from_hom_assoc(&a).unwrap()).unwrap();
        agree += same_algebra(&direct, &composed) as usize;
    }
    outcome(total == 10 && agree == total, format!("{agree}/{total} inputs agree on structure constants and twists"))
}

fn octonion_table_sane(o: &HomAlgebra) -> bool {
    let e = |i| Vector::basis(8, i);
    let minus_one = e(0).scale(&int(-1));
    let unit = (0..8).all(|i| o.eval(&[e(0), e(i)]).unwrap() == e(i) && o.eval(&[e(i), e(0)]).unwrap() == e(i));
    let squares = (1..8).all(|i| o.eval(&[e(i), e(i)]).unwrap() == minus_one);
    let anti = (1..8).all(|i| {
        (1..8).filter(|&j| j != i).all(|j| o.eval(&[e(i), e(j)]).unwrap() == -&o.eval(&[e(j), e(i)]).unwrap())
    });
    // every product of basis elements is a signed basis element
    let signed = (0..8).all(|i| {
        (0..8).all(|j| {
            let p = o.eval(&[e(i), e(j)]).unwrap();
            let s = p.support();
            s.len() == 1 && (s[0].1 == &int(1) || s[0].1 == &int(-1))
        })
    });
    // e1e2 = e4 and its cyclic shifts (indices mod 7)
    let lines = (0..7).all(|k| {
        let idx = |t: usize| 1 + (t + k) % 7;
        o.eval(&[e(idx(0)), e(idx(1))]).unwrap() == e(idx(3))
    });
    unit && squares && anti && signed && lines
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let c = Constructor::default();
    let o = octonions();
    let sane = octonion_table_sane(&o);
    let alt = check_alternative(&o, &CheckConfig::exhaustive()).unwrap();
    let morph = HomAlgebra::is_morphism(&octonion_basic_triple_automorphism(), &o, &o).unwrap();
    let assoc = check_hom_associative(&o, &CheckConfig::exhaustive()).unwrap();
    let minus = c.minus_algebra(&o).unwrap();
    let maltsev = check_maltsev(&minus, &CheckConfig::exhaustive()).unwrap();
    let plus = c.plus_algebra(&o).unwrap();
    let jordan = check_jordan_algebra(&plus, &CheckConfig::exhaustive()).unwrap();
    let elapsed = start.elapsed();
    let ok = sane
        && alt.passed
        && alt.tuples_checked == 2 * 512
        && morph.passed
        && !assoc.passed
        && witness_reverifies(&o, &assoc)
        && maltsev.passed
        && jordan.passed
        && within(C6_LIMIT, elapsed);
    let witness = assoc.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
    outcome(
        ok,
        format!("table sane: {sane}; {alt}; {morph}; associativity witness: {witness}; {maltsev}; {jordan}; {elapsed:?}"),
    )
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let c = Constructor::default();
    let albert = exceptional_jordan();
    let lift = lift_octonion_map(&octonion_basic_triple_automorphism()).unwrap();
    let morph = HomAlgebra::is_morphism(&lift, &albert, &albert).unwrap();
    let jts = c.jts_from_jordan(&albert).unwrap();
    let cfg = CheckConfig::randomized(500, 0);
    let plain = check_hom_jordan_ts(&jts, &cfg).unwrap();
    let twisted = c.ternary_twist(&jts, &lift).unwrap();
    let hom = check_hom_jordan_ts(&twisted, &cfg).unwrap();
    let elapsed = start.elapsed();
    let ok = morph.passed && morph.tuples_checked == 27 * 27 + 27 && plain.passed && hom.passed && within(C7_LIMIT, elapsed);
    outcome(ok, format!("{morph}; J(H₃(O)): {plain}; twisted by the lift: {hom}; {elapsed:?}"))
}

/// `[[[[x₁…x_n], αx…], α²x…], α³x…]` evaluated directly in `l`.
fn nested_twice_raised(l: &HomAlgebra, idx: &[usize]) -> Vector {
    let n = l.arity();
    let e = |i: usize| Vector::basis(l.dim(), i);
    let alpha = l.twist(0);
    let mut acc = l.eval(&idx[..n].iter().map(|&i| e(i)).collect::<Vec<_>>()).unwrap();
    let mut pos = n;
    for level in 1..=3u64 {
        let power = alpha.power(level);
        let mut args = vec![acc];
        args.extend(idx[pos..pos + n - 1].iter().map(|&i| power.apply(&e(i)).unwrap()));
        acc = l.eval(&args).unwrap();
        pos += n - 1;
    }
    acc
}

fn matches_nesting(raised: &HomAlgebra, base: &HomAlgebra) -> bool {
    let mut ok = true;
    homnambu::linalg::for_each_tuple(raised.dim(), raised.arity(), |t| {
        if ok && raised.bracket().get(t).unwrap() != nested_twice_raised(base, t) {
            ok = false;
        }
    });
    ok
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let c = Constructor::default();
    let five = c.iterate_raise(&sl2(), 2).unwrap();
    let five_ok = five.arity() == 5 && matches_nesting(&five, &sl2());
    let nambu = check_hom_nambu(&five, &CheckConfig::exhaustive()).unwrap();
    let twisted_five = c.iterate_raise(&twisted_sl2(), 2).unwrap();
    let twisted_five_ok = matches_nesting(&twisted_five, &twisted_sl2())
        && twisted_five.twist(0) == &twisted_sl2().twist(0).power(4);
    let nine = c.iterate_raise(&twisted_quaternion(), 2).unwrap();
    let nine_ok = nine.arity() == 9 && matches_nesting(&nine, &twisted_quaternion());
    let elapsed = start.elapsed();
    let ok = five_ok && nambu.passed && nambu.tuples_checked == 3u128.pow(9) && twisted_five_ok && nine_ok && within(C8_LIMIT, elapsed);
    outcome(
        ok,
        format!(
            "5-ary from sl2 matches nesting: {five_ok}; {nambu}; twisted sl2: {twisted_five_ok}; 9-ary from twisted 3-Lie matches nesting: {nine_ok}; {elapsed:?}"
        ),
    )
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let c = Constructor::default();
    let q = quaternion_cross_3lie();
    let lowered = c.lower_arity(&q, &Vector::basis(4, 0)).unwrap();
    let lie = check_hom_lie(&lowered, &CheckConfig::exhaustive()).unwrap();
    // [e₂,e₃]' = [e₁,e₂,e₃] = e₄
    let value_ok = lowered.eval(&[Vector::basis(4, 1), Vector::basis(4, 2)]).unwrap() == Vector::basis(4, 3);
    let beta = LinearMap::scalar(2, int(2));
    let reduced = c.reduce_trace_bracket(&affine2(), &affine2_trace(), &beta, &Vector::basis(2, 0)).unwrap();
    let reduced_lie = check_hom_lie(&reduced, &CheckConfig::exhaustive()).unwrap();
    let elapsed = start.elapsed();
    let ok = lie.passed && value_ok && reduced_lie.passed && reduced.twist(0) == &beta && within(C9_LIMIT, elapsed);
    outcome(ok, format!("lowered 3-Lie: {lie}; reduced affine2 bracket: {reduced_lie} (zero bracket: {}); {elapsed:?}", reduced.bracket().is_zero()))
}

fn soundness_identities(arity: usize) -> Vec<Identity> {
    use Identity::*;
    if arity == 2 {
        vec![HomNambu, Antisymmetry, HomLie, HomAssociative]
    } else {
        vec![HomNambu, Antisymmetry, HomLieTs, HomJordanTs, TernaryTotalHomAssoc]
    }
}

fn soundness_corpus() -> Vec<(String, HomAlgebra)> {
    let mut out = Vec::new();
    let mut rng = common::rng(10);
    for k in 0..30u64 {
        let dim = rng.gen_range(2..=3);
        let arity = rng.gen_range(2..=3);
        let density = [0.1, 0.25, 0.5][k as usize % 3];
        out.push((format!("random #{k}"), random_algebra(1000 + k, dim, arity, density, k % 2 == 1)));
    }
    let c = Constructor::default();
    let valid: Vec<(&str, HomAlgebra)> = vec![
        ("sl2", sl2()),
        ("twisted sl2", twisted_sl2()),
        ("heisenberg", heisenberg()),
        ("twisted heisenberg", twisted_heisenberg()),
        ("affine2", affine2()),
        ("dual_numbers", dual_numbers()),
        ("L(sl2)", c.lts_from_hom_lie(&sl2()).unwrap()),
        ("L(twisted heisenberg)", c.lts_from_hom_lie(&twisted_heisenberg()).unwrap()),
        ("heisenberg trace bracket", c.ternary_from_trace(&heisenberg(), &TraceFunctional::from_ints(&[1, 0, 0]), &LinearMap::scalar(3, int(2))).unwrap()),
        ("twisted dual_numbers", c.twist(&dual_numbers(), &dual_numbers_scaling(&int(3))).unwrap()),
    ];
    for (k, (name, alg)) in valid.into_iter().enumerate() {
        for s in 0..2u64 {
            let p = random_invertible(200 + 2 * k as u64 + s, alg.dim());
            out.push((format!("{name} conjugated #{s}"), transport(&alg, &p)));
        }
    }
    out
}

fn criterion_10() -> Outcome {
    let corpus = soundness_corpus();
    let (mut verdicts, mut passes, mut fails, mut witnesses) = (0, 0, 0, 0);
    let mut problems = Vec::new();
    for (k, (name, alg)) in corpus.iter().enumerate() {
        for id in soundness_identities(alg.arity()) {
            let full = id.check(alg, &CheckConfig::exhaustive()).unwrap();
            let sampled = id.check(alg, &CheckConfig::randomized(500, k as u64)).unwrap();
            verdicts += 1;
            if full.passed != sampled.passed {
                problems.push(format!("{name} {id}: exhaustive {} vs randomized {}", full.passed, sampled.passed));
            }
            if full.passed {
                passes += 1;
            } else {
                fails += 1;
            }
            for r in [&full, &sampled] {
                if !r.passed {
                    witnesses += 1;
                    if !witness_reverifies(alg, r) {
                        problems.push(format!("{name} {id}: witness does not re-verify: {r}"));
                    }
                }
            }
        }
    }
    let ok = corpus.len() >= 50 && problems.is_empty() && passes > 0 && fails > 0;
    for p in &problems {
        say(&format!("    {p}"));
    }
    outcome(
        ok,
        format!(
            "{} algebras, {verdicts} verdicts agree ({passes} pass, {fails} fail), {witnesses} witnesses re-verified, {} problems",
            corpus.len(),
            problems.len()
        ),
    )
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("fermionic counterexample", criterion_1),
        ("fermionic V_α is Hom-Nambu", criterion_2),
        ("closure corpus", criterion_3),
        ("twist-Jacobian lemma", criterion_4),
        ("path independence", criterion_5),
        ("octonion suite", criterion_6),
        ("exceptional Jordan", criterion_7),
        ("iterated arity raising", criterion_8),
        ("arity reductions", criterion_9),
        ("checker soundness", criterion_10),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        say(&format!("criterion {:>2} {verdict} {name}: {} [{:.2?}]", i + 1, o.detail, start.elapsed()));
        if !o.passed {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
