//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qshuffle::catalan::{
    catalan_element, cw_elevation, cw_profile, enumerate_catalan, profile, profile_to_word, tech1_sweep,
};
use qshuffle::pbw::{independence_evidence, pbw_monomials};
use qshuffle::relations::{
    verify_all, verify_commutation, verify_delta_images, verify_homogeneity, verify_main_theorem, verify_qint_sums,
    verify_section3, verify_zeta, SuiteConfig,
};
use qshuffle::shuffle::{qserre_check, qserre_residual, shuffle_words_enumerate, shuffle_words_tail};
use qshuffle::{
    qint, Algebra, CoefficientRule, Element, Engine, Laurent, Letter, Pbw, PbwKind, PbwLabel, Prefactor, Report, Word,
};

type Outcome = Result<String, String>;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn q(e: i32) -> Laurent {
    Laurent::q_pow(e)
}

fn elt(terms: &[(&str, Laurent)]) -> Element {
    Element::from_terms(terms.iter().map(|(s, c)| (w(s), c.clone())))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(reports: &[Report]) -> Result<usize, String> {
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.to_string()),
        None => Ok(reports.iter().map(|r| r.checks).sum()),
    }
}

fn golden() -> Outcome {
    let engine = Engine::new();
    let q2 = &q(0) + &q(2);
    let qi2 = qint(2);
    let qi3 = qint(3);
    let cases: Vec<(&str, &str, Element)> = vec![
        ("x", "y", elt(&[("xy", q(0)), ("yx", q(-2))])),
        ("y", "x", elt(&[("yx", q(0)), ("xy", q(-2))])),
        ("x", "x", elt(&[("xx", q2.clone())])),
        ("y", "y", elt(&[("yy", q2.clone())])),
        ("x", "yyy", elt(&[("xyyy", q(0)), ("yxyy", q(-2)), ("yyxy", q(-4)), ("yyyx", q(-6))])),
        ("xyx", "y", elt(&[("xyxy", q(0)), ("xyyx", &q(0) + &q(-2)), ("yxyx", q(-2))])),
        (
            "xx",
            "yyy",
            elt(&[
                ("xxyyy", q(0)),
                ("xyxyy", q(-2)),
                ("xyyxy", q(-4)),
                ("xyyyx", q(-6)),
                ("yxxyy", q(-4)),
                ("yxyxy", q(-6)),
                ("yxyyx", q(-8)),
                ("yyxxy", q(-8)),
                ("yyxyx", q(-10)),
                ("yyyxx", q(-12)),
            ]),
        ),
        (
            "xy",
            "xxyy",
            elt(&[("xyxxyy", q(0)), ("xxyyxy", q(0)), ("xxyxyy", &qi2 * &qi2), ("xxxyyy", &qi3 * &qi3)]),
        ),
    ];
    for (u, v, expected) in &cases {
        let got = engine.product(&Element::from_word(w(u)), &Element::from_word(w(v)));
        ensure(&got == expected, || format!("{u} * {v} = {got}, expected {expected}"))?;
        ensure(*engine.words(w(u), w(v)) == *expected, || format!("{u} * {v} differs on the word route"))?;
    }
    Ok(format!("{} expansions", cases.len()))
}

fn serre() -> Outcome {
    let engine = Engine::new();
    for (a, b) in [(Letter::X, Letter::Y), (Letter::Y, Letter::X)] {
        let r = qserre_residual(&engine, a, b);
        ensure(r.is_zero(), || format!("residual with leading {}: {r}", a.as_char()))?;
    }
    let n = all_pass(&qserre_check(&engine))?;
    Ok(format!("{n} relations, residuals zero"))
}

fn catalan_small() -> Outcome {
    let two = qint::<BigInt>(2);
    let three = qint::<BigInt>(3);
    let four = qint::<BigInt>(4);
    let p = |fs: &[&Laurent]| fs.iter().fold(Laurent::one(), |acc, f| &acc * *f);
    let expected = [
        Element::one(),
        elt(&[("xy", two.clone())]),
        elt(&[("xyxy", p(&[&two, &two])), ("xxyy", p(&[&three, &two, &two]))]),
        elt(&[
            ("xxxyyy", p(&[&two, &two, &three, &three, &four])),
            ("xxyxyy", p(&[&two, &two, &two, &three, &three])),
            ("xxyyxy", p(&[&two, &two, &two, &three])),
            ("xyxxyy", p(&[&two, &two, &two, &three])),
            ("xyxyxy", p(&[&two, &two, &two])),
        ]),
    ];
    for (n, e) in expected.iter().enumerate() {
        let got = catalan_element::<BigInt>(n);
        ensure(&got == e, || format!("C_{n} = {got}"))?;
    }
    let counts: Vec<usize> = (0..=8).map(|n| enumerate_catalan(n).len()).collect();
    ensure(counts == [1, 1, 2, 5, 14, 42, 132, 429, 1430], || format!("counts {counts:?}"))?;
    Ok("C_0..C_3 exact, |Cat_n| for n <= 8".into())
}

fn main_theorem() -> Outcome {
    let alg = Algebra::new();
    let pbw = Pbw::new(&alg);
    let mut n = all_pass(&verify_main_theorem(&pbw, 5, Prefactor::default()))?;
    n += all_pass(&verify_zeta(&pbw, 5).map_err(|e| e.to_string())?)?;
    n += all_pass(&verify_delta_images(&pbw, 5).map_err(|e| e.to_string())?)?;
    n += all_pass(&verify_homogeneity(&pbw, 6).map_err(|e| e.to_string())?)?;
    let d1 = pbw.recursive(PbwLabel::delta(1)).map_err(|e| e.to_string())?;
    ensure(*d1 == elt(&[("xy", &q(-4) - &q(0))]), || format!("E_d = {d1}"))?;
    Ok(format!("three families n <= 5, recurrences, zeta and support checks ({n} checks)"))
}

fn formula_agreement() -> Outcome {
    let mut words = 0;
    for n in 0..=8 {
        for v in enumerate_catalan(n) {
            let p = profile(v).map_err(|e| e.to_string())?;
            let back = profile_to_word(&p).map_err(|e| e.to_string())?;
            ensure(back == v, || format!("{v} -> {p} -> {back}"))?;
            let a = cw_elevation::<BigInt>(v).map_err(|e| e.to_string())?;
            let b = cw_profile::<BigInt>(&p).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{v}: elevation {a}, profile {b}"))?;
            words += 1;
        }
    }
    Ok(format!("{words} Catalan words"))
}

fn profile_sums() -> Outcome {
    let profiles = tech1_sweep::<BigInt>(6);
    ensure(!profiles.is_empty(), || "no profiles".into())?;
    all_pass(&profiles)?;
    let sums = all_pass(&verify_qint_sums::<BigInt>(20))?;
    Ok(format!("{} profiles, {sums} q-integer sums", profiles.len()))
}

fn commutation() -> Outcome {
    let alg = Algebra::new();
    let rs = verify_commutation(&alg, 5);
    ensure(rs.len() == 10, || format!("{} pairs", rs.len()))?;
    all_pass(&rs)?;
    Ok("10 pairs i < j <= 5".into())
}

fn section3() -> Outcome {
    let alg = Algebra::new();
    let rs = verify_section3(&alg, 3, 3);
    all_pass(&rs)?;
    let mut names: Vec<&str> = rs.iter().map(|r| r.identity.as_str()).collect();
    names.dedup();
    for name in ["odd_case_x", "odd_case_y", "even_case_x", "even_case_y"] {
        ensure(names.contains(&name), || format!("{name} not exercised"))?;
    }
    Ok(format!("{} instances", rs.len()))
}

fn independence() -> Outcome {
    let alg = Algebra::new();
    let pbw = Pbw::new(&alg);
    let q0 = Ratio::from_integer(BigInt::from(2));
    let mut counts = Vec::new();
    for d in 0..=6 {
        let r = independence_evidence(&pbw, d, &q0).map_err(|e| format!("degree {d}: {e}"))?;
        ensure(r.passed(), || r.to_string())?;
        counts.push(pbw_monomials(&pbw, d).map_err(|e| e.to_string())?.len());
    }
    ensure(counts == [1, 2, 4, 8, 14, 24, 40], || format!("monomial counts {counts:?}"))?;
    Ok(format!("full rank at q0 = 2, monomials {counts:?}"))
}

fn random_word(rng: &mut ChaCha8Rng, max: usize) -> Word {
    let n = rng.gen_range(0..=max);
    Word::from_letters((0..n).map(|_| if rng.gen() { Letter::Y } else { Letter::X })).unwrap()
}

fn random_coeff(rng: &mut ChaCha8Rng) -> Laurent {
    let k = rng.gen_range(1..=3);
    Laurent::from_terms((0..k).map(|_| (rng.gen_range(-3..=3), BigInt::from(rng.gen_range(-4..=4)))))
}

fn random_elt(rng: &mut ChaCha8Rng, max: usize) -> Element {
    let k = rng.gen_range(1..=3);
    Element::from_terms((0..k).map(|_| (random_word(rng, max), random_coeff(rng))))
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let engine = Engine::new();
    let mut cases = 0;
    for _ in 0..150 {
        let (a, b, c) = (random_elt(&mut rng, 3), random_elt(&mut rng, 3), random_elt(&mut rng, 3));
        let left = engine.product(&engine.product(&a, &b), &c);
        let right = engine.product(&a, &engine.product(&b, &c));
        ensure(left == right, || format!("associativity fails for {a}; {b}; {c}"))?;
        cases += 1;
    }
    for _ in 0..150 {
        let (u, v) = (random_word(&mut rng, 7), random_word(&mut rng, 7));
        let reference = shuffle_words_enumerate::<BigInt>(u, v);
        ensure(*engine.words(u, v) == reference, || format!("head route differs on {u} * {v}"))?;
        ensure(shuffle_words_tail::<BigInt>(u, v) == reference, || format!("tail route differs on {u} * {v}"))?;
        let (a, b) = (random_elt(&mut rng, 4), random_elt(&mut rng, 4));
        ensure(engine.product(&a, &b) == engine.product_by_words(&a, &b), || format!("element routes differ on {a}; {b}"))?;
        cases += 1;
    }
    for _ in 0..150 {
        let (u, v) = (random_word(&mut rng, 6), random_word(&mut rng, 6));
        let (ux, uy) = u.bidegree();
        let (vx, vy) = v.bidegree();
        let p = engine.words(u, v);
        ensure(p.iter().all(|(t, _)| t.bidegree() == (ux + vx, uy + vy)), || format!("grading fails on {u} * {v}"))?;
        cases += 1;
    }
    for _ in 0..150 {
        let (a, b) = (random_elt(&mut rng, 4), random_elt(&mut rng, 4));
        let lhs = engine.product(&a, &b).zeta();
        let rhs = engine.product(&b.zeta(), &a.zeta());
        ensure(lhs == rhs, || format!("zeta fails on {a}; {b}"))?;
        cases += 1;
    }
    Ok(format!("{cases} randomized cases"))
}

fn negative_controls() -> Outcome {
    let alg = Algebra::new();
    let pbw = Pbw::new(&alg);
    let perturbations = [
        Prefactor { q_shift: 1, diff_shift: 0 },
        Prefactor { q_shift: -1, diff_shift: 0 },
        Prefactor { q_shift: 0, diff_shift: 1 },
        Prefactor { q_shift: 0, diff_shift: -1 },
    ];
    let mut detected = 0;
    for pre in perturbations {
        let rs = verify_main_theorem(&pbw, 5, pre);
        for r in rs.iter().filter(|r| r.identity == "pbw_image") {
            ensure(!r.passed(), || format!("{pre:?} not detected: {r}"))?;
            detected += 1;
        }
    }
    for kind in [PbwKind::Alpha0, PbwKind::Alpha1, PbwKind::Delta] {
        let label = PbwLabel::new(kind, 2).unwrap();
        let shifted = pbw.closed_with(label, Prefactor { q_shift: 1, diff_shift: 0 }).unwrap();
        ensure(shifted != *pbw.recursive(label).unwrap(), || format!("{label} shift not detected"))?;
    }
    let config = SuiteConfig {
        rule: CoefficientRule::OffByOne,
        ..SuiteConfig::theorem(3)
    };
    let suite = verify_all::<BigInt>(&config).map_err(|e| e.to_string())?;
    let corrupted = suite.failures().count();
    ensure(corrupted > 0, || "off-by-one coefficient rule not detected".into())?;
    Ok(format!("{detected} perturbed images and {corrupted} off-by-one records failed as expected"))
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { name: "golden shuffle expansions", budget: secs(1), run: golden },
        Criterion { name: "q-Serre relations", budget: secs(1), run: serre },
        Criterion { name: "small Catalan elements and counts", budget: secs(5), run: catalan_small },
        Criterion { name: "PBW images match closed forms", budget: secs(60), run: main_theorem },
        Criterion { name: "coefficient formulas and profile round trip", budget: secs(30), run: formula_agreement },
        Criterion { name: "profile sums and q-integer sums", budget: secs(30), run: profile_sums },
        Criterion { name: "Catalan elements commute", budget: secs(60), run: commutation },
        Criterion { name: "product identities among x C_i, C_j, C_i y", budget: secs(120), run: section3 },
        Criterion { name: "PBW monomial independence", budget: secs(120), run: independence },
        Criterion { name: "randomized product properties", budget: secs(60), run: properties },
        Criterion { name: "negative controls", budget: secs(60), run: negative_controls },
    ];
    let mut failed = 0;
    for (k, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > c.budget => Err(format!("{msg}; took {elapsed:.2?}, budget {:?}", c.budget)),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {:>2} {}: {msg} ({elapsed:.2?})", k + 1, c.name),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {:>2} {}: {msg} ({elapsed:.2?})", k + 1, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
