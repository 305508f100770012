use num_bigint::BigInt;
use num_rational::Ratio;

use qshuffle::catalan::catalan_element;
use qshuffle::format::{render, OutputFormat};
use qshuffle::pbw::independence_evidence;
use qshuffle::relations::{verify_all, verify_balanced_lemma, verify_section3, SuiteConfig};
use qshuffle::{AlgElt, Algebra, Element, Engine, Error, LaurentPoly, Pbw, PbwLabel, ShuffleEngine, Status, Word};

#[test]
fn default_suite_passes() {
    let suite = verify_all::<BigInt>(&SuiteConfig::default()).unwrap();
    assert!(suite.all_passed(), "{:?}", suite.failures().next());
    assert!(!suite.is_vacuous());
    assert_eq!(suite.exit_code(), 0);
    let identities: std::collections::BTreeSet<_> = suite.records.iter().map(|r| r.identity.as_str()).collect();
    for name in ["q_serre", "pbw_image", "recurrence_xc", "profile_sum", "qint_sum", "balanced_lemma", "catalan_support", "aver", "commutation", "mixed_product", "zeta_delta", "delta_support"] {
        assert!(identities.contains(name), "{name} missing");
    }
}

#[test]
fn suite_order_is_deterministic() {
    let config = SuiteConfig { section3: Some((2, 2)), ..SuiteConfig::empty() };
    let a = verify_all::<BigInt>(&config).unwrap();
    let b = verify_all::<BigInt>(&config).unwrap();
    let keys = |s: &qshuffle::Suite| s.records.iter().map(|r| (r.identity.clone(), r.params.clone())).collect::<Vec<_>>();
    assert_eq!(keys(&a), keys(&b));
    let mut sorted = keys(&a);
    sorted.sort();
    assert_eq!(keys(&a), sorted);
}

#[test]
fn report_lines_are_json() {
    let alg = Algebra::new();
    let r = verify_balanced_lemma(&alg, "xy".parse().unwrap()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
    assert_eq!(v["identity"], "balanced_lemma");
    assert_eq!(v["params"]["word"], "xy");
    assert_eq!(v["status"], "pass");
    assert!(v.get("residual").is_none());
}

#[test]
fn failures_carry_residuals() {
    let alg = Algebra::with_rule(qshuffle::CoefficientRule::OffByOne);
    let rs = verify_section3(&alg, 1, 0);
    let bad = rs.iter().find(|r| r.status == Status::Fail).expect("corrupted rule fails");
    let residual = bad.residual.as_ref().unwrap();
    assert!(!residual.is_zero());
    let v: serde_json::Value = serde_json::from_str(&bad.to_json_line()).unwrap();
    let back: Element = serde_json::from_value(v["residual"].clone()).unwrap();
    assert_eq!(&back, residual);
}

#[test]
fn works_with_machine_integers() {
    let engine = ShuffleEngine::<i64>::new();
    let x = AlgElt::<i64>::from_word("x".parse().unwrap());
    let y = AlgElt::<i64>::from_word("y".parse().unwrap());
    let p = engine.product(&x, &y);
    assert_eq!(p.coeff("yx".parse().unwrap()), LaurentPoly::q_pow(-2));
    let c2 = catalan_element::<i64>(2);
    let big = catalan_element::<BigInt>(2);
    assert_eq!(c2.to_string(), big.to_string());
}

#[test]
fn json_schema_matches() {
    let e: Element = serde_json::from_str(r#"{"terms":[{"word":"xy","coeff":{"0":"1"}},{"word":"yx","coeff":{"-2":"1"}}]}"#).unwrap();
    let engine = Engine::new();
    assert_eq!(engine.product(&Element::from_word("x".parse().unwrap()), &Element::from_word("y".parse().unwrap())), e);
    assert_eq!(render(&e, OutputFormat::Json), r#"{"terms":[{"word":"xy","coeff":{"0":"1"}},{"word":"yx","coeff":{"-2":"1"}}]}"#);
}

#[test]
fn evaluation_point_errors() {
    let alg = Algebra::new();
    let pbw = Pbw::new(&alg);
    let zero = Ratio::from_integer(BigInt::from(0));
    assert!(matches!(independence_evidence(&pbw, 2, &zero), Err(Error::ZeroEvaluationPoint)));
    let minus_one = Ratio::from_integer(BigInt::from(-1));
    assert!(matches!(independence_evidence(&pbw, 2, &minus_one), Err(Error::DegenerateEvaluation { .. })));
    let half = Ratio::new(BigInt::from(1), BigInt::from(2));
    assert!(independence_evidence(&pbw, 3, &half).unwrap().passed());
}

#[test]
fn trivial_word_and_limits() {
    assert_eq!("1".parse::<Word>().unwrap(), Word::empty());
    assert!("".parse::<Word>().is_err());
    assert!(matches!("xa".parse::<Word>(), Err(Error::ParseWord(_))));
    assert!(PbwLabel::new(qshuffle::PbwKind::Delta, 0).is_err());
}
