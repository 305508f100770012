//! Rendering of elements as plain text, JSON or LaTeX.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freealg::AlgElt;
use crate::laurent::{qint, LaurentPoly};
use crate::scalar::Coefficient;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "latex" => Ok(OutputFormat::Latex),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?}"))),
        }
    }
}

pub fn render<T: Coefficient>(a: &AlgElt<T>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => a.to_string(),
        OutputFormat::Json => serde_json::to_string(a).expect("element serializes"),
        OutputFormat::Latex => latex(a),
    }
}

/// A coefficient split into sign, integer content, power of `q`, power of
/// `q - q^-1`, q-integer factors `[n]_q^k` (ascending `n`) and whatever is
/// left over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored<T: Coefficient> {
    pub negative: bool,
    pub content: T,
    pub q_power: i32,
    pub diff_power: u32,
    pub qints: Vec<(u32, u32)>,
    pub rest: LaurentPoly<T>,
}

/// Greedy factorization, trying larger q-integers first. Returns `None`
/// for zero.
pub fn factor<T: Coefficient>(c: &LaurentPoly<T>) -> Option<Factored<T>> {
    let (_, lead) = c.terms().next_back()?;
    let negative = lead.is_negative();
    let content = c.terms().fold(T::zero(), |g, (_, v)| g.gcd(v));
    let mut rest = LaurentPoly::from_terms(c.terms().map(|(e, v)| {
        let v = v.clone() / content.clone();
        (e, if negative { -v } else { v })
    }));

    let diff = LaurentPoly::q_minus_q_inv();
    let mut diff_power = 0;
    while let Ok(r) = rest.exact_div(&diff) {
        rest = r;
        diff_power += 1;
    }

    let mut qints = Vec::new();
    let span = (rest.max_exp()? - rest.min_exp()?) as u32;
    for n in (2..=span / 2 + 1).rev() {
        let d = qint(n);
        let mut k = 0;
        while let Ok(r) = rest.exact_div(&d) {
            rest = r;
            k += 1;
        }
        if k > 0 {
            qints.push((n, k));
        }
    }
    qints.reverse();

    let q_power = match rest.as_monomial() {
        Some((v, e)) if v.is_one() => {
            rest = LaurentPoly::one();
            e
        }
        _ => 0,
    };
    Some(Factored { negative, content, q_power, diff_power, qints, rest })
}

fn latex_poly<T: Coefficient>(p: &LaurentPoly<T>) -> String {
    let mut s = String::new();
    for (k, (e, v)) in p.terms().rev().enumerate() {
        let (neg, mag) = (v.is_negative(), v.abs());
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let unit = mag.is_one();
        if !unit || e == 0 {
            write!(s, "{mag}").unwrap();
        }
        match e {
            0 => {}
            1 => s.push('q'),
            _ => write!(s, "q^{{{e}}}").unwrap(),
        }
    }
    s
}

/// LaTeX for a coefficient, e.g. `-q^{-2}(q - q^{-1})[2]_q^{2}[3]_q`.
pub fn latex_coeff<T: Coefficient>(c: &LaurentPoly<T>) -> String {
    let Some(f) = factor(c) else { return "0".into() };
    let mut s = String::new();
    if f.negative {
        s.push('-');
    }
    let mut factors = String::new();
    match f.q_power {
        0 => {}
        1 => factors.push('q'),
        e => write!(factors, "q^{{{e}}}").unwrap(),
    }
    match f.diff_power {
        0 => {}
        1 => factors.push_str("(q - q^{-1})"),
        k => write!(factors, "(q - q^{{-1}})^{{{k}}}").unwrap(),
    }
    for (n, k) in &f.qints {
        if *k == 1 {
            write!(factors, "[{n}]_q").unwrap();
        } else {
            write!(factors, "[{n}]_q^{{{k}}}").unwrap();
        }
    }
    if !f.rest.is_one() {
        write!(factors, "({})", latex_poly(&f.rest)).unwrap();
    }
    if !f.content.is_one() || factors.is_empty() {
        write!(s, "{}", f.content).unwrap();
    }
    s.push_str(&factors);
    s
}

/// LaTeX for an element; words are set upright, coefficients factored.
pub fn latex<T: Coefficient>(a: &AlgElt<T>) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (w, c)) in a.sorted_terms().into_iter().enumerate() {
        let coeff = latex_coeff(c);
        let (neg, coeff) = match coeff.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, coeff),
        };
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let word = if w.is_empty() { "1".to_string() } else { format!("\\mathrm{{{w}}}") };
        if coeff == "1" {
            s.push_str(&word);
        } else if w.is_empty() {
            s.push_str(&coeff);
        } else {
            write!(s, "{coeff}\\,{word}").unwrap();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::catalan_element;
    use crate::freealg::Word;
    use num_bigint::BigInt;

    type L = LaurentPoly<BigInt>;
    type E = AlgElt<BigInt>;

    fn lp(t: &[(i32, i64)]) -> L {
        L::from_terms(t.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn coefficient_factoring() {
        assert_eq!(latex_coeff(&L::one()), "1");
        assert_eq!(latex_coeff(&L::zero()), "0");
        assert_eq!(latex_coeff(&lp(&[(0, -3)])), "-3");
        assert_eq!(latex_coeff(&qint::<BigInt>(2)), "[2]_q");
        assert_eq!(latex_coeff(&(&qint::<BigInt>(2) * &qint(2))), "[2]_q^{2}");
        let c = &(&qint::<BigInt>(3) * &qint(2)) * &qint(2);
        assert_eq!(latex_coeff(&c), "[2]_q^{2}[3]_q");
        assert_eq!(latex_coeff(&lp(&[(-4, 1), (0, -1)])), "-q^{-2}(q - q^{-1})[2]_q");
        assert_eq!(latex_coeff(&lp(&[(2, 1), (0, 1)])), "q[2]_q");
        assert_eq!(latex_coeff(&lp(&[(2, 2), (0, 1)])), "(2q^{2} + 1)");
    }

    #[test]
    fn factoring_rebuilds_the_coefficient() {
        for c in [lp(&[(3, 2), (1, -6), (-1, 4)]), &qint::<BigInt>(4) * &L::q_minus_q_inv().pow(3), lp(&[(-2, -5)])] {
            let f = factor(&c).unwrap();
            let mut back = f.rest.scale(&f.content).shift(f.q_power);
            back = &back * &L::q_minus_q_inv().pow(f.diff_power);
            for (n, k) in &f.qints {
                back = &back * &qint(*n).pow(*k);
            }
            if f.negative {
                back = -back;
            }
            assert_eq!(back, c);
        }
    }

    #[test]
    fn element_rendering() {
        let c2 = catalan_element::<BigInt>(2);
        assert_eq!(latex(&c2), "[2]_q^{2}[3]_q\\,\\mathrm{xxyy} + [2]_q^{2}\\,\\mathrm{xyxy}");
        let d = E::term("xy".parse().unwrap(), lp(&[(-4, 1), (0, -1)]));
        assert_eq!(render(&d, OutputFormat::Latex), "-q^{-2}(q - q^{-1})[2]_q\\,\\mathrm{xy}");
        assert_eq!(latex(&E::one()), "1");
        assert_eq!(latex(&E::zero()), "0");
        let mixed = &E::from_word("x".parse().unwrap()) - &E::from_word(Word::empty());
        assert_eq!(latex(&mixed), "-1 + \\mathrm{x}");
    }

    #[test]
    fn json_round_trip() {
        let c3 = catalan_element::<BigInt>(3);
        let s = render(&c3, OutputFormat::Json);
        let back: E = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c3);
        assert_eq!(render(&c3, OutputFormat::Json), s);
    }

    #[test]
    fn format_names() {
        assert_eq!("latex".parse::<OutputFormat>().unwrap(), OutputFormat::Latex);
        assert!("yaml".parse::<OutputFormat>().is_err());
    }
}
