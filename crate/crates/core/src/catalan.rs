//! Catalan words, their elevation sequences and profiles, the coefficient
//! `C(w)` and the Catalan elements `C_n`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::freealg::{AlgElt, Letter, Word};
use crate::laurent::{qfact, qint, LaurentPoly};
use crate::report::{Params, VerificationReport};
use crate::scalar::Coefficient;

pub fn is_balanced(w: Word) -> bool {
    w.weight() == 0
}

/// Balanced with every partial sum of bars nonnegative.
pub fn is_catalan(w: Word) -> bool {
    let mut h = 0i32;
    for a in w.letters() {
        h += a.bar();
        if h < 0 {
            return false;
        }
    }
    h == 0
}

/// All Catalan words of length `2n`, in canonical order.
pub fn enumerate_catalan(n: usize) -> Vec<Word> {
    fn go(w: Word, open: usize, height: usize, n: usize, out: &mut Vec<Word>) {
        if w.len() == 2 * n {
            out.push(w);
            return;
        }
        if open < n {
            go(w.push_back(Letter::X), open + 1, height + 1, n, out);
        }
        if height > 0 {
            go(w.push_back(Letter::Y), open, height - 1, n, out);
        }
    }
    assert!(2 * n <= Word::MAX_LEN, "Catalan words of length {} exceed the word capacity", 2 * n);
    let mut out = Vec::new();
    go(Word::empty(), 0, 0, n, &mut out);
    out
}

/// Balanced words of length `2n` (any sign of partial sums), canonical order.
pub fn enumerate_balanced(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << (2 * n)) {
        if bits.count_ones() as usize == n {
            let w = Word::from_letters((0..2 * n).map(|i| if bits >> i & 1 == 1 { Letter::Y } else { Letter::X })).unwrap();
            out.push(w);
        }
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Elevation(pub Vec<u32>);

impl fmt::Display for Elevation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<I: IntoIterator<Item = D>, D: fmt::Display>(f: &mut fmt::Formatter<'_>, it: I) -> fmt::Result {
    write!(f, "(")?;
    for (k, v) in it.into_iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, ")")
}

/// `(e_0, ..., e_2n)`, the running bar sums.
pub fn elevation(w: Word) -> Result<Elevation> {
    if !is_catalan(w) {
        return Err(Error::NotCatalan(w.to_string()));
    }
    let mut e = Vec::with_capacity(w.len() + 1);
    let mut h = 0i32;
    e.push(0);
    for a in w.letters() {
        h += a.bar();
        e.push(h as u32);
    }
    Ok(Elevation(e))
}

/// `(l_0, h_1, l_1, ..., h_r, l_r)`: valley and peak heights of a Catalan word.
///
/// Entries are signed so that malformed input can be represented and
/// rejected by [`Profile::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile(Vec<i64>);

impl Profile {
    /// Wraps a raw sequence; it must have odd length. Conditions on the
    /// entries are checked separately.
    pub fn new(entries: Vec<i64>) -> Result<Profile> {
        if entries.len().is_multiple_of(2) {
            return Err(Error::InvalidProfile {
                profile: format!("{entries:?}"),
                reason: "a profile has odd length 2r+1".into(),
            });
        }
        Ok(Profile(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len() / 2
    }

    /// `l_i`, `0 <= i <= r`.
    pub fn valley(&self, i: usize) -> i64 {
        self.0[2 * i]
    }

    /// `h_i`, `1 <= i <= r`.
    pub fn peak(&self, i: usize) -> i64 {
        self.0[2 * i - 1]
    }

    fn invalid(&self, reason: String) -> Error {
        Error::InvalidProfile { profile: self.to_string(), reason }
    }

    /// Checks that this is the profile of some Catalan word.
    pub fn validate(&self) -> Result<()> {
        let r = self.r();
        if self.valley(0) != 0 {
            return Err(self.invalid("(i) l_0 must be 0".into()));
        }
        for i in 1..r {
            if self.valley(i) < 0 {
                return Err(self.invalid(format!("(ii) l_{i} must be nonnegative")));
            }
        }
        if self.valley(r) != 0 {
            return Err(self.invalid(format!("(iii) l_{r} must be 0")));
        }
        for i in 1..=r {
            if self.valley(i - 1) >= self.peak(i) {
                return Err(self.invalid(format!("(iv) l_{} < h_{i} fails", i - 1)));
            }
            if self.peak(i) <= self.valley(i) {
                return Err(self.invalid(format!("(v) h_{i} > l_{i} fails")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

/// Accepts `0,2,0` or `(0,2,0)`.
impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Profile> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = inner
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>().map_err(|_| Error::InvalidProfile {
                    profile: s.to_string(),
                    reason: format!("{t:?} is not an integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Profile::new(entries)
    }
}

/// The elevation sequence with every interior point of a monotone run removed.
pub fn profile(w: Word) -> Result<Profile> {
    let e = elevation(w)?.0;
    let mut out = vec![e[0] as i64];
    for i in 1..e.len().saturating_sub(1) {
        let up_before = e[i] > e[i - 1];
        let up_after = e[i + 1] > e[i];
        if up_before != up_after {
            out.push(e[i] as i64);
        }
    }
    if e.len() > 1 {
        out.push(*e.last().unwrap() as i64);
    }
    Ok(Profile(out))
}

/// `x^{h_1 - l_0} y^{h_1 - l_1} x^{h_2 - l_1} ... x^{h_r - l_{r-1}} y^{h_r - l_r}`.
pub fn profile_to_word(p: &Profile) -> Result<Word> {
    p.validate()?;
    let mut letters = Vec::new();
    for i in 1..=p.r() {
        let up = p.peak(i) - p.valley(i - 1);
        let down = p.peak(i) - p.valley(i);
        letters.extend(std::iter::repeat_n(Letter::X, up as usize));
        letters.extend(std::iter::repeat_n(Letter::Y, down as usize));
    }
    Word::from_letters(letters)
}

/// `n = sum_i (h_i - l_i)` for a word of length `2n`.
pub fn profile_halflength(p: &Profile) -> Result<u32> {
    p.validate()?;
    let n: i64 = (1..=p.r()).map(|i| p.peak(i) - p.valley(i)).sum();
    Ok(n as u32)
}

/// How `C(w)` is computed from the elevation sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CoefficientRule {
    /// `prod_i [1 + e_i]_q`.
    #[default]
    Elevation,
    /// `prod_i [2 + e_i]_q`: a deliberately wrong rule for negative controls.
    OffByOne,
}

/// `C(w) = [1 + e_0]_q [1 + e_1]_q ... [1 + e_2n]_q`.
pub fn cw_elevation<T: Coefficient>(w: Word) -> Result<LaurentPoly<T>> {
    cw_with_rule(w, CoefficientRule::Elevation)
}

pub fn cw_with_rule<T: Coefficient>(w: Word, rule: CoefficientRule) -> Result<LaurentPoly<T>> {
    let shift = match rule {
        CoefficientRule::Elevation => 1,
        CoefficientRule::OffByOne => 2,
    };
    let e = elevation(w)?;
    Ok(e.0.iter().fold(LaurentPoly::one(), |acc, &h| &acc * &qint(h + shift)))
}

/// `C(l_0, h_1, ..., h_r, l_r)` as the double ratio of q-factorials
/// `prod [h_i]! [h_i + 1]! / prod [l_i]! [l_i + 1]!`.
///
/// Defined for any sequence of natural numbers; the division is exact for
/// Catalan profiles and reported as an error otherwise.
pub fn cw_profile<T: Coefficient>(p: &Profile) -> Result<LaurentPoly<T>> {
    if let Some(bad) = p.0.iter().find(|&&v| v < 0) {
        return Err(p.invalid(format!("entry {bad} is not a natural number")));
    }
    let fact = |v: i64| {
        let v = v as u32;
        &qfact::<T>(v) * &qfact::<T>(v + 1)
    };
    let num = (1..=p.r()).fold(LaurentPoly::one(), |acc, i| &acc * &fact(p.peak(i)));
    let den = (0..=p.r()).fold(LaurentPoly::one(), |acc, i| &acc * &fact(p.valley(i)));
    num.exact_div(&den)
}

/// `C_n = sum_{w in Cat_n} C(w) w`.
pub fn catalan_element<T: Coefficient>(n: usize) -> AlgElt<T> {
    catalan_element_with(n, CoefficientRule::Elevation)
}

pub fn catalan_element_with<T: Coefficient>(n: usize, rule: CoefficientRule) -> AlgElt<T> {
    let words = enumerate_catalan(n);
    let mut out = AlgElt::with_capacity(words.len());
    for w in words {
        out.add_term(w, cw_with_rule(w, rule).expect("enumerated words are Catalan"));
    }
    out
}

/// The summation identity for a Catalan profile with `r >= 1`:
///
/// `C(p) = sum_{i = xi}^{r-1} C(p_i) * sum_{t = l_i + 1}^{h_{i+1}} [2t]_q`
///
/// where `xi` is the last index `< r` with `l_i = 0` and `p_i` lowers every
/// entry `h_{i+1}, l_{i+1}, ..., l_{r-1}, h_r` by one (leaving `l_r`).
pub fn tech1_check<T: Coefficient>(p: &Profile) -> Result<VerificationReport<T>> {
    let start = Instant::now();
    p.validate()?;
    let r = p.r();
    if r == 0 {
        return Err(p.invalid("the summation identity needs r >= 1".into()));
    }
    let xi = (0..r).rev().find(|&i| p.valley(i) == 0).expect("l_0 = 0");
    let lhs = cw_profile::<T>(p)?;
    let mut rhs = LaurentPoly::zero();
    for i in xi..r {
        let mut lowered = p.0.clone();
        // h_{i+1} sits at index 2i+1; everything after it up to h_r is lowered.
        for v in &mut lowered[2 * i + 1..2 * r] {
            *v -= 1;
        }
        let c = cw_profile::<T>(&Profile(lowered))?;
        let window = ((p.valley(i) + 1)..=p.peak(i + 1)).fold(LaurentPoly::zero(), |acc, t| &acc + &qint(2 * t as u32));
        rhs += &(&c * &window);
    }
    let params = Params::new().with("profile", p.to_string());
    let report = if lhs == rhs {
        VerificationReport::pass("profile_sum", params, 1)
    } else {
        VerificationReport::fail("profile_sum", params, None, format!("C(p) = {lhs}, sum = {rhs}"))
    };
    Ok(report.timed(start))
}

/// Runs [`tech1_check`] on every Catalan profile of halflength `1..=max_half`.
pub fn tech1_sweep<T: Coefficient>(max_half: usize) -> Vec<VerificationReport<T>> {
    (1..=max_half)
        .flat_map(enumerate_catalan)
        .map(|w| {
            let p = profile(w).expect("Catalan");
            tech1_check::<T>(&p).unwrap_or_else(|e| {
                VerificationReport::fail("profile_sum", Params::new().with("profile", p.to_string()), None, e.to_string())
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type L = LaurentPoly<BigInt>;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Profile {
        s.parse().unwrap()
    }

    fn qi(n: u32) -> L {
        qint(n)
    }

    fn prod(ns: &[u32]) -> L {
        ns.iter().fold(L::one(), |acc, &n| &acc * &qi(n))
    }

    #[test]
    fn catalan_predicates() {
        assert!(is_catalan(w("xy")));
        assert!(is_balanced(w("yx")) && !is_catalan(w("yx")));
        assert!(is_catalan(Word::empty()));
        assert!(!is_catalan(w("xxy")));
        assert!(!is_balanced(w("xxy")));
    }

    #[test]
    fn enumeration_small() {
        let s = |n| enumerate_catalan(n).iter().map(|w| w.to_string()).collect::<Vec<_>>();
        assert_eq!(s(0), ["1"]);
        assert_eq!(s(1), ["xy"]);
        assert_eq!(s(2), ["xxyy", "xyxy"]);
        let mut three = s(3);
        three.sort();
        let mut exp = vec!["xyxyxy", "xxyyxy", "xyxxyy", "xxyxyy", "xxxyyy"];
        exp.sort();
        assert_eq!(three, exp);
    }

    #[test]
    fn catalan_numbers() {
        let counts: Vec<usize> = (0..=8).map(|n| enumerate_catalan(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn enumeration_matches_brute_force_filter() {
        for n in 0..=6 {
            let brute: Vec<Word> = enumerate_balanced(n).into_iter().filter(|&w| is_catalan(w)).collect();
            assert_eq!(enumerate_catalan(n), brute);
        }
    }

    #[test]
    fn elevation_table() {
        let cases = [
            ("xyxyxy", "(0,1,0,1,0,1,0)"),
            ("xyxxyy", "(0,1,0,1,2,1,0)"),
            ("xxyyxy", "(0,1,2,1,0,1,0)"),
            ("xxyxyy", "(0,1,2,1,2,1,0)"),
            ("xxxyyy", "(0,1,2,3,2,1,0)"),
            ("xy", "(0,1,0)"),
        ];
        for (word, e) in cases {
            assert_eq!(elevation(w(word)).unwrap().to_string(), e);
        }
        assert!(matches!(elevation(w("yx")), Err(Error::NotCatalan(_))));
    }

    #[test]
    fn profile_table() {
        let cases = [
            ("xyxyxy", "(0,1,0,1,0,1,0)"),
            ("xyxxyy", "(0,1,0,2,0)"),
            ("xxyyxy", "(0,2,0,1,0)"),
            ("xxyxyy", "(0,2,1,2,0)"),
            ("xxxyyy", "(0,3,0)"),
            ("1", "(0)"),
        ];
        for (word, pr) in cases {
            assert_eq!(profile(w(word)).unwrap().to_string(), pr);
            assert_eq!(profile_to_word(&p(pr)).unwrap(), w(word));
        }
        assert!(profile(w("yxxy")).is_err());
    }

    #[test]
    fn invalid_profiles() {
        let err = profile_to_word(&p("0,1,1,2,0")).unwrap_err();
        assert!(matches!(&err, Error::InvalidProfile { reason, .. } if reason.starts_with("(v)")), "{err}");
        assert!(profile_to_word(&p("1,2,0")).is_err());
        assert!(profile_to_word(&p("0,2,1")).is_err());
        assert!(profile_to_word(&p("0,2,-1,2,0")).is_err());
        assert!(profile_to_word(&p("0,2,2,3,0")).is_err());
        assert!("0,1".parse::<Profile>().is_err());
        assert!("0,a,0".parse::<Profile>().is_err());
    }

    #[test]
    fn halflength() {
        assert_eq!(profile_halflength(&p("0,3,0")).unwrap(), 3);
        assert_eq!(profile_halflength(&p("0,2,1,2,0")).unwrap(), 3);
        assert_eq!(profile_halflength(&p("0")).unwrap(), 0);
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(cw_elevation::<BigInt>(w("xxyy")).unwrap(), prod(&[3, 2, 2]));
        assert_eq!(cw_elevation::<BigInt>(w("xxxyyy")).unwrap(), prod(&[4, 3, 3, 2, 2]));
        assert!(cw_elevation::<BigInt>(Word::empty()).unwrap().is_one());
        assert_eq!(cw_profile::<BigInt>(&p("0,2,0")).unwrap(), prod(&[3, 2, 2]));
        assert_eq!(cw_profile::<BigInt>(&p("0,3,0")).unwrap(), prod(&[4, 3, 3, 2, 2]));
        assert_eq!(cw_profile::<BigInt>(&p("0,1,0")).unwrap(), qi(2));
        assert!(cw_profile::<BigInt>(&p("0,-1,0")).is_err());
    }

    #[test]
    fn catalan_elements_small() {
        let c = |n| catalan_element::<BigInt>(n);
        assert_eq!(c(0), AlgElt::one());
        assert_eq!(c(1), AlgElt::term(w("xy"), qi(2)));
        let c2 = AlgElt::from_terms([(w("xyxy"), prod(&[2, 2])), (w("xxyy"), prod(&[3, 2, 2]))]);
        assert_eq!(c(2), c2);
        let c3 = AlgElt::from_terms([
            (w("xyxyxy"), prod(&[2, 2, 2])),
            (w("xxyyxy"), prod(&[3, 2, 2, 2])),
            (w("xyxxyy"), prod(&[3, 2, 2, 2])),
            (w("xxyxyy"), prod(&[3, 3, 2, 2, 2])),
            (w("xxxyyy"), prod(&[4, 3, 3, 2, 2])),
        ]);
        assert_eq!(c(3), c3);
    }

    #[test]
    fn catalan_elements_are_zeta_fixed_and_homogeneous() {
        for n in 0..=8 {
            let c = catalan_element::<BigInt>(n);
            assert_eq!(c.zeta(), c);
            assert!(c.iter().all(|(w, _)| w.bidegree() == (n as u32, n as u32)));
        }
    }

    #[test]
    fn two_coefficient_formulas_agree() {
        for n in 0..=8 {
            for word in enumerate_catalan(n) {
                let pr = profile(word).unwrap();
                assert_eq!(profile_to_word(&pr).unwrap(), word);
                assert_eq!(cw_elevation::<BigInt>(word).unwrap(), cw_profile::<BigInt>(&pr).unwrap(), "{word}");
            }
        }
    }

    #[test]
    fn summation_identity_small_cases() {
        let r = tech1_check::<BigInt>(&p("0,1,0")).unwrap();
        assert!(r.passed(), "{r}");
        // (0,3,0): C(0,2,0) ([2] + [4] + [6]) = [4][3]^2[2]^2
        let rhs = &prod(&[3, 2, 2]) * &(&(&qi(2) + &qi(4)) + &qi(6));
        assert_eq!(rhs, prod(&[4, 3, 3, 2, 2]));
        assert!(tech1_check::<BigInt>(&p("0,3,0")).unwrap().passed());
        assert!(tech1_check::<BigInt>(&p("0")).is_err());
    }

    #[test]
    fn summation_identity_sweep() {
        let reports = tech1_sweep::<BigInt>(6);
        assert_eq!(reports.len(), 1 + 2 + 5 + 14 + 42 + 132);
        for r in reports {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn off_by_one_rule_differs() {
        assert_ne!(catalan_element_with::<BigInt>(2, CoefficientRule::OffByOne), catalan_element::<BigInt>(2));
    }
}
