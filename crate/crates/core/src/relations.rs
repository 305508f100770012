//! Batch checks of identities among the Catalan elements.
//!
//! Every check returns [`VerificationReport`]s; a record passes exactly when
//! its residual is zero. Identities with a scalar denominator are checked in
//! cleared form, so no division is needed except where the quotient itself
//! is the object under test.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::algebra::{Algebra, Named};
use crate::catalan::{
    cw_with_rule, enumerate_balanced, enumerate_catalan, is_balanced, is_catalan, tech1_sweep, CoefficientRule,
};
use crate::error::{Error, Result};
use crate::freealg::{AlgElt, Letter, Word};
use crate::laurent::{qint, qint_signed, LaurentPoly};
use crate::pbw::{DeltaRecursion, Pbw, PbwKind, PbwLabel, Prefactor};
use crate::report::{Params, SuiteReport, VerificationReport};
use crate::scalar::Coefficient;
use crate::shuffle::qserre_check;

use Named::{C, CY, XC};

fn qp<T: Coefficient>(k: i32) -> LaurentPoly<T> {
    LaurentPoly::q_pow(k)
}

/// `q^2 - q^-2`
fn q2_minus_q2_inv<T: Coefficient>() -> LaurentPoly<T> {
    &qp(2) - &qp(-2)
}

/// Sum of `c * a * b` over the given terms.
fn combo<T: Coefficient>(alg: &Algebra<T>, terms: &[(LaurentPoly<T>, Named, Named)]) -> AlgElt<T> {
    let mut acc = AlgElt::zero();
    for (c, a, b) in terms {
        acc += &alg.star_named(*a, *b).scale(c);
    }
    acc
}

fn word_params(v: Word) -> Params {
    Params::new().with("word", v.to_string())
}

/// `(q x * (v y) - q^-1 (v y) * x) / (q - q^-1)`.
pub fn insertion_form<T: Coefficient>(alg: &Algebra<T>, v: Word) -> Result<AlgElt<T>> {
    if v.len() + 2 > Word::MAX_LEN {
        return Err(Error::WordTooLong { max: Word::MAX_LEN });
    }
    let x = AlgElt::letter(Letter::X);
    let vy = AlgElt::from_word(v.push_back(Letter::Y));
    let num = &alg.star(&x, &vy).shift(1) - &alg.star(&vy, &x).shift(-1);
    num.exact_div(&LaurentPoly::q_minus_q_inv())
}

/// Compares [`insertion_form`] with the sum over insertion points of `x`
/// into `v`, weighted by `q^-1 [2 + 2 e_i]`, `e_i` the running weight.
pub fn verify_balanced_lemma<T: Coefficient>(alg: &Algebra<T>, v: Word) -> Result<VerificationReport<T>> {
    if !is_balanced(v) {
        return Err(Error::NotBalanced(v.to_string()));
    }
    let start = Instant::now();
    let lhs = insertion_form(alg, v)?;
    let mut rhs = AlgElt::zero();
    let mut height = 0i64;
    for i in 0..=v.len() {
        if i > 0 {
            height += i64::from(v.get(i - 1).expect("in range").bar());
        }
        let w = v.slice(0, i).push_back(Letter::X).concat(v.slice(i, v.len())).push_back(Letter::Y);
        rhs.add_term(w, qint_signed(2 + 2 * height).shift(-1));
    }
    Ok(VerificationReport::from_residual("balanced_lemma", word_params(v), &lhs - &rhs).timed(start))
}

/// Every word in the support of [`insertion_form`] of a Catalan word is Catalan.
pub fn verify_catalan_support<T: Coefficient>(alg: &Algebra<T>, v: Word) -> Result<VerificationReport<T>> {
    if !is_catalan(v) {
        return Err(Error::NotCatalan(v.to_string()));
    }
    let start = Instant::now();
    let form = insertion_form(alg, v)?;
    let stray: AlgElt<T> = AlgElt::from_terms(form.iter().filter(|(w, _)| !is_catalan(*w)).map(|(w, c)| (w, c.clone())));
    let report = if stray.is_zero() {
        VerificationReport::pass("catalan_support", word_params(v), form.len())
    } else {
        let n = stray.len();
        VerificationReport::fail("catalan_support", word_params(v), Some(stray), format!("{n} non-Catalan words"))
    };
    Ok(report.timed(start))
}

/// `C(w) = q sum_{v in Cat_{n-1}} C(v) (form_v, w)` for every `w` in `Cat_n`.
pub fn verify_aver<T: Coefficient>(alg: &Algebra<T>, n: usize) -> Result<VerificationReport<T>> {
    if n == 0 {
        return Err(Error::InvalidArgument("aver check needs n >= 1".into()));
    }
    let start = Instant::now();
    let mut total = AlgElt::zero();
    for v in enumerate_catalan(n - 1) {
        total += &insertion_form(alg, v)?.scale(&cw_with_rule(v, alg.rule())?.shift(1));
    }
    let targets = enumerate_catalan(n);
    let mut residual = AlgElt::zero();
    for &w in &targets {
        residual.add_term(w, &cw_with_rule::<T>(w, alg.rule())? - &total.coeff(w));
    }
    let params = Params::new().with("n", n);
    let report = VerificationReport::from_residual("aver", params, residual);
    let report = if report.passed() { VerificationReport { checks: targets.len(), ..report } } else { report };
    Ok(report.timed(start))
}

/// `C_i * C_j = C_j * C_i` for `1 <= i < j <= imax`.
pub fn verify_commutation<T: Coefficient>(alg: &Algebra<T>, imax: usize) -> Vec<VerificationReport<T>> {
    let pairs: Vec<(usize, usize)> = (1..=imax).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
    pairs
        .into_par_iter()
        .map(|(i, j)| {
            let start = Instant::now();
            let residual = &*alg.star_named(C(i), C(j)) - &*alg.star_named(C(j), C(i));
            let params = Params::new().with("i", i).with("j", j);
            VerificationReport::from_residual("commutation", params, residual).timed(start)
        })
        .collect()
}

type Instance<'a, T> = (&'static str, Params, Box<dyn Fn() -> AlgElt<T> + Send + Sync + 'a>);

fn ij(i: usize, j: usize) -> Params {
    Params::new().with("i", i).with("j", j)
}

fn section3_instances<T: Coefficient>(alg: &Algebra<T>, imax: usize, jmax: usize) -> Vec<Instance<'_, T>> {
    let mut out: Vec<Instance<'_, T>> = Vec::new();
    let diff = LaurentPoly::<T>::q_minus_q_inv;
    for i in 0..=imax {
        for j in 0..=jmax {
            out.push(("mixed_product", ij(i, j), Box::new(move || {
                let lhs = alg.c(i + j + 1).scale(&diff().shift(-1));
                &lhs - &combo(alg, &[(qp(1), XC(i), CY(j)), (-qp::<T>(-1), CY(j), XC(i))])
            })));

            out.push(("delta_sum_x", ij(i, j), Box::new(move || {
                let lhs = combo(alg, &[(qp(0), XC(i), C(j)), (-qp::<T>(0), C(j), XC(i))]);
                let terms: Vec<_> = (1..=j).map(|l| (qp(2 - 2 * l as i32), XC(i + l), C(j - l))).collect();
                &lhs - &combo(alg, &terms).scale(&q2_minus_q2_inv())
            })));
            out.push(("delta_sum_y", ij(i, j), Box::new(move || {
                let lhs = combo(alg, &[(qp(0), C(j), CY(i)), (-qp::<T>(0), CY(i), C(j))]);
                let terms: Vec<_> = (1..=j).map(|l| (qp(2 - 2 * l as i32), C(j - l), CY(i + l))).collect();
                &lhs - &combo(alg, &terms).scale(&q2_minus_q2_inv())
            })));

            out.push(("alternate_x", ij(i, j), Box::new(move || {
                combo(alg, &[
                    (qp(0), XC(i), C(j + 1)),
                    (-qp::<T>(0), C(j + 1), XC(i)),
                    (-qp::<T>(2), XC(i + 1), C(j)),
                    (qp(-2), C(j), XC(i + 1)),
                ])
            })));
            out.push(("alternate_y", ij(i, j), Box::new(move || {
                combo(alg, &[
                    (qp(0), C(j + 1), CY(i)),
                    (-qp::<T>(0), CY(i), C(j + 1)),
                    (-qp::<T>(2), C(j), CY(i + 1)),
                    (qp(-2), CY(i + 1), C(j)),
                ])
            })));

            if i > j {
                let d = i - j;
                let r = d / 2;
                let (name_x, name_y) = if d % 2 == 1 { ("odd_case_x", "odd_case_y") } else { ("even_case_x", "even_case_y") };
                let last = if d % 2 == 1 { r } else { r - 1 };
                let params = ij(i, j).with("r", r);
                out.push((name_x, params.clone(), Box::new(move || {
                    let mut acc = combo(alg, &[(qp(1), XC(i), XC(j)), (-qp::<T>(-1), XC(j), XC(i))]);
                    let terms: Vec<_> = (1..=last).map(|l| (qp(1 - 2 * l as i32), XC(j + l), XC(i - l))).collect();
                    acc += &combo(alg, &terms).scale(&q2_minus_q2_inv());
                    if d % 2 == 0 {
                        let c = diff().shift(2 - d as i32);
                        acc += &alg.star_named(XC(j + r), XC(i - r)).scale(&c);
                    }
                    acc
                })));
                out.push((name_y, params, Box::new(move || {
                    let mut acc = combo(alg, &[(qp(1), CY(j), CY(i)), (-qp::<T>(-1), CY(i), CY(j))]);
                    let terms: Vec<_> = (1..=last).map(|l| (qp(1 - 2 * l as i32), CY(i - l), CY(j + l))).collect();
                    acc += &combo(alg, &terms).scale(&q2_minus_q2_inv());
                    if d % 2 == 0 {
                        let c = diff().shift(2 - d as i32);
                        acc += &alg.star_named(CY(i - r), CY(j + r)).scale(&c);
                    }
                    acc
                })));
            }

            if i != j {
                out.push(("q_commutation_x", ij(i, j), Box::new(move || {
                    combo(alg, &[
                        (qp(1), XC(i + 1), XC(j)),
                        (-qp::<T>(-1), XC(j), XC(i + 1)),
                        (-qp::<T>(-1), XC(i), XC(j + 1)),
                        (qp(1), XC(j + 1), XC(i)),
                    ])
                })));
                out.push(("q_commutation_y", ij(i, j), Box::new(move || {
                    combo(alg, &[
                        (qp(1), CY(j), CY(i + 1)),
                        (-qp::<T>(-1), CY(i + 1), CY(j)),
                        (-qp::<T>(-1), CY(j + 1), CY(i)),
                        (qp(1), CY(i), CY(j + 1)),
                    ])
                })));
            }
        }
        out.push(("q_commutation_adjacent_x", Params::new().with("i", i), Box::new(move || {
            combo(alg, &[(qp(1), XC(i + 1), XC(i)), (-qp::<T>(-1), XC(i), XC(i + 1))])
        })));
        out.push(("q_commutation_adjacent_y", Params::new().with("i", i), Box::new(move || {
            combo(alg, &[(qp(1), CY(i), CY(i + 1)), (-qp::<T>(-1), CY(i + 1), CY(i))])
        })));
    }
    out
}

/// The product identities among `x C_i`, `C_j`, `C_i y` for `i <= imax`,
/// `j <= jmax`, each in both its `x` form and its mirrored `y` form.
pub fn verify_section3<T: Coefficient>(alg: &Algebra<T>, imax: usize, jmax: usize) -> Vec<VerificationReport<T>> {
    section3_instances(alg, imax, jmax)
        .into_par_iter()
        .map(|(name, params, residual)| {
            let start = Instant::now();
            VerificationReport::from_residual(name, params, residual()).timed(start)
        })
        .collect()
}

/// The four recurrences building `x C_n`, `C_n y` and `q^-1 C_n` from index
/// `n - 1`, each as an exact quotient by `q - q^-1`.
pub fn verify_recurrences<T: Coefficient>(alg: &Algebra<T>, nmax: usize) -> Vec<VerificationReport<T>> {
    let diff = LaurentPoly::<T>::q_minus_q_inv();
    let x = AlgElt::<T>::letter(Letter::X);
    let y = AlgElt::<T>::letter(Letter::Y);
    let xy = AlgElt::<T>::from_word("xy".parse().expect("valid word"));
    let mut out = Vec::new();
    for n in 1..=nmax {
        let start = Instant::now();
        let (xc, cy) = (alg.xc(n - 1), alg.cy(n - 1));
        let cases: [(&str, AlgElt<T>, AlgElt<T>); 4] = [
            ("recurrence_xc", &alg.star(&xc, &xy) - &alg.star(&xy, &xc), (*alg.xc(n)).clone()),
            ("recurrence_cy", &alg.star(&xy, &cy) - &alg.star(&cy, &xy), (*alg.cy(n)).clone()),
            ("recurrence_c_left", &alg.star(&x, &cy).shift(1) - &alg.star(&cy, &x).shift(-1), alg.c(n).shift(-1)),
            ("recurrence_c_right", &alg.star(&xc, &y).shift(1) - &alg.star(&y, &xc).shift(-1), alg.c(n).shift(-1)),
        ];
        for (name, numerator, expected) in cases {
            let params = Params::new().with("n", n);
            let report = match numerator.exact_div(&diff) {
                Ok(quotient) => VerificationReport::from_residual(name, params, &quotient - &expected),
                Err(e) => VerificationReport::fail(name, params, None, e.to_string()),
            };
            out.push(report.timed(start));
        }
    }
    out
}

/// Recursive images against closed forms for every family up to `nmax`,
/// followed by [`verify_recurrences`].
pub fn verify_main_theorem<T: Coefficient>(pbw: &Pbw<'_, T>, nmax: usize, prefactor: Prefactor) -> Vec<VerificationReport<T>> {
    let n = nmax as u32;
    let mut labels: Vec<PbwLabel> = (0..=n).flat_map(|k| [PbwLabel::alpha0(k), PbwLabel::alpha1(k)]).collect();
    labels.extend((1..=n).map(PbwLabel::delta));
    let mut out: Vec<VerificationReport<T>> = labels
        .into_par_iter()
        .map(|label| {
            let start = Instant::now();
            let params = Params::new().with("kind", label.kind().name()).with("n", label.index());
            let report = match (pbw.recursive(label), pbw.closed_with(label, prefactor)) {
                (Ok(rec), Ok(closed)) => VerificationReport::from_residual("pbw_image", params, &*rec - &closed),
                (Err(e), _) | (_, Err(e)) => VerificationReport::fail("pbw_image", params, None, e.to_string()),
            };
            report.timed(start)
        })
        .collect();
    out.extend(verify_recurrences(pbw.algebra(), nmax));
    out
}

/// `zeta` swaps the two alpha families, fixes the delta family and fixes
/// every `C_n`.
pub fn verify_zeta<T: Coefficient>(pbw: &Pbw<'_, T>, nmax: usize) -> Result<Vec<VerificationReport<T>>> {
    let mut out = Vec::new();
    for n in 0..=nmax as u32 {
        let start = Instant::now();
        let params = Params::new().with("n", n);
        let a0 = pbw.recursive(PbwLabel::alpha0(n))?;
        let a1 = pbw.recursive(PbwLabel::alpha1(n))?;
        out.push(VerificationReport::from_residual("zeta_alpha", params.clone(), &a0.zeta() - &a1).timed(start));
        let c = pbw.algebra().c(n as usize);
        out.push(VerificationReport::from_residual("zeta_catalan", params.clone(), &c.zeta() - &c).timed(start));
        if n > 0 {
            let d = pbw.recursive(PbwLabel::delta(n))?;
            out.push(VerificationReport::from_residual("zeta_delta", params, &d.zeta() - &d).timed(start));
        }
    }
    Ok(out)
}

/// Shape of the delta images: both recursions agree, and the support is
/// exactly the Catalan words of that length.
pub fn verify_delta_images<T: Coefficient>(pbw: &Pbw<'_, T>, nmax: usize) -> Result<Vec<VerificationReport<T>>> {
    let other = match pbw.recursion() {
        DeltaRecursion::ThroughAlpha1 => DeltaRecursion::ThroughAlpha0,
        DeltaRecursion::ThroughAlpha0 => DeltaRecursion::ThroughAlpha1,
    };
    let alt = Pbw::with_recursion(pbw.algebra(), other);
    let mut out = Vec::new();
    for n in 1..=nmax as u32 {
        let start = Instant::now();
        let params = Params::new().with("n", n);
        let d = pbw.recursive(PbwLabel::delta(n))?;
        let e = alt.recursive(PbwLabel::delta(n))?;
        out.push(VerificationReport::from_residual("delta_recursions", params.clone(), &*d - &*e).timed(start));

        let start = Instant::now();
        let expected = enumerate_catalan(n as usize);
        let support = d.support();
        out.push(if support == expected {
            VerificationReport::pass("delta_support", params, expected.len())
        } else {
            let detail = format!("support has {} words, expected {}", support.len(), expected.len());
            VerificationReport::fail("delta_support", params, None, detail)
        }.timed(start));
    }
    Ok(out)
}

/// Every image is homogeneous of its label's bidegree.
pub fn verify_homogeneity<T: Coefficient>(pbw: &Pbw<'_, T>, nmax: usize) -> Result<Vec<VerificationReport<T>>> {
    let n = nmax as u32;
    let mut labels: Vec<PbwLabel> = (0..=n).flat_map(|k| [PbwLabel::alpha0(k), PbwLabel::alpha1(k)]).collect();
    labels.extend((1..=n).map(PbwLabel::delta));
    labels.sort();
    labels
        .into_iter()
        .map(|label| {
            let start = Instant::now();
            let image = pbw.recursive(label)?;
            let params = Params::new().with("kind", label.kind().name()).with("n", label.index());
            let got = image.bidegree();
            Ok(if got == Some(label.bidegree()) {
                VerificationReport::pass("bidegree", params, 1)
            } else {
                VerificationReport::fail("bidegree", params, None, format!("bidegree {got:?}, expected {:?}", label.bidegree()))
            }
            .timed(start))
        })
        .collect()
}

/// `sum_{t=1}^{n} [2t] = [n][n+1]` and its windowed form
/// `sum_{t=r+1}^{s} [2t] = [s][s+1] - [r][r+1]`, for `r < s <= nmax`.
pub fn verify_qint_sums<T: Coefficient>(nmax: u32) -> Vec<VerificationReport<T>> {
    let partial = |n: u32| &qint::<T>(n) * &qint(n + 1);
    let mut out = Vec::new();
    for s in 0..=nmax {
        let start = Instant::now();
        let sum = (1..=s).fold(LaurentPoly::zero(), |acc, t| &acc + &qint(2 * t));
        let params = Params::new().with("n", s);
        out.push(scalar_report("qint_sum", params, &sum - &partial(s)).timed(start));
        for r in 0..s {
            let start = Instant::now();
            let window = ((r + 1)..=s).fold(LaurentPoly::zero(), |acc, t| &acc + &qint(2 * t));
            let params = Params::new().with("r", r).with("s", s);
            let residual = &window - &(&partial(s) - &partial(r));
            out.push(scalar_report("qint_window_sum", params, residual).timed(start));
        }
    }
    out
}

fn scalar_report<T: Coefficient>(identity: &str, params: Params, residual: LaurentPoly<T>) -> VerificationReport<T> {
    VerificationReport::from_residual(identity, params, AlgElt::term(Word::empty(), residual))
}

/// Bounds for [`verify_all`]. A zero bound skips the family it controls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// PBW images against closed forms, the recurrences, zeta and delta-image checks.
    pub max_n: usize,
    pub aver: usize,
    /// Commutation of Catalan elements.
    pub max_commutation: usize,
    /// Bounds `(imax, jmax)` for the product identities; `None` skips them.
    pub section3: Option<(usize, usize)>,
    pub profile_halflength: usize,
    pub qint_sums: u32,
    /// Longest word in the balanced-word sweep.
    pub balanced_len: usize,
    /// Largest halflength in the Catalan-support sweep.
    pub catalan_support: usize,
    pub serre: bool,
    pub rule: CoefficientRule,
    pub prefactor: Prefactor,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 5,
            aver: 5,
            max_commutation: 5,
            section3: Some((3, 3)),
            profile_halflength: 6,
            qint_sums: 20,
            balanced_len: 8,
            catalan_support: 4,
            serre: true,
            rule: CoefficientRule::Elevation,
            prefactor: Prefactor::default(),
        }
    }
}

impl SuiteConfig {
    /// Runs nothing.
    pub fn empty() -> Self {
        SuiteConfig {
            max_n: 0,
            aver: 0,
            max_commutation: 0,
            section3: None,
            profile_halflength: 0,
            qint_sums: 0,
            balanced_len: 0,
            catalan_support: 0,
            serre: false,
            ..Self::default()
        }
    }

    /// Only the PBW image checks and the recurrences.
    pub fn theorem(max_n: usize) -> Self {
        SuiteConfig { max_n, ..Self::empty() }
    }
}

fn sweep<T: Coefficient>(
    words: Vec<Word>,
    check: impl Fn(Word) -> Result<VerificationReport<T>> + Send + Sync,
) -> Result<Vec<VerificationReport<T>>> {
    words.into_par_iter().map(check).collect()
}

/// Runs every family enabled by `config` and returns the records sorted by
/// identity name, then parameters.
pub fn verify_all<T: Coefficient>(config: &SuiteConfig) -> Result<SuiteReport<T>> {
    let alg = Algebra::with_rule(config.rule);
    let pbw = Pbw::new(&alg);
    let mut suite = SuiteReport::new();
    if config.serre {
        suite.extend(qserre_check(alg.engine()));
    }
    if config.max_n > 0 {
        suite.extend(verify_main_theorem(&pbw, config.max_n, config.prefactor));
        suite.extend(verify_zeta(&pbw, config.max_n)?);
        suite.extend(verify_delta_images(&pbw, config.max_n)?);
        suite.extend(verify_homogeneity(&pbw, config.max_n)?);
    }
    for n in 1..=config.aver {
        suite.push(verify_aver(&alg, n)?);
    }
    if config.profile_halflength > 0 {
        suite.extend(tech1_sweep(config.profile_halflength));
    }
    if config.qint_sums > 0 {
        suite.extend(verify_qint_sums(config.qint_sums));
    }
    if config.balanced_len > 0 {
        let words = (0..=config.balanced_len / 2).flat_map(enumerate_balanced).collect();
        suite.extend(sweep(words, |v| verify_balanced_lemma(&alg, v))?);
    }
    if config.catalan_support > 0 {
        let words = (0..=config.catalan_support).flat_map(enumerate_catalan).collect();
        suite.extend(sweep(words, |v| verify_catalan_support(&alg, v))?);
    }
    if config.max_commutation > 0 {
        suite.extend(verify_commutation(&alg, config.max_commutation));
    }
    if let Some((imax, jmax)) = config.section3 {
        suite.extend(verify_section3(&alg, imax, jmax));
    }
    suite.sort();
    Ok(suite)
}

/// The image of one label, by recursion or closed form.
pub fn pbw_image<T: Coefficient>(pbw: &Pbw<'_, T>, kind: PbwKind, n: u32, closed: bool) -> Result<Arc<AlgElt<T>>> {
    let label = PbwLabel::new(kind, n)?;
    if closed {
        Ok(Arc::new(pbw.closed(label)))
    } else {
        pbw.recursive(label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type E = AlgElt<BigInt>;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn all_pass(rs: &[VerificationReport<BigInt>]) {
        for r in rs {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn insertion_form_of_trivial_word() {
        let alg = Algebra::<BigInt>::new();
        let expected = E::term(w("xy"), qint(2).shift(-1));
        assert_eq!(insertion_form(&alg, Word::empty()).unwrap(), expected);
    }

    #[test]
    fn balanced_lemma_small() {
        let alg = Algebra::<BigInt>::new();
        for v in ["1", "xy", "yx", "xyyx", "yyxx"] {
            assert!(verify_balanced_lemma(&alg, w(v)).unwrap().passed(), "{v}");
        }
        assert!(matches!(verify_balanced_lemma(&alg, w("xxy")), Err(Error::NotBalanced(_))));
    }

    #[test]
    fn catalan_support_small() {
        let alg = Algebra::<BigInt>::new();
        let r = verify_catalan_support(&alg, w("xy")).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks, 2);
        assert!(matches!(verify_catalan_support(&alg, w("yx")), Err(Error::NotCatalan(_))));
    }

    #[test]
    fn aver_small() {
        let alg = Algebra::<BigInt>::new();
        for n in 1..=3 {
            assert!(verify_aver(&alg, n).unwrap().passed(), "n={n}");
        }
        assert!(verify_aver(&alg, 0).is_err());
        let bad = Algebra::<BigInt>::with_rule(CoefficientRule::OffByOne);
        assert!(!verify_aver(&bad, 2).unwrap().passed());
    }

    #[test]
    fn commutation_small() {
        let alg = Algebra::<BigInt>::new();
        let rs = verify_commutation(&alg, 3);
        assert_eq!(rs.len(), 3);
        all_pass(&rs);
    }

    #[test]
    fn section3_small() {
        let alg = Algebra::<BigInt>::new();
        let rs = verify_section3(&alg, 2, 2);
        all_pass(&rs);
        for name in ["mixed_product", "odd_case_x", "even_case_y", "alternate_y", "q_commutation_x", "delta_sum_y"] {
            assert!(rs.iter().any(|r| r.identity == name), "{name}");
        }
    }

    #[test]
    fn section3_detects_wrong_rule() {
        let alg = Algebra::<BigInt>::with_rule(CoefficientRule::OffByOne);
        let rs = verify_section3(&alg, 1, 1);
        assert!(rs.iter().any(|r| !r.passed()));
    }

    #[test]
    fn theorem_and_recurrences() {
        let alg = Algebra::<BigInt>::new();
        let pbw = Pbw::new(&alg);
        let rs = verify_main_theorem(&pbw, 3, Prefactor::default());
        assert_eq!(rs.len(), 8 + 3 + 12);
        all_pass(&rs);
        let bad = verify_main_theorem(&pbw, 2, Prefactor { q_shift: 1, diff_shift: 0 });
        let images: Vec<_> = bad.iter().filter(|r| r.identity == "pbw_image").collect();
        assert_eq!(images.iter().filter(|r| !r.passed()).count(), images.len());
    }

    #[test]
    fn image_shape_checks() {
        let alg = Algebra::<BigInt>::new();
        let pbw = Pbw::new(&alg);
        all_pass(&verify_zeta(&pbw, 3).unwrap());
        all_pass(&verify_delta_images(&pbw, 3).unwrap());
        all_pass(&verify_homogeneity(&pbw, 3).unwrap());
    }

    #[test]
    fn qint_sums() {
        let rs = verify_qint_sums::<BigInt>(6);
        assert_eq!(rs.len(), 7 + 21);
        all_pass(&rs);
    }

    #[test]
    fn empty_suite_is_vacuous() {
        let s = verify_all::<BigInt>(&SuiteConfig::empty()).unwrap();
        assert!(s.is_vacuous());
        assert_eq!(s.checks(), 0);
    }

    #[test]
    fn small_suite_passes_and_is_sorted() {
        let config = SuiteConfig {
            max_n: 2,
            aver: 2,
            max_commutation: 3,
            section3: Some((1, 1)),
            profile_halflength: 3,
            qint_sums: 4,
            balanced_len: 4,
            catalan_support: 2,
            ..SuiteConfig::default()
        };
        let s = verify_all::<BigInt>(&config).unwrap();
        assert!(s.all_passed());
        let again = verify_all::<BigInt>(&config).unwrap();
        let key = |s: &SuiteReport<BigInt>| s.records.iter().map(|r| (r.identity.clone(), r.params.clone())).collect::<Vec<_>>();
        assert_eq!(key(&s), key(&again));
    }
}
