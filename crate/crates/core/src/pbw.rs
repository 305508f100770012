//! Images of the PBW generators `E_{n delta + alpha_0}`, `E_{n delta}`,
//! `E_{n delta + alpha_1}` inside the q-shuffle algebra.
//!
//! Everything is computed in the shuffle algebra through the embedding
//! `A -> x`, `B -> y`; the abstract algebra is never represented. Since the
//! embedding is injective, equality of images is equality of elements.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use parking_lot::Mutex;
use rustc_hash::FxHashMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::freealg::{AlgElt, Letter, Word};
use crate::laurent::{qint, LaurentPoly};
use crate::linalg::rational_rank;
use crate::report::{Params, VerificationReport};
use crate::scalar::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PbwKind {
    /// `n delta + alpha_0`, `n >= 0`.
    Alpha0,
    /// `n delta`, `n >= 1`.
    Delta,
    /// `n delta + alpha_1`, `n >= 0`.
    Alpha1,
}

impl PbwKind {
    pub fn name(self) -> &'static str {
        match self {
            PbwKind::Alpha0 => "a0",
            PbwKind::Delta => "delta",
            PbwKind::Alpha1 => "a1",
        }
    }
}

impl FromStr for PbwKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a0" | "alpha0" => Ok(PbwKind::Alpha0),
            "a1" | "alpha1" => Ok(PbwKind::Alpha1),
            "delta" | "d" => Ok(PbwKind::Delta),
            _ => Err(Error::InvalidArgument(format!("unknown PBW kind {s:?} (expected a0, a1 or delta)"))),
        }
    }
}

/// A PBW generator, ordered
/// `E_a0 < E_{d+a0} < E_{2d+a0} < ... < E_d < E_{2d} < ... < E_{2d+a1} < E_{d+a1} < E_a1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PbwLabel {
    kind: PbwKind,
    n: u32,
}

impl PbwLabel {
    pub fn new(kind: PbwKind, n: u32) -> Result<Self> {
        if kind == PbwKind::Delta && n == 0 {
            return Err(Error::InvalidArgument("E_{n delta} needs n >= 1".into()));
        }
        Ok(PbwLabel { kind, n })
    }

    pub fn alpha0(n: u32) -> Self {
        PbwLabel { kind: PbwKind::Alpha0, n }
    }

    pub fn alpha1(n: u32) -> Self {
        PbwLabel { kind: PbwKind::Alpha1, n }
    }

    /// Panics for `n = 0`.
    pub fn delta(n: u32) -> Self {
        Self::new(PbwKind::Delta, n).expect("n >= 1")
    }

    pub fn kind(self) -> PbwKind {
        self.kind
    }

    pub fn index(self) -> u32 {
        self.n
    }

    /// Number of letters in each word of the image.
    pub fn degree(self) -> u32 {
        match self.kind {
            PbwKind::Delta => 2 * self.n,
            _ => 2 * self.n + 1,
        }
    }

    /// `(letters x, letters y)` of the image.
    pub fn bidegree(self) -> (u32, u32) {
        match self.kind {
            PbwKind::Alpha0 => (self.n + 1, self.n),
            PbwKind::Delta => (self.n, self.n),
            PbwKind::Alpha1 => (self.n, self.n + 1),
        }
    }

    fn sort_key(self) -> (u8, i64) {
        match self.kind {
            PbwKind::Alpha0 => (0, self.n as i64),
            PbwKind::Delta => (1, self.n as i64),
            PbwKind::Alpha1 => (2, -(self.n as i64)),
        }
    }

    /// All labels whose image has at most `max_degree` letters, in PBW order.
    pub fn up_to_degree(max_degree: u32) -> Vec<PbwLabel> {
        let mut out = Vec::new();
        for n in 0.. {
            if 2 * n + 1 > max_degree && 2 * n > max_degree {
                break;
            }
            if 2 * n < max_degree {
                out.push(Self::alpha0(n));
                out.push(Self::alpha1(n));
            }
            if n >= 1 && 2 * n <= max_degree {
                out.push(Self::delta(n));
            }
        }
        out.sort();
        out
    }
}

impl Ord for PbwLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for PbwLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let delta = match self.n {
            0 => String::new(),
            1 => "d".to_string(),
            n => format!("{n}d"),
        };
        match self.kind {
            PbwKind::Delta => write!(f, "E_{{{delta}}}"),
            PbwKind::Alpha0 if self.n == 0 => write!(f, "E_{{a0}}"),
            PbwKind::Alpha1 if self.n == 0 => write!(f, "E_{{a1}}"),
            PbwKind::Alpha0 => write!(f, "E_{{{delta}+a0}}"),
            PbwKind::Alpha1 => write!(f, "E_{{{delta}+a1}}"),
        }
    }
}

/// Which recursion builds `E_{n delta}` for `n >= 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DeltaRecursion {
    /// `q^-2 E_{(n-1)d+a1} A - A E_{(n-1)d+a1}`.
    #[default]
    ThroughAlpha1,
    /// `q^-2 B E_{(n-1)d+a0} - E_{(n-1)d+a0} B`.
    ThroughAlpha0,
}

/// Exponent offsets applied to the closed-form prefactors
/// `q^{-2n} (q - q^-1)^{2n}` and `-q^{-2n} (q - q^-1)^{2n-1}`.
///
/// The default (all zero) is the true prefactor; anything else is a
/// negative control.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Prefactor {
    pub q_shift: i32,
    pub diff_shift: i32,
}

/// Images of PBW generators, memoized per label.
pub struct Pbw<'a, T: Coefficient> {
    alg: &'a Algebra<T>,
    recursion: DeltaRecursion,
    memo: Mutex<FxHashMap<PbwLabel, Arc<AlgElt<T>>>>,
}

impl<'a, T: Coefficient> Pbw<'a, T> {
    pub fn new(alg: &'a Algebra<T>) -> Self {
        Self::with_recursion(alg, DeltaRecursion::default())
    }

    pub fn with_recursion(alg: &'a Algebra<T>, recursion: DeltaRecursion) -> Self {
        Pbw { alg, recursion, memo: Mutex::default() }
    }

    pub fn recursion(&self) -> DeltaRecursion {
        self.recursion
    }

    pub fn algebra(&self) -> &'a Algebra<T> {
        self.alg
    }

    /// The image computed from the defining recursions.
    pub fn recursive(&self, label: PbwLabel) -> Result<Arc<AlgElt<T>>> {
        if let Some(hit) = self.memo.lock().get(&label) {
            return Ok(Arc::clone(hit));
        }
        let v = Arc::new(self.compute(label)?);
        Ok(Arc::clone(self.memo.lock().entry(label).or_insert(v)))
    }

    fn compute(&self, label: PbwLabel) -> Result<AlgElt<T>> {
        let x = AlgElt::letter(Letter::X);
        let y = AlgElt::letter(Letter::Y);
        let star = |a: &AlgElt<T>, b: &AlgElt<T>| self.alg.star(a, b);
        let q2 = LaurentPoly::q_pow(-2);
        let n = label.n;
        Ok(match (label.kind, n) {
            (PbwKind::Alpha0, 0) => x,
            (PbwKind::Alpha1, 0) => y,
            (PbwKind::Delta, 1) => &star(&y, &x).scale(&q2) - &star(&x, &y),
            (PbwKind::Alpha0, _) => {
                let d = self.recursive(PbwLabel::delta(1))?;
                let prev = self.recursive(PbwLabel::alpha0(n - 1))?;
                (&star(&d, &prev) - &star(&prev, &d)).exact_div(&qint(2))?
            }
            (PbwKind::Alpha1, _) => {
                let d = self.recursive(PbwLabel::delta(1))?;
                let prev = self.recursive(PbwLabel::alpha1(n - 1))?;
                (&star(&prev, &d) - &star(&d, &prev)).exact_div(&qint(2))?
            }
            (PbwKind::Delta, _) => match self.recursion {
                DeltaRecursion::ThroughAlpha1 => {
                    let prev = self.recursive(PbwLabel::alpha1(n - 1))?;
                    &star(&prev, &x).scale(&q2) - &star(&x, &prev)
                }
                DeltaRecursion::ThroughAlpha0 => {
                    let prev = self.recursive(PbwLabel::alpha0(n - 1))?;
                    &star(&y, &prev).scale(&q2) - &star(&prev, &y)
                }
            },
        })
    }

    /// The closed form: `q^{-2n}(q - q^-1)^{2n} x C_n`, `q^{-2n}(q - q^-1)^{2n} C_n y`,
    /// `-q^{-2n}(q - q^-1)^{2n-1} C_n`.
    pub fn closed(&self, label: PbwLabel) -> AlgElt<T> {
        self.closed_with(label, Prefactor::default()).expect("true prefactor is a Laurent polynomial")
    }

    pub fn closed_with(&self, label: PbwLabel, pre: Prefactor) -> Result<AlgElt<T>> {
        let n = label.n as i32;
        let (diff_exp, sign, base) = match label.kind {
            PbwKind::Alpha0 => (2 * n, 1, self.alg.xc(label.n as usize)),
            PbwKind::Alpha1 => (2 * n, 1, self.alg.cy(label.n as usize)),
            PbwKind::Delta => (2 * n - 1, -1, self.alg.c(label.n as usize)),
        };
        let diff_exp = diff_exp + pre.diff_shift;
        if diff_exp < 0 {
            return Err(Error::InvalidArgument(format!("negative power of (q - q^-1) for {label}")));
        }
        let scalar = LaurentPoly::<T>::q_minus_q_inv()
            .pow(diff_exp as u32)
            .shift(-2 * n + pre.q_shift);
        let scalar = if sign < 0 { -scalar } else { scalar };
        Ok(base.scale(&scalar))
    }
}

/// Weakly increasing label sequences whose images have `degree` letters in
/// total, each with its product image.
pub fn pbw_monomials<T: Coefficient>(pbw: &Pbw<'_, T>, degree: u32) -> Result<Vec<(Vec<PbwLabel>, AlgElt<T>)>> {
    let labels = PbwLabel::up_to_degree(degree);
    let mut seqs = Vec::new();
    fn go(labels: &[PbwLabel], start: usize, left: u32, cur: &mut Vec<PbwLabel>, out: &mut Vec<Vec<PbwLabel>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..labels.len() {
            let d = labels[i].degree();
            if d <= left {
                cur.push(labels[i]);
                go(labels, i, left - d, cur, out);
                cur.pop();
            }
        }
    }
    go(&labels, 0, degree, &mut Vec::new(), &mut seqs);
    seqs.into_iter()
        .map(|seq| {
            let images = seq.iter().map(|&l| pbw.recursive(l)).collect::<Result<Vec<_>>>()?;
            let prod = pbw.algebra().engine().product_all(images.iter().map(|a| a.as_ref()));
            Ok((seq, prod))
        })
        .collect()
}

/// Rank of the monomial images at `q = q0`.
///
/// Full rank at one point proves linear independence over the rational
/// function field. Rank deficiency is inconclusive and surfaces as
/// [`Error::DegenerateEvaluation`]; so do `q0 = +-1`, where `q - q^-1`
/// vanishes.
pub fn independence_evidence<T: Coefficient>(
    pbw: &Pbw<'_, T>,
    degree: u32,
    q0: &Ratio<T>,
) -> Result<VerificationReport<T>> {
    let start = Instant::now();
    if q0.is_zero() {
        return Err(Error::ZeroEvaluationPoint);
    }
    let monomials = pbw_monomials(pbw, degree)?;
    let count = monomials.len();
    if q0.abs().is_one() {
        return Err(Error::DegenerateEvaluation { q0: q0.to_string(), rank: 0, expected: count });
    }
    let mut columns: Vec<Word> = monomials.iter().flat_map(|(_, v)| v.support()).collect();
    columns.sort_unstable();
    columns.dedup();
    let col_index: FxHashMap<Word, usize> = columns.iter().enumerate().map(|(i, w)| (*w, i)).collect();
    let mut rows = Vec::with_capacity(count);
    for (_, v) in &monomials {
        let mut row = vec![Ratio::<T>::zero(); columns.len()];
        for (w, c) in v.iter() {
            row[col_index[&w]] = c.eval_rational(q0)?;
        }
        rows.push(row);
    }
    let rank = rational_rank(rows);
    if rank < count {
        return Err(Error::DegenerateEvaluation { q0: q0.to_string(), rank, expected: count });
    }
    let params = Params::new().with("degree", degree).with("q0", q0.to_string());
    Ok(VerificationReport::pass("pbw_independence", params, 1)
        .with_detail(format!("rank {rank} = {count} monomials over {} words", columns.len()))
        .timed(start))
}
