//! Laurent polynomials in `q` with exact integer coefficients.
//!
//! Terms are kept as a vector of `(exponent, coefficient)` pairs sorted by
//! exponent with no zero coefficient ever stored, so structural equality is
//! ring equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::{Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<T> {
    terms: Vec<(i32, T)>,
}

fn add_exp(a: i32, b: i32) -> i32 {
    a.checked_add(b).expect("q-exponent overflow")
}

impl<T: Coefficient> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: T, exp: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(exp, c)] }
        }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(T::one(), exp)
    }

    /// `q - q^-1`.
    pub fn q_minus_q_inv() -> Self {
        Self::from_terms([(1, T::one()), (-1, -T::one())])
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs;
    /// repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, T)>>(terms: I) -> Self {
        let mut terms: Vec<(i32, T)> = terms.into_iter().collect();
        terms.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i32, T)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: out }
    }

    fn from_dense(offset: i32, dense: Vec<T>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (add_exp(offset, i as i32), c))
            .collect();
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &T)> + ExactSizeIterator {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i32) -> T {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Returns `Some((c, e))` when the polynomial is the single term `c q^e`.
    pub fn as_monomial(&self) -> Option<(&T, i32)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c, *e)),
            _ => None,
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (add_exp(*e, k), c.clone())).collect(),
        }
    }

    pub fn shift_in_place(&mut self, k: i32) {
        for (e, _) in &mut self.terms {
            *e = add_exp(*e, k);
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| {
                    let mut a = a.clone();
                    a *= c;
                    (*e, a)
                })
                .collect(),
        }
    }

    /// The substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().rev().map(|(e, c)| (-*e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient in `Z[q, q^-1]`.
    ///
    /// Both operands are shifted to ordinary polynomials with nonzero
    /// constant term and divided by integer long division; any remainder or
    /// non-integral step means no Laurent quotient exists.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let fail = || Error::NonExactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let (pmin, pmax) = (self.min_exp().unwrap(), self.max_exp().unwrap());
        let (dmin, dmax) = (divisor.min_exp().unwrap(), divisor.max_exp().unwrap());
        let pdeg = (pmax - pmin) as usize;
        let ddeg = (dmax - dmin) as usize;
        if ddeg > pdeg {
            return Err(fail());
        }
        let mut rem = vec![T::zero(); pdeg + 1];
        for (e, c) in &self.terms {
            rem[(e - pmin) as usize] = c.clone();
        }
        let mut den = vec![T::zero(); ddeg + 1];
        for (e, c) in &divisor.terms {
            den[(e - dmin) as usize] = c.clone();
        }
        let lead = den[ddeg].clone();
        let mut quot = vec![T::zero(); pdeg - ddeg + 1];
        for k in (0..=pdeg - ddeg).rev() {
            let top = &rem[k + ddeg];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(fail());
            }
            for (j, dc) in den.iter().enumerate() {
                if dc.is_zero() {
                    continue;
                }
                let mut t = qc.clone();
                t *= dc;
                rem[k + j] -= &t;
            }
            quot[k] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(fail());
        }
        Ok(Self::from_dense(add_exp(pmin, -dmin), quot))
    }

    /// Exact value at a nonzero rational point.
    pub fn eval_rational(&self, q0: &Ratio<T>) -> Result<Ratio<T>> {
        if q0.is_zero() {
            return Err(Error::ZeroEvaluationPoint);
        }
        let mut acc = Ratio::<T>::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(q0.clone(), *e as usize)
            } else {
                num_traits::pow(q0.recip(), e.unsigned_abs() as usize)
            };
            acc = acc + p * Ratio::from_integer(c.clone());
        }
        Ok(acc)
    }
}

/// The q-integer `[n]_q = (q^n - q^-n)/(q - q^-1) = q^{n-1} + q^{n-3} + ... + q^{1-n}`.
pub fn qint<T: Coefficient>(n: u32) -> LaurentPoly<T> {
    let n = n as i32;
    LaurentPoly {
        terms: (0..n).map(|k| (1 - n + 2 * k, T::one())).collect(),
    }
}

/// `[n]_q` for any integer `n`, using `[-n]_q = -[n]_q` from the same quotient.
pub fn qint_signed<T: Coefficient>(n: i64) -> LaurentPoly<T> {
    let m = u32::try_from(n.unsigned_abs()).expect("q-integer index out of range");
    if n >= 0 {
        qint(m)
    } else {
        -qint::<T>(m)
    }
}

/// `[n]!_q`, with `[0]!_q = 1`.
pub fn qfact<T: Coefficient>(n: u32) -> LaurentPoly<T> {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &qint(k))
}

impl<T: Coefficient> Zero for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Coefficient> One for LaurentPoly<T> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<T: Coefficient> Default for LaurentPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

fn merge<T: Coefficient>(a: &[(i32, T)], b: &[(i32, T)], negate_b: bool) -> Vec<(i32, T)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let c = if negate_b { -b[j].1.clone() } else { b[j].1.clone() };
            out.push((b[j].0, c));
            j += 1;
        } else {
            let mut c = a[i].1.clone();
            if negate_b {
                c -= &b[j].1;
            } else {
                c += &b[j].1;
            }
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<T: Coefficient> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: Self) -> LaurentPoly<T> {
        LaurentPoly { terms: merge(&self.terms, &rhs.terms, false) }
    }
}

impl<T: Coefficient> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: Self) -> LaurentPoly<T> {
        LaurentPoly { terms: merge(&self.terms, &rhs.terms, true) }
    }
}

impl<T: Coefficient> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: Self) -> LaurentPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((c, e)) = rhs.as_monomial() {
            return self.scale(c).shift(e);
        }
        if let Some((c, e)) = self.as_monomial() {
            return rhs.scale(c).shift(e);
        }
        let lo = add_exp(self.min_exp().unwrap(), rhs.min_exp().unwrap());
        let hi = add_exp(self.max_exp().unwrap(), rhs.max_exp().unwrap());
        let mut dense = vec![T::zero(); (hi - lo) as usize + 1];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut t = ca.clone();
                t *= cb;
                dense[(ea + eb - lo) as usize] += &t;
            }
        }
        LaurentPoly::from_dense(lo, dense)
    }
}

impl<T: Coefficient> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<T: Coefficient> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(mut self) -> LaurentPoly<T> {
        for (_, c) in &mut self.terms {
            *c = -c.clone();
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coefficient> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: Self) -> LaurentPoly<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Coefficient> $tr<&LaurentPoly<T>> for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: &Self) -> LaurentPoly<T> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coefficient> AddAssign<&LaurentPoly<T>> for LaurentPoly<T> {
    fn add_assign(&mut self, rhs: &Self) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        self.terms = merge(&self.terms, &rhs.terms, false);
    }
}

impl<T: Coefficient> SubAssign<&LaurentPoly<T>> for LaurentPoly<T> {
    fn sub_assign(&mut self, rhs: &Self) {
        if rhs.is_zero() {
            return;
        }
        self.terms = merge(&self.terms, &rhs.terms, true);
    }
}

/// Plain-text form, highest power first: `q^2 + 2 + q^-2`.
impl<T: Coefficient> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                _ if unit => {}
                _ => write!(f, "{mag}*")?,
            }
            match *e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl<T: Coefficient> fmt::Debug for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// JSON object from decimal exponent strings to decimal coefficient strings,
/// written in increasing exponent order.
impl<T: Coefficient> Serialize for LaurentPoly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de, T: Coefficient> Deserialize<'de> for LaurentPoly<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = HashMap::<String, String>::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let e: i32 = e.trim().parse().map_err(|_| D::Error::custom(format!("bad exponent {e:?}")))?;
            let c: T = c.trim().parse().map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}
