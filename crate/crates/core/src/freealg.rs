//! Words in `x, y` and elements of the free algebra in the standard basis.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    /// `+1` for `x`, `-1` for `y`.
    pub fn bar(self) -> i32 {
        match self {
            Letter::X => 1,
            Letter::Y => -1,
        }
    }

    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }

    fn bit(self) -> u128 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    fn from_bit(b: u128) -> Letter {
        if b & 1 == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }
}

/// A word over `{x, y}`, packed one bit per letter (`y` = 1, position 0 in
/// the least significant bit).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    bits: u128,
    len: u8,
}

impl Word {
    pub const MAX_LEN: usize = 128;

    pub const fn empty() -> Word {
        Word { bits: 0, len: 0 }
    }

    pub fn letter(a: Letter) -> Word {
        Word { bits: a.bit(), len: 1 }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Word> {
        let mut w = Word::empty();
        for a in letters {
            if w.len() == Self::MAX_LEN {
                return Err(Error::WordTooLong { max: Self::MAX_LEN });
            }
            w = w.push_back(a);
        }
        Ok(w)
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn get(self, i: usize) -> Option<Letter> {
        (i < self.len()).then(|| Letter::from_bit(self.bits >> i))
    }

    pub fn letters(self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator {
        (0..self.len()).map(move |i| Letter::from_bit(self.bits >> i))
    }

    pub fn first(self) -> Option<Letter> {
        self.get(0)
    }

    pub fn last(self) -> Option<Letter> {
        self.len().checked_sub(1).and_then(|i| self.get(i))
    }

    /// `a w`. Panics past [`Word::MAX_LEN`].
    pub fn push_front(self, a: Letter) -> Word {
        assert!(self.len() < Self::MAX_LEN, "word too long");
        Word { bits: (self.bits << 1) | a.bit(), len: self.len + 1 }
    }

    /// `w a`. Panics past [`Word::MAX_LEN`].
    pub fn push_back(self, a: Letter) -> Word {
        assert!(self.len() < Self::MAX_LEN, "word too long");
        Word { bits: self.bits | (a.bit() << self.len), len: self.len + 1 }
    }

    /// Drops the first letter.
    pub fn tail(self) -> Word {
        match self.len {
            0 => self,
            _ => Word { bits: self.bits >> 1, len: self.len - 1 },
        }
    }

    /// Drops the last letter.
    pub fn init(self) -> Word {
        match self.len {
            0 => self,
            n => Word { bits: self.bits & !(1u128 << (n - 1)), len: n - 1 },
        }
    }

    /// Letters `start..end`.
    pub fn slice(self, start: usize, end: usize) -> Word {
        assert!(start <= end && end <= self.len());
        let n = end - start;
        let mask = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        let bits = if start == 128 { 0 } else { (self.bits >> start) & mask };
        Word { bits, len: n as u8 }
    }

    /// Juxtaposition. Panics past [`Word::MAX_LEN`].
    pub fn concat(self, other: Word) -> Word {
        assert!(self.len() + other.len() <= Self::MAX_LEN, "word too long");
        let bits = if self.len() == 128 { self.bits } else { self.bits | (other.bits << self.len) };
        Word { bits, len: self.len + other.len }
    }

    /// Reverse the word and swap `x <-> y`.
    pub fn zeta(self) -> Word {
        if self.len == 0 {
            return self;
        }
        let rev = self.bits.reverse_bits() >> (128 - self.len as u32);
        let mask = if self.len == 128 { u128::MAX } else { (1u128 << self.len) - 1 };
        Word { bits: !rev & mask, len: self.len }
    }

    pub fn weight(self) -> i32 {
        let ys = self.bits.count_ones() as i32;
        self.len as i32 - 2 * ys
    }

    /// `(number of x, number of y)`.
    pub fn bidegree(self) -> (u32, u32) {
        let ys = self.bits.count_ones();
        (self.len as u32 - ys, ys)
    }
}

impl Default for Word {
    fn default() -> Self {
        Word::empty()
    }
}

/// Shorter words first, then lexicographic with `x < y`.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.bits.reverse_bits().cmp(&other.bits.reverse_bits()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for a in self.letters() {
            write!(f, "{}", a.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(Error::ParseWord(s.to_string()));
        }
        let letters = s
            .chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(Error::ParseWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Word::from_letters(letters)
    }
}

/// A finitely supported map from words to Laurent polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElt<T> {
    terms: FxHashMap<Word, LaurentPoly<T>>,
}

impl<T: Coefficient> AlgElt<T> {
    pub fn zero() -> Self {
        AlgElt { terms: FxHashMap::default() }
    }

    /// The trivial word with coefficient 1.
    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn letter(a: Letter) -> Self {
        Self::from_word(Word::letter(a))
    }

    pub fn term(w: Word, c: LaurentPoly<T>) -> Self {
        let mut v = Self::zero();
        v.add_term(w, c);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, LaurentPoly<T>)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (w, c) in terms {
            v.add_term(w, c);
        }
        v
    }

    pub fn with_capacity(n: usize) -> Self {
        let mut terms = FxHashMap::default();
        terms.reserve(n);
        AlgElt { terms }
    }

    /// Adds `c w`, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: LaurentPoly<T>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(cur) => {
                *cur += &c;
                if cur.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_term_ref(&mut self, w: Word, c: &LaurentPoly<T>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The form `(w, v)`: coefficient of `w`, zero off the support.
    pub fn coeff(&self, w: Word) -> LaurentPoly<T> {
        self.terms.get(&w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn coeff_ref(&self, w: Word) -> Option<&LaurentPoly<T>> {
        self.terms.get(&w)
    }

    /// Unordered iteration over the stored terms.
    pub fn iter(&self) -> impl Iterator<Item = (Word, &LaurentPoly<T>)> {
        self.terms.iter().map(|(w, c)| (*w, c))
    }

    /// Terms in canonical word order.
    pub fn sorted_terms(&self) -> Vec<(Word, &LaurentPoly<T>)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_unstable_by_key(|(w, _)| *w);
        v
    }

    /// Supporting words in canonical order.
    pub fn support(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.terms.keys().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn scale(&self, c: &LaurentPoly<T>) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::with_capacity(self.len());
        for (w, a) in &self.terms {
            out.add_term(*w, a * c);
        }
        out
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        AlgElt { terms: self.terms.iter().map(|(w, c)| (*w, c.shift(k))).collect() }
    }

    /// Divides every coefficient exactly by `d`.
    pub fn exact_div(&self, d: &LaurentPoly<T>) -> Result<Self> {
        let mut terms = FxHashMap::default();
        terms.reserve(self.len());
        for (w, c) in &self.terms {
            terms.insert(*w, c.exact_div(d)?);
        }
        Ok(AlgElt { terms })
    }

    /// Concatenation product, extended bilinearly.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::with_capacity(self.len() * other.len());
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(*v), a * b);
            }
        }
        out
    }

    /// Prefixes every word with `a`.
    pub fn prepend(&self, a: Letter) -> Self {
        AlgElt { terms: self.terms.iter().map(|(w, c)| (w.push_front(a), c.clone())).collect() }
    }

    /// Appends `a` to every word.
    pub fn append(&self, a: Letter) -> Self {
        AlgElt { terms: self.terms.iter().map(|(w, c)| (w.push_back(a), c.clone())).collect() }
    }

    /// The antiautomorphism reversing words and swapping `x <-> y`.
    pub fn zeta(&self) -> Self {
        AlgElt { terms: self.terms.iter().map(|(w, c)| (w.zeta(), c.clone())).collect() }
    }

    /// Splits into bidegree-homogeneous parts.
    pub fn homogeneous_parts(&self) -> BTreeMap<(u32, u32), AlgElt<T>> {
        let mut parts: BTreeMap<(u32, u32), AlgElt<T>> = BTreeMap::new();
        for (w, c) in &self.terms {
            parts.entry(w.bidegree()).or_insert_with(Self::zero).terms.insert(*w, c.clone());
        }
        parts
    }

    /// The common bidegree of all supporting words, if there is one.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|w| w.bidegree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&LaurentPoly<T>) -> LaurentPoly<T>) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (*w, f(c))))
    }
}

impl<T: Coefficient> Default for AlgElt<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coefficient> AddAssign<&AlgElt<T>> for AlgElt<T> {
    fn add_assign(&mut self, rhs: &AlgElt<T>) {
        for (w, c) in &rhs.terms {
            self.add_term_ref(*w, c);
        }
    }
}

impl<T: Coefficient> AddAssign<AlgElt<T>> for AlgElt<T> {
    fn add_assign(&mut self, rhs: AlgElt<T>) {
        if self.is_zero() {
            *self = rhs;
            return;
        }
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
    }
}

impl<T: Coefficient> SubAssign<&AlgElt<T>> for AlgElt<T> {
    fn sub_assign(&mut self, rhs: &AlgElt<T>) {
        for (w, c) in &rhs.terms {
            self.add_term(*w, -c);
        }
    }
}

impl<T: Coefficient> Add for &AlgElt<T> {
    type Output = AlgElt<T>;
    fn add(self, rhs: Self) -> AlgElt<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Coefficient> Sub for &AlgElt<T> {
    type Output = AlgElt<T>;
    fn sub(self, rhs: Self) -> AlgElt<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Coefficient> Add for AlgElt<T> {
    type Output = AlgElt<T>;
    fn add(mut self, rhs: Self) -> AlgElt<T> {
        self += rhs;
        self
    }
}

impl<T: Coefficient> Sub for AlgElt<T> {
    type Output = AlgElt<T>;
    fn sub(mut self, rhs: Self) -> AlgElt<T> {
        self -= &rhs;
        self
    }
}

impl<T: Coefficient> Neg for &AlgElt<T> {
    type Output = AlgElt<T>;
    fn neg(self) -> AlgElt<T> {
        AlgElt { terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect() }
    }
}

impl<T: Coefficient> Neg for AlgElt<T> {
    type Output = AlgElt<T>;
    fn neg(self) -> AlgElt<T> {
        -&self
    }
}

impl<T: Coefficient> From<Word> for AlgElt<T> {
    fn from(w: Word) -> Self {
        AlgElt::from_word(w)
    }
}

/// Text form in canonical order: `xy + q^-2*yx`, `(q^2 + 1)*xx`.
impl<T: Coefficient> fmt::Display for AlgElt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else if c.num_terms() == 1 {
                write!(f, "{c}*{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}

impl<T: Coefficient> fmt::Debug for AlgElt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgElt[{self}]")
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm<T: Coefficient> {
    word: String,
    #[serde(bound = "")]
    coeff: LaurentPoly<T>,
}

#[derive(Serialize, Deserialize)]
struct JsonElt<T: Coefficient> {
    #[serde(bound = "")]
    terms: Vec<JsonTerm<T>>,
}

/// `{"terms": [{"word": "xxyy", "coeff": {...}}, ...]}` in canonical order.
impl<T: Coefficient> Serialize for AlgElt<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| JsonTerm { word: w.to_string(), coeff: c.clone() })
            .collect();
        JsonElt { terms }.serialize(s)
    }
}

impl<'de, T: Coefficient> Deserialize<'de> for AlgElt<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = JsonElt::<T>::deserialize(d)?;
        let mut out = AlgElt::zero();
        for t in raw.terms {
            let w: Word = t.word.parse().map_err(D::Error::custom)?;
            out.add_term(w, t.coeff);
        }
        Ok(out)
    }
}
