//! The q-shuffle product on the free algebra.
//!
//! Three independent routes compute the same product of two words:
//!
//! * [`ShuffleEngine::words`]: the head recursion
//!   `u * v = u1 (u' * v) + q^<u,v1> v1 (u * v')`, memoized on word pairs;
//! * [`shuffle_words_tail`]: the mirrored recursion peeling off last letters;
//! * [`shuffle_words_enumerate`]: a direct sum over all interleavings.
//!
//! Products of elements go through [`ShuffleEngine::product`], which runs
//! the head recursion on whole elements at once: it recurses on pairs of
//! prefixes of the two operands, so subproducts shared between different
//! words of the same operand are computed once.

use std::rc::Rc;
use std::sync::Arc;
use std::time::Instant;

use parking_lot::Mutex;
use rustc_hash::FxHashMap;

use crate::freealg::{AlgElt, Letter, Word};
use crate::laurent::{qint, LaurentPoly};
use crate::report::{Params, VerificationReport};
use crate::scalar::Coefficient;

type WordPairMemo<T> = FxHashMap<(Word, Word), Arc<AlgElt<T>>>;

/// `<a, b>`: 2 on equal letters, -2 otherwise.
pub fn pairing(a: Letter, b: Letter) -> i32 {
    if a == b {
        2
    } else {
        -2
    }
}

/// `sum_k <w_k, b>` over the letters of a word with bidegree `deg`.
fn pairing_with_degree((nx, ny): (u32, u32), b: Letter) -> i32 {
    let (same, other) = match b {
        Letter::X => (nx, ny),
        Letter::Y => (ny, nx),
    };
    2 * same as i32 - 2 * other as i32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `u * v`, the letter on the left.
    Left,
    /// `v * u`, the letter on the right.
    Right,
}

/// Product of a single letter with a word by direct insertion:
/// `u * v = sum_i v1..vi u vi+1..vn q^{<v1,u> + ... + <vi,u>}` on the left,
/// and the mirrored sum (exponent over `vi+1..vn`) on the right.
pub fn shuffle_letter<T: Coefficient>(u: Letter, v: Word, side: Side) -> AlgElt<T> {
    let n = v.len();
    let letters: Vec<Letter> = v.letters().collect();
    let mut out = AlgElt::with_capacity(n + 1);
    for i in 0..=n {
        let w = v.slice(0, i).push_back(u).concat(v.slice(i, n));
        let range = match side {
            Side::Left => &letters[..i],
            Side::Right => &letters[i..],
        };
        let e: i32 = range.iter().map(|&a| pairing(a, u)).sum();
        out.add_term(w, LaurentPoly::q_pow(e));
    }
    out
}

/// Default cap on memoized word pairs before the table is reset.
pub const DEFAULT_MEMO_CAP: usize = 1 << 16;

/// Shuffle product with a shared, bounded memo of word-pair products.
///
/// Safe to share between threads; every call returns the same value no
/// matter how calls interleave.
pub struct ShuffleEngine<T: Coefficient> {
    memo: Mutex<WordPairMemo<T>>,
    cap: usize,
}

impl<T: Coefficient> Default for ShuffleEngine<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Coefficient> ShuffleEngine<T> {
    pub fn new() -> Self {
        Self::with_memo_cap(DEFAULT_MEMO_CAP)
    }

    /// `cap == 0` disables memoization.
    pub fn with_memo_cap(cap: usize) -> Self {
        ShuffleEngine { memo: Mutex::new(FxHashMap::default()), cap }
    }

    pub fn memo_cap(&self) -> usize {
        self.cap
    }

    pub fn memo_len(&self) -> usize {
        self.memo.lock().len()
    }

    pub fn clear_memo(&self) {
        self.memo.lock().clear();
    }

    /// `u * v` for words, by the head recursion.
    pub fn words(&self, u: Word, v: Word) -> Arc<AlgElt<T>> {
        if let Some(hit) = self.memo.lock().get(&(u, v)) {
            return Arc::clone(hit);
        }
        let result = Arc::new(self.words_uncached(u, v));
        if self.cap > 0 {
            let mut memo = self.memo.lock();
            if memo.len() >= self.cap {
                memo.clear();
            }
            memo.insert((u, v), Arc::clone(&result));
        }
        result
    }

    fn words_uncached(&self, u: Word, v: Word) -> AlgElt<T> {
        if u.is_empty() {
            return AlgElt::from_word(v);
        }
        if v.is_empty() {
            return AlgElt::from_word(u);
        }
        let u1 = u.first().unwrap();
        let v1 = v.first().unwrap();
        let k = pairing_with_degree(u.bidegree(), v1);
        let left = self.words(u.tail(), v);
        let right = self.words(u, v.tail());
        let mut out = AlgElt::with_capacity(left.len() + right.len());
        for (w, c) in left.iter() {
            out.add_term_ref(w.push_front(u1), c);
        }
        for (w, c) in right.iter() {
            out.add_term(w.push_front(v1), c.shift(k));
        }
        out
    }

    /// Bilinear extension of [`ShuffleEngine::words`].
    pub fn product_by_words(&self, a: &AlgElt<T>, b: &AlgElt<T>) -> AlgElt<T> {
        let mut out = AlgElt::zero();
        for (u, cu) in a.iter() {
            for (v, cv) in b.iter() {
                let coeff = cu * cv;
                for (w, c) in self.words(u, v).iter() {
                    out.add_term(w, c * &coeff);
                }
            }
        }
        out
    }

    /// `a * b` for arbitrary elements.
    pub fn product(&self, a: &AlgElt<T>, b: &AlgElt<T>) -> AlgElt<T> {
        if a.is_zero() || b.is_zero() {
            return AlgElt::zero();
        }
        let mut out = AlgElt::zero();
        let bparts = b.homogeneous_parts();
        for (_, ap) in a.homogeneous_parts() {
            for bp in bparts.values() {
                out += homogeneous_product(&ap, bp);
            }
        }
        out
    }

    /// Left-nested product `e1 * e2 * ... * en`; the empty product is 1.
    pub fn product_all<'a, I>(&self, factors: I) -> AlgElt<T>
    where
        I: IntoIterator<Item = &'a AlgElt<T>>,
    {
        let mut acc = AlgElt::one();
        for f in factors {
            acc = self.product(&acc, f);
        }
        acc
    }
}

/// Prefix structure of a homogeneous element: which prefixes occur, and the
/// coefficient of each complete word.
struct Prefixes<'a, T: Coefficient> {
    elt: &'a AlgElt<T>,
    degree: (u32, u32),
    children: FxHashMap<Word, [bool; 2]>,
    quotients: FxHashMap<Word, Rc<AlgElt<T>>>,
}

impl<'a, T: Coefficient> Prefixes<'a, T> {
    fn new(elt: &'a AlgElt<T>) -> Self {
        let degree = elt.bidegree().expect("homogeneous element");
        let mut children: FxHashMap<Word, [bool; 2]> = FxHashMap::default();
        for (w, _) in elt.iter() {
            let mut p = Word::empty();
            for a in w.letters() {
                children.entry(p).or_default()[a as usize] = true;
                p = p.push_back(a);
            }
            children.entry(p).or_default();
        }
        Prefixes { elt, degree, children, quotients: FxHashMap::default() }
    }

    /// Coefficient of `p` when `p` is a complete word of the element.
    fn terminal(&self, p: Word) -> Option<&'a LaurentPoly<T>> {
        if p.len() as u32 == self.degree.0 + self.degree.1 {
            self.elt.coeff_ref(p)
        } else {
            None
        }
    }

    fn kids(&self, p: Word) -> [bool; 2] {
        self.children.get(&p).copied().unwrap_or_default()
    }

    /// Bidegree of the left quotient by `p`.
    fn rest_degree(&self, p: Word) -> (u32, u32) {
        let (px, py) = p.bidegree();
        (self.degree.0 - px, self.degree.1 - py)
    }

    /// The left quotient `sum_w (p w, elt) w`.
    fn quotient(&mut self, p: Word) -> Rc<AlgElt<T>> {
        if let Some(q) = self.quotients.get(&p) {
            return Rc::clone(q);
        }
        let q = match self.terminal(p) {
            Some(c) => AlgElt::term(Word::empty(), c.clone()),
            None => {
                let mut q = AlgElt::zero();
                for a in [Letter::X, Letter::Y] {
                    if self.kids(p)[a as usize] {
                        let sub = self.quotient(p.push_back(a));
                        for (w, c) in sub.iter() {
                            q.add_term_ref(w.push_front(a), c);
                        }
                    }
                }
                q
            }
        };
        let q = Rc::new(q);
        self.quotients.insert(p, Rc::clone(&q));
        q
    }
}

/// Head recursion lifted to homogeneous elements, memoized on prefix pairs.
fn homogeneous_product<T: Coefficient>(a: &AlgElt<T>, b: &AlgElt<T>) -> AlgElt<T> {
    let mut pa = Prefixes::new(a);
    let mut pb = Prefixes::new(b);
    let mut memo: FxHashMap<(Word, Word), Rc<AlgElt<T>>> = FxHashMap::default();
    let top = prefix_product(&mut pa, &mut pb, Word::empty(), Word::empty(), &mut memo);
    drop(memo);
    Rc::try_unwrap(top).unwrap_or_else(|rc| (*rc).clone())
}

fn prefix_product<T: Coefficient>(
    pa: &mut Prefixes<'_, T>,
    pb: &mut Prefixes<'_, T>,
    p: Word,
    r: Word,
    memo: &mut FxHashMap<(Word, Word), Rc<AlgElt<T>>>,
) -> Rc<AlgElt<T>> {
    if let Some(hit) = memo.get(&(p, r)) {
        return Rc::clone(hit);
    }
    let out = if let Some(c) = pa.terminal(p) {
        pb.quotient(r).scale(c)
    } else if let Some(d) = pb.terminal(r) {
        pa.quotient(p).scale(d)
    } else {
        let deg = pa.rest_degree(p);
        let mut out = AlgElt::zero();
        for a in [Letter::X, Letter::Y] {
            if pa.kids(p)[a as usize] {
                let sub = prefix_product(pa, pb, p.push_back(a), r, memo);
                for (w, c) in sub.iter() {
                    out.add_term_ref(w.push_front(a), c);
                }
            }
        }
        for b in [Letter::X, Letter::Y] {
            if pb.kids(r)[b as usize] {
                let k = pairing_with_degree(deg, b);
                let sub = prefix_product(pa, pb, p, r.push_back(b), memo);
                for (w, c) in sub.iter() {
                    out.add_term(w.push_front(b), c.shift(k));
                }
            }
        }
        out
    };
    let out = Rc::new(out);
    memo.insert((p, r), Rc::clone(&out));
    out
}

/// `u * v` by the tail recursion
/// `u * v = (u * v1..vs-1) vs + q^{<ur,v1> + ... + <ur,vs>} (u1..ur-1 * v) ur`.
pub fn shuffle_words_tail<T: Coefficient>(u: Word, v: Word) -> AlgElt<T> {
    fn go<T: Coefficient>(
        u: Word,
        v: Word,
        memo: &mut FxHashMap<(usize, usize), Rc<AlgElt<T>>>,
        i: usize,
        j: usize,
    ) -> Rc<AlgElt<T>> {
        // Operands are the prefixes u[..i], v[..j].
        if let Some(hit) = memo.get(&(i, j)) {
            return Rc::clone(hit);
        }
        let ui = u.slice(0, i);
        let vj = v.slice(0, j);
        let out = if i == 0 {
            AlgElt::from_word(vj)
        } else if j == 0 {
            AlgElt::from_word(ui)
        } else {
            let ur = ui.last().unwrap();
            let vs = vj.last().unwrap();
            let k: i32 = vj.letters().map(|b| pairing(ur, b)).sum();
            let mut out = go(u, v, memo, i, j - 1).append(vs);
            for (w, c) in go(u, v, memo, i - 1, j).iter() {
                out.add_term(w.push_back(ur), c.shift(k));
            }
            out
        };
        let out = Rc::new(out);
        memo.insert((i, j), Rc::clone(&out));
        out
    }
    let mut memo = FxHashMap::default();
    let r = go::<T>(u, v, &mut memo, u.len(), v.len());
    (*r).clone()
}

/// `u * v` as a sum over all interleavings: each placement of the letters
/// of `u` among those of `v` contributes `q^{sum <u_i, v_j>}` over pairs
/// where `v_j` lands before `u_i`.
pub fn shuffle_words_enumerate<T: Coefficient>(u: Word, v: Word) -> AlgElt<T> {
    let (r, s) = (u.len(), v.len());
    let ul: Vec<Letter> = u.letters().collect();
    let vl: Vec<Letter> = v.letters().collect();
    let mut out = AlgElt::zero();
    // Walk every binary string with r ones (take from u) and s zeros.
    let mut choice = vec![false; r + s];
    fn rec<T: Coefficient>(
        pos: usize,
        i: usize,
        j: usize,
        ul: &[Letter],
        vl: &[Letter],
        choice: &mut Vec<bool>,
        out: &mut AlgElt<T>,
    ) {
        if i == ul.len() && j == vl.len() {
            let (mut a, mut b) = (0, 0);
            let mut word = Word::empty();
            let mut exp = 0i32;
            for &from_u in choice.iter() {
                if from_u {
                    exp += vl[..b].iter().map(|&vb| pairing(ul[a], vb)).sum::<i32>();
                    word = word.push_back(ul[a]);
                    a += 1;
                } else {
                    word = word.push_back(vl[b]);
                    b += 1;
                }
            }
            out.add_term(word, LaurentPoly::q_pow(exp));
            return;
        }
        if i < ul.len() {
            choice[pos] = true;
            rec(pos + 1, i + 1, j, ul, vl, choice, out);
        }
        if j < vl.len() {
            choice[pos] = false;
            rec(pos + 1, i, j + 1, ul, vl, choice, out);
        }
    }
    rec(0, 0, 0, &ul, &vl, &mut choice, &mut out);
    out
}

/// Bilinear extension of any word-level product.
pub fn bilinear<T: Coefficient>(
    a: &AlgElt<T>,
    b: &AlgElt<T>,
    words: impl Fn(Word, Word) -> AlgElt<T>,
) -> AlgElt<T> {
    let mut out = AlgElt::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            let coeff = cu * cv;
            for (w, c) in words(u, v).iter() {
                out.add_term(w, c * &coeff);
            }
        }
    }
    out
}

/// Residual of `a*a*a*b - [3] a*a*b*a + [3] a*b*a*a - b*a*a*a`.
pub fn qserre_residual<T: Coefficient>(engine: &ShuffleEngine<T>, a: Letter, b: Letter) -> AlgElt<T> {
    let la = AlgElt::letter(a);
    let lb = AlgElt::letter(b);
    let three = qint::<T>(3);
    let prod = |fs: [&AlgElt<T>; 4]| engine.product_all(fs);
    let mut r = prod([&la, &la, &la, &lb]);
    r -= &prod([&la, &la, &lb, &la]).scale(&three);
    r += &prod([&la, &lb, &la, &la]).scale(&three);
    r -= &prod([&lb, &la, &la, &la]);
    r
}

/// Both q-Serre relations for `x, y` in the shuffle algebra.
pub fn qserre_check<T: Coefficient>(engine: &ShuffleEngine<T>) -> Vec<VerificationReport<T>> {
    [(Letter::X, Letter::Y, "x"), (Letter::Y, Letter::X, "y")]
        .into_iter()
        .map(|(a, b, name)| {
            let start = Instant::now();
            VerificationReport::from_residual("q_serre", Params::new().with("leading", name), qserre_residual(engine, a, b))
                .timed(start)
        })
        .collect()
}
