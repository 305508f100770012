use std::fmt;
use std::sync::Arc;

use parking_lot::Mutex;
use rustc_hash::FxHashMap;

use crate::catalan::{catalan_element_with, CoefficientRule};
use crate::freealg::{AlgElt, Letter};
use crate::shuffle::ShuffleEngine;
use crate::scalar::Coefficient;

type Cache<K, T> = Mutex<FxHashMap<K, Arc<AlgElt<T>>>>;

/// A named element built from the Catalan elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Named {
    /// `C_n`
    C(usize),
    /// `x C_n`
    XC(usize),
    /// `C_n y`
    CY(usize),
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::C(n) => write!(f, "C{n}"),
            Named::XC(n) => write!(f, "xC{n}"),
            Named::CY(n) => write!(f, "C{n}y"),
        }
    }
}

/// Shared state for computations in the q-shuffle algebra: the product
/// engine plus caches of the Catalan elements and of `x C_n`, `C_n y`.
///
/// The coefficient rule is fixed per instance; the off-by-one rule exists
/// only to build negative controls.
pub struct Algebra<T: Coefficient> {
    engine: ShuffleEngine<T>,
    rule: CoefficientRule,
    catalan: Cache<usize, T>,
    x_catalan: Cache<usize, T>,
    catalan_y: Cache<usize, T>,
    products: Cache<(Named, Named), T>,
}

impl<T: Coefficient> Default for Algebra<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn cached<T: Coefficient>(
    cache: &Cache<usize, T>,
    n: usize,
    make: impl FnOnce() -> AlgElt<T>,
) -> Arc<AlgElt<T>> {
    if let Some(hit) = cache.lock().get(&n) {
        return Arc::clone(hit);
    }
    let v = Arc::new(make());
    Arc::clone(cache.lock().entry(n).or_insert(v))
}

impl<T: Coefficient> Algebra<T> {
    pub fn new() -> Self {
        Self::with_engine(ShuffleEngine::new(), CoefficientRule::Elevation)
    }

    pub fn with_rule(rule: CoefficientRule) -> Self {
        Self::with_engine(ShuffleEngine::new(), rule)
    }

    pub fn with_engine(engine: ShuffleEngine<T>, rule: CoefficientRule) -> Self {
        Algebra {
            engine,
            rule,
            catalan: Mutex::default(),
            x_catalan: Mutex::default(),
            catalan_y: Mutex::default(),
            products: Mutex::default(),
        }
    }

    pub fn engine(&self) -> &ShuffleEngine<T> {
        &self.engine
    }

    pub fn rule(&self) -> CoefficientRule {
        self.rule
    }

    /// `a * b`.
    pub fn star(&self, a: &AlgElt<T>, b: &AlgElt<T>) -> AlgElt<T> {
        self.engine.product(a, b)
    }

    /// `C_n`.
    pub fn c(&self, n: usize) -> Arc<AlgElt<T>> {
        cached(&self.catalan, n, || catalan_element_with(n, self.rule))
    }

    /// `x C_n` (concatenation).
    pub fn xc(&self, n: usize) -> Arc<AlgElt<T>> {
        cached(&self.x_catalan, n, || self.c(n).prepend(Letter::X))
    }

    /// `C_n y` (concatenation).
    pub fn cy(&self, n: usize) -> Arc<AlgElt<T>> {
        cached(&self.catalan_y, n, || self.c(n).append(Letter::Y))
    }

    pub fn named(&self, a: Named) -> Arc<AlgElt<T>> {
        match a {
            Named::C(n) => self.c(n),
            Named::XC(n) => self.xc(n),
            Named::CY(n) => self.cy(n),
        }
    }

    /// `a * b` for named elements, cached.
    pub fn star_named(&self, a: Named, b: Named) -> Arc<AlgElt<T>> {
        if let Some(hit) = self.products.lock().get(&(a, b)) {
            return Arc::clone(hit);
        }
        let v = Arc::new(self.star(&self.named(a), &self.named(b)));
        Arc::clone(self.products.lock().entry((a, b)).or_insert(v))
    }
}
