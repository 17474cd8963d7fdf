//! Standalone checker for lattice terms over one generator `f` on ω+1 with
//! `f(n) = n` and `f(∞) = 1`. It knows nothing about the library's
//! descriptors: terms are evaluated pointwise on `1..=WINDOW` and at ∞.

use std::collections::BTreeMap;

use radfact::ideal_core::Term;

pub const WINDOW: u64 = 50;

#[derive(Clone, Debug)]
pub enum OTerm {
    /// `c·f`
    Lin(i64),
    Add(Box<OTerm>, Box<OTerm>),
    Meet(Box<OTerm>, Box<OTerm>),
    Join(Box<OTerm>, Box<OTerm>),
}

impl OTerm {
    /// Value at `n`, or at ∞ for `None`.
    pub fn eval(&self, n: Option<u64>) -> i64 {
        match self {
            OTerm::Lin(c) => c * n.map_or(1, |n| n as i64),
            OTerm::Add(a, b) => a.eval(n) + b.eval(n),
            OTerm::Meet(a, b) => a.eval(n).min(b.eval(n)),
            OTerm::Join(a, b) => a.eval(n).max(b.eval(n)),
        }
    }

    /// Values at `1..=WINDOW` followed by the value at ∞.
    pub fn signature(&self) -> Vec<i64> {
        (1..=WINDOW).map(|n| self.eval(Some(n))).chain([self.eval(None)]).collect()
    }

    pub fn to_term(&self) -> Term {
        match self {
            OTerm::Lin(c) => Term::mul(*c, Term::gen("f")),
            OTerm::Add(a, b) => Term::add(vec![a.to_term(), b.to_term()]),
            OTerm::Meet(a, b) => Term::meet(a.to_term(), b.to_term()),
            OTerm::Join(a, b) => Term::join(a.to_term(), b.to_term()),
        }
    }
}

/// Every function reachable with `|c| ≤ max_coefficient` and at most `depth`
/// rounds of `+`, `∧`, `∨`, one representative per distinct signature.
pub fn exhaust(max_coefficient: i64, depth: usize) -> Vec<OTerm> {
    let mut pool: BTreeMap<Vec<i64>, OTerm> = BTreeMap::new();
    for c in -max_coefficient..=max_coefficient {
        let t = OTerm::Lin(c);
        pool.entry(t.signature()).or_insert(t);
    }
    for _ in 0..depth {
        let current: Vec<OTerm> = pool.values().cloned().collect();
        for a in &current {
            for b in &current {
                for t in [
                    OTerm::Add(Box::new(a.clone()), Box::new(b.clone())),
                    OTerm::Meet(Box::new(a.clone()), Box::new(b.clone())),
                    OTerm::Join(Box::new(a.clone()), Box::new(b.clone())),
                ] {
                    pool.entry(t.signature()).or_insert(t);
                }
            }
        }
    }
    pool.into_values().collect()
}

/// The tail equals `a·n` on the whole window, where `a` is the value at ∞.
pub fn is_single_slope(t: &OTerm) -> bool {
    let a = t.eval(None);
    (1..=WINDOW).all(|n| t.eval(Some(n)) == a * n as i64)
}

/// A term that could become a 0/1 function equal to 1 at ∞ after a finite
/// change on isolated points: its values on the back half of the window all
/// lie in {0, 1} and its value at ∞ is 1.
pub fn radical_witness_at_infinity(pool: &[OTerm]) -> Option<&OTerm> {
    pool.iter()
        .find(|t| t.eval(None) == 1 && (WINDOW / 2..=WINDOW).all(|n| matches!(t.eval(Some(n)), 0 | 1)))
}
