//! Exact descriptors for integer sequences that are eventually periodic-affine.
//!
//! A [`Seq`] is indexed by the positive integers. It stores an explicit prefix
//! followed by a [`Germ`]: for `n` past the prefix the value is
//! `slope[r] * n + offset[r]` where `r = n mod period`. The class of such
//! sequences is closed under `+`, `-`, pointwise `min` and `max`, and every
//! asymptotic question we need (liminf, boundedness, eventual constancy) is
//! decided from the finite data.
//!
//! All constructors return canonical values: the period is minimal and the
//! prefix is trimmed while its last entry agrees with the germ. Structural
//! equality is therefore pointwise equality.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

/// One affine piece `slope * n + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Affine {
    pub slope: i64,
    pub offset: i64,
}

impl Affine {
    pub const ZERO: Affine = Affine { slope: 0, offset: 0 };

    pub fn constant(c: i64) -> Self {
        Affine { slope: 0, offset: c }
    }

    pub fn linear(slope: i64, offset: i64) -> Self {
        Affine { slope, offset }
    }

    pub fn at(&self, n: u64) -> i64 {
        self.slope * n as i64 + self.offset
    }

    fn add(self, other: Affine) -> Affine {
        Affine { slope: self.slope + other.slope, offset: self.offset + other.offset }
    }

    fn neg(self) -> Affine {
        Affine { slope: -self.slope, offset: -self.offset }
    }

    /// Asymptotic comparison along `n -> +inf`, plus an index after which the
    /// comparison holds at every integer.
    fn eventual_cmp(self, other: Affine) -> (Ordering, u64) {
        let ds = self.slope - other.slope;
        let d0 = self.offset - other.offset;
        if ds == 0 {
            (d0.cmp(&0), 0)
        } else {
            // |ds| >= 1, so for n > |d0| the slope term dominates.
            (ds.cmp(&0), d0.unsigned_abs() + 1)
        }
    }

    /// Limit along `n -> +inf`.
    pub fn limit(&self) -> Ext {
        match self.slope.cmp(&0) {
            Ordering::Greater => Ext::PosInf,
            Ordering::Less => Ext::NegInf,
            Ordering::Equal => Ext::Fin(self.offset),
        }
    }
}

/// Integers extended with both infinities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ext {
    NegInf,
    Fin(i64),
    PosInf,
}

impl Ext {
    pub fn finite(self) -> Option<i64> {
        match self {
            Ext::Fin(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::NegInf => write!(f, "-inf"),
            Ext::PosInf => write!(f, "+inf"),
            Ext::Fin(v) => write!(f, "{v}"),
        }
    }
}

/// The periodic-affine tail of a sequence. `pieces[n % period]` applies at `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Germ {
    pieces: Vec<Affine>,
}

impl Germ {
    pub fn new(pieces: Vec<Affine>) -> Self {
        assert!(!pieces.is_empty(), "germ needs at least one piece");
        let mut g = Germ { pieces };
        g.reduce_period();
        g
    }

    pub fn constant(c: i64) -> Self {
        Germ { pieces: vec![Affine::constant(c)] }
    }

    pub fn affine(slope: i64, offset: i64) -> Self {
        Germ { pieces: vec![Affine::linear(slope, offset)] }
    }

    pub fn period(&self) -> usize {
        self.pieces.len()
    }

    pub fn pieces(&self) -> &[Affine] {
        &self.pieces
    }

    pub fn piece(&self, n: u64) -> Affine {
        self.pieces[(n % self.pieces.len() as u64) as usize]
    }

    pub fn at(&self, n: u64) -> i64 {
        self.piece(n).at(n)
    }

    fn reduce_period(&mut self) {
        let p = self.pieces.len();
        for d in 1..p {
            if p.is_multiple_of(d) && (0..p).all(|r| self.pieces[r] == self.pieces[r % d]) {
                self.pieces.truncate(d);
                return;
            }
        }
    }

    fn expanded(&self, period: usize) -> Vec<Affine> {
        (0..period).map(|r| self.pieces[r % self.pieces.len()]).collect()
    }

    pub fn is_bounded(&self) -> bool {
        self.pieces.iter().all(|a| a.slope == 0)
    }

    /// The common eventual value, if every class is the same constant.
    pub fn eventual_constant(&self) -> Option<i64> {
        let first = self.pieces[0];
        (first.slope == 0 && self.pieces.iter().all(|a| *a == first)).then_some(first.offset)
    }

    pub fn liminf(&self) -> Ext {
        self.pieces.iter().map(Affine::limit).min().unwrap()
    }

    pub fn limsup(&self) -> Ext {
        self.pieces.iter().map(Affine::limit).max().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.iter().all(|a| *a == Affine::ZERO)
    }

    pub fn map_pieces(&self, f: impl Fn(Affine) -> Affine) -> Germ {
        Germ::new(self.pieces.iter().map(|a| f(*a)).collect())
    }

    pub fn neg(&self) -> Germ {
        self.map_pieces(Affine::neg)
    }

    pub fn add(&self, other: &Germ) -> Germ {
        let p = self.period().lcm(&other.period());
        let a = self.expanded(p);
        let b = other.expanded(p);
        Germ::new(a.into_iter().zip(b).map(|(x, y)| x.add(y)).collect())
    }

    pub fn scale(&self, k: i64) -> Germ {
        self.map_pieces(|a| Affine { slope: a.slope * k, offset: a.offset * k })
    }
}

/// An integer sequence indexed by `n >= 1`: an explicit prefix, then a germ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seq {
    prefix: Vec<i64>,
    germ: Germ,
}

impl Seq {
    pub fn new(prefix: Vec<i64>, germ: Germ) -> Self {
        let mut s = Seq { prefix, germ };
        s.trim();
        s
    }

    pub fn constant(c: i64) -> Self {
        Seq { prefix: Vec::new(), germ: Germ::constant(c) }
    }

    pub fn zero() -> Self {
        Seq::constant(0)
    }

    /// Builds a sequence from sparse exceptions over a germ.
    pub fn from_exceptions(exceptions: &[(u64, i64)], germ: Germ) -> Self {
        let len = exceptions.iter().map(|(n, _)| *n).max().unwrap_or(0) as usize;
        let mut prefix: Vec<i64> = (1..=len as u64).map(|n| germ.at(n)).collect();
        for &(n, v) in exceptions {
            prefix[n as usize - 1] = v;
        }
        Seq::new(prefix, germ)
    }

    /// The sparse exception list: prefix entries that differ from the germ.
    pub fn exceptions(&self) -> Vec<(u64, i64)> {
        self.prefix
            .iter()
            .enumerate()
            .map(|(i, v)| (i as u64 + 1, *v))
            .filter(|(n, v)| self.germ.at(*n) != *v)
            .collect()
    }

    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    pub fn germ(&self) -> &Germ {
        &self.germ
    }

    /// Length of the explicit prefix; indices above it follow the germ.
    pub fn explicit_len(&self) -> u64 {
        self.prefix.len() as u64
    }

    pub fn at(&self, n: u64) -> i64 {
        debug_assert!(n >= 1, "sequences are indexed from 1");
        match self.prefix.get((n as usize).wrapping_sub(1)) {
            Some(v) if n >= 1 => *v,
            _ => self.germ.at(n),
        }
    }

    fn trim(&mut self) {
        while let Some(&last) = self.prefix.last() {
            if self.germ.at(self.prefix.len() as u64) == last {
                self.prefix.pop();
            } else {
                break;
            }
        }
    }

    fn extended_prefix(&self, len: usize) -> Vec<i64> {
        (1..=len.max(self.prefix.len()) as u64).map(|n| self.at(n)).collect()
    }

    pub fn map_values(&self, f: impl Fn(i64) -> i64, g: impl Fn(&Germ) -> Germ) -> Seq {
        Seq::new(self.prefix.iter().map(|v| f(*v)).collect(), g(&self.germ))
    }

    pub fn neg(&self) -> Seq {
        self.map_values(|v| -v, Germ::neg)
    }

    pub fn scale(&self, k: i64) -> Seq {
        self.map_values(|v| v * k, |g| g.scale(k))
    }

    pub fn add(&self, other: &Seq) -> Seq {
        let len = self.prefix.len().max(other.prefix.len());
        let prefix = (1..=len as u64).map(|n| self.at(n) + other.at(n)).collect();
        Seq::new(prefix, self.germ.add(&other.germ))
    }

    pub fn sub(&self, other: &Seq) -> Seq {
        self.add(&other.neg())
    }

    pub fn pointwise_min(&self, other: &Seq) -> Seq {
        self.lattice(other, Ordering::Less)
    }

    pub fn pointwise_max(&self, other: &Seq) -> Seq {
        self.lattice(other, Ordering::Greater)
    }

    fn lattice(&self, other: &Seq, keep: Ordering) -> Seq {
        let p = self.germ.period().lcm(&other.germ.period());
        let a = self.germ.expanded(p);
        let b = other.germ.expanded(p);
        let mut len = self.prefix.len().max(other.prefix.len()) as u64;
        let mut pieces = Vec::with_capacity(p);
        for (x, y) in a.into_iter().zip(b) {
            let (ord, from) = x.eventual_cmp(y);
            len = len.max(from);
            pieces.push(if ord == keep { x } else { y });
        }
        let pick = |u: i64, v: i64| if keep == Ordering::Less { u.min(v) } else { u.max(v) };
        let prefix = (1..=len).map(|n| pick(self.at(n), other.at(n))).collect();
        Seq::new(prefix, Germ::new(pieces))
    }

    /// Index after which every class is monotone and has settled relative to
    /// the level `t` (no further crossings of `t`).
    fn settled_len(&self, t: i64) -> u64 {
        let mut len = self.prefix.len() as u64;
        for a in self.germ.pieces() {
            if a.slope != 0 {
                len = len.max((t - a.offset).unsigned_abs() + 1);
            }
        }
        len
    }

    /// The 0/1 sequence of `n` with `pred(value(n))`, where `pred` is a
    /// threshold predicate (`v >= t`, `v <= t`, `v != t` ...) at level `t`.
    pub fn indicator(&self, t: i64, pred: impl Fn(i64) -> bool) -> Seq {
        let len = self.settled_len(t);
        let prefix: Vec<i64> = (1..=len).map(|n| pred(self.at(n)) as i64).collect();
        let germ = Germ::new(
            (0..self.germ.period() as u64)
                .map(|r| {
                    // pick a representative of class r beyond `len`
                    let p = self.germ.period() as u64;
                    let n = len + 1 + (r + p - (len + 1) % p) % p;
                    Affine::constant(pred(self.at(n)) as i64)
                })
                .collect(),
        );
        Seq::new(prefix, germ)
    }

    pub fn nonzero_indicator(&self) -> Seq {
        self.indicator(0, |v| v != 0)
    }

    pub fn liminf(&self) -> Ext {
        self.germ.liminf()
    }

    pub fn limsup(&self) -> Ext {
        self.germ.limsup()
    }

    /// Infimum over every index `n >= 1`.
    pub fn inf(&self) -> Ext {
        self.extreme(Ordering::Less)
    }

    /// Supremum over every index `n >= 1`.
    pub fn sup(&self) -> Ext {
        self.extreme(Ordering::Greater)
    }

    fn extreme(&self, dir: Ordering) -> Ext {
        let len = self.prefix.len() as u64;
        let p = self.germ.period() as u64;
        let mut acc: Option<Ext> = None;
        let mut push = |e: Ext| {
            acc = Some(match acc {
                None => e,
                Some(a) if e.cmp(&a) == dir => e,
                Some(a) => a,
            })
        };
        for v in &self.prefix {
            push(Ext::Fin(*v));
        }
        for r in 0..p {
            let n = len + 1 + (r + p - (len + 1) % p) % p;
            let a = self.germ.piece(n);
            let toward = match dir {
                Ordering::Less => a.slope < 0,
                _ => a.slope > 0,
            };
            if toward {
                push(if dir == Ordering::Less { Ext::NegInf } else { Ext::PosInf });
            } else {
                // the class is monotone away from `dir`; its first term is extreme
                push(Ext::Fin(a.at(n)));
            }
        }
        acc.unwrap()
    }

    /// Supremum over indices `n >= from`.
    pub fn sup_from(&self, from: u64) -> Ext {
        self.shifted_from(from).sup()
    }

    /// Infimum over indices `n >= from`.
    pub fn inf_from(&self, from: u64) -> Ext {
        self.shifted_from(from).inf()
    }

    // The same values restricted to `n >= from`, re-expressed with every
    // index below `from` overwritten by the value at `from` (which keeps
    // extremes unchanged).
    fn shifted_from(&self, from: u64) -> Seq {
        let from = from.max(1);
        let anchor = self.at(from);
        let len = (from - 1) as usize;
        let mut prefix = self.extended_prefix(len);
        for v in prefix.iter_mut().take(len) {
            *v = anchor;
        }
        Seq { prefix, germ: self.germ.clone() }
    }

    pub fn is_bounded(&self) -> bool {
        self.germ.is_bounded()
    }

    /// True iff every value lies in `allowed` except possibly in the prefix.
    pub fn germ_values_in(&self, allowed: &[i64]) -> bool {
        self.germ.pieces().iter().all(|a| a.slope == 0 && allowed.contains(&a.offset))
    }

    /// Replaces every prefix value that falls outside `allowed` with `fill`.
    pub fn snap_prefix(&self, allowed: &[i64], fill: i64) -> Seq {
        self.map_values(|v| if allowed.contains(&v) { v } else { fill }, Germ::clone)
    }

    /// Overwrites the prefix with the germ, giving a sequence that differs
    /// from `self` at finitely many indices only.
    pub fn germ_only(&self) -> Seq {
        Seq::new(Vec::new(), self.germ.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.prefix.is_empty() && self.germ.is_zero()
    }

    /// Indices `n` in the prefix region whose value is nonzero.
    pub fn nonzero_prefix_indices(&self) -> Vec<u64> {
        (1..=self.prefix.len() as u64).filter(|&n| self.at(n) != 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(s: &Seq, upto: u64) -> Vec<i64> {
        (1..=upto).map(|n| s.at(n)).collect()
    }

    #[test]
    fn trim_absorbs_matching_prefix() {
        let s = Seq::new(vec![5, 2, 3], Germ::affine(1, 0));
        assert_eq!(s.prefix(), &[5]);
        assert_eq!(s.exceptions(), vec![(1, 5)]);
    }

    #[test]
    fn period_reduces() {
        let g = Germ::new(vec![Affine::constant(1); 4]);
        assert_eq!(g.period(), 1);
    }

    #[test]
    fn min_with_crossing() {
        // n vs 10 - n
        let a = Seq::new(vec![], Germ::affine(1, 0));
        let b = Seq::new(vec![], Germ::affine(-1, 10));
        let m = a.pointwise_min(&b);
        let expect: Vec<i64> = (1..=40).map(|n: i64| n.min(10 - n)).collect();
        assert_eq!(brute(&m, 40), expect);
        assert_eq!(m.germ(), &Germ::affine(-1, 10));
    }

    #[test]
    fn min_with_periodic() {
        let even2 = Seq::new(vec![], Germ::new(vec![Affine::constant(2), Affine::constant(0)]));
        let n = Seq::new(vec![], Germ::affine(1, 0));
        let m = even2.pointwise_max(&n.neg());
        let expect: Vec<i64> = (1..=30).map(|k: i64| (if k % 2 == 0 { 2 } else { 0 }).max(-k)).collect();
        assert_eq!(brute(&m, 30), expect);
    }

    #[test]
    fn extremes() {
        let s = Seq::new(vec![3, -4], Germ::affine(1, 0));
        assert_eq!(s.inf(), Ext::Fin(-4));
        assert_eq!(s.sup(), Ext::PosInf);
        assert_eq!(s.liminf(), Ext::PosInf);
        let t = Seq::new(vec![9], Germ::affine(-1, 5));
        assert_eq!(t.sup(), Ext::Fin(9));
        assert_eq!(t.sup_from(2), Ext::Fin(3));
        assert_eq!(t.inf(), Ext::NegInf);
    }

    #[test]
    fn indicator_settles_past_roots() {
        let s = Seq::new(vec![], Germ::affine(1, -7));
        let z = s.nonzero_indicator();
        let expect: Vec<i64> = (1..=30).map(|n| (n != 7) as i64).collect();
        assert_eq!(brute(&z, 30), expect);
        let ge = s.indicator(3, |v| v >= 3);
        let expect: Vec<i64> = (1..=30).map(|n: i64| (n - 7 >= 3) as i64).collect();
        assert_eq!(brute(&ge, 30), expect);
    }

    #[test]
    fn equality_is_pointwise() {
        let a = Seq::from_exceptions(&[(3, 9)], Germ::constant(1));
        let b = Seq::new(vec![1, 1, 9, 1, 1], Germ::new(vec![Affine::constant(1); 2]));
        assert_eq!(a, b);
    }
}
