//! Maximal-space backends: scattered ordinal spaces of rank at most two and
//! finite-precision ball spaces.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A compact scattered space of Cantor-Bendixson rank at most 2.
///
/// * rank 0: `points` isolated points labelled `1..=points`;
/// * rank 1: `ω+1`, isolated points `n >= 1` and the limit `inf`;
/// * rank 2: `ω²+1`, isolated points `(i, j)`, block limits `ℓ_i` and `top`.
///
/// Points are addressed by paths: a path of length `rank` is isolated, a
/// shorter path is the limit of the block it prefixes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrdinalSpace {
    rank: u8,
    points: u64,
}

impl OrdinalSpace {
    pub fn new(rank: u8, points: u64) -> Result<Self> {
        match rank {
            0 if points >= 1 => Ok(OrdinalSpace { rank, points }),
            0 => Err(Error::Model("a rank-0 space needs at least one point".into())),
            1 | 2 => Ok(OrdinalSpace { rank, points: 0 }),
            _ => Err(Error::Model(format!("ordinal rank {rank} is above the supported cap of 2"))),
        }
    }

    pub fn discrete(points: u64) -> Self {
        OrdinalSpace { rank: 0, points: points.max(1) }
    }

    /// `ω+1`.
    pub fn omega_plus_one() -> Self {
        OrdinalSpace { rank: 1, points: 0 }
    }

    /// `ω²+1`.
    pub fn omega_squared_plus_one() -> Self {
        OrdinalSpace { rank: 2, points: 0 }
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    /// Number of points of a rank-0 space.
    pub fn finite_len(&self) -> Option<u64> {
        (self.rank == 0).then_some(self.points)
    }

    /// The subspace of limit points, re-expressed as a space of rank one less.
    pub fn cb_derivative(&self) -> Result<OrdinalSpace> {
        match self.rank {
            0 => Err(Error::RankZero),
            1 => Ok(OrdinalSpace::discrete(1)),
            _ => Ok(OrdinalSpace::omega_plus_one()),
        }
    }

    /// Maps a point of the derived space back to the limit point it denotes.
    pub fn derived_point(&self, p: &[u64]) -> Result<Vec<u64>> {
        let d = self.cb_derivative()?;
        d.check(p)?;
        Ok(match self.rank {
            1 => vec![],
            _ => p.to_vec(),
        })
    }

    /// Inverse of [`derived_point`](Self::derived_point).
    pub fn to_derived(&self, p: &[u64]) -> Result<Vec<u64>> {
        self.check(p)?;
        if self.is_isolated(p) {
            return Err(Error::UnknownPoint(format!("{} is isolated", path_label(self.rank, p))));
        }
        Ok(match self.rank {
            1 => vec![1],
            _ => p.to_vec(),
        })
    }

    pub fn check(&self, p: &[u64]) -> Result<()> {
        let ok = match self.rank {
            0 => p.len() == 1 && (1..=self.points).contains(&p[0]),
            _ => p.len() <= self.rank as usize && p.iter().all(|&k| k >= 1),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownPoint(format!("{p:?}")))
        }
    }

    pub fn is_isolated(&self, p: &[u64]) -> bool {
        p.len() == self.rank.max(1) as usize
    }

    pub fn label(&self, p: &[u64]) -> String {
        path_label(self.rank, p)
    }

    pub fn parse_point(&self, s: &str) -> Result<Vec<u64>> {
        let s = s.trim();
        let mut path = Vec::new();
        for (k, part) in s.split('.').enumerate() {
            if part == "inf" || part == "∞" || part == "top" {
                if k + 1 != s.split('.').count() {
                    return Err(Error::UnknownPoint(s.to_string()));
                }
                break;
            }
            path.push(part.parse::<u64>().map_err(|_| Error::UnknownPoint(s.to_string()))?);
        }
        if self.rank == 0 && path.is_empty() {
            return Err(Error::UnknownPoint(s.to_string()));
        }
        self.check(&path)?;
        Ok(path)
    }

    /// All limit points of a rank <= 1 space, or the limit points of a rank-2
    /// space that lie in blocks `1..=blocks` together with `top`.
    pub fn limit_points(&self, blocks: u64) -> Vec<Vec<u64>> {
        match self.rank {
            0 => vec![],
            1 => vec![vec![]],
            _ => (1..=blocks).map(|i| vec![i]).chain(std::iter::once(vec![])).collect(),
        }
    }
}

fn path_label(rank: u8, p: &[u64]) -> String {
    let mut parts: Vec<String> = p.iter().map(u64::to_string).collect();
    if rank > 0 && p.len() < rank as usize {
        parts.push("inf".into());
    }
    parts.join(".")
}

/// Residue classes modulo `p^depth`: the unitary maximal ideals of `Int(V)`
/// seen at a fixed adic precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BallSpace {
    p: u64,
    depth: u32,
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl BallSpace {
    pub fn new(p: u64, depth: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        p.checked_pow(depth)
            .filter(|&n| n <= 1 << 20)
            .ok_or_else(|| Error::Model(format!("{p}^{depth} leaves is too many")))?;
        Ok(BallSpace { p, depth })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn leaf_count(&self) -> u64 {
        self.p.pow(self.depth)
    }

    /// Base-`p` digits of the residue, least significant first.
    pub fn label(&self, leaf: u64) -> String {
        let mut r = leaf;
        (0..self.depth)
            .map(|_| {
                let d = r % self.p;
                r /= self.p;
                digit(d)
            })
            .collect()
    }

    pub fn parse_leaf(&self, s: &str) -> Result<u64> {
        let digits = parse_digits(self.p, s)?;
        if digits.len() != self.depth as usize {
            return Err(Error::UnknownPoint(s.to_string()));
        }
        Ok(digits_value(self.p, &digits))
    }

    /// Leaves in the ball `{x ≡ residue mod p^k}`.
    pub fn ball(&self, k: u32, residue: u64) -> Vec<u64> {
        let m = self.p.pow(k);
        (0..self.leaf_count()).filter(|x| x % m == residue % m).collect()
    }

    /// Every ball at every level, as `(k, residue)`.
    pub fn all_balls(&self) -> Vec<(u32, u64)> {
        (0..=self.depth).flat_map(|k| (0..self.p.pow(k)).map(move |r| (k, r))).collect()
    }
}

fn digit(d: u64) -> char {
    std::char::from_digit(d as u32, 36).expect("digit below 36")
}

pub(crate) fn parse_digits(p: u64, s: &str) -> Result<Vec<u64>> {
    s.chars()
        .map(|c| {
            c.to_digit(36).map(u64::from).filter(|&d| d < p).ok_or_else(|| Error::UnknownPoint(s.to_string()))
        })
        .collect()
}

pub(crate) fn digits_value(p: u64, digits: &[u64]) -> u64 {
    digits.iter().rev().fold(0, |acc, d| acc * p + d)
}

/// A point of some backend.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Path(Vec<u64>),
    Leaf(u64),
}

/// A maximal-space backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Ordinal(OrdinalSpace),
    Ball(BallSpace),
}

impl Space {
    pub fn check(&self, x: &Point) -> Result<()> {
        match (self, x) {
            (Space::Ordinal(o), Point::Path(p)) => o.check(p),
            (Space::Ball(b), Point::Leaf(l)) if *l < b.leaf_count() => Ok(()),
            _ => Err(Error::UnknownPoint(format!("{x:?}"))),
        }
    }

    pub fn is_isolated(&self, x: &Point) -> bool {
        match (self, x) {
            (Space::Ordinal(o), Point::Path(p)) => o.is_isolated(p),
            _ => true,
        }
    }

    pub fn label(&self, x: &Point) -> String {
        match (self, x) {
            (Space::Ordinal(o), Point::Path(p)) => o.label(p),
            (Space::Ball(b), Point::Leaf(l)) => b.label(*l),
            _ => format!("{x:?}"),
        }
    }

    pub fn parse_point(&self, s: &str) -> Result<Point> {
        match self {
            Space::Ordinal(o) => o.parse_point(s).map(Point::Path),
            Space::Ball(b) => b.parse_leaf(s).map(Point::Leaf),
        }
    }

    /// Number of points, when finite.
    pub fn finite_len(&self) -> Option<u64> {
        match self {
            Space::Ordinal(o) => o.finite_len(),
            Space::Ball(b) => Some(b.leaf_count()),
        }
    }

    /// Every point of a finite space.
    pub fn finite_points(&self) -> Option<Vec<Point>> {
        match self {
            Space::Ordinal(o) => o.finite_len().map(|n| (1..=n).map(|k| Point::Path(vec![k])).collect()),
            Space::Ball(b) => Some((0..b.leaf_count()).map(Point::Leaf).collect()),
        }
    }

    /// A finite list of points that meets every region a descriptor can
    /// distinguish up to index `horizon` (used for spot checks and sampling).
    pub fn sample_points(&self, horizon: u64) -> Vec<Point> {
        if let Some(all) = self.finite_points() {
            return all;
        }
        let Space::Ordinal(o) = self else { unreachable!() };
        match o.rank() {
            1 => (1..=horizon).map(|n| Point::Path(vec![n])).chain([Point::Path(vec![])]).collect(),
            _ => {
                let mut out = vec![Point::Path(vec![])];
                for i in 1..=horizon {
                    out.push(Point::Path(vec![i]));
                    for j in 1..=horizon {
                        out.push(Point::Path(vec![i, j]));
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Ordinal(o) => match o.rank() {
                0 => write!(f, "discrete({})", o.points),
                1 => write!(f, "ω+1"),
                _ => write!(f, "ω²+1"),
            },
            Space::Ball(b) => write!(f, "ball(p={}, depth={})", b.p, b.depth),
        }
    }
}
