//! Subsets of a maximal space, stored as 0/1 functions.

use std::fmt;

use crate::descriptor::{Germ, Seq};
use crate::error::{Error, Result};
use crate::ideal_core::{Conv, IdealFunction, Nested};
use crate::spectra::{Point, Space};

/// A finitely described subset of a maximal space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet(IdealFunction);

impl PointSet {
    pub fn from_indicator(f: IdealFunction) -> Result<Self> {
        if f.is_zero_one() {
            Ok(PointSet(f))
        } else {
            Err(Error::MalformedDescriptor("indicator must take values in {0, 1}".into()))
        }
    }

    pub fn empty(space: Space) -> Self {
        PointSet(IdealFunction::zero(space))
    }

    pub fn full(space: Space) -> Self {
        PointSet(IdealFunction::constant(space, 1))
    }

    /// The set of non-isolated points.
    pub fn limit_points(space: Space) -> Self {
        let f = match space {
            Space::Ordinal(o) if o.rank() == 1 => IdealFunction::from_conv(Conv::new(Seq::zero(), 1)),
            Space::Ordinal(o) if o.rank() == 2 => {
                IdealFunction::from_nested(Nested::new(vec![], Seq::zero(), Conv::constant(1)))
            }
            _ => IdealFunction::zero(space),
        };
        PointSet(f)
    }

    /// Points where `f` is nonzero.
    pub fn cozero(f: &IdealFunction) -> Self {
        PointSet(f.cozero())
    }

    pub fn space(&self) -> &Space {
        self.0.space()
    }

    pub fn indicator(&self) -> &IdealFunction {
        &self.0
    }

    pub fn contains(&self, x: &Point) -> Result<bool> {
        Ok(self.0.eval(x)? == 1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_zero()
    }

    pub fn union(&self, o: &PointSet) -> Result<Self> {
        Ok(PointSet(self.0.join(&o.0)?))
    }

    pub fn intersection(&self, o: &PointSet) -> Result<Self> {
        Ok(PointSet(self.0.meet(&o.0)?))
    }

    pub fn complement(&self) -> Self {
        PointSet(self.0.negate().add(&IdealFunction::constant(*self.space(), 1)).expect("same space"))
    }

    pub fn closure(&self) -> Self {
        PointSet(self.0.closure_of_indicator())
    }

    pub fn is_closed(&self) -> bool {
        self.closure() == *self
    }

    pub fn is_open(&self) -> bool {
        self.complement().is_closed()
    }

    pub fn is_clopen(&self) -> bool {
        self.0.is_continuous()
    }

    pub fn is_subset(&self, o: &PointSet) -> Result<bool> {
        self.0.le(&o.0)
    }

    /// The listed points, when the set is finite.
    pub fn finite_points(&self) -> Option<Vec<Point>> {
        if let Some(all) = self.space().finite_points() {
            return Some(all.into_iter().filter(|x| self.contains(x).unwrap_or(false)).collect());
        }
        match self.0.as_conv() {
            Some(c) => {
                if !c.seq.germ().is_zero() {
                    return None;
                }
                let mut v: Vec<Point> = c.seq.nonzero_prefix_indices().into_iter().map(|n| Point::Path(vec![n])).collect();
                if c.limit != 0 {
                    v.push(Point::Path(vec![]));
                }
                Some(v)
            }
            None => {
                let n = self.0.as_nested()?;
                if !n.tail().is_zero() || !n.limits().seq.germ().is_zero() {
                    return None;
                }
                let mut v = Vec::new();
                for i in 1..=n.explicit_blocks().max(n.limits().seq.explicit_len()) {
                    let b = n.block(i);
                    if !b.germ().is_zero() {
                        return None;
                    }
                    v.extend(b.nonzero_prefix_indices().into_iter().map(|j| Point::Path(vec![i, j])));
                    if n.limits().seq.at(i) != 0 {
                        v.push(Point::Path(vec![i]));
                    }
                }
                if n.limits().limit != 0 {
                    v.push(Point::Path(vec![]));
                }
                Some(v)
            }
        }
    }

    /// True iff the set is exactly the set of limit points.
    pub fn is_derived_set(&self) -> bool {
        matches!(self.space(), Space::Ordinal(o) if o.rank() > 0) && *self == PointSet::limit_points(*self.space())
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        if *self == PointSet::full(*self.space()) {
            return write!(f, "{}", self.space());
        }
        if self.is_derived_set() && self.finite_points().is_none() {
            return write!(f, "{{1.inf, 2.inf, 3.inf, …, inf}}");
        }
        match self.finite_points() {
            Some(v) => {
                let labels: Vec<String> = v.iter().map(|x| self.space().label(x)).collect();
                write!(f, "{{{}}}", labels.join(", "))
            }
            None => write!(f, "{}", self.0),
        }
    }
}

/// A basic clopen piece.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClopenAtom {
    /// A single isolated point.
    Point(Point),
    /// The limit point addressed by `prefix` together with the isolated or
    /// limit points of its block from index `from` on.
    Tail { prefix: Vec<u64>, from: u64 },
    /// The ball `{x ≡ residue mod p^k}`.
    Ball { k: u32, residue: u64 },
}

/// A finite union of basic clopen pieces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClopenSet {
    pub atoms: Vec<ClopenAtom>,
}

impl ClopenSet {
    pub fn new(atoms: Vec<ClopenAtom>) -> Self {
        ClopenSet { atoms }
    }

    pub fn to_set(&self, space: Space) -> Result<PointSet> {
        let mut acc = IdealFunction::zero(space);
        for a in &self.atoms {
            acc = acc.join(&atom_indicator(space, a)?)?;
        }
        PointSet::from_indicator(acc)
    }

    /// Atoms describing a clopen set, or `None` if the set is not clopen.
    pub fn from_set(set: &PointSet) -> Option<Self> {
        if !set.is_clopen() {
            return None;
        }
        let f = set.indicator();
        if let Some(v) = f.as_values() {
            let atoms = v
                .iter()
                .enumerate()
                .filter(|(_, x)| **x == 1)
                .map(|(i, _)| match set.space() {
                    Space::Ball(_) => ClopenAtom::Point(Point::Leaf(i as u64)),
                    Space::Ordinal(_) => ClopenAtom::Point(Point::Path(vec![i as u64 + 1])),
                })
                .collect();
            return Some(ClopenSet::new(atoms));
        }
        if let Some(c) = f.as_conv() {
            return Some(ClopenSet::new(block_atoms(&[], &c.seq, c.limit)));
        }
        let n = f.as_nested()?;
        let lim = &n.limits();
        let k = n.explicit_blocks().max(lim.seq.explicit_len());
        let mut atoms = Vec::new();
        for i in 1..=k {
            atoms.extend(block_atoms(&[i], n.block(i), lim.seq.at(i)));
        }
        if lim.limit == 1 {
            atoms.push(ClopenAtom::Tail { prefix: vec![], from: k + 1 });
        } else {
            debug_assert!(n.tail().is_zero());
        }
        Some(ClopenSet::new(atoms))
    }

    /// A smallest basic clopen neighbourhood of `x`.
    pub fn basic_neighbourhood(space: Space, x: &Point) -> Result<Self> {
        space.check(x)?;
        let atom = match (space, x) {
            (Space::Ball(b), Point::Leaf(l)) => ClopenAtom::Ball { k: b.depth(), residue: *l },
            (_, p) if space.is_isolated(p) => ClopenAtom::Point(p.clone()),
            (_, Point::Path(p)) => ClopenAtom::Tail { prefix: p.clone(), from: 1 },
            _ => unreachable!(),
        };
        Ok(ClopenSet::new(vec![atom]))
    }

    pub fn label(&self, space: &Space) -> String {
        let parts: Vec<String> = self
            .atoms
            .iter()
            .map(|a| match a {
                ClopenAtom::Point(x) => space.label(x),
                ClopenAtom::Tail { prefix, from } => {
                    let mut s: Vec<String> = prefix.iter().map(u64::to_string).collect();
                    s.push(format!("[{from}..]"));
                    s.join(".")
                }
                ClopenAtom::Ball { k, residue } => format!("B({k},{residue})"),
            })
            .collect();
        format!("{{{}}}", parts.join(" ∪ "))
    }
}

/// Atoms for one rank-1 block (prefix addresses the block) of a continuous
/// indicator.
fn block_atoms(prefix: &[u64], seq: &Seq, at_limit: i64) -> Vec<ClopenAtom> {
    let path = |n: u64| {
        let mut p = prefix.to_vec();
        p.push(n);
        ClopenAtom::Point(Point::Path(p))
    };
    let mut atoms: Vec<ClopenAtom> = seq.nonzero_prefix_indices().into_iter().map(path).collect();
    if at_limit == 1 {
        let from = seq.explicit_len() + 1;
        atoms.push(ClopenAtom::Tail { prefix: prefix.to_vec(), from });
    }
    atoms
}

fn tail_seq(from: u64) -> Seq {
    Seq::new(vec![0; from.saturating_sub(1) as usize], Germ::constant(1))
}

fn atom_indicator(space: Space, a: &ClopenAtom) -> Result<IdealFunction> {
    let bad = || Error::MalformedDescriptor(format!("{a:?} is not a clopen piece of {space}"));
    match (space, a) {
        (Space::Ball(b), ClopenAtom::Ball { k, residue }) if *k <= b.depth() => {
            let mut v = vec![0; b.leaf_count() as usize];
            for l in b.ball(*k, *residue) {
                v[l as usize] = 1;
            }
            IdealFunction::from_values(space, v)
        }
        (Space::Ball(_), ClopenAtom::Point(x)) => IdealFunction::indicator_of(space, std::slice::from_ref(x)),
        (Space::Ordinal(o), ClopenAtom::Point(x)) => {
            if !space.is_isolated(x) {
                return Err(bad());
            }
            space.check(x)?;
            let Point::Path(p) = x else { return Err(bad()) };
            match o.rank() {
                0 => IdealFunction::indicator_of(space, std::slice::from_ref(x)),
                1 => Ok(IdealFunction::from_conv(Conv::new(Seq::from_exceptions(&[(p[0], 1)], Germ::constant(0)), 0))),
                _ => {
                    let mut blocks = vec![Seq::zero(); p[0] as usize];
                    blocks[p[0] as usize - 1] = Seq::from_exceptions(&[(p[1], 1)], Germ::constant(0));
                    Ok(IdealFunction::from_nested(Nested::new(blocks, Seq::zero(), Conv::constant(0))))
                }
            }
        }
        (Space::Ordinal(o), ClopenAtom::Tail { prefix, from }) if *from >= 1 => match (o.rank(), prefix.as_slice()) {
            (1, []) => Ok(IdealFunction::from_conv(Conv::new(tail_seq(*from), 1))),
            (2, [i]) if *i >= 1 => {
                let mut blocks = vec![Seq::zero(); *i as usize];
                blocks[*i as usize - 1] = tail_seq(*from);
                let lims = Seq::from_exceptions(&[(*i, 1)], Germ::constant(0));
                Ok(IdealFunction::from_nested(Nested::new(blocks, Seq::zero(), Conv::new(lims, 0))))
            }
            (2, []) => {
                let blocks = vec![Seq::zero(); from.saturating_sub(1) as usize];
                Ok(IdealFunction::from_nested(Nested::new(blocks, Seq::constant(1), Conv::new(tail_seq(*from), 1))))
            }
            _ => Err(bad()),
        },
        _ => Err(bad()),
    }
}
