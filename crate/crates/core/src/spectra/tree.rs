//! Finite rooted trees modelling the spectrum of a Prüfer domain with finitely
//! many primes. The root is the zero ideal; maximal primes are the leaves.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Label of a prime ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeId(pub String);

impl PrimeId {
    pub fn new(s: impl Into<String>) -> Self {
        PrimeId(s.into())
    }
}

impl fmt::Display for PrimeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for PrimeId {
    fn from(s: &str) -> Self {
        PrimeId(s.to_string())
    }
}

/// Node indices into a [`FiniteTreeSpectrum`].
pub type NodeSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTreeSpectrum {
    labels: Vec<PrimeId>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    height: Vec<usize>,
    root: usize,
}

impl FiniteTreeSpectrum {
    /// Builds a tree from labels and a parent map. Exactly one label may be
    /// missing from `parents`; it becomes the root.
    pub fn new<P: Into<PrimeId> + Clone>(nodes: &[P], parents: &[(P, P)]) -> Result<Self> {
        let labels: Vec<PrimeId> = nodes.iter().cloned().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidTree(format!("duplicate node `{l}`")));
            }
        }
        let lookup = |p: &PrimeId| index.get(p).copied().ok_or_else(|| Error::UnknownPrime(p.0.clone()));
        let mut parent = vec![None; labels.len()];
        for (c, p) in parents {
            let c = lookup(&c.clone().into())?;
            let p = lookup(&p.clone().into())?;
            if parent[c].replace(p).is_some() {
                return Err(Error::InvalidTree(format!("node `{}` has two parents", labels[c])));
            }
        }
        Self::from_parent_vec(labels, parent)
    }

    pub fn from_parent_vec(labels: Vec<PrimeId>, parent: Vec<Option<usize>>) -> Result<Self> {
        let roots: Vec<usize> = (0..labels.len()).filter(|&i| parent[i].is_none()).collect();
        let root = match roots.as_slice() {
            [r] => *r,
            [] => return Err(Error::InvalidTree("no root".into())),
            _ => return Err(Error::InvalidTree("more than one root".into())),
        };
        let mut height = vec![usize::MAX; labels.len()];
        for start in 0..labels.len() {
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(p) = parent[cur] {
                if chain.len() > labels.len() {
                    return Err(Error::InvalidTree(format!("cycle through `{}`", labels[start])));
                }
                chain.push(p);
                cur = p;
            }
            height[start] = chain.len() - 1;
        }
        let mut children = vec![Vec::new(); labels.len()];
        for (c, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                children[*p].push(c);
            }
        }
        Ok(FiniteTreeSpectrum { labels, parent, children, height, root })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn label(&self, i: usize) -> &PrimeId {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[PrimeId] {
        &self.labels
    }

    pub fn index_of(&self, p: &PrimeId) -> Result<usize> {
        self.labels.iter().position(|l| l == p).ok_or_else(|| Error::UnknownPrime(p.0.clone()))
    }

    pub fn indices<'a, I: IntoIterator<Item = &'a PrimeId>>(&self, ps: I) -> Result<NodeSet> {
        ps.into_iter().map(|p| self.index_of(p)).collect()
    }

    pub fn names(&self, set: &NodeSet) -> BTreeSet<PrimeId> {
        set.iter().map(|&i| self.labels[i].clone()).collect()
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub fn height(&self, i: usize) -> usize {
        self.height[i]
    }

    pub fn dim(&self) -> usize {
        self.height.iter().copied().max().unwrap_or(0)
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.children[i].is_empty()
    }

    pub fn maximal(&self) -> NodeSet {
        (0..self.len()).filter(|&i| self.is_maximal(i)).collect()
    }

    pub fn nonzero(&self) -> NodeSet {
        (0..self.len()).filter(|&i| i != self.root).collect()
    }

    /// Chain from the root-adjacent prime down to `i` (the root is omitted).
    pub fn chain_to(&self, i: usize) -> Vec<usize> {
        let mut chain = vec![];
        let mut cur = Some(i);
        while let Some(c) = cur {
            if c != self.root {
                chain.push(c);
            }
            cur = self.parent[c];
        }
        chain.reverse();
        chain
    }

    /// Is `a ⊆ b` as primes, i.e. `a` is an ancestor of (or equal to) `b`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        let mut cur = Some(b);
        while let Some(c) = cur {
            if c == a {
                return true;
            }
            cur = self.parent[c];
        }
        false
    }

    fn check(&self, s: &NodeSet) -> Result<()> {
        match s.iter().find(|&&i| i >= self.len()) {
            Some(i) => Err(Error::UnknownPrime(format!("#{i}"))),
            None => Ok(()),
        }
    }

    /// Closure under specialization: every prime containing a member of `s`.
    pub fn up_closure(&self, s: &NodeSet) -> Result<NodeSet> {
        self.check(s)?;
        let mut out = NodeSet::new();
        let mut stack: Vec<usize> = s.iter().copied().collect();
        while let Some(i) = stack.pop() {
            if out.insert(i) {
                stack.extend(self.children[i].iter().copied());
            }
        }
        Ok(out)
    }

    /// Closure under generization, which on a finite spectrum is the closure
    /// in the inverse topology.
    pub fn down_closure(&self, s: &NodeSet) -> Result<NodeSet> {
        self.check(s)?;
        let mut out = NodeSet::new();
        for &i in s {
            let mut cur = Some(i);
            while let Some(c) = cur {
                if !out.insert(c) {
                    break;
                }
                cur = self.parent[c];
            }
        }
        Ok(out)
    }

    pub fn inverse_closure(&self, s: &NodeSet) -> Result<NodeSet> {
        self.down_closure(s)
    }

    pub fn is_up_closed(&self, s: &NodeSet) -> Result<bool> {
        Ok(self.up_closure(s)? == *s)
    }

    /// Maximal elements of `s` with respect to the induced order.
    pub fn maximal_in(&self, s: &NodeSet) -> NodeSet {
        s.iter()
            .copied()
            .filter(|&i| !s.iter().any(|&j| j != i && self.le(i, j)))
            .collect()
    }

    /// Minimal elements of `s`.
    pub fn minimal_in(&self, s: &NodeSet) -> NodeSet {
        s.iter()
            .copied()
            .filter(|&i| !s.iter().any(|&j| j != i && self.le(j, i)))
            .collect()
    }

    /// Splitting-set test with an independent check of each characterization.
    pub fn splitting_report(&self, x: &NodeSet) -> Result<SplittingReport> {
        self.check(x)?;
        let up_closed = self.is_up_closed(x)?;
        let complement: NodeSet = (0..self.len()).filter(|i| !x.contains(i)).collect();
        // (i) a finite space is compact
        let complement_compact = true;
        // (ii) X open in the inverse topology: its complement is inverse-closed
        let open_in_inverse = self.inverse_closure(&complement)? == complement;
        // (iii) every nonzero prime of X blows up in the transform: the primes
        // surviving in the transform are the inverse closure of the complement
        let survivors = self.inverse_closure(&complement)?;
        let extends_to_unit = x.iter().all(|&p| p == self.root || !survivors.contains(&p));
        let is_splitting = up_closed && complement_compact && open_in_inverse && extends_to_unit;
        let agree = !up_closed || (complement_compact == open_in_inverse && open_in_inverse == extends_to_unit);
        Ok(SplittingReport { up_closed, complement_compact, open_in_inverse, extends_to_unit, is_splitting, agree })
    }

    pub fn is_splitting_set(&self, x: &NodeSet) -> Result<bool> {
        Ok(self.splitting_report(x)?.is_splitting)
    }

    /// Every up-closed subset, in a deterministic order.
    pub fn up_closed_sets(&self) -> Vec<NodeSet> {
        let n = self.len();
        assert!(n <= 20, "exhaustive enumeration is for small trees");
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let s: NodeSet = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            if self.is_up_closed(&s).unwrap() {
                out.push(s);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingReport {
    pub up_closed: bool,
    pub complement_compact: bool,
    pub open_in_inverse: bool,
    pub extends_to_unit: bool,
    pub is_splitting: bool,
    /// The three characterizations coincide (required whenever `up_closed`).
    pub agree: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ft1() -> FiniteTreeSpectrum {
        FiniteTreeSpectrum::new(
            &["r", "Q1", "Q2", "M1", "M2", "M3", "M4"],
            &[("Q1", "r"), ("Q2", "r"), ("M4", "r"), ("M1", "Q1"), ("M2", "Q1"), ("M3", "Q2")],
        )
        .unwrap()
    }

    fn set(t: &FiniteTreeSpectrum, names: &[&str]) -> NodeSet {
        names.iter().map(|n| t.index_of(&PrimeId::from(*n)).unwrap()).collect()
    }

    // reachability scan: j is above i iff walking parents from j hits i
    fn scan_up(t: &FiniteTreeSpectrum, s: &NodeSet) -> NodeSet {
        (0..t.len()).filter(|&j| s.iter().any(|&i| t.le(i, j))).collect()
    }

    #[test]
    fn up_closure_examples() {
        let t = ft1();
        let q1 = set(&t, &["Q1"]);
        assert_eq!(t.up_closure(&q1).unwrap(), set(&t, &["Q1", "M1", "M2"]));
        assert_eq!(t.up_closure(&q1).unwrap(), scan_up(&t, &q1));
        assert!(t.up_closure(&NodeSet::new()).unwrap().is_empty());
        let m4 = set(&t, &["M4"]);
        assert_eq!(t.up_closure(&m4).unwrap(), m4);
        assert!(matches!(t.up_closure(&[99].into()), Err(Error::UnknownPrime(_))));
    }

    #[test]
    fn inverse_closure_is_down_set() {
        let t = ft1();
        assert_eq!(t.inverse_closure(&set(&t, &["M1"])).unwrap(), set(&t, &["r", "Q1", "M1"]));
    }

    #[test]
    fn splitting_examples() {
        let t = ft1();
        assert!(t.is_splitting_set(&set(&t, &["Q1", "M1", "M2"])).unwrap());
        assert!(!t.is_splitting_set(&set(&t, &["Q1"])).unwrap());
        assert!(t.is_splitting_set(&t.maximal()).unwrap());
        for x in t.up_closed_sets() {
            let r = t.splitting_report(&x).unwrap();
            assert!(r.agree && r.is_splitting, "{x:?}");
        }
    }

    #[test]
    fn rejects_non_trees() {
        assert!(FiniteTreeSpectrum::new(&["a", "b"], &[] as &[(&str, &str)]).is_err());
        assert!(FiniteTreeSpectrum::new(&["a", "b", "c"], &[("b", "c"), ("c", "b")]).is_err());
        assert!(FiniteTreeSpectrum::new(&["a", "b"], &[("b", "a"), ("b", "a")]).is_err());
    }

    #[test]
    fn heights() {
        let t = ft1();
        assert_eq!(t.dim(), 2);
        assert_eq!(t.height(t.index_of(&"M4".into()).unwrap()), 1);
        assert_eq!(t.maximal().len(), 4);
    }
}
