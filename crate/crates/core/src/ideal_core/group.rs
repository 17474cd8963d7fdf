//! Presented ℓ-groups of ideal functions and bounded membership search.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal_core::{IdealFunction, Term};
use crate::spectra::{ClopenAtom, ClopenSet, Point, PointSet, Space};

/// The part of the group that is always present regardless of generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    None,
    /// Finitely supported functions on isolated points.
    CcIsolated,
    /// All continuous functions.
    CcFull,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::None => "none",
            Base::CcIsolated => "cc_isolated",
            Base::CcFull => "cc_full",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_coefficient: i64,
    pub max_term_depth: usize,
}

impl SearchBudget {
    pub fn new(max_coefficient: i64, max_term_depth: usize) -> Result<Self> {
        if max_coefficient < 1 || max_term_depth < 1 {
            return Err(Error::Model("budget components must be at least 1".into()));
        }
        Ok(SearchBudget { max_coefficient, max_term_depth })
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_coefficient: 4, max_term_depth: 3 }
    }
}

impl fmt::Display for SearchBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.max_coefficient, self.max_term_depth)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipVerdict {
    Member(Term),
    /// No witness within the budget. `exact` marks a negative that holds for
    /// every budget.
    NonMemberWithinBudget { exact: bool },
    Unknown,
}

/// The distinct functions reachable by terms within a budget.
#[derive(Clone, Debug)]
pub struct TermPool {
    pub items: Vec<(Term, IdealFunction)>,
    /// False when the pool was truncated at its size cap.
    pub complete: bool,
}

const POOL_CAP: usize = 400;

#[derive(Clone, Debug)]
pub struct PresentedGroup {
    space: Space,
    base: Base,
    generators: Vec<(String, IdealFunction)>,
    /// Declared lifts per layer index of the critical sequence.
    sections: BTreeMap<usize, Vec<Term>>,
    samples: Vec<ClopenSet>,
}

impl PresentedGroup {
    pub fn new(space: Space, base: Base, generators: Vec<(String, IdealFunction)>) -> Result<Self> {
        for (label, g) in &generators {
            if *g.space() != space {
                return Err(Error::Model(format!("generator `{label}` lives on {} not {space}", g.space())));
            }
            if label == "0" || label.contains(['(', ')']) || label.chars().any(char::is_whitespace) {
                return Err(Error::Model(format!("generator label `{label}` is not a term symbol")));
            }
        }
        Ok(PresentedGroup { space, base, generators, sections: BTreeMap::new(), samples: vec![] })
    }

    pub fn with_sections(mut self, sections: BTreeMap<usize, Vec<Term>>) -> Self {
        self.sections = sections;
        self
    }

    pub fn with_samples(mut self, samples: Vec<ClopenSet>) -> Self {
        self.samples = samples;
        self
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn generators(&self) -> &[(String, IdealFunction)] {
        &self.generators
    }

    pub fn generator(&self, label: &str) -> Option<&IdealFunction> {
        self.generators.iter().find(|(l, _)| l == label).map(|(_, f)| f)
    }

    pub fn sections(&self) -> &BTreeMap<usize, Vec<Term>> {
        &self.sections
    }

    pub fn samples(&self) -> &[ClopenSet] {
        &self.samples
    }

    pub fn eval_term(&self, t: &Term) -> Result<IdealFunction> {
        t.eval(self.space, &|l| self.generator(l))
    }

    fn generators_continuous(&self) -> bool {
        self.generators.iter().all(|(_, g)| g.is_continuous())
    }

    /// Every function reachable by integer combinations of generators with
    /// coefficients bounded by the budget, closed under `depth` rounds of
    /// pairwise meets and joins.
    pub fn enumerate_terms(&self, budget: SearchBudget) -> TermPool {
        let c = budget.max_coefficient;
        let mut seen: HashMap<IdealFunction, usize> = HashMap::new();
        let mut items: Vec<(Term, IdealFunction)> = Vec::new();
        let mut complete = true;
        let mut push = |t: Term, f: IdealFunction, items: &mut Vec<(Term, IdealFunction)>| -> bool {
            if seen.contains_key(&f) {
                return true;
            }
            if items.len() >= POOL_CAP {
                return false;
            }
            seen.insert(f.clone(), items.len());
            items.push((t, f));
            true
        };

        let mut coeffs = vec![-c; self.generators.len()];
        loop {
            let mut acc = IdealFunction::zero(self.space);
            let mut parts = Vec::new();
            for ((label, g), k) in self.generators.iter().zip(&coeffs) {
                if *k != 0 {
                    acc = acc.add(&g.scale(*k)).expect("same space");
                    parts.push(Term::mul(*k, Term::gen(label)));
                }
            }
            complete &= push(Term::add(parts), acc, &mut items);
            if !advance(&mut coeffs, c) {
                break;
            }
        }

        for _ in 0..budget.max_term_depth {
            let before = items.len();
            let snapshot = items.clone();
            'outer: for (i, (ta, fa)) in snapshot.iter().enumerate() {
                for (tb, fb) in &snapshot[i + 1..] {
                    let m = fa.meet(fb).expect("same space");
                    let j = fa.join(fb).expect("same space");
                    let ok = push(Term::meet(ta.clone(), tb.clone()), m, &mut items)
                        && push(Term::join(ta.clone(), tb.clone()), j, &mut items);
                    if !ok {
                        complete = false;
                        break 'outer;
                    }
                }
            }
            if items.len() == before {
                break;
            }
        }
        TermPool { items, complete }
    }

    /// Whether `f - t` lies in the base, and the term for that difference.
    pub fn base_adjustment(&self, diff: &IdealFunction) -> Option<Term> {
        match self.base {
            Base::None => diff.is_zero().then_some(Term::Zero),
            Base::CcIsolated => {
                let pts = diff.isolated_support()?;
                Some(Term::add(pts.into_iter().map(|(x, v)| Term::mul(v, Term::chi(point_atom(x)))).collect()))
            }
            Base::CcFull => continuous_term(diff),
        }
    }

    pub fn membership(&self, f: &IdealFunction, budget: SearchBudget) -> Result<MembershipVerdict> {
        if *f.space() != self.space {
            return Err(Error::BackendMismatch);
        }
        if self.base == Base::CcFull && self.generators_continuous() {
            return Ok(match continuous_term(f) {
                Some(t) => MembershipVerdict::Member(t),
                None => MembershipVerdict::NonMemberWithinBudget { exact: true },
            });
        }
        let pool = self.enumerate_terms(budget);
        for (t, g) in &pool.items {
            if let Some(h) = self.base_adjustment(&f.sub(g)?) {
                return Ok(MembershipVerdict::Member(Term::add(vec![t.clone(), h])));
            }
        }
        Ok(if pool.complete {
            MembershipVerdict::NonMemberWithinBudget { exact: false }
        } else {
            MembershipVerdict::Unknown
        })
    }

    /// Checks a claimed membership certificate.
    pub fn verify_certificate(&self, f: &IdealFunction, t: &Term) -> Result<bool> {
        Ok(self.eval_term(t)? == *f && self.term_in_group(t))
    }

    /// True iff every leaf of the term is a generator or a base element.
    fn term_in_group(&self, t: &Term) -> bool {
        match t {
            Term::Zero => true,
            Term::Gen(g) => self.generator(g).is_some(),
            Term::Add(ts) => ts.iter().all(|t| self.term_in_group(t)),
            Term::Mul(_, t) => self.term_in_group(t),
            Term::Meet(a, b) | Term::Join(a, b) => self.term_in_group(a) && self.term_in_group(b),
            Term::Chi(c) => match self.base {
                Base::None => false,
                Base::CcFull => true,
                Base::CcIsolated => c.atoms.iter().all(|a| match a {
                    ClopenAtom::Point(x) => self.space.is_isolated(x),
                    _ => matches!(self.space, Space::Ball(_)),
                }),
            },
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (label, g) in &self.generators {
            if !g.is_nonnegative() {
                violations.push(format!("generator `{label}` takes negative values"));
            }
            if !g.is_lsc() {
                violations.push(format!("generator `{label}` is not lower semicontinuous"));
            }
        }
        let pool = self.enumerate_terms(SearchBudget { max_coefficient: 2, max_term_depth: 2 });
        let mut sampled = 0;
        for (t, g) in &pool.items {
            if g.is_nonnegative() {
                sampled += 1;
                if !g.is_lsc() {
                    violations.push(format!("nonnegative element {t} is not lower semicontinuous"));
                }
            }
        }
        ValidationReport { passed: violations.is_empty(), sampled, violations }
    }

    /// The group of restrictions to the set of limit points. The base kind is
    /// kept.
    pub fn restrict_to_derived(&self) -> Result<PresentedGroup> {
        let gens = self
            .generators
            .iter()
            .map(|(l, g)| Ok((l.clone(), g.restrict_to_derived()?)))
            .collect::<Result<Vec<_>>>()?;
        let space = match gens.first() {
            Some((_, g)) => *g.space(),
            None => IdealFunction::zero(self.space).restrict_to_derived()?.space().to_owned(),
        };
        PresentedGroup::new(space, self.base, gens)
    }

    /// The group of restrictions to finitely many points.
    pub fn restrict_to_points(&self, points: &[Point]) -> Result<PresentedGroup> {
        let gens = self
            .generators
            .iter()
            .map(|(l, g)| Ok((l.clone(), g.restrict_to_points(points)?)))
            .collect::<Result<Vec<_>>>()?;
        let space = IdealFunction::zero(self.space).restrict_to_points(points)?.space().to_owned();
        PresentedGroup::new(space, self.base, gens)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub passed: bool,
    pub sampled: usize,
    pub violations: Vec<String>,
}

fn advance(coeffs: &mut [i64], c: i64) -> bool {
    for k in coeffs.iter_mut() {
        if *k < c {
            *k += 1;
            return true;
        }
        *k = -c;
    }
    false
}

fn point_atom(x: Point) -> ClopenSet {
    ClopenSet::new(vec![ClopenAtom::Point(x)])
}

/// A term of indicator multiples for a continuous function, via its level
/// sets.
pub fn continuous_term(f: &IdealFunction) -> Option<Term> {
    if !f.is_continuous() {
        return None;
    }
    let (lo, hi) = (f.inf().finite()?, f.sup().finite()?);
    let mut parts = Vec::new();
    for t in 1..=hi {
        let set = PointSet::from_indicator(f.indicator(t, move |v| v >= t)).ok()?;
        parts.push(Term::chi(ClopenSet::from_set(&set)?));
    }
    for t in (lo..0).rev() {
        let set = PointSet::from_indicator(f.indicator(t, move |v| v <= t)).ok()?;
        parts.push(Term::mul(-1, Term::chi(ClopenSet::from_set(&set)?)));
    }
    Some(Term::add(parts))
}
