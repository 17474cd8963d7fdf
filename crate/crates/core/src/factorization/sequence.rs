//! The critical sequence `X_0 ⊇ X_1 ⊇ …`, SP-rank and the layer
//! decomposition of a presented group.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::factorization::{crit_locus, CritLocus};
use crate::ideal_core::{IdealFunction, MembershipVerdict, PresentedGroup, SearchBudget, Term};
use crate::spectra::{ClopenSet, OrdinalSpace, Point, PointSet, Space};

/// One restriction from a level to the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// Pass to the limit points of this space.
    Derived(OrdinalSpace),
    /// Pass to finitely many points, which form a discrete space.
    Points(Vec<Point>),
}

impl Step {
    fn restrict(&self, f: &IdealFunction) -> Result<IdealFunction> {
        match self {
            Step::Derived(_) => f.restrict_to_derived(),
            Step::Points(pts) => f.restrict_to_points(pts),
        }
    }

    fn restrict_group(&self, g: &PresentedGroup) -> Result<PresentedGroup> {
        match self {
            Step::Derived(_) => g.restrict_to_derived(),
            Step::Points(pts) => g.restrict_to_points(pts),
        }
    }

    fn forward(&self, x: &Point) -> Option<Point> {
        match (self, x) {
            (Step::Derived(o), Point::Path(p)) => o.to_derived(p).ok().map(Point::Path),
            (Step::Points(pts), x) => pts.iter().position(|y| y == x).map(|i| Point::Path(vec![i as u64 + 1])),
            _ => None,
        }
    }

    fn back(&self, x: &Point) -> Point {
        match (self, x) {
            (Step::Derived(o), Point::Path(p)) => Point::Path(o.derived_point(p).expect("point of the derived space")),
            (Step::Points(pts), Point::Path(p)) => pts[p[0] as usize - 1].clone(),
            _ => unreachable!("derived and finite levels are ordinal"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Level {
    /// The restricted group `G_α` on its own space.
    pub group: PresentedGroup,
    /// `X_α` described by points of the original space.
    pub label: String,
    /// Restrictions leading from the original space to this level.
    pub steps: Vec<Step>,
    pub locus: CritLocus,
}

impl Level {
    pub fn restrict(&self, f: &IdealFunction) -> Result<IdealFunction> {
        self.steps.iter().try_fold(f.clone(), |acc, s| s.restrict(&acc))
    }

    /// The level's copy of a point of the original space, if it survives.
    pub fn forward(&self, x: &Point) -> Option<Point> {
        self.steps.iter().try_fold(x.clone(), |acc, s| s.forward(&acc))
    }

    pub fn back(&self, x: &Point) -> Point {
        back_through(&self.steps, x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceStatus {
    /// Reached the empty set.
    Terminated,
    /// A level equals its own critical set.
    ModelViolatesNonCriticality,
    /// A truncated search left a nonempty critical set undecided.
    Unknown,
}

#[derive(Clone, Debug)]
pub struct CritSequenceResult {
    /// The nonempty levels `X_0, X_1, …`.
    pub levels: Vec<Level>,
    pub status: SequenceStatus,
    pub sp_rank: Option<usize>,
}

impl CritSequenceResult {
    /// Labels of the chain, ending in `∅` when the sequence terminated.
    pub fn chain_labels(&self) -> Vec<String> {
        let mut v: Vec<String> = self.levels.iter().map(|l| l.label.clone()).collect();
        if self.status == SequenceStatus::Terminated {
            v.push("∅".into());
        }
        v
    }
}

const MAX_LEVELS: usize = 8;

fn describe(orig: Space, steps: &[Step], space: Space) -> String {
    if steps.is_empty() {
        return orig.to_string();
    }
    let label = |x: &Point| orig.label(&back_through(steps, x));
    match space.finite_points() {
        Some(pts) => format!("{{{}}}", pts.iter().map(label).collect::<Vec<_>>().join(", ")),
        None => {
            let pts = [1, 2, 3].map(|n| Point::Path(vec![n]));
            let head: Vec<String> = pts.iter().map(label).collect();
            format!("{{{}, …, {}}}", head.join(", "), label(&Point::Path(vec![])))
        }
    }
}

fn back_through(steps: &[Step], x: &Point) -> Point {
    steps.iter().rev().fold(x.clone(), |acc, s| s.back(&acc))
}

pub fn crit_sequence(g: &PresentedGroup, budget: SearchBudget) -> Result<CritSequenceResult> {
    let orig = g.space();
    let mut levels = Vec::new();
    let mut group = g.clone();
    let mut steps: Vec<Step> = Vec::new();
    loop {
        let locus = crit_locus(&group, budget)?;
        let space = group.space();
        let label = describe(orig, &steps, space);
        let crit = locus.critical.clone();
        let complete = locus.complete;
        levels.push(Level { group: group.clone(), label, steps: steps.clone(), locus });
        if crit.is_empty() {
            let n = levels.len();
            return Ok(CritSequenceResult { levels, status: SequenceStatus::Terminated, sp_rank: Some(n) });
        }
        if !complete {
            return Ok(CritSequenceResult { levels, status: SequenceStatus::Unknown, sp_rank: None });
        }
        if crit == PointSet::full(space) {
            return Ok(CritSequenceResult { levels, status: SequenceStatus::ModelViolatesNonCriticality, sp_rank: None });
        }
        if !crit.is_closed() {
            return Err(Error::Model(format!("critical set {crit} is not closed")));
        }
        if levels.len() >= MAX_LEVELS {
            return Err(Error::UnsupportedSubspace("critical sequence longer than the supported depth".into()));
        }
        let step = match (space, crit.is_derived_set(), crit.finite_points()) {
            (Space::Ordinal(o), true, _) => Step::Derived(o),
            (_, _, Some(pts)) => Step::Points(pts),
            _ => return Err(Error::UnsupportedSubspace(crit.to_string())),
        };
        group = step.restrict_group(&group)?;
        steps.push(step);
    }
}

/// Largest `α` with `m ∈ X_α`, or `None` if the sequence did not terminate.
pub fn sp_height(g: &PresentedGroup, m: &Point, budget: SearchBudget) -> Result<Option<usize>> {
    g.space().check(m)?;
    let seq = crit_sequence(g, budget)?;
    if seq.status != SequenceStatus::Terminated {
        return Ok(None);
    }
    Ok(Some(seq.levels.iter().filter(|l| l.forward(m).is_some()).count() - 1))
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// `c_β` for each layer; their sum is the input.
    pub components: Vec<IdealFunction>,
    /// Section coefficients used at each layer, indexed by `β` (empty at `β = 0`).
    pub coefficients: Vec<Vec<(Term, i64)>>,
    pub membership: Term,
}

/// Splits a member `f` into layer components `c_0 + … + c_{γ-1}`, where
/// `c_β` vanishes on `X_{β+1}`.
pub fn decompose_inv(
    g: &PresentedGroup,
    f: &IdealFunction,
    budget: SearchBudget,
    seq: &CritSequenceResult,
) -> Result<Decomposition> {
    let membership = match g.membership(f, budget)? {
        MembershipVerdict::Member(t) => t,
        _ => return Err(Error::MembershipRequired),
    };
    match seq.status {
        SequenceStatus::Terminated => {}
        SequenceStatus::Unknown => return Err(Error::BudgetExhausted),
        SequenceStatus::ModelViolatesNonCriticality => {
            return Err(Error::Model("critical sequence stalls at a nonempty fixpoint".into()))
        }
    }
    let gamma = seq.levels.len();
    let mut components = vec![IdealFunction::zero(g.space()); gamma];
    let mut coefficients = vec![Vec::new(); gamma];
    let mut r = f.clone();
    for beta in (1..gamma).rev() {
        let level = &seq.levels[beta];
        let target = level.restrict(&r)?;
        if target.is_zero() {
            continue;
        }
        let terms = g.sections().get(&beta).ok_or(Error::NoSection(beta))?;
        let lifts = terms.iter().map(|t| g.eval_term(t)).collect::<Result<Vec<_>>>()?;
        let restricted = lifts.iter().map(|s| level.restrict(s)).collect::<Result<Vec<_>>>()?;
        let k = solve_integer(&restricted, &target).ok_or(Error::NoSection(beta))?;
        let mut c = IdealFunction::zero(g.space());
        for ((s, t), ki) in lifts.iter().zip(terms).zip(&k) {
            if *ki != 0 {
                c = c.add(&s.scale(*ki))?;
                coefficients[beta].push((t.clone(), *ki));
            }
        }
        r = r.sub(&c)?;
        components[beta] = c;
    }
    components[0] = r;
    Ok(Decomposition { components, coefficients, membership })
}

/// Integer `k` with `Σ k_i s_i = target`, checked exactly on descriptors.
fn solve_integer(sections: &[IdealFunction], target: &IdealFunction) -> Option<Vec<i64>> {
    let horizon = sections.iter().chain([target]).map(IdealFunction::horizon).max().unwrap_or(0) + 2;
    let pts = target.space().sample_points(horizon.min(16));
    let m = sections.len();
    let mut rows: Vec<Vec<Ratio<i128>>> = pts
        .iter()
        .map(|x| {
            let mut row: Vec<Ratio<i128>> = sections.iter().map(|s| Ratio::from(s.eval(x).unwrap() as i128)).collect();
            row.push(Ratio::from(target.eval(x).unwrap() as i128));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != Ratio::from(0)) else { continue };
        rows.swap(r, p);
        let lead = rows[r][c];
        for v in rows[r].iter_mut() {
            *v /= lead;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != Ratio::from(0) {
                let factor = row[c];
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v -= *p * factor;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| row[m] != Ratio::from(0)) {
        return None;
    }
    let mut k = vec![0i64; m];
    for (i, &c) in pivots.iter().enumerate() {
        let v = rows[i][m];
        if !v.is_integer() {
            return None;
        }
        k[c] = i64::try_from(v.to_integer()).ok()?;
    }
    let mut acc = IdealFunction::zero(*target.space());
    for (s, ki) in sections.iter().zip(&k) {
        acc = acc.add(&s.scale(*ki)).ok()?;
    }
    (acc == *target).then_some(k)
}

#[derive(Clone, Debug)]
pub struct DensityReport {
    pub passed: bool,
    /// Each sample with whether it meets the non-critical set.
    pub rows: Vec<(String, bool)>,
}

/// Checks that every sample clopen set meets the non-critical set.
pub fn density_check(g: &PresentedGroup, budget: SearchBudget, samples: &[ClopenSet]) -> Result<DensityReport> {
    let locus = crit_locus(g, budget)?;
    let good = locus.critical.complement();
    let mut rows = Vec::new();
    for c in samples {
        let s = c.to_set(g.space())?;
        rows.push((c.label(&g.space()), !s.intersection(&good)?.is_empty()));
    }
    Ok(DensityReport { passed: rows.iter().all(|r| r.1), rows })
}
