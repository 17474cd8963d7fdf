//! Critical and bounded-critical points of a presented group.

use std::fmt;

use crate::error::Result;
use crate::ideal_core::{Base, IdealFunction, PresentedGroup, SearchBudget, Term};
use crate::spectra::{ClopenSet, Point, PointSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CritVerdict {
    /// A group element witnessing non-criticality.
    NonCritical(Term),
    CriticalWithinBudget(SearchBudget),
    Unknown,
}

impl CritVerdict {
    pub fn is_critical(&self) -> bool {
        matches!(self, CritVerdict::CriticalWithinBudget(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            CritVerdict::NonCritical(_) => "NonCritical",
            CritVerdict::CriticalWithinBudget(_) => "CriticalWithinBudget",
            CritVerdict::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for CritVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CritVerdict::NonCritical(t) => write!(f, "NonCritical {t}"),
            CritVerdict::CriticalWithinBudget(b) => write!(f, "CriticalWithinBudget {b}"),
            CritVerdict::Unknown => write!(f, "Unknown"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Witnesses are radical elements with value 1 at the point.
    Radical,
    /// Witnesses are bounded nonnegative elements with value at least 1.
    Bounded,
}

/// Group elements usable as witnesses, each paired with its certificate.
pub(crate) struct Witnesses {
    pub items: Vec<(Term, IdealFunction)>,
    pub complete: bool,
}

/// Moves a pool element into the witness shape by a base adjustment, if the
/// base allows it.
fn adjust(g: &PresentedGroup, f: &IdealFunction, kind: Kind) -> Option<IdealFunction> {
    match (g.base(), kind) {
        (Base::None, Kind::Radical) => f.is_radical().then(|| f.clone()),
        (Base::None, Kind::Bounded) => (f.is_nonnegative() && f.is_bounded()).then(|| f.clone()),
        (Base::CcIsolated, Kind::Radical) => f.snap_isolated(&[0, 1], 0).filter(IdealFunction::is_continuous),
        (Base::CcIsolated, Kind::Bounded) => f.clamp_isolated_nonnegative_bounded(),
        (Base::CcFull, _) => None,
    }
}

pub(crate) fn witnesses(g: &PresentedGroup, budget: SearchBudget, kind: Kind) -> Witnesses {
    let pool = g.enumerate_terms(budget);
    let mut items = Vec::new();
    for (t, f) in pool.items {
        if let Some(w) = adjust(g, &f, kind) {
            if w.sup() < crate::descriptor::Ext::Fin(1) {
                continue;
            }
            let h = g.base_adjustment(&w.sub(&f).expect("same space")).expect("adjustment lies in the base");
            items.push((Term::add(vec![t, h]), w));
        }
    }
    Witnesses { items, complete: pool.complete }
}

fn hits(kind: Kind, v: i64) -> bool {
    match kind {
        Kind::Radical => v == 1,
        Kind::Bounded => v >= 1,
    }
}

fn detect(g: &PresentedGroup, m: &Point, budget: SearchBudget, kind: Kind) -> Result<CritVerdict> {
    g.space().check(m)?;
    if g.base() == Base::CcFull {
        return Ok(CritVerdict::NonCritical(Term::chi(ClopenSet::basic_neighbourhood(g.space(), m)?)));
    }
    if g.base() == Base::CcIsolated && g.space().is_isolated(m) {
        return Ok(CritVerdict::NonCritical(Term::chi(ClopenSet::basic_neighbourhood(g.space(), m)?)));
    }
    let w = witnesses(g, budget, kind);
    for (t, f) in &w.items {
        if hits(kind, f.eval(m)?) {
            return Ok(CritVerdict::NonCritical(t.clone()));
        }
    }
    Ok(if w.complete { CritVerdict::CriticalWithinBudget(budget) } else { CritVerdict::Unknown })
}

/// Looks for a radical element of the group with value 1 at `m`.
pub fn detect_critical(g: &PresentedGroup, m: &Point, budget: SearchBudget) -> Result<CritVerdict> {
    detect(g, m, budget, Kind::Radical)
}

/// Looks for a bounded nonnegative element of the group with value at least
/// 1 at `m`.
pub fn detect_bounded_critical(g: &PresentedGroup, m: &Point, budget: SearchBudget) -> Result<CritVerdict> {
    detect(g, m, budget, Kind::Bounded)
}

/// The critical set of a group within a budget.
#[derive(Clone, Debug)]
pub struct CritLocus {
    pub critical: PointSet,
    /// False when the search was truncated, so the set may be too large.
    pub complete: bool,
    /// Verdicts at representative points: every limit point within the
    /// explicit region and one point of each uniform isolated orbit.
    pub verdicts: Vec<(Point, CritVerdict)>,
}

fn locus(g: &PresentedGroup, budget: SearchBudget, kind: Kind) -> Result<CritLocus> {
    let space = g.space();
    let full = PointSet::full(space);
    let (non_critical, complete, w) = match g.base() {
        Base::CcFull => (full.clone(), true, None),
        base => {
            let w = witnesses(g, budget, kind);
            let mut acc = match base {
                Base::CcIsolated => PointSet::limit_points(space).complement(),
                _ => PointSet::empty(space),
            };
            for (_, f) in &w.items {
                acc = acc.union(&PointSet::from_indicator(f.indicator(1, move |v| hits(kind, v)))?)?;
            }
            (acc, w.complete, Some(w))
        }
    };
    let critical = non_critical.complement();
    debug_assert!(critical.is_closed());

    let horizon = g.generators().iter().map(|(_, f)| f.horizon()).max().unwrap_or(0) + 2;
    let mut verdicts = Vec::new();
    for x in space.sample_points(horizon.min(12)) {
        let base_covers = match g.base() {
            Base::CcFull => true,
            Base::CcIsolated => space.is_isolated(&x),
            Base::None => false,
        };
        let v = if critical.contains(&x)? {
            if complete { CritVerdict::CriticalWithinBudget(budget) } else { CritVerdict::Unknown }
        } else if base_covers {
            CritVerdict::NonCritical(Term::chi(ClopenSet::basic_neighbourhood(space, &x)?))
        } else {
            let w = w.as_ref().expect("witnesses computed without a full base");
            let (t, _) = w.items.iter().find(|(_, f)| f.eval(&x).is_ok_and(|v| hits(kind, v))).expect("point is covered");
            CritVerdict::NonCritical(t.clone())
        };
        verdicts.push((x, v));
    }
    Ok(CritLocus { critical, complete, verdicts })
}

pub fn crit_locus(g: &PresentedGroup, budget: SearchBudget) -> Result<CritLocus> {
    locus(g, budget, Kind::Radical)
}

pub fn bounded_crit_locus(g: &PresentedGroup, budget: SearchBudget) -> Result<CritLocus> {
    locus(g, budget, Kind::Bounded)
}
