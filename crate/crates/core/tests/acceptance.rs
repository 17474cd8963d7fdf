//! Acceptance criteria 1–9, one PASS/FAIL line each.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use common::slope::{exhaust, is_single_slope, radical_witness_at_infinity};
use common::{bs, continuous, ft1, group, os1, os2, path, random_tree, rng};
use radfact::factorization::{
    crit_locus, crit_sequence, density_check, detect_bounded_critical, detect_critical, factor_radical,
    factor_recursive, radical_of, CritVerdict, SequenceStatus,
};
use radfact::finite_domain::{csd_decompose, enumerate_ideals, int_v_model, quotient_check, EIdeal};
use radfact::ideal_core::{Base, IdealFunction, MembershipVerdict, PresentedGroup, SearchBudget};
use radfact::spectra::{Point, PointSet, Space};
use radfact::Error;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn b53() -> SearchBudget {
    SearchBudget::new(5, 3).unwrap()
}

/// Σ_t χ_{X_t} at every sample point equals `f` there.
fn sums_exactly(sets: &[PointSet], f: &IdealFunction) -> bool {
    f.space().sample_points(25).iter().all(|x| {
        sets.iter().filter(|s| s.contains(x).unwrap()).count() as i64 == f.eval(x).unwrap()
    })
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    let mut inputs = vec![IdealFunction::from_values(bs(2, 2), vec![2, 1, 0, 3]).unwrap()];
    for (k, space) in [os1(), os2(), bs(2, 2), bs(3, 2)].into_iter().enumerate() {
        let mut r = rng(1000 + k as u64);
        inputs.extend((0..1000).map(|_| continuous(&mut r, space, 0, 8)));
    }
    for f in &inputs {
        let Ok(a) = factor_radical(f) else { return outcome(false, format!("factor_radical failed on {f}")) };
        let Ok(b) = factor_recursive(f) else { return outcome(false, format!("factor_recursive failed on {f}")) };
        let sound = a.is_descending()
            && a.sets.iter().all(PointSet::is_clopen)
            && a.sum(IdealFunction::zero(*f.space())) == *f
            && sums_exactly(&a.sets, f)
            && a.sets == b.sets;
        if !sound {
            return outcome(false, format!("unsound factorization of {f}"));
        }
        checked += 1;
    }
    outcome(true, format!("{checked} functions, exact integer equality"))
}

fn criterion_2() -> Outcome {
    let mut tested = 0;
    for (k, space) in [bs(2, 2), bs(2, 3), os1(), os2()].into_iter().enumerate() {
        let g = PresentedGroup::new(space, Base::CcFull, vec![]).unwrap();
        let mut r = rng(2000 + k as u64);
        for _ in 0..100 {
            let f = continuous(&mut r, space, 0, 8);
            let member = matches!(g.membership(&f, b53()).unwrap(), MembershipVerdict::Member(_));
            if !(member && f.is_continuous() && radical_of(&f).is_ok() && factor_radical(&f).is_ok()) {
                return outcome(false, format!("equivalence fails on {f}"));
            }
            tested += 1;
        }
    }
    let f = group("OS1.json").generator("f").unwrap().clone();
    let os1_ok = !f.is_continuous() && matches!(factor_radical(&f), Err(Error::NotContinuous));
    outcome(os1_ok, format!("{tested} cc_full members; OS1 f rejected with NotContinuous: {os1_ok}"))
}

fn criterion_3() -> Outcome {
    let g = group("OS1.json");
    let inf = path(&[]);
    let crit = detect_critical(&g, &inf, b53()).unwrap().is_critical();
    let bcrit = detect_bounded_critical(&g, &inf, b53()).unwrap().is_critical();
    let mut certified = 0;
    for n in 1..=30 {
        let x = path(&[n]);
        for v in [detect_critical(&g, &x, b53()).unwrap(), detect_bounded_critical(&g, &x, b53()).unwrap()] {
            let CritVerdict::NonCritical(t) = v else { return outcome(false, format!("point {n} not certified")) };
            let w = g.eval_term(&t).unwrap();
            if !(w.is_nonnegative() && w.is_bounded() && w.eval(&x).unwrap() >= 1) {
                return outcome(false, format!("bad certificate {t} at {n}"));
            }
            certified += 1;
        }
    }
    let pool = exhaust(10, 3);
    let oracle = pool.iter().all(is_single_slope) && radical_witness_at_infinity(&pool).is_none();
    outcome(
        crit && bcrit && oracle,
        format!(
            "∞ critical {crit}, bounded-critical {bcrit} at (5,3); {certified} isolated certificates; \
             slope oracle over {} terms (|c| ≤ 10, depth 3): {oracle}",
            pool.len()
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut ranks = Vec::new();
    for name in ["OS1.json", "OS2.json", "BS1.json"] {
        let s = crit_sequence(&group(name), b53()).unwrap();
        let strict = s.status == SequenceStatus::Terminated
            && s.levels.iter().all(|l| l.locus.critical.is_closed() && l.locus.critical != PointSet::full(l.group.space()))
            && s.levels.last().is_some_and(|l| l.locus.critical.is_empty());
        if !strict {
            return outcome(false, format!("{name}: chain not strictly decreasing to ∅"));
        }
        ranks.push(s.sp_rank);
    }
    let ok = ranks == [Some(2), Some(3), Some(1)];
    outcome(ok, format!("sp_rank OS1/OS2/BS1 = {ranks:?}, expected [2, 3, 1]"))
}

fn criterion_5() -> Outcome {
    let t = ft1();
    let sets = t.up_closed_sets();
    let in_max = sets.iter().filter(|x| x.is_subset(&t.maximal())).count();
    for x in &sets {
        let r = quotient_check(&t, x).unwrap();
        if !(r.passed && r.rank_inv_x + r.rank_quotient == 6) {
            return outcome(false, format!("{x:?}: {r:?}"));
        }
    }
    outcome(in_max == 16, format!("{} up-closed sets ({in_max} inside Max), ranks sum to 6", sets.len()))
}

fn criterion_6() -> Outcome {
    let c = csd_decompose(&ft1());
    if c.ranks() != [3, 3, 0] || c.total_rank != 6 {
        return outcome(false, format!("FT1 ranks {:?}", c.ranks()));
    }
    let mut r = rng(6000);
    for k in 0..200 {
        use rand::Rng;
        let n = r.gen_range(1..=8);
        let t = random_tree(&mut r, n);
        if csd_decompose(&t).total_rank != t.nonzero().len() {
            return outcome(false, format!("random tree {k} breaks rank count"));
        }
    }
    outcome(true, "FT1 ranks [3, 3, 0]; 200 random trees match nonzero-prime count")
}

fn criterion_7() -> Outcome {
    let t = ft1();
    let wide = enumerate_ideals(&t, -2, 2);
    let mut seen = HashSet::new();
    for i in &wide {
        let (j, l) = i.jl_decompose();
        let jl = j.is_integral()
            && l.is_integral()
            && j.product(&l.inverse()).unwrap() == *i
            && j.support().is_subset(&i.support())
            && l.support().is_subset(&i.support());
        let family: Vec<Vec<i64>> = t.maximal().into_iter().map(|m| i.localize_at(m)).collect();
        if !jl || !seen.insert(family) {
            return outcome(false, format!("unary law fails at {i}"));
        }
    }
    let narrow = enumerate_ideals(&t, -1, 1);
    let mut pairs = 0;
    for i in &narrow {
        for j in &narrow {
            let p = i.product(j).unwrap();
            let additive = t.maximal().into_iter().all(|m| {
                let (a, b, c) = (i.localize_at(m), j.localize_at(m), p.localize_at(m));
                c.iter().zip(a.iter().zip(&b)).all(|(z, (x, y))| *z == x + y)
            });
            let sub = p.support().is_subset(&i.support().union(&j.support()).copied().collect());
            if !additive || !sub {
                return outcome(false, format!("pair law fails at {i}, {j}"));
            }
            pairs += 1;
        }
    }
    // convexity on every up-closed X via the sandwich I ⊆ I ∩ J... ⊆ L
    let mut triples = 0;
    for x in t.up_closed_sets() {
        let inv_x: Vec<&EIdeal> = narrow.iter().filter(|i| i.support().is_subset(&x)).collect();
        for (k, i) in inv_x.iter().enumerate().step_by(7) {
            for l in inv_x.iter().skip(k % 5).step_by(11) {
                if !l.contains(i).unwrap() {
                    continue;
                }
                for j in narrow.iter().step_by(13) {
                    if j.contains(i).unwrap() && l.contains(j).unwrap() {
                        if !j.support().is_subset(&x) {
                            return outcome(false, format!("convexity fails: {i} ⊆ {j} ⊆ {l}"));
                        }
                        triples += 1;
                    }
                }
            }
        }
    }
    let fn_ok = function_laws();
    outcome(
        fn_ok && triples > 0,
        format!(
            "FT1: {} ideals in [-2,2] (jl, Ψ-injectivity), {pairs} pairs in [-1,1] (ν-additivity, support), \
             {triples} convexity triples; randomized function laws: {fn_ok}",
            wide.len()
        ),
    )
}

fn function_laws() -> bool {
    let spaces: [Space; 3] = [os1(), os2(), bs(3, 2)];
    let mut r = rng(7000);
    spaces.iter().all(|&space| {
        (0..200).all(|_| {
            let (f, g) = (common::any_function(&mut r, space), common::any_function(&mut r, space));
            let s = f.add(&g).unwrap();
            let additive = space.sample_points(15).iter().all(|x| s.eval(x).unwrap() == f.eval(x).unwrap() + g.eval(x).unwrap());
            let sub = s.support().is_subset(&f.support().union(&g.support()).unwrap()).unwrap();
            let inj = s.sub(&g).unwrap() == f;
            additive && sub && inj
        })
    })
}

fn criterion_8() -> Outcome {
    let mut rows = 0;
    for name in ["OS1.json", "OS2.json", "BS1.json"] {
        let g = group(name);
        let r = density_check(&g, b53(), g.samples()).unwrap();
        if !r.passed {
            return outcome(false, format!("{name}: {:?}", r.rows));
        }
        rows += r.rows.len();
    }
    outcome(true, format!("{rows} sample clopen sets meet the non-critical set"))
}

fn criterion_9() -> Outcome {
    let m = int_v_model(2, 3).unwrap();
    let names: Vec<&str> = m.layers.iter().map(|l| l.name).collect();
    let shape = names == ["Y_0", "Y_1", "Y_2", "Y_3"] && m.unitary_rank == 8;
    let g = group("INTV.json");
    let crit_empty = crit_locus(&g, b53()).unwrap().critical.is_empty();
    let space = Space::Ball(m.unitary);
    let mut r = rng(9000);
    let factored = (0..1000).all(|_| {
        let f = continuous(&mut r, space, 0, 8);
        factor_radical(&f).is_ok_and(|a| a.sum(IdealFunction::zero(space)) == f)
    });
    let leaves_ok = (0..8).all(|l| g.space().check(&Point::Leaf(l)).is_ok());
    outcome(
        shape && crit_empty && factored && leaves_ok,
        format!("layers {names:?}, unitary rank {} = 2^3, crit empty {crit_empty}, 1000 factorizations {factored}", m.unitary_rank),
    )
}

#[test]
fn acceptance() {
    type Check = fn() -> Outcome;
    let criteria: [(Check, Option<u64>); 9] = [
        (criterion_1, Some(5)),
        (criterion_2, None),
        (criterion_3, Some(10)),
        (criterion_4, None),
        (criterion_5, Some(1)),
        (criterion_6, None),
        (criterion_7, None),
        (criterion_8, None),
        (criterion_9, Some(5)),
    ];
    let mut failed = Vec::new();
    for (k, (check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let took = start.elapsed();
        let in_time = limit.is_none_or(|s| took <= Duration::from_secs(s));
        let ok = o.ok && in_time;
        let limit = limit.map_or(String::new(), |s| format!(", limit {s} s"));
        println!(
            "criterion {}: {} ({}; {:.2} s{limit})",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            o.detail,
            took.as_secs_f64()
        );
        if !ok {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
