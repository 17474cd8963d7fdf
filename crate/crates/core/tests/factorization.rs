mod common;

use common::{bs, continuous, continuous_conv, group, os1, os2, path, rng};
use proptest::prelude::*;
use radfact::descriptor::{Affine, Germ, Seq};
use radfact::factorization::{
    bounded_crit_locus, crit_locus, crit_sequence, decompose_inv, density_check, detect_bounded_critical,
    detect_critical, factor_radical, factor_recursive, radical_of, sp_height, CritVerdict, SequenceStatus,
};
use radfact::ideal_core::{Base, Conv, Nested, IdealFunction, MembershipVerdict, PresentedGroup, SearchBudget};
use radfact::spectra::{ClopenAtom, ClopenSet, Point, PointSet, Space};
use radfact::Error;

fn b53() -> SearchBudget {
    SearchBudget::new(5, 3).unwrap()
}

fn bs1(v: &[i64]) -> IdealFunction {
    IdealFunction::from_values(bs(2, 2), v.to_vec()).unwrap()
}

fn leaves(space: Space, names: &[&str]) -> PointSet {
    let pts: Vec<Point> = names.iter().map(|n| space.parse_point(n).unwrap()).collect();
    PointSet::from_indicator(IdealFunction::indicator_of(space, &pts).unwrap()).unwrap()
}

/// Σ_t χ_{X_t} evaluated pointwise, independent of `RadicalFactorization::sum`.
fn pointwise_sum(sets: &[PointSet], x: &Point) -> i64 {
    sets.iter().filter(|s| s.contains(x).unwrap()).count() as i64
}

#[test]
fn radical_of_examples() {
    let b = radical_of(&bs1(&[2, 1, 0, 3])).unwrap();
    assert_eq!(b.as_values().unwrap(), &[1, 1, 0, 1]);
    let f = group("OS1.json").generator("f").unwrap().clone();
    assert_eq!(radical_of(&f).unwrap(), IdealFunction::constant(os1(), 1));
    let evens = IdealFunction::from_conv(Conv::new(
        Seq::new(vec![], Germ::new(vec![Affine::constant(0), Affine::constant(2)])),
        0,
    ));
    assert!(matches!(radical_of(&evens), Err(Error::RadicalNotFinitelyGenerated(_))));
}

#[test]
fn factor_examples() {
    let space = bs(2, 2);
    let f = bs1(&[2, 1, 0, 3]);
    let fac = factor_radical(&f).unwrap();
    assert_eq!(fac.sets, vec![leaves(space, &["00", "10", "11"]), leaves(space, &["00", "11"]), leaves(space, &["11"])]);
    for (name, want) in [("00", 2), ("10", 1), ("01", 0), ("11", 3)] {
        assert_eq!(pointwise_sum(&fac.sets, &space.parse_point(name).unwrap()), want);
    }
    assert_eq!(factor_recursive(&f).unwrap().sets, fac.sets);

    let tail = ClopenSet::new(vec![ClopenAtom::Tail { prefix: vec![], from: 5 }]).to_set(os1()).unwrap();
    let single = factor_radical(tail.indicator()).unwrap();
    assert_eq!(single.sets, vec![tail.clone()]);
    assert_eq!(factor_recursive(tail.indicator()).unwrap().sets, vec![tail]);
    assert!(factor_recursive(&IdealFunction::zero(os2())).unwrap().is_empty());

    let f = group("OS1.json").generator("f").unwrap().clone();
    assert!(matches!(factor_radical(&f), Err(Error::NotContinuous)));
    assert!(matches!(factor_recursive(&f), Err(Error::NotContinuous)));
}

#[test]
fn detect_examples() {
    let b = group("BS1.json");
    for l in 0..4 {
        let v = detect_critical(&b, &Point::Leaf(l), b53()).unwrap();
        let CritVerdict::NonCritical(t) = v else { panic!("{v:?}") };
        assert_eq!(b.eval_term(&t).unwrap().eval(&Point::Leaf(l)).unwrap(), 1);
        assert!(!detect_bounded_critical(&b, &Point::Leaf(l), b53()).unwrap().is_critical());
    }
    let g = group("OS1.json");
    assert!(detect_critical(&g, &path(&[]), b53()).unwrap().is_critical());
    assert!(detect_bounded_critical(&g, &path(&[]), b53()).unwrap().is_critical());
    for d in [detect_critical(&g, &path(&[7]), b53()).unwrap(), detect_bounded_critical(&g, &path(&[7]), b53()).unwrap()] {
        let CritVerdict::NonCritical(t) = d else { panic!("{d:?}") };
        let w = g.eval_term(&t).unwrap();
        assert_eq!(w, IdealFunction::from_conv(Conv::new(Seq::new(vec![0, 0, 0, 0, 0, 0, 1], Germ::constant(0)), 0)));
    }
    assert!(matches!(detect_critical(&g, &path(&[1, 1]), b53()), Err(Error::UnknownPoint(_))));
}

#[test]
fn locus_examples() {
    let l1 = crit_locus(&group("OS1.json"), b53()).unwrap();
    assert!(l1.complete);
    assert_eq!(l1.critical, PointSet::limit_points(os1()));
    assert!(crit_locus(&group("BS1.json"), b53()).unwrap().critical.is_empty());
    let l2 = crit_locus(&group("OS2.json"), b53()).unwrap();
    assert!(l2.critical.is_derived_set());
    assert!(l2.critical.is_closed());
}

#[test]
fn sequence_examples() {
    let s1 = crit_sequence(&group("OS1.json"), b53()).unwrap();
    assert_eq!((s1.status, s1.sp_rank), (SequenceStatus::Terminated, Some(2)));
    assert_eq!(s1.chain_labels(), vec!["ω+1", "{inf}", "∅"]);
    let s2 = crit_sequence(&group("OS2.json"), b53()).unwrap();
    assert_eq!(s2.sp_rank, Some(3));
    assert_eq!(s2.chain_labels().len(), 4);
    let sb = crit_sequence(&group("BS1.json"), b53()).unwrap();
    assert_eq!(sb.sp_rank, Some(1));
    for s in [&s1, &s2, &sb] {
        for level in &s.levels {
            assert!(level.locus.critical.is_closed());
            assert_ne!(level.locus.critical, PointSet::full(level.group.space()));
        }
        assert!(s.levels.last().unwrap().locus.critical.is_empty());
    }
}

#[test]
fn heights() {
    let (g1, g2) = (group("OS1.json"), group("OS2.json"));
    assert_eq!(sp_height(&g1, &path(&[3]), b53()).unwrap(), Some(0));
    assert_eq!(sp_height(&g1, &path(&[]), b53()).unwrap(), Some(1));
    assert_eq!(sp_height(&g2, &path(&[]), b53()).unwrap(), Some(2));
    assert_eq!(sp_height(&g2, &path(&[4]), b53()).unwrap(), Some(1));
    assert_eq!(sp_height(&g2, &path(&[4, 2]), b53()).unwrap(), Some(0));
}

#[test]
fn fixpoint_is_reported() {
    // a lone unbounded generator with no base: nothing is ever radical
    let f = group("OS1.json").generator("f").unwrap().clone();
    let g = PresentedGroup::new(os1(), Base::None, vec![("f".into(), f)]).unwrap();
    let s = crit_sequence(&g, SearchBudget::new(2, 1).unwrap()).unwrap();
    assert_eq!(s.status, SequenceStatus::ModelViolatesNonCriticality);
    assert_eq!(s.sp_rank, None);
}

#[test]
fn decompose_examples() {
    let g = group("OS1.json");
    let seq = crit_sequence(&g, b53()).unwrap();
    let f = g.generator("f").unwrap().clone();
    let d = decompose_inv(&g, &f, b53(), &seq).unwrap();
    assert!(d.components[0].is_zero());
    assert_eq!(d.components[1], f);
    let chi3 = IdealFunction::from_conv(Conv::new(Seq::new(vec![0, 0, 1], Germ::constant(0)), 0));
    let d = decompose_inv(&g, &chi3, b53(), &seq).unwrap();
    assert_eq!(d.components[0], chi3);
    assert!(d.components[1..].iter().all(IdealFunction::is_zero));

    let b = group("BS1.json");
    let seq = crit_sequence(&b, b53()).unwrap();
    let f = bs1(&[2, 1, 0, 3]);
    assert_eq!(decompose_inv(&b, &f, b53(), &seq).unwrap().components, vec![f]);

    let tail = ClopenSet::new(vec![ClopenAtom::Tail { prefix: vec![], from: 2 }]).to_set(os1()).unwrap();
    let seq = crit_sequence(&g, b53()).unwrap();
    assert!(matches!(decompose_inv(&g, tail.indicator(), b53(), &seq), Err(Error::MembershipRequired)));
}

#[test]
fn density_examples() {
    for name in ["OS1.json", "OS2.json", "BS1.json"] {
        let g = group(name);
        let r = density_check(&g, b53(), g.samples()).unwrap();
        assert!(r.passed && !r.rows.is_empty(), "{name}: {:?}", r.rows);
    }
}

/// `a·f` plus a random finitely supported function on isolated points.
fn member(seed: u64, g: &PresentedGroup) -> IdealFunction {
    let mut r = rng(seed);
    let space = g.space();
    let mut c = continuous_conv(&mut r, -3, 3);
    c = Conv::new(Seq::new(c.seq.prefix().to_vec(), Germ::constant(0)), 0);
    let iso = if space == os1() {
        IdealFunction::from_conv(c)
    } else {
        // the same values in block 2 of ω²+1
        IdealFunction::from_nested(Nested::new(vec![Seq::zero(), c.seq], Seq::zero(), Conv::constant(0)))
    };
    let a = (seed % 5) as i64 - 2;
    g.generator("f").unwrap().scale(a).add(&iso).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorization_soundness(a in any::<u64>(), which in 0..3usize) {
        let space = [os1(), os2(), bs(3, 2)][which];
        let f = continuous(&mut rng(a), space, 0, 8);
        let fac = factor_radical(&f).unwrap();
        prop_assert!(fac.is_descending());
        prop_assert!(fac.sets.iter().all(PointSet::is_clopen));
        for x in space.sample_points(25) {
            prop_assert_eq!(pointwise_sum(&fac.sets, &x), f.eval(&x).unwrap());
        }
        prop_assert_eq!(&fac.sum(IdealFunction::zero(space)), &f);
        prop_assert_eq!(factor_recursive(&f).unwrap().sets, fac.sets);
    }

    #[test]
    fn equivalence_on_cc_full(a in any::<u64>(), which in 0..3usize) {
        let space = [os1(), os2(), bs(2, 3)][which];
        let g = PresentedGroup::new(space, Base::CcFull, vec![]).unwrap();
        let f = continuous(&mut rng(a), space, 0, 8);
        let certified = matches!(g.membership(&f, b53()).unwrap(), MembershipVerdict::Member(_));
        prop_assert!(certified && f.is_continuous());
        prop_assert!(radical_of(&f).is_ok() && factor_radical(&f).is_ok());
        prop_assert!(f.is_bounded());
        prop_assert!(bounded_crit_locus(&g, b53()).unwrap().critical.is_empty());
    }

    #[test]
    fn kernel_elements_are_members(a in any::<u64>()) {
        // continuous with value 0 at ∞ means finitely supported on isolated points
        let mut c = continuous_conv(&mut rng(a), -4, 4);
        c = Conv::new(Seq::new(c.seq.prefix().to_vec(), Germ::constant(0)), 0);
        let k = IdealFunction::from_conv(c);
        let g = group("OS1.json");
        let v = g.membership(&k, SearchBudget::new(1, 1).unwrap()).unwrap();
        prop_assert!(matches!(&v, MembershipVerdict::Member(t) if g.verify_certificate(&k, t).unwrap()), "{:?}", v);
        let seq = crit_sequence(&g, b53()).unwrap();
        prop_assert!(seq.levels[1].restrict(&k).unwrap().is_zero());
    }

    #[test]
    fn decompose_round_trip(a in any::<u64>(), two in any::<bool>()) {
        let g = group(if two { "OS2.json" } else { "OS1.json" });
        let seq = crit_sequence(&g, b53()).unwrap();
        let f = member(a, &g);
        let d = decompose_inv(&g, &f, b53(), &seq).unwrap();
        let total = d.components.iter().try_fold(IdealFunction::zero(g.space()), |acc, c| acc.add(c)).unwrap();
        prop_assert_eq!(total, f);
        for (beta, c) in d.components.iter().enumerate() {
            if let Some(next) = seq.levels.get(beta + 1) {
                prop_assert!(next.restrict(c).unwrap().is_zero(), "component {} survives", beta);
            }
        }
    }
}
