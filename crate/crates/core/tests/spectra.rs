mod common;

use std::collections::BTreeSet;

use common::{any_function, ft1, os1, os2, path, random_tree, rng, up_scan, down_scan};
use proptest::prelude::*;
use radfact::spectra::{
    BallSpace, ClopenAtom, ClopenSet, FiniteTreeSpectrum, NodeSet, OrdinalSpace, Point, PointSet, PrimeId, Space,
};
use radfact::Error;

fn names(t: &FiniteTreeSpectrum, s: &[&str]) -> NodeSet {
    s.iter().map(|n| t.index_of(&PrimeId::new(*n)).unwrap()).collect()
}

#[test]
fn ft1_closures() {
    let t = ft1();
    assert_eq!(t.up_closure(&names(&t, &["Q1"])).unwrap(), names(&t, &["Q1", "M1", "M2"]));
    assert_eq!(t.up_closure(&NodeSet::new()).unwrap(), NodeSet::new());
    assert_eq!(t.up_closure(&names(&t, &["M4"])).unwrap(), names(&t, &["M4"]));
    assert_eq!(t.inverse_closure(&names(&t, &["M1"])).unwrap(), names(&t, &["r", "Q1", "M1"]));
    let oracle: NodeSet = up_scan(&t, &[t.index_of(&PrimeId::new("Q1")).unwrap()]).into_iter().collect();
    assert_eq!(oracle, names(&t, &["Q1", "M1", "M2"]));
}

#[test]
fn unknown_prime_is_rejected() {
    let t = ft1();
    assert!(matches!(t.index_of(&PrimeId::new("Z")), Err(Error::UnknownPrime(_))));
    assert!(matches!(t.up_closure(&NodeSet::from([99])), Err(Error::UnknownPrime(_))));
}

#[test]
fn non_trees_are_rejected() {
    let two_roots = FiniteTreeSpectrum::new(&["a", "b"], &[]);
    assert!(matches!(two_roots, Err(Error::InvalidTree(_))));
    let cycle = FiniteTreeSpectrum::new(&["r", "a", "b"], &[("a", "b"), ("b", "a")]);
    assert!(matches!(cycle, Err(Error::InvalidTree(_))));
}

#[test]
fn ft1_splitting_sets() {
    let t = ft1();
    assert!(t.is_splitting_set(&names(&t, &["Q1", "M1", "M2"])).unwrap());
    assert!(!t.is_splitting_set(&names(&t, &["Q1"])).unwrap());
    assert!(t.is_splitting_set(&t.maximal()).unwrap());
    for x in t.up_closed_sets() {
        let r = t.splitting_report(&x).unwrap();
        assert!(r.is_splitting && r.agree, "{x:?}");
    }
}

#[test]
fn cb_derivatives() {
    let os1 = OrdinalSpace::omega_plus_one();
    let os2 = OrdinalSpace::omega_squared_plus_one();
    assert_eq!(os1.cb_derivative().unwrap().finite_len(), Some(1));
    assert_eq!(os2.cb_derivative().unwrap(), os1);
    assert!(matches!(OrdinalSpace::discrete(3).cb_derivative(), Err(Error::RankZero)));
    // rank + 1 steps reach the empty space
    for s in [os1, os2] {
        let mut cur = Some(s);
        let mut steps = 0;
        while let Some(c) = cur {
            cur = c.cb_derivative().ok();
            steps += 1;
        }
        assert_eq!(steps, s.rank() as usize + 1);
    }
}

#[test]
fn tail_membership() {
    let c = ClopenSet::new(vec![ClopenAtom::Tail { prefix: vec![], from: 5 }]).to_set(os1()).unwrap();
    assert!(c.contains(&path(&[7])).unwrap());
    assert!(!c.contains(&path(&[3])).unwrap());
    assert!(c.contains(&path(&[])).unwrap());
    assert!(c.is_clopen());
}

#[test]
fn isolated_points_close_to_everything() {
    let iso = PointSet::full(os1()).intersection(&PointSet::limit_points(os1()).complement()).unwrap();
    assert!(!iso.is_closed());
    assert_eq!(iso.closure(), PointSet::full(os1()));
}

#[test]
fn ball_points_are_closed() {
    let b = Space::Ball(BallSpace::new(2, 2).unwrap());
    let leaf = b.parse_point("00").unwrap();
    let s = PointSet::from_indicator(radfact::ideal_core::IdealFunction::indicator_of(b, std::slice::from_ref(&leaf)).unwrap())
        .unwrap();
    assert_eq!(s.closure(), s);
    assert!(s.is_clopen());
}

/// Closure on the ordinal backends, decided by scanning well past every
/// prefix and period the random descriptors use.
fn closure_oracle(s: &PointSet, x: &Point) -> bool {
    let has = |p: &[u64]| s.contains(&path(p)).unwrap();
    let Point::Path(p) = x else { unreachable!() };
    if has(p) {
        return true;
    }
    let far = 12..40;
    match (s.space().finite_len(), p.len(), *s.space() == os1()) {
        (_, 0, true) => far.clone().any(|n| has(&[n])),
        (_, 1, false) => far.clone().any(|n| has(&[p[0], n])),
        (_, 0, false) => far.clone().any(|i| has(&[i]) || far.clone().any(|n| has(&[i, n]))),
        _ => false,
    }
}

fn random_set(seed: u64, space: Space) -> PointSet {
    PointSet::cozero(&any_function(&mut rng(seed), space))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn up_closure_laws(seed in any::<u64>(), bits in any::<u8>()) {
        let mut r = rng(seed);
        let t = random_tree(&mut r, 2 + (seed % 7) as usize);
        let s: NodeSet = (0..t.len()).filter(|i| bits >> i & 1 == 1).collect();
        let u = t.up_closure(&s).unwrap();
        prop_assert!(s.is_subset(&u));
        prop_assert_eq!(&t.up_closure(&u).unwrap(), &u);
        let v: Vec<usize> = s.iter().copied().collect();
        prop_assert_eq!(u.iter().copied().collect::<Vec<_>>(), up_scan(&t, &v));
        let d = t.down_closure(&s).unwrap();
        prop_assert_eq!(d.iter().copied().collect::<Vec<_>>(), down_scan(&t, &v));
        // monotone: dropping an element can only shrink the closure
        if let Some(&m) = s.iter().next() {
            let mut smaller = s.clone();
            smaller.remove(&m);
            prop_assert!(t.up_closure(&smaller).unwrap().is_subset(&u));
        }
        let r = t.splitting_report(&s).unwrap();
        prop_assert_eq!(r.is_splitting, t.is_up_closed(&s).unwrap());
        prop_assert!(r.agree);
    }

    #[test]
    fn inverse_closed_iff_down_closed(seed in any::<u64>(), bits in any::<u8>()) {
        let t = random_tree(&mut rng(seed), 8);
        let s: BTreeSet<usize> = (0..t.len()).filter(|i| bits >> i & 1 == 1).collect();
        let closed = t.inverse_closure(&s).unwrap() == s;
        let down = s.iter().all(|&b| (0..t.len()).all(|a| !t.le(a, b) || s.contains(&a)));
        prop_assert_eq!(closed, down);
    }

    #[test]
    fn kuratowski_on_ordinals(a in any::<u64>(), b in any::<u64>(), two in any::<bool>()) {
        let space = if two { os2() } else { os1() };
        let (s, t) = (random_set(a, space), random_set(b, space));
        let cs = s.closure();
        prop_assert!(s.is_subset(&cs).unwrap());
        prop_assert_eq!(&cs.closure(), &cs);
        prop_assert_eq!(s.union(&t).unwrap().closure(), cs.union(&t.closure()).unwrap());
        prop_assert_eq!(PointSet::empty(space).closure(), PointSet::empty(space));
        for x in space.sample_points(15) {
            prop_assert_eq!(cs.contains(&x).unwrap(), closure_oracle(&s, &x), "{:?}", x);
        }
    }

    #[test]
    fn clopen_round_trip(a in any::<u64>(), two in any::<bool>()) {
        let space = if two { os2() } else { os1() };
        let s = random_set(a, space);
        match ClopenSet::from_set(&s) {
            Some(c) => prop_assert_eq!(c.to_set(space).unwrap(), s),
            None => prop_assert!(!s.is_closed() || !s.is_open()),
        }
    }
}
