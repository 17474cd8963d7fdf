//! Shared test support: fixtures, random inputs and independent oracles.
#![allow(dead_code)]

pub mod slope;

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use radfact::descriptor::{Affine, Germ, Seq};
use radfact::ideal_core::{Conv, IdealFunction, Nested, PresentedGroup};
use radfact::model::Model;
use radfact::spectra::{BallSpace, FiniteTreeSpectrum, OrdinalSpace, Point, PrimeId, Space};

pub fn fixture(name: &str) -> Model {
    Model::load(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

pub fn group(name: &str) -> PresentedGroup {
    fixture(name).group().unwrap().clone()
}

pub fn ft1() -> Arc<FiniteTreeSpectrum> {
    fixture("FT1.json").tree().unwrap().clone()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn os1() -> Space {
    Space::Ordinal(OrdinalSpace::omega_plus_one())
}

pub fn os2() -> Space {
    Space::Ordinal(OrdinalSpace::omega_squared_plus_one())
}

pub fn bs(p: u64, depth: u32) -> Space {
    Space::Ball(BallSpace::new(p, depth).unwrap())
}

pub fn path(p: &[u64]) -> Point {
    Point::Path(p.to_vec())
}

// ---------------------------------------------------------------- random inputs

fn values(r: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..n).map(|_| r.gen_range(lo..=hi)).collect()
}

/// A continuous function on ω+1 with values in `lo..=hi`.
pub fn continuous_conv(r: &mut ChaCha8Rng, lo: i64, hi: i64) -> Conv {
    let limit = r.gen_range(lo..=hi);
    let k = r.gen_range(0..8);
    Conv::new(Seq::new(values(r, k, lo, hi), Germ::constant(limit)), limit)
}

/// A continuous function on ω²+1 with values in `lo..=hi`.
pub fn continuous_nested(r: &mut ChaCha8Rng, lo: i64, hi: i64) -> Nested {
    let top = r.gen_range(lo..=hi);
    let k = r.gen_range(0..5);
    let blocks: Vec<Conv> = (0..k).map(|_| continuous_conv(r, lo, hi)).collect();
    let lims = Seq::new(blocks.iter().map(|c| c.limit).collect(), Germ::constant(top));
    Nested::new(blocks.into_iter().map(|c| c.seq).collect(), Seq::constant(top), Conv::new(lims, top))
}

/// A random continuous function with values in `lo..=hi` on `space`.
pub fn continuous(r: &mut ChaCha8Rng, space: Space, lo: i64, hi: i64) -> IdealFunction {
    match space.finite_len() {
        Some(n) => IdealFunction::from_values(space, values(r, n as usize, lo, hi)).unwrap(),
        None if space == os1() => IdealFunction::from_conv(continuous_conv(r, lo, hi)),
        None => IdealFunction::from_nested(continuous_nested(r, lo, hi)),
    }
}

fn germ(r: &mut ChaCha8Rng) -> Germ {
    let period = r.gen_range(1..=3);
    Germ::new(
        (0..period)
            .map(|_| if r.gen_bool(0.4) { Affine::linear(r.gen_range(-2..=2), r.gen_range(-4..=4)) } else { Affine::constant(r.gen_range(-3..=3)) })
            .collect(),
    )
}

fn seq(r: &mut ChaCha8Rng) -> Seq {
    let k = r.gen_range(0..6);
    Seq::new(values(r, k, -4, 4), germ(r))
}

/// An arbitrary descriptor on ω+1 (periodic affine germs, random prefix).
pub fn any_conv(r: &mut ChaCha8Rng) -> Conv {
    Conv::new(seq(r), r.gen_range(-4..=4))
}

/// An arbitrary descriptor on ω²+1.
pub fn any_nested(r: &mut ChaCha8Rng) -> Nested {
    let k = r.gen_range(0..4);
    let blocks = (0..k).map(|_| seq(r)).collect();
    Nested::new(blocks, seq(r), any_conv(r))
}

pub fn any_function(r: &mut ChaCha8Rng, space: Space) -> IdealFunction {
    match space.finite_len() {
        Some(n) => IdealFunction::from_values(space, values(r, n as usize, -4, 4)).unwrap(),
        None if space == os1() => IdealFunction::from_conv(any_conv(r)),
        None => IdealFunction::from_nested(any_nested(r)),
    }
}

/// A random rooted tree with `n` nodes, labelled `p0` (the root) .. `p{n-1}`.
pub fn random_tree(r: &mut ChaCha8Rng, n: usize) -> Arc<FiniteTreeSpectrum> {
    let labels: Vec<PrimeId> = (0..n).map(|i| PrimeId::new(format!("p{i}"))).collect();
    let parent: Vec<Option<usize>> = (0..n).map(|i| if i == 0 { None } else { Some(r.gen_range(0..i)) }).collect();
    Arc::new(FiniteTreeSpectrum::from_parent_vec(labels, parent).unwrap())
}

// ---------------------------------------------------------------- oracles

/// Points at which two descriptors are compared by expansion: every index up
/// to `n` in every block up to `n`, plus every limit point there.
pub fn grid(space: Space, n: u64) -> Vec<Point> {
    space.sample_points(n)
}

/// Values at the grid points.
pub fn expand(f: &IdealFunction, n: u64) -> Vec<i64> {
    grid(*f.space(), n).iter().map(|x| f.eval(x).unwrap()).collect()
}

/// Every node whose parent chain meets `s`, by a direct walk.
pub fn up_scan(t: &FiniteTreeSpectrum, s: &[usize]) -> Vec<usize> {
    (0..t.len())
        .filter(|&b| {
            let mut cur = Some(b);
            while let Some(c) = cur {
                if s.contains(&c) {
                    return true;
                }
                cur = t.parent(c);
            }
            false
        })
        .collect()
}

/// Every ancestor-or-self of a member of `s`.
pub fn down_scan(t: &FiniteTreeSpectrum, s: &[usize]) -> Vec<usize> {
    (0..t.len()).filter(|&a| s.iter().any(|&b| up_scan(t, &[a]).contains(&b))).collect()
}

/// Lexicographic comparison of two integer vectors, written out by hand.
pub fn lex_cmp(a: &[i64], b: &[i64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    std::cmp::Ordering::Equal
}
