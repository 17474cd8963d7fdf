//! Integer-valued functions on a maximal space, the carriers of ideal
//! functions `ν_I`.

use std::fmt;

use serde_json::{json, Value};

use crate::descriptor::{Affine, Ext, Germ, Seq};
use crate::error::{Error, Result};
use crate::spectra::{OrdinalSpace, Point, PointSet, Space};

/// A function on `ω+1`: values on the isolated points and at the limit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Conv {
    pub seq: Seq,
    pub limit: i64,
}

impl Conv {
    pub fn new(seq: Seq, limit: i64) -> Self {
        Conv { seq, limit }
    }

    pub fn constant(c: i64) -> Self {
        Conv { seq: Seq::constant(c), limit: c }
    }

    fn zip(&self, o: &Conv, s: impl Fn(&Seq, &Seq) -> Seq, v: impl Fn(i64, i64) -> i64) -> Conv {
        Conv { seq: s(&self.seq, &o.seq), limit: v(self.limit, o.limit) }
    }

    fn is_lsc(&self) -> bool {
        self.seq.liminf() >= Ext::Fin(self.limit)
    }

    fn is_continuous(&self) -> bool {
        self.seq.germ().eventual_constant() == Some(self.limit)
    }

    fn inf(&self) -> Ext {
        self.seq.inf().min(Ext::Fin(self.limit))
    }

    fn sup(&self) -> Ext {
        self.seq.sup().max(Ext::Fin(self.limit))
    }

    fn closure_of_indicator(&self) -> Conv {
        let acc = self.seq.limsup() >= Ext::Fin(1);
        Conv { seq: self.seq.clone(), limit: (self.limit != 0 || acc) as i64 }
    }

    fn is_zero(&self) -> bool {
        self.limit == 0 && self.seq.is_zero()
    }
}

/// A function on `ω²+1`.
///
/// Block `i` carries the isolated values `blocks[i-1]` (or `tail` once past
/// the explicit blocks). The block limits `ℓ_i` and `top` form a function on
/// `ω+1` stored in `limits`, which is exactly the restriction to the derived
/// set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nested {
    blocks: Vec<Seq>,
    tail: Seq,
    limits: Conv,
}

impl Nested {
    pub fn new(blocks: Vec<Seq>, tail: Seq, limits: Conv) -> Self {
        let mut n = Nested { blocks, tail, limits };
        while n.blocks.last() == Some(&n.tail) {
            n.blocks.pop();
        }
        n
    }

    pub fn constant(c: i64) -> Self {
        Nested::new(vec![], Seq::constant(c), Conv::constant(c))
    }

    pub fn block(&self, i: u64) -> &Seq {
        self.blocks.get(i as usize - 1).unwrap_or(&self.tail)
    }

    pub fn tail(&self) -> &Seq {
        &self.tail
    }

    pub fn limits(&self) -> &Conv {
        &self.limits
    }

    pub fn explicit_blocks(&self) -> u64 {
        self.blocks.len() as u64
    }

    /// Blocks past this index all look alike (isolated part and limit germ).
    fn horizon(&self) -> u64 {
        self.explicit_blocks().max(self.limits.seq.explicit_len())
    }

    fn zip(&self, o: &Nested, s: impl Fn(&Seq, &Seq) -> Seq, v: impl Fn(i64, i64) -> i64) -> Nested {
        let m = self.blocks.len().max(o.blocks.len()) as u64;
        let blocks = (1..=m).map(|i| s(self.block(i), o.block(i))).collect();
        Nested::new(blocks, s(&self.tail, &o.tail), self.limits.zip(&o.limits, &s, &v))
    }

    fn map(&self, s: impl Fn(&Seq) -> Seq, v: impl Fn(i64) -> i64) -> Nested {
        Nested::new(
            self.blocks.iter().map(&s).collect(),
            s(&self.tail),
            Conv { seq: s(&self.limits.seq), limit: v(self.limits.limit) },
        )
    }

    fn block_conv(&self, i: u64) -> Conv {
        Conv { seq: self.block(i).clone(), limit: self.limits.seq.at(i) }
    }

    fn is_lsc(&self) -> bool {
        let k = self.horizon();
        let explicit = (1..=k).all(|i| self.block_conv(i).is_lsc());
        let tail_blocks = self.tail.liminf() >= self.limits.seq.sup_from(k + 1);
        let top = self.tail.inf().min(self.limits.seq.liminf()) >= Ext::Fin(self.limits.limit);
        explicit && tail_blocks && top
    }

    fn is_continuous(&self) -> bool {
        let k = self.horizon();
        let explicit = (1..=k).all(|i| self.block_conv(i).is_continuous());
        let tail_blocks = match self.tail.germ().eventual_constant() {
            Some(c) => self.limits.seq.inf_from(k + 1) == Ext::Fin(c) && self.limits.seq.sup_from(k + 1) == Ext::Fin(c),
            None => false,
        };
        let top = self.tail == Seq::constant(self.limits.limit) && self.limits.is_continuous();
        explicit && tail_blocks && top
    }

    fn inf(&self) -> Ext {
        self.blocks.iter().map(Seq::inf).chain([self.tail.inf(), self.limits.inf()]).min().unwrap()
    }

    fn sup(&self) -> Ext {
        self.blocks.iter().map(Seq::sup).chain([self.tail.sup(), self.limits.sup()]).max().unwrap()
    }

    fn closure_of_indicator(&self) -> Nested {
        let m = self.blocks.len();
        let acc = |s: &Seq| (s.limsup() >= Ext::Fin(1)) as i64;
        let flags = Seq::new(self.blocks.iter().map(acc).collect(), Germ::constant(acc(&self.tail)));
        let lim_seq = Seq::pointwise_max(&self.limits.seq, &flags);
        let top = self.limits.limit != 0 || self.tail.sup() >= Ext::Fin(1) || lim_seq.limsup() >= Ext::Fin(1);
        debug_assert!(flags.explicit_len() <= m as u64);
        Nested::new(self.blocks.clone(), self.tail.clone(), Conv { seq: lim_seq, limit: top as i64 })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Data {
    /// One value per point of a finite space.
    Points(Vec<i64>),
    Conv(Conv),
    Nested(Nested),
}

/// A finitely presented integer-valued function on a maximal space.
///
/// Values are kept in canonical form, so `==` is pointwise equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealFunction {
    space: Space,
    data: Data,
}

impl IdealFunction {
    pub fn zero(space: Space) -> Self {
        Self::constant(space, 0)
    }

    pub fn constant(space: Space, c: i64) -> Self {
        let data = match space {
            Space::Ball(b) => Data::Points(vec![c; b.leaf_count() as usize]),
            Space::Ordinal(o) => match o.rank() {
                0 => Data::Points(vec![c; o.finite_len().unwrap() as usize]),
                1 => Data::Conv(Conv::constant(c)),
                _ => Data::Nested(Nested::constant(c)),
            },
        };
        IdealFunction { space, data }
    }

    /// A function on a finite space given point by point.
    pub fn from_values(space: Space, values: Vec<i64>) -> Result<Self> {
        match space.finite_len() {
            Some(n) if n as usize == values.len() => Ok(IdealFunction { space, data: Data::Points(values) }),
            Some(n) => Err(Error::MalformedDescriptor(format!("expected {n} values, got {}", values.len()))),
            None => Err(Error::MalformedDescriptor("space is infinite".into())),
        }
    }

    pub fn from_conv(conv: Conv) -> Self {
        IdealFunction { space: Space::Ordinal(OrdinalSpace::omega_plus_one()), data: Data::Conv(conv) }
    }

    pub fn from_nested(n: Nested) -> Self {
        IdealFunction { space: Space::Ordinal(OrdinalSpace::omega_squared_plus_one()), data: Data::Nested(n) }
    }

    /// The indicator of a list of points of a finite space.
    pub fn indicator_of(space: Space, points: &[Point]) -> Result<Self> {
        let n = space.finite_len().ok_or_else(|| Error::MalformedDescriptor("space is infinite".into()))?;
        let mut v = vec![0; n as usize];
        for x in points {
            space.check(x)?;
            v[finite_index(x)] = 1;
        }
        Self::from_values(space, v)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn as_values(&self) -> Option<&[i64]> {
        match &self.data {
            Data::Points(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_conv(&self) -> Option<&Conv> {
        match &self.data {
            Data::Conv(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_nested(&self) -> Option<&Nested> {
        match &self.data {
            Data::Nested(n) => Some(n),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Point) -> Result<i64> {
        self.space.check(x)?;
        Ok(match (&self.data, x) {
            (Data::Points(v), x) => v[finite_index(x)],
            (Data::Conv(c), Point::Path(p)) => match p.as_slice() {
                [] => c.limit,
                [n] => c.seq.at(*n),
                _ => unreachable!(),
            },
            (Data::Nested(f), Point::Path(p)) => match p.as_slice() {
                [] => f.limits.limit,
                [i] => f.limits.seq.at(*i),
                [i, j] => f.block(*i).at(*j),
                _ => unreachable!(),
            },
            _ => unreachable!(),
        })
    }

    fn same_space(&self, o: &IdealFunction) -> Result<()> {
        if self.space == o.space {
            Ok(())
        } else {
            Err(Error::BackendMismatch)
        }
    }

    fn zip(&self, o: &IdealFunction, s: impl Fn(&Seq, &Seq) -> Seq, v: impl Fn(i64, i64) -> i64) -> Result<Self> {
        self.same_space(o)?;
        let data = match (&self.data, &o.data) {
            (Data::Points(a), Data::Points(b)) => Data::Points(a.iter().zip(b).map(|(x, y)| v(*x, *y)).collect()),
            (Data::Conv(a), Data::Conv(b)) => Data::Conv(a.zip(b, s, v)),
            (Data::Nested(a), Data::Nested(b)) => Data::Nested(a.zip(b, s, v)),
            _ => return Err(Error::BackendMismatch),
        };
        Ok(IdealFunction { space: self.space, data })
    }

    fn map(&self, s: impl Fn(&Seq) -> Seq, v: impl Fn(i64) -> i64) -> Self {
        let data = match &self.data {
            Data::Points(a) => Data::Points(a.iter().map(|x| v(*x)).collect()),
            Data::Conv(c) => Data::Conv(Conv { seq: s(&c.seq), limit: v(c.limit) }),
            Data::Nested(n) => Data::Nested(n.map(s, v)),
        };
        IdealFunction { space: self.space, data }
    }

    pub fn add(&self, o: &IdealFunction) -> Result<Self> {
        self.zip(o, Seq::add, |a, b| a + b)
    }

    pub fn sub(&self, o: &IdealFunction) -> Result<Self> {
        self.zip(o, Seq::sub, |a, b| a - b)
    }

    pub fn negate(&self) -> Self {
        self.map(Seq::neg, |a| -a)
    }

    pub fn scale(&self, k: i64) -> Self {
        self.map(|s| s.scale(k), |a| a * k)
    }

    /// Pointwise minimum (the ideal sum).
    pub fn meet(&self, o: &IdealFunction) -> Result<Self> {
        self.zip(o, Seq::pointwise_min, i64::min)
    }

    /// Pointwise maximum (the ideal intersection).
    pub fn join(&self, o: &IdealFunction) -> Result<Self> {
        self.zip(o, Seq::pointwise_max, i64::max)
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Data::Points(v) => v.iter().all(|x| *x == 0),
            Data::Conv(c) => c.is_zero(),
            Data::Nested(n) => n.blocks.is_empty() && n.tail.is_zero() && n.limits.is_zero(),
        }
    }

    pub fn inf(&self) -> Ext {
        match &self.data {
            Data::Points(v) => Ext::Fin(*v.iter().min().unwrap()),
            Data::Conv(c) => c.inf(),
            Data::Nested(n) => n.inf(),
        }
    }

    pub fn sup(&self) -> Ext {
        match &self.data {
            Data::Points(v) => Ext::Fin(*v.iter().max().unwrap()),
            Data::Conv(c) => c.sup(),
            Data::Nested(n) => n.sup(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.inf() >= Ext::Fin(0)
    }

    /// Pointwise `self <= o`.
    pub fn le(&self, o: &IdealFunction) -> Result<bool> {
        Ok(o.sub(self)?.is_nonnegative())
    }

    pub fn is_lsc(&self) -> bool {
        match &self.data {
            Data::Points(_) => true,
            Data::Conv(c) => c.is_lsc(),
            Data::Nested(n) => n.is_lsc(),
        }
    }

    pub fn is_continuous(&self) -> bool {
        match &self.data {
            Data::Points(_) => true,
            Data::Conv(c) => c.is_continuous(),
            Data::Nested(n) => n.is_continuous(),
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.inf() != Ext::NegInf && self.sup() != Ext::PosInf
    }

    /// `max |f|`, or `None` when unbounded.
    pub fn sup_norm(&self) -> Option<i64> {
        match (self.inf(), self.sup()) {
            (Ext::Fin(a), Ext::Fin(b)) => Some(a.abs().max(b.abs())),
            _ => None,
        }
    }

    /// The 0/1 function of the points where `pred(value)` holds. `t` is the
    /// level the threshold predicate compares against.
    pub fn indicator(&self, t: i64, pred: impl Fn(i64) -> bool + Copy) -> Self {
        self.map(|s| s.indicator(t, pred), |v| pred(v) as i64)
    }

    pub fn cozero(&self) -> Self {
        self.indicator(0, |v| v != 0)
    }

    /// Topological closure of a 0/1 function read as a set.
    pub(crate) fn closure_of_indicator(&self) -> Self {
        let data = match &self.data {
            Data::Points(v) => Data::Points(v.clone()),
            Data::Conv(c) => Data::Conv(c.closure_of_indicator()),
            Data::Nested(n) => Data::Nested(n.closure_of_indicator()),
        };
        IdealFunction { space: self.space, data }
    }

    /// Closure of the cozero set.
    pub fn support(&self) -> PointSet {
        PointSet::cozero(self).closure()
    }

    /// 0/1-valued with clopen cozero set.
    pub fn is_radical(&self) -> bool {
        self.is_zero_one() && self.is_continuous()
    }

    pub fn is_zero_one(&self) -> bool {
        self.inf() >= Ext::Fin(0) && self.sup() <= Ext::Fin(1)
    }

    /// True iff the function vanishes at every limit point and outside a
    /// finite set of isolated points.
    pub fn is_finitely_supported_on_isolated(&self) -> bool {
        match &self.data {
            Data::Points(_) => true,
            Data::Conv(c) => c.limit == 0 && c.seq.germ().is_zero(),
            Data::Nested(n) => {
                n.limits.is_zero() && n.tail.is_zero() && n.blocks.iter().all(|b| b.germ().is_zero())
            }
        }
    }

    /// Nonzero values of a function that is finitely supported on isolated
    /// points.
    pub fn isolated_support(&self) -> Option<Vec<(Point, i64)>> {
        if !self.is_finitely_supported_on_isolated() {
            return None;
        }
        let out = match &self.data {
            Data::Points(v) => v
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(i, x)| (self.finite_point(i), *x))
                .collect(),
            Data::Conv(c) => c.seq.nonzero_prefix_indices().into_iter().map(|n| (Point::Path(vec![n]), c.seq.at(n))).collect(),
            Data::Nested(f) => (1..=f.blocks.len() as u64)
                .flat_map(|i| {
                    let b = f.block(i);
                    b.nonzero_prefix_indices().into_iter().map(move |j| (Point::Path(vec![i, j]), b.at(j)))
                })
                .collect(),
        };
        Some(out)
    }

    fn finite_point(&self, i: usize) -> Point {
        match self.space {
            Space::Ball(_) => Point::Leaf(i as u64),
            Space::Ordinal(_) => Point::Path(vec![i as u64 + 1]),
        }
    }

    /// Rewrites the values at finitely many isolated points: every value not
    /// in `allowed` that can be changed (prefix values at isolated points) is
    /// replaced by `fill`. Returns `None` when some limit point or some
    /// eventual class takes a value outside `allowed`.
    pub fn snap_isolated(&self, allowed: &[i64], fill: i64) -> Option<Self> {
        let ok_seq = |s: &Seq| s.germ_values_in(allowed);
        let snap = |s: &Seq| s.snap_prefix(allowed, fill);
        let data = match &self.data {
            Data::Points(v) => Data::Points(v.iter().map(|x| if allowed.contains(x) { *x } else { fill }).collect()),
            Data::Conv(c) => {
                if !ok_seq(&c.seq) || !allowed.contains(&c.limit) {
                    return None;
                }
                Data::Conv(Conv { seq: snap(&c.seq), limit: c.limit })
            }
            Data::Nested(n) => {
                let lim = &n.limits;
                let limits_ok = allowed.contains(&lim.limit)
                    && ok_seq(&lim.seq)
                    && lim.seq.prefix().iter().all(|v| allowed.contains(v));
                // the tail block repeats infinitely often, so it cannot be edited
                let tail_ok = ok_seq(&n.tail) && n.tail.prefix().iter().all(|v| allowed.contains(v));
                if !limits_ok || !tail_ok || !n.blocks.iter().all(ok_seq) {
                    return None;
                }
                Data::Nested(Nested::new(n.blocks.iter().map(snap).collect(), n.tail.clone(), lim.clone()))
            }
        };
        Some(IdealFunction { space: self.space, data })
    }

    /// Raises negative values at isolated prefix points to zero. Returns
    /// `None` if a limit value or an eventual class is negative or unbounded.
    pub fn clamp_isolated_nonnegative_bounded(&self) -> Option<Self> {
        let good = |s: &Seq| s.germ().pieces().iter().all(|a| a.slope == 0 && a.offset >= 0);
        let fix = |s: &Seq| s.map_values(|v| v.max(0), Germ::clone);
        let data = match &self.data {
            Data::Points(v) => Data::Points(v.iter().map(|x| (*x).max(0)).collect()),
            Data::Conv(c) => {
                if !good(&c.seq) || c.limit < 0 {
                    return None;
                }
                Data::Conv(Conv { seq: fix(&c.seq), limit: c.limit })
            }
            Data::Nested(n) => {
                let lim = &n.limits;
                let tail_ok = good(&n.tail) && n.tail.prefix().iter().all(|v| *v >= 0);
                if lim.inf() < Ext::Fin(0) || !lim.seq.is_bounded() || !tail_ok || !n.blocks.iter().all(good) {
                    return None;
                }
                Data::Nested(Nested::new(n.blocks.iter().map(fix).collect(), n.tail.clone(), lim.clone()))
            }
        };
        Some(IdealFunction { space: self.space, data })
    }

    /// Restriction to the set of limit points, as a function on the derived
    /// space.
    pub fn restrict_to_derived(&self) -> Result<Self> {
        match &self.data {
            Data::Points(_) => Err(Error::RankZero),
            Data::Conv(c) => Self::from_values(Space::Ordinal(OrdinalSpace::discrete(1)), vec![c.limit]),
            Data::Nested(n) => Ok(Self::from_conv(n.limits.clone())),
        }
    }

    /// Restriction to finitely many points, as a function on a discrete space.
    pub fn restrict_to_points(&self, points: &[Point]) -> Result<Self> {
        let values = points.iter().map(|x| self.eval(x)).collect::<Result<Vec<_>>>()?;
        Self::from_values(Space::Ordinal(OrdinalSpace::discrete(points.len() as u64)), values)
    }

    /// Explicit-region size: every index past this behaves uniformly.
    pub fn horizon(&self) -> u64 {
        match &self.data {
            Data::Points(v) => v.len() as u64,
            Data::Conv(c) => c.seq.explicit_len(),
            Data::Nested(n) => {
                n.horizon().max(n.tail.explicit_len()).max(n.blocks.iter().map(Seq::explicit_len).max().unwrap_or(0))
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.data {
            Data::Points(v) => json!(v),
            Data::Conv(c) => conv_json(&c.seq, json!(c.limit)),
            Data::Nested(n) => {
                let lg = n.limits.seq.germ();
                let k = n.horizon();
                let exceptions: Vec<Value> = (1..=k)
                    .filter(|&i| n.block(i) != &n.tail || n.limits.seq.at(i) != lg.at(i))
                    .map(|i| json!([i, conv_json(n.block(i), json!(n.limits.seq.at(i)))]))
                    .collect();
                json!({
                    "exceptions": exceptions,
                    "tail": conv_json(&n.tail, germ_json(lg)),
                    "at_limit": n.limits.limit,
                })
            }
        }
    }

    pub fn from_json(space: Space, v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::MalformedDescriptor(m.to_string());
        match space {
            Space::Ball(_) => Self::from_values(space, int_array(v)?),
            Space::Ordinal(o) => match o.rank() {
                0 => Self::from_values(space, int_array(v)?),
                1 => {
                    let (seq, lim) = conv_from_json(v)?;
                    let lim = lim.as_i64().ok_or_else(|| bad("at_limit must be an integer"))?;
                    Ok(Self::from_conv(Conv::new(seq, lim)))
                }
                _ => {
                    let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
                    let top = obj.get("at_limit").and_then(Value::as_i64).ok_or_else(|| bad("at_limit"))?;
                    let (tail, lim_germ) = conv_from_json(obj.get("tail").ok_or_else(|| bad("tail"))?)?;
                    let lim_germ = germ_from_json(&lim_germ)?;
                    let mut explicit = Vec::new();
                    for e in obj.get("exceptions").and_then(Value::as_array).map(Vec::as_slice).unwrap_or(&[]) {
                        let i = e.get(0).and_then(Value::as_u64).filter(|&i| i >= 1).ok_or_else(|| bad("block index"))?;
                        let (s, l) = conv_from_json(e.get(1).ok_or_else(|| bad("block descriptor"))?)?;
                        explicit.push((i, s, l.as_i64().ok_or_else(|| bad("block at_limit"))?));
                    }
                    let m = explicit.iter().map(|e| e.0).max().unwrap_or(0);
                    let mut blocks = vec![tail.clone(); m as usize];
                    let mut lim_prefix: Vec<i64> = (1..=m).map(|i| lim_germ.at(i)).collect();
                    for (i, s, l) in explicit {
                        blocks[i as usize - 1] = s;
                        lim_prefix[i as usize - 1] = l;
                    }
                    let limits = Conv::new(Seq::new(lim_prefix, lim_germ), top);
                    Ok(Self::from_nested(Nested::new(blocks, tail, limits)))
                }
            },
        }
    }
}

fn finite_index(x: &Point) -> usize {
    match x {
        Point::Leaf(l) => *l as usize,
        Point::Path(p) => p[0] as usize - 1,
    }
}

impl fmt::Display for IdealFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

fn germ_json(g: &Germ) -> Value {
    let piece = |a: &Affine| if a.slope == 0 { json!(a.offset) } else { json!({"slope": a.slope, "offset": a.offset}) };
    match g.pieces() {
        [a] => piece(a),
        ps => json!({ "pieces": ps.iter().map(piece).collect::<Vec<_>>() }),
    }
}

fn conv_json(s: &Seq, at_limit: Value) -> Value {
    json!({
        "exceptions": s.exceptions().iter().map(|(n, v)| json!([n, v])).collect::<Vec<_>>(),
        "tail": germ_json(s.germ()),
        "at_limit": at_limit,
    })
}

fn affine_from_json(v: &Value) -> Result<Affine> {
    if let Some(c) = v.as_i64() {
        return Ok(Affine::constant(c));
    }
    let slope = v.get("slope").and_then(Value::as_i64).unwrap_or(0);
    let offset = v.get("offset").and_then(Value::as_i64).unwrap_or(0);
    if v.get("slope").is_none() && v.get("offset").is_none() {
        return Err(Error::MalformedDescriptor(format!("bad germ piece {v}")));
    }
    Ok(Affine::linear(slope, offset))
}

fn germ_from_json(v: &Value) -> Result<Germ> {
    match v.get("pieces").and_then(Value::as_array) {
        Some(ps) if !ps.is_empty() => Ok(Germ::new(ps.iter().map(affine_from_json).collect::<Result<_>>()?)),
        Some(_) => Err(Error::MalformedDescriptor("empty germ".into())),
        None => Ok(Germ::new(vec![affine_from_json(v)?])),
    }
}

fn conv_from_json(v: &Value) -> Result<(Seq, Value)> {
    let bad = |m: &str| Error::MalformedDescriptor(m.to_string());
    let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
    let germ = germ_from_json(obj.get("tail").ok_or_else(|| bad("missing tail"))?)?;
    let mut ex = Vec::new();
    for e in obj.get("exceptions").and_then(Value::as_array).map(Vec::as_slice).unwrap_or(&[]) {
        let n = e.get(0).and_then(Value::as_u64).filter(|&n| n >= 1).ok_or_else(|| bad("exception index"))?;
        let x = e.get(1).and_then(Value::as_i64).ok_or_else(|| bad("exception value"))?;
        ex.push((n, x));
    }
    let lim = obj.get("at_limit").cloned().ok_or_else(|| bad("missing at_limit"))?;
    Ok((Seq::from_exceptions(&ex, germ), lim))
}

fn int_array(v: &Value) -> Result<Vec<i64>> {
    v.as_array()
        .and_then(|a| a.iter().map(Value::as_i64).collect())
        .ok_or_else(|| Error::MalformedDescriptor("expected an integer array".into()))
}
