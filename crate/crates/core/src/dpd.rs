//! Pairs `(D+, D-)` of ℚ-divisors on the affine line and the boundary data of
//! the ℂ*-surface they present.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::dualgraph::{ExtendedDivisor, Feather, FeatherOrigin, FiberGraph, Zigzag};
use crate::error::{Error, Result};
use crate::exactmath::{det_witness, dual_label, hj_chain, BoxLabel, Chain, Rational};

/// Finitely supported ℚ-divisor; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QDivisor(BTreeMap<Rational, Rational>);

impl QDivisor {
    pub fn zero() -> QDivisor {
        QDivisor::default()
    }

    /// Rejects repeated points; drops zero coefficients.
    pub fn new(entries: impl IntoIterator<Item = (Rational, Rational)>) -> Result<QDivisor> {
        let mut map = BTreeMap::new();
        for (p, c) in entries {
            if map.contains_key(&p) {
                return Err(Error::DuplicatePoint(p.to_string()));
            }
            map.insert(p, c);
        }
        map.retain(|_, c| !c.is_zero());
        Ok(QDivisor(map))
    }

    /// `c [p]`.
    pub fn point(p: Rational, c: Rational) -> QDivisor {
        QDivisor::new([(p, c)]).expect("single point")
    }

    pub fn get(&self, p: &Rational) -> Rational {
        self.0.get(p).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.0.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, &Rational)> + '_ {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn floor(&self) -> QDivisor {
        self.map(|c| c.floor())
    }

    pub fn fract(&self) -> QDivisor {
        self.map(|c| c.fract())
    }

    pub fn degree(&self) -> Rational {
        self.0.values().fold(Rational::zero(), |a, c| &a + c)
    }

    pub fn is_integral(&self) -> bool {
        self.0.values().all(Rational::is_integer)
    }

    pub fn neg(&self) -> QDivisor {
        self.map(|c| -c)
    }

    pub fn add(&self, other: &QDivisor) -> QDivisor {
        let mut map = self.0.clone();
        for (p, c) in &other.0 {
            let s = &map.get(p).cloned().unwrap_or_default() + c;
            map.insert(p.clone(), s);
        }
        map.retain(|_, c| !c.is_zero());
        QDivisor(map)
    }

    pub fn sub(&self, other: &QDivisor) -> QDivisor {
        self.add(&other.neg())
    }

    /// Pull-back along `t -> a t + b`: the coefficient at `q` becomes the
    /// coefficient at `a q + b`.
    pub fn pullback(&self, a: &Rational, b: &Rational) -> QDivisor {
        QDivisor(self.0.iter().map(|(p, c)| (&(p - b) / a, c.clone())).collect())
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> QDivisor {
        let mut map: BTreeMap<_, _> = self.0.iter().map(|(p, c)| (p.clone(), f(c))).collect();
        map.retain(|_, c| !c.is_zero());
        QDivisor(map)
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.0.iter().map(|(p, c)| format!("{c}[{p}]")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// A DPD pair: `D+ + D- <= 0` and not identically zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DpdPair {
    d_plus: QDivisor,
    d_minus: QDivisor,
}

impl DpdPair {
    pub fn new(d_plus: QDivisor, d_minus: QDivisor) -> Result<DpdPair> {
        let sum = d_plus.add(&d_minus);
        if let Some((p, _)) = sum.iter().find(|(_, c)| c.is_positive()) {
            return Err(Error::PositiveSum(p.to_string()));
        }
        if sum.is_zero() {
            return Err(Error::DegenerateSum);
        }
        Ok(DpdPair { d_plus, d_minus })
    }

    pub fn d_plus(&self) -> &QDivisor {
        &self.d_plus
    }

    pub fn d_minus(&self) -> &QDivisor {
        &self.d_minus
    }

    pub fn sum(&self) -> QDivisor {
        self.d_plus.add(&self.d_minus)
    }

    pub fn swap(&self) -> DpdPair {
        DpdPair { d_plus: self.d_minus.clone(), d_minus: self.d_plus.clone() }
    }

    /// `(D+ + E, D- - E)` for an integral `E`.
    pub fn shift(&self, e: &QDivisor) -> Result<DpdPair> {
        if !e.is_integral() {
            return Err(Error::Internal("shift by a non-integral divisor".into()));
        }
        Ok(DpdPair { d_plus: self.d_plus.add(e), d_minus: self.d_minus.sub(e) })
    }

    /// All points where either divisor is nonzero.
    pub fn support(&self) -> BTreeSet<Rational> {
        self.d_plus.support().chain(self.d_minus.support()).cloned().collect()
    }
}

/// Equivalent pair with `floor(D+) = 0`.
pub fn canonicalize(pair: &DpdPair) -> DpdPair {
    pair.shift(&pair.d_plus.floor().neg()).expect("integral shift")
}

/// Fractional-support points of a Gizatullin pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GizatullinPoints {
    pub p_plus: Option<Rational>,
    pub p_minus: Option<Rational>,
}

/// `Some` iff each fractional part is supported in at most one point.
pub fn is_gizatullin(pair: &DpdPair) -> Option<GizatullinPoints> {
    let fp: Vec<_> = pair.d_plus.fract().support().cloned().collect();
    let fm: Vec<_> = pair.d_minus.fract().support().cloned().collect();
    if fp.len() > 1 || fm.len() > 1 {
        return None;
    }
    Some(GizatullinPoints { p_plus: fp.into_iter().next(), p_minus: fm.into_iter().next() })
}

/// Points where the fractional parts live or the sum is negative.
fn special_points(pair: &DpdPair) -> BTreeSet<Rational> {
    let mut s: BTreeSet<Rational> = pair.sum().support().cloned().collect();
    s.extend(pair.d_plus.fract().support().cloned());
    s.extend(pair.d_minus.fract().support().cloned());
    s
}

/// Fractional parts and the non-zero part of the sum all sit at one point.
pub fn is_toric(pair: &DpdPair) -> bool {
    special_points(pair).len() <= 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointKind {
    /// `(D+ + D-)(p) < 0`.
    Cross,
    /// Sum zero with non-integral values.
    MultipleFiber,
    Plain,
}

/// Local invariants at one point: `D+(p) = -e+/m+`, `D-(p) = e-/m-`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointData {
    pub p: Rational,
    pub m_plus: i64,
    pub e_plus: i64,
    pub m_minus: i64,
    pub e_minus: i64,
    /// `m+ m- (D+ + D-)(p)`.
    pub delta: i64,
    /// Type `(delta, e)` of the quotient singularity; 0 unless `delta > 0`.
    pub e: i64,
    pub kind: PointKind,
}

impl PointData {
    fn frac_plus(&self) -> BoxLabel {
        BoxLabel::from_fraction(&Rational::new(-self.e_plus, self.m_plus).fract()).expect("proper fraction")
    }

    fn frac_minus(&self) -> BoxLabel {
        BoxLabel::from_fraction(&Rational::new(self.e_minus, self.m_minus).fract()).expect("proper fraction")
    }

    /// `m- / (delta m+)` minus the pulls of the two neighbouring boxes.
    pub fn o_plus_weight(&self) -> i64 {
        let w = Rational::new(self.m_minus, self.delta * self.m_plus)
            - dual_label(self.frac_plus()).value()
            - self.label().value();
        w.to_i64().expect("integral weight")
    }

    /// `m+ / (delta m-)` minus the pulls of the two neighbouring boxes.
    pub fn o_minus_weight(&self) -> i64 {
        let w = Rational::new(self.m_plus, self.delta * self.m_minus)
            - dual_label(self.label()).value()
            - dual_label(self.frac_minus()).value();
        w.to_i64().expect("integral weight")
    }

    /// Box label `e/delta`.
    pub fn label(&self) -> BoxLabel {
        BoxLabel::new(self.e, self.delta).expect("coprime type")
    }
}

pub fn point_data(pair: &DpdPair, p: &Rational) -> Result<PointData> {
    let dp = pair.d_plus.get(p);
    let dm = pair.d_minus.get(p);
    let m_plus = dp.denom_i64()?;
    let e_plus = -dp.numer_i64()?;
    let m_minus = -dm.denom_i64()?;
    let e_minus = -dm.numer_i64()?;
    let of = |x: Option<i64>| x.ok_or(Error::Overflow);
    let delta = of(of(m_plus.checked_mul(e_minus))?.checked_sub(of(m_minus.checked_mul(e_plus))?))?;
    let sum = &dp + &dm;
    let (kind, e) = if sum.is_negative() {
        let (a, b) = det_witness(m_plus, e_plus).expect("coprime");
        let e = (a as i128 * m_minus as i128 - b as i128 * e_minus as i128).rem_euclid(delta as i128);
        (PointKind::Cross, e as i64)
    } else if !dp.is_integer() {
        (PointKind::MultipleFiber, 0)
    } else {
        (PointKind::Plain, 0)
    };
    Ok(PointData { p: p.clone(), m_plus, e_plus, m_minus, e_minus, delta, e, kind })
}

/// Cross points with `delta >= 2`, as `(p, (delta, e))`.
pub fn singular_points(pair: &DpdPair) -> Result<Vec<(Rational, (i64, i64))>> {
    let mut out = Vec::new();
    for p in pair.sum().support() {
        let d = point_data(pair, p)?;
        if d.delta >= 2 {
            out.push((p.clone(), (d.delta, d.e)));
        }
    }
    Ok(out)
}

pub fn is_smooth(pair: &DpdPair) -> Result<bool> {
    Ok(singular_points(pair)?.is_empty())
}

/// Interior of the fiber over `p`, read from the `C+` end to the `C-` end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointFiber {
    pub chain: Chain,
    /// Positions of the orbit closures in `chain`; equal for a sum-zero point.
    pub o_plus: usize,
    pub o_minus: usize,
}

fn fract_label(x: &Rational) -> Result<BoxLabel> {
    BoxLabel::from_fraction(&x.fract())
}

pub fn fiber_graph(pair: &DpdPair, p: &Rational) -> Result<PointFiber> {
    let d = point_data(pair, p)?;
    let plus_box = hj_chain(fract_label(&pair.d_plus.get(p))?);
    let minus_box = hj_chain(dual_label(fract_label(&pair.d_minus.get(p))?));
    let mut chain = plus_box;
    match d.kind {
        PointKind::Cross => {
            let o_plus = chain.len();
            chain.push(d.o_plus_weight());
            chain.extend(hj_chain(d.label()));
            let o_minus = chain.len();
            chain.push(d.o_minus_weight());
            chain.extend(minus_box);
            Ok(PointFiber { chain, o_plus, o_minus })
        }
        _ => {
            let o = chain.len();
            let w = -(dual_label(d.frac_plus()).value() + dual_label(d.frac_minus()).value());
            chain.push(w.to_i64()?);
            chain.extend(minus_box);
            Ok(PointFiber { chain, o_plus: o, o_minus: o })
        }
    }
}

fn require_gizatullin(pair: &DpdPair) -> Result<GizatullinPoints> {
    is_gizatullin(pair).ok_or(Error::NotGizatullin)
}

/// `deg floor(D+) + deg floor(D-)`.
pub fn parabolic_weight(pair: &DpdPair) -> Result<i64> {
    (&pair.d_plus.floor().degree() + &pair.d_minus.floor().degree()).to_i64()
}

/// The zigzag without the toric guard.
fn zigzag_parts(pair: &DpdPair) -> Result<(Chain, i64, Chain)> {
    let pts = require_gizatullin(pair)?;
    let left = match &pts.p_plus {
        Some(p) => hj_chain(dual_label(fract_label(&pair.d_plus.get(p))?)),
        None => Vec::new(),
    };
    let right = match &pts.p_minus {
        Some(p) => hj_chain(fract_label(&pair.d_minus.get(p))?),
        None => Vec::new(),
    };
    Ok((left, parabolic_weight(pair)?, right))
}

pub fn boundary_zigzag(pair: &DpdPair) -> Result<Zigzag> {
    require_gizatullin(pair)?;
    if is_toric(pair) {
        return Err(Error::ToricInput);
    }
    let (left, ws, right) = zigzag_parts(pair)?;
    if ws > -2 {
        return Err(Error::Internal(format!("parabolic weight {ws} > -2 on a non-toric pair")));
    }
    let mut w = vec![0, 0];
    w.extend(left);
    w.push(ws);
    w.extend(right);
    Ok(Zigzag(w))
}

/// A feather as read off the divisor data, before assembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlannedFeather {
    pub origin: FeatherOrigin,
    pub feather: Feather,
}

/// The point whose feather becomes `F_0`. When `{D-} = 0` all feathers sit
/// at `C_s = C_n` and the choice only fixes labels: a negative-sum point
/// other than `p+` is preferred, then `p+`.
pub fn tail_point(pair: &DpdPair) -> Result<Option<Rational>> {
    let pts = require_gizatullin(pair)?;
    if pts.p_minus.is_some() {
        return Ok(pts.p_minus);
    }
    let sum = pair.sum();
    let tail = sum.support().find(|q| Some(*q) != pts.p_plus.as_ref()).or(pts.p_plus.as_ref()).cloned();
    Ok(tail)
}

/// Feathers `F_1, ..., F_r` (parabolic) followed by `F_0` if present.
pub fn feather_plan(pair: &DpdPair) -> Result<Vec<PlannedFeather>> {
    let tail = tail_point(pair)?;
    let mut out = Vec::new();
    let mut last = None;
    for q in pair.sum().support() {
        let d = point_data(pair, q)?;
        let feather = Feather::new(d.o_minus_weight(), hj_chain(dual_label(d.label())))?;
        let is_tail = Some(q) == tail.as_ref();
        let planned = PlannedFeather { origin: FeatherOrigin { point: q.clone(), tail: is_tail }, feather };
        if is_tail {
            last = Some(planned);
        } else {
            out.push(planned);
        }
    }
    out.extend(last);
    Ok(out)
}

pub fn extended_divisor(pair: &DpdPair) -> Result<ExtendedDivisor> {
    let zigzag = boundary_zigzag(pair)?;
    let (left, _, _) = zigzag_parts(pair)?;
    let s = 2 + left.len();
    let spine = zigzag.weights()[2..].to_vec();
    let n = spine.len() - 1;
    let plan = feather_plan(pair)?;
    let feathers = plan.iter().map(|pf| (if pf.origin.tail { n } else { s - 2 }, pf.feather.clone())).collect();
    let fiber = FiberGraph::new(spine, feathers).map_err(|e| match e {
        Error::NotAFiber => Error::Internal("constructed graph is not a fiber".into()),
        e => e,
    })?;
    Ok(ExtendedDivisor { fiber, s_index: Some(s), origins: plan.into_iter().map(|pf| pf.origin).collect() })
}

/// Extended divisor of the swapped pair, i.e. for the inverted action.
pub fn extended_divisor_vee(pair: &DpdPair) -> Result<ExtendedDivisor> {
    extended_divisor(&pair.swap())
}

/// `(d, e)` of a toric pair, read at its single special point.
pub fn toric_type(pair: &DpdPair) -> Result<(i64, i64)> {
    if !is_toric(pair) {
        return Err(Error::BadParameters("pair is not toric".into()));
    }
    let p0 = special_points(pair).into_iter().next().ok_or(Error::DegenerateSum)?;
    let d = point_data(pair, &p0)?;
    if d.kind != PointKind::Cross {
        return Err(Error::DegenerateSum);
    }
    Ok((d.delta, d.e))
}
