//! Uniqueness of the ℂ*-action and conjugacy classes of 𝔸¹-fibrations.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::dpd::{
    extended_divisor, is_gizatullin, is_toric, point_data, toric_type, DpdPair, GizatullinPoints, QDivisor,
};
use crate::dualgraph::{ExtendedDivisor, Zigzag};
use crate::error::{Error, Result};
use crate::exactmath::{hj_chain, BoxLabel, Rational};

/// `t -> a t + b` with `a != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub a: Rational,
    pub b: Rational,
}

impl AffineMap {
    pub fn new(a: Rational, b: Rational) -> Result<AffineMap> {
        if a.is_zero() {
            return Err(Error::BadParameters("affine map with a = 0".into()));
        }
        Ok(AffineMap { a, b })
    }

    pub fn identity() -> AffineMap {
        AffineMap { a: Rational::from_int(1), b: Rational::zero() }
    }

    pub fn apply(&self, t: &Rational) -> Rational {
        &(&self.a * t) + &self.b
    }

    pub fn inverse(&self) -> AffineMap {
        let a = self.a.recip();
        let b = -(&a * &self.b);
        AffineMap { a, b }
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = Rational::from_int(1);
        let lead = if self.a == one {
            "t".to_string()
        } else if self.a == -one {
            "-t".to_string()
        } else {
            format!("{}*t", self.a)
        };
        if self.b.is_zero() {
            write!(f, "{lead}")
        } else if self.b.is_negative() {
            write!(f, "{lead} - {}", self.b.abs())
        } else {
            write!(f, "{lead} + {}", self.b)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CstarVerdict {
    UniqueUpToConjugationAndInversion,
    NonUniqueToric,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FibrationClasses {
    /// A single class. `psi` interchanges the two standard fibrations;
    /// toric surfaces carry none.
    One {
        psi: Option<AffineMap>,
    },
    Two,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub alpha_plus: bool,
    pub alpha_star: bool,
    pub beta: bool,
    pub toric: bool,
    pub cstar_verdict: CstarVerdict,
    pub inverse_conjugate: Option<AffineMap>,
    pub fibration_classes: FibrationClasses,
}

fn giz(pair: &DpdPair) -> Result<GizatullinPoints> {
    is_gizatullin(pair).ok_or(Error::NotGizatullin)
}

fn fractional_support(pts: &GizatullinPoints) -> BTreeSet<Rational> {
    pts.p_plus.iter().chain(pts.p_minus.iter()).cloned().collect()
}

/// At most one fractional point `p`, where the sum vanishes or is at most
/// `-max(1/m+^2, 1/m-^2)`.
pub fn cond_alpha_plus(pair: &DpdPair) -> Result<bool> {
    let pts = giz(pair)?;
    let support = fractional_support(&pts);
    let p = match support.len() {
        0 => return Ok(true),
        1 => support.into_iter().next().unwrap(),
        _ => return Ok(false),
    };
    let s = pair.sum().get(&p);
    if s.is_zero() {
        return Ok(true);
    }
    let bound = |x: &Rational| {
        let m = Rational::from(x.denom_i64().unwrap_or(i64::MAX));
        (&m * &m).recip()
    };
    let bp = bound(&pair.d_plus().get(&p));
    let bm = bound(&pair.d_minus().get(&p));
    let max = if bp > bm { bp } else { bm };
    Ok(s <= -max)
}

/// At most one fractional point `p`, where the sum is at most -1 or both
/// fractional parts are nonzero.
pub fn cond_alpha_star(pair: &DpdPair) -> Result<bool> {
    let pts = giz(pair)?;
    let support = fractional_support(&pts);
    let p = match support.len() {
        0 => return Ok(true),
        1 => support.into_iter().next().unwrap(),
        _ => return Ok(false),
    };
    let both = pts.p_plus.is_some() && pts.p_minus.is_some();
    Ok(pair.sum().get(&p) <= Rational::from_int(-1) || both)
}

/// Fractional parts at two different points, each with sum at most -1.
pub fn cond_beta(pair: &DpdPair) -> Result<bool> {
    let pts = giz(pair)?;
    let (Some(pp), Some(pm)) = (&pts.p_plus, &pts.p_minus) else {
        return Ok(false);
    };
    let s = pair.sum();
    let minus_one = Rational::from_int(-1);
    Ok(pp != pm && s.get(pp) <= minus_one && s.get(pm) <= minus_one)
}

fn psi_works(pair: &DpdPair, psi: &AffineMap, points: &BTreeSet<Rational>) -> bool {
    let fp = pair.d_plus().fract();
    let fm = pair.d_minus().fract();
    let s = pair.sum();
    // both conditions only need checking where either side can be nonzero
    let mut check: BTreeSet<Rational> = points.clone();
    let inv = psi.inverse();
    for p in points {
        check.insert(inv.apply(p));
    }
    check.iter().all(|q| fp.get(&psi.apply(q)) == fm.get(q) && s.get(&psi.apply(q)) == s.get(q))
}

/// An automorphism `psi` of the line with `{D+} o psi = {D-}` and
/// `(D+ + D-) o psi = D+ + D-`, if one exists.
pub fn find_psi(pair: &DpdPair) -> Result<Option<AffineMap>> {
    let pts = giz(pair)?;
    if pts.p_plus.is_some() != pts.p_minus.is_some() {
        return Ok(None);
    }
    let s = pair.sum();
    let supp_s: BTreeSet<Rational> = s.support().cloned().collect();
    let mut points = supp_s.clone();
    points.extend(fractional_support(&pts));

    let mut anchors: Vec<Rational> = supp_s.iter().cloned().collect();
    if let Some(pm) = &pts.p_minus {
        if !supp_s.contains(pm) {
            anchors.push(pm.clone());
        }
    }
    anchors.sort();
    let allowed = |q: &Rational| -> Vec<Rational> {
        if Some(q) == pts.p_minus.as_ref() {
            return pts.p_plus.iter().cloned().collect();
        }
        let v = s.get(q);
        supp_s.iter().filter(|r| s.get(r) == v).cloned().collect()
    };

    let candidates: Vec<AffineMap> = match anchors.as_slice() {
        [] => vec![AffineMap::identity()],
        [q] => allowed(q)
            .into_iter()
            .flat_map(|r| {
                [AffineMap { a: Rational::from_int(1), b: &r - q }, AffineMap { a: Rational::from_int(-1), b: &r + q }]
            })
            .collect(),
        [q1, q2, ..] => {
            let mut out = Vec::new();
            for r1 in allowed(q1) {
                for r2 in allowed(q2) {
                    if r1 == r2 {
                        continue;
                    }
                    let a = &(&r2 - &r1) / &(q2 - q1);
                    let b = &r1 - &(&a * q1);
                    out.push(AffineMap { a, b });
                }
            }
            out
        }
    };
    Ok(candidates.into_iter().find(|psi| psi_works(pair, psi, &points)))
}

pub fn cstar_uniqueness(pair: &DpdPair) -> Result<(CstarVerdict, Option<AffineMap>)> {
    giz(pair)?;
    if is_toric(pair) {
        return Ok((CstarVerdict::NonUniqueToric, None));
    }
    if cond_alpha_star(pair)? || cond_beta(pair)? {
        return Ok((CstarVerdict::UniqueUpToConjugationAndInversion, find_psi(pair)?));
    }
    Ok((CstarVerdict::Unknown, None))
}

pub fn fibration_classes(pair: &DpdPair) -> Result<FibrationClasses> {
    giz(pair)?;
    if is_toric(pair) {
        let (d, e) = toric_type(pair)?;
        return Ok(match toric_classes(d, e)? {
            1 => FibrationClasses::One { psi: None },
            _ => FibrationClasses::Two,
        });
    }
    if cond_alpha_plus(pair)? || cond_beta(pair)? {
        return Ok(match find_psi(pair)? {
            Some(psi) => FibrationClasses::One { psi: Some(psi) },
            None => FibrationClasses::Two,
        });
    }
    Ok(FibrationClasses::Unknown)
}

pub fn classify(pair: &DpdPair) -> Result<ClassificationReport> {
    let (cstar_verdict, inverse_conjugate) = cstar_uniqueness(pair)?;
    Ok(ClassificationReport {
        alpha_plus: cond_alpha_plus(pair)?,
        alpha_star: cond_alpha_star(pair)?,
        beta: cond_beta(pair)?,
        toric: is_toric(pair),
        cstar_verdict,
        inverse_conjugate,
        fibration_classes: fibration_classes(pair)?,
    })
}

fn check_toric(d: i64, e: i64) -> Result<()> {
    let ok = d >= 1 && (0..d).contains(&e) && e.gcd(&d) == 1;
    if ok {
        Ok(())
    } else {
        Err(Error::BadToricType { d, e })
    }
}

/// `[[0,0]]` followed by the chain of `(d-e)/d`.
pub fn toric_zigzag(d: i64, e: i64) -> Result<Zigzag> {
    check_toric(d, e)?;
    let mut w = vec![0, 0];
    w.extend(hj_chain(BoxLabel::new((d - e) % d, d)?));
    Ok(Zigzag(w))
}

/// 1 iff `e^2 = 1 mod d`, else 2.
pub fn toric_classes(d: i64, e: i64) -> Result<u8> {
    check_toric(d, e)?;
    Ok(if (e as i128 * e as i128 - 1).rem_euclid(d as i128) == 0 { 1 } else { 2 })
}

pub fn toric_iso(d: i64, e: i64, d2: i64, e2: i64) -> Result<bool> {
    check_toric(d, e)?;
    check_toric(d2, e2)?;
    Ok(d == d2 && (e == e2 || (e as i128 * e2 as i128 - 1).rem_euclid(d as i128) == 0))
}

/// `(-1/r [0], -1/(k+1-r) [1])` and its extended divisor.
pub fn danilov_gizatullin(k: i64, r: i64) -> Result<(DpdPair, ExtendedDivisor)> {
    if !(1 <= r && r <= k) {
        return Err(Error::BadParameters(format!("need 1 <= r <= k, got k={k}, r={r}")));
    }
    let pair = DpdPair::new(
        QDivisor::point(Rational::zero(), Rational::new(-1, r)),
        QDivisor::point(Rational::from_int(1), Rational::new(-1, k + 1 - r)),
    )?;
    let ext = extended_divisor(&pair)?;
    Ok((pair, ext))
}

/// `[[0,0,(-2)_{s-2},w_s,(-2)_{n-s}]]` with `n >= 4`.
pub fn smooth_exceptional_zigzag(z: &Zigzag) -> Result<bool> {
    if !z.is_standard() {
        return Err(Error::NotStandard(z.0.clone()));
    }
    let w = z.weights();
    if w.len() < 5 {
        return Ok(false);
    }
    Ok(w[2..].iter().filter(|&&x| x != -2).count() <= 1)
}

/// `(0, -div P)` for `P = prod (t - p_i)^{m_i}`.
pub fn surface_xy_p(roots: &[(Rational, u32)]) -> Result<DpdPair> {
    if roots.is_empty() {
        return Err(Error::EmptyPolynomial);
    }
    if roots.iter().any(|(_, m)| *m == 0) {
        return Err(Error::BadParameters("root multiplicity 0".into()));
    }
    let d_minus = QDivisor::new(roots.iter().map(|(p, m)| (p.clone(), Rational::from_int(-(*m as i64)))))?;
    DpdPair::new(QDivisor::zero(), d_minus)
}

/// `(delta, e)` at each point where the sum is negative.
pub fn point_types(pair: &DpdPair) -> Result<Vec<(Rational, (i64, i64))>> {
    pair.sum().support().map(|p| point_data(pair, p).map(|d| (p.clone(), (d.delta, d.e)))).collect()
}
