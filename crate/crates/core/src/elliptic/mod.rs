//! The Legendre family `Z² = XY(X−Y)(λ₁X − λ₀Y)` in ℙ(1,1,2), its 2-torsion
//! translations, the anharmonic λ-symmetries and orbit equivalence of
//! configurations `(λ, p₁, p₂)`.

mod fixtures;
mod maps;
mod symbolic;

use std::fmt;

pub use fixtures::{add_points, random_configuration, random_group_element, random_point_multiple};
pub use maps::{CoordRing, LambdaGenerator, Translation};
pub use symbolic::{preserves_curve, CurveMap, MPoly};

use crate::arith::GaussianRational;
use crate::error::{Error, Result};

/// A smooth fiber, given by a homogeneous pair `(λ₀ : λ₁)`.
///
/// The pair is kept as given rather than reduced to `λ = λ₀/λ₁`: rescaling
/// the pair by `c` twists the curve by `√c`, so only the pair makes the swap
/// `λ ↦ 1/λ` exact over ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LambdaValue {
    pair: [GaussianRational; 2],
}

impl LambdaValue {
    pub fn new(l0: GaussianRational, l1: GaussianRational) -> Result<Self> {
        if l0.is_zero() || l1.is_zero() || l0 == l1 {
            return Err(Error::Cusp(format!("({l0} : {l1})")));
        }
        Ok(LambdaValue { pair: [l0, l1] })
    }

    /// The affine value `λ`, as the pair `(λ : 1)`.
    pub fn affine(lambda: GaussianRational) -> Result<Self> {
        LambdaValue::new(lambda, GaussianRational::one())
    }

    pub fn pair(&self) -> &[GaussianRational; 2] {
        &self.pair
    }

    /// `λ₀/λ₁`
    pub fn value(&self) -> GaussianRational {
        &self.pair[0] / &self.pair[1]
    }

    /// `c` with `other = c · self`, if the pairs are proportional.
    pub fn ratio_to(&self, other: &LambdaValue) -> Option<GaussianRational> {
        let [a0, a1] = &self.pair;
        let [b0, b1] = &other.pair;
        (a0 * b1 == a1 * b0).then(|| b1 / a1)
    }
}

impl fmt::Display for LambdaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", self.pair[0], self.pair[1])
    }
}

impl fmt::Debug for LambdaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A point of ℙ(1,1,2), normalized so the first nonzero of `X, Y` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EllPoint {
    coords: [GaussianRational; 3],
}

impl EllPoint {
    pub fn new(x: GaussianRational, y: GaussianRational, z: GaussianRational) -> Result<Self> {
        let t = if !x.is_zero() {
            x.clone()
        } else if !y.is_zero() {
            y.clone()
        } else if !z.is_zero() {
            return Ok(EllPoint {
                coords: [x, y, GaussianRational::one()],
            });
        } else {
            return Err(Error::UndefinedImage);
        };
        let t2 = &t * &t;
        Ok(EllPoint {
            coords: [&x / &t, &y / &t, &z / &t2],
        })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        let g = GaussianRational::from_integer;
        EllPoint::new(g(x), g(y), g(z)).unwrap()
    }

    fn from_coords(c: [GaussianRational; 3]) -> Result<Self> {
        let [x, y, z] = c;
        EllPoint::new(x, y, z)
    }

    pub fn coords(&self) -> &[GaussianRational; 3] {
        &self.coords
    }

    pub fn z(&self) -> &GaussianRational {
        &self.coords[2]
    }

    /// The origin `[1:0:0]`.
    pub fn origin() -> Self {
        EllPoint::from_ints(1, 0, 0)
    }
}

impl fmt::Display for EllPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.coords;
        write!(f, "[{x} : {y} : {z}]")
    }
}

impl fmt::Debug for EllPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn curve_contains(lambda: &LambdaValue, p: &EllPoint) -> bool {
    maps::curve_equation(&lambda.pair, &p.coords).is_zero()
}

/// Translation by the 2-torsion point attached to `which`.
pub fn translate_2torsion(lambda: &LambdaValue, p: &EllPoint, which: Translation) -> Result<EllPoint> {
    EllPoint::from_coords(maps::translation_map(which, &lambda.pair, &p.coords))
}

/// The map exactly as displayed for `which` (a translation only for `t2`).
pub fn printed_2torsion_map(lambda: &LambdaValue, p: &EllPoint, which: Translation) -> Result<EllPoint> {
    EllPoint::from_coords(maps::printed_map(which, &lambda.pair, &p.coords))
}

/// The hyperelliptic involution `Z ↦ −Z`.
pub fn involution(p: &EllPoint) -> EllPoint {
    EllPoint::from_coords(maps::involution_map(&p.coords)).unwrap()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EllipticConfiguration {
    pub lambda: LambdaValue,
    pub p1: EllPoint,
    pub p2: EllPoint,
}

impl EllipticConfiguration {
    pub fn new(lambda: LambdaValue, p1: EllPoint, p2: EllPoint) -> Result<Self> {
        if !curve_contains(&lambda, &p1) || !curve_contains(&lambda, &p2) {
            return Err(Error::NotOnCurve);
        }
        Ok(EllipticConfiguration { lambda, p1, p2 })
    }

    /// Admissible iff `p₂` is not 2-torsion, i.e. `Z(p₂) ≠ 0`.
    pub fn is_admissible(&self) -> bool {
        !self.p2.z().is_zero()
    }

    fn map_points(&self, f: impl Fn(&EllPoint) -> Result<EllPoint>) -> Result<Self> {
        Ok(EllipticConfiguration {
            lambda: self.lambda.clone(),
            p1: f(&self.p1)?,
            p2: f(&self.p2)?,
        })
    }
}

impl fmt::Debug for EllipticConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ = {}, p1 = {}, p2 = {}", self.lambda, self.p1, self.p2)
    }
}

pub fn is_admissible(config: &EllipticConfiguration) -> bool {
    config.is_admissible()
}

pub fn lambda_transform(config: &EllipticConfiguration, g: LambdaGenerator) -> Result<EllipticConfiguration> {
    let (pair, c1) = maps::lambda_map(g, &config.lambda.pair, &config.p1.coords);
    let (_, c2) = maps::lambda_map(g, &config.lambda.pair, &config.p2.coords);
    let [l0, l1] = pair;
    Ok(EllipticConfiguration {
        lambda: LambdaValue::new(l0, l1)?,
        p1: EllPoint::from_coords(c1)?,
        p2: EllPoint::from_coords(c2)?,
    })
}

/// The six λ-symmetries as generator words, applied left to right.
pub fn lambda_words() -> [Vec<LambdaGenerator>; 6] {
    use LambdaGenerator::{Complement as C, Swap as S};
    [vec![], vec![S], vec![C], vec![S, C], vec![C, S], vec![S, C, S]]
}

/// A group element: a λ-word, then a translation on each point, then
/// optionally the involution on both points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    pub lambda_word: Vec<LambdaGenerator>,
    pub t1: Option<Translation>,
    pub t2: Option<Translation>,
    pub involution: bool,
}

impl GroupElement {
    pub fn apply(&self, config: &EllipticConfiguration) -> Result<EllipticConfiguration> {
        let mut c = config.clone();
        for &g in &self.lambda_word {
            c = lambda_transform(&c, g)?;
        }
        let lambda = c.lambda.clone();
        let tr = |p: &EllPoint, t: Option<Translation>| match t {
            Some(t) => translate_2torsion(&lambda, p, t),
            None => Ok(p.clone()),
        };
        c = EllipticConfiguration {
            p1: tr(&c.p1, self.t1)?,
            p2: tr(&c.p2, self.t2)?,
            lambda: c.lambda,
        };
        if self.involution {
            c = c.map_points(|p| Ok(involution(p)))?;
        }
        Ok(c)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<&str> = self.lambda_word.iter().map(|g| g.as_str()).collect();
        let t = |t: Option<Translation>| t.map_or("id", Translation::as_str);
        write!(
            f,
            "[{}] p1:{} p2:{}{}",
            word.join(","),
            t(self.t1),
            t(self.t2),
            if self.involution { " +involution" } else { "" }
        )
    }
}

/// All group elements in enumeration order (96, or 192 with the involution).
pub fn group_elements(include_involution: bool) -> Vec<GroupElement> {
    let ts = [None, Some(Translation::T1), Some(Translation::T2), Some(Translation::T3)];
    let invs: &[bool] = if include_involution { &[false, true] } else { &[false] };
    let mut out = Vec::new();
    for w in lambda_words() {
        for &a in &ts {
            for &b in &ts {
                for &inv in invs {
                    out.push(GroupElement {
                        lambda_word: w.clone(),
                        t1: a,
                        t2: b,
                        involution: inv,
                    });
                }
            }
        }
    }
    out
}

/// Whether `a` and `b` describe the same configuration once the λ-pairs are
/// identified. For `b.pair = c · a.pair` a point `(X:Y:Z)` corresponds to
/// `(X:Y:sZ)` with `s² = c`, one `s` for both points. When `c = 1` only
/// `s = 1` is accepted; otherwise the sign of `s` is not determined.
fn same_configuration(a: &EllipticConfiguration, b: &EllipticConfiguration) -> bool {
    let Some(c) = a.lambda.ratio_to(&b.lambda) else {
        return false;
    };
    let mut s: Option<GaussianRational> = None;
    for (p, q) in [(&a.p1, &b.p1), (&a.p2, &b.p2)] {
        if p.coords[..2] != q.coords[..2] || p.z().is_zero() != q.z().is_zero() {
            return false;
        }
        if p.z().is_zero() {
            continue;
        }
        let r = q.z() / p.z();
        match &s {
            Some(s0) if *s0 != r => return false,
            _ => s = Some(r),
        }
    }
    match s {
        None => true,
        Some(s) if c.is_one() => s.is_one(),
        Some(s) => &s * &s == c,
    }
}

/// First group element (in [`group_elements`] order) carrying `c1` to `c2`.
pub fn orbit_witness(
    c1: &EllipticConfiguration,
    c2: &EllipticConfiguration,
    include_involution: bool,
) -> Option<GroupElement> {
    group_elements(include_involution)
        .into_iter()
        .find(|g| g.apply(c1).is_ok_and(|img| same_configuration(&img, c2)))
}

pub fn orbit_equivalent(c1: &EllipticConfiguration, c2: &EllipticConfiguration, include_involution: bool) -> bool {
    orbit_witness(c1, c2, include_involution).is_some()
}
